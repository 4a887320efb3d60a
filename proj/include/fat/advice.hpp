#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fat/oracles.hpp"
#include "fat/rational.hpp"

namespace fat {

// One advice alternative: a string per advice tape, with its probability.
using AdviceAlternative = std::pair<std::vector<std::string>, Rational>;
using AdviceDistribution = std::vector<AdviceAlternative>;

// Mapping from input length n to advice content: either one string tuple
// (deterministic) or a finite distribution over string tuples (randomized).
// Evaluators are pure functions of n.
class AdviceFunction {
 public:
  using DetEval = std::function<std::vector<std::string>(std::size_t)>;
  using RandEval = std::function<AdviceDistribution(std::size_t)>;

  static AdviceFunction deterministic(std::string name, std::size_t tapes,
                                      std::string length_class, DetEval eval) {
    AdviceFunction f;
    f.name_ = std::move(name);
    f.tapes_ = tapes;
    f.length_class_ = std::move(length_class);
    f.det_ = std::move(eval);
    return f;
  }

  static AdviceFunction randomized(std::string name, std::size_t tapes,
                                   std::string length_class, RandEval eval) {
    AdviceFunction f;
    f.name_ = std::move(name);
    f.tapes_ = tapes;
    f.length_class_ = std::move(length_class);
    f.rand_ = std::move(eval);
    return f;
  }

  const std::string& name() const { return name_; }
  std::size_t tapes() const { return tapes_; }
  const std::string& length_class() const { return length_class_; }
  bool randomized() const { return (bool)rand_; }

  std::vector<std::string> eval(std::size_t n) const {
    if (!det_) throw Error("advice function '" + name_ + "' is randomized; use distribution()");
    return det_(n);
  }

  // Deterministic functions yield a point distribution.
  AdviceDistribution distribution(std::size_t n) const {
    if (rand_) return rand_(n);
    return {{det_(n), Rational(1)}};
  }

 private:
  std::string name_;
  std::size_t tapes_ = 1;
  std::string length_class_;
  DetEval det_;
  RandEval rand_;
};

// Distinguished one-symbol advice marking lengths the construction rejects
// outright (odd n, n not divisible by 3). Catalog machines route it to the
// reject state on their first step.
inline constexpr char kRejectMarker = 'r';

namespace advice {

// h(n) = a^{n/2} for even n.
inline std::string equal2(std::size_t n) {
  if (n % 2 != 0) return std::string(1, kRejectMarker);
  return std::string(n / 2, 'a');
}

// h(n) = a^{2n}.
inline std::string equal(std::size_t n) { return std::string(2 * n, 'a'); }

// "##a#aa#...#a^{f(n)}#". The leading "##" delimits the empty block for
// zero leading a's.
inline std::string l_f(const std::function<std::size_t(std::size_t)>& f, std::size_t n) {
  std::size_t top = f(n);
  std::string out = "#";
  for (std::size_t i = 0; i <= top; ++i) {
    out.append(i, 'a');
    out.push_back('#');
  }
  return out;
}

inline char lk_c_token(int level) { return (char)('0' + level); }

// Separator symbols, one fresh per nesting level starting at 2.
inline char lk_separator(int level) {
  static const char seps[] = "#%$&";
  if (level < 2 || level > 5) throw Error("l_k advice supports 1 <= k <= 5");
  return seps[level - 2];
}

// h_1(n) = 1^n; h_{i+1}(n) concatenates h_i(n-2j) c_{i+1}^j sep_{i+1} for
// j = 0..floor(n/2) in increasing order.
inline std::string l_k(int k, std::size_t n) {
  if (k < 1) throw Error("l_k advice requires k >= 1");
  if (k == 1) return std::string(n, '1');
  std::string out;
  for (std::size_t j = 0; 2 * j <= n; ++j) {
    out += l_k(k - 1, n - 2 * j);
    out.append(j, lk_c_token(k));
    out.push_back(lk_separator(k));
  }
  return out;
}

inline Alphabet lk_advice_alphabet(int k) {
  std::vector<std::string> toks{"1"};
  for (int lvl = 2; lvl <= k; ++lvl) {
    toks.push_back(std::string(1, lk_c_token(lvl)));
    toks.push_back(std::string(1, lk_separator(lvl)));
  }
  return Alphabet(toks);
}

// One block per pass: block p marks positions p and n+1-p; '#' separators
// kept around every block.
inline std::string pal2w(std::size_t n) {
  if (n % 2 != 0) return std::string(1, kRejectMarker);
  std::string out = "#";
  for (std::size_t p = 1; p <= n / 2; ++p) {
    for (std::size_t pos = 1; pos <= n; ++pos)
      out.push_back(pos == p || pos == n + 1 - p ? '1' : '0');
    out.push_back('#');
  }
  return out;
}

// Enumerates Sigma^n in lexicographic order into `sink`.
inline void for_each_word(const Alphabet& alpha, std::size_t n,
                          const std::function<void(const std::string&)>& sink) {
  std::string w(n, ' ');
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) { sink(w); return; }
    for (const std::string& t : alpha.tokens()) {
      w[i] = t[0];
      rec(i + 1);
    }
  };
  if (!alpha.single_char()) throw Error("word enumeration needs single-character tokens");
  rec(0);
}

// Tape 1: every word of Sigma^n in lexicographic order, members followed by
// 'A', non-members by 'R'. Tape 2: ("A" "R"^n) repeated |Sigma|^n times,
// then a final 'A'; the machine counts word boundaries on it.
inline std::pair<std::string, std::string> universal2(const LanguageOracle& oracle,
                                                      std::size_t n) {
  std::string tape1, tape2;
  std::size_t words = 0;
  for_each_word(oracle.alphabet, n, [&](const std::string& w) {
    tape1 += w;
    tape1.push_back(oracle.member(w) ? 'A' : 'R');
    ++words;
  });
  for (std::size_t i = 0; i < words; ++i) {
    tape2.push_back('A');
    tape2.append(n, 'R');
  }
  tape2.push_back('A');
  return {tape1, tape2};
}

// All length-n members in lexicographic order, separated by runs of n+2
// blanks. At n = 0 a language containing the empty word is rendered as a
// single blank so the machine can tell it from the empty language.
inline std::string expall(const LanguageOracle& oracle, std::size_t n) {
  if (n == 0) return oracle.member("") ? "_" : "";
  std::string out;
  bool first = true;
  for_each_word(oracle.alphabet, n, [&](const std::string& w) {
    if (!oracle.member(w)) return;
    if (!first) out.append(n + 2, '_');
    out += w;
    first = false;
  });
  return out;
}

// A_i = 1^i # 1^{k i^2 + k i + k} with k = n/3, for i = 1..s, each with
// probability 1/s. Lengths not divisible by 3 get the reject marker.
inline AdviceDistribution equal3_rand(int s, std::size_t n) {
  if (s < 2) throw Error("equal3-rand requires s >= 2");
  if (n % 3 != 0) return {{{std::string(1, kRejectMarker)}, Rational(1)}};
  std::size_t k = n / 3;
  AdviceDistribution dist;
  for (int i = 1; i <= s; ++i) {
    std::string a((std::size_t)i, '1');
    a.push_back('#');
    a.append(k * ((std::size_t)i * i + (std::size_t)i + 1), '1');
    dist.push_back({{std::move(a)}, Rational(1, s)});
  }
  return dist;
}

// Concatenation of # 1^{(n/3) i^2 + (n/3) i + (n/3)} for i = 1..s.
inline std::string equal3_pfat(int s, std::size_t n) {
  if (s < 2) throw Error("equal3-pfat requires s >= 2");
  if (n % 3 != 0) return std::string(1, kRejectMarker);
  std::size_t k = n / 3;
  std::string out;
  for (int i = 1; i <= s; ++i) {
    out.push_back('#');
    out.append(k * ((std::size_t)i * i + (std::size_t)i + 1), '1');
  }
  return out;
}

}  // namespace advice

// Parameters for make_advice / catalog builders. Only the fields a given
// construction reads are consulted.
struct AdviceParams {
  int k = 2;                                       // l_k nesting depth
  int s = 4;                                       // equal3 constant
  std::function<std::size_t(std::size_t)> f;       // l_f length budget
  std::string f_name = "sqrt";
  std::shared_ptr<LanguageOracle> oracle;          // universal2 / expall
};

inline std::function<std::size_t(std::size_t)> resolve_f(const AdviceParams& p) {
  if (p.f) return p.f;
  if (p.f_name == "sqrt") return lang::ceil_sqrt;
  throw Error("unknown f '" + p.f_name + "' (supported: sqrt)");
}

inline AdviceFunction make_advice(const std::string& name, const AdviceParams& p = {}) {
  if (name == "equal2")
    return AdviceFunction::deterministic("equal2", 1, "O(n)",
                                         [](std::size_t n) {
                                           return std::vector<std::string>{advice::equal2(n)};
                                         });
  if (name == "equal")
    return AdviceFunction::deterministic("equal", 1, "O(n)",
                                         [](std::size_t n) {
                                           return std::vector<std::string>{advice::equal(n)};
                                         });
  if (name == "l_f") {
    auto f = resolve_f(p);
    return AdviceFunction::deterministic("l_f", 1, "O(f(n)^2)",
                                         [f](std::size_t n) {
                                           return std::vector<std::string>{advice::l_f(f, n)};
                                         });
  }
  if (name == "l_k") {
    if (p.k < 1) throw Error("l_k advice requires k >= 1");
    int k = p.k;
    return AdviceFunction::deterministic(
        "l_" + std::to_string(k), 1, "O(n^" + std::to_string(k) + ")",
        [k](std::size_t n) { return std::vector<std::string>{advice::l_k(k, n)}; });
  }
  if (name == "pal2w")
    return AdviceFunction::deterministic("pal2w", 1, "O(n^2)",
                                         [](std::size_t n) {
                                           return std::vector<std::string>{advice::pal2w(n)};
                                         });
  if (name == "universal2") {
    if (!p.oracle) throw Error("universal2 advice needs a language oracle");
    auto oracle = p.oracle;
    return AdviceFunction::deterministic("universal2", 2, "2^O(n)", [oracle](std::size_t n) {
      auto [t1, t2] = advice::universal2(*oracle, n);
      return std::vector<std::string>{t1, t2};
    });
  }
  if (name == "expall") {
    if (!p.oracle) throw Error("expall advice needs a language oracle");
    auto oracle = p.oracle;
    return AdviceFunction::deterministic("expall", 1, "2^O(n)", [oracle](std::size_t n) {
      return std::vector<std::string>{advice::expall(*oracle, n)};
    });
  }
  if (name == "equal3-rand") {
    if (p.s < 2) throw Error("equal3-rand requires s >= 2");
    int s = p.s;
    return AdviceFunction::randomized("equal3-rand", 1, "O(n)", [s](std::size_t n) {
      return advice::equal3_rand(s, n);
    });
  }
  if (name == "equal3-pfat") {
    if (p.s < 2) throw Error("equal3-pfat requires s >= 2");
    int s = p.s;
    return AdviceFunction::deterministic("equal3-pfat", 1, "O(n)", [s](std::size_t n) {
      return std::vector<std::string>{advice::equal3_pfat(s, n)};
    });
  }
  throw Error("unknown advice generator '" + name + "'");
}

// Exposed directly for the growth measurements.
inline std::string eval_lk_advice(int k, std::size_t n) { return advice::l_k(k, n); }

inline std::pair<std::string, std::string> eval_universal2_advice(const LanguageOracle& o,
                                                                  std::size_t n) {
  return advice::universal2(o, n);
}

inline std::string eval_expall_advice(const LanguageOracle& o, std::size_t n) {
  return advice::expall(o, n);
}

}  // namespace fat
