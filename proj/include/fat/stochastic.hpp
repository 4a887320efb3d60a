#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fat/advice.hpp"
#include "fat/catalog.hpp"
#include "fat/engine.hpp"
#include "fat/rational.hpp"
#include "fat/sweep.hpp"

namespace fat {

// Exact acceptance probabilities. The three components always sum to 1;
// unresolved is whatever mass had not halted when the step bound ran out
// (observable instead of silently renormalized).
struct AcceptanceResult {
  Rational accept{0};
  Rational reject{0};
  Rational unresolved{0};

  Rational total() const { return accept + reject + unresolved; }
};

struct StochasticOptions {
  // Verify accept + reject + live-mass == 1 after every propagation step,
  // not just at the end.
  bool conservation_check = false;
};

// Propagates the exact distribution over configurations of a probabilistic
// machine, step-synchronized, accumulating halting mass until the frontier
// drains or the step bound |Q| (n+2) prod(m_j+1) is reached. Entries carry
// inline head positions so the per-step advance allocates nothing; branches
// that reconverge on the same configuration are merged whenever the frontier
// grows.
inline AcceptanceResult acceptance_probability_pfat(const Runner& runner, const Word& input,
                                                    const std::vector<Word>& advice,
                                                    const StochasticOptions& opt = {}) {
  constexpr std::size_t kMaxTapes = 4;
  const Machine& m = runner.machine();
  std::size_t k = m.tape_count();
  if (k > kMaxTapes) throw Error("acceptance probability supports at most 4 advice tapes");
  if (advice.size() != k) throw Error("expected " + std::to_string(k) + " advice words");
  AcceptanceResult res;

  struct Flat {
    Rational mass;
    int state;
    int input_pos;
    std::array<int, kMaxTapes> adv;
  };
  auto flat_less = [k](const Flat& a, const Flat& b) {
    if (a.state != b.state) return a.state < b.state;
    if (a.input_pos != b.input_pos) return a.input_pos < b.input_pos;
    for (std::size_t j = 0; j < k; ++j)
      if (a.adv[j] != b.adv[j]) return a.adv[j] < b.adv[j];
    return false;
  };
  auto flat_eq = [k](const Flat& a, const Flat& b) {
    if (a.state != b.state || a.input_pos != b.input_pos) return false;
    for (std::size_t j = 0; j < k; ++j)
      if (a.adv[j] != b.adv[j]) return false;
    return true;
  };

  Flat start{Rational(1), m.start, 0, {}};
  if (m.start == m.accept) { res.accept = Rational(1); return res; }
  if (m.start == m.reject) { res.reject = Rational(1); return res; }

  std::vector<Flat> frontier{start}, next, merged;
  std::string why;

  std::uint64_t bound = runner.configuration_count(input.size(), advice);
  for (std::uint64_t step = 0; step < bound && !frontier.empty(); ++step) {
    next.clear();
    for (const Flat& e : frontier) {
      Symbol in_sym = Runner::input_symbol(input, e.input_pos);
      Symbol adv_syms[kMaxTapes];
      for (std::size_t j = 0; j < k; ++j)
        adv_syms[j] = Runner::advice_symbol(advice[j], e.adv[j]);
      auto [choices, count] = runner.choices_for(e.state, in_sym, adv_syms);
      if (count == 0) {
        Configuration cfg{e.state, e.input_pos,
                          std::vector<int>(e.adv.begin(), e.adv.begin() + k)};
        throw Error("incomplete machine: no transition for " +
                    runner.scan_string(cfg, input, advice) + " reachable with probability " +
                    e.mass.to_string());
      }
      for (std::size_t ci = 0; ci < count; ++ci) {
        const Choice& c = *choices[ci];
        Flat f = e;
        f.mass = e.mass * c.weight;
        if (!detail::move_legal(m.input_mode, in_sym, c.input_move, &why))
          throw Error("head-mode violation at runtime (input head): " + why);
        f.input_pos += (int)c.input_move;
        for (std::size_t j = 0; j < k; ++j) {
          if (!detail::move_legal(m.advice_modes[j], adv_syms[j], c.advice_moves[j], &why))
            throw Error("head-mode violation at runtime (advice head " + std::to_string(j) +
                        "): " + why);
          f.adv[j] += (int)c.advice_moves[j];
        }
        f.state = c.next;
        if (f.state == m.accept) res.accept += f.mass;
        else if (f.state == m.reject) res.reject += f.mass;
        else next.push_back(f);
      }
    }
    // merge reconverged branches; skipped while the frontier only shrinks
    if (next.size() > frontier.size() || next.size() > 4096) {
      std::sort(next.begin(), next.end(), flat_less);
      merged.clear();
      for (const Flat& f : next) {
        if (!merged.empty() && flat_eq(merged.back(), f))
          merged.back().mass += f.mass;
        else
          merged.push_back(f);
      }
      next.swap(merged);
    }
    frontier.swap(next);
    if (opt.conservation_check) {
      Rational live(0);
      for (const Flat& f : frontier) live += f.mass;
      if (res.accept + res.reject + live != Rational(1))
        throw Error("probability mass not conserved during propagation");
    }
  }
  for (const Flat& f : frontier) res.unresolved += f.mass;
  if (res.total() != Rational(1))
    throw Error("probability mass not conserved");
  return res;
}

inline AcceptanceResult acceptance_probability_pfat(const Machine& m, const Word& input,
                                                    const std::vector<Word>& advice,
                                                    const StochasticOptions& opt = {}) {
  return acceptance_probability_pfat(Runner(m), input, advice, opt);
}

inline AcceptanceResult acceptance_probability_pfat(const Machine& m, std::string_view input,
                                                    const std::vector<std::string>& advice,
                                                    const StochasticOptions& opt = {}) {
  Word in = m.input_alphabet.encode(input);
  std::vector<Word> adv;
  for (std::size_t j = 0; j < advice.size(); ++j)
    adv.push_back(m.advice_alphabets.at(j).encode(advice[j]));
  return acceptance_probability_pfat(m, in, adv, opt);
}

// Deterministic machine under randomized advice: the exact finite sum of
// P(alternative) times the run verdict. CYCLE mass lands in unresolved.
inline AcceptanceResult acceptance_probability_randomized_advice(
    const Machine& m, std::string_view input, const AdviceDistribution& dist) {
  Runner runner(m);
  AcceptanceResult res;
  Rational total(0);
  for (const auto& [advice, prob] : dist) {
    total += prob;
    RunOutcome out;
    try {
      out = runner.run(input, advice);
    } catch (const Error& e) {
      std::string tag = advice.empty() ? "" : advice[0];
      throw Error(std::string(e.what()) + " (advice alternative \"" + tag + "\")");
    }
    switch (out.verdict) {
      case Verdict::accept: res.accept += prob; break;
      case Verdict::reject: res.reject += prob; break;
      case Verdict::cycle: res.unresolved += prob; break;
    }
  }
  if (total != Rational(1)) throw Error("advice distribution does not sum to 1");
  return res;
}

inline AcceptanceResult acceptance_probability_randomized_advice(const Machine& m,
                                                                 std::string_view input,
                                                                 const AdviceFunction& ra) {
  return acceptance_probability_randomized_advice(m, input, ra.distribution(input.size()));
}

// One construction's acceptance probability on one input, dispatched on the
// machine kind: pfat machines propagate their distribution, deterministic
// machines sum over the advice distribution.
inline AcceptanceResult acceptance_probability(const Construction& c, std::string_view input,
                                               const StochasticOptions& opt = {}) {
  if (c.machine.kind == MachineKind::probabilistic) {
    std::vector<std::string> advice = c.advice.eval(input.size());
    return acceptance_probability_pfat(c.machine, input, advice, opt);
  }
  return acceptance_probability_randomized_advice(c.machine, input,
                                                  c.advice.distribution(input.size()));
}

struct BoundViolation {
  std::string input;
  bool member = false;
  Rational accept{0};
  std::string rule;
};

struct BoundReport {
  std::string construction;
  int s = 0;
  std::size_t n_max = 0;
  std::uint64_t members = 0;
  std::uint64_t nonmembers = 0;
  Rational bound{0};                 // 2/s
  Rational max_nonmember_accept{0};
  std::uint64_t violation_count = 0;
  std::vector<BoundViolation> violations;  // first 16, for display

  bool ok() const { return violation_count == 0; }
};

// Exhaustive one-sided-error check for the EQUAL3 constructions: members
// must be accepted with probability exactly 1, non-members with probability
// at most 2/s. Exact rational comparisons throughout.
inline BoundReport check_error_bound(const std::string& construction, int s,
                                     std::size_t n_max) {
  if (construction != "equal3-rand" && construction != "equal3-pfat")
    throw Error("check_error_bound supports equal3-rand and equal3-pfat");
  if (s < 2) throw Error("check_error_bound requires s >= 2");
  AdviceParams p;
  p.s = s;
  Construction c = build(construction, p);

  BoundReport rep;
  rep.construction = construction;
  rep.s = s;
  rep.n_max = n_max;
  rep.bound = Rational(2, s);

  Runner runner(c.machine);
  bool probabilistic = c.machine.kind == MachineKind::probabilistic;
  std::size_t sigma = c.machine.input_alphabet.size();
  for (std::size_t n = 0; n <= n_max; ++n) {
    // advice for this length, encoded once
    std::vector<std::pair<std::vector<Word>, Rational>> alternatives;
    for (const auto& [tapes, pr] : c.advice.distribution(n)) {
      std::vector<Word> ws;
      for (std::size_t j = 0; j < tapes.size(); ++j)
        ws.push_back(c.machine.advice_alphabets[j].encode(tapes[j]));
      alternatives.push_back({std::move(ws), pr});
    }
    std::uint64_t total = detail::pow_u64(sigma, n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Word w = detail::word_at(sigma, n, idx);
      std::string text = c.machine.input_alphabet.decode(w);
      AcceptanceResult r;
      if (probabilistic) {
        r = acceptance_probability_pfat(runner, w, alternatives.at(0).first);
      } else {
        for (const auto& [ws, pr] : alternatives) {
          RunOutcome out = runner.run(w, ws);
          if (out.verdict == Verdict::accept) r.accept += pr;
          else if (out.verdict == Verdict::reject) r.reject += pr;
          else r.unresolved += pr;
        }
      }
      bool member = c.oracle.member(text);
      auto flag = [&](const char* rule) {
        ++rep.violation_count;
        if (rep.violations.size() < 16) rep.violations.push_back({text, member, r.accept, rule});
      };
      if (member) {
        ++rep.members;
        if (r.accept != Rational(1)) flag("member not accepted with probability 1");
      } else {
        ++rep.nonmembers;
        if (r.accept > rep.max_nonmember_accept) rep.max_nonmember_accept = r.accept;
        if (r.accept > rep.bound) flag("non-member accepted above 2/s");
      }
    }
  }
  return rep;
}

}  // namespace fat
