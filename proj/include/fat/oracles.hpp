#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fat/alphabet.hpp"

namespace fat {

// Brute-force membership decider for a named language family; the ground
// truth every machine in the catalog is checked against. Total and pure on
// strings over its alphabet.
struct LanguageOracle {
  std::string id;
  Alphabet alphabet;
  std::function<bool(std::string_view)> member;
};

namespace lang {

inline std::size_t count_char(std::string_view w, char c) {
  return (std::size_t)std::count(w.begin(), w.end(), c);
}

// EQUAL2 = { w in {a,b}* : |w|_a = |w|_b }
inline LanguageOracle equal2() {
  return {"equal2", Alphabet({"a", "b"}),
          [](std::string_view w) { return count_char(w, 'a') == count_char(w, 'b'); }};
}

// EQUAL = { w in {a,b,c}* : |w|_a = |w|_b }
inline LanguageOracle equal() {
  return {"equal", Alphabet({"a", "b", "c"}),
          [](std::string_view w) { return count_char(w, 'a') == count_char(w, 'b'); }};
}

// EQUAL3 = { w in {a,b,c}* : |w|_a = |w|_b = |w|_c }
inline LanguageOracle equal3() {
  return {"equal3", Alphabet({"a", "b", "c"}), [](std::string_view w) {
            std::size_t a = count_char(w, 'a');
            return a == count_char(w, 'b') && a == count_char(w, 'c');
          }};
}

// PAL = even-length palindromes over {a,b}. The empty string is one.
inline LanguageOracle pal() {
  return {"pal", Alphabet({"a", "b"}), [](std::string_view w) {
            if (w.size() % 2 != 0) return false;
            for (std::size_t i = 0; 2 * i < w.size(); ++i)
              if (w[i] != w[w.size() - 1 - i]) return false;
            return true;
          }};
}

// L_f = { a^k b^m c^k : k <= f(n), n = |w| }
inline LanguageOracle l_f(std::function<std::size_t(std::size_t)> f,
                          std::string id = "l_f") {
  return {std::move(id), Alphabet({"a", "b", "c"}),
          [f = std::move(f)](std::string_view w) {
            std::size_t i = 0, n = w.size();
            std::size_t k1 = 0, m = 0, k2 = 0;
            while (i < n && w[i] == 'a') { ++i; ++k1; }
            while (i < n && w[i] == 'b') { ++i; ++m; }
            while (i < n && w[i] == 'c') { ++i; ++k2; }
            if (i != n) return false;
            return k1 == k2 && k1 <= f(n);
          }};
}

inline std::size_t ceil_sqrt(std::size_t n) {
  std::size_t r = 0;
  while (r * r < n) ++r;
  return r;
}

// Input tokens for L_k: digit characters '0'..'k' standing for c_0..c_k.
inline Alphabet lk_alphabet(int k) {
  std::vector<std::string> toks;
  for (int i = 0; i <= k; ++i) toks.push_back(std::string(1, (char)('0' + i)));
  return Alphabet(toks);
}

// L_k = { c_k^{n_k} ... c_1^{n_1} c_0^{n_0} c_1^{n_1} ... c_k^{n_k} :
//         n_0 > 0, n_j >= 0 }. Direct structural parse: descending runs,
// a nonempty c_0 run, ascending runs, with mirrored counts.
inline LanguageOracle l_k(int k) {
  if (k < 1) throw Error("l_k requires k >= 1");
  return {"l_" + std::to_string(k), lk_alphabet(k), [k](std::string_view w) {
            std::size_t i = 0, n = w.size();
            std::vector<std::size_t> lead((std::size_t)k + 1, 0);
            for (int lvl = k; lvl >= 1; --lvl)
              while (i < n && w[i] == (char)('0' + lvl)) { ++i; ++lead[(std::size_t)lvl]; }
            std::size_t zeros = 0;
            while (i < n && w[i] == '0') { ++i; ++zeros; }
            if (zeros == 0) return false;
            for (int lvl = 1; lvl <= k; ++lvl) {
              std::size_t cnt = 0;
              while (i < n && w[i] == (char)('0' + lvl)) { ++i; ++cnt; }
              if (cnt != lead[(std::size_t)lvl]) return false;
            }
            return i == n;
          }};
}

// Finite language given explicitly as a set of strings.
inline LanguageOracle explicit_set(std::set<std::string> words, Alphabet alpha,
                                   std::string id = "set") {
  return {std::move(id), std::move(alpha),
          [words = std::move(words)](std::string_view w) {
            return words.count(std::string(w)) != 0;
          }};
}

// Word index in the lexicographic enumeration of Sigma^n (alphabet order).
inline std::uint64_t lex_index(const Alphabet& alpha, std::string_view w) {
  std::uint64_t idx = 0;
  for (char c : w) {
    auto s = alpha.find(std::string_view(&c, 1));
    if (!s) throw Error(std::string("symbol '") + c + "' not in alphabet");
    idx = idx * alpha.size() + (std::uint64_t)*s;
  }
  return idx;
}

// Pseudo-random language over {a,b}: membership of each word is a fixed
// coin derived from (seed, |w|, lexicographic index). Deterministic across
// runs and platforms.
inline LanguageOracle seeded_random(std::uint64_t seed) {
  Alphabet alpha({"a", "b"});
  return {"random-" + std::to_string(seed), alpha, [seed, alpha](std::string_view w) {
            std::uint64_t h = splitmix64(seed ^ (0x51ed2701ULL + (std::uint64_t)w.size()));
            h = splitmix64(h ^ lex_index(alpha, w));
            return (h & 1) != 0;
          }};
}

inline LanguageOracle empty_language(Alphabet alpha = Alphabet({"a", "b"})) {
  return {"empty", std::move(alpha), [](std::string_view) { return false; }};
}

inline LanguageOracle full_language(Alphabet alpha = Alphabet({"a", "b"})) {
  return {"full", std::move(alpha), [](std::string_view) { return true; }};
}

}  // namespace lang

// Registry by id. "l_f" uses f = ceil(sqrt(n));
// "l_1".."l_5" select the nesting depth.
inline LanguageOracle make_oracle(const std::string& id) {
  if (id == "equal2") return lang::equal2();
  if (id == "equal") return lang::equal();
  if (id == "equal3") return lang::equal3();
  if (id == "pal") return lang::pal();
  if (id == "l_f") return lang::l_f(lang::ceil_sqrt);
  if (id == "empty") return lang::empty_language();
  if (id == "full") return lang::full_language();
  if (id.size() == 3 && id.rfind("l_", 0) == 0 && id[2] >= '1' && id[2] <= '9')
    return lang::l_k(id[2] - '0');
  throw Error("unknown language '" + id + "'");
}

inline bool oracle_membership(const std::string& id, std::string_view x) {
  LanguageOracle o = make_oracle(id);
  for (char c : x)
    if (!o.alphabet.find(std::string_view(&c, 1)))
      throw Error(std::string("symbol '") + c + "' outside alphabet of " + id);
  return o.member(x);
}

}  // namespace fat
