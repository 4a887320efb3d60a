#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fat/advice.hpp"
#include "fat/oracles.hpp"
#include "fat/sweep.hpp"

namespace fat {

// Number of equivalence classes of the prefix relation: x ~ y (both of
// length k) iff xz and yz agree on membership for every z of length n-k.
struct ClassCountReport {
  std::string language;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t count = 0;
  // Lexicographically first prefix of each class, in order of appearance.
  std::optional<std::vector<std::string>> representatives;
};

namespace detail {

// Membership signature of prefix `x` over all suffixes of length m, packed
// as bytes, suffixes in lexicographic order.
inline std::string signature(const LanguageOracle& oracle, const std::string& x,
                             std::size_t m) {
  std::size_t sigma = oracle.alphabet.size();
  std::uint64_t total = pow_u64(sigma, m);
  std::string sig((std::size_t)(total + 7) / 8, '\0');
  std::string xz = x;
  xz.resize(x.size() + m);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = idx;
    for (std::size_t i = m; i-- > 0;) {
      xz[x.size() + i] = oracle.alphabet.tokens()[v % sigma][0];
      v /= sigma;
    }
    if (oracle.member(xz)) sig[(std::size_t)(idx / 8)] |= (char)(1 << (idx % 8));
  }
  return sig;
}

}  // namespace detail

// Brute-force count of distinct membership signatures over all prefixes in
// Sigma^k. Signatures are compared exactly (hash map with full keys).
inline ClassCountReport count_equivalence_classes(const LanguageOracle& oracle, std::size_t n,
                                                  std::size_t k, bool witnesses = false) {
  if (k > n) throw Error("count_equivalence_classes requires k <= n");
  if (!oracle.alphabet.single_char())
    throw Error("class counting needs a single-character alphabet");
  std::size_t sigma = oracle.alphabet.size();
  if (detail::pow_u64(sigma, n) == UINT64_MAX) throw Error("class counting infeasible at n=" + std::to_string(n));

  ClassCountReport rep;
  rep.language = oracle.id;
  rep.n = n;
  rep.k = k;
  if (witnesses) rep.representatives.emplace();

  std::unordered_map<std::string, std::uint64_t> classes;
  std::uint64_t prefixes = detail::pow_u64(sigma, k);
  for (std::uint64_t idx = 0; idx < prefixes; ++idx) {
    Word w = detail::word_at(sigma, k, idx);
    std::string x = oracle.alphabet.decode(w);
    std::string sig = detail::signature(oracle, x, n - k);
    auto [it, fresh] = classes.emplace(std::move(sig), classes.size());
    if (fresh && rep.representatives) rep.representatives->push_back(x);
  }
  rep.count = classes.size();
  return rep;
}

// A verified distinguishing suffix for one pair of a witness family.
struct WitnessPair {
  std::string x, y, z;
};

struct WitnessReport {
  std::string family;
  std::size_t n = 0;
  std::size_t prefix_len = 0;
  std::uint64_t set_size = 0;
  std::uint64_t expected_size = 0;
  std::uint64_t pairs_checked = 0;
  bool all_distinguished = false;
  // First few pairs with their suffixes, for display.
  std::vector<WitnessPair> samples;
};

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  std::uint64_t v = 1;
  for (std::uint64_t i = 1; i <= r; ++i) v = v * (n - r + i) / i;
  return v;
}

// Enumerates a family's witness set S, checks |S| against its closed form,
// and certifies pairwise inequivalence by exhibiting, for every pair, a
// suffix z on which the oracle separates them. The suffix is re-verified
// against the oracle directly, not read off the signatures alone.
inline WitnessReport check_witness_family(const std::string& family, std::size_t n,
                                          int level = 2) {
  WitnessReport rep;
  rep.family = family;
  rep.n = n;

  LanguageOracle oracle;
  std::vector<std::string> members;

  if (family == "pal-halves") {
    if (n % 2 != 0) throw Error("pal-halves needs even n");
    oracle = lang::pal();
    rep.prefix_len = n / 2;
    std::uint64_t total = detail::pow_u64(2, rep.prefix_len);
    for (std::uint64_t idx = 0; idx < total; ++idx)
      members.push_back(oracle.alphabet.decode(detail::word_at(2, rep.prefix_len, idx)));
    rep.expected_size = total;
  } else if (family == "equal3-prefixes") {
    if (n % 3 != 0 || n == 0) throw Error("equal3-prefixes needs n divisible by 3, n > 0");
    oracle = lang::equal3();
    std::size_t k = n / 3;
    rep.prefix_len = k;
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; i + j <= k; ++j)
        members.push_back(std::string(i, 'a') + std::string(j, 'b') +
                          std::string(k - i - j, 'c'));
    rep.expected_size = binomial((std::uint64_t)k + 2, 2);
  } else if (family == "li-prefixes") {
    if (level < 1) throw Error("li-prefixes needs level >= 1");
    // At even n the members with a c_0-run of length 1 complete to no member
    // of L_i (the mirrored half would need a negative-length c_0 run), so
    // they collapse into one equivalence class. At odd n every member is a
    // genuine first half and the pairwise claim holds.
    if (n % 2 == 0) throw Error("li-prefixes needs odd n");
    oracle = lang::l_k(level);
    std::size_t K = n / 2 + 1;
    rep.prefix_len = K;
    // strings c_i^* ... c_1^* c_0^+ of length K, descending levels
    std::vector<std::size_t> counts((std::size_t)level + 1, 0);
    std::function<void(int, std::size_t)> rec = [&](int lvl, std::size_t used) {
      if (lvl == 0) {
        if (K == used) return;  // c_0 run must be nonempty
        std::string s;
        for (int l = level; l >= 1; --l)
          s.append(counts[(std::size_t)l], (char)('0' + l));
        s.append(K - used, '0');
        members.push_back(s);
        return;
      }
      for (std::size_t c = 0; used + c <= K; ++c) {
        counts[(std::size_t)lvl] = c;
        rec(lvl - 1, used + c);
      }
      counts[(std::size_t)lvl] = 0;
    };
    rec(level, 0);
    rep.expected_size = binomial((std::uint64_t)K - 1 + (std::uint64_t)level, (std::uint64_t)level);
  } else {
    throw Error("unknown witness family '" + family + "'");
  }

  rep.set_size = members.size();
  std::size_t m = n - rep.prefix_len;
  std::size_t sigma = oracle.alphabet.size();

  std::vector<std::string> sigs;
  sigs.reserve(members.size());
  for (const std::string& x : members) sigs.push_back(detail::signature(oracle, x, m));

  rep.all_distinguished = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      ++rep.pairs_checked;
      // first differing signature bit gives the distinguishing suffix
      std::optional<std::uint64_t> bit;
      for (std::size_t byte = 0; byte < sigs[i].size() && !bit; ++byte) {
        unsigned char diff = (unsigned char)(sigs[i][byte] ^ sigs[j][byte]);
        if (diff) bit = (std::uint64_t)byte * 8 + (std::uint64_t)__builtin_ctz(diff);
      }
      if (!bit) {
        rep.all_distinguished = false;
        continue;
      }
      std::string z = oracle.alphabet.decode(detail::word_at(sigma, m, *bit));
      if (oracle.member(members[i] + z) == oracle.member(members[j] + z)) {
        rep.all_distinguished = false;  // signature lied; should be impossible
        continue;
      }
      if (rep.samples.size() < 8) rep.samples.push_back({members[i], members[j], z});
    }
  }
  return rep;
}

// Advice lengths measured from actual generator output, plus the doubling
// ratios used to eyeball the growth class.
struct GrowthTable {
  std::string construction;
  std::vector<std::pair<std::size_t, std::uint64_t>> rows;     // (n, |h(n)|)
  std::vector<std::pair<std::size_t, double>> doubling_ratios;  // (n, |h(2n)|/|h(n)|)
};

inline GrowthTable measure_advice_growth(const AdviceFunction& h, std::size_t n_max) {
  GrowthTable t;
  t.construction = h.name();
  std::vector<std::uint64_t> len(n_max + 1, 0);
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::uint64_t total = 0;
    if (h.randomized()) {
      // longest alternative, the tape the machine must be able to hold
      for (const auto& [tapes, prob] : h.distribution(n)) {
        std::uint64_t alt = 0;
        for (const auto& s : tapes) alt += s.size();
        total = std::max(total, alt);
      }
    } else {
      for (const auto& s : h.eval(n)) total += s.size();
    }
    len[n] = total;
    if (n >= 1) t.rows.push_back({n, total});
  }
  for (std::size_t n = 1; 2 * n <= n_max; ++n)
    if (len[n] > 0)
      t.doubling_ratios.push_back({n, (double)len[2 * n] / (double)len[n]});
  return t;
}

inline GrowthTable measure_advice_growth(const std::string& construction_name,
                                         std::size_t n_max, const AdviceParams& p = {}) {
  return measure_advice_growth(make_advice(construction_name, p), n_max);
}

}  // namespace fat
