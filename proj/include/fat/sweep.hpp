#pragma once

#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "fat/advice.hpp"
#include "fat/engine.hpp"
#include "fat/oracles.hpp"

namespace fat {

struct SweepMismatch {
  std::string input;
  Verdict machine_verdict = Verdict::reject;
  bool oracle_member = false;
};

struct SweepReport {
  std::uint64_t runs = 0;
  std::uint64_t mismatches = 0;
  // Shortest, then lexicographically least, mismatching input.
  std::optional<SweepMismatch> first;
};

namespace detail {

// Word with lexicographic index `idx` in Sigma^n (alphabet order).
inline Word word_at(std::size_t sigma, std::size_t n, std::uint64_t idx) {
  Word w(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    w[i] = (Symbol)(idx % sigma);
    idx /= sigma;
  }
  return w;
}

inline std::uint64_t pow_u64(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) {
    if (b != 0 && r > UINT64_MAX / b) return UINT64_MAX;
    r *= b;
  }
  return r;
}

}  // namespace detail

// Compares the machine's verdict against the oracle on every input of length
// <= n_max, evaluating the paired advice per length. Enumeration is
// lexicographic within each length so the first counterexample is stable;
// with jobs > 1 each length is partitioned across workers and the merge picks
// the least index, making the report independent of the job count.
inline SweepReport run_language_sweep(const Machine& m, const AdviceFunction& h,
                                      const LanguageOracle& oracle, std::size_t n_max,
                                      unsigned jobs = 1) {
  if (h.randomized())
    throw Error("run_language_sweep needs deterministic advice; use check_error_bound");
  if (!m.input_alphabet.single_char())
    throw Error("sweeps need a single-character input alphabet");
  Runner runner(m);
  SweepReport rep;
  std::size_t sigma = m.input_alphabet.size();

  for (std::size_t n = 0; n <= n_max; ++n) {
    std::vector<std::string> advice_text = h.eval(n);
    std::vector<Word> advice;
    for (std::size_t j = 0; j < advice_text.size(); ++j)
      advice.push_back(m.advice_alphabets.at(j).encode(advice_text[j]));

    std::uint64_t total = detail::pow_u64(sigma, n);
    if (total == UINT64_MAX) throw Error("sweep length infeasible");

    struct Local {
      std::uint64_t runs = 0, mismatches = 0;
      std::optional<std::uint64_t> first_idx;
      Verdict first_verdict = Verdict::reject;
      bool first_member = false;
      std::string error;
    };
    unsigned workers = jobs == 0 ? 1 : jobs;
    if ((std::uint64_t)workers > total && total > 0) workers = (unsigned)total;
    if (total == 0) workers = 1;
    std::vector<Local> locals(workers);

    auto work = [&](unsigned wi) {
      Local& loc = locals[wi];
      std::uint64_t lo = total * wi / workers, hi = total * (wi + 1) / workers;
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        Word w = detail::word_at(sigma, n, idx);
        RunOutcome out;
        try {
          out = runner.run(w, advice);
        } catch (const std::exception& e) {
          loc.error = std::string(e.what()) + " on input \"" + m.input_alphabet.decode(w) + "\"";
          return;
        }
        bool member = oracle.member(m.input_alphabet.decode(w));
        ++loc.runs;
        bool agree = (out.verdict == Verdict::accept) == member &&
                     out.verdict != Verdict::cycle;
        if (!agree) {
          ++loc.mismatches;
          if (!loc.first_idx) {
            loc.first_idx = idx;
            loc.first_verdict = out.verdict;
            loc.first_member = member;
          }
        }
      }
    };

    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned wi = 0; wi < workers; ++wi) pool.emplace_back(work, wi);
      for (auto& t : pool) t.join();
    }

    std::optional<std::uint64_t> first_idx;
    const Local* first_loc = nullptr;
    for (const Local& loc : locals) {
      if (!loc.error.empty()) throw Error(loc.error);
      rep.runs += loc.runs;
      rep.mismatches += loc.mismatches;
      if (loc.first_idx && (!first_idx || *loc.first_idx < *first_idx)) {
        first_idx = loc.first_idx;
        first_loc = &loc;
      }
    }
    if (first_loc && !rep.first) {
      SweepMismatch mm;
      mm.input = m.input_alphabet.decode(detail::word_at(sigma, n, *first_idx));
      mm.machine_verdict = first_loc->first_verdict;
      mm.oracle_member = first_loc->first_member;
      rep.first = mm;
    }
  }
  return rep;
}

}  // namespace fat
