#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "fat/machine.hpp"

namespace fat {

// Snapshot of a running machine: state plus all head positions.
// Input position ranges over [0, n+1] (0 = '<', n+1 = '>');
// advice position j over [0, m_j] (m_j = '>').
struct Configuration {
  int state = 0;
  int input_pos = 0;
  std::vector<int> advice_pos;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.state == b.state && a.input_pos == b.input_pos && a.advice_pos == b.advice_pos;
  }
  friend bool operator<(const Configuration& a, const Configuration& b) {
    return std::tie(a.state, a.input_pos, a.advice_pos) <
           std::tie(b.state, b.input_pos, b.advice_pos);
  }
};

enum class Verdict { accept, reject, cycle };

inline const char* to_token(Verdict v) {
  switch (v) {
    case Verdict::accept: return "ACCEPT";
    case Verdict::reject: return "REJECT";
    default: return "CYCLE";
  }
}

struct RunOutcome {
  Verdict verdict = Verdict::reject;
  std::uint64_t steps = 0;
  std::optional<std::vector<std::string>> trace;
  // For CYCLE verdicts: the configuration that repeated.
  std::optional<std::string> cycle_witness;
};

struct RunOptions {
  bool collect_trace = false;
  std::ostream* trace_stream = nullptr;  // streamed trace, never materialized
};

// Pre-resolved transition table for fast stepping. Symbol slots per tape map
// ids to a dense range: input symbol s -> s, '<' -> |Sigma|, '>' -> |Sigma|+1;
// advice symbol s -> s, '>' -> |Gamma_j|.
class Runner {
 public:
  explicit Runner(const Machine& m) : m_(m) {
    if (m.tape_count() < 1) throw Error("machine has no advice tapes");
    k_ = m.tape_count();
    in_slots_ = (int)m.input_alphabet.size() + 2;
    adv_slots_.resize(k_);
    std::size_t table = (std::size_t)m.states.size() * (std::size_t)in_slots_;
    for (std::size_t j = 0; j < k_; ++j) {
      adv_slots_[j] = (int)m.advice_alphabets[j].size() + 1;
      table *= (std::size_t)adv_slots_[j];
    }
    span_.assign(table, {0, 0});
    for (const auto& [key, choices] : m_.transitions) {
      std::size_t idx = key_index(key.state, in_slot(key.input), key.advice);
      span_[idx] = {(std::uint32_t)pool_.size(), (std::uint32_t)choices.size()};
      for (const Choice& c : choices) pool_.push_back(&c);
    }
  }

  const Machine& machine() const { return m_; }

  // Runs the machine deterministically. Requires a deterministic, valid
  // machine; advice words must fit the advice alphabets.
  RunOutcome run(const Word& input, const std::vector<Word>& advice,
                 const RunOptions& opt = {}) const {
    if (m_.kind != MachineKind::deterministic)
      throw Error("run requires a deterministic machine (use the acceptance-probability ops)");
    if (advice.size() != k_)
      throw Error("expected " + std::to_string(k_) + " advice words, got " +
                  std::to_string(advice.size()));

    RunOutcome out;
    if (opt.collect_trace) out.trace.emplace();

    Configuration cfg;
    cfg.state = m_.start;
    cfg.input_pos = 0;
    cfg.advice_pos.assign(k_, 0);

    CycleGuard guard(*this, (int)input.size());

    while (true) {
      if (cfg.state == m_.accept || cfg.state == m_.reject) {
        out.verdict = cfg.state == m_.accept ? Verdict::accept : Verdict::reject;
        break;
      }
      if (guard.seen(cfg)) {
        out.verdict = Verdict::cycle;
        out.cycle_witness = describe(cfg);
        break;
      }
      Symbol in_sym = input_symbol(input, cfg.input_pos);
      std::size_t idx = config_index(cfg, input, advice);
      auto [off, cnt] = span_[idx];
      if (cnt == 0) throw Error("incomplete machine: no transition for " + scan_string(cfg, input, advice));
      const Choice& c = *pool_[off];

      if (out.trace || opt.trace_stream) {
        std::string line = trace_line(out.steps, cfg, input, advice, c);
        if (opt.trace_stream) *opt.trace_stream << line << "\n";
        if (out.trace) out.trace->push_back(std::move(line));
      }

      bool moved_advice = false;
      bool moved_any = apply(cfg, c, in_sym, input, advice, &moved_advice);
      guard.on_move(moved_any, moved_advice);
      cfg.state = c.next;
      ++out.steps;
    }
    return out;
  }

  RunOutcome run(std::string_view input, const std::vector<std::string>& advice,
                 const RunOptions& opt = {}) const {
    Word in = m_.input_alphabet.encode(input);
    std::vector<Word> adv;
    for (std::size_t j = 0; j < advice.size(); ++j)
      adv.push_back(m_.advice_alphabets.at(j).encode(advice[j]));
    return run(in, adv, opt);
  }

  // Number of distinct configurations: |Q| * (n+2) * prod(m_j + 1), saturated.
  std::uint64_t configuration_count(std::size_t n, const std::vector<Word>& advice) const {
    std::uint64_t b = m_.states.size();
    b = sat_mul(b, (std::uint64_t)n + 2);
    for (const Word& a : advice) b = sat_mul(b, (std::uint64_t)a.size() + 1);
    return b;
  }

  // Upper bound on halting time: one more than the configuration count.
  std::uint64_t step_bound(std::size_t n, const std::vector<Word>& advice) const {
    std::uint64_t b = configuration_count(n, advice);
    return b == UINT64_MAX ? b : b + 1;
  }

  std::size_t config_index(const Configuration& cfg, const Word& input,
                           const std::vector<Word>& advice) const {
    std::size_t idx = (std::size_t)cfg.state * (std::size_t)in_slots_ +
                      (std::size_t)in_slot(input_symbol(input, cfg.input_pos));
    for (std::size_t j = 0; j < k_; ++j) {
      Symbol s = advice_symbol(advice[j], cfg.advice_pos[j]);
      idx = idx * (std::size_t)adv_slots_[j] + (std::size_t)(s == kRend ? adv_slots_[j] - 1 : s);
    }
    return idx;
  }

  std::pair<const Choice* const*, std::size_t> choice_span(const Configuration& cfg,
                                                           const Word& input,
                                                           const std::vector<Word>& advice) const {
    auto [off, cnt] = span_[config_index(cfg, input, advice)];
    return {pool_.data() + off, cnt};
  }

  // Choice lookup from raw scanned symbols, for callers that keep their own
  // configuration layout.
  std::pair<const Choice* const*, std::size_t> choices_for(int state, Symbol in_sym,
                                                           const Symbol* adv_syms) const {
    std::size_t idx = (std::size_t)state * (std::size_t)in_slots_ +
                      (std::size_t)in_slot(in_sym);
    for (std::size_t j = 0; j < k_; ++j) {
      Symbol s = adv_syms[j];
      idx = idx * (std::size_t)adv_slots_[j] + (std::size_t)(s == kRend ? adv_slots_[j] - 1 : s);
    }
    auto [off, cnt] = span_[idx];
    return {pool_.data() + off, cnt};
  }

  static Symbol input_symbol(const Word& input, int pos) {
    if (pos == 0) return kLend;
    if (pos == (int)input.size() + 1) return kRend;
    return input[(std::size_t)pos - 1];
  }

  static Symbol advice_symbol(const Word& adv, int pos) {
    if (pos == (int)adv.size()) return kRend;
    return adv[(std::size_t)pos];
  }

  // Applies one choice to a configuration (not the state). Returns whether
  // any head moved; sets *moved_advice if an advice head moved.
  bool apply(Configuration& cfg, const Choice& c, Symbol in_sym, const Word& input,
             const std::vector<Word>& advice, bool* moved_advice) const {
    std::string why;
    if (!detail::move_legal(m_.input_mode, in_sym, c.input_move, &why))
      throw Error("head-mode violation at runtime (input head): " + why);
    bool any = c.input_move != Move::stay;
    cfg.input_pos += (int)c.input_move;
    if (cfg.input_pos < 0 || cfg.input_pos > (int)input.size() + 1)
      throw Error("input head left the tape");
    bool adv_moved = false;
    for (std::size_t j = 0; j < k_; ++j) {
      Symbol s = advice_symbol(advice[j], cfg.advice_pos[j]);
      if (!detail::move_legal(m_.advice_modes[j], s, c.advice_moves[j], &why))
        throw Error("head-mode violation at runtime (advice head " + std::to_string(j) +
                    "): " + why);
      if (c.advice_moves[j] != Move::stay) adv_moved = true;
      cfg.advice_pos[j] += (int)c.advice_moves[j];
      if (cfg.advice_pos[j] < 0 || cfg.advice_pos[j] > (int)advice[j].size())
        throw Error("advice head " + std::to_string(j) + " left the tape");
    }
    if (moved_advice) *moved_advice = adv_moved;
    return any || adv_moved;
  }

  std::string scan_string(const Configuration& cfg, const Word& input,
                          const std::vector<Word>& advice) const {
    std::ostringstream os;
    os << "(" << m_.state_name(cfg.state) << ", "
       << m_.input_alphabet.token(input_symbol(input, cfg.input_pos));
    for (std::size_t j = 0; j < k_; ++j)
      os << ", " << m_.advice_alphabets[j].token(advice_symbol(advice[j], cfg.advice_pos[j]));
    os << ")";
    return os.str();
  }

 private:
  // Exact cycle detection tuned to head discipline. Heads on one-way and
  // real-time tapes are monotone, so a configuration can only repeat while
  // no such head moves. With a one-way/real-time input head we track states
  // seen since the last movement of any head; with a two-way input head we
  // track (state, input position) pairs seen since the last advice move.
  class CycleGuard {
   public:
    CycleGuard(const Runner& r, int input_len) : r_(r) {
      if (r_.m_.input_mode == HeadMode::two_way)
        marks_.assign(r_.m_.states.size() * (std::size_t)(input_len + 2), 0);
      else
        marks_.assign(r_.m_.states.size(), 0);
      epoch_ = 1;
    }

    bool seen(const Configuration& cfg) {
      std::size_t slot = r_.m_.input_mode == HeadMode::two_way
                             ? (std::size_t)cfg.state * stride() + (std::size_t)cfg.input_pos
                             : (std::size_t)cfg.state;
      if (marks_[slot] == epoch_) return true;
      marks_[slot] = epoch_;
      return false;
    }

    void on_move(bool moved_any, bool moved_advice) {
      if (r_.m_.input_mode == HeadMode::two_way ? moved_advice : moved_any) ++epoch_;
    }

   private:
    std::size_t stride() const { return marks_.size() / r_.m_.states.size(); }
    const Runner& r_;
    std::vector<std::uint64_t> marks_;
    std::uint64_t epoch_;
  };

  std::string trace_line(std::uint64_t step, const Configuration& cfg, const Word& input,
                         const std::vector<Word>& advice, const Choice& c) const {
    std::ostringstream os;
    os << "step=" << step << " state=" << m_.state_name(cfg.state) << " in[" << cfg.input_pos
       << "]=" << m_.input_alphabet.token(input_symbol(input, cfg.input_pos));
    for (std::size_t j = 0; j < k_; ++j)
      os << " adv" << j << "[" << cfg.advice_pos[j]
         << "]=" << m_.advice_alphabets[j].token(advice_symbol(advice[j], cfg.advice_pos[j]));
    os << " -> " << m_.state_name(c.next) << " " << to_token(c.input_move);
    for (std::size_t j = 0; j < k_; ++j) os << " " << to_token(c.advice_moves[j]);
    return os.str();
  }

  std::string describe(const Configuration& cfg) const {
    std::ostringstream os;
    os << "state=" << m_.state_name(cfg.state) << " in=" << cfg.input_pos;
    for (std::size_t j = 0; j < k_; ++j) os << " adv" << j << "=" << cfg.advice_pos[j];
    return os.str();
  }

  int in_slot(Symbol s) const {
    if (s == kLend) return in_slots_ - 2;
    if (s == kRend) return in_slots_ - 1;
    return (int)s;
  }

  std::size_t key_index(int state, int in, const std::vector<Symbol>& adv) const {
    std::size_t idx = (std::size_t)state * (std::size_t)in_slots_ + (std::size_t)in;
    for (std::size_t j = 0; j < k_; ++j) {
      Symbol s = adv[j];
      idx = idx * (std::size_t)adv_slots_[j] + (std::size_t)(s == kRend ? adv_slots_[j] - 1 : s);
    }
    return idx;
  }

  static std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
  }

  const Machine m_;
  std::size_t k_ = 1;
  int in_slots_ = 0;
  std::vector<int> adv_slots_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> span_;
  std::vector<const Choice*> pool_;
};

inline RunOutcome run(const Machine& m, const Word& input, const std::vector<Word>& advice,
                      const RunOptions& opt = {}) {
  return Runner(m).run(input, advice, opt);
}

inline RunOutcome run(const Machine& m, std::string_view input,
                      const std::vector<std::string>& advice, const RunOptions& opt = {}) {
  return Runner(m).run(input, advice, opt);
}

}  // namespace fat
