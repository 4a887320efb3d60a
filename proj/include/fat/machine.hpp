#pragma once

#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fat/alphabet.hpp"
#include "fat/rational.hpp"

namespace fat {

// Movement discipline of a tape head.
//   real_time: must move right on every step while not scanning the right
//              endmarker; once on it, must stay.
//   one_way:   may stay anywhere, never moves left.
//   two_way:   free movement between the endmarkers (input head only).
enum class HeadMode { real_time, one_way, two_way };

enum class Move : std::int8_t { left = -1, stay = 0, right = 1 };

enum class MachineKind { deterministic, probabilistic };

inline const char* to_token(Move m) {
  switch (m) {
    case Move::left: return "L";
    case Move::stay: return "S";
    default: return "R";
  }
}

inline const char* to_token(HeadMode m) {
  switch (m) {
    case HeadMode::real_time: return "real-time";
    case HeadMode::one_way: return "one-way";
    default: return "two-way";
  }
}

// Transition lookup key: current state plus the scanned symbol on the input
// tape and on each advice tape. Endmarkers are valid key symbols (the input
// tape has both, advice tapes only the right one).
struct TransitionKey {
  int state = 0;
  Symbol input = 0;
  std::vector<Symbol> advice;

  friend bool operator<(const TransitionKey& a, const TransitionKey& b) {
    return std::tie(a.state, a.input, a.advice) < std::tie(b.state, b.input, b.advice);
  }
  friend bool operator==(const TransitionKey& a, const TransitionKey& b) {
    return a.state == b.state && a.input == b.input && a.advice == b.advice;
  }
};

// One weighted alternative of a transition. Deterministic machines have a
// single choice of weight 1 per key.
struct Choice {
  Rational weight = Rational(1);
  int next = 0;
  Move input_move = Move::stay;
  std::vector<Move> advice_moves;

  friend bool operator==(const Choice& a, const Choice& b) {
    return a.weight == b.weight && a.next == b.next && a.input_move == b.input_move &&
           a.advice_moves == b.advice_moves;
  }
};

// A finite automaton with one input tape and k >= 1 advice tapes.
// Input tape layout: '<' x '>' with the head starting on '<'.
// Advice tape layout: h '>' with the head starting on the first advice
// symbol (advice tapes have no left endmarker).
struct Machine {
  std::string name;
  MachineKind kind = MachineKind::deterministic;

  std::vector<std::string> states;
  int start = -1;
  int accept = -1;
  int reject = -1;

  HeadMode input_mode = HeadMode::one_way;
  std::vector<HeadMode> advice_modes;

  Alphabet input_alphabet;
  std::vector<Alphabet> advice_alphabets;

  std::map<TransitionKey, std::vector<Choice>> transitions;

  std::size_t tape_count() const { return advice_modes.size(); }

  int add_state(const std::string& n) {
    states.push_back(n);
    return (int)states.size() - 1;
  }

  const std::string& state_name(int q) const { return states.at((std::size_t)q); }

  // Adds a deterministic arc (single choice, weight 1).
  void arc(int q, Symbol in, std::vector<Symbol> adv, int next, Move min,
           std::vector<Move> madv) {
    TransitionKey k{q, in, std::move(adv)};
    Choice c;
    c.next = next;
    c.input_move = min;
    c.advice_moves = std::move(madv);
    auto [it, fresh] = transitions.emplace(std::move(k), std::vector<Choice>{});
    if (!fresh) throw Error("duplicate transition for " + key_string(it->first));
    it->second.push_back(std::move(c));
  }

  // Adds a probabilistic arc with explicit weighted choices.
  void arc_choices(int q, Symbol in, std::vector<Symbol> adv, std::vector<Choice> cs) {
    TransitionKey k{q, in, std::move(adv)};
    auto [it, fresh] = transitions.emplace(std::move(k), std::move(cs));
    if (!fresh) throw Error("duplicate transition for " + key_string(it->first));
  }

  std::string key_string(const TransitionKey& k) const {
    std::ostringstream os;
    os << "(" << state_name(k.state) << ", " << input_alphabet.token(k.input);
    for (std::size_t j = 0; j < k.advice.size(); ++j)
      os << ", " << advice_alphabets[j].token(k.advice[j]);
    os << ")";
    return os.str();
  }

  friend bool operator==(const Machine& a, const Machine& b) {
    return a.kind == b.kind && a.states == b.states && a.start == b.start &&
           a.accept == b.accept && a.reject == b.reject && a.input_mode == b.input_mode &&
           a.advice_modes == b.advice_modes && a.input_alphabet == b.input_alphabet &&
           a.advice_alphabets == b.advice_alphabets && a.transitions == b.transitions;
  }
};

struct Violation {
  std::string where;  // transition key, or "machine" for structural problems
  std::string rule;

  friend bool operator==(const Violation& a, const Violation& b) {
    return a.where == b.where && a.rule == b.rule;
  }
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  std::string to_string() const {
    std::ostringstream os;
    for (const auto& v : violations) os << v.where << ": " << v.rule << "\n";
    return os.str();
  }
};

namespace detail {

// A single-square move is legal for (mode, scanned symbol) if it never
// crosses an endmarker and obeys the head discipline.
inline bool move_legal(HeadMode mode, Symbol scanned, Move mv, std::string* why) {
  if (scanned == kLend && mv == Move::left) {
    if (why) *why = "head may not move left from the left endmarker";
    return false;
  }
  if (scanned == kRend && mv == Move::right) {
    if (why) *why = "head may not move right from the right endmarker";
    return false;
  }
  switch (mode) {
    case HeadMode::two_way:
      return true;
    case HeadMode::one_way:
      if (mv == Move::left) {
        if (why) *why = "left move under one-way mode";
        return false;
      }
      return true;
    case HeadMode::real_time:
      if (scanned == kRend) {
        if (mv != Move::stay) {
          if (why) *why = "real-time head must stay on the right endmarker";
          return false;
        }
        return true;
      }
      if (mv != Move::right) {
        if (why) *why = "real-time head must move right while not on the right endmarker";
        return false;
      }
      return true;
  }
  return true;
}

}  // namespace detail

// Checks every well-formedness rule of the model. Violations are reported as
// data; an empty report means the machine is well-formed for its declared
// determinism class and head modes.
inline ValidationReport validate_machine(const Machine& m) {
  ValidationReport rep;
  auto flag = [&rep](std::string where, std::string rule) {
    rep.violations.push_back({std::move(where), std::move(rule)});
  };

  std::size_t k = m.tape_count();
  if (k < 1) flag("machine", "machine must have at least one advice tape");
  if (m.advice_alphabets.size() != k)
    flag("machine", "advice alphabet count differs from advice tape count");
  int n_states = (int)m.states.size();
  auto state_ok = [n_states](int q) { return q >= 0 && q < n_states; };
  if (!state_ok(m.start)) flag("machine", "start state missing or out of range");
  if (!state_ok(m.accept)) flag("machine", "accept state missing or out of range");
  if (!state_ok(m.reject)) flag("machine", "reject state missing or out of range");
  for (std::size_t j = 0; j < k; ++j)
    if (m.advice_modes[j] == HeadMode::two_way)
      flag("advice[" + std::to_string(j) + "]", "two-way advice forbidden");

  auto sym_ok = [](const Alphabet& a, Symbol s, bool allow_lend) {
    if (s == kRend) return true;
    if (s == kLend) return allow_lend;
    return s >= 0 && (std::size_t)s < a.size();
  };

  for (const auto& [key, choices] : m.transitions) {
    std::string where = state_ok(key.state) ? m.key_string(key) : "(bad key)";
    if (!state_ok(key.state)) {
      flag(where, "key state out of range");
      continue;
    }
    if (key.state == m.accept || key.state == m.reject)
      flag(where, "outgoing transition from halting state");
    if (!sym_ok(m.input_alphabet, key.input, true))
      flag(where, "key input symbol out of range");
    if (key.advice.size() != k) {
      flag(where, "key advice symbol count differs from advice tape count");
      continue;
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (key.advice[j] == kLend)
        flag(where, "advice tape has no left endmarker");
      else if (!sym_ok(m.advice_alphabets[j], key.advice[j], false))
        flag(where, "key advice symbol out of range");
    }

    if (choices.empty()) {
      flag(where, "key has no choices");
      continue;
    }
    if (m.kind == MachineKind::deterministic &&
        (choices.size() != 1 || !choices[0].weight.is_one()))
      flag(where, "deterministic key must have exactly one choice of weight 1");
    Rational total(0);
    bool weights_fine = true;
    for (const Choice& c : choices) {
      if (!(c.weight > Rational(0))) {
        flag(where, "choice weight not positive");
        weights_fine = false;
      } else {
        total += c.weight;
      }
      if (!state_ok(c.next)) flag(where, "next state out of range");
      std::string why;
      if (!detail::move_legal(m.input_mode, key.input, c.input_move, &why))
        flag(where, "input head: " + why);
      if (c.advice_moves.size() != k) {
        flag(where, "choice advice move count differs from advice tape count");
        continue;
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (m.advice_modes[j] == HeadMode::two_way) continue;  // flagged above
        if (!detail::move_legal(m.advice_modes[j], key.advice[j], c.advice_moves[j], &why))
          flag(where, "advice head " + std::to_string(j) + ": " + why);
      }
    }
    if (weights_fine && total != Rational(1)) flag(where, "weights sum != 1");
  }
  return rep;
}

// A move tuple that is legal for any (mode, scanned symbol) pair; used to
// route otherwise-undefined keys to the reject state.
inline Move neutral_move(HeadMode mode, Symbol scanned) {
  if (mode == HeadMode::real_time && scanned != kRend) return Move::right;
  return Move::stay;
}

// Totalizes a machine: every key over reachable symbol combinations that has
// no transition gets a single reject arc with neutral moves. Keeps builders
// small (they only spell out the meaningful arcs) and keeps the engine from
// tripping over malformed advice.
inline void complete_with_reject(Machine& m) {
  std::vector<Symbol> input_syms;
  for (Symbol s = 0; s < (Symbol)m.input_alphabet.size(); ++s) input_syms.push_back(s);
  input_syms.push_back(kLend);
  input_syms.push_back(kRend);

  std::size_t k = m.tape_count();
  std::vector<std::vector<Symbol>> adv_syms(k);
  for (std::size_t j = 0; j < k; ++j) {
    for (Symbol s = 0; s < (Symbol)m.advice_alphabets[j].size(); ++s)
      adv_syms[j].push_back(s);
    adv_syms[j].push_back(kRend);
  }

  std::vector<Symbol> adv(k);
  for (int q = 0; q < (int)m.states.size(); ++q) {
    if (q == m.accept || q == m.reject) continue;
    for (Symbol in : input_syms) {
      // Enumerate the cartesian product of advice symbols.
      std::vector<std::size_t> idx(k, 0);
      while (true) {
        for (std::size_t j = 0; j < k; ++j) adv[j] = adv_syms[j][idx[j]];
        TransitionKey key{q, in, adv};
        if (!m.transitions.count(key)) {
          Choice c;
          c.next = m.reject;
          c.input_move = neutral_move(m.input_mode, in);
          c.advice_moves.resize(k);
          for (std::size_t j = 0; j < k; ++j)
            c.advice_moves[j] = neutral_move(m.advice_modes[j], adv[j]);
          m.transitions.emplace(std::move(key), std::vector<Choice>{std::move(c)});
        }
        std::size_t j = 0;
        for (; j < k; ++j) {
          if (++idx[j] < adv_syms[j].size()) break;
          idx[j] = 0;
        }
        if (j == k) break;
      }
    }
  }
}

}  // namespace fat
