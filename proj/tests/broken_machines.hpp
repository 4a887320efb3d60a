#pragma once

// Fixture machines, each violating exactly one model invariant. Shared by
// the machine unit tests and the acceptance suite.

#include <string>
#include <utility>
#include <vector>

#include "fat/machine.hpp"

namespace fixtures {

inline fat::Machine minimal_ok() {
  using namespace fat;
  Machine m;
  m.name = "minimal";
  m.input_mode = HeadMode::one_way;
  m.advice_modes = {HeadMode::one_way};
  m.input_alphabet = Alphabet({"a"});
  m.advice_alphabets = {Alphabet({"x"})};
  int q0 = m.add_state("q0");
  m.accept = m.add_state("acc");
  m.reject = m.add_state("rej");
  m.start = q0;
  m.arc(q0, kLend, {0}, m.accept, Move::right, {Move::stay});
  m.arc(q0, kLend, {kRend}, m.accept, Move::right, {Move::stay});
  return m;
}

// (name, machine, expected rule substring)
inline std::vector<std::pair<std::string, fat::Machine>> broken_set() {
  using namespace fat;
  std::vector<std::pair<std::string, Machine>> out;

  {  // 1: two-way advice head
    Machine m = minimal_ok();
    m.advice_modes[0] = HeadMode::two_way;
    out.push_back({"two-way advice forbidden", std::move(m)});
  }
  {  // 2: probabilistic weights 1/2 + 1/3
    Machine m = minimal_ok();
    m.kind = MachineKind::probabilistic;
    m.transitions.clear();
    m.arc_choices(m.start, kLend, {0},
                  {Choice{Rational(1, 2), m.accept, Move::right, {Move::stay}},
                   Choice{Rational(1, 3), m.reject, Move::right, {Move::stay}}});
    out.push_back({"weights sum != 1", std::move(m)});
  }
  {  // 3: deterministic machine with two choices
    Machine m = minimal_ok();
    m.transitions.clear();
    m.arc_choices(m.start, kLend, {0},
                  {Choice{Rational(1, 2), m.accept, Move::right, {Move::stay}},
                   Choice{Rational(1, 2), m.reject, Move::right, {Move::stay}}});
    out.push_back({"deterministic key must have exactly one choice", std::move(m)});
  }
  {  // 4: input head moves left from the left endmarker
    Machine m = minimal_ok();
    m.input_mode = HeadMode::two_way;
    m.transitions.clear();
    m.arc(m.start, kLend, {0}, m.accept, Move::left, {Move::stay});
    out.push_back({"left from the left endmarker", std::move(m)});
  }
  {  // 5: head moves right from the right endmarker
    Machine m = minimal_ok();
    m.arc(m.start, kRend, {0}, m.accept, Move::right, {Move::stay});
    out.push_back({"right from the right endmarker", std::move(m)});
  }
  {  // 6: real-time input head pauses before the end
    Machine m = minimal_ok();
    m.input_mode = HeadMode::real_time;
    m.transitions.clear();
    m.arc(m.start, 0, {0}, m.accept, Move::stay, {Move::stay});
    out.push_back({"real-time head must move right", std::move(m)});
  }
  {  // 7: real-time advice head told to advance on its endmarker
    Machine m = minimal_ok();
    m.advice_modes[0] = HeadMode::real_time;
    m.transitions.clear();
    m.arc(m.start, 0, {kRend}, m.accept, Move::right, {Move::right});
    out.push_back({"right from the right endmarker", std::move(m)});
  }
  {  // 8: outgoing transition from a halting state
    Machine m = minimal_ok();
    m.arc(m.accept, 0, {0}, m.reject, Move::right, {Move::stay});
    out.push_back({"outgoing transition from halting state", std::move(m)});
  }
  {  // 9: one-way head moves left
    Machine m = minimal_ok();
    m.arc(m.start, 0, {0}, m.accept, Move::left, {Move::stay});
    out.push_back({"left move under one-way mode", std::move(m)});
  }
  {  // 10: non-positive weight
    Machine m = minimal_ok();
    m.kind = MachineKind::probabilistic;
    m.transitions.clear();
    m.arc_choices(m.start, kLend, {0},
                  {Choice{Rational(3, 2), m.accept, Move::right, {Move::stay}},
                   Choice{Rational(-1, 2), m.reject, Move::right, {Move::stay}}});
    out.push_back({"weight not positive", std::move(m)});
  }
  return out;
}

}  // namespace fixtures
