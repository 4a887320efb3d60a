#pragma once

#include <deque>
#include <map>
#include <string>
#include <vector>

#include "fat/engine.hpp"
#include "fat/machine.hpp"

namespace fat {

// Hard-wires concrete advice strings into a deterministic machine: the
// result reads no advice (modeled as one advice tape with an empty alphabet
// and a permanently staying head) and its states are the reachable product
// of the original states with advice head positions. For every input x the
// verdict equals run(m, x, advice).
inline Machine specialize_with_advice(const Machine& m, const std::vector<std::string>& advice) {
  if (m.kind != MachineKind::deterministic)
    throw Error("specialize_with_advice requires a deterministic machine");
  if (advice.size() != m.tape_count())
    throw Error("expected " + std::to_string(m.tape_count()) + " advice strings");

  std::vector<Word> adv;
  for (std::size_t j = 0; j < advice.size(); ++j)
    adv.push_back(m.advice_alphabets[j].encode(advice[j]));  // throws on bad symbols

  Machine out;
  out.name = m.name + "+advice";
  out.kind = MachineKind::deterministic;
  out.input_mode = m.input_mode;
  out.input_alphabet = m.input_alphabet;
  out.advice_modes = {HeadMode::one_way};
  out.advice_alphabets = {Alphabet(std::vector<std::string>{})};

  // Product state = (original state, advice positions). Explored lazily over
  // every input symbol so only reachable combinations materialize.
  std::map<std::pair<int, std::vector<int>>, int> ids;
  std::deque<std::pair<int, std::vector<int>>> todo;

  auto intern = [&](int q, const std::vector<int>& pos) {
    auto key = std::make_pair(q, pos);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    std::string name = m.state_name(q);
    for (int p : pos) name += "@" + std::to_string(p);
    int id = out.add_state(name);
    ids.emplace(key, id);
    todo.push_back(key);
    return id;
  };

  out.accept = out.add_state("acc");
  out.reject = out.add_state("rej");

  std::vector<int> zero(m.tape_count(), 0);
  out.start = intern(m.start, zero);

  std::vector<Symbol> input_syms;
  for (Symbol s = 0; s < (Symbol)m.input_alphabet.size(); ++s) input_syms.push_back(s);
  input_syms.push_back(kLend);
  input_syms.push_back(kRend);

  while (!todo.empty()) {
    auto [q, pos] = todo.front();
    todo.pop_front();
    int from = ids.at({q, pos});
    for (Symbol in : input_syms) {
      TransitionKey key{q, in, {}};
      key.advice.resize(m.tape_count());
      for (std::size_t j = 0; j < m.tape_count(); ++j)
        key.advice[j] = Runner::advice_symbol(adv[j], pos[j]);
      auto it = m.transitions.find(key);
      if (it == m.transitions.end()) continue;  // undefined in m: stays undefined
      const Choice& c = it->second.at(0);
      std::vector<int> next_pos = pos;
      for (std::size_t j = 0; j < m.tape_count(); ++j)
        next_pos[j] += (int)c.advice_moves[j];
      int to;
      if (c.next == m.accept) to = out.accept;
      else if (c.next == m.reject) to = out.reject;
      else to = intern(c.next, next_pos);
      out.arc(from, in, {kRend}, to, c.input_move, {Move::stay});
    }
  }
  return out;
}

}  // namespace fat
