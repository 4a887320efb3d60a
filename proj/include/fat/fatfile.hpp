#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "fat/machine.hpp"

namespace fat {

// Line-oriented machine description format:
//
//   alphabet input: a b
//   alphabet advice[0]: 1 #
//   mode input: real-time
//   mode advice[0]: one-way
//   states: q0 q1 qacc qrej
//   start: q0
//   accept: qacc
//   reject: qrej
//   trans: q0 a 1 -> q1 R S
//   trans: q0 a 1 -> 1/2 q1 R S | 1/2 q2 S R
//
// Endmarkers in transition lines are written '<' (input left) and '>'
// (right). Comment lines start with '#' in column one; '#' elsewhere is an
// ordinary symbol token. The machine kind is inferred: probabilistic iff any
// key has several choices or a non-unit weight.
struct ParseError : Error {
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_no(line) {}
  int line_no;
};

namespace fatfile {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline HeadMode parse_mode(const std::string& t, int line, bool advice) {
  if (t == "real-time") return HeadMode::real_time;
  if (t == "one-way") return HeadMode::one_way;
  if (t == "two-way") {
    if (advice) throw ParseError(line, "two-way advice forbidden");
    return HeadMode::two_way;
  }
  throw ParseError(line, "unknown head mode '" + t + "'");
}

inline Move parse_move(const std::string& t, int line) {
  if (t == "L") return Move::left;
  if (t == "S") return Move::stay;
  if (t == "R") return Move::right;
  throw ParseError(line, "unknown move '" + t + "' (expected L, S, or R)");
}

inline Symbol parse_symbol(const Alphabet& a, const std::string& t, int line, bool allow_lend) {
  if (t == std::string(1, kRendToken)) return kRend;
  if (t == std::string(1, kLendToken)) {
    if (!allow_lend) throw ParseError(line, "advice tapes have no left endmarker");
    return kLend;
  }
  auto s = a.find(t);
  if (!s) throw ParseError(line, "symbol '" + t + "' not in alphabet");
  return *s;
}

}  // namespace detail

inline Machine parse(std::istream& in, const std::string& name = "machine") {
  Machine m;
  m.name = name;
  bool have_states = false;
  std::vector<std::pair<int, std::string>> trans_lines;   // deferred until header known
  std::vector<bool> have_advice_alpha, have_advice_mode;
  bool have_input_alpha = false, have_input_mode = false;
  std::string start_name, accept_name, reject_name;
  int start_line = 0;

  auto state_index = [&](const std::string& n, int line) {
    for (int i = 0; i < (int)m.states.size(); ++i)
      if (m.states[(std::size_t)i] == n) return i;
    throw ParseError(line, "unknown state '" + n + "'");
  };

  auto advice_index = [&](const std::string& head, int line) {
    // "advice[j]"
    auto lb = head.find('['), rb = head.find(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
      throw ParseError(line, "expected advice[<index>]");
    int j;
    try {
      j = std::stoi(head.substr(lb + 1, rb - lb - 1));
    } catch (const std::exception&) {
      throw ParseError(line, "bad advice index");
    }
    if (j < 0 || j > 3) throw ParseError(line, "advice index out of range (0..3)");
    if ((std::size_t)j >= m.advice_alphabets.size()) {
      m.advice_alphabets.resize((std::size_t)j + 1);
      m.advice_modes.resize((std::size_t)j + 1, HeadMode::one_way);
      have_advice_alpha.resize((std::size_t)j + 1, false);
      have_advice_mode.resize((std::size_t)j + 1, false);
    }
    return j;
  };

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.empty() || raw[0] == '#') continue;
    auto colon = raw.find(':');
    if (colon == std::string::npos) {
      if (detail::split_ws(raw).empty()) continue;
      throw ParseError(line, "expected '<keyword>:'");
    }
    std::string head_raw = raw.substr(0, colon);
    auto head_toks = detail::split_ws(head_raw);
    std::string rest = raw.substr(colon + 1);
    auto toks = detail::split_ws(rest);
    if (head_toks.empty()) throw ParseError(line, "missing keyword");
    const std::string& kw = head_toks[0];

    try {
      if (kw == "alphabet") {
        if (head_toks.size() != 2) throw ParseError(line, "expected 'alphabet input:' or 'alphabet advice[j]:'");
        if (head_toks[1] == "input") {
          m.input_alphabet = Alphabet(toks);
          have_input_alpha = true;
        } else {
          int j = advice_index(head_toks[1], line);
          m.advice_alphabets[(std::size_t)j] = Alphabet(toks);
          have_advice_alpha[(std::size_t)j] = true;
        }
      } else if (kw == "mode") {
        if (head_toks.size() != 2 || toks.size() != 1)
          throw ParseError(line, "expected 'mode input: <mode>' or 'mode advice[j]: <mode>'");
        if (head_toks[1] == "input") {
          m.input_mode = detail::parse_mode(toks[0], line, false);
          have_input_mode = true;
        } else {
          int j = advice_index(head_toks[1], line);
          m.advice_modes[(std::size_t)j] = detail::parse_mode(toks[0], line, true);
          have_advice_mode[(std::size_t)j] = true;
        }
      } else if (kw == "states") {
        if (toks.empty()) throw ParseError(line, "at least one state required");
        for (const auto& t : toks) {
          for (const auto& existing : m.states)
            if (existing == t) throw ParseError(line, "duplicate state '" + t + "'");
          m.add_state(t);
        }
        have_states = true;
      } else if (kw == "start") {
        if (toks.size() != 1) throw ParseError(line, "expected one state");
        start_name = toks[0];
        start_line = line;
      } else if (kw == "accept") {
        if (toks.size() != 1) throw ParseError(line, "expected one state");
        accept_name = toks[0];
      } else if (kw == "reject") {
        if (toks.size() != 1) throw ParseError(line, "expected one state");
        reject_name = toks[0];
      } else if (kw == "trans") {
        trans_lines.push_back({line, rest});
      } else {
        throw ParseError(line, "unknown keyword '" + kw + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
  }

  if (!have_input_alpha) throw ParseError(line, "missing 'alphabet input:'");
  if (!have_states) throw ParseError(line, "missing 'states:'");
  if (m.advice_alphabets.empty()) throw ParseError(line, "at least one advice tape required");
  for (std::size_t j = 0; j < m.advice_alphabets.size(); ++j)
    if (!have_advice_alpha[j])
      throw ParseError(line, "missing 'alphabet advice[" + std::to_string(j) + "]:'");
  if (start_name.empty()) throw ParseError(line, "missing 'start:'");
  if (accept_name.empty()) throw ParseError(line, "missing 'accept:'");
  if (reject_name.empty()) throw ParseError(line, "missing 'reject:'");
  (void)have_input_mode;
  m.start = state_index(start_name, start_line);
  m.accept = state_index(accept_name, start_line);
  m.reject = state_index(reject_name, start_line);

  std::size_t k = m.advice_alphabets.size();
  bool probabilistic = false;

  for (auto& [tl, rest] : trans_lines) {
    auto toks = detail::split_ws(rest);
    // q in adv... -> choices
    if (toks.size() < k + 3) throw ParseError(tl, "transition too short");
    int q = state_index(toks[0], tl);
    Symbol in = detail::parse_symbol(m.input_alphabet, toks[1], tl, true);
    std::vector<Symbol> adv;
    for (std::size_t j = 0; j < k; ++j)
      adv.push_back(detail::parse_symbol(m.advice_alphabets[j], toks[2 + j], tl, false));
    if (toks[2 + k] != "->") throw ParseError(tl, "expected '->'");

    std::vector<std::vector<std::string>> choice_toks(1);
    for (std::size_t i = 3 + k; i < toks.size(); ++i) {
      if (toks[i] == "|") choice_toks.emplace_back();
      else choice_toks.back().push_back(toks[i]);
    }
    std::vector<Choice> choices;
    for (auto& ct : choice_toks) {
      Choice c;
      std::size_t pos = 0;
      if (ct.empty()) throw ParseError(tl, "empty choice");
      if (ct.size() == k + 3) {  // leading weight
        c.weight = Rational::parse(ct[0]);
        pos = 1;
      } else if (ct.size() != k + 2) {
        throw ParseError(tl, "choice needs [weight] state and " + std::to_string(k + 1) + " moves");
      }
      c.next = state_index(ct[pos], tl);
      c.input_move = detail::parse_move(ct[pos + 1], tl);
      for (std::size_t j = 0; j < k; ++j)
        c.advice_moves.push_back(detail::parse_move(ct[pos + 2 + j], tl));
      choices.push_back(std::move(c));
    }
    if (choices.size() > 1 || !choices[0].weight.is_one()) probabilistic = true;
    TransitionKey key{q, in, std::move(adv)};
    if (m.transitions.count(key)) throw ParseError(tl, "duplicate transition for " + m.key_string(key));
    m.transitions.emplace(std::move(key), std::move(choices));
  }
  m.kind = probabilistic ? MachineKind::probabilistic : MachineKind::deterministic;
  return m;
}

inline Machine parse_string(const std::string& text, const std::string& name = "machine") {
  std::istringstream is(text);
  return parse(is, name);
}

inline std::string serialize(const Machine& m) {
  std::ostringstream os;
  auto emit_tokens = [&](const std::vector<std::string>& ts) {
    for (const auto& t : ts) os << " " << t;
    os << "\n";
  };
  os << "alphabet input:";
  emit_tokens(m.input_alphabet.tokens());
  for (std::size_t j = 0; j < m.advice_alphabets.size(); ++j) {
    os << "alphabet advice[" << j << "]:";
    emit_tokens(m.advice_alphabets[j].tokens());
  }
  os << "mode input: " << to_token(m.input_mode) << "\n";
  for (std::size_t j = 0; j < m.advice_modes.size(); ++j)
    os << "mode advice[" << j << "]: " << to_token(m.advice_modes[j]) << "\n";
  os << "states:";
  emit_tokens(m.states);
  os << "start: " << m.state_name(m.start) << "\n";
  os << "accept: " << m.state_name(m.accept) << "\n";
  os << "reject: " << m.state_name(m.reject) << "\n";
  for (const auto& [key, choices] : m.transitions) {
    os << "trans: " << m.state_name(key.state) << " " << m.input_alphabet.token(key.input);
    for (std::size_t j = 0; j < key.advice.size(); ++j)
      os << " " << m.advice_alphabets[j].token(key.advice[j]);
    os << " ->";
    bool explicit_weights = m.kind == MachineKind::probabilistic;
    for (std::size_t ci = 0; ci < choices.size(); ++ci) {
      const Choice& c = choices[ci];
      if (ci > 0) os << " |";
      if (explicit_weights) os << " " << c.weight.to_string();
      os << " " << m.state_name(c.next) << " " << to_token(c.input_move);
      for (Move mv : c.advice_moves) os << " " << to_token(mv);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace fatfile
}  // namespace fat
