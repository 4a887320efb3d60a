#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fat/advice.hpp"
#include "fat/machine.hpp"
#include "fat/oracles.hpp"

namespace fat {

// A cataloged construction: a validated machine, the advice function it was
// designed for, and the brute-force oracle it is checked against.
struct Construction {
  std::string id;
  Machine machine;
  AdviceFunction advice;
  LanguageOracle oracle;
};

namespace builders {

inline std::vector<Symbol> all_syms(const Alphabet& a, bool with_rend = true) {
  std::vector<Symbol> v;
  for (Symbol s = 0; s < (Symbol)a.size(); ++s) v.push_back(s);
  if (with_rend) v.push_back(kRend);
  return v;
}

// Real-time input, one-way advice. The advice head steps once per input 'a';
// accept iff the a-count equals the advice length.
inline Machine equal2() {
  Machine m;
  m.name = "equal2";
  m.input_mode = HeadMode::real_time;
  m.advice_modes = {HeadMode::one_way};
  m.input_alphabet = Alphabet({"a", "b"});
  m.advice_alphabets = {Alphabet({"a", "r"})};
  const Symbol a = 0, b = 1;
  const Symbol A = 0, R = 1;

  int q0 = m.add_state("q0");
  int scan = m.add_state("scan");
  m.accept = m.add_state("acc");
  m.reject = m.add_state("rej");
  m.start = q0;

  m.arc(q0, kLend, {A}, scan, Move::right, {Move::stay});
  m.arc(q0, kLend, {kRend}, scan, Move::right, {Move::stay});
  m.arc(q0, kLend, {R}, m.reject, Move::right, {Move::stay});
  m.arc(scan, a, {A}, scan, Move::right, {Move::right});
  m.arc(scan, a, {kRend}, m.reject, Move::right, {Move::stay});
  m.arc(scan, b, {A}, scan, Move::right, {Move::stay});
  m.arc(scan, b, {kRend}, scan, Move::right, {Move::stay});
  m.arc(scan, kRend, {A}, m.reject, Move::stay, {Move::stay});
  m.arc(scan, kRend, {kRend}, m.accept, Move::stay, {Move::stay});
  complete_with_reject(m);
  return m;
}

// One-way input, real-time advice a^{2n}. The advice head is forced to move
// every step, so the machine tracks a small move debt in its state: each 'a'
// owes 1 move, each 'b' 3, each 'c' 2. The step spent on the left endmarker
// prepays one move; the "ahead" state carries that credit through a leading
// run of a's. Accepts iff the debt hits zero exactly when both heads reach
// their endmarkers.
inline Machine equal() {
  Machine m;
  m.name = "equal";
  m.input_mode = HeadMode::one_way;
  m.advice_modes = {HeadMode::real_time};
  m.input_alphabet = Alphabet({"a", "b", "c"});
  m.advice_alphabets = {Alphabet({"a"})};
  const Symbol a = 0, b = 1, c = 2;
  const Symbol A = 0;

  int q0 = m.add_state("q0");
  int ahead = m.add_state("ahead");
  int d0 = m.add_state("d0");
  int d1 = m.add_state("d1");
  int d2 = m.add_state("d2");
  int chk = m.add_state("chk");
  m.accept = m.add_state("acc");
  m.reject = m.add_state("rej");
  m.start = q0;

  m.arc(q0, kLend, {A}, ahead, Move::right, {Move::right});
  m.arc(q0, kLend, {kRend}, chk, Move::right, {Move::stay});
  m.arc(chk, kRend, {kRend}, m.accept, Move::stay, {Move::stay});
  for (Symbol s : {a, b, c}) m.arc(chk, s, {kRend}, m.reject, Move::stay, {Move::stay});

  m.arc(ahead, a, {A}, ahead, Move::right, {Move::right});
  m.arc(ahead, b, {A}, d1, Move::right, {Move::right});
  m.arc(ahead, c, {A}, d0, Move::right, {Move::right});
  m.arc(ahead, kRend, {A}, m.reject, Move::stay, {Move::right});
  m.arc(ahead, kRend, {kRend}, m.reject, Move::stay, {Move::stay});

  m.arc(d0, a, {A}, d0, Move::right, {Move::right});
  m.arc(d0, b, {A}, d2, Move::right, {Move::right});
  m.arc(d0, c, {A}, d1, Move::right, {Move::right});
  m.arc(d0, kRend, {A}, m.reject, Move::stay, {Move::right});
  m.arc(d0, kRend, {kRend}, m.accept, Move::stay, {Move::stay});

  for (Symbol s : all_syms(m.input_alphabet)) {
    if (s != kRend) {
      m.arc(ahead, s, {kRend}, m.reject, Move::stay, {Move::stay});
      m.arc(d0, s, {kRend}, m.reject, Move::stay, {Move::stay});
    }
    m.arc(d1, s, {A}, d0, Move::stay, {Move::right});
    m.arc(d1, s, {kRend}, m.reject, Move::stay, {Move::stay});
    m.arc(d2, s, {A}, d1, Move::stay, {Move::right});
    m.arc(d2, s, {kRend}, m.reject, Move::stay, {Move::stay});
  }
  complete_with_reject(m);
  return m;
}

// One-way input and advice "##a#aa#...#a^{f(n)}#". One '#'-hop per leading
// input 'a', then the trailing c-count is compared against the selected
// block. The machine itself does not depend on f.
inline Machine l_f() {
  Machine m;
  m.name = "l_f";
  m.input_mode = HeadMode::one_way;
  m.advice_modes = {HeadMode::one_way};
  m.input_alphabet = Alphabet({"a", "b", "c"});
  m.advice_alphabets = {Alphabet({"a", "#"})};
  const Symbol a = 0, b = 1, c = 2;
  const Symbol A = 0, H = 1;

  int q0 = m.add_state("q0");
  int qa = m.add_state("qa");
  int seek = m.add_state("seek");
  int qb = m.add_state("qb");
  int qc = m.add_state("qc");
  int fin = m.add_state("fin");
  m.accept = m.add_state("acc");
  m.reject = m.add_state("rej");
  m.start = q0;

  for (Symbol g : {A, H, kRend}) m.arc(q0, kLend, {g}, qa, Move::right, {Move::stay});

  m.arc(qa, a, {H}, seek, Move::right, {Move::right});
  m.arc(qa, b, {H}, qb, Move::right, {Move::stay});
  m.arc(qa, c, {H}, qc, Move::right, {Move::right});
  m.arc(qa, kRend, {H}, fin, Move::stay, {Move::right});

  for (Symbol s : all_syms(m.input_alphabet)) {
    m.arc(seek, s, {A}, seek, Move::stay, {Move::right});
    m.arc(seek, s, {H}, qa, Move::stay, {Move::stay});
    m.arc(seek, s, {kRend}, m.reject, Move::stay, {Move::stay});
  }

  m.arc(qb, b, {H}, qb, Move::right, {Move::stay});
  m.arc(qb, c, {H}, qc, Move::right, {Move::right});
  m.arc(qb, kRend, {H}, fin, Move::stay, {Move::right});

  m.arc(qc, c, {A}, qc, Move::right, {Move::right});
  m.arc(qc, kRend, {A}, fin, Move::stay, {Move::right});

  m.arc(fin, kRend, {H}, m.accept, Move::stay, {Move::stay});
  m.arc(fin, kRend, {A}, m.reject, Move::stay, {Move::stay});
  complete_with_reject(m);
  return m;
}

// Recursive L_k machine. Each level skips advice blocks for its leading
// c_i's, hands control to the level below (whose endmarker arcs are keyed on
// this level's symbols instead), then matches trailing c_i's against the
// block's c-run. See the l_k advice generator for the tape layout.
struct LkAssembler {
  Machine m;
  int k;
  Symbol adv_one;

  explicit LkAssembler(int levels) : k(levels) {
    if (k < 1) throw Error("l_k requires k >= 1");
    m.name = "l_" + std::to_string(k);
    m.input_mode = HeadMode::one_way;
    m.advice_modes = {HeadMode::one_way};
    m.input_alphabet = lang::lk_alphabet(k);
    m.advice_alphabets = {advice::lk_advice_alphabet(k)};
    adv_one = *m.advice_alphabets[0].find("1");
  }

  Symbol in_c(int lvl) const { return (Symbol)lvl; }
  Symbol adv_c(int lvl) const {
    return *m.advice_alphabets[0].find(std::string(1, advice::lk_c_token(lvl)));
  }
  Symbol adv_sep(int lvl) const {
    return *m.advice_alphabets[0].find(std::string(1, advice::lk_separator(lvl)));
  }

  std::vector<Symbol> adv_all() const { return all_syms(m.advice_alphabets[0]); }
  std::vector<Symbol> in_all() const { return all_syms(m.input_alphabet); }

  Machine build() {
    int q0 = m.add_state("q0");
    m.accept = m.add_state("acc");
    m.reject = m.add_state("rej");
    m.start = q0;
    int entry = emit(k, {kRend}, {kRend}, m.accept, /*cross_sep=*/false);
    for (Symbol g : adv_all()) m.arc(q0, kLend, {g}, entry, Move::right, {Move::stay});
    complete_with_reject(m);
    return std::move(m);
  }

  // Emits the sub-automaton for level `lvl`. `in_ends` are the input symbols
  // it must treat as its right endmarker, `adv_ends` the advice symbols that
  // end its advice segment. A successful displacement check transitions to
  // `on_accept` (advancing the advice head past this level's final separator
  // when `cross_sep` is set). Returns the entry state.
  int emit(int lvl, std::vector<Symbol> in_ends, std::vector<Symbol> adv_ends, int on_accept,
           bool cross_sep) {
    std::string pre = "M" + std::to_string(lvl) + ".";
    if (lvl == 1) {
      int si = m.add_state(pre + "lead");
      int sj = m.add_state(pre + "zeros");
      int sk = m.add_state(pre + "tail");
      int sk2 = m.add_state(pre + "tail_mv");
      const Symbol c0 = in_c(0), c1 = in_c(1);

      std::vector<Symbol> content{adv_one};
      m.arc(si, c1, {adv_one}, si, Move::right, {Move::stay});
      for (Symbol g : adv_ends) m.arc(si, c1, {g}, si, Move::right, {Move::stay});
      m.arc(si, c0, {adv_one}, sj, Move::right, {Move::right});
      for (Symbol g : adv_ends) m.arc(si, c0, {g}, m.reject, Move::stay, {Move::stay});
      for (Symbol e : in_ends)
        for (Symbol g : adv_all())
          m.arc(si, e, {g}, m.reject, Move::stay, {Move::stay});

      m.arc(sj, c0, {adv_one}, sj, Move::right, {Move::right});
      for (Symbol g : adv_ends) m.arc(sj, c0, {g}, m.reject, Move::stay, {Move::stay});
      m.arc(sj, c1, {adv_one}, sk2, Move::right, {Move::right});
      for (Symbol g : adv_ends) m.arc(sj, c1, {g}, m.reject, Move::stay, {Move::stay});
      for (Symbol e : in_ends) {
        m.arc(sj, e, {adv_one}, m.reject, Move::stay, {Move::stay});
        for (Symbol g : adv_ends) m.arc(sj, e, {g}, on_accept, Move::stay, {Move::stay});
      }

      for (Symbol s : in_all()) {
        m.arc(sk2, s, {adv_one}, sk, Move::stay, {Move::right});
        for (Symbol g : adv_ends) m.arc(sk2, s, {g}, m.reject, Move::stay, {Move::stay});
      }

      m.arc(sk, c1, {adv_one}, sk2, Move::right, {Move::right});
      for (Symbol g : adv_ends) m.arc(sk, c1, {g}, m.reject, Move::stay, {Move::stay});
      for (Symbol e : in_ends) {
        m.arc(sk, e, {adv_one}, m.reject, Move::stay, {Move::stay});
        for (Symbol g : adv_ends) m.arc(sk, e, {g}, on_accept, Move::stay, {Move::stay});
      }
      return si;
    }

    int lead = m.add_state(pre + "lead");
    int skip = m.add_state(pre + "skip");
    int trail = m.add_state(pre + "trail");
    const Symbol cin = in_c(lvl), cadv = adv_c(lvl), sep = adv_sep(lvl);

    std::vector<Symbol> inner_in_ends = in_ends;
    inner_in_ends.push_back(cin);
    int inner = emit(lvl - 1, inner_in_ends, {cadv, sep}, trail, /*cross_sep=*/lvl - 1 >= 2);

    for (Symbol g : adv_all()) {
      if (g == sep) m.arc(lead, cin, {g}, lead, Move::right, {Move::right});
      else if (g == kRend) m.arc(lead, cin, {g}, m.reject, Move::stay, {Move::stay});
      else m.arc(lead, cin, {g}, skip, Move::right, {Move::right});
    }
    for (Symbol s : in_all()) {
      if (s == cin) continue;
      for (Symbol g : adv_all()) m.arc(lead, s, {g}, inner, Move::stay, {Move::stay});
    }
    for (Symbol s : in_all())
      for (Symbol g : adv_all()) {
        if (g == sep) m.arc(skip, s, {g}, lead, Move::stay, {Move::right});
        else if (g == kRend) m.arc(skip, s, {g}, m.reject, Move::stay, {Move::stay});
        else m.arc(skip, s, {g}, skip, Move::stay, {Move::right});
      }

    // The embedded level below accepts with the advice head just past its
    // selected block; the rest of its advice segment (symbols of lower
    // levels only) may still precede this level's c-run, so the trail walks
    // over those while counting its own c's up to the separator.
    std::vector<Symbol> leftovers{adv_one};
    for (int l = 2; l < lvl; ++l) {
      leftovers.push_back(adv_c(l));
      leftovers.push_back(adv_sep(l));
    }
    m.arc(trail, cin, {cadv}, trail, Move::right, {Move::right});
    for (Symbol g : leftovers) {
      m.arc(trail, cin, {g}, trail, Move::stay, {Move::right});
      for (Symbol e : in_ends) m.arc(trail, e, {g}, trail, Move::stay, {Move::right});
    }
    for (Symbol e : in_ends)
      m.arc(trail, e, {sep}, on_accept, Move::stay,
            {cross_sep ? Move::right : Move::stay});
    return lead;
  }
};

inline Machine l_k(int k) { return LkAssembler(k).build(); }

// Two-way input, real-time quadratic advice. One advice block per pass; the
// two '1' marks in a block flag the position pair that must carry identical
// symbols. Passes alternate direction, turning around on the separators;
// advice exhaustion at a fresh pass means every pair checked out.
inline Machine pal2w() {
  Machine m;
  m.name = "pal2w";
  m.input_mode = HeadMode::two_way;
  m.advice_modes = {HeadMode::real_time};
  m.input_alphabet = Alphabet({"a", "b"});
  m.advice_alphabets = {Alphabet({"0", "1", "#", "r"})};
  const Symbol a = 0, b = 1;
  const Symbol Z = 0, O = 1, H = 2, R = 3;

  int q0 = m.add_state("q0");
  int f0 = m.add_state("f0"), f1a = m.add_state("f1a"), f1b = m.add_state("f1b"),
      f2 = m.add_state("f2");
  int b0 = m.add_state("b0"), b1a = m.add_state("b1a"), b1b = m.add_state("b1b"),
      b2 = m.add_state("b2");
  m.accept = m.add_state("acc");
  m.reject = m.add_state("rej");
  m.start = q0;

  m.arc(q0, kLend, {H}, f0, Move::right, {Move::right});
  m.arc(q0, kLend, {R}, m.reject, Move::right, {Move::right});

  auto pass = [&](int s0, int s1a, int s1b, int s2, Move dir) {
    for (Symbol s : {a, b}) {
      int s1 = s == a ? s1a : s1b;
      m.arc(s0, s, {Z}, s0, dir, {Move::right});
      m.arc(s0, s, {O}, s1, dir, {Move::right});
      m.arc(s0, s, {kRend}, m.accept, Move::stay, {Move::stay});
      for (Symbol t : {a, b}) {
        int from = t == a ? s1a : s1b;
        m.arc(from, s, {Z}, from, dir, {Move::right});
        m.arc(from, s, {O}, s == t ? s2 : m.reject, dir, {Move::right});
      }
      m.arc(s2, s, {Z}, s2, dir, {Move::right});
    }
  };
  pass(f0, f1a, f1b, f2, Move::right);
  pass(b0, b1a, b1b, b2, Move::left);

  m.arc(f0, kRend, {kRend}, m.accept, Move::stay, {Move::stay});  // n = 0
  m.arc(f2, kRend, {H}, b0, Move::left, {Move::right});           // turn right end
  m.arc(b2, kLend, {H}, f0, Move::right, {Move::right});          // turn left end
  m.arc(b0, kLend, {kRend}, m.accept, Move::stay, {Move::stay});
  complete_with_reject(m);
  return m;
}

// One-way input, two one-way advice tapes; recognizes any language. Tape 1
// lists all candidate words with accept/reject markers; tape 2 paces the
// skip to the next candidate.
inline Machine universal2(const Alphabet& sigma) {
  Machine m;
  m.name = "universal2";
  m.input_mode = HeadMode::one_way;
  m.advice_modes = {HeadMode::one_way, HeadMode::one_way};
  m.input_alphabet = sigma;
  std::vector<std::string> t1 = sigma.tokens();
  t1.push_back("A");
  t1.push_back("R");
  m.advice_alphabets = {Alphabet(t1), Alphabet({"A", "R"})};
  const Symbol n1 = (Symbol)sigma.size();  // 'A' on tape 1
  const Symbol r1 = n1 + 1;                // 'R' on tape 1
  const Symbol A2 = 0, R2 = 1;

  int q0 = m.add_state("q0");
  int match = m.add_state("match");
  int skip = m.add_state("skip");
  m.accept = m.add_state("acc");
  m.reject = m.add_state("rej");
  m.start = q0;

  auto t1_all = all_syms(m.advice_alphabets[0]);
  auto t2_all = all_syms(m.advice_alphabets[1]);
  for (Symbol g1 : t1_all)
    for (Symbol g2 : t2_all)
      m.arc(q0, kLend, {g1, g2}, match, Move::right, {Move::stay, Move::stay});

  for (Symbol g2 : t2_all) {
    for (Symbol s = 0; s < (Symbol)sigma.size(); ++s)
      for (Symbol g1 = 0; g1 < (Symbol)sigma.size(); ++g1) {
        if (g1 == s)
          m.arc(match, s, {g1, g2}, match, Move::right, {Move::right, Move::stay});
        else if (g2 != kRend)  // pacing tape exhausted: no next word, reject via fill
          m.arc(match, s, {g1, g2}, skip, Move::stay, {Move::right, Move::right});
      }
    m.arc(match, kRend, {n1, g2}, m.accept, Move::stay, {Move::stay, Move::stay});
    m.arc(match, kRend, {r1, g2}, m.reject, Move::stay, {Move::stay, Move::stay});
  }
  for (Symbol s : all_syms(m.input_alphabet))
    for (Symbol g1 : t1_all) {
      if (g1 == kRend) continue;
      m.arc(skip, s, {g1, R2}, skip, Move::stay, {Move::right, Move::right});
      m.arc(skip, s, {g1, A2}, match, Move::stay, {Move::stay, Move::stay});
    }
  complete_with_reject(m);
  return m;
}

// Two-way input, real-time exponential advice listing every member. Forward
// compare with a one-symbol delay (the advice head cannot pause); on
// mismatch, rewind while the separator blanks tick by.
inline Machine expall(const Alphabet& sigma) {
  Machine m;
  m.name = "expall";
  m.input_mode = HeadMode::two_way;
  m.advice_modes = {HeadMode::real_time};
  m.input_alphabet = sigma;
  std::vector<std::string> adv = sigma.tokens();
  adv.push_back("_");
  m.advice_alphabets = {Alphabet(adv)};
  const Symbol blank = (Symbol)sigma.size();

  int q0 = m.add_state("q0");
  std::vector<int> cmp(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i)
    cmp[i] = m.add_state("cmp_" + sigma.tokens()[i]);
  int cmp_end = m.add_state("cmp_end");
  int rew = m.add_state("rew");
  int wblank = m.add_state("wblank");
  int wword = m.add_state("wword");
  m.accept = m.add_state("acc");
  m.reject = m.add_state("rej");
  m.start = q0;

  for (Symbol g = 0; g < (Symbol)sigma.size(); ++g)
    m.arc(q0, kLend, {g}, cmp[(std::size_t)g], Move::right, {Move::right});
  m.arc(q0, kLend, {blank}, m.accept, Move::right, {Move::right});  // n = 0, empty word listed
  m.arc(q0, kLend, {kRend}, m.reject, Move::stay, {Move::stay});

  for (Symbol t = 0; t < (Symbol)sigma.size(); ++t) {
    for (Symbol s = 0; s < (Symbol)sigma.size(); ++s) {
      if (s == t) {
        for (Symbol g = 0; g < (Symbol)sigma.size(); ++g)
          m.arc(cmp[(std::size_t)t], s, {g}, cmp[(std::size_t)g], Move::right, {Move::right});
        m.arc(cmp[(std::size_t)t], s, {blank}, cmp_end, Move::right, {Move::right});
        m.arc(cmp[(std::size_t)t], s, {kRend}, cmp_end, Move::right, {Move::stay});
      } else {
        for (Symbol g = 0; g <= blank; ++g)
          m.arc(cmp[(std::size_t)t], s, {g}, rew, Move::left, {Move::right});
        m.arc(cmp[(std::size_t)t], s, {kRend}, m.reject, Move::stay, {Move::stay});
      }
    }
  }
  m.arc(cmp_end, kRend, {blank}, m.accept, Move::stay, {Move::right});
  m.arc(cmp_end, kRend, {kRend}, m.accept, Move::stay, {Move::stay});

  for (Symbol s = 0; s < (Symbol)sigma.size(); ++s) {
    for (Symbol g = 0; g <= blank; ++g) m.arc(rew, s, {g}, rew, Move::left, {Move::right});
    m.arc(rew, s, {kRend}, m.reject, Move::stay, {Move::stay});
  }
  for (Symbol g = 0; g < (Symbol)sigma.size(); ++g) {
    m.arc(rew, kLend, {g}, wblank, Move::stay, {Move::right});
    m.arc(wblank, kLend, {g}, wblank, Move::stay, {Move::right});
    m.arc(wword, kLend, {g}, cmp[(std::size_t)g], Move::right, {Move::right});
  }
  m.arc(rew, kLend, {blank}, wword, Move::stay, {Move::right});
  m.arc(rew, kLend, {kRend}, m.reject, Move::stay, {Move::stay});
  m.arc(wblank, kLend, {blank}, wword, Move::stay, {Move::right});
  m.arc(wblank, kLend, {kRend}, m.reject, Move::stay, {Move::stay});
  m.arc(wword, kLend, {blank}, wword, Move::stay, {Move::right});
  m.arc(wword, kLend, {kRend}, m.reject, Move::stay, {Move::stay});
  complete_with_reject(m);
  return m;
}

// Shared displacement core of the two EQUAL3 machines: from scan state
// sc[i], each input symbol moves the advice head 1 / i / i^2 squares.
// `accept_on` lists the advice symbols that may be scanned at input end.
struct Equal3Core {
  Machine* m;
  Symbol one, hash;

  // Returns sc[i] for i = 1..s; mv chains pause the input head.
  std::vector<int> emit(int s, const std::vector<Symbol>& accept_on) {
    const Symbol a = 0, b = 1, c = 2;
    std::vector<int> sc((std::size_t)s + 1, -1);
    for (int i = 1; i <= s; ++i) {
      std::string pre = "i" + std::to_string(i) + ".";
      sc[(std::size_t)i] = m->add_state(pre + "scan");
    }
    for (int i = 1; i <= s; ++i) {
      int scan = sc[(std::size_t)i];
      std::vector<int> mv((std::size_t)i * i, scan);  // mv[r] = state owing r moves
      for (int r = 1; r < i * i; ++r)
        mv[(std::size_t)r] = m->add_state("i" + std::to_string(i) + ".mv" + std::to_string(r));
      auto owed_target = [&](int r) { return r == 0 ? scan : mv[(std::size_t)r]; };

      m->arc(scan, a, {one}, scan, Move::right, {Move::right});
      m->arc(scan, b, {one}, owed_target(i - 1), Move::right, {Move::right});
      m->arc(scan, c, {one}, owed_target(i * i - 1), Move::right, {Move::right});
      for (Symbol s_in : {a, b, c}) {
        m->arc(scan, s_in, {kRend}, m->reject, Move::stay, {Move::stay});
        m->arc(scan, s_in, {hash}, m->reject, Move::stay, {Move::stay});
      }
      for (Symbol g : accept_on)
        m->arc(scan, kRend, {g}, m->accept, Move::stay, {Move::stay});
      m->arc(scan, kRend, {one}, m->reject, Move::stay, {Move::stay});

      for (int r = 1; r < i * i; ++r) {
        int st = mv[(std::size_t)r];
        for (Symbol s_in : {a, b, c, kRend}) {
          m->arc(st, s_in, {one}, owed_target(r - 1), Move::stay, {Move::right});
          m->arc(st, s_in, {kRend}, m->reject, Move::stay, {Move::stay});
          m->arc(st, s_in, {hash}, m->reject, Move::stay, {Move::stay});
        }
      }
    }
    return sc;
  }
};

// Deterministic machine for randomized advice A_i = 1^i # 1^{k(i^2+i+1)}:
// read i off the prefix, then displacement-check against the tail.
inline Machine equal3_rand(int s) {
  if (s < 2) throw Error("equal3-rand requires s >= 2");
  Machine m;
  m.name = "equal3-rand";
  m.input_mode = HeadMode::one_way;
  m.advice_modes = {HeadMode::one_way};
  m.input_alphabet = Alphabet({"a", "b", "c"});
  m.advice_alphabets = {Alphabet({"1", "#", "r"})};
  const Symbol one = 0, hash = 1, rm = 2;

  int q0 = m.add_state("q0");
  std::vector<int> rd((std::size_t)s + 1, -1);
  for (int j = 1; j <= s; ++j) rd[(std::size_t)j] = m.add_state("rd" + std::to_string(j));
  m.accept = m.add_state("acc");
  m.reject = m.add_state("rej");
  m.start = q0;

  Equal3Core core{&m, one, hash};
  std::vector<int> sc = core.emit(s, {kRend});

  m.arc(q0, kLend, {one}, rd[1], Move::right, {Move::right});
  m.arc(q0, kLend, {rm}, m.reject, Move::stay, {Move::stay});
  for (int j = 1; j <= s; ++j)
    for (Symbol s_in : all_syms(m.input_alphabet)) {
      if (j < s) m.arc(rd[(std::size_t)j], s_in, {one}, rd[(std::size_t)j + 1], Move::stay,
                       {Move::right});
      m.arc(rd[(std::size_t)j], s_in, {hash}, sc[(std::size_t)j], Move::stay, {Move::right});
    }
  complete_with_reject(m);
  return m;
}

// Probabilistic machine with the deterministic concatenated advice: toss to
// choose i (a balanced binary cascade when s is a power of two, one s-way
// branch otherwise), walk to the i-th '#', then the same displacement check;
// a block ends at the next '#' or at the advice end.
inline Machine equal3_pfat(int s) {
  if (s < 2) throw Error("equal3-pfat requires s >= 2");
  Machine m;
  m.name = "equal3-pfat";
  m.kind = MachineKind::probabilistic;
  m.input_mode = HeadMode::one_way;
  m.advice_modes = {HeadMode::one_way};
  m.input_alphabet = Alphabet({"a", "b", "c"});
  m.advice_alphabets = {Alphabet({"1", "#", "r"})};
  const Symbol one = 0, hash = 1, rm = 2;

  bool pow2 = (s & (s - 1)) == 0;
  int q0 = m.add_state("q0");
  m.accept = m.add_state("acc");
  m.reject = m.add_state("rej");
  m.start = q0;

  Equal3Core core{&m, one, hash};
  std::vector<int> sc = core.emit(s, {hash, kRend});

  // crossing[i][j]: j separators crossed so far while walking to the i-th.
  std::vector<int> entry((std::size_t)s + 1, -1);
  for (int i = 1; i <= s; ++i) {
    int prev = -1;
    for (int j = 0; j < i; ++j) {
      int st = m.add_state("i" + std::to_string(i) + ".x" + std::to_string(j));
      if (j == 0) entry[(std::size_t)i] = st;
      if (prev >= 0) {
        m.arc(prev, kLend, {one}, prev, Move::stay, {Move::right});
        m.arc(prev, kLend, {hash}, st, Move::stay, {Move::right});
      }
      prev = st;
    }
    // crossing the i-th '#': hand the input head its first move
    int ready = m.add_state("i" + std::to_string(i) + ".go");
    m.arc(prev, kLend, {one}, prev, Move::stay, {Move::right});
    m.arc(prev, kLend, {hash}, ready, Move::stay, {Move::right});
    for (Symbol g : {one, hash, kRend})
      m.arc(ready, kLend, {g}, sc[(std::size_t)i], Move::right, {Move::stay});
  }

  m.arc_choices(q0, kLend, {rm},
                {Choice{Rational(1), m.reject, Move::stay, {Move::stay}}});
  if (pow2) {
    // heap-shaped cascade of fair coins; node v in [1, s)
    std::vector<int> node(2 * (std::size_t)s, -1);
    node[1] = q0;
    for (int v = 2; v < s; ++v) node[(std::size_t)v] = m.add_state("toss" + std::to_string(v));
    for (int v = 1; v < s; ++v) {
      auto child = [&](int w) {
        return w >= s ? entry[(std::size_t)(w - s + 1)] : node[(std::size_t)w];
      };
      m.arc_choices(node[(std::size_t)v], kLend, {hash},
                    {Choice{Rational(1, 2), child(2 * v), Move::stay, {Move::stay}},
                     Choice{Rational(1, 2), child(2 * v + 1), Move::stay, {Move::stay}}});
    }
  } else {
    std::vector<Choice> cs;
    for (int i = 1; i <= s; ++i)
      cs.push_back(Choice{Rational(1, s), entry[(std::size_t)i], Move::stay, {Move::stay}});
    m.arc_choices(q0, kLend, {hash}, std::move(cs));
  }
  complete_with_reject(m);
  return m;
}

}  // namespace builders

inline std::vector<std::string> construction_ids() {
  return {"equal2", "equal",  "l_f",        "l_k",        "pal2w",
          "universal2", "expall", "equal3-rand", "equal3-pfat"};
}

// Builds a construction by id. Parameters: l_k reads k; equal3-* read s;
// l_f reads f; universal2 and expall read the oracle (expall defaults to
// PAL).
inline Construction build(const std::string& id, const AdviceParams& params = {}) {
  AdviceParams p = params;
  if (id == "equal2")
    return {id, builders::equal2(), make_advice("equal2"), lang::equal2()};
  if (id == "equal") return {id, builders::equal(), make_advice("equal"), lang::equal()};
  if (id == "l_f") {
    auto f = resolve_f(p);
    return {id, builders::l_f(), make_advice("l_f", p), lang::l_f(f)};
  }
  if (id == "l_k")
    return {id, builders::l_k(p.k), make_advice("l_k", p), lang::l_k(p.k)};
  if (id == "pal2w") return {id, builders::pal2w(), make_advice("pal2w"), lang::pal()};
  if (id == "universal2") {
    if (!p.oracle) throw Error("universal2 needs a language oracle (members or seed)");
    return {id, builders::universal2(p.oracle->alphabet), make_advice("universal2", p),
            *p.oracle};
  }
  if (id == "expall") {
    if (!p.oracle) p.oracle = std::make_shared<LanguageOracle>(lang::pal());
    return {id, builders::expall(p.oracle->alphabet), make_advice("expall", p), *p.oracle};
  }
  if (id == "equal3-rand")
    return {id, builders::equal3_rand(p.s), make_advice("equal3-rand", p), lang::equal3()};
  if (id == "equal3-pfat")
    return {id, builders::equal3_pfat(p.s), make_advice("equal3-pfat", p), lang::equal3()};
  throw Error("unknown construction '" + id + "'");
}

}  // namespace fat
