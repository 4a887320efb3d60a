#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "fat/stochastic.hpp"

using namespace fat;

namespace {

// Independent oracle for the EQUAL3 constructions: the machine built for
// branch i accepts w iff |w|_a + |w|_b i + |w|_c i^2 = k(i^2 + i + 1), so the
// acceptance probability is the number of agreeing i in {1..s} over s.
Rational expected_accept(const std::string& w, int s) {
  if (w.size() % 3 != 0) return Rational(0);
  long long k = (long long)w.size() / 3;
  long long na = 0, nb = 0, nc = 0;
  for (char ch : w) {
    if (ch == 'a') ++na;
    if (ch == 'b') ++nb;
    if (ch == 'c') ++nc;
  }
  long long hits = 0;
  for (long long i = 1; i <= s; ++i)
    if (na + nb * i + nc * i * i == k * (i * i + i + 1)) ++hits;
  return Rational(hits, s);
}

AdviceParams with_s(int s) {
  AdviceParams p;
  p.s = s;
  return p;
}

}  // namespace

TEST_CASE("the root-counting oracle itself behaves") {
  // members agree for every i; the quadratic has at most 2 roots otherwise
  CHECK(expected_accept("abc", 4) == Rational(1));
  CHECK(expected_accept("", 4) == Rational(1));
  for (int s : {2, 4, 8})
    for (std::string w : {std::string("aab"), std::string("bbb"), std::string("acc")})
      CHECK(expected_accept(w, s) <= Rational(2, s));
}

TEST_CASE("pfat acceptance on pinned instances") {
  Construction c = build("equal3-pfat", with_s(4));
  StochasticOptions strict;
  strict.conservation_check = true;
  auto p = [&](std::string_view in) {
    return acceptance_probability_pfat(c.machine, in, c.advice.eval(in.size()), strict);
  };
  CHECK(p("abc").accept == Rational(1));
  CHECK(p("aab").accept == Rational(1, 4));
  CHECK(p("abca").accept == Rational(0));
  CHECK(p("abca").reject == Rational(1));
  CHECK(p("aab").unresolved == Rational(0));
}

TEST_CASE("randomized-advice acceptance on pinned instances") {
  Construction c = build("equal3-rand", with_s(4));
  auto p = [&](std::string_view in) {
    return acceptance_probability_randomized_advice(c.machine, in, c.advice);
  };
  CHECK(p("abc").accept == Rational(1));
  CHECK(p("aab").accept == Rational(1, 4));

  Construction c8 = build("equal3-rand", with_s(8));
  CHECK(acceptance_probability_randomized_advice(c8.machine, "bbb", c8.advice).accept ==
        Rational(1, 8));
  Construction p8 = build("equal3-pfat", with_s(8));
  CHECK(acceptance_probability_pfat(p8.machine, "bbb", p8.advice.eval(3)).accept ==
        Rational(1, 8));
}

TEST_CASE("both constructions equal the root-counting oracle exhaustively") {
  for (int s : {2, 3, 4, 5, 8}) {
    Construction rand_c = build("equal3-rand", with_s(s));
    Construction pfat_c = build("equal3-pfat", with_s(s));
    std::size_t sigma = 3;
    for (std::size_t n = 0; n <= 6; ++n) {
      for (std::uint64_t idx = 0; idx < detail::pow_u64(sigma, n); ++idx) {
        std::string w =
            rand_c.machine.input_alphabet.decode(detail::word_at(sigma, n, idx));
        Rational want = expected_accept(w, s);
        AcceptanceResult pr = acceptance_probability(rand_c, w);
        AcceptanceResult pp = acceptance_probability(pfat_c, w);
        CAPTURE(w);
        CAPTURE(s);
        CHECK(pr.accept == want);
        CHECK(pp.accept == want);
        CHECK(pr.accept == pp.accept);
        CHECK(pr.accept + pr.reject + pr.unresolved == Rational(1));
        CHECK(pp.accept + pp.reject + pp.unresolved == Rational(1));
      }
    }
  }
}

TEST_CASE("per-step conservation holds with the check enabled") {
  Construction c = build("equal3-pfat", with_s(5));  // non-power-of-two branch
  StochasticOptions strict;
  strict.conservation_check = true;
  for (std::string w : {std::string(""), std::string("abc"), std::string("cba"),
                        std::string("aabbcc"), std::string("ab")}) {
    AcceptanceResult r =
        acceptance_probability_pfat(c.machine, w, c.advice.eval(w.size()), strict);
    CHECK(r.accept + r.reject + r.unresolved == Rational(1));
  }
}

TEST_CASE("non-halting probabilistic mass is reported as unresolved") {
  // q0 flips a fair coin forever until it accepts; the step bound
  // |Q| (n+2) (m+1) = 3*2*1 = 6 cuts the geometric series.
  Machine m;
  m.name = "geom";
  m.kind = MachineKind::probabilistic;
  m.input_mode = HeadMode::one_way;
  m.advice_modes = {HeadMode::one_way};
  m.input_alphabet = Alphabet({"a"});
  m.advice_alphabets = {Alphabet({"x"})};
  int q0 = m.add_state("q0");
  m.accept = m.add_state("acc");
  m.reject = m.add_state("rej");
  m.start = q0;
  m.arc_choices(q0, kLend, {kRend},
                {Choice{Rational(1, 2), q0, Move::stay, {Move::stay}},
                 Choice{Rational(1, 2), m.accept, Move::stay, {Move::stay}}});
  REQUIRE(validate_machine(m).ok());
  AcceptanceResult r = acceptance_probability_pfat(m, std::string_view(""), {""});
  CHECK(r.unresolved == Rational(1, 64));
  CHECK(r.accept == Rational(63, 64));
  CHECK(r.reject == Rational(0));
}

TEST_CASE("undefined key reachable with positive probability is an error") {
  Machine m;
  m.kind = MachineKind::probabilistic;
  m.input_mode = HeadMode::one_way;
  m.advice_modes = {HeadMode::one_way};
  m.input_alphabet = Alphabet({"a"});
  m.advice_alphabets = {Alphabet({"x"})};
  int q0 = m.add_state("q0");
  int dead = m.add_state("dead");
  m.accept = m.add_state("acc");
  m.reject = m.add_state("rej");
  m.start = q0;
  m.arc_choices(q0, kLend, {kRend},
                {Choice{Rational(1, 2), m.accept, Move::stay, {Move::stay}},
                 Choice{Rational(1, 2), dead, Move::stay, {Move::stay}}});
  try {
    acceptance_probability_pfat(m, std::string_view(""), {""});
    FAIL("expected error");
  } catch (const Error& e) {
    std::string what = e.what();
    CHECK(what.find("incomplete machine") != std::string::npos);
    CHECK(what.find("dead") != std::string::npos);
    CHECK(what.find("1/2") != std::string::npos);
  }
}

TEST_CASE("check_error_bound small instances") {
  BoundReport r = check_error_bound("equal3-rand", 4, 6);
  CHECK(r.ok());
  CHECK(r.bound == Rational(1, 2));
  CHECK(r.max_nonmember_accept <= Rational(1, 2));
  CHECK(r.members + r.nonmembers == 1 + 3 + 9 + 27 + 81 + 243 + 729);

  BoundReport p = check_error_bound("equal3-pfat", 8, 4);
  CHECK(p.ok());
  CHECK(p.max_nonmember_accept <= Rational(1, 4));

  // s = 2: the bound 2/s = 1 holds vacuously
  BoundReport v = check_error_bound("equal3-rand", 2, 3);
  CHECK(v.ok());
  CHECK(v.bound == Rational(1));

  CHECK_THROWS_AS(check_error_bound("equal2", 4, 3), Error);
  CHECK_THROWS_AS(check_error_bound("equal3-rand", 1, 3), Error);
}

TEST_CASE("acceptance_probability dispatches on construction kind") {
  AcceptanceResult det = acceptance_probability(build("equal2"), "ab");
  CHECK(det.accept == Rational(1));
  AcceptanceResult rej = acceptance_probability(build("equal2"), "aa");
  CHECK(rej.reject == Rational(1));
}
