#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>
#include <set>

#include "fat/advice.hpp"

using namespace fat;

TEST_CASE("equal2 advice: a^{n/2} on even lengths, marker on odd") {
  AdviceFunction h = make_advice("equal2");
  CHECK(h.eval(6) == std::vector<std::string>{"aaa"});
  CHECK(h.eval(0) == std::vector<std::string>{""});
  CHECK(h.eval(5) == std::vector<std::string>{"r"});
  for (std::size_t n = 0; n <= 20; n += 2) CHECK(h.eval(n)[0].size() == n / 2);
}

TEST_CASE("equal advice: a^{2n}") {
  AdviceFunction h = make_advice("equal");
  CHECK(h.eval(3) == std::vector<std::string>{"aaaaaa"});
  for (std::size_t n = 0; n <= 50; ++n) CHECK(h.eval(n)[0].size() == 2 * n);
}

TEST_CASE("l_f advice layout with f = ceil(sqrt(n))") {
  AdviceFunction h = make_advice("l_f");
  CHECK(h.eval(9) == std::vector<std::string>{"##a#aa#aaa#"});
  CHECK(h.eval(0) == std::vector<std::string>{"##"});
  // separators: f+2; block content: 0 + 1 + ... + f
  for (std::size_t n = 0; n <= 30; ++n) {
    std::size_t f = lang::ceil_sqrt(n);
    CHECK(h.eval(n)[0].size() == (f + 2) + f * (f + 1) / 2);
  }
}

TEST_CASE("l_k advice recurrence instances") {
  CHECK(eval_lk_advice(1, 4) == "1111");
  CHECK(eval_lk_advice(1, 5) == "11111");
  // j = 0 term: h_1(2) sep; j = 1 term: h_1(0) c_2 sep
  CHECK(eval_lk_advice(2, 2) == "11#2#");
  CHECK(eval_lk_advice(2, 0) == "#");
  // independent expansion of the rule for k = 3, n = 2:
  // j=0: h_2(2) "%" ; j=1: h_2(0) "3" "%"
  CHECK(eval_lk_advice(3, 2) == "11#2#%#3%");
}

TEST_CASE("l_k advice growth stays within the doubling law") {
  for (int k = 1; k <= 3; ++k) {
    for (std::size_t n = 4; n <= 40; n += 4) {
      double ratio = (double)eval_lk_advice(k, 2 * n).size() /
                     (double)eval_lk_advice(k, n).size();
      CHECK(ratio <= 1.25 * std::pow(2.0, k));
    }
  }
}

TEST_CASE("pal2w advice layout at n=8 and its length law") {
  AdviceFunction h = make_advice("pal2w");
  CHECK(h.eval(8) == std::vector<std::string>{"#10000001#01000010#00100100#00011000#"});
  CHECK(h.eval(0) == std::vector<std::string>{"#"});
  CHECK(h.eval(3) == std::vector<std::string>{"r"});
  for (std::size_t n = 0; n <= 20; n += 2)
    CHECK(h.eval(n)[0].size() == n * n / 2 + n / 2 + 1);
}

TEST_CASE("universal2 advice instantiates the two-tape layout") {
  auto st = [](std::set<std::string> s) {
    return std::make_shared<LanguageOracle>(lang::explicit_set(std::move(s), Alphabet({"a", "b"})));
  };
  auto [t1, t2] = eval_universal2_advice(*st({"ab"}), 2);
  CHECK(t1 == "aaRabAbaRbbR");
  CHECK(t2 == "ARRARRARRARRA");
  auto [e1, e2] = eval_universal2_advice(*st({}), 1);
  CHECK(e1 == "aRbR");
  auto [f1, f2] = eval_universal2_advice(*st({"a", "b"}), 1);
  CHECK(f1 == "aAbA");
  // length laws: (n+1)|Sigma|^n and (n+1)|Sigma|^n + 1
  for (std::size_t n = 0; n <= 6; ++n) {
    auto [x1, x2] = eval_universal2_advice(*st({}), n);
    CHECK(x1.size() == (n + 1) * (1u << n));
    CHECK(x2.size() == (n + 1) * (1u << n) + 1);
  }
}

TEST_CASE("expall advice lists members separated by n+2 blanks") {
  CHECK(eval_expall_advice(lang::pal(), 2) == "aa____bb");
  CHECK(eval_expall_advice(lang::empty_language(), 3) == "");
  CHECK(eval_expall_advice(lang::equal2(), 2) == "ab____ba");
  // n = 0: a language containing the empty word is marked with one blank
  CHECK(eval_expall_advice(lang::pal(), 0) == "_");
  CHECK(eval_expall_advice(lang::empty_language(), 0) == "");
}

TEST_CASE("equal3 randomized advice: uniform A_i family") {
  AdviceFunction h = make_advice("equal3-rand", [] {
    AdviceParams p;
    p.s = 4;
    return p;
  }());
  AdviceDistribution d = h.distribution(3);
  REQUIRE(d.size() == 4);
  Rational total(0);
  for (const auto& [tapes, p] : d) {
    CHECK(p == Rational(1, 4));
    total += p;
  }
  CHECK(total == Rational(1));
  // A_2 = 1^2 # 1^{k(4+2+1)} with k = 1
  CHECK(d[1].first[0] == "11#1111111");
  // bad length: point mass on the reject marker
  AdviceDistribution bad = h.distribution(4);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].first[0] == "r");
  CHECK(bad[0].second == Rational(1));
}

TEST_CASE("equal3 pfat advice concatenates the blocks in order") {
  AdviceFunction h = make_advice("equal3-pfat", [] {
    AdviceParams p;
    p.s = 4;
    return p;
  }());
  // n = 3, k = 1: blocks of 3, 7, 13, 21 ones
  CHECK(h.eval(3) ==
        std::vector<std::string>{"#111#1111111#1111111111111#111111111111111111111"});
  CHECK(h.eval(4) == std::vector<std::string>{"r"});
}

TEST_CASE("deterministic advice evaluators are pure functions of n") {
  for (const char* name : {"equal2", "equal", "l_f", "pal2w", "equal3-pfat"}) {
    AdviceFunction h = make_advice(name);
    for (std::size_t n = 0; n <= 12; ++n) CHECK(h.eval(n) == h.eval(n));
  }
}

TEST_CASE("generator output stays inside the declared advice alphabet") {
  struct Case {
    const char* name;
    std::string allowed;
  };
  for (const Case& c : {Case{"equal2", "ar"}, Case{"equal", "a"}, Case{"l_f", "a#"},
                        Case{"pal2w", "01#r"}, Case{"equal3-pfat", "1#r"}}) {
    AdviceFunction h = make_advice(c.name);
    for (std::size_t n = 0; n <= 15; ++n) {
      std::vector<std::string> tapes = h.eval(n);
      for (char ch : tapes[0]) {
        CAPTURE(c.name);
        CHECK(c.allowed.find(ch) != std::string::npos);
        CHECK(ch != '<');
        CHECK(ch != '>');
      }
    }
  }
  for (int k = 1; k <= 3; ++k) {
    std::string allowed = "123#%";
    for (std::size_t n = 0; n <= 12; ++n)
      for (char ch : eval_lk_advice(k, n)) CHECK(allowed.find(ch) != std::string::npos);
  }
}

TEST_CASE("unknown generators and bad parameters are rejected") {
  CHECK_THROWS_AS(make_advice("nope"), Error);
  AdviceParams p;
  p.k = 0;
  CHECK_THROWS_AS(make_advice("l_k", p), Error);
  AdviceParams q;
  q.s = 1;
  CHECK_THROWS_AS(make_advice("equal3-rand", q), Error);
  CHECK_THROWS_AS(make_advice("universal2"), Error);
}
