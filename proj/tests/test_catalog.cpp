#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <set>

#include "fat/catalog.hpp"
#include "fat/specialize.hpp"
#include "fat/sweep.hpp"

using namespace fat;

namespace {

AdviceParams with_oracle(LanguageOracle o) {
  AdviceParams p;
  p.oracle = std::make_shared<LanguageOracle>(std::move(o));
  return p;
}

AdviceParams with_s(int s) {
  AdviceParams p;
  p.s = s;
  return p;
}

AdviceParams with_k(int k) {
  AdviceParams p;
  p.k = k;
  return p;
}

Verdict run_with_paired_advice(const Construction& c, std::string_view input) {
  return Runner(c.machine).run(input, c.advice.eval(input.size())).verdict;
}

}  // namespace

TEST_CASE("every catalog machine validates clean") {
  for (const std::string& id : construction_ids()) {
    CAPTURE(id);
    AdviceParams p;
    if (id == "universal2") p = with_oracle(lang::seeded_random(11));
    if (id == "l_k") p.k = 2;
    Construction c = build(id, p);
    ValidationReport rep = validate_machine(c.machine);
    CHECK_MESSAGE(rep.ok(), rep.to_string());
  }
}

TEST_CASE("head-mode profiles match the constructions") {
  CHECK(build("equal2").machine.input_mode == HeadMode::real_time);
  CHECK(build("equal2").machine.advice_modes[0] == HeadMode::one_way);
  CHECK(build("equal").machine.input_mode == HeadMode::one_way);
  CHECK(build("equal").machine.advice_modes[0] == HeadMode::real_time);
  CHECK(build("l_f").machine.input_mode == HeadMode::one_way);
  CHECK(build("l_f").machine.advice_modes[0] == HeadMode::one_way);
  CHECK(build("l_k", with_k(2)).machine.input_mode == HeadMode::one_way);
  CHECK(build("l_k", with_k(2)).machine.advice_modes[0] == HeadMode::one_way);
  CHECK(build("pal2w").machine.input_mode == HeadMode::two_way);
  CHECK(build("pal2w").machine.advice_modes[0] == HeadMode::real_time);
  Construction u = build("universal2", with_oracle(lang::empty_language()));
  CHECK(u.machine.input_mode == HeadMode::one_way);
  REQUIRE(u.machine.tape_count() == 2);
  CHECK(u.machine.advice_modes[0] == HeadMode::one_way);
  CHECK(u.machine.advice_modes[1] == HeadMode::one_way);
  CHECK(build("expall").machine.input_mode == HeadMode::two_way);
  CHECK(build("expall").machine.advice_modes[0] == HeadMode::real_time);
  CHECK(build("equal3-rand").machine.kind == MachineKind::deterministic);
  CHECK(build("equal3-pfat").machine.kind == MachineKind::probabilistic);
}

TEST_CASE("machine size does not depend on anything but the parameters") {
  CHECK(build("equal2").machine == build("equal2").machine);
  CHECK(build("pal2w").machine == build("pal2w").machine);
  CHECK(build("l_k", with_k(3)).machine == build("l_k", with_k(3)).machine);
}

TEST_CASE("equal2 spot checks") {
  Construction c = build("equal2");
  CHECK(run_with_paired_advice(c, "ab") == Verdict::accept);
  CHECK(run_with_paired_advice(c, "bb") == Verdict::reject);
  CHECK(run_with_paired_advice(c, "") == Verdict::accept);
  CHECK(run_with_paired_advice(c, "aab") == Verdict::reject);  // odd length
}

TEST_CASE("equal spot checks") {
  Construction c = build("equal");
  Runner r(c.machine);
  CHECK(r.run("abc", {"aaaaaa"}).verdict == Verdict::accept);
  CHECK(r.run("ccc", {"aaaaaa"}).verdict == Verdict::accept);
  CHECK(r.run("aab", {"aaaaaa"}).verdict == Verdict::reject);
}

TEST_CASE("l_f spot checks") {
  Construction c = build("l_f");
  Runner r(c.machine);
  CHECK(r.run("abc", {"##a#aa#"}).verdict == Verdict::accept);
  CHECK(run_with_paired_advice(c, "aabcc") == Verdict::accept);
  CHECK(run_with_paired_advice(c, "abcc") == Verdict::reject);
  CHECK(run_with_paired_advice(c, "") == Verdict::accept);
  CHECK(run_with_paired_advice(c, "b") == Verdict::accept);
  CHECK(run_with_paired_advice(c, "cba") == Verdict::reject);
}

TEST_CASE("l_k spot checks at k = 1 and k = 2") {
  Construction c1 = build("l_k", with_k(1));
  Runner r1(c1.machine);
  CHECK(r1.run("101", {"111"}).verdict == Verdict::accept);
  CHECK(run_with_paired_advice(c1, "0") == Verdict::accept);
  CHECK(run_with_paired_advice(c1, "10") == Verdict::reject);
  CHECK(run_with_paired_advice(c1, "") == Verdict::reject);

  Construction c2 = build("l_k", with_k(2));
  CHECK(run_with_paired_advice(c2, "21012") == Verdict::accept);
  CHECK(run_with_paired_advice(c2, "2022") == Verdict::reject);
  CHECK(run_with_paired_advice(c2, "202") == Verdict::accept);
  CHECK(run_with_paired_advice(c2, "0") == Verdict::accept);
}

TEST_CASE("pal2w spot checks") {
  Construction c = build("pal2w");
  CHECK(run_with_paired_advice(c, "abba") == Verdict::accept);
  CHECK(run_with_paired_advice(c, "abab") == Verdict::reject);
  CHECK(run_with_paired_advice(c, "") == Verdict::accept);
  CHECK(run_with_paired_advice(c, "aba") == Verdict::reject);  // odd length
}

TEST_CASE("universal2 spot checks") {
  Construction c = build("universal2",
                         with_oracle(lang::explicit_set({"ab"}, Alphabet({"a", "b"}))));
  CHECK(run_with_paired_advice(c, "ab") == Verdict::accept);
  CHECK(run_with_paired_advice(c, "ba") == Verdict::reject);

  Construction e = build("universal2", with_oracle(lang::empty_language()));
  CHECK(run_with_paired_advice(e, "a") == Verdict::reject);
  CHECK(run_with_paired_advice(e, "") == Verdict::reject);

  Construction f = build("universal2", with_oracle(lang::full_language()));
  CHECK(run_with_paired_advice(f, "b") == Verdict::accept);
  CHECK(run_with_paired_advice(f, "") == Verdict::accept);
}

TEST_CASE("expall spot checks") {
  Construction c = build("expall");  // PAL oracle by default
  CHECK(run_with_paired_advice(c, "abba") == Verdict::accept);
  CHECK(run_with_paired_advice(c, "abab") == Verdict::reject);
  CHECK(run_with_paired_advice(c, "") == Verdict::accept);
  Construction e = build("expall", with_oracle(lang::empty_language()));
  CHECK(run_with_paired_advice(e, "a") == Verdict::reject);
}

TEST_CASE("oracle membership registry") {
  CHECK(oracle_membership("equal3", "cab"));
  CHECK(oracle_membership("l_2", "0"));
  CHECK_FALSE(oracle_membership("pal", "aba"));
  CHECK_THROWS_AS(oracle_membership("pal", "xyz"), Error);
  CHECK_THROWS_AS(make_oracle("nope"), Error);
}

TEST_CASE("small sweeps agree with the oracles") {
  struct Case {
    std::string id;
    AdviceParams p;
    std::size_t n_max;
  };
  std::vector<Case> cases = {
      {"equal2", {}, 8},
      {"equal", {}, 6},
      {"l_f", {}, 7},
      {"l_k", with_k(1), 7},
      {"l_k", with_k(2), 6},
      {"pal2w", {}, 8},
      {"expall", {}, 6},
      {"universal2", with_oracle(lang::seeded_random(3)), 5},
  };
  for (auto&[id, p, n_max] : cases) {
    CAPTURE(id);
    Construction c = build(id, p);
    SweepReport rep = run_language_sweep(c.machine, c.advice, c.oracle, n_max);
    CHECK_MESSAGE(rep.mismatches == 0,
                  id << " first mismatch: "
                     << (rep.first ? rep.first->input : std::string("?")));
  }
}

TEST_CASE("specialize_with_advice hard-wires equal2 advice") {
  Construction c = build("equal2");
  Machine sp = specialize_with_advice(c.machine, {"aa"});
  CHECK(validate_machine(sp).ok());
  CHECK(sp.tape_count() == 1);
  CHECK(sp.advice_alphabets[0].size() == 0);
  Runner r(sp);
  CHECK(r.run("abab", {""}).verdict == Verdict::accept);
  CHECK(r.run("aaaa", {""}).verdict == Verdict::reject);
  // all advice heads pinned: every transition stays on the empty tape
  for (const auto& [key, choices] : sp.transitions)
    for (const Choice& ch : choices) CHECK(ch.advice_moves[0] == Move::stay);
}

TEST_CASE("specializing with empty advice pins the head to the end marker") {
  Construction c = build("equal2");
  Machine sp = specialize_with_advice(c.machine, {""});
  Runner orig(c.machine), hardwired(sp);
  for (std::string input : {std::string(""), std::string("a"), std::string("ab"),
                            std::string("bb"), std::string("abba")}) {
    CHECK(hardwired.run(input, {""}).verdict == orig.run(input, {""}).verdict);
  }
}

TEST_CASE("specialization equivalence on sampled lengths") {
  struct Case {
    std::string id;
    AdviceParams p;
    std::vector<std::size_t> lengths;
  };
  std::vector<Case> cases = {
      {"equal2", {}, {4, 6}},
      {"pal2w", {}, {4, 6}},
      {"equal", {}, {3, 4}},
      {"l_f", {}, {3, 4}},
      {"l_k", with_k(1), {3, 4}},
      {"expall", {}, {2, 3}},
      {"universal2", with_oracle(lang::seeded_random(9)), {2, 3}},
  };
  for (auto& [id, p, lengths] : cases) {
    CAPTURE(id);
    Construction c = build(id, p);
    for (std::size_t n : lengths) {
      std::vector<std::string> advice = c.advice.eval(n);
      Machine sp = specialize_with_advice(c.machine, advice);
      CHECK(validate_machine(sp).ok());
      Runner orig(c.machine), hardwired(sp);
      std::size_t sigma = c.machine.input_alphabet.size();
      std::vector<std::string> no_advice{""};
      for (std::uint64_t idx = 0; idx < detail::pow_u64(sigma, n); ++idx) {
        Word w = detail::word_at(sigma, n, idx);
        std::string text = c.machine.input_alphabet.decode(w);
        CHECK(hardwired.run(text, no_advice).verdict == orig.run(text, advice).verdict);
      }
    }
  }
}

TEST_CASE("specialize rejects probabilistic machines and foreign symbols") {
  Construction pf = build("equal3-pfat");
  CHECK_THROWS_AS(specialize_with_advice(pf.machine, {"#"}), Error);
  Construction c = build("equal2");
  CHECK_THROWS_AS(specialize_with_advice(c.machine, {"zz"}), Error);
  CHECK_THROWS_AS(specialize_with_advice(c.machine, {"a", "a"}), Error);
}
