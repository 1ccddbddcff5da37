#include <doctest.h>

#include "helpers.hpp"
#include "residua/classify.hpp"
#include "residua/enumerate.hpp"
#include "residua/generalized.hpp"
#include "residua/residuation.hpp"

using namespace residua;
using testutil::fixture;
using testutil::idx;
using testutil::msk;
using testutil::oracle_lower;
using testutil::oracle_upper;

TEST_CASE("hand evaluation on 2^2: A empty, B={a}") {
  auto sp = fixture("boole4");
  auto t = GeneralizedTables::build(sp);
  Mask b = msk(sp, {"a"});
  // L(B) = {0,a}, B' = {a'}, U(L(B),B') = {1}, L({1}) = P
  CHECK(t.L[b] == msk(sp, {"0", "a"}));
  CHECK(t.primed[b] == msk(sp, {"a'"}));
  CHECK(t.U[t.L[b] | t.primed[b]] == msk(sp, {"1"}));
  CHECK(t.L[t.U[t.L[b] | t.primed[b]]] == sp.poset.full());
}

TEST_CASE("subset tables match the direct-scan oracle") {
  for (const char* name : {"chain2", "boole4", "o6", "mo2", "m3", "boole8"}) {
    auto sp = fixture(name);
    auto t = GeneralizedTables::build(sp);
    for (Mask s = 0; s <= sp.poset.full(); ++s) {
      CHECK(t.L[s] == oracle_lower(sp.poset, s));
      CHECK(t.U[s] == oracle_upper(sp.poset, s));
      CHECK(t.primed[s] == sp.op.image(s));
    }
  }
}

namespace {

// replay a subset-pair witness through the naive direct-scan oracle
bool replay_11(const StructuredPoset& sp, const GenWitness& w) {
  Mask a = w.assignment[0].second, b = w.assignment[1].second;
  Mask rhs = oracle_lower(
      sp.poset, oracle_upper(sp.poset, oracle_lower(sp.poset, a | b) | sp.op.image(b)));
  return !subseteq(oracle_lower(sp.poset, a), rhs);
}

bool replay_12(const StructuredPoset& sp, const GenWitness& w) {
  Mask a = w.assignment[0].second, b = w.assignment[1].second;
  Mask lhs =
      oracle_lower(sp.poset, oracle_upper(sp.poset, a | sp.op.image(b)) | b);
  return !subseteq(lhs, oracle_lower(sp.poset, a));
}

}  // namespace

TEST_CASE("conditions (11) and (12) on fixtures") {
  // frozen from the exhaustive oracle runs: (11) holds on the small boolean
  // fixtures, while (12) fails on every nontrivial carrier because at B = {}
  // it reads L(U(A)) subset L(A), already violated by A = {0,1}
  for (const char* name : {"chain2", "boole4", "boole8"}) {
    auto sp = fixture(name);
    auto t = GeneralizedTables::build(sp);
    CHECK(check_condition_11(t).holds);
    GenVerdict v12 = check_condition_12(t);
    CHECK_FALSE(v12.holds);
    REQUIRE(v12.witness.has_value());
    CHECK(replay_12(sp, *v12.witness));
  }
  // fig1 fails (11) even at singletons: the singleton restriction is
  // condition (7), which fig1 does not satisfy
  auto fig1 = fixture("fig1");
  auto t = GeneralizedTables::build(fig1);
  GenVerdict v11 = check_condition_11(t);
  CHECK_FALSE(v11.holds);
  REQUIRE(v11.witness.has_value());
  CHECK(replay_11(fig1, *v11.witness));
  CHECK_FALSE(check_condition(fig1, 7).holds);
  GenVerdict v12 = check_condition_12(t);
  CHECK_FALSE(v12.holds);
  REQUIRE(v12.witness.has_value());
  CHECK(replay_12(fig1, *v12.witness));
}

TEST_CASE("the one-element structure is generalized residuated") {
  auto sp = validate(RawPoset{"point", {"0"}, {}, {{"0", "0"}}});
  auto t = GeneralizedTables::build(sp);
  CHECK(check_condition_11(t).holds);
  CHECK(check_condition_12(t).holds);
  CHECK(verify_corollary2(sp, t).residuated());
}

TEST_CASE("singleton restriction of (11),(12) is exactly (7),(8)") {
  for (const char* name : {"chain2", "boole4", "o6", "mo2", "m3", "fig1"}) {
    auto sp = fixture(name);
    auto t = GeneralizedTables::build(sp);
    const Poset& p = sp.poset;
    bool r11 = true, r12 = true;
    for (int x = 0; x < p.size() && (r11 || r12); ++x)
      for (int y = 0; y < p.size(); ++y) {
        Mask a = bit(x), b = bit(y);
        if (!subseteq(t.L[a], t.L[t.U[t.L[a | b] | t.primed[b]]])) r11 = false;
        if (!subseteq(t.L[t.U[a | t.primed[b]] | b], t.L[a])) r12 = false;
      }
    CHECK(r11 == check_condition(sp, 7).holds);
    CHECK(r12 == check_condition(sp, 8).holds);
  }
}

TEST_CASE("singleton subset operators agree with the meet scheme") {
  for (const char* name : {"boole4", "o6", "fig1"}) {
    auto sp = fixture(name);
    auto t = GeneralizedTables::build(sp);
    auto ot = build_operators(sp, Scheme::meet);
    for (int x = 0; x < sp.poset.size(); ++x)
      for (int y = 0; y < sp.poset.size(); ++y) {
        CHECK(t.m(bit(x), bit(y)) == ot.m(x, y));
        CHECK(t.r(bit(x), bit(y)) == ot.r(x, y));
      }
  }
}

TEST_CASE("generalized adjointness on 2^2, both directions and methods") {
  auto sp = fixture("boole4");
  auto t = GeneralizedTables::build(sp);
  // (15) holds, matching (11); (16) fails, matching (12) — both paths agree
  GenVerdict d15 = check_generalized_adjointness(t, 15);
  GenVerdict d16 = check_generalized_adjointness(t, 16);
  CHECK(d15.holds);
  CHECK_FALSE(d16.holds);
  REQUIRE(d16.witness.has_value());
  auto red = theorem3_reduction(t);
  CHECK(red.dir15.holds);
  CHECK_FALSE(red.dir16.holds);
}

TEST_CASE("dual-path agreement and pruning soundness up to size 4") {
  for (int n = 1; n <= 4; ++n) {
    enumerate_structured({n, {}, true}, [&](const StructuredPoset& sp) {
      auto t = GeneralizedTables::build(sp);
      auto red = theorem3_reduction(t);
      for (int dir : {15, 16}) {
        GenVerdict pruned = check_generalized_adjointness(t, dir, kDefaultTripleCap, 1, true);
        GenVerdict direct = check_generalized_adjointness(t, dir, kDefaultTripleCap, 1, false);
        CHECK(pruned.holds == direct.holds);
        const GenVerdict& r = dir == 15 ? red.dir15 : red.dir16;
        CHECK(direct.holds == r.holds);
      }
      return true;
    });
  }
}

TEST_CASE("caps are explicit errors") {
  auto fig1 = fixture("fig1");
  try {
    GeneralizedTables::build(fig1, 10);
    FAIL("expected CarrierTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CarrierTooLarge);
  }
  auto t = GeneralizedTables::build(fig1);  // 14 <= default pair cap
  try {
    check_generalized_adjointness(t, 15);  // 14 > default triple cap
    FAIL("expected CarrierTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CarrierTooLarge);
  }
}

TEST_CASE("corollary 2 verdicts") {
  // the singleton unit/zero laws and commutativity hold on the boolean
  // fixtures, but (12) does not, so none of them is generalized residuated
  for (const char* name : {"chain2", "boole4", "boole8"}) {
    auto sp = fixture(name);
    auto t = GeneralizedTables::build(sp);
    auto rep = verify_corollary2(sp, t);
    CHECK(rep.cond11.holds);
    CHECK_FALSE(rep.cond12.holds);
    CHECK(rep.unit_singleton.holds);
    CHECK(rep.zero_singleton.holds);
    CHECK(rep.commutative.holds);
    CHECK_FALSE(rep.residuated());
  }
}

TEST_CASE("a condition-(11) violator is not generalized residuated") {
  // hunt a violator with the enumerator, then confirm (15) fails too
  bool found = false;
  for (int n = 1; n <= 5 && !found; ++n) {
    enumerate_structured({n, {}, true}, [&](const StructuredPoset& sp) {
      auto t = GeneralizedTables::build(sp);
      if (!check_condition_11(t).holds) {
        found = true;
        CHECK_FALSE(check_generalized_adjointness(t, 15).holds);
        auto rep = verify_corollary2(sp, t);
        CHECK_FALSE(rep.residuated());
        REQUIRE(rep.cond11.witness.has_value());
        return false;
      }
      return true;
    });
  }
  CHECK(found);
}
