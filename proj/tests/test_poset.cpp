#include <doctest.h>

#include "helpers.hpp"
#include "residua/enumerate.hpp"

using namespace residua;
using testutil::fixture;
using testutil::idx;
using testutil::msk;
using testutil::oracle_lower;
using testutil::oracle_upper;

namespace {

RawPoset raw(std::vector<std::string> elements,
             std::vector<std::pair<std::string, std::string>> covers,
             std::vector<std::pair<std::string, std::string>> op) {
  return RawPoset{"test", std::move(elements), std::move(covers), std::move(op)};
}

}  // namespace

TEST_CASE("validate builds the 2-chain with bounds") {
  auto sp = validate(raw({"0", "1"}, {{"0", "1"}}, {{"0", "1"}, {"1", "0"}}));
  CHECK(sp.poset.size() == 2);
  CHECK(sp.poset.bottom == 0);
  CHECK(sp.poset.top == 1);
  CHECK(sp.poset.leq(0, 1));
  CHECK_FALSE(sp.poset.leq(1, 0));
}

TEST_CASE("reflexive self-cover is not a cycle") {
  auto sp = validate(raw({"a"}, {{"a", "a"}}, {{"a", "a"}}));
  CHECK(sp.poset.bottom == 0);
  CHECK(sp.poset.top == 0);
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(validate(raw({"a", "a"}, {}, {})), Error);
  CHECK_THROWS_AS(validate(raw({"a", "b"}, {{"a", "z"}}, {{"a", "a"}, {"b", "b"}})), Error);
  try {
    validate(raw({"a", "b"}, {{"a", "b"}, {"b", "a"}}, {{"a", "a"}, {"b", "b"}}));
    FAIL("expected CycleDetected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CycleDetected);
  }
  try {
    validate(raw({"a", "b"}, {{"a", "b"}}, {{"a", "b"}}));
    FAIL("expected OpNotTotal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OpNotTotal);
  }
}

TEST_CASE("carrier cap is enforced") {
  std::vector<std::string> elements;
  for (int i = 0; i < 5; ++i) elements.push_back("x" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> op;
  for (auto& e : elements) op.emplace_back(e, e);
  try {
    validate(raw(elements, {}, op), 4);
    FAIL("expected CarrierTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CarrierTooLarge);
  }
}

TEST_CASE("fig1 fixture validates with the stated bounds") {
  auto sp = fixture("fig1");
  CHECK(sp.poset.size() == 14);
  CHECK(sp.poset.bottom == idx(sp, "0"));
  CHECK(sp.poset.top == idx(sp, "1"));
  CHECK(sp.poset.leq(idx(sp, "b"), idx(sp, "c'")));
}

TEST_CASE("cones: stated examples") {
  auto chain = fixture("chain2");
  CHECK(chain.poset.lower(msk(chain, {"1"})) == chain.poset.full());
  CHECK(chain.poset.upper(msk(chain, {"0"})) == chain.poset.full());
  CHECK(chain.poset.lower(0) == chain.poset.full());
  CHECK(chain.poset.upper(0) == chain.poset.full());

  auto fig1 = fixture("fig1");
  Mask bc = msk(fig1, {"b'", "c'"});
  CHECK(fig1.poset.lower(bc) == oracle_lower(fig1.poset, bc));

  // b v c does not exist: the common upper bounds have no least element
  Mask ub = fig1.poset.upper(msk(fig1, {"b", "c"}));
  CHECK(ub == oracle_upper(fig1.poset, msk(fig1, {"b", "c"})));
  CHECK(fig1.poset.least_of(ub) == -1);
}

TEST_CASE("image_prime examples") {
  auto fig1 = fixture("fig1");
  CHECK(fig1.op.image(0) == 0);
  CHECK(fig1.op.image(msk(fig1, {"a", "b"})) == msk(fig1, {"a'", "b'"}));
  auto chain = fixture("chain2");
  CHECK(chain.op.image(chain.poset.full()) == chain.poset.full());
}

TEST_CASE("cones agree with the direct-scan oracle on all fixture subsets") {
  for (const char* name : {"chain2", "boole4", "boole8", "o6", "mo2", "m3"}) {
    auto sp = fixture(name);
    const Mask all = sp.poset.full();
    for (Mask s = 0; s <= all; ++s) {
      CHECK(sp.poset.lower(s) == oracle_lower(sp.poset, s));
      CHECK(sp.poset.upper(s) == oracle_upper(sp.poset, s));
    }
  }
  auto fig1 = fixture("fig1");
  auto gen = testutil::rng();
  for (int i = 0; i < 2000; ++i) {
    Mask s = gen() & fig1.poset.full();
    CHECK(fig1.poset.lower(s) == oracle_lower(fig1.poset, s));
    CHECK(fig1.poset.upper(s) == oracle_upper(fig1.poset, s));
  }
}

namespace {

void check_cone_properties(const Poset& p, Mask a, Mask b) {
  // Galois triple composition
  CHECK(p.lower(p.upper(p.lower(a))) == p.lower(a));
  CHECK(p.upper(p.lower(p.upper(a))) == p.upper(a));
  // antitonicity
  if (subseteq(a, b)) {
    CHECK(subseteq(p.lower(b), p.lower(a)));
    CHECK(subseteq(p.upper(b), p.upper(a)));
  }
  // union law
  CHECK(p.lower(a | b) == (p.lower(a) & p.lower(b)));
  CHECK(p.upper(a | b) == (p.upper(a) & p.upper(b)));
  // downset/upset shape
  Mask la = p.lower(a);
  for_each_bit(la, [&](int q) { CHECK(subseteq(p.down[q], la)); });
  Mask ua = p.upper(a);
  for_each_bit(ua, [&](int q) { CHECK(subseteq(p.up[q], ua)); });
}

void check_order_embedding(const Poset& p) {
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      bool le = p.leq(x, y);
      CHECK(le == subseteq(p.down[x], p.down[y]));
      CHECK(le == subseteq(p.up[y], p.up[x]));
    }
}

}  // namespace

TEST_CASE("cone calculus properties on fixtures") {
  for (const char* name : {"chain2", "boole4", "boole8", "o6", "mo2", "m3"}) {
    auto sp = fixture(name);
    const Mask all = sp.poset.full();
    for (Mask a = 0; a <= all; ++a)
      for (Mask b = 0; b <= all; ++b) check_cone_properties(sp.poset, a, b);
    check_order_embedding(sp.poset);
  }
  auto fig1 = fixture("fig1");
  check_order_embedding(fig1.poset);
  auto gen = testutil::rng(999);
  for (int i = 0; i < 3000; ++i) {
    Mask a = gen() & fig1.poset.full();
    Mask b = gen() & fig1.poset.full();
    check_cone_properties(fig1.poset, a, b);
  }
}

TEST_CASE("cone calculus properties on all enumerated posets up to size 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Poset& p : enumerate_bounded_posets(n)) {
      const Mask all = p.full();
      for (Mask a = 0; a <= all; ++a)
        for (Mask b = 0; b <= all; ++b) check_cone_properties(p, a, b);
      check_order_embedding(p);
    }
  }
}

TEST_CASE("antitone involution conjugates the cones") {
  // L(A') = (U(A))' and U(A') = (L(A))' whenever ' is an antitone involution
  for (const char* name : {"chain2", "boole4", "boole8", "o6", "mo2", "fig1"}) {
    auto sp = fixture(name);
    const Poset& p = sp.poset;
    auto gen = testutil::rng(7);
    const int trials = p.size() <= 8 ? 0 : 4000;
    auto check_one = [&](Mask a) {
      CHECK(p.lower(sp.op.image(a)) == sp.op.image(p.upper(a)));
      CHECK(p.upper(sp.op.image(a)) == sp.op.image(p.lower(a)));
    };
    if (trials == 0) {
      for (Mask a = 0; a <= p.full(); ++a) check_one(a);
    } else {
      for (int i = 0; i < trials; ++i) check_one(gen() & p.full());
    }
  }
}

TEST_CASE("poset json round-trip") {
  auto fig1 = fixture("fig1");
  auto back = validate(parse_poset_json(poset_to_json(fig1)));
  CHECK(back.poset.elements == fig1.poset.elements);
  CHECK(back.poset.up == fig1.poset.up);
  CHECK(back.op.map == fig1.op.map);
}
