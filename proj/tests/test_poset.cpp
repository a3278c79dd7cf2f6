#include <catch_amalgamated.hpp>

#include <random>

#include <subword/poset.hpp>
#include <subword/verify.hpp>

using namespace subword;

namespace {

// Philip Hall: mu(a, b) = sum over chains a = x0 < ... < xk = b of (-1)^k.
std::int64_t hall_mobius(const FinitePoset& p, Element a, Element b) {
  if (a == b) return 1;
  std::int64_t total = 0;
  for (Element x = 0; x < static_cast<Element>(p.size()); ++x)
    if (p.less(a, x) && p.leq(x, b)) total -= hall_mobius(p, x, b);
  return total;
}

FinitePoset with_bottom_and_top(const FinitePoset& q) {
  const auto n = static_cast<Element>(q.size());
  auto names = q.names();
  names.push_back("bottom");
  names.push_back("top");
  return FinitePoset::from_order(names, [&](Element a, Element b) {
    if (a == n || b == n + 1) return true;
    if (a == n + 1 || b == n) return a == b;
    return q.leq(a, b);
  });
}

}  // namespace

TEST_CASE("cover lists are validated", "[poset]") {
  const auto names = numbered_names(3);
  CHECK_THROWS_AS(FinitePoset::from_covers(names, {{0, 3}}), InputError);
  CHECK_THROWS_AS(FinitePoset::from_covers(names, {{1, 1}}), InputError);
  CHECK_THROWS_AS(FinitePoset::from_covers(names, {{0, 1}, {0, 1}}), InputError);
  CHECK_THROWS_AS(FinitePoset::from_covers(names, {{0, 1}, {1, 2}, {2, 0}}), InputError);
  CHECK_THROWS_AS(FinitePoset::from_covers(names, {{0, 1}, {1, 2}, {0, 2}}), InputError);
  CHECK_NOTHROW(FinitePoset::from_covers(names, {{0, 1}, {1, 2}}));
}

TEST_CASE("order predicates must be partial orders", "[poset]") {
  const auto names = numbered_names(3);
  CHECK_THROWS_AS(FinitePoset::from_order(names, [](Element a, Element b) { return a < b; }), InputError);
  CHECK_THROWS_AS(FinitePoset::from_order(names, [](Element, Element) { return true; }), InputError);
  // 0 < 1 and 1 < 2 without 0 < 2.
  CHECK_THROWS_AS(FinitePoset::from_order(names,
                                          [](Element a, Element b) {
                                            return a == b || (a == 0 && b == 1) || (a == 1 && b == 2);
                                          }),
                  InputError);
  const auto p = FinitePoset::from_order(names, [](Element a, Element b) { return a <= b; });
  CHECK(p == chain_poset(3));
}

TEST_CASE("order queries on the built-in posets", "[poset]") {
  const auto f = fig3_poset();
  auto e = [&](const char* n) { return f.element(n); };
  CHECK(f.leq(e("1"), e("9")));
  CHECK(f.leq(e("2"), e("6")));
  CHECK_FALSE(f.leq(e("3"), e("6")));
  CHECK(f.covers(e("6"), e("1")));
  CHECK_FALSE(f.covers(e("9"), e("1")));
  CHECK(f.minimal_elements() == std::vector<Element>{0, 1, 2, 3});
  CHECK(rank_poset(f) == 2);
  CHECK(rank_poset(lambda_poset()) == 1);
  CHECK(rank_poset(antichain_poset(4)) == 0);
  CHECK(rank_element(chain_poset(5), 4) == 4);
  CHECK_THROWS_AS(f.leq(0, 42), InputError);
  CHECK_THROWS_AS(f.element("x"), InputError);
}

TEST_CASE("Möbius function matches the chain-sum oracle", "[poset][mobius]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = random_poset(1 + trial % 7, 0.45, rng);
    for (Element a = 0; a < static_cast<Element>(p.size()); ++a)
      for (Element b = 0; b < static_cast<Element>(p.size()); ++b)
        if (p.leq(a, b)) REQUIRE(mobius(p, a, b) == hall_mobius(p, a, b));
  }
  const auto c = chain_poset(4);
  CHECK(mobius(c, 0, 1) == -1);
  CHECK(mobius(c, 0, 2) == 0);
  CHECK_THROWS_AS(mobius(c, 2, 0), DomainError);
}

TEST_CASE("adjoined bottom", "[poset][mobius]") {
  const AugmentedPoset lam(lambda_poset());
  CHECK(lam.mobius(kZero, 0) == -1);
  CHECK(lam.mobius(kZero, 2) == 1);
  CHECK(lam.mobius(0, 2) == -1);
  CHECK(lam.mobius(2, 2) == 1);
  CHECK(lam.leq(kZero, 1));
  CHECK(lam.covers(0, kZero));
  CHECK_FALSE(lam.covers(2, kZero));
  CHECK(lam.lower_covers(0) == std::vector<Element>{kZero});
  CHECK_THROWS_AS(lam.mobius(2, 0), DomainError);

  const auto f = fig3_poset();
  const AugmentedPoset f0(f);
  auto e = [&](const char* n) { return f.element(n); };
  CHECK(f0.mobius(kZero, e("9")) == 1);
  CHECK(f0.mobius(kZero, e("6")) == 1);
  CHECK(f0.mobius(kZero, e("5")) == 0);
  CHECK(f0.mobius(e("2"), e("9")) == 1);
  CHECK(mobius0(f0, e("1"), e("9")) == 1);
  for (Element a = kZero; a < 9; ++a)
    for (Element b = kZero; b < 9; ++b)
      if (f0.leq(a, b)) CHECK(f0.mobius(a, b) == hall_mobius(f0.extended(), f0.index(a), f0.index(b)));
}

TEST_CASE("natural labelings", "[poset]") {
  const auto f = fig3_poset();
  const auto ell = natural_labeling(f);
  for (Element x = 0; x < 9; ++x) CHECK(ell(x) == x + 1);
  CHECK(ell(kZero) == 0);
  CHECK_THROWS_AS(NaturalLabeling::from_values(f, {1, 2, 3}), InputError);
  CHECK_THROWS_AS(NaturalLabeling::from_values(chain_poset(2), {2, 1}), InputError);
  CHECK_THROWS_AS(NaturalLabeling::from_values(antichain_poset(2), {1, 1}), InputError);
  CHECK_THROWS_AS(NaturalLabeling::from_values(antichain_poset(2), {0, 1}), InputError);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = random_poset(1 + trial % 6, 0.5, rng);
    const auto l = natural_labeling(p);
    for (Element a = 0; a < static_cast<Element>(p.size()); ++a)
      for (Element b = 0; b < static_cast<Element>(p.size()); ++b)
        if (p.less(a, b)) CHECK(l(a) < l(b));
  }
}

TEST_CASE("chain-count formula for mu of Q with bottom and top", "[poset][mobius]") {
  CHECK(mobius_hat_chain_count(FinitePoset{}) == -1);
  CHECK(mobius_hat_chain_count(antichain_poset(3)) == 2);
  CHECK(mobius_hat_chain_count(chain_poset(3)) == 0);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto q = random_poset(trial % 7, 0.4, rng);
    const auto hat = with_bottom_and_top(q);
    const auto n = static_cast<Element>(q.size());
    REQUIRE(mobius_hat_chain_count(q) == mobius(hat, n, n + 1));
  }
}

TEST_CASE("induced subposets", "[poset]") {
  const auto f = fig3_poset();
  const std::vector<Element> sub{0, 4, 8};
  const auto q = f.induced(sub);
  CHECK(q.size() == 3);
  CHECK(q.covers(1, 0));
  CHECK(q.covers(2, 1));
  CHECK_FALSE(q.covers(2, 0));
}

TEST_CASE("built-in poset names", "[poset]") {
  CHECK(builtin_poset("chain:3")->size() == 3);
  CHECK(builtin_poset("antichain:2")->size() == 2);
  CHECK(*builtin_poset("lambda") == lambda_poset(2));
  CHECK(builtin_poset("lambda:3")->size() == 4);
  CHECK(builtin_poset("fig3")->size() == 9);
  CHECK_FALSE(builtin_poset("nope").has_value());
  CHECK_THROWS_AS(builtin_poset("chain:x"), InputError);
  CHECK_THROWS_AS(builtin_poset("chain:0"), InputError);
  CHECK_THROWS_AS(resolve_poset("/no/such/file.json"), InputError);
}

TEST_CASE("poset JSON", "[poset][json]") {
  const auto f = fig3_poset();
  CHECK(poset_from_json(poset_to_json(f)) == f);
  const auto p = poset_from_json(R"({"elements": ["a", "bb", "c"], "covers": [["a", "bb"]]})");
  CHECK(p.leq(0, 1));
  CHECK_FALSE(p.leq(0, 2));
  CHECK_THROWS_AS(poset_from_json("{"), InputError);
  CHECK_THROWS_AS(poset_from_json(R"({"covers": []})"), InputError);
  CHECK_THROWS_AS(poset_from_json(R"({"elements": ["0"]})"), InputError);
  CHECK_THROWS_AS(poset_from_json(R"({"elements": ["a,b"]})"), InputError);
  CHECK_THROWS_AS(poset_from_json(R"({"elements": ["a", "a"]})"), InputError);
  CHECK_THROWS_AS(poset_from_json(R"({"elements": ["a"], "covers": [["a", "z"]]})"), InputError);
  CHECK_THROWS_AS(poset_from_json(R"({"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]})"), InputError);
}
