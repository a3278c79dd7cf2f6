#include <catch_amalgamated.hpp>

#include <subword/verify.hpp>

using namespace subword;

TEST_CASE("random posets are deterministic and valid", "[verify]") {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 10; ++i) {
    const auto p = random_poset(5, 0.4, a);
    CHECK(p == random_poset(5, 0.4, b));
    CHECK(p.size() == 5);
    for (Element x = 0; x < 5; ++x)
      for (Element y = 0; y < 5; ++y)
        if (p.less(x, y)) CHECK_FALSE(p.leq(y, x));
  }
}

TEST_CASE("enumerating natural labelings", "[verify]") {
  CHECK(all_natural_labelings(antichain_poset(3)).size() == 6);
  CHECK(all_natural_labelings(chain_poset(3)).size() == 1);
  CHECK(all_natural_labelings(lambda_poset()).size() == 2);
  CHECK(all_natural_labelings(sample_forest()).size() == 15);
}

TEST_CASE("comparable pairs", "[verify]") {
  const auto pairs = comparable_pairs(chain_poset(2), 1);
  // (empty, empty), (empty, 1), (empty, 2), (1, 1), (1, 2), (2, 2)
  CHECK(pairs.size() == 6);
  for (const auto& [u, w] : pairs) CHECK(is_leq_words(chain_poset(2), u, w));
}

TEST_CASE("a small verification run passes", "[verify]") {
  VerifyConfig cfg;
  cfg.random_posets = 4;
  cfg.max_w = 2;
  const auto results = run_verification(cfg);
  CHECK(results.size() == 5);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.counterexample);
    CHECK(r.passed());
    CHECK(r.checked > 0);
  }
}

TEST_CASE("an injected fault is caught", "[verify]") {
  VerifyConfig cfg;
  cfg.random_posets = 2;
  cfg.max_w = 2;
  cfg.inject_fault = true;
  const auto r = verify_oracle_equivalence(builtin_suite_posets(), cfg);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.counterexample.empty());
}
