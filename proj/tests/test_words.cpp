#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include <subword/verify.hpp>
#include <subword/words.hpp>

using namespace subword;

namespace {

// u <= w by trying every choice of |u| positions of w.
bool brute_leq(const FinitePoset& p, const Word& u, const Word& w) {
  if (u.size() > w.size()) return false;
  std::vector<char> pick(w.size(), 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(u.size()), 1);
  std::sort(pick.begin(), pick.end());
  do {
    std::size_t j = 0;
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i)
      if (pick[i]) ok = p.leq(u[j++], w[i]);
    if (ok) return true;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

// Every length-|w| word over P0 pointwise below w whose nonzero letters spell u.
std::set<std::vector<Element>> brute_embeddings(const AugmentedPoset& p0, const Word& u, const Word& w) {
  std::set<std::vector<Element>> out;
  std::vector<Element> eta(w.size());
  auto rec = [&](auto& self, std::size_t j) -> void {
    if (j == w.size()) {
      if (restrict_nonzero(eta) == u) out.insert(eta);
      return;
    }
    for (Element x = kZero; x < static_cast<Element>(p0.base().size()); ++x)
      if (p0.leq(x, w[j])) {
        eta[j] = x;
        self(self, j + 1);
      }
  };
  rec(rec, 0);
  return out;
}

Word W(const FinitePoset& p, const char* s) { return parse_word(p, s); }

// Interval [u, w] by filtering all short words; covers by definition.
std::pair<std::set<Word>, std::set<std::pair<Word, Word>>> brute_interval(const FinitePoset& p, const Word& u,
                                                                          const Word& w) {
  std::set<Word> nodes;
  for (const auto& v : all_words(p, w.size()))
    if (is_leq_words(p, u, v) && is_leq_words(p, v, w)) nodes.insert(v);
  std::set<std::pair<Word, Word>> edges;
  for (const auto& hi : nodes)
    for (const auto& lo : nodes) {
      if (hi == lo || !is_leq_words(p, lo, hi)) continue;
      bool cover = true;
      for (const auto& z : nodes)
        if (z != hi && z != lo && is_leq_words(p, lo, z) && is_leq_words(p, z, hi)) {
          cover = false;
          break;
        }
      if (cover) edges.emplace(hi, lo);
    }
  return {nodes, edges};
}

}  // namespace

TEST_CASE("subword order on the lambda poset", "[words]") {
  const auto L = lambda_poset();
  CHECK(is_leq_words(L, W(L, "11"), W(L, "333")));
  CHECK(is_leq_words(L, W(L, "12"), W(L, "33")));
  CHECK(is_leq_words(L, W(L, ""), W(L, "1")));
  CHECK_FALSE(is_leq_words(L, W(L, "3"), W(L, "11")));
  CHECK_FALSE(is_leq_words(L, W(L, "21"), W(L, "12")));
  CHECK_FALSE(is_leq_words(L, W(L, "111"), W(L, "33")));
}

TEST_CASE("greedy order agrees with exhaustive matching", "[words][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const auto p = random_poset(1 + trial % 4, 0.5, rng);
    const auto words = all_words(p, 3);
    for (const auto& w : words)
      for (const auto& u : words) REQUIRE(is_leq_words(p, u, w) == brute_leq(p, u, w));
  }
}

TEST_CASE("embeddings", "[words]") {
  const auto L = lambda_poset();
  const AugmentedPoset p0(L);
  const auto es = embeddings(L, W(L, "11"), W(L, "333"));
  REQUIRE(es.size() == 3);
  CHECK(format_expansion(L, es[0].eta) == "110");
  CHECK(format_expansion(L, es[1].eta) == "101");
  CHECK(format_expansion(L, es[2].eta) == "011");
  for (const auto& e : es) CHECK(is_embedding(p0, e.eta, e.u, e.w));
  CHECK(embeddings(L, W(L, "3"), W(L, "11")).empty());
  CHECK(embeddings(L, W(L, ""), W(L, "")).size() == 1);
  CHECK_FALSE(is_embedding(p0, std::vector<Element>{0, kZero}, W(L, "1"), W(L, "333")));
  CHECK_FALSE(is_embedding(p0, std::vector<Element>{2, kZero}, W(L, "3"), W(L, "13")));

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_poset(1 + trial % 4, 0.5, rng);
    const AugmentedPoset q0(p);
    const auto words = all_words(p, 3);
    for (const auto& w : words)
      for (const auto& u : words) {
        if (u.size() > w.size()) break;
        std::set<std::vector<Element>> got;
        for (const auto& e : embeddings(p, u, w)) got.insert(e.eta);
        REQUIRE(got == brute_embeddings(q0, u, w));
        REQUIRE(got.empty() != is_leq_words(p, u, w));
      }
  }
}

TEST_CASE("rightmost embedding", "[words]") {
  const auto L = lambda_poset();
  CHECK(format_expansion(L, rightmost_embedding(L, W(L, "1132"), W(L, "2132333")).eta) == "0010132");
  CHECK(format_expansion(L, rightmost_embedding(L, W(L, "11"), W(L, "333")).eta) == "011");
  CHECK_THROWS_AS(rightmost_embedding(L, W(L, "3"), W(L, "1")), DomainError);

  // The rightmost embedding is the last one in enumeration order.
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_poset(1 + trial % 4, 0.5, rng);
    for (const auto& [u, w] : comparable_pairs(p, 3))
      REQUIRE(rightmost_embedding(p, u, w) == embeddings(p, u, w).back());
  }
}

TEST_CASE("runs", "[words]") {
  const auto L = lambda_poset();
  const auto r = runs(W(L, "1122121"));
  REQUIRE(r.size() == 5);
  CHECK(r[0] == Run{0, 0, 1});
  CHECK(r[1] == Run{1, 2, 3});
  CHECK(r[4] == Run{0, 6, 6});
  CHECK(runs(Word{}).empty());
}

TEST_CASE("word syntax", "[words]") {
  const auto L = lambda_poset();
  CHECK(parse_word(L, "").empty());
  CHECK(parse_word(L, "-").empty());
  CHECK(parse_word(L, "\xE2\x88\x85").empty());
  CHECK(parse_word(L, "1,3") == Word{0, 2});
  CHECK(format_word(L, Word{0, 2, 1}) == "132");
  CHECK(display_word(L, Word{}) == "\xE2\x88\x85");
  CHECK_THROWS_AS(parse_word(L, "14"), InputError);
  CHECK_THROWS_AS(parse_word(L, "1,,3"), InputError);

  const auto p = poset_from_json(R"({"elements": ["ab", "c"], "covers": [["c", "ab"]]})");
  CHECK(parse_word(p, "ab,c,ab") == Word{0, 1, 0});
  CHECK(parse_word(p, "ab") == Word{0});
  CHECK(format_word(p, Word{0, 1}) == "ab,c");
  CHECK(parse_word(p, format_word(p, Word{1, 0, 0})) == Word{1, 0, 0});
  CHECK(format_expansion(L, std::vector<Element>{kZero, 2}) == "03");
}

TEST_CASE("all words", "[words]") {
  const auto L = lambda_poset();
  const auto ws = all_words(L, 2);
  CHECK(ws.size() == 1 + 3 + 9);
  CHECK(ws.front().empty());
  CHECK(ws.back() == Word{2, 2});
}

TEST_CASE("lower covers in P*", "[words][intervals]") {
  const auto L = lambda_poset();
  const AugmentedPoset p0(L);
  std::set<Word> lows;
  for (const auto& c : word_lower_covers(p0, W(L, "113"))) lows.insert(c.lower);
  CHECK(lows == std::set<Word>{W(L, "13"), W(L, "111"), W(L, "112")});
  CHECK(is_word_cover(p0, W(L, "113"), W(L, "13")));
  CHECK(is_word_cover(p0, W(L, "31"), W(L, "11")));
  CHECK_FALSE(is_word_cover(p0, W(L, "31"), W(L, "1")));
  CHECK_FALSE(is_word_cover(p0, W(L, "33"), W(L, "11")));
  CHECK_FALSE(is_word_cover(p0, W(L, "3"), W(L, "")));
}

TEST_CASE("known interval sizes", "[words][intervals]") {
  const auto L = lambda_poset();
  const AugmentedPoset p0(L);
  const auto d = build_interval(p0, W(L, "11"), W(L, "333"));
  CHECK(d.nodes.size() == 24);
  CHECK(d.hasse_edges.size() == 60);
  CHECK(d.nodes[d.bottom_index()] == W(L, "11"));
  CHECK(d.nodes[d.top_index()] == W(L, "333"));

  const auto big = build_interval(p0, Word{}, W(L, "33333"));
  CHECK(big.hasse_edges.size() == 1904);
  CHECK(big.index_of(W(L, "1313")).has_value());
  CHECK_FALSE(big.index_of(W(L, "333333")).has_value());

  const auto point = build_interval(p0, W(L, "12"), W(L, "12"));
  CHECK(point.nodes.size() == 1);
  CHECK(point.hasse_edges.empty());
}

TEST_CASE("interval diagrams match the brute-force interval", "[words][intervals][property]") {
  std::vector<FinitePoset> posets{lambda_poset(), fig3_poset(), chain_poset(3), antichain_poset(2)};
  std::mt19937_64 rng(17);
  for (int i = 0; i < 6; ++i) posets.push_back(random_poset(3, 0.5, rng));
  for (const auto& p : posets) {
    const AugmentedPoset p0(p);
    const std::size_t len = p.size() > 4 ? 2 : 3;
    std::size_t checked = 0;
    for (const auto& [u, w] : comparable_pairs(p, len)) {
      if ((checked++) % 7 != 0) continue;
      const auto d = build_interval(p0, u, w);
      const auto [nodes, edges] = brute_interval(p, u, w);
      REQUIRE(std::set<Word>(d.nodes.begin(), d.nodes.end()) == nodes);
      std::set<std::pair<Word, Word>> got;
      for (auto [hi, lo] : d.hasse_edges) got.emplace(d.nodes[hi], d.nodes[lo]);
      REQUIRE(got == edges);
      for (auto [hi, lo] : d.hasse_edges) REQUIRE(is_word_cover(p0, d.nodes[hi], d.nodes[lo]));
    }
  }
}

TEST_CASE("interval errors and caps", "[words][intervals]") {
  const auto L = lambda_poset();
  const AugmentedPoset p0(L);
  CHECK_THROWS_AS(build_interval(p0, W(L, "3"), W(L, "11")), DomainError);
  Limits small;
  small.max_nodes = 10;
  CHECK_THROWS_AS(build_interval(p0, Word{}, W(L, "333"), small), ResourceError);
  Limits short_words;
  short_words.max_word_length = 2;
  CHECK_THROWS_AS(build_interval(p0, Word{}, W(L, "333"), short_words), ResourceError);
  CHECK_THROWS_AS(build_interval(p0, Word{5}, W(L, "3")), InputError);
}

TEST_CASE("diagram export", "[words][intervals][json]") {
  const auto L = lambda_poset();
  const auto d = build_interval(L, W(L, "1"), W(L, "13"));
  const auto json = export_diagram(L, d, DiagramFormat::json);
  CHECK(diagram_from_json(L, json) == d);
  CHECK(export_diagram(L, diagram_from_json(L, json), DiagramFormat::json) == json);
  const auto dot = export_diagram(L, d, DiagramFormat::dot);
  CHECK(dot.rfind("digraph interval {", 0) == 0);
  CHECK(dot.find("->") != std::string::npos);
  CHECK_THROWS_AS(diagram_from_json(L, "{}"), InputError);
  CHECK_THROWS_AS(diagram_from_json(L, R"({"bottom":"","top":"","nodes":[""],"edges":[[0,4]],"ranks":[0]})"),
                  InputError);
}
