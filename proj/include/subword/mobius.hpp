#pragma once

#include <cstdint>
#include <cstdlib>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "poset.hpp"
#include "words.hpp"

namespace subword {

enum class Method { formula, oracle, morse };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::formula: return "formula";
    case Method::oracle: return "oracle";
    case Method::morse: return "morse";
  }
  return "?";
}

struct EmbeddingTerm {
  Embedding embedding;
  std::vector<std::int64_t> factors;
  std::int64_t product = 0;
};

struct MobiusReport {
  Word u;
  Word w;
  std::int64_t value = 0;
  Method method = Method::formula;
  bool incomparable = false;
  std::vector<EmbeddingTerm> per_embedding;
};

/// Per-position factors of an embedding's term: mu0(eta(j), w(j)), plus one
/// when eta(j) is zero and w(j-1) = w(j). The first position never gets +1.
inline std::vector<std::int64_t> contribution_factors(const AugmentedPoset& p0, std::span<const Element> eta,
                                                      const Word& w) {
  if (eta.size() != w.size()) throw DomainError("embedding length differs from |w|");
  std::vector<std::int64_t> factors;
  factors.reserve(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (!p0.leq(eta[j], w[j])) throw DomainError("embedding is not pointwise below w");
    std::int64_t f = p0.mobius(eta[j], w[j]);
    if (eta[j] == kZero && j > 0 && w[j - 1] == w[j]) f = checked_add(f, 1);
    factors.push_back(f);
  }
  return factors;
}

inline std::int64_t contribution(const AugmentedPoset& p0, std::span<const Element> eta, const Word& w) {
  std::int64_t product = 1;
  for (auto f : contribution_factors(p0, eta, w)) product = checked_mul(product, f);
  return product;
}

inline std::int64_t contribution(const AugmentedPoset& p0, const Embedding& e) {
  return contribution(p0, e.eta, e.w);
}

/// mu(u, w) as a sum over embeddings of products of P0 Möbius values.
inline MobiusReport mobius_main(const AugmentedPoset& p0, const Word& u, const Word& w) {
  MobiusReport r{u, w, 0, Method::formula, false, {}};
  for (auto& e : embeddings(p0.base(), u, w)) {
    EmbeddingTerm term{e, contribution_factors(p0, e.eta, w), 1};
    for (auto f : term.factors) term.product = checked_mul(term.product, f);
    r.value = checked_add(r.value, term.product);
    r.per_embedding.push_back(std::move(term));
  }
  r.incomparable = r.per_embedding.empty();
  return r;
}

inline MobiusReport mobius_main(const FinitePoset& p, const Word& u, const Word& w) {
  return mobius_main(AugmentedPoset(p), u, w);
}

/// Möbius values mu(bottom, v) for every node of a diagram, by the defining
/// recursion over strict down-sets.
inline std::vector<std::int64_t> diagram_mobius_from_bottom(const IntervalDiagram& d) {
  const std::size_t n = d.nodes.size();
  const auto lower = d.lower_covers();
  std::vector<boost::dynamic_bitset<>> below(n, boost::dynamic_bitset<>(n));
  std::vector<std::int64_t> mu(n, 0);
  // Node order is a linear extension, so covers precede their upper element.
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t c : lower[v]) {
      below[v] |= below[c];
      below[v].set(c);
    }
    if (v == d.bottom_index()) {
      mu[v] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (auto z = below[v].find_first(); z != boost::dynamic_bitset<>::npos; z = below[v].find_next(z))
      sum = checked_add(sum, mu[z]);
    mu[v] = checked_sub(0, sum);
  }
  return mu;
}

/// mu(u, w) by the classical recursion on the explicit interval; 0 when u
/// is not below w.
inline std::int64_t mobius_oracle(const AugmentedPoset& p0, const Word& u, const Word& w, const Limits& limits = {}) {
  if (!is_leq_words(p0.base(), u, w)) return 0;
  const auto d = build_interval(p0, u, w, limits);
  return diagram_mobius_from_bottom(d)[d.top_index()];
}

inline std::int64_t mobius_oracle(const FinitePoset& p, const Word& u, const Word& w, const Limits& limits = {}) {
  return mobius_oracle(AugmentedPoset(p), u, w, limits);
}

// --- antichains --------------------------------------------------------------

struct NormalEmbeddings {
  std::size_t count = 0;
  std::vector<Embedding> list;
};

inline void require_antichain(const FinitePoset& a) {
  if (rank_poset(a) != 0) throw DomainError("poset is not an antichain");
}

/// Embeddings with no zero at a position repeating the previous letter of w.
inline NormalEmbeddings normal_embeddings_antichain(const FinitePoset& a, const Word& u, const Word& w) {
  require_antichain(a);
  NormalEmbeddings out;
  for (auto& e : embeddings(a, u, w)) {
    bool normal = true;
    for (std::size_t j = 1; j < w.size() && normal; ++j)
      if (e.eta[j] == kZero && w[j - 1] == w[j]) normal = false;
    if (normal) out.list.push_back(std::move(e));
  }
  out.count = out.list.size();
  return out;
}

inline std::int64_t mobius_bjorner(const FinitePoset& a, const Word& u, const Word& w) {
  const auto normal = normal_embeddings_antichain(a, u, w);
  const auto count = static_cast<std::int64_t>(normal.count);
  return (w.size() - u.size()) % 2 == 0 ? count : -count;
}

// --- rooted forests ----------------------------------------------------------

/// Every non-minimal element covers exactly one element.
inline bool is_rooted_forest(const FinitePoset& p) {
  for (Element x = 0; x < static_cast<Element>(p.size()); ++x)
    if (p.lower_covers(x).size() > 1) return false;
  return true;
}

inline void require_rooted_forest(const FinitePoset& p) {
  if (!is_rooted_forest(p)) throw DomainError("poset is not a rooted forest");
}

// The unique element of P0 covered by x.
inline Element forest_parent(const FinitePoset& p, Element x) {
  const auto down = p.lower_covers(x);
  return down.empty() ? kZero : down.front();
}

inline bool is_normal_forest(const FinitePoset& p, std::span<const Element> eta, const Word& w) {
  require_rooted_forest(p);
  if (eta.size() != w.size()) throw DomainError("embedding length differs from |w|");
  for (std::size_t j = 0; j < w.size(); ++j)
    if (eta[j] != w[j] && eta[j] != forest_parent(p, w[j]) && eta[j] != kZero) return false;
  for (const auto& run : runs(w)) {
    if (p.is_minimal(run.letter)) {
      for (std::size_t j = run.first + 1; j <= run.last; ++j)
        if (eta[j] == kZero) return false;
    } else if (eta[run.first] == kZero) {
      return false;
    }
  }
  return true;
}

inline int defect(const FinitePoset& p, std::span<const Element> eta, const Word& w) {
  require_rooted_forest(p);
  if (eta.size() != w.size()) throw DomainError("embedding length differs from |w|");
  int count = 0;
  for (std::size_t j = 0; j < w.size(); ++j)
    if (eta[j] == forest_parent(p, w[j])) ++count;
  return count;
}

/// Signed count of normal embeddings, sign (-1)^defect.
inline std::int64_t mobius_forest(const FinitePoset& p, const Word& u, const Word& w) {
  require_rooted_forest(p);
  std::int64_t sum = 0;
  for (const auto& e : embeddings(p, u, w))
    if (is_normal_forest(p, e.eta, w)) sum = checked_add(sum, defect(p, e.eta, w) % 2 == 0 ? 1 : -1);
  return sum;
}

// --- homotopy type -----------------------------------------------------------

struct HomotopyReport {
  std::uint64_t sphere_count = 0;
  int dimension = 0;
  int rank_w = 0;
  int rank_u = 0;
};

/// Rank of v inside [∅, v].
inline int rank_word(const AugmentedPoset& p0, const Word& v, const Limits& limits = {}) {
  const auto d = build_interval(p0, Word{}, v, limits);
  return d.ranks[d.top_index()];
}

/// Wedge-of-spheres data for [u, w] when rk(P) <= 1.
inline HomotopyReport homotopy_type(const AugmentedPoset& p0, const Word& u, const Word& w, const Limits& limits = {}) {
  if (rank_poset(p0.base()) > 1) throw UnsupportedPosetError("homotopy type is only determined for posets of rank <= 1");
  if (!is_leq_words(p0.base(), u, w)) throw DomainError("homotopy_type: u is not below w");
  HomotopyReport r;
  r.rank_w = rank_word(p0, w, limits);
  r.rank_u = rank_word(p0, u, limits);
  if (r.rank_w - r.rank_u < 2) throw DomainError("homotopy_type needs rk(w) - rk(u) >= 2");
  r.dimension = r.rank_w - r.rank_u - 2;
  r.sphere_count = static_cast<std::uint64_t>(std::llabs(mobius_main(p0, u, w).value));
  return r;
}

// --- the subposet [eta, w] ---------------------------------------------------

/// Words having a length-|w| expansion pointwise between eta and w.
inline std::vector<Word> embedding_subposet(const AugmentedPoset& p0, std::span<const Element> eta, const Word& w) {
  if (eta.size() != w.size()) throw DomainError("embedding length differs from |w|");
  std::vector<std::vector<Element>> choices(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (!p0.leq(eta[j], w[j])) throw DomainError("embedding is not pointwise below w");
    if (p0.leq(eta[j], kZero)) choices[j].push_back(kZero);
    for (Element x = 0; x < static_cast<Element>(p0.base().size()); ++x)
      if (p0.leq(eta[j], x) && p0.leq(x, w[j])) choices[j].push_back(x);
  }
  std::set<Word> found;
  std::vector<Element> zeta(w.size());
  auto rec = [&](auto& self, std::size_t j) -> void {
    if (j == w.size()) {
      found.insert(restrict_nonzero(zeta));
      return;
    }
    for (Element x : choices[j]) {
      zeta[j] = x;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return {found.begin(), found.end()};
}

/// Möbius value of [eta, w] taken as a subposet of P* with the induced order.
inline std::int64_t mobius_embedding_subposet(const AugmentedPoset& p0, std::span<const Element> eta, const Word& w) {
  const auto words = embedding_subposet(p0, eta, w);
  std::vector<std::string> names;
  for (const auto& v : words) names.push_back(format_word(p0.base(), v));
  const auto q = FinitePoset::from_order(
      names, [&](Element a, Element b) { return is_leq_words(p0.base(), words[a], words[b]); });
  const auto lo = std::find(words.begin(), words.end(), restrict_nonzero(eta)) - words.begin();
  const auto hi = std::find(words.begin(), words.end(), w) - words.begin();
  return mobius(q, static_cast<Element>(lo), static_cast<Element>(hi));
}

// --- serialisation -----------------------------------------------------------

inline nlohmann::json report_to_json(const FinitePoset& p, const MobiusReport& r) {
  nlohmann::json j;
  j["u"] = format_word(p, r.u);
  j["w"] = format_word(p, r.w);
  j["value"] = r.value;
  j["method"] = to_string(r.method);
  j["incomparable"] = r.incomparable;
  j["embeddings"] = nlohmann::json::array();
  for (const auto& t : r.per_embedding)
    j["embeddings"].push_back(
        {{"eta", format_expansion(p, t.embedding.eta)}, {"factors", t.factors}, {"product", t.product}});
  return j;
}

inline nlohmann::json report_to_json(const HomotopyReport& r) {
  return {{"sphere_count", r.sphere_count}, {"dimension", r.dimension}, {"rank_w", r.rank_w}, {"rank_u", r.rank_u}};
}

}  // namespace subword
