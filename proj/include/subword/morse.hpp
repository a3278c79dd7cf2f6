#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poset.hpp"
#include "words.hpp"

namespace subword {

/// ⟨j, x⟩: position j of w (0-based; shown 1-based) drops to x, possibly 0.
struct ChainLabel {
  std::size_t position = 0;
  Element letter = kZero;

  bool operator==(const ChainLabel&) const = default;
};

/// A maximal chain w = v0 ⋗ v1 ⋗ ... ⋗ vn = u with its embedding track.
struct LabeledChain {
  Word bottom;
  Word top;
  std::vector<Word> elements;
  std::vector<std::vector<Element>> track;
  std::vector<ChainLabel> labels;

  std::size_t length() const { return labels.size(); }
  const std::vector<Element>& final_embedding() const { return track.back(); }
  bool operator==(const LabeledChain&) const = default;
};

/// Closed range of chain indices; the open chain is 1..n-1.
struct IndexInterval {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t size() const { return last - first + 1; }
  bool contains(const IndexInterval& o) const { return first <= o.first && o.last <= last; }
  bool contains(std::size_t i) const { return first <= i && i <= last; }
  bool operator==(const IndexInterval&) const = default;
  auto operator<=>(const IndexInterval&) const = default;
};

struct MsiDecomposition {
  LabeledChain chain;
  std::vector<IndexInterval> msis;
  std::vector<IndexInterval> j_intervals;
  bool is_critical = false;
  int critical_dimension = 0;
};

/// The single-letter move taking `upper` to its lower cover `lower`: the
/// index in `upper` and the new letter. A deletion removes the first letter
/// of its run.
inline std::pair<std::size_t, Element> cover_step(const AugmentedPoset& p0, const Word& upper, const Word& lower) {
  if (!is_word_cover(p0, upper, lower)) throw DomainError("consecutive chain elements are not a cover");
  if (upper.size() == lower.size()) {
    for (std::size_t i = 0; i < upper.size(); ++i)
      if (upper[i] != lower[i]) return {i, lower[i]};
  }
  const auto e = rightmost_embedding(p0.base(), lower, upper);
  for (std::size_t i = 0; i < e.eta.size(); ++i)
    if (e.eta[i] == kZero) return {i, kZero};
  throw std::logic_error("cover_step: deletion without a zero");
}

// Position of w holding the k-th nonzero letter of the track.
inline std::size_t track_position(const std::vector<Element>& eta, std::size_t k) {
  for (std::size_t i = 0; i < eta.size(); ++i)
    if (eta[i] != kZero && k-- == 0) return i;
  throw std::logic_error("track_position out of range");
}

inline LabeledChain label_chain(const AugmentedPoset& p0, const std::vector<Word>& chain) {
  if (chain.empty()) throw DomainError("a chain needs at least one element");
  for (const auto& v : chain) check_word(p0.base(), v);
  LabeledChain c;
  c.top = chain.front();
  c.bottom = chain.back();
  c.elements = chain;
  c.track.emplace_back(chain.front().begin(), chain.front().end());
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const auto [k, x] = cover_step(p0, chain[i - 1], chain[i]);
    auto eta = c.track.back();
    const auto j = track_position(eta, k);
    eta[j] = x;
    c.labels.push_back(ChainLabel{j, x});
    c.track.push_back(std::move(eta));
  }
  return c;
}

inline LabeledChain label_chain(const AugmentedPoset& p0, const Word& u, const Word& w,
                                const std::vector<Word>& chain) {
  if (chain.empty() || chain.front() != w || chain.back() != u)
    throw DomainError("chain does not span the interval [u, w]");
  return label_chain(p0, chain);
}

inline std::strong_ordering compare_labels(const std::vector<ChainLabel>& a, const std::vector<ChainLabel>& b,
                                           const NaturalLabeling& ell) {
  const auto n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i].position <=> b[i].position; c != 0) return c;
    if (auto c = ell(a[i].letter) <=> ell(b[i].letter); c != 0) return c;
  }
  return a.size() <=> b.size();
}

/// Lexicographic order of label sequences under the natural labeling.
inline std::strong_ordering plo_compare(const LabeledChain& c1, const LabeledChain& c2, const NaturalLabeling& ell) {
  if (c1.top != c2.top || c1.bottom != c2.bottom) throw DomainError("plo_compare: chains span different intervals");
  return compare_labels(c1.labels, c2.labels, ell);
}

inline std::strong_ordering plo_compare(const FinitePoset& p, const LabeledChain& c1, const LabeledChain& c2) {
  return plo_compare(c1, c2, natural_labeling(p));
}

/// Applies labels as moves on the embedding track starting from w, then
/// relabels the resulting chain canonically.
inline LabeledChain chain_specified_by(const AugmentedPoset& p0, const Word& w, const std::vector<ChainLabel>& labels) {
  check_word(p0.base(), w);
  std::vector<Element> eta(w.begin(), w.end());
  std::vector<Word> chain{w};
  for (const auto& l : labels) {
    if (l.position >= eta.size()) throw DomainError("label position out of range");
    if (eta[l.position] == kZero || !p0.covers(eta[l.position], l.letter))
      throw DomainError("label <" + std::to_string(l.position + 1) + "," + p0.name(l.letter) +
                        "> does not lower its position by a cover");
    eta[l.position] = l.letter;
    chain.push_back(restrict_nonzero(eta));
  }
  return label_chain(p0, chain);
}

// --- skipped intervals from a table --------------------------------------------

/// Containment-minimal members of a family of intervals, sorted.
inline std::vector<IndexInterval> minimal_intervals(std::vector<IndexInterval> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<IndexInterval> out;
  for (const auto& a : family) {
    bool minimal = true;
    for (const auto& b : family)
      if (b != a && a.contains(b)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

/// The disjoint family J(C) built from the MSIs: take the one with the
/// leftmost start, cut it out of the rest, keep the minimal nonempty
/// remnants, and repeat.
inline std::vector<IndexInterval> j_construction(std::vector<IndexInterval> msis) {
  std::vector<IndexInterval> out;
  auto current = minimal_intervals(std::move(msis));
  while (!current.empty()) {
    for (std::size_t i = 1; i < current.size(); ++i)
      if (current[i].first == current[i - 1].first) throw std::logic_error("two MSIs share a left endpoint");
    const auto j = current.front();
    out.push_back(j);
    std::vector<IndexInterval> rest;
    for (std::size_t i = 1; i < current.size(); ++i) {
      auto r = current[i];
      if (r.last <= j.last) continue;
      r.first = std::max(r.first, j.last + 1);
      rest.push_back(r);
    }
    current = minimal_intervals(std::move(rest));
  }
  return out;
}

// Critical dimension of a chain of length n from J(C), or nothing when
// J(C) does not partition the open chain.
inline std::optional<int> critical_dimension_of(const std::vector<IndexInterval>& j_intervals, std::size_t n) {
  if (n == 0) return std::nullopt;
  std::size_t next = 1;
  for (const auto& j : j_intervals) {
    if (j.first != next) return std::nullopt;
    next = j.last + 1;
  }
  if (next != n) return std::nullopt;
  return static_cast<int>(j_intervals.size()) - 1;
}

// Fills in J(C), criticality and dimension from the MSIs.
inline void finish_decomposition(MsiDecomposition& d) {
  d.j_intervals = j_construction(d.msis);
  d.critical_dimension = static_cast<int>(d.j_intervals.size()) - 1;
  d.is_critical = critical_dimension_of(d.j_intervals, d.chain.length()).has_value();
}

// si[i][k] for 1 <= i <= k <= n-1 from bad(m, k), where bad(m, k) means the
// chain leaves v_m toward v_{k+1} by a child other than the first one that
// still reaches v_{k+1}.
class SkipTable {
 public:
  explicit SkipTable(std::size_t n) : n_(n), si_(n, std::vector<char>(n, 0)) {}

  // Row k, given bad(m, k) for m = 0..k-1.
  template <class Bad>
  void fill_row(std::size_t k, Bad&& bad) {
    bool any = false;
    for (std::size_t i = k; i >= 1; --i) {
      any = any || bad(i - 1, k);
      si_[i][k] = any ? 1 : 0;
    }
  }

  bool is_si(std::size_t i, std::size_t k) const { return si_[i][k] != 0; }

  std::vector<IndexInterval> msis() const {
    std::vector<IndexInterval> out;
    for (std::size_t i = 1; i < n_; ++i)
      for (std::size_t k = i; k < n_; ++k) {
        if (!is_si(i, k)) continue;
        if (i < k && (is_si(i + 1, k) || is_si(i, k - 1))) continue;
        out.push_back(IndexInterval{i, k});
      }
    return out;
  }

  std::vector<IndexInterval> all() const {
    std::vector<IndexInterval> out;
    for (std::size_t i = 1; i < n_; ++i)
      for (std::size_t k = i; k < n_; ++k)
        if (is_si(i, k)) out.push_back(IndexInterval{i, k});
    return out;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<char>> si_;
};

// --- the interval as a graph of covers ------------------------------------------

/// The Hasse diagram of [u, w] with each node's lower covers sorted by their
/// local label (index in the node's word, natural label of the new letter).
/// Along any embedding track the local order agrees with the label order.
class CoverGraph {
 public:
  struct Child {
    std::size_t node;
    std::size_t index;
    Element letter;
  };

  CoverGraph(const AugmentedPoset& p0, const Word& u, const Word& w, const Limits& limits,
             const NaturalLabeling& ell)
      : p0_(&p0), diagram_(build_interval(p0, u, w, limits)) {
    const auto lower = diagram_.lower_covers();
    children_.resize(diagram_.nodes.size());
    for (std::size_t v = 0; v < lower.size(); ++v) {
      for (std::size_t c : lower[v]) {
        const auto [k, x] = cover_step(p0, diagram_.nodes[v], diagram_.nodes[c]);
        children_[v].push_back(Child{c, k, x});
      }
      std::sort(children_[v].begin(), children_[v].end(), [&](const Child& a, const Child& b) {
        return std::pair(a.index, ell(a.letter)) < std::pair(b.index, ell(b.letter));
      });
    }
  }

  const IntervalDiagram& diagram() const { return diagram_; }
  std::size_t top() const { return diagram_.top_index(); }
  std::size_t bottom() const { return diagram_.bottom_index(); }
  const Word& word(std::size_t v) const { return diagram_.nodes[v]; }
  const std::vector<Child>& children(std::size_t v) const { return children_[v]; }

  /// Smallest child of a lying above b.
  std::size_t first_child_toward(std::size_t a, std::size_t b) const {
    const auto key = static_cast<std::uint64_t>(a) * diagram_.nodes.size() + b;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::size_t found = a;
    for (const auto& c : children_[a])
      if (is_leq_words(p0_->base(), diagram_.nodes[b], diagram_.nodes[c.node])) {
        found = c.node;
        break;
      }
    memo_.emplace(key, found);
    return found;
  }

 private:
  const AugmentedPoset* p0_;
  IntervalDiagram diagram_;
  std::vector<std::vector<Child>> children_;
  mutable std::unordered_map<std::uint64_t, std::size_t> memo_;
};

/// MSIs of a chain of the graph (given as node ids) via the first-child test.
inline std::vector<IndexInterval> graph_chain_msis(const CoverGraph& g, const std::vector<std::size_t>& nodes) {
  const std::size_t n = nodes.size() - 1;
  SkipTable table(n);
  for (std::size_t k = 1; k + 1 <= n; ++k)
    table.fill_row(k, [&](std::size_t m, std::size_t kk) {
      return g.first_child_toward(nodes[m], nodes[kk + 1]) != nodes[m + 1];
    });
  return table.msis();
}

/// MSI decomposition of any maximal chain of [u, w], fast path.
inline MsiDecomposition decompose_chain(const CoverGraph& g, const LabeledChain& c) {
  std::vector<std::size_t> nodes;
  for (const auto& v : c.elements) {
    auto idx = g.diagram().index_of(v);
    if (!idx) throw DomainError("chain leaves the interval");
    nodes.push_back(*idx);
  }
  MsiDecomposition d{c, graph_chain_msis(g, nodes), {}, false, 0};
  finish_decomposition(d);
  return d;
}

// --- brute force over PLO-earlier chains -----------------------------------------

/// All maximal chains of [u, w], sorted by the PLO.
struct ChainContext {
  Word u;
  Word w;
  NaturalLabeling labeling;
  std::vector<LabeledChain> chains;

  std::size_t index_of(const LabeledChain& c) const {
    for (std::size_t i = 0; i < chains.size(); ++i)
      if (chains[i].elements == c.elements) return i;
    throw DomainError("chain is not a maximal chain of the context interval");
  }
};

inline ChainContext build_chain_context(const AugmentedPoset& p0, const Word& u, const Word& w,
                                        const Limits& limits = {}, std::optional<NaturalLabeling> labeling = {}) {
  ChainContext ctx{u, w, labeling ? *labeling : natural_labeling(p0.base()), {}};
  const auto d = build_interval(p0, u, w, limits);
  const auto lower = d.lower_covers();
  std::vector<Word> path{d.nodes[d.top_index()]};
  auto rec = [&](auto& self, std::size_t v) -> void {
    if (v == d.bottom_index()) {
      if (ctx.chains.size() >= limits.max_chains)
        throw ResourceError("interval has more than " + std::to_string(limits.max_chains) + " maximal chains");
      ctx.chains.push_back(label_chain(p0, path));
      return;
    }
    for (std::size_t c : lower[v]) {
      path.push_back(d.nodes[c]);
      self(self, c);
      path.pop_back();
    }
  };
  rec(rec, d.top_index());
  std::sort(ctx.chains.begin(), ctx.chains.end(), [&](const LabeledChain& a, const LabeledChain& b) {
    return compare_labels(a.labels, b.labels, ctx.labeling) < 0;
  });
  return ctx;
}

// Smallest index interval of c holding every element of c missing from b.
inline std::optional<IndexInterval> missing_hull(const LabeledChain& c, const LabeledChain& b) {
  std::optional<IndexInterval> hull;
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    if (std::find(b.elements.begin(), b.elements.end(), c.elements[i]) != b.elements.end()) continue;
    if (!hull)
      hull = IndexInterval{i, i};
    else
      hull->last = i;
  }
  return hull;
}

// Minimal intervals I with C - I inside some earlier chain.
inline std::vector<IndexInterval> skipped_hulls(const LabeledChain& c, const ChainContext& ctx) {
  const auto at = ctx.index_of(c);
  std::vector<IndexInterval> hulls;
  for (std::size_t b = 0; b < at; ++b)
    if (auto h = missing_hull(c, ctx.chains[b])) hulls.push_back(*h);
  return minimal_intervals(std::move(hulls));
}

/// Every skipped interval of c, by brute force over the PLO-earlier chains.
inline std::vector<IndexInterval> skipped_intervals(const LabeledChain& c, const ChainContext& ctx) {
  const auto hulls = skipped_hulls(c, ctx);
  std::vector<IndexInterval> out;
  const std::size_t n = c.length();
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t k = i; k < n; ++k) {
      const IndexInterval I{i, k};
      if (std::any_of(hulls.begin(), hulls.end(), [&](const IndexInterval& h) { return I.contains(h); }))
        out.push_back(I);
    }
  return out;
}

inline std::vector<IndexInterval> msis(const LabeledChain& c, const ChainContext& ctx) { return skipped_hulls(c, ctx); }

inline MsiDecomposition j_intervals(const LabeledChain& c, const ChainContext& ctx) {
  MsiDecomposition d{c, msis(c, ctx), {}, false, 0};
  finish_decomposition(d);
  return d;
}

// --- critical chains -------------------------------------------------------------

/// Walks every maximal chain of the graph in PLO order, calling
/// visit(nodes, track, labels, table) at each bottom.
template <class Visit>
void walk_chains(const CoverGraph& g, const Word& w, Visit&& visit) {
  std::vector<std::size_t> nodes{g.top()};
  std::vector<std::vector<Element>> track{std::vector<Element>(w.begin(), w.end())};
  std::vector<ChainLabel> labels;
  // rows[k] holds si(i, k) for the current prefix.
  std::vector<std::vector<char>> si_rows;

  auto rec = [&](auto& self) -> void {
    const std::size_t v = nodes.back();
    if (v == g.bottom()) {
      visit(nodes, track, labels, si_rows);
      return;
    }
    for (const auto& c : g.children(v)) {
      const auto j = track_position(track.back(), c.index);
      auto eta = track.back();
      eta[j] = c.letter;
      nodes.push_back(c.node);
      track.push_back(std::move(eta));
      labels.push_back(ChainLabel{j, c.letter});
      // New element v_{k+1} with k = depth - 1; fill row k when k >= 1.
      const std::size_t k = nodes.size() - 2;
      if (si_rows.size() <= k) si_rows.resize(k + 1);
      auto& row = si_rows[k];
      row.assign(k + 1, 0);
      bool any = false;
      for (std::size_t i = k; i >= 1; --i) {
        any = any || g.first_child_toward(nodes[i - 1], nodes[k + 1]) != nodes[i];
        row[i] = any ? 1 : 0;
      }
      self(self);
      labels.pop_back();
      track.pop_back();
      nodes.pop_back();
    }
  };
  rec(rec);
}

inline std::vector<IndexInterval> msis_from_rows(const std::vector<std::vector<char>>& rows, std::size_t n) {
  auto si = [&](std::size_t i, std::size_t k) { return rows[k][i] != 0; };
  std::vector<IndexInterval> out;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t k = i; k < n; ++k) {
      if (!si(i, k)) continue;
      if (i < k && (si(i + 1, k) || si(i, k - 1))) continue;
      out.push_back(IndexInterval{i, k});
    }
  return out;
}

// Streams the decomposition of every maximal chain of [u, w].
template <class Visit>
void for_each_decomposition(const CoverGraph& g, const Word& u, const Word& w, Visit&& visit) {
  walk_chains(g, w, [&](const std::vector<std::size_t>& nodes, const std::vector<std::vector<Element>>& track,
                        const std::vector<ChainLabel>& labels, const std::vector<std::vector<char>>& rows) {
    MsiDecomposition d;
    d.chain.top = w;
    d.chain.bottom = u;
    d.chain.track = track;
    d.chain.labels = labels;
    for (std::size_t v : nodes) d.chain.elements.push_back(g.word(v));
    d.msis = msis_from_rows(rows, labels.size());
    finish_decomposition(d);
    visit(std::move(d));
  });
}

inline NaturalLabeling labeling_or_default(const FinitePoset& p, const std::optional<NaturalLabeling>& ell) {
  return ell ? *ell : natural_labeling(p);
}

/// Critical chains of [u, w] in PLO order. Empty when u = w.
inline std::vector<MsiDecomposition> critical_chains(const AugmentedPoset& p0, const Word& u, const Word& w,
                                                     const Limits& limits = {},
                                                     std::optional<NaturalLabeling> labeling = {}) {
  if (!is_leq_words(p0.base(), u, w)) throw DomainError("critical_chains: u is not below w");
  std::vector<MsiDecomposition> out;
  if (u == w) return out;
  const CoverGraph g(p0, u, w, limits, labeling_or_default(p0.base(), labeling));
  for_each_decomposition(g, u, w, [&](MsiDecomposition d) {
    if (d.is_critical) out.push_back(std::move(d));
  });
  return out;
}

inline std::vector<MsiDecomposition> all_decompositions(const AugmentedPoset& p0, const Word& u, const Word& w,
                                                        const Limits& limits = {},
                                                        std::optional<NaturalLabeling> labeling = {}) {
  std::vector<MsiDecomposition> out;
  if (u == w) return out;
  const CoverGraph g(p0, u, w, limits, labeling_or_default(p0.base(), labeling));
  for_each_decomposition(g, u, w, [&](MsiDecomposition d) {
    if (out.size() >= limits.max_chains)
      throw ResourceError("interval has more than " + std::to_string(limits.max_chains) + " maximal chains");
    out.push_back(std::move(d));
  });
  return out;
}

/// Sum of (-1)^d(C) over critical chains; 1 on [u, u], -1 on a cover, 0
/// when u is not below w.
inline std::int64_t mobius_morse(const AugmentedPoset& p0, const Word& u, const Word& w, const Limits& limits = {},
                                 std::optional<NaturalLabeling> labeling = {}) {
  if (!is_leq_words(p0.base(), u, w)) return 0;
  if (u == w) return 1;
  if (is_word_cover(p0, w, u)) return -1;
  const CoverGraph g(p0, u, w, limits, labeling_or_default(p0.base(), labeling));
  std::int64_t sum = 0;
  walk_chains(g, w, [&](const auto&, const auto&, const std::vector<ChainLabel>& labels, const auto& rows) {
    const auto n = labels.size();
    if (auto d = critical_dimension_of(j_construction(msis_from_rows(rows, n)), n))
      sum = checked_add(sum, *d % 2 == 0 ? 1 : -1);
  });
  return sum;
}

inline std::int64_t mobius_morse(const FinitePoset& p, const Word& u, const Word& w, const Limits& limits = {}) {
  return mobius_morse(AugmentedPoset(p), u, w, limits);
}

/// Signed count of the critical chains of [u, w] ending at the embedding eta.
inline std::int64_t per_embedding_mu(const AugmentedPoset& p0, std::span<const Element> eta, const Word& w,
                                     const Limits& limits = {}, std::optional<NaturalLabeling> labeling = {}) {
  const Word u = restrict_nonzero(eta);
  if (!is_embedding(p0, eta, u, w)) throw DomainError("per_embedding_mu: not an embedding");
  const std::vector<Element> target(eta.begin(), eta.end());
  if (u == w) return 1;
  std::int64_t sum = 0;
  for (const auto& d : critical_chains(p0, u, w, limits, labeling))
    if (d.chain.final_embedding() == target) sum = checked_add(sum, d.critical_dimension % 2 == 0 ? 1 : -1);
  return sum;
}

// --- single-position chains --------------------------------------------------------

/// SI table of a chain x_0 ⋗ ... ⋗ x_n in P0, ordered by natural label.
inline SkipTable p0_skip_table(const AugmentedPoset& p0, const std::vector<Element>& xs, const NaturalLabeling& ell) {
  auto first_toward = [&](Element a, Element b) -> Element {
    auto down = p0.lower_covers(a);
    std::sort(down.begin(), down.end(), [&](Element x, Element y) { return ell(x) < ell(y); });
    for (Element c : down)
      if (p0.leq(b, c)) return c;
    return a;
  };
  const std::size_t n = xs.size() - 1;
  SkipTable table(n);
  for (std::size_t k = 1; k + 1 <= n; ++k)
    table.fill_row(k, [&](std::size_t m, std::size_t kk) { return first_toward(xs[m], xs[kk + 1]) != xs[m + 1]; });
  return table;
}

/// Predicts whether the whole open chain of a chain that lowers only one
/// position j of w is an MSI, from the P0 chain at position j.
inline bool classify_single_position_msi(const AugmentedPoset& p0, const LabeledChain& c,
                                         std::optional<NaturalLabeling> labeling = {}) {
  const auto ell = labeling_or_default(p0.base(), labeling);
  const auto& w = c.top;
  const auto& eta = c.final_embedding();
  std::optional<std::size_t> j;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (eta[i] != w[i]) {
      if (j) throw DomainError("chain endpoints differ in more than one position");
      j = i;
    }
  if (!j) throw DomainError("chain endpoints are equal");
  const std::size_t n = c.length();
  if (n < 2) return false;

  std::vector<Element> xs;
  for (const auto& t : c.track) xs.push_back(t[*j]);
  const auto table = p0_skip_table(p0, xs, ell);
  const bool proper_si = n >= 3 && (table.is_si(2, n - 1) || table.is_si(1, n - 2));

  const bool rightmost = !(eta[*j] == kZero && *j > 0 && p0.leq(w[*j - 1], w[*j]));
  if (rightmost) return table.is_si(1, n - 1) && !proper_si;
  for (std::size_t i = 1; i < n; ++i)
    if (p0.leq(w[*j - 1], xs[i])) return false;
  return !proper_si;
}

// --- text --------------------------------------------------------------------------

inline std::string format_label(const FinitePoset& p, const ChainLabel& l) {
  return "<" + std::to_string(l.position + 1) + "," + (l.letter == kZero ? std::string("0") : p.name(l.letter)) + ">";
}

inline std::string format_chain(const FinitePoset& p, const LabeledChain& c) {
  std::string out;
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    if (i > 0) out += " > ";
    out += display_word(p, c.elements[i]);
  }
  return out;
}

inline std::string format_labels(const FinitePoset& p, const std::vector<ChainLabel>& labels) {
  std::string out;
  for (const auto& l : labels) out += format_label(p, l);
  return out;
}

inline std::string format_interval(const FinitePoset& p, const LabeledChain& c, const IndexInterval& I) {
  std::string out = "{";
  for (std::size_t i = I.first; i <= I.last; ++i) {
    if (i > I.first) out += ",";
    out += display_word(p, c.elements[i]);
  }
  return out + "}";
}

}  // namespace subword
