#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"

namespace subword {

// Dense element id of a finite poset.
using Element = int;

// The bottom element adjoined to P to form P0. Never a letter of a word.
inline constexpr Element kZero = -1;

/// A finite poset given by its cover relation.
///
/// Elements are the dense ids 0..n-1; names are display metadata only. The
/// cover list must be acyclic and transitively reduced. The full order is
/// materialised at construction, so `leq` is a table lookup.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Builds a poset from covers (a, b) meaning "b covers a".
  static FinitePoset from_covers(std::vector<std::string> names,
                                 const std::vector<std::pair<Element, Element>>& covers) {
    const auto n = static_cast<Element>(names.size());
    FinitePoset p;
    p.names_ = std::move(names);
    p.lower_.assign(n, {});
    p.upper_.assign(n, {});
    for (auto [a, b] : covers) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw InputError("cover (" + std::to_string(a) + "," + std::to_string(b) + ") references an unknown element");
      if (a == b) throw InputError("element " + p.names_[a] + " cannot cover itself");
      if (std::find(p.upper_[a].begin(), p.upper_[a].end(), b) != p.upper_[a].end())
        throw InputError("duplicate cover " + p.names_[a] + " < " + p.names_[b]);
      p.upper_[a].push_back(b);
      p.lower_[b].push_back(a);
    }
    for (auto& v : p.lower_) std::sort(v.begin(), v.end());
    for (auto& v : p.upper_) std::sort(v.begin(), v.end());

    const auto order = p.topological_order();
    if (order.size() != static_cast<std::size_t>(n)) throw InputError("cover relation contains a cycle");

    // Reflexive-transitive closure, filled from the top of the order down.
    p.leq_.assign(static_cast<std::size_t>(n) * n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Element a = *it;
      p.leq_[p.at(a, a)] = 1;
      for (Element b : p.upper_[a])
        for (Element c = 0; c < n; ++c)
          if (p.leq_[p.at(b, c)]) p.leq_[p.at(a, c)] = 1;
    }

    for (Element a = 0; a < n; ++a)
      for (Element b : p.upper_[a])
        for (Element c : p.upper_[a])
          if (c != b && p.leq_[p.at(c, b)])
            throw InputError("cover " + p.names_[a] + " < " + p.names_[b] + " is implied by " + p.names_[a] +
                             " < " + p.names_[c] + " <= " + p.names_[b] + " (list covers only)");
    return p;
  }

  /// Builds a poset from an order predicate on 0..n-1; covers come from the
  /// transitive reduction of the relation.
  static FinitePoset from_order(std::vector<std::string> names, const std::function<bool(Element, Element)>& leq) {
    const auto n = static_cast<Element>(names.size());
    std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) rel[static_cast<std::size_t>(a) * n + b] = leq(a, b) ? 1 : 0;
    auto lt = [&](Element a, Element b) { return a != b && rel[static_cast<std::size_t>(a) * n + b]; };
    std::vector<std::pair<Element, Element>> covers;
    for (Element a = 0; a < n; ++a) {
      if (!rel[static_cast<std::size_t>(a) * n + a]) throw InputError("order relation is not reflexive");
      for (Element b = 0; b < n; ++b) {
        if (!lt(a, b)) continue;
        if (lt(b, a)) throw InputError("order relation is not antisymmetric");
        bool cover = true;
        for (Element c = 0; c < n && cover; ++c)
          if (lt(a, c) && lt(c, b)) cover = false;
        if (cover) covers.emplace_back(a, b);
      }
    }
    auto p = from_covers(std::move(names), covers);
    if (p.leq_ != rel) throw InputError("order relation is not transitive");
    return p;
  }

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  bool contains(Element x) const { return x >= 0 && static_cast<std::size_t>(x) < names_.size(); }

  const std::string& name(Element x) const {
    check(x);
    return names_[x];
  }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Element> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<Element>(i);
    return std::nullopt;
  }

  Element element(std::string_view name) const {
    if (auto e = find(name)) return *e;
    throw InputError("unknown element '" + std::string(name) + "'");
  }

  bool leq(Element a, Element b) const {
    check(a);
    check(b);
    return leq_[at(a, b)] != 0;
  }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }

  // True iff `upper` covers `lower`.
  bool covers(Element upper, Element lower) const {
    check(upper);
    check(lower);
    return std::binary_search(lower_[upper].begin(), lower_[upper].end(), lower);
  }

  std::span<const Element> lower_covers(Element x) const {
    check(x);
    return lower_[x];
  }
  std::span<const Element> upper_covers(Element x) const {
    check(x);
    return upper_[x];
  }

  bool is_minimal(Element x) const { return lower_covers(x).empty(); }

  std::vector<Element> minimal_elements() const {
    std::vector<Element> out;
    for (Element x = 0; x < static_cast<Element>(size()); ++x)
      if (lower_[x].empty()) out.push_back(x);
    return out;
  }

  std::vector<std::pair<Element, Element>> cover_pairs() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element a = 0; a < static_cast<Element>(size()); ++a)
      for (Element b : upper_[a]) out.emplace_back(a, b);
    return out;
  }

  /// Elements in an order compatible with <, ties broken by smallest id.
  std::vector<Element> topological_order() const {
    const auto n = static_cast<Element>(size());
    std::vector<std::size_t> indeg(n);
    for (Element x = 0; x < n; ++x) indeg[x] = lower_[x].size();
    std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
    for (Element x = 0; x < n; ++x)
      if (indeg[x] == 0) ready.push(x);
    std::vector<Element> order;
    while (!ready.empty()) {
      Element x = ready.top();
      ready.pop();
      order.push_back(x);
      for (Element y : upper_[x])
        if (--indeg[y] == 0) ready.push(y);
    }
    return order;
  }

  /// The subposet on `subset` (in the given order) with the induced order.
  FinitePoset induced(std::span<const Element> subset) const {
    std::vector<std::string> names;
    for (Element x : subset) names.push_back(name(x));
    std::vector<Element> ids(subset.begin(), subset.end());
    return from_order(std::move(names), [&](Element a, Element b) { return leq(ids[a], ids[b]); });
  }

  bool operator==(const FinitePoset& other) const {
    return names_ == other.names_ && lower_ == other.lower_;
  }

 private:
  std::size_t at(Element a, Element b) const { return static_cast<std::size_t>(a) * size() + b; }
  void check(Element x) const {
    if (!contains(x)) throw InputError("unknown element id " + std::to_string(x));
  }

  std::vector<std::string> names_;
  std::vector<std::vector<Element>> lower_;
  std::vector<std::vector<Element>> upper_;
  std::vector<std::uint8_t> leq_;
};

/// Möbius function of a finite poset from a fixed lower element: returns
/// mu(a, z) for every z (0 where a is not below z).
inline std::vector<std::int64_t> mobius_from(const FinitePoset& p, Element a) {
  std::vector<std::int64_t> mu(p.size(), 0);
  const auto order = p.topological_order();
  for (Element z : order) {
    if (!p.leq(a, z)) continue;
    if (z == a) {
      mu[z] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (Element y : order) {
      if (y == z) break;
      if (p.leq(a, y) && p.leq(y, z)) sum = checked_add(sum, mu[y]);
    }
    mu[z] = checked_sub(0, sum);
  }
  return mu;
}

inline std::int64_t mobius(const FinitePoset& p, Element a, Element b) {
  if (!p.leq(a, b)) throw DomainError("mobius(a, b) requires a <= b");
  return mobius_from(p, a)[b];
}

/// P with a bottom element 0 adjoined.
///
/// Base elements keep their ids; the adjoined bottom is `kZero`. The Möbius
/// table of P0 is computed once at construction.
class AugmentedPoset {
 public:
  AugmentedPoset() = default;

  explicit AugmentedPoset(FinitePoset base) : base_(std::move(base)) {
    const auto n = static_cast<Element>(base_.size());
    auto names = base_.names();
    names.push_back("0");
    auto covers = base_.cover_pairs();
    for (Element m : base_.minimal_elements()) covers.emplace_back(n, m);
    extended_ = FinitePoset::from_covers(std::move(names), covers);
    mobius_.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    for (Element a = 0; a <= n; ++a) {
      auto row = mobius_from(extended_, a);
      std::copy(row.begin(), row.end(), mobius_.begin() + static_cast<std::ptrdiff_t>(a) * (n + 1));
    }
  }

  const FinitePoset& base() const { return base_; }
  // P0 as a plain poset; the adjoined bottom has id base().size().
  const FinitePoset& extended() const { return extended_; }

  Element zero_index() const { return static_cast<Element>(base_.size()); }
  Element index(Element x) const {
    if (x == kZero) return zero_index();
    if (!base_.contains(x)) throw InputError("unknown element id " + std::to_string(x));
    return x;
  }
  Element from_index(Element i) const { return i == zero_index() ? kZero : i; }

  bool leq(Element a, Element b) const { return extended_.leq(index(a), index(b)); }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }
  bool covers(Element upper, Element lower) const { return extended_.covers(index(upper), index(lower)); }

  std::vector<Element> lower_covers(Element x) const {
    std::vector<Element> out;
    for (Element y : extended_.lower_covers(index(x))) out.push_back(from_index(y));
    return out;
  }

  std::int64_t mobius(Element a, Element b) const {
    if (!leq(a, b)) throw DomainError("mobius0(a, b) requires a <=0 b");
    return mobius_[static_cast<std::size_t>(index(a)) * (base_.size() + 1) + index(b)];
  }

  std::string name(Element x) const { return x == kZero ? "0" : base_.name(x); }

 private:
  FinitePoset base_;
  FinitePoset extended_;
  std::vector<std::int64_t> mobius_;
};

inline std::int64_t mobius0(const AugmentedPoset& p0, Element a, Element b) { return p0.mobius(a, b); }

inline bool leq(const FinitePoset& p, Element a, Element b) { return p.leq(a, b); }
inline bool leq(const AugmentedPoset& p, Element a, Element b) { return p.leq(a, b); }

/// An order-preserving injection of P into the positive integers, with the
/// adjoined bottom labelled 0.
class NaturalLabeling {
 public:
  NaturalLabeling() = default;

  static NaturalLabeling from_values(const FinitePoset& p, std::vector<int> labels) {
    if (labels.size() != p.size()) throw InputError("labeling must assign one label per element");
    for (Element a = 0; a < static_cast<Element>(p.size()); ++a) {
      if (labels[a] <= 0) throw InputError("labels must be positive integers");
      for (Element b = 0; b < static_cast<Element>(p.size()); ++b) {
        if (a != b && labels[a] == labels[b]) throw InputError("labels must be distinct");
        if (p.less(a, b) && labels[a] >= labels[b]) throw InputError("labeling is not order-preserving");
      }
    }
    NaturalLabeling l;
    l.labels_ = std::move(labels);
    return l;
  }

  int operator()(Element x) const {
    if (x == kZero) return 0;
    if (x < 0 || static_cast<std::size_t>(x) >= labels_.size())
      throw InputError("unknown element id " + std::to_string(x));
    return labels_[x];
  }

  std::span<const int> values() const { return labels_; }

  bool operator==(const NaturalLabeling&) const = default;

 private:
  std::vector<int> labels_;
};

/// Deterministic linear extension: repeatedly label the smallest-id element
/// among the currently minimal unlabelled ones.
inline NaturalLabeling natural_labeling(const FinitePoset& p) {
  std::vector<int> labels(p.size());
  int next = 1;
  for (Element x : p.topological_order()) labels[x] = next++;
  return NaturalLabeling::from_values(p, std::move(labels));
}

/// Length of a longest chain from a minimal element up to x.
inline int rank_element(const FinitePoset& p, Element x) {
  if (!p.contains(x)) throw InputError("unknown element id " + std::to_string(x));
  std::vector<int> rank(p.size(), 0);
  for (Element y : p.topological_order())
    for (Element z : p.lower_covers(y)) rank[y] = std::max(rank[y], rank[z] + 1);
  return rank[x];
}

inline int rank_poset(const FinitePoset& p) {
  int r = 0;
  for (Element x = 0; x < static_cast<Element>(p.size()); ++x) r = std::max(r, rank_element(p, x));
  return r;
}

/// mu of Q with a bottom and top adjoined, via -1 + c0 - c1 + c2 - ...
/// where c_i counts chains of Q with i+1 elements.
inline std::int64_t mobius_hat_chain_count(const FinitePoset& q) {
  const auto n = q.size();
  const auto order = q.topological_order();
  // ending[x][k]: chains with k+1 elements whose top is x.
  std::vector<std::vector<std::int64_t>> ending(n, std::vector<std::int64_t>(n + 1, 0));
  std::int64_t mu = -1;
  for (Element x : order) {
    ending[x][0] = 1;
    for (Element y : order) {
      if (y == x) break;
      if (!q.less(y, x)) continue;
      for (std::size_t k = 0; k + 1 <= n; ++k)
        if (ending[y][k] != 0) ending[x][k + 1] = checked_add(ending[x][k + 1], ending[y][k]);
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t k = 0; k <= n; ++k)
      mu = (k % 2 == 0) ? checked_add(mu, ending[x][k]) : checked_sub(mu, ending[x][k]);
  return mu;
}

// --- built-in posets ---------------------------------------------------------

inline std::vector<std::string> numbered_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return names;
}

inline FinitePoset chain_poset(int n) {
  if (n < 1) throw InputError("chain:n needs n >= 1");
  std::vector<std::pair<Element, Element>> covers;
  for (Element i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return FinitePoset::from_covers(numbered_names(n), covers);
}

inline FinitePoset antichain_poset(int n) {
  if (n < 1) throw InputError("antichain:n needs n >= 1");
  return FinitePoset::from_covers(numbered_names(n), {});
}

// An s-element antichain 1..s with a top s+1; lambda_poset(2) is the poset Λ.
inline FinitePoset lambda_poset(int s = 2) {
  if (s < 1) throw InputError("lambda:s needs s >= 1");
  std::vector<std::pair<Element, Element>> covers;
  for (Element i = 0; i < s; ++i) covers.emplace_back(i, s);
  return FinitePoset::from_covers(numbered_names(s + 1), covers);
}

// Nine elements: minimal 1-4, 5 > 1, 6 > 1,2, 7 > 2, 8 > 3,4, and 9 on top.
inline FinitePoset fig3_poset() {
  const std::vector<std::pair<int, int>> named = {{1, 5}, {1, 6}, {2, 6}, {2, 7}, {3, 8},
                                                  {4, 8}, {5, 9}, {6, 9}, {7, 9}, {8, 9}};
  std::vector<std::pair<Element, Element>> covers;
  for (auto [a, b] : named) covers.emplace_back(a - 1, b - 1);
  return FinitePoset::from_covers(numbered_names(9), covers);
}

/// Resolves `chain:n`, `antichain:n`, `lambda`, `lambda:s` and `fig3`.
inline std::optional<FinitePoset> builtin_poset(std::string_view spec) {
  auto param = [&](std::string_view prefix) -> std::optional<int> {
    if (spec.substr(0, prefix.size()) != prefix) return std::nullopt;
    const std::string rest(spec.substr(prefix.size()));
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad built-in poset parameter in '" + std::string(spec) + "'");
    return std::stoi(rest);
  };
  if (spec == "lambda") return lambda_poset(2);
  if (spec == "fig3") return fig3_poset();
  if (auto n = param("chain:")) return chain_poset(*n);
  if (auto n = param("antichain:")) return antichain_poset(*n);
  if (auto s = param("lambda:")) return lambda_poset(*s);
  return std::nullopt;
}

/// Parses `{"elements": [...], "covers": [[lower, upper], ...]}`.
inline FinitePoset poset_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("poset JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    throw InputError("poset JSON needs an \"elements\" array");
  std::vector<std::string> names;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw InputError("poset JSON element names must be strings");
    const auto s = e.get<std::string>();
    if (s.empty() || s == "0" || s.find(',') != std::string::npos)
      throw InputError("element name '" + s + "' is reserved or contains a comma");
    if (std::find(names.begin(), names.end(), s) != names.end()) throw InputError("duplicate element '" + s + "'");
    names.push_back(s);
  }
  auto id = [&](const nlohmann::json& v) -> Element {
    if (!v.is_string()) throw InputError("cover endpoints must be element names");
    const auto s = v.get<std::string>();
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw InputError("cover references unknown element '" + s + "'");
    return static_cast<Element>(it - names.begin());
  };
  std::vector<std::pair<Element, Element>> covers;
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) throw InputError("\"covers\" must be an array");
    for (const auto& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2) throw InputError("each cover must be a [lower, upper] pair");
      covers.emplace_back(id(c[0]), id(c[1]));
    }
  }
  return FinitePoset::from_covers(std::move(names), covers);
}

inline std::string poset_to_json(const FinitePoset& p) {
  nlohmann::json j;
  j["elements"] = p.names();
  j["covers"] = nlohmann::json::array();
  for (auto [a, b] : p.cover_pairs()) j["covers"].push_back({p.name(a), p.name(b)});
  return j.dump();
}

/// A built-in name or a path to a poset JSON file.
inline FinitePoset resolve_poset(const std::string& source) {
  if (auto p = builtin_poset(source)) return std::move(*p);
  std::ifstream in(source);
  if (!in) throw InputError("'" + source + "' is neither a built-in poset nor a readable file");
  std::stringstream buf;
  buf << in.rdbuf();
  return poset_from_json(buf.str());
}

}  // namespace subword
