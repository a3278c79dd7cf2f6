#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>
#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "poset.hpp"

namespace subword {

/// A finite word over the elements of P; an element of P*.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Element> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Element> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Element operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Element> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Element> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return boost::hash_range(w.begin(), w.end()); }
};

/// An embedding of u in w: a length-|w| word over P0 whose nonzero letters
/// spell u and which lies pointwise below w.
struct Embedding {
  Word u;
  Word w;
  std::vector<Element> eta;

  bool operator==(const Embedding&) const = default;
};

inline Word restrict_nonzero(std::span<const Element> eta) {
  std::vector<Element> out;
  for (Element x : eta)
    if (x != kZero) out.push_back(x);
  return Word(std::move(out));
}

inline void check_word(const FinitePoset& p, const Word& w) {
  for (Element x : w)
    if (!p.contains(x)) throw InputError("word contains unknown element id " + std::to_string(x));
}

/// u <= w in generalized subword order, by greedy leftmost matching.
inline bool is_leq_words(const FinitePoset& p, const Word& u, const Word& w) {
  check_word(p, u);
  check_word(p, w);
  std::size_t j = 0;
  for (std::size_t i = 0; i < w.size() && j < u.size(); ++i)
    if (p.leq(u[j], w[i])) ++j;
  return j == u.size();
}

/// All embeddings of u in w, leftmost supports first.
inline std::vector<Embedding> embeddings(const FinitePoset& p, const Word& u, const Word& w) {
  check_word(p, u);
  check_word(p, w);
  std::vector<Embedding> out;
  if (u.size() > w.size()) return out;
  std::vector<Element> eta(w.size(), kZero);
  auto rec = [&](auto& self, std::size_t i, std::size_t j) -> void {
    if (j == u.size()) {
      std::fill(eta.begin() + static_cast<std::ptrdiff_t>(i), eta.end(), kZero);
      out.push_back(Embedding{u, w, eta});
      return;
    }
    if (w.size() - i < u.size() - j) return;
    if (p.leq(u[j], w[i])) {
      eta[i] = u[j];
      self(self, i + 1, j + 1);
    }
    eta[i] = kZero;
    self(self, i + 1, j);
  };
  rec(rec, 0, 0);
  return out;
}

/// The embedding placing every letter of u as far right as possible.
inline Embedding rightmost_embedding(const FinitePoset& p, const Word& u, const Word& w) {
  check_word(p, u);
  check_word(p, w);
  std::vector<Element> eta(w.size(), kZero);
  std::size_t j = u.size();
  for (std::size_t i = w.size(); i-- > 0 && j > 0;) {
    if (p.leq(u[j - 1], w[i])) {
      eta[i] = u[j - 1];
      --j;
    }
  }
  if (j != 0) throw DomainError("rightmost_embedding: u is not below w");
  return Embedding{u, w, std::move(eta)};
}

/// Checks both embedding invariants against P0.
inline bool is_embedding(const AugmentedPoset& p0, std::span<const Element> eta, const Word& u, const Word& w) {
  if (eta.size() != w.size()) return false;
  for (std::size_t j = 0; j < eta.size(); ++j) {
    if (eta[j] != kZero && !p0.base().contains(eta[j])) return false;
    if (!p0.leq(eta[j], w[j])) return false;
  }
  return restrict_nonzero(eta) == u;
}

struct Run {
  Element letter;
  std::size_t first;  // 0-based, inclusive
  std::size_t last;

  bool operator==(const Run&) const = default;
};

inline std::vector<Run> runs(const Word& w) {
  std::vector<Run> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!out.empty() && out.back().letter == w[i])
      out.back().last = i;
    else
      out.push_back(Run{w[i], i, i});
  }
  return out;
}

// --- text syntax -------------------------------------------------------------

inline bool single_char_names(const FinitePoset& p) {
  return std::all_of(p.names().begin(), p.names().end(), [](const std::string& s) { return s.size() == 1; });
}

/// Parses "333", "10,2,3", or the empty word ("", "-", "∅").
inline Word parse_word(const FinitePoset& p, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "-" || text == "\xE2\x88\x85") return Word{};
  std::vector<Element> letters;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      const auto piece = trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
      if (piece.empty()) throw InputError("empty letter in word '" + std::string(text) + "'");
      letters.push_back(p.element(piece));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else if (single_char_names(p)) {
    for (char c : text) letters.push_back(p.element(std::string(1, c)));
  } else {
    letters.push_back(p.element(text));
  }
  return Word(std::move(letters));
}

inline std::string format_letters(const FinitePoset& p, std::span<const Element> letters) {
  const bool compact = single_char_names(p);
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += letters[i] == kZero ? std::string("0") : p.name(letters[i]);
  }
  return out;
}

inline std::string format_word(const FinitePoset& p, const Word& w) { return format_letters(p, w.letters()); }

/// Like format_word but renders the empty word as ∅.
inline std::string display_word(const FinitePoset& p, const Word& w) {
  return w.empty() ? std::string("\xE2\x88\x85") : format_word(p, w);
}

inline std::string format_expansion(const FinitePoset& p, std::span<const Element> eta) {
  return format_letters(p, eta);
}

/// Every word over P of length at most max_length, shortest first.
inline std::vector<Word> all_words(const FinitePoset& p, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Element x = 0; x < static_cast<Element>(p.size()); ++x) {
        std::vector<Element> letters(out[i].begin(), out[i].end());
        letters.push_back(x);
        out.emplace_back(std::move(letters));
      }
    }
    begin = end;
  }
  return out;
}

// --- covers and intervals ----------------------------------------------------

/// One lower cover of a word: position `index` of the upper word is lowered
/// to `letter` (kZero means the letter is deleted; deletions always take the
/// first position of a run, which is the rightmost choice).
struct WordCover {
  Word lower;
  std::size_t index;
  Element letter;
};

inline std::vector<WordCover> word_lower_covers(const AugmentedPoset& p0, const Word& w) {
  std::vector<WordCover> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (Element a : p0.lower_covers(w[i])) {
      std::vector<Element> letters(w.begin(), w.end());
      if (a == kZero) {
        if (i > 0 && w[i - 1] == w[i]) continue;
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        letters[i] = a;
      }
      out.push_back(WordCover{Word(std::move(letters)), i, a});
    }
  }
  return out;
}

/// True iff `upper` covers `lower` in P*: one letter lowered by a cover of P0.
inline bool is_word_cover(const AugmentedPoset& p0, const Word& upper, const Word& lower) {
  if (upper.size() == lower.size()) {
    std::size_t diffs = 0, at = 0;
    for (std::size_t i = 0; i < upper.size(); ++i)
      if (upper[i] != lower[i]) ++diffs, at = i;
    return diffs == 1 && p0.covers(upper[at], lower[at]);
  }
  if (upper.size() != lower.size() + 1) return false;
  for (std::size_t i = 0; i < upper.size(); ++i) {
    if (!p0.covers(upper[i], kZero)) continue;
    bool same = true;
    for (std::size_t j = 0, k = 0; j < upper.size() && same; ++j) {
      if (j == i) continue;
      same = upper[j] == lower[k++];
    }
    if (same) return true;
  }
  return false;
}

/// Explicit Hasse diagram of an interval [u, w] of P*.
struct IntervalDiagram {
  Word bottom;
  Word top;
  // Sorted by length, then lexicographically by natural label.
  std::vector<Word> nodes;
  // (upper, lower) index pairs: nodes[upper] covers nodes[lower].
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;
  // Longest-path rank from the bottom.
  std::vector<int> ranks;

  std::optional<std::size_t> index_of(const Word& v) const {
    auto it = std::lower_bound(order_.begin(), order_.end(), v,
                               [&](std::size_t i, const Word& x) { return nodes[i] < x; });
    if (it != order_.end() && nodes[*it] == v) return *it;
    return std::nullopt;
  }

  std::size_t bottom_index() const { return 0; }
  std::size_t top_index() const { return nodes.size() - 1; }

  // Lower covers per node, ascending index.
  std::vector<std::vector<std::size_t>> lower_covers() const {
    std::vector<std::vector<std::size_t>> out(nodes.size());
    for (auto [hi, lo] : hasse_edges) out[hi].push_back(lo);
    for (auto& v : out) std::sort(v.begin(), v.end());
    return out;
  }

  void reindex() {
    order_.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return nodes[a] < nodes[b]; });
  }

  bool operator==(const IntervalDiagram& o) const {
    return bottom == o.bottom && top == o.top && nodes == o.nodes && hasse_edges == o.hasse_edges &&
           ranks == o.ranks;
  }

 private:
  std::vector<std::size_t> order_;
};

/// Builds [u, w] top-down from w. Candidate covers are single-letter
/// reductions; the Hasse edges are their transitive reduction.
inline IntervalDiagram build_interval(const AugmentedPoset& p0, const Word& u, const Word& w,
                                      const Limits& limits = {}) {
  const FinitePoset& p = p0.base();
  check_word(p, u);
  check_word(p, w);
  if (w.size() > limits.max_word_length)
    throw ResourceError("word length " + std::to_string(w.size()) + " exceeds the cap of " +
                        std::to_string(limits.max_word_length));
  if (!is_leq_words(p, u, w)) throw DomainError("build_interval: u is not below w");

  std::vector<Word> found{w};
  std::unordered_map<Word, std::size_t, WordHash> seen{{w, 0}};
  std::vector<std::vector<std::size_t>> children(1);
  for (std::size_t next = 0; next < found.size(); ++next) {
    const Word current = found[next];
    for (auto& cover : word_lower_covers(p0, current)) {
      if (!is_leq_words(p, u, cover.lower)) continue;
      auto [it, inserted] = seen.try_emplace(cover.lower, found.size());
      if (inserted) {
        if (found.size() >= limits.max_nodes)
          throw ResourceError("interval exceeds the node cap of " + std::to_string(limits.max_nodes));
        found.push_back(cover.lower);
        children.emplace_back();
      }
      auto& kids = children[next];
      if (std::find(kids.begin(), kids.end(), it->second) == kids.end()) kids.push_back(it->second);
    }
  }

  const auto labeling = natural_labeling(p);
  auto key = [&](const Word& v) {
    std::vector<int> k{static_cast<int>(v.size())};
    for (Element x : v) k.push_back(labeling(x));
    return k;
  };
  std::vector<std::size_t> perm(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::vector<std::vector<int>> keys;
  keys.reserve(found.size());
  for (const auto& v : found) keys.push_back(key(v));
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> position(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) position[perm[i]] = i;

  IntervalDiagram d;
  d.bottom = u;
  d.top = w;
  for (std::size_t i : perm) d.nodes.push_back(found[i]);
  for (std::size_t hi = 0; hi < found.size(); ++hi) {
    const auto& kids = children[hi];
    for (std::size_t lo : kids) {
      // lo is redundant if it sits below another candidate child.
      bool redundant = false;
      for (std::size_t other : kids)
        if (other != lo && is_leq_words(p, found[lo], found[other])) {
          redundant = true;
          break;
        }
      if (!redundant) d.hasse_edges.emplace_back(position[hi], position[lo]);
    }
  }
  std::sort(d.hasse_edges.begin(), d.hasse_edges.end());

  const auto lower = d.lower_covers();
  d.ranks.assign(d.nodes.size(), 0);
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    for (std::size_t lo : lower[i]) d.ranks[i] = std::max(d.ranks[i], d.ranks[lo] + 1);
  d.reindex();
  return d;
}

inline IntervalDiagram build_interval(const FinitePoset& p, const Word& u, const Word& w, const Limits& limits = {}) {
  return build_interval(AugmentedPoset(p), u, w, limits);
}

enum class DiagramFormat { dot, json };

inline std::string export_diagram(const FinitePoset& p, const IntervalDiagram& d, DiagramFormat format) {
  if (format == DiagramFormat::json) {
    nlohmann::json j;
    j["bottom"] = format_word(p, d.bottom);
    j["top"] = format_word(p, d.top);
    j["nodes"] = nlohmann::json::array();
    for (const auto& v : d.nodes) j["nodes"].push_back(format_word(p, v));
    j["edges"] = nlohmann::json::array();
    for (auto [hi, lo] : d.hasse_edges) j["edges"].push_back({hi, lo});
    j["ranks"] = d.ranks;
    return j.dump();
  }
  std::ostringstream out;
  out << "digraph interval {\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << display_word(p, d.nodes[i]) << "\"];\n";
  for (auto [hi, lo] : d.hasse_edges) out << "  n" << hi << " -> n" << lo << ";\n";
  out << "}\n";
  return out.str();
}

inline IntervalDiagram diagram_from_json(const FinitePoset& p, std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    IntervalDiagram d;
    d.bottom = parse_word(p, j.at("bottom").get<std::string>());
    d.top = parse_word(p, j.at("top").get<std::string>());
    for (const auto& v : j.at("nodes")) d.nodes.push_back(parse_word(p, v.get<std::string>()));
    for (const auto& e : j.at("edges")) {
      const auto hi = e.at(0).get<std::size_t>();
      const auto lo = e.at(1).get<std::size_t>();
      if (hi >= d.nodes.size() || lo >= d.nodes.size()) throw InputError("diagram edge out of range");
      d.hasse_edges.emplace_back(hi, lo);
    }
    d.ranks = j.at("ranks").get<std::vector<int>>();
    if (d.ranks.size() != d.nodes.size()) throw InputError("diagram needs one rank per node");
    d.reindex();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("diagram JSON: ") + e.what());
  }
}

}  // namespace subword
