#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "chebyshev.hpp"
#include "errors.hpp"
#include "mobius.hpp"
#include "morse.hpp"
#include "poset.hpp"
#include "words.hpp"

namespace subword {

/// A random poset on n elements: each pair (i, j), i < j in a shuffled order,
/// is related with probability edge_probability, then closed transitively.
inline FinitePoset random_poset(int n, double edge_probability, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(edge_probability);
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) rel[i][i] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) rel[perm[i]][perm[j]] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = 1;
  return FinitePoset::from_order(numbered_names(n), [&](Element a, Element b) { return rel[a][b] != 0; });
}

// Five elements forming two rooted trees: 1 < 2, 1 < 3 < 4, and 5 alone.
inline FinitePoset sample_forest() {
  return FinitePoset::from_covers(numbered_names(5), {{0, 1}, {0, 2}, {2, 3}});
}

/// Every natural labeling of P, one per linear extension.
inline std::vector<NaturalLabeling> all_natural_labelings(const FinitePoset& p) {
  std::vector<NaturalLabeling> out;
  const auto n = static_cast<Element>(p.size());
  std::vector<int> labels(n, 0);
  std::vector<char> used(n, 0);
  auto rec = [&](auto& self, int next) -> void {
    if (next > n) {
      out.push_back(NaturalLabeling::from_values(p, labels));
      return;
    }
    for (Element x = 0; x < n; ++x) {
      if (used[x]) continue;
      bool ready = true;
      for (Element y : p.lower_covers(x))
        if (!used[y]) ready = false;
      if (!ready) continue;
      used[x] = 1;
      labels[x] = next;
      self(self, next + 1);
      used[x] = 0;
    }
  };
  rec(rec, 1);
  return out;
}

/// All pairs u <= w with |w| <= max_length.
inline std::vector<std::pair<Word, Word>> comparable_pairs(const FinitePoset& p, std::size_t max_length) {
  const auto words = all_words(p, max_length);
  std::vector<std::pair<Word, Word>> out;
  for (const auto& w : words)
    for (const auto& u : words) {
      if (u.size() > w.size()) break;
      if (is_leq_words(p, u, w)) out.emplace_back(u, w);
    }
  return out;
}

/// Upward closure of a set of elements.
inline std::vector<Element> upward_closure(const FinitePoset& p, const std::vector<Element>& seeds) {
  std::vector<Element> out;
  for (Element x = 0; x < static_cast<Element>(p.size()); ++x)
    if (std::any_of(seeds.begin(), seeds.end(), [&](Element s) { return p.leq(s, x); })) out.push_back(x);
  return out;
}

struct NamedPoset {
  std::string name;
  FinitePoset poset;
};

struct VerifyConfig {
  int random_posets = 20;
  int random_max_size = 4;
  std::size_t max_w = 3;
  std::uint64_t seed = 20240229;
  bool inject_fault = false;
  Limits limits;
};

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string counterexample;
  double seconds = 0;

  bool passed() const { return failures == 0; }
};

inline std::vector<NamedPoset> builtin_suite_posets() {
  return {{"lambda", lambda_poset(2)},
          {"lambda:3", lambda_poset(3)},
          {"fig3", fig3_poset()},
          {"chain:3", chain_poset(3)},
          {"antichain:3", antichain_poset(3)}};
}

inline std::vector<NamedPoset> random_suite_posets(const VerifyConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> size(1, std::max(1, cfg.random_max_size));
  std::uniform_real_distribution<double> density(0.2, 0.7);
  std::vector<NamedPoset> out;
  for (int k = 0; k < cfg.random_posets; ++k) {
    const int n = size(rng);
    const double d = density(rng);
    out.push_back({"random#" + std::to_string(k), random_poset(n, d, rng)});
  }
  return out;
}

class SuiteRecorder {
 public:
  explicit SuiteRecorder(std::string name) : start_(std::chrono::steady_clock::now()) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checked;
    if (ok) return;
    if (result_.failures++ == 0) result_.counterexample = describe();
  }

  SuiteResult finish() {
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return result_;
  }

 private:
  SuiteResult result_;
  std::chrono::steady_clock::time_point start_;
};

inline std::string describe_pair(const NamedPoset& np, const Word& u, const Word& w) {
  return np.name + ": u=" + display_word(np.poset, u) + " w=" + display_word(np.poset, w);
}

/// formula = oracle on every interval with |w| <= max_w.
inline SuiteResult verify_oracle_equivalence(const std::vector<NamedPoset>& posets, const VerifyConfig& cfg) {
  SuiteRecorder rec("oracle-equivalence");
  for (const auto& np : posets) {
    const AugmentedPoset p0(np.poset);
    for (const auto& [u, w] : comparable_pairs(np.poset, cfg.max_w)) {
      auto formula = mobius_main(p0, u, w).value;
      if (cfg.inject_fault) formula = -formula;
      const auto oracle = mobius_oracle(p0, u, w, cfg.limits);
      rec.check(formula == oracle, [&] {
        return describe_pair(np, u, w) + " formula=" + std::to_string(formula) + " oracle=" + std::to_string(oracle);
      });
    }
  }
  return rec.finish();
}

/// Morse sum = formula, and the critical chains ending at each embedding
/// sum to that embedding's formula term.
inline SuiteResult verify_morse_agreement(const std::vector<NamedPoset>& posets, const VerifyConfig& cfg) {
  SuiteRecorder rec("morse-agreement");
  for (const auto& np : posets) {
    const AugmentedPoset p0(np.poset);
    for (const auto& [u, w] : comparable_pairs(np.poset, cfg.max_w)) {
      if (u == w) continue;
      const auto report = mobius_main(p0, u, w);
      std::map<std::vector<Element>, std::int64_t> by_embedding;
      std::int64_t morse = 0;
      for (const auto& d : critical_chains(p0, u, w, cfg.limits)) {
        const std::int64_t sign = d.critical_dimension % 2 == 0 ? 1 : -1;
        by_embedding[d.chain.final_embedding()] += sign;
        morse += sign;
      }
      rec.check(morse == report.value, [&] {
        return describe_pair(np, u, w) + " morse=" + std::to_string(morse) +
               " formula=" + std::to_string(report.value);
      });
      for (const auto& t : report.per_embedding) {
        const auto it = by_embedding.find(t.embedding.eta);
        const std::int64_t got = it == by_embedding.end() ? 0 : it->second;
        rec.check(got == t.product, [&] {
          return describe_pair(np, u, w) + " embedding " + format_expansion(np.poset, t.embedding.eta) +
                 " critical-chain sum=" + std::to_string(got) + " term=" + std::to_string(t.product);
        });
      }
    }
  }
  return rec.finish();
}

/// Antichain and rooted-forest formulas against the general formula.
inline SuiteResult verify_specializations(const VerifyConfig& cfg) {
  SuiteRecorder rec("specialization-coherence");
  for (int n : {2, 3}) {
    const NamedPoset np{"antichain:" + std::to_string(n), antichain_poset(n)};
    for (const auto& [u, w] : comparable_pairs(np.poset, cfg.max_w + 1)) {
      const auto a = mobius_bjorner(np.poset, u, w);
      const auto b = mobius_main(np.poset, u, w).value;
      rec.check(a == b, [&] {
        return describe_pair(np, u, w) + " antichain=" + std::to_string(a) + " formula=" + std::to_string(b);
      });
    }
  }
  for (const auto& np : {NamedPoset{"chain:4", chain_poset(4)}, NamedPoset{"forest5", sample_forest()}}) {
    const AugmentedPoset p0(np.poset);
    for (const auto& [u, w] : comparable_pairs(np.poset, cfg.max_w)) {
      const auto a = mobius_forest(np.poset, u, w);
      const auto b = mobius_main(p0, u, w).value;
      const auto c = mobius_oracle(p0, u, w, cfg.limits);
      rec.check(a == b && b == c, [&] {
        return describe_pair(np, u, w) + " forest=" + std::to_string(a) + " formula=" + std::to_string(b) +
               " oracle=" + std::to_string(c);
      });
    }
  }
  return rec.finish();
}

inline SuiteResult verify_chebyshev_suite() {
  SuiteRecorder rec("chebyshev");
  for (int n = 0; n <= 20; ++n)
    rec.check(chebyshev_T(n) == chebyshev_T_closed(n), [&] { return "T_" + std::to_string(n) + " closed form"; });
  auto grid = [&](int s, int max_j) {
    for (int j = 0; j <= max_j; ++j)
      for (int i = 0; i <= j; ++i) {
        const auto r = verify_chebyshev(s, i, j);
        rec.check(r.equal, [&] {
          return "s=" + std::to_string(s) + " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                 " mu=" + std::to_string(r.mu) + " coeff=" + std::to_string(r.coeff);
        });
        if (j >= 1 && s == 2) {
          const auto closed = mobius_lambda_closed(i, j);
          rec.check(closed == r.mu, [&] {
            return "closed form at i=" + std::to_string(i) + " j=" + std::to_string(j);
          });
        }
      }
  };
  grid(2, 8);
  for (int s : {1, 3}) grid(s, 5);
  return rec.finish();
}

/// Product lemma, its corollary, inclusion-exclusion over upper ideals,
/// the descent and ascent lemmas, and decreasing labels on critical chains.
inline SuiteResult verify_lemmas(const std::vector<NamedPoset>& posets, const VerifyConfig& cfg) {
  SuiteRecorder rec("lemmas");
  for (const auto& np : posets) {
    const AugmentedPoset p0(np.poset);
    const auto n = static_cast<Element>(np.poset.size());
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        if (!np.poset.leq(a, b)) continue;
        const Word w{a, b};
        const std::vector<Element> zero_a{kZero, a};
        const std::vector<Element> a_zero{a, kZero};
        const auto expected = checked_mul(p0.mobius(kZero, a), p0.mobius(a, b));
        const auto sub = mobius_embedding_subposet(p0, zero_a, w);
        const auto tilde = per_embedding_mu(p0, zero_a, w, cfg.limits);
        rec.check(sub == expected && tilde == expected, [&] {
          return np.name + ": product lemma at a=" + np.poset.name(a) + " b=" + np.poset.name(b);
        });
        const auto corollary = p0.mobius(kZero, b) + (a == b ? 1 : 0);
        rec.check(per_embedding_mu(p0, a_zero, w, cfg.limits) == corollary, [&] {
          return np.name + ": special case at a=" + np.poset.name(a) + " b=" + np.poset.name(b);
        });
      }

    for (const auto& [u, w] : comparable_pairs(np.poset, cfg.max_w)) {
      if (u == w) continue;
      const CoverGraph g(p0, u, w, cfg.limits, natural_labeling(np.poset));
      for_each_decomposition(g, u, w, [&](const MsiDecomposition& d) {
        const auto& L = d.chain.labels;
        for (std::size_t i = 1; i < L.size(); ++i) {
          if (L[i - 1].position > L[i].position) {
            const bool found = std::find(d.msis.begin(), d.msis.end(), IndexInterval{i, i}) != d.msis.end();
            rec.check(found, [&] { return describe_pair(np, u, w) + " descent not a singleton MSI"; });
          }
          if (L[i - 1].position < L[i].position)
            for (const auto& m : d.msis)
              rec.check(!m.contains(i), [&] { return describe_pair(np, u, w) + " MSI contains an ascent"; });
        }
        if (d.is_critical) {
          const auto ell = natural_labeling(np.poset);
          for (std::size_t i = 1; i < L.size(); ++i) {
            const auto before = std::pair(L[i - 1].position, ell(L[i - 1].letter));
            const auto after = std::pair(L[i].position, ell(L[i].letter));
            rec.check(before > after, [&] { return describe_pair(np, u, w) + " critical chain labels not decreasing"; });
          }
        }
      });
    }
  }

  std::mt19937_64 rng(cfg.seed ^ 0x5eedULL);
  for (int trial = 0; trial < 50; ++trial) {
    const auto q = random_poset(1 + trial % 6, 0.4, rng);
    std::bernoulli_distribution coin(0.4);
    std::vector<Element> seeds_u, rest;
    for (Element x = 0; x < static_cast<Element>(q.size()); ++x)
      if (coin(rng)) seeds_u.push_back(x);
    const auto U = upward_closure(q, seeds_u);
    for (Element x = 0; x < static_cast<Element>(q.size()); ++x)
      if (std::find(U.begin(), U.end(), x) == U.end() || coin(rng)) rest.push_back(x);
    const auto V = upward_closure(q, rest);
    std::vector<Element> both;
    std::set_intersection(U.begin(), U.end(), V.begin(), V.end(), std::back_inserter(both));
    const auto lhs = mobius_hat_chain_count(q);
    const auto rhs = mobius_hat_chain_count(q.induced(U)) + mobius_hat_chain_count(q.induced(V)) -
                     mobius_hat_chain_count(q.induced(both));
    rec.check(lhs == rhs, [&] { return "inclusion-exclusion trial " + std::to_string(trial); });
  }
  return rec.finish();
}

/// Runs every suite over the built-in posets plus the random ones. The
/// antichain checks go one letter further than max_w.
inline std::vector<SuiteResult> run_verification(const VerifyConfig& cfg) {
  auto posets = builtin_suite_posets();
  const auto randoms = random_suite_posets(cfg);
  posets.insert(posets.end(), randoms.begin(), randoms.end());

  std::vector<SuiteResult> out;
  out.push_back(verify_oracle_equivalence(posets, cfg));
  out.push_back(verify_morse_agreement(posets, cfg));
  out.push_back(verify_specializations(cfg));
  out.push_back(verify_chebyshev_suite());
  out.push_back(verify_lemmas(posets, cfg));
  return out;
}

}  // namespace subword
