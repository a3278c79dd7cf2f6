#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <subword/subword.hpp>

using namespace subword;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kResourceError = 3 };

struct Common {
  std::string poset = "lambda";
  std::string u;
  std::string w;
  std::string format = "text";
  Limits limits;
};

void add_common(CLI::App* cmd, Common& c, bool words) {
  cmd->add_option("--poset", c.poset, "built-in poset (chain:n, antichain:n, lambda, lambda:s, fig3) or JSON file")
      ->capture_default_str();
  if (words) {
    cmd->add_option("--u", c.u, "lower word, e.g. 11 or 1,2 (empty: -)")->required();
    cmd->add_option("--w", c.w, "upper word")->required();
  }
  cmd->add_option("--max-nodes", c.limits.max_nodes, "interval node cap")
      ->envname("SUBWORD_MAX_NODES")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-chains", c.limits.max_chains, "maximal chain cap")
      ->envname("SUBWORD_MAX_CHAINS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-word-length", c.limits.max_word_length, "word length cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

struct Loaded {
  FinitePoset poset;
  AugmentedPoset p0;
  Word u;
  Word w;
};

Loaded load(const Common& c) {
  auto p = resolve_poset(c.poset);
  AugmentedPoset p0(p);
  Word u = parse_word(p, c.u);
  Word w = parse_word(p, c.w);
  return {std::move(p), std::move(p0), std::move(u), std::move(w)};
}

std::string interval_name(const Loaded& l) {
  return "[" + display_word(l.poset, l.u) + ", " + display_word(l.poset, l.w) + "]";
}

int cmd_mobius(const Common& c, const std::string& method) {
  const auto l = load(c);
  std::vector<std::pair<std::string, std::int64_t>> values;
  MobiusReport report;
  const bool all = method == "all";
  if (all || method == "formula") {
    report = mobius_main(l.p0, l.u, l.w);
    values.emplace_back("formula", report.value);
  }
  if (all || method == "oracle") values.emplace_back("oracle", mobius_oracle(l.p0, l.u, l.w, c.limits));
  if (all || method == "morse") values.emplace_back("morse", mobius_morse(l.p0, l.u, l.w, c.limits));

  bool agree = true;
  for (const auto& [name, v] : values) agree = agree && v == values.front().second;
  const bool comparable = is_leq_words(l.poset, l.u, l.w);

  if (c.format == "json") {
    nlohmann::json j;
    j["u"] = format_word(l.poset, l.u);
    j["w"] = format_word(l.poset, l.w);
    j["comparable"] = comparable;
    for (const auto& [name, v] : values) j["values"][name] = v;
    j["agree"] = agree;
    if (!report.per_embedding.empty() || method == "formula" || all) j["report"] = report_to_json(l.poset, report);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "interval " << interval_name(l) << " over " << c.poset << "\n";
    if (!comparable) std::cout << "u is not below w\n";
    for (const auto& t : report.per_embedding) {
      std::cout << "  embedding " << format_expansion(l.poset, t.embedding.eta) << "  factors";
      for (auto f : t.factors) std::cout << " " << f;
      std::cout << "  term " << t.product << "\n";
    }
    for (const auto& [name, v] : values) std::cout << name << ": " << v << "\n";
    if (agree)
      std::cout << "mu = " << values.front().second << (values.size() > 1 ? " (all methods agree)" : "") << "\n";
  }
  if (!agree) {
    std::cerr << "methods disagree on " << interval_name(l) << ":";
    for (const auto& [name, v] : values) std::cerr << " " << name << "=" << v;
    std::cerr << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

int cmd_interval(const Common& c) {
  const auto l = load(c);
  const auto d = build_interval(l.p0, l.u, l.w, c.limits);
  if (c.format == "dot")
    std::cout << export_diagram(l.poset, d, DiagramFormat::dot);
  else if (c.format == "json")
    std::cout << export_diagram(l.poset, d, DiagramFormat::json) << "\n";
  else
    std::cout << "interval " << interval_name(l) << ": nodes=" << d.nodes.size() << ", edges=" << d.hasse_edges.size()
              << ", rank=" << d.ranks[d.top_index()] << "\n";
  return kOk;
}

int cmd_critical_chains(const Common& c) {
  const auto l = load(c);
  const auto chains = critical_chains(l.p0, l.u, l.w, c.limits);
  std::int64_t sum = l.u == l.w ? 1 : 0;
  if (c.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& d : chains) {
      nlohmann::json jc;
      for (const auto& v : d.chain.elements) jc["chain"].push_back(format_word(l.poset, v));
      jc["labels"] = format_labels(l.poset, d.chain.labels);
      jc["embedding"] = format_expansion(l.poset, d.chain.final_embedding());
      for (const auto& J : d.j_intervals) jc["j_intervals"].push_back(format_interval(l.poset, d.chain, J));
      if (d.j_intervals.empty()) jc["j_intervals"] = nlohmann::json::array();
      jc["d"] = d.critical_dimension;
      j.push_back(jc);
    }
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  for (const auto& d : chains) {
    const int sign = d.critical_dimension % 2 == 0 ? 1 : -1;
    sum += sign;
    std::cout << format_chain(l.poset, d.chain) << "  labels " << format_labels(l.poset, d.chain.labels) << "  J";
    if (d.j_intervals.empty()) std::cout << " -";
    for (const auto& J : d.j_intervals) std::cout << " " << format_interval(l.poset, d.chain, J);
    std::cout << "  d=" << d.critical_dimension << "  sign=" << (sign > 0 ? "+1" : "-1") << "  ends at "
              << format_expansion(l.poset, d.chain.final_embedding()) << "\n";
  }
  std::cout << "critical chains: " << chains.size() << ", morse sum: " << sum << "\n";
  return kOk;
}

int cmd_homotopy(const Common& c) {
  const auto l = load(c);
  const auto r = homotopy_type(l.p0, l.u, l.w, c.limits);
  if (c.format == "json") {
    std::cout << report_to_json(r).dump(2) << "\n";
  } else {
    std::cout << "interval " << interval_name(l) << ": rk(w)=" << r.rank_w << ", rk(u)=" << r.rank_u << "\n";
    std::cout << "wedge of " << r.sphere_count << " spheres, dim " << r.dimension << "\n";
  }
  return kOk;
}

int cmd_chebyshev(int s, int max_n) {
  if (s < 1 || max_n < 0) throw DomainError("chebyshev needs --s >= 1 and --max-n >= 0");
  for (int n = 0; n <= max_n; ++n)
    std::cout << (s == 2 ? "T_" : "T^" + std::to_string(s) + "_") << n << " = "
              << (s == 2 ? chebyshev_T(n) : tomie_T(s, n)).to_string() << "\n";
  std::cout << std::setw(3) << "i" << std::setw(4) << "j" << std::setw(12) << "mu" << std::setw(12) << "coeff"
            << "  equal\n";
  bool ok = true;
  for (int n = 0; n <= max_n; ++n)
    for (int i = 0; 2 * i <= n; ++i) {
      const int j = n - i;
      const auto r = verify_chebyshev(s, i, j);
      ok = ok && r.equal;
      std::cout << std::setw(3) << i << std::setw(4) << j << std::setw(12) << r.mu << std::setw(12) << r.coeff << "  "
                << (r.equal ? "true" : "false") << "\n";
    }
  return ok ? kOk : kVerifyFailed;
}

int cmd_verify(const std::string& posets, std::size_t max_w, std::uint64_t seed, bool fault, const Limits& limits) {
  VerifyConfig cfg;
  cfg.max_w = max_w;
  cfg.seed = seed;
  cfg.inject_fault = fault;
  cfg.limits = limits;
  const std::string prefix = "random:";
  if (posets.rfind(prefix, 0) != 0) throw InputError("--posets expects random:N");
  const auto count = posets.substr(prefix.size());
  if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("--posets expects random:N");
  cfg.random_posets = std::stoi(count);

  const auto results = run_verification(cfg);
  bool ok = true;
  std::cout << std::left << std::setw(26) << "suite" << std::right << std::setw(10) << "checked" << std::setw(10)
            << "failed" << std::setw(10) << "seconds" << "\n";
  for (const auto& r : results) {
    ok = ok && r.passed();
    std::cout << std::left << std::setw(26) << r.name << std::right << std::setw(10) << r.checked << std::setw(10)
              << r.failures << std::setw(10) << std::fixed << std::setprecision(2) << r.seconds << "\n";
  }
  for (const auto& r : results)
    if (!r.passed()) std::cout << "counterexample (" << r.name << "): " << r.counterexample << "\n";
  std::cout << (ok ? "all suites passed" : "verification FAILED") << "\n";
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Möbius functions, critical chains and homotopy data for generalized subword order"};
  app.require_subcommand(1);

  Common mob, itv, crit, homo, ver;
  std::string method = "formula";
  auto* mobius_cmd = app.add_subcommand("mobius", "Möbius function mu(u, w)");
  add_common(mobius_cmd, mob, true);
  mobius_cmd->add_option("--method", method, "formula, oracle, morse or all")
      ->check(CLI::IsMember({"formula", "oracle", "morse", "all"}))
      ->capture_default_str();
  mobius_cmd->add_option("--format", mob.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* interval_cmd = app.add_subcommand("interval", "Hasse diagram of [u, w]");
  add_common(interval_cmd, itv, true);
  interval_cmd->add_option("--format", itv.format)->check(CLI::IsMember({"text", "dot", "json"}))->capture_default_str();

  auto* critical_cmd = app.add_subcommand("critical-chains", "critical chains of [u, w]");
  add_common(critical_cmd, crit, true);
  critical_cmd->add_option("--format", crit.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* homotopy_cmd = app.add_subcommand("homotopy", "homotopy type of (u, w) for posets of rank <= 1");
  add_common(homotopy_cmd, homo, true);
  homotopy_cmd->add_option("--format", homo.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  int s = 2, max_n = 6;
  auto* chebyshev_cmd = app.add_subcommand("chebyshev", "Chebyshev coefficients against Möbius values");
  chebyshev_cmd->add_option("--s", s, "antichain size of lambda:s")->capture_default_str();
  chebyshev_cmd->add_option("--max-n", max_n, "largest i + j")->capture_default_str();

  std::string posets = "random:20";
  std::size_t max_w = 3;
  std::uint64_t seed = VerifyConfig{}.seed;
  bool fault = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
  add_common(verify_cmd, ver, false);
  verify_cmd->add_option("--posets", posets, "random:N extra random posets")->capture_default_str();
  verify_cmd->add_option("--max-w", max_w, "longest upper word")->capture_default_str();
  verify_cmd->add_option("--seed", seed)->capture_default_str();
  verify_cmd->add_flag("--inject-fault", fault, "flip the sign of the formula to test the harness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*mobius_cmd) return cmd_mobius(mob, method);
    if (*interval_cmd) return cmd_interval(itv);
    if (*critical_cmd) return cmd_critical_chains(crit);
    if (*homotopy_cmd) return cmd_homotopy(homo);
    if (*chebyshev_cmd) return cmd_chebyshev(s, max_n);
    if (*verify_cmd) return cmd_verify(posets, max_w, seed, fault, ver.limits);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
