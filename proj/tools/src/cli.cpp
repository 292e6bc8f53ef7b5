#include "pasep_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <map>
#include <optional>

#include "pasep/ansatz.hpp"
#include "pasep/chain.hpp"
#include "pasep/errors.hpp"
#include "pasep/motzkin.hpp"
#include "pasep/perms.hpp"
#include "pasep/shapes.hpp"
#include "pasep/tableaux.hpp"
#include "pasep/verify.hpp"

namespace pasep::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxEulerianSites = 12;
constexpr std::size_t kMaxHasseSites = 16;
constexpr std::size_t kMaxSimulationSites = 30;

struct GlobalOptions {
  std::string format = "text";
  std::optional<std::size_t> trunc_dim;
  std::uint64_t seed = 20240611;
  std::optional<std::size_t> max_n;
};

// Quotes a CSV field only when it needs it.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << '\n';
}

std::string shortest(double x) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string state_label(const Configuration& tau) { return tau.empty() ? "()" : tau.to_string(); }

Json terms_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"coefficient", c.get_str()}, {"q", m.q}, {"a", m.a}, {"b", m.b}});
  }
  return terms;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- genfun

struct GenfunOptions {
  std::string tau;
  std::string shape;
  std::optional<std::size_t> partition;
  std::string kind = "tableau";
  bool cross_check = false;
};

struct GenfunResult {
  Json input;
  Polynomial primary;
  std::string primary_method;
  Polynomial secondary;
  std::string secondary_method;
};

GenfunResult compute_genfun(const GenfunOptions& o, const GlobalOptions& g) {
  const bool motzkin = o.kind == "motzkin";
  const AnsatzKind kind = motzkin ? AnsatzKind::Motzkin : AnsatzKind::Tableau;
  GenfunResult r;

  if (o.partition) {
    const std::size_t n = *o.partition;
    r.input = {{"partition", n}};
    const AnsatzEvaluator evaluator(kind, g.trunc_dim.value_or(default_dim(n)));
    if (motzkin) {
      for (const auto& tau : all_configurations(n)) r.primary += genfun_type(tau);
      r.primary_method = "motzkin-paths";
    } else {
      r.primary = evaluator.partition_function(n);
      r.primary_method = "ansatz";
    }
    if (o.cross_check) {
      if (motzkin) {
        r.secondary = evaluator.partition_function(n);
        r.secondary_method = "ansatz";
      } else {
        r.secondary = genfun_expanse(n + 1);
        r.secondary_method = "tableaux";
      }
    }
    return r;
  }

  Configuration tau;
  if (!o.tau.empty()) {
    tau = Configuration::parse(o.tau);
    r.input = {{"tau", o.tau}};
  } else {
    const Diagram lambda = Diagram::parse(o.shape);
    tau = phi(lambda);
    r.input = {{"shape", lambda.to_string()}};
  }

  if (motzkin) {
    r.primary = genfun_type(tau);
    r.primary_method = "motzkin-paths";
    if (o.cross_check) {
      r.secondary = ansatz_eval(kind, tau, g.trunc_dim);
      r.secondary_method = "ansatz";
    }
  } else if (!o.tau.empty()) {
    r.primary = ansatz_eval(kind, tau, g.trunc_dim);
    r.primary_method = "ansatz";
    if (o.cross_check) {
      r.secondary = genfun_shape(lambda_of_tau(tau));
      r.secondary_method = "tableaux";
    }
  } else {
    r.primary = genfun_shape(lambda_of_tau(tau));
    r.primary_method = "tableaux";
    if (o.cross_check) {
      r.secondary = ansatz_eval(kind, tau, g.trunc_dim);
      r.secondary_method = "ansatz";
    }
  }
  return r;
}

int cmd_genfun(const GenfunOptions& o, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const int given = static_cast<int>(!o.tau.empty()) + static_cast<int>(!o.shape.empty()) +
                    static_cast<int>(o.partition.has_value());
  if (given != 1) {
    err << "genfun: give exactly one of --tau, --shape, --partition\n";
    return kUsageError;
  }
  const GenfunResult r = compute_genfun(o, g);
  const bool agree = !o.cross_check || r.primary == r.secondary;

  if (g.format == "json") {
    Json j;
    j["input"] = r.input;
    j["kind"] = o.kind;
    j["method"] = r.primary_method;
    j["polynomial"] = r.primary.to_string();
    j["terms"] = terms_json(r.primary);
    if (o.cross_check) {
      j["cross_check"] = {{"method", r.secondary_method}, {"polynomial", r.secondary.to_string()}, {"agree", agree}};
    } else {
      j["cross_check"] = nullptr;
    }
    emit_json(out, j);
  } else if (g.format == "csv") {
    csv_row(out, {"q", "a", "b", "coefficient"});
    for (const auto& [m, c] : r.primary.terms()) {
      csv_row(out, {std::to_string(m.q), std::to_string(m.a), std::to_string(m.b), c.get_str()});
    }
  } else {
    out << r.primary << '\n';
  }

  if (!agree) {
    err << "cross-check failed: " << r.primary_method << " gives " << r.primary << ", " << r.secondary_method
        << " gives " << r.secondary << '\n';
    return kVerificationFailure;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- chain parameters

struct ChainOptions {
  std::size_t n = 0;
  std::string q = "1";
  std::string alpha = "1";
  std::string beta = "1";
  std::uint64_t steps = 1000000;
  std::uint64_t burn_in = 10000;
};

ChainParams chain_params(const ChainOptions& o) {
  ChainParams p{o.n, parse_rational(o.q), parse_rational(o.alpha), parse_rational(o.beta)};
  p.validate();
  return p;
}

Json params_json(const ChainParams& p) {
  return {{"n", p.n}, {"q", to_string(p.q)}, {"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}};
}

// ---------------------------------------------------------------- steady

struct SteadyOptions : ChainOptions {
  std::string method = "solve";
};

int cmd_steady(const SteadyOptions& o, const GlobalOptions& g, std::ostream& out) {
  const ChainParams params = chain_params(o);
  std::vector<std::string> probs;
  std::vector<Json> json_probs;
  if (o.method == "simulate") {
    const auto d = simulate(params, o.steps, o.burn_in, g.seed);
    for (double f : d.freq) {
      probs.push_back(shortest(f));
      json_probs.emplace_back(f);
    }
  } else {
    const auto d = o.method == "ansatz" ? ansatz_distribution(params)
                                         : steady_state_exact(params, g.max_n.value_or(kDefaultExactSiteLimit));
    for (const auto& p : d.prob) {
      probs.push_back(to_string(p));
      json_probs.emplace_back(to_string(p));
    }
  }

  const auto states = all_configurations(params.n);
  if (g.format == "json") {
    Json j = params_json(params);
    j["method"] = o.method;
    if (o.method == "simulate") {
      j["steps"] = o.steps;
      j["burn_in"] = o.burn_in;
      j["seed"] = g.seed;
    }
    Json dist = Json::array();
    for (std::size_t i = 0; i < states.size(); ++i) dist.push_back({{"state", states[i].to_string()}, {"prob", json_probs[i]}});
    j["distribution"] = std::move(dist);
    emit_json(out, j);
  } else if (g.format == "csv") {
    csv_row(out, {"state", "prob"});
    for (std::size_t i = 0; i < states.size(); ++i) csv_row(out, {states[i].to_string(), probs[i]});
  } else {
    for (std::size_t i = 0; i < states.size(); ++i) out << state_label(states[i]) << '\t' << probs[i] << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(const ChainOptions& o, const GlobalOptions& g, std::ostream& out) {
  const ChainParams params = chain_params(o);
  if (params.n > kMaxSimulationSites) throw InvalidParameter("simulate: at most 30 sites");
  const auto empirical = simulate(params, o.steps, o.burn_in, g.seed);
  const std::size_t limit = g.max_n.value_or(kDefaultExactSiteLimit);
  std::optional<ExactDistribution> exact;
  if (params.n <= limit) exact = steady_state_exact(params, limit);
  const double tv = exact ? total_variation(empirical, *exact) : 0.0;

  const auto states = all_configurations(params.n);
  if (g.format == "json") {
    Json j = params_json(params);
    j["steps"] = o.steps;
    j["burn_in"] = o.burn_in;
    j["seed"] = g.seed;
    Json dist = Json::array();
    for (std::size_t i = 0; i < states.size(); ++i) {
      Json row = {{"state", states[i].to_string()}, {"freq", empirical.freq[i]}};
      row["exact"] = exact ? Json(to_string(exact->prob[i])) : Json(nullptr);
      dist.push_back(std::move(row));
    }
    j["distribution"] = std::move(dist);
    j["total_variation"] = exact ? Json(tv) : Json(nullptr);
    emit_json(out, j);
    return kSuccess;
  }

  const bool csv = g.format == "csv";
  if (csv) csv_row(out, {"state", "freq", "exact"});
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::string f = shortest(empirical.freq[i]);
    const std::string ex = exact ? to_string(exact->prob[i]) : "";
    if (csv) {
      csv_row(out, {states[i].to_string(), f, ex});
    } else {
      out << state_label(states[i]) << '\t' << f << (exact ? "\t" + ex : "") << '\n';
    }
  }
  if (!csv && exact) out << "total variation\t" << shortest(tv) << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  bool all = false;
  std::vector<std::string> checks;
};

int cmd_verify(const VerifyOptions& o, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  std::vector<const NamedCheck*> selected;
  if (o.all || o.checks.empty()) {
    for (const auto& c : all_checks()) selected.push_back(&c);
  }
  for (const auto& name : o.checks) {
    const NamedCheck* found = nullptr;
    for (const auto& c : all_checks()) {
      if (c.name == name) found = &c;
    }
    if (!found) {
      err << "verify: unknown check '" << name << "'; known:";
      for (const auto& c : all_checks()) err << ' ' << c.name;
      err << '\n';
      return kUsageError;
    }
    if (!o.all) selected.push_back(found);
  }

  std::vector<CheckResult> results;
  for (const NamedCheck* c : selected) {
    const std::size_t n = g.max_n ? std::min(*g.max_n, c->max_n) : c->max_n;
    results.push_back(c->run(n));
  }
  bool all_passed = true;
  for (const auto& r : results) all_passed = all_passed && r.passed;

  if (g.format == "json") {
    out << report_json(results) << '\n';
  } else if (g.format == "csv") {
    csv_row(out, {"name", "scope", "passed", "cases", "counterexample"});
    for (const auto& r : results) {
      const std::string witness = r.counterexample ? Json(*r.counterexample).dump() : "";
      csv_row(out, {r.name, r.scope, r.passed ? "true" : "false", std::to_string(r.cases), witness});
    }
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.scope << ") cases=" << r.cases << '\n';
      for (const auto& note : r.notes) out << "  note: " << note << '\n';
      if (r.counterexample) out << "  counterexample: " << Json(*r.counterexample).dump() << '\n';
    }
  }
  return all_passed ? kSuccess : kVerificationFailure;
}

// ---------------------------------------------------------------- eulerian

int cmd_eulerian(std::size_t n, const GlobalOptions& g, std::ostream& out) {
  if (n < 1) throw InvalidParameter("eulerian: n must be at least 1");
  if (n > kMaxEulerianSites) throw InvalidParameter("eulerian: n is limited to 12");
  const AnsatzEvaluator evaluator(AnsatzKind::Tableau, g.trunc_dim.value_or(default_dim(n)));
  std::vector<Polynomial> aggregate(n + 1);
  for (const auto& tau : all_configurations(n)) aggregate[tau.particles()] += evaluator.eval(tau).at_ab_one();

  struct Row {
    std::size_t k;
    Polynomial eulerian;
    Polynomial aggregate;
    bool match;
  };
  std::vector<Row> rows;
  bool all_match = true;
  for (std::size_t k = 0; k <= n; ++k) {
    Polynomial e = q_eulerian(static_cast<int>(k + 1), static_cast<int>(n + 1));
    const bool match = e == aggregate[k];
    all_match = all_match && match;
    rows.push_back({k, std::move(e), aggregate[k], match});
  }

  if (g.format == "json") {
    Json j;
    j["n"] = n;
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"k", r.k},
                     {"eulerian", r.eulerian.to_string()},
                     {"aggregate", r.aggregate.to_string()},
                     {"at_q_one", to_string(r.eulerian.eval_q(1))},
                     {"match", r.match}});
    }
    j["rows"] = std::move(arr);
    j["match"] = all_match;
    emit_json(out, j);
  } else if (g.format == "csv") {
    csv_row(out, {"k", "eulerian", "aggregate", "match"});
    for (const auto& r : rows) csv_row(out, {std::to_string(r.k), r.eulerian.to_string(), r.aggregate.to_string(), r.match ? "true" : "false"});
  } else {
    for (const auto& r : rows) {
      out << "k=" << r.k << '\t' << r.eulerian << '\t' << (r.match ? "ok" : "MISMATCH " + r.aggregate.to_string())
          << '\n';
    }
  }
  return all_match ? kSuccess : kVerificationFailure;
}

// ---------------------------------------------------------------- hasse

int cmd_hasse(std::size_t n, std::size_t k, const GlobalOptions& g, std::ostream& out) {
  if (k > n) throw InvalidParameter("hasse: k must not exceed n");
  if (n > kMaxHasseSites) throw InvalidParameter("hasse: n is limited to 16");
  std::vector<Configuration> nodes;
  for (const auto& tau : all_configurations(n)) {
    if (tau.particles() == k) nodes.push_back(tau);
  }
  std::vector<std::pair<const Configuration*, const Configuration*>> edges;
  for (const auto& x : nodes) {
    for (const auto& y : nodes) {
      if (hasse_cover(x, y)) edges.emplace_back(&x, &y);
    }
  }

  if (g.format == "json") {
    Json j;
    j["n"] = n;
    j["k"] = k;
    Json jn = Json::array();
    for (const auto& x : nodes) jn.push_back({{"state", x.to_string()}, {"boxes", lambda_of_tau(x).boxes()}});
    j["nodes"] = std::move(jn);
    Json je = Json::array();
    for (const auto& [x, y] : edges) je.push_back({{"from", x->to_string()}, {"to", y->to_string()}});
    j["edges"] = std::move(je);
    emit_json(out, j);
  } else {
    csv_row(out, {"from", "to"});
    for (const auto& [x, y] : edges) csv_row(out, {x->to_string(), y->to_string()});
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact PASEP stationary distributions, permutation tableaux and Motzkin paths"};
  app.name(args.empty() ? "pasep" : args.front());
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--trunc-dim", global.trunc_dim, "Truncation dimension for the matrix ansatz (default n+2)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", global.seed, "Seed for the simulator")->capture_default_str();
  app.add_option("--max-n", global.max_n, "Largest size for verify sweeps and exact solves");

  GenfunOptions genfun;
  auto* g = app.add_subcommand("genfun", "Generating function of a configuration, shape or system size");
  g->add_option("--tau", genfun.tau, "Configuration over {0,1}, e.g. 010");
  g->add_option("--shape", genfun.shape, "Diagram parts including empty rows, e.g. 2,1,0");
  g->add_option("-z,--partition", genfun.partition, "Partition function Z_n for n sites");
  g->add_option("--kind", genfun.kind, "tableau (symbolic a, b) or motzkin (alpha = beta = 1)")
      ->check(CLI::IsMember({"tableau", "motzkin"}))
      ->capture_default_str();
  g->add_flag("--cross-check", genfun.cross_check, "Recompute by an independent method; exit 1 on mismatch");

  SteadyOptions steady;
  auto* s = app.add_subcommand("steady", "Stationary distribution");
  s->add_option("-n", steady.n, "Number of sites")->required();
  s->add_option("--q", steady.q, "Left hop rate, p/q")->capture_default_str();
  s->add_option("--alpha", steady.alpha, "Entry rate, p/q")->capture_default_str();
  s->add_option("--beta", steady.beta, "Exit rate, p/q")->capture_default_str();
  s->add_option("--method", steady.method, "ansatz, solve or simulate")
      ->check(CLI::IsMember({"ansatz", "solve", "simulate"}))
      ->capture_default_str();
  s->add_option("--steps", steady.steps, "Recorded steps (simulate)")->capture_default_str();
  s->add_option("--burn-in", steady.burn_in, "Unrecorded steps (simulate)")->capture_default_str();

  ChainOptions sim;
  auto* m = app.add_subcommand("simulate", "Monte Carlo run compared with the exact stationary law");
  m->add_option("-n", sim.n, "Number of sites")->required();
  m->add_option("--q", sim.q, "Left hop rate, p/q")->capture_default_str();
  m->add_option("--alpha", sim.alpha, "Entry rate, p/q")->capture_default_str();
  m->add_option("--beta", sim.beta, "Exit rate, p/q")->capture_default_str();
  m->add_option("--steps", sim.steps, "Recorded steps")->capture_default_str();
  m->add_option("--burn-in", sim.burn_in, "Unrecorded steps")->capture_default_str();

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Run the exhaustive identity checks");
  v->add_flag("--all", verify.all, "Run every check");
  v->add_option("--check", verify.checks, "Check name (repeatable)");

  std::size_t eulerian_n = 0;
  auto* e = app.add_subcommand("eulerian", "q-Eulerian polynomials against aggregated stationary weights");
  e->add_option("-n", eulerian_n, "Number of sites")->required();

  std::size_t hasse_n = 0;
  std::size_t hasse_k = 0;
  auto* h = app.add_subcommand("hasse", "Cover relation of the containment order as an edge list");
  h->add_option("-n", hasse_n, "Number of sites")->required();
  h->add_option("-k", hasse_k, "Number of particles")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (g->parsed()) return cmd_genfun(genfun, global, out, err);
    if (s->parsed()) return cmd_steady(steady, global, out);
    if (m->parsed()) return cmd_simulate(sim, global, out);
    if (v->parsed()) return cmd_verify(verify, global, out, err);
    if (e->parsed()) return cmd_eulerian(eulerian_n, global, out);
    if (h->parsed()) return cmd_hasse(hasse_n, hasse_k, global, out);
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsageError;
  } catch (const InvalidParameter& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsageError;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace pasep::cli
