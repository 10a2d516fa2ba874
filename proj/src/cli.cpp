#include "circlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "circlab/cycles.hpp"
#include "circlab/enumerate.hpp"
#include "circlab/families.hpp"
#include "circlab/formulas.hpp"
#include "circlab/graph6.hpp"
#include "circlab/json_util.hpp"
#include "circlab/verify.hpp"

namespace circlab {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& msg) {
  throw std::invalid_argument(msg);
}

const std::string* find_param(const RunConfig& c, const std::string& key) {
  auto it = c.params.find(key);
  return it == c.params.end() ? nullptr : &it->second;
}

long long parse_int(const std::string& key, const std::string& raw) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(raw, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != raw.size() || raw.empty())
    bad("invalid integer for --" + key + ": '" + raw + "'");
  return v;
}

long long need_int(const RunConfig& c, const std::string& key) {
  const std::string* v = find_param(c, key);
  if (!v) bad("missing required --" + key);
  return parse_int(key, *v);
}

std::optional<long long> opt_int(const RunConfig& c, const std::string& key) {
  const std::string* v = find_param(c, key);
  if (!v) return std::nullopt;
  return parse_int(key, *v);
}

int need_small_int(const RunConfig& c, const std::string& key) {
  long long v = need_int(c, key);
  if (v < -1000000 || v > 1000000) bad("--" + key + " out of range");
  return static_cast<int>(v);
}

int resolve_cap(const RunConfig& c) {
  if (c.cap > 0) return c.cap;
  if (const char* env = std::getenv("CIRCLAB_CAP")) {
    const std::string raw = env;
    const long long v = parse_int("cap (CIRCLAB_CAP)", raw);
    if (v < 1) bad("CIRCLAB_CAP must be >= 1");
    return static_cast<int>(v);
  }
  return kDefaultEnumerationCap;
}

VerifyOptions verify_options(const RunConfig& c) {
  VerifyOptions opt;
  opt.workers = c.workers;
  opt.time_budget_seconds = c.time_budget_seconds;
  opt.cap = resolve_cap(c);
  opt.universe_file = c.input_path;
  return opt;
}

// Output goes to the requested file, or to the caller's stream when no path
// was given. Opening happens before any computation.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) bad("cannot open output file '" + path + "'");
    os_ = &file_;
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

FamilySpec family_spec_from_params(const RunConfig& c) {
  const std::string* fam = find_param(c, "family");
  if (!fam) bad("missing required --family");
  FamilySpec s;
  s.family = family_from_name(*fam);
  s.n = need_small_int(c, "n");
  const std::string* var = find_param(c, "variant");
  switch (s.family) {
    case Family::H:
      s.ell = need_small_int(c, "ell");
      break;
    case Family::H1: {
      s.k = need_small_int(c, "k");
      s.b1 = need_small_int(c, "b1");
      s.b2 = need_small_int(c, "b2");
      s.variant = var ? variant_from_name(*var) : Variant::G;
      break;
    }
    case Family::H2: {
      s.k = need_small_int(c, "k");
      if (auto b = opt_int(c, "b")) {
        s.b = static_cast<int>(*b);
      } else {
        if (s.k < 2 || (s.n - 2) % (s.k - 1) != 0)
          bad("cannot derive --b: n - 2 is not a multiple of k - 1");
        s.b = (s.n - 2) / (s.k - 1);
      }
      s.variant = var ? variant_from_name(*var) : Variant::joined;
      break;
    }
    case Family::K2_Kk_bCliques: {
      s.k = need_small_int(c, "k");
      if (auto b = opt_int(c, "b")) {
        s.b = static_cast<int>(*b);
      } else {
        if (s.k < 2 || s.n < s.k + 2 || (s.n - s.k - 2) % (s.k - 1) != 0)
          bad("cannot derive --b: n - k - 2 is not a multiple of k - 1");
        s.b = (s.n - s.k - 2) / (s.k - 1);
      }
      break;
    }
    case Family::K3_Matching:
      break;
    case Family::K2_StarMatching:
      s.t = need_small_int(c, "t");
      break;
  }
  return s;
}

int do_construct(const RunConfig& c, Sink& sink) {
  const FamilySpec spec = family_spec_from_params(c);
  const Graph g = build_family(spec).first;
  sink.stream() << to_graph6(g) << "\n";
  return 0;
}

int do_analyze(const RunConfig& c, Sink& sink) {
  if (c.input_path.empty()) bad("analyze: requires --input");
  const auto m = opt_int(c, "m");
  const auto s = opt_int(c, "s");
  if (m && (*m < 3 || *m > kWordBits)) bad("--m out of range");
  if (s && (*s < 1 || *s > kWordBits)) bad("--s out of range");
  const std::vector<Graph> graphs = read_graph6_file(c.input_path);
  for (const Graph& g : graphs) {
    ordered_json j;
    j["schema"] = 1;
    j["graph6"] = to_graph6(g);
    j["order"] = g.order();
    j["edges"] = g.edge_count();
    j["min_degree"] = g.order() > 0 ? g.min_degree() : 0;
    j["max_degree"] = g.max_degree();
    j["connected"] = is_connected(g);
    j["two_connected"] = is_two_connected(g);
    j["circumference"] = circumference(g);
    for (int len = 3; len <= 5; ++len)
      j["c" + std::to_string(len)] = count_json(count_cycles(g, len));
    for (int size = 3; size <= 5; ++size)
      j["k" + std::to_string(size)] = count_json(count_cliques(g, size));
    if (m)
      j["c" + std::to_string(*m)] =
          count_json(count_cycles(g, static_cast<int>(*m)));
    if (s)
      j["k" + std::to_string(*s)] =
          count_json(count_cliques(g, static_cast<int>(*s)));
    sink.stream() << j.dump() << "\n";
  }
  return 0;
}

int do_bounds(const RunConfig& c, Sink& sink) {
  const std::string* name = find_param(c, "name");
  if (!name) bad("bounds: requires a formula name");
  ordered_json j;
  j["schema"] = 1;
  j["formula"] = *name;
  if (*name == "dirac") {
    const long long n = need_int(c, "n"), k = need_int(c, "k");
    j["inputs"] = {{"n", n}, {"k", k}};
    j["value"] = dirac_min_circumference(n, k);
  } else if (*name == "kopylov") {
    const long long n = need_int(c, "n"), ell = need_int(c, "ell");
    j["inputs"] = {{"n", n}, {"ell", ell}};
    j["value"] = count_json(kopylov_max_edges(n, ell));
  } else if (*name == "fkv") {
    const long long n = need_int(c, "n"), ell = need_int(c, "ell");
    j["inputs"] = {{"n", n}, {"ell", ell}};
    j["value"] = count_json(fkv_edge_threshold(n, ell));
  } else if (*name == "luo") {
    const long long n = need_int(c, "n"), ell = need_int(c, "ell");
    const long long s = need_int(c, "s");
    j["inputs"] = {{"n", n}, {"ell", ell}, {"s", s}};
    const LuoBound b = luo_max_cliques(n, ell, s);
    j["value"] = count_json(b.floor_value);
    j["numerator"] = count_json(b.numerator);
    j["denominator"] = b.denominator;
    j["equality_possible"] = b.equality_possible;
  } else if (*name == "low_degree_c5") {
    const long long n = need_int(c, "n"), k = need_int(c, "k");
    j["inputs"] = {{"n", n}, {"k", k}};
    const DegreeLocalBound b = low_degree_c5_bound(n, k);
    j["value"] = count_json(b.floor_value);
    j["numerator"] = count_json(b.numerator);
    j["denominator"] = b.denominator;
  } else if (*name == "low_degree_c4") {
    const long long n = need_int(c, "n"), k = need_int(c, "k");
    j["inputs"] = {{"n", n}, {"k", k}};
    j["value"] = count_json(low_degree_c4_bound(n, k));
  } else if (*name == "c5_h") {
    const long long n = need_int(c, "n"), ell = need_int(c, "ell");
    j["inputs"] = {{"n", n}, {"ell", ell}};
    j["value"] = count_json(c5_closed_form_H(n, ell));
  } else if (*name == "c4_h") {
    const long long n = need_int(c, "n"), ell = need_int(c, "ell");
    j["inputs"] = {{"n", n}, {"ell", ell}};
    j["value"] = count_json(c4_closed_form_H(n, ell));
  } else if (*name == "turan") {
    const long long n = need_int(c, "n");
    const int m = need_small_int(c, "m"), ell = need_small_int(c, "ell");
    j["inputs"] = {{"n", n}, {"m", m}, {"ell", ell}};
    const TuranPrediction p = turan_extremal_value(n, m, ell);
    j["value"] = count_json(p.value);
    j["conjectural"] = p.conjectural;
  } else if (*name == "c5_family") {
    const FamilySpec spec = family_spec_from_params(c);
    j["inputs"] = spec_to_json(spec);
    const C5Audit a = audit_c5(spec);
    j["value"] = count_json(a.actual);
    j["display_defined"] = a.paper_formula_defined;
    j["display_value"] = count_json(a.paper_value);
    j["display_agrees"] = a.agrees;
  } else {
    bad("unknown formula '" + *name + "'");
  }
  sink.stream() << j.dump(2) << "\n";
  return 0;
}

int do_verify(const RunConfig& c, Sink& sink) {
  const std::string* name = find_param(c, "name");
  if (!name) bad("verify: requires a theorem name");
  const VerifyOptions opt = verify_options(c);
  TheoremReport r;
  if (*name == "dirac") {
    r = verify_dirac(need_small_int(c, "n-max"), opt);
  } else if (*name == "kopylov") {
    r = verify_kopylov(need_small_int(c, "n-max"), need_small_int(c, "ell"),
                       opt);
  } else if (*name == "stability") {
    r = verify_stability(need_small_int(c, "k"), need_small_int(c, "n"), opt);
  } else if (*name == "luo") {
    r = verify_luo(need_small_int(c, "n-max"), need_small_int(c, "ell"),
                   need_small_int(c, "s"), opt);
  } else {
    bad("unknown theorem '" + *name + "'");
  }
  sink.stream() << r.canonical_text();
  return r.exit_code();
}

int do_turan(const RunConfig& c, Sink& sink) {
  const int n = need_small_int(c, "n");
  const int m = need_small_int(c, "m");
  const int ell = need_small_int(c, "ell");
  const TuranComputation t =
      compute_generalized_turan(n, m, ell, verify_options(c));
  ordered_json j;
  j["schema"] = 1;
  j["n"] = n;
  j["m"] = m;
  j["ell"] = ell;
  j["universe"] = t.universe;
  j["value"] = count_json(t.value);
  j["witnesses"] = t.witnesses;
  j["partial"] = t.partial;
  sink.stream() << j.dump(2) << "\n";
  return t.partial ? 3 : 0;
}

int do_conjecture(const RunConfig& c, Sink& sink) {
  const int n = need_small_int(c, "n");
  const int m = need_small_int(c, "m");
  const int ell = need_small_int(c, "ell");
  const TheoremReport r = explore_conjecture(n, m, ell, verify_options(c));
  sink.stream() << r.canonical_text();
  return r.exit_code();
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.workers < 1) bad("--workers must be >= 1");
    if (config.time_budget_seconds < 0) bad("--time-budget must be > 0");
    if (config.cap < 0) bad("--cap must be >= 1");
    Sink sink(config.output_path, out);
    if (config.subcommand == "construct") return do_construct(config, sink);
    if (config.subcommand == "analyze") return do_analyze(config, sink);
    if (config.subcommand == "bounds") return do_bounds(config, sink);
    if (config.subcommand == "verify") return do_verify(config, sink);
    if (config.subcommand == "turan") return do_turan(config, sink);
    if (config.subcommand == "conjecture") return do_conjecture(config, sink);
    bad("unknown subcommand '" + config.subcommand + "'");
  } catch (const budget_exhausted& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Exact workbench for circumference-constrained extremal graph "
               "problems"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto to_param = [&cfg](const char* key) {
    return [&cfg, key](const std::string& v) { cfg.params[key] = v; };
  };
  auto add_param = [&](CLI::App* sub, const char* flag, const char* key,
                       const char* help) {
    return sub->add_option_function<std::string>(flag, to_param(key), help);
  };
  auto add_io = [&](CLI::App* sub, bool input) {
    if (input)
      sub->add_option("--input", cfg.input_path, "graph6 file, one per line");
    sub->add_option("--output", cfg.output_path,
                    "write the artifact here instead of stdout");
  };
  auto add_run = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "worker threads")
        ->check(CLI::PositiveNumber);
    sub->add_option("--time-budget", cfg.time_budget_seconds,
                    "wall-clock seconds before a partial report is emitted")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap", cfg.cap, "enumeration order cap")
        ->check(CLI::PositiveNumber);
  };
  auto add_family_params = [&](CLI::App* sub) {
    add_param(sub, "--family", "family",
              "H | H1 | H2 | K2_Kk_bCliques | K3_Matching | K2_StarMatching");
    add_param(sub, "--n", "n", "order");
    add_param(sub, "--k", "k", "degree parameter");
    add_param(sub, "--ell", "ell", "circumference parameter");
    add_param(sub, "--b1", "b1", "blocks on the first side (H1)");
    add_param(sub, "--b2", "b2", "blocks on the second side (H1)");
    add_param(sub, "--b", "b", "block count (H2, K2_Kk_bCliques)");
    add_param(sub, "--t", "t", "matching size (K2_StarMatching)");
    add_param(sub, "--variant", "variant", "G | G1 | G2 | G3 | joined | nonjoined");
  };

  CLI::App* construct =
      app.add_subcommand("construct", "emit a catalog construction as graph6");
  add_family_params(construct);
  add_io(construct, false);

  CLI::App* analyze = app.add_subcommand(
      "analyze", "per-graph invariants as JSON lines (requires --input)");
  add_param(analyze, "--m", "m", "extra cycle length to count");
  add_param(analyze, "--s", "s", "extra clique order to count");
  add_io(analyze, true);

  CLI::App* bounds =
      app.add_subcommand("bounds", "evaluate one classical bound or closed form");
  bounds
      ->add_option_function<std::string>(
          "name", to_param("name"),
          "dirac | kopylov | fkv | luo | low_degree_c5 | low_degree_c4 | "
          "c5_h | c4_h | turan | c5_family")
      ->required();
  add_family_params(bounds);
  add_param(bounds, "--s", "s", "clique order");
  add_param(bounds, "--m", "m", "cycle length");
  add_io(bounds, false);

  CLI::App* verify =
      app.add_subcommand("verify", "exhaustively check one theorem");
  verify
      ->add_option_function<std::string>("name", to_param("name"),
                                         "dirac | kopylov | stability | luo")
      ->required();
  add_param(verify, "--n-max", "n-max", "largest order to sweep");
  add_param(verify, "--n", "n", "order (stability)");
  add_param(verify, "--k", "k", "degree parameter (stability)");
  add_param(verify, "--ell", "ell", "circumference cap");
  add_param(verify, "--s", "s", "clique order (luo)");
  add_io(verify, true);
  add_run(verify);

  CLI::App* turan = app.add_subcommand(
      "turan", "exact extremal cycle count with maximizing witnesses");
  add_param(turan, "--n", "n", "order");
  add_param(turan, "--m", "m", "cycle length to maximize");
  add_param(turan, "--ell", "ell", "circumference cap");
  add_io(turan, true);
  add_run(turan);

  CLI::App* conjecture = app.add_subcommand(
      "conjecture", "enumerated maximum versus constructed prediction");
  add_param(conjecture, "--n", "n", "order");
  add_param(conjecture, "--m", "m", "cycle length");
  add_param(conjecture, "--ell", "ell", "circumference cap");
  add_io(conjecture, true);
  add_run(conjecture);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  return run(cfg, std::cout, std::cerr);
}

}  // namespace circlab
