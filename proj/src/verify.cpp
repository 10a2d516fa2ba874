#include "circlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "circlab/canonical.hpp"
#include "circlab/cycles.hpp"
#include "circlab/families.hpp"
#include "circlab/formulas.hpp"
#include "circlab/graph6.hpp"
#include "circlab/json_util.hpp"

namespace circlab {

nlohmann::ordered_json TheoremReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["theorem"] = theorem;
  j["params"] = params;
  j["universe"] = universe;
  auto va = nlohmann::ordered_json::array();
  for (const Violation& v : violations)
    va.push_back({{"graph6", v.graph6}, {"detail", v.detail}});
  j["violations"] = va;
  auto wa = nlohmann::ordered_json::array();
  for (const Witness& w : witnesses)
    wa.push_back({{"graph6", w.graph6}, {"value", w.value}});
  j["witnesses"] = wa;
  j["detail"] = detail;
  j["partial"] = partial;
  j["verdict"] = verdict;
  return j;
}

std::string TheoremReport::canonical_text() const {
  return to_json().dump(2) + "\n";
}

int TheoremReport::exit_code() const {
  if (verdict == "pass") return 0;
  if (verdict == "violation") return 2;
  return 3;
}

namespace {

using Clock = std::chrono::steady_clock;

Budget make_budget(const VerifyOptions& opt) {
  return opt.time_budget_seconds > 0 ? Budget(opt.time_budget_seconds)
                                     : Budget();
}

// Reports identify graphs by the canonical form when canonization is
// available at that order, by their literal encoding otherwise.
std::string report_string(const Graph& g) {
  if (g.order() <= kCanonicalMaxOrder) return canonical_graph6(g);
  return to_graph6(g);
}

struct SweepLocal {
  unsigned long long universe = 0;
  std::vector<Violation> violations;
  std::vector<Witness> witnesses;
  std::map<std::string, unsigned long long> counters;
  std::map<std::string, std::string> exemplars;  // key -> min graph6
  bool has_best = false;
  Count best{0};
  std::vector<std::string> best_graphs;

  void note_exemplar(const std::string& key, const std::string& g6) {
    auto it = exemplars.find(key);
    if (it == exemplars.end() || g6 < it->second) exemplars[key] = g6;
  }
  void offer_best(const Count& v, const std::string& g6) {
    if (!has_best || best < v) {
      has_best = true;
      best = v;
      best_graphs.assign(1, g6);
    } else if (v == best) {
      best_graphs.push_back(g6);
    }
  }
  void merge(SweepLocal&& o) {
    universe += o.universe;
    violations.insert(violations.end(), o.violations.begin(),
                      o.violations.end());
    witnesses.insert(witnesses.end(), o.witnesses.begin(), o.witnesses.end());
    for (auto& [k, v] : o.counters) counters[k] += v;
    for (auto& [k, v] : o.exemplars) note_exemplar(k, v);
    if (o.has_best) {
      if (!has_best || best < o.best) {
        has_best = true;
        best = o.best;
        best_graphs = std::move(o.best_graphs);
      } else if (o.best == best) {
        best_graphs.insert(best_graphs.end(), o.best_graphs.begin(),
                           o.best_graphs.end());
      }
    }
  }
};

// Parallel sweep over a universe slice; deterministic because every item is
// visited (absent budget exhaustion) and merges are order-insensitive.
// Returns false when the budget expired mid-sweep.
template <typename GetGraph, typename PerGraph>
bool sweep(std::size_t count, GetGraph&& get, const VerifyOptions& opt,
           const Budget& budget, SweepLocal& out, PerGraph&& f) {
  std::atomic<bool> out_of_time{false};
  const int workers = std::max(1, opt.workers);
#pragma omp parallel num_threads(workers)
  {
    SweepLocal local;
#pragma omp for schedule(dynamic, 32)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      if (out_of_time.load(std::memory_order_relaxed)) continue;
      if ((i & 63) == 0 && budget.limited() && budget.expired()) {
        out_of_time.store(true, std::memory_order_relaxed);
        continue;
      }
      f(get(static_cast<std::size_t>(i)), local);
    }
#pragma omp critical
    out.merge(std::move(local));
  }
  return !out_of_time.load();
}

void sort_findings(TheoremReport& r) {
  std::sort(r.violations.begin(), r.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.graph6, a.detail) < std::tie(b.graph6, b.detail);
            });
  std::sort(r.witnesses.begin(), r.witnesses.end(),
            [](const Witness& a, const Witness& b) {
              return std::tie(a.graph6, a.value) < std::tie(b.graph6, b.value);
            });
}

void finalize(TheoremReport& r, Clock::time_point start) {
  sort_findings(r);
  if (!r.violations.empty())
    r.verdict = "violation";
  else if (r.partial)
    r.verdict = "inconclusive";
  else if (r.verdict.empty())
    r.verdict = "pass";
  r.elapsed_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
}

// Universe supplier: either the enumerated isomorphism classes of one order
// or the matching-order slice of an external graph6 file.
struct UniverseSlices {
  bool from_file = false;
  std::vector<Graph> file_graphs;  // sorted by (order, encoding)

  explicit UniverseSlices(const VerifyOptions& opt) {
    if (opt.universe_file.empty()) return;
    from_file = true;
    file_graphs = read_graph6_file(opt.universe_file);
    std::stable_sort(file_graphs.begin(), file_graphs.end(),
                     [](const Graph& a, const Graph& b) {
                       if (a.order() != b.order()) return a.order() < b.order();
                       return to_graph6(a) < to_graph6(b);
                     });
  }

  template <typename PerGraph>
  bool sweep_order(int n, const VerifyOptions& opt, const Budget& budget,
                   SweepLocal& out, PerGraph&& f) const {
    if (from_file) {
      std::vector<const Graph*> slice;
      for (const Graph& g : file_graphs)
        if (g.order() == n) slice.push_back(&g);
      return sweep(
          slice.size(), [&](std::size_t i) -> const Graph& { return *slice[i]; },
          opt, budget, out, f);
    }
    const auto& keys =
        all_graph_keys(n, opt.cap, std::max(1, opt.workers), &budget);
    return sweep(
        keys.size(), [&](std::size_t i) { return graph_from_key(keys[i]); },
        opt, budget, out, f);
  }
};

void attach(TheoremReport& r, SweepLocal& acc) {
  r.universe = acc.universe;
  r.violations = std::move(acc.violations);
  r.witnesses = std::move(acc.witnesses);
}

}  // namespace

TheoremReport verify_dirac(int n_max, const VerifyOptions& opt) {
  const auto start = Clock::now();
  if (opt.universe_file.empty() && n_max > opt.cap)
    throw std::invalid_argument("verify_dirac: n_max exceeds enumeration cap");
  TheoremReport r;
  r.theorem = "dirac";
  r.params = {{"n_max", n_max}};
  UniverseSlices uni(opt);
  Budget budget = make_budget(opt);
  SweepLocal acc;
  auto per_order = nlohmann::ordered_json::object();
  try {
    for (int n = 3; n <= n_max; ++n) {
      SweepLocal order_acc;
      bool done = uni.sweep_order(
          n, opt, budget, order_acc, [&](const Graph& g, SweepLocal& local) {
            if (!is_two_connected(g)) return;
            local.universe += 1;
            const int d = g.min_degree();
            const int required = std::min(g.order(), 2 * d);
            if (!has_cycle_at_least(g, required)) {
              local.violations.push_back(
                  {report_string(g),
                   "min_degree=" + std::to_string(d) +
                       " circumference=" + std::to_string(circumference(g)) +
                       " required=" + std::to_string(required)});
            }
          });
      per_order[std::to_string(n)] = order_acc.universe;
      acc.merge(std::move(order_acc));
      if (!done) {
        r.partial = true;
        break;
      }
    }
  } catch (const budget_exhausted&) {
    r.partial = true;
  }
  attach(r, acc);
  r.detail = {{"two_connected_per_order", per_order}};
  finalize(r, start);
  return r;
}

TheoremReport verify_kopylov(int n_max, int ell, const VerifyOptions& opt) {
  const auto start = Clock::now();
  if (ell < 4) throw std::invalid_argument("verify_kopylov: requires ell >= 4");
  if (opt.universe_file.empty() && n_max > opt.cap)
    throw std::invalid_argument("verify_kopylov: n_max exceeds enumeration cap");
  TheoremReport r;
  r.theorem = "kopylov";
  r.params = {{"n_max", n_max}, {"ell", ell}};
  UniverseSlices uni(opt);
  Budget budget = make_budget(opt);
  SweepLocal acc;
  auto per_order = nlohmann::ordered_json::object();
  try {
    for (int n = 3; n <= n_max; ++n) {
      // The theorem needs a non-Hamiltonian premise at this order: c <= ell
      // and c <= n-1 (a 2-connected graph is forced above min(ell, n-1)).
      const int ell_eff = std::min(ell, n - 1);
      if (ell_eff < 4) continue;
      const Count bound = kopylov_max_edges(n, ell_eff);
      SweepLocal order_acc;
      bool done = uni.sweep_order(
          n, opt, budget, order_acc, [&](const Graph& g, SweepLocal& local) {
            if (!is_two_connected(g)) return;
            if (has_cycle_at_least(g, ell_eff + 1)) return;
            local.universe += 1;
            const Count e(static_cast<unsigned long long>(g.edge_count()));
            if (bound < e) {
              local.violations.push_back(
                  {report_string(g), "edges=" + e.str() +
                                         " exceed bound=" + bound.str()});
            } else if (e == bound) {
              local.witnesses.push_back({report_string(g), e.str()});
            }
          });
      per_order[std::to_string(n)] = nlohmann::ordered_json{
          {"universe", order_acc.universe},
          {"ell_effective", ell_eff},
          {"bound", count_json(bound)}};
      acc.merge(std::move(order_acc));
      if (!done) {
        r.partial = true;
        break;
      }
    }
  } catch (const budget_exhausted&) {
    r.partial = true;
  }
  attach(r, acc);
  r.detail = {{"per_order", per_order}};
  finalize(r, start);
  return r;
}

namespace {

struct StabilityHosts {
  Graph h_odd{0};
  bool has_h_odd = false;
  Graph h_even{0};
  bool has_h_even = false;
  // Isomorphism targets. Canonical keys where canonization is available;
  // otherwise matched by edge count plus spanning-subgraph containment,
  // which coincides with isomorphism at equal order and edge count.
  bool use_keys = false;
  std::set<std::uint64_t> h1_keys;
  std::set<std::uint64_t> h2_keys;
  std::vector<Graph> h1_members;
  std::vector<Graph> h2_members;
  // Remaining c = 2k+1 containment hosts, in case-list order.
  std::vector<std::pair<std::string, Graph>> odd_hosts;

  StabilityHosts(int n, int k) : use_keys(n <= kCanonicalMaxOrder) {
    for (const FamilySpec& spec : family_catalog(n, k)) {
      Graph g = build_family(spec).first;
      switch (spec.family) {
        case Family::H:
          if (spec.ell == 2 * k + 1) {
            h_odd = g;
            has_h_odd = true;
          } else {
            h_even = g;
            has_h_even = true;
          }
          break;
        case Family::H1:
          if (use_keys) h1_keys.insert(canonical_key(g));
          else h1_members.push_back(std::move(g));
          break;
        case Family::H2:
          if (use_keys) h2_keys.insert(canonical_key(g));
          else h2_members.push_back(std::move(g));
          break;
        case Family::K2_Kk_bCliques:
          odd_hosts.emplace_back("K2_Kk_bCliques", std::move(g));
          break;
        case Family::K3_Matching:
          odd_hosts.emplace_back("K3_Matching", std::move(g));
          break;
        case Family::K2_StarMatching:
          odd_hosts.emplace_back("K2_StarMatching", std::move(g));
          break;
      }
    }
  }

  bool iso_member(const Graph& g, const std::set<std::uint64_t>& keys,
                  const std::vector<Graph>& members) const {
    if (use_keys) return keys.count(canonical_key(g)) != 0;
    for (const Graph& m : members)
      if (g.edge_count() == m.edge_count() && is_spanning_subgraph(g, m))
        return true;
    return false;
  }

  // First matching clause of the case list, or empty when none fits.
  std::string classify(const Graph& g, int c, int k) const {
    if (c == 2 * k + 1) {
      if (has_h_odd && is_spanning_subgraph(g, h_odd)) return "H_odd";
      if (iso_member(g, h1_keys, h1_members)) return "H1";
      for (const auto& [name, host] : odd_hosts)
        if (is_spanning_subgraph(g, host)) return name;
      return "";
    }
    if (has_h_even && is_spanning_subgraph(g, h_even)) return "H_even";
    if (iso_member(g, h2_keys, h2_members)) return "H2";
    return "";
  }
};

}  // namespace

TheoremReport verify_stability(int k, int n, const VerifyOptions& opt) {
  const auto start = Clock::now();
  if (k < 2) throw std::invalid_argument("verify_stability: requires k >= 2");
  if (n < 3) throw std::invalid_argument("verify_stability: requires n >= 3");
  if (opt.universe_file.empty() && n > opt.cap)
    throw std::invalid_argument("verify_stability: n exceeds enumeration cap");
  TheoremReport r;
  r.theorem = "stability";
  r.params = {{"k", k}, {"n", n}};
  const StabilityHosts hosts(n, k);
  // Hypotheses: 2-connected, delta = k, and n >= c+1 alongside c <= 2k+1.
  const int c_allowed = std::min(2 * k + 1, n - 1);
  UniverseSlices uni(opt);
  Budget budget = make_budget(opt);
  SweepLocal acc;
  bool done = false;
  try {
    done = uni.sweep_order(
        n, opt, budget, acc, [&](const Graph& g, SweepLocal& local) {
          if (!is_two_connected(g)) return;
          const int d = g.min_degree();
          if (d < k) return;
          if (has_cycle_at_least(g, c_allowed + 1)) return;
          local.counters["min_degree_at_least_k"] += 1;
          if (d != k) return;
          local.universe += 1;
          const int c = circumference(g);
          const std::string g6 = report_string(g);
          if (c < 2 * k) {
            // Cannot happen under Dirac; kept as a tripwire.
            local.violations.push_back(
                {g6, "circumference " + std::to_string(c) +
                         " below 2k despite min degree k"});
            return;
          }
          const std::string clause = hosts.classify(g, c, k);
          if (clause.empty()) {
            local.violations.push_back(
                {g6, "circumference " + std::to_string(c) +
                         " matches no stability clause"});
            return;
          }
          local.counters[clause] += 1;
          local.note_exemplar(clause, g6);
        });
  } catch (const budget_exhausted&) {
  }
  if (!done) r.partial = true;
  for (const auto& [clause, g6] : acc.exemplars)
    acc.witnesses.push_back({g6, clause});
  attach(r, acc);
  auto clauses = nlohmann::ordered_json::object();
  for (const char* name : {"H_odd", "H1", "K2_Kk_bCliques", "K3_Matching",
                           "K2_StarMatching", "H_even", "H2"}) {
    auto it = acc.counters.find(name);
    clauses[name] = it == acc.counters.end() ? 0ull : it->second;
  }
  r.detail = {{"clauses", clauses},
              {"universe_min_degree_exact", r.universe},
              {"universe_min_degree_at_least",
               acc.counters.count("min_degree_at_least_k")
                   ? acc.counters["min_degree_at_least_k"]
                   : 0ull},
              {"circumference_allowed", c_allowed}};
  finalize(r, start);
  return r;
}

namespace {

bool all_blocks_are_complete_of(const Graph& g, int ell) {
  for (vword mask : blocks(g).blocks) {
    if (popcount(mask) != ell) return false;
    std::vector<int> vs;
    for_each_bit(mask, [&](int v) { vs.push_back(v); });
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!g.adjacent(vs[i], vs[j])) return false;
  }
  return true;
}

}  // namespace

TheoremReport verify_luo(int n_max, int ell, int s, const VerifyOptions& opt) {
  const auto start = Clock::now();
  if (ell < 3) throw std::invalid_argument("verify_luo: requires ell >= 3");
  if (s < 1 || s > ell)
    throw std::invalid_argument("verify_luo: requires 1 <= s <= ell");
  if (opt.universe_file.empty() && n_max > opt.cap)
    throw std::invalid_argument("verify_luo: n_max exceeds enumeration cap");
  TheoremReport r;
  r.theorem = "luo";
  r.params = {{"n_max", n_max}, {"ell", ell}, {"s", s}};
  UniverseSlices uni(opt);
  Budget budget = make_budget(opt);
  SweepLocal acc;
  auto per_order = nlohmann::ordered_json::object();
  try {
    for (int n = 1; n <= n_max; ++n) {
      // All graphs, including disconnected ones; cross-multiplied exact
      // comparison against (n-1)/(ell-1) * C(ell, s).
      const Count rhs = [&] {
        Count c = binom(ell, s);
        c *= Count(static_cast<unsigned long long>(n - 1));
        return c;
      }();
      const Count den(static_cast<unsigned long long>(ell - 1));
      SweepLocal order_acc;
      bool done = uni.sweep_order(
          n, opt, budget, order_acc, [&](const Graph& g, SweepLocal& local) {
            if (has_cycle_at_least(g, ell + 1)) return;
            local.universe += 1;
            Count lhs = count_cliques(g, s);
            const Count cliques = lhs;
            lhs *= den;
            if (rhs < lhs) {
              local.violations.push_back(
                  {report_string(g),
                   "clique count " + cliques.str() + " exceeds bound " +
                       rhs.str() + "/" + den.str()});
              return;
            }
            if (lhs == rhs && Count(0) < cliques) {
              const std::string g6 = report_string(g);
              local.witnesses.push_back({g6, cliques.str()});
              // Equality characterization (meaningful for s >= 2): a chain
              // of K_ell blocks, which also forces (ell-1) | (n-1).
              if (s >= 2) {
                if (!all_blocks_are_complete_of(g, ell))
                  local.violations.push_back(
                      {g6, "equality without all blocks complete of order " +
                               std::to_string(ell)});
                else if ((g.order() - 1) % (ell - 1) != 0)
                  local.violations.push_back(
                      {g6, "equality with (ell-1) not dividing (n-1)"});
              }
            }
          });
      per_order[std::to_string(n)] = nlohmann::ordered_json{
          {"universe", order_acc.universe},
          {"bound_numerator", count_json(rhs)},
          {"bound_denominator", ell - 1}};
      acc.merge(std::move(order_acc));
      if (!done) {
        r.partial = true;
        break;
      }
    }
  } catch (const budget_exhausted&) {
    r.partial = true;
  }
  attach(r, acc);
  r.detail = {{"per_order", per_order}};
  finalize(r, start);
  return r;
}

TuranComputation compute_generalized_turan(int n, int m, int ell,
                                           const VerifyOptions& opt) {
  if (m < 3) throw std::invalid_argument("turan: requires m >= 3");
  if (ell < 3) throw std::invalid_argument("turan: requires ell >= 3");
  if (n < 0) throw std::invalid_argument("turan: requires n >= 0");
  if (opt.universe_file.empty() && n > opt.cap)
    throw std::invalid_argument("turan: n exceeds enumeration cap");
  UniverseSlices uni(opt);
  Budget budget = make_budget(opt);
  TuranComputation out;
  SweepLocal acc;
  bool done = false;
  try {
    done = uni.sweep_order(n, opt, budget, acc,
                           [&](const Graph& g, SweepLocal& local) {
                             if (has_cycle_at_least(g, ell + 1)) return;
                             local.universe += 1;
                             local.offer_best(count_cycles(g, m),
                                              report_string(g));
                           });
  } catch (const budget_exhausted&) {
  }
  out.partial = !done;
  out.universe = acc.universe;
  out.value = acc.has_best ? acc.best : Count(0);
  if (acc.has_best && Count(0) < acc.best) {
    std::sort(acc.best_graphs.begin(), acc.best_graphs.end());
    acc.best_graphs.erase(
        std::unique(acc.best_graphs.begin(), acc.best_graphs.end()),
        acc.best_graphs.end());
    out.witnesses = std::move(acc.best_graphs);
  }
  return out;
}

TheoremReport explore_conjecture(int n, int m, int ell,
                                 const VerifyOptions& opt) {
  const auto start = Clock::now();
  TheoremReport r;
  r.theorem = "conjecture";
  r.params = {{"n", n}, {"m", m}, {"ell", ell}};
  const TuranPrediction pred = turan_extremal_value(n, m, ell);
  const TuranComputation comp = compute_generalized_turan(n, m, ell, opt);
  r.universe = comp.universe;
  r.partial = comp.partial;
  for (const std::string& g6 : comp.witnesses)
    r.witnesses.push_back({g6, comp.value.str()});
  std::string relation;
  Count delta(0);
  if (comp.value == pred.value) {
    relation = "equal";
  } else if (pred.value < comp.value) {
    relation = "enumeration_exceeds";
    delta = comp.value;
    delta -= pred.value;
  } else {
    relation = "construction_exceeds";
    delta = pred.value;
    delta -= comp.value;
  }
  r.detail = {{"enumerated", count_json(comp.value)},
              {"construction", count_json(pred.value)},
              {"construction_conjectural", pred.conjectural},
              {"relation", relation},
              {"delta", count_json(delta)}};
  if (relation != "equal")
    r.detail["note"] = "inconclusive (below threshold)";
  finalize(r, start);
  if (!r.partial && r.verdict == "pass" && relation != "equal")
    r.verdict = "inconclusive";
  return r;
}

Graph clique_chain(int n, int ell) {
  if (n < 1) throw std::invalid_argument("clique_chain: requires n >= 1");
  if (ell < 3) throw std::invalid_argument("clique_chain: requires ell >= 3");
  Graph g(n);
  int start = 0;
  while (start < n - 1) {
    const int size = std::min(ell, n - start);
    for (int i = start; i < start + size; ++i)
      for (int j = i + 1; j < start + size; ++j) g.add_edge(i, j);
    start += size - 1;
  }
  return g;
}

}  // namespace circlab
