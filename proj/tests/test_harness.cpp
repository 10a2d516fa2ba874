#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "circlab/canonical.hpp"
#include "circlab/cycles.hpp"
#include "circlab/enumerate.hpp"
#include "circlab/families.hpp"
#include "circlab/graph6.hpp"
#include "circlab/verify.hpp"

using namespace circlab;

namespace {

FamilySpec h_spec(int n, int ell) {
  FamilySpec s;
  s.family = Family::H;
  s.n = n;
  s.ell = ell;
  return s;
}

std::string canonical_h(int n, int ell) {
  return canonical_graph6(build_family(h_spec(n, ell)).first);
}

bool has_witness(const TheoremReport& r, const std::string& g6) {
  for (const Witness& w : r.witnesses)
    if (w.graph6 == g6) return true;
  return false;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("circlab_test_" + name) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("a tiny budget cuts enumeration short") {
  // Runs before the full order-9 sweep below so generation cannot come from
  // the memo.
  const Budget tiny(1e-9);
  CHECK_THROWS_AS(all_graph_keys(9, 10, 1, &tiny), budget_exhausted);
}

TEST_CASE("isomorphism-class counts per order") {
  const std::vector<std::size_t> expected = {1,    1,    2,     4,    11,
                                             34,   156,  1044,  12346};
  for (std::size_t n = 0; n < expected.size(); ++n)
    CHECK(all_graph_keys(static_cast<int>(n)).size() == expected[n]);
  CHECK(all_graph_keys(9).size() == 274668u);
  for (int n = 0; n <= 7; ++n) CHECK(all_graph_keys(n) == naive_all_graph_keys(n));
  CHECK_THROWS_AS(all_graph_keys(9, 8), std::invalid_argument);
  CHECK_THROWS_AS(all_graph_keys(kCanonicalMaxOrder + 1, 20),
                  std::invalid_argument);
}

TEST_CASE("filtered enumeration matches the naive sweep") {
  EnumerationFilter two_conn;
  two_conn.require_two_connected = true;
  CHECK(enumerate_graphs(4, two_conn).size() == 3);

  EnumerationFilter conn;
  conn.connected_only = true;
  CHECK(enumerate_graphs(5, conn).size() == 21);

  EnumerationFilter delta2;
  delta2.min_degree = 2;
  EnumerationFilter circ4;
  circ4.max_circumference = 4;
  for (int n = 3; n <= 6; ++n) {
    for (const EnumerationFilter& f : {two_conn, conn, delta2, circ4}) {
      std::size_t naive = 0;
      for (std::uint64_t key : naive_all_graph_keys(n))
        if (passes_filter(graph_from_key(key), f)) ++naive;
      CHECK(enumerate_graphs(n, f).size() == naive);
    }
  }
}

TEST_CASE("filter predicate semantics") {
  EnumerationFilter f;
  f.min_degree = 2;
  CHECK(passes_filter(cycle_graph(5), f));
  CHECK(!passes_filter(complete_graph(4), f));
  f = {};
  f.min_degree_at_least = 2;
  CHECK(passes_filter(complete_graph(4), f));
  CHECK(!passes_filter(path_graph(3), f));
  f = {};
  f.max_circumference = 4;
  CHECK(passes_filter(cycle_graph(4), f));
  CHECK(!passes_filter(cycle_graph(5), f));
  CHECK(passes_filter(path_graph(6), f));
}

TEST_CASE("no minimum-degree counterexamples through order seven") {
  const TheoremReport r = verify_dirac(7);
  CHECK(r.verdict == "pass");
  CHECK(r.exit_code() == 0);
  CHECK(r.violations.empty());
  CHECK(!r.partial);
  CHECK(r.universe == 538u);
  CHECK(r.detail["two_connected_per_order"]["7"] == 468);
  CHECK(r.to_json().contains("schema"));
  CHECK(!r.to_json().contains("elapsed_seconds"));
  CHECK(r.canonical_text().back() == '\n');
}

TEST_CASE("edge bound is tight with the layered construction as witness") {
  for (int ell = 4; ell <= 7; ++ell) {
    const TheoremReport r = verify_kopylov(7, ell);
    INFO("ell=", ell);
    CHECK(r.verdict == "pass");
    CHECK(r.violations.empty());
    CHECK(!r.witnesses.empty());
    CHECK(has_witness(r, canonical_h(7, std::min(ell, 6))));
  }
}

TEST_CASE("stability classification is exhaustive at small orders") {
  const TheoremReport a = verify_stability(2, 6);
  CHECK(a.verdict == "pass");
  CHECK(a.universe == 8u);
  CHECK(a.detail["clauses"]["H_odd"] == 6);
  CHECK(a.detail["clauses"]["H_even"] == 2);
  CHECK(a.detail["universe_min_degree_at_least"] == 8);
  CHECK(a.witnesses.size() == 2);  // one exemplar per populated clause

  const TheoremReport b = verify_stability(2, 7);
  CHECK(b.verdict == "pass");
  CHECK(b.universe == 11u);
  CHECK(b.detail["clauses"]["H_odd"] == 6);
  CHECK(b.detail["clauses"]["H1"] == 3);
  CHECK(b.detail["clauses"]["H_even"] == 2);

  const TheoremReport c = verify_stability(3, 8);
  CHECK(c.verdict == "pass");
  CHECK(c.universe == 28u);
  CHECK(c.detail["clauses"]["H_odd"] == 22);
  CHECK(c.detail["clauses"]["H_even"] == 4);
  CHECK(c.detail["clauses"]["H2"] == 2);
  // Open reading of the degree hypothesis: the wider universe is reported.
  CHECK(c.detail["universe_min_degree_at_least"] == 28);
}

TEST_CASE("every catalog member passes its own stability clause") {
  // The constructions that motivate the case list must classify cleanly:
  // run the full verifier and require complete coverage, then check that
  // each 2-connected catalog member with the right degree shows up inside
  // a populated clause when its circumference qualifies.
  for (int k = 2; k <= 3; ++k) {
    for (int n = 6; n <= 8; ++n) {
      const TheoremReport r = verify_stability(k, n);
      CHECK(r.verdict == "pass");
      unsigned long long classified = 0;
      for (const auto& [name, cnt] : r.detail["clauses"].items())
        classified += cnt.get<unsigned long long>();
      CHECK(classified == r.universe);
    }
  }
}

TEST_CASE("clique bound holds and equality needs the clique chain") {
  const TheoremReport a = verify_luo(6, 4, 2);
  CHECK(a.verdict == "pass");
  CHECK(a.violations.empty());

  const TheoremReport b = verify_luo(6, 5, 3);
  CHECK(b.verdict == "pass");

  const TheoremReport k5 = verify_luo(5, 5, 5);
  CHECK(k5.verdict == "pass");
  REQUIRE(k5.witnesses.size() == 1);
  CHECK(k5.witnesses[0].graph6 == canonical_graph6(complete_graph(5)));
  CHECK(k5.witnesses[0].value == "1");

  const TheoremReport chain = verify_luo(7, 4, 2);
  CHECK(chain.verdict == "pass");
  bool found_12 = false;
  for (const Witness& w : chain.witnesses) found_12 |= w.value == "12";
  CHECK(found_12);
}

TEST_CASE("the stated clique bound fails for single vertices at tiny orders") {
  // With s = 1 the right-hand side shrinks below n for small n, so honest
  // verification reports violations; the meaningful range is s >= 2.
  const TheoremReport r = verify_luo(3, 4, 1);
  CHECK(r.verdict == "violation");
  CHECK(r.exit_code() == 2);
  CHECK(!r.violations.empty());
  CHECK(r.violations[0].detail.find("exceeds bound") != std::string::npos);
}

TEST_CASE("exact extremal values and maximizers") {
  const TuranComputation t = compute_generalized_turan(6, 4, 4);
  CHECK(t.value == Count(6));
  CHECK(t.universe == 76u);
  CHECK(!t.partial);
  bool has_h = false;
  for (const std::string& w : t.witnesses) has_h |= w == canonical_h(6, 4);
  CHECK(has_h);

  const TuranComputation zero = compute_generalized_turan(5, 5, 4);
  CHECK(zero.value == Count(0));
  CHECK(zero.witnesses.empty());

  CHECK(compute_generalized_turan(6, 5, 5).value == Count(12));
}

TEST_CASE("conjecture data points mark small-order excess as inconclusive") {
  const TheoremReport r = explore_conjecture(6, 5, 5);
  CHECK(r.verdict == "inconclusive");
  CHECK(r.exit_code() == 3);
  CHECK(r.detail["enumerated"] == 12);
  CHECK(r.detail["construction"] == 4);
  CHECK(r.detail["relation"] == "enumeration_exceeds");
  CHECK(r.detail["delta"] == 8);
  CHECK(r.detail["note"] == "inconclusive (below threshold)");
  CHECK(r.violations.empty());

  const TheoremReport eq = explore_conjecture(8, 5, 5);
  CHECK(eq.verdict == "pass");
  CHECK(eq.exit_code() == 0);
  CHECK(eq.detail["relation"] == "equal");
  CHECK(!eq.detail.contains("note"));
  CHECK(eq.witnesses.size() == 25);
}

TEST_CASE("reports are byte-identical across worker counts") {
  VerifyOptions w1;
  w1.workers = 1;
  VerifyOptions w4;
  w4.workers = 4;
  CHECK(verify_dirac(7, w1).canonical_text() ==
        verify_dirac(7, w4).canonical_text());
  CHECK(verify_kopylov(6, 4, w1).canonical_text() ==
        verify_kopylov(6, 4, w4).canonical_text());
  CHECK(verify_stability(2, 7, w1).canonical_text() ==
        verify_stability(2, 7, w4).canonical_text());
  CHECK(verify_luo(5, 4, 2, w1).canonical_text() ==
        verify_luo(5, 4, 2, w4).canonical_text());
  const TuranComputation t1 = compute_generalized_turan(6, 4, 4, w1);
  const TuranComputation t4 = compute_generalized_turan(6, 4, 4, w4);
  CHECK(t1.value == t4.value);
  CHECK(t1.witnesses == t4.witnesses);
}

TEST_CASE("expired budgets produce partial, inconclusive reports") {
  VerifyOptions opt;
  opt.time_budget_seconds = 1e-9;
  const TheoremReport r = verify_dirac(8, opt);
  CHECK(r.partial);
  CHECK(r.verdict == "inconclusive");
  CHECK(r.exit_code() == 3);
  CHECK(r.to_json()["partial"] == true);
}

TEST_CASE("an external universe file replaces enumeration") {
  const std::string lines = to_graph6(cycle_graph(5)) + "\n" +
                            to_graph6(complete_graph(4)) + "\r\n" + "\n" +
                            to_graph6(path_graph(4)) + "\n" +
                            to_graph6(complete_graph(5)) + "\n";
  const TempFile file("universe.g6", lines);

  VerifyOptions opt;
  opt.universe_file = file.path;
  const TheoremReport r = verify_dirac(5, opt);
  CHECK(r.verdict == "pass");
  CHECK(r.universe == 3u);  // the path is not 2-connected

  // The cap only constrains enumeration, not supplied universes.
  const TheoremReport wide = verify_dirac(12, opt);
  CHECK(wide.verdict == "pass");
  CHECK(wide.universe == 3u);

  const std::vector<Graph> round = read_graph6_file(file.path);
  REQUIRE(round.size() == 4);
  CHECK(round[0] == cycle_graph(5));
  CHECK(round[1] == complete_graph(4));

  const TempFile bad("bad.g6", "C~\nnot-a-graph\n");
  try {
    read_graph6_file(bad.path);
    CHECK(false);
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
}

TEST_CASE("clique chains attain the clique bound") {
  const Graph two_k5 = clique_chain(9, 5);
  CHECK(two_k5.order() == 9);
  CHECK(two_k5.edge_count() == 20);
  CHECK(count_cliques(two_k5, 3) == Count(20));
  CHECK(circumference(two_k5) == 5);
  const BlockDecomposition bd = blocks(two_k5);
  CHECK(bd.blocks.size() == 2);
  for (vword b : bd.blocks) CHECK(popcount(b) == 5);

  // Leftover vertices form one smaller final block.
  const Graph ragged = clique_chain(6, 4);
  const BlockDecomposition rd = blocks(ragged);
  CHECK(rd.blocks.size() == 2);
  CHECK(circumference(ragged) == 4);

  CHECK(clique_chain(1, 5).edge_count() == 0);
  CHECK_THROWS_AS(clique_chain(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(clique_chain(5, 2), std::invalid_argument);
}
