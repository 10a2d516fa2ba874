#include <doctest.h>

#include <stdexcept>
#include <string>

#include "circlab/cycles.hpp"
#include "circlab/families.hpp"
#include "circlab/graph.hpp"

using namespace circlab;

namespace {

FamilySpec h_spec(int n, int ell) {
  FamilySpec s;
  s.family = Family::H;
  s.n = n;
  s.ell = ell;
  return s;
}

FamilySpec h1_spec(int k, int b1, int b2, Variant v) {
  FamilySpec s;
  s.family = Family::H1;
  s.k = k;
  s.b1 = b1;
  s.b2 = b2;
  s.n = (b1 + b2) * (k - 1) + 3;
  s.variant = v;
  return s;
}

FamilySpec h2_spec(int k, int b, Variant v) {
  FamilySpec s;
  s.family = Family::H2;
  s.k = k;
  s.b = b;
  s.n = b * (k - 1) + 2;
  s.variant = v;
  return s;
}

FamilySpec k2kk_spec(int k, int b) {
  FamilySpec s;
  s.family = Family::K2_Kk_bCliques;
  s.k = k;
  s.b = b;
  s.n = k + 2 + b * (k - 1);
  return s;
}

FamilySpec k3m_spec(int n) {
  FamilySpec s;
  s.family = Family::K3_Matching;
  s.n = n;
  return s;
}

FamilySpec k2sm_spec(int t, int leaves) {
  FamilySpec s;
  s.family = Family::K2_StarMatching;
  s.t = t;
  s.n = 3 + 2 * t + leaves;
  return s;
}

int measured_circumference(const FamilySpec& s) {
  return circumference(build_family(s).first);
}

}  // namespace

TEST_CASE("H construction shape") {
  auto [g, meta] = build_family(h_spec(10, 6));
  CHECK(g.order() == 10);
  CHECK(g.edge_count() == 3 + 3 * 7);  // K3 plus join edges
  CHECK(g.min_degree() == 3);
  CHECK(meta.expected_circumference == 6);
  CHECK(circumference(g) == 6);

  // Odd ell keeps one edge on the independent side.
  auto [g5, meta5] = build_family(h_spec(9, 5));
  CHECK(g5.edge_count() == 1 + 2 * 7 + 1);
  CHECK(meta5.expected_circumference == 5);
  CHECK(circumference(g5) == 5);
  CHECK(g5.min_degree() == 2);
}

TEST_CASE("H1 circumference cases, hand-derived") {
  // Both sides populated: 2k+1 for every variant.
  for (Variant v : {Variant::G, Variant::G1, Variant::G2, Variant::G3}) {
    CHECK(measured_circumference(h1_spec(3, 1, 1, v)) == 7);
    CHECK(measured_circumference(h1_spec(3, 2, 1, v)) == 7);
    CHECK(measured_circumference(h1_spec(2, 1, 1, v)) == 5);
  }
  // One side only, two or more blocks: 2k.
  CHECK(measured_circumference(h1_spec(3, 2, 0, Variant::G)) == 6);
  CHECK(measured_circumference(h1_spec(3, 0, 2, Variant::G3)) == 6);
  CHECK(measured_circumference(h1_spec(4, 3, 0, Variant::G2)) == 8);
  // Single block: k+2 while the bare hub keeps its edge to u, else k+1.
  CHECK(measured_circumference(h1_spec(3, 1, 0, Variant::G)) == 5);
  CHECK(measured_circumference(h1_spec(3, 1, 0, Variant::G1)) == 5);
  CHECK(measured_circumference(h1_spec(3, 1, 0, Variant::G2)) == 4);
  CHECK(measured_circumference(h1_spec(3, 1, 0, Variant::G3)) == 4);
  CHECK(measured_circumference(h1_spec(3, 0, 1, Variant::G2)) == 5);
  CHECK(measured_circumference(h1_spec(3, 0, 1, Variant::G1)) == 4);
  // k = 2 degenerates to a tree once both hub edges are gone.
  CHECK(measured_circumference(h1_spec(2, 1, 0, Variant::G)) == 4);
  CHECK(measured_circumference(h1_spec(2, 1, 0, Variant::G3)) == 0);
  // No blocks at all: the hub triangle, or nothing.
  CHECK(measured_circumference(h1_spec(3, 0, 0, Variant::G)) == 3);
  CHECK(measured_circumference(h1_spec(3, 0, 0, Variant::G3)) == 0);
}

TEST_CASE("H2 circumference cases, hand-derived") {
  CHECK(measured_circumference(h2_spec(3, 3, Variant::joined)) == 6);
  CHECK(measured_circumference(h2_spec(3, 3, Variant::nonjoined)) == 6);
  CHECK(measured_circumference(h2_spec(3, 2, Variant::joined)) == 6);
  CHECK(measured_circumference(h2_spec(4, 2, Variant::nonjoined)) == 8);
  CHECK(measured_circumference(h2_spec(3, 1, Variant::joined)) == 4);
  CHECK(measured_circumference(h2_spec(3, 1, Variant::nonjoined)) == 4);
  CHECK(measured_circumference(h2_spec(2, 1, Variant::joined)) == 3);
  CHECK(measured_circumference(h2_spec(2, 1, Variant::nonjoined)) == 0);

  // K2 + 2K2 on six vertices is Hamiltonian: the even extremal example.
  auto [g, meta] = build_family(h2_spec(3, 2, Variant::joined));
  CHECK(g.order() == 6);
  CHECK(meta.expected_circumference == 6);
  CHECK(g.min_degree() == 3);
}

TEST_CASE("K2 + (K_k and b smaller cliques) circumference") {
  CHECK(measured_circumference(k2kk_spec(3, 0)) == 5);
  CHECK(measured_circumference(k2kk_spec(3, 1)) == 7);
  CHECK(measured_circumference(k2kk_spec(3, 2)) == 7);
  CHECK(measured_circumference(k2kk_spec(4, 1)) == 9);
  CHECK(measured_circumference(k2kk_spec(2, 3)) == 5);
}

TEST_CASE("K3 + matching circumference saturates at nine") {
  CHECK(measured_circumference(k3m_spec(5)) == 5);
  CHECK(measured_circumference(k3m_spec(7)) == 7);
  CHECK(measured_circumference(k3m_spec(9)) == 9);
  CHECK(measured_circumference(k3m_spec(11)) == 9);
  CHECK(measured_circumference(k3m_spec(13)) == 9);
  const Graph g = build_family(k3m_spec(9)).first;
  CHECK(g.min_degree() == 4);
  CHECK(g.edge_count() == 3 + 3 * 6 + 3);
}

TEST_CASE("K2 + (star and matching) circumference ladder") {
  CHECK(measured_circumference(k2sm_spec(1, 2)) == 7);
  CHECK(measured_circumference(k2sm_spec(2, 3)) == 7);
  CHECK(measured_circumference(k2sm_spec(1, 1)) == 6);
  CHECK(measured_circumference(k2sm_spec(2, 1)) == 6);
  CHECK(measured_circumference(k2sm_spec(0, 3)) == 6);
  CHECK(measured_circumference(k2sm_spec(0, 5)) == 6);
  CHECK(measured_circumference(k2sm_spec(0, 2)) == 5);
  CHECK(measured_circumference(k2sm_spec(0, 1)) == 4);
}

TEST_CASE("every catalog expectation matches the measured circumference") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 3; n <= 12; ++n) {
      for (const FamilySpec& spec : family_catalog(n, k)) {
        auto [g, meta] = build_family(spec);
        CHECK(g.order() == n);
        INFO("family ", family_name(spec.family), " n=", n, " k=", k);
        CHECK(circumference(g) == meta.expected_circumference);
        CHECK(g.min_degree() == meta.expected_min_degree);
      }
    }
  }
}

TEST_CASE("catalog is deterministic and json round-trips") {
  const auto a = family_catalog(9, 3);
  const auto b = family_catalog(9, 3);
  REQUIRE(a.size() == b.size());
  CHECK(a.size() == 22);  // 2 H + 16 H1 + 1 chain + 3 star-matching
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(spec_to_json(a[i]) == spec_to_json(b[i]));
    const FamilySpec back = spec_from_json(spec_to_json(a[i]));
    CHECK(spec_to_json(back) == spec_to_json(a[i]));
    CHECK(build_family(back).first == build_family(a[i]).first);
  }
  CHECK(family_catalog(3, 1).empty());
  CHECK(family_catalog(2, 2).empty());
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::H, Family::H1, Family::H2, Family::K2_Kk_bCliques,
                   Family::K3_Matching, Family::K2_StarMatching})
    CHECK(family_from_name(family_name(f)) == f);
  for (Variant v : {Variant::G, Variant::G1, Variant::G2, Variant::G3,
                    Variant::joined, Variant::nonjoined})
    CHECK(variant_from_name(variant_name(v)) == v);
  CHECK_THROWS_AS(family_from_name("nope"), std::invalid_argument);
  CHECK_THROWS_AS(variant_from_name("nope"), std::invalid_argument);
}

TEST_CASE("constraint violations name the constraint") {
  CHECK_THROWS_AS(build_family(h_spec(5, 3)), std::invalid_argument);
  CHECK_THROWS_AS(build_family(h_spec(4, 6)), std::invalid_argument);
  FamilySpec bad = h1_spec(3, 2, 1, Variant::G);
  bad.n += 1;
  CHECK_THROWS_AS(build_family(bad), std::invalid_argument);
  CHECK_THROWS_AS(build_family(h1_spec(3, 1, 1, Variant::joined)),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_family(h2_spec(3, 0, Variant::joined)),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_family(k2sm_spec(0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(build_family(k3m_spec(8)), std::invalid_argument);
  try {
    build_family(h_spec(5, 3));
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("ell >= 4") != std::string::npos);
  }
}
