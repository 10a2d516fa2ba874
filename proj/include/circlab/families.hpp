#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "circlab/graph.hpp"

namespace circlab {

enum class Family { H, H1, H2, K2_Kk_bCliques, K3_Matching, K2_StarMatching };
enum class Variant { none, G, G1, G2, G3, joined, nonjoined };

// Parameter block for one extremal construction. Field use by family:
//   H:               n, ell (k is implied by ell)
//   H1:              n, k, b1, b2, variant in {G, G1, G2, G3}
//   H2:              n, k, b, variant in {joined, nonjoined}
//   K2_Kk_bCliques:  n, k, b
//   K3_Matching:     n (odd)
//   K2_StarMatching: n, t
struct FamilySpec {
  Family family = Family::H;
  int n = 0;
  int k = 0;
  int ell = 0;
  int b1 = 0;
  int b2 = 0;
  int b = 0;
  int t = 0;
  Variant variant = Variant::none;
};

struct FamilyMeta {
  int expected_circumference = 0;
  int expected_min_degree = 0;  // measured on the built graph, never assumed
};

std::string family_name(Family f);
Family family_from_name(const std::string& s);
std::string variant_name(Variant v);
Variant variant_from_name(const std::string& s);

nlohmann::ordered_json spec_to_json(const FamilySpec& s);
FamilySpec spec_from_json(const nlohmann::json& j);

// Builds the construction and its declared expectations. Throws
// std::invalid_argument naming the violated constraint on bad parameters.
std::pair<Graph, FamilyMeta> build_family(const FamilySpec& spec);

// Every family/variant/parameter choice from the stability case list that is
// realizable at order n with degree parameter k. Possibly empty; never throws.
std::vector<FamilySpec> family_catalog(int n, int k);

}  // namespace circlab
