#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "circlab/budget.hpp"
#include "circlab/count.hpp"
#include "circlab/enumerate.hpp"
#include "circlab/graph.hpp"

namespace circlab {

struct VerifyOptions {
  int workers = 1;
  double time_budget_seconds = 0;  // 0 = unlimited
  int cap = kDefaultEnumerationCap;
  std::string universe_file;  // non-empty: graph6 lines replace enumeration
};

struct Violation {
  std::string graph6;
  std::string detail;
};

struct Witness {
  std::string graph6;
  std::string value;
};

struct TheoremReport {
  std::string theorem;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  unsigned long long universe = 0;  // graphs examined
  std::vector<Violation> violations;
  std::vector<Witness> witnesses;
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();
  bool partial = false;
  std::string verdict;       // "pass" | "violation" | "inconclusive"
  double elapsed_seconds = 0;  // in-memory only; excluded from JSON

  nlohmann::ordered_json to_json() const;
  std::string canonical_text() const;  // byte-stable serialization
  int exit_code() const;               // 0 pass, 2 violation, 3 inconclusive
};

TheoremReport verify_dirac(int n_max, const VerifyOptions& opt = {});
TheoremReport verify_kopylov(int n_max, int ell, const VerifyOptions& opt = {});
TheoremReport verify_stability(int k, int n, const VerifyOptions& opt = {});
TheoremReport verify_luo(int n_max, int ell, int s,
                         const VerifyOptions& opt = {});

struct TuranComputation {
  Count value;
  std::vector<std::string> witnesses;  // canonical graph6 of the maximizers
  unsigned long long universe = 0;
  bool partial = false;
};

// Exact max of count_cycles(G, m) over all graphs of order n (any
// connectivity) with circumference at most ell. Witnesses are omitted when
// the maximum is zero, where every admissible graph would qualify.
TuranComputation compute_generalized_turan(int n, int m, int ell,
                                           const VerifyOptions& opt = {});

// Data point for the extremal-count conjecture: enumerated maximum versus
// the constructed prediction. Mismatches are inconclusive, never violations.
TheoremReport explore_conjecture(int n, int m, int ell,
                                 const VerifyOptions& opt = {});

// ceil((n-1)/(ell-1)) cliques sharing consecutive cut vertices; every block
// is K_ell exactly when (ell-1) | (n-1).
Graph clique_chain(int n, int ell);

}  // namespace circlab
