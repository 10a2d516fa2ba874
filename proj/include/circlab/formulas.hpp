#pragma once

#include "circlab/count.hpp"
#include "circlab/families.hpp"

namespace circlab {

// Dirac: 2-connected with min degree >= k+1 forces a cycle of length at
// least min(n, 2(k+1)).
long long dirac_min_circumference(long long n, long long k);

// Kopylov: edge maximum for 2-connected graphs of order n with circumference
// at most ell.
Count kopylov_max_edges(long long n, long long ell);

// Furedi-Kostochka-Verstraete refinement; requires n >= 3*floor(ell/2).
Count fkv_edge_threshold(long long n, long long ell);

struct LuoBound {
  Count numerator;  // reduced
  unsigned long long denominator = 1;
  Count floor_value;
  bool equality_possible = false;  // (ell-1) | (n-1)
};

// Maximum number of K_s subgraphs over graphs of order n with circumference
// at most ell: (n-1)/(ell-1) * C(ell, s).
LuoBound luo_max_cliques(long long n, long long ell, long long s);

struct DegreeLocalBound {
  Count numerator;  // reduced
  unsigned long long denominator = 1;
  Count floor_value;
};

// Bounds on the number of 5-cycles (resp. 4-cycles) through a fixed vertex of
// degree at most k-1 in a 2-connected graph with circumference at most 2k+1.
// The 5-cycle bound additionally assumes n >= 3k.
DegreeLocalBound low_degree_c5_bound(long long n, long long k);
Count low_degree_c4_bound(long long n, long long k);

// 5-cycle and 4-cycle counts of H(n, ell) in closed form.
Count c5_closed_form_H(long long n, long long ell);
Count c4_closed_form_H(long long n, long long ell);

// Exact 5-cycle count of any catalog construction. Closed forms are used for
// every family except K2_StarMatching, which is counted exhaustively; each
// closed form is gated by oracle equality in the test suite.
Count c5_closed_form(const FamilySpec& spec);

// The source display for the same quantity, evaluated verbatim. Several of
// these undercount configurations that pick ordered pairs of blocks; the
// audit records the discrepancy instead of patching the display.
Count c5_paper_expression(const FamilySpec& spec);

struct C5Audit {
  bool paper_formula_defined = true;  // false when the display has a free symbol
  Count paper_value;
  Count actual;       // exhaustive count on the built graph
  bool agrees = false;
};

C5Audit audit_c5(const FamilySpec& spec);

struct TuranPrediction {
  Count value;
  bool conjectural = false;  // true when no proven formula backs the value
};

// Predicted maximum number of m-cycles over graphs of order n with
// circumference at most ell, from the extremal constructions.
TuranPrediction turan_extremal_value(long long n, int m, int ell);

}  // namespace circlab
