#include "circlab/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "circlab/cycles.hpp"

namespace circlab {

namespace {

void need(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("formula: requires ") + what);
}

Count mul(Count a, Count b) {
  a *= b;
  return a;
}

Count ull(unsigned long long v) { return Count(v); }

}  // namespace

long long dirac_min_circumference(long long n, long long k) {
  need(n >= 3, "n >= 3");
  need(k >= 1, "k >= 1");
  return std::min(n, 2 * (k + 1));
}

Count kopylov_max_edges(long long n, long long ell) {
  need(ell >= 4, "ell >= 4");
  need(n >= ell, "n >= ell");
  const long long k = ell / 2;
  Count sparse = binom(ell - 1, 2);
  sparse += ull(2 * (n - ell + 1));
  Count dense = binom(k, 2);
  dense += mul(ull(k), ull(n - k));
  if (ell % 2 == 1) dense += ull(1);  // 2 | (ell - 1)
  return std::max(sparse, dense);
}

Count fkv_edge_threshold(long long n, long long ell) {
  need(ell >= 4, "ell >= 4");
  const long long k = ell / 2;
  const long long half_up = ell - k;
  need(n >= 3 * k, "n >= 3*floor(ell/2)");
  Count v = binom(half_up + 2, 2);
  v += mul(ull(k - 1), ull(n - half_up - 2));
  return v;
}

LuoBound luo_max_cliques(long long n, long long ell, long long s) {
  need(ell >= 3, "ell >= 3");
  need(n >= 1, "n >= 1");
  need(s >= 1 && s <= ell, "1 <= s <= ell");
  LuoBound b;
  Count num = mul(ull(n - 1), binom(ell, s));
  const unsigned long long den = static_cast<unsigned long long>(ell - 1);
  b.floor_value = Count::raw(num.value() / den);
  const unsigned long long rem =
      static_cast<unsigned long long>(num.value() % den);
  const unsigned long long g = std::gcd(rem == 0 ? den : rem, den);
  b.numerator = Count::raw(num.value() / g);
  b.denominator = den / g;
  b.equality_possible = (n - 1) % (ell - 1) == 0;
  return b;
}

DegreeLocalBound low_degree_c5_bound(long long n, long long k) {
  need(k >= 3, "k >= 3");
  need(n >= 3 * k, "n >= 3k");
  // k(k-2)^2 n - k^2 (k-2)^2 / 2 = k(k-2)^2 (2n - k) / 2
  Count num = mul(mul(ull(k), ull((k - 2) * (k - 2))), ull(2 * n - k));
  DegreeLocalBound b;
  b.floor_value = Count::raw(num.value() / 2);
  if (num.value() % 2 == 0) {
    b.numerator = b.floor_value;
    b.denominator = 1;
  } else {
    b.numerator = num;
    b.denominator = 2;
  }
  return b;
}

Count low_degree_c4_bound(long long n, long long k) {
  need(k >= 2, "k >= 2");
  need(n >= 1, "n >= 1");
  return mul(binom(k - 1, 2), ull(n));
}

Count c5_closed_form_H(long long n, long long ell) {
  need(ell >= 4, "ell >= 4");
  need(n >= ell, "n >= ell");
  const long long k = ell / 2;
  const long long lambda = ell - 2 * k;
  Count v = mul(mul(binom(n - k, 2), binom(k, 3)), ull(6));
  v += mul(mul(ull(n - k), binom(k, 4)), ull(12));
  v += mul(binom(k, 5), ull(12));
  if (lambda == 1) {
    v += mul(mul(ull(n - k - 2), binom(k, 2)), ull(2));
    v += mul(binom(k, 3), ull(6));
  }
  return v;
}

Count c4_closed_form_H(long long n, long long ell) {
  need(ell >= 4, "ell >= 4");
  need(n >= ell, "n >= ell");
  const long long k = ell / 2;
  const long long lambda = ell - 2 * k;
  Count v = mul(ull(3), binom(k, 4));
  v += mul(mul(ull(3), ull(n - k)), binom(k, 3));
  v += mul(binom(n - k, 2), binom(k, 2));
  if (lambda == 1) v += mul(ull(2), binom(k, 2));
  return v;
}

namespace {

// 5-cycle census shared by the H1/H2/K2_Kk closed forms. All three graphs
// are "blocks joined to portals": every 5-cycle either lives inside one
// block together with its portals, or consists of two portals, a coherent
// pair inside one block, and a lone vertex of another block (2 cycles per
// choice), or -- for H1 only -- threads the hub edge u1u2.

// Pentagons of K_m restricted to a 5-subset: 12. Removing one edge of the
// host kills the 6 pentagons through it.

Count c5_h1(int k, long long b1, long long b2, Variant variant) {
  const bool uu1 = variant == Variant::G || variant == Variant::G2;
  const bool uu2 = variant == Variant::G || variant == Variant::G1;
  Count v(0);
  // Inside one block + {u_side, u}: K_{k+1}, minus the u-u_side edge when the
  // variant drops it (each 5-subset containing both endpoints loses 6).
  Count blob = mul(binom(k + 1, 5), ull(12));
  Count blob_cut = blob;
  blob_cut -= mul(binom(k - 1, 3), ull(6));
  v += mul(ull(b1), uu1 ? blob : blob_cut);
  v += mul(ull(b2), uu2 ? blob : blob_cut);
  // {u, u_side} + pair in one block + lone vertex in a sibling block.
  Count pair_lone = mul(mul(binom(k - 1, 2), ull(k - 1)), ull(2));
  v += mul(ull(b1 * (b1 - 1) + b2 * (b2 - 1)), pair_lone);
  // {u, u1, u2} + pair in one block; the far hub needs its edge to u.
  Count hub_pair = mul(binom(k - 1, 2), ull(2));
  if (uu2) v += mul(ull(b1), hub_pair);
  if (uu1) v += mul(ull(b2), hub_pair);
  // {u, u1, u2} + one vertex from each side, through the edge u1u2.
  v += mul(ull(b1 * b2), ull(static_cast<long long>(k - 1) * (k - 1)));
  return v;
}

Count c5_h2(int k, long long b, Variant variant) {
  Count v(0);
  // Inside one block + {x, y}: complete except possibly the xy edge; the
  // 5-subsets containing both x and y drop from 12 to 6 when xy is absent.
  Count blob = mul(binom(k - 1, 5), ull(12));
  blob += mul(binom(k - 1, 4), ull(24));
  blob += mul(binom(k - 1, 3), ull(variant == Variant::joined ? 12 : 6));
  v += mul(ull(b), blob);
  // {x, y} + pair in one block + lone vertex in another.
  Count pair_lone = mul(mul(binom(k - 1, 2), ull(k - 1)), ull(2));
  v += mul(ull(b * (b - 1)), pair_lone);
  return v;
}

Count c5_k2kk(int k, long long b) {
  Count v(0);
  v += mul(binom(k + 2, 5), ull(12));
  v += mul(ull(b), mul(binom(k + 1, 5), ull(12)));
  // {x, y} + pair in one block + lone in another, over ordered block pairs
  // (the big block pairs with each small one in both roles).
  Count v2 = mul(mul(ull(b), ull(k)), binom(k - 1, 2));
  v2 += mul(mul(ull(b), ull(k - 1)), binom(k, 2));
  v2 += mul(mul(ull(b * (b - 1)), ull(k - 1)), binom(k - 1, 2));
  v += mul(v2, ull(2));
  return v;
}

Count brute_c5(const FamilySpec& spec) {
  return count_cycles(build_family(spec).first, 5);
}

}  // namespace

Count c5_closed_form(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::H:
      return c5_closed_form_H(spec.n, spec.ell);
    case Family::H1:
      build_family(spec);  // validate parameters
      return c5_h1(spec.k, spec.b1, spec.b2, spec.variant);
    case Family::H2:
      build_family(spec);
      return c5_h2(spec.k, spec.b, spec.variant);
    case Family::K2_Kk_bCliques:
      build_family(spec);
      return c5_k2kk(spec.k, spec.b);
    case Family::K3_Matching: {
      build_family(spec);
      const long long m = (spec.n - 3) / 2;
      Count v = mul(ull(m), ull(12));
      v += mul(binom(m, 2), ull(48));
      return v;
    }
    case Family::K2_StarMatching:
      // No trusted closed form; count exhaustively.
      return brute_c5(spec);
  }
  throw std::invalid_argument("c5_closed_form: unknown family");
}

Count c5_paper_expression(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::H:
      return c5_closed_form_H(spec.n, spec.ell);
    case Family::H1: {
      build_family(spec);
      const long long k = spec.k, b1 = spec.b1, b2 = spec.b2;
      Count v = mul(mul(ull(b1 + b2), binom(k + 1, 5)), ull(12));
      Count pairs = binom(b1, 2);
      pairs += binom(b2, 2);
      v += mul(mul(mul(ull(2), pairs), binom(k - 1, 2)), ull(k - 1));
      v += mul(mul(ull(2 * (b1 + b2)), binom(k - 1, 2)), ull(1));
      v += mul(ull(b1 * b2), ull((k - 1) * (k - 1)));
      return v;
    }
    case Family::H2: {
      build_family(spec);
      const long long k = spec.k, b = spec.b;
      Count v = mul(mul(ull(b), binom(k + 1, 5)), ull(12));
      v += mul(mul(mul(ull(2), binom(b, 2)), binom(k - 1, 2)), ull(k - 1));
      return v;
    }
    case Family::K2_Kk_bCliques: {
      build_family(spec);
      const long long k = spec.k, b = spec.b;
      Count v = mul(ull(b), binom(k + 1, 5));
      v += binom(k + 2, 5);
      v = mul(v, ull(12));
      v += mul(mul(mul(ull(2), binom(b, 2)), binom(k - 1, 2)), ull(k - 1));
      Count tail = mul(mul(ull(k), ull(b)), binom(k - 1, 2));
      tail += mul(mul(ull(b), binom(k, 2)), ull(k - 1));
      v += mul(tail, ull(2));
      return v;
    }
    case Family::K3_Matching: {
      build_family(spec);
      const long long m = (spec.n - 3) / 2;
      Count v = mul(ull(m), ull(12));
      v += mul(mul(ull(2), binom(m, 2)), ull(12));
      v += mul(binom(m, 2), ull(24));
      return v;
    }
    case Family::K2_StarMatching: {
      // The display leaves its star symbol unbound; evaluated with the leaf
      // count substituted, and flagged as undefined by the audit.
      build_family(spec);
      const long long t = spec.t, s = spec.n - 3 - 2 * spec.t;
      Count v = mul(binom(t, 2), ull(8));
      v += mul(binom(s, 2), ull(6));
      v += ull(4 * t * s);
      v += ull(2 * (s + 1) * t);
      return v;
    }
  }
  throw std::invalid_argument("c5_paper_expression: unknown family");
}

C5Audit audit_c5(const FamilySpec& spec) {
  C5Audit a;
  a.paper_formula_defined = spec.family != Family::K2_StarMatching;
  a.paper_value = c5_paper_expression(spec);
  a.actual = brute_c5(spec);
  a.agrees = a.paper_value == a.actual;
  return a;
}

TuranPrediction turan_extremal_value(long long n, int m, int ell) {
  need(ell >= 4, "ell >= 4");
  need(n >= ell, "n >= ell");
  need(m >= 3, "m >= 3");
  TuranPrediction p;
  if (m > ell) {
    p.value = Count(0);  // no cycle longer than the circumference cap
    p.conjectural = false;
    return p;
  }
  if (m == 5 && ell == 5) {
    // Split construction, not H(n, 5): floor((n-3)^2 / 2).
    const unsigned long long d = static_cast<unsigned long long>(n - 3);
    p.value = Count(d * d / 2);
    p.conjectural = false;
    return p;
  }
  if (m == 5) {
    p.value = c5_closed_form_H(n, ell);
    p.conjectural = false;
    return p;
  }
  if (m == 4) {
    p.value = c4_closed_form_H(n, ell);
    p.conjectural = false;
    return p;
  }
  FamilySpec spec;
  spec.family = Family::H;
  spec.n = static_cast<int>(n);
  spec.ell = ell;
  p.value = count_cycles(build_family(spec).first, m);
  p.conjectural = true;
  return p;
}

}  // namespace circlab
