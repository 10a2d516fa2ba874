#include "circlab/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace circlab {

namespace {

[[noreturn]] void reject(const std::string& what) {
  throw std::invalid_argument("family: " + what);
}

void require(bool ok, const std::string& constraint) {
  if (!ok) reject("constraint violated: " + constraint);
}

// K_k joined to an independent set, plus one independent-side edge when ell
// is odd. Circumference ell: a cycle alternates sides, so it uses at most
// floor(ell/2) clique vertices and at most one independent-side edge.
std::pair<Graph, FamilyMeta> build_h(const FamilySpec& s) {
  require(s.ell >= 4, "H: ell >= 4");
  require(s.n >= s.ell, "H: n >= ell");
  const int k = s.ell / 2;
  const int lambda = s.ell - 2 * k;
  Graph g = join(complete_graph(k), edgeless_graph(s.n - k));
  if (lambda == 1) g.add_edge(k, k + 1);
  return {g, {s.ell, g.min_degree()}};
}

// Two groups of K_{k-1} blocks, each joined to its own hub u1/u2, everything
// joined to u, plus the edge u1u2. Variants drop uu1 and/or uu2.
std::pair<Graph, FamilyMeta> build_h1(const FamilySpec& s) {
  require(s.k >= 2, "H1: k >= 2");
  require(s.b1 >= 0 && s.b2 >= 0, "H1: b1, b2 >= 0");
  require(s.n == (s.b1 + s.b2) * (s.k - 1) + 3, "H1: n = (b1+b2)(k-1) + 3");
  require(s.variant == Variant::G || s.variant == Variant::G1 ||
              s.variant == Variant::G2 || s.variant == Variant::G3,
          "H1: variant in {G, G1, G2, G3}");
  const int k = s.k;
  const int u1 = s.b1 * (k - 1);
  const int u2 = u1 + 1 + s.b2 * (k - 1);
  const int u = s.n - 1;
  Graph g(s.n);
  auto add_side = [&](int base, int count, int hub) {
    for (int c = 0; c < count; ++c) {
      const int lo = base + c * (k - 1);
      for (int i = lo; i < lo + k - 1; ++i) {
        for (int j = i + 1; j < lo + k - 1; ++j) g.add_edge(i, j);
        g.add_edge(i, hub);
        g.add_edge(i, u);
      }
    }
  };
  add_side(0, s.b1, u1);
  add_side(u1 + 1, s.b2, u2);
  g.add_edge(u1, u2);
  if (s.variant == Variant::G || s.variant == Variant::G2) g.add_edge(u, u1);
  if (s.variant == Variant::G || s.variant == Variant::G1) g.add_edge(u, u2);

  // Circumference by cases. Cliques on side i reach only {u_i, u}, so a long
  // cycle alternates hubs and cliques; with both sides populated the best is
  // u1 - (side-1 clique) - u - (side-2 clique) - u2 - u1, which avoids uu1 and
  // uu2 and hence survives every variant.
  int c;
  if (s.b1 >= 1 && s.b2 >= 1) {
    c = 2 * k + 1;
  } else if (s.b1 + s.b2 >= 2) {
    // One side empty: its hub has degree <= 2, and two same-side cliques can
    // still be chained through u1 and u.
    c = 2 * k;
  } else if (s.b1 + s.b2 == 1) {
    // Single clique. The bare hub rides the cycle only while both its edges
    // (to u and to the other hub) survive.
    const bool clique_on_side1 = s.b1 == 1;
    const bool bare_hub_edge_kept =
        s.variant == Variant::G ||
        (clique_on_side1 ? s.variant == Variant::G1 : s.variant == Variant::G2);
    if (bare_hub_edge_kept) {
      c = k + 2;
    } else if (s.variant == Variant::G3) {
      // u loses both hub edges; u and the loaded hub each need two clique
      // neighbours, so the clique must have >= 2 vertices.
      c = k >= 3 ? k + 1 : 0;
    } else {
      c = k + 1;
    }
  } else {
    c = s.variant == Variant::G ? 3 : 0;
  }
  return {g, {c, g.min_degree()}};
}

// b blocks of K_{k-1} joined to a pair {x, y}; the pair is an edge in the
// joined variant and a non-edge otherwise.
std::pair<Graph, FamilyMeta> build_h2(const FamilySpec& s) {
  require(s.k >= 2, "H2: k >= 2");
  require(s.b >= 1, "H2: b >= 1");
  require(s.n == s.b * (s.k - 1) + 2, "H2: n = b(k-1) + 2");
  require(s.variant == Variant::joined || s.variant == Variant::nonjoined,
          "H2: variant in {joined, nonjoined}");
  const int k = s.k;
  Graph g(s.n);
  if (s.variant == Variant::joined) g.add_edge(0, 1);
  for (int c = 0; c < s.b; ++c) {
    const int lo = 2 + c * (k - 1);
    for (int i = lo; i < lo + k - 1; ++i) {
      for (int j = i + 1; j < lo + k - 1; ++j) g.add_edge(i, j);
      g.add_edge(i, 0);
      g.add_edge(i, 1);
    }
  }
  int c;
  if (s.b >= 2) {
    c = 2 * k;  // x - clique - y - clique - x; x, y are the only portals
  } else if (s.variant == Variant::joined) {
    c = k + 1;  // K_{k+1}
  } else {
    c = k >= 3 ? k + 1 : 0;  // K_{k+1} minus an edge; a path when k = 2
  }
  return {g, {c, g.min_degree()}};
}

// K_k and b blocks of K_{k-1}, all joined to the adjacent pair {x, y}.
std::pair<Graph, FamilyMeta> build_k2_kk(const FamilySpec& s) {
  require(s.k >= 2, "K2_Kk_bCliques: k >= 2");
  require(s.b >= 0, "K2_Kk_bCliques: b >= 0");
  require(s.n == s.k + 2 + s.b * (s.k - 1), "K2_Kk_bCliques: n = k+2 + b(k-1)");
  const int k = s.k;
  Graph g(s.n);
  g.add_edge(0, 1);
  auto add_block = [&](int lo, int size) {
    for (int i = lo; i < lo + size; ++i) {
      for (int j = i + 1; j < lo + size; ++j) g.add_edge(i, j);
      g.add_edge(i, 0);
      g.add_edge(i, 1);
    }
  };
  add_block(2, k);
  for (int c = 0; c < s.b; ++c) add_block(2 + k + c * (k - 1), k - 1);
  // x - K_k - y - K_{k-1} - x gives 2k+1; with b = 0 the graph is K_{k+2}.
  const int c = s.b >= 1 ? 2 * k + 1 : k + 2;
  return {g, {c, g.min_degree()}};
}

// Triangle joined to a perfect matching on the rest (k = 4 branch).
std::pair<Graph, FamilyMeta> build_k3_matching(const FamilySpec& s) {
  require(s.n >= 5, "K3_Matching: n >= 5");
  require(s.n % 2 == 1, "K3_Matching: n odd");
  const int m = (s.n - 3) / 2;
  Graph g(s.n);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < s.n; ++j) g.add_edge(i, j);
  for (int p = 0; p < m; ++p) g.add_edge(3 + 2 * p, 4 + 2 * p);
  // Three triangle portals admit at most three matching pairs on a cycle:
  // 3 + 3*2 = 9 vertices, fewer when n < 9.
  return {g, {std::min(s.n, 9), g.min_degree()}};
}

// Star plus matching joined to the adjacent pair {x, y} (k = 3 branch). The
// star on leaves = n-3-2t has a centre and `leaves` leaves, which is what
// makes the orders add up to n.
std::pair<Graph, FamilyMeta> build_k2_star_matching(const FamilySpec& s) {
  require(s.t >= 0, "K2_StarMatching: t >= 0");
  const int leaves = s.n - 3 - 2 * s.t;
  require(leaves >= 1, "K2_StarMatching: n - 3 - 2t >= 1");
  Graph g(s.n);
  g.add_edge(0, 1);
  const int centre = 2;
  for (int i = 2; i < s.n; ++i) {
    g.add_edge(i, 0);
    g.add_edge(i, 1);
  }
  for (int l = 0; l < leaves; ++l) g.add_edge(centre, 3 + l);
  for (int p = 0; p < s.t; ++p) {
    const int lo = 3 + leaves + 2 * p;
    g.add_edge(lo, lo + 1);
  }
  // x and y have four cycle slots between them; a matching pair, the star
  // segment x-leaf-centre-leaf-y, and a lone extra vertex compete for them.
  int c;
  if (s.t >= 1 && leaves >= 2) {
    c = 7;
  } else if (s.t >= 1) {
    c = 6;  // leaves == 1
  } else if (leaves >= 3) {
    c = 6;
  } else if (leaves == 2) {
    c = 5;
  } else {
    c = 4;  // K2 + S_1 is K4
  }
  return {g, {c, g.min_degree()}};
}

void require_no_variant(const FamilySpec& s, const char* name) {
  if (s.variant != Variant::none)
    reject(std::string(name) + ": variant not applicable");
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::H: return "H";
    case Family::H1: return "H1";
    case Family::H2: return "H2";
    case Family::K2_Kk_bCliques: return "K2_Kk_bCliques";
    case Family::K3_Matching: return "K3_Matching";
    case Family::K2_StarMatching: return "K2_StarMatching";
  }
  reject("unknown family enum");
}

Family family_from_name(const std::string& s) {
  if (s == "H") return Family::H;
  if (s == "H1") return Family::H1;
  if (s == "H2") return Family::H2;
  if (s == "K2_Kk_bCliques") return Family::K2_Kk_bCliques;
  if (s == "K3_Matching") return Family::K3_Matching;
  if (s == "K2_StarMatching") return Family::K2_StarMatching;
  reject("unknown family name '" + s + "'");
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::none: return "";
    case Variant::G: return "G";
    case Variant::G1: return "G1";
    case Variant::G2: return "G2";
    case Variant::G3: return "G3";
    case Variant::joined: return "joined";
    case Variant::nonjoined: return "nonjoined";
  }
  reject("unknown variant enum");
}

Variant variant_from_name(const std::string& s) {
  if (s.empty()) return Variant::none;
  if (s == "G") return Variant::G;
  if (s == "G1") return Variant::G1;
  if (s == "G2") return Variant::G2;
  if (s == "G3") return Variant::G3;
  if (s == "joined") return Variant::joined;
  if (s == "nonjoined") return Variant::nonjoined;
  reject("unknown variant name '" + s + "'");
}

nlohmann::ordered_json spec_to_json(const FamilySpec& s) {
  return nlohmann::ordered_json{
      {"family", family_name(s.family)}, {"n", s.n}, {"k", s.k},
      {"ell", s.ell}, {"b1", s.b1}, {"b2", s.b2}, {"b", s.b}, {"t", s.t},
      {"variant", variant_name(s.variant)}};
}

FamilySpec spec_from_json(const nlohmann::json& j) {
  FamilySpec s;
  s.family = family_from_name(j.at("family").get<std::string>());
  s.n = j.value("n", 0);
  s.k = j.value("k", 0);
  s.ell = j.value("ell", 0);
  s.b1 = j.value("b1", 0);
  s.b2 = j.value("b2", 0);
  s.b = j.value("b", 0);
  s.t = j.value("t", 0);
  s.variant = variant_from_name(j.value("variant", std::string()));
  return s;
}

std::pair<Graph, FamilyMeta> build_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::H:
      require_no_variant(spec, "H");
      return build_h(spec);
    case Family::H1:
      return build_h1(spec);
    case Family::H2:
      return build_h2(spec);
    case Family::K2_Kk_bCliques:
      require_no_variant(spec, "K2_Kk_bCliques");
      return build_k2_kk(spec);
    case Family::K3_Matching:
      require_no_variant(spec, "K3_Matching");
      return build_k3_matching(spec);
    case Family::K2_StarMatching:
      require_no_variant(spec, "K2_StarMatching");
      return build_k2_star_matching(spec);
  }
  reject("unknown family enum");
}

std::vector<FamilySpec> family_catalog(int n, int k) {
  std::vector<FamilySpec> out;
  if (k < 2 || n < 3) return out;
  auto push = [&](FamilySpec s) { out.push_back(s); };

  if (n >= 2 * k) {
    FamilySpec s;
    s.family = Family::H;
    s.n = n;
    s.k = k;
    s.ell = 2 * k;
    push(s);
  }
  if (n >= 2 * k + 1) {
    FamilySpec s;
    s.family = Family::H;
    s.n = n;
    s.k = k;
    s.ell = 2 * k + 1;
    push(s);
  }
  if ((n - 3) % (k - 1) == 0 && (n - 3) / (k - 1) >= 1) {
    const int b = (n - 3) / (k - 1);
    for (int b1 = 0; b1 <= b; ++b1) {
      for (Variant v : {Variant::G, Variant::G1, Variant::G2, Variant::G3}) {
        FamilySpec s;
        s.family = Family::H1;
        s.n = n;
        s.k = k;
        s.b1 = b1;
        s.b2 = b - b1;
        s.variant = v;
        push(s);
      }
    }
  }
  if ((n - 2) % (k - 1) == 0 && (n - 2) / (k - 1) >= 1) {
    for (Variant v : {Variant::joined, Variant::nonjoined}) {
      FamilySpec s;
      s.family = Family::H2;
      s.n = n;
      s.k = k;
      s.b = (n - 2) / (k - 1);
      s.variant = v;
      push(s);
    }
  }
  if (n >= k + 2 && (n - k - 2) % (k - 1) == 0) {
    FamilySpec s;
    s.family = Family::K2_Kk_bCliques;
    s.n = n;
    s.k = k;
    s.b = (n - k - 2) / (k - 1);
    push(s);
  }
  if (k == 4 && n >= 5 && n % 2 == 1) {
    FamilySpec s;
    s.family = Family::K3_Matching;
    s.n = n;
    s.k = k;
    push(s);
  }
  if (k == 3) {
    for (int t = 0; n - 3 - 2 * t >= 1; ++t) {
      FamilySpec s;
      s.family = Family::K2_StarMatching;
      s.n = n;
      s.k = k;
      s.t = t;
      push(s);
    }
  }
  return out;
}

}  // namespace circlab
