#pragma once
// Built-in groups with stable names, plus the order-3^7 example family:
// (C3 x C9) x ((C9 x C3) : C3) over every valid non-trivial order-3 action,
// deduplicated by the multiplication table of the semidirect part. The
// generator letters are fixed as: a, z spanning the abelian factor (orders
// 3 and 9), x, b spanning the twisted base (orders 9 and 3), y the acting
// generator, with c = x^3 and d = y^3.

#include <functional>

#include "pgroup/verify.hpp"

namespace pgroup {

namespace detail {

inline FiniteGroup make_d4(const BuildOptions& opts) {
  FiniteGroup g =
      semidirect_product(make_cyclic(4, opts), make_cyclic(2, opts), {{"b0^3"}}, opts);
  relabel_by_generators(g, {{1, "r"}, {4, "s"}});
  g.name = "D4";
  return g;
}

inline FiniteGroup make_q8(const BuildOptions& opts) {
  FiniteGroup g =
      permutation_group(8, {"(1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)"}, opts);
  relabel_by_generators(g, {{1, "i"}, {2, "j"}});
  g.name = "Q8";
  return g;
}

inline FiniteGroup make_heisenberg27(const BuildOptions& opts) {
  FiniteGroup c3 = make_cyclic(3, opts);
  FiniteGroup base = direct_product(c3, c3, opts).group;
  FiniteGroup g = semidirect_product(base, c3, {{"b0*b1", "b1"}}, opts);
  relabel_by_generators(g, {{9, "x"}, {3, "y"}, {1, "z"}});
  g.name = "heisenberg27";
  return g;
}

inline FiniteGroup make_modular27(const BuildOptions& opts) {
  FiniteGroup g =
      semidirect_product(make_cyclic(9, opts), make_cyclic(3, opts), {{"b0^4"}}, opts);
  relabel_by_generators(g, {{1, "x"}, {9, "y"}});
  g.name = "modular27";
  return g;
}

inline FiniteGroup abelian_times(const FiniteGroup& A, const FiniteGroup& B,
                                 const std::string& name,
                                 std::vector<std::pair<Elem, std::string>> named,
                                 const BuildOptions& opts) {
  DirectProductResult dp = direct_product(A, B, opts);
  FiniteGroup g = std::move(dp.group);
  relabel_by_generators(g, std::move(named));
  g.name = name;
  return g;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The 3^7 example family.

struct PaperCandidate {
  FiniteGroup G;
  int index = 0;             // position in the deduplicated enumeration
  std::string action;        // the twisting automorphism, e.g. "x->x, b->x^3*b"
  Elem x = -1, y = -1, z = -1, a = -1, b = -1, c = -1, d = -1;
};

namespace detail {

inline std::string base_word(const FiniteGroup& base, Elem x0, Elem b, Elem v) {
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 3; ++j)
      if (base.mul(base.pow(x0, i), base.pow(b, j)) == v) {
        std::string out;
        if (i == 1) out = "x";
        else if (i > 1) out = "x^" + std::to_string(i);
        if (j > 0) {
          if (!out.empty()) out += "*";
          out += j == 1 ? "b" : "b^" + std::to_string(j);
        }
        return out.empty() ? "1" : out;
      }
  fail("base element is not a product of the two generators");
}

}  // namespace detail

// Visits every realization; the callback returns false to stop early.
inline void for_each_paper_candidate(const std::function<bool(PaperCandidate&)>& fn,
                                     const BuildOptions& opts = {}) {
  FiniteGroup c3 = make_cyclic(3, opts);
  FiniteGroup c9 = make_cyclic(9, opts);
  FiniteGroup base = direct_product(c9, c3, opts).group;  // x0 = 3, b = 1
  const Elem x0 = 3, b0 = 1;
  FiniteGroup habel = direct_product(c3, c9, opts).group;  // a = 9, z = 1

  std::set<std::vector<Elem>> seen_tables;
  int index = 0;
  for (Elem img_x = 0; img_x < base.n; ++img_x)
    for (Elem img_b = 0; img_b < base.n; ++img_b) {
      auto phi = extend_hom(base, base, {img_x, img_b});
      if (!phi || !is_permutation_table(*phi, base.n)) continue;
      if (img_x == x0 && img_b == b0) continue;  // identity action
      // Order must be exactly 3.
      std::vector<Elem> p3(base.n);
      for (Elem v = 0; v < base.n; ++v) p3[v] = (*phi)[(*phi)[(*phi)[v]]];
      bool ident = true;
      for (Elem v = 0; v < base.n; ++v)
        if (p3[v] != v) { ident = false; break; }
      if (!ident) continue;

      FiniteGroup K = semidirect_from_images(base, c3, {img_x, img_b}, opts);
      if (!seen_tables.insert(K.table).second) continue;

      PaperCandidate pc;
      pc.index = index;
      pc.action = "x->" + detail::base_word(base, x0, b0, img_x) +
                  ", b->" + detail::base_word(base, x0, b0, img_b);
      DirectProductResult dp = direct_product(habel, K, opts);
      pc.G = std::move(dp.group);
      pc.a = dp.embed_a[9];
      pc.z = dp.embed_a[1];
      pc.x = dp.embed_b[3];
      pc.y = dp.embed_b[27];
      pc.b = dp.embed_b[1];
      relabel_by_generators(pc.G, {{pc.x, "x"}, {pc.y, "y"}, {pc.z, "z"},
                                   {pc.a, "a"}, {pc.b, "b"}});
      pc.G.name = "paper3_7#" + std::to_string(index);
      pc.c = pc.G.pow(pc.x, 3);
      pc.d = pc.G.pow(pc.y, 3);
      ++index;
      if (!fn(pc)) return;
    }
  if (index == 0) fail("no realization of the 3^7 example builds");
}

// Verdicts for the explicitly given map x->xc^2, z->za^2c, a->ac^2 (fixing
// y and b) on one candidate, where it extends to an automorphism at all.
struct ExplicitAlphaResult {
  bool realizable = false;
  bool order3 = false;
  bool central = false;
  bool non_inner = false;
  bool fixes_derived = false;
  bool fixes_agemo = false;
  bool fixes_frattini = false;
  bool agemo_is_cube_span = false;  // G^3 equals <x^3, y^3, z^3>

  bool all() const {
    return realizable && order3 && central && non_inner && fixes_derived &&
           fixes_agemo && fixes_frattini && agemo_is_cube_span;
  }
};

inline ExplicitAlphaResult check_explicit_alpha(const PaperCandidate& pc) {
  const FiniteGroup& G = pc.G;
  ExplicitAlphaResult res;
  const std::vector<Elem> gens{pc.x, pc.y, pc.z, pc.a, pc.b};
  const std::vector<Elem> images{G.mul(pc.x, G.pow(pc.c, 2)),
                                 pc.y,
                                 G.mul(pc.z, G.mul(G.pow(pc.a, 2), pc.c)),
                                 G.mul(pc.a, G.pow(pc.c, 2)),
                                 pc.b};
  auto f = extend_hom(G, G, images, &gens);
  if (!f || !is_permutation_table(*f, G.n)) return res;
  GroupMap alpha{&G, &G, *f};
  if (!is_automorphism(alpha)) return res;
  res.realizable = true;
  Subgroup Z = center(G);
  res.order3 = map_order(alpha) == 3;
  res.central = is_central(alpha, Z);
  res.non_inner = !is_inner(alpha, Z).has_value();
  Subgroup cubes = agemo(G);
  res.fixes_derived = fixes_subgroup_elementwise(alpha, derived_subgroup(G));
  res.fixes_agemo = fixes_subgroup_elementwise(alpha, cubes);
  res.fixes_frattini = fixes_subgroup_elementwise(alpha, frattini(G));
  Subgroup span = closure(G, {G.pow(pc.x, 3), G.pow(pc.y, 3), G.pow(pc.z, 3)});
  res.agemo_is_cube_span = span.elements == cubes.elements;
  return res;
}

// ---------------------------------------------------------------------------
// Catalogue.

struct CatalogueEntry {
  std::string name;
  int order = 0;
  bool expect_applicable = false;
  int expect_prime = 0;    // 0 when not applicable
  int expect_h_order = 0;  // 0 when not applicable
  int expect_k_order = 0;
};

inline const std::vector<CatalogueEntry>& catalogue_entries() {
  static const std::vector<CatalogueEntry> entries{
      {"D4", 8, false, 0, 0, 0},
      {"Q8", 8, false, 0, 0, 0},
      {"C2xD4", 16, true, 2, 2, 8},
      {"C2xQ8", 16, true, 2, 2, 8},
      {"heisenberg27", 27, false, 0, 0, 0},
      {"modular27", 27, false, 0, 0, 0},
      {"C2xC2xD4", 32, true, 2, 2, 16},
      {"C4xD4", 32, true, 2, 4, 8},
      {"C3xHeis27", 81, true, 3, 3, 27},
      {"C3xModular27", 81, true, 3, 3, 27},
      {"C9xHeis27", 243, true, 3, 9, 27},
      {"paper3_7", 2187, true, 3, 3, 729},
  };
  return entries;
}

inline FiniteGroup build_builtin(std::string_view name, const BuildOptions& opts) {
  if (name == "D4") return detail::make_d4(opts);
  if (name == "Q8") return detail::make_q8(opts);
  if (name == "heisenberg27") return detail::make_heisenberg27(opts);
  if (name == "modular27") return detail::make_modular27(opts);
  if (name == "C2xD4")
    return detail::abelian_times(make_cyclic(2, opts), detail::make_d4(opts), "C2xD4",
                                 {{8, "a"}, {1, "r"}, {4, "s"}}, opts);
  if (name == "C2xQ8")
    return detail::abelian_times(make_cyclic(2, opts), detail::make_q8(opts), "C2xQ8",
                                 {{8, "a"}, {1, "i"}, {2, "j"}}, opts);
  if (name == "C2xC2xD4") {
    FiniteGroup v4 = direct_product(make_cyclic(2, opts), make_cyclic(2, opts), opts).group;
    return detail::abelian_times(v4, detail::make_d4(opts), "C2xC2xD4",
                                 {{16, "a"}, {8, "b"}, {1, "r"}, {4, "s"}}, opts);
  }
  if (name == "C4xD4")
    return detail::abelian_times(make_cyclic(4, opts), detail::make_d4(opts), "C4xD4",
                                 {{8, "a"}, {1, "r"}, {4, "s"}}, opts);
  if (name == "C3xHeis27")
    return detail::abelian_times(make_cyclic(3, opts), detail::make_heisenberg27(opts),
                                 "C3xHeis27", {{27, "a"}, {9, "x"}, {3, "y"}, {1, "z"}},
                                 opts);
  if (name == "C3xModular27")
    return detail::abelian_times(make_cyclic(3, opts), detail::make_modular27(opts),
                                 "C3xModular27", {{27, "a"}, {1, "x"}, {9, "y"}}, opts);
  if (name == "C9xHeis27")
    return detail::abelian_times(make_cyclic(9, opts), detail::make_heisenberg27(opts),
                                 "C9xHeis27", {{27, "a"}, {9, "x"}, {3, "y"}, {1, "z"}},
                                 opts);
  if (name == "paper3_7") {
    std::optional<FiniteGroup> g;
    for_each_paper_candidate(
        [&](PaperCandidate& pc) {
          g = std::move(pc.G);
          return false;
        },
        opts);
    if (!g) fail("no realization of the 3^7 example builds");
    g->name = "paper3_7";
    return std::move(*g);
  }
  fail("unknown builtin group '" + std::string(name) + "'");
}

}  // namespace pgroup
