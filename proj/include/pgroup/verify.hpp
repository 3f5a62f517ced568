#pragma once
// Exhaustive verification of every claimed property of a candidate map:
// automorphism, centrality, order p, non-innerness, and elementwise fixing of
// the derived, power, and Frattini subgroups. Nothing here trusts the
// construction; each verdict is recomputed from the multiplication table.

#include <chrono>

#include "pgroup/construct.hpp"

namespace pgroup {

// Bijective and multiplicative. All pairs are checked up to order 2000;
// beyond that, multiplicativity on all (element, generator) pairs is checked,
// which certifies the general case by induction on generator words.
inline bool is_automorphism(const GroupMap& map) {
  const FiniteGroup& G = *map.source;
  if (map.target != map.source) return false;
  if (map.image.size() != static_cast<size_t>(G.n)) return false;
  if (!is_permutation_table(map.image, G.n)) return false;
  if (map.image[0] != 0) return false;
  if (G.n <= 2000) {
    for (Elem x = 0; x < G.n; ++x)
      for (Elem y = 0; y < G.n; ++y)
        if (map.image[G.mul(x, y)] != G.mul(map.image[x], map.image[y])) return false;
    return true;
  }
  for (Elem x = 0; x < G.n; ++x)
    for (Elem g : G.generators)
      if (map.image[G.mul(x, g)] != G.mul(map.image[x], map.image[g])) return false;
  return true;
}

inline bool is_central(const GroupMap& map, const Subgroup& Z) {
  for (Elem x = 0; x < map.source->n; ++x)
    if (!Z.contains(displacement(map, x))) return false;
  return true;
}

// Least k >= 1 with map^k the identity map.
inline int map_order(const GroupMap& map) {
  const FiniteGroup& G = *map.source;
  std::vector<Elem> cur = map.image;
  auto is_ident = [&] {
    for (Elem x = 0; x < G.n; ++x)
      if (cur[x] != x) return false;
    return true;
  };
  int k = 1;
  while (!is_ident()) {
    std::vector<Elem> next(G.n);
    for (Elem x = 0; x < G.n; ++x) next[x] = map.image[cur[x]];
    cur = std::move(next);
    if (++k > G.n) fail("map_order: order exceeds the group order (not bijective?)");
  }
  return k;
}

// Searches for a conjugation witness. Witnesses for a fixed inner map form a
// coset of the center, so only the minimal element of each coset is tried;
// the returned witness is the least one overall, making reports stable.
inline std::optional<Elem> is_inner(const GroupMap& map, const Subgroup& Z) {
  const FiniteGroup& G = *map.source;
  std::vector<char> tried(G.n, 0);
  for (Elem y = 0; y < G.n; ++y) {
    if (tried[y]) continue;
    for (Elem z : Z.elements) tried[G.mul(y, z)] = 1;
    bool match = true;
    for (Elem x = 0; x < G.n; ++x)
      if (map.image[x] != G.conjugate(x, y)) { match = false; break; }
    if (match) return y;
  }
  return std::nullopt;
}

inline bool fixes_subgroup_elementwise(const GroupMap& map, const Subgroup& S) {
  for (Elem s : S.elements)
    if (map.image[s] != s) return false;
  return true;
}

struct TheoremChecks {
  bool is_automorphism = false;
  bool is_central = false;
  bool has_order_p = false;
  bool is_non_inner = false;
  bool fixes_derived = false;
  bool fixes_agemo = false;
  bool fixes_frattini = false;

  bool all() const {
    return is_automorphism && is_central && has_order_p && is_non_inner &&
           fixes_derived && fixes_agemo && fixes_frattini;
  }
};

struct TheoremReport {
  std::string group;
  int order = 0;
  int prime = 0;
  bool applicable = false;
  std::string not_applicable_reason;

  // Decomposition summary (valid when applicable).
  int h_order = 0;
  int k_order = 0;
  std::vector<std::string> h_generators;
  std::vector<std::string> k_generators;

  // Alpha summary (valid when applicable).
  std::vector<std::string> m_generators;
  int m_order = 0;
  std::string h_label;
  std::string g_label;
  std::vector<std::pair<std::string, std::string>> generator_images;
  std::vector<Elem> alpha_image;
  int fixed_point_count = 0;
  std::optional<std::string> inner_witness;

  std::optional<TheoremChecks> checks;
  std::vector<std::pair<std::string, long long>> timings_ms;
};

struct PipelineOptions {
  std::optional<std::vector<Elem>> m_gens;
  std::optional<Elem> h;
  std::optional<Elem> g;
  bool run_checks = true;
};

// decompose -> construct -> verify, with stage timings. Returns an
// applicable=false report when no abelian direct factor exists.
inline TheoremReport run_theorem_pipeline(const FiniteGroup& G,
                                          const PipelineOptions& opts = {}) {
  if (!G.prime) fail("theorem pipeline requires a group of prime-power order");
  if (is_abelian(G)) fail("theorem pipeline requires a non-abelian group");
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0)
        .count();
  };

  TheoremReport rep;
  rep.group = G.name;
  rep.order = G.n;
  rep.prime = *G.prime;

  auto t0 = clock::now();
  std::optional<DirectDecomposition> dec = find_abelian_direct_factor(G);
  rep.timings_ms.push_back({"decompose", ms_since(t0)});
  if (!dec) {
    rep.applicable = false;
    rep.not_applicable_reason = "purely non-abelian: no non-trivial abelian direct factor";
    return rep;
  }
  rep.applicable = true;
  rep.h_order = dec->H.order();
  rep.k_order = dec->K.order();
  for (Elem x : dec->H.generators) rep.h_generators.push_back(G.label(x));
  for (Elem x : dec->K.generators) rep.k_generators.push_back(G.label(x));

  t0 = clock::now();
  AlphaSpec spec;
  if (opts.m_gens || opts.h || opts.g) {
    AlphaSpec canonical = choose_alpha_data(G, *dec);
    Subgroup M = opts.m_gens ? closure(G, *opts.m_gens) : canonical.M;
    spec = make_alpha_spec(G, *dec, std::move(M), opts.h.value_or(canonical.h),
                           opts.g.value_or(canonical.g));
  } else {
    spec = choose_alpha_data(G, *dec);
  }
  GroupMap alpha = build_alpha(G, spec);
  rep.timings_ms.push_back({"construct", ms_since(t0)});

  for (Elem x : spec.M.generators) rep.m_generators.push_back(G.label(x));
  rep.m_order = spec.M.order();
  rep.h_label = G.label(spec.h);
  rep.g_label = G.label(spec.g);
  for (Elem x : G.generators)
    rep.generator_images.push_back({G.label(x), G.label(alpha.image[x])});
  rep.alpha_image = alpha.image;
  for (Elem x = 0; x < G.n; ++x)
    if (alpha.image[x] == x) ++rep.fixed_point_count;

  if (!opts.run_checks) return rep;

  t0 = clock::now();
  Subgroup Z = center(G);
  TheoremChecks checks;
  checks.is_automorphism = is_automorphism(alpha);
  checks.is_central = is_central(alpha, Z);
  checks.has_order_p = map_order(alpha) == rep.prime;
  std::optional<Elem> witness = is_inner(alpha, Z);
  checks.is_non_inner = !witness.has_value();
  if (witness) rep.inner_witness = G.label(*witness);
  checks.fixes_derived = fixes_subgroup_elementwise(alpha, derived_subgroup(G));
  checks.fixes_agemo = fixes_subgroup_elementwise(alpha, agemo(G));
  checks.fixes_frattini = fixes_subgroup_elementwise(alpha, frattini(G));
  rep.checks = checks;
  rep.timings_ms.push_back({"verify", ms_since(t0)});
  return rep;
}

}  // namespace pgroup
