#pragma once
// Independent brute-force enumeration of central and inner automorphisms for
// small groups. Central automorphisms are exactly the bijective maps
// x -> x * f(x) for homomorphisms f from G into its center; such f kill every
// commutator, so they are enumerated through the invariant basis of G/G'.
// Every enumerated map is re-verified against the table, so a bug in the
// parametrization cannot pass silently. None of this reuses the construction.

#include "pgroup/verify.hpp"

namespace pgroup {

inline constexpr int kOracleOrderCap = 512;

struct HomToCenter {
  std::vector<Elem> image;  // image[x] = f(x), lands in Z(G)
};

inline std::vector<HomToCenter> enumerate_homs_to_center(const FiniteGroup& G,
                                                         int order_cap = kOracleOrderCap) {
  if (!G.prime) fail("oracle requires a group of prime-power order");
  if (G.n > order_cap)
    fail("oracle cap exceeded: order " + std::to_string(G.n) + " over cap " +
         std::to_string(order_cap));
  Subgroup Z = center(G);
  Subgroup D = derived_subgroup(G);
  auto [Q, proj] = quotient_group(G, D);
  AbelianInvariants inv = abelian_invariants(Q);
  const size_t r = inv.factors.size();
  std::vector<std::vector<int>> coord = abelian_coordinates(Q, inv);

  // Basis element of order d may map to any central element z with z^d = 1.
  std::vector<std::vector<Elem>> choices(r);
  for (size_t j = 0; j < r; ++j)
    for (Elem z : Z.elements)
      if (G.pow(z, inv.factors[j]) == 0) choices[j].push_back(z);

  std::vector<HomToCenter> homs;
  std::vector<size_t> pick(r, 0);
  while (true) {
    // Power tables for the chosen images, then assemble f through G/G'.
    std::vector<std::vector<Elem>> zpow(r);
    for (size_t j = 0; j < r; ++j) {
      zpow[j].resize(inv.factors[j]);
      zpow[j][0] = 0;
      for (int e = 1; e < inv.factors[j]; ++e)
        zpow[j][e] = G.mul(zpow[j][e - 1], choices[j][pick[j]]);
    }
    HomToCenter f;
    f.image.resize(G.n);
    for (Elem x = 0; x < G.n; ++x) {
      Elem v = 0;
      const std::vector<int>& c = coord[proj[x]];
      for (size_t j = 0; j < r; ++j) v = G.mul(v, zpow[j][c[j]]);
      f.image[x] = v;
    }
    for (Elem x = 0; x < G.n; ++x)
      for (Elem y = 0; y < G.n; ++y)
        if (f.image[G.mul(x, y)] != G.mul(f.image[x], f.image[y]))
          fail("internal consistency: enumerated map is not a homomorphism");
    homs.push_back(std::move(f));

    size_t j = 0;
    for (; j < r; ++j) {
      if (++pick[j] < choices[j].size()) break;
      pick[j] = 0;
    }
    if (j == r) break;
  }
  std::sort(homs.begin(), homs.end(),
            [](const HomToCenter& a, const HomToCenter& b) { return a.image < b.image; });
  return homs;
}

// All central automorphisms: x -> x * f(x) filtered for bijectivity, each
// re-verified as a central automorphism. Sorted by image table.
inline std::vector<GroupMap> central_automorphisms(const FiniteGroup& G,
                                                   int order_cap = kOracleOrderCap) {
  Subgroup Z = center(G);
  std::vector<GroupMap> out;
  for (const HomToCenter& f : enumerate_homs_to_center(G, order_cap)) {
    GroupMap m{&G, &G, std::vector<Elem>(G.n)};
    for (Elem x = 0; x < G.n; ++x) m.image[x] = G.mul(x, f.image[x]);
    if (!is_permutation_table(m.image, G.n)) continue;
    if (!is_automorphism(m) || !is_central(m, Z))
      fail("internal consistency: bijective central candidate failed re-verification");
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(),
            [](const GroupMap& a, const GroupMap& b) { return a.image < b.image; });
  return out;
}

// All conjugation maps, deduplicated. Sorted by image table.
inline std::vector<GroupMap> inner_automorphisms(const FiniteGroup& G) {
  std::set<std::vector<Elem>> tables;
  for (Elem y = 0; y < G.n; ++y) tables.insert(conjugation_map(G, y).image);
  std::vector<GroupMap> out;
  for (const auto& t : tables) out.push_back(GroupMap{&G, &G, t});
  return out;
}

struct OracleOutcome {
  bool pass = false;
  bool alpha_is_central_member = false;
  bool alpha_is_inner = false;
  int alpha_order = 0;
  long hom_count = 0;
  long central_count = 0;
  long inner_count = 0;
};

// Cross-validates a candidate map against full enumeration: it must appear
// among the central automorphisms, must not appear among the inner ones, and
// must have order p.
inline OracleOutcome oracle_cross_check(const FiniteGroup& G, const GroupMap& alpha,
                                        int order_cap = kOracleOrderCap) {
  if (!G.prime) fail("oracle requires a group of prime-power order");
  OracleOutcome res;
  std::vector<HomToCenter> homs = enumerate_homs_to_center(G, order_cap);
  res.hom_count = static_cast<long>(homs.size());
  std::vector<GroupMap> central = central_automorphisms(G, order_cap);
  res.central_count = static_cast<long>(central.size());
  std::vector<GroupMap> inner = inner_automorphisms(G);
  res.inner_count = static_cast<long>(inner.size());

  auto member = [](const std::vector<GroupMap>& maps, const GroupMap& m) {
    return std::binary_search(
        maps.begin(), maps.end(), m,
        [](const GroupMap& a, const GroupMap& b) { return a.image < b.image; });
  };
  res.alpha_is_central_member = member(central, alpha);
  res.alpha_is_inner = member(inner, alpha);
  res.alpha_order = map_order(alpha);
  res.pass = res.alpha_is_central_member && !res.alpha_is_inner &&
             res.alpha_order == *G.prime;
  return res;
}

}  // namespace pgroup
