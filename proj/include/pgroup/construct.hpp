#pragma once
// Builds the central automorphism alpha from a decomposition G = H x K:
// pick a maximal subgroup M of H, an element h spanning H over M, and a
// non-identity g of order p in the center of K; then alpha multiplies each
// element by g raised to the element's h-exponent modulo MK.

#include "pgroup/decompose.hpp"

namespace pgroup {

struct GroupMap {
  const FiniteGroup* source = nullptr;
  const FiniteGroup* target = nullptr;
  std::vector<Elem> image;  // image[x] = map(x)

  Elem operator()(Elem x) const { return image[x]; }
};

inline GroupMap identity_map(const FiniteGroup& G) {
  GroupMap m{&G, &G, std::vector<Elem>(G.n)};
  for (Elem x = 0; x < G.n; ++x) m.image[x] = x;
  return m;
}

inline GroupMap conjugation_map(const FiniteGroup& G, Elem y) {
  GroupMap m{&G, &G, std::vector<Elem>(G.n)};
  for (Elem x = 0; x < G.n; ++x) m.image[x] = G.conjugate(x, y);
  return m;
}

// x^-1 * map(x)
inline Elem displacement(const GroupMap& map, Elem x) {
  return map.source->mul(map.source->inv(x), map.image[x]);
}

struct AlphaSpec {
  Subgroup M;          // maximal in H
  Elem h = -1;         // spans H over M
  Elem g = -1;         // non-identity, order p, central in K
  std::vector<int> nu; // per-element exponent: x maps to x * g^nu[x]
};

// Center of K inside the ambient group: elements of K commuting with all of K.
inline Subgroup center_of_subgroup(const FiniteGroup& G, const Subgroup& K) {
  std::vector<Elem> z;
  for (Elem x : K.elements) {
    bool central = true;
    for (Elem g : K.generators)
      if (!G.commutes(x, g)) { central = false; break; }
    if (central) z.push_back(x);
  }
  return canonical_subgroup(G, std::move(z));
}

// Validates (M, h, g) against the decomposition and derives nu. Fails with a
// named violation if any of the three is unusable.
inline AlphaSpec make_alpha_spec(const FiniteGroup& G, const DirectDecomposition& dec,
                                 Subgroup M, Elem h, Elem g) {
  if (!G.prime) fail("alpha construction requires prime-power order");
  const int p = *G.prime;
  for (Elem x : M.elements)
    if (!dec.H.contains(x)) fail("M must be a maximal subgroup of H");
  if (static_cast<long>(M.order()) * p != dec.H.order())
    fail("M must be a maximal subgroup of H");
  if (h < 0 || h >= G.n || !dec.H.contains(h) || M.contains(h))
    fail("h must lie in H outside M");
  Subgroup ZK = center_of_subgroup(G, dec.K);
  Subgroup Om = omega1(G, ZK);
  if (g <= 0 || g >= G.n || !Om.contains(g))
    fail("g must be a non-identity element of Omega_1(Z(K))");

  // nu(x): the unique exponent with h^-nu(x) * x_H in M. Constant on cosets
  // of MK and multiplicative, because x maps to x_H is a homomorphism and
  // H/M is cyclic of order p generated by the class of h.
  AlphaSpec spec;
  spec.M = std::move(M);
  spec.h = h;
  spec.g = g;
  spec.nu.assign(G.n, -1);
  for (Elem x = 0; x < G.n; ++x) {
    Elem xh = dec.factorization[x].first;
    for (int i = 0; i < p; ++i)
      if (spec.M.contains(G.mul(G.pow(h, -i), xh))) {
        spec.nu[x] = i;
        break;
      }
    if (spec.nu[x] < 0) fail("h does not span H over M");
  }
  if (spec.nu[h] != 1) fail("h does not span H over M");
  return spec;
}

// Canonical choices: first maximal subgroup of H, smallest h outside it,
// smallest non-identity g of order p central in K.
inline AlphaSpec choose_alpha_data(const FiniteGroup& G, const DirectDecomposition& dec) {
  std::vector<Subgroup> maxes = maximal_subgroups(G, dec.H);
  if (maxes.empty()) fail("H has no maximal subgroup");
  Subgroup M = maxes.front();
  Elem h = -1;
  for (Elem x : dec.H.elements)
    if (!M.contains(x)) { h = x; break; }
  if (h < 0) fail("h must lie in H outside M");
  Subgroup ZK = center_of_subgroup(G, dec.K);
  Subgroup Om = omega1(G, ZK);
  if (Om.order() < 2)
    fail("internal consistency: Omega_1(Z(K)) is trivial for a non-trivial p-group K");
  Elem g = Om.elements[1];  // elements sorted; [0] is the identity
  return make_alpha_spec(G, dec, std::move(M), h, g);
}

inline GroupMap build_alpha(const FiniteGroup& G, const AlphaSpec& spec) {
  GroupMap alpha{&G, &G, std::vector<Elem>(G.n)};
  for (Elem x = 0; x < G.n; ++x)
    alpha.image[x] = G.mul(x, G.pow(spec.g, spec.nu[x]));
  if (alpha.image[spec.g] != spec.g)
    fail("internal consistency: alpha must fix g");
  return alpha;
}

}  // namespace pgroup
