#pragma once
// Internal direct product detection: G = H x K with H non-trivial abelian and
// K non-abelian. Two facts cut the search space down to desk scale. First,
// any abelian H commuting elementwise with a complement K is forced into the
// center, so candidate H ranges over subgroups of Z(G) only. Second, G/K is
// isomorphic to the abelian group H, so K must contain the derived subgroup;
// candidate K therefore ranges over preimages of subgroups of G/G'.

#include "pgroup/structure.hpp"

namespace pgroup {

struct DirectDecomposition {
  Subgroup H;
  Subgroup K;
  // factorization[x] = (a, b) with x = a*b, a in H, b in K; total and unique.
  std::vector<std::pair<Elem, Elem>> factorization;
};

// Checks every invariant of a direct decomposition. Returns an explanation of
// the first violated invariant, or nullopt on success (filling *out if given).
inline std::optional<std::string> try_decomposition(const FiniteGroup& G,
                                                    const Subgroup& H, const Subgroup& K,
                                                    DirectDecomposition* out = nullptr) {
  if (H.order() == 1) return "H is trivial";
  if (!is_abelian(G, H)) return "H is not abelian";
  if (is_abelian(G, K)) return "K is abelian";
  if (!is_normal(G, H)) return "H is not normal";
  if (!is_normal(G, K)) return "K is not normal";
  if (intersect_sorted(H.elements, K.elements).size() != 1)
    return "H and K intersect non-trivially";
  if (static_cast<long>(H.order()) * K.order() != G.n) return "HK does not cover G";
  for (Elem a : H.elements)
    for (Elem b : K.elements)
      if (!G.commutes(a, b)) return "H and K do not commute elementwise";
  std::vector<std::pair<Elem, Elem>> fact(G.n, {-1, -1});
  for (Elem a : H.elements)
    for (Elem b : K.elements) {
      Elem x = G.mul(a, b);
      if (fact[x].first >= 0) return "factorization is not unique";
      fact[x] = {a, b};
    }
  for (Elem x = 0; x < G.n; ++x)
    if (fact[x].first < 0) return "HK does not cover G";
  // Both coordinate projections must be homomorphisms.
  for (Elem x = 0; x < G.n; ++x)
    for (Elem y = 0; y < G.n; ++y) {
      Elem z = G.mul(x, y);
      if (fact[z].first != G.mul(fact[x].first, fact[y].first) ||
          fact[z].second != G.mul(fact[x].second, fact[y].second))
        return "factor projection is not a homomorphism";
    }
  if (out) *out = DirectDecomposition{H, K, std::move(fact)};
  return std::nullopt;
}

inline DirectDecomposition verify_decomposition(const FiniteGroup& G,
                                                const std::vector<Elem>& h_gens,
                                                const std::vector<Elem>& k_gens) {
  Subgroup H = closure(G, h_gens);
  Subgroup K = closure(G, k_gens);
  DirectDecomposition dec;
  if (auto reason = try_decomposition(G, H, K, &dec)) fail(*reason);
  return dec;
}

// Searches for a decomposition G = H x K, H non-trivial abelian, K
// non-abelian. Candidates are tried in canonical order: |H| ascending, then
// H by element set, then K by element set; the first valid pair is returned.
inline std::optional<DirectDecomposition> find_abelian_direct_factor(const FiniteGroup& G) {
  if (is_abelian(G)) fail("find_abelian_direct_factor expects a non-abelian group");
  if (!G.prime) fail("find_abelian_direct_factor expects prime-power order");
  Subgroup Z = center(G);
  Subgroup D = derived_subgroup(G);
  auto [Q, proj] = quotient_group(G, D);

  std::vector<int> sizes;
  for (int s = 2; s <= Z.order(); ++s)
    if (Z.order() % s == 0 && Q.n % s == 0) sizes.push_back(s);

  for (int s : sizes) {
    std::vector<std::vector<Elem>> h_sets = abelian_subgroups_up_to(G, Z.elements, s);
    h_sets.erase(std::remove_if(h_sets.begin(), h_sets.end(),
                                [&](const auto& e) {
                                  return static_cast<int>(e.size()) != s;
                                }),
                 h_sets.end());
    if (h_sets.empty()) continue;

    // Index-s subgroups of Q, pulled back to G. Sorted for canonical order.
    std::vector<std::vector<Elem>> k_sets;
    for (const auto& kbar : abelian_subgroups_of_index(Q, s)) {
      std::vector<char> in(Q.n, 0);
      for (Elem q : kbar) in[q] = 1;
      std::vector<Elem> k;
      k.reserve(G.n / s);
      for (Elem x = 0; x < G.n; ++x)
        if (in[proj[x]]) k.push_back(x);
      k_sets.push_back(std::move(k));
    }
    std::sort(k_sets.begin(), k_sets.end());

    for (const auto& h_set : h_sets) {
      Subgroup H = canonical_subgroup(G, h_set);
      for (const auto& k_set : k_sets) {
        bool meets = false;
        for (Elem a : H.elements)
          if (a != 0 && std::binary_search(k_set.begin(), k_set.end(), a)) {
            meets = true;
            break;
          }
        if (meets) continue;
        Subgroup K = canonical_subgroup(G, k_set);
        DirectDecomposition dec;
        if (!try_decomposition(G, H, K, &dec)) return dec;
      }
    }
  }
  return std::nullopt;
}

inline bool is_purely_nonabelian(const FiniteGroup& G) {
  return !find_abelian_direct_factor(G).has_value();
}

// Folds a chain of factors H1 x H2 x ... x Hn (first abelian non-trivial, the
// rest non-abelian) into a two-factor decomposition with K = H2 x ... x Hn.
inline DirectDecomposition fold_multifactor(const FiniteGroup& G,
                                            const std::vector<std::vector<Elem>>& factor_gens) {
  if (factor_gens.size() < 2) fail("fold_multifactor needs at least two factors");
  std::vector<Subgroup> factors;
  for (const auto& gens : factor_gens) factors.push_back(closure(G, gens));
  if (factors[0].order() == 1) fail("first factor must be non-trivial abelian");
  if (!is_abelian(G, factors[0])) fail("first factor must be non-trivial abelian");
  for (size_t i = 1; i < factors.size(); ++i) {
    if (is_abelian(G, factors[i]))
      fail("factor " + std::to_string(i + 1) + " must be non-abelian");
    if (!is_normal(G, factors[i]))
      fail("factor " + std::to_string(i + 1) + " must be normal");
  }
  // Accumulate K = H2 x H3 x ..., checking each join is a direct one.
  Subgroup K = factors[1];
  for (size_t i = 2; i < factors.size(); ++i) {
    if (intersect_sorted(K.elements, factors[i].elements).size() != 1)
      fail("factors " + std::to_string(i + 1) + " and earlier intersect non-trivially");
    std::vector<Elem> gens = K.generators;
    gens.insert(gens.end(), factors[i].generators.begin(), factors[i].generators.end());
    Subgroup bigger = closure(G, gens);
    if (static_cast<long>(K.order()) * factors[i].order() != bigger.order())
      fail("factor join is not a direct product");
    K = std::move(bigger);
  }
  return verify_decomposition(G, factors[0].generators, K.generators);
}

}  // namespace pgroup
