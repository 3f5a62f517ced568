#pragma once
// Structure theory on explicit finite groups: center, derived subgroup,
// power subgroups, Frattini subgroup (with an independent cross-check route),
// subgroup enumeration for abelian groups, and abelian invariant factors.

#include <numeric>
#include <random>
#include <set>

#include "pgroup/core.hpp"

namespace pgroup {

// x^-1 y^-1 x y
inline Elem commutator(const FiniteGroup& G, Elem x, Elem y) {
  return G.mul(G.mul(G.inv(x), G.inv(y)), G.mul(x, y));
}

inline bool is_abelian(const FiniteGroup& G) {
  for (size_t i = 0; i < G.generators.size(); ++i)
    for (size_t j = i + 1; j < G.generators.size(); ++j)
      if (!G.commutes(G.generators[i], G.generators[j])) return false;
  return true;
}

inline bool is_abelian(const FiniteGroup& G, const Subgroup& S) {
  for (size_t i = 0; i < S.generators.size(); ++i)
    for (size_t j = i + 1; j < S.generators.size(); ++j)
      if (!G.commutes(S.generators[i], S.generators[j])) return false;
  return true;
}

inline bool is_normal(const FiniteGroup& G, const Subgroup& S) {
  for (Elem g : G.generators)
    for (Elem v : S.elements)
      if (!S.contains(G.conjugate(v, g))) return false;
  return true;
}

// Elements commuting with every generator commute with everything.
inline Subgroup center(const FiniteGroup& G) {
  std::vector<Elem> z;
  for (Elem x = 0; x < G.n; ++x) {
    bool central = true;
    for (Elem g : G.generators)
      if (!G.commutes(x, g)) { central = false; break; }
    if (central) z.push_back(x);
  }
  return canonical_subgroup(G, std::move(z));
}

// Subgroup generated by all commutators [x, y].
inline Subgroup derived_subgroup(const FiniteGroup& G) {
  std::set<Elem> comms;
  for (Elem x = 0; x < G.n; ++x)
    for (Elem y = 0; y < G.n; ++y) comms.insert(commutator(G, x, y));
  comms.erase(0);
  Subgroup D = closure(G, std::vector<Elem>(comms.begin(), comms.end()));
  return canonical_subgroup(G, std::move(D.elements));
}

// Subgroup generated by all p-th powers, p the group's prime.
inline Subgroup agemo(const FiniteGroup& G) {
  if (!G.prime) fail("agemo requires a group of prime-power order");
  const int p = *G.prime;
  std::set<Elem> powers;
  for (Elem x = 0; x < G.n; ++x) powers.insert(G.pow(x, p));
  powers.erase(0);
  Subgroup A = closure(G, std::vector<Elem>(powers.begin(), powers.end()));
  return canonical_subgroup(G, std::move(A.elements));
}

// Frattini subgroup of a group of prime-power order: generated by the derived
// subgroup together with all p-th powers; for p = 2 the squares already
// suffice.
inline Subgroup frattini(const FiniteGroup& G) {
  if (!G.prime) fail("frattini requires a group of prime-power order");
  Subgroup S = agemo(G);
  if (*G.prime == 2) return S;
  Subgroup D = derived_subgroup(G);
  std::vector<Elem> seed = D.generators;
  seed.insert(seed.end(), S.generators.begin(), S.generators.end());
  Subgroup F = closure(G, std::move(seed));
  return canonical_subgroup(G, std::move(F.elements));
}

// All normal subgroups of index p, as kernels of surjections onto a cyclic
// group of order p. Surjections are enumerated by generator-image tuples with
// the first nonzero entry normalized to 1, which hits every kernel exactly
// once. Results are sorted by element set.
inline std::vector<Subgroup> index_p_normal_subgroups(const FiniteGroup& G) {
  if (!G.prime) fail("index_p_normal_subgroups requires prime-power order");
  const int p = *G.prime;
  const size_t g = G.generators.size();
  double count = 1;
  for (size_t i = 0; i < g; ++i) count *= p;
  if (count > 2e7) fail("too many generator-image tuples to enumerate");
  FiniteGroup Cp = make_cyclic(p);

  std::vector<std::vector<Elem>> kernels;
  std::vector<int> tuple(g, 0);
  auto next_tuple = [&]() -> bool {
    for (size_t i = g; i-- > 0;) {
      if (++tuple[i] < p) return true;
      tuple[i] = 0;
    }
    return false;
  };
  while (next_tuple()) {
    size_t first = 0;
    while (tuple[first] == 0) ++first;
    if (tuple[first] != 1) continue;
    std::vector<Elem> images(tuple.begin(), tuple.end());
    auto f = extend_hom(G, Cp, images);
    if (!f) continue;
    std::vector<Elem> ker;
    for (Elem x = 0; x < G.n; ++x)
      if ((*f)[x] == 0) ker.push_back(x);
    kernels.push_back(std::move(ker));
  }
  std::sort(kernels.begin(), kernels.end());
  std::vector<Subgroup> out;
  for (auto& k : kernels) out.push_back(canonical_subgroup(G, std::move(k)));
  return out;
}

// Frattini subgroup as the intersection of all maximal subgroups. In a group
// of prime-power order the maximal subgroups are exactly the normal subgroups
// of index p. Independent of frattini() above.
inline Subgroup frattini_by_maximal_intersection(const FiniteGroup& G) {
  std::vector<Subgroup> maxes = index_p_normal_subgroups(G);
  if (maxes.empty()) return full_subgroup(G);  // only for the trivial group
  std::vector<Elem> acc = maxes[0].elements;
  for (size_t i = 1; i < maxes.size(); ++i)
    acc = intersect_sorted(acc, maxes[i].elements);
  return canonical_subgroup(G, std::move(acc));
}

// Maximal subgroups of an abelian subgroup A (index p in A), returned as
// subgroups of the ambient group, sorted by element set.
inline std::vector<Subgroup> maximal_subgroups(const FiniteGroup& G, const Subgroup& A) {
  if (!is_abelian(G, A)) fail("maximal_subgroups expects an abelian subgroup");
  auto [H, to_parent] = subgroup_as_group(A);
  if (!H.prime) fail("maximal_subgroups expects a subgroup of prime-power order");
  std::vector<Subgroup> local = index_p_normal_subgroups(H);
  std::vector<std::vector<Elem>> lifted;
  for (const Subgroup& S : local) {
    std::vector<Elem> elems;
    for (Elem x : S.elements) elems.push_back(to_parent[x]);
    std::sort(elems.begin(), elems.end());
    lifted.push_back(std::move(elems));
  }
  std::sort(lifted.begin(), lifted.end());
  // Count check for an abelian group of rank r: (p^r - 1)/(p - 1).
  const int p = *H.prime;
  Subgroup F = frattini(H);
  long rank = 0, q = H.n / F.order();
  while (q > 1) { q /= p; ++rank; }
  long expect = 0, pk = 1;
  for (long i = 0; i < rank; ++i) { expect += pk; pk *= p; }
  if (static_cast<long>(lifted.size()) != expect)
    fail("maximal subgroup count mismatch");
  std::vector<Subgroup> out;
  for (auto& e : lifted) out.push_back(canonical_subgroup(G, std::move(e)));
  return out;
}

// Elements of order dividing p inside an abelian subgroup.
inline Subgroup omega1(const FiniteGroup& G, const Subgroup& A) {
  if (!is_abelian(G, A)) fail("omega1 expects an abelian subgroup");
  if (!G.prime) fail("omega1 requires prime-power order");
  const int p = *G.prime;
  std::vector<Elem> elems;
  for (Elem x : A.elements)
    if (G.pow(x, p) == 0) elems.push_back(x);
  return canonical_subgroup(G, std::move(elems));
}

// ---------------------------------------------------------------------------
// Commutator expansion identities, checked exhaustively on small groups and
// on random triples above the cutoff.

inline bool verify_lemma_identities(const FiniteGroup& G, int exhaustive_cutoff = 128,
                                    int random_trials = 100000, uint32_t seed = 12345) {
  auto c = [&](Elem x, Elem y) { return commutator(G, x, y); };
  auto check = [&](Elem x, Elem y, Elem z) {
    // [x, yz] = [x, z] [x, y] [x, y, z]
    Elem lhs1 = c(x, G.mul(y, z));
    Elem rhs1 = G.mul(G.mul(c(x, z), c(x, y)), c(c(x, y), z));
    if (lhs1 != rhs1) return false;
    // [xy, z] = [x, z] [x, z, y] [y, z]
    Elem lhs2 = c(G.mul(x, y), z);
    Elem rhs2 = G.mul(G.mul(c(x, z), c(c(x, z), y)), c(y, z));
    return lhs2 == rhs2;
  };
  if (G.n <= exhaustive_cutoff) {
    for (Elem x = 0; x < G.n; ++x)
      for (Elem y = 0; y < G.n; ++y)
        for (Elem z = 0; z < G.n; ++z)
          if (!check(x, y, z)) return false;
    return true;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, G.n - 1);
  for (int t = 0; t < random_trials; ++t)
    if (!check(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Abelian invariant factors d1 | d2 | ... | dk with a realizing basis: the
// group is the internal direct product of the cyclic subgroups generated by
// basis[i], with element_order(basis[i]) == factors[i].

struct AbelianInvariants {
  std::vector<int> factors;
  std::vector<Elem> basis;
};

namespace detail {

// Basis of an abelian group of prime-power order, orders descending.
// Picks a maximal-order element, splits it off, and lifts a recursive basis
// of the quotient with the usual power correction.
inline std::vector<Elem> p_group_basis(const FiniteGroup& P, int q) {
  if (P.n == 1) return {};
  Elem a = 0;
  int best = 1;
  for (Elem x = 0; x < P.n; ++x) {
    int o = P.order_of(x);
    if (o > best) { best = o; a = x; }
  }
  Subgroup A = closure(P, {a});
  auto [Q, proj] = quotient_group(P, A);
  std::vector<Elem> rep(Q.n, -1);
  for (Elem x = 0; x < P.n; ++x)
    if (rep[proj[x]] < 0) rep[proj[x]] = x;  // minimal: ascending scan
  std::vector<Elem> basis{a};
  for (Elem bq : p_group_basis(Q, q)) {
    Elem b = rep[bq];
    int f = Q.order_of(bq);  // a power of q
    Elem excess = P.pow(b, f);
    // excess lies in <a>; find t with a^t == excess, then f | t.
    const int ord_a = P.order_of(a);
    int t = 0;
    for (Elem cur = 0; cur != excess; cur = P.mul(cur, a)) {
      if (++t > ord_a) fail("p_group_basis: excess escapes the split factor");
    }
    if (t % f != 0) fail("p_group_basis: lift correction failed");
    Elem corrected = P.mul(b, P.pow(a, -(t / f)));
    if (P.order_of(corrected) != f) fail("p_group_basis: corrected order wrong");
    basis.push_back(corrected);
  }
  return basis;
}

}  // namespace detail

inline AbelianInvariants abelian_invariants(const FiniteGroup& A) {
  if (!is_abelian(A)) fail("abelian_invariants expects an abelian group");
  if (A.n == 1) return {};

  // Prime factorization of the order.
  std::vector<int> primes;
  {
    int m = A.n;
    for (int q = 2; static_cast<long>(q) * q <= m; ++q)
      if (m % q == 0) {
        primes.push_back(q);
        while (m % q == 0) m /= q;
      }
    if (m > 1) primes.push_back(m);
  }

  // Per-prime component bases, orders descending.
  std::vector<std::vector<std::pair<int, Elem>>> parts;  // (order, element of A)
  for (int q : primes) {
    std::vector<Elem> sylow;
    for (Elem x = 0; x < A.n; ++x) {
      int o = A.order_of(x);
      while (o % q == 0) o /= q;
      if (o == 1) sylow.push_back(x);
    }
    Subgroup S = canonical_subgroup(A, std::move(sylow));
    auto [P, to_parent] = subgroup_as_group(S);
    std::vector<std::pair<int, Elem>> part;
    for (Elem b : detail::p_group_basis(P, q))
      part.push_back({P.order_of(b), to_parent[b]});
    parts.push_back(std::move(part));
  }

  // Merge across primes, aligning the largest components together.
  size_t slots = 0;
  for (const auto& part : parts) slots = std::max(slots, part.size());
  AbelianInvariants inv;
  for (size_t j = 0; j < slots; ++j) {
    long d = 1;
    Elem b = 0;
    for (const auto& part : parts)
      if (j < part.size()) {
        d *= part[j].first;
        b = A.mul(b, part[j].second);
      }
    inv.factors.push_back(static_cast<int>(d));
    inv.basis.push_back(b);
  }
  std::reverse(inv.factors.begin(), inv.factors.end());
  std::reverse(inv.basis.begin(), inv.basis.end());

  // Sanity: factors ascending and dividing, orders match, basis spans with
  // multiplicity one.
  long prod = 1;
  for (size_t i = 0; i < inv.factors.size(); ++i) {
    if (i + 1 < inv.factors.size() && inv.factors[i + 1] % inv.factors[i] != 0)
      fail("abelian_invariants: factors do not divide");
    if (A.order_of(inv.basis[i]) != inv.factors[i])
      fail("abelian_invariants: basis order mismatch");
    prod *= inv.factors[i];
  }
  if (prod != A.n) fail("abelian_invariants: factor product mismatch");
  std::vector<char> hit(A.n, 0);
  std::vector<int> digits(inv.factors.size(), 0);
  long total = 0;
  auto advance = [&]() -> bool {
    for (size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < inv.factors[i]) return true;
      digits[i] = 0;
    }
    return false;
  };
  do {
    Elem x = 0;
    for (size_t i = 0; i < digits.size(); ++i)
      x = A.mul(x, A.pow(inv.basis[i], digits[i]));
    if (hit[x]) fail("abelian_invariants: basis does not split the group");
    hit[x] = 1;
    ++total;
  } while (advance());
  if (total != A.n) fail("abelian_invariants: basis span incomplete");
  return inv;
}

// coordinates[x][i] = exponent of basis[i] in x, one tuple per element,
// using the mixed-radix walk the invariants certify to be bijective.
inline std::vector<std::vector<int>> abelian_coordinates(const FiniteGroup& A,
                                                         const AbelianInvariants& inv) {
  const size_t r = inv.factors.size();
  std::vector<std::vector<int>> coord(A.n);
  std::vector<int> digits(r, 0);
  Elem x = 0;
  while (true) {
    coord[x] = digits;
    size_t i = 0;
    for (; i < r; ++i) {
      if (++digits[i] < inv.factors[i]) {
        x = A.mul(x, inv.basis[i]);
        break;
      }
      digits[i] = 0;
      x = A.mul(x, A.pow(inv.basis[i], -(inv.factors[i] - 1)));
    }
    if (i == r) break;
  }
  return coord;
}

// ---------------------------------------------------------------------------
// Subgroup enumeration for abelian groups.

// All subgroups of the abelian subgroup with the given elements, of order at
// most max_order, as sorted element sets ordered by (size, elements).
inline std::vector<std::vector<Elem>> abelian_subgroups_up_to(
    const FiniteGroup& G, const std::vector<Elem>& ambient, int max_order) {
  for (size_t i = 1; i < ambient.size(); ++i)
    if (ambient[i - 1] >= ambient[i]) fail("ambient element set must be sorted");
  for (Elem x : ambient)
    for (Elem y : ambient)
      if (!G.commutes(x, y)) fail("ambient element set must commute pairwise");
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> queue{{0}};
  seen.insert(queue[0]);
  for (size_t head = 0; head < queue.size(); ++head) {
    std::vector<Elem> B = queue[head];
    for (Elem x : ambient) {
      if (std::binary_search(B.begin(), B.end(), x)) continue;
      // <B, x> = union of B * x^k, since everything here commutes.
      std::vector<Elem> C;
      int ord = element_order(G, x);
      if (static_cast<long>(B.size()) * ord > max_order) continue;
      C.reserve(B.size() * ord);
      for (Elem b : B) {
        Elem cur = b;
        for (int k = 0; k < ord; ++k) {
          C.push_back(cur);
          cur = G.mul(cur, x);
        }
      }
      std::sort(C.begin(), C.end());
      C.erase(std::unique(C.begin(), C.end()), C.end());
      if (static_cast<int>(C.size()) > max_order) continue;
      if (seen.insert(C).second) queue.push_back(std::move(C));
    }
  }
  std::vector<std::vector<Elem>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// Subgroups of index t in an abelian group Q, via duality: order-t subgroups
// of the character group are enumerated and each is sent to its annihilator.
// This hits every index-t subgroup exactly once. Returns sorted element sets
// in lexicographic order.
inline std::vector<std::vector<Elem>> abelian_subgroups_of_index(const FiniteGroup& Q,
                                                                 int t) {
  if (t < 1 || Q.n % t != 0) fail("index must divide the group order");
  if (t == 1) {
    std::vector<Elem> all(Q.n);
    for (Elem x = 0; x < Q.n; ++x) all[x] = x;
    return {all};
  }
  AbelianInvariants inv = abelian_invariants(Q);
  const size_t r = inv.factors.size();
  const int L = inv.factors.back();  // exponent of Q
  std::vector<std::vector<int>> coord = abelian_coordinates(Q, inv);

  // The character group is abstractly the same product of cyclics.
  FiniteGroup D = make_cyclic(inv.factors[0]);
  for (size_t i = 1; i < r; ++i)
    D = direct_product(D, make_cyclic(inv.factors[i])).group;
  // Element d of D decodes to a tuple (c_1 .. c_r) by mixed radix, with the
  // first factor most significant (matching the chained product indexing).
  auto decode = [&](Elem d) {
    std::vector<int> c(r);
    for (size_t i = r; i-- > 0;) {
      c[i] = d % inv.factors[i];
      d /= inv.factors[i];
    }
    return c;
  };
  auto chi_vanishes = [&](const std::vector<int>& c, Elem x) {
    long acc = 0;
    for (size_t i = 0; i < r; ++i)
      acc += static_cast<long>(c[i]) * coord[x][i] * (L / inv.factors[i]);
    return acc % L == 0;
  };

  std::vector<Elem> dual_all(D.n);
  for (Elem x = 0; x < D.n; ++x) dual_all[x] = x;
  std::vector<std::vector<Elem>> dual_subs = abelian_subgroups_up_to(D, dual_all, t);
  std::set<std::vector<Elem>> results;
  for (const auto& S : dual_subs) {
    if (static_cast<int>(S.size()) != t) continue;
    std::vector<std::vector<int>> chars;
    for (Elem d : S) chars.push_back(decode(d));
    std::vector<Elem> ann;
    for (Elem x = 0; x < Q.n; ++x) {
      bool ok = true;
      for (const auto& c : chars)
        if (!chi_vanishes(c, x)) { ok = false; break; }
      if (ok) ann.push_back(x);
    }
    if (static_cast<int>(ann.size()) != Q.n / t)
      fail("annihilator has unexpected order");
    if (!results.insert(std::move(ann)).second)
      fail("duplicate annihilator for distinct dual subgroups");
  }
  return std::vector<std::vector<Elem>>(results.begin(), results.end());
}

// Size of a smallest generating set of a group of prime-power order: the
// rank of the quotient by the Frattini subgroup.
inline int minimal_generator_count(const FiniteGroup& G) {
  if (!G.prime) fail("minimal_generator_count requires prime-power order");
  if (G.n == 1) return 0;
  Subgroup F = frattini(G);
  int q = G.n / F.order();
  int rank = 0;
  while (q > 1) { q /= *G.prime; ++rank; }
  return rank;
}

}  // namespace pgroup
