#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "pgroup/construct.hpp"
#include "pgroup/catalogue.hpp"

using namespace pgroup;

TEST_CASE("basic maps") {
  FiniteGroup g = build_builtin("D4", {});
  GroupMap id = identity_map(g);
  for (Elem x = 0; x < g.n; ++x) {
    REQUIRE(id(x) == x);
    REQUIRE(displacement(id, x) == 0);
  }
  Elem r = g.find_label("r"), s = g.find_label("s");
  GroupMap conj = conjugation_map(g, s);
  for (Elem x = 0; x < g.n; ++x) {
    REQUIRE(conj(x) == g.conjugate(x, s));
    REQUIRE(displacement(conj, x) == commutator(g, x, s));
  }
  REQUIRE(conj(r) == g.pow(r, 3));
}

TEST_CASE("center of a subgroup") {
  FiniteGroup g = build_builtin("C2xD4", {});
  Subgroup k = closure(g, {g.find_label("r"), g.find_label("s")});
  Subgroup zk = center_of_subgroup(g, k);
  REQUIRE(zk.order() == 2);
  Elem r = g.find_label("r");
  REQUIRE(zk.contains(g.mul(r, r)));
  REQUIRE(center_of_subgroup(g, full_subgroup(g)).elements == center(g).elements);
}

TEST_CASE("canonical alpha on C2xD4") {
  FiniteGroup g = build_builtin("C2xD4", {});
  auto dec = find_abelian_direct_factor(g);
  AlphaSpec spec = choose_alpha_data(g, *dec);
  REQUIRE(spec.M.order() == 1);
  REQUIRE(g.labels[spec.h] == "a");
  REQUIRE(g.labels[spec.g] == "r^2");
  REQUIRE(spec.nu[spec.h] == 1);
  REQUIRE(spec.nu[0] == 0);

  GroupMap alpha = build_alpha(g, spec);
  REQUIRE(alpha(spec.h) == g.mul(spec.h, spec.g));
  REQUIRE(alpha(spec.g) == spec.g);

  // K is fixed pointwise; displacements are powers of g.
  for (Elem x : dec->K.elements) REQUIRE(alpha(x) == x);
  for (Elem x = 0; x < g.n; ++x) {
    Elem d = displacement(alpha, x);
    REQUIRE((d == 0 || d == spec.g));
    REQUIRE(d == g.pow(spec.g, spec.nu[x]));
  }

  // alpha composed with itself is the identity here (p = 2).
  for (Elem x = 0; x < g.n; ++x) REQUIRE(alpha(alpha(x)) == x);

  // nu is multiplicative modulo p.
  for (Elem x = 0; x < g.n; ++x)
    for (Elem y = 0; y < g.n; ++y)
      REQUIRE(spec.nu[g.mul(x, y)] == (spec.nu[x] + spec.nu[y]) % 2);
}

TEST_CASE("canonical alpha on C4xD4") {
  FiniteGroup g = build_builtin("C4xD4", {});
  auto dec = find_abelian_direct_factor(g);
  AlphaSpec spec = choose_alpha_data(g, *dec);
  Elem a = g.find_label("a");
  REQUIRE(spec.M.order() == 2);
  REQUIRE(spec.M.contains(g.mul(a, a)));
  REQUIRE(spec.h == a);
  REQUIRE(g.labels[spec.g] == "r^2");

  GroupMap alpha = build_alpha(g, spec);
  // Fixed points are exactly the elements of M*K.
  std::set<Elem> mk;
  for (Elem m : spec.M.elements)
    for (Elem k : dec->K.elements) mk.insert(g.mul(m, k));
  REQUIRE(mk.size() == 16);
  int fixed = 0;
  for (Elem x = 0; x < g.n; ++x)
    if (alpha(x) == x) {
      ++fixed;
      REQUIRE(mk.count(x) == 1);
    }
  REQUIRE(fixed == 16);

  // nu vanishes on M and on K, and is 1 on h.
  for (Elem m : spec.M.elements) REQUIRE(spec.nu[m] == 0);
  for (Elem k : dec->K.elements) REQUIRE(spec.nu[k] == 0);
  REQUIRE(spec.nu[spec.h] == 1);
}

TEST_CASE("alpha of order three") {
  FiniteGroup g = build_builtin("C3xHeis27", {});
  auto dec = find_abelian_direct_factor(g);
  AlphaSpec spec = choose_alpha_data(g, *dec);
  GroupMap alpha = build_alpha(g, spec);
  bool moved = false;
  for (Elem x = 0; x < g.n; ++x) {
    if (alpha(x) != x) moved = true;
    REQUIRE(alpha(alpha(alpha(x))) == x);
  }
  REQUIRE(moved);
  // Displacements are powers of an order-3 central g.
  REQUIRE(element_order(g, spec.g) == 3);
  for (Elem x = 0; x < g.n; ++x) {
    Elem d = displacement(alpha, x);
    REQUIRE((d == 0 || d == spec.g || d == g.mul(spec.g, spec.g)));
  }
}

TEST_CASE("override validation") {
  FiniteGroup g = build_builtin("C4xD4", {});
  auto dec = find_abelian_direct_factor(g);
  Elem a = g.find_label("a");
  Elem r = g.find_label("r");
  Elem a2 = g.mul(a, a);
  Elem r2 = g.mul(r, r);

  REQUIRE_THROWS_WITH(make_alpha_spec(g, *dec, closure(g, {}), a, r2),
                      Catch::Matchers::ContainsSubstring("M must be a maximal subgroup"));
  REQUIRE_THROWS_WITH(make_alpha_spec(g, *dec, closure(g, {r2}), a, r2),
                      Catch::Matchers::ContainsSubstring("M must be a maximal subgroup"));
  REQUIRE_THROWS_WITH(make_alpha_spec(g, *dec, closure(g, {a2}), r, r2),
                      Catch::Matchers::ContainsSubstring("h must lie in H outside M"));
  REQUIRE_THROWS_WITH(make_alpha_spec(g, *dec, closure(g, {a2}), a2, r2),
                      Catch::Matchers::ContainsSubstring("h must lie in H outside M"));
  REQUIRE_THROWS_WITH(make_alpha_spec(g, *dec, closure(g, {a2}), a, 0),
                      Catch::Matchers::ContainsSubstring(
                          "g must be a non-identity element of Omega_1(Z(K))"));
  REQUIRE_THROWS_WITH(make_alpha_spec(g, *dec, closure(g, {a2}), a, r),
                      Catch::Matchers::ContainsSubstring("Omega_1"));
  REQUIRE_THROWS_WITH(make_alpha_spec(g, *dec, closure(g, {a2}), a, a),
                      Catch::Matchers::ContainsSubstring("Omega_1"));

  // Valid override: the other coset representative.
  Elem a3 = g.pow(a, 3);
  AlphaSpec spec = make_alpha_spec(g, *dec, closure(g, {a2}), a3, r2);
  REQUIRE(spec.nu[a3] == 1);
  REQUIRE(spec.nu[a] == 1);  // a = a3 * a2, and a2 is in M
  GroupMap alpha = build_alpha(g, spec);
  REQUIRE(alpha(a3) == g.mul(a3, r2));
}

TEST_CASE("alpha construction requires a prime-power group") {
  // C2 x S3 decomposes, but the construction is only defined at prime power
  // order.
  FiniteGroup s3 = permutation_group(3, {"(1 2)", "(2 3)"});
  DirectProductResult dp = direct_product(make_cyclic(2), s3);
  const FiniteGroup& g = dp.group;
  Subgroup h = closure(g, {dp.embed_a[1]});
  Subgroup k = closure(g, {dp.embed_b[s3.generators[0]], dp.embed_b[s3.generators[1]]});
  DirectDecomposition dec;
  REQUIRE(try_decomposition(g, h, k, &dec) == std::nullopt);
  REQUIRE_THROWS_WITH(make_alpha_spec(g, dec, closure(g, {}), dp.embed_a[1], 1),
                      Catch::Matchers::ContainsSubstring("prime-power"));
}

TEST_CASE("displacement lands in the chosen center across the catalogue") {
  for (const char* name :
       {"C2xD4", "C2xQ8", "C2xC2xD4", "C4xD4", "C3xHeis27", "C3xModular27"}) {
    FiniteGroup g = build_builtin(name, {});
    auto dec = find_abelian_direct_factor(g);
    AlphaSpec spec = choose_alpha_data(g, *dec);
    GroupMap alpha = build_alpha(g, spec);
    Subgroup z = center(g);
    Subgroup zk = center_of_subgroup(g, dec->K);
    for (Elem x = 0; x < g.n; ++x) {
      Elem d = displacement(alpha, x);
      REQUIRE(z.contains(d));
      REQUIRE(zk.contains(d));
    }
  }
}
