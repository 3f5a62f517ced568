#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "pgroup/verify.hpp"
#include "pgroup/catalogue.hpp"

using namespace pgroup;

namespace {

GroupMap canonical_alpha(const FiniteGroup& g) {
  auto dec = find_abelian_direct_factor(g);
  REQUIRE(dec.has_value());
  return build_alpha(g, choose_alpha_data(g, *dec));
}

}  // namespace

TEST_CASE("automorphism recognition") {
  FiniteGroup d4 = build_builtin("D4", {});
  REQUIRE(is_automorphism(identity_map(d4)));
  REQUIRE(is_automorphism(conjugation_map(d4, d4.find_label("s"))));

  FiniteGroup g = build_builtin("C2xD4", {});
  GroupMap alpha = canonical_alpha(g);
  REQUIRE(is_automorphism(alpha));

  // Source and target must be the same group object.
  FiniteGroup copy = d4;
  GroupMap cross{&d4, &copy, identity_map(d4).image};
  REQUIRE_FALSE(is_automorphism(cross));

  GroupMap short_map{&d4, &d4, std::vector<Elem>(d4.n - 1, 0)};
  REQUIRE_FALSE(is_automorphism(short_map));

  std::vector<Elem> shifted(d4.n);
  for (Elem x = 0; x < d4.n; ++x) shifted[x] = (x + 1) % d4.n;
  REQUIRE_FALSE(is_automorphism(GroupMap{&d4, &d4, shifted}));

  REQUIRE_FALSE(is_automorphism(GroupMap{&d4, &d4, std::vector<Elem>(d4.n, 0)}));

  // A permutation fixing the identity need not be multiplicative.
  std::vector<Elem> swapped = identity_map(d4).image;
  std::swap(swapped[d4.find_label("r")], swapped[d4.find_label("s")]);
  REQUIRE_FALSE(is_automorphism(GroupMap{&d4, &d4, swapped}));
}

TEST_CASE("centrality") {
  FiniteGroup g = build_builtin("C2xD4", {});
  GroupMap alpha = canonical_alpha(g);
  REQUIRE(is_central(alpha, center(g)));
  REQUIRE_FALSE(is_central(alpha, trivial_subgroup(g)));

  // Conjugations on a class-2 group are central too: displacements are
  // commutators and the derived subgroup sits inside the center.
  FiniteGroup d4 = build_builtin("D4", {});
  GroupMap conj = conjugation_map(d4, d4.find_label("s"));
  REQUIRE(is_central(conj, center(d4)));
}

TEST_CASE("map orders") {
  FiniteGroup d4 = build_builtin("D4", {});
  REQUIRE(map_order(identity_map(d4)) == 1);
  REQUIRE(map_order(conjugation_map(d4, d4.find_label("r"))) == 2);
  REQUIRE(map_order(conjugation_map(d4, d4.find_label("s"))) == 2);

  FiniteGroup g = build_builtin("C2xD4", {});
  REQUIRE(map_order(canonical_alpha(g)) == 2);

  FiniteGroup h3 = build_builtin("C3xHeis27", {});
  REQUIRE(map_order(canonical_alpha(h3)) == 3);

  REQUIRE_THROWS_WITH(map_order(GroupMap{&d4, &d4, std::vector<Elem>(d4.n, 0)}),
                      Catch::Matchers::ContainsSubstring("map_order:"));
}

TEST_CASE("inner witnesses") {
  FiniteGroup d4 = build_builtin("D4", {});
  Subgroup z = center(d4);
  REQUIRE(is_inner(identity_map(d4), z) == 0);

  Elem s = d4.find_label("s");
  Elem r2 = d4.pow(d4.find_label("r"), 2);
  auto witness = is_inner(conjugation_map(d4, s), z);
  REQUIRE(witness.has_value());
  // Witnesses form the coset s*Z; the least index is reported.
  REQUIRE(*witness == std::min(s, d4.mul(s, r2)));
  REQUIRE(d4.mul(s, r2) != s);

  FiniteGroup g = build_builtin("C2xD4", {});
  REQUIRE_FALSE(is_inner(canonical_alpha(g), center(g)).has_value());
}

TEST_CASE("elementwise fixing") {
  FiniteGroup g = build_builtin("C2xD4", {});
  GroupMap alpha = canonical_alpha(g);
  REQUIRE(fixes_subgroup_elementwise(alpha, trivial_subgroup(g)));
  REQUIRE(fixes_subgroup_elementwise(alpha, derived_subgroup(g)));
  REQUIRE(fixes_subgroup_elementwise(alpha, agemo(g)));
  REQUIRE(fixes_subgroup_elementwise(alpha, frattini(g)));
  // The center contains the moved element a, so it is not fixed pointwise.
  REQUIRE_FALSE(fixes_subgroup_elementwise(alpha, center(g)));
  REQUIRE_FALSE(fixes_subgroup_elementwise(alpha, full_subgroup(g)));
}

TEST_CASE("pipeline report on C2xD4") {
  FiniteGroup g = build_builtin("C2xD4", {});
  TheoremReport rep = run_theorem_pipeline(g);

  REQUIRE(rep.group == "C2xD4");
  REQUIRE(rep.order == 16);
  REQUIRE(rep.prime == 2);
  REQUIRE(rep.applicable);
  REQUIRE(rep.not_applicable_reason.empty());

  REQUIRE(rep.h_order == 2);
  REQUIRE(rep.k_order == 8);
  REQUIRE(rep.h_generators == std::vector<std::string>{"a"});
  REQUIRE_FALSE(rep.k_generators.empty());

  REQUIRE(rep.m_order == 1);
  REQUIRE(rep.m_generators.empty());
  REQUIRE(rep.h_label == "a");
  REQUIRE(rep.g_label == "r^2");
  REQUIRE(rep.fixed_point_count == 8);
  REQUIRE_FALSE(rep.inner_witness.has_value());

  REQUIRE(rep.alpha_image.size() == 16);
  for (const auto& [from, to] : rep.generator_images) {
    Elem x = g.find_label(from);
    REQUIRE(x >= 0);
    REQUIRE(g.label(rep.alpha_image[x]) == to);
  }

  REQUIRE(rep.checks.has_value());
  REQUIRE(rep.checks->is_automorphism);
  REQUIRE(rep.checks->is_central);
  REQUIRE(rep.checks->has_order_p);
  REQUIRE(rep.checks->is_non_inner);
  REQUIRE(rep.checks->fixes_derived);
  REQUIRE(rep.checks->fixes_agemo);
  REQUIRE(rep.checks->fixes_frattini);
  REQUIRE(rep.checks->all());

  REQUIRE(rep.timings_ms.size() == 3);
  REQUIRE(rep.timings_ms[0].first == "decompose");
  REQUIRE(rep.timings_ms[1].first == "construct");
  REQUIRE(rep.timings_ms[2].first == "verify");
}

TEST_CASE("pipeline without checks") {
  FiniteGroup g = build_builtin("C2xD4", {});
  PipelineOptions opts;
  opts.run_checks = false;
  TheoremReport rep = run_theorem_pipeline(g, opts);
  REQUIRE(rep.applicable);
  REQUIRE_FALSE(rep.checks.has_value());
  REQUIRE(rep.alpha_image.size() == 16);
  REQUIRE(rep.timings_ms.size() == 2);
}

TEST_CASE("pipeline overrides") {
  FiniteGroup g = build_builtin("C4xD4", {});
  Elem a = g.find_label("a");
  Elem a3 = g.pow(a, 3);

  PipelineOptions opts;
  opts.m_gens = std::vector<Elem>{g.mul(a, a)};
  opts.h = a3;
  TheoremReport rep = run_theorem_pipeline(g, opts);
  REQUIRE(rep.applicable);
  REQUIRE(rep.h_label == g.label(a3));
  REQUIRE(rep.m_order == 2);
  REQUIRE(rep.checks->all());

  PipelineOptions bad;
  bad.g = a;
  REQUIRE_THROWS_WITH(run_theorem_pipeline(g, bad),
                      Catch::Matchers::ContainsSubstring("Omega_1"));
}

TEST_CASE("not applicable groups") {
  for (const char* name : {"D4", "Q8", "heisenberg27", "modular27"}) {
    FiniteGroup g = build_builtin(name, {});
    TheoremReport rep = run_theorem_pipeline(g);
    INFO(name);
    REQUIRE_FALSE(rep.applicable);
    REQUIRE(rep.not_applicable_reason ==
            "purely non-abelian: no non-trivial abelian direct factor");
    REQUIRE_FALSE(rep.checks.has_value());
    REQUIRE(rep.h_order == 0);
    REQUIRE(rep.timings_ms.size() == 1);
    REQUIRE(rep.timings_ms[0].first == "decompose");
  }
}

TEST_CASE("pipeline domain errors") {
  FiniteGroup c4 = make_cyclic(4);
  REQUIRE_THROWS_WITH(run_theorem_pipeline(c4),
                      Catch::Matchers::ContainsSubstring("non-abelian"));
  FiniteGroup s4 = permutation_group(4, {"(1 2)", "(1 2 3 4)"});
  REQUIRE_THROWS_WITH(run_theorem_pipeline(s4),
                      Catch::Matchers::ContainsSubstring("prime-power"));
}

TEST_CASE("catalogue expectations") {
  for (const CatalogueEntry& entry : catalogue_entries()) {
    FiniteGroup g = build_builtin(entry.name, {});
    INFO(entry.name);
    REQUIRE(g.n == entry.order);
    TheoremReport rep = run_theorem_pipeline(g);
    REQUIRE(rep.applicable == entry.expect_applicable);
    if (!entry.expect_applicable) continue;
    REQUIRE(rep.prime == entry.expect_prime);
    REQUIRE(rep.h_order == entry.expect_h_order);
    REQUIRE(rep.k_order == entry.expect_k_order);
    REQUIRE(rep.checks.has_value());
    REQUIRE(rep.checks->all());
  }
}

TEST_CASE("fixing the frattini subgroup follows from derived and agemo") {
  for (const CatalogueEntry& entry : catalogue_entries()) {
    if (!entry.expect_applicable) continue;
    FiniteGroup g = build_builtin(entry.name, {});
    INFO(entry.name);
    GroupMap alpha = canonical_alpha(g);
    REQUIRE(fixes_subgroup_elementwise(alpha, derived_subgroup(g)));
    REQUIRE(fixes_subgroup_elementwise(alpha, agemo(g)));
    REQUIRE(fixes_subgroup_elementwise(alpha, frattini(g)));
    if (*g.prime == 2)
      REQUIRE(frattini(g).elements == agemo(g).elements);
  }
}
