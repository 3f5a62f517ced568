// Acceptance gate: one line per criterion, exit 0 only if every criterion
// holds inside its time budget.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "pgroup/cli.hpp"

using namespace pgroup;

namespace {

using clock_type = std::chrono::steady_clock;

struct Criterion {
  int number;
  const char* label;
  long budget_ms;  // 0 means no budget
  bool ok;
  long elapsed_ms;
};

std::vector<Criterion> results;

template <typename Fn>
void criterion(int number, const char* label, long budget_ms, Fn&& fn) {
  auto t0 = clock_type::now();
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "criterion %d threw: %s\n", number, e.what());
    ok = false;
  }
  long ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() - t0)
          .count());
  if (budget_ms > 0 && ms >= budget_ms) ok = false;
  results.push_back({number, label, budget_ms, ok, ms});
}

struct ApplicableRun {
  FiniteGroup G;
  std::vector<Elem> alpha_image;
};

std::vector<ApplicableRun> applicable_runs;

}  // namespace

int main() {
  criterion(1, "pipeline verdicts on every applicable catalogue group", 10000, [] {
    bool ok = true;
    for (const CatalogueEntry& entry : catalogue_entries()) {
      if (!entry.expect_applicable) continue;
      FiniteGroup G = build_builtin(entry.name, {});
      TheoremReport rep = run_theorem_pipeline(G);
      bool row = rep.applicable && rep.prime == entry.expect_prime &&
                 rep.h_order == entry.expect_h_order &&
                 rep.k_order == entry.expect_k_order && rep.checks &&
                 rep.checks->all();
      if (!row) {
        std::fprintf(stderr, "criterion 1: %s failed\n", entry.name.c_str());
        ok = false;
      }
      applicable_runs.push_back({std::move(G), rep.alpha_image});
    }
    return ok && applicable_runs.size() >= 7;
  });

  criterion(2, "purely non-abelian groups report not applicable", 5000, [] {
    bool ok = true;
    for (const char* name : {"D4", "Q8", "heisenberg27", "modular27"}) {
      FiniteGroup G = build_builtin(name, {});
      TheoremReport rep = run_theorem_pipeline(G);
      std::ostringstream out, err;
      int code = run_cli({"check", std::string("builtin:") + name}, out, err);
      if (rep.applicable || code != 3) {
        std::fprintf(stderr, "criterion 2: %s failed (code %d)\n", name, code);
        ok = false;
      }
    }
    return ok;
  });

  criterion(3, "oracle agreement for applicable groups up to order 512", 60000, [] {
    bool ok = true;
    for (const ApplicableRun& run : applicable_runs) {
      if (run.G.n > kOracleOrderCap) continue;
      GroupMap alpha{&run.G, &run.G, run.alpha_image};
      OracleOutcome oc = oracle_cross_check(run.G, alpha);
      long expected_inner = run.G.n / center(run.G).order();
      if (!oc.pass || oc.inner_count != expected_inner) {
        std::fprintf(stderr, "criterion 3: %s failed\n", run.G.name.c_str());
        ok = false;
      }
    }
    return ok;
  });

  criterion(4, "order-3^7 family: pipeline and explicit map on every realization",
            120000, [] {
    int count = 0, realizable = 0;
    bool ok = true;
    for_each_paper_candidate([&](PaperCandidate& pc) {
      ++count;
      TheoremReport rep = run_theorem_pipeline(pc.G);
      if (!(rep.applicable && rep.prime == 3 && rep.checks && rep.checks->all())) {
        std::fprintf(stderr, "criterion 4: pipeline failed on %s\n",
                     pc.G.name.c_str());
        ok = false;
      }
      ExplicitAlphaResult ex = check_explicit_alpha(pc);
      if (ex.realizable) {
        ++realizable;
        if (!ex.all()) {
          std::fprintf(stderr, "criterion 4: explicit map failed on %s\n",
                       pc.G.name.c_str());
          ok = false;
        }
      }
      return true;
    });
    return ok && count >= 1 && realizable >= 1;
  });

  criterion(5, "commutator expansion identities across the catalogue", 30000, [] {
    bool ok = true;
    for (const CatalogueEntry& entry : catalogue_entries()) {
      FiniteGroup G = build_builtin(entry.name, {});
      if (!verify_lemma_identities(G)) {
        std::fprintf(stderr, "criterion 5: %s failed\n", entry.name.c_str());
        ok = false;
      }
    }
    return ok;
  });

  criterion(6, "frattini agrees with the maximal-subgroup intersection", 30000, [] {
    bool ok = true;
    for (const CatalogueEntry& entry : catalogue_entries()) {
      if (entry.order > 512) continue;
      FiniteGroup G = build_builtin(entry.name, {});
      if (frattini(G).elements != frattini_by_maximal_intersection(G).elements) {
        std::fprintf(stderr, "criterion 6: %s failed\n", entry.name.c_str());
        ok = false;
      }
    }
    return ok;
  });

  criterion(7, "derived and power fixing, and their conjunction at odd p", 0, [] {
    bool ok = true;
    for (const ApplicableRun& run : applicable_runs) {
      GroupMap alpha{&run.G, &run.G, run.alpha_image};
      bool fd = fixes_subgroup_elementwise(alpha, derived_subgroup(run.G));
      bool fa = fixes_subgroup_elementwise(alpha, agemo(run.G));
      bool ff = fixes_subgroup_elementwise(alpha, frattini(run.G));
      bool row = fd && fa && (*run.G.prime == 2 || ff == (fd && fa));
      if (!row) {
        std::fprintf(stderr, "criterion 7: %s failed\n", run.G.name.c_str());
        ok = false;
      }
    }
    return ok && !applicable_runs.empty();
  });

  criterion(8, "catalogue output is byte-identical across runs", 0, [] {
    std::ostringstream out1, err1, out2, err2;
    int c1 = run_cli({"catalogue"}, out1, err1);
    int c2 = run_cli({"catalogue"}, out2, err2);
    return c1 == 0 && c2 == 0 && out1.str() == out2.str() && !out1.str().empty();
  });

  bool all_ok = true;
  for (const Criterion& c : results) {
    all_ok = all_ok && c.ok;
    if (c.budget_ms > 0)
      std::printf("%d %-4s %6ld ms / %6ld ms  %s\n", c.number, c.ok ? "PASS" : "FAIL",
                  c.elapsed_ms, c.budget_ms, c.label);
    else
      std::printf("%d %-4s %6ld ms             %s\n", c.number, c.ok ? "PASS" : "FAIL",
                  c.elapsed_ms, c.label);
  }
  int passed = 0;
  for (const Criterion& c : results) passed += c.ok ? 1 : 0;
  std::printf("acceptance: %d/%d passed\n", passed, static_cast<int>(results.size()));
  return all_ok ? 0 : 1;
}
