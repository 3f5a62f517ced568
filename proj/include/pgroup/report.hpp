#pragma once
// JSON serialization of reports. Key order is fixed, values are integers,
// booleans, strings, or null only, so emitted documents are byte-stable and
// round-trip exactly.

#include "json.hpp"
#include "pgroup/oracle.hpp"

namespace pgroup {

using json = nlohmann::ordered_json;

inline json oracle_to_json(const OracleOutcome& o) {
  json j;
  j["ran"] = true;
  j["pass"] = o.pass;
  j["alpha_is_central_member"] = o.alpha_is_central_member;
  j["alpha_is_inner"] = o.alpha_is_inner;
  j["alpha_order"] = o.alpha_order;
  j["hom_count"] = o.hom_count;
  j["central_count"] = o.central_count;
  j["inner_count"] = o.inner_count;
  return j;
}

inline json oracle_skipped_json(const std::string& reason) {
  json j;
  j["ran"] = false;
  j["reason"] = reason;
  return j;
}

inline json checks_to_json(const TheoremChecks& c) {
  json j;
  j["is_automorphism"] = c.is_automorphism;
  j["is_central"] = c.is_central;
  j["has_order_p"] = c.has_order_p;
  j["is_non_inner"] = c.is_non_inner;
  j["fixes_derived"] = c.fixes_derived;
  j["fixes_agemo"] = c.fixes_agemo;
  j["fixes_frattini"] = c.fixes_frattini;
  return j;
}

// The fixed nine-key report. oracle may be an object or null (not attempted).
inline json report_to_json(const TheoremReport& rep, const json& oracle) {
  json j;
  j["group"] = rep.group;
  j["order"] = rep.order;
  j["prime"] = rep.prime;
  j["applicable"] = rep.applicable;
  if (rep.applicable) {
    json dec;
    dec["h_order"] = rep.h_order;
    dec["k_order"] = rep.k_order;
    dec["h_generators"] = rep.h_generators;
    dec["k_generators"] = rep.k_generators;
    j["decomposition"] = dec;
    json alpha;
    alpha["m_generators"] = rep.m_generators;
    alpha["m_order"] = rep.m_order;
    alpha["h"] = rep.h_label;
    alpha["g"] = rep.g_label;
    json images = json::object();
    for (const auto& [from, to] : rep.generator_images) images[from] = to;
    alpha["generator_images"] = images;
    alpha["fixed_point_count"] = rep.fixed_point_count;
    alpha["inner_witness"] = rep.inner_witness ? json(*rep.inner_witness) : json(nullptr);
    j["alpha"] = alpha;
  } else {
    json dec;
    dec["reason"] = rep.not_applicable_reason;
    j["decomposition"] = dec;
    j["alpha"] = nullptr;
  }
  j["checks"] = rep.checks ? checks_to_json(*rep.checks) : json(nullptr);
  j["oracle"] = oracle;
  json times = json::object();
  for (const auto& [stage, ms] : rep.timings_ms) times[stage] = ms;
  j["timings_ms"] = times;
  return j;
}

// One catalogue row. Deliberately carries no timings so consecutive runs are
// byte-identical.
inline json catalogue_row_json(const std::string& name, const TheoremReport& rep,
                               bool row_pass, const json& oracle) {
  json j;
  j["name"] = name;
  j["order"] = rep.order;
  j["prime"] = rep.prime;
  j["applicable"] = rep.applicable;
  j["pass"] = row_pass;
  j["h_order"] = rep.applicable ? json(rep.h_order) : json(nullptr);
  j["k_order"] = rep.applicable ? json(rep.k_order) : json(nullptr);
  j["oracle"] = oracle;
  return j;
}

inline json explicit_alpha_to_json(const ExplicitAlphaResult& ex) {
  json j;
  j["realizable"] = ex.realizable;
  if (!ex.realizable) return j;
  j["order3"] = ex.order3;
  j["central"] = ex.central;
  j["non_inner"] = ex.non_inner;
  j["fixes_derived"] = ex.fixes_derived;
  j["fixes_agemo"] = ex.fixes_agemo;
  j["fixes_frattini"] = ex.fixes_frattini;
  j["agemo_is_cube_span"] = ex.agemo_is_cube_span;
  return j;
}

}  // namespace pgroup
