#pragma once
// Reads group construction documents: a single JSON object {"construct": node}
// where each node is tagged {"kind": "cyclic" | "direct_product" | "semidirect"
// | "permutation" | "builtin", ...}. Malformed input raises Error.

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "pgroup/core.hpp"

namespace pgroup {

namespace detail {

inline const nlohmann::json& spec_field(const nlohmann::json& node, const char* key,
                                        const char* kind) {
  auto it = node.find(key);
  if (it == node.end())
    fail(std::string(kind) + " node is missing required field \"" + key + "\"");
  return *it;
}

inline int spec_int(const nlohmann::json& node, const char* key, const char* kind) {
  const nlohmann::json& v = spec_field(node, key, kind);
  if (!v.is_number_integer())
    fail(std::string(kind) + " field \"" + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace detail

inline GroupSpec parse_group_spec(const nlohmann::json& node) {
  if (!node.is_object()) fail("group spec node must be a JSON object");
  auto kind_it = node.find("kind");
  if (kind_it == node.end() || !kind_it->is_string())
    fail("group spec node needs a string \"kind\" field");
  const std::string kind = kind_it->get<std::string>();

  GroupSpec s;
  if (kind == "cyclic") {
    s.kind = SpecKind::Cyclic;
    s.order = detail::spec_int(node, "order", "cyclic");
    if (s.order < 1) fail("cyclic order must be positive");
  } else if (kind == "direct_product") {
    s.kind = SpecKind::DirectProduct;
    const nlohmann::json& factors = detail::spec_field(node, "factors", "direct_product");
    if (!factors.is_array() || factors.empty())
      fail("direct_product field \"factors\" must be a non-empty array");
    for (const auto& f : factors) s.factors.push_back(parse_group_spec(f));
  } else if (kind == "semidirect") {
    s.kind = SpecKind::Semidirect;
    s.factors.push_back(parse_group_spec(detail::spec_field(node, "base", "semidirect")));
    s.factors.push_back(parse_group_spec(detail::spec_field(node, "actor", "semidirect")));
    const nlohmann::json& action = detail::spec_field(node, "action", "semidirect");
    if (!action.is_array() || action.empty())
      fail("semidirect field \"action\" must be a non-empty array");
    if (action[0].is_string()) {
      // Flat list form: the images for the single actor generator.
      std::vector<std::string> words;
      for (const auto& w : action) {
        if (!w.is_string()) fail("semidirect action words must be strings");
        words.push_back(w.get<std::string>());
      }
      s.action.push_back(std::move(words));
    } else {
      for (const auto& row : action) {
        if (!row.is_array()) fail("semidirect action rows must be arrays of strings");
        std::vector<std::string> words;
        for (const auto& w : row) {
          if (!w.is_string()) fail("semidirect action words must be strings");
          words.push_back(w.get<std::string>());
        }
        s.action.push_back(std::move(words));
      }
    }
  } else if (kind == "permutation") {
    s.kind = SpecKind::Permutation;
    s.degree = detail::spec_int(node, "degree", "permutation");
    if (s.degree < 1) fail("permutation degree must be positive");
    const nlohmann::json& gens = detail::spec_field(node, "generators", "permutation");
    if (!gens.is_array() || gens.empty())
      fail("permutation field \"generators\" must be a non-empty array");
    for (const auto& g : gens) {
      if (!g.is_string()) fail("permutation generators must be cycle-notation strings");
      s.perm_generators.push_back(g.get<std::string>());
    }
  } else if (kind == "builtin") {
    s.kind = SpecKind::Builtin;
    const nlohmann::json& name = detail::spec_field(node, "name", "builtin");
    if (!name.is_string()) fail("builtin field \"name\" must be a string");
    s.name = name.get<std::string>();
  } else {
    fail("unknown group spec kind '" + kind + "'");
  }
  return s;
}

inline GroupSpec load_spec_document(const nlohmann::json& doc) {
  if (!doc.is_object()) fail("spec document must be a JSON object");
  auto it = doc.find("construct");
  if (it == doc.end()) fail("spec document needs a top-level \"construct\" node");
  return parse_group_spec(*it);
}

inline GroupSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    fail("spec file '" + path + "' is not valid JSON: " + e.what());
  }
  return load_spec_document(doc);
}

// CLI shorthand: "builtin:NAME" avoids writing a one-line file.
inline GroupSpec resolve_spec_argument(const std::string& arg) {
  constexpr std::string_view prefix = "builtin:";
  if (arg.rfind(prefix, 0) == 0) return builtin_spec(arg.substr(prefix.size()));
  return load_spec_file(arg);
}

}  // namespace pgroup
