#pragma once

// JSON file formats for complexes and maps, and report serialization.
//
//   complex: {"name": str, "maximal_simplices": [[str, ...], ...]}
//   map:     {"name": str, "domain": str, "codomain": str, "vertex_map": {str: str, ...}}

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sepcheck/manifold.hpp"
#include "sepcheck/obstruction.hpp"
#include "sepcheck/separation.hpp"
#include "sepcheck/simmap.hpp"
#include "json.hpp"

namespace sepcheck {

using Json = nlohmann::ordered_json;

inline Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(origin + ": malformed JSON: " + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

namespace detail {

inline const Json& require_field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw InputError(what + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(what + ": missing field '" + key + "'");
  return *it;
}

inline std::string require_string(const Json& j, const char* key, const std::string& what) {
  const Json& v = require_field(j, key, what);
  if (!v.is_string()) throw InputError(what + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace detail

/// Maximal simplices as sorted label lists, in lexicographic order.
inline std::vector<std::vector<std::string>> sorted_maximal_labels(const SimplicialComplex& k) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : k.maximal_simplices()) out.push_back(k.labels_of(s));
  std::sort(out.begin(), out.end());
  return out;
}

inline Json complex_to_json(const SimplicialComplex& k) {
  Json j;
  j["name"] = k.name();
  j["maximal_simplices"] = sorted_maximal_labels(k);
  return j;
}

inline ComplexPtr complex_from_json(const Json& j) {
  const std::string name = detail::require_string(j, "name", "complex");
  const Json& ms = detail::require_field(j, "maximal_simplices", "complex '" + name + "'");
  if (!ms.is_array()) throw InputError("complex '" + name + "': 'maximal_simplices' must be an array");
  std::vector<std::vector<std::string>> simplices;
  for (const auto& s : ms) {
    if (!s.is_array()) throw InputError("complex '" + name + "': each simplex must be an array of labels");
    std::vector<std::string> labels;
    for (const auto& v : s) {
      if (!v.is_string()) throw InputError("complex '" + name + "': vertex labels must be strings");
      labels.push_back(v.get<std::string>());
    }
    simplices.push_back(std::move(labels));
  }
  return SimplicialComplex::from_maximal_simplices(name, simplices);
}

inline Json map_to_json(const SimplicialMap& f) {
  Json j;
  j["name"] = f.name();
  j["domain"] = f.domain()->name();
  j["codomain"] = f.codomain()->name();
  Json vm = Json::object();
  for (const auto& [from, to] : f.label_map()) vm[from] = to;
  j["vertex_map"] = std::move(vm);
  return j;
}

/// Resolves the domain and codomain names against `complexes` and validates
/// the result.
inline SimplicialMap map_from_json(const Json& j, const std::vector<ComplexPtr>& complexes) {
  const std::string name = detail::require_string(j, "name", "map");
  const std::string what = "map '" + name + "'";
  auto lookup = [&](const char* key) {
    const std::string target = detail::require_string(j, key, what);
    const ComplexPtr* found = nullptr;
    for (const auto& k : complexes)
      if (k->name() == target) {
        if (found) throw InputError(what + ": complex name '" + target + "' is ambiguous");
        found = &k;
      }
    if (!found) throw InputError(what + ": no complex named '" + target + "'");
    return *found;
  };
  const ComplexPtr domain = lookup("domain");
  const ComplexPtr codomain = lookup("codomain");
  const Json& vm = detail::require_field(j, "vertex_map", what);
  if (!vm.is_object()) throw InputError(what + ": 'vertex_map' must be an object");
  std::map<std::string, std::string> labels;
  for (const auto& [from, to] : vm.items()) {
    if (!to.is_string()) throw InputError(what + ": vertex_map values must be strings");
    labels.emplace(from, to.get<std::string>());
  }
  SimplicialMap f = SimplicialMap::from_labels(name, domain, codomain, labels);
  if (!validate(f)) throw InputError(what + ": some simplex is not carried onto a simplex of the codomain");
  return f;
}

inline Json certificate_to_json(const SimplicialComplex& k, int n, const ManifoldCertificate& c) {
  Json j;
  j["complex"] = k.name();
  j["dimension"] = n;
  j["closed_manifold"] = c.is_closed_z2_homology_n_manifold;
  Json failures = Json::array();
  for (const auto& s : c.failures) failures.push_back(k.labels_of(s));
  j["failures"] = std::move(failures);
  return j;
}

inline Json separation_to_json(const SeparationReport& r) {
  Json j;
  j["h1_Y_zero"] = r.hypotheses.h1_Y_zero;
  j["A_proper"] = r.hypotheses.A_proper;
  j["Y_minus_fA_connected"] = r.hypotheses.Y_minus_fA_connected;
  j["coker_dim"] = r.coker_dim;
  j["beta0_formula"] = r.beta0_formula;
  j["beta0_oracle"] = r.beta0_oracle;
  j["agreement"] = r.agreement;
  return j;
}

/// The separation section when the formula is refused: the hypotheses and the
/// oracle are reported, the formula fields are null.
inline Json refused_separation_to_json(const Thm32Hypotheses& h, std::size_t beta0_oracle) {
  Json j;
  j["h1_Y_zero"] = h.h1_Y_zero;
  j["A_proper"] = h.A_proper;
  j["Y_minus_fA_connected"] = h.Y_minus_fA_connected;
  j["coker_dim"] = nullptr;
  j["beta0_formula"] = nullptr;
  j["beta0_oracle"] = beta0_oracle;
  j["agreement"] = nullptr;
  return j;
}

inline Json obstruction_to_json(const ObstructionReport& r) {
  Json j;
  j["Uf_is_zero"] = r.Uf_is_zero;
  j["w1f_is_zero"] = r.w1f_is_zero;
  j["theta_is_zero"] = r.theta_is_zero;
  j["theta_pushforward_zero"] = r.theta_pushforward_zero;
  j["exists_nonzero_mu"] = r.exists_nonzero_mu;
  j["all_mu_nonzero"] = r.all_mu_nonzero;
  j["predicate_thm_final"] = r.predicate_thm_final;
  j["beta0_oracle"] = r.beta0_oracle;
  j["dim_Hm_image"] = r.dim_Hm_image;
  return j;
}

/// Canonical text of a JSON value: two-space indentation, trailing newline.
inline std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace sepcheck
