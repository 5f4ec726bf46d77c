#pragma once

// Built-in instances. Every entry is a simplicial map between small
// triangulated closed manifolds together with the report values it must
// reproduce.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "sepcheck/simmap.hpp"
#include "sepcheck/standard.hpp"
#include "json.hpp"

namespace sepcheck {

struct CatalogEntry {
  std::string id;
  std::string summary;
  std::vector<ComplexPtr> complexes;  // domain first, then codomain when distinct
  SimplicialMap map;
  /// Keys of the analyze report with the values this entry must produce.
  nlohmann::ordered_json expected;
  /// Where each expected value comes from.
  std::map<std::string, std::string> notes;
  /// Exit code of analyze, and the condition it names when refusing.
  int expected_exit = 0;
  std::string expected_condition;
};

namespace detail {

inline SimplicialMap cycle_map(std::string name, const std::string& prefix, const ComplexPtr& codomain,
                               const std::vector<std::string>& targets) {
  const ComplexPtr domain = standard::polygon(targets.size(), prefix, name + "-domain");
  std::map<std::string, std::string> m;
  for (std::size_t i = 0; i < targets.size(); ++i) m.emplace(prefix + std::to_string(i), targets[i]);
  return SimplicialMap::from_labels(std::move(name), domain, codomain, m);
}

inline std::vector<ComplexPtr> complexes_of(const SimplicialMap& f) {
  if (f.domain() == f.codomain()) return {f.domain()};
  return {f.domain(), f.codomain()};
}

inline CatalogEntry make_entry(std::string id, std::string summary, SimplicialMap f, nlohmann::ordered_json expected,
                               std::map<std::string, std::string> notes, std::string refused_condition = "") {
  auto complexes = complexes_of(f);
  const int code = refused_condition.empty() ? 0 : 1;
  return {std::move(id),       std::move(summary), std::move(complexes), std::move(f), std::move(expected),
          std::move(notes), code,               std::move(refused_condition)};
}

}  // namespace detail

/// The built-in catalog, sorted by id.
inline std::vector<CatalogEntry> catalog() {
  using nlohmann::ordered_json;
  std::vector<CatalogEntry> out;
  const ComplexPtr oct = standard::octahedron();

  out.push_back(detail::make_entry(
      "equator_s1_s2", "square circle onto the equator x+ y+ x- y- of the octahedron",
      detail::cycle_map("equator_s1_s2", "e", oct, {"x+", "y+", "x-", "y-"}),
      ordered_json{{"A_proper", true},
                   {"coker_dim", 0},
                   {"beta0_formula", 2},
                   {"beta0_oracle", 2},
                   {"agreement", true},
                   {"theta_is_zero", true},
                   {"exists_nonzero_mu", false},
                   {"predicate_thm_final", false}},
      {{"beta0_oracle", "Jordan-Brouwer: an embedded circle cuts the sphere in two"}}));

  {
    const ComplexPtr s3 = standard::cross_polytope_s3();
    std::map<std::string, std::string> m;
    for (const auto& l : oct->labels()) m.emplace(l, l);
    out.push_back(detail::make_entry(
        "equator_s2_s3", "octahedron as the w = 0 equator of the cross-polytope 3-sphere",
        SimplicialMap::from_labels("equator_s2_s3", oct, s3, m),
        ordered_json{{"coker_dim", 0},
                     {"beta0_formula", 2},
                     {"beta0_oracle", 2},
                     {"agreement", true},
                     {"theta_is_zero", true},
                     {"predicate_thm_final", false}},
        {{"beta0_oracle", "Jordan-Brouwer in dimension three"}}));
  }

  out.push_back(detail::make_entry(
      "figure_eight_s1_s2", "hexagon onto two triangles of the octahedron meeting at z+",
      detail::cycle_map("figure_eight_s1_s2", "v", oct, {"z+", "x+", "y+", "z+", "x-", "y-"}),
      ordered_json{{"h1_Y_zero", true},
                   {"A_proper", true},
                   {"Y_minus_fA_connected", true},
                   {"coker_dim", 1},
                   {"beta0_formula", 3},
                   {"beta0_oracle", 3},
                   {"agreement", true},
                   {"theta_is_zero", true},
                   {"exists_nonzero_mu", true},
                   {"predicate_thm_final", true},
                   {"dim_Hm_image", 2}},
      {{"coker_dim", "image of H^0(X) + H^0(f(A)) in H^0(A) is the diagonal of Z2^2"},
       {"beta0_oracle", "two caps inside the triangles plus the outside region"}}));

  out.push_back(detail::make_entry(
      "triple_bouquet_s1_s2", "9-gon onto three triangles of the hexagonal bipyramid sharing the apex N",
      detail::cycle_map("triple_bouquet_s1_s2", "w", standard::hexagonal_bipyramid(),
                        {"N", "h0", "h1", "N", "h2", "h3", "N", "h4", "h5"}),
      ordered_json{{"A_proper", true},
                   {"coker_dim", 2},
                   {"beta0_formula", 4},
                   {"beta0_oracle", 4},
                   {"agreement", true},
                   {"exists_nonzero_mu", true},
                   {"predicate_thm_final", true},
                   {"dim_Hm_image", 3}},
      {{"beta0_oracle", "three triangle interiors plus the outside region"}}));

  out.push_back(detail::make_entry(
      "double_wrap_s1", "hexagon wrapped twice around the triangle z+ x+ y+ of the octahedron",
      detail::cycle_map("double_wrap_s1", "v", oct, {"z+", "x+", "y+", "z+", "x+", "y+"}),
      ordered_json{{"A_proper", false},
                   {"beta0_oracle", 2},
                   {"theta_is_zero", true},
                   {"exists_nonzero_mu", false},
                   {"predicate_thm_final", false},
                   {"dim_Hm_image", 1}},
      {{"A_proper", "every point has a two-point fiber"}}, "A_proper"));

  out.push_back(detail::make_entry(
      "essential_circle_t2", "7-cycle t0 t1 ... t6 in the Csaszar torus",
      detail::cycle_map("essential_circle_t2", "s", standard::csaszar_torus(),
                        {"t0", "t1", "t2", "t3", "t4", "t5", "t6"}),
      ordered_json{{"h1_Y_zero", false},
                   {"beta0_oracle", 1},
                   {"Uf_is_zero", false},
                   {"theta_is_zero", true},
                   {"predicate_thm_final", false}},
      {{"Uf_is_zero", "the cycle is nonzero in H_1(T^2; Z2)"}}, "h1_Y_zero"));

  {
    const ComplexPtr rp2 = standard::rp2_six();
    out.push_back(detail::make_entry("rp2_identity", "identity of the 6-vertex projective plane",
                                     SimplicialMap("rp2_identity", rp2, rp2, SimplicialMap::identity(rp2).vertex_map()),
                                     ordered_json{{"w1f_is_zero", true}}, {{"w1f_is_zero", "w1 + w1 = 0 over Z2"}},
                                     "codimension_one"));

    out.push_back(detail::make_entry(
        "rp2_essential_circle", "3-cycle p1 p2 p4 in the projective plane",
        detail::cycle_map("rp2_essential_circle", "r", rp2, {"p1", "p2", "p4"}),
        ordered_json{{"h1_Y_zero", false},
                     {"beta0_oracle", 1},
                     {"Uf_is_zero", false},
                     {"w1f_is_zero", false},
                     {"theta_is_zero", true},
                     {"predicate_thm_final", false}},
        {{"w1f_is_zero", "w1(RP^2) restricts nontrivially to an orientation-reversing loop"}}, "h1_Y_zero"));
  }

  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; });
  return out;
}

inline const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, const std::string& id) {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

}  // namespace sepcheck
