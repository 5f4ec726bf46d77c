#pragma once

// Small standard triangulations used by the catalog and the tests.

#include <string>
#include <vector>

#include "sepcheck/complex.hpp"

namespace sepcheck::standard {

/// Cycle on n vertices named prefix0 .. prefix(n-1).
inline ComplexPtr polygon(std::size_t n, const std::string& prefix = "v", std::string name = "") {
  std::vector<std::vector<std::string>> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back({prefix + std::to_string(i), prefix + std::to_string((i + 1) % n)});
  if (name.empty()) name = std::to_string(n) + "-gon";
  return SimplicialComplex::from_maximal_simplices(std::move(name), edges);
}

inline ComplexPtr hexagon() { return polygon(6, "v", "hexagon"); }

inline ComplexPtr triangle_circle() {
  return SimplicialComplex::from_maximal_simplices("triangle", {{"c", "d"}, {"d", "e"}, {"e", "c"}});
}

/// Boundary of the octahedron: vertices x+, x-, y+, y-, z+, z-.
inline ComplexPtr octahedron() {
  std::vector<std::vector<std::string>> tris;
  for (const char* x : {"x+", "x-"})
    for (const char* y : {"y+", "y-"})
      for (const char* z : {"z+", "z-"}) tris.push_back({x, y, z});
  return SimplicialComplex::from_maximal_simplices("octahedron", tris);
}

/// Boundary of the 4-dimensional cross-polytope, a 3-sphere on 8 vertices.
/// Contains octahedron() as the full subcomplex on the x, y, z vertices.
inline ComplexPtr cross_polytope_s3() {
  std::vector<std::vector<std::string>> tets;
  for (const char* w : {"w+", "w-"})
    for (const char* x : {"x+", "x-"})
      for (const char* y : {"y+", "y-"})
        for (const char* z : {"z+", "z-"}) tets.push_back({w, x, y, z});
  return SimplicialComplex::from_maximal_simplices("cross-polytope-S3", tets);
}

/// The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline ComplexPtr csaszar_torus() {
  std::vector<std::vector<std::string>> tris;
  auto t = [](int i) { return "t" + std::to_string(i % 7); };
  for (int i = 0; i < 7; ++i) {
    tris.push_back({t(i), t(i + 1), t(i + 3)});
    tris.push_back({t(i), t(i + 2), t(i + 3)});
  }
  return SimplicialComplex::from_maximal_simplices("csaszar-torus", tris);
}

/// The 6-vertex real projective plane (hemi-icosahedron).
inline ComplexPtr rp2_six() {
  return SimplicialComplex::from_maximal_simplices(
      "RP2", {{"p1", "p2", "p3"}, {"p1", "p3", "p4"}, {"p1", "p4", "p5"}, {"p1", "p5", "p6"}, {"p1", "p6", "p2"},
              {"p2", "p3", "p5"}, {"p3", "p4", "p6"}, {"p4", "p5", "p2"}, {"p5", "p6", "p3"}, {"p6", "p2", "p4"}});
}

/// Suspension of a hexagon: a 2-sphere with apexes N, S over h0 .. h5.
inline ComplexPtr hexagonal_bipyramid() {
  std::vector<std::vector<std::string>> tris;
  for (int i = 0; i < 6; ++i) {
    const std::string a = "h" + std::to_string(i), b = "h" + std::to_string((i + 1) % 6);
    tris.push_back({"N", a, b});
    tris.push_back({"S", a, b});
  }
  return SimplicialComplex::from_maximal_simplices("hexagonal-bipyramid", tris);
}

}  // namespace sepcheck::standard
