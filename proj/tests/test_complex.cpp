#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sepcheck/complex.hpp"
#include "sepcheck/homology.hpp"
#include "sepcheck/manifold.hpp"
#include "sepcheck/standard.hpp"

using namespace sepcheck;

namespace {

ComplexPtr two_triangles() {
  return SimplicialComplex::from_maximal_simplices("disk", {{"a", "b", "c"}, {"b", "c", "d"}});
}

Subcomplex equator(const ComplexPtr& oct) {
  return Subcomplex::from_labels(oct, {{"x+", "y+"}, {"y+", "x-"}, {"x-", "y-"}, {"y-", "x+"}});
}

std::vector<ComplexPtr> sample_complexes() {
  return {standard::hexagon(),        standard::triangle_circle(), standard::octahedron(), standard::csaszar_torus(),
          standard::rp2_six(),        standard::cross_polytope_s3(), standard::hexagonal_bipyramid(), two_triangles(),
          SimplicialComplex::from_maximal_simplices("point", {{"p"}})};
}

}  // namespace

TEST_CASE("construction from maximal simplices", "[complex]") {
  const auto circle = SimplicialComplex::from_maximal_simplices("c", {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  CHECK(circle->count(0) == 3);
  CHECK(circle->count(1) == 3);
  CHECK(euler_characteristic(*circle) == 0);

  const auto oct = standard::octahedron();
  CHECK(oct->count(0) == 6);
  CHECK(oct->count(1) == 12);
  CHECK(oct->count(2) == 8);
  CHECK(euler_characteristic(*oct) == 2);

  const auto point = SimplicialComplex::from_maximal_simplices("p", {{"p"}});
  CHECK(point->dimension() == 0);
  CHECK(euler_characteristic(*point) == 1);

  CHECK_THROWS_AS(SimplicialComplex::from_maximal_simplices("bad", {{"a", "a"}}), InputError);
  CHECK_THROWS_AS(SimplicialComplex::from_maximal_simplices("bad", {{}}), InputError);
  CHECK(SimplicialComplex::from_maximal_simplices("e", {})->dimension() == -1);
}

TEST_CASE("vertex order is lexicographic and simplices are sorted", "[complex]") {
  const auto k = SimplicialComplex::from_maximal_simplices("k", {{"z", "b", "m"}});
  CHECK(k->labels() == std::vector<std::string>{"b", "m", "z"});
  CHECK(k->labels_of(k->simplex(2, 0)) == std::vector<std::string>{"b", "m", "z"});
  CHECK(k->maximal_simplices().size() == 1);
}

TEST_CASE("euler characteristic examples", "[complex]") {
  CHECK(euler_characteristic(*standard::hexagon()) == 0);
  const auto s3 = standard::cross_polytope_s3();
  CHECK(s3->count(0) == 8);
  CHECK(s3->count(1) == 24);
  CHECK(s3->count(2) == 32);
  CHECK(s3->count(3) == 16);
  CHECK(euler_characteristic(*s3) == 0);
}

TEST_CASE("face closure holds for every constructed complex", "[complex]") {
  for (const auto& k : sample_complexes())
    for (const auto& kk : {k, barycentric_subdivide(*k).complex})
      for (int d = 1; d <= kk->dimension(); ++d)
        for (const auto& s : kk->simplices(d))
          for (const auto& f : facets_of(s)) CHECK(kk->contains(f));
}

TEST_CASE("barycentric subdivision examples", "[complex]") {
  const auto edge = SimplicialComplex::from_maximal_simplices("edge", {{"a", "b"}});
  const Subdivision se = barycentric_subdivide(*edge);
  CHECK(se.complex->count(0) == 3);
  CHECK(se.complex->count(1) == 2);
  CHECK(se.complex->vertex_of("<a.b>").has_value());
  CHECK(se.complex->vertex_of("<a>").has_value());

  const auto tri = barycentric_subdivide(*standard::triangle_circle()).complex;
  CHECK(tri->count(0) == 6);
  CHECK(tri->count(1) == 6);
  CHECK(manifold_certificate(*tri, 1).is_closed_z2_homology_n_manifold);

  const auto soct = barycentric_subdivide(*standard::octahedron()).complex;
  CHECK(soct->count(0) == 26);
  CHECK(euler_characteristic(*soct) == 2);
}

TEST_CASE("subdivision preserves the euler characteristic", "[complex]") {
  for (const auto& k : sample_complexes())
    CHECK(euler_characteristic(*barycentric_subdivide(*k).complex) == euler_characteristic(*k));
}

TEST_CASE("subdivision dictionary", "[complex]") {
  const auto oct = standard::octahedron();
  const Subdivision sd = barycentric_subdivide(*oct);
  for (std::size_t v = 0; v < sd.complex->vertex_count(); ++v) {
    const auto [d, i] = sd.origin[v];
    CHECK(sd.barycenter[static_cast<std::size_t>(d)][i] == v);
    CHECK(sd.complex->labels()[v] == barycenter_label(*oct, oct->simplex(d, i)));
  }
}

TEST_CASE("complementary complex examples", "[complex]") {
  const auto oct = standard::octahedron();
  const ComplementaryComplex all = complementary_complex(*oct, Subcomplex::empty(oct));
  CHECK(all.complement.is_whole());
  const ComplementaryComplex none = complementary_complex(*oct, Subcomplex::whole(oct));
  CHECK(none.complement.is_empty());

  const ComplementaryComplex caps = complementary_complex(*oct, equator(oct));
  CHECK(connected_components(caps.complement) == 2);
  const ComplexPtr body = caps.complement.to_complex("caps");
  CHECK(euler_characteristic(*body) == 2);  // two disks
  CHECK(betti(*body, 1) == 0);

  const auto other = standard::hexagon();
  CHECK_THROWS_AS(complementary_complex(*oct, Subcomplex::whole(other)), InputError);
}

TEST_CASE("face-poset complement count equals the complementary complex and the top-simplex graph", "[complex]") {
  const auto oct = standard::octahedron();
  const auto torus = standard::csaszar_torus();
  const auto s3 = standard::cross_polytope_s3();
  std::vector<std::pair<ComplexPtr, Subcomplex>> cases{
      {oct, Subcomplex::empty(oct)},
      {oct, equator(oct)},
      {oct, Subcomplex::from_labels(oct, {{"z+", "x+"}, {"x+", "y+"}, {"y+", "z+"}, {"z+", "x-"}, {"x-", "y-"}, {"y-", "z+"}})},
      {oct, Subcomplex::from_labels(oct, {{"z+"}})},
      {torus, Subcomplex::from_labels(torus, {{"t0", "t1"}, {"t1", "t2"}, {"t2", "t3"}, {"t3", "t4"}, {"t4", "t5"}, {"t5", "t6"}, {"t6", "t0"}})},
      {s3, Subcomplex::from_labels(s3, {{"x+", "y+", "z+"}, {"x+", "y+", "z-"}, {"x+", "y-", "z+"}, {"x+", "y-", "z-"},
                                         {"x-", "y+", "z+"}, {"x-", "y+", "z-"}, {"x-", "y-", "z+"}, {"x-", "y-", "z-"}})}};
  const std::vector<std::size_t> expected{1, 2, 3, 1, 1, 2};
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto& [k, f] = cases[c];
    const std::size_t fast = complement_components(*k, f);
    CHECK(fast == expected[c]);
    CHECK(fast == connected_components(complementary_complex(*k, f).complement));
    CHECK(fast == oracle::top_simplex_components(*k, f));
  }
}

TEST_CASE("connected components", "[complex]") {
  CHECK(connected_components(*empty_complex()) == 0);
  CHECK(connected_components(*standard::hexagon()) == 1);
  const auto two = SimplicialComplex::from_maximal_simplices(
      "two", {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "e"}, {"e", "f"}, {"f", "d"}});
  CHECK(connected_components(*two) == 2);
  CHECK(connected_components(*SimplicialComplex::from_maximal_simplices("pts", {{"a"}, {"b"}})) == 2);
  for (const auto& k : sample_complexes()) CHECK(connected_components(*k) == oracle::naive_betti(*k, 0));
}

TEST_CASE("links", "[complex]") {
  const auto hex = standard::hexagon();
  const auto lv = link(*hex, hex->simplex_from_labels({"v0"}));
  CHECK(lv->count(0) == 2);
  CHECK(lv->dimension() == 0);

  const auto oct = standard::octahedron();
  const auto lz = link(*oct, oct->simplex_from_labels({"z+"}));
  CHECK(lz->count(0) == 4);
  CHECK(lz->count(1) == 4);
  CHECK(connected_components(*lz) == 1);
  CHECK(euler_characteristic(*lz) == 0);

  const auto le = link(*oct, oct->simplex_from_labels({"x+", "z+"}));
  CHECK(le->labels_of(le->simplex(0, 0)) == std::vector<std::string>{"y+"});
  CHECK(le->count(0) == 2);
  CHECK(le->dimension() == 0);

  CHECK_THROWS_AS(link(*oct, oct->simplex_from_labels({"x+", "x-"})), InputError);
}

TEST_CASE("manifold certificate", "[complex]") {
  CHECK(manifold_certificate(*standard::hexagon(), 1).is_closed_z2_homology_n_manifold);
  CHECK(manifold_certificate(*standard::octahedron(), 2).is_closed_z2_homology_n_manifold);
  CHECK(manifold_certificate(*standard::csaszar_torus(), 2).is_closed_z2_homology_n_manifold);
  CHECK(manifold_certificate(*standard::rp2_six(), 2).is_closed_z2_homology_n_manifold);
  CHECK(manifold_certificate(*standard::cross_polytope_s3(), 3).is_closed_z2_homology_n_manifold);
  CHECK(manifold_certificate(*standard::hexagonal_bipyramid(), 2).is_closed_z2_homology_n_manifold);
  CHECK_FALSE(manifold_certificate(*standard::octahedron(), 3).is_closed_z2_homology_n_manifold);

  const auto disk = two_triangles();
  const ManifoldCertificate c = manifold_certificate(*disk, 2);
  CHECK_FALSE(c.is_closed_z2_homology_n_manifold);
  std::size_t boundary_edges = 0;
  for (const auto& s : c.failures)
    if (simplex_dim(s) == 1) ++boundary_edges;
  CHECK(boundary_edges == 4);
  for (const auto& e : {std::vector<std::string>{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}}) {
    const Simplex s = disk->simplex_from_labels(e);
    CHECK(std::find(c.failures.begin(), c.failures.end(), s) != c.failures.end());
  }
  CHECK(std::find(c.failures.begin(), c.failures.end(), disk->simplex_from_labels({"b", "c"})) == c.failures.end());

  // two circles sharing a vertex: not a manifold at the wedge point
  const auto eight = SimplicialComplex::from_maximal_simplices(
      "eight", {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "d"}, {"d", "e"}, {"e", "a"}});
  const ManifoldCertificate ce = manifold_certificate(*eight, 1);
  CHECK_FALSE(ce.is_closed_z2_homology_n_manifold);
  REQUIRE(ce.failures.size() == 1);
  CHECK(ce.failures[0] == eight->simplex_from_labels({"a"}));
}

TEST_CASE("subcomplexes", "[complex]") {
  const auto oct = standard::octahedron();
  const Subcomplex eq = equator(oct);
  CHECK(eq.count(0) == 4);
  CHECK(eq.count(1) == 4);
  CHECK(eq.dimension() == 1);
  CHECK(Subcomplex::empty(oct).dimension() == -1);
  CHECK(Subcomplex::whole(oct).is_whole());
  CHECK_THROWS_AS(Subcomplex::from_labels(oct, {{"x+", "x-"}}), InputError);

  auto mask = std::vector<std::vector<char>>{std::vector<char>(6, 0), std::vector<char>(12, 0), std::vector<char>(8, 0)};
  mask[1][0] = 1;  // an edge without its vertices
  CHECK_THROWS_AS(Subcomplex::from_mask(oct, mask), InputError);

  const ComplexPtr as_complex = eq.to_complex("eq");
  CHECK(as_complex->count(1) == 4);
  CHECK(manifold_certificate(*as_complex, 1).is_closed_z2_homology_n_manifold);
}
