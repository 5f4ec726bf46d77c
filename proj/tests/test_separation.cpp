#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "sepcheck/analyze.hpp"
#include "sepcheck/catalog.hpp"
#include "sepcheck/separation.hpp"
#include "sepcheck/standard.hpp"

using namespace sepcheck;

namespace {

const CatalogEntry& entry(const std::string& id) {
  static const std::vector<CatalogEntry> entries = catalog();
  const CatalogEntry* e = find_entry(entries, id);
  if (!e) throw std::runtime_error("no catalog entry " + id);
  return *e;
}

/// 9-gon wrapping the triangle z+ x+ y+ twice, then closing up along z+ x- y-.
SimplicialMap double_loop_with_tail() {
  return detail::cycle_map("double_loop_with_tail", "v", standard::octahedron(),
                           {"z+", "x+", "y+", "z+", "x+", "y+", "z+", "x-", "y-"});
}

std::size_t top_components_of_image(const SimplicialMap& f) {
  return oracle::top_simplex_components(*f.codomain(), image_subcomplex(f));
}

}  // namespace

TEST_CASE("complement oracle examples", "[separation]") {
  CHECK(complement_components_oracle(*entry("figure_eight_s1_s2").map.codomain(),
                                     image_subcomplex(entry("figure_eight_s1_s2").map)) == 3);
  CHECK(complement_components_oracle(*entry("equator_s1_s2").map.codomain(),
                                     image_subcomplex(entry("equator_s1_s2").map)) == 2);
  CHECK(complement_components_oracle(*entry("essential_circle_t2").map.codomain(),
                                     image_subcomplex(entry("essential_circle_t2").map)) == 1);
  const ComplexPtr oct = standard::octahedron();
  CHECK(complement_components_oracle(*oct, Subcomplex::empty(oct)) == 1);
  CHECK(complement_components_oracle(*oct, Subcomplex::whole(oct)) == 0);
  for (const auto& e : catalog()) {
    INFO(e.id);
    CHECK(complement_components_oracle(*e.map.codomain(), image_subcomplex(e.map)) == top_components_of_image(e.map));
  }
}

TEST_CASE("complement oracle agrees with top-simplex adjacency on random subcomplexes", "[separation]") {
  std::mt19937_64 rng(41);
  for (const ComplexPtr& y : {standard::octahedron(), standard::csaszar_torus(), standard::cross_polytope_s3(),
                              standard::hexagonal_bipyramid()}) {
    for (int t = 0; t < 25; ++t) {
      std::vector<Simplex> gens;
      const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(y->dimension()));
      for (std::size_t i = 0; i < y->count(d); ++i)
        if (rng() % 3 == 0) gens.push_back(y->simplex(d, i));
      const Subcomplex f = Subcomplex::closure_of(y, gens);
      CHECK(complement_components_oracle(*y, f) == oracle::top_simplex_components(*y, f));
    }
  }
}

TEST_CASE("codimension-one preconditions", "[separation]") {
  const ComplexPtr oct = standard::octahedron();
  auto condition_of = [](const SimplicialMap& f) -> std::string {
    try {
      require_codimension_one(f);
    } catch (const PreconditionError& e) {
      return e.condition();
    }
    return "";
  };
  CHECK(condition_of(entry("figure_eight_s1_s2").map).empty());
  CHECK(condition_of(entry("rp2_identity").map) == "codomain_manifold");

  const ComplexPtr eight =
      SimplicialComplex::from_maximal_simplices("eight", {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "d"}, {"d", "e"}, {"e", "a"}});
  const SimplicialMap from_eight = SimplicialMap::from_labels(
      "from_eight", eight, oct, {{"a", "z+"}, {"b", "x+"}, {"c", "y+"}, {"d", "x-"}, {"e", "y-"}});
  CHECK(condition_of(from_eight) == "domain_manifold");

  const ComplexPtr two = SimplicialComplex::from_maximal_simplices(
      "two_circles", {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "e"}, {"e", "f"}, {"f", "d"}});
  const SimplicialMap from_two = SimplicialMap::from_labels(
      "from_two", two, oct, {{"a", "x+"}, {"b", "y+"}, {"c", "z+"}, {"d", "x-"}, {"e", "y-"}, {"f", "z-"}});
  CHECK(condition_of(from_two) == "domain_connected");

  CHECK_THROWS_AS(beta0_formula_thm32(entry("rp2_identity").map), PreconditionError);
}

TEST_CASE("hypothesis examples", "[separation]") {
  const Thm32Hypotheses fe = check_hypotheses_thm32(entry("figure_eight_s1_s2").map);
  CHECK(fe.all());
  CHECK(fe.first_failure().empty());

  const Thm32Hypotheses dw = check_hypotheses_thm32(entry("double_wrap_s1").map);
  CHECK(dw.h1_Y_zero);
  CHECK_FALSE(dw.A_proper);
  CHECK(dw.first_failure() == "A_proper");

  CHECK(check_hypotheses_thm32(entry("essential_circle_t2").map).first_failure() == "h1_Y_zero");

  const Thm32Hypotheses tail = check_hypotheses_thm32(double_loop_with_tail());
  CHECK(tail.h1_Y_zero);
  CHECK(tail.A_proper);
  CHECK_FALSE(tail.Y_minus_fA_connected);
  CHECK(tail.first_failure() == "Y_minus_fA_connected");
}

TEST_CASE("formula refuses outside its hypotheses", "[separation]") {
  auto refusal = [](const SimplicialMap& f) -> std::string {
    try {
      beta0_formula_thm32(f);
    } catch (const HypothesisError& e) {
      return e.hypothesis();
    }
    return "";
  };
  CHECK(refusal(entry("double_wrap_s1").map) == "A_proper");
  CHECK(refusal(entry("essential_circle_t2").map) == "h1_Y_zero");
  CHECK(refusal(entry("rp2_essential_circle").map) == "h1_Y_zero");
  CHECK(refusal(double_loop_with_tail()) == "Y_minus_fA_connected");
}

TEST_CASE("formula matches the oracle on the catalog", "[separation]") {
  const std::map<std::string, std::size_t> expected{
      {"equator_s1_s2", 2}, {"equator_s2_s3", 2}, {"figure_eight_s1_s2", 3}, {"triple_bouquet_s1_s2", 4}};
  for (const auto& [id, beta0] : expected) {
    for (int k = 0; k <= 1; ++k) {
      INFO(id << " subdivided " << k << " times");
      const SimplicialMap f = subdivide_times(entry(id).map, k);
      const SeparationReport r = beta0_formula_thm32(f);
      CHECK(r.beta0_formula == beta0);
      CHECK(r.beta0_oracle == beta0);
      CHECK(r.coker_dim == beta0 - 2);
      CHECK(r.agreement);
      CHECK(top_components_of_image(f) == beta0);
    }
  }
}

TEST_CASE("hypotheses are needed: torus negative control", "[separation]") {
  const SimplicialMap& f = entry("essential_circle_t2").map;
  const SelfIntersectionData si = self_intersection(f);
  REQUIRE(si.is_embedding);
  // the cokernel term evaluated anyway predicts two components
  const std::size_t naive_formula = 2 + cokernel_dim(restriction_block_map(f, si, 0));
  CHECK(naive_formula == 2);
  CHECK(complement_components_oracle(*f.codomain(), image_subcomplex(f)) == 1);
  CHECK(top_components_of_image(f) == 1);
}

TEST_CASE("Jordan-Brouwer for embeddings", "[separation]") {
  CHECK(jordan_brouwer_check(entry("equator_s1_s2").map));
  CHECK(jordan_brouwer_check(entry("equator_s2_s3").map));
  CHECK(jordan_brouwer_check(subdivide_times(entry("equator_s1_s2").map, 1)));
  CHECK(jordan_brouwer_check(subdivide_times(entry("equator_s1_s2").map, 2)));
  CHECK(jordan_brouwer_check(
      detail::cycle_map("hex_loop", "v", standard::octahedron(), {"x+", "y+", "z+", "x-", "y-", "z-"})));
  CHECK(jordan_brouwer_check(detail::cycle_map("hex_belt", "v", standard::hexagonal_bipyramid(),
                                               {"h0", "h1", "h2", "h3", "h4", "h5"})));
  CHECK_THROWS_AS(jordan_brouwer_check(entry("figure_eight_s1_s2").map), PreconditionError);
  CHECK_THROWS_AS(jordan_brouwer_check(entry("essential_circle_t2").map), PreconditionError);
}

TEST_CASE("low-dimensional self-intersection disconnects", "[separation]") {
  const Prop34Check fe = prop34_check(entry("figure_eight_s1_s2").map);
  CHECK(fe.dimA == 0);
  CHECK(fe.applies);
  CHECK(fe.disconnected);
  const Prop34Check eq = prop34_check(entry("equator_s1_s2").map);
  CHECK(eq.dimA == -1);
  CHECK(eq.applies);
  const Prop34Check dw = prop34_check(entry("double_wrap_s1").map);
  CHECK(dw.dimA == 1);
  CHECK_FALSE(dw.applies);
  CHECK(dw.disconnected);
  CHECK_THROWS_AS(prop34_check(entry("essential_circle_t2").map), PreconditionError);
}

TEST_CASE("components equal one plus top cohomology of the image", "[separation]") {
  for (const auto& e : catalog()) {
    if (e.map.codomain()->dimension() != e.map.domain()->dimension() + 1) continue;
    if (betti(*e.map.codomain(), 1) != 0) {
      CHECK_THROWS_AS(eq1_check(e.map), PreconditionError);
      continue;
    }
    INFO(e.id);
    const ComponentIdentityCheck c = eq1_check(e.map);
    CHECK(c.holds);
    const ComplexPtr img = image_subcomplex(e.map).to_complex("img");
    CHECK(c.dim_top_cohomology_image == oracle::naive_betti(*img, img->dimension()));
    CHECK(c.beta0_oracle == top_components_of_image(e.map));
  }
  const ComponentIdentityCheck tail = eq1_check(double_loop_with_tail());
  CHECK(tail.holds);
  CHECK(tail.beta0_oracle == 3);
}
