#pragma once

// The invariant suite behind `sepcheck selftest`. Each property is run on the
// catalog (or on seeded random data) and reported on one line; the run stops
// at the first failing property.

#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "sepcheck/analyze.hpp"
#include "sepcheck/catalog.hpp"
#include "sepcheck/io.hpp"
#include "sepcheck/sampling.hpp"
#include "sepcheck/standard.hpp"

namespace sepcheck {

struct SelftestOptions {
  std::uint64_t seed = 20250101;
  int ladders = 100;
  int triples = 50;
  int matrices = 200;
};

namespace detail {

/// A manifold with the dimension it is certified at.
struct NamedManifold {
  ComplexPtr complex;
  int dim;
  bool orientable;
};

inline std::vector<NamedManifold> standard_manifolds() {
  return {{standard::hexagon(), 1, true},
          {standard::octahedron(), 2, true},
          {standard::csaszar_torus(), 2, true},
          {standard::cross_polytope_s3(), 3, true},
          {standard::rp2_six(), 2, false}};
}

inline bool is_codimension_one(const CatalogEntry& e) {
  return e.map.codomain()->dimension() == e.map.domain()->dimension() + 1;
}

class PropertyRunner {
 public:
  explicit PropertyRunner(std::ostream& out) : out_(out) {}

  /// `body` returns an empty string on success and a diagnostic otherwise;
  /// exceptions count as failures. Returns false once anything has failed.
  bool run(const std::string& name, const std::function<std::string()>& body) {
    if (failed_) return false;
    std::string problem;
    try {
      problem = body();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (!problem.empty()) {
      out_ << "FAIL " << name << ": " << problem << "\n";
      failed_ = true;
      return false;
    }
    out_ << "ok   " << name << "\n";
    ++passed_;
    return true;
  }

  bool failed() const noexcept { return failed_; }
  int passed() const noexcept { return passed_; }

 private:
  std::ostream& out_;
  bool failed_ = false;
  int passed_ = 0;
};

inline std::string fail_if(bool bad, const std::string& what) { return bad ? what : std::string(); }

}  // namespace detail

/// Runs every property; returns 0 when all pass and 2 at the first failure.
inline int run_selftest(std::ostream& out, const std::vector<CatalogEntry>& entries,
                        const SelftestOptions& opt = {}) {
  using detail::fail_if;
  detail::PropertyRunner p(out);
  std::mt19937_64 rng(opt.seed);
  const auto manifolds = detail::standard_manifolds();
  std::vector<ComplexPtr> complexes;
  for (const auto& m : manifolds) complexes.push_back(m.complex);
  complexes.push_back(standard::hexagonal_bipyramid());
  out << "selftest seed " << opt.seed << "\n";

  // gf2linalg
  p.run("gf2.rank_transpose", [&] {
    for (int t = 0; t < opt.matrices; ++t) {
      const BitMatrix m = detail::random_matrix(rng() % 40, rng() % 40, rng);
      if (rank(m) != rank(m.transpose())) return "rank differs from rank of transpose for a " +
                                                 std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix";
    }
    return std::string();
  });
  p.run("gf2.rank_nullity", [&] {
    for (int t = 0; t < opt.matrices; ++t) {
      const BitMatrix m = detail::random_matrix(rng() % 40, rng() % 40, rng);
      const SubspaceBasis k = kernel_basis(m);
      if (rank(m) + k.size() != m.cols()) return std::string("rank + nullity != cols");
      for (const auto& v : k.vectors)
        if ((m * v).any()) return std::string("kernel vector not annihilated");
    }
    return std::string();
  });
  p.run("gf2.solve_substitution", [&] {
    for (int t = 0; t < opt.matrices; ++t) {
      const BitMatrix m = detail::random_matrix(1 + rng() % 30, 1 + rng() % 30, rng);
      const BitVector b = (rng() & 1u) ? m * sample::bits(m.cols(), rng) : sample::bits(m.rows(), rng);
      const auto x = solve(m, b);
      if (x && !(m * *x == b)) return std::string("solution does not reproduce b");
      if (!x && rank(m) == rank(BitMatrix::hstack(m, BitMatrix::from_columns(m.rows(), {b}))))
        return std::string("consistent system reported unsolvable");
    }
    return std::string();
  });
  p.run("gf2.ladder_lemma", [&] {
    for (int t = 0; t < opt.ladders; ++t) {
      const LadderCheck c = lemma31_check(random_exact_ladder(rng));
      if (!c.commutes || !c.rows_exact) return "generated ladder " + std::to_string(t) + " is not exact and commuting";
      if (c.ker_h_dim != c.coker_fplus_lambda_dim) return "ladder " + std::to_string(t) + ": dim ker h != dim coker";
    }
    return std::string();
  });

  // complex
  p.run("complex.face_closure", [&] {
    for (const auto& k : complexes)
      for (const auto& kk : {k, barycentric_subdivide(*k).complex})
        for (int d = 1; d <= kk->dimension(); ++d)
          for (const auto& s : kk->simplices(d))
            for (const auto& f : facets_of(s))
              if (!kk->contains(f)) return "'" + kk->name() + "' is not closed under faces";
    return std::string();
  });
  p.run("complex.subdivision_euler", [&] {
    for (const auto& k : complexes)
      if (euler_characteristic(*barycentric_subdivide(*k).complex) != euler_characteristic(*k))
        return "chi(Sd(" + k->name() + ")) != chi(" + k->name() + ")";
    return std::string();
  });
  p.run("complex.components_are_h0", [&] {
    for (const auto& k : complexes)
      if (connected_components(*k) != betti(*k, 0)) return "components != dim H_0 on '" + k->name() + "'";
    for (const auto& e : entries) {
      const Subcomplex a = self_intersection(e.map).a;
      if (connected_components(a) != (a.is_empty() ? 0u : betti(*a.to_complex("A"), 0)))
        return "components != dim H_0 on A of '" + e.id + "'";
    }
    return std::string();
  });
  p.run("complex.manifold_certificates", [&] {
    for (const auto& m : manifolds) {
      if (!manifold_certificate(*m.complex, m.dim).is_closed_z2_homology_n_manifold)
        return "'" + m.complex->name() + "' is not certified";
      if (manifold_certificate(*m.complex, m.dim + 1).is_closed_z2_homology_n_manifold)
        return "'" + m.complex->name() + "' certified in the wrong dimension";
    }
    return std::string();
  });
  p.run("complex.oracle_is_complementary_complex", [&] {
    for (const auto& e : entries) {
      const auto& y = *e.map.codomain();
      for (const Subcomplex& s : {image_subcomplex(e.map), self_intersection(e.map).b, Subcomplex::empty(e.map.codomain())})
        if (complement_components(y, s) != connected_components(complementary_complex(y, s).complement))
          return "face-poset count disagrees with the complementary complex on '" + e.id + "'";
    }
    return std::string();
  });

  // homology
  p.run("homology.euler_betti", [&] {
    for (const auto& k : complexes) {
      long long alt = 0;
      for (int d = 0; d <= k->dimension(); ++d) alt += (d % 2 ? -1 : 1) * static_cast<long long>(betti(*k, d));
      if (alt != euler_characteristic(*k)) return "alternating Betti sum != chi on '" + k->name() + "'";
    }
    return std::string();
  });
  p.run("homology.cohomology_dims", [&] {
    for (const auto& k : complexes)
      for (int d = 0; d <= k->dimension(); ++d) {
        const ChainComplexZ2 c = chain_complex(*k);
        if (cohomology_basis(c, d).dim() != homology_basis(c, d).dim() || cohomology_dim(*k, d) != betti(*k, d))
          return "dim H^" + std::to_string(d) + " != dim H_" + std::to_string(d) + " on '" + k->name() + "'";
      }
    return std::string();
  });
  p.run("homology.subdivision_invariance", [&] {
    for (const auto& k : complexes) {
      const ComplexPtr sd = barycentric_subdivide(*k).complex;
      for (int d = 0; d <= k->dimension(); ++d)
        if (betti(*sd, d) != betti(*k, d)) return "dim H_" + std::to_string(d) + " changes under Sd on '" + k->name() + "'";
    }
    return std::string();
  });
  p.run("homology.les_pairs", [&] {
    for (const auto& e : entries) {
      const SelfIntersectionData si = self_intersection(e.map);
      if (!les_pair_check(*e.map.codomain(), image_subcomplex(e.map)) || !les_pair_check(*e.map.codomain(), si.b) ||
          !les_pair_check(*e.map.domain(), si.a))
        return "long exact sequence fails for a pair from '" + e.id + "'";
    }
    return std::string();
  });

  // simmap
  p.run("simmap.chain_maps_commute", [&] {
    for (const auto& e : entries) {
      const ChainComplexZ2 cx = chain_complex(*e.map.domain()), cy = chain_complex(*e.map.codomain());
      for (int d = 1; d <= e.map.domain()->dimension(); ++d)
        if (!(cy.boundary_at(d) * chain_map(e.map, d) == chain_map(e.map, d - 1) * cx.boundary_at(d)))
          return "chain map of '" + e.id + "' does not commute with the boundary in degree " + std::to_string(d);
    }
    return std::string();
  });
  p.run("simmap.functoriality", [&] {
    for (const auto& f : entries)
      for (const auto& g : entries) {
        if (!(*f.map.codomain() == *g.map.domain())) continue;
        const SimplicialMap gf = compose(g.map, f.map);
        for (int d = 0; d <= f.map.domain()->dimension(); ++d)
          if (!(chain_map(gf, d) == chain_map(g.map, d) * chain_map(f.map, d)))
            return "chain_map(" + g.id + " o " + f.id + ") is not the product";
      }
    for (const auto& e : entries) {
      const SimplicialMap id_y = SimplicialMap::identity(e.map.codomain());
      if (!(chain_map(compose(id_y, e.map), 1) == chain_map(e.map, 1))) return "identity is not neutral for '" + e.id + "'";
    }
    return std::string();
  });
  p.run("simmap.self_intersection", [&] {
    for (const auto& e : entries) {
      const SelfIntersectionData si = self_intersection(e.map);
      if (si.is_embedding != si.a.is_empty()) return "is_embedding disagrees with A = {} for '" + e.id + "'";
      if (si.is_embedding != e.map.injective_on_vertices()) return "A = {} disagrees with injectivity for '" + e.id + "'";
      if (!(si.b == image_of(e.map, si.a))) return "B != f(A) for '" + e.id + "'";
    }
    return std::string();
  });

  // duality
  p.run("duality.poincare", [&] {
    for (const auto& m : manifolds)
      if (!poincare_duality_check(m.complex, m.dim)) return "cap with [M] is singular on '" + m.complex->name() + "'";
    return std::string();
  });
  p.run("duality.alexander", [&] {
    int pairs = 0;
    for (const auto& e : entries) {
      if (!detail::is_codimension_one(e)) continue;
      const ComplexPtr y = e.map.codomain();
      const int n = y->dimension();
      for (const Subcomplex& b : {image_subcomplex(e.map), self_intersection(e.map).b, Subcomplex::empty(y)}) {
        if (!alexander_duality_check(y, n, b)) return "Alexander duality fails for a subcomplex of '" + e.id + "'";
        ++pairs;
      }
    }
    return fail_if(pairs < 5, "fewer than five Alexander duality pairs");
  });
  p.run("duality.cup_cap_adjunction", [&] {
    for (int t = 0; t < opt.triples; ++t) {
      const auto& m = manifolds[rng() % manifolds.size()];
      const int total = static_cast<int>(rng() % static_cast<std::uint64_t>(m.dim + 1));
      const int deg_x = static_cast<int>(rng() % static_cast<std::uint64_t>(total + 1));
      const CohomologyClass x = sample::cochain(m.complex, deg_x, rng);
      const CohomologyClass y = sample::cochain(m.complex, total - deg_x, rng);
      const HomologyClass c = sample::chain(m.complex, total, rng);
      if (evaluate(cup(x, y), c) != evaluate(x, cap(y, c)))
        return "<x cup y, c> != <x, y cap c> on '" + m.complex->name() + "'";
    }
    return std::string();
  });
  p.run("duality.cup_well_defined", [&] {
    for (int t = 0; t < opt.triples; ++t) {
      const auto& m = manifolds[rng() % manifolds.size()];
      const int p_deg = static_cast<int>(rng() % static_cast<std::uint64_t>(m.dim + 1));
      const int q_deg = static_cast<int>(rng() % static_cast<std::uint64_t>(m.dim - p_deg + 1));
      const CohomologyClass x = sample::cocycle(m.complex, p_deg, rng);
      const CohomologyClass y = sample::cocycle(m.complex, q_deg, rng);
      CohomologyClass x2 = x, y2 = y;
      x2.cocycle ^= sample::coboundary(m.complex, p_deg, rng);
      y2.cocycle ^= sample::coboundary(m.complex, q_deg, rng);
      const CohomologyClass xy = cup(x, y);
      if (!is_cocycle(xy)) return std::string("cup of cocycles is not a cocycle");
      if (!same_class(xy, cup(x2, y2))) return "cup depends on representatives on '" + m.complex->name() + "'";
    }
    return std::string();
  });
  p.run("duality.sq1", [&] {
    for (int t = 0; t < opt.triples; ++t) {
      const auto& m = manifolds[rng() % manifolds.size()];
      const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(m.dim));
      const CohomologyClass x = sample::cocycle(m.complex, d, rng);
      const CohomologyClass y = sample::cocycle(m.complex, d, rng);
      const CohomologyClass sx = sq1(x);
      if (!is_cocycle(sx)) return std::string("sq1 of a cocycle is not a cocycle");
      CohomologyClass sum = x;
      sum.cocycle ^= y.cocycle;
      CohomologyClass rhs = sx;
      rhs.cocycle ^= sq1(y).cocycle;
      if (!same_class(sq1(sum), rhs)) return "sq1 is not additive on '" + m.complex->name() + "'";
      if (d + 1 < m.dim && !is_zero_class(sq1(sx))) return "sq1 o sq1 != 0 on '" + m.complex->name() + "'";
      CohomologyClass shifted = x;
      shifted.cocycle ^= sample::coboundary(m.complex, d, rng);
      if (!same_class(sq1(shifted), sx)) return "sq1 depends on the representative on '" + m.complex->name() + "'";
    }
    return std::string();
  });
  p.run("duality.w1_orientability", [&] {
    for (const auto& m : manifolds)
      if (is_zero_class(w1(m.complex, m.dim)) != m.orientable)
        return "w1 = 0 does not match orientability of '" + m.complex->name() + "'";
    const ComplexPtr rp2 = standard::rp2_six();
    const CohomologyBasis h1 = cohomology_basis(chain_complex(*rp2), 1);
    if (h1.dim() != 1 || is_zero_class(sq1(CohomologyClass{rp2, 1, h1.representatives().vectors[0]})))
      return std::string("Sq1 of the generator of H^1(RP^2) vanishes");
    return std::string();
  });

  // separation
  p.run("separation.formula_matches_oracle", [&] {
    int checked = 0;
    for (const auto& e : entries) {
      if (!detail::is_codimension_one(e)) continue;
      for (int k = 0; k <= 1; ++k) {
        const SimplicialMap f = subdivide_times(e.map, k);
        if (!check_hypotheses_thm32(f).all()) continue;
        const SeparationReport r = beta0_formula_thm32(f);
        if (!r.agreement)
          return "formula " + std::to_string(r.beta0_formula) + " != oracle " + std::to_string(r.beta0_oracle) +
                 " for '" + e.id + "' after " + std::to_string(k) + " subdivisions";
        ++checked;
      }
    }
    return fail_if(checked == 0, "no instance satisfies the hypotheses");
  });
  p.run("separation.oracle_subdivision_stable", [&] {
    for (const auto& e : entries) {
      const std::size_t base = complement_components_oracle(*e.map.codomain(), image_subcomplex(e.map));
      const SimplicialMap sf = subdivide_times(e.map, 1);
      if (complement_components_oracle(*sf.codomain(), image_subcomplex(sf)) != base)
        return "oracle changes under subdivision for '" + e.id + "'";
    }
    return std::string();
  });
  p.run("separation.component_identity", [&] {
    for (const auto& e : entries) {
      if (!detail::is_codimension_one(e) || betti(*e.map.codomain(), 1) != 0) continue;
      if (!eq1_check(e.map).holds) return "beta0 != 1 + dim H^n(f(X)) for '" + e.id + "'";
    }
    return std::string();
  });
  p.run("separation.low_dimensional_A", [&] {
    for (const auto& e : entries) {
      if (!detail::is_codimension_one(e) || betti(*e.map.codomain(), 1) != 0) continue;
      const Prop34Check c = prop34_check(e.map);
      if (c.applies && !c.disconnected) return "dim A < n but the complement is connected for '" + e.id + "'";
    }
    return std::string();
  });
  p.run("separation.jordan_brouwer", [&] {
    for (const auto& e : entries) {
      if (!detail::is_codimension_one(e) || betti(*e.map.codomain(), 1) != 0) continue;
      if (!self_intersection(e.map).is_embedding) continue;
      for (int k = 0; k <= 1; ++k)
        if (!jordan_brouwer_check(subdivide_times(e.map, k))) return "embedding '" + e.id + "' does not separate in two";
    }
    return std::string();
  });

  // obstruction
  p.run("obstruction.pipeline", [&] {
    for (const auto& e : entries) {
      if (!detail::is_codimension_one(e)) continue;
      const ObstructionReport r = evaluate_obstruction(e.map);
      if (!r.theta_pushforward_zero) return "f_* theta != 0 for '" + e.id + "'";
      if (self_intersection(e.map).is_embedding && !r.theta_is_zero) return "theta != 0 for embedding '" + e.id + "'";
    }
    return std::string();
  });

  // catalog and file formats
  p.run("catalog.round_trip", [&] {
    for (const auto& e : entries) {
      std::vector<ComplexPtr> loaded;
      for (const auto& k : e.complexes) {
        const std::string text = to_text(complex_to_json(*k));
        const ComplexPtr back = complex_from_json(parse_json(text, e.id));
        if (!(*back == *k) || to_text(complex_to_json(*back)) != text) return "complex of '" + e.id + "' does not round-trip";
        loaded.push_back(back);
      }
      const std::string text = to_text(map_to_json(e.map));
      if (to_text(map_to_json(map_from_json(parse_json(text, e.id), loaded))) != text)
        return "map of '" + e.id + "' does not round-trip";
    }
    return std::string();
  });
  p.run("catalog.expectations", [&] {
    for (const auto& e : entries) {
      const AnalysisResult r = analyze(e.map);
      if (r.exit_code != e.expected_exit)
        return "'" + e.id + "' exited " + std::to_string(r.exit_code) + ", expected " +
               std::to_string(e.expected_exit) + " (" + r.message + ")";
      const Json& cond = r.report["status"]["condition"];
      const std::string got = cond.is_string() ? cond.get<std::string>() : std::string();
      if (got != e.expected_condition) return "'" + e.id + "' names condition '" + got + "', expected '" + e.expected_condition + "'";
      const std::string mismatch = first_expectation_mismatch(r.report, e.expected);
      if (!mismatch.empty()) return "'" + e.id + "' " + mismatch;
    }
    return std::string();
  });

  if (p.failed()) return exit_assertion;
  out << "selftest passed: " << p.passed() << " properties\n";
  return exit_ok;
}

inline int run_selftest(std::ostream& out, const SelftestOptions& opt = {}) { return run_selftest(out, catalog(), opt); }

}  // namespace sepcheck
