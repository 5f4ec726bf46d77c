#pragma once

// Component counts of Y - f(X) for a map of a closed n-manifold into a closed
// (n+1)-manifold: the cokernel formula, its Jordan-Brouwer and
// low-dimensional-A specializations, and the combinatorial oracle they are
// checked against.
//
// All complexes are finite, so every map is proper and every Cech group is a
// simplicial one.

#include <cstddef>
#include <string>

#include "sepcheck/complex.hpp"
#include "sepcheck/duality.hpp"
#include "sepcheck/homology.hpp"
#include "sepcheck/manifold.hpp"
#include "sepcheck/simmap.hpp"

namespace sepcheck {

/// Components of |y| - |img|, counted on the complementary complex.
inline std::size_t complement_components_oracle(const SimplicialComplex& y, const Subcomplex& img) {
  return complement_components(y, img);
}

/// Checks that f is a simplicial map from a connected closed n-manifold to a
/// connected closed (n+1)-manifold and returns n.
inline int require_codimension_one(const SimplicialMap& f) {
  require_valid(f);
  const auto& x = *f.domain();
  const auto& y = *f.codomain();
  const int n = x.dimension();
  if (n < 0) throw PreconditionError("domain_manifold", "domain is empty");
  if (!manifold_certificate(x, n).is_closed_z2_homology_n_manifold)
    throw PreconditionError("domain_manifold", "'" + x.name() + "' is not a closed " + std::to_string(n) + "-manifold");
  if (!manifold_certificate(y, n + 1).is_closed_z2_homology_n_manifold)
    throw PreconditionError("codomain_manifold",
                            "'" + y.name() + "' is not a closed " + std::to_string(n + 1) + "-manifold");
  if (connected_components(x) != 1) throw PreconditionError("domain_connected", "'" + x.name() + "' is disconnected");
  if (connected_components(y) != 1) throw PreconditionError("codomain_connected", "'" + y.name() + "' is disconnected");
  return n;
}

struct Thm32Hypotheses {
  bool h1_Y_zero = false;
  bool A_proper = false;  // A != X
  bool Y_minus_fA_connected = false;

  bool all() const noexcept { return h1_Y_zero && A_proper && Y_minus_fA_connected; }
  /// Name of the first failing hypothesis, empty when all hold.
  std::string first_failure() const {
    if (!h1_Y_zero) return "h1_Y_zero";
    if (!A_proper) return "A_proper";
    if (!Y_minus_fA_connected) return "Y_minus_fA_connected";
    return {};
  }
};

struct SeparationReport {
  Thm32Hypotheses hypotheses;
  std::size_t coker_dim = 0;
  std::size_t beta0_formula = 0;
  std::size_t beta0_oracle = 0;
  bool agreement = false;
};

inline Thm32Hypotheses check_hypotheses_thm32(const SimplicialMap& f) {
  require_codimension_one(f);
  Thm32Hypotheses h;
  h.h1_Y_zero = betti(*f.codomain(), 1) == 0;
  const SelfIntersectionData si = self_intersection(f);
  h.A_proper = !si.a.is_whole();
  h.Y_minus_fA_connected = complement_components_oracle(*f.codomain(), si.b) == 1;
  return h;
}

/// Matrix of (i^*, f|_A^*) : H^{n-1}(X) (+) H^{n-1}(f(A)) -> H^{n-1}(A).
inline BitMatrix restriction_block_map(const SimplicialMap& f, const SelfIntersectionData& si, int degree) {
  const ComplexPtr a = si.a.to_complex("A");
  const ComplexPtr b = si.b.to_complex("f(A)");
  const SimplicialMap incl = SimplicialMap::inclusion(a, f.domain());
  const SimplicialMap fa = restrict_map(f, a, b);
  const CohomologyBasis ha = cohomology_basis(chain_complex(*a), degree);
  const CohomologyBasis hx = cohomology_basis(chain_complex(*f.domain()), degree);
  const CohomologyBasis hb = cohomology_basis(chain_complex(*b), degree);
  return BitMatrix::hstack(cohomology_matrix(chain_map(incl, degree), ha, hx),
                           cohomology_matrix(chain_map(fa, degree), ha, hb));
}

/// beta0(Y - f(X)) = 2 + dim coker(i^* + f|_A^*), evaluated only when the
/// hypotheses hold; otherwise throws HypothesisError naming the first failure.
inline SeparationReport beta0_formula_thm32(const SimplicialMap& f) {
  const int n = require_codimension_one(f);
  SeparationReport r;
  r.hypotheses = check_hypotheses_thm32(f);
  if (!r.hypotheses.all()) throw HypothesisError(r.hypotheses.first_failure());
  const SelfIntersectionData si = self_intersection(f);
  r.coker_dim = cokernel_dim(restriction_block_map(f, si, n - 1));
  r.beta0_formula = 2 + r.coker_dim;
  r.beta0_oracle = complement_components_oracle(*f.codomain(), image_subcomplex(f));
  r.agreement = r.beta0_formula == r.beta0_oracle;
  return r;
}

/// For an embedding into a codomain with H_1 = 0, both the formula and the
/// oracle must give exactly two components.
inline bool jordan_brouwer_check(const SimplicialMap& f) {
  require_codimension_one(f);
  if (!self_intersection(f).is_embedding) throw PreconditionError("embedding", "'" + f.name() + "' is not an embedding");
  if (betti(*f.codomain(), 1) != 0) throw PreconditionError("h1_Y_zero", "codomain has nonzero H_1");
  const SeparationReport r = beta0_formula_thm32(f);
  return r.beta0_oracle == 2 && r.beta0_formula == 2;
}

struct Prop34Check {
  int dimA = -1;  // -1 for empty A
  bool applies = false;
  bool disconnected = false;
};

/// When dim A < n the complement is disconnected.
inline Prop34Check prop34_check(const SimplicialMap& f) {
  const int n = require_codimension_one(f);
  if (betti(*f.codomain(), 1) != 0) throw PreconditionError("h1_Y_zero", "codomain has nonzero H_1");
  Prop34Check r;
  r.dimA = self_intersection(f).a.dimension();
  r.applies = r.dimA < n;
  r.disconnected = complement_components_oracle(*f.codomain(), image_subcomplex(f)) >= 2;
  if (r.applies && !r.disconnected)
    throw AssertionFailure("dim A < n but the complement of f(X) is connected for '" + f.name() + "'");
  return r;
}

struct ComponentIdentityCheck {
  std::size_t beta0_oracle = 0;
  std::size_t dim_top_cohomology_image = 0;  // dim H^n(f(X))
  bool holds = false;
};

/// beta0(Y - f(X)) = 1 + dim H^n(f(X)), which needs only H_1(Y) = 0.
inline ComponentIdentityCheck eq1_check(const SimplicialMap& f) {
  const int n = require_codimension_one(f);
  if (betti(*f.codomain(), 1) != 0) throw PreconditionError("h1_Y_zero", "codomain has nonzero H_1");
  const Subcomplex img = image_subcomplex(f);
  ComponentIdentityCheck r;
  r.beta0_oracle = complement_components_oracle(*f.codomain(), img);
  r.dim_top_cohomology_image = cohomology_dim(*img.to_complex("f(X)"), n);
  r.holds = r.beta0_oracle == 1 + r.dim_top_cohomology_image;
  return r;
}

}  // namespace sepcheck
