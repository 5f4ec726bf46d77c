#pragma once

// The primary obstruction to embedding in codimension one and the separation
// theorem built on it: U_f, w1(f), theta(f), the solution set for mu, the
// Mayer-Vietoris type sequence of (M, A) -> (f(M), B), and the three-component
// bound.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sepcheck/duality.hpp"
#include "sepcheck/homology.hpp"
#include "sepcheck/separation.hpp"
#include "sepcheck/simmap.hpp"

namespace sepcheck {

namespace detail {

/// The simplex of `to` with the same vertex labels as s in `from`.
inline Simplex translate(const SimplicialComplex& from, const Simplex& s, const SimplicialComplex& to) {
  return to.simplex_from_labels(from.labels_of(s));
}

/// Re-expresses a chain on `from` as a chain on `to` through vertex labels.
/// Every simplex in the support must exist in `to`.
inline BitVector translate_chain(const SimplicialComplex& from, int d, const BitVector& c, const SimplicialComplex& to) {
  BitVector out(to.count(d));
  for (std::size_t i : c.support()) out.flip(to.index_of_present(translate(from, from.simplex(d, i), to)));
  return out;
}

}  // namespace detail

/// Poincare dual in H^1(N) of f_*[M].
inline CohomologyClass dual_class_Uf(const SimplicialMap& f) {
  const int m = require_codimension_one(f);
  const FundamentalClass fm = fundamental_class(f.domain(), m);
  const HomologyClass image = pushforward(f, fm.as_class());
  if (!is_cycle(image)) throw AssertionFailure("f_#[M] is not a cycle");
  return poincare_dual(f.codomain(), m + 1, image);
}

/// Degree-one normal Stiefel-Whitney class f^* w1(N) + w1(M). Works for any
/// codimension; both sides must be certified closed manifolds of their own
/// dimensions.
inline CohomologyClass w1_of_map(const SimplicialMap& f) {
  require_valid(f);
  const int m = f.domain()->dimension();
  const int n = f.codomain()->dimension();
  const CohomologyClass wn = w1(f.codomain(), n);
  const CohomologyClass wm = w1(f.domain(), m);
  CohomologyClass out = pullback(f, wn);
  out.cocycle ^= wm.cocycle;
  return out;
}

/// (f^* U_f + w1(f)) cap [M], a class in H_{m-1}(M).
inline HomologyClass theta(const SimplicialMap& f) {
  const int m = require_codimension_one(f);
  CohomologyClass sum = pullback(f, dual_class_Uf(f));
  sum.cocycle ^= w1_of_map(f).cocycle;
  return cap(sum, fundamental_class(f.domain(), m));
}

/// f_* theta(f) vanishes in H_{m-1}(N). A false result is a bug.
inline bool theta_pushforward_check(const SimplicialMap& f, const HomologyClass& th) {
  return is_zero_class(pushforward(f, th));
}

/// Solutions mu in H_{m-1}(A) of j_* mu = theta(f), (f|_A)_* mu = 0, as a
/// particular solution plus a kernel basis, in the canonical basis of H_{m-1}(A).
struct MuSolutions {
  std::size_t dim_HA = 0;
  BitVector particular;
  SubspaceBasis kernel;

  /// The affine set contains a nonzero class.
  bool exists_nonzero() const { return !kernel.empty() || particular.any(); }
  /// Zero is not a solution.
  bool all_nonzero() const { return particular.any(); }
};

inline MuSolutions mu_solve(const SimplicialMap& f, const HomologyClass& th) {
  const int m = require_codimension_one(f);
  const SelfIntersectionData si = self_intersection(f);
  const ComplexPtr a = si.a.to_complex("A");
  const ComplexPtr b = si.b.to_complex("B");
  const int d = m - 1;
  const HomologyBasis ha = homology_basis(chain_complex(*a), d);
  const HomologyBasis hm = homology_basis(chain_complex(*f.domain()), d);
  const HomologyBasis hb = homology_basis(chain_complex(*b), d);
  const BitMatrix j_star = homology_matrix(chain_map(SimplicialMap::inclusion(a, f.domain()), d), ha, hm);
  const BitMatrix fa_star = homology_matrix(chain_map(restrict_map(f, a, b), d), ha, hb);
  const BitMatrix system = BitMatrix::vstack(j_star, fa_star);
  const BitVector rhs = hm.coordinates(th.chain).concat(BitVector(hb.dim()));
  const auto particular = solve(system, rhs);
  if (!particular) throw AssertionFailure("no mu with j_* mu = theta(f) and (f|_A)_* mu = 0 for '" + f.name() + "'");
  return {ha.dim(), *particular, kernel_basis(system)};
}

/// If dim A < m - 1 then theta(f) = 0. Returns true (vacuously when the
/// dimension bound fails); throws when the implication is violated.
inline bool cor317_check(const SimplicialMap& f, const HomologyClass& th) {
  const int m = require_codimension_one(f);
  const int dim_a = self_intersection(f).a.dimension();
  if (dim_a < m - 1 && !is_zero_class(th))
    throw AssertionFailure("dim A < m-1 but theta(f) != 0 for '" + f.name() + "'");
  return true;
}

struct MvSequenceCheck {
  bool exact = false;
  bool fbar_surjective = false;
  std::size_t ker_alpha_dim = 0;  // dim ker alpha in degree m-1
};

/// Builds
///   H_m(A) -a-> H_m(B) (+) H_m(M) -b-> H_m(f(M)) -d-> H_{m-1}(A) -a-> H_{m-1}(B) (+) H_{m-1}(M)
/// with a = ((f|_A)_*, i_*), b = j''_* + fbar_*, and d obtained by pulling a
/// cycle of f(M) back through the simplicial excision C(M, A) = C(f(M), B)
/// and taking its boundary in A. Exactness is checked at the three interior
/// slots by rank arithmetic.
inline MvSequenceCheck mv_sequence_check(const SimplicialMap& f) {
  const int m = require_codimension_one(f);
  const SimplicialComplex& mk = *f.domain();
  const SelfIntersectionData si = self_intersection(f);
  const ComplexPtr a = si.a.to_complex("A");
  const ComplexPtr b = si.b.to_complex("B");
  const ComplexPtr fm = image_subcomplex(f).to_complex("f(M)");
  const SimplicialMap incl_a = SimplicialMap::inclusion(a, f.domain());
  const SimplicialMap incl_b = SimplicialMap::inclusion(b, fm);
  const SimplicialMap fa = restrict_map(f, a, b);
  const SimplicialMap fbar = restrict_map(f, f.domain(), fm);

  const ChainComplexZ2 ca = chain_complex(*a), cb = chain_complex(*b), cm = chain_complex(mk), cfm = chain_complex(*fm);
  auto alpha = [&](int d, const HomologyBasis& ha) {
    return BitMatrix::vstack(homology_matrix(chain_map(fa, d), ha, homology_basis(cb, d)),
                             homology_matrix(chain_map(incl_a, d), ha, homology_basis(cm, d)));
  };

  const HomologyBasis ha_top = homology_basis(ca, m), ha_low = homology_basis(ca, m - 1);
  const HomologyBasis hb_top = homology_basis(cb, m), hm_top = homology_basis(cm, m);
  const HomologyBasis hfm_top = homology_basis(cfm, m);

  const BitMatrix alpha_top = alpha(m, ha_top);
  const BitMatrix alpha_low = alpha(m - 1, ha_low);
  const BitMatrix fbar_star = homology_matrix(chain_map(fbar, m), hm_top, hfm_top);
  const BitMatrix beta =
      BitMatrix::hstack(homology_matrix(chain_map(incl_b, m), hb_top, hfm_top), fbar_star);

  // excision: each m-simplex of f(M) outside B has exactly one preimage, outside A
  std::map<Simplex, std::size_t> preimage;
  for (std::size_t i = 0; i < mk.count(m); ++i) {
    if (si.a.contains(m, i)) continue;
    const Simplex img = detail::translate(*f.codomain(), f.image(mk.simplex(m, i)), *fm);
    if (!preimage.emplace(img, i).second) throw AssertionFailure("excision: simplex of f(M) - B has two preimages");
  }
  std::vector<BitVector> connecting_cols;
  for (const auto& z : hfm_top.representatives().vectors) {
    BitVector lift(mk.count(m));
    for (std::size_t i : z.support()) {
      const Simplex& rho = fm->simplex(m, i);
      if (si.b.contains(detail::translate(*fm, rho, *f.codomain()))) continue;
      auto it = preimage.find(rho);
      if (it == preimage.end()) throw AssertionFailure("excision: simplex of f(M) - B has no preimage");
      lift.set(it->second);
    }
    const BitVector bdry = cm.boundary_at(m) * lift;
    for (std::size_t i : bdry.support())
      if (!si.a.contains(m - 1, i)) throw AssertionFailure("connecting map: boundary leaves A");
    connecting_cols.push_back(ha_low.coordinates(detail::translate_chain(mk, m - 1, bdry, *a)));
  }
  const BitMatrix connecting = BitMatrix::from_columns(ha_low.dim(), connecting_cols);

  MvSequenceCheck r;
  r.exact = is_exact_at(alpha_top, beta, beta.cols()) && is_exact_at(beta, connecting, hfm_top.dim()) &&
            is_exact_at(connecting, alpha_low, ha_low.dim());
  r.fbar_surjective = rank(fbar_star) == hfm_top.dim();
  r.ker_alpha_dim = ha_low.dim() - rank(alpha_low);
  if (!r.exact) throw AssertionFailure("sequence of (M, A) -> (f(M), B) is not exact for '" + f.name() + "'");
  return r;
}

struct ObstructionReport {
  CohomologyClass Uf;
  CohomologyClass w1f;
  HomologyClass theta;
  bool Uf_is_zero = false;
  bool w1f_is_zero = false;
  bool theta_is_zero = false;
  bool theta_pushforward_zero = false;
  MuSolutions mu;
  bool exists_nonzero_mu = false;
  bool all_mu_nonzero = false;
  MvSequenceCheck sequence;
  bool h1_N_zero = false;
  bool A_proper = false;
  /// All hypotheses of the three-component theorem hold (and its conclusion
  /// was then asserted).
  bool predicate_thm_final = false;
  std::string refused_hypothesis;
  std::size_t beta0_oracle = 0;
  std::size_t dim_Hm_image = 0;
};

/// Computes every obstruction quantity and enforces the hard assertions:
/// f_* theta = 0, solvability for mu, the dimension corollary, exactness,
/// non-surjectivity of fbar_* when theta = 0 and a nonzero mu exists, and,
/// when the theorem's hypotheses hold, at least three components together
/// with beta0 = dim H_m(f(M)) + 1.
inline ObstructionReport evaluate_obstruction(const SimplicialMap& f) {
  const int m = require_codimension_one(f);
  ObstructionReport r;
  r.Uf = dual_class_Uf(f);
  r.w1f = w1_of_map(f);
  r.theta = theta(f);
  r.Uf_is_zero = is_zero_class(r.Uf);
  r.w1f_is_zero = is_zero_class(r.w1f);
  r.theta_is_zero = is_zero_class(r.theta);
  r.theta_pushforward_zero = theta_pushforward_check(f, r.theta);
  if (!r.theta_pushforward_zero) throw AssertionFailure("f_* theta(f) != 0 for '" + f.name() + "'");
  r.mu = mu_solve(f, r.theta);
  r.exists_nonzero_mu = r.mu.exists_nonzero();
  r.all_mu_nonzero = r.mu.all_nonzero();
  cor317_check(f, r.theta);
  r.sequence = mv_sequence_check(f);
  if (r.theta_is_zero && r.exists_nonzero_mu && r.sequence.fbar_surjective)
    throw AssertionFailure("theta = 0 and mu != 0 but fbar_* is surjective for '" + f.name() + "'");

  const Subcomplex img = image_subcomplex(f);
  r.h1_N_zero = betti(*f.codomain(), 1) == 0;
  r.A_proper = !self_intersection(f).a.is_whole();
  r.beta0_oracle = complement_components_oracle(*f.codomain(), img);
  r.dim_Hm_image = betti(*img.to_complex("f(M)"), m);
  if (r.h1_N_zero && r.beta0_oracle != r.dim_Hm_image + 1)
    throw AssertionFailure("beta0(N - f(M)) != dim H_m(f(M)) + 1 for '" + f.name() + "'");

  if (!r.h1_N_zero)
    r.refused_hypothesis = "h1_N_zero";
  else if (!r.A_proper)
    r.refused_hypothesis = "A_proper";
  else if (!r.exists_nonzero_mu)
    r.refused_hypothesis = "exists_nonzero_mu";
  else if (!r.w1f_is_zero)
    r.refused_hypothesis = "w1f_zero";
  r.predicate_thm_final = r.refused_hypothesis.empty();
  if (r.predicate_thm_final && r.beta0_oracle < 3)
    throw AssertionFailure("three-component bound fails for '" + f.name() + "'");
  return r;
}

/// Like evaluate_obstruction, but refuses with HypothesisError when the
/// three-component theorem does not apply.
inline ObstructionReport final_theorem_check(const SimplicialMap& f) {
  ObstructionReport r = evaluate_obstruction(f);
  if (!r.predicate_thm_final) throw HypothesisError(r.refused_hypothesis);
  return r;
}

}  // namespace sepcheck
