#pragma once

// Fundamental classes, cup and cap products on cochain representatives,
// Poincare and Alexander duality checks, the Bockstein Sq^1 and the first
// Stiefel-Whitney class through the Wu formula. Coefficients are Z/2
// throughout, so every closed manifold is oriented.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sepcheck/complex.hpp"
#include "sepcheck/gf2.hpp"
#include "sepcheck/homology.hpp"
#include "sepcheck/manifold.hpp"
#include "sepcheck/simmap.hpp"

namespace sepcheck {

/// A Z/2 cochain of one degree on a complex; a class when it is a cocycle.
struct CohomologyClass {
  ComplexPtr complex;
  int degree = 0;
  BitVector cocycle;
};

/// A Z/2 chain of one degree on a complex; a class when it is a cycle.
struct HomologyClass {
  ComplexPtr complex;
  int degree = 0;
  BitVector chain;
};

struct FundamentalClass {
  ComplexPtr complex;
  int degree = 0;
  BitVector chain;

  HomologyClass as_class() const { return {complex, degree, chain}; }
};

namespace detail {

inline void require_same_complex(const ComplexPtr& a, const ComplexPtr& b) {
  if (a.get() != b.get() && !(*a == *b)) throw InputError("classes live on different complexes");
}

inline void require_certified(const SimplicialComplex& k, int n) {
  if (!manifold_certificate(k, n).is_closed_z2_homology_n_manifold)
    throw PreconditionError("manifold_certificate", "'" + k.name() + "' is not a closed " + std::to_string(n) + "-manifold");
}

/// Front p-face [v0..vp] of a sorted simplex.
inline Simplex front_face(const Simplex& s, std::size_t p) { return Simplex(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(p + 1)); }
/// Back q-face [v(n-q)..vn] of a sorted simplex.
inline Simplex back_face(const Simplex& s, std::size_t q) { return Simplex(s.end() - static_cast<std::ptrdiff_t>(q + 1), s.end()); }

}  // namespace detail

inline bool is_cocycle(const CohomologyClass& x) {
  return (chain_complex(*x.complex).boundary_at(x.degree + 1).transpose() * x.cocycle).none();
}
inline bool is_cycle(const HomologyClass& c) { return (chain_complex(*c.complex).boundary_at(c.degree) * c.chain).none(); }

/// Cochain with value 1 on every vertex.
inline CohomologyClass unit_class(const ComplexPtr& k) {
  BitVector ones(k->count(0));
  for (std::size_t i = 0; i < ones.size(); ++i) ones.set(i);
  return {k, 0, std::move(ones)};
}

inline CohomologyClass zero_class(const ComplexPtr& k, int degree) { return {k, degree, BitVector(k->count(degree))}; }

/// Kronecker pairing of a cochain and a chain of the same degree.
inline bool evaluate(const CohomologyClass& x, const HomologyClass& c) {
  detail::require_same_complex(x.complex, c.complex);
  if (x.degree != c.degree) throw InputError("evaluate: degree mismatch");
  return x.cocycle.dot(c.chain);
}

/// Sum of the n-simplices of a certified closed n-manifold.
inline FundamentalClass fundamental_class(const ComplexPtr& k, int n) {
  detail::require_certified(*k, n);
  BitVector chain(k->count(n));
  for (std::size_t i = 0; i < chain.size(); ++i) chain.set(i);
  FundamentalClass fc{k, n, std::move(chain)};
  if (!is_cycle(fc.as_class())) throw AssertionFailure("fundamental chain of '" + k->name() + "' is not a cycle");
  return fc;
}

/// Alexander-Whitney cup product: (x cup y)(s) = x(front p-face) y(back q-face).
inline CohomologyClass cup(const CohomologyClass& x, const CohomologyClass& y) {
  detail::require_same_complex(x.complex, y.complex);
  const auto& k = *x.complex;
  const int deg = x.degree + y.degree;
  CohomologyClass out{x.complex, deg, BitVector(k.count(deg))};
  const auto p = static_cast<std::size_t>(x.degree), q = static_cast<std::size_t>(y.degree);
  for (std::size_t i = 0; i < k.count(deg); ++i) {
    const Simplex& s = k.simplex(deg, i);
    if (x.cocycle.get(*k.index_of(detail::front_face(s, p))) && y.cocycle.get(*k.index_of(detail::back_face(s, q))))
      out.cocycle.set(i);
  }
  return out;
}

/// Cap product y cap s = y(back q-face) * front (n-q)-face, extended
/// linearly. With this orientation <x cup y, c> = <x, y cap c>.
inline HomologyClass cap(const CohomologyClass& y, const HomologyClass& c) {
  detail::require_same_complex(y.complex, c.complex);
  if (y.degree > c.degree) throw InputError("cap: cochain degree exceeds chain degree");
  const auto& k = *c.complex;
  const int deg = c.degree - y.degree;
  HomologyClass out{c.complex, deg, BitVector(k.count(deg))};
  const auto q = static_cast<std::size_t>(y.degree), front = static_cast<std::size_t>(deg);
  for (std::size_t i : c.chain.support()) {
    const Simplex& s = k.simplex(c.degree, i);
    if (y.cocycle.get(*k.index_of(detail::back_face(s, q)))) out.chain.flip(*k.index_of(detail::front_face(s, front)));
  }
  return out;
}

inline HomologyClass cap(const CohomologyClass& y, const FundamentalClass& m) { return cap(y, m.as_class()); }

/// f^# of a cochain on the codomain.
inline CohomologyClass pullback(const SimplicialMap& f, const CohomologyClass& x) {
  detail::require_same_complex(f.codomain(), x.complex);
  return {f.domain(), x.degree, chain_map(f, x.degree).transpose() * x.cocycle};
}

/// f_# of a chain on the domain.
inline HomologyClass pushforward(const SimplicialMap& f, const HomologyClass& c) {
  detail::require_same_complex(f.domain(), c.complex);
  return {f.codomain(), c.degree, chain_map(f, c.degree) * c.chain};
}

/// Matrix of (. cap [k]) : H^d -> H_{n-d} in the canonical bases.
inline BitMatrix duality_matrix(const FundamentalClass& m, int d) {
  const ChainComplexZ2 c = chain_complex(*m.complex);
  const CohomologyBasis hd = cohomology_basis(c, d);
  const HomologyBasis hn = homology_basis(c, m.degree - d);
  std::vector<BitVector> cols;
  for (const auto& rep : hd.representatives().vectors)
    cols.push_back(hn.coordinates(cap(CohomologyClass{m.complex, d, rep}, m).chain));
  return BitMatrix::from_columns(hn.dim(), cols);
}

/// Cohomology class of degree n-d whose cap with [k] is homologous to h.
inline CohomologyClass poincare_dual(const ComplexPtr& k, int n, const HomologyClass& h) {
  detail::require_same_complex(k, h.complex);
  const FundamentalClass m = fundamental_class(k, n);
  const int d = n - h.degree;
  const ChainComplexZ2 c = chain_complex(*k);
  const CohomologyBasis hd = cohomology_basis(c, d);
  const HomologyBasis hn = homology_basis(c, h.degree);
  const auto coords = solve(duality_matrix(m, d), hn.coordinates(h.chain));
  if (!coords) throw AssertionFailure("Poincare duality system is inconsistent on '" + k->name() + "'");
  return {k, d, hd.chain_of(*coords)};
}

/// Cap with the fundamental class is invertible in every degree.
inline bool poincare_duality_check(const ComplexPtr& k, int n) {
  const FundamentalClass m = fundamental_class(k, n);
  for (int d = 0; d <= n; ++d) {
    const BitMatrix dm = duality_matrix(m, d);
    if (dm.rows() != dm.cols() || rank(dm) != dm.rows()) return false;
  }
  return true;
}

inline std::size_t cohomology_dim(const SimplicialComplex& k, int d) {
  const ChainComplexZ2 c = chain_complex(k);
  if (d < 0) return 0;
  return c.rank_of_group(d) - rank(c.boundary_at(d + 1).transpose()) - rank(c.boundary_at(d).transpose());
}

struct AlexanderDualityCheck {
  std::vector<std::size_t> cohomology_dims;  // [j] = dim H^j(B)
  std::vector<std::size_t> relative_dims;    // [j] = dim H_{n-j}(X, X - B)
  bool holds = false;
};

/// Compares H^{n-i}(B) with H_i(X, X - B), the complement carried by the
/// complementary complex inside one barycentric subdivision of X.
inline AlexanderDualityCheck alexander_duality_dims(const ComplexPtr& k, int n, const Subcomplex& b) {
  detail::require_certified(*k, n);
  require_subcomplex_of(*k, b);
  const ComplexPtr bk = b.to_complex(k->name() + "/B");
  const ComplementaryComplex cc = complementary_complex(*k, b);
  const ChainComplexZ2 rel = relative_chain_complex(*cc.subdivision.complex, cc.complement);
  AlexanderDualityCheck out;
  out.holds = true;
  for (int j = 0; j <= n; ++j) {
    out.cohomology_dims.push_back(cohomology_dim(*bk, j));
    out.relative_dims.push_back(betti(rel, n - j));
    if (out.cohomology_dims.back() != out.relative_dims.back()) out.holds = false;
  }
  return out;
}

inline bool alexander_duality_check(const ComplexPtr& k, int n, const Subcomplex& b) {
  return alexander_duality_dims(k, n, b).holds;
}

/// Signed boundary from C_{d} to C_{d-1} using the vertex order:
/// d[v0..vd] = sum_i (-1)^i [v0..^vi..vd].
inline IntMatrix signed_boundary(const SimplicialComplex& k, int d) {
  IntMatrix m(k.count(d - 1), k.count(d));
  if (d <= 0) return m;
  for (std::size_t j = 0; j < k.count(d); ++j) {
    const auto facets = facets_of(k.simplex(d, j));
    for (std::size_t i = 0; i < facets.size(); ++i) m.at(*k.index_of(facets[i]), j) = (i % 2 == 0) ? 1 : -1;
  }
  return m;
}

/// Bockstein of Z/2 -> Z/4 -> Z/2: lift to a 0/1 integral cochain, take the
/// integral coboundary, halve, reduce mod 2.
inline CohomologyClass sq1(const CohomologyClass& x) {
  if (!is_cocycle(x)) throw InputError("sq1: argument is not a cocycle");
  const auto& k = *x.complex;
  const IntMatrix delta = signed_boundary(k, x.degree + 1).transpose();
  std::vector<IntMatrix::value_type> lift(x.cocycle.size(), 0);
  for (std::size_t i : x.cocycle.support()) lift[i] = 1;
  const auto integral = delta * lift;
  CohomologyClass out{x.complex, x.degree + 1, BitVector(k.count(x.degree + 1))};
  for (std::size_t i = 0; i < integral.size(); ++i) {
    if (integral[i] % 2 != 0) throw AssertionFailure("sq1: integral coboundary of a cocycle lift is odd");
    if ((integral[i] / 2) % 2 != 0) out.cocycle.set(i);
  }
  return out;
}

/// First Stiefel-Whitney class through the Wu class: the unique v in H^1 with
/// <v cup x, [k]> = <Sq^1 x, [k]> for every x in H^{n-1}; w1 = v1.
inline CohomologyClass w1(const ComplexPtr& k, int n) {
  if (n < 1) throw InputError("w1: manifold dimension must be positive");
  const FundamentalClass m = fundamental_class(k, n);
  const ChainComplexZ2 c = chain_complex(*k);
  const CohomologyBasis h1 = cohomology_basis(c, 1);
  const CohomologyBasis hn1 = cohomology_basis(c, n - 1);
  BitMatrix pairing(hn1.dim(), h1.dim());
  BitVector rhs(hn1.dim());
  for (std::size_t i = 0; i < hn1.dim(); ++i) {
    const CohomologyClass x{k, n - 1, hn1.representatives().vectors[i]};
    for (std::size_t j = 0; j < h1.dim(); ++j) {
      const CohomologyClass e{k, 1, h1.representatives().vectors[j]};
      if (evaluate(cup(e, x), m.as_class())) pairing.set(i, j);
    }
    if (evaluate(sq1(x), m.as_class())) rhs.set(i);
  }
  if (rank(pairing) != h1.dim()) throw AssertionFailure("Wu class is not unique on '" + k->name() + "'");
  const auto coords = solve(pairing, rhs);
  if (!coords) throw AssertionFailure("Wu class system is inconsistent on '" + k->name() + "'");
  return {k, 1, h1.chain_of(*coords)};
}

/// Whether a cocycle represents the zero class.
inline bool is_zero_class(const CohomologyClass& x) {
  return cohomology_basis(chain_complex(*x.complex), x.degree).is_trivial(x.cocycle);
}
inline bool is_zero_class(const HomologyClass& c) {
  return homology_basis(chain_complex(*c.complex), c.degree).is_trivial(c.chain);
}

inline bool same_class(const CohomologyClass& x, const CohomologyClass& y) {
  detail::require_same_complex(x.complex, y.complex);
  if (x.degree != y.degree) return false;
  return is_zero_class(CohomologyClass{x.complex, x.degree, x.cocycle ^ y.cocycle});
}

}  // namespace sepcheck
