#pragma once

// Z/2 chain complexes of simplicial complexes and pairs, homology and
// cohomology bases, induced maps, and the long exact sequence of a pair.
//
// Every Cech group of a compact polyhedron is computed here as the simplicial
// group of a finite complex.

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sepcheck/complex.hpp"
#include "sepcheck/gf2.hpp"
#include "sepcheck/simmap.hpp"

namespace sepcheck {

/// Boundary matrices of a chain complex built from a set of simplices.
/// cells[d][i] is the parent-complex index of the i-th basis cell of C_d.
struct ChainComplexZ2 {
  std::vector<BitMatrix> boundary;  // boundary[d] : C_d -> C_{d-1}; boundary[0] has no rows
  std::vector<std::vector<std::size_t>> cells;

  int top_degree() const noexcept { return static_cast<int>(cells.size()) - 1; }

  std::size_t rank_of_group(int d) const noexcept {
    return d < 0 || d > top_degree() ? 0 : cells[static_cast<std::size_t>(d)].size();
  }

  /// d-th boundary, a zero matrix of the right shape outside the stored range.
  BitMatrix boundary_at(int d) const {
    if (d >= 0 && d <= top_degree()) return boundary[static_cast<std::size_t>(d)];
    return BitMatrix(rank_of_group(d - 1), rank_of_group(d));
  }
};

namespace detail {

/// Chain complex on the simplices of k selected by `keep`; faces that are not
/// kept are dropped from boundaries (the quotient by the unkept part).
template <class Keep>
ChainComplexZ2 build_chain_complex(const SimplicialComplex& k, Keep&& keep) {
  ChainComplexZ2 c;
  const int top = k.dimension();
  c.cells.resize(static_cast<std::size_t>(top + 1));
  std::vector<std::vector<std::size_t>> position(static_cast<std::size_t>(top + 1));
  for (int d = 0; d <= top; ++d) {
    auto& pos = position[static_cast<std::size_t>(d)];
    pos.assign(k.count(d), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < k.count(d); ++i)
      if (keep(d, i)) {
        pos[i] = c.cells[static_cast<std::size_t>(d)].size();
        c.cells[static_cast<std::size_t>(d)].push_back(i);
      }
  }
  // trim empty top degrees so top_degree() reflects the kept cells
  while (!c.cells.empty() && c.cells.back().empty()) c.cells.pop_back();
  for (int d = 0; d <= c.top_degree(); ++d) {
    BitMatrix m(c.rank_of_group(d - 1), c.rank_of_group(d));
    if (d > 0) {
      const auto& cells = c.cells[static_cast<std::size_t>(d)];
      for (std::size_t col = 0; col < cells.size(); ++col)
        for (const auto& facet : facets_of(k.simplex(d, cells[col]))) {
          const std::size_t row = position[static_cast<std::size_t>(d - 1)][*k.index_of(facet)];
          if (row != static_cast<std::size_t>(-1)) m.set(row, col);
        }
    }
    c.boundary.push_back(std::move(m));
  }
  return c;
}

}  // namespace detail

inline ChainComplexZ2 chain_complex(const SimplicialComplex& k) {
  return detail::build_chain_complex(k, [](int, std::size_t) { return true; });
}

/// The chain complex of the subcomplex l, on its cells in k's indexing.
inline ChainComplexZ2 subcomplex_chain_complex(const SimplicialComplex& k, const Subcomplex& l) {
  require_subcomplex_of(k, l);
  return detail::build_chain_complex(k, [&](int d, std::size_t i) { return l.contains(d, i); });
}

/// C_*(k) / C_*(l): simplices of k outside l.
inline ChainComplexZ2 relative_chain_complex(const SimplicialComplex& k, const Subcomplex& l) {
  require_subcomplex_of(k, l);
  return detail::build_chain_complex(k, [&](int d, std::size_t i) { return !l.contains(d, i); });
}

/// dim H_d from ranks alone; no representatives are formed.
inline std::size_t betti(const ChainComplexZ2& c, int d) {
  if (d < 0) return 0;
  return c.rank_of_group(d) - rank(c.boundary_at(d)) - rank(c.boundary_at(d + 1));
}
inline std::size_t betti(const SimplicialComplex& k, int d) { return betti(chain_complex(k), d); }

/// Reduced Betti number, with the empty complex having reduced H_{-1} = Z/2.
inline std::size_t reduced_betti(const SimplicialComplex& k, int d) {
  if (k.empty()) return d == -1 ? 1 : 0;
  if (d < 0) return 0;
  const std::size_t b = betti(k, d);
  return d == 0 ? b - 1 : b;
}

enum class Variance { homology, cohomology };

/// Canonical representatives of ker(out) / im(in) at one degree, where out is
/// the (co)boundary leaving the degree and in the one arriving.
template <Variance V>
class ClassBasis {
 public:
  ClassBasis(int degree, const BitMatrix& incoming, BitMatrix outgoing)
      : degree_(degree), outgoing_(std::move(outgoing)), solver_(outgoing_.cols()) {
    if (incoming.rows() != outgoing_.cols()) throw InputError("class basis: composable shapes required");
    for (const auto& col : incoming.columns()) solver_.insert(col);
    reps_.ambient_dim = outgoing_.cols();
    for (auto& z : kernel_basis(outgoing_).vectors) {
      const std::size_t slot = solver_.inserted();
      if (solver_.insert(z)) {
        slots_.push_back(slot);
        reps_.vectors.push_back(std::move(z));
      }
    }
  }

  int degree() const noexcept { return degree_; }
  std::size_t dim() const noexcept { return reps_.size(); }
  std::size_t ambient_dim() const noexcept { return reps_.ambient_dim; }
  const SubspaceBasis& representatives() const noexcept { return reps_; }

  bool is_closed(const BitVector& v) const { return (outgoing_ * v).none(); }

  /// Coordinates of the class of v in the representative basis.
  BitVector coordinates(const BitVector& v) const {
    if (!is_closed(v)) throw InputError("coordinates: vector is not a (co)cycle");
    auto combo = solver_.express(v);
    if (!combo) throw AssertionFailure("class basis does not span the (co)cycles");
    BitVector out(dim());
    for (std::size_t j = 0; j < dim(); ++j)
      if (combo->get(slots_[j])) out.set(j);
    return out;
  }

  bool is_trivial(const BitVector& v) const { return coordinates(v).none(); }

  /// The (co)chain sum of representatives selected by `coords`.
  BitVector chain_of(const BitVector& coords) const {
    if (coords.size() != dim()) throw InputError("chain_of: coordinate vector has wrong length");
    BitVector out(ambient_dim());
    for (std::size_t j : coords.support()) out ^= reps_.vectors[j];
    return out;
  }

 private:
  int degree_;
  BitMatrix outgoing_;
  EchelonBasis solver_;
  std::vector<std::size_t> slots_;
  SubspaceBasis reps_;
};

using HomologyBasis = ClassBasis<Variance::homology>;
using CohomologyBasis = ClassBasis<Variance::cohomology>;

inline HomologyBasis homology_basis(const ChainComplexZ2& c, int degree) {
  return HomologyBasis(degree, c.boundary_at(degree + 1), c.boundary_at(degree));
}

inline CohomologyBasis cohomology_basis(const ChainComplexZ2& c, int degree) {
  return CohomologyBasis(degree, c.boundary_at(degree).transpose(), c.boundary_at(degree + 1).transpose());
}

/// Matrix of an induced map in chosen bases; columns index the source basis.
template <Variance V>
struct InducedMap {
  std::shared_ptr<const ClassBasis<V>> source;
  std::shared_ptr<const ClassBasis<V>> target;
  BitMatrix matrix;
};

/// Matrix of the map on homology induced by a chain map `chain` (target
/// cells x source cells) in the given bases.
inline BitMatrix homology_matrix(const BitMatrix& chain, const HomologyBasis& source, const HomologyBasis& target) {
  std::vector<BitVector> cols;
  cols.reserve(source.dim());
  for (const auto& z : source.representatives().vectors) {
    const BitVector image = chain * z;
    if (!target.is_closed(image)) throw AssertionFailure("chain map does not carry cycles to cycles");
    cols.push_back(target.coordinates(image));
  }
  return BitMatrix::from_columns(target.dim(), cols);
}

/// Matrix of f^* : H^d(target) -> H^d(source) for a chain map `chain`
/// (target cells x source cells).
inline BitMatrix cohomology_matrix(const BitMatrix& chain, const CohomologyBasis& source_side,
                                   const CohomologyBasis& target_side) {
  const BitMatrix pullback = chain.transpose();
  std::vector<BitVector> cols;
  cols.reserve(target_side.dim());
  for (const auto& phi : target_side.representatives().vectors) {
    const BitVector back = pullback * phi;
    if (!source_side.is_closed(back)) throw AssertionFailure("cochain map does not carry cocycles to cocycles");
    cols.push_back(source_side.coordinates(back));
  }
  return BitMatrix::from_columns(source_side.dim(), cols);
}

inline InducedMap<Variance::homology> induced_on_homology(const SimplicialMap& f, int degree) {
  require_valid(f);
  auto src = std::make_shared<const HomologyBasis>(homology_basis(chain_complex(*f.domain()), degree));
  auto tgt = std::make_shared<const HomologyBasis>(homology_basis(chain_complex(*f.codomain()), degree));
  BitMatrix m = homology_matrix(chain_map(f, degree), *src, *tgt);
  return {std::move(src), std::move(tgt), std::move(m)};
}

/// f^* : H^d(codomain) -> H^d(domain); source is the codomain basis.
inline InducedMap<Variance::cohomology> induced_on_cohomology(const SimplicialMap& f, int degree) {
  require_valid(f);
  auto dom = std::make_shared<const CohomologyBasis>(cohomology_basis(chain_complex(*f.domain()), degree));
  auto cod = std::make_shared<const CohomologyBasis>(cohomology_basis(chain_complex(*f.codomain()), degree));
  BitMatrix m = cohomology_matrix(chain_map(f, degree), *dom, *cod);
  return {std::move(cod), std::move(dom), std::move(m)};
}

/// Exactness of U --in--> V --out--> W at V: out*in = 0 and the ranks fill V.
inline bool is_exact_at(const BitMatrix& in, const BitMatrix& out, std::size_t dim_v) {
  if (in.rows() != dim_v || out.cols() != dim_v) throw InputError("exactness check: shape mismatch");
  return (out * in).is_zero() && rank(in) + rank(out) == dim_v;
}

/// The long exact homology sequence of the pair (k, l), verified by rank
/// arithmetic at every slot. The connecting map lifts a relative cycle to k
/// and takes its boundary, which lies in l.
inline bool les_pair_check(const SimplicialComplex& k, const Subcomplex& l) {
  require_subcomplex_of(k, l);
  const ChainComplexZ2 ck = chain_complex(k);
  const ChainComplexZ2 cl = subcomplex_chain_complex(k, l);
  const ChainComplexZ2 crel = relative_chain_complex(k, l);
  const int top = k.dimension();
  if (top < 0) return true;

  auto inclusion = [&](const ChainComplexZ2& sub, int d) {
    BitMatrix m(ck.rank_of_group(d), sub.rank_of_group(d));
    for (std::size_t j = 0; j < sub.rank_of_group(d); ++j) m.set(sub.cells[static_cast<std::size_t>(d)][j], j);
    return m;
  };

  // slots in order H_top(L), H_top(K), H_top(K,L), H_{top-1}(L), ..., H_0(K,L)
  std::vector<std::size_t> dims;
  std::vector<BitMatrix> maps;  // maps[i] : slot i -> slot i+1
  for (int d = top; d >= 0; --d) {
    const HomologyBasis hl = homology_basis(cl, d), hk = homology_basis(ck, d), hr = homology_basis(crel, d);
    dims.insert(dims.end(), {hl.dim(), hk.dim(), hr.dim()});
    maps.push_back(homology_matrix(inclusion(cl, d), hl, hk));
    maps.push_back(homology_matrix(inclusion(crel, d).transpose(), hk, hr));
    if (d > 0) {
      // connecting map H_d(K,L) -> H_{d-1}(L)
      const HomologyBasis hl_below = homology_basis(cl, d - 1);
      const BitMatrix lift = inclusion(crel, d);
      const BitMatrix restrict_to_l = inclusion(cl, d - 1).transpose();
      std::vector<BitVector> cols;
      for (const auto& z : hr.representatives().vectors) {
        const BitVector bdry = ck.boundary_at(d) * (lift * z);
        const BitVector in_l = restrict_to_l * bdry;
        if (!(inclusion(cl, d - 1) * in_l == bdry)) throw AssertionFailure("connecting map: boundary leaves the subcomplex");
        cols.push_back(hl_below.coordinates(in_l));
      }
      maps.push_back(BitMatrix::from_columns(hl_below.dim(), cols));
    }
  }
  for (std::size_t slot = 0; slot < dims.size(); ++slot) {
    const BitMatrix in = slot == 0 ? BitMatrix(dims[0], 0) : maps[slot - 1];
    const BitMatrix out = slot + 1 == dims.size() ? BitMatrix(0, dims[slot]) : maps[slot];
    if (!is_exact_at(in, out, dims[slot])) return false;
  }
  return true;
}

}  // namespace sepcheck
