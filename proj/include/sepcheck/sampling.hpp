#pragma once

// Seeded random (co)chains and (co)cycles for property suites.

#include <random>

#include "sepcheck/duality.hpp"

namespace sepcheck::sample {

inline BitVector bits(std::size_t n, std::mt19937_64& rng) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rng() & 1u) v.set(i);
  return v;
}

inline CohomologyClass cochain(const ComplexPtr& k, int d, std::mt19937_64& rng) {
  return {k, d, bits(k->count(d), rng)};
}

inline HomologyClass chain(const ComplexPtr& k, int d, std::mt19937_64& rng) { return {k, d, bits(k->count(d), rng)}; }

/// A random class plus a random coboundary, so representatives vary as well
/// as classes.
inline CohomologyClass cocycle(const ComplexPtr& k, int d, std::mt19937_64& rng) {
  const ChainComplexZ2 c = chain_complex(*k);
  const CohomologyBasis h = cohomology_basis(c, d);
  BitVector v = h.chain_of(bits(h.dim(), rng));
  if (d >= 1) v ^= c.boundary_at(d).transpose() * bits(k->count(d - 1), rng);
  return {k, d, std::move(v)};
}

/// A random class plus a random boundary.
inline HomologyClass cycle(const ComplexPtr& k, int d, std::mt19937_64& rng) {
  const ChainComplexZ2 c = chain_complex(*k);
  const HomologyBasis h = homology_basis(c, d);
  BitVector v = h.chain_of(bits(h.dim(), rng));
  if (d + 1 <= k->dimension()) v ^= c.boundary_at(d + 1) * bits(k->count(d + 1), rng);
  return {k, d, std::move(v)};
}

/// Coboundary of a random (d-1)-cochain: a cocycle in the zero class.
inline BitVector coboundary(const ComplexPtr& k, int d, std::mt19937_64& rng) {
  if (d < 1) return BitVector(k->count(d));
  return chain_complex(*k).boundary_at(d).transpose() * bits(k->count(d - 1), rng);
}

}  // namespace sepcheck::sample
