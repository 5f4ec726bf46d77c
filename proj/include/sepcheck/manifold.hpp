#pragma once

#include <string>
#include <vector>

#include "sepcheck/complex.hpp"
#include "sepcheck/homology.hpp"

namespace sepcheck {

struct ManifoldCertificate {
  bool is_closed_z2_homology_n_manifold = false;
  /// Every simplex violating a condition: maximal simplices of the wrong
  /// dimension, codimension-one faces without exactly two cofacets, and
  /// simplices whose link is not a Z/2 homology sphere of the right dimension.
  std::vector<Simplex> failures;
};

/// Combinatorial certificate that k is a closed Z/2-homology n-manifold:
/// k is pure of dimension n, each (n-1)-simplex has two cofacets, and the
/// link of every simplex s has the reduced Z/2 homology of S^(n - dim s - 1).
/// Local homology at a point of the open star of s is the reduced homology of
/// that link shifted up by dim s + 1, so this is the local condition on every
/// point.
inline ManifoldCertificate manifold_certificate(const SimplicialComplex& k, int n) {
  ManifoldCertificate out;
  if (k.empty() || n < 0) {
    out.is_closed_z2_homology_n_manifold = false;
    return out;
  }
  std::vector<std::vector<char>> failed(static_cast<std::size_t>(k.dimension() + 1));
  for (int d = 0; d <= k.dimension(); ++d) failed[static_cast<std::size_t>(d)].assign(k.count(d), 0);
  auto fail = [&](const Simplex& s) { failed[static_cast<std::size_t>(simplex_dim(s))][*k.index_of(s)] = 1; };

  for (const auto& top : k.maximal_simplices())
    if (simplex_dim(top) != n) fail(top);

  if (n >= 1) {
    std::vector<int> cofacets(k.count(n - 1), 0);
    for (const auto& s : k.simplices(n))
      for (const auto& f : facets_of(s)) ++cofacets[*k.index_of(f)];
    for (std::size_t i = 0; i < cofacets.size(); ++i)
      if (cofacets[i] != 2) fail(k.simplex(n - 1, i));
  }

  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d)) {
      const int sphere_dim = n - d - 1;
      const ComplexPtr lk = link(k, s);
      bool sphere = sphere_dim >= -1 && lk->dimension() == sphere_dim;
      for (int i = -1; sphere && i <= std::max(lk->dimension(), 0); ++i)
        if (reduced_betti(*lk, i) != (i == sphere_dim ? 1u : 0u)) sphere = false;
      if (!sphere) fail(s);
    }

  for (int d = 0; d <= k.dimension(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i)
      if (failed[static_cast<std::size_t>(d)][i]) out.failures.push_back(k.simplex(d, i));
  out.is_closed_z2_homology_n_manifold = out.failures.empty();
  return out;
}

}  // namespace sepcheck
