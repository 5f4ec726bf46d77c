#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's elimination, homology or component code: matrices are plain int
// tables, ranks come from schoolbook elimination or span enumeration, and
// double points are found by sampling exact rational points.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "sepcheck/complex.hpp"
#include "sepcheck/gf2.hpp"
#include "sepcheck/simmap.hpp"

namespace oracle {

using Table = std::vector<std::vector<int>>;

inline Table table_of(const sepcheck::BitMatrix& m) {
  Table t(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t[r][c] = m.get(r, c) ? 1 : 0;
  return t;
}

/// Schoolbook elimination mod 2 on an int table.
inline std::size_t naive_rank(Table t) {
  std::size_t rank = 0;
  const std::size_t cols = t.empty() ? 0 : t[0].size();
  for (std::size_t c = 0; c < cols && rank < t.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < t.size() && t[pivot][c] % 2 == 0) ++pivot;
    if (pivot == t.size()) continue;
    std::swap(t[pivot], t[rank]);
    for (std::size_t r = 0; r < t.size(); ++r)
      if (r != rank && t[r][c] % 2 != 0)
        for (std::size_t k = 0; k < cols; ++k) t[r][k] = (t[r][k] + t[rank][k]) % 2;
    ++rank;
  }
  return rank;
}

inline std::size_t naive_rank(const sepcheck::BitMatrix& m) { return naive_rank(table_of(m)); }

/// Rank as log2 of the number of distinct row combinations (rows <= 16).
inline std::size_t span_rank(const Table& t) {
  std::set<std::vector<int>> span;
  const std::size_t cols = t.empty() ? 0 : t[0].size();
  for (std::uint32_t mask = 0; mask < (1u << t.size()); ++mask) {
    std::vector<int> v(cols, 0);
    for (std::size_t r = 0; r < t.size(); ++r)
      if (mask >> r & 1u)
        for (std::size_t c = 0; c < cols; ++c) v[c] ^= t[r][c];
    span.insert(v);
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < span.size()) ++r;
  return r;
}

/// All x with m x = b, by enumeration (cols <= 16).
inline std::vector<std::vector<int>> all_solutions(const Table& m, const std::vector<int>& b) {
  std::vector<std::vector<int>> out;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::uint32_t mask = 0; mask < (1u << cols); ++mask) {
    bool ok = true;
    for (std::size_t r = 0; r < m.size() && ok; ++r) {
      int s = 0;
      for (std::size_t c = 0; c < cols; ++c) s ^= m[r][c] & static_cast<int>(mask >> c & 1u);
      ok = s == b[r];
    }
    if (ok) {
      std::vector<int> x(cols);
      for (std::size_t c = 0; c < cols; ++c) x[c] = static_cast<int>(mask >> c & 1u);
      out.push_back(x);
    }
  }
  return out;
}

/// Boundary table of degree d built straight from the simplex lists.
inline Table boundary_table(const sepcheck::SimplicialComplex& k, int d) {
  Table t(d >= 1 ? k.count(d - 1) : 0, std::vector<int>(k.count(d), 0));
  if (d < 1) return t;
  for (std::size_t j = 0; j < k.count(d); ++j) {
    const auto& s = k.simplex(d, j);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      sepcheck::Simplex f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) f.push_back(s[i]);
      const auto& faces = k.simplices(d - 1);
      const auto it = std::find(faces.begin(), faces.end(), f);
      t[static_cast<std::size_t>(it - faces.begin())][j] = 1;
    }
  }
  return t;
}

inline std::size_t naive_betti(const sepcheck::SimplicialComplex& k, int d) {
  if (d < 0 || d > k.dimension()) return 0;
  const std::size_t rank_out = naive_rank(boundary_table(k, d));
  const std::size_t rank_in = d + 1 <= k.dimension() ? naive_rank(boundary_table(k, d + 1)) : 0;
  return k.count(d) - rank_out - rank_in;
}

/// Components of |Y| - |F| for a closed manifold Y: top simplices, adjacent
/// when they share a codimension-one face outside F. Depth-first search.
inline std::size_t top_simplex_components(const sepcheck::SimplicialComplex& y, const sepcheck::Subcomplex& f) {
  const int n = y.dimension();
  std::map<sepcheck::Simplex, std::vector<std::size_t>> by_face;
  for (std::size_t i = 0; i < y.count(n); ++i) {
    const auto& s = y.simplex(n, i);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      sepcheck::Simplex face;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != drop) face.push_back(s[j]);
      if (!face.empty() && f.contains(face)) continue;
      by_face[face].push_back(i);
    }
  }
  std::vector<std::vector<std::size_t>> adj(y.count(n));
  for (const auto& [face, tops] : by_face)
    for (std::size_t a : tops)
      for (std::size_t b : tops)
        if (a != b) adj[a].push_back(b);
  std::vector<char> seen(y.count(n), 0);
  std::size_t comps = 0;
  for (std::size_t i = 0; i < y.count(n); ++i) {
    if (seen[i] || f.contains(n, i)) continue;
    ++comps;
    std::vector<std::size_t> stack{i};
    seen[i] = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
  }
  return comps;
}

/// Positive compositions of `total` into `parts` parts.
inline void compositions(int total, std::size_t parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = 1; first <= total - static_cast<int>(parts) + 1; ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

/// Domain simplices whose interior contains a sampled point x with another
/// sampled point y != x and f(x) = f(y). Points have barycentric coordinates
/// with denominator `denominator`; 12 reaches every barycenter up to
/// dimension three and every two-way split of such weights.
inline std::set<std::pair<int, std::size_t>> sampled_double_point_carriers(const sepcheck::SimplicialMap& f,
                                                                           int denominator = 12) {
  const auto& k = *f.domain();
  std::map<std::map<sepcheck::Vertex, int>, std::vector<std::pair<int, std::size_t>>> by_image;
  for (int d = 0; d <= k.dimension(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      const auto& s = k.simplex(d, i);
      std::vector<std::vector<int>> weights;
      std::vector<int> cur;
      compositions(denominator, s.size(), cur, weights);
      for (const auto& w : weights) {
        std::map<sepcheck::Vertex, int> image;
        for (std::size_t j = 0; j < s.size(); ++j) image[f.vertex_map()[s[j]]] += w[j];
        by_image[image].push_back({d, i});
      }
    }
  std::set<std::pair<int, std::size_t>> carriers;
  for (const auto& [image, points] : by_image)
    if (points.size() > 1) carriers.insert(points.begin(), points.end());
  return carriers;
}

}  // namespace oracle

namespace oracle {

/// Whether the top simplices of a closed pseudomanifold can be oriented so
/// that every codimension-one face receives opposite induced orientations.
/// Orientation of a simplex is a sign relative to its sorted vertex order;
/// the face opposite vertex i inherits sign (-1)^i.
inline bool orientable(const sepcheck::SimplicialComplex& k) {
  const int n = k.dimension();
  std::map<sepcheck::Simplex, std::vector<std::pair<std::size_t, int>>> faces;  // face -> (top, induced sign)
  for (std::size_t i = 0; i < k.count(n); ++i) {
    const auto& s = k.simplex(n, i);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      sepcheck::Simplex f;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != drop) f.push_back(s[j]);
      faces[f].push_back({i, drop % 2 == 0 ? 1 : -1});
    }
  }
  std::vector<int> sign(k.count(n), 0);
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(k.count(n));  // (neighbor, required product)
  for (const auto& [f, tops] : faces) {
    if (tops.size() != 2) return false;
    // orientations o_a, o_b must satisfy o_a * s_a = -(o_b * s_b)
    const int rel = -tops[0].second * tops[1].second;
    adj[tops[0].first].push_back({tops[1].first, rel});
    adj[tops[1].first].push_back({tops[0].first, rel});
  }
  for (std::size_t start = 0; start < sign.size(); ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (const auto& [v, rel] : adj[u]) {
        const int want = sign[u] * rel;
        if (sign[v] == 0) {
          sign[v] = want;
          stack.push_back(v);
        } else if (sign[v] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace oracle
