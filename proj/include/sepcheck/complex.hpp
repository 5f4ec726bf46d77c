#pragma once

// Finite abstract simplicial complexes with string vertex labels.
//
// Vertices are numbered in lexicographic order of their labels and every
// simplex is stored as a sorted vector of vertex numbers, so the vertex order
// used by the cup/cap formulas is the label order.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sepcheck/errors.hpp"

namespace sepcheck {

using Vertex = std::uint32_t;
using Simplex = std::vector<Vertex>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Vertex v : s) h = (h ^ v) * 0x100000001b3ULL;
    return h;
  }
};

/// Dimension of a simplex given by its vertex count.
inline int simplex_dim(const Simplex& s) noexcept { return static_cast<int>(s.size()) - 1; }

/// Disjoint-set forest with path halving.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) noexcept {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) noexcept { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

class SimplicialComplex;
using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

class SimplicialComplex {
 public:
  /// Face closure of the given simplices. Vertex order is the sorted order of
  /// the labels. An empty list gives the empty complex.
  static ComplexPtr from_maximal_simplices(std::string name,
                                           const std::vector<std::vector<std::string>>& maximal) {
    std::set<std::string> label_set;
    for (const auto& s : maximal) {
      if (s.empty()) throw InputError("complex '" + name + "': empty simplex");
      std::set<std::string> seen;
      for (const auto& v : s) {
        if (!seen.insert(v).second) throw InputError("complex '" + name + "': duplicate vertex '" + v + "' in a simplex");
        label_set.insert(v);
      }
    }
    std::vector<std::string> labels(label_set.begin(), label_set.end());
    std::unordered_map<std::string, Vertex> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<Vertex>(i));
    std::vector<Simplex> generators;
    generators.reserve(maximal.size());
    for (const auto& s : maximal) {
      Simplex g;
      for (const auto& v : s) g.push_back(index.at(v));
      std::sort(g.begin(), g.end());
      generators.push_back(std::move(g));
    }
    return std::make_shared<const SimplicialComplex>(std::move(name), std::move(labels), generators);
  }

  /// Face closure of simplices given as vertex numbers into `labels`, which
  /// must already be sorted and distinct. Unused labels are kept.
  SimplicialComplex(std::string name, std::vector<std::string> labels, const std::vector<Simplex>& generators)
      : name_(std::move(name)), labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) label_index_.emplace(labels_[i], static_cast<Vertex>(i));
    if (label_index_.size() != labels_.size() || !std::is_sorted(labels_.begin(), labels_.end()))
      throw InputError("complex '" + name_ + "': labels must be sorted and distinct");
    std::vector<std::set<Simplex>> faces;
    for (Simplex g : generators) {
      std::sort(g.begin(), g.end());
      if (g.empty() || std::adjacent_find(g.begin(), g.end()) != g.end() || g.back() >= labels_.size())
        throw InputError("complex '" + name_ + "': malformed simplex");
      const std::size_t k = g.size();
      if (faces.size() < k) faces.resize(k);
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1u) face.push_back(g[i]);
        faces[face.size() - 1].insert(std::move(face));
      }
    }
    by_dim_.resize(faces.size());
    index_.resize(faces.size());
    for (std::size_t d = 0; d < faces.size(); ++d) {
      by_dim_[d].assign(faces[d].begin(), faces[d].end());
      index_[d].reserve(by_dim_[d].size());
      for (std::size_t i = 0; i < by_dim_[d].size(); ++i) index_[d].emplace(by_dim_[d][i], i);
    }
    compute_maximal();
  }

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t vertex_count() const noexcept { return labels_.size(); }

  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const noexcept { return by_dim_.empty(); }

  std::size_t count(int d) const noexcept {
    return d < 0 || d > dimension() ? 0 : by_dim_[static_cast<std::size_t>(d)].size();
  }
  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (const auto& v : by_dim_) n += v.size();
    return n;
  }

  const std::vector<Simplex>& simplices(int d) const noexcept {
    static const std::vector<Simplex> none;
    return d < 0 || d > dimension() ? none : by_dim_[static_cast<std::size_t>(d)];
  }
  const Simplex& simplex(int d, std::size_t i) const { return simplices(d).at(i); }

  std::optional<std::size_t> index_of(const Simplex& s) const {
    const int d = simplex_dim(s);
    if (d < 0 || d > dimension()) return std::nullopt;
    const auto& idx = index_[static_cast<std::size_t>(d)];
    auto it = idx.find(s);
    if (it == idx.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// Index of a simplex that is known to be present.
  std::size_t index_of_present(const Simplex& s) const {
    auto i = index_of(s);
    if (!i) throw InputError("simplex not in complex '" + name_ + "'");
    return *i;
  }

  std::optional<Vertex> vertex_of(const std::string& label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<std::string> labels_of(const Simplex& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(labels_.at(v));
    return out;
  }
  Simplex simplex_from_labels(const std::vector<std::string>& labels) const {
    Simplex s;
    for (const auto& l : labels) {
      auto v = vertex_of(l);
      if (!v) throw InputError("unknown vertex '" + l + "' in complex '" + name_ + "'");
      s.push_back(*v);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("repeated vertex in simplex");
    return s;
  }

  /// Maximal simplices, ordered by dimension then lexicographically.
  const std::vector<Simplex>& maximal_simplices() const noexcept { return maximal_; }
  /// Positions in maximal_simplices() of those containing vertex v.
  const std::vector<std::size_t>& maximal_containing(Vertex v) const { return star_.at(v); }

  /// Structural equality: same labels and same simplices.
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.labels_ == b.labels_ && a.by_dim_ == b.by_dim_;
  }

 private:
  void compute_maximal() {
    star_.assign(labels_.size(), {});
    for (int d = 0; d <= dimension(); ++d) {
      std::vector<char> has_coface(count(d), 0);
      for (const auto& s : simplices(d + 1))
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          Simplex face = s;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
          has_coface[*index_of(face)] = 1;
        }
      for (std::size_t i = 0; i < count(d); ++i)
        if (!has_coface[i]) {
          for (Vertex v : simplices(d)[i]) star_[v].push_back(maximal_.size());
          maximal_.push_back(simplices(d)[i]);
        }
    }
  }

  std::string name_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> label_index_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;
  std::vector<Simplex> maximal_;
  std::vector<std::vector<std::size_t>> star_;
};

inline ComplexPtr empty_complex(std::string name = "empty") {
  return std::make_shared<const SimplicialComplex>(std::move(name), std::vector<std::string>{},
                                                   std::vector<Simplex>{});
}

/// The codimension-one faces of s, in order of the dropped vertex.
inline std::vector<Simplex> facets_of(const Simplex& s) {
  std::vector<Simplex> out;
  if (s.size() < 2) return out;
  out.reserve(s.size());
  for (std::size_t drop = 0; drop < s.size(); ++drop) {
    Simplex f = s;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
    out.push_back(std::move(f));
  }
  return out;
}

inline long long euler_characteristic(const SimplicialComplex& k) {
  long long chi = 0;
  for (int d = 0; d <= k.dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(k.count(d));
  return chi;
}

/// A face-closed set of simplices of a parent complex.
class Subcomplex {
 public:
  static Subcomplex empty(ComplexPtr parent) { return Subcomplex(std::move(parent)); }

  static Subcomplex whole(ComplexPtr parent) {
    Subcomplex s(std::move(parent));
    for (auto& m : s.member_) std::fill(m.begin(), m.end(), 1);
    return s;
  }

  /// Face closure of the given simplices; each must be a simplex of parent.
  static Subcomplex closure_of(ComplexPtr parent, const std::vector<Simplex>& generators) {
    Subcomplex s(std::move(parent));
    for (const auto& g : generators) {
      if (!s.parent_->contains(g)) throw InputError("simplex is not in the parent complex");
      s.add_with_faces(g);
    }
    return s;
  }

  static Subcomplex from_labels(ComplexPtr parent, const std::vector<std::vector<std::string>>& generators) {
    std::vector<Simplex> gens;
    for (const auto& g : generators) gens.push_back(parent->simplex_from_labels(g));
    return closure_of(std::move(parent), gens);
  }

  /// Builds from a per-dimension membership mask, checking face closure.
  static Subcomplex from_mask(ComplexPtr parent, std::vector<std::vector<char>> mask) {
    Subcomplex s(std::move(parent));
    if (mask.size() != s.member_.size()) throw InputError("subcomplex mask has wrong dimension count");
    for (std::size_t d = 0; d < mask.size(); ++d)
      if (mask[d].size() != s.member_[d].size()) throw InputError("subcomplex mask has wrong size");
    s.member_ = std::move(mask);
    for (int d = 1; d <= s.parent_->dimension(); ++d)
      for (std::size_t i = 0; i < s.parent_->count(d); ++i)
        if (s.contains(d, i))
          for (const auto& f : facets_of(s.parent_->simplex(d, i)))
            if (!s.contains(f)) throw InputError("subcomplex is not closed under faces");
    return s;
  }

  const ComplexPtr& parent() const noexcept { return parent_; }

  bool contains(int d, std::size_t i) const noexcept {
    return d >= 0 && static_cast<std::size_t>(d) < member_.size() && i < member_[static_cast<std::size_t>(d)].size() &&
           member_[static_cast<std::size_t>(d)][i] != 0;
  }
  bool contains(const Simplex& s) const {
    auto i = parent_->index_of(s);
    return i && contains(simplex_dim(s), *i);
  }

  std::size_t count(int d) const noexcept {
    if (d < 0 || static_cast<std::size_t>(d) >= member_.size()) return 0;
    const auto& m = member_[static_cast<std::size_t>(d)];
    return static_cast<std::size_t>(std::count(m.begin(), m.end(), char{1}));
  }
  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (int d = 0; d < static_cast<int>(member_.size()); ++d) n += count(d);
    return n;
  }
  bool is_empty() const noexcept { return size() == 0; }
  bool is_whole() const noexcept { return size() == parent_->size(); }

  /// -1 when empty.
  int dimension() const noexcept {
    for (int d = static_cast<int>(member_.size()) - 1; d >= 0; --d)
      if (count(d) > 0) return d;
    return -1;
  }

  std::vector<Simplex> simplices(int d) const {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < parent_->count(d); ++i)
      if (contains(d, i)) out.push_back(parent_->simplex(d, i));
    return out;
  }

  const std::vector<std::vector<char>>& mask() const noexcept { return member_; }

  /// A standalone complex on the same labels, restricted to used vertices.
  ComplexPtr to_complex(std::string name) const {
    std::vector<std::vector<std::string>> gens;
    for (int d = 0; d <= dimension(); ++d)
      for (const auto& s : simplices(d)) gens.push_back(parent_->labels_of(s));
    return SimplicialComplex::from_maximal_simplices(std::move(name), gens);
  }

  friend bool operator==(const Subcomplex& a, const Subcomplex& b) {
    return *a.parent_ == *b.parent_ && a.member_ == b.member_;
  }

 private:
  explicit Subcomplex(ComplexPtr parent) : parent_(std::move(parent)) {
    if (!parent_) throw InputError("subcomplex without parent");
    member_.resize(static_cast<std::size_t>(parent_->dimension() + 1));
    for (int d = 0; d <= parent_->dimension(); ++d) member_[static_cast<std::size_t>(d)].assign(parent_->count(d), 0);
  }

  void add_with_faces(const Simplex& s) {
    const std::size_t i = *parent_->index_of(s);
    const int d = simplex_dim(s);
    if (contains(d, i)) return;
    member_[static_cast<std::size_t>(d)][i] = 1;
    for (const auto& f : facets_of(s)) add_with_faces(f);
  }

  ComplexPtr parent_;
  std::vector<std::vector<char>> member_;
};

/// Throws unless `sub` lives in (a complex structurally equal to) k.
inline void require_subcomplex_of(const SimplicialComplex& k, const Subcomplex& sub) {
  if (sub.parent().get() != &k && !(*sub.parent() == k))
    throw InputError("not a subcomplex of '" + k.name() + "'");
}

namespace detail {

template <class Member>
std::size_t count_components(const SimplicialComplex& k, Member&& member) {
  UnionFind uf(k.vertex_count());
  std::vector<char> used(k.vertex_count(), 0);
  for (std::size_t i = 0; i < k.count(0); ++i)
    if (member(0, i)) used[k.simplex(0, i)[0]] = 1;
  for (std::size_t i = 0; i < k.count(1); ++i)
    if (member(1, i)) uf.unite(k.simplex(1, i)[0], k.simplex(1, i)[1]);
  std::set<std::size_t> roots;
  for (std::size_t v = 0; v < k.vertex_count(); ++v)
    if (used[v]) roots.insert(uf.find(v));
  return roots.size();
}

}  // namespace detail

/// Components of the vertex-edge graph, isolated vertices included.
inline std::size_t connected_components(const SimplicialComplex& k) {
  return detail::count_components(k, [](int, std::size_t) { return true; });
}
inline std::size_t connected_components(const Subcomplex& s) {
  return detail::count_components(*s.parent(), [&](int d, std::size_t i) { return s.contains(d, i); });
}

/// Link of s in k, as a standalone complex on the parent's labels.
inline ComplexPtr link(const SimplicialComplex& k, const Simplex& s) {
  if (!k.contains(s)) throw InputError("link: simplex is not in '" + k.name() + "'");
  std::vector<std::vector<std::string>> gens;
  for (std::size_t m : k.maximal_containing(s.front())) {
    const Simplex& top = k.maximal_simplices()[m];
    if (!std::includes(top.begin(), top.end(), s.begin(), s.end())) continue;
    Simplex rest;
    std::set_difference(top.begin(), top.end(), s.begin(), s.end(), std::back_inserter(rest));
    if (!rest.empty()) gens.push_back(k.labels_of(rest));
  }
  return SimplicialComplex::from_maximal_simplices(k.name() + "/link", gens);
}

// ---------------------------------------------------------------------------
// Barycentric subdivision
// ---------------------------------------------------------------------------

/// Canonical label of the barycenter of s: "<v1.v2...vk>" over sorted labels.
inline std::string barycenter_label(const SimplicialComplex& k, const Simplex& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += '.';
    out += k.labels()[s[i]];
  }
  out += '>';
  return out;
}

struct Subdivision {
  ComplexPtr complex;
  /// For each vertex of the subdivision, the (dimension, index) of the
  /// original simplex it is the barycenter of.
  std::vector<std::pair<int, std::size_t>> origin;
  /// For each original dimension and simplex index, the new vertex.
  std::vector<std::vector<Vertex>> barycenter;
};

inline Subdivision barycentric_subdivide(const SimplicialComplex& k) {
  std::vector<std::pair<std::string, std::pair<int, std::size_t>>> named;
  named.reserve(k.size());
  for (int d = 0; d <= k.dimension(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) named.push_back({barycenter_label(k, k.simplex(d, i)), {d, i}});
  std::sort(named.begin(), named.end());

  Subdivision out;
  std::vector<std::string> labels;
  labels.reserve(named.size());
  out.barycenter.resize(static_cast<std::size_t>(k.dimension() + 1));
  for (int d = 0; d <= k.dimension(); ++d) out.barycenter[static_cast<std::size_t>(d)].resize(k.count(d));
  for (std::size_t v = 0; v < named.size(); ++v) {
    labels.push_back(named[v].first);
    out.origin.push_back(named[v].second);
    out.barycenter[static_cast<std::size_t>(named[v].second.first)][named[v].second.second] = static_cast<Vertex>(v);
  }

  // maximal chains are the full flags of maximal simplices
  std::vector<Simplex> chains;
  for (const Simplex& top : k.maximal_simplices()) {
    Simplex order = top;
    std::sort(order.begin(), order.end());
    do {
      Simplex chain;
      Simplex face;
      for (Vertex v : order) {
        face.insert(std::upper_bound(face.begin(), face.end(), v), v);
        chain.push_back(out.barycenter[face.size() - 1][*k.index_of(face)]);
      }
      chains.push_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  out.complex = std::make_shared<const SimplicialComplex>("Sd(" + k.name() + ")", std::move(labels), chains);
  return out;
}

/// The full subcomplex of Sd(k) spanned by barycenters of simplices outside f,
/// together with the subdivision it lives in.
struct ComplementaryComplex {
  Subdivision subdivision;
  Subcomplex complement;
};

inline ComplementaryComplex complementary_complex(const SimplicialComplex& k, const Subcomplex& f) {
  require_subcomplex_of(k, f);
  Subdivision sd = barycentric_subdivide(k);
  const SimplicialComplex& sk = *sd.complex;
  std::vector<char> vertex_ok(sk.vertex_count());
  for (std::size_t v = 0; v < sk.vertex_count(); ++v)
    vertex_ok[v] = f.contains(sd.origin[v].first, sd.origin[v].second) ? 0 : 1;
  std::vector<std::vector<char>> mask(static_cast<std::size_t>(sk.dimension() + 1));
  for (int d = 0; d <= sk.dimension(); ++d) {
    auto& m = mask[static_cast<std::size_t>(d)];
    m.resize(sk.count(d));
    for (std::size_t i = 0; i < sk.count(d); ++i) {
      const auto& s = sk.simplex(d, i);
      m[i] = std::all_of(s.begin(), s.end(), [&](Vertex v) { return vertex_ok[v] != 0; }) ? 1 : 0;
    }
  }
  Subcomplex complement = Subcomplex::from_mask(sd.complex, std::move(mask));
  return {std::move(sd), std::move(complement)};
}

/// Number of components of the complementary complex of f in k, counted on
/// the face poset of k directly: its vertices are the simplices outside f and
/// its edges join a simplex to its facets outside f. This is the 1-skeleton
/// of complementary_complex(k, f) without materializing the subdivision.
inline std::size_t complement_components(const SimplicialComplex& k, const Subcomplex& f) {
  require_subcomplex_of(k, f);
  std::vector<std::size_t> offset(static_cast<std::size_t>(k.dimension() + 2), 0);
  for (int d = 0; d <= k.dimension(); ++d) offset[static_cast<std::size_t>(d + 1)] = offset[static_cast<std::size_t>(d)] + k.count(d);
  UnionFind uf(k.size());
  for (int d = 1; d <= k.dimension(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      if (f.contains(d, i)) continue;
      for (const auto& facet : facets_of(k.simplex(d, i))) {
        const std::size_t j = *k.index_of(facet);
        if (!f.contains(d - 1, j)) uf.unite(offset[static_cast<std::size_t>(d)] + i, offset[static_cast<std::size_t>(d - 1)] + j);
      }
    }
  std::set<std::size_t> roots;
  for (int d = 0; d <= k.dimension(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i)
      if (!f.contains(d, i)) roots.insert(uf.find(offset[static_cast<std::size_t>(d)] + i));
  return roots.size();
}

}  // namespace sepcheck
