#pragma once

// Simplicial maps, their chain maps over GF(2), images, and the closed
// self-intersection subcomplex.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sepcheck/complex.hpp"
#include "sepcheck/gf2.hpp"

namespace sepcheck {

class SimplicialMap {
 public:
  SimplicialMap(std::string name, ComplexPtr domain, ComplexPtr codomain, std::vector<Vertex> vertex_map)
      : name_(std::move(name)), domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(vertex_map)) {
    if (!domain_ || !codomain_) throw InputError("map '" + name_ + "': missing domain or codomain");
    if (map_.size() != domain_->vertex_count()) throw InputError("map '" + name_ + "': vertex map is not total");
    for (Vertex v : map_)
      if (v >= codomain_->vertex_count()) throw InputError("map '" + name_ + "': target vertex out of range");
  }

  /// Every domain label must be mapped, and every target must be a codomain label.
  static SimplicialMap from_labels(std::string name, ComplexPtr domain, ComplexPtr codomain,
                                   const std::map<std::string, std::string>& labels) {
    std::vector<Vertex> vm;
    vm.reserve(domain->vertex_count());
    for (const auto& l : domain->labels()) {
      auto it = labels.find(l);
      if (it == labels.end()) throw InputError("map '" + name + "': vertex '" + l + "' is not mapped");
      auto target = codomain->vertex_of(it->second);
      if (!target) throw InputError("map '" + name + "': target '" + it->second + "' is not a vertex of the codomain");
      vm.push_back(*target);
    }
    for (const auto& [from, to] : labels)
      if (!domain->vertex_of(from)) throw InputError("map '" + name + "': '" + from + "' is not a vertex of the domain");
    return SimplicialMap(std::move(name), std::move(domain), std::move(codomain), std::move(vm));
  }

  static SimplicialMap identity(ComplexPtr k) {
    std::vector<Vertex> vm(k->vertex_count());
    std::iota(vm.begin(), vm.end(), Vertex{0});
    return SimplicialMap("id", k, k, std::move(vm));
  }

  /// Inclusion of a complex whose labels all occur in `parent`.
  static SimplicialMap inclusion(ComplexPtr sub, ComplexPtr parent) {
    std::map<std::string, std::string> m;
    for (const auto& l : sub->labels()) m.emplace(l, l);
    return from_labels("incl", std::move(sub), std::move(parent), m);
  }

  const std::string& name() const noexcept { return name_; }
  const ComplexPtr& domain() const noexcept { return domain_; }
  const ComplexPtr& codomain() const noexcept { return codomain_; }
  const std::vector<Vertex>& vertex_map() const noexcept { return map_; }

  /// Image vertex set of s, sorted and deduplicated.
  Simplex image(const Simplex& s) const {
    Simplex out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(map_[v]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  bool injective_on(const Simplex& s) const { return image(s).size() == s.size(); }
  bool injective_on_vertices() const {
    std::set<Vertex> seen(map_.begin(), map_.end());
    return seen.size() == map_.size();
  }

  std::map<std::string, std::string> label_map() const {
    std::map<std::string, std::string> m;
    for (std::size_t v = 0; v < map_.size(); ++v) m.emplace(domain_->labels()[v], codomain_->labels()[map_[v]]);
    return m;
  }

 private:
  std::string name_;
  ComplexPtr domain_;
  ComplexPtr codomain_;
  std::vector<Vertex> map_;
};

/// True iff every domain simplex is carried onto a codomain simplex.
inline bool validate(const SimplicialMap& f) {
  const auto& k = *f.domain();
  for (const auto& top : k.maximal_simplices())
    if (!f.codomain()->contains(f.image(top))) return false;
  return true;
}

inline void require_valid(const SimplicialMap& f) {
  if (!validate(f)) throw InputError("map '" + f.name() + "' does not send simplices to simplices");
}

/// Image of a subcomplex of the domain, as a subcomplex of the codomain.
inline Subcomplex image_of(const SimplicialMap& f, const Subcomplex& a) {
  require_valid(f);
  require_subcomplex_of(*f.domain(), a);
  std::vector<Simplex> gens;
  for (int d = 0; d <= a.dimension(); ++d)
    for (const auto& s : a.simplices(d)) gens.push_back(f.image(s));
  return Subcomplex::closure_of(f.codomain(), gens);
}

inline Subcomplex image_subcomplex(const SimplicialMap& f) {
  return image_of(f, Subcomplex::whole(f.domain()));
}

/// Degree-d chain map over GF(2); degenerate simplices go to zero.
inline BitMatrix chain_map(const SimplicialMap& f, int d) {
  require_valid(f);
  const auto& dom = *f.domain();
  const auto& cod = *f.codomain();
  BitMatrix m(cod.count(d), dom.count(d));
  for (std::size_t i = 0; i < dom.count(d); ++i) {
    const Simplex img = f.image(dom.simplex(d, i));
    if (simplex_dim(img) == d) m.set(*cod.index_of(img), i);
  }
  return m;
}

/// g after f.
inline SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!(*f.codomain() == *g.domain())) throw InputError("compose: codomain of f is not the domain of g");
  std::vector<Vertex> vm(f.vertex_map().size());
  for (std::size_t v = 0; v < vm.size(); ++v) vm[v] = g.vertex_map()[f.vertex_map()[v]];
  return SimplicialMap(g.name() + "." + f.name(), f.domain(), g.codomain(), std::move(vm));
}

/// f restricted to `sub` (a complex on domain labels) with values in
/// `target` (a complex on codomain labels).
inline SimplicialMap restrict_map(const SimplicialMap& f, ComplexPtr sub, ComplexPtr target) {
  const auto full = f.label_map();
  std::map<std::string, std::string> m;
  for (const auto& l : sub->labels()) {
    auto it = full.find(l);
    if (it == full.end()) throw InputError("restrict: '" + l + "' is not a domain vertex");
    m.emplace(l, it->second);
  }
  SimplicialMap r = SimplicialMap::from_labels(f.name() + "|", std::move(sub), std::move(target), m);
  require_valid(r);
  return r;
}

struct SelfIntersectionData {
  Subcomplex a;  // closure of the double-point set, in the domain
  Subcomplex b;  // its image, in the codomain
  bool is_embedding = false;
};

/// The closed self-intersection subcomplex. A simplex is a double-point
/// carrier when (a) f collapses two of its vertices, (b) another simplex has
/// the same image and f is injective on both, or (c) its image lies inside
/// the image of a collapsed simplex. A is the face closure of all carriers.
inline SelfIntersectionData self_intersection(const SimplicialMap& f) {
  require_valid(f);
  const auto& k = *f.domain();
  std::vector<Simplex> carriers;
  std::map<Simplex, std::vector<Simplex>> injective_by_image;
  std::vector<Simplex> collapsed_images;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d)) {
      Simplex img = f.image(s);
      if (img.size() < s.size()) {
        carriers.push_back(s);  // (a)
        collapsed_images.push_back(std::move(img));
      } else {
        injective_by_image[std::move(img)].push_back(s);
      }
    }
  const Subcomplex under_collapse = Subcomplex::closure_of(f.codomain(), collapsed_images);
  for (const auto& [img, sources] : injective_by_image) {
    if (sources.size() > 1 || under_collapse.contains(img))  // (b), (c)
      carriers.insert(carriers.end(), sources.begin(), sources.end());
  }
  SelfIntersectionData out{Subcomplex::closure_of(f.domain(), carriers), Subcomplex::empty(f.codomain()), false};
  out.b = image_of(f, out.a);
  out.is_embedding = out.a.is_empty();
  return out;
}

/// The map Sd(f): Sd(X) -> Sd(Y) sending the barycenter of s to the barycenter of f(s).
inline SimplicialMap subdivide(const SimplicialMap& f, const Subdivision& sd_domain, const Subdivision& sd_codomain) {
  require_valid(f);
  const auto& dom = *f.domain();
  const auto& cod = *f.codomain();
  std::vector<Vertex> vm(sd_domain.complex->vertex_count());
  for (std::size_t v = 0; v < vm.size(); ++v) {
    const auto [d, i] = sd_domain.origin[v];
    const Simplex img = f.image(dom.simplex(d, i));
    vm[v] = sd_codomain.barycenter[static_cast<std::size_t>(simplex_dim(img))][*cod.index_of(img)];
  }
  return SimplicialMap("Sd(" + f.name() + ")", sd_domain.complex, sd_codomain.complex, std::move(vm));
}

}  // namespace sepcheck
