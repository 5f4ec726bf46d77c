// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "sepcheck/analyze.hpp"
#include "sepcheck/catalog.hpp"
#include "sepcheck/gf2.hpp"
#include "sepcheck/obstruction.hpp"
#include "sepcheck/sampling.hpp"
#include "sepcheck/selftest.hpp"
#include "sepcheck/separation.hpp"
#include "sepcheck/standard.hpp"

using namespace sepcheck;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> e = catalog();
  return e;
}

const CatalogEntry& entry(const std::string& id) {
  const CatalogEntry* e = find_entry(entries(), id);
  expect(e != nullptr, "catalog entry " + id + " missing");
  return *e;
}

bool codimension_one(const CatalogEntry& e) {
  return e.map.codomain()->dimension() == e.map.domain()->dimension() + 1;
}

std::size_t oracle_count(const SimplicialMap& f) {
  return oracle::top_simplex_components(*f.codomain(), image_subcomplex(f));
}

int failures = 0;

void criterion(int number, const std::string& title, double budget_seconds, const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = body();
  } catch (const Failure& f) {
    ok = false;
    detail = f.what;
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && budget_seconds > 0 && seconds >= budget_seconds) {
    ok = false;
    detail += " (over the " + std::to_string(static_cast<int>(budget_seconds)) + " s budget)";
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", seconds);
  std::cout << "criterion " << number << " " << (ok ? "PASS" : "FAIL") << ": " << title << " [" << timing << "]";
  if (!detail.empty()) std::cout << " - " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

}  // namespace

int main() {
  criterion(1, "Jordan-Brouwer on both equators, 0 to 2 subdivisions", 5.0, [] {
    for (const char* id : {"equator_s1_s2", "equator_s2_s3"})
      for (int k = 0; k <= 2; ++k) {
        const SimplicialMap f = subdivide_times(entry(id).map, k);
        const SeparationReport r = beta0_formula_thm32(f);
        const std::string tag = std::string(id) + " Sd^" + std::to_string(k);
        expect(r.beta0_formula == 2, tag + ": formula " + std::to_string(r.beta0_formula));
        expect(r.beta0_oracle == 2, tag + ": oracle " + std::to_string(r.beta0_oracle));
        expect(jordan_brouwer_check(f), tag + ": Jordan-Brouwer check");
      }
    return std::string("6 instances");
  });

  criterion(2, "cokernel formula equals component count on every admissible instance", 30.0, [] {
    std::set<std::string> admissible;
    for (const auto& e : entries()) {
      if (!codimension_one(e)) continue;
      for (int k = 0; k <= 1; ++k) {
        const SimplicialMap f = subdivide_times(e.map, k);
        if (!check_hypotheses_thm32(f).all()) continue;
        const SeparationReport r = beta0_formula_thm32(f);
        expect(r.beta0_formula == r.beta0_oracle, e.id + ": formula " + std::to_string(r.beta0_formula) + " vs oracle " +
                                                      std::to_string(r.beta0_oracle));
        expect(r.beta0_oracle == oracle_count(f), e.id + ": complement oracles disagree");
        if (k == 0) admissible.insert(e.id);
      }
    }
    expect(admissible.count("figure_eight_s1_s2") && admissible.count("triple_bouquet_s1_s2"),
           "figure eight or triple bouquet not admissible");
    expect(beta0_formula_thm32(entry("figure_eight_s1_s2").map).beta0_formula == 3, "figure eight beta0 != 3");
    expect(beta0_formula_thm32(entry("triple_bouquet_s1_s2").map).beta0_formula == 4, "triple bouquet beta0 != 4");
    return std::to_string(admissible.size()) + " instances";
  });

  criterion(3, "components equal 1 + dim H^n of the image when H_1(Y) = 0", 0, [] {
    int n = 0;
    for (const auto& e : entries()) {
      if (!codimension_one(e) || betti(*e.map.codomain(), 1) != 0) continue;
      const ComponentIdentityCheck c = eq1_check(e.map);
      const ComplexPtr img = image_subcomplex(e.map).to_complex("img");
      const std::size_t top = oracle::naive_betti(*img, e.map.domain()->dimension());
      expect(c.holds && oracle_count(e.map) == 1 + top, e.id);
      ++n;
    }
    return std::to_string(n) + " instances";
  });

  criterion(4, "dim A < n forces at least two components", 0, [] {
    int n = 0;
    for (const auto& e : entries()) {
      if (!codimension_one(e) || betti(*e.map.codomain(), 1) != 0) continue;
      const Prop34Check p = prop34_check(e.map);
      if (!p.applies) continue;
      expect(oracle_count(e.map) >= 2, e.id);
      ++n;
    }
    expect(n > 0, "no instance with dim A < n");
    return std::to_string(n) + " instances";
  });

  criterion(5, "ladder lemma on 120 seeded random exact ladders", 5.0, [] {
    std::mt19937_64 rng(20250101);
    for (int t = 0; t < 120; ++t) {
      const LadderDiagram d = random_exact_ladder(rng);
      const LadderCheck c = lemma31_check(d);
      expect(c.commutes && c.rows_exact, "ladder " + std::to_string(t) + " is not a valid input");
      const std::size_t ker_h = d.h.cols() - oracle::naive_rank(d.h);
      const BitMatrix block = BitMatrix::hstack(d.f, d.bottom_lambda);
      const std::size_t coker = block.rows() - oracle::naive_rank(block);
      expect(c.ker_h_dim == c.coker_fplus_lambda_dim, "ladder " + std::to_string(t) + ": dimensions differ");
      expect(c.ker_h_dim == ker_h && c.coker_fplus_lambda_dim == coker, "ladder " + std::to_string(t) + ": rank oracle");
    }
    return std::string("120 of 120");
  });

  criterion(6, "Poincare, Alexander and cup/cap adjunction", 0, [] {
    const std::vector<std::pair<ComplexPtr, int>> ms{{standard::hexagon(), 1},
                                                     {standard::octahedron(), 2},
                                                     {standard::csaszar_torus(), 2},
                                                     {standard::cross_polytope_s3(), 3},
                                                     {standard::rp2_six(), 2}};
    for (const auto& [k, n] : ms) expect(poincare_duality_check(k, n), "Poincare duality on " + k->name());

    const ComplexPtr oct = standard::octahedron();
    const ComplexPtr s3 = standard::cross_polytope_s3();
    const ComplexPtr t2 = standard::csaszar_torus();
    const std::vector<std::pair<ComplexPtr, Subcomplex>> pairs{
        {oct, Subcomplex::from_labels(oct, {{"x+"}})},
        {oct, Subcomplex::from_labels(oct, {{"x+", "y+"}, {"y+", "x-"}, {"x-", "y-"}, {"y-", "x+"}})},
        {oct, image_subcomplex(entry("figure_eight_s1_s2").map)},
        {oct, Subcomplex::from_labels(oct, {{"x+", "y+", "z+"}})},
        {s3, image_subcomplex(entry("equator_s2_s3").map)},
        {s3, Subcomplex::from_labels(s3, {{"w+", "x+"}, {"y-", "z-"}})},
        {t2, image_subcomplex(entry("essential_circle_t2").map)}};
    for (const auto& [k, b] : pairs) expect(alexander_duality_check(k, k->dimension(), b), "Alexander duality on " + k->name());

    std::mt19937_64 rng(20250101);
    int triples = 0;
    while (triples < 60)
      for (const auto& [k, n] : ms)
        for (int p = 0; p <= n; ++p)
          for (int q = 0; p + q <= n; ++q) {
            const CohomologyClass x = sample::cochain(k, p, rng);
            const CohomologyClass y = sample::cochain(k, q, rng);
            const HomologyClass c = sample::chain(k, p + q, rng);
            expect(evaluate(cup(x, y), c) == evaluate(x, cap(y, c)), "adjunction on " + k->name());
            ++triples;
          }
    return "5 manifolds, " + std::to_string(pairs.size()) + " Alexander pairs, " + std::to_string(triples) + " triples";
  });

  criterion(7, "obstruction pipeline and w1", 0, [] {
    int maps = 0;
    for (const auto& e : entries()) {
      if (!codimension_one(e)) continue;
      const HomologyClass th = theta(e.map);
      if (self_intersection(e.map).is_embedding) expect(is_zero_class(th), e.id + ": theta != 0 on an embedding");
      expect(theta_pushforward_check(e.map, th), e.id + ": f_* theta != 0");
      mu_solve(e.map, th);
      ++maps;
    }
    std::set<const SimplicialComplex*> seen;
    int manifolds = 0;
    for (const auto& e : entries())
      for (const auto& k : e.complexes) {
        if (!seen.insert(k.get()).second) continue;
        const bool zero = is_zero_class(w1(k, k->dimension()));
        expect(zero == oracle::orientable(*k), "w1 vs orientability on " + k->name());
        ++manifolds;
      }
    const ComplexPtr rp2 = standard::rp2_six();
    expect(!is_zero_class(w1(rp2, 2)), "w1(RP2) = 0");
    const CohomologyBasis h1 = cohomology_basis(chain_complex(*rp2), 1);
    expect(h1.dim() == 1, "H^1(RP2) is not one-dimensional");
    expect(!is_zero_class(sq1(CohomologyClass{rp2, 1, h1.representatives().vectors[0]})), "Sq1 of the RP2 generator is 0");
    return std::to_string(maps) + " maps, " + std::to_string(manifolds) + " manifolds";
  });

  criterion(8, "three or more components under the final hypotheses", 0, [] {
    const ObstructionReport fe = final_theorem_check(entry("figure_eight_s1_s2").map);
    expect(fe.beta0_oracle == 3 && oracle_count(entry("figure_eight_s1_s2").map) == 3, "figure eight count");
    const ObstructionReport tb = final_theorem_check(entry("triple_bouquet_s1_s2").map);
    expect(tb.beta0_oracle == 4 && oracle_count(entry("triple_bouquet_s1_s2").map) == 4, "triple bouquet count");
    const ObstructionReport eq = evaluate_obstruction(entry("equator_s1_s2").map);
    expect(!eq.predicate_thm_final && eq.refused_hypothesis == "exists_nonzero_mu", "equator not refused at mu");
    expect(eq.beta0_oracle == 2 && oracle_count(entry("equator_s1_s2").map) == 2, "equator count");
    return std::string("3 and 4; control refused with 2");
  });

  criterion(9, "selftest output is byte-identical across two runs", 120.0, [] {
    std::ostringstream a, b;
    const int ra = run_selftest(a);
    const int rb = run_selftest(b);
    expect(ra == 0 && rb == 0, "selftest failed:\n" + a.str());
    expect(a.str() == b.str(), "outputs differ");
    return std::to_string(a.str().size()) + " bytes each";
  });

  return failures == 0 ? 0 : 1;
}
