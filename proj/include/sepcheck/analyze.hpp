#pragma once

// One full analysis of a simplicial map: certificates, self-intersection,
// the separation formula against the oracle, the cross-checks, and the
// obstruction pipeline, collected into a single JSON report with an exit code.

#include <string>

#include "sepcheck/io.hpp"
#include "sepcheck/manifold.hpp"
#include "sepcheck/obstruction.hpp"
#include "sepcheck/separation.hpp"

namespace sepcheck {

enum ExitCode : int { exit_ok = 0, exit_refused = 1, exit_assertion = 2, exit_input = 3 };

struct AnalysisResult {
  Json report;
  int exit_code = exit_ok;
  /// Human-readable reason for a nonzero exit code.
  std::string message;
};

/// Sd^k(f) on the k-fold subdivisions of domain and codomain.
inline SimplicialMap subdivide_times(SimplicialMap f, int times) {
  for (int i = 0; i < times; ++i) {
    const Subdivision sd_dom = barycentric_subdivide(*f.domain());
    const Subdivision sd_cod =
        f.domain() == f.codomain() ? sd_dom : barycentric_subdivide(*f.codomain());
    f = subdivide(f, sd_dom, sd_cod);
  }
  return f;
}

namespace detail {

inline Json maximal_labels(const Subcomplex& s) {
  Json out = Json::array();
  if (s.is_empty()) return out;
  for (const auto& m : sorted_maximal_labels(*s.to_complex("sub"))) out.push_back(m);
  return out;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw AssertionFailure(what);
}

inline void run_codimension_one(const SimplicialMap& f, Json& report, AnalysisResult& result) {
  const int m = require_codimension_one(f);
  const SelfIntersectionData si = self_intersection(f);
  const Subcomplex img = image_subcomplex(f);
  Json& self = report["self_intersection"];
  self["is_embedding"] = si.is_embedding;
  self["dim_A"] = si.a.dimension();
  self["A"] = maximal_labels(si.a);
  self["B"] = maximal_labels(si.b);

  const Thm32Hypotheses hyp = check_hypotheses_thm32(f);
  const std::size_t oracle = complement_components_oracle(*f.codomain(), img);
  std::string refusal;
  if (hyp.all()) {
    const SeparationReport sep = beta0_formula_thm32(f);
    report["separation"] = separation_to_json(sep);
    require(sep.agreement, "separation formula " + std::to_string(sep.beta0_formula) + " disagrees with oracle " +
                               std::to_string(sep.beta0_oracle));
  } else {
    report["separation"] = refused_separation_to_json(hyp, oracle);
    refusal = hyp.first_failure();
  }

  Json& checks = report["checks"];
  checks["poincare_duality_domain"] = poincare_duality_check(f.domain(), m);
  checks["poincare_duality_codomain"] = poincare_duality_check(f.codomain(), m + 1);
  require(checks["poincare_duality_domain"].get<bool>() && checks["poincare_duality_codomain"].get<bool>(),
          "cap with the fundamental class is not an isomorphism");
  checks["les_pair_image"] = les_pair_check(*f.codomain(), img);
  require(checks["les_pair_image"].get<bool>(), "long exact sequence of (Y, f(X)) is not exact");
  if (hyp.h1_Y_zero) {
    const ComponentIdentityCheck eq1 = eq1_check(f);
    checks["component_identity"] = {{"beta0_oracle", eq1.beta0_oracle},
                                    {"dim_top_cohomology_image", eq1.dim_top_cohomology_image},
                                    {"holds", eq1.holds}};
    require(eq1.holds, "beta0 != 1 + dim H^n(f(X))");
    const Prop34Check p = prop34_check(f);
    checks["low_dimensional_A"] = {{"dimA", p.dimA}, {"applies", p.applies}, {"disconnected", p.disconnected}};
    if (si.is_embedding) {
      checks["jordan_brouwer"] = jordan_brouwer_check(f);
      require(checks["jordan_brouwer"].get<bool>(), "embedding does not cut the codomain in two");
    } else {
      checks["jordan_brouwer"] = nullptr;
    }
  } else {
    checks["component_identity"] = nullptr;
    checks["low_dimensional_A"] = nullptr;
    checks["jordan_brouwer"] = nullptr;
  }

  const ObstructionReport ob = evaluate_obstruction(f);
  if (si.is_embedding) require(ob.theta_is_zero, "theta(f) != 0 for an embedding");
  checks["mv_sequence"] = {{"exact", ob.sequence.exact},
                           {"fbar_surjective", ob.sequence.fbar_surjective},
                           {"ker_alpha_dim", ob.sequence.ker_alpha_dim}};
  report["obstruction"] = obstruction_to_json(ob);
  report["final_theorem"] = {{"h1_N_zero", ob.h1_N_zero},
                             {"A_proper", ob.A_proper},
                             {"exists_nonzero_mu", ob.exists_nonzero_mu},
                             {"w1f_zero", ob.w1f_is_zero},
                             {"refused", ob.refused_hypothesis.empty() ? Json(nullptr) : Json(ob.refused_hypothesis)}};

  if (!refusal.empty()) {
    result.exit_code = exit_refused;
    result.message = "separation formula refused: hypothesis " + refusal + " fails";
    report["status"]["condition"] = refusal;
  }
}

}  // namespace detail

/// Analyzes f after `subdivisions` barycentric subdivisions. Never throws for
/// mathematical reasons: every failure is reflected in the exit code and the
/// "status" section of the report.
inline AnalysisResult analyze(const SimplicialMap& input, int subdivisions = 0) {
  AnalysisResult result;
  Json& report = result.report;
  report["status"] = {{"exit_code", 0}, {"outcome", "ok"}, {"condition", nullptr}, {"message", nullptr}};
  try {
    if (subdivisions < 0) throw InputError("subdivision count must be nonnegative");
    const SimplicialMap f = subdivide_times(input, subdivisions);
    require_valid(f);
    const int m = f.domain()->dimension();
    const int n = f.codomain()->dimension();
    report["instance"] = {{"map", input.name()},
                          {"domain", f.domain()->name()},
                          {"codomain", f.codomain()->name()},
                          {"subdivisions", subdivisions},
                          {"dim_domain", m},
                          {"dim_codomain", n}};
    const ManifoldCertificate cd = manifold_certificate(*f.domain(), m);
    const ManifoldCertificate cc = manifold_certificate(*f.codomain(), n);
    report["certificates"] = {{"domain", certificate_to_json(*f.domain(), m, cd)},
                              {"codomain", certificate_to_json(*f.codomain(), n, cc)}};
    if (!cd.is_closed_z2_homology_n_manifold) throw PreconditionError("domain_manifold", "domain is not a closed manifold");
    if (!cc.is_closed_z2_homology_n_manifold)
      throw PreconditionError("codomain_manifold", "codomain is not a closed manifold");
    if (n != m + 1) {
      report["obstruction"] = {{"w1f_is_zero", is_zero_class(w1_of_map(f))}};
      throw PreconditionError("codimension_one", "codomain dimension " + std::to_string(n) +
                                                     " is not domain dimension " + std::to_string(m) + " + 1");
    }
    detail::run_codimension_one(f, report, result);
    report["status"]["outcome"] = result.exit_code == exit_ok ? "ok" : "refused";
  } catch (const PreconditionError& e) {
    result.exit_code = exit_refused;
    result.message = e.what();
    report["status"]["outcome"] = "precondition";
    report["status"]["condition"] = e.condition();
  } catch (const HypothesisError& e) {
    result.exit_code = exit_refused;
    result.message = e.what();
    report["status"]["outcome"] = "refused";
    report["status"]["condition"] = e.hypothesis();
  } catch (const AssertionFailure& e) {
    result.exit_code = exit_assertion;
    result.message = e.what();
    report["status"]["outcome"] = "assertion";
  } catch (const InputError& e) {
    result.exit_code = exit_input;
    result.message = e.what();
    report["status"]["outcome"] = "input";
  }
  report["status"]["exit_code"] = result.exit_code;
  if (!result.message.empty()) report["status"]["message"] = result.message;
  // keep the status section last
  Json status = report["status"];
  report.erase("status");
  report["status"] = std::move(status);
  return result;
}

/// Looks up each expected key in the separation and obstruction sections of a
/// report; returns the first mismatch as "key: expected X, got Y", or an
/// empty string when everything matches.
inline std::string first_expectation_mismatch(const Json& report, const Json& expected) {
  for (const auto& [key, want] : expected.items()) {
    const Json* got = nullptr;
    for (const char* section : {"separation", "obstruction"}) {
      auto s = report.find(section);
      if (s != report.end() && s->is_object() && s->contains(key)) {
        got = &(*s)[key];
        break;
      }
    }
    if (!got) return key + ": expected " + want.dump() + ", missing from report";
    if (*got != want) return key + ": expected " + want.dump() + ", got " + got->dump();
  }
  return {};
}

}  // namespace sepcheck
