#pragma once

// The `sepcheck` command line: catalog, analyze, oracle, duality-check and
// selftest. Exit codes: 0 success, 1 refusal (a hypothesis or precondition is
// false), 2 a hard assertion failed, 3 malformed input or usage.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sepcheck/analyze.hpp"
#include "sepcheck/catalog.hpp"
#include "sepcheck/io.hpp"
#include "sepcheck/selftest.hpp"

namespace sepcheck {

namespace cli_detail {

struct Inputs {
  std::vector<std::string> complex_files;
  std::string map_file;
  std::string entry;
  std::string json_out;
  int subdivide = 0;
};

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot write");
  out << text;
  if (!out) throw InputError(path + ": write failed");
}

/// Prints the document to `out`, or writes it to the --json path and prints
/// nothing.
inline void emit(const Json& doc, const Inputs& in, std::ostream& out) {
  if (in.json_out.empty())
    out << to_text(doc);
  else
    write_text(in.json_out, to_text(doc));
}

inline std::vector<ComplexPtr> load_complexes(const std::vector<std::string>& files) {
  std::vector<ComplexPtr> out;
  for (const auto& f : files) out.push_back(complex_from_json(read_json_file(f)));
  return out;
}

/// The map named by --entry, or loaded from --map and --complex.
inline SimplicialMap load_map(const Inputs& in) {
  if (!in.entry.empty()) {
    if (!in.map_file.empty() || !in.complex_files.empty())
      throw InputError("--entry cannot be combined with --map or --complex");
    const auto entries = catalog();
    const CatalogEntry* e = find_entry(entries, in.entry);
    if (!e) throw InputError("no catalog entry '" + in.entry + "'");
    return e->map;
  }
  if (in.map_file.empty()) throw InputError("a map is required: use --map FILE with --complex FILE, or --entry ID");
  return map_from_json(read_json_file(in.map_file), load_complexes(in.complex_files));
}

inline int run_catalog(const std::string& export_dir, const Inputs& in, std::ostream& out) {
  const auto entries = catalog();
  Json doc = Json::array();
  for (const auto& e : entries) {
    Json item;
    item["id"] = e.id;
    item["summary"] = e.summary;
    item["domain"] = e.map.domain()->name();
    item["codomain"] = e.map.codomain()->name();
    item["expected"] = e.expected;
    item["expected_exit"] = e.expected_exit;
    doc.push_back(std::move(item));
  }
  if (!export_dir.empty()) {
    for (const auto& e : entries) {
      const std::filesystem::path dir = std::filesystem::path(export_dir) / e.id;
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      if (ec) throw InputError(dir.string() + ": " + ec.message());
      for (const auto& k : e.complexes) write_text((dir / (k->name() + ".json")).string(), to_text(complex_to_json(*k)));
      write_text((dir / "map.json").string(), to_text(map_to_json(e.map)));
    }
  }
  if (!in.json_out.empty()) {
    write_text(in.json_out, to_text(doc));
  } else {
    for (const auto& e : entries) out << e.id << "  " << e.summary << "\n";
  }
  return exit_ok;
}

inline int run_analyze(const Inputs& in, std::ostream& out, std::ostream& err) {
  const AnalysisResult r = analyze(load_map(in), in.subdivide);
  emit(r.report, in, out);
  if (!r.message.empty()) err << "sepcheck: " << r.message << "\n";
  return r.exit_code;
}

inline int run_oracle(const Inputs& in, std::ostream& out) {
  const SimplicialMap f = subdivide_times(load_map(in), in.subdivide);
  const Subcomplex img = image_subcomplex(f);
  const SelfIntersectionData si = self_intersection(f);
  const ComplementaryComplex cc = complementary_complex(*f.codomain(), img);
  Json doc;
  doc["map"] = f.name();
  doc["codomain"] = f.codomain()->name();
  doc["beta0_oracle"] = complement_components_oracle(*f.codomain(), img);
  doc["beta0_complement_of_fA"] = complement_components_oracle(*f.codomain(), si.b);
  doc["complementary_complex"] = {{"vertices", cc.complement.count(0)},
                                  {"simplices", cc.complement.size()},
                                  {"components", connected_components(cc.complement)}};
  if (doc["complementary_complex"]["components"] != doc["beta0_oracle"])
    throw AssertionFailure("face-poset component count disagrees with the complementary complex");
  emit(doc, in, out);
  return exit_ok;
}

inline int run_duality_check(const Inputs& in, std::optional<int> dim, std::ostream& out) {
  if (in.complex_files.empty()) throw InputError("duality-check needs at least one --complex FILE");
  Json doc = Json::array();
  int code = exit_ok;
  for (ComplexPtr k : load_complexes(in.complex_files)) {
    for (int i = 0; i < in.subdivide; ++i) k = barycentric_subdivide(*k).complex;
    const int n = dim.value_or(k->dimension());
    const ManifoldCertificate cert = manifold_certificate(*k, n);
    Json item = certificate_to_json(*k, n, cert);
    Json betti_numbers = Json::array();
    for (int d = 0; d <= k->dimension(); ++d) betti_numbers.push_back(betti(*k, d));
    item["betti"] = std::move(betti_numbers);
    if (cert.is_closed_z2_homology_n_manifold) {
      const bool pd = poincare_duality_check(k, n);
      item["poincare_duality"] = pd;
      item["w1_is_zero"] = n >= 1 ? Json(is_zero_class(w1(k, n))) : Json(nullptr);
      if (!pd) code = exit_assertion;
    } else {
      item["poincare_duality"] = nullptr;
      item["w1_is_zero"] = nullptr;
      if (code == exit_ok) code = exit_refused;
    }
    doc.push_back(std::move(item));
  }
  emit(doc, in, out);
  return code;
}

/// argv-style view of a string vector, with a program name in front.
class Argv {
 public:
  explicit Argv(const std::vector<std::string>& args) : storage_{"sepcheck"} {
    storage_.insert(storage_.end(), args.begin(), args.end());
    for (auto& s : storage_) pointers_.push_back(s.c_str());
  }
  int argc() const { return static_cast<int>(pointers_.size()); }
  const char* const* argv() const { return pointers_.data(); }

 private:
  std::vector<std::string> storage_;
  std::vector<const char*> pointers_;
};

}  // namespace cli_detail

/// Runs the command line on `args` (without the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Codimension-one separation checks on triangulated manifolds"};
  app.require_subcommand(1);
  Inputs in;
  std::string export_dir;
  std::optional<int> dim;
  std::uint64_t seed = SelftestOptions{}.seed;

  auto add_inputs = [&](CLI::App* sub, bool with_map) {
    sub->add_option("--complex", in.complex_files, "Complex file (repeatable)");
    if (with_map) {
      sub->add_option("--map", in.map_file, "Map file referring to the complexes by name");
      sub->add_option("--entry", in.entry, "Use a catalog entry instead of files");
    }
    sub->add_option("--json", in.json_out, "Write the JSON document to this file");
    sub->add_option("--subdivide", in.subdivide, "Barycentric subdivisions applied first")->check(CLI::NonNegativeNumber);
  };

  CLI::App* cat = app.add_subcommand("catalog", "List the built-in instances");
  cat->add_option("--export", export_dir, "Write every entry's complex and map files under this directory");
  cat->add_option("--json", in.json_out, "Write the listing as JSON to this file");
  CLI::App* ana = app.add_subcommand("analyze", "Full report for one map");
  add_inputs(ana, true);
  CLI::App* ora = app.add_subcommand("oracle", "Count components of the complement of the image");
  add_inputs(ora, true);
  CLI::App* dua = app.add_subcommand("duality-check", "Certificate, Poincare duality and w1 for complexes");
  add_inputs(dua, false);
  dua->add_option("--dim", dim, "Manifold dimension (default: the complex dimension)");
  CLI::App* st = app.add_subcommand("selftest", "Run the invariant suite on the catalog");
  st->add_option("--seed", seed, "Seed for the randomized properties");

  const Argv argv(args);
  try {
    app.parse(argv.argc(), argv.argv());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*cat) return run_catalog(export_dir, in, out);
    if (*ana) return run_analyze(in, out, err);
    if (*ora) return run_oracle(in, out);
    if (*dua) return run_duality_check(in, dim, out);
    if (*st) {
      SelftestOptions opt;
      opt.seed = seed;
      return run_selftest(out, opt);
    }
  } catch (const InputError& e) {
    err << "sepcheck: input error: " << e.what() << "\n";
    return exit_input;
  } catch (const PreconditionError& e) {
    err << "sepcheck: precondition failed: " << e.what() << "\n";
    return exit_refused;
  } catch (const HypothesisError& e) {
    err << "sepcheck: " << e.what() << "\n";
    return exit_refused;
  } catch (const AssertionFailure& e) {
    err << "sepcheck: assertion failed: " << e.what() << "\n";
    return exit_assertion;
  }
  return exit_input;
}

}  // namespace sepcheck
