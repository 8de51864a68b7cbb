#include <cstdint>
#include <iostream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "ordertop/analyze.hpp"
#include "ordertop/enumerate.hpp"
#include "ordertop/errors.hpp"
#include "ordertop/family.hpp"
#include "ordertop/io.hpp"
#include "ordertop/johnstone.hpp"
#include "ordertop/kou.hpp"
#include "ordertop/lattice.hpp"
#include "ordertop/sobriety.hpp"
#include "ordertop/verify.hpp"

namespace {

using ordertop::FinitePoset;
using ordertop::FiniteSpace;
using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

FinitePoset load_poset(const std::string& path) {
  auto parsed = ordertop::input_from_json_text(ordertop::read_text_file(path));
  if (auto* p = std::get_if<FinitePoset>(&parsed)) return *p;
  return std::get<FiniteSpace>(parsed).specialization();
}

int run_analyze(const std::string& path, bool canonical, bool verbose) {
  FinitePoset p = load_poset(path);
  ordertop::AnalyzeOptions opt;
  opt.canonical = canonical;
  std::cout << analyze_to_json_text(p, opt);
  if (verbose) {
    std::cerr << "analyze: " << p.size() << " elements, "
              << p.lower_sets().size() << " closed sets\n";
  }
  return kOk;
}

int run_enumerate(std::size_t n, const std::string& suite, std::size_t jobs,
                  const std::string& json_path) {
  ordered_json doc;
  bool failed = false;
  if (suite.empty()) {
    auto reps = ordertop::enumerate_posets(n);
    doc["n"] = n;
    doc["classes"] = reps.size();
  } else {
    auto report = ordertop::verify(suite, n, jobs);
    doc["suite"] = report.suite;
    doc["n"] = report.n;
    doc["checked"] = report.checked;
    ordered_json failures = ordered_json::array();
    for (const auto& f : report.failures) {
      failures.push_back({{"canonical", f.canonical}, {"assertion", f.assertion}});
    }
    doc["failures"] = failures;
    doc["elapsed_ms"] = report.elapsed_ms;
    failed = !report.passed();
  }
  std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!json_path.empty()) ordertop::write_text_file(json_path, text);
  return failed ? kVerificationFailure : kOk;
}

int run_sobrify(const std::string& path) {
  auto parsed = ordertop::input_from_json_text(ordertop::read_text_file(path));
  FiniteSpace base = std::holds_alternative<FinitePoset>(parsed)
                         ? FiniteSpace::scott_space(std::get<FinitePoset>(parsed))
                         : std::get<FiniteSpace>(parsed);
  auto sob = ordertop::hull_kernel_sobrification(base);
  std::cout << ordertop::sobrify_to_json_text(base, sob.space);
  return kOk;
}

int run_truncate(std::uint64_t m, std::uint64_t n, const std::string& out) {
  FinitePoset t = ordertop::johnstone_truncate(m, n);
  std::string text = ordertop::poset_to_json_text(t);
  ordertop::write_text_file(out, text);
  std::cout << text;
  return kOk;
}

int run_sample(const std::string& family, std::uint64_t trials,
               std::uint64_t seed) {
  ordertop::AxiomSampleReport report =
      family == "johnstone" ? ordertop::johnstone_axioms_sample(seed, trials)
                            : ordertop::kou_axioms_sample(seed, trials);
  ordered_json doc;
  doc["family"] = family;
  doc["seed"] = seed;
  doc["trials"] = report.trials;
  doc["violations"] = report.violations;
  doc["passed"] = report.passed();
  std::cout << doc.dump(2) + "\n";
  return report.passed() ? kOk : kVerificationFailure;
}

int run_export(const std::string& path, const std::string& target) {
  FinitePoset p = load_poset(path);
  if (target == "poset") {
    std::cout << ordertop::poset_to_dot(p, "poset");
  } else if (target == "irr") {
    auto irr = ordertop::irr_structure(FiniteSpace::scott_space(p));
    std::cout << ordertop::poset_to_dot(irr.inclusion, "irr");
  } else {
    ordertop::SetFamily fam(p.size(), p.lower_sets());
    auto lattice = ordertop::AbstractLattice::from_family(fam);
    std::cout << ordertop::poset_to_dot(lattice.as_poset(), "lattice");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite poset and Scott-closed-set lattice toolkit"};
  app.require_subcommand(1);

  // analyze <file> [--canonical] [--verbose]
  std::string analyze_file;
  bool canonical = false, verbose = false;
  auto* analyze = app.add_subcommand("analyze", "classification report for a poset or space");
  analyze->add_option("file", analyze_file, "poset or space JSON")->required();
  analyze->add_flag("--canonical", canonical, "include the canonical form");
  analyze->add_flag("--verbose", verbose, "summary on standard error");

  // enumerate --n K [--verify SUITE] [--jobs J] [--json FILE]
  std::size_t enum_n = 0, jobs = 1;
  std::string suite, json_path;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate poset classes, optionally verifying a suite");
  enumerate->add_option("--n", enum_n, "number of elements")->required();
  enumerate->add_option("--verify", suite, "verification suite to run")
      ->check(CLI::IsMember(ordertop::verification_suites()));
  enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  enumerate->add_option("--json", json_path, "also write the report to this file");

  // sobrify <file>
  std::string sobrify_file;
  auto* sobrify = app.add_subcommand("sobrify", "hull-kernel sobrification of a poset or space");
  sobrify->add_option("file", sobrify_file, "poset or space JSON")->required();

  // truncate johnstone --m M --n N -o FILE
  std::string family;
  std::uint64_t trunc_m = 0, trunc_n = 0;
  std::string out_path;
  auto* truncate = app.add_subcommand("truncate", "finite truncation of a symbolic dcpo");
  truncate->add_option("family", family, "which dcpo (johnstone)")
      ->required()
      ->check(CLI::IsMember({"johnstone"}));
  truncate->add_option("--m", trunc_m, "columns")->required();
  truncate->add_option("--n", trunc_n, "finite levels per column")->required();
  truncate->add_option("-o,--output", out_path, "output poset JSON")->required();

  // sample {johnstone|kou} --trials T --seed S
  std::string sample_family;
  std::uint64_t trials = 0, seed = 0;
  auto* sample = app.add_subcommand("sample", "randomized order-axiom check of a symbolic dcpo");
  sample->add_option("family", sample_family, "johnstone or kou")
      ->required()
      ->check(CLI::IsMember({"johnstone", "kou"}));
  sample->add_option("--trials", trials, "number of sampled triples")->required();
  sample->add_option("--seed", seed, "PRNG seed")->required();

  // export <file> [--target poset|irr|lattice] --dot
  std::string export_file, target = "poset";
  bool dot = false;
  auto* exp = app.add_subcommand("export", "DOT rendering of the poset or a derived order");
  exp->add_option("file", export_file, "poset or space JSON")->required();
  exp->add_option("--target", target, "poset, irr or lattice")
      ->check(CLI::IsMember({"poset", "irr", "lattice"}));
  exp->add_flag("--dot", dot, "emit DOT (the only supported format)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*analyze) return run_analyze(analyze_file, canonical, verbose);
    if (*enumerate) return run_enumerate(enum_n, suite, jobs, json_path);
    if (*sobrify) return run_sobrify(sobrify_file);
    if (*truncate) return run_truncate(trunc_m, trunc_n, out_path);
    if (*sample) return run_sample(sample_family, trials, seed);
    if (*exp) {
      if (!dot) {
        std::cerr << "error: export requires --dot\n";
        return kUsageError;
      }
      return run_export(export_file, target);
    }
  } catch (const ordertop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
