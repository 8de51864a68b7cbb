#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "ordertop/analyze.hpp"
#include "ordertop/enumerate.hpp"
#include "ordertop/errors.hpp"
#include "ordertop/io.hpp"
#include "ordertop/iso.hpp"
#include "ordertop/johnstone.hpp"
#include "ordertop/kou.hpp"
#include "ordertop/poset.hpp"
#include "ordertop/sobriety.hpp"
#include "ordertop/space.hpp"
#include "ordertop/verify.hpp"

namespace py = pybind11;
using namespace ordertop;

namespace {

std::string verify_report_json(const std::string& suite, std::size_t n,
                               std::size_t jobs) {
  auto report = verify(suite, n, jobs);
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  doc["n"] = report.n;
  doc["checked"] = report.checked;
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"canonical", f.canonical}, {"assertion", f.assertion}});
  doc["failures"] = failures;
  doc["notes"] = report.notes;
  doc["elapsed_ms"] = report.elapsed_ms;
  return doc.dump();
}

std::string sample_report_json(const std::string& family, std::uint64_t seed,
                               std::uint64_t trials) {
  AxiomSampleReport r = family == "johnstone"
                            ? johnstone_axioms_sample(seed, trials)
                            : kou_axioms_sample(seed, trials);
  nlohmann::ordered_json doc;
  doc["family"] = family;
  doc["seed"] = seed;
  doc["trials"] = r.trials;
  doc["violations"] = r.violations;
  doc["passed"] = r.passed();
  return doc.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite posets, Scott topologies and closed-set lattices";

  py::register_exception<Error>(m, "OrderError");

  py::class_<FinitePoset>(m, "FinitePoset")
      .def_static("from_covers", &FinitePoset::from_covers, py::arg("labels"),
                  py::arg("covers"),
                  "reflexive-transitive closure of an edge list")
      .def_static("chain", &FinitePoset::chain, py::arg("n"))
      .def_static("antichain", &FinitePoset::antichain, py::arg("n"))
      .def("__len__", &FinitePoset::size)
      .def_property_readonly("labels", &FinitePoset::labels)
      .def("leq",
           [](const FinitePoset& p, const std::string& a, const std::string& b) {
             return p.leq(p.index_of(a), p.index_of(b));
           },
           py::arg("a"), py::arg("b"))
      .def("closed_set_count",
           [](const FinitePoset& p) { return p.lower_sets().size(); })
      .def("with_top", &FinitePoset::with_top, py::arg("label") = "")
      .def("canonical", [](const FinitePoset& p) { return canonical_hex(p); })
      .def("to_json", [](const FinitePoset& p) { return poset_to_json_text(p); })
      .def("to_dot",
           [](const FinitePoset& p) { return poset_to_dot(p, "poset"); })
      .def("__repr__", [](const FinitePoset& p) {
        return "<FinitePoset of " + std::to_string(p.size()) + " elements>";
      });

  m.def("poset_from_json", &poset_from_json_text, py::arg("text"));
  m.def("isomorphic",
        [](const FinitePoset& a, const FinitePoset& b) {
          return poset_isomorphism(a, b).has_value();
        },
        py::arg("a"), py::arg("b"));

  m.def("analyze_json",
        [](const FinitePoset& p, bool canonical) {
          AnalyzeOptions opt;
          opt.canonical = canonical;
          return analyze_to_json_text(p, opt);
        },
        py::arg("poset"), py::arg("canonical") = false,
        "classification record as a JSON string");

  m.def("sobrify_json",
        [](const FinitePoset& p) {
          FiniteSpace base = FiniteSpace::scott_space(p);
          return sobrify_to_json_text(base, hull_kernel_sobrification(base).space);
        },
        py::arg("poset"),
        "hull-kernel sobrification of the Scott space, as a JSON string");

  m.def("enumerate_posets", &enumerate_posets, py::arg("n"),
        "all posets on n elements, one per isomorphism class");
  m.def("verification_suites",
        [] { return verification_suites(); });
  m.def("verify_json", &verify_report_json, py::arg("suite"), py::arg("n"),
        py::arg("jobs") = 1,
        "run a verification suite over all classes of size <= n");

  m.def("johnstone_truncate", &johnstone_truncate, py::arg("m"), py::arg("n"),
        "finite fragment of the two-column dcpo");
  m.def("sample_json", &sample_report_json, py::arg("family"), py::arg("seed"),
        py::arg("trials"),
        "order-axiom sampling report for 'johnstone' or 'kou'");
}
