#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "geodual/geodual.hpp"
#include "geodual/oracle.hpp"

namespace py = pybind11;
using namespace geodual;

namespace {

using Labels = std::vector<std::string>;
using LabelFamily = std::vector<Labels>;
using Rule = std::pair<Labels, std::string>;

ElementSet to_set(const GroundSet& g, const Labels& labels) { return g.set_of(labels); }

SetFamily to_family(const GroundSet& g, const LabelFamily& sets) {
  SetFamily out;
  for (const auto& s : sets) out.push_back(to_set(g, s));
  return out;
}

LabelFamily to_labels(const GroundSet& g, const SetFamily& family) {
  LabelFamily out;
  for (const auto& s : family) out.push_back(g.label_list(s));
  return out;
}

ImplicationalBase make_base(const Labels& elements, const std::vector<Rule>& rules) {
  GroundSet g(elements);
  std::vector<Implication> imps;
  for (const auto& [premise, conclusion] : rules) imps.push_back({to_set(g, premise), g.at(conclusion)});
  return ImplicationalBase(std::move(g), std::move(imps));
}

std::vector<Rule> rules_of(const ImplicationalBase& base) {
  std::vector<Rule> out;
  for (const auto& imp : base.implications()) {
    out.emplace_back(base.ground().label_list(imp.premise), base.ground().label(imp.conclusion));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ranked convex geometries: meets, critical bases and duality checks.";

  auto error = py::register_exception<Error>(m, "GeodualError");
  auto input = py::register_exception<InputError>(m, "InputError", error.ptr());
  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<NotRankedError>(m, "NotRankedError", precondition.ptr());
  py::register_exception<NotGeometryError>(m, "NotGeometryError", precondition.ptr());
  py::register_exception<VerificationError>(m, "VerificationError", error.ptr());
  (void)input;

  py::class_<ImplicationalBase>(m, "ImplicationalBase")
      .def(py::init(&make_base), py::arg("elements"), py::arg("implications"),
           "Base over `elements`; implications are (premise labels, conclusion label) pairs.")
      .def_static(
          "parse", [](const std::string& text) { return io::parse_imp(text, "<python>"); }, py::arg("text"))
      .def_static(
          "read", [](const std::string& path) { return io::read_imp(path); }, py::arg("path"))
      .def_property_readonly("elements", [](const ImplicationalBase& b) { return b.ground().labels(); })
      .def_property_readonly("implications", &rules_of)
      .def_property_readonly("warnings", &ImplicationalBase::warnings)
      .def(
          "closure",
          [](const ImplicationalBase& b, const Labels& s) {
            return b.ground().label_list(b.closure(to_set(b.ground(), s)));
          },
          py::arg("labels"))
      .def("is_acyclic", [](const ImplicationalBase& b) { return is_acyclic(b); })
      .def("is_standard", [](const ImplicationalBase& b) { return is_standard(b); })
      .def("equivalent", [](const ImplicationalBase& a, const ImplicationalBase& b) { return equivalent(a, b); })
      .def("to_imp", [](const ImplicationalBase& b) { return io::to_imp(b); })
      .def("__len__", &ImplicationalBase::size)
      .def("__repr__", [](const ImplicationalBase& b) {
        std::ostringstream out;
        out << "<ImplicationalBase |X|=" << b.ground().size() << " |S|=" << b.size() << ">";
        return out.str();
      });

  m.def(
      "compute_rank",
      [](const ImplicationalBase& base) {
        const RankFunction rho = require_rank(base);
        py::dict out;
        for (Element e = 0; e < rho.size(); ++e) out[py::str(base.ground().label(e))] = rho[e];
        return out;
      },
      py::arg("base"), "Label -> rank; raises NotRankedError with the conflict description.");

  m.def(
      "meet_irreducibles",
      [](const ImplicationalBase& base) {
        std::vector<std::pair<std::string, Labels>> out;
        for (const auto& rec : meet_irreducibles(base).collect()) {
          out.emplace_back(base.ground().label(rec.element), base.ground().label_list(rec.meet));
        }
        return out;
      },
      py::arg("base"), "(j, meet) pairs for a ranked base, grouped by j in element order.");

  m.def(
      "critical_base", [](const ImplicationalBase& base) { return critical_base(base); }, py::arg("base"));

  m.def(
      "structure_identification",
      [](const Labels& elements, const LabelFamily& meets, bool verify, bool strict) {
        GroundSet g(elements);
        MeetFamily family(g, to_family(g, meets));
        SidOptions options;
        options.verify = verify;
        options.strict = strict;
        return structure_identification(family, options);
      },
      py::arg("elements"), py::arg("meets"), py::arg("verify") = false, py::arg("strict") = false,
      "Critical base of the ranked convex geometry with the given meets.");

  m.def(
      "check_dual",
      [](const ImplicationalBase& base, const LabelFamily& plus, const LabelFamily& minus) {
        return check_dual(base, Antichain(base, to_family(base.ground(), plus)),
                          Antichain(base, to_family(base.ground(), minus)));
      },
      py::arg("base"), py::arg("plus"), py::arg("minus"));

  m.def(
      "reduce_dual",
      [](const ImplicationalBase& base, const LabelFamily& plus, const LabelFamily& minus) {
        auto r = reduce_dual_to_cmi(base, Antichain(base, to_family(base.ground(), plus)),
                                    Antichain(base, to_family(base.ground(), minus)));
        const auto& g = r.omega.ground();
        return std::make_tuple(r.omega, to_labels(g, r.meets.meets()), g.label(r.z));
      },
      py::arg("base"), py::arg("plus"), py::arg("minus"), "(omega, meets, z) for the membership instance.");

  m.def(
      "cmi_check",
      [](const ImplicationalBase& base, const LabelFamily& meets) {
        return cmi_check(base, MeetFamily(base.ground(), to_family(base.ground(), meets)));
      },
      py::arg("base"), py::arg("meets"));

  m.def(
      "minimal_transversals",
      [](const Labels& vertices, const LabelFamily& edges) {
        GroundSet g(vertices);
        return to_labels(g, minimal_transversals(Hypergraph(g.full_set(), to_family(g, edges))).collect());
      },
      py::arg("vertices"), py::arg("edges"));

  m.def(
      "maximal_independent_sets",
      [](const Labels& vertices, const LabelFamily& edges) {
        GroundSet g(vertices);
        return to_labels(g, maximal_independent_sets(Hypergraph(g.full_set(), to_family(g, edges))).collect());
      },
      py::arg("vertices"), py::arg("edges"));

  auto oracle_mod = m.def_submodule("oracle", "Exhaustive reference computations (small inputs only).");
  oracle_mod.def(
      "closed_sets",
      [](const ImplicationalBase& base) { return to_labels(base.ground(), oracle::all_closed_sets(base)); },
      py::arg("base"));
  oracle_mod.def(
      "meets", [](const ImplicationalBase& base) { return to_labels(base.ground(), oracle::meets_brute(base)); },
      py::arg("base"));
  oracle_mod.def(
      "minimal_generators",
      [](const ImplicationalBase& base, const std::string& b) {
        return to_labels(base.ground(), oracle::mingens_brute(base, base.ground().at(b)));
      },
      py::arg("base"), py::arg("element"));
}
