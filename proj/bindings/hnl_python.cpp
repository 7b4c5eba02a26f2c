// Python bindings: a thin JSON-string facade over the C++ core.  Every
// function takes/returns JSON text so the Python side stays schema-driven
// and free of mirrored type definitions.

#include "hnl/certify.hpp"
#include "hnl/families.hpp"
#include "hnl/io.hpp"
#include "hnl/measurement.hpp"
#include "hnl/pipelines.hpp"
#include "hnl/protocols.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

namespace py = pybind11;
using namespace hnl;

namespace {

std::string construct(const std::string& family_id) {
    return state_set_to_json(construct_family(FamilyId::parse(family_id))).dump();
}

std::string certify(const std::string& check, const std::string& state_set_json,
                    const std::string& party, const std::vector<std::string>& witness) {
    auto set = state_set_from_json(json::parse(state_set_json));
    if (check == "orthogonality") return to_json(check_orthogonality(set)).dump();
    if (check == "irredundancy") return to_json(certify_irredundancy(set)).dump();
    if (check == "irreducibility") return to_json(certify_irreducibility(set)).dump();
    if (check == "indistinguishability")
        return to_json(certify_indistinguishability(set, witness)).dump();
    if (check == "oplm-dim")
        return to_json(oplm_space(set, set.space.index_of(party), true)).dump();
    throw std::invalid_argument("unknown check: " + check);
}

std::string measure(const std::string& state_set_json, const std::string& literal) {
    auto set = state_set_from_json(json::parse(state_set_json));
    auto outs = measurement_outcomes(set, parse_measurement_literal(literal));
    json arr = json::array();
    for (const auto& o : outs)
        arr.push_back({{"outcome", o.outcome_id},
                       {"dropped", o.dropped},
                       {"states", state_set_to_json(o.states)}});
    return arr.dump();
}

std::string classify(const std::string& state_set_json,
                     const std::vector<std::string>& measurement_literals,
                     const std::string& protocol_json,
                     const std::vector<std::vector<std::string>>& witnesses) {
    auto set = state_set_from_json(json::parse(state_set_json));
    std::vector<LocalMeasurement> ms;
    for (const auto& lit : measurement_literals) ms.push_back(parse_measurement_literal(lit));
    auto tree = protocol_from_json(json::parse(protocol_json), set.space);
    return to_json(classify_hidden_nonlocality(set, ms, tree, witnesses)).dump();
}

std::string reproduce(const std::string& id) {
    auto rep = run_pipeline(id);
    json j = to_json(rep.classification);
    j["pipeline"] = rep.spec.id;
    j["matches_expected"] = rep.matches_expected;
    return j.dump();
}

std::string builtin_protocol_json(const std::string& family_id) {
    return protocol_to_json(builtin_protocol(FamilyId::parse(family_id))).dump();
}

std::string render(const std::string& state_set_json, const std::string& format) {
    auto set = state_set_from_json(json::parse(state_set_json));
    if (format == "svg") return render_svg(set);
    if (format == "text") return render_text(set);
    throw std::invalid_argument("unknown format: " + format);
}

}  // namespace

PYBIND11_MODULE(_hnl, m) {
    m.doc() = "certification toolkit for locally hidden nonlocality without entanglement";
    m.def("construct", &construct, py::arg("family_id"),
          "Build a named product-state family; returns a state-set JSON document.");
    m.def("certify", &certify, py::arg("check"), py::arg("state_set_json"),
          py::arg("party") = "", py::arg("witness") = std::vector<std::string>{},
          "Run one certification check; returns the certificate as JSON.");
    m.def("measure", &measure, py::arg("state_set_json"), py::arg("literal"),
          "Apply a diagonal measurement literal; returns the outcome list as JSON.");
    m.def("classify", &classify, py::arg("state_set_json"), py::arg("measurement_literals"),
          py::arg("protocol_json"), py::arg("witnesses"),
          "Full classification pipeline; returns the report as JSON.");
    m.def("reproduce", &reproduce, py::arg("pipeline_id"),
          "Run a shipped end-to-end pipeline (example1..example4, multiparty).");
    m.def("builtin_protocol", &builtin_protocol_json, py::arg("family_id"),
          "Serialized builtin discrimination protocol for a family.");
    m.def("render", &render, py::arg("state_set_json"), py::arg("format"),
          "Grid rendering of a bipartite state set (format: 'svg' or 'text').");
}
