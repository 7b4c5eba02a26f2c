// hnl — construct, certify, measure, classify, reproduce, render.
// Exit codes: 0 affirmative, 1 negative/Unknown, 2 operational error.

#include "hnl/certify.hpp"
#include "hnl/families.hpp"
#include "hnl/io.hpp"
#include "hnl/measurement.hpp"
#include "hnl/pipelines.hpp"
#include "hnl/protocols.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace hnl;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

void emit(const json& report, bool as_json, const std::string& human) {
    if (as_json) std::cout << report.dump(2) << "\n";
    else std::cout << human;
}

int cmd_construct(const std::string& family, const std::string& out) {
    StateSet set = construct_family(FamilyId::parse(family));
    write_state_set(out, set);
    std::cout << family << ": " << set.states.size() << " states -> " << out << "\n";
    return 0;
}

int cmd_certify(const std::string& check, const std::string& file, const std::string& party,
                const std::string& witness_csv, bool as_json) {
    StateSet set = read_state_set(file);
    if (check == "orthogonality") {
        auto rep = check_orthogonality(set);
        std::string human = rep.orthogonal
                                ? "orthogonal: yes\n"
                                : "orthogonal: NO (" + std::to_string(rep.violations.size()) +
                                      " violating pairs)\n";
        emit(to_json(rep), as_json, human);
        return rep.orthogonal ? 0 : 1;
    }
    if (check == "irredundancy") {
        auto cert = certify_irredundancy(set);
        std::ostringstream os;
        for (const auto& p : cert.per_party)
            os << "party " << p.party << ": clique " << p.clique_size << " vs threshold "
               << p.threshold << "\n";
        os << "verdict: " << to_json(cert)["verdict"].get<std::string>() << "\n";
        emit(to_json(cert), as_json, os.str());
        return cert.verdict == IrredundancyVerdict::Irredundant ? 0 : 1;
    }
    if (check == "irreducibility") {
        auto cert = certify_irreducibility(set);
        std::string v = to_json(cert)["verdict"].get<std::string>();
        std::string human = "verdict: " + v + " (" + cert.detail + ")\n";
        if (cert.verdict == TriState::Unknown) human += "note: Unknown is not a disproof\n";
        emit(to_json(cert), as_json, human);
        return cert.verdict == TriState::Certified ? 0 : 1;
    }
    if (check == "indistinguishability") {
        auto cert = certify_indistinguishability(
            set, witness_csv.empty() ? std::vector<std::string>{} : split_csv(witness_csv));
        std::string human = std::string("certified: ") + (cert.certified ? "yes" : "no") + " (" +
                            cert.detail + ")\n";
        if (!cert.certified) human += "note: Unknown is not a disproof\n";
        emit(to_json(cert), as_json, human);
        return cert.certified ? 0 : 1;
    }
    if (check == "oplm-dim") {
        if (party.empty()) throw std::invalid_argument("oplm-dim requires --party");
        auto basis = oplm_space(set, set.space.index_of(party), true);
        std::ostringstream os;
        os << "party " << party << ": OPLM space dimension " << basis.dimension
           << " (support dim " << basis.ambient_dim << ", sv gap " << basis.gap << ")\n";
        emit(to_json(basis), as_json, os.str());
        return basis.dimension == 1 ? 0 : 1;
    }
    throw std::invalid_argument("unknown check '" + check + "'");
}

int cmd_measure(const std::string& file, const std::string& literal, int outcome,
                const std::string& out) {
    StateSet set = read_state_set(file);
    auto outcomes = measurement_outcomes(set, parse_measurement_literal(literal));
    if (outcome < 1 || outcome > static_cast<int>(outcomes.size()))
        throw std::invalid_argument("outcome index out of range");
    const auto& o = outcomes[outcome - 1];
    write_state_set(out, o.states);
    std::cout << "outcome " << o.outcome_id << ": " << o.states.states.size() << " states";
    if (!o.dropped.empty()) std::cout << " (" << o.dropped.size() << " dropped)";
    std::cout << " -> " << out << "\n";
    return 0;
}

int cmd_classify(const std::string& file, const std::vector<std::string>& literals,
                 const std::string& protocol_file, const std::vector<std::string>& witness_csvs,
                 bool as_json) {
    StateSet set = read_state_set(file);
    std::vector<LocalMeasurement> ms;
    for (const auto& l : literals) ms.push_back(parse_measurement_literal(l));
    ProtocolTree protocol = read_protocol(protocol_file, set.space);
    std::vector<std::vector<std::string>> witnesses;
    for (const auto& w : witness_csvs) witnesses.push_back(split_csv(w));
    auto cls = classify_hidden_nonlocality(set, ms, protocol, witnesses);
    std::ostringstream os;
    os << "verdict: " << verdict_name(cls.verdict) << "\n";
    for (const auto& o : cls.outcomes)
        os << "  outcome " << o.outcome_id << ": " << o.cardinality << " states\n";
    for (const auto& r : cls.reasons) os << "  reason: " << r << "\n";
    if (cls.verdict == Verdict::NotEstablished)
        os << "note: NotEstablished/Unknown is not a disproof\n";
    emit(to_json(cls), as_json, os.str());
    return cls.verdict == Verdict::NotEstablished ? 1 : 0;
}

int cmd_reproduce(const std::string& id, bool as_json) {
    auto rep = run_pipeline(id);
    json j = {{"pipeline", id},
              {"expected", verdict_name(rep.spec.expected)},
              {"classification", to_json(rep.classification)},
              {"matches_expected", rep.matches_expected}};
    std::ostringstream os;
    os << id << ": verdict " << verdict_name(rep.classification.verdict) << " (expected "
       << verdict_name(rep.spec.expected) << ")"
       << (rep.matches_expected ? "" : "  MISMATCH") << "\n";
    for (const auto& o : rep.classification.outcomes)
        os << "  outcome " << o.outcome_id << ": " << o.cardinality << " states, witness size "
           << o.indistinguishability.witness.size() << ", indistinguishability "
           << (o.indistinguishability.certified ? "certified" : "not certified") << "\n";
    emit(j, as_json, os.str());
    return rep.matches_expected ? 0 : 1;
}

int cmd_render(const std::string& file, const std::string& out, const std::string& format) {
    StateSet set = read_state_set(file);
    std::string rendered;
    if (format == "svg") rendered = render_svg(set);
    else if (format == "text") rendered = render_text(set);
    else throw std::invalid_argument("format must be svg or text");
    std::ofstream o(out);
    if (!o) throw std::runtime_error("cannot write '" + out + "'");
    o << rendered;
    std::cout << "rendered " << set.states.size() << " states -> " << out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certification toolkit for local discrimination of product-state sets"};
    app.require_subcommand(1);

    std::string family, out_path, check, file, party, witness, literal, protocol_file, id;
    std::string format = "text";
    std::vector<std::string> literals, witness_csvs;
    int outcome = 1;
    bool as_json = false;

    auto* construct = app.add_subcommand("construct", "build a family and write it to a file");
    construct->add_option("family", family, "family id, e.g. type1:11")->required();
    construct->add_option("output", out_path, "output JSON path")->required();

    auto* certify = app.add_subcommand("certify", "run a certification check on a state-set file");
    certify->add_option("check", check,
                        "orthogonality|irredundancy|irreducibility|indistinguishability|oplm-dim")
        ->required();
    certify->add_option("file", file)->required();
    certify->add_option("--party", party, "party label (oplm-dim)");
    certify->add_option("--witness", witness, "comma-separated witness labels");
    certify->add_flag("--json", as_json, "machine-readable report");

    auto* measure = app.add_subcommand("measure", "apply one outcome of a diagonal measurement");
    measure->add_option("file", file)->required();
    measure->add_option("measurement", literal, "literal, e.g. B:0-4;5-10")->required();
    measure->add_option("outcome", outcome, "1-based outcome index")->required();
    measure->add_option("output", out_path)->required();

    auto* classify = app.add_subcommand("classify", "run the full hidden-nonlocality pipeline");
    classify->add_option("file", file)->required();
    classify->add_option("--measurement", literals, "measurement literal (repeatable)")->required();
    classify->add_option("--protocol", protocol_file, "protocol tree JSON")->required();
    classify->add_option("--witness", witness_csvs,
                         "per-outcome comma-separated witness labels (repeatable)");
    classify->add_flag("--json", as_json);

    auto* reproduce = app.add_subcommand("reproduce", "run a shipped pipeline");
    reproduce->add_option("id", id, "example1|example2|example3|example4|multiparty")->required();
    reproduce->add_flag("--json", as_json);

    auto* render = app.add_subcommand("render", "draw a bipartite set as a grid");
    render->add_option("file", file)->required();
    render->add_option("output", out_path)->required();
    render->add_option("--format", format, "svg|text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return cmd_construct(family, out_path);
        if (certify->parsed()) return cmd_certify(check, file, party, witness, as_json);
        if (measure->parsed()) return cmd_measure(file, literal, outcome, out_path);
        if (classify->parsed())
            return cmd_classify(file, literals, protocol_file, witness_csvs, as_json);
        if (reproduce->parsed()) return cmd_reproduce(id, as_json);
        if (render->parsed()) return cmd_render(file, out_path, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
