#include "hnl/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hnl {

json state_set_to_json(const StateSet& set) {
    json parties = json::array();
    for (const auto& p : set.space.parties)
        parties.push_back({{"label", p.label}, {"dim", p.dim}, {"prime_factors", p.prime_factors}});
    json states = json::array();
    for (const auto& s : set.states) {
        json kets = json::array();
        for (const auto& f : s.factors) kets.push_back(print_ket(f));
        states.push_back({{"label", s.label}, {"kets", kets}});
    }
    return {{"schema", 1},
            {"field", "cyclo-rational"},
            {"space", {{"parties", parties}}},
            {"states", states}};
}

StateSet state_set_from_json(const json& j) {
    if (j.value("schema", 0) != 1) throw std::invalid_argument("unsupported schema version");
    if (j.value("field", "") != "cyclo-rational")
        throw std::invalid_argument("unsupported coefficient field");
    StateSet set;
    for (const auto& p : j.at("space").at("parties")) {
        Party party;
        party.label = p.at("label").get<std::string>();
        party.dim = p.at("dim").get<int>();
        if (p.contains("prime_factors"))
            party.prime_factors = p.at("prime_factors").get<std::vector<int>>();
        else
            party.prime_factors = prime_factorization(party.dim);
        set.space.parties.push_back(std::move(party));
    }
    set.space.validate();
    for (const auto& s : j.at("states")) {
        ProductState st;
        st.label = s.at("label").get<std::string>();
        const auto& kets = s.at("kets");
        if (kets.size() != set.space.arity())
            throw std::invalid_argument("state '" + st.label + "': wrong factor count");
        for (std::size_t p = 0; p < kets.size(); ++p) {
            auto v = parse_ket(kets[p].get<std::string>(), set.space.parties[p].dim);
            v.party = set.space.parties[p].label;
            st.factors.push_back(std::move(v));
        }
        set.states.push_back(std::move(st));
    }
    set.validate();
    return set;
}

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

std::string subsets_literal(const std::string& party, const std::vector<std::vector<int>>& subsets) {
    std::string lit = LocalMeasurement{party, subsets}.to_literal();
    return lit.substr(lit.find(':') + 1);
}

}  // namespace

void write_state_set(const std::string& path, const StateSet& set) {
    write_json_file(path, state_set_to_json(set));
}

StateSet read_state_set(const std::string& path) {
    return state_set_from_json(read_json_file(path));
}

json protocol_to_json(const ProtocolTree& tree) {
    if (tree.kind == ProtocolTree::Kind::Leaf) return "leaf";
    json node;
    node["party"] = tree.party;
    json children = json::object();
    if (tree.kind == ProtocolTree::Kind::Diagonal) {
        node["measure"] = subsets_literal(tree.party, tree.subsets);
        for (std::size_t k = 0; k < tree.children.size(); ++k)
            children[std::to_string(k + 1)] = protocol_to_json(*tree.children[k]);
    } else {
        json kets = json::array();
        for (const auto& v : tree.kets) kets.push_back(print_ket(v));
        node["project"] = kets;
        for (std::size_t k = 0; k + 1 < tree.children.size(); ++k)
            children[std::to_string(k + 1)] = protocol_to_json(*tree.children[k]);
        children["rest"] = protocol_to_json(*tree.children.back());
    }
    node["children"] = std::move(children);
    return node;
}

ProtocolTree protocol_from_json(const json& j, const SpaceSpec& space) {
    if (j.is_string()) {
        if (j.get<std::string>() == "leaf") return ProtocolTree::leaf();
        throw std::invalid_argument("protocol: unknown terminal '" + j.get<std::string>() + "'");
    }
    ProtocolTree t;
    t.party = j.at("party").get<std::string>();
    int dim = space.parties.at(space.index_of(t.party)).dim;
    const auto& children = j.at("children");
    if (j.contains("measure")) {
        t.kind = ProtocolTree::Kind::Diagonal;
        auto m = parse_measurement_literal(t.party + ":" + j.at("measure").get<std::string>());
        t.subsets = m.outcomes;
        for (std::size_t k = 0; k < t.subsets.size(); ++k) {
            const std::string key = std::to_string(k + 1);
            if (!children.contains(key))
                throw std::invalid_argument("protocol: missing child '" + key + "'");
            t.children.push_back(
                std::make_unique<ProtocolTree>(protocol_from_json(children.at(key), space)));
        }
    } else if (j.contains("project")) {
        t.kind = ProtocolTree::Kind::Projective;
        for (const auto& k : j.at("project")) {
            auto v = parse_ket(k.get<std::string>(), dim);
            v.party = t.party;
            t.kets.push_back(std::move(v));
        }
        for (std::size_t k = 0; k < t.kets.size(); ++k) {
            const std::string key = std::to_string(k + 1);
            if (!children.contains(key))
                throw std::invalid_argument("protocol: missing child '" + key + "'");
            t.children.push_back(
                std::make_unique<ProtocolTree>(protocol_from_json(children.at(key), space)));
        }
        if (!children.contains("rest"))
            throw std::invalid_argument("protocol: projective node missing 'rest' child");
        t.children.push_back(
            std::make_unique<ProtocolTree>(protocol_from_json(children.at("rest"), space)));
    } else {
        throw std::invalid_argument("protocol: node needs 'measure' or 'project'");
    }
    return t;
}

void write_protocol(const std::string& path, const ProtocolTree& tree) {
    write_json_file(path, protocol_to_json(tree));
}

ProtocolTree read_protocol(const std::string& path, const SpaceSpec& space) {
    return protocol_from_json(read_json_file(path), space);
}

// --- reports ----------------------------------------------------------------------

json to_json(const OrthogonalityReport& r) {
    json v = json::array();
    for (const auto& [a, b] : r.violations) v.push_back({a, b});
    return {{"orthogonal", r.orthogonal}, {"violations", v}};
}

json to_json(const CliqueWitness& w) {
    return {{"size", w.size}, {"labels", w.labels}};
}

json to_json(const IrredundancyCertificate& c) {
    const char* names[] = {"Irredundant", "Redundant", "Unknown"};
    json per = json::array();
    for (const auto& p : c.per_party)
        per.push_back({{"party", p.party},
                       {"clique_size", p.clique_size},
                       {"witness", p.witness},
                       {"threshold", p.threshold}});
    json j = {{"verdict", names[static_cast<int>(c.verdict)]}, {"per_party", per}};
    if (c.verdict == IrredundancyVerdict::Redundant) j["redundant_party"] = c.redundant_party;
    return j;
}

json to_json(const HermitianBasis& b) {
    return {{"party", b.party},
            {"ambient_dim", b.ambient_dim},
            {"restricted_to_support", b.restricted_to_support},
            {"dimension", b.dimension},
            {"constraint_pairs", b.constraint_pairs},
            {"sv_max", b.sv_max},
            {"sv_smallest_kept", b.sv_smallest_kept},
            {"threshold", b.threshold},
            {"gap", b.gap}};
}

namespace {
const char* tri_name(TriState t) {
    switch (t) {
        case TriState::Certified: return "Certified";
        case TriState::Refuted: return "Refuted";
        case TriState::Unknown: return "Unknown";
    }
    return "?";
}
}  // namespace

json to_json(const IrreducibilityCertificate& c) {
    json per = json::array();
    for (const auto& b : c.per_party) per.push_back(to_json(b));
    json j = {{"verdict", tri_name(c.verdict)}, {"detail", c.detail}, {"per_party", per}};
    if (c.eliminating_measurement) j["eliminating_measurement"] = c.eliminating_measurement->to_literal();
    return j;
}

json to_json(const IndistinguishabilityCertificate& c) {
    json per = json::array();
    for (const auto& b : c.per_party) per.push_back(to_json(b));
    return {{"certified", c.certified},
            {"detail", c.detail},
            {"witness", c.witness},
            {"per_party", per}};
}

json to_json(const Classification& c) {
    json outcomes = json::array();
    for (const auto& o : c.outcomes)
        outcomes.push_back({{"outcome", o.outcome_id},
                            {"cardinality", o.cardinality},
                            {"indistinguishability", to_json(o.indistinguishability)},
                            {"irreducibility", tri_name(o.irreducibility)}});
    return {{"verdict", verdict_name(c.verdict)},
            {"reasons", c.reasons},
            {"protocol_ok", c.protocol_ok},
            {"irredundancy", to_json(c.irredundancy)},
            {"outcomes", outcomes}};
}

// --- grid rendering -----------------------------------------------------------------

namespace {

struct Grid {
    int rows = 0, cols = 0;
    std::map<std::pair<int, int>, std::vector<std::string>> squares;
    std::vector<std::string> legend;
};

Grid layout(const StateSet& set) {
    if (set.space.arity() != 2)
        throw std::invalid_argument("grid rendering requires a bipartite set");
    Grid g;
    g.rows = set.space.parties[0].dim;
    g.cols = set.space.parties[1].dim;
    for (const auto& s : set.states) {
        auto coords = coordinates(s);
        if (coords.size() <= 4) {
            for (const auto& c : coords) g.squares[{c[0], c[1]}].push_back(s.label);
        } else {
            g.legend.push_back(s.label + " = " + print_ket(s.factors[0]) + " x " +
                               print_ket(s.factors[1]));
        }
    }
    return g;
}

}  // namespace

std::string render_text(const StateSet& set) {
    Grid g = layout(set);
    std::size_t width = 1;
    for (const auto& [pos, labels] : g.squares) {
        std::size_t w = 0;
        for (const auto& l : labels) w += l.size() + (w ? 1 : 0);
        width = std::max(width, w);
    }
    std::ostringstream os;
    for (int r = 0; r < g.rows; ++r) {
        for (int c = 0; c < g.cols; ++c) {
            std::string cell;
            auto it = g.squares.find({r, c});
            if (it != g.squares.end())
                for (const auto& l : it->second) cell += (cell.empty() ? "" : ",") + l;
            if (cell.empty()) cell = ".";
            os << cell << std::string(width - cell.size() + 1, ' ');
        }
        os << "\n";
    }
    if (!g.legend.empty()) {
        os << "broad-support states:\n";
        for (const auto& l : g.legend) os << "  " << l << "\n";
    }
    return os.str();
}

std::string render_svg(const StateSet& set) {
    Grid g = layout(set);
    const int cell = 40, margin = 20;
    const int w = margin * 2 + g.cols * cell;
    const int h = margin * 2 + g.rows * cell + static_cast<int>(g.legend.size()) * 18 +
                  (g.legend.empty() ? 0 : 24);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" font-family=\"monospace\" font-size=\"11\">\n";
    for (int r = 0; r <= g.rows; ++r)
        os << "<line x1=\"" << margin << "\" y1=\"" << margin + r * cell << "\" x2=\""
           << margin + g.cols * cell << "\" y2=\"" << margin + r * cell
           << "\" stroke=\"#999\"/>\n";
    for (int c = 0; c <= g.cols; ++c)
        os << "<line x1=\"" << margin + c * cell << "\" y1=\"" << margin << "\" x2=\""
           << margin + c * cell << "\" y2=\"" << margin + g.rows * cell
           << "\" stroke=\"#999\"/>\n";
    for (const auto& [pos, labels] : g.squares) {
        int x = margin + pos.second * cell, y = margin + pos.first * cell;
        os << "<rect x=\"" << x + 1 << "\" y=\"" << y + 1 << "\" width=\"" << cell - 2
           << "\" height=\"" << cell - 2 << "\" fill=\"#cde\"/>\n";
        int line = 0;
        for (const auto& l : labels)
            os << "<text x=\"" << x + 3 << "\" y=\"" << y + 13 + 12 * line++ << "\">" << l
               << "</text>\n";
    }
    int ly = margin + g.rows * cell + 20;
    if (!g.legend.empty()) {
        os << "<text x=\"" << margin << "\" y=\"" << ly << "\">broad-support states:</text>\n";
        ly += 18;
        for (const auto& l : g.legend) {
            os << "<text x=\"" << margin + 10 << "\" y=\"" << ly << "\">" << l << "</text>\n";
            ly += 18;
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace hnl
