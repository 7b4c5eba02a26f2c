#include "hnl/measurement.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hnl {

void LocalMeasurement::validate(int dim) const {
    if (outcomes.empty()) throw std::invalid_argument("measurement has no outcomes");
    std::vector<bool> seen(dim, false);
    for (const auto& subset : outcomes) {
        if (subset.empty()) throw std::invalid_argument("measurement outcome with empty subset");
        for (int i : subset) {
            if (i < 0 || i >= dim) throw std::invalid_argument("measurement index out of range");
            if (seen[i]) throw std::invalid_argument("measurement outcomes overlap at index " + std::to_string(i));
            seen[i] = true;
        }
    }
    for (int i = 0; i < dim; ++i)
        if (!seen[i])
            throw std::invalid_argument("measurement incomplete: index " + std::to_string(i) + " uncovered");
}

std::string LocalMeasurement::to_literal() const {
    std::ostringstream os;
    os << party << ":";
    for (std::size_t o = 0; o < outcomes.size(); ++o) {
        if (o) os << ";";
        auto sorted = outcomes[o];
        std::sort(sorted.begin(), sorted.end());
        // compress consecutive runs
        for (std::size_t i = 0; i < sorted.size();) {
            std::size_t j = i;
            while (j + 1 < sorted.size() && sorted[j + 1] == sorted[j] + 1) ++j;
            if (i) os << ",";
            if (j > i) os << sorted[i] << "-" << sorted[j];
            else os << sorted[i];
            i = j + 1;
        }
    }
    return os.str();
}

LocalMeasurement parse_measurement_literal(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0)
        throw std::invalid_argument("bad measurement literal '" + text + "'");
    LocalMeasurement m;
    m.party = text.substr(0, colon);
    std::stringstream groups(text.substr(colon + 1));
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<int> subset;
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) {
            try {
                auto dash = item.find('-');
                if (dash == std::string::npos) {
                    subset.push_back(std::stoi(item));
                } else {
                    int lo = std::stoi(item.substr(0, dash));
                    int hi = std::stoi(item.substr(dash + 1));
                    if (hi < lo) throw std::invalid_argument("range");
                    for (int i = lo; i <= hi; ++i) subset.push_back(i);
                }
            } catch (const std::exception&) {
                throw std::invalid_argument("bad measurement literal '" + text + "'");
            }
        }
        if (subset.empty()) throw std::invalid_argument("bad measurement literal '" + text + "'");
        m.outcomes.push_back(std::move(subset));
    }
    if (m.outcomes.empty()) throw std::invalid_argument("bad measurement literal '" + text + "'");
    return m;
}

StateSet apply_projector(const StateSet& set, int party_index, const std::vector<int>& subset) {
    std::set<int> keep(subset.begin(), subset.end());
    StateSet out;
    out.space = set.space;
    for (const auto& s : set.states) {
        ProductState ns = s;
        ns.label = "~" + s.label;
        auto& f = ns.factors.at(party_index);
        for (std::size_t i = 0; i < f.entries.size(); ++i)
            if (!keep.count(static_cast<int>(i))) f.entries[i] = Cyclo(0);
        if (!f.is_zero()) out.states.push_back(std::move(ns));
    }
    return out;
}

std::vector<OutcomeSet> measurement_outcomes(const StateSet& set, const LocalMeasurement& m) {
    return measurement_outcomes(set, std::vector<LocalMeasurement>{m});
}

std::vector<OutcomeSet> measurement_outcomes(const StateSet& set,
                                             const std::vector<LocalMeasurement>& ms) {
    if (ms.empty()) throw std::invalid_argument("no measurements given");
    std::set<std::string> parties;
    for (const auto& m : ms) {
        int p = set.space.index_of(m.party);
        m.validate(set.space.parties[p].dim);
        if (!parties.insert(m.party).second)
            throw std::invalid_argument("duplicate measurement party '" + m.party + "'");
    }

    std::vector<OutcomeSet> result;
    // cartesian product of per-measurement outcomes
    std::vector<std::size_t> idx(ms.size(), 0);
    while (true) {
        OutcomeSet o;
        StateSet cur = set;
        std::ostringstream id;
        for (std::size_t m = 0; m < ms.size(); ++m) {
            if (m) id << ",";
            id << (idx[m] + 1);
            // strip tilde marks from intermediate rounds so labels carry one '~'
            StateSet next = apply_projector(cur, set.space.index_of(ms[m].party), ms[m].outcomes[idx[m]]);
            if (m > 0)
                for (auto& s : next.states) s.label = s.label.substr(1);
            cur = std::move(next);
        }
        o.outcome_id = id.str();
        o.states = std::move(cur);
        for (const auto& s : set.states)
            if (!o.states.contains("~" + s.label)) o.dropped.push_back(s.label);
        result.push_back(std::move(o));

        std::size_t m = ms.size();
        while (m > 0) {
            --m;
            if (++idx[m] < ms[m].outcomes.size()) break;
            idx[m] = 0;
            if (m == 0) return result;
        }
    }
}

OpCheck is_orthogonality_preserving(const StateSet& set, const std::vector<LocalMeasurement>& ms) {
    OpCheck check;
    check.preserving = true;
    for (const auto& o : measurement_outcomes(set, ms)) {
        const auto& states = o.states.states;
        for (std::size_t i = 0; i < states.size(); ++i)
            for (std::size_t j = i + 1; j < states.size(); ++j)
                if (!inner_product(states[i], states[j]).is_zero()) {
                    check.preserving = false;
                    check.violations.push_back({o.outcome_id, states[i].label, states[j].label});
                }
    }
    return check;
}

}  // namespace hnl
