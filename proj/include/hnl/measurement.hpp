#pragma once

// One-party diagonal projective measurements (disjoint index subsets
// covering the full range), outcome application, and the
// orthogonality-preserving check.

#include "hnl/state.hpp"

#include <string>
#include <vector>

namespace hnl {

struct LocalMeasurement {
    std::string party;
    std::vector<std::vector<int>> outcomes;  // each a disjoint index subset

    void validate(int dim) const;  // disjoint, complete
    std::string to_literal() const;
};

// Literal syntax: "B:0-4;5-10" — party, then semicolon-separated
// ranges/lists ("0-4", "7", "0,2-3").
LocalMeasurement parse_measurement_literal(const std::string& text);

struct OutcomeSet {
    std::string outcome_id;
    StateSet states;                  // zero-image states dropped, labels tilde-marked
    std::vector<std::string> dropped; // labels whose image vanished
};

// Entrywise restriction of each state's factor on `party_index` to `subset`;
// vanished states are dropped, surviving labels get a '~' prefix.
StateSet apply_projector(const StateSet& set, int party_index, const std::vector<int>& subset);

std::vector<OutcomeSet> measurement_outcomes(const StateSet& set, const LocalMeasurement& m);

// Joint application of measurements on distinct parties; outcome ids are
// "i,j,..." across the factors.
std::vector<OutcomeSet> measurement_outcomes(const StateSet& set,
                                             const std::vector<LocalMeasurement>& ms);

struct OrthogonalityViolation {
    std::string outcome_id;
    std::string label_a, label_b;
};

struct OpCheck {
    bool preserving = false;
    std::vector<OrthogonalityViolation> violations;
};

OpCheck is_orthogonality_preserving(const StateSet& set, const std::vector<LocalMeasurement>& ms);
inline OpCheck is_orthogonality_preserving(const StateSet& set, const LocalMeasurement& m) {
    return is_orthogonality_preserving(set, std::vector<LocalMeasurement>{m});
}

}  // namespace hnl
