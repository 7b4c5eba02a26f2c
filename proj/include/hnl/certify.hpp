#pragma once

// Certification suite: exact orthogonality, non-orthogonality cliques,
// local irredundancy counting, the orthogonality-preserving-measurement
// nullspace solver, irreducibility / indistinguishability certificates,
// and the end-to-end hidden-nonlocality classifier.

#include "hnl/measurement.hpp"
#include "hnl/state.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace hnl {

struct ProtocolTree;  // protocols.hpp

// --- orthogonality ------------------------------------------------------------

struct OrthogonalityReport {
    bool orthogonal = false;
    std::vector<std::pair<std::string, std::string>> violations;
};

OrthogonalityReport check_orthogonality(const StateSet& set);

// --- cliques and irredundancy ---------------------------------------------------

// Exact maximum clique (branch and bound with greedy coloring bound).
std::vector<int> max_clique(const std::vector<std::vector<bool>>& adjacency);

struct CliqueWitness {
    int size = 0;
    std::vector<std::string> labels;
};

// Maximum clique of the graph joining states with local_inner != 0 on `party`.
CliqueWitness nonorth_clique(const StateSet& set, int party_index);

// Same, but an edge requires nonzero local inner on every party except
// `except_party` (the joint non-orthogonality of all other parties).
CliqueWitness nonorth_clique_joint(const StateSet& set, int except_party);

enum class IrredundancyVerdict { Irredundant, Redundant, Unknown };

struct IrredundancyCertificate {
    struct PerParty {
        std::string party;
        int clique_size = 0;
        std::vector<std::string> witness;
        int threshold = 0;  // d_party / smallest prime factor
    };
    IrredundancyVerdict verdict = IrredundancyVerdict::Unknown;
    std::string redundant_party;  // set when verdict == Redundant
    std::vector<PerParty> per_party;
};

IrredundancyCertificate certify_irredundancy(const StateSet& set);

// --- OPLM solution spaces --------------------------------------------------------

struct HermitianBasis {
    std::string party;
    int ambient_dim = 0;
    bool restricted_to_support = false;
    int dimension = 0;
    std::vector<Eigen::MatrixXcd> basis;  // orthonormal under the trace form
    double sv_max = 0.0;                  // largest singular value of the constraint matrix
    double sv_smallest_kept = 0.0;        // smallest singular value above threshold (0 if none)
    double threshold = 0.0;               // relative singular-value cutoff (1e-9)
    double gap = 0.0;                     // sv_smallest_kept / (threshold * sv_max)
    int constraint_pairs = 0;
};

// Solves <a_i| E |a_j> = 0 over Hermitian E on `party` for every pair whose
// other-party overlap is nonzero; returns an orthonormal basis of the
// solution space.  Input must be pairwise orthogonal.
HermitianBasis oplm_space(const StateSet& set, int party_index, bool restrict_to_support);

// Float-path variant: per-state target-party vectors plus an explicit list of
// constrained pairs (used for the unitary-conjugation invariance property).
HermitianBasis oplm_space_numeric(const std::vector<Eigen::VectorXcd>& party_vectors,
                                  const std::vector<std::pair<int, int>>& constrained_pairs);

// True iff the support-restricted OPLM space has dimension 1 (E ~ identity).
bool is_trivial_oplm(const StateSet& set, int party_index);

// --- irreducibility / indistinguishability ----------------------------------------

enum class TriState { Certified, Refuted, Unknown };

struct IrreducibilityCertificate {
    TriState verdict = TriState::Unknown;  // Refuted == reducible
    std::string detail;
    std::optional<LocalMeasurement> eliminating_measurement;  // set when Refuted
    std::vector<HermitianBasis> per_party;                    // filled on the triviality path
};

IrreducibilityCertificate certify_irreducibility(const StateSet& set);

struct IndistinguishabilityCertificate {
    bool certified = false;
    std::string detail;
    std::vector<std::string> witness;
    std::vector<HermitianBasis> per_party;
};

// Certifies via the trivial-OPLM sufficient condition on a witness subset
// restricted to its per-party supports.  Parties on which every witness
// factor is proportional carry no information and are dropped before the
// check.  Unknown is an honest output.
IndistinguishabilityCertificate certify_indistinguishability(
    const StateSet& set, const std::vector<std::string>& witness_labels);

// --- classifier ---------------------------------------------------------------------

enum class Verdict { TypeI, StrongTypeI, TypeII, NotEstablished };

std::string verdict_name(Verdict v);

struct Classification {
    Verdict verdict = Verdict::NotEstablished;
    std::vector<std::string> reasons;  // populated when NotEstablished
    bool protocol_ok = false;
    IrredundancyCertificate irredundancy;
    struct OutcomeEvidence {
        std::string outcome_id;
        std::size_t cardinality = 0;
        IndistinguishabilityCertificate indistinguishability;
        TriState irreducibility = TriState::Unknown;
    };
    std::vector<OutcomeEvidence> outcomes;
};

// Pipeline: orthogonality -> protocol -> irredundancy -> OP measurement ->
// per-outcome indistinguishability; verdict from outcome cardinalities, with
// StrongTypeI when every full outcome set is additionally irreducible.
Classification classify_hidden_nonlocality(const StateSet& set,
                                           const std::vector<LocalMeasurement>& ms,
                                           const ProtocolTree& protocol,
                                           const std::vector<std::vector<std::string>>& witnesses);

}  // namespace hnl
