#pragma once

// LOCC discrimination protocol trees and the exact-arithmetic verifier.
//
// Two node kinds:
//   - diagonal: a one-party index-subset measurement, one child per subset;
//   - projective: a one-party rank-one measurement given by pairwise
//     orthogonal (unnormalized) kets, one child per ket plus a final child
//     for the orthogonal complement.
//
// A leaf accepts when at most one candidate remains, or when all remaining
// candidates are pairwise orthogonal on a single common party (that party
// finishes alone with a local measurement).

#include "hnl/families.hpp"
#include "hnl/measurement.hpp"
#include "hnl/state.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hnl {

struct ProtocolTree {
    enum class Kind { Leaf, Diagonal, Projective };

    Kind kind = Kind::Leaf;
    std::string party;                          // node kinds only
    std::vector<std::vector<int>> subsets;      // Diagonal
    std::vector<LocalVector> kets;              // Projective (complement implied)
    std::vector<std::unique_ptr<ProtocolTree>> children;

    static ProtocolTree leaf() { return {}; }

    std::size_t depth() const;
    std::size_t node_count() const;
};

struct VerifyResult {
    bool ok = false;
    std::string trace;  // human-readable failure path when !ok
};

// Walks every branch with exact arithmetic, applying each measurement to the
// surviving candidates, and checks the leaf acceptance rule everywhere.
// Also rejects malformed nodes (non-partitions, non-orthogonal kets, wrong
// child counts) and branches where a candidate vanishes from all siblings.
VerifyResult verify_protocol(const StateSet& set, const ProtocolTree& tree);

// Hand-constructed distinguishing protocols for the shipped families.
// Throws std::invalid_argument for families with no distinguishing protocol.
ProtocolTree builtin_protocol(const FamilyId& id);

}  // namespace hnl
