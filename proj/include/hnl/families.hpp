#pragma once

// Deterministic constructors for every state family in scope, plus the
// filler-state search used by the multiparty composition.

#include "hnl/state.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hnl {

enum class FamilyKind { Yu, TypeI, StrongTypeI11, TypeII78, MultipartyTypeI };

struct FamilyId {
    FamilyKind kind;
    std::vector<int> params;  // Yu/TypeI: {d}; Multiparty: block dims

    std::string to_string() const;
    static FamilyId parse(const std::string& text);  // "yu:5", "type1:11", "strong11", "type2-78", "multi:11,11,13"
};

// Stopper-style set: 2d-1 orthogonal product states in C^d x C^d, d >= 3.
StateSet yu_set(int d);

// The 2d-2 state type-I family, odd d >= 11; reproduces the d=11 and d=13
// listings label-for-label.
StateSet type1_set(int d);

// The 22-state strong-form set in C^11 x C^11 (type-I family of d=11 with a
// reshaped psi block plus |S> and |M>).
StateSet strong_type1_set();

// The 22-state type-II family in C^7 x C^8 with cube-root-of-unity triples.
StateSet type2_set_78();

// A state (|r1>-|r2>)(|c1>-|c2>) orthogonal to type1_set(d), distinguishable
// jointly with it, split by both halves of the B measurement, and with each
// measured piece orthogonal to the family's measured pieces.  Found by
// lexicographic search; rows must share a half or the full-sum states break
// property (3).  Throws if no rectangle passes.
ProductState filler_state(int d);

// Checks properties (1)-(3) of a filler candidate against type1_set(d).
bool filler_is_valid(int d, const ProductState& candidate, const StateSet& family);

// Union over blocks i of {fill_1 x ... x s x ... x fill_N : s in type1_set(d_i)}
// on a 2N-party space; labels are "b{i}.{label}".
StateSet multiparty_type1(const std::vector<int>& d_list);

StateSet construct_family(const FamilyId& id);

}  // namespace hnl
