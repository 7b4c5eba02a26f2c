#pragma once

// Product states over a multi-party space, with exact cyclotomic
// coefficients, plus the ket-expression parser/printer.

#include "hnl/cyclo.hpp"

#include <complex>
#include <set>
#include <string>
#include <vector>

namespace hnl {

struct Party {
    std::string label;
    int dim = 0;
    std::vector<int> prime_factors;  // multiply to dim, ascending
};

std::vector<int> prime_factorization(int n);

struct SpaceSpec {
    std::vector<Party> parties;

    static SpaceSpec bipartite(int dim_a, int dim_b);
    static SpaceSpec of_dims(const std::vector<std::pair<std::string, int>>& parts);

    int index_of(const std::string& party_label) const;  // throws on unknown label
    std::size_t arity() const { return parties.size(); }
    long long total_dim() const;
    void validate() const;
};

struct LocalVector {
    std::string party;
    std::vector<Cyclo> entries;

    bool is_zero() const;
    std::vector<int> support() const;
    LocalVector scaled(const Cyclo& c) const;
};

struct ProductState {
    std::string label;
    std::vector<LocalVector> factors;  // one per party, in space order
};

struct StateSet {
    SpaceSpec space;
    std::vector<ProductState> states;

    const ProductState& find(const std::string& label) const;
    bool contains(const std::string& label) const;
    void validate() const;  // one factor per party, unique labels, nonzero factors
};

// --- ket expression grammar -------------------------------------------------
//
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := coeff? ket
//   coeff := rational wpart? | wpart          rational := int ('/' int)?
//   wpart := 'w' | 'w^2'
//   ket   := '|' idx '>' | '|+_' idx '>' | '|_' idx '+_' idx '>'
//
// Whitespace is ignored.  |+_n> sums |0>..|n>; |_m+_n> sums |m>..|n>.
LocalVector parse_ket(const std::string& text, int dim);
std::string print_ket(const LocalVector& v);

// --- operations ---------------------------------------------------------------

// Sum of conj(s_k) t_k over one party's entries (conjugate-linear in s).
Cyclo local_inner(const ProductState& s, const ProductState& t, int party_index);
Cyclo local_inner(const StateSet& set, const std::string& a_label,
                  const std::string& b_label, const std::string& party_label);

// Full tensor inner product = product of per-party local inners.
Cyclo inner_product(const ProductState& s, const ProductState& t);

// All index tuples where every factor is nonzero (the grid squares of a state).
std::vector<std::vector<int>> coordinates(const ProductState& s);

// Union over states of nonzero indices on one party.
std::vector<int> support(const StateSet& set, int party_index);

// Re-index one party onto `subset` (ascending); subset must cover every
// state's support on that party.
StateSet restrict(const StateSet& set, int party_index, const std::vector<int>& subset);

std::vector<std::complex<double>> to_complex_vector(const LocalVector& v);

}  // namespace hnl
