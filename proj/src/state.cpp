#include "hnl/state.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace hnl {

std::vector<int> prime_factorization(int n) {
    if (n < 2) throw std::invalid_argument("prime_factorization: n < 2");
    std::vector<int> out;
    for (int p = 2; p * p <= n; ++p)
        while (n % p == 0) { out.push_back(p); n /= p; }
    if (n > 1) out.push_back(n);
    return out;
}

SpaceSpec SpaceSpec::bipartite(int dim_a, int dim_b) {
    return of_dims({{"A", dim_a}, {"B", dim_b}});
}

SpaceSpec SpaceSpec::of_dims(const std::vector<std::pair<std::string, int>>& parts) {
    SpaceSpec s;
    for (const auto& [label, dim] : parts)
        s.parties.push_back({label, dim, prime_factorization(dim)});
    s.validate();
    return s;
}

int SpaceSpec::index_of(const std::string& party_label) const {
    for (std::size_t i = 0; i < parties.size(); ++i)
        if (parties[i].label == party_label) return static_cast<int>(i);
    throw std::invalid_argument("unknown party '" + party_label + "'");
}

long long SpaceSpec::total_dim() const {
    long long d = 1;
    for (const auto& p : parties) d *= p.dim;
    return d;
}

void SpaceSpec::validate() const {
    if (parties.empty()) throw std::invalid_argument("space has no parties");
    std::set<std::string> seen;
    for (const auto& p : parties) {
        if (p.dim < 2) throw std::invalid_argument("party dim must be >= 2");
        if (!seen.insert(p.label).second)
            throw std::invalid_argument("duplicate party label '" + p.label + "'");
        int prod = 1;
        for (int q : p.prime_factors) prod *= q;
        if (prod != p.dim) throw std::invalid_argument("prime factors do not multiply to dim");
    }
}

bool LocalVector::is_zero() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const Cyclo& c) { return c.is_zero(); });
}

std::vector<int> LocalVector::support() const {
    std::vector<int> s;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!entries[i].is_zero()) s.push_back(static_cast<int>(i));
    return s;
}

LocalVector LocalVector::scaled(const Cyclo& c) const {
    LocalVector out = *this;
    for (auto& e : out.entries) e *= c;
    return out;
}

const ProductState& StateSet::find(const std::string& label) const {
    for (const auto& s : states)
        if (s.label == label) return s;
    throw std::invalid_argument("no state labeled '" + label + "'");
}

bool StateSet::contains(const std::string& label) const {
    for (const auto& s : states)
        if (s.label == label) return true;
    return false;
}

void StateSet::validate() const {
    space.validate();
    std::set<std::string> labels;
    for (const auto& s : states) {
        if (!labels.insert(s.label).second)
            throw std::invalid_argument("duplicate state label '" + s.label + "'");
        if (s.factors.size() != space.arity())
            throw std::invalid_argument("state '" + s.label + "' has wrong factor count");
        for (std::size_t p = 0; p < s.factors.size(); ++p) {
            if (s.factors[p].party != space.parties[p].label)
                throw std::invalid_argument("factor party mismatch in '" + s.label + "'");
            if (static_cast<int>(s.factors[p].entries.size()) != space.parties[p].dim)
                throw std::invalid_argument("factor dim mismatch in '" + s.label + "'");
            if (s.factors[p].is_zero())
                throw std::invalid_argument("zero factor in state '" + s.label + "'");
        }
    }
}

// --- parser ------------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool done() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
    char take() { skip_ws(); return s[i++]; }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw std::invalid_argument("ket parse error: expected '" + std::string(1, c) +
                                        "' at offset " + std::to_string(i) + " in \"" + s + "\"");
    }
    long long integer() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw std::invalid_argument("ket parse error: expected integer in \"" + s + "\"");
        return std::stoll(s.substr(start, i - start));
    }
};

int checked_index(long long idx, int dim, const std::string& text) {
    if (idx < 0 || idx >= dim)
        throw std::invalid_argument("ket index " + std::to_string(idx) +
                                    " out of range for dim " + std::to_string(dim) +
                                    " in \"" + text + "\"");
    return static_cast<int>(idx);
}

// Parses one '|...>' token and adds coeff * ket into entries.
void parse_one_ket(Cursor& cur, const Cyclo& coeff, std::vector<Cyclo>& entries,
                   int dim, const std::string& text) {
    cur.expect('|');
    if (cur.accept('+')) {  // |+_n>
        cur.expect('_');
        int n = checked_index(cur.integer(), dim, text);
        for (int k = 0; k <= n; ++k) entries[k] += coeff;
    } else if (cur.accept('_')) {  // |_m+_n>
        int m = checked_index(cur.integer(), dim, text);
        cur.expect('+');
        cur.expect('_');
        int n = checked_index(cur.integer(), dim, text);
        if (m >= n) throw std::invalid_argument("ket parse error: |_m+_n> needs m < n in \"" + text + "\"");
        for (int k = m; k <= n; ++k) entries[k] += coeff;
    } else {
        int idx = checked_index(cur.integer(), dim, text);
        entries[idx] += coeff;
    }
    cur.expect('>');
}

// coeff := rational wpart? | wpart ; empty means 1
Cyclo parse_coeff(Cursor& cur) {
    Cyclo c(1);
    char p = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(p))) {
        long long num = cur.integer();
        Rational r(num);
        if (cur.accept('/')) r = Rational(num, cur.integer());
        c = Cyclo(r);
        p = cur.peek();
    }
    if (p == 'w') {
        cur.take();
        if (cur.accept('^')) {
            if (cur.integer() != 2)
                throw std::invalid_argument("ket parse error: only w^2 is supported");
            c *= Cyclo::omega2();
        } else {
            c *= Cyclo::omega();
        }
    }
    return c;
}

}  // namespace

LocalVector parse_ket(const std::string& text, int dim) {
    if (dim < 1) throw std::invalid_argument("parse_ket: dim < 1");
    Cursor cur{text};
    std::vector<Cyclo> entries(dim);
    if (cur.done()) throw std::invalid_argument("ket parse error: empty expression");
    bool first = true;
    while (!cur.done()) {
        Cyclo sign(1);
        if (cur.accept('-')) sign = Cyclo(-1);
        else if (cur.accept('+')) { /* explicit plus */ }
        else if (!first)
            throw std::invalid_argument("ket parse error: expected '+' or '-' in \"" + text + "\"");
        Cyclo coeff = sign * parse_coeff(cur);
        parse_one_ket(cur, coeff, entries, dim, text);
        first = false;
    }
    return LocalVector{"", std::move(entries)};
}

std::string print_ket(const LocalVector& v) {
    std::string out;
    auto emit = [&](const Rational& r, bool omega, int idx) {
        if (r == Rational(0)) return;
        Rational mag = r < Rational(0) ? -r : r;
        if (out.empty()) {
            if (r < Rational(0)) out += "-";
        } else {
            out += (r < Rational(0)) ? "-" : "+";
        }
        if (mag != Rational(1) || omega) {
            if (mag != Rational(1)) out += rational_to_string(mag);
            if (omega) out += "w";
        }
        out += "|" + std::to_string(idx) + ">";
    };
    for (std::size_t i = 0; i < v.entries.size(); ++i) {
        emit(v.entries[i].a, false, static_cast<int>(i));
        emit(v.entries[i].b, true, static_cast<int>(i));
    }
    return out.empty() ? "0" : out;
}

// --- operations ----------------------------------------------------------------

Cyclo local_inner(const ProductState& s, const ProductState& t, int party_index) {
    const auto& sf = s.factors.at(party_index).entries;
    const auto& tf = t.factors.at(party_index).entries;
    if (sf.size() != tf.size()) throw std::invalid_argument("local_inner: dim mismatch");
    Cyclo acc;
    for (std::size_t k = 0; k < sf.size(); ++k)
        if (!sf[k].is_zero() && !tf[k].is_zero()) acc += sf[k].conj() * tf[k];
    return acc;
}

Cyclo local_inner(const StateSet& set, const std::string& a_label,
                  const std::string& b_label, const std::string& party_label) {
    return local_inner(set.find(a_label), set.find(b_label), set.space.index_of(party_label));
}

Cyclo inner_product(const ProductState& s, const ProductState& t) {
    if (s.factors.size() != t.factors.size())
        throw std::invalid_argument("inner_product: arity mismatch");
    Cyclo acc(1);
    for (std::size_t p = 0; p < s.factors.size(); ++p) {
        acc *= local_inner(s, t, static_cast<int>(p));
        if (acc.is_zero()) return Cyclo(0);
    }
    return acc;
}

std::vector<std::vector<int>> coordinates(const ProductState& s) {
    std::vector<std::vector<int>> supports;
    for (const auto& f : s.factors) supports.push_back(f.support());
    std::vector<std::vector<int>> out{{}};
    for (const auto& sup : supports) {
        std::vector<std::vector<int>> next;
        next.reserve(out.size() * sup.size());
        for (const auto& prefix : out)
            for (int idx : sup) {
                auto t = prefix;
                t.push_back(idx);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<int> support(const StateSet& set, int party_index) {
    std::set<int> acc;
    for (const auto& s : set.states)
        for (int i : s.factors.at(party_index).support()) acc.insert(i);
    return {acc.begin(), acc.end()};
}

StateSet restrict(const StateSet& set, int party_index, const std::vector<int>& subset) {
    std::map<int, int> remap;  // old index -> new index, ascending
    {
        std::set<int> sorted(subset.begin(), subset.end());
        int next = 0;
        for (int i : sorted) {
            if (i < 0 || i >= set.space.parties.at(party_index).dim)
                throw std::invalid_argument("restrict: index out of range");
            remap[i] = next++;
        }
    }
    StateSet out;
    out.space = set.space;
    auto& party = out.space.parties.at(party_index);
    party.dim = static_cast<int>(remap.size());
    if (party.dim < 1) throw std::invalid_argument("restrict: empty subset");
    party.prime_factors = party.dim >= 2 ? prime_factorization(party.dim) : std::vector<int>{};
    for (const auto& s : set.states) {
        ProductState ns = s;
        const auto& old = s.factors.at(party_index);
        LocalVector nv{old.party, std::vector<Cyclo>(remap.size())};
        for (std::size_t i = 0; i < old.entries.size(); ++i) {
            if (old.entries[i].is_zero()) continue;
            auto it = remap.find(static_cast<int>(i));
            if (it == remap.end())
                throw std::invalid_argument("restrict: state '" + s.label +
                                            "' has weight outside the subset");
            nv.entries[it->second] = old.entries[i];
        }
        ns.factors[party_index] = std::move(nv);
        out.states.push_back(std::move(ns));
    }
    return out;
}

std::vector<std::complex<double>> to_complex_vector(const LocalVector& v) {
    std::vector<std::complex<double>> out;
    out.reserve(v.entries.size());
    for (const auto& c : v.entries) out.push_back(c.to_complex());
    return out;
}

}  // namespace hnl
