#include "hnl/certify.hpp"

#include "hnl/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hnl {

OrthogonalityReport check_orthogonality(const StateSet& set) {
    OrthogonalityReport rep;
    rep.orthogonal = true;
    const auto& st = set.states;
    for (std::size_t i = 0; i < st.size(); ++i)
        for (std::size_t j = i + 1; j < st.size(); ++j)
            if (!inner_product(st[i], st[j]).is_zero()) {
                rep.orthogonal = false;
                rep.violations.emplace_back(st[i].label, st[j].label);
            }
    return rep;
}

// --- maximum clique -------------------------------------------------------------

namespace {

struct CliqueSolver {
    const std::vector<std::vector<bool>>& adj;
    std::vector<int> best;
    std::vector<int> current;

    // greedy coloring bound; candidates returned ordered by color class
    void expand(std::vector<int>& cand) {
        if (cand.empty()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        std::vector<int> color(cand.size());
        std::vector<int> ordered;
        ordered.reserve(cand.size());
        {
            std::vector<std::vector<int>> classes;
            for (int v : cand) {
                std::size_t c = 0;
                while (c < classes.size()) {
                    bool clash = false;
                    for (int u : classes[c])
                        if (adj[u][v]) { clash = true; break; }
                    if (!clash) break;
                    ++c;
                }
                if (c == classes.size()) classes.emplace_back();
                classes[c].push_back(v);
            }
            for (std::size_t c = 0; c < classes.size(); ++c)
                for (int v : classes[c]) {
                    color[ordered.size()] = static_cast<int>(c) + 1;
                    ordered.push_back(v);
                }
        }
        for (int i = static_cast<int>(ordered.size()) - 1; i >= 0; --i) {
            if (current.size() + color[i] <= best.size()) return;
            int v = ordered[i];
            current.push_back(v);
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (adj[v][ordered[j]]) next.push_back(ordered[j]);
            expand(next);
            current.pop_back();
        }
    }
};

}  // namespace

std::vector<int> max_clique(const std::vector<std::vector<bool>>& adjacency) {
    const int n = static_cast<int>(adjacency.size());
    if (n == 0) return {};
    CliqueSolver solver{adjacency, {}, {}};
    std::vector<int> cand(n);
    std::iota(cand.begin(), cand.end(), 0);
    // degree-descending start order helps the coloring bound
    std::sort(cand.begin(), cand.end(), [&](int a, int b) {
        auto deg = [&](int v) { return std::count(adjacency[v].begin(), adjacency[v].end(), true); };
        return deg(a) > deg(b);
    });
    solver.expand(cand);
    std::sort(solver.best.begin(), solver.best.end());
    return solver.best;
}

namespace {

CliqueWitness clique_from_adjacency(const StateSet& set,
                                    const std::vector<std::vector<bool>>& adj) {
    CliqueWitness w;
    auto members = max_clique(adj);
    w.size = static_cast<int>(members.size());
    for (int v : members) w.labels.push_back(set.states[v].label);
    return w;
}

}  // namespace

CliqueWitness nonorth_clique(const StateSet& set, int party_index) {
    const int n = static_cast<int>(set.states.size());
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!local_inner(set.states[i], set.states[j], party_index).is_zero())
                adj[i][j] = adj[j][i] = true;
    return clique_from_adjacency(set, adj);
}

CliqueWitness nonorth_clique_joint(const StateSet& set, int except_party) {
    const int n = static_cast<int>(set.states.size());
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool edge = true;
            for (std::size_t q = 0; q < set.space.arity(); ++q) {
                if (static_cast<int>(q) == except_party) continue;
                if (local_inner(set.states[i], set.states[j], static_cast<int>(q)).is_zero()) {
                    edge = false;
                    break;
                }
            }
            if (edge) adj[i][j] = adj[j][i] = true;
        }
    return clique_from_adjacency(set, adj);
}

IrredundancyCertificate certify_irredundancy(const StateSet& set) {
    IrredundancyCertificate cert;
    bool all_above = true;
    for (std::size_t x = 0; x < set.space.arity(); ++x) {
        const auto& party = set.space.parties[x];
        auto clique = nonorth_clique_joint(set, static_cast<int>(x));
        int threshold = party.dim / party.prime_factors.front();
        cert.per_party.push_back({party.label, clique.size, clique.labels, threshold});
        if (clique.size <= 1 && set.states.size() >= 2) {
            // no pair is jointly non-orthogonal elsewhere: discarding this
            // party entirely preserves orthogonality
            cert.verdict = IrredundancyVerdict::Redundant;
            cert.redundant_party = party.label;
        }
        if (clique.size <= threshold) all_above = false;
    }
    if (cert.verdict != IrredundancyVerdict::Redundant)
        cert.verdict = all_above ? IrredundancyVerdict::Irredundant : IrredundancyVerdict::Unknown;
    return cert;
}

// --- OPLM nullspace solver ---------------------------------------------------------

namespace {

constexpr double kSvRelThreshold = 1e-9;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Hermitian parametrization: d diagonal reals, then (u_ij, v_ij)/sqrt(2) per
// i<j pair, so that the euclidean param norm equals the Hilbert-Schmidt norm.
int param_count(int d) { return d * d; }

Eigen::MatrixXcd params_to_hermitian(const Eigen::VectorXd& p, int d) {
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
    int idx = 0;
    for (int i = 0; i < d; ++i) e(i, i) = p(idx++);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            double u = p(idx++), v = p(idx++);
            e(i, j) = std::complex<double>(u, v) * kInvSqrt2;
            e(j, i) = std::conj(e(i, j));
        }
    return e;
}

}  // namespace

HermitianBasis oplm_space_numeric(const std::vector<Eigen::VectorXcd>& party_vectors,
                                  const std::vector<std::pair<int, int>>& constrained_pairs) {
    if (party_vectors.empty()) throw std::invalid_argument("oplm_space_numeric: no states");
    const int d = static_cast<int>(party_vectors.front().size());
    const int cols = param_count(d);

    HermitianBasis out;
    out.ambient_dim = d;
    out.threshold = kSvRelThreshold;
    out.constraint_pairs = static_cast<int>(constrained_pairs.size());

    Eigen::MatrixXd m(2 * constrained_pairs.size(), cols);
    int row = 0;
    for (const auto& [si, ti] : constrained_pairs) {
        const auto& s = party_vectors.at(si);
        const auto& t = party_vectors.at(ti);
        Eigen::VectorXcd coef(cols);
        int idx = 0;
        for (int i = 0; i < d; ++i) coef(idx++) = std::conj(s(i)) * t(i);
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                std::complex<double> fwd = std::conj(s(i)) * t(j);
                std::complex<double> bwd = std::conj(s(j)) * t(i);
                coef(idx++) = (fwd + bwd) * kInvSqrt2;
                coef(idx++) = std::complex<double>(0, 1) * (fwd - bwd) * kInvSqrt2;
            }
        m.row(row++) = coef.real().transpose();
        m.row(row++) = coef.imag().transpose();
    }

    Eigen::MatrixXd v;  // cols x cols orthonormal param basis
    int rank = 0;
    if (m.rows() == 0) {
        v = Eigen::MatrixXd::Identity(cols, cols);
    } else {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        out.sv_max = sv.size() > 0 ? sv(0) : 0.0;
        double cutoff = kSvRelThreshold * out.sv_max;
        for (int i = 0; i < sv.size(); ++i)
            if (sv(i) > cutoff) rank = i + 1;
        if (rank > 0) {
            out.sv_smallest_kept = sv(rank - 1);
            out.gap = cutoff > 0 ? out.sv_smallest_kept / cutoff : 0.0;
        }
        v = svd.matrixV();
    }
    out.dimension = cols - rank;
    for (int c = rank; c < cols; ++c)
        out.basis.push_back(params_to_hermitian(v.col(c), d));

    // The identity on the (restricted) space must always solve the system;
    // this is an invariant of orthogonal inputs, asserted on every call.
    Eigen::VectorXd ident = Eigen::VectorXd::Zero(cols);
    for (int i = 0; i < d; ++i) ident(i) = 1.0;
    Eigen::VectorXd residual = ident;
    for (int c = rank; c < cols; ++c) residual -= v.col(c).dot(ident) * v.col(c);
    if (residual.norm() > 1e-8 * ident.norm())
        throw std::logic_error("oplm_space: identity not in solution span (input not orthogonal?)");

    return out;
}

HermitianBasis oplm_space(const StateSet& set, int party_index, bool restrict_to_support) {
    if (set.states.empty()) throw std::invalid_argument("oplm_space: empty set");
    auto orth = check_orthogonality(set);
    if (!orth.orthogonal)
        throw std::invalid_argument("oplm_space: input set is not pairwise orthogonal");

    std::vector<int> indices;
    if (restrict_to_support) indices = support(set, party_index);
    else {
        indices.resize(set.space.parties.at(party_index).dim);
        std::iota(indices.begin(), indices.end(), 0);
    }

    std::vector<Eigen::VectorXcd> vectors;
    for (const auto& s : set.states) {
        const auto& f = s.factors.at(party_index);
        Eigen::VectorXcd v(indices.size());
        for (std::size_t i = 0; i < indices.size(); ++i)
            v(i) = f.entries.at(indices[i]).to_complex();
        vectors.push_back(std::move(v));
    }

    std::vector<std::pair<int, int>> pairs;
    const int n = static_cast<int>(set.states.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Cyclo overlap(1);
            for (std::size_t q = 0; q < set.space.arity(); ++q) {
                if (static_cast<int>(q) == party_index) continue;
                overlap *= local_inner(set.states[i], set.states[j], static_cast<int>(q));
                if (overlap.is_zero()) break;
            }
            if (!overlap.is_zero()) pairs.emplace_back(i, j);
        }

    HermitianBasis out = oplm_space_numeric(vectors, pairs);
    out.party = set.space.parties.at(party_index).label;
    out.restricted_to_support = restrict_to_support;
    return out;
}

bool is_trivial_oplm(const StateSet& set, int party_index) {
    return oplm_space(set, party_index, /*restrict_to_support=*/true).dimension == 1;
}

// --- irreducibility ------------------------------------------------------------------

namespace {

// Connected components of party indices, linked through state supports.
// Two or more state-bearing components yield a diagonal OPLM that
// eliminates states.
std::optional<LocalMeasurement> component_split(const StateSet& set, int party_index) {
    const int dim = set.space.parties.at(party_index).dim;
    std::vector<int> parent(dim);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& s : set.states) {
        auto sup = s.factors.at(party_index).support();
        for (std::size_t i = 1; i < sup.size(); ++i)
            parent[find(sup[i])] = find(sup[0]);
    }
    std::map<int, std::vector<int>> comp_indices;  // component root -> indices
    std::set<int> state_roots;
    for (const auto& s : set.states)
        state_roots.insert(find(s.factors.at(party_index).support().front()));
    if (state_roots.size() < 2) return std::nullopt;
    for (int i = 0; i < dim; ++i) {
        int r = find(i);
        comp_indices[state_roots.count(r) ? r : *state_roots.begin()].push_back(i);
    }
    LocalMeasurement m;
    m.party = set.space.parties.at(party_index).label;
    for (auto& [root, idx] : comp_indices) m.outcomes.push_back(idx);
    return m;
}

}  // namespace

IrreducibilityCertificate certify_irreducibility(const StateSet& set) {
    if (set.states.size() < 2)
        throw std::invalid_argument("certify_irreducibility: need at least two states");
    IrreducibilityCertificate cert;

    for (std::size_t p = 0; p < set.space.arity(); ++p) {
        if (auto m = component_split(set, static_cast<int>(p))) {
            auto check = is_orthogonality_preserving(set, *m);
            if (check.preserving) {
                cert.verdict = TriState::Refuted;
                cert.detail = "projective OPLM " + m->to_literal() + " eliminates states";
                cert.eliminating_measurement = *m;
                return cert;
            }
        }
    }

    bool all_trivial = true;
    for (std::size_t p = 0; p < set.space.arity(); ++p) {
        auto basis = oplm_space(set, static_cast<int>(p), true);
        if (basis.dimension != 1) {
            all_trivial = false;
            if (!cert.detail.empty()) cert.detail += "; ";
            cert.detail += "party " + basis.party + " OPLM space dimension " +
                           std::to_string(basis.dimension);
        }
        cert.per_party.push_back(std::move(basis));
    }
    cert.verdict = all_trivial ? TriState::Certified : TriState::Unknown;
    if (all_trivial) cert.detail = "trivial OPLM on every party";
    return cert;
}

// --- indistinguishability -------------------------------------------------------------

namespace {

bool proportional(const LocalVector& u, const LocalVector& v) {
    const auto n = u.entries.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (u.entries[a] * v.entries[b] != u.entries[b] * v.entries[a]) return false;
    return true;
}

}  // namespace

IndistinguishabilityCertificate certify_indistinguishability(
    const StateSet& set, const std::vector<std::string>& witness_labels) {
    IndistinguishabilityCertificate cert;

    StateSet sub;
    sub.space = set.space;
    if (witness_labels.empty()) {
        sub.states = set.states;
        for (const auto& s : set.states) cert.witness.push_back(s.label);
    } else {
        for (const auto& l : witness_labels) {
            sub.states.push_back(set.find(l));  // throws on unknown label
            cert.witness.push_back(l);
        }
    }
    if (sub.states.size() < 3) {
        cert.detail = "witness has fewer than 3 states; triviality cannot hold";
        return cert;
    }

    // restrict every party to the witness support
    for (std::size_t p = 0; p < sub.space.arity(); ++p)
        sub = restrict(sub, static_cast<int>(p), support(sub, static_cast<int>(p)));

    // parties with pairwise proportional factors carry no information about
    // the label and are locally preparable; drop them
    StateSet reduced;
    std::vector<int> kept_parties;
    for (std::size_t p = 0; p < sub.space.arity(); ++p) {
        bool constant = true;
        for (std::size_t s = 1; s < sub.states.size() && constant; ++s)
            constant = proportional(sub.states[0].factors[p], sub.states[s].factors[p]);
        if (!constant) kept_parties.push_back(static_cast<int>(p));
    }
    if (kept_parties.empty()) {
        cert.detail = "all witness factors proportional; no certification possible";
        return cert;
    }
    for (int p : kept_parties) reduced.space.parties.push_back(sub.space.parties[p]);
    for (const auto& s : sub.states) {
        ProductState ns;
        ns.label = s.label;
        for (int p : kept_parties) ns.factors.push_back(s.factors[p]);
        reduced.states.push_back(std::move(ns));
    }

    bool all_trivial = true;
    for (std::size_t p = 0; p < reduced.space.arity(); ++p) {
        auto basis = oplm_space(reduced, static_cast<int>(p), true);
        if (basis.dimension != 1) {
            all_trivial = false;
            if (!cert.detail.empty()) cert.detail += "; ";
            cert.detail += "party " + basis.party + " OPLM space dimension " +
                           std::to_string(basis.dimension);
        }
        cert.per_party.push_back(std::move(basis));
    }
    cert.certified = all_trivial;
    if (all_trivial)
        cert.detail = "trivial OPLM on every informative party of the witness";
    return cert;
}

// --- classifier ------------------------------------------------------------------------

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::TypeI: return "TypeI";
        case Verdict::StrongTypeI: return "StrongTypeI";
        case Verdict::TypeII: return "TypeII";
        case Verdict::NotEstablished: return "NotEstablished";
    }
    return "?";
}

Classification classify_hidden_nonlocality(const StateSet& set,
                                           const std::vector<LocalMeasurement>& ms,
                                           const ProtocolTree& protocol,
                                           const std::vector<std::vector<std::string>>& witnesses) {
    Classification cls;
    auto fail = [&](const std::string& reason) { cls.reasons.push_back(reason); };

    auto orth = check_orthogonality(set);
    if (!orth.orthogonal)
        fail("set is not pairwise orthogonal (" + std::to_string(orth.violations.size()) + " pairs)");

    auto vp = verify_protocol(set, protocol);
    cls.protocol_ok = vp.ok;
    if (!vp.ok) fail("protocol rejected: " + vp.trace);

    cls.irredundancy = certify_irredundancy(set);
    if (cls.irredundancy.verdict != IrredundancyVerdict::Irredundant)
        fail(cls.irredundancy.verdict == IrredundancyVerdict::Redundant
                 ? "set is locally redundant on party " + cls.irredundancy.redundant_party
                 : "irredundancy not established");

    auto op = is_orthogonality_preserving(set, ms);
    if (!op.preserving) fail("measurement is not orthogonality preserving");

    auto outcomes = measurement_outcomes(set, ms);
    if (!witnesses.empty() && witnesses.size() != outcomes.size())
        throw std::invalid_argument("classify: witness list count does not match outcome count");

    bool all_card_preserved = true;
    bool some_card_dropped = false;
    bool all_indist = true;
    bool all_irreducible = true;
    for (std::size_t o = 0; o < outcomes.size(); ++o) {
        Classification::OutcomeEvidence ev;
        ev.outcome_id = outcomes[o].outcome_id;
        ev.cardinality = outcomes[o].states.states.size();
        if (ev.cardinality == set.states.size()) { /* preserved */ }
        else { all_card_preserved = false; some_card_dropped = true; }

        std::vector<std::string> w = witnesses.empty() ? std::vector<std::string>{} : witnesses[o];
        ev.indistinguishability = certify_indistinguishability(outcomes[o].states, w);
        if (!ev.indistinguishability.certified) {
            all_indist = false;
            fail("outcome " + ev.outcome_id + " indistinguishability not certified: " +
                 ev.indistinguishability.detail);
        }

        if (outcomes[o].states.states.size() >= 2) {
            auto irr = certify_irreducibility(outcomes[o].states);
            ev.irreducibility = irr.verdict;
            if (irr.verdict != TriState::Certified) all_irreducible = false;
        } else {
            ev.irreducibility = TriState::Unknown;
            all_irreducible = false;
        }
        cls.outcomes.push_back(std::move(ev));
    }

    if (!cls.reasons.empty()) {
        cls.verdict = Verdict::NotEstablished;
        return cls;
    }
    if (all_card_preserved)
        cls.verdict = all_irreducible ? Verdict::StrongTypeI : Verdict::TypeI;
    else if (some_card_dropped && all_indist)
        cls.verdict = Verdict::TypeII;
    return cls;
}

}  // namespace hnl
