#include "hnl/families.hpp"

#include <sstream>
#include <stdexcept>

namespace hnl {

namespace {

LocalVector basis(const std::string& party, int dim, int i) {
    LocalVector v{party, std::vector<Cyclo>(dim)};
    v.entries.at(i) = Cyclo(1);
    return v;
}

// |i> - |j>
LocalVector diff(const std::string& party, int dim, int i, int j) {
    LocalVector v{party, std::vector<Cyclo>(dim)};
    v.entries.at(i) = Cyclo(1);
    v.entries.at(j) = Cyclo(-1);
    return v;
}

// |m> + |m+1> + ... + |n>
LocalVector range_sum(const std::string& party, int dim, int m, int n) {
    LocalVector v{party, std::vector<Cyclo>(dim)};
    for (int k = m; k <= n; ++k) v.entries.at(k) = Cyclo(1);
    return v;
}

ProductState make(const std::string& label, LocalVector a, LocalVector b) {
    return ProductState{label, {std::move(a), std::move(b)}};
}

std::string party_letter(int i) { return std::string(1, static_cast<char>('A' + i)); }

}  // namespace

std::string FamilyId::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case FamilyKind::Yu: os << "yu:" << params.at(0); break;
        case FamilyKind::TypeI: os << "type1:" << params.at(0); break;
        case FamilyKind::StrongTypeI11: os << "strong11"; break;
        case FamilyKind::TypeII78: os << "type2-78"; break;
        case FamilyKind::MultipartyTypeI:
            os << "multi:";
            for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
            break;
    }
    return os.str();
}

FamilyId FamilyId::parse(const std::string& text) {
    auto int_tail = [&](std::size_t off) {
        try {
            return std::stoi(text.substr(off));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad family id '" + text + "'");
        }
    };
    if (text.rfind("yu:", 0) == 0) return {FamilyKind::Yu, {int_tail(3)}};
    if (text.rfind("type1:", 0) == 0) return {FamilyKind::TypeI, {int_tail(6)}};
    if (text == "strong11") return {FamilyKind::StrongTypeI11, {}};
    if (text == "type2-78") return {FamilyKind::TypeII78, {}};
    if (text.rfind("multi:", 0) == 0) {
        std::vector<int> dims;
        std::stringstream ss(text.substr(6));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                dims.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad family id '" + text + "'");
            }
        }
        if (dims.empty()) throw std::invalid_argument("bad family id '" + text + "'");
        return {FamilyKind::MultipartyTypeI, dims};
    }
    throw std::invalid_argument("unknown family id '" + text + "'");
}

StateSet yu_set(int d) {
    if (d < 3) throw std::invalid_argument("yu_set: d must be >= 3");
    StateSet set;
    set.space = SpaceSpec::bipartite(d, d);
    // {|n>|0-n>} for n=1..d-1
    for (int n = 1; n < d; ++n)
        set.states.push_back(make("h" + std::to_string(n), basis("A", d, n), diff("B", d, 0, n)));
    // {|0-n>|n_+>} with n_+ = n+1 except n_+ = 1 at n = d-1
    for (int n = 1; n < d; ++n) {
        int np = (n == d - 1) ? 1 : n + 1;
        set.states.push_back(make("v" + std::to_string(n), diff("A", d, 0, n), basis("B", d, np)));
    }
    set.states.push_back(make("S", range_sum("A", d, 0, d - 1), range_sum("B", d, 0, d - 1)));
    set.validate();
    return set;
}

StateSet type1_set(int d) {
    if (d < 11 || d % 2 == 0) throw std::invalid_argument("type1_set: d must be odd and >= 11");
    const int k = (d - 1) / 2;
    StateSet set;
    set.space = SpaceSpec::bipartite(d, d);
    auto psi = [](int i) { return "psi" + std::to_string(i); };
    auto phi = [](int i) { return "phi" + std::to_string(i); };

    // psi_n = |n> (|0> - |n> + |d-1-n> - |d-1>), n = 1..k-1
    for (int n = 1; n <= k - 1; ++n) {
        LocalVector b{"B", std::vector<Cyclo>(d)};
        b.entries[0] += Cyclo(1);
        b.entries[n] -= Cyclo(1);
        b.entries[d - 1 - n] += Cyclo(1);
        b.entries[d - 1] -= Cyclo(1);
        set.states.push_back(make(psi(n), basis("A", d, n), std::move(b)));
    }
    // psi_{k-1+n} = (|0> - |sigma(n)>)(|n> - |d-1-n>), sigma(1)=k-1, else n-1
    for (int n = 1; n <= k - 1; ++n) {
        int sigma = (n == 1) ? k - 1 : n - 1;
        set.states.push_back(make(psi(k - 1 + n), diff("A", d, 0, sigma), diff("B", d, n, d - 1 - n)));
    }
    set.states.push_back(make(psi(2 * k - 1), range_sum("A", d, 0, k - 1), range_sum("B", d, 0, d - 1)));

    // phi_n = |k+n> (|k> - |k+n> + |L0> - |L1>)
    for (int n = 1; n <= k; ++n) {
        int l0, l1;
        if (n == 1) { l0 = k - 3; l1 = k - 2; }
        else if (n == 2) { l0 = k - 2; l1 = k - 1; }
        else { l0 = k - n; l1 = k - 1; }
        LocalVector b{"B", std::vector<Cyclo>(d)};
        b.entries[k] += Cyclo(1);
        b.entries[k + n] -= Cyclo(1);
        b.entries[l0] += Cyclo(1);
        b.entries[l1] -= Cyclo(1);
        set.states.push_back(make(phi(n), basis("A", d, k + n), std::move(b)));
    }
    // phi_{k+n} = (|k> - |k+tau(n)>)(|k+n> - |R_n>), tau(1)=k else n-1;
    // R_1=k-2, R_2=k-1, R_n=k-n
    for (int n = 1; n <= k; ++n) {
        int tau = (n == 1) ? k : n - 1;
        int r = (n == 1) ? k - 2 : (n == 2) ? k - 1 : k - n;
        set.states.push_back(make(phi(k + n), diff("A", d, k, k + tau), diff("B", d, k + n, r)));
    }
    set.states.push_back(make(phi(2 * k + 1), range_sum("A", d, k, d - 1), range_sum("B", d, 0, d - 1)));
    set.validate();
    return set;
}

StateSet strong_type1_set() {
    const int d = 11;
    StateSet set;
    set.space = SpaceSpec::bipartite(d, d);
    auto psi = [](int i) { return "psi" + std::to_string(i); };

    // Row states |n>(|b0> - |b1> + |b2> - |b3>), written out from the listing.
    struct Row { int a; int b0, b1, b2, b3; };
    const Row rows[] = {
        {1, 3, 4, 5, 6},
        {2, 2, 4, 5, 7},
        {3, 1, 4, 5, 8},
        {4, 0, 4, 5, 9},
    };
    for (const auto& r : rows) {
        LocalVector b{"B", std::vector<Cyclo>(d)};
        b.entries[r.b0] += Cyclo(1);
        b.entries[r.b1] -= Cyclo(1);
        b.entries[r.b2] += Cyclo(1);
        b.entries[r.b3] -= Cyclo(1);
        set.states.push_back(make(psi(r.a), basis("A", d, r.a), std::move(b)));
    }
    // psi_{4+n} = (|0> - |sigma>)(|c0> - |c1>)
    struct Col { int i; int sigma; int c0, c1; };
    const Col cols[] = {
        {5, 4, 3, 6},
        {6, 1, 2, 7},
        {7, 2, 1, 8},
        {8, 3, 0, 9},
    };
    for (const auto& c : cols)
        set.states.push_back(make(psi(c.i), diff("A", d, 0, c.sigma), diff("B", d, c.c0, c.c1)));

    // phi block identical to type1_set(11)
    StateSet base = type1_set(11);
    for (const auto& s : base.states)
        if (s.label.rfind("phi", 0) == 0 && s.label != "phi11") set.states.push_back(s);

    set.states.push_back(make("S", range_sum("A", d, 0, 10), range_sum("B", d, 0, 10)));
    set.states.push_back(make("M", diff("A", d, 1, 6), diff("B", d, 0, 9)));
    set.validate();
    return set;
}

StateSet type2_set_78() {
    const int da = 7, db = 8;
    StateSet set;
    set.space = SpaceSpec::bipartite(da, db);
    auto A = [&](const std::string& k) { auto v = parse_ket(k, da); v.party = "A"; return v; };
    auto B = [&](const std::string& k) { auto v = parse_ket(k, db); v.party = "B"; return v; };
    auto add = [&](const std::string& label, LocalVector a, LocalVector b) {
        set.states.push_back(make(label, std::move(a), std::move(b)));
    };

    add("psi1", A("|0>"), B("|0>+|1>"));
    add("psi2", A("|0>"), B("|0>-|1>"));
    add("psi3", A("|0>"), B("|2>+|3>"));
    add("psi4", A("|0>"), B("|2>-|3>"));
    add("psi5", A("|0>+|1>+|2>"), B("|4>"));
    add("psi6", A("|0>+w|1>+w^2|2>"), B("|4>"));
    add("psi7", A("|0>+w^2|1>+w|2>"), B("|4>"));
    add("psi8", A("|3>"), B("|3>+|4>+|5>+|6>"));
    add("psi9", A("|3>"), B("|3>-|4>+|5>-|6>"));
    add("psi10", A("|3>"), B("|1>+|2>"));
    add("psi11", A("|3>"), B("|1>-|2>"));
    add("psi12", A("|1>+|2>+|3>"), B("|0>"));
    add("psi13", A("|1>+w|2>+w^2|3>"), B("|0>"));
    add("psi14", A("|1>+w^2|2>+w|3>"), B("|0>"));
    add("phi1", A("|4>"), B("|5>+|6>+|3>+|4>"));
    add("phi2", A("|4>"), B("|5>-|6>+|3>-|4>"));
    add("phi3", A("|4>+|5>"), B("|7>"));
    add("phi4", A("|4>-|5>"), B("|7>"));
    add("phi5", A("|6>"), B("|6>+|7>"));
    add("phi6", A("|6>"), B("|6>-|7>"));
    add("phi7", A("|5>+|6>"), B("|5>"));
    add("phi8", A("|5>-|6>"), B("|5>"));
    set.validate();
    return set;
}

bool filler_is_valid(int d, const ProductState& candidate, const StateSet& family) {
    const int k = (d - 1) / 2;
    const auto& fa = candidate.factors[0];
    const auto& fb = candidate.factors[1];

    // (1a) orthogonal to every family state
    for (const auto& s : family.states)
        if (!inner_product(s, candidate).is_zero()) return false;

    // (1b) the union stays locally distinguishable: for every Alice basis
    // outcome, the surviving states' B parts must be pairwise orthogonal.
    std::vector<const ProductState*> all;
    for (const auto& s : family.states) all.push_back(&s);
    all.push_back(&candidate);
    for (int a = 0; a < d; ++a) {
        std::vector<const ProductState*> alive;
        for (auto* s : all)
            if (!s->factors[0].entries[a].is_zero()) alive.push_back(s);
        for (std::size_t i = 0; i < alive.size(); ++i)
            for (std::size_t j = i + 1; j < alive.size(); ++j)
                if (!local_inner(*alive[i], *alive[j], 1).is_zero()) return false;
    }

    // (2) both halves of the B measurement leave the candidate nonzero
    auto half_piece = [&](const LocalVector& v, bool lower) {
        LocalVector p = v;
        for (int i = 0; i < d; ++i)
            if ((i < k) != lower) p.entries[i] = Cyclo(0);
        return p;
    };
    for (bool lower : {true, false}) {
        if (half_piece(fb, lower).is_zero()) return false;
        // (3) measured piece orthogonal to each family state's measured piece
        LocalVector cb = half_piece(fb, lower);
        for (const auto& s : family.states) {
            LocalVector sb = half_piece(s.factors[1], lower);
            if (sb.is_zero()) continue;
            Cyclo b_inner;
            for (int i = 0; i < d; ++i) b_inner += cb.entries[i].conj() * sb.entries[i];
            Cyclo a_inner;
            for (int i = 0; i < d; ++i) a_inner += fa.entries[i].conj() * s.factors[0].entries[i];
            if (!(a_inner * b_inner).is_zero()) return false;
        }
    }
    return true;
}

ProductState filler_state(int d) {
    if (d < 11 || d % 2 == 0) throw std::invalid_argument("filler_state: d must be odd and >= 11");
    const int k = (d - 1) / 2;
    StateSet family = type1_set(d);

    auto candidate = [&](int r1, int r2, int c1, int c2) {
        return make("Fill", diff("A", d, r1, r2), diff("B", d, c1, c2));
    };

    // Rectangles whose rows straddle the two halves always violate the
    // measured-piece property (3) against the two full-sum states: the
    // A-inner is +-1 and the halved column difference hits the full sum with
    // weight +-1.  Valid rectangles keep both rows in one half while the
    // columns straddle (property (2) forces that).  Lexicographic search.
    for (int r1 = 0; r1 <= d - 2; ++r1)
        for (int r2 = r1 + 1; r2 <= d - 1; ++r2)
            for (int c1 = 0; c1 <= k - 1; ++c1)
                for (int c2 = k; c2 <= d - 1; ++c2) {
                    auto c = candidate(r1, r2, c1, c2);
                    if (filler_is_valid(d, c, family)) return c;
                }
    throw std::runtime_error("filler_state: no valid rectangle found for d=" + std::to_string(d));
}

StateSet multiparty_type1(const std::vector<int>& d_list) {
    if (d_list.empty()) throw std::invalid_argument("multiparty_type1: empty dim list");
    for (int d : d_list)
        if (d < 11 || d % 2 == 0)
            throw std::invalid_argument("multiparty_type1: block dims must be odd and >= 11");
    const int n_blocks = static_cast<int>(d_list.size());
    if (2 * n_blocks > 26)
        throw std::invalid_argument("multiparty_type1: too many blocks for letter party labels");

    StateSet out;
    std::vector<std::pair<std::string, int>> parts;
    for (int i = 0; i < n_blocks; ++i) {
        parts.emplace_back(party_letter(2 * i), d_list[i]);
        parts.emplace_back(party_letter(2 * i + 1), d_list[i]);
    }
    out.space = SpaceSpec::of_dims(parts);

    std::vector<StateSet> blocks;
    std::vector<ProductState> fillers;
    for (int i = 0; i < n_blocks; ++i) {
        blocks.push_back(type1_set(d_list[i]));
        fillers.push_back(filler_state(d_list[i]));
    }

    for (int i = 0; i < n_blocks; ++i) {
        for (const auto& s : blocks[i].states) {
            ProductState ps;
            ps.label = "b" + std::to_string(i + 1) + "." + s.label;
            for (int j = 0; j < n_blocks; ++j) {
                const ProductState& src = (j == i) ? s : fillers[j];
                LocalVector a = src.factors[0];
                LocalVector b = src.factors[1];
                a.party = party_letter(2 * j);
                b.party = party_letter(2 * j + 1);
                ps.factors.push_back(std::move(a));
                ps.factors.push_back(std::move(b));
            }
            out.states.push_back(std::move(ps));
        }
    }
    out.validate();
    return out;
}

StateSet construct_family(const FamilyId& id) {
    switch (id.kind) {
        case FamilyKind::Yu: return yu_set(id.params.at(0));
        case FamilyKind::TypeI: return type1_set(id.params.at(0));
        case FamilyKind::StrongTypeI11: return strong_type1_set();
        case FamilyKind::TypeII78: return type2_set_78();
        case FamilyKind::MultipartyTypeI: return multiparty_type1(id.params);
    }
    throw std::logic_error("unreachable");
}

}  // namespace hnl
