#include "hnl/protocols.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hnl {

std::size_t ProtocolTree::depth() const {
    std::size_t d = 0;
    for (const auto& c : children) d = std::max(d, c->depth());
    return d + (kind == Kind::Leaf ? 0 : 1);
}

std::size_t ProtocolTree::node_count() const {
    std::size_t n = 1;
    for (const auto& c : children) n += c->node_count();
    return n;
}

namespace {

Cyclo vec_inner(const LocalVector& u, const LocalVector& v) {
    Cyclo acc;
    for (std::size_t k = 0; k < u.entries.size(); ++k)
        acc += u.entries[k].conj() * v.entries[k];
    return acc;
}

std::string label_list(const std::vector<ProductState>& states) {
    std::string out;
    for (const auto& s : states) {
        if (!out.empty()) out += ",";
        out += s.label;
    }
    return out;
}

struct Verifier {
    const SpaceSpec& space;
    std::string fail;

    bool leaf_ok(const std::vector<ProductState>& cands, const std::string& path) {
        if (cands.size() <= 1) return true;
        for (std::size_t q = 0; q < space.arity(); ++q) {
            bool split = true;
            for (std::size_t i = 0; i < cands.size() && split; ++i)
                for (std::size_t j = i + 1; j < cands.size() && split; ++j)
                    if (!vec_inner(cands[i].factors[q], cands[j].factors[q]).is_zero())
                        split = false;
            if (split) return true;
        }
        fail = path + ": leaf with candidates {" + label_list(cands) +
               "} not pairwise orthogonal on any single party";
        return false;
    }

    bool walk(const ProtocolTree& node, const std::vector<ProductState>& cands,
              const std::string& path) {
        if (node.kind == ProtocolTree::Kind::Leaf) return leaf_ok(cands, path);

        int p;
        try {
            p = space.index_of(node.party);
        } catch (const std::exception& e) {
            fail = path + ": " + e.what();
            return false;
        }
        const int dim = space.parties[p].dim;
        std::vector<bool> covered(cands.size(), false);
        std::vector<std::vector<ProductState>> branches;

        if (node.kind == ProtocolTree::Kind::Diagonal) {
            LocalMeasurement m{node.party, node.subsets};
            try {
                m.validate(dim);
            } catch (const std::exception& e) {
                fail = path + ": " + e.what();
                return false;
            }
            if (node.children.size() != node.subsets.size()) {
                fail = path + ": child count does not match outcome count";
                return false;
            }
            for (const auto& subset : node.subsets) {
                std::vector<bool> keep(dim, false);
                for (int i : subset) keep[i] = true;
                std::vector<ProductState> next;
                for (std::size_t c = 0; c < cands.size(); ++c) {
                    ProductState s = cands[c];
                    for (int i = 0; i < dim; ++i)
                        if (!keep[i]) s.factors[p].entries[i] = Cyclo();
                    if (!s.factors[p].is_zero()) {
                        covered[c] = true;
                        next.push_back(std::move(s));
                    }
                }
                branches.push_back(std::move(next));
            }
        } else {  // Projective
            if (node.kets.empty()) {
                fail = path + ": projective node without kets";
                return false;
            }
            if (node.children.size() != node.kets.size() + 1) {
                fail = path + ": projective node needs one child per ket plus complement";
                return false;
            }
            for (const auto& v : node.kets) {
                if (static_cast<int>(v.entries.size()) != dim || v.is_zero()) {
                    fail = path + ": projective ket has wrong dimension or is zero";
                    return false;
                }
            }
            for (std::size_t i = 0; i < node.kets.size(); ++i)
                for (std::size_t j = i + 1; j < node.kets.size(); ++j)
                    if (!vec_inner(node.kets[i], node.kets[j]).is_zero()) {
                        fail = path + ": projective kets are not pairwise orthogonal";
                        return false;
                    }
            for (const auto& v : node.kets) {
                Cyclo vv = vec_inner(v, v);
                std::vector<ProductState> next;
                for (std::size_t c = 0; c < cands.size(); ++c) {
                    Cyclo ov = vec_inner(v, cands[c].factors[p]);
                    if (ov.is_zero()) continue;
                    ProductState s = cands[c];
                    s.factors[p] = v.scaled(ov / vv);
                    covered[c] = true;
                    next.push_back(std::move(s));
                }
                branches.push_back(std::move(next));
            }
            {
                std::vector<ProductState> next;
                for (std::size_t c = 0; c < cands.size(); ++c) {
                    ProductState s = cands[c];
                    for (const auto& v : node.kets) {
                        Cyclo ov = vec_inner(v, s.factors[p]);
                        if (ov.is_zero()) continue;
                        LocalVector proj = v.scaled(ov / vec_inner(v, v));
                        for (int i = 0; i < dim; ++i)
                            s.factors[p].entries[i] -= proj.entries[i];
                    }
                    if (!s.factors[p].is_zero()) {
                        covered[c] = true;
                        next.push_back(std::move(s));
                    }
                }
                branches.push_back(std::move(next));
            }
        }

        for (std::size_t c = 0; c < cands.size(); ++c)
            if (!covered[c]) {
                fail = path + ": candidate " + cands[c].label + " vanishes from every outcome";
                return false;
            }
        for (std::size_t k = 0; k < branches.size(); ++k) {
            std::string step = path + "/" + node.party + "[" + std::to_string(k + 1) + "]";
            if (!walk(*node.children[k], branches[k], step)) return false;
        }
        return true;
    }
};

}  // namespace

VerifyResult verify_protocol(const StateSet& set, const ProtocolTree& tree) {
    set.validate();
    Verifier v{set.space, {}};
    VerifyResult res;
    res.ok = v.walk(tree, set.states, "root");
    res.trace = v.fail;
    return res;
}

// --- builtin protocols ----------------------------------------------------------

namespace {

std::unique_ptr<ProtocolTree> leaf() { return std::make_unique<ProtocolTree>(); }

// Diagonal node from "party" and subsets; children supplied by the caller in
// outcome order.
ProtocolTree diag(const std::string& party, std::vector<std::vector<int>> subsets,
                  std::vector<std::unique_ptr<ProtocolTree>> children) {
    ProtocolTree t;
    t.kind = ProtocolTree::Kind::Diagonal;
    t.party = party;
    t.subsets = std::move(subsets);
    t.children = std::move(children);
    return t;
}

std::vector<std::vector<int>> full_basis(int dim) {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < dim; ++i) out.push_back({i});
    return out;
}

// One round: measure A in the computational basis; the d=11/13 families and
// the strong-form set finish on B after that.
ProtocolTree basis_then_finish(int dim_a) {
    std::vector<std::unique_ptr<ProtocolTree>> kids;
    for (int i = 0; i < dim_a; ++i) kids.push_back(leaf());
    return diag("A", full_basis(dim_a), std::move(kids));
}

std::vector<int> range(int lo, int hi) {  // inclusive
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return out;
}

ProtocolTree type2_78_protocol() {
    // Worked out against the 22-state C^7 x C^8 set: split A into the psi
    // block columns {0..3} and the phi block columns {4..6}, separate the
    // straddling B rows {4,5}, then finish with short local rounds.
    auto mk = [](ProtocolTree t) { return std::make_unique<ProtocolTree>(std::move(t)); };

    // A in {0..3}, B in {4,5}
    ProtocolTree n11 = diag("A", {range(0, 2), range(3, 6)}, [&] {
        std::vector<std::unique_ptr<ProtocolTree>> k;
        k.push_back(leaf());
        k.push_back(leaf());
        return k;
    }());
    // A in {0..3}, B outside {4,5}
    ProtocolTree n12b = diag("B", {{0}, range(1, 7)}, [&] {
        std::vector<std::unique_ptr<ProtocolTree>> k;
        k.push_back(leaf());
        k.push_back(leaf());
        return k;
    }());
    ProtocolTree n12 = diag("A", {{0}, range(1, 6)}, [&] {
        std::vector<std::unique_ptr<ProtocolTree>> k;
        k.push_back(leaf());
        k.push_back(mk(std::move(n12b)));
        return k;
    }());
    ProtocolTree left = diag("B", {{4, 5}, {0, 1, 2, 3, 6, 7}}, [&] {
        std::vector<std::unique_ptr<ProtocolTree>> k;
        k.push_back(mk(std::move(n11)));
        k.push_back(mk(std::move(n12)));
        return k;
    }());

    // A in {4..6}, B in {4,5}
    ProtocolTree n21 = diag("A", {{4}, {0, 1, 2, 3, 5, 6}}, [&] {
        std::vector<std::unique_ptr<ProtocolTree>> k;
        k.push_back(leaf());
        k.push_back(leaf());
        return k;
    }());
    // A in {4..6}, B outside {4,5}
    ProtocolTree n22a = diag("B", {{7}, range(0, 6)}, [&] {
        std::vector<std::unique_ptr<ProtocolTree>> k;
        k.push_back(leaf());
        k.push_back(leaf());
        return k;
    }());
    ProtocolTree n22 = diag("A", {{4, 5}, {0, 1, 2, 3, 6}}, [&] {
        std::vector<std::unique_ptr<ProtocolTree>> k;
        k.push_back(mk(std::move(n22a)));
        k.push_back(leaf());
        return k;
    }());
    ProtocolTree right = diag("B", {{4, 5}, {0, 1, 2, 3, 6, 7}}, [&] {
        std::vector<std::unique_ptr<ProtocolTree>> k;
        k.push_back(mk(std::move(n21)));
        k.push_back(mk(std::move(n22)));
        return k;
    }());

    return diag("A", {range(0, 3), range(4, 6)}, [&] {
        std::vector<std::unique_ptr<ProtocolTree>> k;
        k.push_back(mk(std::move(left)));
        k.push_back(mk(std::move(right)));
        return k;
    }());
}

struct BlockData {
    int dim;
    std::string party_a, party_b;
    StateSet family;
    ProductState fill;
};

// Blocks are peeled front to back: measure the block's A party in the
// computational basis; outcomes inside the filler support get a projective
// B round whose kets isolate that block's surviving states (each residual
// is orthogonal to the B-side filler factor), with the complement carrying
// every later block onward.
ProtocolTree multiparty_block(const std::vector<BlockData>& blocks, std::size_t i) {
    const auto& blk = blocks[i];
    std::vector<std::unique_ptr<ProtocolTree>> kids;
    for (int a = 0; a < blk.dim; ++a) {
        bool fill_alive =
            i + 1 < blocks.size() && !blk.fill.factors[0].entries[a].is_zero();
        if (!fill_alive) {
            kids.push_back(std::make_unique<ProtocolTree>());
            continue;
        }
        std::vector<LocalVector> kets;
        for (const auto& s : blk.family.states)
            if (!s.factors[0].entries[a].is_zero()) kets.push_back(s.factors[1]);
        if (kets.empty()) {
            // only later blocks survive this outcome
            kids.push_back(std::make_unique<ProtocolTree>(multiparty_block(blocks, i + 1)));
            continue;
        }
        ProtocolTree proj;
        proj.kind = ProtocolTree::Kind::Projective;
        proj.party = blk.party_b;
        proj.kets = std::move(kets);
        for (std::size_t k = 0; k < proj.kets.size(); ++k)
            proj.children.push_back(std::make_unique<ProtocolTree>());
        proj.children.push_back(
            std::make_unique<ProtocolTree>(multiparty_block(blocks, i + 1)));
        kids.push_back(std::make_unique<ProtocolTree>(std::move(proj)));
    }
    return diag(blk.party_a, full_basis(blk.dim), std::move(kids));
}

ProtocolTree multiparty_protocol(const std::vector<int>& dims) {
    std::vector<BlockData> blocks;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        BlockData b;
        b.dim = dims[i];
        b.party_a = std::string(1, static_cast<char>('A' + 2 * i));
        b.party_b = std::string(1, static_cast<char>('A' + 2 * i + 1));
        b.family = type1_set(dims[i]);
        b.fill = filler_state(dims[i]);
        blocks.push_back(std::move(b));
    }
    return multiparty_block(blocks, 0);
}

}  // namespace

ProtocolTree builtin_protocol(const FamilyId& id) {
    switch (id.kind) {
        case FamilyKind::Yu:
            throw std::invalid_argument(
                "no builtin protocol: this family is locally indistinguishable");
        case FamilyKind::TypeI:
            return basis_then_finish(id.params.at(0));
        case FamilyKind::StrongTypeI11:
            return basis_then_finish(11);
        case FamilyKind::TypeII78:
            return type2_78_protocol();
        case FamilyKind::MultipartyTypeI:
            return multiparty_protocol(id.params);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace hnl
