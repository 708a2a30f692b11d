#include "atoms.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mincut_ref.hpp"
#include "packing.hpp"

namespace qmincut {

std::vector<int> one_respecting_set(const CutEvaluator& ev, uint64_t thr) {
    std::vector<int> out;
    for (int u = 0; u < ev.n; u++) {
        if (u == ev.t->root) continue;
        if (ev.single[u] <= thr) out.push_back(u);
    }
    return out;
}

std::vector<TwoRespectId> spanning_forest_L(const CutEvaluator& ev, uint64_t thr,
                                            QueryLedger& led, Rng& rng) {
    std::vector<int> verts; // the tree edges, named by child vertex
    for (int u = 0; u < ev.n; u++)
        if (u != ev.t->root) verts.push_back(u);
    int nl = (int)verts.size();

    std::vector<int> parent(nl);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<TwoRespectId> forest;

    bool merged = true;
    while (merged) {
        merged = false;
        std::vector<std::vector<int>> members(nl);
        for (int i = 0; i < nl; i++) members[find(i)].push_back(i);

        // one candidate outgoing edge per component
        std::vector<std::pair<TwoRespectId, std::pair<int, int>>> cands;
        for (int c = 0; c < nl; c++) {
            if (members[c].empty() || (int)members[c].size() == nl) continue;
            std::vector<int> outside;
            for (int i = 0; i < nl; i++)
                if (find(i) != c) outside.push_back(i);
            const auto& inside = members[c];
            SearchSpace s;
            s.N = (uint64_t)inside.size() * outside.size();
            s.marked = [&](uint64_t idx) {
                int a = verts[inside[idx / outside.size()]];
                int b = verts[outside[idx % outside.size()]];
                return ev.eval({a, b}) <= thr;
            };
            auto hit = grover_search(s, led, "pair_forest", rng);
            if (!hit) continue;
            int ia = inside[*hit / outside.size()];
            int ib = outside[*hit % outside.size()];
            cands.push_back({{verts[ia], verts[ib]}, {ia, ib}});
        }
        for (auto& [id, ab] : cands) {
            int ra = find(ab.first), rb = find(ab.second);
            if (ra == rb) continue; // a chained merge already joined them
            parent[ra] = rb;
            forest.push_back(id);
            merged = true;
        }
    }
    return forest;
}

std::vector<TwoRespectId> generating_set_for_tree(const WeightedGraph& g,
                                                  const RootedTree& t,
                                                  uint64_t thr, QueryLedger& led,
                                                  Rng& rng) {
    CutEvaluator ev = build_evaluator(g, t);
    std::vector<TwoRespectId> q;
    for (int u : one_respecting_set(ev, thr)) q.push_back({u, -1});
    for (const TwoRespectId& id : spanning_forest_L(ev, thr, led, rng))
        q.push_back(id);
    return q;
}

ShoreFamily shores_of_ids(const RootedTree& t, const std::vector<TwoRespectId>& q) {
    ShoreFamily fam;
    fam.n = t.n;
    for (const TwoRespectId& id : q) fam.shores.push_back(shore_of(t, id));
    return fam;
}

Partition atoms_by_hashing(const RootedTree& t, const std::vector<TwoRespectId>& q,
                           Rng& rng) {
    uint64_t m = (uint64_t)t.n * t.n * t.n;
    if (m < 2) m = 2;
    std::vector<std::pair<int, uint64_t>> ops;
    for (const TwoRespectId& id : q) {
        uint64_t l = rng.below(m);
        if (!id.pair()) {
            ops.emplace_back(id.a, l);
        } else if (t.is_ancestor(id.a, id.b)) {
            // shore = subtree(a) minus subtree(b): inner subtree cancels back
            // to the key of the outside
            ops.emplace_back(id.a, l);
            ops.emplace_back(id.b, m - l);
        } else if (t.is_ancestor(id.b, id.a)) {
            ops.emplace_back(id.b, l);
            ops.emplace_back(id.a, m - l);
        } else {
            ops.emplace_back(id.a, l);
            ops.emplace_back(id.b, l);
        }
    }
    return partition_from_labels(subtree_add_batch(t, ops, m));
}

Partition learn_cut_atoms(const WeightedGraph& h, uint64_t thr, double delta,
                          Rng rng, QueryLedger& led, int64_t known_lambda) {
    if (h.n < 2) throw std::invalid_argument("need at least 2 vertices");
    if (delta <= 0 || delta >= 1) throw std::invalid_argument("delta in (0,1)");
    uint64_t lam = known_lambda >= 0 ? (uint64_t)known_lambda
                                     : stoer_wagner(h).lambda;
    if (16 * thr > 17 * lam)
        throw std::invalid_argument("threshold above (1+1/16)*lambda");

    std::vector<std::vector<int>> trees = karger_trees(h, rng.split(1));
    int repeats = std::max(1, (int)std::ceil(std::log2(1.0 / delta)));

    // per-tree atoms, combined by concatenating block-id signatures.  The
    // forest searches probe the explicit graph h, not the hidden input, so
    // their simulated search cost is reported as a non-summed diagnostic
    // rather than an oracle charge.
    QueryLedger forest_led;
    std::vector<std::vector<uint64_t>> sig(h.n);
    for (size_t i = 0; i < trees.size(); i++) {
        std::vector<std::pair<int, int>> te;
        for (int e : trees[i]) te.emplace_back(h.edges[e].u, h.edges[e].v);
        RootedTree t = root_tree(h.n, te, 0);
        Rng tr = rng.split(100 + i);
        std::vector<TwoRespectId> q =
            generating_set_for_tree(h, t, thr, forest_led, tr);
        // hash collisions only merge blocks; independent repeats and the
        // common refinement drive the failure odds below delta
        Partition p = atoms_by_hashing(t, q, tr);
        for (int r = 1; r < repeats; r++)
            p = refine(p, atoms_by_hashing(t, q, tr));
        for (int v = 0; v < h.n; v++) sig[v].push_back((uint64_t)p.block[v]);
    }
    led.detail["atoms_forest"] += forest_led.quantum_charge;
    return partition_from_signatures(sig);
}

} // namespace qmincut
