#include "solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "atoms.hpp"
#include "mincut_ref.hpp"
#include "sparsifier.hpp"

namespace qmincut {

namespace {

uint64_t weighted_degree_by_matrix(const OracleHandle& h, int v) {
    uint64_t s = 0;
    for (int u = 0; u < h.g->n; u++)
        if (u != v) s += h.matrix_query(u, v);
    return s;
}

uint64_t weighted_degree_by_array(const OracleHandle& h, int v, int deg) {
    uint64_t s = 0;
    for (int i = 1; i <= deg; i++) s += h.array_query(v, i).second;
    return s;
}

} // namespace

MinStar find_min_star(const OracleHandle& h, Rng& rng) {
    int n = h.g->n;
    if (n < 2) throw std::invalid_argument("need at least 2 vertices");
    MinStar best;

    if (h.model == Model::matrix) {
        SearchSpace s;
        s.N = n;
        s.cost_per_probe = n;
        s.value = [&](uint64_t v) { return weighted_degree_by_matrix(h, (int)v); };
        best.vertex = (int)min_find(s, *h.ledger, "min_star", rng);
        best.weight = weighted_degree_by_matrix(h, best.vertex);
        return best;
    }

    // array model: bucket vertices by degree scale, then minimum finding per
    // bucket with the bucket's degree cap as probe cost
    std::vector<int> deg(n);
    for (int v = 0; v < n; v++) deg[v] = h.degree_query(v);
    std::vector<std::vector<int>> buckets;
    for (int v = 0; v < n; v++) {
        int l = 0;
        while ((1 << (l + 1)) <= std::max(1, deg[v])) l++;
        if ((int)buckets.size() <= l) buckets.resize(l + 1);
        buckets[l].push_back(v);
    }
    uint64_t best_w = UINT64_MAX;
    for (size_t l = 0; l < buckets.size(); l++) {
        if (buckets[l].empty()) continue;
        SearchSpace s;
        s.N = buckets[l].size();
        s.cost_per_probe = 1ull << (l + 1);
        s.value = [&](uint64_t i) {
            int v = buckets[l][i];
            return weighted_degree_by_array(h, v, deg[v]);
        };
        int v = buckets[l][min_find(s, *h.ledger, "min_star", rng)];
        uint64_t w = weighted_degree_by_array(h, v, deg[v]);
        if (w < best_w) {
            best_w = w;
            best.vertex = v;
        }
    }
    best.weight = best_w;
    return best;
}

namespace {

// extreme edge weight via minimum finding; want_min skips non-edges
uint64_t extreme_weight(const OracleHandle& h, Rng& rng, bool want_min) {
    int n = h.g->n;
    if (h.g->m() == 0) throw std::invalid_argument("edgeless graph");
    SearchSpace s;
    const char* name = want_min ? "min_weight" : "max_weight";

    if (h.model == Model::matrix) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++) pairs.emplace_back(u, v);
        s.N = pairs.size();
        s.value = [&](uint64_t i) {
            uint64_t w = h.matrix_query(pairs[i].first, pairs[i].second);
            if (w == 0) return UINT64_MAX; // non-edge
            return want_min ? w : UINT64_MAX - w;
        };
        uint64_t i = min_find(s, *h.ledger, name, rng);
        return h.matrix_query(pairs[i].first, pairs[i].second);
    }

    std::vector<int> deg(n);
    std::vector<uint64_t> start(n + 1, 0);
    for (int v = 0; v < n; v++) {
        deg[v] = h.degree_query(v);
        start[v + 1] = start[v] + deg[v];
    }
    s.N = start[n];
    auto at = [&](uint64_t i) {
        int v = (int)(std::upper_bound(start.begin(), start.end(), i) -
                      start.begin()) - 1;
        return h.array_query(v, (int)(i - start[v]) + 1).second;
    };
    s.value = [&](uint64_t i) {
        uint64_t w = at(i);
        return want_min ? w : UINT64_MAX - w;
    };
    return at(min_find(s, *h.ledger, name, rng));
}

} // namespace

uint64_t find_max_weight(const OracleHandle& h, Rng& rng) {
    return extreme_weight(h, rng, false);
}

uint64_t find_min_weight(const OracleHandle& h, Rng& rng) {
    return extreme_weight(h, rng, true);
}

ContractionResult learn_contraction(const OracleHandle& h, const Partition& p,
                                    uint64_t max_edges, Rng& rng) {
    int n = h.g->n;
    if (p.n() != n) throw std::invalid_argument("partition size mismatch");
    if (p.blocks < 2) throw std::invalid_argument("need at least 2 blocks");
    ContractionResult out;
    uint64_t t = std::max<uint64_t>(max_edges, 1);

    BoundedLearnResult found;
    std::vector<std::pair<int, int>> pairs; // matrix model cross pairs
    std::vector<uint64_t> start;            // array model position offsets

    if (h.model == Model::matrix) {
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (p.block[u] != p.block[v]) pairs.emplace_back(u, v);
        SearchSpace s;
        s.N = pairs.size();
        s.marked = [&](uint64_t i) {
            return h.matrix_query(pairs[i].first, pairs[i].second) > 0;
        };
        found = bounded_learn(s, t, *h.ledger, "learn_contraction", rng);
    } else {
        std::vector<int> deg(n);
        start.assign(n + 1, 0);
        for (int v = 0; v < n; v++) {
            deg[v] = h.degree_query(v);
            start[v + 1] = start[v] + deg[v];
        }
        SearchSpace s;
        s.N = start[n];
        s.marked = [&](uint64_t i) {
            int v = (int)(std::upper_bound(start.begin(), start.end(), i) -
                          start.begin()) - 1;
            auto [u, w] = h.array_query(v, (int)(i - start[v]) + 1);
            // count each cross edge from its lower endpoint only
            return p.block[u] != p.block[v] && v < u;
        };
        found = bounded_learn(s, t, *h.ledger, "learn_contraction", rng);
    }
    if (found.over_threshold || found.items.size() > max_edges) {
        out.over_budget = true;
        return out;
    }

    std::map<std::pair<int, int>, uint64_t> acc;
    for (uint64_t i : found.items) {
        int u, v;
        uint64_t w;
        if (h.model == Model::matrix) {
            u = pairs[i].first;
            v = pairs[i].second;
            w = h.matrix_query(u, v);
        } else {
            v = (int)(std::upper_bound(start.begin(), start.end(), i) -
                      start.begin()) - 1;
            auto [uu, ww] = h.array_query(v, (int)(i - start[v]) + 1);
            u = uu;
            w = ww;
        }
        int a = p.block[u], b = p.block[v];
        acc[std::minmax(a, b)] += w;
    }
    std::vector<Edge> edges;
    for (auto& [uv, w] : acc) edges.push_back({uv.first, uv.second, w});
    out.g = WeightedGraph(p.blocks, std::move(edges));
    return out;
}

std::vector<Edge> find_cut_edges(const OracleHandle& h, const Shore& x, Rng& rng) {
    int n = h.g->n;
    if (x.trivial()) throw std::invalid_argument("trivial shore");
    uint64_t minw = find_min_weight(h, rng);
    uint64_t maxw = find_max_weight(h, rng);
    uint64_t tau = (maxw + minw - 1) / minw;
    uint64_t t = tau * (uint64_t)(n - 1);

    std::vector<Edge> out;
    if (h.model == Model::matrix) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (x.test(u) != x.test(v)) pairs.emplace_back(u, v);
        SearchSpace s;
        s.N = pairs.size();
        s.marked = [&](uint64_t i) {
            return h.matrix_query(pairs[i].first, pairs[i].second) > 0;
        };
        auto r = bounded_learn(s, t, *h.ledger, "find_cut_edges", rng);
        for (uint64_t i : r.items) {
            uint64_t w = h.matrix_query(pairs[i].first, pairs[i].second);
            out.push_back({pairs[i].first, pairs[i].second, w});
        }
    } else {
        std::vector<int> deg(n);
        std::vector<uint64_t> start(n + 1, 0);
        for (int v = 0; v < n; v++) {
            deg[v] = h.degree_query(v);
            start[v + 1] = start[v] + deg[v];
        }
        SearchSpace s;
        s.N = start[n];
        auto pos = [&](uint64_t i) {
            int v = (int)(std::upper_bound(start.begin(), start.end(), i) -
                          start.begin()) - 1;
            return std::pair<int, int>(v, (int)(i - start[v]) + 1);
        };
        s.marked = [&](uint64_t i) {
            auto [v, idx] = pos(i);
            auto [u, w] = h.array_query(v, idx);
            return x.test(u) != x.test(v) && v < u;
        };
        auto r = bounded_learn(s, t, *h.ledger, "find_cut_edges", rng);
        for (uint64_t i : r.items) {
            auto [v, idx] = pos(i);
            auto [u, w] = h.array_query(v, idx);
            out.push_back({std::min(u, v), std::max(u, v), w});
        }
    }
    return out;
}

SolveResult min_cut(const OracleHandle& h, Rng rng) {
    int n = h.g->n;
    if (n < 2) throw std::invalid_argument("need at least 2 vertices");
    SolveResult res;

    Rng r1 = rng.split(1);
    MinStar star = find_min_star(h, r1);
    Shore star_shore(n);
    star_shore.set(star.vertex);

    uint64_t maxw = find_max_weight(h, r1);
    uint64_t minw = find_min_weight(h, r1);

    // the sparsifier substitute and the final small solves read classically
    const WeightedGraph& g = h.bulk_read();
    if (!g.connected()) {
        // report the zero cut with a component as witness
        std::vector<char> vis(n, 0);
        std::vector<int> stack{0};
        vis[0] = 1;
        Shore comp(n);
        comp.set(0);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [u, ei] : g.adj[v])
                if (!vis[u]) {
                    vis[u] = 1;
                    comp.set(u);
                    stack.push_back(u);
                }
        }
        res.lambda = 0;
        res.shore = comp;
        return res;
    }

    Rng sp_rng = rng.split(2);
    Sparsifier sp = cut_sparsifier(g, 1, 100, sp_rng);
    if (!sp.h.connected()) {
        // a sampling miss; the certificate itself is always valid
        sp.h = g;
        sp.scale_num = sp.scale_den = 1;
    }
    uint64_t lam_h = stoer_wagner(sp.h).lambda;
    uint64_t thr = 101 * lam_h / 100;

    Partition p = learn_cut_atoms(sp.h, thr, 1.0 / 20, rng.split(3), *h.ledger,
                                  (int64_t)lam_h);

    if (p.blocks < 2) {
        res.lambda = star.weight;
        res.shore = star_shore;
        res.aborted = true;
        return res;
    }

    uint64_t tau_ceil = (maxw + minw - 1) / minw;
    uint64_t edge_budget = 100 * tau_ceil * (uint64_t)n;
    Rng r4 = rng.split(4);
    ContractionResult cr = learn_contraction(h, p, edge_budget, r4);
    bool weight_ok =
        !cr.over_budget &&
        (unsigned __int128)cr.g.total_weight() <=
            (unsigned __int128)100 * n * maxw;
    if (!weight_ok) {
        res.lambda = star.weight;
        res.shore = star_shore;
        res.aborted = true;
        return res;
    }

    CutResult contracted = stoer_wagner(cr.g);
    Shore z(n);
    for (int v = 0; v < n; v++)
        if (contracted.shore.test(p.block[v])) z.set(v);

    if (star.weight <= contracted.lambda) {
        res.lambda = star.weight;
        res.shore = star_shore;
    } else {
        res.lambda = contracted.lambda;
        res.shore = z;
    }
    return res;
}

} // namespace qmincut
