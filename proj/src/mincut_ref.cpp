#include "mincut_ref.hpp"

#include <stdexcept>

namespace qmincut {

CutResult brute_min_cut(const WeightedGraph& g) {
    if (g.n < 2) throw std::invalid_argument("need at least 2 vertices");
    if (g.n > 24) throw std::invalid_argument("brute force capped at n=24");
    uint64_t best = UINT64_MAX;
    uint32_t best_mask = 1;
    // vertex n-1 stays outside the shore, halving the enumeration
    for (uint32_t mask = 1; mask < (1u << (g.n - 1)); mask++) {
        uint64_t c = 0;
        for (const Edge& e : g.edges) {
            bool a = e.u < g.n - 1 && ((mask >> e.u) & 1);
            bool b = e.v < g.n - 1 && ((mask >> e.v) & 1);
            if (a != b) c += e.w;
        }
        if (c < best) {
            best = c;
            best_mask = mask;
        }
    }
    CutResult r;
    r.lambda = best;
    r.shore = Shore(g.n);
    for (int v = 0; v < g.n - 1; v++)
        if ((best_mask >> v) & 1) r.shore.set(v);
    return r;
}

std::vector<Shore> enumerate_light_shores(const WeightedGraph& g, uint64_t threshold) {
    if (g.n < 2 || g.n > 24) throw std::invalid_argument("enumeration needs 2 <= n <= 24");
    std::vector<Shore> out;
    for (uint32_t mask = 1; mask < (1u << (g.n - 1)); mask++) {
        uint64_t c = 0;
        for (const Edge& e : g.edges) {
            bool a = e.u < g.n - 1 && ((mask >> e.u) & 1);
            bool b = e.v < g.n - 1 && ((mask >> e.v) & 1);
            if (a != b) c += e.w;
        }
        if (c <= threshold) {
            Shore s(g.n);
            for (int v = 0; v < g.n - 1; v++)
                if ((mask >> v) & 1) s.set(v);
            out.push_back(std::move(s));
        }
    }
    return out;
}

CutResult stoer_wagner(const WeightedGraph& g) {
    if (g.n < 2) throw std::invalid_argument("need at least 2 vertices");
    int n = g.n;
    std::vector<std::vector<uint64_t>> w(n, std::vector<uint64_t>(n, 0));
    for (const Edge& e : g.edges) {
        w[e.u][e.v] += e.w;
        w[e.v][e.u] += e.w;
    }
    std::vector<std::vector<int>> merged(n);
    for (int v = 0; v < n; v++) merged[v] = {v};
    std::vector<int> active(n);
    for (int v = 0; v < n; v++) active[v] = v;

    uint64_t best = UINT64_MAX;
    std::vector<int> best_side;

    while (active.size() > 1) {
        // maximum adjacency phase
        std::vector<uint64_t> key(n, 0);
        std::vector<char> in(n, 0);
        int prev = -1, last = -1;
        for (size_t it = 0; it < active.size(); it++) {
            int sel = -1;
            for (int v : active)
                if (!in[v] && (sel == -1 || key[v] > key[sel])) sel = v;
            if (sel < 0) break;
            in[sel] = 1;
            prev = last;
            last = sel;
            for (int v : active)
                if (!in[v]) key[v] += w[sel][v];
        }
        uint64_t phase_cut = key[last];
        if (phase_cut < best) {
            best = phase_cut;
            best_side = merged[last];
        }
        // merge last into prev
        for (int v : active) {
            if (v == last || v == prev) continue;
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        merged[prev].insert(merged[prev].end(), merged[last].begin(), merged[last].end());
        std::erase(active, last);
    }

    CutResult r;
    r.lambda = best;
    r.shore = shore_from(n, best_side);
    return r;
}

} // namespace qmincut
