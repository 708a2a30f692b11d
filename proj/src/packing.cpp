#include "packing.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "mincut_ref.hpp"

namespace qmincut {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

} // namespace

CertificateResult ni_certificate_full(const WeightedGraph& g, uint64_t c) {
    if (c < 1) throw std::invalid_argument("threshold must be >= 1");
    int m = g.m();
    std::vector<uint64_t> residual(m), kept(m, 0);
    std::vector<uint64_t> entry(m, UINT64_MAX);
    for (int i = 0; i < m; i++) residual[i] = std::min(g.edges[i].w, c);

    // peel maximal spanning forests of the residual multigraph, compressing
    // runs of identical forests; stop once c units of level are consumed
    uint64_t level = 0;
    while (level < c) {
        Dsu dsu(g.n);
        std::vector<int> forest;
        for (int i = 0; i < m; i++)
            if (residual[i] > 0 && dsu.join(g.edges[i].u, g.edges[i].v))
                forest.push_back(i);
        if (forest.empty()) break;
        uint64_t chunk = c - level;
        for (int i : forest) chunk = std::min(chunk, residual[i]);
        for (int i : forest) {
            if (entry[i] == UINT64_MAX) entry[i] = level + 1;
            kept[i] += chunk;
            residual[i] -= chunk;
        }
        level += chunk;
    }

    CertificateResult r;
    r.entry_level = std::move(entry);
    r.cert_edge_of.assign(m, -1);
    std::vector<Edge> edges;
    for (int i = 0; i < m; i++)
        if (kept[i] > 0) {
            r.cert_edge_of[i] = (int)edges.size();
            edges.push_back({g.edges[i].u, g.edges[i].v, kept[i]});
        }
    r.cert = WeightedGraph(g.n, std::move(edges));
    return r;
}

WeightedGraph ni_certificate(const WeightedGraph& g, uint64_t c) {
    return ni_certificate_full(g, c).cert;
}

uint64_t matula_estimate(const WeightedGraph& g) {
    if (g.n < 2) throw std::invalid_argument("need at least 2 vertices");
    if (!g.connected()) throw std::invalid_argument("disconnected graph");

    WeightedGraph h = g;
    uint64_t best = UINT64_MAX;
    while (h.n > 1) {
        uint64_t delta = UINT64_MAX;
        for (int v = 0; v < h.n; v++) delta = std::min(delta, h.weighted_degree(v));
        best = std::min(best, delta);
        // edges first entering the peeling beyond level k join endpoints that
        // are more than k-connected, so no cut of weight <= k separates them
        uint64_t k = (2 * delta + 4) / 5; // ceil(delta / 2.5)
        CertificateResult cr = ni_certificate_full(h, k);
        Dsu dsu(h.n);
        int merges = 0;
        for (int i = 0; i < h.m(); i++)
            if (cr.entry_level[i] == UINT64_MAX && dsu.join(h.edges[i].u, h.edges[i].v))
                merges++;
        if (merges == 0) {
            // nothing certified above k: the residual graph is cheap to solve
            best = std::min(best, stoer_wagner(h).lambda);
            break;
        }
        std::vector<uint64_t> label(h.n);
        for (int v = 0; v < h.n; v++) label[v] = (uint64_t)dsu.find(v);
        h = contract(h, partition_from_labels(label));
        if (h.n < 2) break;
        if (!h.connected()) break; // cannot happen for connected input
    }
    return best;
}

WeightedGraph skeleton_sample(const WeightedGraph& g, double p, Rng& rng) {
    if (p <= 0 || p > 1) throw std::invalid_argument("p must be in (0,1]");
    int m = g.m();
    if (m == 0) return g;
    std::vector<uint64_t> cum(m);
    uint64_t total = 0;
    for (int i = 0; i < m; i++) {
        total += g.edges[i].w;
        cum[i] = total;
    }
    uint64_t draws = (uint64_t)std::ceil(p * (double)total);
    std::vector<uint64_t> count(m, 0);
    for (uint64_t d = 0; d < draws; d++) {
        uint64_t r = rng.below(total);
        int i = (int)(std::upper_bound(cum.begin(), cum.end(), r) - cum.begin());
        count[i]++;
    }
    std::vector<Edge> edges;
    for (int i = 0; i < m; i++)
        if (count[i] > 0)
            edges.push_back({g.edges[i].u, g.edges[i].v, count[i]});
    return WeightedGraph(g.n, std::move(edges));
}

WeightedGraph round_weights(const WeightedGraph& g, uint64_t alpha) {
    if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
    std::vector<Edge> edges = g.edges;
    for (Edge& e : edges) {
        if (e.w < alpha) throw std::invalid_argument("weight below alpha");
        unsigned __int128 num = (unsigned __int128)200 * e.w + alpha;
        e.w = (uint64_t)(num / (2 * (unsigned __int128)alpha));
    }
    return WeightedGraph(g.n, std::move(edges));
}

namespace {

// matroid-union packing of edge-disjoint spanning trees in the multigraph
// with cap[e] parallel copies of edge e
struct TreePacker {
    const WeightedGraph& g;
    int n, m;
    std::vector<uint64_t> cap, used;
    std::vector<std::vector<int>> forests;      // host edge ids per forest
    std::vector<std::vector<char>> has;         // has[f][e]
    std::vector<Dsu> dsu;

    TreePacker(const WeightedGraph& host, std::vector<uint64_t> caps)
        : g(host), n(host.n), m(host.m()), cap(std::move(caps)), used(m, 0) {}

    void add_forest() {
        forests.emplace_back();
        has.emplace_back(m, 0);
        dsu.emplace_back(n);
    }

    void rebuild_dsu(int f) {
        dsu[f] = Dsu(n);
        for (int e : forests[f]) dsu[f].join(g.edges[e].u, g.edges[e].v);
    }

    void insert(int f, int e) {
        forests[f].push_back(e);
        has[f][e] = 1;
        dsu[f].join(g.edges[e].u, g.edges[e].v);
    }

    void remove(int f, int e) {
        std::erase(forests[f], e);
        has[f][e] = 0;
        rebuild_dsu(f);
    }

    // path of host edges between u and v inside forest f
    std::vector<int> tree_path(int f, int su, int sv) const {
        std::vector<std::vector<std::pair<int, int>>> adj(n);
        for (int e : forests[f]) {
            adj[g.edges[e].u].emplace_back(g.edges[e].v, e);
            adj[g.edges[e].v].emplace_back(g.edges[e].u, e);
        }
        std::vector<int> via(n, -2), via_edge(n, -1);
        std::deque<int> q{su};
        via[su] = -1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            if (v == sv) break;
            for (auto [u, e] : adj[v])
                if (via[u] == -2) {
                    via[u] = v;
                    via_edge[u] = e;
                    q.push_back(u);
                }
        }
        std::vector<int> path;
        for (int v = sv; via[v] != -1; v = via[v]) path.push_back(via_edge[v]);
        return path;
    }

    // greedy fill of one forest in a single edge pass; returns insertions
    uint64_t sweep_insert(int f) {
        uint64_t cnt = 0;
        for (int e = 0; e < m; e++) {
            if (used[e] >= cap[e] || has[f][e]) continue;
            if (dsu[f].find(g.edges[e].u) != dsu[f].find(g.edges[e].v)) {
                insert(f, e);
                used[e]++;
                cnt++;
            }
        }
        return cnt;
    }

    bool direct_insert() {
        for (int e = 0; e < m; e++) {
            if (used[e] >= cap[e]) continue;
            for (int f = 0; f < (int)forests.size(); f++) {
                if (has[f][e]) continue;
                if (dsu[f].find(g.edges[e].u) != dsu[f].find(g.edges[e].v)) {
                    insert(f, e);
                    used[e]++;
                    return true;
                }
            }
        }
        return false;
    }

    // breadth-first exchange search over (forest, edge) states
    bool augment() {
        if (direct_insert()) return true;
        int k = (int)forests.size();
        std::vector<int> pred_edge((size_t)k * m, -2), pred_forest((size_t)k * m, -2);
        std::deque<std::pair<int, int>> q; // (edge, forest it sits in; -1 = free copy)
        std::vector<char> seeded(m, 0);
        for (int e = 0; e < m; e++)
            if (used[e] < cap[e] && !seeded[e]) {
                seeded[e] = 1;
                q.emplace_back(e, -1);
            }
        while (!q.empty()) {
            auto [e, f_at] = q.front();
            q.pop_front();
            int u = g.edges[e].u, v = g.edges[e].v;
            for (int f = 0; f < k; f++) {
                if (f == f_at || has[f][e]) continue;
                if (dsu[f].find(u) != dsu[f].find(v)) {
                    // augmenting chain found: e enters f, predecessors shift back
                    insert(f, e);
                    int ce = e, cf = f_at;
                    while (cf != -1) {
                        int pe = pred_edge[(size_t)cf * m + ce];
                        int pf = pred_forest[(size_t)cf * m + ce];
                        remove(cf, ce);
                        insert(cf, pe);
                        ce = pe;
                        cf = pf;
                    }
                    used[ce]++;
                    return true;
                }
                for (int h : tree_path(f, u, v)) {
                    size_t key = (size_t)f * m + h;
                    if (pred_edge[key] != -2) continue;
                    pred_edge[key] = e;
                    pred_forest[key] = f_at;
                    q.emplace_back(h, f);
                }
            }
        }
        return false;
    }
};

} // namespace

TreePacking pack_trees(const WeightedGraph& h, uint64_t max_half_trees) {
    if (h.n < 2) throw std::invalid_argument("need at least 2 vertices");
    if (!h.connected()) throw std::invalid_argument("disconnected graph");

    // pack the weight-doubled multigraph; capacities above the connectivity
    // estimate cannot enter any extra tree
    uint64_t lam_cap = 2 * matula_estimate(h) + 2;
    std::vector<uint64_t> cap(h.m());
    for (int e = 0; e < h.m(); e++)
        cap[e] = std::min(2 * h.edges[e].w, lam_cap);

    TreePacker pk(h, std::move(cap));
    int complete = 0;
    while (true) {
        pk.add_forest();
        uint64_t target = (uint64_t)(complete + 1) * (h.n - 1);
        pk.sweep_insert((int)pk.forests.size() - 1);
        uint64_t total = 0;
        for (auto& f : pk.forests) total += f.size();
        while (total < target && pk.augment()) total++;
        if (total < target) break;
        complete++;
        if (max_half_trees > 0 && (uint64_t)complete >= max_half_trees) break;
    }

    // each complete forest is a spanning tree of weight 1/2; merge duplicates
    std::map<std::vector<int>, uint64_t> merged;
    for (int f = 0; f < complete; f++) {
        std::vector<int> t = pk.forests[f];
        std::sort(t.begin(), t.end());
        merged[t]++;
    }
    TreePacking out;
    for (auto& [t, c] : merged) {
        out.trees.push_back(t);
        if (c % 2 == 0) out.weights.emplace_back(c / 2, 1);
        else out.weights.emplace_back(c, 2);
    }
    return out;
}

std::vector<std::vector<int>> karger_trees(const WeightedGraph& g, Rng rng) {
    if (g.n < 2) throw std::invalid_argument("need at least 2 vertices");
    if (!g.connected()) throw std::invalid_argument("disconnected graph");
    if (g.n == 2) return {{0}};

    // normalize to minimum weight 100 by nearest-integer rounding, estimate
    // connectivity, certify at (1+1/12) of the estimate, then downsample
    WeightedGraph g1 = round_weights(g, g.min_edge_weight());
    uint64_t lam = matula_estimate(g1);
    uint64_t thr = (13 * lam + 11) / 12;
    WeightedGraph cert = ni_certificate(g1, thr);

    // sampling rate c_p * ln(n) / lambda~; c_p = 24 recorded (the bare rate
    // ln(n)/lambda~ concentrates too weakly at small n)
    double p = std::min(1.0, 24.0 * std::log((double)g.n) / (double)lam);
    WeightedGraph h = skeleton_sample(cert, p, rng);
    if (!h.connected()) h = cert; // sampling missed a cut entirely; fall back

    // Load-balancing tree packing: repeatedly take a minimum spanning tree
    // under costs use_count(e)/w(e).  The T-round multiset approximates a
    // maximum fractional packing, whose value is at least lambda(h)/2, so a
    // near-minimum cut crosses the average packed tree at most ~2.2 tree
    // edges and at least a quarter of weight-proportional tree draws
    // 2-respect it.  (An exact matroid-union packing gives the same
    // guarantee but its augmentation phase is far too slow at skeleton
    // connectivity ~ c log n with thousands of edges.)
    const int kRounds = 256;
    const int kSamples = 21;
    int mh = h.m();
    std::vector<uint64_t> uses(mh, 0);
    std::vector<int> order(mh);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<int>> rounds;
    rounds.reserve(kRounds);
    for (int t = 0; t < kRounds; t++) {
        // cost(a) < cost(b)  <=>  uses[a]/w[a] < uses[b]/w[b], cross-multiplied
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            unsigned __int128 la = (unsigned __int128)uses[a] * h.edges[b].w;
            unsigned __int128 lb = (unsigned __int128)uses[b] * h.edges[a].w;
            if (la != lb) return la < lb;
            return a < b;
        });
        Dsu dsu(h.n);
        std::vector<int> tree;
        tree.reserve(h.n - 1);
        for (int e : order) {
            if (dsu.join(h.edges[e].u, h.edges[e].v)) tree.push_back(e);
            if ((int)tree.size() == h.n - 1) break;
        }
        for (int e : tree) uses[e]++;
        rounds.push_back(std::move(tree));
    }

    // weight-proportional draw = uniform over the rounds; dedup for output
    std::map<std::pair<int, int>, int> host_index;
    for (int i = 0; i < g.m(); i++)
        host_index[std::minmax(g.edges[i].u, g.edges[i].v)] = i;
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> out;
    for (int s = 0; s < kSamples; s++) {
        const std::vector<int>& t = rounds[rng.below(kRounds)];
        std::vector<int> mapped;
        mapped.reserve(t.size());
        for (int e : t)
            mapped.push_back(host_index.at(std::minmax(h.edges[e].u, h.edges[e].v)));
        std::sort(mapped.begin(), mapped.end());
        if (seen.insert(mapped).second) out.push_back(std::move(mapped));
    }
    return out;
}

std::string trees_to_json(const WeightedGraph& g,
                          const std::vector<std::vector<int>>& trees) {
    // canonical order = edges sorted by (min endpoint, max endpoint)
    std::vector<int> order(g.m());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::minmax(g.edges[a].u, g.edges[a].v) <
               std::minmax(g.edges[b].u, g.edges[b].v);
    });
    std::vector<int> rank(g.m());
    for (int i = 0; i < g.m(); i++) rank[order[i]] = i;
    nlohmann::json j = nlohmann::json::array();
    for (const auto& t : trees) {
        std::vector<int> ids;
        ids.reserve(t.size());
        for (int e : t) ids.push_back(rank[e]);
        std::sort(ids.begin(), ids.end());
        j.push_back(ids);
    }
    return j.dump();
}

} // namespace qmincut
