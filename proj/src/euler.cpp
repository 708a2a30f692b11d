#include "euler.hpp"

#include <stdexcept>

namespace qmincut {

RootedTree root_tree(int n, const std::vector<std::pair<int, int>>& tree_edges,
                     int root) {
    if ((int)tree_edges.size() != n - 1)
        throw std::invalid_argument("spanning tree needs n-1 edges");
    if (root < 0 || root >= n) throw std::invalid_argument("bad root");

    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : tree_edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    RootedTree t;
    t.n = n;
    t.root = root;
    t.parent.assign(n, -1);
    t.depth.assign(n, 0);
    t.f.assign(n, 0);
    t.l.assign(n, 0);
    t.tin.assign(n, -1);
    t.tout.assign(n, -1);
    t.order.assign(n, -1);
    t.tour.reserve(2 * (n - 1));

    // iterative DFS emitting the directed-edge Euler tour
    std::vector<int> it(n, 0);
    std::vector<int> stack{root};
    t.parent[root] = -1;
    t.tin[root] = 0;
    t.order[0] = root;
    int time = 1;
    while (!stack.empty()) {
        int v = stack.back();
        if (it[v] < (int)adj[v].size()) {
            int u = adj[v][it[v]++];
            if (u == t.parent[v]) continue;
            if (t.tin[u] != -1) throw std::invalid_argument("not a tree");
            t.parent[u] = v;
            t.depth[u] = t.depth[v] + 1;
            t.f[u] = (int)t.tour.size();
            t.tour.emplace_back(v, u);
            t.tin[u] = time;
            t.order[time++] = u;
            stack.push_back(u);
        } else {
            stack.pop_back();
            t.tout[v] = time - 1;
            if (!stack.empty()) {
                t.l[v] = (int)t.tour.size();
                t.tour.emplace_back(v, t.parent[v]);
            }
        }
    }
    if (time != n) throw std::invalid_argument("edges do not span all vertices");
    t.f[root] = 0;
    t.l[root] = std::max(0, 2 * (n - 1) - 1);
    return t;
}

Shore shore_of(const RootedTree& t, const TwoRespectId& id) {
    auto valid = [&](int u) { return u >= 0 && u < t.n && u != t.root; };
    if (!valid(id.a) || (id.pair() && (!valid(id.b) || id.b == id.a)))
        throw std::invalid_argument("bad cut id");
    Shore s(t.n);
    auto add_subtree = [&](int u) {
        for (int i = t.tin[u]; i <= t.tout[u]; i++) s.set(t.order[i]);
    };
    auto drop_subtree = [&](int u) {
        for (int i = t.tin[u]; i <= t.tout[u]; i++) s.reset(t.order[i]);
    };
    if (!id.pair()) {
        add_subtree(id.a);
    } else if (t.is_ancestor(id.a, id.b)) {
        add_subtree(id.a);
        drop_subtree(id.b);
    } else if (t.is_ancestor(id.b, id.a)) {
        add_subtree(id.b);
        drop_subtree(id.a);
    } else {
        add_subtree(id.a);
        add_subtree(id.b);
    }
    return s;
}

uint64_t CutEvaluator::between(int u, int v) const {
    int a1 = t->tin[u], a2 = t->tout[u], b1 = t->tin[v], b2 = t->tout[v];
    const uint64_t* p = pref.data();
    int w = n + 1;
    return p[(a2 + 1) * w + b2 + 1] - p[a1 * w + b2 + 1] -
           p[(a2 + 1) * w + b1] + p[a1 * w + b1];
}

uint64_t CutEvaluator::eval(const TwoRespectId& id) const {
    if (!id.pair()) return single[id.a];
    int u = id.a, v = id.b;
    if (t->is_ancestor(v, u)) std::swap(u, v);
    if (t->is_ancestor(u, v))
        return single[u] - single[v] + 2 * (between(u, v) - between(v, v));
    return single[u] + single[v] - 2 * between(u, v);
}

CutEvaluator build_evaluator(const WeightedGraph& g, const RootedTree& t) {
    if (g.n != t.n) throw std::invalid_argument("tree does not span the graph");
    if (g.n > 4096) throw std::invalid_argument("evaluator table capped at n=4096");
    int n = g.n, w = n + 1;
    CutEvaluator ev;
    ev.t = &t;
    ev.n = n;

    std::vector<uint64_t> a((size_t)n * n, 0);
    for (const Edge& e : g.edges) {
        a[(size_t)t.tin[e.u] * n + t.tin[e.v]] += e.w;
        a[(size_t)t.tin[e.v] * n + t.tin[e.u]] += e.w;
    }
    ev.pref.assign((size_t)w * w, 0);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            ev.pref[(size_t)(i + 1) * w + j + 1] =
                ev.pref[(size_t)i * w + j + 1] + ev.pref[(size_t)(i + 1) * w + j] -
                ev.pref[(size_t)i * w + j] + a[(size_t)i * n + j];

    ev.single.assign(n, 0);
    for (int u = 0; u < n; u++) {
        if (u == t.root) continue;
        uint64_t row = ev.pref[(size_t)(t.tout[u] + 1) * w + n] -
                       ev.pref[(size_t)t.tin[u] * w + n];
        ev.single[u] = row - ev.between(u, u);
    }
    return ev;
}

std::vector<uint64_t> subtree_add_batch(
    const RootedTree& t, const std::vector<std::pair<int, uint64_t>>& ops,
    uint64_t m) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    // difference array over the DFS vertex order: subtree(u) is exactly the
    // contiguous range [tin(u), tout(u)]
    std::vector<uint64_t> b(t.n + 1, 0);
    for (auto [u, d] : ops) {
        uint64_t dm = d % m;
        b[t.tin[u]] = (b[t.tin[u]] + dm) % m;
        b[t.tout[u] + 1] = (b[t.tout[u] + 1] + m - dm) % m;
    }
    for (int i = 1; i <= t.n; i++) b[i] = (b[i] + b[i - 1]) % m;
    std::vector<uint64_t> key(t.n);
    for (int v = 0; v < t.n; v++) key[v] = b[t.tin[v]];
    return key;
}

} // namespace qmincut
