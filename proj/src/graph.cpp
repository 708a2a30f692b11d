#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace qmincut {

int Shore::count() const {
    int c = 0;
    for (uint64_t w : bits) c += std::popcount(w);
    return c;
}

Shore Shore::complement() const {
    Shore r(n);
    for (size_t i = 0; i < bits.size(); i++) r.bits[i] = ~bits[i];
    int spare = (int)(bits.size() * 64) - n;
    if (spare > 0) r.bits.back() &= ~0ull >> spare;
    return r;
}

std::vector<int> Shore::members() const {
    std::vector<int> out;
    for (int v = 0; v < n; v++)
        if (test(v)) out.push_back(v);
    return out;
}

Shore shore_from(int n, const std::vector<int>& verts) {
    Shore s(n);
    for (int v : verts) s.set(v);
    return s;
}

WeightedGraph::WeightedGraph(int n_, std::vector<Edge> edges_)
    : n(n_), edges(std::move(edges_)), adj(n_) {
    unsigned __int128 total = 0;
    std::vector<std::pair<int, int>> seen;
    seen.reserve(edges.size());
    for (int i = 0; i < (int)edges.size(); i++) {
        Edge& e = edges[i];
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop");
        if (e.w == 0) throw std::invalid_argument("zero-weight edge");
        seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        total += e.w;
        adj[e.u].emplace_back(e.v, i);
        adj[e.v].emplace_back(e.u, i);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("duplicate edge");
    if (total > (unsigned __int128)INT64_MAX)
        throw std::invalid_argument("total weight exceeds 2^63-1");
}

uint64_t WeightedGraph::weighted_degree(int v) const {
    uint64_t s = 0;
    for (auto [u, ei] : adj[v]) s += edges[ei].w;
    return s;
}

uint64_t WeightedGraph::total_weight() const {
    uint64_t s = 0;
    for (const Edge& e : edges) s += e.w;
    return s;
}

uint64_t WeightedGraph::min_edge_weight() const {
    if (edges.empty()) throw std::invalid_argument("edgeless graph");
    uint64_t s = edges[0].w;
    for (const Edge& e : edges) s = std::min(s, e.w);
    return s;
}

uint64_t WeightedGraph::max_edge_weight() const {
    if (edges.empty()) throw std::invalid_argument("edgeless graph");
    uint64_t s = edges[0].w;
    for (const Edge& e : edges) s = std::max(s, e.w);
    return s;
}

bool WeightedGraph::connected() const {
    if (n == 0) return true;
    std::vector<char> vis(n, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int seen = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [u, ei] : adj[v])
            if (!vis[u]) {
                vis[u] = 1;
                seen++;
                stack.push_back(u);
            }
    }
    return seen == n;
}

Partition singleton_partition(int n) {
    Partition p;
    p.block.resize(n);
    std::iota(p.block.begin(), p.block.end(), 0);
    p.blocks = n;
    return p;
}

Partition partition_from_labels(const std::vector<uint64_t>& labels) {
    Partition p;
    p.block.resize(labels.size());
    std::map<uint64_t, int> id;
    for (size_t v = 0; v < labels.size(); v++) {
        auto [it, fresh] = id.emplace(labels[v], p.blocks);
        if (fresh) p.blocks++;
        p.block[v] = it->second;
    }
    return p;
}

Partition partition_from_signatures(const std::vector<std::vector<uint64_t>>& sig) {
    Partition p;
    p.block.resize(sig.size());
    std::map<std::vector<uint64_t>, int> id;
    for (size_t v = 0; v < sig.size(); v++) {
        auto [it, fresh] = id.emplace(sig[v], p.blocks);
        if (fresh) p.blocks++;
        p.block[v] = it->second;
    }
    return p;
}

Partition refine(const Partition& a, const Partition& b) {
    if (a.n() != b.n()) throw std::invalid_argument("partition size mismatch");
    std::vector<std::vector<uint64_t>> sig(a.n());
    for (int v = 0; v < a.n(); v++)
        sig[v] = {(uint64_t)a.block[v], (uint64_t)b.block[v]};
    return partition_from_signatures(sig);
}

bool refines(const Partition& fine, const Partition& coarse) {
    if (fine.n() != coarse.n()) return false;
    std::vector<int> img(fine.blocks, -1);
    for (int v = 0; v < fine.n(); v++) {
        int f = fine.block[v], c = coarse.block[v];
        if (img[f] == -1) img[f] = c;
        else if (img[f] != c) return false;
    }
    return true;
}

uint64_t cut_weight(const WeightedGraph& g, const Shore& x) {
    if (x.n != g.n) throw std::invalid_argument("shore size mismatch");
    if (x.trivial()) throw std::invalid_argument("trivial shore");
    uint64_t s = 0;
    for (const Edge& e : g.edges)
        if (x.test(e.u) != x.test(e.v)) s += e.w;
    return s;
}

Partition atoms(int v_count, const ShoreFamily& fam) {
    std::vector<std::vector<uint64_t>> sig(v_count);
    for (int v = 0; v < v_count; v++) {
        sig[v].reserve(fam.shores.size());
        for (const Shore& s : fam.shores) sig[v].push_back(s.test(v));
    }
    return partition_from_signatures(sig);
}

ShoreFamily union_generating(const ShoreFamily& fam1, const ShoreFamily& fam2) {
    if (!fam1.shores.empty() && !fam2.shores.empty() && fam1.n != fam2.n)
        throw std::invalid_argument("vertex count mismatch");
    ShoreFamily out;
    out.n = fam1.shores.empty() ? fam2.n : fam1.n;
    out.shores = fam1.shores;
    out.shores.insert(out.shores.end(), fam2.shores.begin(), fam2.shores.end());
    return out;
}

ShoreFamily greedy_generating_subset(const ShoreFamily& fam) {
    ShoreFamily kept;
    kept.n = fam.n;
    Partition cur = atoms(fam.n, kept);
    for (const Shore& s : fam.shores) {
        ShoreFamily trial = kept;
        trial.shores.push_back(s);
        Partition next = atoms(fam.n, trial);
        if (next.blocks > cur.blocks) {
            kept = std::move(trial);
            cur = std::move(next);
        }
    }
    return kept;
}

WeightedGraph contract(const WeightedGraph& g, const Partition& p) {
    if (p.n() != g.n) throw std::invalid_argument("partition size mismatch");
    std::map<std::pair<int, int>, uint64_t> w;
    for (const Edge& e : g.edges) {
        int a = p.block[e.u], b = p.block[e.v];
        if (a == b) continue;
        w[{std::min(a, b), std::max(a, b)}] += e.w;
    }
    std::vector<Edge> edges;
    edges.reserve(w.size());
    for (auto& [uv, wt] : w) edges.push_back({uv.first, uv.second, wt});
    return WeightedGraph(p.blocks, std::move(edges));
}

std::string graph_to_json(const WeightedGraph& g) {
    std::vector<Edge> es = g.edges;
    std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) {
        auto ka = std::minmax(a.u, a.v), kb = std::minmax(b.u, b.v);
        return ka < kb;
    });
    nlohmann::json j;
    j["n"] = g.n;
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : es) {
        int u = std::min(e.u, e.v), v = std::max(e.u, e.v);
        j["edges"].push_back({u, v, std::to_string(e.w)});
    }
    return j.dump();
}

WeightedGraph graph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& row : j.at("edges")) {
        uint64_t w = std::stoull(row.at(2).get<std::string>());
        edges.push_back({row.at(0).get<int>(), row.at(1).get<int>(), w});
    }
    return WeightedGraph(n, std::move(edges));
}

std::string partition_to_json(const Partition& p) {
    std::vector<std::vector<int>> blocks(p.blocks);
    for (int v = 0; v < p.n(); v++) blocks[p.block[v]].push_back(v);
    nlohmann::json j;
    j["blocks"] = blocks;
    return j.dump();
}

} // namespace qmincut
