#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qmincut {

// One side of a cut, as a bitset over [0, n).
struct Shore {
    int n = 0;
    std::vector<uint64_t> bits;

    Shore() = default;
    explicit Shore(int n_) : n(n_), bits((n_ + 63) / 64, 0) {}

    bool test(int v) const { return (bits[v >> 6] >> (v & 63)) & 1; }
    void set(int v) { bits[v >> 6] |= 1ull << (v & 63); }
    void reset(int v) { bits[v >> 6] &= ~(1ull << (v & 63)); }

    int count() const;
    bool trivial() const { int c = count(); return c == 0 || c == n; }
    Shore complement() const;
    std::vector<int> members() const;

    bool operator==(const Shore&) const = default;
};

Shore shore_from(int n, const std::vector<int>& verts);

struct Edge {
    int u, v;
    uint64_t w;
};

// Undirected graph with exact positive integer weights.  Immutable after
// construction; the adjacency order is fixed and serves as the indexed
// neighbor order of the array access model.
struct WeightedGraph {
    int n = 0;
    std::vector<Edge> edges;
    // per vertex: (neighbor, edge index), in insertion order
    std::vector<std::vector<std::pair<int, int>>> adj;

    WeightedGraph() = default;
    WeightedGraph(int n_, std::vector<Edge> edges_);

    int m() const { return (int)edges.size(); }
    int degree(int v) const { return (int)adj[v].size(); }
    uint64_t weighted_degree(int v) const;
    uint64_t total_weight() const;
    uint64_t min_edge_weight() const; // throws on edgeless graph
    uint64_t max_edge_weight() const;
    bool connected() const;
};

// Partition of [0, n) into dense block ids [0, blocks).
struct Partition {
    std::vector<int> block;
    int blocks = 0;

    int n() const { return (int)block.size(); }
    bool operator==(const Partition&) const = default;
};

Partition singleton_partition(int n);
// renumber arbitrary labels to dense block ids in first-seen order
Partition partition_from_labels(const std::vector<uint64_t>& labels);
// group vertices by per-vertex signature vectors
Partition partition_from_signatures(const std::vector<std::vector<uint64_t>>& sig);
// common refinement of two partitions over the same vertex set
Partition refine(const Partition& a, const Partition& b);
// true if every block of fine is contained in one block of coarse
bool refines(const Partition& fine, const Partition& coarse);

struct ShoreFamily {
    int n = 0;
    std::vector<Shore> shores;
};

uint64_t cut_weight(const WeightedGraph& g, const Shore& x);

// coarsest partition in which no shore of fam separates two same-block vertices
Partition atoms(int v_count, const ShoreFamily& fam);

ShoreFamily union_generating(const ShoreFamily& fam1, const ShoreFamily& fam2);

// keep only shores that refine the running partition further; |result| <= n-1
ShoreFamily greedy_generating_subset(const ShoreFamily& fam);

WeightedGraph contract(const WeightedGraph& g, const Partition& p);

// JSON {"n": int, "edges": [[u, v, weight_string], ...]}; writer sorts
// edges by (min endpoint, max endpoint)
std::string graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const std::string& text);
std::string partition_to_json(const Partition& p);

} // namespace qmincut
