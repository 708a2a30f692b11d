#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace qmincut {

// Spanning tree rooted at r with its Euler tour of 2(n-1) directed edges.
struct RootedTree {
    int n = 0;
    int root = 0;
    std::vector<int> parent; // -1 at root
    std::vector<int> depth;
    std::vector<std::pair<int, int>> tour; // directed edges, length 2(n-1)
    // first/last tour indices delimiting the subtree; root spans everything
    std::vector<int> f, l;
    // DFS vertex order: subtree of u = order positions [tin[u], tout[u]]
    std::vector<int> tin, tout, order;

    bool is_ancestor(int u, int v) const {
        return tin[u] <= tin[v] && tout[v] <= tout[u];
    }
    int subtree_size(int u) const { return tout[u] - tin[u] + 1; }
};

RootedTree root_tree(int n, const std::vector<std::pair<int, int>>& tree_edges,
                     int root);

// A cut crossing one tree edge or two; tree edges are named by their child
// endpoint.
struct TwoRespectId {
    int a = -1;
    int b = -1; // -1 when the cut crosses a single tree edge

    bool pair() const { return b >= 0; }
};

// The shore not containing the root: subtree, subtree difference, or union
// of two incomparable subtrees.
Shore shore_of(const RootedTree& t, const TwoRespectId& id);

// Exact cut weights for every 1- or 2-tree-edge cut, O(1) per query after
// an O(n^2 + m) build (Euler-order 2D prefix sums).
struct CutEvaluator {
    const RootedTree* t = nullptr;
    int n = 0;
    std::vector<uint64_t> single; // single[u] = cut weight of subtree(u), u != root
    std::vector<uint64_t> pref;   // (n+1)x(n+1) prefix sums of the tin-ordered
                                  // adjacency matrix

    // total weight between subtree(u) and subtree(v) ranges (edges inside the
    // overlap counted twice)
    uint64_t between(int u, int v) const;
    uint64_t eval(const TwoRespectId& id) const;
};

CutEvaluator build_evaluator(const WeightedGraph& g, const RootedTree& t);

// For each vertex v, sum of deltas over ops {u, delta} with v in subtree(u),
// mod m.  Difference array over the Euler tour + one prefix-sum pass.
std::vector<uint64_t> subtree_add_batch(
    const RootedTree& t, const std::vector<std::pair<int, uint64_t>>& ops,
    uint64_t m);

} // namespace qmincut
