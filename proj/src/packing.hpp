#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

namespace qmincut {

// Spanning trees of a host graph with positive rational weights such that
// the trees containing any edge e carry total weight <= w(e).
struct TreePacking {
    std::vector<std::vector<int>> trees; // sorted host edge indices
    std::vector<std::pair<uint64_t, uint64_t>> weights; // num/den per tree

    double value() const {
        double s = 0;
        for (auto [p, q] : weights) s += (double)p / (double)q;
        return s;
    }
};

// constant-factor overestimate of the minimum cut: lambda(g) <= result <=
// c*lambda(g), c <= 3 (certificate peeling with contraction rounds)
uint64_t matula_estimate(const WeightedGraph& g);

// sparse certificate: total weight <= 2*c*n, every cut of weight <= c kept
// edge-for-edge.  Weights above c are clamped first, so heavier cuts may
// shrink.
WeightedGraph ni_certificate(const WeightedGraph& g, uint64_t c);

// entry_level[i] = cumulative peeling level at which edge i first joined a
// forest (UINT64_MAX if it never did up to level c); endpoints of an edge
// with entry level L are at least L-connected
struct CertificateResult {
    WeightedGraph cert;
    std::vector<int> cert_edge_of;      // cert edge index per original edge, -1
    std::vector<uint64_t> entry_level;
};
CertificateResult ni_certificate_full(const WeightedGraph& g, uint64_t c);

// view g as a multigraph with w(e) parallel copies and draw ceil(p * total)
// copies uniformly with replacement; output weight = copy count
WeightedGraph skeleton_sample(const WeightedGraph& g, double p, Rng& rng);

// nearest-integer rounding of 100*w(e)/alpha; requires w(e) >= alpha >= 1
WeightedGraph round_weights(const WeightedGraph& g, uint64_t alpha);

// edge-disjoint packing on the weight-doubled multigraph, each tree weighted
// 1/2 and identical trees merged; value >= lambda(h)/2.  max_half_trees
// truncates the search once that many trees are packed (0 = exact maximum);
// any truncation point at or above the connectivity estimate keeps the
// lambda/2 contract because the maximum is at least lambda(h).
TreePacking pack_trees(const WeightedGraph& h, uint64_t max_half_trees = 0);

// O(log n) spanning trees of g such that every (1+1/16)-near-minimum cut
// 2-respects at least a quarter of them (with high probability); trees are
// edge-index lists into g.edges
std::vector<std::vector<int>> karger_trees(const WeightedGraph& g, Rng rng);

std::string trees_to_json(const WeightedGraph& g,
                          const std::vector<std::vector<int>>& trees);

} // namespace qmincut
