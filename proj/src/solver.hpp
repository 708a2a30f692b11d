#pragma once

#include <cstdint>

#include "graph.hpp"
#include "query.hpp"
#include "rng.hpp"

namespace qmincut {

struct MinStar {
    int vertex = -1;
    uint64_t weight = 0;
};

// vertex of minimum weighted degree.  Matrix model: minimum finding over
// vertices with an n-query degree evaluator; array model: degree buckets
// with per-bucket minimum finding.
MinStar find_min_star(const OracleHandle& h, Rng& rng);

uint64_t find_max_weight(const OracleHandle& h, Rng& rng);
uint64_t find_min_weight(const OracleHandle& h, Rng& rng);

struct ContractionResult {
    bool over_budget = false;
    WeightedGraph g;
};

// learns contract(g, p) through the oracle: bounded search over cross-block
// pair/array positions (at most max_edges marked), then weight reads
ContractionResult learn_contraction(const OracleHandle& h, const Partition& p,
                                    uint64_t max_edges, Rng& rng);

// exact edge set of the cut at shore x, via bounded search with
// t = ceil(tau)*(n-1)
std::vector<Edge> find_cut_edges(const OracleHandle& h, const Shore& x, Rng& rng);

struct SolveResult {
    uint64_t lambda = 0;
    Shore shore;
    bool aborted = false; // contraction exceeded its budget; star cut returned
};

// End-to-end minimum cut through the oracle: min star, edge-weight ratio,
// sparsify, learn near-minimum-cut atoms, learn the contraction (budget
// 100*tau*n), solve the contracted graph, return the lighter of the star
// cut and the contracted cut.  Exact with probability >= 3/4 per run.
SolveResult min_cut(const OracleHandle& h, Rng rng);

} // namespace qmincut
