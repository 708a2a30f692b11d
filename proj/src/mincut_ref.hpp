#pragma once

#include "graph.hpp"

namespace qmincut {

struct CutResult {
    uint64_t lambda = 0;
    Shore shore;
};

// exhaustive enumeration over all 2^(n-1)-1 shores; n <= 24
CutResult brute_min_cut(const WeightedGraph& g);

// deterministic exact reference for any n (minimum-cut phase algorithm)
CutResult stoer_wagner(const WeightedGraph& g);

// all shores with cut weight <= threshold, canonicalized to exclude vertex n-1;
// n <= 24
std::vector<Shore> enumerate_light_shores(const WeightedGraph& g, uint64_t threshold);

} // namespace qmincut
