#pragma once

#include <cstdint>

#include "graph.hpp"
#include "rng.hpp"

namespace qmincut {

// Reweighted subgraph h whose cuts, multiplied by scale_num/scale_den,
// approximate the cuts of the source graph within (1 +- eps).
struct Sparsifier {
    WeightedGraph h;
    uint64_t scale_num = 1;
    uint64_t scale_den = 1;

    double scale() const { return (double)scale_num / (double)scale_den; }
};

// eps given as an exact rational eps_num/eps_den, 0 < eps <= 1/3.
// Construction: connectivity estimate -> sparse certificate at (1+eps) of
// the estimate -> uniform multigraph downsampling at rate
// p = 18 ln(n) / (eps^2 * estimate); when p >= 1 the graph is returned
// unchanged with scale 1.  Throws on disconnected input.
Sparsifier cut_sparsifier(const WeightedGraph& g, uint64_t eps_num,
                          uint64_t eps_den, Rng& rng);

// deterministic edge-count bound constant: |E(h)| <= SPARSIFIER_C * n ln n / eps^2
inline constexpr double SPARSIFIER_C = 200.0;

} // namespace qmincut
