#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

namespace qmincut {

struct GenResult {
    WeightedGraph g;
    uint64_t lambda = 0; // closed-form minimum cut
    Shore shore;         // a witness shore achieving it
};

// random bitstring of given length with exactly `ones` set positions
std::vector<uint8_t> random_bits(size_t len, size_t ones, Rng& rng);

// Two heavy parts of weight tau (sizes floor(n/2), ceil(n/2)); a
// distinguished vertex 0 in the first part; x selects unit edges between the
// first part minus vertex 0 and the second part.  lambda = min(|x|, k) with
// k = tau*(floor(n/2)-1); the heavy shore is unique when |x| < k, the star
// at vertex 0 realizes k when |x| > k.  Requires 1 <= tau <= (floor(n/2)-1)/2.
GenResult gen_matrix_lb(int n, uint64_t tau, const std::vector<uint8_t>& x);

// Complete bipartite (3n/4, n/4) with weights 1 + eps*pattern bit, eps =
// eps_num/eps_den given exactly; emitted weights are scaled by eps_den.
// Each left vertex's pattern must have Hamming weight floor(n/8) +- 1.
// lambda = eps_den*n/4 + eps_num*(min pattern weight), at a left star.
// Requires n >= 8 divisible by 4, 1 <= eps_num <= eps_den.
GenResult gen_bipartite_lb(int n, uint64_t eps_num, uint64_t eps_den,
                           const std::vector<std::vector<uint8_t>>& patterns);

// Four tau-cliques of size n/4 plus tau*n/10 edge-disjoint quadruples of
// unit edges; bit l routes quadruple l one of two ways.  lambda =
// 2*min(|x|, tau*n/10 - |x|) with shore V1+V2 or V1+V4.  Degrees are
// independent of x.  Requires n divisible by 4, tau*n divisible by 10,
// 1 <= tau <= 5n/8.
GenResult gen_quadruple_lb(int n, uint64_t tau, const std::vector<uint8_t>& x);

// connected random graph, integer weights uniform in [1, tau]
WeightedGraph gen_random(int n, int m, uint64_t tau, Rng& rng);

} // namespace qmincut
