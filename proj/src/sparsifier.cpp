#include "sparsifier.hpp"

#include <cmath>
#include <stdexcept>

#include "packing.hpp"

namespace qmincut {

Sparsifier cut_sparsifier(const WeightedGraph& g, uint64_t eps_num,
                          uint64_t eps_den, Rng& rng) {
    if (eps_num == 0 || 3 * eps_num > eps_den)
        throw std::invalid_argument("eps must be in (0, 1/3]");
    if (!g.connected()) throw std::invalid_argument("disconnected graph");

    Sparsifier out;
    if (g.n < 2 || g.m() == 0) {
        out.h = g;
        return out;
    }

    uint64_t lam = matula_estimate(g);
    double eps = (double)eps_num / (double)eps_den;
    // skeleton rate 3*d*ln(n)/(eps^2 * lambda) with d = 2, using the safe
    // lower bound lambda >= lam/3
    double p = 18.0 * std::log((double)g.n) / (eps * eps * (double)lam);
    if (p >= 1.0) {
        out.h = g;
        return out;
    }
    // dyadic rationalization so the scale is exact
    uint64_t P = (uint64_t)std::ceil(p * (double)(1 << 20));
    if (P >= (1 << 20)) {
        out.h = g;
        return out;
    }

    uint64_t thr = ((eps_den + eps_num) * lam + eps_den - 1) / eps_den;
    WeightedGraph cert = ni_certificate(g, thr);
    out.h = skeleton_sample(cert, (double)P / (double)(1 << 20), rng);
    out.scale_num = 1 << 20;
    out.scale_den = P;
    return out;
}

} // namespace qmincut
