#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qmincut {

std::vector<uint8_t> random_bits(size_t len, size_t ones, Rng& rng) {
    if (ones > len) throw std::invalid_argument("too many ones");
    std::vector<uint8_t> x(len, 0);
    std::fill(x.begin(), x.begin() + ones, 1);
    for (size_t i = len; i > 1; i--) std::swap(x[i - 1], x[rng.below(i)]);
    return x;
}

GenResult gen_matrix_lb(int n, uint64_t tau, const std::vector<uint8_t>& x) {
    int half = n / 2;                // first part
    int rest = n - half;             // second part
    if (half < 3) throw std::invalid_argument("n too small");
    if (tau < 1 || 2 * tau > (uint64_t)(half - 1))
        throw std::invalid_argument("tau out of range");
    if (x.size() != (size_t)(half - 1) * rest)
        throw std::invalid_argument("bitstring length mismatch");

    std::vector<Edge> edges;
    for (int u = 0; u < half; u++)
        for (int v = u + 1; v < half; v++) edges.push_back({u, v, tau});
    for (int u = half; u < n; u++)
        for (int v = u + 1; v < n; v++) edges.push_back({u, v, tau});
    uint64_t ones = 0;
    for (int i = 0; i < half - 1; i++)
        for (int j = 0; j < rest; j++)
            if (x[(size_t)i * rest + j]) {
                edges.push_back({1 + i, half + j, 1});
                ones++;
            }

    GenResult r;
    r.g = WeightedGraph(n, std::move(edges));
    uint64_t k = tau * (uint64_t)(half - 1);
    r.lambda = std::min(ones, k);
    r.shore = Shore(n);
    if (ones < k)
        for (int v = 0; v < half; v++) r.shore.set(v);
    else
        r.shore.set(0); // star at the distinguished vertex
    return r;
}

GenResult gen_bipartite_lb(int n, uint64_t eps_num, uint64_t eps_den,
                           const std::vector<std::vector<uint8_t>>& patterns) {
    if (n < 8 || n % 4 != 0) throw std::invalid_argument("n must be >= 8, divisible by 4");
    if (eps_num < 1 || eps_num > eps_den) throw std::invalid_argument("eps out of range");
    int left = 3 * n / 4, right = n / 4;
    int base = n / 8;
    if ((int)patterns.size() != left)
        throw std::invalid_argument("need one pattern per left vertex");

    std::vector<Edge> edges;
    int arg = 0;
    uint64_t best = UINT64_MAX;
    for (int l = 0; l < left; l++) {
        const auto& pat = patterns[l];
        if ((int)pat.size() != right) throw std::invalid_argument("pattern length mismatch");
        uint64_t wt = 0;
        for (int j = 0; j < right; j++) {
            wt += pat[j] ? 1 : 0;
            edges.push_back({l, left + j, eps_den + eps_num * (pat[j] ? 1 : 0)});
        }
        if (wt + 1 != (uint64_t)base && wt != (uint64_t)base + 1)
            throw std::invalid_argument("pattern weight must be n/8 +- 1");
        if (wt < best) {
            best = wt;
            arg = l;
        }
    }

    GenResult r;
    r.g = WeightedGraph(n, std::move(edges));
    r.lambda = eps_den * (uint64_t)(n / 4) + eps_num * best;
    r.shore = Shore(n);
    r.shore.set(arg);
    return r;
}

GenResult gen_quadruple_lb(int n, uint64_t tau, const std::vector<uint8_t>& x) {
    if (n < 8 || n % 4 != 0) throw std::invalid_argument("n must be >= 8, divisible by 4");
    if (tau < 1 || 8 * tau > (uint64_t)(5 * n)) throw std::invalid_argument("tau out of range");
    if ((tau * n) % 10 != 0) throw std::invalid_argument("tau*n must be divisible by 10");
    uint64_t quads = tau * n / 10;
    int s = n / 4;
    if (quads > (uint64_t)s * s)
        throw std::invalid_argument("quadruple system too large");
    if (x.size() != quads) throw std::invalid_argument("bitstring length mismatch");

    std::vector<Edge> edges;
    for (int part = 0; part < 4; part++)
        for (int u = 0; u < s; u++)
            for (int v = u + 1; v < s; v++)
                edges.push_back({part * s + u, part * s + v, tau});
    uint64_t ones = 0;
    for (uint64_t l = 0; l < quads; l++) {
        int r0 = (int)(l % s), q = (int)(l / s);
        int u1 = r0, u2 = s + (r0 + q) % s;
        int u3 = 2 * s + r0, u4 = 3 * s + (r0 + q) % s;
        if (x[l]) {
            edges.push_back({u2, u3, 1});
            edges.push_back({u4, u1, 1});
            ones++;
        } else {
            edges.push_back({u1, u2, 1});
            edges.push_back({u3, u4, 1});
        }
    }

    GenResult r;
    r.g = WeightedGraph(n, std::move(edges));
    uint64_t other = quads - ones;
    r.lambda = 2 * std::min(ones, other);
    r.shore = Shore(n);
    for (int v = 0; v < s; v++) r.shore.set(v);
    if (ones <= other)
        for (int v = s; v < 2 * s; v++) r.shore.set(v); // V1+V2
    else
        for (int v = 3 * s; v < n; v++) r.shore.set(v); // V1+V4
    return r;
}

WeightedGraph gen_random(int n, int m, uint64_t tau, Rng& rng) {
    if (n < 2) throw std::invalid_argument("need at least 2 vertices");
    if (m < n - 1 || (uint64_t)m > (uint64_t)n * (n - 1) / 2)
        throw std::invalid_argument("infeasible edge count");
    if (tau < 1) throw std::invalid_argument("tau must be >= 1");

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n; i > 1; i--) std::swap(perm[i - 1], perm[rng.below(i)]);

    std::set<std::pair<int, int>> used;
    std::vector<Edge> edges;
    auto add = [&](int u, int v) {
        auto key = std::minmax(u, v);
        if (u == v || used.count(key)) return false;
        used.insert(key);
        edges.push_back({u, v, (uint64_t)rng.range(1, (int64_t)tau)});
        return true;
    };
    for (int i = 1; i < n; i++) add(perm[i], perm[rng.below(i)]);
    while ((int)edges.size() < m)
        add((int)rng.below(n), (int)rng.below(n));
    return WeightedGraph(n, std::move(edges));
}

} // namespace qmincut
