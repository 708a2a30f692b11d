#include "query.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace qmincut {

std::string QueryLedger::to_json() const {
    nlohmann::json j;
    j["classical"] = classical;
    j["quantum_charge"] = quantum_charge;
    j["breakdown"] = breakdown;
    if (!detail.empty()) j["detail"] = detail;
    return j.dump();
}

OracleHandle::OracleHandle(const WeightedGraph& graph, Model m, QueryLedger& led)
    : g(&graph), model(m), ledger(&led) {
    if (m == Model::matrix) {
        row_.assign(graph.n, std::vector<uint64_t>(graph.n, 0));
        for (const Edge& e : graph.edges) {
            row_[e.u][e.v] = e.w;
            row_[e.v][e.u] = e.w;
        }
    }
}

uint64_t OracleHandle::matrix_query(int u, int v) const {
    if (model != Model::matrix) throw std::logic_error("not in matrix model");
    if (u == v) throw std::invalid_argument("diagonal query");
    ledger->classical++;
    return row_[u][v];
}

std::pair<int, uint64_t> OracleHandle::array_query(int v, int i) const {
    if (model != Model::array) throw std::logic_error("not in array model");
    if (i < 1 || i > g->degree(v)) throw std::out_of_range("neighbor index");
    ledger->classical++;
    auto [u, ei] = g->adj[v][i - 1];
    return {u, g->edges[ei].w};
}

int OracleHandle::degree_query(int v) const {
    if (model != Model::array) throw std::logic_error("not in array model");
    ledger->classical++;
    return g->degree(v);
}

const WeightedGraph& OracleHandle::bulk_read() const {
    ledger->classical += model == Model::matrix
                             ? (uint64_t)g->n * (g->n - 1) / 2
                             : 2 * (uint64_t)g->m();
    return *g;
}

uint64_t ceil_sqrt(uint64_t n) {
    if (n == 0) return 0;
    uint64_t r = (uint64_t)std::sqrt((double)n);
    while (r * r >= n && r > 0) r--;
    while (r * r < n) r++;
    return r;
}

uint64_t ceil_sqrt_ratio(uint64_t n, uint64_t k) {
    if (n == 0) return 0;
    uint64_t r = ceil_sqrt((n + k - 1) / k);
    while (r > 0 && (r - 1) * (r - 1) * k >= n) r--;
    while (r * r * k < n) r++;
    return r;
}

static std::vector<uint64_t> shuffled_indices(uint64_t n, Rng& rng) {
    std::vector<uint64_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (uint64_t i = n; i > 1; i--) std::swap(idx[i - 1], idx[rng.below(i)]);
    return idx;
}

std::optional<uint64_t> grover_search(const SearchSpace& s, QueryLedger& led,
                                      const std::string& name, Rng& rng) {
    led.charge(name, ceil_sqrt(s.N) * s.cost_per_probe);
    if (s.fault_rate > 0 && rng.real() < s.fault_rate) return std::nullopt;
    for (uint64_t i : shuffled_indices(s.N, rng))
        if (s.marked(i)) return i;
    return std::nullopt;
}

uint64_t exact_search(const SearchSpace& s, uint64_t k, QueryLedger& led,
                      const std::string& name, Rng& rng) {
    if (k < 1) throw std::invalid_argument("promised count must be >= 1");
    led.charge(name, ceil_sqrt_ratio(s.N, k) * s.cost_per_probe);
    for (uint64_t i : shuffled_indices(s.N, rng))
        if (s.marked(i)) return i;
    throw std::logic_error("exact_search precondition violated: nothing marked");
}

BoundedLearnResult bounded_learn(const SearchSpace& s, uint64_t t,
                                 QueryLedger& led, const std::string& name,
                                 Rng& rng) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    led.charge(name, ceil_sqrt_ratio(t * s.N, 1) * s.cost_per_probe);
    uint64_t steps = ceil_sqrt(s.N);
    for (uint64_t k = 1; k <= t; k++) steps += ceil_sqrt_ratio(s.N, k);
    led.detail[name + ".steps"] += steps * s.cost_per_probe;

    BoundedLearnResult r;
    if (s.fault_rate > 0 && rng.real() < s.fault_rate) {
        r.over_threshold = true;
        return r;
    }
    for (uint64_t i = 0; i < s.N; i++) {
        if (!s.marked(i)) continue;
        r.items.push_back(i);
        if (r.items.size() > t) {
            r.over_threshold = true;
            r.items.clear();
            return r;
        }
    }
    return r;
}

uint64_t min_find(const SearchSpace& s, QueryLedger& led,
                  const std::string& name, Rng& rng) {
    if (s.N < 1) throw std::invalid_argument("empty search space");
    led.charge(name, ceil_sqrt(s.N) * s.cost_per_probe);
    uint64_t arg = 0, best = s.value(0);
    for (uint64_t i = 1; i < s.N; i++) {
        uint64_t v = s.value(i);
        if (v < best) {
            best = v;
            arg = i;
        }
    }
    if (s.fault_rate > 0 && rng.real() < s.fault_rate) return rng.below(s.N);
    return arg;
}

} // namespace qmincut
