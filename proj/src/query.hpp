#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

namespace qmincut {

enum class Model { matrix, array };

// Classical query count plus the quantum cost charged to each simulated
// search primitive.  quantum_charge always equals the breakdown sum;
// `detail` holds non-summed diagnostics (e.g. per-step decompositions).
struct QueryLedger {
    uint64_t classical = 0;
    uint64_t quantum_charge = 0;
    std::map<std::string, uint64_t> breakdown;
    std::map<std::string, uint64_t> detail;

    void charge(const std::string& name, uint64_t amount) {
        quantum_charge += amount;
        breakdown[name] += amount;
    }
    std::string to_json() const;
};

// Query access to a hidden graph.  Every answered query bumps the ledger.
struct OracleHandle {
    const WeightedGraph* g = nullptr;
    Model model = Model::matrix;
    QueryLedger* ledger = nullptr;

    OracleHandle(const WeightedGraph& graph, Model m, QueryLedger& led);

    // weight of pair {u,v}, 0 for a non-edge; matrix model only
    uint64_t matrix_query(int u, int v) const;
    // i-th stored neighbor of v (1-based) and the edge weight; array model only
    std::pair<int, uint64_t> array_query(int v, int i) const;
    int degree_query(int v) const;

    // classical bulk read used by the explicit (non-query) subroutines;
    // charges one classical query per edge slot of the model
    const WeightedGraph& bulk_read() const;

  private:
    std::vector<std::vector<uint64_t>> row_; // matrix lookup, row per vertex
};

// A search problem over indices [0, N).  Evaluating one index costs
// cost_per_probe oracle queries; the charge formulas multiply by it.
struct SearchSpace {
    uint64_t N = 0;
    uint64_t cost_per_probe = 1;
    std::function<bool(uint64_t)> marked;
    std::function<uint64_t(uint64_t)> value; // min_find only
    double fault_rate = 0; // optional fault injection; 0 = exact
};

uint64_t ceil_sqrt(uint64_t n);
// smallest r with r*r*k >= n, i.e. ceil(sqrt(n/k))
uint64_t ceil_sqrt_ratio(uint64_t n, uint64_t k);

// randomized scan for any marked index; charges ceil(sqrt(N))*cost
std::optional<uint64_t> grover_search(const SearchSpace& s, QueryLedger& led,
                                      const std::string& name, Rng& rng);

// caller promises exactly k >= 1 marked items; charges ceil(sqrt(N/k))*cost
uint64_t exact_search(const SearchSpace& s, uint64_t k, QueryLedger& led,
                      const std::string& name, Rng& rng);

struct BoundedLearnResult {
    bool over_threshold = false;
    std::vector<uint64_t> items; // all marked indices when not over
};

// learns the whole marked set if it has size <= t; charges ceil(sqrt(t*N))*cost
// and records the descending-k decomposition in ledger.detail
BoundedLearnResult bounded_learn(const SearchSpace& s, uint64_t t,
                                 QueryLedger& led, const std::string& name,
                                 Rng& rng);

// index minimizing s.value; charges ceil(sqrt(N))*cost
uint64_t min_find(const SearchSpace& s, QueryLedger& led,
                  const std::string& name, Rng& rng);

} // namespace qmincut
