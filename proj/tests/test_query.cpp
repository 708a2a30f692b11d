#include <doctest.h>

#include <algorithm>
#include <set>

#include "graph.hpp"
#include "query.hpp"
#include "rng.hpp"

using namespace qmincut;

namespace {

WeightedGraph triangle() {
    return WeightedGraph(3, {{0, 1, 5}, {1, 2, 7}, {0, 2, 11}});
}

} // namespace

TEST_CASE("square root helpers") {
    CHECK(ceil_sqrt(0) == 0);
    CHECK(ceil_sqrt(1) == 1);
    CHECK(ceil_sqrt(2) == 2);
    CHECK(ceil_sqrt(4) == 2);
    CHECK(ceil_sqrt(5) == 3);
    CHECK(ceil_sqrt(1000000) == 1000);
    CHECK(ceil_sqrt(1000001) == 1001);
    CHECK(ceil_sqrt_ratio(16, 1) == 4);
    CHECK(ceil_sqrt_ratio(16, 4) == 2);
    CHECK(ceil_sqrt_ratio(17, 4) == 3);
    CHECK(ceil_sqrt_ratio(100, 7) == 4); // 4^2*7 = 112 >= 100, 3^2*7 = 63 < 100
}

TEST_CASE("oracle answers and classical counting") {
    WeightedGraph g = triangle();
    QueryLedger led;
    OracleHandle h(g, Model::matrix, led);
    CHECK(h.matrix_query(0, 1) == 5);
    CHECK(h.matrix_query(1, 0) == 5);
    CHECK(h.matrix_query(2, 0) == 11);
    CHECK(led.classical == 3);
    CHECK(led.quantum_charge == 0);
    CHECK_THROWS(h.matrix_query(0, 0));
    CHECK_THROWS(h.array_query(0, 1)); // wrong model

    QueryLedger led2;
    OracleHandle a(g, Model::array, led2);
    CHECK(a.degree_query(1) == 2);
    auto [nb, w] = a.array_query(1, 1);
    CHECK(nb == g.adj[1][0].first);
    CHECK(w == g.edges[g.adj[1][0].second].w);
    // neighbor order matches the stored adjacency order
    for (int v = 0; v < 3; v++)
        for (int i = 0; i < a.degree_query(v); i++) {
            auto [u, wt] = a.array_query(v, i + 1);
            CHECK(u == g.adj[v][i].first);
            CHECK(wt == g.edges[g.adj[v][i].second].w);
        }
    CHECK_THROWS(a.array_query(0, 0)); // 1-based
    CHECK_THROWS(a.array_query(0, 3));
    CHECK_THROWS(a.matrix_query(0, 1));
}

TEST_CASE("non-edges answer zero") {
    WeightedGraph g(4, {{0, 1, 2}, {2, 3, 9}});
    QueryLedger led;
    OracleHandle h(g, Model::matrix, led);
    CHECK(h.matrix_query(0, 2) == 0);
    CHECK(h.matrix_query(1, 3) == 0);
}

TEST_CASE("bulk read charges the full input size") {
    WeightedGraph g = triangle();
    {
        QueryLedger led;
        OracleHandle h(g, Model::matrix, led);
        h.bulk_read();
        CHECK(led.classical == 3); // n(n-1)/2
    }
    {
        QueryLedger led;
        OracleHandle h(g, Model::array, led);
        h.bulk_read();
        CHECK(led.classical == 6); // 2m
    }
}

TEST_CASE("randomized search finds marked items and charges the root") {
    Rng rng(1);
    SearchSpace s;
    s.N = 16;
    s.marked = [](uint64_t i) { return i == 13; };
    QueryLedger led;
    auto hit = grover_search(s, led, "probe", rng);
    REQUIRE(hit.has_value());
    CHECK(*hit == 13);
    CHECK(led.quantum_charge == 4);
    CHECK(led.breakdown.at("probe") == 4);

    // unsuccessful search still pays
    SearchSpace none;
    none.N = 10;
    none.marked = [](uint64_t) { return false; };
    QueryLedger led2;
    CHECK(!grover_search(none, led2, "p", rng).has_value());
    CHECK(led2.quantum_charge == 4); // ceil(sqrt(10))

    // probe cost multiplies the charge
    s.cost_per_probe = 7;
    QueryLedger led3;
    grover_search(s, led3, "p", rng);
    CHECK(led3.quantum_charge == 28);

    // empty space: nothing found, nothing charged
    SearchSpace empty;
    empty.N = 0;
    empty.marked = [](uint64_t) { return true; };
    QueryLedger led4;
    CHECK(!grover_search(empty, led4, "p", rng).has_value());
    CHECK(led4.quantum_charge == 0);
}

TEST_CASE("promised-count search") {
    Rng rng(2);
    SearchSpace s;
    s.N = 100;
    std::set<uint64_t> marked{4, 40, 77, 91};
    s.marked = [&](uint64_t i) { return marked.count(i) > 0; };
    QueryLedger led;
    uint64_t i = exact_search(s, 4, led, "e", rng);
    CHECK(marked.count(i) == 1);
    CHECK(led.quantum_charge == 5); // ceil(sqrt(100/4))
    CHECK_THROWS(exact_search(s, 0, led, "e", rng));
}

TEST_CASE("bounded learning of small marked sets") {
    Rng rng(3);
    SearchSpace s;
    s.N = 50;
    std::set<uint64_t> marked{3, 17, 31};
    s.marked = [&](uint64_t i) { return marked.count(i) > 0; };

    QueryLedger led;
    BoundedLearnResult r = bounded_learn(s, 5, led, "b", rng);
    CHECK(!r.over_threshold);
    std::set<uint64_t> got(r.items.begin(), r.items.end());
    CHECK(got == marked);
    CHECK(r.items.size() == 3);
    CHECK(led.quantum_charge == 16); // ceil(sqrt(5*50)) = ceil(15.81)
    // the per-step decomposition is recorded without inflating the charge
    CHECK(led.detail.count("b.steps") == 1);
    uint64_t sum = 0;
    for (auto& [k, v] : led.breakdown) sum += v;
    CHECK(sum == led.quantum_charge);

    // exactly t marked: still learned in full
    QueryLedger led2;
    BoundedLearnResult r2 = bounded_learn(s, 3, led2, "b", rng);
    CHECK(!r2.over_threshold);
    CHECK(r2.items.size() == 3);
    CHECK(led2.quantum_charge == 13); // ceil(sqrt(150))

    // more marked than the budget: flagged, charge unchanged in form
    QueryLedger led3;
    BoundedLearnResult r3 = bounded_learn(s, 2, led3, "b", rng);
    CHECK(r3.over_threshold);
    CHECK(led3.quantum_charge == 10); // ceil(sqrt(100))

    // no marked items at all
    SearchSpace none;
    none.N = 9;
    none.marked = [](uint64_t) { return false; };
    QueryLedger led4;
    BoundedLearnResult r4 = bounded_learn(none, 4, led4, "n", rng);
    CHECK(!r4.over_threshold);
    CHECK(r4.items.empty());
    CHECK(led4.quantum_charge == 6); // ceil(sqrt(36))
}

TEST_CASE("minimum finding") {
    Rng rng(4);
    SearchSpace s;
    s.N = 37;
    s.value = [](uint64_t i) { return (i * 29 + 5) % 37; }; // bijection, min at i
    QueryLedger led;
    uint64_t i = min_find(s, led, "m", rng);
    CHECK((i * 29 + 5) % 37 == 0);
    CHECK(led.quantum_charge == 7); // ceil(sqrt(37))

    s.cost_per_probe = 3;
    QueryLedger led2;
    min_find(s, led2, "m", rng);
    CHECK(led2.quantum_charge == 21);

    // ties: any argmin is acceptable
    SearchSpace t;
    t.N = 8;
    t.value = [](uint64_t i) { return i < 4 ? 2ull : 9ull; };
    QueryLedger led3;
    CHECK(min_find(t, led3, "m", rng) < 4);
}

TEST_CASE("ledger additivity across primitives") {
    Rng rng(5);
    QueryLedger led;
    SearchSpace s;
    s.N = 30;
    s.marked = [](uint64_t i) { return i % 7 == 0; };
    s.value = [](uint64_t i) { return 100 - i; };
    grover_search(s, led, "a", rng);
    grover_search(s, led, "a", rng);
    min_find(s, led, "b", rng);
    bounded_learn(s, 10, led, "c", rng);
    uint64_t sum = 0;
    for (auto& [k, v] : led.breakdown) sum += v;
    CHECK(sum == led.quantum_charge);
    CHECK(led.breakdown.at("a") == 12); // two searches at ceil(sqrt(30)) = 6
    CHECK(led.to_json().find("\"quantum_charge\"") != std::string::npos);
}
