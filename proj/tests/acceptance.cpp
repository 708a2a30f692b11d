// Acceptance harness: one pass/fail line per shipped guarantee, exit 0 only
// if every check holds.  Each check seeds its own RNG stream so reruns are
// reproducible.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "atoms.hpp"
#include "euler.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "mincut_ref.hpp"
#include "packing.hpp"
#include "query.hpp"
#include "rng.hpp"
#include "solver.hpp"
#include "sparsifier.hpp"

using namespace qmincut;

namespace {

bool report(const char* name, bool ok, const std::string& detail) {
    std::printf("%-44s %s  (%s)\n", name, ok ? "PASS" : "FAIL", detail.c_str());
    return ok;
}

WeightedGraph random_graph(Rng& rng, int n_lo, int n_hi, uint64_t w_hi,
                           int* n_out = nullptr) {
    int n = (int)rng.range(n_lo, n_hi);
    int m = (int)rng.range(n - 1, n * (n - 1) / 2);
    if (n_out) *n_out = n;
    return gen_random(n, m, w_hi, rng);
}

std::vector<std::pair<int, int>> random_tree(int n, Rng& rng) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; v++) e.emplace_back((int)rng.below((uint64_t)v), v);
    return e;
}

std::vector<std::pair<int, int>> spanning_of(const WeightedGraph& g) {
    std::vector<int> par(g.n, -1);
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::vector<std::pair<int, int>> e;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [u, idx] : g.adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                e.emplace_back(v, u);
                stack.push_back(u);
            }
    }
    return e;
}

std::vector<TwoRespectId> all_ids(const RootedTree& t) {
    std::vector<TwoRespectId> ids;
    for (int u = 0; u < t.n; u++) {
        if (u == t.root) continue;
        ids.push_back({u, -1});
        for (int v = u + 1; v < t.n; v++)
            if (v != t.root) ids.push_back({u, v});
    }
    return ids;
}

// ---------------------------------------------------------------- check 1
bool check_exactness() {
    struct Trial {
        WeightedGraph g;
        uint64_t lambda;
    };
    std::vector<Trial> trials;
    Rng rng(101);
    for (int i = 0; i < 500; i++) {
        WeightedGraph g = random_graph(rng, 2, 10, 8);
        trials.push_back({g, brute_min_cut(g).lambda});
    }
    // every feasible generator configuration up to 16 vertices
    Rng xr(102);
    for (int n = 6; n <= 16; n++) {
        for (uint64_t tau = 1; 2 * tau <= (uint64_t)(n / 2 - 1); tau++) {
            uint64_t k = tau * (uint64_t)(n / 2 - 1);
            size_t len = (size_t)(n / 2 - 1) * (n - n / 2);
            for (uint64_t cnt : {k / 2, k - 1, std::min((uint64_t)len, k + 1)}) {
                GenResult r = gen_matrix_lb(n, tau, random_bits(len, (size_t)cnt, xr));
                trials.push_back({r.g, r.lambda});
            }
        }
    }
    for (int n : {8, 12, 16})
        for (auto [en, ed] : {std::pair<uint64_t, uint64_t>{1, 2}, {1, 10}}) {
            int left = 3 * n / 4, right = n / 4, base = n / 8;
            std::vector<std::vector<uint8_t>> pats;
            for (int l = 0; l < left; l++)
                pats.push_back(random_bits((size_t)right,
                                           (size_t)base + (xr.below(2) ? 1 : -1), xr));
            GenResult r = gen_bipartite_lb(n, en, ed, pats);
            trials.push_back({r.g, r.lambda});
        }
    for (int n : {8, 12, 16})
        for (uint64_t tau = 1; 8 * tau <= (uint64_t)(5 * n); tau++) {
            if ((tau * (uint64_t)n) % 10 != 0) continue;
            uint64_t quads = tau * (uint64_t)n / 10;
            if (quads > (uint64_t)(n / 4) * (n / 4)) continue;
            size_t cnt = (size_t)(quads / 4); // off the ambiguous midpoint
            if (2 * (uint64_t)cnt == quads) cnt = cnt ? cnt - 1 : 0;
            GenResult r = gen_quadruple_lb(n, tau, random_bits((size_t)quads, cnt, xr));
            trials.push_back({r.g, r.lambda});
        }

    int single_ok = 0, majority_ok = 0;
    int total = (int)trials.size();
    for (int i = 0; i < total; i++) {
        const Trial& t = trials[i];
        Model model = i % 2 ? Model::matrix : Model::array;
        std::map<uint64_t, int> votes;
        uint64_t first = 0;
        for (int r = 0; r < 9; r++) {
            QueryLedger led;
            OracleHandle h(t.g, model, led);
            SolveResult s = min_cut(h, Rng(5000 + 17 * (uint64_t)i + r));
            if (r == 0) first = s.lambda;
            votes[s.lambda]++;
        }
        if (first == t.lambda) single_ok++;
        auto best = votes.begin();
        for (auto it = votes.begin(); it != votes.end(); ++it)
            if (it->second > best->second) best = it;
        if (best->first == t.lambda) majority_ok++;
    }
    char d[160];
    std::snprintf(d, sizeof d,
                  "%d instances: single-run %d/%d >= 75%%, 9-run majority %d/%d >= 99%%",
                  total, single_ok, total, majority_ok, total);
    return report("exact minimum cut, single run and majority",
                  100 * single_ok >= 75 * total && 100 * majority_ok >= 99 * total, d);
}

// ---------------------------------------------------------------- check 2
bool check_contraction_weight() {
    Rng rng(201);
    int runs = 0, tight_checked = 0;
    bool budget_ok = true, tight_ok = true;
    for (int i = 0; i < 300; i++) {
        WeightedGraph g = random_graph(rng, 3, 10, 8);
        uint64_t maxw = g.max_edge_weight();
        // pipeline-shaped stage replay: sparsify, learn atoms, contract
        Rng run(7000 + i);
        Rng sr = run.split(1);
        Sparsifier S = cut_sparsifier(g, 1, 100, sr);
        uint64_t lam_h = stoer_wagner(S.h).lambda;
        if (lam_h == 0) continue;
        QueryLedger led;
        Partition p = learn_cut_atoms(S.h, 101 * lam_h / 100, 0.05, run.split(2),
                                      led, (int64_t)lam_h);
        if (p.blocks < 2) continue; // a failed run aborts before contracting
        WeightedGraph c = contract(g, p);
        runs++;
        if (c.total_weight() > 100 * maxw * (uint64_t)g.n) budget_ok = false;

        // with exact near-minimum-cut atoms the tighter bound must hold
        uint64_t lam = brute_min_cut(g).lambda;
        ShoreFamily fam;
        fam.n = g.n;
        fam.shores = enumerate_light_shores(g, 101 * lam / 100);
        Partition exact = atoms(g.n, fam);
        if (exact.blocks >= 2) {
            tight_checked++;
            uint64_t w = contract(g, exact).total_weight();
            // w/minw <= 68*tau*n/(1-1/10)^2  <=>  81*w <= 6800*maxw*n
            if (81 * w > 6800 * maxw * (uint64_t)g.n) tight_ok = false;
        }
    }
    char d[160];
    std::snprintf(d, sizeof d,
                  "%d replayed runs within 100*tau*n, %d exact-atom runs within "
                  "68*tau*n/(1-eps)^2", runs, tight_checked);
    return report("contraction weight stays within budget",
                  budget_ok && tight_ok && runs > 200, d);
}

// ---------------------------------------------------------------- check 3
bool check_tree_cover() {
    Rng rng(301);
    int good = 0;
    for (int i = 0; i < 100; i++) {
        int n = (int)rng.range(4, 12);
        WeightedGraph g = gen_random(n, (int)rng.range(n - 1, n * (n - 1) / 2),
                                     8, rng);
        uint64_t lam = brute_min_cut(g).lambda;
        std::vector<Shore> near = enumerate_light_shores(g, 17 * lam / 16);
        std::vector<std::vector<int>> trees = karger_trees(g, Rng(8800 + i));
        bool all_ok = true;
        for (const Shore& x : near) {
            int covered = 0;
            for (const auto& t : trees) {
                int cross = 0;
                for (int e : t)
                    if (x.test(g.edges[e].u) != x.test(g.edges[e].v)) cross++;
                if (cross <= 2) covered++;
            }
            if (4 * covered < (int)trees.size()) all_ok = false;
        }
        if (all_ok) good++;
    }
    char d[96];
    std::snprintf(d, sizeof d, "all near-min cuts 2-respect >= 1/4 of trees in %d/100 runs", good);
    return report("sampled trees cover near-minimum cuts", good >= 95, d);
}

// ---------------------------------------------------------------- check 4
bool check_generating_sets() {
    Rng rng(401);
    bool size_ok = true, atoms_ok = true;
    for (int i = 0; i < 200; i++) {
        int n = (int)rng.range(4, 12);
        WeightedGraph g = gen_random(n, (int)rng.range(n - 1, n * (n - 1) / 2),
                                     7, rng);
        RootedTree t = root_tree(n, spanning_of(g), 0);
        uint64_t lam = brute_min_cut(g).lambda;
        uint64_t thr = 17 * lam / 16;
        QueryLedger led;
        Rng qr(9300 + i);
        std::vector<TwoRespectId> q = generating_set_for_tree(g, t, thr, led, qr);
        if ((int)q.size() > 2 * n - 3) size_ok = false;

        CutEvaluator ev = build_evaluator(g, t);
        ShoreFamily full;
        full.n = n;
        for (const TwoRespectId& id : all_ids(t))
            if (ev.eval(id) <= thr) full.shores.push_back(shore_of(t, id));
        Partition want = atoms(n, full);
        Partition got = atoms(n, shores_of_ids(t, q));
        if (!(got == want)) atoms_ok = false;
    }
    return report("generating sets: size bound and same atoms", size_ok && atoms_ok,
                  "200 instances, |Q| <= 2n-3 and exact atom equality");
}

// ---------------------------------------------------------------- check 5
bool check_hashed_atoms() {
    bool ok = true;
    std::string d;
    for (int n : {16, 32, 64}) {
        Rng rng(500 + n);
        int fails = 0;
        for (int i = 0; i < 1000; i++) {
            RootedTree t = root_tree(n, random_tree(n, rng), (int)rng.below((uint64_t)n));
            int q = 1 + (int)rng.below((uint64_t)(2 * n - 3));
            std::vector<TwoRespectId> ids;
            for (int j = 0; j < q; j++) {
                int a = (int)rng.below((uint64_t)n);
                while (a == t.root) a = (int)rng.below((uint64_t)n);
                if (rng.below(2)) {
                    ids.push_back({a, -1});
                } else {
                    int b = (int)rng.below((uint64_t)n);
                    while (b == t.root || b == a) b = (int)rng.below((uint64_t)n);
                    ids.push_back({std::min(a, b), std::max(a, b)});
                }
            }
            Partition exact = atoms(n, shores_of_ids(t, ids));
            Partition hashed = atoms_by_hashing(t, ids, rng);
            if (!(hashed == exact)) fails++;
        }
        if (fails * n > 1000) ok = false;
        d += "n=" + std::to_string(n) + ": " + std::to_string(fails) + "/1000  ";
    }
    return report("hashed atoms fail at most 1/n of the time", ok, d);
}

// ---------------------------------------------------------------- check 6
bool check_evaluator() {
    Rng rng(601);
    bool eval_ok = true;
    for (int i = 0; i < 200; i++) {
        int n = (int)rng.range(2, 64);
        int m = (int)rng.range(n - 1, std::min(n * (n - 1) / 2, 6 * n));
        WeightedGraph g = gen_random(n, m, 50, rng);
        RootedTree t = root_tree(n, spanning_of(g), (int)rng.below((uint64_t)n));
        CutEvaluator ev = build_evaluator(g, t);
        for (const TwoRespectId& id : all_ids(t))
            if (ev.eval(id) != cut_weight(g, shore_of(t, id))) eval_ok = false;
    }
    bool batch_ok = true;
    for (int i = 0; i < 500; i++) {
        int n = (int)rng.range(2, 50);
        RootedTree t = root_tree(n, random_tree(n, rng), (int)rng.below((uint64_t)n));
        uint64_t mod = rng.range(2, 1u << 30);
        std::vector<std::pair<int, uint64_t>> ops;
        int k = (int)rng.below(3 * (uint64_t)n + 1);
        for (int j = 0; j < k; j++)
            ops.emplace_back((int)rng.below((uint64_t)n), rng.below(mod));
        std::vector<uint64_t> got = subtree_add_batch(t, ops, mod);
        for (int v = 0; v < n; v++) {
            uint64_t want = 0;
            for (auto [u, delta] : ops)
                if (t.is_ancestor(u, v)) want = (want + delta) % mod;
            if (got[v] != want) batch_ok = false;
        }
    }
    return report("cut evaluator and subtree sums are exact", eval_ok && batch_ok,
                  "200 full evaluator sweeps, 500 batch updates");
}

// ---------------------------------------------------------------- check 7
double fit_slope(const std::vector<std::pair<double, double>>& pts) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        double lx = std::log(x), ly = std::log(y);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    }
    double k = (double)pts.size();
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

bool check_scaling() {
    const int seeds = 3;
    auto matrix_cell = [](int n, uint64_t tau, uint64_t seed) {
        Rng gr(seed * 2654435761u + (uint64_t)n * 97 + tau);
        uint64_t k = tau * (uint64_t)(n / 2 - 1);
        size_t len = (size_t)(n / 2 - 1) * (n - n / 2);
        GenResult r = gen_matrix_lb(n, tau, random_bits(len, (size_t)(k / 2), gr));
        QueryLedger led;
        OracleHandle h(r.g, Model::matrix, led);
        min_cut(h, Rng(seed));
        return (double)led.quantum_charge;
    };
    std::vector<std::pair<double, double>> by_n, by_tau, by_mnt;
    for (int n : {64, 128, 256, 512})
        for (uint64_t s = 0; s < seeds; s++)
            by_n.push_back({(double)n, matrix_cell(n, 1, s)});
    for (uint64_t tau : {1, 4, 16})
        for (uint64_t s = 0; s < seeds; s++)
            by_tau.push_back({(double)tau, matrix_cell(256, tau, s)});
    for (int n : {64, 128, 256})
        for (uint64_t tau : {1, 4, 16})
            for (uint64_t s = 0; s < seeds; s++) {
                Rng gr(s * 2654435761u + (uint64_t)n * 97 + tau);
                int m = n * n / 8;
                WeightedGraph g = gen_random(n, m, tau, gr);
                QueryLedger led;
                OracleHandle h(g, Model::array, led);
                min_cut(h, Rng(s));
                by_mnt.push_back({(double)m * n * tau, (double)led.quantum_charge});
            }
    double sn = fit_slope(by_n), st = fit_slope(by_tau), sm = fit_slope(by_mnt);
    char d[128];
    std::snprintf(d, sizeof d,
                  "slope vs n %.3f in [1.35,1.7], vs tau %.3f in [0.35,0.65], "
                  "vs mn*tau %.3f in [0.35,0.65]", sn, st, sm);
    bool ok = sn >= 1.35 && sn <= 1.7 && st >= 0.35 && st <= 0.65 && sm >= 0.35 &&
              sm <= 0.65;
    return report("query charge scales as advertised", ok, d);
}

// ---------------------------------------------------------------- check 8
bool check_closed_forms() {
    Rng rng(801);
    int count = 0;
    bool ok = true;
    for (int n = 6; n <= 16; n++)
        for (uint64_t tau = 1; 2 * tau <= (uint64_t)(n / 2 - 1); tau++) {
            size_t len = (size_t)(n / 2 - 1) * (n - n / 2);
            for (int rep = 0; rep < 5; rep++) {
                GenResult r = gen_matrix_lb(n, tau,
                                            random_bits(len, (size_t)rng.below(len + 1), rng));
                count++;
                if (r.lambda != brute_min_cut(r.g).lambda) ok = false;
            }
        }
    for (int n : {8, 12, 16})
        for (auto [en, ed] : {std::pair<uint64_t, uint64_t>{1, 2}, {1, 10}, {3, 7}})
            for (int rep = 0; rep < 5; rep++) {
                int left = 3 * n / 4, right = n / 4, base = n / 8;
                std::vector<std::vector<uint8_t>> pats;
                for (int l = 0; l < left; l++)
                    pats.push_back(random_bits((size_t)right,
                                               (size_t)base + (rng.below(2) ? 1 : -1), rng));
                GenResult r = gen_bipartite_lb(n, en, ed, pats);
                count++;
                if (r.lambda != brute_min_cut(r.g).lambda) ok = false;
            }
    for (int n : {8, 12, 16})
        for (uint64_t tau = 1; 8 * tau <= (uint64_t)(5 * n); tau++) {
            if ((tau * (uint64_t)n) % 10 != 0) continue;
            uint64_t quads = tau * (uint64_t)n / 10;
            if (quads > (uint64_t)(n / 4) * (n / 4)) continue;
            for (int rep = 0; rep < 5; rep++) {
                size_t cnt = (size_t)rng.below(quads + 1);
                if (2 * (uint64_t)cnt == quads) continue; // formula excludes the midpoint
                GenResult r = gen_quadruple_lb(n, tau, random_bits((size_t)quads, cnt, rng));
                count++;
                if (r.lambda != brute_min_cut(r.g).lambda) ok = false;
            }
        }
    char d[64];
    std::snprintf(d, sizeof d, "%d instances, zero tolerance", count);
    return report("generator closed forms match brute force", ok, d);
}

// ---------------------------------------------------------------- check 9
bool check_sparsifier() {
    Rng rng(901);
    int good = 0;
    bool bound_ok = true;
    for (int i = 0; i < 200; i++) {
        int n = (int)rng.range(3, 12);
        WeightedGraph g = gen_random(n, (int)rng.range(n - 1, n * (n - 1) / 2),
                                     40, rng);
        Rng sr(9900 + i);
        Sparsifier S = cut_sparsifier(g, 1, 3, sr);
        double cap = SPARSIFIER_C * n * std::log((double)n) * 9.0;
        if ((double)S.h.m() > cap) bound_ok = false;
        bool all = true;
        // every nontrivial shore, canonicalized to exclude vertex n-1
        for (uint64_t mask = 1; mask < (1ull << (n - 1)); mask++) {
            Shore x(n);
            for (int v = 0; v < n - 1; v++)
                if ((mask >> v) & 1) x.set(v);
            unsigned __int128 w = cut_weight(g, x);
            unsigned __int128 ws =
                (unsigned __int128)cut_weight(S.h, x) * S.scale_num;
            // (1 - 1/3) w <= ws/den <= (1 + 1/3) w, cross-multiplied
            if (3 * ws < 2 * w * S.scale_den || 3 * ws > 4 * w * S.scale_den)
                all = false;
        }
        if (all) good++;
    }
    char d[96];
    std::snprintf(d, sizeof d, "cuts preserved in %d/200 runs, edge bound always", good);
    return report("sparsifier preserves all cuts within 1/3", good >= 190 && bound_ok, d);
}

} // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    ok &= check_exactness();
    ok &= check_contraction_weight();
    ok &= check_tree_cover();
    ok &= check_generating_sets();
    ok &= check_hashed_atoms();
    ok &= check_evaluator();
    ok &= check_scaling();
    ok &= check_closed_forms();
    ok &= check_sparsifier();
    auto t1 = std::chrono::steady_clock::now();
    std::printf("%s in %.1fs\n", ok ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED",
                std::chrono::duration<double>(t1 - t0).count());
    return ok ? 0 : 1;
}
