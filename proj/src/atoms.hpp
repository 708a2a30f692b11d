#pragma once

#include <cstdint>
#include <vector>

#include "euler.hpp"
#include "graph.hpp"
#include "query.hpp"
#include "rng.hpp"

namespace qmincut {

// tree edges (as child vertices) whose single-edge cut is <= thr; full scan
std::vector<int> one_respecting_set(const CutEvaluator& ev, uint64_t thr);

// Spanning forest of the implicit graph on tree edges where {e,e'} is an
// edge iff the pair cut is <= thr.  Boruvka rounds; each component's
// outgoing-edge search is a charged randomized search over candidate pairs.
std::vector<TwoRespectId> spanning_forest_L(const CutEvaluator& ev, uint64_t thr,
                                            QueryLedger& led, Rng& rng);

// generating set Q for the atoms of all 2-respecting cuts of weight <= thr:
// the 1-respecting set plus a spanning forest of the pair graph; |Q| <= 2n-3
std::vector<TwoRespectId> generating_set_for_tree(const WeightedGraph& g,
                                                  const RootedTree& t,
                                                  uint64_t thr, QueryLedger& led,
                                                  Rng& rng);

ShoreFamily shores_of_ids(const RootedTree& t, const std::vector<TwoRespectId>& q);

// atoms of shore(q) via random subtree-add hashing mod n^3; succeeds (equals
// the exact atoms) with probability >= 1 - 1/n
Partition atoms_by_hashing(const RootedTree& t, const std::vector<TwoRespectId>& q,
                           Rng& rng);

// Atoms of every cut of h with weight <= thr, with probability >= 1-delta.
// Requires thr <= (1+1/16)*lambda(h); pass lambda(h) in known_lambda if
// already computed, otherwise it is recomputed internally.
Partition learn_cut_atoms(const WeightedGraph& h, uint64_t thr, double delta,
                          Rng rng, QueryLedger& led, int64_t known_lambda = -1);

} // namespace qmincut
