#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "slotmarket/matching_graph.hpp"
#include "slotmarket/model.hpp"

namespace slotmarket {

// Node potentials of the underlying flow network, kept alongside the
// matching. Prices are extracted from the exchange graph (see equilibrium),
// so these serve as an independent cross-check of optimality: every residual
// edge of the final matching has non-negative reduced cost against them.
struct SolverPotentials {
  std::vector<Money> flight;
  std::vector<Money> slot;
  Money dummy = 0;
  Money sink = 0;
};

struct MatchingResult {
  Schedule schedule;
  Money flow_cost = 0;  // total matching weight: flight edges plus dummy edges
  SolverPotentials potentials;
  std::int64_t shortest_path_runs = 0;  // bounded by num_flights + 1
};

// Witness that no feasible schedule exists: a set of flights whose combined
// windows hold less capacity than the set's size.
struct InfeasibilityCertificate {
  std::vector<std::string> deficient_flights;  // in input order
  std::vector<SlotId> reachable_slots;         // union of the deficient flights' windows
  std::int64_t shortfall = 0;                  // |deficient_flights| - capacity(reachable_slots)
};

using SolveResult = std::variant<MatchingResult, InfeasibilityCertificate>;

// Minimum-weight perfect b-matching by successive shortest augmenting paths
// with node potentials.
//
// Flights are routed one at a time in input order: each stage runs one
// Dijkstra over the residual graph using reduced costs (non-negative by the
// potential invariant; the new flight's own edges enter as initial heap
// offsets, which Dijkstra tolerates). Among equal-cost paths the smaller slot
// index wins, then the earlier flight. After the last flight, the dummy's
// surplus demand saturates the remaining slot capacity in one batch — its
// edges all carry the same weight, so any split is optimal — followed by a
// potential adjustment that restores the reduced-cost invariant on the final
// residual graph. Total shortest-path runs: one per flight, plus one batch.
//
// If some flight cannot reach spare capacity, the search tree itself is the
// infeasibility witness: the flights it reached fill every reachable slot,
// so their combined windows are short by one.
//
// All arithmetic is exact (integer Money).
SolveResult solve(const BipartiteInstance& bi);

// Test hook: walks every residual edge of the solved matching and returns a
// description of the first edge whose reduced cost is negative w.r.t. the
// returned potentials, or an empty string if the invariant holds.
std::string check_potentials(const BipartiteInstance& bi, const MatchingResult& result);

}  // namespace slotmarket
