#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "slotmarket/model.hpp"
#include "slotmarket/solver.hpp"

namespace slotmarket {

// Per-slot landing prices and per-flight total costs (landing price plus
// delay cost). Together with a schedule these form the market's dual
// solution: every flight pays the minimum total cost available in its window,
// and slots with spare capacity are free.
struct PriceSystem {
  std::vector<Money> prices;                 // per slot, >= 0
  std::map<std::string, Money> total_costs;  // flight id -> t_i, >= 0
};

// A failed equilibrium condition, with both sides of the inequality that
// broke. `condition` is one of: "min_cost" (a flight could pay less in
// another slot, or its recorded total is not what it pays), "free_slack"
// (a slot with spare capacity has a nonzero price), "anchor" (every slot is
// full but the minimum price is not zero), "nonnegative", "feasibility"
// (the schedule itself is broken: missing/out-of-window/over capacity).
struct Violation {
  std::string condition;
  std::string flight;     // when applicable
  std::int64_t slot = -1; // when applicable
  Money lhs = 0;
  Money rhs = 0;
};

struct EquilibriumReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// Prices from the solved matching, via the exchange graph: one node per
// slot; for every flight assigned to s and every alternative s' in its
// window, an arc s -> s' weighted by the cost difference of the move. The
// optimal matching admits no negative cycle there, so shortest distances
// exist; with every slot seeded at distance zero, negating the distances
// yields non-negative prices that are zero on every slot with spare
// capacity. (When no slot has spare capacity the dual has a free constant;
// the seeding pins the representative with minimum price zero.) Total costs
// follow as each flight's cheapest window option.
//
// The result is re-verified before returning; a failure means a solver or
// extraction bug and throws std::logic_error.
PriceSystem extract_prices(const ValidatedInstance& inst, const MatchingResult& result);

// Exact check of the equilibrium conditions: (1) every flight's recorded
// total cost is what it pays at its assigned slot and is minimal over its
// window; (2) every slot left under capacity by flights has price zero —
// or, when no slot is under capacity, the minimum price is zero; (3) prices
// and totals are non-negative. Works on any inputs; all findings are
// reported with both sides of the failed comparison.
EquilibriumReport verify(const ValidatedInstance& inst, const Schedule& sched,
                         const PriceSystem& ps);

// Sum of total costs, minus capacity-weighted price revenue, minus the
// schedule's delay cost. Exactly zero when schedule and prices are a true
// optimal pair; negative when the schedule is feasible but suboptimal
// against honest prices.
Money strong_duality_check(const ValidatedInstance& inst, const Schedule& sched,
                           const PriceSystem& ps);

// The per-unit charge bound: moving a flight from its assigned slot to any
// window slot with k more units of effective delay can save it at most
// alpha_i * k in landing fees. Follows from the minimum-cost condition;
// checked independently.
EquilibriumReport alpha_bound_check(const ValidatedInstance& inst, const Schedule& sched,
                                    const PriceSystem& ps);

}  // namespace slotmarket
