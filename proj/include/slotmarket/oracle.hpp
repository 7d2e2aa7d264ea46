#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "slotmarket/model.hpp"

namespace slotmarket {
namespace oracle {

// Independent ground truth for small instances. Deliberately shares only the
// domain types and delay arithmetic with the production path — no graphs, no
// potentials — so a bug in the matching engine cannot validate itself.

struct Optimum {
  Money best_cost = 0;
  std::vector<Schedule> all_optimal;  // every minimizer, in enumeration order
  bool all_optimal_truncated = false;  // list capped (cost still exact)
};

struct Infeasible {};

// The size guard tripped; the instance is too large to enumerate.
struct TooLarge {};

using BruteForceResult = std::variant<Optimum, Infeasible, TooLarge>;

// Depth-first enumeration of every capacity-respecting assignment of flights
// to window slots. Guarded: at most 10 flights and at most 1e7 window
// combinations.
BruteForceResult brute_force_optimum(const ValidatedInstance& inst);

// Every admissible integer price vector for a given optimal schedule: grid
// search over [0, G] per slot, G = max over flights of alpha * the largest
// effective delay in the flight's window, keeping the vectors that satisfy
// the equilibrium conditions (minimum total cost at the assigned slot, zero
// price on slots with spare capacity — or minimum price zero when no slot
// has spare — and non-negativity).
struct AdmissiblePrices {
  std::vector<std::vector<Money>> vectors;  // lexicographic order
  std::vector<Money> min_price;             // per-coordinate envelope
  std::vector<Money> max_price;
  Money grid_bound = 0;

  bool contains(const std::vector<Money>& prices) const;
};

using AdmissiblePricesResult = std::variant<AdmissiblePrices, TooLarge>;

// Guarded like brute_force_optimum, plus a bound on the grid volume
// ((G+1)^num_slots <= 2e7).
AdmissiblePricesResult admissible_prices(const ValidatedInstance& inst, const Schedule& sched);

}  // namespace oracle
}  // namespace slotmarket
