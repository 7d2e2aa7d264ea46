#include "slotmarket/equilibrium.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace slotmarket {

namespace {

struct ExchangeArc {
  std::int64_t to;
  Money length;
};

}  // namespace

PriceSystem extract_prices(const ValidatedInstance& inst, const MatchingResult& result) {
  const std::int64_t num_slots = inst.num_slots();
  const Schedule& sched = result.schedule;

  std::vector<std::vector<ExchangeArc>> arcs(static_cast<std::size_t>(num_slots));
  for (std::int64_t i = 0; i < inst.num_flights(); ++i) {
    const Flight& f = inst.flight(i);
    auto it = sched.assignment.find(f.id);
    if (it == sched.assignment.end()) {
      throw std::logic_error("extract_prices: schedule does not cover flight '" + f.id + "'");
    }
    const SlotId at = it->second;
    const Money cost_here = delay_cost(inst, f, at);
    for (SlotId alt : inst.window(i).slots) {
      if (alt == at) continue;
      arcs[static_cast<std::size_t>(at.index)].push_back(
          {alt.index, delay_cost(inst, f, alt) - cost_here});
    }
  }

  // Bellman-Ford from all slots at distance zero. Arc lengths can be
  // negative (a move that saves money for the moved flight), but an optimal
  // matching admits no negative cycle; finding one is an internal error.
  std::vector<Money> delta(static_cast<std::size_t>(num_slots), 0);
  bool changed = num_slots > 0;
  for (std::int64_t round = 0; changed && round < num_slots; ++round) {
    changed = false;
    for (std::int64_t s = 0; s < num_slots; ++s) {
      const Money base = delta[static_cast<std::size_t>(s)];
      for (const ExchangeArc& a : arcs[static_cast<std::size_t>(s)]) {
        if (base + a.length < delta[static_cast<std::size_t>(a.to)]) {
          delta[static_cast<std::size_t>(a.to)] = base + a.length;
          changed = true;
        }
      }
    }
  }
  if (changed) {
    throw std::logic_error(
        "extract_prices: exchange graph has a negative cycle; the matching is not optimal");
  }

  PriceSystem ps;
  ps.prices.resize(static_cast<std::size_t>(num_slots), 0);
  // delta <= 0 everywhere (each slot is its own zero seed), and every slot
  // with spare capacity stays at zero, so -delta is already the
  // minimum-price-zero representative.
  for (std::int64_t s = 0; s < num_slots; ++s) {
    ps.prices[static_cast<std::size_t>(s)] = -delta[static_cast<std::size_t>(s)];
  }

  for (std::int64_t i = 0; i < inst.num_flights(); ++i) {
    const Flight& f = inst.flight(i);
    Money best = std::numeric_limits<Money>::max();
    for (SlotId s : inst.window(i).slots) {
      best = std::min(best, ps.prices[static_cast<std::size_t>(s.index)] + delay_cost(inst, f, s));
    }
    ps.total_costs[f.id] = best;
  }

  EquilibriumReport report = verify(inst, sched, ps);
  if (!report.ok) {
    throw std::logic_error("extract_prices: produced prices that fail verification: " +
                           report.violations.front().condition);
  }
  return ps;
}

EquilibriumReport verify(const ValidatedInstance& inst, const Schedule& sched,
                         const PriceSystem& ps) {
  EquilibriumReport report;
  auto flag = [&report](Violation v) {
    report.ok = false;
    report.violations.push_back(std::move(v));
  };

  const std::int64_t num_slots = inst.num_slots();
  if (static_cast<std::int64_t>(ps.prices.size()) != num_slots) {
    flag({"feasibility", "", -1, static_cast<Money>(ps.prices.size()),
          static_cast<Money>(num_slots)});
    return report;
  }

  for (std::int64_t s = 0; s < num_slots; ++s) {
    if (ps.prices[static_cast<std::size_t>(s)] < 0) {
      flag({"nonnegative", "", s, ps.prices[static_cast<std::size_t>(s)], 0});
    }
  }

  std::vector<std::int64_t> occ(static_cast<std::size_t>(num_slots), 0);
  for (std::int64_t i = 0; i < inst.num_flights(); ++i) {
    const Flight& f = inst.flight(i);
    auto t_it = ps.total_costs.find(f.id);
    const Money* t = t_it == ps.total_costs.end() ? nullptr : &t_it->second;
    if (t == nullptr) {
      flag({"feasibility", f.id, -1, 0, 0});
      continue;
    }
    if (*t < 0) flag({"nonnegative", f.id, -1, *t, 0});

    auto a_it = sched.assignment.find(f.id);
    if (a_it == sched.assignment.end()) {
      flag({"feasibility", f.id, -1, 0, 0});
      continue;
    }
    const SlotId at = a_it->second;
    if (at.index < 0 || at.index >= num_slots || !inst.window(i).contains(at)) {
      flag({"feasibility", f.id, at.index, 0, 0});
      continue;
    }
    occ[static_cast<std::size_t>(at.index)] += 1;

    const Money paid = ps.prices[static_cast<std::size_t>(at.index)] + delay_cost(inst, f, at);
    if (*t != paid) {
      flag({"min_cost", f.id, at.index, *t, paid});
    }
    for (SlotId alt : inst.window(i).slots) {
      const Money there = ps.prices[static_cast<std::size_t>(alt.index)] + delay_cost(inst, f, alt);
      if (*t > there) {
        flag({"min_cost", f.id, alt.index, *t, there});
      }
    }
  }

  bool any_under = false;
  for (std::int64_t s = 0; s < num_slots; ++s) {
    const std::int64_t cap = inst.slot(SlotId{s}).capacity;
    if (occ[static_cast<std::size_t>(s)] > cap) {
      flag({"feasibility", "", s, occ[static_cast<std::size_t>(s)], cap});
    }
    if (occ[static_cast<std::size_t>(s)] < cap) any_under = true;
  }
  if (any_under) {
    for (std::int64_t s = 0; s < num_slots; ++s) {
      if (occ[static_cast<std::size_t>(s)] < inst.slot(SlotId{s}).capacity &&
          ps.prices[static_cast<std::size_t>(s)] != 0) {
        flag({"free_slack", "", s, ps.prices[static_cast<std::size_t>(s)], 0});
      }
    }
  } else if (num_slots > 0) {
    const Money min_price = *std::min_element(ps.prices.begin(), ps.prices.end());
    if (min_price != 0) {
      flag({"anchor", "", -1, min_price, 0});
    }
  }

  return report;
}

Money strong_duality_check(const ValidatedInstance& inst, const Schedule& sched,
                           const PriceSystem& ps) {
  Money dual = 0;
  for (const auto& [id, t] : ps.total_costs) {
    (void)id;
    dual += t;
  }
  for (std::int64_t s = 0; s < inst.num_slots(); ++s) {
    dual -= inst.slot(SlotId{s}).capacity * ps.prices[static_cast<std::size_t>(s)];
  }
  return dual - schedule_cost(inst, sched);
}

EquilibriumReport alpha_bound_check(const ValidatedInstance& inst, const Schedule& sched,
                                    const PriceSystem& ps) {
  EquilibriumReport report;
  for (std::int64_t i = 0; i < inst.num_flights(); ++i) {
    const Flight& f = inst.flight(i);
    auto it = sched.assignment.find(f.id);
    if (it == sched.assignment.end()) continue;
    const SlotId at = it->second;
    const std::int64_t here = effective_delay(f.profile, raw_delay(inst, f, at));
    const Money p_here = ps.prices[static_cast<std::size_t>(at.index)];
    for (SlotId alt : inst.window(i).slots) {
      const std::int64_t there = effective_delay(f.profile, raw_delay(inst, f, alt));
      if (there <= here) continue;
      const Money saved = p_here - ps.prices[static_cast<std::size_t>(alt.index)];
      const Money bound = f.alpha * (there - here);
      if (saved > bound) {
        report.ok = false;
        report.violations.push_back({"alpha_bound", f.id, alt.index, saved, bound});
      }
    }
  }
  return report;
}

}  // namespace slotmarket
