#include "slotmarket/oracle.hpp"

#include <algorithm>

namespace slotmarket {
namespace oracle {

namespace {

constexpr std::int64_t kMaxFlights = 10;
constexpr std::int64_t kMaxCombinations = 10'000'000;
constexpr std::int64_t kMaxGridVolume = 20'000'000;
constexpr std::size_t kMaxStoredOptima = 200'000;

struct Enumerator {
  const ValidatedInstance& inst;
  std::vector<std::int64_t> remaining;  // capacity left per slot
  std::vector<std::int64_t> chosen;     // slot per flight, by index
  Money cost = 0;
  Money best = 0;
  bool found_any = false;
  bool truncated = false;
  std::vector<Schedule> minimizers;

  explicit Enumerator(const ValidatedInstance& vi) : inst(vi) {
    remaining.reserve(static_cast<std::size_t>(vi.num_slots()));
    for (std::int64_t s = 0; s < vi.num_slots(); ++s) {
      remaining.push_back(vi.slot(SlotId{s}).capacity);
    }
    chosen.assign(static_cast<std::size_t>(vi.num_flights()), -1);
  }

  void record() {
    Schedule sched;
    for (std::int64_t i = 0; i < inst.num_flights(); ++i) {
      sched.assignment[inst.flight(i).id] = SlotId{chosen[static_cast<std::size_t>(i)]};
    }
    minimizers.push_back(std::move(sched));
  }

  void dfs(std::int64_t i) {
    if (found_any && cost > best) return;
    if (i == inst.num_flights()) {
      if (!found_any || cost < best) {
        found_any = true;
        best = cost;
        minimizers.clear();
        truncated = false;
        record();
      } else if (cost == best) {
        if (minimizers.size() < kMaxStoredOptima) {
          record();
        } else {
          truncated = true;
        }
      }
      return;
    }
    const Flight& f = inst.flight(i);
    for (SlotId s : inst.window(i).slots) {
      auto& cap = remaining[static_cast<std::size_t>(s.index)];
      if (cap == 0) continue;
      const Money c = delay_cost(inst, f, s);
      cap -= 1;
      cost += c;
      chosen[static_cast<std::size_t>(i)] = s.index;
      dfs(i + 1);
      chosen[static_cast<std::size_t>(i)] = -1;
      cost -= c;
      cap += 1;
    }
  }
};

}  // namespace

BruteForceResult brute_force_optimum(const ValidatedInstance& inst) {
  if (inst.num_flights() > kMaxFlights) return TooLarge{};
  std::int64_t combos = 1;
  for (std::int64_t i = 0; i < inst.num_flights(); ++i) {
    combos *= static_cast<std::int64_t>(inst.window(i).slots.size());
    if (combos > kMaxCombinations) return TooLarge{};
  }

  Enumerator e(inst);
  e.dfs(0);
  if (!e.found_any) return Infeasible{};
  return Optimum{e.best, std::move(e.minimizers), e.truncated};
}

bool AdmissiblePrices::contains(const std::vector<Money>& prices) const {
  return std::find(vectors.begin(), vectors.end(), prices) != vectors.end();
}

AdmissiblePricesResult admissible_prices(const ValidatedInstance& inst, const Schedule& sched) {
  if (inst.num_flights() > kMaxFlights) return TooLarge{};

  // Chain-safe grid: displaced flights pass their delay costs down the line,
  // so a contested early slot can be worth the *sum* of the chain's costs,
  // not just one flight's. The +1 leaves the canonical prices strictly
  // interior, which makes boundary checks meaningful.
  const std::int64_t num_slots = inst.num_slots();
  Money grid = 1;
  for (std::int64_t i = 0; i < inst.num_flights(); ++i) {
    const Flight& f = inst.flight(i);
    std::int64_t worst = 0;
    for (SlotId s : inst.window(i).slots) {
      worst = std::max(worst, effective_delay(f.profile, raw_delay(inst, f, s)));
    }
    grid += f.alpha * worst;
  }

  double volume = 1.0;
  for (std::int64_t s = 0; s < num_slots; ++s) {
    (void)s;
    volume *= static_cast<double>(grid + 1);
    if (volume > static_cast<double>(kMaxGridVolume)) return TooLarge{};
  }

  std::vector<std::int64_t> occ(static_cast<std::size_t>(num_slots), 0);
  for (const auto& [id, slot] : sched.assignment) {
    (void)id;
    occ[static_cast<std::size_t>(slot.index)] += 1;
  }
  bool any_spare = false;
  std::vector<bool> spare(static_cast<std::size_t>(num_slots), false);
  for (std::int64_t s = 0; s < num_slots; ++s) {
    if (occ[static_cast<std::size_t>(s)] < inst.slot(SlotId{s}).capacity) {
      spare[static_cast<std::size_t>(s)] = true;
      any_spare = true;
    }
  }

  auto admissible = [&](const std::vector<Money>& p) {
    if (any_spare) {
      for (std::int64_t s = 0; s < num_slots; ++s) {
        if (spare[static_cast<std::size_t>(s)] && p[static_cast<std::size_t>(s)] != 0) {
          return false;
        }
      }
    } else if (num_slots > 0 && *std::min_element(p.begin(), p.end()) != 0) {
      return false;
    }
    for (std::int64_t i = 0; i < inst.num_flights(); ++i) {
      const Flight& f = inst.flight(i);
      const SlotId at = sched.assignment.at(f.id);
      const Money paid = p[static_cast<std::size_t>(at.index)] + delay_cost(inst, f, at);
      for (SlotId alt : inst.window(i).slots) {
        if (paid > p[static_cast<std::size_t>(alt.index)] + delay_cost(inst, f, alt)) {
          return false;
        }
      }
    }
    return true;
  };

  AdmissiblePrices out;
  out.grid_bound = grid;
  out.min_price.assign(static_cast<std::size_t>(num_slots), 0);
  out.max_price.assign(static_cast<std::size_t>(num_slots), 0);

  std::vector<Money> p(static_cast<std::size_t>(num_slots), 0);
  while (true) {
    if (admissible(p)) out.vectors.push_back(p);
    std::int64_t pos = num_slots - 1;
    while (pos >= 0 && p[static_cast<std::size_t>(pos)] == grid) {
      p[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    p[static_cast<std::size_t>(pos)] += 1;
  }

  if (!out.vectors.empty()) {
    out.min_price = out.vectors.front();
    out.max_price = out.vectors.front();
    for (const auto& v : out.vectors) {
      for (std::int64_t s = 0; s < num_slots; ++s) {
        out.min_price[static_cast<std::size_t>(s)] =
            std::min(out.min_price[static_cast<std::size_t>(s)], v[static_cast<std::size_t>(s)]);
        out.max_price[static_cast<std::size_t>(s)] =
            std::max(out.max_price[static_cast<std::size_t>(s)], v[static_cast<std::size_t>(s)]);
      }
    }
  }
  return out;
}

}  // namespace oracle
}  // namespace slotmarket
