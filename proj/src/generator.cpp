#include "slotmarket/generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "slotmarket/rng.hpp"
#include "slotmarket/windows.hpp"

namespace slotmarket {

namespace {

const char* kAirlines[] = {"AA", "AS", "B6", "DL", "F9", "NK", "UA", "WN"};

// Integer capacity weights. Uniform is flat; peaked adds a morning and an
// evening bump (quadratic, exact integer arithmetic).
std::vector<std::int64_t> capacity_weights(const GenConfig& cfg) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(cfg.slots), 4);
  if (cfg.capacity_profile == GenConfig::CapacityProfile::Peaked) {
    auto bump = [&](std::int64_t mu, std::int64_t halfwidth, std::int64_t height) {
      const std::int64_t hw2 = std::max<std::int64_t>(1, halfwidth * halfwidth);
      for (std::int64_t s = 0; s < cfg.slots; ++s) {
        const std::int64_t d2 = (s - mu) * (s - mu);
        if (d2 < hw2) w[static_cast<std::size_t>(s)] += height * (hw2 - d2) / hw2;
      }
    };
    bump(cfg.slots * 3 / 10, std::max<std::int64_t>(1, cfg.slots / 8), 12);
    bump(cfg.slots * 7 / 10, std::max<std::int64_t>(1, cfg.slots / 10), 12);
  }
  return w;
}

// Largest-remainder apportionment of `total` units over the weights.
// Deterministic: remainder ties go to the smaller index.
std::vector<std::int64_t> apportion(const std::vector<std::int64_t>& weights,
                                    std::int64_t total) {
  const std::int64_t weight_sum = std::accumulate(weights.begin(), weights.end(),
                                                  static_cast<std::int64_t>(0));
  std::vector<std::int64_t> out(weights.size(), 0);
  if (weight_sum == 0 || total == 0) return out;
  std::int64_t assigned = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> remainders;  // (-remainder, index)
  remainders.reserve(weights.size());
  for (std::size_t s = 0; s < weights.size(); ++s) {
    const std::int64_t share = total * weights[s];
    out[s] = share / weight_sum;
    assigned += out[s];
    remainders.push_back({-(share % weight_sum), static_cast<std::int64_t>(s)});
  }
  std::sort(remainders.begin(), remainders.end());
  for (std::int64_t k = 0; k < total - assigned; ++k) {
    out[static_cast<std::size_t>(remainders[static_cast<std::size_t>(k)].second)] += 1;
  }
  return out;
}

}  // namespace

Instance generate_instance(const GenConfig& cfg) {
  if (cfg.flights < 0 || cfg.slots < 0) {
    throw std::invalid_argument("generator: flights and slots must be non-negative");
  }
  if (cfg.slots == 0 && cfg.flights > 0) {
    throw std::invalid_argument("generator: flights need at least one slot");
  }
  if (cfg.window_base < 1 || cfg.pre_arrival < 0 ||
      cfg.pre_arrival > cfg.window_base - 1) {
    throw std::invalid_argument("generator: need window_base >= 1 and pre_arrival < window_base");
  }
  if (cfg.alpha_lo < 0 || cfg.alpha_hi < cfg.alpha_lo) {
    throw std::invalid_argument("generator: bad alpha range");
  }
  if (cfg.pct_piecewise < 0 || cfg.pct_piecewise > 100) {
    throw std::invalid_argument("generator: pct_piecewise must be in [0, 100]");
  }

  SplitMix64 rng(cfg.seed);
  Instance inst;
  inst.slot_minutes = cfg.slot_minutes;

  // ~15% capacity headroom over demand.
  const std::int64_t total_capacity =
      cfg.flights == 0 ? cfg.slots : cfg.flights + std::max<std::int64_t>(1, cfg.flights * 3 / 20);
  const std::vector<std::int64_t> caps = apportion(capacity_weights(cfg), total_capacity);
  for (std::int64_t s = 0; s < cfg.slots; ++s) {
    inst.slots.push_back(Slot{SlotId{s}, caps[static_cast<std::size_t>(s)]});
  }

  // One capacity unit is reserved per flight, spread across the day in
  // proportion to capacity; the scheduled time sits a small lag before the
  // reserved unit so the flight's window always covers it. That keeps every
  // generated instance feasible without dictating the cleared schedule.
  std::vector<std::int64_t> unit_slot;
  unit_slot.reserve(static_cast<std::size_t>(total_capacity));
  for (std::int64_t s = 0; s < cfg.slots; ++s) {
    for (std::int64_t k = 0; k < caps[static_cast<std::size_t>(s)]; ++k) unit_slot.push_back(s);
  }

  const int id_width = cfg.flights >= 10000 ? 5 : 4;
  for (std::int64_t i = 0; i < cfg.flights; ++i) {
    const std::int64_t unit = unit_slot[static_cast<std::size_t>(i * total_capacity / cfg.flights)];
    const std::int64_t max_lag =
        std::min(cfg.window_base - 1 - cfg.pre_arrival, unit);
    const std::int64_t lag = rng.uniform(0, max_lag);

    Flight f;
    std::string seq = std::to_string(i);
    seq.insert(0, static_cast<std::size_t>(std::max<int>(0, id_width - static_cast<int>(seq.size()))), '0');
    f.id = "FL" + seq;
    f.airline = kAirlines[rng.uniform(0, 7)];
    f.scheduled_slot = SlotId{unit - lag};
    f.alpha = rng.uniform(cfg.alpha_lo, cfg.alpha_hi);
    if (rng.chance_pct(cfg.pct_piecewise)) {
      const std::int64_t knee = rng.uniform(2, 6);
      const std::int64_t knee2 = knee + rng.uniform(1, 3);
      const std::int64_t steep = rng.uniform(3, 10);
      f.profile = DelayProfile::piecewise(
          {{0, 0}, {knee, knee}, {knee2, knee + steep * (knee2 - knee)}});
    }

    Window w{f.id, policy_window(WindowPolicy{cfg.window_base, cfg.pre_arrival},
                                 f.scheduled_slot, cfg.slots)};
    inst.flights.push_back(std::move(f));
    inst.windows.push_back(std::move(w));
  }

  return inst;
}

}  // namespace slotmarket
