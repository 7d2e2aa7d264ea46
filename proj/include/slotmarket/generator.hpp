#pragma once

#include <cstdint>

#include "slotmarket/delay.hpp"
#include "slotmarket/model.hpp"

namespace slotmarket {

// Seeded scenario generator. Same config, same bytes.
struct GenConfig {
  std::uint64_t seed = 1;
  std::int64_t flights = 100;
  std::int64_t slots = 288;  // 5-minute grid over a day
  enum class CapacityProfile { Uniform, Peaked } capacity_profile = CapacityProfile::Uniform;
  Money alpha_lo = 0;
  Money alpha_hi = 500;
  int pct_piecewise = 25;
  std::int64_t window_base = 12;
  std::int64_t pre_arrival = 0;
  std::int64_t slot_minutes = 5;
};

// Generates a feasible instance: total capacity exceeds the flight count,
// and every flight's window covers a reserved capacity unit, so a zero-
// conflict assignment exists even if the schedule the market computes is a
// different (cheaper) one. Windows are written explicitly into the instance.
Instance generate_instance(const GenConfig& config);

}  // namespace slotmarket
