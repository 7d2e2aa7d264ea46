#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace slotmarket {

// All money is in integer minor units (cents). Every cost computation in the
// engine is exact integer arithmetic; duality checks compare for equality,
// not within a tolerance.
using Money = std::int64_t;

struct SlotId;
struct Flight;
class ValidatedInstance;

// Delay profile: maps a raw delay (slots past scheduled arrival) to effective
// delay units. The default is linear (identity). A piecewise profile lets an
// airline express shapes like "tolerable for the first half hour, then very
// expensive": gentle breakpoints early, steep afterwards.
class DelayProfile {
 public:
  using Breakpoint = std::pair<std::int64_t, std::int64_t>;  // (delay_slots, value)

  DelayProfile() = default;  // linear

  static DelayProfile linear() { return DelayProfile(); }
  static DelayProfile piecewise(std::vector<Breakpoint> breakpoints) {
    DelayProfile p;
    p.breakpoints_ = std::move(breakpoints);
    return p;
  }

  bool is_linear() const { return breakpoints_.empty(); }
  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }

  // Shape requirements: breakpoints start at (0,0), delays strictly increase,
  // values never decrease. Linear profiles are always well formed.
  bool well_formed() const;

  bool operator==(const DelayProfile&) const = default;

 private:
  std::vector<Breakpoint> breakpoints_;  // empty == linear
};

// Effective delay units for a raw delay of `raw` slots.
//
// Linear profiles return `raw`. Piecewise profiles interpolate between the
// surrounding breakpoints; the interpolated value is rounded toward the lower
// breakpoint so it stays integer and monotone. Past the last breakpoint the
// final segment's slope extrapolates (slope 0 for a single-breakpoint
// profile).
std::int64_t effective_delay(const DelayProfile& profile, std::int64_t raw);

// Slots past the flight's scheduled arrival; slots at or before it count as
// zero delay (early landing is not a rebate).
std::int64_t raw_delay(const ValidatedInstance& inst, const Flight& flight, SlotId s);

// alpha * effective_delay, exact.
Money delay_cost(const ValidatedInstance& inst, const Flight& flight, SlotId s);

}  // namespace slotmarket
