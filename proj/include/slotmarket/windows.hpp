#pragma once

#include <cstdint>
#include <vector>

#include "slotmarket/model.hpp"

namespace slotmarket {

// Window construction policy: a window of base_length slots starting
// pre_arrival slots before the scheduled arrival, clipped to the day.
struct WindowPolicy {
  std::int64_t base_length = 1;  // >= 1
  std::int64_t pre_arrival = 0;
};

// The window the policy grants a flight scheduled at `scheduled`, clipped to
// [0, num_slots). Can come out empty for out-of-day scheduled slots; the
// downstream validation catches that.
std::vector<SlotId> policy_window(const WindowPolicy& policy, SlotId scheduled,
                                  std::int64_t num_slots);

// Rebuilds every flight's window from the policy.
Instance default_windows(Instance inst, const WindowPolicy& policy);

// Shifts every window later by delay_slots, dropping slots pushed past the
// end of the day. Scheduled arrival times are untouched, so delay is still
// measured against the original schedule. Sliding every window equally keeps
// the flights' relative window order intact.
Instance slide_windows(Instance inst, std::int64_t delay_slots);

// Extends every window by `extra` additional slots after its current last
// slot, clipped to the day. Used when reduced capacities leave the market
// short; stretching widens the choice set and never removes a slot.
// extra must be >= 1 (throws std::invalid_argument otherwise).
Instance stretch_windows(Instance inst, std::int64_t extra);

}  // namespace slotmarket
