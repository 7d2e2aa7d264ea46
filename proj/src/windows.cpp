#include "slotmarket/windows.hpp"

#include <algorithm>
#include <stdexcept>

namespace slotmarket {

std::vector<SlotId> policy_window(const WindowPolicy& policy, SlotId scheduled,
                                  std::int64_t num_slots) {
  // The start clips at the day boundary and the window keeps its full length
  // from there, so a red-eye scheduled at slot 0 is not shortchanged for
  // having nowhere earlier to land.
  const std::int64_t start = std::max<std::int64_t>(0, scheduled.index - policy.pre_arrival);
  const std::int64_t end = std::min(num_slots - 1, start + policy.base_length - 1);
  std::vector<SlotId> out;
  for (std::int64_t s = start; s <= end; ++s) out.push_back(SlotId{s});
  return out;
}

Instance default_windows(Instance inst, const WindowPolicy& policy) {
  const std::int64_t num_slots = inst.num_slots();
  inst.windows.clear();
  inst.windows.reserve(inst.flights.size());
  for (const Flight& f : inst.flights) {
    inst.windows.push_back(Window{f.id, policy_window(policy, f.scheduled_slot, num_slots)});
  }
  return inst;
}

Instance slide_windows(Instance inst, std::int64_t delay_slots) {
  if (delay_slots == 0) return inst;
  const std::int64_t num_slots = inst.num_slots();
  for (Window& w : inst.windows) {
    std::vector<SlotId> shifted;
    shifted.reserve(w.slots.size());
    for (SlotId s : w.slots) {
      const std::int64_t moved = s.index + delay_slots;
      if (moved < num_slots) shifted.push_back(SlotId{moved});
    }
    w.slots = std::move(shifted);
  }
  return inst;
}

Instance stretch_windows(Instance inst, std::int64_t extra) {
  if (extra < 1) {
    throw std::invalid_argument("stretch_windows requires extra >= 1");
  }
  const std::int64_t num_slots = inst.num_slots();
  for (Window& w : inst.windows) {
    if (w.slots.empty()) continue;
    const std::int64_t last = w.slots.back().index;
    for (std::int64_t s = last + 1; s <= std::min(last + extra, num_slots - 1); ++s) {
      w.slots.push_back(SlotId{s});
    }
  }
  return inst;
}

}  // namespace slotmarket
