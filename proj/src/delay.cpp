#include "slotmarket/delay.hpp"

#include <algorithm>

#include "slotmarket/model.hpp"

namespace slotmarket {

bool DelayProfile::well_formed() const {
  if (is_linear()) return true;
  if (breakpoints_.front() != Breakpoint{0, 0}) return false;
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (breakpoints_[i].first <= breakpoints_[i - 1].first) return false;
    if (breakpoints_[i].second < breakpoints_[i - 1].second) return false;
  }
  return true;
}

std::int64_t effective_delay(const DelayProfile& profile, std::int64_t raw) {
  if (raw < 0) raw = 0;
  if (profile.is_linear()) return raw;

  const auto& bp = profile.breakpoints();
  // Segment slope between two breakpoints, applied with floor division.
  // Values never decrease, so flooring rounds toward the lower breakpoint
  // and keeps the result monotone in `raw`.
  auto segment = [](const DelayProfile::Breakpoint& a, const DelayProfile::Breakpoint& b,
                    std::int64_t at) {
    const std::int64_t run = b.first - a.first;
    const std::int64_t rise = b.second - a.second;
    return a.second + (at - a.first) * rise / run;
  };

  // First breakpoint strictly past `raw`, if any.
  auto it = std::upper_bound(bp.begin(), bp.end(), raw,
                             [](std::int64_t r, const DelayProfile::Breakpoint& b) {
                               return r < b.first;
                             });
  if (it == bp.end()) {
    // Past the last breakpoint: extrapolate with the final segment's slope.
    if (bp.size() == 1) return bp.back().second;
    return segment(bp[bp.size() - 2], bp.back(), raw);
  }
  if (it == bp.begin()) return bp.front().second;  // raw == 0
  return segment(*(it - 1), *it, raw);
}

std::int64_t raw_delay(const ValidatedInstance& inst, const Flight& flight, SlotId s) {
  (void)inst;
  return std::max<std::int64_t>(0, s.index - flight.scheduled_slot.index);
}

Money delay_cost(const ValidatedInstance& inst, const Flight& flight, SlotId s) {
  return flight.alpha * effective_delay(flight.profile, raw_delay(inst, flight, s));
}

}  // namespace slotmarket
