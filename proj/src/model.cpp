#include "slotmarket/model.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace slotmarket {

bool Window::contains(SlotId s) const {
  return std::binary_search(slots.begin(), slots.end(), s);
}

std::int64_t Instance::total_capacity() const {
  std::int64_t total = 0;
  for (const Slot& s : slots) total += s.capacity;
  return total;
}

std::string ValidationError::message() const {
  switch (code) {
    case Code::EmptyWindow:
      return "flight '" + flight + "' has an empty landing window";
    case Code::DuplicateFlightId:
      return "duplicate flight id '" + flight + "'";
    case Code::CapacityShortfall:
      return "total slot capacity " + std::to_string(total_capacity) +
             " is less than the number of flights " + std::to_string(num_flights);
    case Code::NonMonotoneProfile:
      return "flight '" + flight +
             "' has a malformed delay profile (must start at (0,0), "
             "strictly increase in delay and never decrease in value)";
    case Code::BadSlotRef:
      return "flight '" + flight + "' references slot " + std::to_string(slot) +
             " which does not exist";
    case Code::NegativeAlpha:
      return "flight '" + flight + "' has negative alpha";
    case Code::NegativeCapacity:
      return "slot " + std::to_string(slot) + " has negative capacity";
  }
  return "unknown validation error";
}

ValidationResult validate_instance(Instance raw) {
  // Structural pairing of flights and windows is a construction contract,
  // not operator input; the parser and the window policies always produce
  // matched sequences.
  if (raw.windows.size() != raw.flights.size()) {
    throw std::logic_error("instance has " + std::to_string(raw.flights.size()) +
                           " flights but " + std::to_string(raw.windows.size()) + " windows");
  }
  for (std::size_t k = 0; k < raw.slots.size(); ++k) {
    if (raw.slots[k].id.index != static_cast<std::int64_t>(k)) {
      throw std::logic_error("slot sequence is not contiguous at position " + std::to_string(k));
    }
  }
  for (std::size_t i = 0; i < raw.flights.size(); ++i) {
    if (raw.windows[i].flight != raw.flights[i].id) {
      throw std::logic_error("window " + std::to_string(i) + " is paired with flight '" +
                             raw.windows[i].flight + "' but flights[" + std::to_string(i) +
                             "] is '" + raw.flights[i].id + "'");
    }
  }

  const std::int64_t num_slots = raw.num_slots();

  std::unordered_set<std::string> seen_ids;
  seen_ids.reserve(raw.flights.size());
  for (const Flight& f : raw.flights) {
    if (!seen_ids.insert(f.id).second) {
      return ValidationError{ValidationError::Code::DuplicateFlightId, f.id};
    }
  }

  for (std::size_t i = 0; i < raw.flights.size(); ++i) {
    const Flight& f = raw.flights[i];
    Window& w = raw.windows[i];

    if (f.scheduled_slot.index < 0 || f.scheduled_slot.index >= num_slots) {
      return ValidationError{ValidationError::Code::BadSlotRef, f.id, f.scheduled_slot.index};
    }
    for (SlotId s : w.slots) {
      if (s.index < 0 || s.index >= num_slots) {
        return ValidationError{ValidationError::Code::BadSlotRef, f.id, s.index};
      }
    }
    // Canonicalize the window's set representation.
    std::sort(w.slots.begin(), w.slots.end());
    w.slots.erase(std::unique(w.slots.begin(), w.slots.end()), w.slots.end());
    if (w.slots.empty()) {
      return ValidationError{ValidationError::Code::EmptyWindow, f.id};
    }
    if (f.alpha < 0) {
      return ValidationError{ValidationError::Code::NegativeAlpha, f.id};
    }
    if (!f.profile.well_formed()) {
      return ValidationError{ValidationError::Code::NonMonotoneProfile, f.id};
    }
  }

  for (const Slot& s : raw.slots) {
    if (s.capacity < 0) {
      ValidationError e{ValidationError::Code::NegativeCapacity, ""};
      e.slot = s.id.index;
      return e;
    }
  }

  const std::int64_t total = raw.total_capacity();
  if (total < raw.num_flights()) {
    ValidationError e{ValidationError::Code::CapacityShortfall, ""};
    e.total_capacity = total;
    e.num_flights = raw.num_flights();
    return e;
  }

  return ValidatedInstance(std::move(raw));
}

Money schedule_cost(const ValidatedInstance& inst, const Schedule& sched) {
  std::vector<std::int64_t> occupancy(static_cast<std::size_t>(inst.num_slots()), 0);
  Money total = 0;
  for (std::int64_t i = 0; i < inst.num_flights(); ++i) {
    const Flight& f = inst.flight(i);
    auto it = sched.assignment.find(f.id);
    if (it == sched.assignment.end()) {
      throw std::logic_error("schedule does not assign flight '" + f.id + "'");
    }
    const SlotId s = it->second;
    if (!inst.window(i).contains(s)) {
      throw std::logic_error("schedule assigns flight '" + f.id + "' outside its window");
    }
    occupancy[static_cast<std::size_t>(s.index)] += 1;
    total += delay_cost(inst, f, s);
  }
  for (std::int64_t s = 0; s < inst.num_slots(); ++s) {
    if (occupancy[static_cast<std::size_t>(s)] > inst.slot(SlotId{s}).capacity) {
      throw std::logic_error("schedule exceeds capacity of slot " + std::to_string(s));
    }
  }
  return total;
}

}  // namespace slotmarket
