#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "slotmarket/delay.hpp"

namespace slotmarket {

// 0-based position in the day's slot sequence.
struct SlotId {
  std::int64_t index = 0;
  friend auto operator<=>(const SlotId&, const SlotId&) = default;
};

struct Slot {
  SlotId id;
  std::int64_t capacity = 0;  // landings admitted; 0 models a weather closure
};

struct Flight {
  std::string id;
  std::string airline;
  SlotId scheduled_slot;
  Money alpha = 0;  // criticality: cents per effective delay unit
  DelayProfile profile;
};

// The set of slots a flight is permitted to land in. Semantically a set;
// stored as a strictly increasing sequence.
struct Window {
  std::string flight;
  std::vector<SlotId> slots;

  bool contains(SlotId s) const;
};

// The market's complete input: a day of slots and the flights competing for
// them. windows[i] belongs to flights[i].
struct Instance {
  std::vector<Slot> slots;
  std::vector<Flight> flights;
  std::vector<Window> windows;
  std::int64_t slot_minutes = 5;  // reporting only; the engine works in slot units

  std::int64_t num_slots() const { return static_cast<std::int64_t>(slots.size()); }
  std::int64_t num_flights() const { return static_cast<std::int64_t>(flights.size()); }
  std::int64_t total_capacity() const;
};

// Integral assignment of flights to slots.
struct Schedule {
  std::map<std::string, SlotId> assignment;  // flight id -> slot
};

struct ValidationError {
  enum class Code {
    EmptyWindow,
    DuplicateFlightId,
    CapacityShortfall,
    NonMonotoneProfile,
    BadSlotRef,
    NegativeAlpha,     // defensive; the parser rejects these before validation
    NegativeCapacity,  // defensive; the parser rejects these before validation
  };

  Code code;
  std::string flight;               // offending flight id, when applicable
  std::int64_t slot = -1;           // offending slot index, when applicable
  std::int64_t total_capacity = 0;  // CapacityShortfall payload
  std::int64_t num_flights = 0;     // CapacityShortfall payload

  std::string message() const;
};

// An instance that passed validate_instance. Immutable; safe to share across
// threads. Only validate_instance can construct one.
class ValidatedInstance {
 public:
  const Instance& get() const { return inst_; }
  std::int64_t num_slots() const { return inst_.num_slots(); }
  std::int64_t num_flights() const { return inst_.num_flights(); }
  const Slot& slot(SlotId s) const { return inst_.slots[static_cast<std::size_t>(s.index)]; }
  const Flight& flight(std::int64_t i) const { return inst_.flights[static_cast<std::size_t>(i)]; }
  const Window& window(std::int64_t i) const { return inst_.windows[static_cast<std::size_t>(i)]; }

 private:
  friend std::variant<ValidatedInstance, ValidationError> validate_instance(Instance raw);
  explicit ValidatedInstance(Instance inst) : inst_(std::move(inst)) {}
  Instance inst_;
};

using ValidationResult = std::variant<ValidatedInstance, ValidationError>;

// Checks every type invariant and the necessary capacity condition
// (total capacity >= number of flights), reporting the first violation found.
// Check order is fixed: duplicate ids, then per-flight structural checks in
// input order (slot refs, window non-empty, alpha, profile shape), then slot
// capacities, then the capacity total.
//
// Windows are canonicalized (sorted, deduplicated) as part of validation:
// the field is a set and its input order is representation, not data.
// Validation is idempotent.
ValidationResult validate_instance(Instance raw);

// Total dollar value of the delays under `sched`:
// sum over flights of alpha_i * effective delay at the assigned slot.
// Precondition: `sched` assigns every flight to a slot inside its window
// without exceeding capacities; violations are contract bugs and throw.
Money schedule_cost(const ValidatedInstance& inst, const Schedule& sched);

}  // namespace slotmarket
