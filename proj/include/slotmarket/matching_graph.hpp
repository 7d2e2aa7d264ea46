#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slotmarket/model.hpp"

namespace slotmarket {

// The market as a minimum-weight perfect b-matching instance.
//
// Left side: one node per flight (demand 1, in input order) plus a dummy node
// whose demand is the surplus capacity, total_capacity - num_flights, so the
// two sides balance. Right side: one node per slot (demand c(s)).
//
// A flight has an edge to each slot in its window, weighted by its delay cost
// there. The dummy has an edge to every slot with capacity c(s). Dummy edges
// carry weight 0 by default: the dummy's total demand is fixed, so every
// perfect matching pays the same dummy total and the constant cannot change
// which schedule wins; at 0, the matching weight equals the schedule cost
// exactly. A nonzero constant is accepted to make that equivalence testable.
class BipartiteInstance {
 public:
  struct FlightEdge {
    std::int64_t slot;
    Money weight;
  };

  std::int64_t num_flights() const { return static_cast<std::int64_t>(flight_ids_.size()); }
  std::int64_t num_slots() const { return static_cast<std::int64_t>(slot_capacity_.size()); }
  std::int64_t dummy_demand() const { return total_capacity_ - num_flights(); }
  std::int64_t total_capacity() const { return total_capacity_; }
  Money dummy_edge_weight() const { return dummy_edge_weight_; }

  const std::string& flight_id(std::int64_t i) const {
    return flight_ids_[static_cast<std::size_t>(i)];
  }
  std::int64_t slot_capacity(std::int64_t s) const {
    return slot_capacity_[static_cast<std::size_t>(s)];
  }
  // Ascending by slot index.
  const std::vector<FlightEdge>& edges(std::int64_t flight) const {
    return flight_edges_[static_cast<std::size_t>(flight)];
  }

  // Flight edges plus the dummy's edge to every slot.
  std::int64_t num_edges() const;

 private:
  friend BipartiteInstance build(const ValidatedInstance& inst, Money dummy_edge_weight);

  std::vector<std::string> flight_ids_;
  std::vector<std::int64_t> slot_capacity_;
  std::vector<std::vector<FlightEdge>> flight_edges_;
  std::int64_t total_capacity_ = 0;
  Money dummy_edge_weight_ = 0;
};

BipartiteInstance build(const ValidatedInstance& inst, Money dummy_edge_weight = 0);

}  // namespace slotmarket
