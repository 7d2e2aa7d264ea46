#include "slotmarket/matching_graph.hpp"

namespace slotmarket {

std::int64_t BipartiteInstance::num_edges() const {
  std::int64_t n = num_slots();  // dummy edges
  for (const auto& e : flight_edges_) n += static_cast<std::int64_t>(e.size());
  return n;
}

BipartiteInstance build(const ValidatedInstance& inst, Money dummy_edge_weight) {
  BipartiteInstance bi;
  bi.dummy_edge_weight_ = dummy_edge_weight;

  bi.slot_capacity_.reserve(static_cast<std::size_t>(inst.num_slots()));
  for (std::int64_t s = 0; s < inst.num_slots(); ++s) {
    const std::int64_t c = inst.slot(SlotId{s}).capacity;
    bi.slot_capacity_.push_back(c);
    bi.total_capacity_ += c;
  }

  bi.flight_ids_.reserve(static_cast<std::size_t>(inst.num_flights()));
  bi.flight_edges_.reserve(static_cast<std::size_t>(inst.num_flights()));
  for (std::int64_t i = 0; i < inst.num_flights(); ++i) {
    const Flight& f = inst.flight(i);
    bi.flight_ids_.push_back(f.id);
    std::vector<BipartiteInstance::FlightEdge> edges;
    edges.reserve(inst.window(i).slots.size());
    for (SlotId s : inst.window(i).slots) {
      edges.push_back({s.index, delay_cost(inst, f, s)});
    }
    bi.flight_edges_.push_back(std::move(edges));
  }

  return bi;
}

}  // namespace slotmarket
