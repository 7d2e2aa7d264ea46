#include "slotmarket/solver.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace slotmarket {

namespace {

constexpr Money kInf = std::numeric_limits<Money>::max() / 4;

// Dijkstra node ids: slots 0..T-1, flight i -> T+i, sink T+F. Heap entries
// compare by (distance, node id), so ties prefer the smaller slot index, then
// the earlier flight, then the sink — the engine's deterministic tie-break.
struct Search {
  const BipartiteInstance& bi;
  const std::int64_t num_flights;
  const std::int64_t num_slots;
  const std::int64_t sink;

  std::vector<Money> pi_flight;
  std::vector<Money> pi_slot;
  Money pi_sink = 0;

  std::vector<std::int64_t> assigned_slot;          // per flight, -1 if none
  std::vector<Money> assigned_weight;               // weight of the assigned edge
  std::vector<std::vector<std::int64_t>> occupants; // per slot, ascending flight index

  std::vector<Money> dist;
  std::vector<std::int64_t> parent;
  std::vector<bool> done;

  explicit Search(const BipartiteInstance& b)
      : bi(b),
        num_flights(b.num_flights()),
        num_slots(b.num_slots()),
        sink(b.num_slots() + b.num_flights()),
        pi_flight(static_cast<std::size_t>(b.num_flights()), 0),
        pi_slot(static_cast<std::size_t>(b.num_slots()), 0),
        assigned_slot(static_cast<std::size_t>(b.num_flights()), -1),
        assigned_weight(static_cast<std::size_t>(b.num_flights()), 0),
        occupants(static_cast<std::size_t>(b.num_slots())),
        dist(static_cast<std::size_t>(sink + 1), kInf),
        parent(static_cast<std::size_t>(sink + 1), -1),
        done(static_cast<std::size_t>(sink + 1), false) {}

  std::int64_t flight_node(std::int64_t i) const { return num_slots + i; }

  Money edge_weight(std::int64_t flight, std::int64_t slot) const {
    const auto& es = bi.edges(flight);
    auto it = std::lower_bound(es.begin(), es.end(), slot,
                               [](const BipartiteInstance::FlightEdge& e, std::int64_t s) {
                                 return e.slot < s;
                               });
    if (it == es.end() || it->slot != slot) {
      throw std::logic_error("augmenting path used a non-existent edge");
    }
    return it->weight;
  }

  // Routes one unit for flight k. Returns false when no spare capacity is
  // reachable, in which case the finalized sets form an infeasibility witness.
  bool route_flight(std::int64_t k) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(parent.begin(), parent.end(), -1);
    std::fill(done.begin(), done.end(), false);

    using Entry = std::pair<Money, std::int64_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;

    // Seed with k's own edges. Their reduced costs may be negative (k's
    // potential is fresh while slot potentials have moved); as pure source
    // offsets they do not break Dijkstra.
    for (const auto& e : bi.edges(k)) {
      const Money nd = e.weight + pi_flight[static_cast<std::size_t>(k)] -
                       pi_slot[static_cast<std::size_t>(e.slot)];
      if (nd < dist[static_cast<std::size_t>(e.slot)]) {
        dist[static_cast<std::size_t>(e.slot)] = nd;
        parent[static_cast<std::size_t>(e.slot)] = flight_node(k);
        heap.push({nd, e.slot});
      }
    }

    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (done[static_cast<std::size_t>(u)] || d > dist[static_cast<std::size_t>(u)]) continue;
      done[static_cast<std::size_t>(u)] = true;
      if (u == sink) break;

      auto relax = [&](std::int64_t v, Money nd, std::int64_t from) {
        if (nd < dist[static_cast<std::size_t>(v)]) {
          dist[static_cast<std::size_t>(v)] = nd;
          parent[static_cast<std::size_t>(v)] = from;
          heap.push({nd, v});
        }
      };

      if (u < num_slots) {
        const std::int64_t s = u;
        if (static_cast<std::int64_t>(occupants[static_cast<std::size_t>(s)].size()) <
            bi.slot_capacity(s)) {
          relax(sink, d + pi_slot[static_cast<std::size_t>(s)] - pi_sink, u);
        }
        for (std::int64_t j : occupants[static_cast<std::size_t>(s)]) {
          const Money rc = pi_slot[static_cast<std::size_t>(s)] -
                           pi_flight[static_cast<std::size_t>(j)] -
                           assigned_weight[static_cast<std::size_t>(j)];
          relax(flight_node(j), d + rc, u);
        }
      } else {
        const std::int64_t j = u - num_slots;
        for (const auto& e : bi.edges(j)) {
          if (e.slot == assigned_slot[static_cast<std::size_t>(j)]) continue;
          const Money rc = e.weight + pi_flight[static_cast<std::size_t>(j)] -
                           pi_slot[static_cast<std::size_t>(e.slot)];
          relax(e.slot, d + rc, u);
        }
      }
    }

    if (!done[static_cast<std::size_t>(sink)]) return false;

    // Flip the augmenting path: each flight on it moves to the next slot,
    // and k takes the vacated seat at the chain's end.
    const Money sink_dist = dist[static_cast<std::size_t>(sink)];
    std::int64_t slot = parent[static_cast<std::size_t>(sink)];
    while (true) {
      const std::int64_t f_node = parent[static_cast<std::size_t>(slot)];
      const std::int64_t f = f_node - num_slots;
      const std::int64_t old_slot = assigned_slot[static_cast<std::size_t>(f)];
      if (old_slot >= 0) {
        auto& occ = occupants[static_cast<std::size_t>(old_slot)];
        occ.erase(std::find(occ.begin(), occ.end(), f));
      }
      assigned_slot[static_cast<std::size_t>(f)] = slot;
      assigned_weight[static_cast<std::size_t>(f)] = edge_weight(f, slot);
      auto& occ = occupants[static_cast<std::size_t>(slot)];
      occ.insert(std::upper_bound(occ.begin(), occ.end(), f), f);
      if (f == k) break;
      slot = old_slot;
    }

    // Potential update. Everything finalized moves by its distance, the rest
    // by the sink distance; k itself stays put. This keeps every residual
    // reduced cost non-negative for the next stage.
    pi_sink += sink_dist;
    for (std::int64_t s = 0; s < num_slots; ++s) {
      pi_slot[static_cast<std::size_t>(s)] +=
          done[static_cast<std::size_t>(s)]
              ? std::min(dist[static_cast<std::size_t>(s)], sink_dist)
              : sink_dist;
    }
    for (std::int64_t j = 0; j < k; ++j) {
      const std::int64_t fn = flight_node(j);
      pi_flight[static_cast<std::size_t>(j)] +=
          done[static_cast<std::size_t>(fn)]
              ? std::min(dist[static_cast<std::size_t>(fn)], sink_dist)
              : sink_dist;
    }
    return true;
  }

  // After the dummy batch every slot is saturated. Slots that still had
  // spare capacity sit at or above the sink potential (they could reach it),
  // and slots above the sink level carry no flights, so clamping to the sink
  // level restores the reduced-cost invariant on the final residual graph.
  void clamp_slot_potentials_to_sink() {
    for (Money& p : pi_slot) p = std::min(p, pi_sink);
  }

  InfeasibilityCertificate make_certificate(std::int64_t k) const {
    InfeasibilityCertificate cert;
    std::int64_t reachable_capacity = 0;
    for (std::int64_t j = 0; j < num_flights; ++j) {
      if (j == k || done[static_cast<std::size_t>(flight_node(j))]) {
        cert.deficient_flights.push_back(bi.flight_id(j));
      }
    }
    for (std::int64_t s = 0; s < num_slots; ++s) {
      if (done[static_cast<std::size_t>(s)]) {
        cert.reachable_slots.push_back(SlotId{s});
        reachable_capacity += bi.slot_capacity(s);
      }
    }
    cert.shortfall =
        static_cast<std::int64_t>(cert.deficient_flights.size()) - reachable_capacity;
    return cert;
  }
};

}  // namespace

SolveResult solve(const BipartiteInstance& bi) {
  Search search(bi);
  MatchingResult result;

  for (std::int64_t k = 0; k < bi.num_flights(); ++k) {
    result.shortest_path_runs += 1;
    if (!search.route_flight(k)) {
      return search.make_certificate(k);
    }
  }

  // Dummy batch: the surplus demand exactly matches the leftover slot
  // capacity, and all dummy edges cost the same, so it saturates directly.
  // The potential adjustment re-establishes the reduced-cost invariant:
  // slots that kept spare capacity sit at the sink level afterwards, and
  // slots above it carry no flights, so clamping them down is safe.
  if (bi.dummy_demand() > 0) result.shortest_path_runs += 1;
  search.clamp_slot_potentials_to_sink();

  for (std::int64_t i = 0; i < bi.num_flights(); ++i) {
    const std::int64_t s = search.assigned_slot[static_cast<std::size_t>(i)];
    result.schedule.assignment[bi.flight_id(i)] = SlotId{s};
    result.flow_cost += search.assigned_weight[static_cast<std::size_t>(i)];
  }
  result.flow_cost += bi.dummy_edge_weight() * bi.dummy_demand();

  result.potentials.flight = std::move(search.pi_flight);
  result.potentials.slot = std::move(search.pi_slot);
  result.potentials.dummy = search.pi_sink - bi.dummy_edge_weight();
  result.potentials.sink = search.pi_sink;
  return result;
}

std::string check_potentials(const BipartiteInstance& bi, const MatchingResult& result) {
  const SolverPotentials& pi = result.potentials;
  std::vector<std::int64_t> occupancy(static_cast<std::size_t>(bi.num_slots()), 0);
  std::vector<std::int64_t> assigned(static_cast<std::size_t>(bi.num_flights()), -1);
  for (std::int64_t i = 0; i < bi.num_flights(); ++i) {
    auto it = result.schedule.assignment.find(bi.flight_id(i));
    if (it == result.schedule.assignment.end()) return "flight missing from schedule";
    assigned[static_cast<std::size_t>(i)] = it->second.index;
    occupancy[static_cast<std::size_t>(it->second.index)] += 1;
  }

  auto describe = [](const std::string& what, std::int64_t a, std::int64_t b) {
    return what + " (" + std::to_string(a) + ", " + std::to_string(b) + ")";
  };

  for (std::int64_t i = 0; i < bi.num_flights(); ++i) {
    for (const auto& e : bi.edges(i)) {
      const Money rc = e.weight + pi.flight[static_cast<std::size_t>(i)] -
                       pi.slot[static_cast<std::size_t>(e.slot)];
      if (e.slot == assigned[static_cast<std::size_t>(i)]) {
        if (-rc < 0) return describe("negative reduced cost on matched edge", i, e.slot);
      } else if (rc < 0) {
        return describe("negative reduced cost on flight edge", i, e.slot);
      }
    }
  }
  for (std::int64_t s = 0; s < bi.num_slots(); ++s) {
    const std::int64_t cap = bi.slot_capacity(s);
    if (cap == 0) continue;
    const std::int64_t fill = cap - occupancy[static_cast<std::size_t>(s)];
    const Money fwd = bi.dummy_edge_weight() + pi.dummy - pi.slot[static_cast<std::size_t>(s)];
    if (fill < cap && fwd < 0) return describe("negative reduced cost on dummy edge", -1, s);
    if (fill > 0 && -fwd < 0) return describe("negative reduced cost on matched dummy edge", -1, s);
    if (pi.sink - pi.slot[static_cast<std::size_t>(s)] < 0) {
      return describe("slot potential above sink", s, 0);
    }
  }
  return "";
}

}  // namespace slotmarket
