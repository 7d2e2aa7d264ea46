#include "slotmarket/io.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "slotmarket/matching_graph.hpp"

namespace slotmarket {
namespace io {

namespace {

using nlohmann::json;

// Field limits for operational sanity. Generous, but they keep every total
// the engine can form comfortably inside 64-bit cents.
constexpr std::int64_t kMaxSlots = 100'000;
constexpr std::int64_t kMaxFlights = 100'000;
constexpr std::int64_t kMaxCapacity = 1'000'000;
constexpr std::int64_t kMaxAlpha = 1'000'000'000;        // $10M per delay unit
constexpr std::int64_t kMaxProfileDelay = 1'000'000;
constexpr std::int64_t kMaxProfileValue = 1'000'000'000;
constexpr std::int64_t kMaxBreakpoints = 64;
constexpr std::int64_t kMaxSlotMinutes = 1440;

struct Strict {
  std::string error;

  bool fail(const std::string& msg) {
    if (error.empty()) error = msg;
    return false;
  }

  bool object_keys(const json& j, const std::string& where,
                   std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
    if (!j.is_object()) return fail(where + ": expected an object");
    for (const auto& [key, value] : j.items()) {
      (void)value;
      const bool known =
          std::find_if(required.begin(), required.end(),
                       [&key](const char* k) { return key == k; }) != required.end() ||
          std::find_if(optional.begin(), optional.end(),
                       [&key](const char* k) { return key == k; }) != optional.end();
      if (!known) return fail(where + ": unknown field '" + key + "'");
    }
    for (const char* k : required) {
      if (!j.contains(k)) return fail(where + ": missing field '" + std::string(k) + "'");
    }
    return true;
  }

  bool get_int(const json& j, const std::string& where, std::int64_t lo, std::int64_t hi,
               std::int64_t& out) {
    if (!j.is_number_integer()) return fail(where + ": expected an integer");
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      return fail(where + ": integer out of range");
    }
    const std::int64_t v = j.get<std::int64_t>();
    if (v < lo || v > hi) {
      return fail(where + ": value " + std::to_string(v) + " outside [" + std::to_string(lo) +
                  ", " + std::to_string(hi) + "]");
    }
    out = v;
    return true;
  }

  bool get_string(const json& j, const std::string& where, std::string& out) {
    if (!j.is_string()) return fail(where + ": expected a string");
    out = j.get<std::string>();
    return true;
  }
};

bool parse_profile(Strict& st, const json& j, const std::string& where, DelayProfile& out) {
  if (j.is_string()) {
    if (j.get<std::string>() != "linear") {
      return st.fail(where + ": profile string must be \"linear\"");
    }
    out = DelayProfile::linear();
    return true;
  }
  if (!st.object_keys(j, where, {"breakpoints"})) return false;
  const json& bps = j["breakpoints"];
  if (!bps.is_array() || bps.empty()) {
    return st.fail(where + ".breakpoints: expected a non-empty array");
  }
  if (static_cast<std::int64_t>(bps.size()) > kMaxBreakpoints) {
    return st.fail(where + ".breakpoints: too many entries");
  }
  std::vector<DelayProfile::Breakpoint> pts;
  for (std::size_t k = 0; k < bps.size(); ++k) {
    const json& pair = bps[k];
    const std::string at = where + ".breakpoints[" + std::to_string(k) + "]";
    if (!pair.is_array() || pair.size() != 2) {
      return st.fail(at + ": expected [delay_slots, value]");
    }
    std::int64_t d = 0, v = 0;
    if (!st.get_int(pair[0], at + "[0]", 0, kMaxProfileDelay, d)) return false;
    if (!st.get_int(pair[1], at + "[1]", 0, kMaxProfileValue, v)) return false;
    pts.push_back({d, v});
  }
  out = DelayProfile::piecewise(std::move(pts));
  return true;
}

json profile_to_json(const DelayProfile& p) {
  if (p.is_linear()) return json("linear");
  json bps = json::array();
  for (const auto& [d, v] : p.breakpoints()) bps.push_back(json::array({d, v}));
  return json{{"breakpoints", bps}};
}

std::variant<Instance, ParseError> parse_instance_json(const json& root) {
  Strict st;
  Instance inst;

  if (!st.object_keys(root, "instance", {"slot_minutes", "slots", "flights"})) {
    return ParseError{st.error};
  }
  if (!st.get_int(root["slot_minutes"], "slot_minutes", 1, kMaxSlotMinutes, inst.slot_minutes)) {
    return ParseError{st.error};
  }

  const json& slots = root["slots"];
  if (!slots.is_array()) return ParseError{"slots: expected an array"};
  if (static_cast<std::int64_t>(slots.size()) > kMaxSlots) {
    return ParseError{"slots: too many entries"};
  }
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const std::string where = "slots[" + std::to_string(k) + "]";
    if (!st.object_keys(slots[k], where, {"index", "capacity"})) return ParseError{st.error};
    std::int64_t index = 0, capacity = 0;
    if (!st.get_int(slots[k]["index"], where + ".index", 0, kMaxSlots - 1, index) ||
        !st.get_int(slots[k]["capacity"], where + ".capacity", 0, kMaxCapacity, capacity)) {
      return ParseError{st.error};
    }
    if (index != static_cast<std::int64_t>(k)) {
      return ParseError{where + ".index: expected " + std::to_string(k) +
                        " (slots must be listed in order, covering the day)"};
    }
    inst.slots.push_back(Slot{SlotId{index}, capacity});
  }

  const json& flights = root["flights"];
  if (!flights.is_array()) return ParseError{"flights: expected an array"};
  if (static_cast<std::int64_t>(flights.size()) > kMaxFlights) {
    return ParseError{"flights: too many entries"};
  }
  for (std::size_t k = 0; k < flights.size(); ++k) {
    const json& fj = flights[k];
    const std::string where = "flights[" + std::to_string(k) + "]";
    if (!st.object_keys(fj, where,
                        {"id", "airline", "scheduled_slot", "alpha_cents_per_slot", "profile"},
                        {"window"})) {
      return ParseError{st.error};
    }
    Flight f;
    if (!st.get_string(fj["id"], where + ".id", f.id)) return ParseError{st.error};
    if (f.id.empty()) return ParseError{where + ".id: must be non-empty"};
    if (!st.get_string(fj["airline"], where + ".airline", f.airline)) return ParseError{st.error};
    if (!st.get_int(fj["scheduled_slot"], where + ".scheduled_slot", 0, kMaxSlots - 1,
                    f.scheduled_slot.index)) {
      return ParseError{st.error};
    }
    if (!st.get_int(fj["alpha_cents_per_slot"], where + ".alpha_cents_per_slot", 0, kMaxAlpha,
                    f.alpha)) {
      return ParseError{st.error};
    }
    if (!parse_profile(st, fj["profile"], where + ".profile", f.profile)) {
      return ParseError{st.error};
    }

    Window w{f.id, {}};
    if (fj.contains("window")) {
      const json& wj = fj["window"];
      if (!wj.is_array() || wj.empty()) {
        return ParseError{where + ".window: expected a non-empty array of slot indices"};
      }
      std::int64_t prev = -1;
      for (std::size_t m = 0; m < wj.size(); ++m) {
        std::int64_t s = 0;
        if (!st.get_int(wj[m], where + ".window[" + std::to_string(m) + "]", 0, kMaxSlots - 1,
                        s)) {
          return ParseError{st.error};
        }
        if (s <= prev) {
          return ParseError{where + ".window: slot indices must be strictly increasing"};
        }
        prev = s;
        w.slots.push_back(SlotId{s});
      }
    }
    inst.flights.push_back(std::move(f));
    inst.windows.push_back(std::move(w));
  }

  return inst;
}

}  // namespace

std::variant<Instance, ParseError> parse_instance_text(const std::string& text) {
  json root = json::parse(text, nullptr, false);
  if (root.is_discarded()) return ParseError{"not valid JSON"};
  return parse_instance_json(root);
}

std::string emit_instance_text(const Instance& inst) {
  json root;
  root["slot_minutes"] = inst.slot_minutes;
  json slots = json::array();
  for (const Slot& s : inst.slots) {
    slots.push_back(json{{"index", s.id.index}, {"capacity", s.capacity}});
  }
  root["slots"] = std::move(slots);
  json flights = json::array();
  for (std::size_t i = 0; i < inst.flights.size(); ++i) {
    const Flight& f = inst.flights[i];
    json fj{{"id", f.id},
            {"airline", f.airline},
            {"scheduled_slot", f.scheduled_slot.index},
            {"alpha_cents_per_slot", f.alpha},
            {"profile", profile_to_json(f.profile)}};
    if (!inst.windows[i].slots.empty()) {
      json w = json::array();
      for (SlotId s : inst.windows[i].slots) w.push_back(s.index);
      fj["window"] = std::move(w);
    }
    flights.push_back(std::move(fj));
  }
  root["flights"] = std::move(flights);
  return root.dump(2) + "\n";
}

Report build_report(const ValidatedInstance& inst, const Schedule& sched, const PriceSystem& ps) {
  Report rep;
  rep.prices_cents = ps.prices;

  for (std::int64_t i = 0; i < inst.num_flights(); ++i) {
    const Flight& f = inst.flight(i);
    const SlotId at = sched.assignment.at(f.id);
    FlightRow row;
    row.slot = at;
    row.raw_delay_slots = raw_delay(inst, f, at);
    row.delay_minutes = row.raw_delay_slots * inst.get().slot_minutes;
    row.delay_cost_cents = delay_cost(inst, f, at);
    rep.schedule[f.id] = row;

    rep.schedule_cost_cents += row.delay_cost_cents;
    const Money paid = ps.prices[static_cast<std::size_t>(at.index)];
    rep.revenue_cents += paid;

    AirlineRollup& roll = rep.airlines[f.airline];
    roll.paid_cents += paid;
    roll.delay_slots += row.raw_delay_slots;
    roll.delay_minutes += row.delay_minutes;
  }

  Money dual = 0;
  for (const auto& [id, t] : ps.total_costs) {
    (void)id;
    dual += t;
  }
  for (std::int64_t s = 0; s < inst.num_slots(); ++s) {
    dual -= inst.slot(SlotId{s}).capacity * ps.prices[static_cast<std::size_t>(s)];
  }
  rep.dual_objective_cents = dual;
  rep.equilibrium_ok = true;
  rep.violation_count = 0;
  return rep;
}

std::string emit_report_text(const Report& report, bool summary) {
  json root;
  json totals{{"schedule_cost_cents", report.schedule_cost_cents},
              {"dual_objective_cents", report.dual_objective_cents},
              {"revenue_cents", report.revenue_cents}};
  root["totals"] = std::move(totals);
  root["prices_cents"] = report.prices_cents;
  root["equilibrium"] = json{{"ok", report.equilibrium_ok}, {"violations", json::array()}};

  if (!summary) {
    json sched = json::object();
    for (const auto& [id, row] : report.schedule) {
      sched[id] = json{{"slot", row.slot.index},
                       {"raw_delay_slots", row.raw_delay_slots},
                       {"delay_minutes", row.delay_minutes},
                       {"delay_cost_cents", row.delay_cost_cents}};
    }
    root["schedule"] = std::move(sched);
    json airlines = json::object();
    for (const auto& [name, roll] : report.airlines) {
      airlines[name] = json{{"paid_cents", roll.paid_cents},
                            {"delay_slots", roll.delay_slots},
                            {"delay_minutes", roll.delay_minutes}};
    }
    root["airlines"] = std::move(airlines);
  }
  return root.dump(2) + "\n";
}

std::variant<Report, ParseError> parse_report_text(const std::string& text) {
  json root = json::parse(text, nullptr, false);
  if (root.is_discarded()) return ParseError{"not valid JSON"};

  Strict st;
  Report rep;
  if (!st.object_keys(root, "report",
                      {"totals", "prices_cents", "equilibrium", "schedule", "airlines"})) {
    return ParseError{st.error};
  }
  if (!st.object_keys(root["totals"], "totals",
                      {"schedule_cost_cents", "dual_objective_cents", "revenue_cents"})) {
    return ParseError{st.error};
  }
  const Money money_lo = std::numeric_limits<Money>::min() / 2;
  const Money money_hi = std::numeric_limits<Money>::max() / 2;
  if (!st.get_int(root["totals"]["schedule_cost_cents"], "totals.schedule_cost_cents", money_lo,
                  money_hi, rep.schedule_cost_cents) ||
      !st.get_int(root["totals"]["dual_objective_cents"], "totals.dual_objective_cents", money_lo,
                  money_hi, rep.dual_objective_cents) ||
      !st.get_int(root["totals"]["revenue_cents"], "totals.revenue_cents", money_lo, money_hi,
                  rep.revenue_cents)) {
    return ParseError{st.error};
  }

  const json& prices = root["prices_cents"];
  if (!prices.is_array()) return ParseError{"prices_cents: expected an array"};
  for (std::size_t k = 0; k < prices.size(); ++k) {
    Money p = 0;
    if (!st.get_int(prices[k], "prices_cents[" + std::to_string(k) + "]", money_lo, money_hi, p)) {
      return ParseError{st.error};
    }
    rep.prices_cents.push_back(p);
  }

  const json& eq = root["equilibrium"];
  if (!st.object_keys(eq, "equilibrium", {"ok", "violations"})) return ParseError{st.error};
  if (!eq["ok"].is_boolean()) return ParseError{"equilibrium.ok: expected a boolean"};
  rep.equilibrium_ok = eq["ok"].get<bool>();
  if (!eq["violations"].is_array()) return ParseError{"equilibrium.violations: expected an array"};
  rep.violation_count = static_cast<std::int64_t>(eq["violations"].size());

  const json& sched = root["schedule"];
  if (!sched.is_object()) {
    return ParseError{"schedule: expected an object (summary reports cannot be verified)"};
  }
  for (const auto& [id, row] : sched.items()) {
    const std::string where = "schedule['" + id + "']";
    if (!st.object_keys(row, where,
                        {"slot", "raw_delay_slots", "delay_minutes", "delay_cost_cents"})) {
      return ParseError{st.error};
    }
    FlightRow fr;
    if (!st.get_int(row["slot"], where + ".slot", 0, kMaxSlots - 1, fr.slot.index) ||
        !st.get_int(row["raw_delay_slots"], where + ".raw_delay_slots", 0, kMaxSlots,
                    fr.raw_delay_slots) ||
        !st.get_int(row["delay_minutes"], where + ".delay_minutes", 0,
                    kMaxSlots * kMaxSlotMinutes, fr.delay_minutes) ||
        !st.get_int(row["delay_cost_cents"], where + ".delay_cost_cents", money_lo, money_hi,
                    fr.delay_cost_cents)) {
      return ParseError{st.error};
    }
    rep.schedule[id] = fr;
  }

  const json& airlines = root["airlines"];
  if (!airlines.is_object()) return ParseError{"airlines: expected an object"};
  for (const auto& [name, roll] : airlines.items()) {
    const std::string where = "airlines['" + name + "']";
    if (!st.object_keys(roll, where, {"paid_cents", "delay_slots", "delay_minutes"})) {
      return ParseError{st.error};
    }
    AirlineRollup ar;
    if (!st.get_int(roll["paid_cents"], where + ".paid_cents", money_lo, money_hi,
                    ar.paid_cents) ||
        !st.get_int(roll["delay_slots"], where + ".delay_slots", 0,
                    kMaxSlots * kMaxFlights, ar.delay_slots) ||
        !st.get_int(roll["delay_minutes"], where + ".delay_minutes", 0,
                    std::numeric_limits<std::int64_t>::max() / 4, ar.delay_minutes)) {
      return ParseError{st.error};
    }
    rep.airlines[name] = ar;
  }

  return rep;
}

std::string emit_certificate_text(const InfeasibilityCertificate& cert) {
  json root;
  json flights = json::array();
  for (const std::string& id : cert.deficient_flights) flights.push_back(id);
  json slots = json::array();
  for (SlotId s : cert.reachable_slots) slots.push_back(s.index);
  root["infeasible"] = json{
      {"deficient_flights", std::move(flights)},
      {"window_union", std::move(slots)},
      {"shortfall", cert.shortfall},
      {"remedies",
       json::array({"stretch the landing windows (--stretch N)", "cancel flights"})}};
  return root.dump(2) + "\n";
}

PipelineResult run_solve_pipeline(const std::string& instance_text,
                                  const PipelineOptions& options) {
  auto parsed = parse_instance_text(instance_text);
  if (auto* err = std::get_if<ParseError>(&parsed)) {
    return PipelineInputError{"instance: " + err->message};
  }
  Instance inst = std::move(std::get<Instance>(parsed));

  for (std::size_t i = 0; i < inst.flights.size(); ++i) {
    if (!inst.windows[i].slots.empty()) continue;
    if (!options.policy.has_value()) {
      return PipelineInputError{"flight '" + inst.flights[i].id +
                                "' has no window; supply one in the file or pass --window-base"};
    }
    inst.windows[i].slots =
        policy_window(*options.policy, inst.flights[i].scheduled_slot, inst.num_slots());
  }

  if (options.slide < 0) return PipelineInputError{"--slide must be >= 0"};
  if (options.slide > 0) inst = slide_windows(std::move(inst), options.slide);
  if (options.stretch.has_value()) {
    if (*options.stretch < 1) return PipelineInputError{"--stretch must be >= 1"};
    inst = stretch_windows(std::move(inst), *options.stretch);
  }

  auto validated = validate_instance(std::move(inst));
  if (auto* err = std::get_if<ValidationError>(&validated)) {
    return PipelineInputError{"instance: " + err->message()};
  }
  const ValidatedInstance& vi = std::get<ValidatedInstance>(validated);

  SolveResult solved = solve(build(vi));
  if (auto* cert = std::get_if<InfeasibilityCertificate>(&solved)) {
    return PipelineInfeasible{*cert, emit_certificate_text(*cert)};
  }
  MatchingResult& match = std::get<MatchingResult>(solved);

  const PriceSystem ps = extract_prices(vi, match);  // re-verifies internally
  if (strong_duality_check(vi, match.schedule, ps) != 0) {
    throw std::logic_error("pipeline: strong duality gap is nonzero");
  }

  PipelineSuccess out;
  out.report = build_report(vi, match.schedule, ps);
  out.report_text = emit_report_text(out.report, options.summary);
  out.matching = std::move(match);
  return out;
}

VerifyOutcome run_verify_pipeline(const std::string& instance_text,
                                  const std::string& report_text) {
  VerifyOutcome out;

  auto parsed = parse_instance_text(instance_text);
  if (auto* err = std::get_if<ParseError>(&parsed)) {
    out.input_error = "instance: " + err->message;
    return out;
  }
  auto parsed_report = parse_report_text(report_text);
  if (auto* err = std::get_if<ParseError>(&parsed_report)) {
    out.input_error = "report: " + err->message;
    return out;
  }
  auto validated = validate_instance(std::move(std::get<Instance>(parsed)));
  if (auto* err = std::get_if<ValidationError>(&validated)) {
    out.input_error = "instance: " + err->message();
    return out;
  }
  out.input_ok = true;

  const ValidatedInstance& vi = std::get<ValidatedInstance>(validated);
  const Report& rep = std::get<Report>(parsed_report);
  auto finding = [&out](const std::string& msg) { out.findings.push_back(msg); };

  if (!rep.equilibrium_ok || rep.violation_count != 0) {
    finding("report declares itself out of equilibrium");
  }
  if (static_cast<std::int64_t>(rep.prices_cents.size()) != vi.num_slots()) {
    finding("report has " + std::to_string(rep.prices_cents.size()) + " prices but the day has " +
            std::to_string(vi.num_slots()) + " slots");
    return out;
  }

  // Rebuild the schedule and cross-check every derived field.
  Schedule sched;
  bool rows_ok = true;
  Money recomputed_cost = 0;
  Money recomputed_revenue = 0;
  std::map<std::string, AirlineRollup> rollups;
  for (std::int64_t i = 0; i < vi.num_flights(); ++i) {
    const Flight& f = vi.flight(i);
    auto it = rep.schedule.find(f.id);
    if (it == rep.schedule.end()) {
      finding("flight '" + f.id + "' missing from the report schedule");
      rows_ok = false;
      continue;
    }
    const FlightRow& row = it->second;
    if (row.slot.index >= vi.num_slots()) {
      finding("flight '" + f.id + "' assigned to slot " + std::to_string(row.slot.index) +
              " which does not exist");
      rows_ok = false;
      continue;
    }
    sched.assignment[f.id] = row.slot;
    const std::int64_t raw = raw_delay(vi, f, row.slot);
    const Money cost = delay_cost(vi, f, row.slot);
    if (row.raw_delay_slots != raw || row.delay_minutes != raw * vi.get().slot_minutes ||
        row.delay_cost_cents != cost) {
      finding("flight '" + f.id + "' has inconsistent delay fields in the report");
    }
    recomputed_cost += cost;
    recomputed_revenue += rep.prices_cents[static_cast<std::size_t>(row.slot.index)];
    AirlineRollup& roll = rollups[f.airline];
    roll.paid_cents += rep.prices_cents[static_cast<std::size_t>(row.slot.index)];
    roll.delay_slots += raw;
    roll.delay_minutes += raw * vi.get().slot_minutes;
  }
  for (const auto& [id, row] : rep.schedule) {
    (void)row;
    bool known = false;
    for (std::int64_t i = 0; i < vi.num_flights(); ++i) {
      if (vi.flight(i).id == id) {
        known = true;
        break;
      }
    }
    if (!known) {
      finding("report schedules unknown flight '" + id + "'");
      rows_ok = false;
    }
  }
  if (!rows_ok) return out;

  PriceSystem ps;
  ps.prices = rep.prices_cents;
  for (std::int64_t i = 0; i < vi.num_flights(); ++i) {
    const Flight& f = vi.flight(i);
    const SlotId at = sched.assignment.at(f.id);
    ps.total_costs[f.id] =
        rep.prices_cents[static_cast<std::size_t>(at.index)] + delay_cost(vi, f, at);
  }

  const EquilibriumReport eq = verify(vi, sched, ps);
  for (const Violation& v : eq.violations) {
    std::string msg = "condition '" + v.condition + "' violated";
    if (!v.flight.empty()) msg += " for flight '" + v.flight + "'";
    if (v.slot >= 0) msg += " at slot " + std::to_string(v.slot);
    msg += " (lhs=" + std::to_string(v.lhs) + ", rhs=" + std::to_string(v.rhs) + ")";
    finding(msg);
  }

  bool schedule_feasible = true;
  for (const Violation& v : eq.violations) {
    if (v.condition == "feasibility") schedule_feasible = false;
  }
  if (schedule_feasible) {
    const Money gap = strong_duality_check(vi, sched, ps);
    if (gap != 0) {
      finding("strong duality gap is " + std::to_string(gap) + ", expected exactly 0");
    }
  }

  if (rep.schedule_cost_cents != recomputed_cost) {
    finding("totals.schedule_cost_cents is " + std::to_string(rep.schedule_cost_cents) +
            ", recomputed " + std::to_string(recomputed_cost));
  }
  Money dual = 0;
  for (const auto& [id, t] : ps.total_costs) {
    (void)id;
    dual += t;
  }
  for (std::int64_t s = 0; s < vi.num_slots(); ++s) {
    dual -= vi.slot(SlotId{s}).capacity * ps.prices[static_cast<std::size_t>(s)];
  }
  if (rep.dual_objective_cents != dual) {
    finding("totals.dual_objective_cents is " + std::to_string(rep.dual_objective_cents) +
            ", recomputed " + std::to_string(dual));
  }
  if (rep.revenue_cents != recomputed_revenue) {
    finding("totals.revenue_cents is " + std::to_string(rep.revenue_cents) + ", recomputed " +
            std::to_string(recomputed_revenue));
  }
  if (rep.airlines.size() != rollups.size()) {
    finding("airline rollup lists " + std::to_string(rep.airlines.size()) + " airlines, expected " +
            std::to_string(rollups.size()));
  } else {
    for (const auto& [name, roll] : rollups) {
      auto it = rep.airlines.find(name);
      if (it == rep.airlines.end()) {
        finding("airline rollup missing '" + name + "'");
      } else if (it->second.paid_cents != roll.paid_cents ||
                 it->second.delay_slots != roll.delay_slots ||
                 it->second.delay_minutes != roll.delay_minutes) {
        finding("airline rollup for '" + name + "' does not match the schedule");
      }
    }
  }

  return out;
}

}  // namespace io
}  // namespace slotmarket
