#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "slotmarket/equilibrium.hpp"
#include "slotmarket/model.hpp"
#include "slotmarket/solver.hpp"
#include "slotmarket/windows.hpp"

namespace slotmarket {
namespace io {

struct ParseError {
  std::string message;
};

// Instance files are strict JSON: unknown fields are rejected, money is
// integer cents, windows are strictly increasing slot indices. A flight may
// omit its window; the solve pipeline then derives one from the window
// policy flags. In the in-memory Instance an omitted window is an empty one.
std::variant<Instance, ParseError> parse_instance_text(const std::string& text);
std::string emit_instance_text(const Instance& inst);

struct FlightRow {
  SlotId slot;
  std::int64_t raw_delay_slots = 0;
  std::int64_t delay_minutes = 0;  // display only
  Money delay_cost_cents = 0;
};

struct AirlineRollup {
  Money paid_cents = 0;  // landing fees
  std::int64_t delay_slots = 0;
  std::int64_t delay_minutes = 0;
};

struct Report {
  std::map<std::string, FlightRow> schedule;
  std::vector<Money> prices_cents;  // per slot
  Money schedule_cost_cents = 0;
  Money dual_objective_cents = 0;  // equals schedule_cost_cents in every emitted report
  Money revenue_cents = 0;         // landing fees collected across occupied slots
  bool equilibrium_ok = true;
  std::int64_t violation_count = 0;
  std::map<std::string, AirlineRollup> airlines;
};

Report build_report(const ValidatedInstance& inst, const Schedule& sched, const PriceSystem& ps);
// summary drops the per-flight schedule and airline rollup sections.
std::string emit_report_text(const Report& report, bool summary = false);
// Full reports only; summaries cannot be re-verified.
std::variant<Report, ParseError> parse_report_text(const std::string& text);

std::string emit_certificate_text(const InfeasibilityCertificate& cert);

// parse -> window policy -> slide/stretch -> validate -> build -> solve ->
// extract prices -> verify -> report. Shared by the CLI and the test suites.
struct PipelineOptions {
  std::optional<WindowPolicy> policy;  // fills in windows for flights without one
  std::int64_t slide = 0;
  std::optional<std::int64_t> stretch;
  bool summary = false;
};

struct PipelineSuccess {
  Report report;
  std::string report_text;
  MatchingResult matching;
};
struct PipelineInfeasible {
  InfeasibilityCertificate certificate;
  std::string text;
};
struct PipelineInputError {
  std::string message;
};
using PipelineResult = std::variant<PipelineSuccess, PipelineInfeasible, PipelineInputError>;

PipelineResult run_solve_pipeline(const std::string& instance_text,
                                  const PipelineOptions& options);

// Re-checks a third party's schedule and prices against an instance: the
// equilibrium conditions, exact strong duality, and every derived field of
// the report (delays, costs, totals, revenue, rollups).
struct VerifyOutcome {
  bool input_ok = false;       // both files parsed and the instance validated
  std::string input_error;     // when !input_ok
  std::vector<std::string> findings;  // empty means verified
};

VerifyOutcome run_verify_pipeline(const std::string& instance_text,
                                  const std::string& report_text);

}  // namespace io
}  // namespace slotmarket
