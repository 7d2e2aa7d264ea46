// Acceptance suite: one line per criterion, every check exact.
// argv[1] = slotmarket binary, argv[2] = fixtures directory.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "slotmarket/equilibrium.hpp"
#include "slotmarket/generator.hpp"
#include "slotmarket/io.hpp"
#include "slotmarket/oracle.hpp"
#include "slotmarket/solver.hpp"
#include "testutil.hpp"

using namespace slotmarket;

namespace {

std::string g_binary;
std::string g_fixtures;
std::filesystem::path g_scratch;
int g_failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail) {
  std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
              detail.empty() ? "" : " — ", detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct SuiteStats {
  int instances = 0;
  int oracle_mismatches = 0;
  int verify_failures = 0;
  int duality_failures = 0;
  int slackness_failures = 0;
  int alpha_failures = 0;
  double elapsed = 0;
};

// One pass over a batch of feasible instances, feeding criteria 1-4.
void run_equilibrium_battery(const ValidatedInstance& vi, SuiteStats* stats) {
  stats->instances += 1;

  auto solved = solve(build(vi));
  auto truth = oracle::brute_force_optimum(vi);
  if (!std::holds_alternative<MatchingResult>(solved) ||
      !std::holds_alternative<oracle::Optimum>(truth)) {
    stats->oracle_mismatches += 1;
    return;
  }
  const auto& match = std::get<MatchingResult>(solved);
  if (match.flow_cost != std::get<oracle::Optimum>(truth).best_cost) {
    stats->oracle_mismatches += 1;
  }

  PriceSystem ps;
  try {
    ps = extract_prices(vi, match);
  } catch (const std::exception&) {
    stats->verify_failures += 1;
    return;
  }
  const EquilibriumReport eq = verify(vi, match.schedule, ps);
  if (!eq.ok) stats->verify_failures += 1;
  if (strong_duality_check(vi, match.schedule, ps) != 0) stats->duality_failures += 1;

  std::vector<std::int64_t> occ(static_cast<std::size_t>(vi.num_slots()), 0);
  for (const auto& [id, slot] : match.schedule.assignment) {
    (void)id;
    occ[static_cast<std::size_t>(slot.index)] += 1;
  }
  bool any_under = false;
  for (std::int64_t s = 0; s < vi.num_slots(); ++s) {
    if (occ[static_cast<std::size_t>(s)] < vi.slot(SlotId{s}).capacity) any_under = true;
  }
  if (any_under) {
    for (std::int64_t s = 0; s < vi.num_slots(); ++s) {
      if (occ[static_cast<std::size_t>(s)] < vi.slot(SlotId{s}).capacity &&
          ps.prices[static_cast<std::size_t>(s)] != 0) {
        stats->slackness_failures += 1;
      }
    }
  }
  if (!alpha_bound_check(vi, match.schedule, ps).ok) stats->alpha_failures += 1;
}

void criteria_1_to_4() {
  SuiteStats stats;
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    auto r = validate_instance(testutil::fuzz_instance(0xACCE97ULL * 1000 + seed));
    if (!std::holds_alternative<ValidatedInstance>(r)) {
      stats.oracle_mismatches += 1;
      continue;
    }
    run_equilibrium_battery(std::get<ValidatedInstance>(r), &stats);
  }
  stats.elapsed = seconds_since(start);

  char timing[128];
  std::snprintf(timing, sizeof(timing), "%d instances, %.2fs", stats.instances, stats.elapsed);
  report(1, stats.instances == 1000 && stats.oracle_mismatches == 0 && stats.elapsed < 30.0,
         "solver cost equals brute-force optimum exactly on the 1000-instance fuzz suite",
         timing);
  report(2, stats.verify_failures == 0 && stats.duality_failures == 0,
         "equilibrium verifies and strong duality holds exactly on the same suite",
         std::to_string(stats.verify_failures) + " verify / " +
             std::to_string(stats.duality_failures) + " duality failures");
  report(3, stats.slackness_failures == 0,
         "every slot left under capacity is priced exactly zero",
         std::to_string(stats.slackness_failures) + " violations");
  report(4, stats.alpha_failures == 0,
         "the per-unit charge never exceeds the flight's criticality",
         std::to_string(stats.alpha_failures) + " violations");
}

void criterion_5() {
  int bad_certificates = 0;
  int oracle_disagreements = 0;
  int unrepaired = 0;
  SuiteStats repaired_stats;

  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    std::int64_t planted = 0;
    Instance inst = testutil::planted_hall_violation(0xDEF1C17ULL * 200 + seed, &planted);
    auto vr = validate_instance(inst);
    if (!std::holds_alternative<ValidatedInstance>(vr)) {
      bad_certificates += 1;
      continue;
    }
    const auto& vi = std::get<ValidatedInstance>(vr);

    auto solved = solve(build(vi));
    if (!std::holds_alternative<InfeasibilityCertificate>(solved)) {
      bad_certificates += 1;
      continue;
    }
    const auto& cert = std::get<InfeasibilityCertificate>(solved);
    std::int64_t capacity = 0;
    for (SlotId s : cert.reachable_slots) capacity += vi.slot(s).capacity;
    const auto deficient = static_cast<std::int64_t>(cert.deficient_flights.size());
    if (capacity >= deficient || cert.shortfall != deficient - capacity) {
      bad_certificates += 1;
    }
    if (!std::holds_alternative<oracle::Infeasible>(oracle::brute_force_optimum(vi))) {
      oracle_disagreements += 1;
    }

    bool repaired = false;
    for (std::int64_t extra = 1; extra <= inst.num_slots() && !repaired; ++extra) {
      auto sr = validate_instance(stretch_windows(inst, extra));
      if (!std::holds_alternative<ValidatedInstance>(sr)) continue;
      const auto& svi = std::get<ValidatedInstance>(sr);
      if (std::holds_alternative<MatchingResult>(solve(build(svi)))) {
        run_equilibrium_battery(svi, &repaired_stats);
        repaired = true;
      }
    }
    if (!repaired) unrepaired += 1;
  }

  const bool pass = bad_certificates == 0 && oracle_disagreements == 0 && unrepaired == 0 &&
                    repaired_stats.oracle_mismatches == 0 && repaired_stats.verify_failures == 0 &&
                    repaired_stats.duality_failures == 0 &&
                    repaired_stats.slackness_failures == 0 && repaired_stats.alpha_failures == 0;
  report(5, pass,
         "200 planted deficiencies certify, match the oracle, and clear after stretching",
         std::to_string(bad_certificates) + " bad certificates, " +
             std::to_string(oracle_disagreements) + " oracle disagreements, " +
             std::to_string(unrepaired) + " unrepaired");
}

void criterion_6() {
  const std::string instance_path = (g_scratch / "day3000.json").string();
  const std::string report_path = (g_scratch / "day3000_report.json").string();

  GenConfig cfg;
  cfg.seed = 20260809;
  cfg.flights = 3000;
  cfg.slots = 288;
  cfg.capacity_profile = GenConfig::CapacityProfile::Peaked;
  cfg.window_base = 12;
  cfg.alpha_lo = 0;
  cfg.alpha_hi = 2000;
  const std::string instance_text = io::emit_instance_text(generate_instance(cfg));
  testutil::spit(instance_path, instance_text);

  const auto start = std::chrono::steady_clock::now();
  auto run = testutil::run_process("'" + g_binary + "' solve --instance '" + instance_path +
                                   "' --out '" + report_path + "' 2>/dev/null");
  const double elapsed = seconds_since(start);

  std::int64_t runs = -1;
  bool runs_ok = false;
  {
    auto result = io::run_solve_pipeline(instance_text, {});
    if (auto* success = std::get_if<io::PipelineSuccess>(&result)) {
      runs = success->matching.shortest_path_runs;
      runs_ok = runs <= cfg.flights + 1;
    }
  }

  char detail[160];
  std::snprintf(detail, sizeof(detail), "end-to-end %.2fs, %lld shortest-path runs for %lld flights",
                elapsed, static_cast<long long>(runs), static_cast<long long>(cfg.flights));
  report(6, run.exit_code == 0 && elapsed < 10.0 && runs_ok,
         "3000 flights over a 288-slot day clear in under 10 seconds", detail);
}

void criterion_7() {
  const std::string golden = g_fixtures + "/golden_instance.json";
  auto solve_a = testutil::run_process("'" + g_binary + "' solve --instance '" + golden + "'");
  auto solve_b = testutil::run_process("'" + g_binary + "' solve --instance '" + golden + "'");
  const std::string gen_cmd = "'" + g_binary +
                              "' gen --seed 11 --flights 200 --slots 96 --capacity-profile peaked "
                              "--alpha-range 0..800 --pct-piecewise 30 --window-base 8";
  auto gen_a = testutil::run_process(gen_cmd);
  auto gen_b = testutil::run_process(gen_cmd);

  const bool pass = solve_a.exit_code == 0 && solve_a.output == solve_b.output &&
                    gen_a.exit_code == 0 && !gen_a.output.empty() && gen_a.output == gen_b.output;
  report(7, pass, "repeated solve and gen runs are byte-identical", "");
}

void criterion_8() {
  // A flight whose delay turns steep after 6 slots (30 minutes on a 5-minute
  // grid), competing with flights critical enough to push it to the knee but
  // never past it.
  testutil::InstanceBuilder b(std::vector<std::int64_t>(10, 1));
  b.flight("STEEP", 0, 100, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
           DelayProfile::piecewise({{0, 0}, {6, 6}, {8, 26}}));
  for (int i = 0; i < 6; ++i) {
    b.flight("RIVAL" + std::to_string(i), 0, 150, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  }
  auto vi = b.validated();

  auto solved = solve(build(vi));
  auto truth = oracle::brute_force_optimum(vi);
  bool pass = std::holds_alternative<MatchingResult>(solved) &&
              std::holds_alternative<oracle::Optimum>(truth);
  std::string detail;
  if (pass) {
    const auto& match = std::get<MatchingResult>(solved);
    const auto& opt = std::get<oracle::Optimum>(truth);
    const std::int64_t steep_delay = match.schedule.assignment.at("STEEP").index;
    pass = match.flow_cost == opt.best_cost && steep_delay <= 6;

    // Oracle enumeration of the steep region: forcing the flight past the
    // knee is strictly costlier, so landing there can never be optimal.
    Instance forced = vi.get();
    forced.windows[0].slots = {SlotId{7}, SlotId{8}, SlotId{9}};
    auto forced_r = validate_instance(forced);
    pass = pass && std::holds_alternative<ValidatedInstance>(forced_r);
    if (pass) {
      auto forced_truth =
          oracle::brute_force_optimum(std::get<ValidatedInstance>(forced_r));
      pass = std::holds_alternative<oracle::Optimum>(forced_truth) &&
             std::get<oracle::Optimum>(forced_truth).best_cost > opt.best_cost;
    }
    // Every enumerated optimum keeps the flight at or before the knee.
    pass = pass && !opt.all_optimal_truncated;
    for (const Schedule& s : opt.all_optimal) {
      pass = pass && s.assignment.at("STEEP").index <= 6;
    }
    detail = "steep flight lands at delay " + std::to_string(steep_delay) + " of 6 tolerable";
  }
  report(8, pass, "a steepening delay profile pins the flight at its knee, never past it", detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: acceptance <slotmarket-binary> <fixtures-dir>\n");
    return 2;
  }
  g_binary = argv[1];
  g_fixtures = argv[2];
  g_scratch = std::filesystem::temp_directory_path() / "slotmarket_acceptance";
  std::filesystem::create_directories(g_scratch);

  criteria_1_to_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();

  std::filesystem::remove_all(g_scratch);
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
