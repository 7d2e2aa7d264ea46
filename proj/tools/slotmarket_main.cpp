#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "slotmarket/generator.hpp"
#include "slotmarket/io.hpp"

namespace {

// Exit codes: 0 equilibrium ok / verified, 1 bad input (parse or validation),
// 2 infeasible market (certificate printed), 3 verification failed,
// 4 internal error.
constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitInternal = 4;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

struct SolveArgs {
  std::string instance_path;
  std::string out_path;
  std::string format = "full";
  std::int64_t window_base = 0;  // 0 = no policy
  std::int64_t pre_arrival = 0;
  std::int64_t slide = 0;
  std::int64_t stretch = 0;  // 0 = none
};

int run_solve(const SolveArgs& args) {
  auto text = read_file(args.instance_path);
  if (!text) {
    std::cerr << "error: cannot read instance file '" << args.instance_path << "'\n";
    return kExitBadInput;
  }

  slotmarket::io::PipelineOptions opts;
  if (args.window_base > 0) {
    opts.policy = slotmarket::WindowPolicy{args.window_base, args.pre_arrival};
  }
  opts.slide = args.slide;
  if (args.stretch > 0) opts.stretch = args.stretch;
  opts.summary = args.format == "summary";

  slotmarket::io::PipelineResult result = slotmarket::io::run_solve_pipeline(*text, opts);
  if (auto* err = std::get_if<slotmarket::io::PipelineInputError>(&result)) {
    std::cerr << "error: " << err->message << "\n";
    return kExitBadInput;
  }
  if (auto* infeasible = std::get_if<slotmarket::io::PipelineInfeasible>(&result)) {
    if (!write_output(args.out_path, infeasible->text)) {
      std::cerr << "error: cannot write '" << args.out_path << "'\n";
      return kExitBadInput;
    }
    std::cerr << "market is infeasible: " << infeasible->certificate.deficient_flights.size()
              << " flights compete for " << infeasible->certificate.reachable_slots.size()
              << " window slots, short by " << infeasible->certificate.shortfall
              << "; stretch the landing windows (--stretch N) or cancel flights\n";
    return kExitInfeasible;
  }
  auto& success = std::get<slotmarket::io::PipelineSuccess>(result);
  if (!write_output(args.out_path, success.report_text)) {
    std::cerr << "error: cannot write '" << args.out_path << "'\n";
    return kExitBadInput;
  }
  return kExitOk;
}

int run_verify(const std::string& instance_path, const std::string& report_path) {
  auto instance_text = read_file(instance_path);
  if (!instance_text) {
    std::cerr << "error: cannot read instance file '" << instance_path << "'\n";
    return kExitBadInput;
  }
  auto report_text = read_file(report_path);
  if (!report_text) {
    std::cerr << "error: cannot read report file '" << report_path << "'\n";
    return kExitBadInput;
  }

  slotmarket::io::VerifyOutcome outcome =
      slotmarket::io::run_verify_pipeline(*instance_text, *report_text);
  if (!outcome.input_ok) {
    std::cerr << "error: " << outcome.input_error << "\n";
    return kExitBadInput;
  }
  if (outcome.findings.empty()) {
    std::cout << "verified: schedule and prices are an equilibrium (duality gap 0)\n";
    return kExitOk;
  }
  for (const std::string& f : outcome.findings) {
    std::cout << "violation: " << f << "\n";
  }
  return kExitVerifyFailed;
}

struct GenArgs {
  slotmarket::GenConfig config;
  std::string capacity_profile = "uniform";
  std::string alpha_range = "0..500";
  std::string out_path;
};

int run_gen(GenArgs& args) {
  if (args.capacity_profile == "uniform") {
    args.config.capacity_profile = slotmarket::GenConfig::CapacityProfile::Uniform;
  } else if (args.capacity_profile == "peaked") {
    args.config.capacity_profile = slotmarket::GenConfig::CapacityProfile::Peaked;
  } else {
    std::cerr << "error: --capacity-profile must be uniform or peaked\n";
    return kExitBadInput;
  }
  const auto dots = args.alpha_range.find("..");
  if (dots == std::string::npos) {
    std::cerr << "error: --alpha-range must look like LO..HI (cents)\n";
    return kExitBadInput;
  }
  try {
    args.config.alpha_lo = std::stoll(args.alpha_range.substr(0, dots));
    args.config.alpha_hi = std::stoll(args.alpha_range.substr(dots + 2));
  } catch (const std::exception&) {
    std::cerr << "error: --alpha-range must look like LO..HI (cents)\n";
    return kExitBadInput;
  }

  std::string text;
  try {
    text = slotmarket::io::emit_instance_text(slotmarket::generate_instance(args.config));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  if (!write_output(args.out_path, text)) {
    std::cerr << "error: cannot write '" << args.out_path << "'\n";
    return kExitBadInput;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slotmarket: clears a day of airport landings into an equilibrium "
               "schedule and per-slot prices"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand(
      "solve", "Compute the equilibrium schedule and prices for an instance file");
  solve->add_option("--instance", solve_args.instance_path, "Instance file (JSON)")->required();
  solve->add_option("--window-base", solve_args.window_base,
                    "Window length (slots) for flights without an explicit window");
  solve->add_option("--pre-arrival", solve_args.pre_arrival,
                    "Slots before scheduled arrival admitted by the window policy");
  solve->add_option("--slide", solve_args.slide, "Slide every window this many slots later");
  solve->add_option("--stretch", solve_args.stretch,
                    "Extend every window by this many later slots");
  solve->add_option("--out", solve_args.out_path, "Write the report here instead of stdout");
  solve->add_option("--format", solve_args.format, "Report format")
      ->check(CLI::IsMember({"full", "summary"}));

  std::string verify_instance, verify_report;
  CLI::App* verify = app.add_subcommand(
      "verify", "Re-check a schedule and prices report against an instance");
  verify->add_option("--instance", verify_instance, "Instance file (JSON)")->required();
  verify->add_option("--report", verify_report, "Report file (JSON, full format)")->required();

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate a seeded scenario instance");
  gen->add_option("--seed", gen_args.config.seed, "RNG seed")->required();
  gen->add_option("--flights", gen_args.config.flights, "Number of flights")->required();
  gen->add_option("--slots", gen_args.config.slots, "Number of slots in the day")->required();
  gen->add_option("--capacity-profile", gen_args.capacity_profile, "uniform|peaked");
  gen->add_option("--alpha-range", gen_args.alpha_range, "Criticality range LO..HI in cents");
  gen->add_option("--pct-piecewise", gen_args.config.pct_piecewise,
                  "Percent of flights with a piecewise delay profile");
  gen->add_option("--window-base", gen_args.config.window_base, "Window length in slots");
  gen->add_option("--pre-arrival", gen_args.config.pre_arrival,
                  "Slots before scheduled arrival admitted");
  gen->add_option("--slot-minutes", gen_args.config.slot_minutes, "Minutes per slot");
  gen->add_option("--out", gen_args.out_path, "Write the instance here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (verify->parsed()) return run_verify(verify_instance, verify_report);
    if (gen->parsed()) return run_gen(gen_args);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitBadInput;
}
