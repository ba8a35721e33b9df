#include "lps/harness/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace lps::harness;

  CLI::App app{"Check almost-contact, LAP and LP-Sasakian structures and their hypersurfaces."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("lps-verify ") + kReportSchema);

  Overrides overrides;
  std::string format = "text";
  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--seed", overrides.seed, "Sampling seed");
    sub->add_option("--points", overrides.points, "Sample points per identity")->check(CLI::PositiveNumber);
    sub->add_option("--tol", overrides.tol, "Relative residual tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string target;
  std::optional<std::string> opt_target;
  std::string export_id;

  auto* check = app.add_subcommand("check-structure", "Run the structure suites on a registry id or config file");
  check->add_option("target", target, "Registry id or config path")->required();
  add_globals(check);
  auto* analyze = app.add_subcommand("analyze", "Analyze the hypersurfaces of a registry id or config file");
  analyze->add_option("target", target, "Registry id or config path")->required();
  add_globals(analyze);
  auto* verify = app.add_subcommand("verify-theorems", "Run every suite on a target, or on the whole registry");
  verify->add_option("target", opt_target, "Registry id or config path");
  add_globals(verify);
  auto* list = app.add_subcommand("list-examples", "List registry ids");
  list->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  auto* exp = app.add_subcommand("export-example", "Print a registry entry as a config document");
  exp->add_option("id", export_id, "Registry id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  const Format fmt = format == "json" ? Format::Json : Format::Text;
  try {
    if (*list) {
      std::cout << list_examples(fmt);
      return kExitPass;
    }
    if (*exp) {
      std::cout << export_example(export_id).dump(2) << "\n";
      return kExitPass;
    }
    Report report;
    if (*check) report = cmd_check_structure(target, overrides);
    else if (*analyze) report = cmd_analyze(target, overrides);
    else report = cmd_verify_theorems(opt_target, overrides);
    std::cout << emit_report(report, fmt);
    return report.passed() ? kExitPass : kExitFail;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const lps::sym::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
