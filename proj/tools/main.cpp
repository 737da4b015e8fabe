#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "decoreq/commands.hpp"
#include "decoreq/errors.hpp"

namespace {

int emit(const decoreq::Report& report, const std::string& format) {
  if (format == "json")
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.text << "\n";
  return report.exit_code();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"decoreq - proof checking and finite-store validation for the "
               "decorated equational logic of the global state effect"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  std::uint64_t seed = 20240101;
  app.add_option("--seed", seed,
                 "Seed for randomized checks (the batch commands are deterministic "
                 "and ignore it; kept for interface stability)");

  std::string sig_file;
  std::string input_file;
  std::vector<std::string> replay_paths;

  auto* check_kind = app.add_subcommand("check-kind", "Infer the decoration of a term file");
  check_kind->add_option("file", input_file, "Term file")->required();
  check_kind->add_option("--signature", sig_file, "Signature file")->required();

  auto* check_proof = app.add_subcommand("check-proof", "Check a proof script");
  check_proof->add_option("file", input_file, "Proof script")->required();
  check_proof->add_option("--signature", sig_file, "Signature file")->required();

  auto* validate = app.add_subcommand("validate", "Validate an equation over all finite stores");
  validate->add_option("file", input_file, "Equation file")->required();
  validate->add_option("--signature", sig_file, "Signature file")->required();

  auto* replay = app.add_subcommand("replay", "Check proof scripts and validate their goals");
  replay->add_option("paths", replay_paths, "Proof scripts or directories")->required();
  replay->add_option("--signature", sig_file, "Signature file")->required();

  for (auto* sub : {check_kind, check_proof, validate, replay}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check_kind->parsed()) return emit(decoreq::cmd_check_kind(input_file, sig_file), format);
    if (check_proof->parsed()) return emit(decoreq::cmd_check_proof(input_file, sig_file), format);
    if (validate->parsed()) return emit(decoreq::cmd_validate(input_file, sig_file), format);
    if (replay->parsed()) return emit(decoreq::cmd_replay(replay_paths, sig_file), format);
  } catch (const decoreq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == decoreq::ErrorKind::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
