#pragma once

#include <string>
#include <vector>

#include "decoreq/report.hpp"

namespace decoreq {

// Implementations of the CLI commands, shared by the command-line driver,
// the acceptance suite and the python bindings. Each takes file paths,
// never pre-parsed objects, so they exercise the full text surface.
// Parse/usage problems throw Error{ParseError}; everything else lands in
// the report.

Report cmd_check_kind(const std::string& term_file, const std::string& sig_file);
Report cmd_check_proof(const std::string& script_file, const std::string& sig_file);
Report cmd_validate(const std::string& eq_file, const std::string& sig_file);
/// Replays every script: proof check plus semantic validation of the goal.
/// `paths` may mix .proof files and directories (scanned non-recursively,
/// sorted).
Report cmd_replay(const std::vector<std::string>& paths, const std::string& sig_file);

std::string read_file(const std::string& path);

} // namespace decoreq
