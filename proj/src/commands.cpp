#include "decoreq/commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "decoreq/corpus.hpp"
#include "decoreq/parser.hpp"
#include "decoreq/script.hpp"
#include "decoreq/semantics.hpp"

namespace decoreq {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

MemorySignature load_signature(const std::string& path) {
  return parse_signature(read_file(path));
}

nlohmann::json store_json(const MemorySignature& sig, const Store& s) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t k = 0; k < sig.locations().size(); ++k) out[sig.locations()[k]] = s.values[k];
  return out;
}

nlohmann::json counterexample_json(const MemorySignature& sig, const Counterexample& cex) {
  return nlohmann::json{{"input", to_string(cex.input)},
                        {"store", store_json(sig, cex.store)},
                        {"lhs_result", to_string(cex.lhs_result)},
                        {"rhs_result", to_string(cex.rhs_result)},
                        {"lhs_store", store_json(sig, cex.lhs_store)},
                        {"rhs_store", store_json(sig, cex.rhs_store)}};
}

} // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Report cmd_check_kind(const std::string& term_file, const std::string& sig_file) {
  auto start = Clock::now();
  MemorySignature sig = load_signature(sig_file);
  Report report;
  report.command = "check-kind";
  try {
    Term t = parse_term(read_file(term_file), sig);
    Kind k = infer_kind(t);
    report.ok = true;
    report.details = {{"term", to_string(t)}, {"kind", to_string(k)}};
    report.text = "kind: " + to_string(k);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    report.ok = false;
    report.details = {{"error", to_string(e.kind())}, {"message", e.message()}};
    report.text = std::string("error: ") + e.what();
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

namespace {

Report check_script(const ProofScript& script, const MemorySignature& sig,
                    Clock::time_point start) {
  Report report;
  report.command = "check-proof";
  Verdict v = check_proof(script.body, sig);
  if (v.ok) {
    report.ok = true;
    report.details = {{"status", "ok"}, {"conclusion", to_string(*v.conclusion)}};
    report.text = "proof ok: " + to_string(*v.conclusion);
  } else {
    report.ok = false;
    report.details = {{"status", "rejected"},
                      {"failing_path", v.rejection->path},
                      {"reason", to_string(v.rejection->reason)},
                      {"message", v.rejection->message}};
    report.text = "proof rejected at " + v.rejection->path + ": " +
                  to_string(v.rejection->reason) + " (" + v.rejection->message + ")";
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

} // namespace

Report cmd_check_proof(const std::string& script_file, const std::string& sig_file) {
  auto start = Clock::now();
  MemorySignature sig = load_signature(sig_file);
  try {
    ProofScript script = load_proof_script(script_file, sig);
    return check_script(script, sig, start);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    // A derived form in the script refused to expand (bad kinds, clashing
    // locations, ...). That is a failed check, not a parse error.
    Report report;
    report.command = "check-proof";
    report.ok = false;
    report.details = {{"status", "rejected"},
                      {"failing_path", "(while expanding a derived form)"},
                      {"reason", to_string(e.kind())},
                      {"message", e.message()}};
    report.text = std::string("proof rejected: ") + e.what();
    report.elapsed_ms = ms_since(start);
    return report;
  }
}

Report cmd_validate(const std::string& eq_file, const std::string& sig_file) {
  auto start = Clock::now();
  MemorySignature sig = load_signature(sig_file);
  Report report;
  report.command = "validate";
  Equation eq = parse_equation(read_file(eq_file), sig);
  SemanticResult res = check_semantic(eq, sig);
  report.ok = res.holds;
  report.details = {{"mode", to_string(eq.mode)},
                    {"holds", res.holds},
                    {"cases", res.cases_checked},
                    {"equation", to_string(eq)}};
  if (res.holds) {
    report.text = "holds (" + to_string(eq.mode) + ", " + std::to_string(res.cases_checked) +
                  " cases): " + to_string(eq);
  } else {
    report.details["counterexample"] = counterexample_json(sig, *res.counterexample);
    const Counterexample& cex = *res.counterexample;
    report.text = "fails: input " + to_string(cex.input) + ", store " +
                  sig.store_to_string(cex.store) + "; lhs -> " + to_string(cex.lhs_result) +
                  " store " + sig.store_to_string(cex.lhs_store) + ", rhs -> " +
                  to_string(cex.rhs_result) + " store " + sig.store_to_string(cex.rhs_store);
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

Report cmd_replay(const std::vector<std::string>& paths, const std::string& sig_file) {
  auto start = Clock::now();
  MemorySignature sig = load_signature(sig_file);
  std::vector<std::string> files;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<std::string> here;
      for (const auto& entry : fs::directory_iterator(p))
        if (entry.is_regular_file() && entry.path().extension() == ".proof")
          here.push_back(entry.path().string());
      std::sort(here.begin(), here.end());
      files.insert(files.end(), here.begin(), here.end());
    } else {
      files.push_back(p);
    }
  }
  if (files.empty()) fail(ErrorKind::ParseError, "nothing to replay");

  Report report;
  report.command = "replay";
  report.ok = true;
  nlohmann::json entries = nlohmann::json::array();
  std::ostringstream text;
  std::size_t ok_count = 0;
  for (const auto& file : files) {
    nlohmann::json entry{{"file", file}};
    std::string line = file + ": ";
    bool entry_ok = false;
    try {
      ProofScript script = load_proof_script(file, sig);
      Verdict v = check_proof(script.body, sig);
      if (!v.ok) {
        entry["proof"] = "rejected";
        entry["failing_path"] = v.rejection->path;
        entry["reason"] = to_string(v.rejection->reason);
        line += "proof rejected at " + v.rejection->path;
      } else {
        SemanticResult sem = check_semantic(script.goal, sig);
        entry["proof"] = "ok";
        entry["semantic"] = sem.holds ? "holds" : "fails";
        entry_ok = sem.holds;
        line += sem.holds ? "ok (proof checked, goal holds semantically)"
                          : "proof checked but the goal FAILS semantically";
      }
    } catch (const Error& e) {
      entry["proof"] = "error";
      entry["reason"] = to_string(e.kind());
      entry["message"] = e.message();
      line += std::string("error: ") + e.what();
    }
    entry["ok"] = entry_ok;
    if (entry_ok) ++ok_count;
    report.ok = report.ok && entry_ok;
    entries.push_back(entry);
    text << line << "\n";
  }
  text << ok_count << "/" << files.size() << " scripts ok";
  report.details = {{"scripts", entries}, {"total", files.size()}, {"ok_count", ok_count}};
  report.text = text.str();
  report.elapsed_ms = ms_since(start);
  return report;
}

} // namespace decoreq
