#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "orbisev/cycles/cycles.hpp"
#include "orbisev/error.hpp"

namespace orbisev::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "orbisev.report/1";

struct Job {
  std::string group = "A1";
  std::string f, g;
  std::string field = "Q";
  int puiseux_order = 0;
  bool oracle = false;       // cross-check pairings and check the Jacobian splitting identity
  std::optional<uint64_t> seed;  // echoed only; set by sweeps
  bool timing = false;       // wall-clock fields make output nondeterministic
  bool diagnostics = true;   // equality-case diagnostics for cyclic groups
};

enum class Verdict { Holds, Equality, Violation, Error };

std::string verdict_name(Verdict v);

struct ErrorInfo {
  ErrorKind kind = ErrorKind::Internal;
  std::string message;
  std::optional<size_t> position;  // parser errors
};

struct Report {
  Job job;
  std::string f_text, g_text;  // canonical serialization of the parsed input
  std::string group_label;
  int group_order = 0;
  int group_classes = 0;
  std::optional<cycles::TripleResult> result;
  int64_t rhs = 0;
  int64_t margin = 0;
  Verdict verdict = Verdict::Error;
  bool reduced = false;  // every Jacobian component has multiplicity 1
  exactalg::Rational local_contribution;
  std::optional<cycles::EqualityDiagnostics> equality;
  std::optional<cycles::ClaimIICheck> claim_ii;
  std::optional<ErrorInfo> error;
  double elapsed_ms = 0;
};

Report run_check(const Job& job);
// Same as run_check for already-parsed polynomials; job.f and job.g are
// overwritten with their canonical text.
Report run_check(Job job, const exactalg::BiPoly& f, const exactalg::BiPoly& g);

// 0 holds or equality, 1 violation, 2 mathematical error, 3 input error.
int exit_code(const Report& r);
int exit_code_for(ErrorKind kind);

Json to_json(const Report& r);

// Recomputes margin, verdict and the symmetry flag of a serialized report;
// returns the inconsistencies found (empty when the report checks out).
std::vector<std::string> verify_report(const Json& report);

// Shell command reproducing a job.
std::string reproducer(const Job& job);

// Indented plain-text rendering of any document produced by this module.
std::string render_text(const Json& doc);

}  // namespace orbisev::cli
