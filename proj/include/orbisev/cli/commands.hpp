#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "orbisev/cli/report.hpp"
#include "orbisev/groups/groups.hpp"

namespace orbisev::cli {

inline constexpr const char* kLedgerSchema = "orbisev.ledger/1";
inline constexpr const char* kGroupsSchema = "orbisev.groups/1";
inline constexpr const char* kOracleSchema = "orbisev.oracle/1";

Json to_json(const groups::SeveriLedger& l);
// Errors: NonIntegralChi, InvalidArgument for unknown labels.
Json run_ledger(const exactalg::Integer& k2, const exactalg::Integer& euler,
                const std::vector<std::string>& singularities);

// Order, class sizes, field and invariant generators for each label.
Json groups_table(const std::vector<std::string>& labels);

// Random polynomial through the origin: `terms` monomials of total degree in
// [1, max_degree] with coefficients from kSweepCoefficients.
exactalg::BiPoly random_germ_poly(std::mt19937_64& rng, int max_degree, int terms);

struct OracleOptions {
  uint64_t seed = 7;
  int max_degree = 6;
  int intersection_pairs = 200;  // pairs with finite intersection
  int master_law_pairs = 100;
  int fiber_pairs = 50;
};

struct OracleMismatch {
  std::string check;
  std::string f, g;
  std::string detail;
};

struct OracleSummary {
  OracleOptions options;
  int intersection_checked = 0, intersection_skipped_infinite = 0;
  int master_law_checked = 0;
  int fiber_checked = 0, fiber_improper = 0;
  int oracle_overflow = 0;  // quotient oracle hit its degree cap
  std::vector<OracleMismatch> mismatches;
};

// Cross-validation: Fulton, resultant and quotient-dimension intersection
// numbers; branch sums against intersection numbers; m0 against
// specializations of the fiber coordinate.
OracleSummary run_oracle(const OracleOptions& options);

Json to_json(const OracleSummary& s);

}  // namespace orbisev::cli
