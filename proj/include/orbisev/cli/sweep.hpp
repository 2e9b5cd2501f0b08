#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "orbisev/cli/report.hpp"
#include "orbisev/groups/groups.hpp"

namespace orbisev::cli {

inline constexpr const char* kSweepSchema = "orbisev.sweep/1";

// Coefficients drawn for random invariants, in draw order.
inline constexpr int kSweepCoefficients[] = {-3, -2, -1, 1, 2, 3};

// Products of the group's invariant generators of total degree in
// [1, max_degree], ordered by (degree, exponent vector).
std::vector<exactalg::BiPoly> invariant_monomials(const groups::GroupData& group, int max_degree);

// One random invariant: 1 + rng() % 4 terms, each a monomial from the list
// chosen by rng() % size times a coefficient chosen by rng() % 6. Uses only
// raw mt19937_64 outputs so streams agree across standard libraries.
exactalg::BiPoly random_invariant(std::mt19937_64& rng, const std::vector<exactalg::BiPoly>& monomials);

struct SweepOptions {
  std::string group = "A1";
  int max_degree = 6;
  int count = 100;         // evaluated instances wanted
  uint64_t seed = 42;
  int puiseux_order = 0;
  int threads = 0;         // 0: hardware concurrency
  int max_draws = 0;       // 0: 20 * count
};

struct SweepInstance {
  size_t draw = 0;  // index in the seeded draw sequence
  Report report;
};

struct SweepSummary {
  SweepOptions options;
  std::string group_label;
  int64_t rhs = 0;
  size_t draws = 0;
  size_t degenerate = 0;  // f or g cancelled to zero, or J = 0
  size_t type_zero = 0;
  std::vector<SweepInstance> instances;  // evaluated, in draw order
  std::vector<SweepInstance> errors;     // other per-job errors
  size_t reduced = 0, non_reduced = 0;
  std::optional<int64_t> min_margin_reduced, min_margin_non_reduced;
  std::vector<size_t> reduced_violations, non_reduced_violations;  // indices into instances
  size_t asymmetric = 0;
};

// Errors: InvalidArgument for bad parameters or when no invariant monomial
// has degree <= max_degree; group errors from build_group.
SweepSummary run_sweep(const SweepOptions& options);

Json to_json(const SweepSummary& s);

// 1 when any instance violates the inequality, else 0. Per-job errors are
// reported in the summary and do not change the status.
int exit_code(const SweepSummary& s);

}  // namespace orbisev::cli
