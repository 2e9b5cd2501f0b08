#include "orbisev/cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace orbisev::cli {

using exactalg::BiPoly;
using exactalg::FieldElement;

std::vector<BiPoly> invariant_monomials(const groups::GroupData& group, int max_degree) {
  const auto& gens = group.invariants;
  std::vector<int> deg;
  for (const auto& p : gens) deg.push_back(p.total_degree());
  std::vector<std::pair<int, std::vector<int>>> exps;
  std::vector<int> e(gens.size(), 0);
  // Odometer over exponent vectors with bounded total degree.
  while (true) {
    int d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += e[i] * deg[i];
    if (d >= 1 && d <= max_degree) exps.push_back({d, e});
    size_t i = 0;
    for (; i < e.size(); ++i) {
      ++e[i];
      int t = 0;
      for (size_t j = 0; j < e.size(); ++j) t += e[j] * deg[j];
      if (t <= max_degree) break;
      e[i] = 0;
    }
    if (i == e.size()) break;
  }
  std::sort(exps.begin(), exps.end());
  std::vector<BiPoly> out;
  for (const auto& [d, ex] : exps) {
    BiPoly m = BiPoly(FieldElement(1));
    for (size_t i = 0; i < ex.size(); ++i) m = m * gens[i].pow(ex[i]);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  return out;
}

BiPoly random_invariant(std::mt19937_64& rng, const std::vector<BiPoly>& monomials) {
  BiPoly p;
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < terms; ++i) {
    const BiPoly& m = monomials[rng() % monomials.size()];
    const int c = kSweepCoefficients[rng() % std::size(kSweepCoefficients)];
    p += BiPoly(FieldElement(c)) * m;
  }
  return p;
}

namespace {

void run_parallel(size_t n, int threads, const std::function<void(size_t)>& work) {
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<size_t>(threads, n));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < n;) work(i);
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace

SweepSummary run_sweep(const SweepOptions& options) {
  if (options.count < 1) throw Error(ErrorKind::InvalidArgument, "count must be at least 1");
  if (options.max_degree < 1) throw Error(ErrorKind::InvalidArgument, "max_degree must be at least 1");
  auto group = groups::build_group(options.group);
  const auto monomials = invariant_monomials(*group, options.max_degree);
  if (monomials.empty())
    throw Error(ErrorKind::InvalidArgument, "no invariant of " + group->label + " has degree <= " +
                                                std::to_string(options.max_degree));

  SweepSummary s;
  s.options = options;
  s.group_label = group->label;
  s.rhs = groups::conjecture_rhs(*group).get_si();
  const size_t want = static_cast<size_t>(options.count);
  const size_t max_draws = options.max_draws > 0 ? options.max_draws : 20 * want;

  Job job;
  job.group = group->label;
  job.puiseux_order = options.puiseux_order;
  job.seed = options.seed;
  job.diagnostics = false;

  std::mt19937_64 rng(options.seed);
  while (s.instances.size() < want && s.draws < max_draws) {
    const size_t batch = std::min(want - s.instances.size(), max_draws - s.draws);
    std::vector<std::pair<BiPoly, BiPoly>> draws;
    for (size_t i = 0; i < batch; ++i) {
      BiPoly f = random_invariant(rng, monomials);
      BiPoly g = random_invariant(rng, monomials);
      draws.emplace_back(std::move(f), std::move(g));
    }
    std::vector<std::optional<Report>> reports(batch);
    run_parallel(batch, options.threads, [&](size_t i) {
      const auto& [f, g] = draws[i];
      if (!f.is_zero() && !g.is_zero()) reports[i] = run_check(job, f, g);
    });
    for (size_t i = 0; i < batch && s.instances.size() < want; ++i) {
      const size_t index = s.draws++;
      if (!reports[i]) {
        ++s.degenerate;
        continue;
      }
      Report& r = *reports[i];
      if (r.error) {
        if (r.error->kind == ErrorKind::DegenerateWedge)
          ++s.degenerate;
        else if (r.error->kind == ErrorKind::TypeZeroBranch)
          ++s.type_zero;
        else
          s.errors.push_back({index, std::move(r)});
        continue;
      }
      const size_t pos = s.instances.size();
      auto& stratum_min = r.reduced ? s.min_margin_reduced : s.min_margin_non_reduced;
      stratum_min = stratum_min ? std::min(*stratum_min, r.margin) : r.margin;
      (r.reduced ? s.reduced : s.non_reduced)++;
      if (r.verdict == Verdict::Violation)
        (r.reduced ? s.reduced_violations : s.non_reduced_violations).push_back(pos);
      if (r.result->triple != r.result->swapped_triple) ++s.asymmetric;
      s.instances.push_back({index, std::move(r)});
    }
  }
  return s;
}

namespace {

Json optional_int(const std::optional<int64_t>& x) { return x ? Json(*x) : Json(nullptr); }

}  // namespace

Json to_json(const SweepSummary& s) {
  Json d;
  d["schema"] = kSweepSchema;
  d["parameters"] = {{"group", s.options.group},
                     {"max_degree", s.options.max_degree},
                     {"count", s.options.count},
                     {"seed", s.options.seed},
                     {"puiseux_order", s.options.puiseux_order},
                     {"generator", "mt19937_64"},
                     {"coefficients", kSweepCoefficients}};
  d["group"] = s.group_label;
  d["rhs"] = s.rhs;
  d["draws"] = s.draws;
  d["evaluated"] = s.instances.size();
  d["degenerate"] = s.degenerate;
  d["type_zero"] = s.type_zero;
  d["job_errors"] = s.errors.size();
  d["asymmetric"] = s.asymmetric;
  d["strata"] = {{"reduced",
                  {{"count", s.reduced},
                   {"min_margin", optional_int(s.min_margin_reduced)},
                   {"violations", s.reduced_violations.size()}}},
                 {"non_reduced",
                  {{"count", s.non_reduced},
                   {"min_margin", optional_int(s.min_margin_non_reduced)},
                   {"violations", s.non_reduced_violations.size()}}}};
  Json rows = Json::array();
  for (const auto& in : s.instances) {
    const Report& r = in.report;
    rows.push_back({{"draw", in.draw},
                    {"f", r.f_text},
                    {"g", r.g_text},
                    {"triple", r.result->triple},
                    {"m0", r.result->ledger.m0},
                    {"margin", r.margin},
                    {"reduced", r.reduced},
                    {"strict_hypothesis_violated", r.result->ledger.strict_hypothesis_violated},
                    {"verdict", verdict_name(r.verdict)}});
  }
  d["instances"] = rows;
  Json violations = Json::array();
  for (auto list : {&s.reduced_violations, &s.non_reduced_violations})
    for (size_t i : *list) violations.push_back(to_json(s.instances[i].report));
  d["violations"] = violations;
  Json errors = Json::array();
  for (const auto& e : s.errors)
    errors.push_back({{"draw", e.draw},
                      {"f", e.report.f_text},
                      {"g", e.report.g_text},
                      {"kind", error_kind_name(e.report.error->kind)},
                      {"message", e.report.error->message},
                      {"reproducer", reproducer(e.report.job)}});
  d["errors"] = errors;
  return d;
}

int exit_code(const SweepSummary& s) {
  return s.reduced_violations.empty() && s.non_reduced_violations.empty() ? 0 : 1;
}

}  // namespace orbisev::cli
