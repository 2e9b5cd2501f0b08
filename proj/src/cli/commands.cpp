#include "orbisev/cli/commands.hpp"

#include "orbisev/cli/parser.hpp"
#include "orbisev/cli/sweep.hpp"
#include "orbisev/cycles/cycles.hpp"
#include "orbisev/germ/germ.hpp"
#include "orbisev/puiseux/puiseux.hpp"

namespace orbisev::cli {

using exactalg::BiPoly;
using exactalg::ExtNat;
using exactalg::FieldElement;

Json to_json(const groups::SeveriLedger& l) {
  Json d;
  d["schema"] = kLedgerSchema;
  d["k2"] = l.k2.get_str();
  d["euler"] = l.euler.get_str();
  d["singularities"] = l.singularities;
  d["chi"] = l.chi.get_str();
  d["e_orb"] = l.e_orb.get_str();
  d["correction"] = l.correction.get_str();
  d["kl_l2"] = l.kl_l2.get_str();
  d["deficit"] = l.deficit.get_str();
  d["target_holds"] = l.target_holds;
  return d;
}

Json run_ledger(const exactalg::Integer& k2, const exactalg::Integer& euler,
                const std::vector<std::string>& singularities) {
  return to_json(groups::severi_ledger(k2, euler, singularities));
}

Json groups_table(const std::vector<std::string>& labels) {
  Json rows = Json::array();
  for (const auto& label : labels) {
    auto g = groups::build_group(label);
    Json inv = Json::array();
    for (const auto& p : g->invariants) inv.push_back(to_string(p));
    rows.push_back({{"label", g->label},
                    {"order", g->order},
                    {"classes", g->classes},
                    {"class_sizes", g->class_sizes},
                    {"rhs", groups::conjecture_rhs(*g).get_si()},
                    {"field", field_name(g->field)},
                    {"invariants", inv}});
  }
  return {{"schema", kGroupsSchema}, {"groups", rows}};
}

BiPoly random_germ_poly(std::mt19937_64& rng, int max_degree, int terms) {
  BiPoly p;
  for (int i = 0; i < terms; ++i) {
    const int d = 1 + static_cast<int>(rng() % max_degree);
    const int a = static_cast<int>(rng() % (d + 1));
    const int c = kSweepCoefficients[rng() % std::size(kSweepCoefficients)];
    p.add_term({a, d - a}, FieldElement(c));
  }
  return p;
}

namespace {

std::string ext_text(const ExtNat& x) { return x.is_infinite() ? "inf" : std::to_string(x.value()); }

int draw_terms(std::mt19937_64& rng) { return 2 + static_cast<int>(rng() % 4); }

void intersection_checks(const OracleOptions& o, std::mt19937_64& rng, OracleSummary& s) {
  for (int tries = 0; s.intersection_checked < o.intersection_pairs && tries < 50 * o.intersection_pairs;
       ++tries) {
    BiPoly f = random_germ_poly(rng, o.max_degree, draw_terms(rng));
    BiPoly g = random_germ_poly(rng, o.max_degree, draw_terms(rng));
    if (f.is_zero() || g.is_zero()) continue;
    const ExtNat fulton = germ::fulton_intersection(f, g);
    if (fulton.is_infinite()) {
      ++s.intersection_skipped_infinite;
      continue;
    }
    ++s.intersection_checked;
    const ExtNat res = germ::resultant_intersection(f, g);
    const auto quot = germ::quotient_dimension_oracle(f, g);
    if (quot.overflow) ++s.oracle_overflow;
    if (res != fulton || quot.overflow || quot.dimension != fulton.value())
      s.mismatches.push_back({"intersection", to_string(f), to_string(g),
                              "fulton " + ext_text(fulton) + ", resultant " + ext_text(res) +
                                  ", quotient " +
                                  (quot.overflow ? "overflow" : std::to_string(quot.dimension))});
  }
}

BiPoly random_squarefree(std::mt19937_64& rng, int max_degree) {
  while (true) {
    BiPoly p = random_germ_poly(rng, max_degree, draw_terms(rng));
    if (p.is_zero()) continue;
    BiPoly s = exactalg::squarefree_part(p);
    if (s.constant_term().is_zero() && !s.is_constant()) return s;
  }
}

void master_law_checks(const OracleOptions& o, std::mt19937_64& rng, OracleSummary& s) {
  const int deg = std::min(o.max_degree, 5);
  while (s.master_law_checked < o.master_law_pairs) {
    BiPoly f = random_squarefree(rng, deg);
    BiPoly h = random_germ_poly(rng, deg, draw_terms(rng));
    if (h.is_zero()) continue;
    ++s.master_law_checked;
    ExtNat sum(0);
    for (const auto& b : puiseux::branches(germ::GermCurve(f)))
      sum += b.conjugacy_degree * puiseux::branch_order(b, h);
    const ExtNat direct = germ::fulton_intersection(f, h);
    if (sum != direct)
      s.mismatches.push_back({"master_law", to_string(f), to_string(h),
                              "branch sum " + ext_text(sum) + ", intersection " + ext_text(direct)});
  }
}

// The generic value of I_0(f_u + w f_v, g_u + w g_v) is the minimum over
// enough specializations of w.
void fiber_checks(const OracleOptions& o, std::mt19937_64& rng, OracleSummary& s) {
  const int deg = std::min(o.max_degree, 5);
  for (int tries = 0; s.fiber_checked < o.fiber_pairs && tries < 50 * o.fiber_pairs; ++tries) {
    BiPoly f = random_germ_poly(rng, deg, draw_terms(rng));
    BiPoly g = random_germ_poly(rng, deg, draw_terms(rng));
    if (f.is_zero() || g.is_zero() || f.is_constant() || g.is_constant()) continue;
    if (exactalg::jacobian(f, g).is_zero()) continue;
    int64_t m0;
    try {
      m0 = cycles::fiber_multiplicity_m0(f, g);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ImproperCycle) throw;
      ++s.fiber_improper;
      continue;
    }
    ++s.fiber_checked;
    ExtNat best = ExtNat::infinity();
    const BiPoly fu = exactalg::derivative(f, exactalg::Var::U), fv = exactalg::derivative(f, exactalg::Var::V);
    const BiPoly gu = exactalg::derivative(g, exactalg::Var::U), gv = exactalg::derivative(g, exactalg::Var::V);
    for (int w : {2, -3, 5, 7, -11, 13, 17}) {
      const BiPoly c = BiPoly(FieldElement(w));
      best = std::min(best, germ::fulton_intersection(fu + c * fv, gu + c * gv));
    }
    if (best != ExtNat(m0))
      s.mismatches.push_back({"fiber_multiplicity", to_string(f), to_string(g),
                              "m0 " + std::to_string(m0) + ", specialization " + ext_text(best)});
  }
}

}  // namespace

OracleSummary run_oracle(const OracleOptions& options) {
  OracleSummary s;
  s.options = options;
  std::mt19937_64 rng(options.seed);
  intersection_checks(options, rng, s);
  master_law_checks(options, rng, s);
  fiber_checks(options, rng, s);
  return s;
}

Json to_json(const OracleSummary& s) {
  Json d;
  d["schema"] = kOracleSchema;
  d["parameters"] = {{"seed", s.options.seed},
                     {"max_degree", s.options.max_degree},
                     {"intersection_pairs", s.options.intersection_pairs},
                     {"master_law_pairs", s.options.master_law_pairs},
                     {"fiber_pairs", s.options.fiber_pairs}};
  d["intersection"] = {{"checked", s.intersection_checked},
                       {"skipped_infinite", s.intersection_skipped_infinite},
                       {"quotient_overflow", s.oracle_overflow}};
  d["master_law"] = {{"checked", s.master_law_checked}};
  d["fiber_multiplicity"] = {{"checked", s.fiber_checked}, {"improper", s.fiber_improper}};
  Json mm = Json::array();
  for (const auto& m : s.mismatches)
    mm.push_back({{"check", m.check}, {"f", m.f}, {"g", m.g}, {"detail", m.detail}});
  d["mismatches"] = mm;
  d["agree"] = s.mismatches.empty();
  return d;
}

}  // namespace orbisev::cli
