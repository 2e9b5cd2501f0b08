#include "orbisev/cli/report.hpp"

#include <chrono>

#include "orbisev/cli/parser.hpp"
#include "orbisev/groups/groups.hpp"

namespace orbisev::cli {

using exactalg::BiPoly;
using exactalg::ExtNat;
using exactalg::Rational;

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Equality: return "equality";
    case Verdict::Violation: return "VIOLATION";
    case Verdict::Error: return "error";
  }
  return "error";
}

namespace {

void evaluate(Report& r, const BiPoly& f, const BiPoly& g) {
  auto group = groups::build_group(r.job.group);
  r.group_label = group->label;
  r.group_order = group->order;
  r.group_classes = group->classes;
  if (!groups::is_invariant(f, *group))
    throw Error(ErrorKind::NotInvariant, "f is not invariant under " + group->label);
  if (!groups::is_invariant(g, *group))
    throw Error(ErrorKind::NotInvariant, "g is not invariant under " + group->label);

  cycles::CycleOptions options;
  options.order = r.job.puiseux_order;
  options.cross_check = r.job.oracle;
  r.result = cycles::evaluate_triple(f, g, options);
  r.rhs = groups::conjecture_rhs(*group).get_si();
  r.margin = r.result->triple - r.rhs;
  r.verdict = r.margin > 0 ? Verdict::Holds : r.margin == 0 ? Verdict::Equality : Verdict::Violation;
  r.reduced = true;
  for (const auto& c : r.result->ledger.jacobian.components) r.reduced &= c.multiplicity == 1;
  r.local_contribution = Rational(r.result->triple) / Rational(group->order);
  if (r.job.diagnostics && group->type == 'A')
    r.equality = cycles::equality_case_diagnostics(f, g, group->order);
  if (r.job.oracle) r.claim_ii = cycles::claim_ii_check(f, g);
}

template <class Fn>
Report guarded(const Job& job, Fn&& body) {
  Report r;
  r.job = job;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const SyntaxError& e) {
    r.error = ErrorInfo{e.kind(), e.what(), e.position()};
  } catch (const Error& e) {
    r.error = ErrorInfo{e.kind(), e.what(), std::nullopt};
  } catch (const std::exception& e) {
    r.error = ErrorInfo{ErrorKind::Internal, e.what(), std::nullopt};
  }
  if (r.error) {
    r.verdict = Verdict::Error;
    r.result.reset();
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Json ext(const ExtNat& x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

std::string rational_text(const Rational& q) { return q.get_str(); }

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

}  // namespace

Report run_check(const Job& job) {
  return guarded(job, [&](Report& r) {
    const auto field = parse_field(job.field);
    BiPoly f = parse_poly(job.f, field);
    BiPoly g = parse_poly(job.g, field);
    r.f_text = to_string(f);
    r.g_text = to_string(g);
    evaluate(r, f, g);
  });
}

Report run_check(Job job, const BiPoly& f, const BiPoly& g) {
  job.f = to_string(f);
  job.g = to_string(g);
  return guarded(job, [&](Report& r) {
    r.f_text = job.f;
    r.g_text = job.g;
    evaluate(r, f, g);
  });
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownSymbol:
    case ErrorKind::InvalidArgument:
    case ErrorKind::UnsupportedField:
      return 3;
    default:
      return 2;
  }
}

int exit_code(const Report& r) {
  if (r.error) return exit_code_for(r.error->kind);
  return r.verdict == Verdict::Violation ? 1 : 0;
}

std::string reproducer(const Job& job) {
  std::string s = "orbisev check --group " + shell_quote(job.group);
  if (job.field != "Q") s += " --field " + shell_quote(job.field);
  s += " -f " + shell_quote(job.f) + " -g " + shell_quote(job.g);
  if (job.puiseux_order > 0) s += " --puiseux-order " + std::to_string(job.puiseux_order);
  return s + " --json";
}

Json to_json(const Report& r) {
  Json d;
  d["schema"] = kReportSchema;
  Json job{{"group", r.job.group}, {"f", r.job.f}, {"g", r.job.g}, {"field", r.job.field},
           {"puiseux_order", r.job.puiseux_order}, {"oracle", r.job.oracle}};
  if (r.job.seed) job["seed"] = *r.job.seed;
  d["job"] = job;
  if (!r.f_text.empty()) d["input"] = {{"f", r.f_text}, {"g", r.g_text}};
  if (r.group_order > 0)
    d["group"] = {{"label", r.group_label}, {"order", r.group_order}, {"classes", r.group_classes}};

  if (r.result) {
    const auto& l = r.result->ledger;
    const auto& jd = l.jacobian;
    Json comps = Json::array();
    for (size_t k = 0; k < jd.components.size(); ++k) {
      const auto& c = jd.components[k];
      comps.push_back({{"index", k},
                       {"poly", to_string(c.poly)},
                       {"multiplicity", c.multiplicity},
                       {"divides_f", c.divides_f},
                       {"divides_g", c.divides_g},
                       {"pairing", l.component_pairing[k]},
                       {"beta", l.component_beta[k]}});
    }
    d["jacobian"] = {{"wedge", to_string(jd.jacobian)},
                     {"unit", to_string(jd.unit)},
                     {"reduced_curve", to_string(jd.h)},
                     {"components", comps}};
    d["common_factors"] = {{"c_f", to_string(l.c_f)}, {"c_g", to_string(l.c_g)}};
    Json branches = Json::array();
    for (const auto& b : l.branches)
      branches.push_back({{"component", b.component},
                          {"ramification", b.branch.multiplicity},
                          {"conjugates", b.branch.conjugacy_degree},
                          {"field", exactalg::field_description(b.branch.field)},
                          {"lift", cycles::lift_name(b.lift)},
                          {"beta", b.beta},
                          {"gamma", b.gamma},
                          {"pairing", b.pairing},
                          {"section_term", b.section_term},
                          {"u", to_string(b.branch.u_series, "t")},
                          {"v", to_string(b.branch.v_series, "t")}});
    d["branches"] = branches;
    d["m0"] = l.m0;
    d["triple"] = r.result->triple;
    d["swapped_triple"] = r.result->swapped_triple;
    d["symmetric"] = r.result->triple == r.result->swapped_triple;
    d["rhs"] = r.rhs;
    d["margin"] = r.margin;
    d["verdict"] = verdict_name(r.verdict);
    d["reduced"] = r.reduced;
    d["strict_hypothesis_violated"] = l.strict_hypothesis_violated;
    d["local_contribution"] = rational_text(r.local_contribution);
    if (r.equality)
      d["equality_diagnostics"] = {{"n", r.equality->n},
                                   {"jacobian_multiplicity", r.equality->jacobian_multiplicity},
                                   {"multiplicity_equals_n", r.equality->multiplicity_equals_n},
                                   {"transforms_smooth", r.equality->transforms_smooth},
                                   {"transforms_disjoint", r.equality->transforms_disjoint},
                                   {"criteria_met", r.equality->criteria_met},
                                   {"note", r.equality->note}};
    if (r.claim_ii)
      d["claim_ii"] = {{"applicable", r.claim_ii->applicable},
                       {"holds", r.claim_ii->holds},
                       {"lhs", ext(r.claim_ii->lhs)},
                       {"rhs", ext(r.claim_ii->rhs)},
                       {"detail", r.claim_ii->detail}};
    if (r.verdict == Verdict::Violation) d["reproducer"] = reproducer(r.job);
  }
  if (r.error) {
    d["verdict"] = error_kind_name(r.error->kind);
    Json e{{"kind", error_kind_name(r.error->kind)}, {"message", r.error->message}};
    if (r.error->position) e["position"] = *r.error->position;
    d["error"] = e;
  }
  if (r.job.timing) d["timing"] = {{"elapsed_ms", r.elapsed_ms}};
  return d;
}

std::vector<std::string> verify_report(const Json& d) {
  std::vector<std::string> issues;
  auto need = [&](const char* key) {
    if (!d.contains(key)) issues.push_back(std::string("missing field '") + key + "'");
    return d.contains(key);
  };
  if (d.value("schema", "") != kReportSchema) issues.push_back("unknown schema");
  if (d.contains("error")) {
    if (!d["error"].contains("kind") || d.value("verdict", "") != d["error"]["kind"])
      issues.push_back("verdict does not name the error kind");
    return issues;
  }
  if (!need("triple") || !need("swapped_triple") || !need("rhs") || !need("margin") ||
      !need("verdict") || !need("symmetric"))
    return issues;
  const int64_t triple = d["triple"], swapped = d["swapped_triple"], rhs = d["rhs"],
                margin = d["margin"];
  if (margin != triple - rhs) issues.push_back("margin != triple - rhs");
  const std::string expect = verdict_name(margin > 0    ? Verdict::Holds
                                          : margin == 0 ? Verdict::Equality
                                                        : Verdict::Violation);
  if (d["verdict"] != expect) issues.push_back("verdict inconsistent with margin");
  if (d["symmetric"].get<bool>() != (triple == swapped)) issues.push_back("symmetry flag is wrong");
  if (triple != swapped) issues.push_back("triple product is not symmetric in f and g");
  if (d.contains("group")) {
    const int64_t order = d["group"]["order"], classes = d["group"]["classes"];
    if (rhs != classes * order - 1) issues.push_back("rhs != classes * order - 1");
    if (d.contains("local_contribution") &&
        d["local_contribution"] != rational_text(Rational(triple) / Rational(order)))
      issues.push_back("local_contribution != triple / order");
  }
  return issues;
}

namespace {

std::string scalar_text(const Json& x) {
  if (x.is_string()) return x.get<std::string>();
  return x.dump();
}

bool is_scalar(const Json& x) { return !x.is_object() && !x.is_array(); }

void render(const Json& x, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  if (x.is_object()) {
    for (const auto& [k, v] : x.items()) {
      if (is_scalar(v)) {
        out += pad + k + ": " + scalar_text(v) + "\n";
      } else if (v.empty()) {
        out += pad + k + ": " + (v.is_array() ? "[]" : "{}") + "\n";
      } else {
        out += pad + k + ":\n";
        render(v, indent + 2, out);
      }
    }
  } else if (x.is_array()) {
    for (const auto& v : x) {
      if (is_scalar(v)) {
        out += pad + "- " + scalar_text(v) + "\n";
      } else {
        std::string inner;
        render(v, indent + 2, inner);
        if (inner.size() >= pad.size() + 2) inner.replace(indent, 2, "- ");
        out += inner.empty() ? pad + "- {}\n" : inner;
      }
    }
  } else {
    out += pad + scalar_text(x) + "\n";
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::string out;
  render(doc, 0, out);
  return out;
}

}  // namespace orbisev::cli
