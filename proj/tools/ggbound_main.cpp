// Command-line front end: catalog inspection, hypothesis checks, identity
// checks, single-bound evaluation, grid sweeps and tightness search.
//
// Exit codes: 0 = all checks passed, 1 = at least one violation or residual
// failure, 2 = usage or configuration error.

#include <cmath>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ggbound/bounds.hpp"
#include "ggbound/errors.hpp"
#include "ggbound/function_catalog.hpp"
#include "ggbound/hypothesis.hpp"
#include "ggbound/identities.hpp"
#include "ggbound/sweep.hpp"

namespace {

struct FamilyOptions {
  std::string family;
  double c = 0, alpha = 0, beta = 0, value = 0, slope = 0, intercept = 0;
  CLI::Option *c_opt = nullptr, *alpha_opt = nullptr, *beta_opt = nullptr,
              *value_opt = nullptr, *slope_opt = nullptr, *intercept_opt = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "function family (power, exp_reciprocal, exp_decay, quadratic, linear, constant)")
        ->required();
    c_opt = cmd->add_option("--c", c, "scale parameter of the power family");
    alpha_opt = cmd->add_option("--alpha", alpha, "exponent of the power family");
    beta_opt = cmd->add_option("--beta", beta, "parameter of the exp_reciprocal family");
    value_opt = cmd->add_option("--value", value, "value of the constant family");
    slope_opt = cmd->add_option("--slope", slope, "slope of the linear family");
    intercept_opt = cmd->add_option("--intercept", intercept, "intercept of the linear family");
  }

  ggbound::FunctionTriple make() const {
    ggbound::ParamList params;
    if (c_opt->count()) params.emplace_back("c", c);
    if (alpha_opt->count()) params.emplace_back("alpha", alpha);
    if (beta_opt->count()) params.emplace_back("beta", beta);
    if (value_opt->count()) params.emplace_back("value", value);
    if (slope_opt->count()) params.emplace_back("slope", slope);
    if (intercept_opt->count()) params.emplace_back("intercept", intercept);
    return ggbound::make_from_family(family, params);
  }

  ggbound::EntrySpec entry_spec() const {
    ggbound::ParamList params;
    if (c_opt->count()) params.emplace_back("c", c);
    if (alpha_opt->count()) params.emplace_back("alpha", alpha);
    if (beta_opt->count()) params.emplace_back("beta", beta);
    if (value_opt->count()) params.emplace_back("value", value);
    if (slope_opt->count()) params.emplace_back("slope", slope);
    if (intercept_opt->count()) params.emplace_back("intercept", intercept);
    return {family, params};
  }
};

const char* gg_status_name(ggbound::GgStatus s) {
  switch (s) {
    case ggbound::GgStatus::yes: return "yes";
    case ggbound::GgStatus::no: return "no";
    case ggbound::GgStatus::unknown: return "unknown";
  }
  return "?";
}

const char* role_name(ggbound::CatalogRole r) {
  switch (r) {
    case ggbound::CatalogRole::hypothesis_satisfying: return "hypothesis_satisfying";
    case ggbound::CatalogRole::hypothesis_violating: return "hypothesis_violating";
    case ggbound::CatalogRole::degenerate: return "degenerate";
  }
  return "?";
}

int run_catalog_list() {
  std::printf("%-28s %-22s %-12s %s\n", "name", "role", "gg(|f'|^q)", "gg(|f''|^q)");
  for (const auto& entry : ggbound::catalog_list()) {
    std::printf("%-28s %-22s %-12s %s\n", entry.triple.name.c_str(),
                role_name(entry.intended_role),
                gg_status_name(entry.triple.first_order_gg),
                gg_status_name(entry.triple.second_order_gg));
  }
  return 0;
}

int run_check(const FamilyOptions& fam, double a, double b, double q, int order,
              std::size_t grid) {
  const ggbound::FunctionTriple triple = fam.make();
  const auto deriv_order =
      order == 1 ? ggbound::DerivOrder::first : ggbound::DerivOrder::second;
  const ggbound::CheckReport report =
      ggbound::check_hypotheses(triple, a, b, q, deriv_order, grid);
  std::printf("check %s |f%s|^q on [%.9g, %.9g], q=%.9g\n", triple.name.c_str(),
              order == 1 ? "'" : "''", a, b, q);
  std::printf("  %s  worst_violation=%.9g tolerance=%.9g samples=%zu zero_samples=%zu\n",
              report.passed ? "PASS" : "FAIL", report.worst_violation,
              report.tolerance, report.samples_used, report.zero_samples);
  if (!report.passed) {
    if (std::isnan(report.witness.t))
      std::printf("  witness: x1=%.9g x2=%.9g\n", report.witness.x, report.witness.y);
    else
      std::printf("  witness: x=%.9g y=%.9g t=%.9g\n", report.witness.x,
                  report.witness.y, report.witness.t);
  }
  return report.passed ? 0 : 1;
}

int run_identity(const FamilyOptions& fam, int lemma, const std::string& variant,
                 double a, double b, double x, double tol) {
  const ggbound::FunctionTriple triple = fam.make();
  const ggbound::IdentityVariant v = variant == "paper-literal"
                                         ? ggbound::IdentityVariant::paper_literal
                                         : ggbound::IdentityVariant::corrected;
  const ggbound::EvalConfig cfg{a, b, x, std::nullopt};
  const ggbound::IdentityReport report =
      lemma == 1 ? ggbound::lemma1_check(triple, cfg, tol)
                 : ggbound::lemma2_check(triple, cfg, tol, v);
  const double scale = std::max({1.0, std::abs(report.lhs), std::abs(report.rhs)});
  const bool ok = std::abs(report.residual) <= std::max(10.0 * tol, 1e-12) * scale;
  std::printf("identity lemma%d (%s) %s a=%.9g b=%.9g x=%.9g\n", lemma,
              variant.c_str(), triple.name.c_str(), a, b, x);
  std::printf("  lhs=%.9g rhs=%.9g residual=%.9g  %s\n", report.lhs, report.rhs,
              report.residual, ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}

bool report_violates(const ggbound::BoundReport& report) {
  if (!std::isfinite(report.rhs)) return std::isfinite(report.lhs);
  return report.slack < -1e-12 * std::max(1.0, std::abs(report.rhs));
}

int run_bound(const FamilyOptions& fam, const std::string& theorem,
              const std::string& variant, double a, double b, double x,
              std::optional<double> p, std::optional<double> q, double tol) {
  const ggbound::FunctionTriple triple = fam.make();
  const bool wants_holder = theorem == "1" || theorem == "2" || theorem == "4";
  if (wants_holder && !p)
    throw CLI::ValidationError("--p is required for theorems 1, 2 and 4");
  if (!wants_holder && !q)
    throw CLI::ValidationError("--q is required for theorems 3, 5, c1 and c3");

  const ggbound::HolderPair exps =
      wants_holder ? ggbound::HolderPair::holder(*p)
                   : ggbound::HolderPair::power_mean(*q);
  const ggbound::EvalConfig cfg{a, b, x, exps};
  const ggbound::BoundVariant bv = variant == "paper-literal"
                                       ? ggbound::BoundVariant::paper_literal
                                       : ggbound::BoundVariant::standard;

  ggbound::BoundReport report;
  if (theorem == "1") report = ggbound::bound_thm1(triple, cfg, tol);
  else if (theorem == "2") report = ggbound::bound_thm2(triple, cfg, tol);
  else if (theorem == "3") report = ggbound::bound_thm3(triple, cfg, tol, bv);
  else if (theorem == "4") report = ggbound::bound_thm4(triple, cfg, tol);
  else if (theorem == "5") report = ggbound::bound_thm5(triple, cfg, tol);
  else if (theorem == "c1")
    report = ggbound::corollary_equal_endpoints(ggbound::DerivOrder::second,
                                                triple, cfg, *q, tol);
  else
    report = ggbound::corollary_equal_endpoints(ggbound::DerivOrder::first,
                                                triple, cfg, *q, tol);

  const bool violated = report_violates(report);
  std::printf("bound %s (%s) %s a=%.9g b=%.9g x=%.9g\n",
              ggbound::theorem_name(report.theorem),
              report.variant == ggbound::BoundVariant::standard ? "standard"
                                                                : "paper_literal",
              triple.name.c_str(), a, b, x);
  std::printf("  theorem=%s lhs=%.9g rhs=%.9g slack=%.9g ratio=%.9g\n",
              ggbound::theorem_name(report.theorem), report.lhs, report.rhs,
              report.slack, report.ratio);
  std::printf("  hypothesis=%s flags=%s  %s\n",
              report.hyp.passed ? "pass" : "FAIL",
              report.flags.any() ? report.flags.to_string().c_str() : "-",
              violated ? "VIOLATION" : "ok");
  return violated ? 1 : 0;
}

int run_sweep_cmd(const std::string& config_path, const std::string& out_path,
                  const std::string& format, int jobs) {
  ggbound::SweepConfig config = ggbound::parse_config_file(config_path);
  if (jobs > 0) config.parallelism = jobs;
  const ggbound::SweepResult result = ggbound::run_sweep(config);
  const ggbound::ReportFormat fmt = format == "json" ? ggbound::ReportFormat::json
                                                     : ggbound::ReportFormat::csv;
  ggbound::emit_report(result.rows, result.summary, fmt, out_path);

  const auto& s = result.summary;
  std::printf("sweep: %zu rows -> %s\n", s.rows, out_path.c_str());
  std::printf("  pass=%zu violation=%zu degenerate=%zu hyp_fail=%zu\n", s.pass,
              s.violation, s.degenerate, s.hyp_fail);
  std::printf("  min_slack=%.9g (%s)\n", s.min_slack,
              s.min_slack_witness.empty() ? "-" : s.min_slack_witness.c_str());
  std::printf("  max_ratio=%.9g (%s)\n", s.max_ratio,
              s.max_ratio_witness.empty() ? "-" : s.max_ratio_witness.c_str());
  return s.violation > 0 ? 1 : 0;
}

int run_tightness(const FamilyOptions& fam, const std::string& theorem, double a,
                  double b, std::optional<double> p, std::optional<double> q,
                  std::size_t grid, int iters, double tol) {
  const bool wants_holder = theorem == "1" || theorem == "2" || theorem == "4";
  if (wants_holder && !p)
    throw CLI::ValidationError("--p is required for theorems 1, 2 and 4");
  if (!wants_holder && !q)
    throw CLI::ValidationError("--q is required for theorems 3, 5, c1 and c3");
  const ggbound::HolderPair exps =
      wants_holder ? ggbound::HolderPair::holder(*p)
                   : ggbound::HolderPair::power_mean(*q);

  ggbound::SweepTarget target;
  if (theorem == "1") target = ggbound::SweepTarget::t1;
  else if (theorem == "2") target = ggbound::SweepTarget::t2;
  else if (theorem == "3") target = ggbound::SweepTarget::t3;
  else if (theorem == "4") target = ggbound::SweepTarget::t4;
  else if (theorem == "5") target = ggbound::SweepTarget::t5;
  else if (theorem == "c1") target = ggbound::SweepTarget::c1;
  else target = ggbound::SweepTarget::c3;

  const ggbound::SweepRow row = ggbound::tightness_search(
      target, fam.entry_spec(), {a, b}, exps, {grid, iters}, tol);
  std::printf("tightness %s %s on [%.9g, %.9g]\n", row.theorem.c_str(),
              row.entry.c_str(), a, b);
  std::printf("  theorem=%s x*=%.9g lhs=%.9g rhs=%.9g slack=%.9g ratio=%.9g flags=%s\n",
              row.theorem.c_str(), row.x, row.lhs, row.rhs, row.slack, row.ratio,
              row.flags.empty() ? "-" : row.flags.c_str());
  const bool violated = row.ratio > 1.0 + 1e-12;
  if (violated) std::printf("  ratio exceeds 1: bound violated at x*\n");
  return violated ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification toolkit for midpoint/trapezoid deviation bounds on "
               "functions with geometrically convex derivative powers"};
  app.require_subcommand(1);

  // catalog list
  auto* catalog_cmd = app.add_subcommand("catalog", "inspect the built-in function catalog");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->add_subcommand("list", "print all catalog entries");

  // check
  auto* check_cmd = app.add_subcommand("check", "sampled hypothesis check of |f^(n)|^q");
  FamilyOptions check_fam;
  check_fam.attach(check_cmd);
  double chk_a = 1, chk_b = 2, chk_q = 2;
  int chk_order = 2;
  std::size_t chk_grid = 33;
  check_cmd->add_option("--a", chk_a, "interval left end")->required();
  check_cmd->add_option("--b", chk_b, "interval right end")->required();
  check_cmd->add_option("--q", chk_q, "power applied to the derivative magnitude")->required();
  check_cmd->add_option("--order", chk_order, "derivative order (1 or 2)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  check_cmd->add_option("--grid", chk_grid, "grid size");

  // identity
  auto* identity_cmd = app.add_subcommand("identity", "evaluate both sides of an integral identity");
  FamilyOptions id_fam;
  id_fam.attach(identity_cmd);
  int id_lemma = 1;
  std::string id_variant = "corrected";
  double id_a = 0, id_b = 0, id_x = 0, id_tol = 1e-10;
  identity_cmd->add_option("--lemma", id_lemma, "identity to check (1 or 2)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  identity_cmd->add_option("--variant", id_variant, "corrected or paper-literal")
      ->check(CLI::IsMember({"corrected", "paper-literal"}));
  identity_cmd->add_option("--a", id_a)->required();
  identity_cmd->add_option("--b", id_b)->required();
  identity_cmd->add_option("--x", id_x)->required();
  identity_cmd->add_option("--tol", id_tol, "quadrature tolerance");

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "evaluate one deviation bound");
  FamilyOptions bound_fam;
  bound_fam.attach(bound_cmd);
  std::string bnd_theorem, bnd_variant = "standard";
  double bnd_a = 0, bnd_b = 0, bnd_x = 0, bnd_tol = 1e-10;
  std::optional<double> bnd_p, bnd_q;
  bound_cmd->add_option("--theorem", bnd_theorem, "1..5, c1 or c3")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "4", "5", "c1", "c3"}));
  bound_cmd->add_option("--variant", bnd_variant, "standard or paper-literal")
      ->check(CLI::IsMember({"standard", "paper-literal"}));
  bound_cmd->add_option("--a", bnd_a)->required();
  bound_cmd->add_option("--b", bnd_b)->required();
  bound_cmd->add_option("--x", bnd_x)->required();
  bound_cmd->add_option("--p", bnd_p, "Hoelder exponent (theorems 1, 2, 4)");
  bound_cmd->add_option("--q", bnd_q, "power-mean exponent (theorems 3, 5, c1, c3)");
  bound_cmd->add_option("--tol", bnd_tol, "quadrature tolerance");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "run a configured verification sweep");
  std::string sweep_config, sweep_out = "sweep.csv", sweep_format = "csv";
  int sweep_jobs = 0;
  sweep_cmd->add_option("--config", sweep_config, "JSON sweep configuration")->required();
  sweep_cmd->add_option("--out", sweep_out, "report output path");
  sweep_cmd->add_option("--format", sweep_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--jobs", sweep_jobs, "parallel row evaluation (overrides config)");

  // tightness
  auto* tight_cmd = app.add_subcommand("tightness", "search the evaluation point maximizing lhs/rhs");
  FamilyOptions tight_fam;
  tight_fam.attach(tight_cmd);
  std::string tight_theorem;
  double tight_a = 0, tight_b = 0, tight_tol = 1e-10;
  std::optional<double> tight_p, tight_q;
  std::size_t tight_grid = 33;
  int tight_iters = 20;
  tight_cmd->add_option("--theorem", tight_theorem, "1..5, c1 or c3")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "4", "5", "c1", "c3"}));
  tight_cmd->add_option("--a", tight_a)->required();
  tight_cmd->add_option("--b", tight_b)->required();
  tight_cmd->add_option("--p", tight_p, "Hoelder exponent");
  tight_cmd->add_option("--q", tight_q, "power-mean exponent");
  tight_cmd->add_option("--grid", tight_grid, "coarse grid size");
  tight_cmd->add_option("--iters", tight_iters, "golden-section iterations");
  tight_cmd->add_option("--tol", tight_tol, "quadrature tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (catalog_cmd->parsed()) return run_catalog_list();
    if (check_cmd->parsed())
      return run_check(check_fam, chk_a, chk_b, chk_q, chk_order, chk_grid);
    if (identity_cmd->parsed())
      return run_identity(id_fam, id_lemma, id_variant, id_a, id_b, id_x, id_tol);
    if (bound_cmd->parsed())
      return run_bound(bound_fam, bnd_theorem, bnd_variant, bnd_a, bnd_b, bnd_x,
                       bnd_p, bnd_q, bnd_tol);
    if (sweep_cmd->parsed())
      return run_sweep_cmd(sweep_config, sweep_out, sweep_format, sweep_jobs);
    if (tight_cmd->parsed())
      return run_tightness(tight_fam, tight_theorem, tight_a, tight_b, tight_p,
                           tight_q, tight_grid, tight_iters, tight_tol);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const ggbound::config_error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
