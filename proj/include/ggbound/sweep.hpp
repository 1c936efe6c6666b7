#ifndef GGBOUND_SWEEP_HPP
#define GGBOUND_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ggbound/bounds.hpp"
#include "ggbound/errors.hpp"
#include "ggbound/function_catalog.hpp"
#include "ggbound/identities.hpp"

namespace ggbound {

enum class SweepTarget { t1, t2, t3, t4, t5, c1, c3, lemma1, lemma2 };

inline const char* sweep_target_name(SweepTarget t) {
  switch (t) {
    case SweepTarget::t1: return "T1";
    case SweepTarget::t2: return "T2";
    case SweepTarget::t3: return "T3";
    case SweepTarget::t4: return "T4";
    case SweepTarget::t5: return "T5";
    case SweepTarget::c1: return "C1";
    case SweepTarget::c3: return "C3";
    case SweepTarget::lemma1: return "lemma1";
    case SweepTarget::lemma2: return "lemma2";
  }
  return "?";
}

inline bool is_identity_target(SweepTarget t) {
  return t == SweepTarget::lemma1 || t == SweepTarget::lemma2;
}

// Hoelder-route targets consume p-mode exponents, power-mean-route targets
// consume q-mode exponents; identities consume none.
inline bool target_wants_holder(SweepTarget t) {
  return t == SweepTarget::t1 || t == SweepTarget::t2 || t == SweepTarget::t4;
}

struct EntrySpec {
  std::string family;
  ParamList params;
};

struct SweepConfig {
  std::vector<EntrySpec> entries;
  std::vector<std::pair<double, double>> intervals;
  std::vector<double> x_positions;  // relative, mapped to x = a + r (b - a)
  std::vector<HolderPair> exponents;
  std::vector<SweepTarget> theorems;
  std::vector<BoundVariant> variants{BoundVariant::standard};
  double tol = 1e-10;
  int parallelism = 1;
  std::uint64_t seed = 0;
};

struct SweepRow {
  std::string entry;   // family name
  std::string params;  // "c=1;alpha=2"
  double a = 0.0, b = 0.0, x = 0.0;
  double p = std::numeric_limits<double>::quiet_NaN();  // NaN = absent
  double q = std::numeric_limits<double>::quiet_NaN();
  std::string theorem;
  std::string variant;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  double slack = std::numeric_limits<double>::quiet_NaN();
  double ratio = std::numeric_limits<double>::quiet_NaN();
  int hyp_ok = -1;  // 1 pass, 0 fail, -1 not checked
  std::string flags;
};

struct SweepSummary {
  std::size_t rows = 0;
  std::size_t pass = 0;
  std::size_t violation = 0;
  std::size_t degenerate = 0;
  std::size_t hyp_fail = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  std::string min_slack_witness;
  double max_ratio = 0.0;
  std::string max_ratio_witness;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  SweepSummary summary;
};

namespace detail {

inline std::string sanitize_flag_text(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '\r' || c == ';') c = ' ';
  if (s.size() > 120) s.resize(120);
  return s;
}

inline std::string row_witness(const SweepRow& r) {
  std::string out = r.entry;
  if (!r.params.empty()) out += "(" + r.params + ")";
  char buf[160];
  std::snprintf(buf, sizeof buf, " [%g,%g] x=%g %s/%s", r.a, r.b, r.x,
                r.theorem.c_str(), r.variant.c_str());
  return out + buf;
}

inline const char* variant_name(BoundVariant v) {
  return v == BoundVariant::standard ? "standard" : "paper_literal";
}

inline const char* identity_variant_name(IdentityVariant v) {
  return v == IdentityVariant::corrected ? "corrected" : "paper_literal";
}

}  // namespace detail

// Identity rows carry the residual in `slack`; they count as violations when
// the residual exceeds 10 * tol (scaled). Bound rows violate when the slack
// dips below -1e-12 * max(1, rhs), or when the rhs is not even finite.
inline bool row_is_violation(const SweepRow& row, double tol) {
  if (row.theorem == "lemma1" || row.theorem == "lemma2") {
    const double scale =
        std::max({1.0, std::abs(row.lhs), std::abs(row.rhs)});
    return std::abs(row.slack) > std::max(10.0 * tol, 1e-12) * scale;
  }
  if (!std::isfinite(row.rhs)) return std::isfinite(row.lhs);
  return row.slack < -1e-12 * std::max(1.0, std::abs(row.rhs));
}

inline SweepSummary summarize(const std::vector<SweepRow>& rows, double tol) {
  SweepSummary s;
  s.rows = rows.size();
  for (const SweepRow& row : rows) {
    const bool error_row = row.flags.rfind("error:", 0) == 0;
    const bool violation = !error_row && row_is_violation(row, tol);
    if (violation)
      ++s.violation;
    else if (!error_row)
      ++s.pass;
    if (error_row || !row.flags.empty()) ++s.degenerate;
    if (row.hyp_ok == 0) ++s.hyp_fail;
    if (std::isfinite(row.slack) && row.slack < s.min_slack) {
      s.min_slack = row.slack;
      s.min_slack_witness = detail::row_witness(row);
    }
    if (row.ratio > s.max_ratio ||
        (std::isinf(row.ratio) && !std::isinf(s.max_ratio))) {
      s.max_ratio = row.ratio;
      s.max_ratio_witness = detail::row_witness(row);
    }
  }
  if (rows.empty()) s.min_slack = 0.0;
  return s;
}

namespace detail {

inline SweepRow bound_row(const FunctionTriple& triple, double a, double b,
                          double x, const HolderPair& exps, SweepTarget target,
                          BoundVariant variant, double tol) {
  SweepRow row;
  row.entry = triple.family;
  row.params = param_string(triple.params, ';');
  row.a = a;
  row.b = b;
  row.x = x;
  if (exps.has_p()) row.p = exps.p();
  row.q = exps.q();
  row.theorem = sweep_target_name(target);
  row.variant = variant_name(target == SweepTarget::t3 ? variant
                                                       : BoundVariant::standard);
  try {
    EvalConfig cfg{a, b, x, exps};
    BoundReport rep;
    switch (target) {
      case SweepTarget::t1: rep = bound_thm1(triple, cfg, tol); break;
      case SweepTarget::t2: rep = bound_thm2(triple, cfg, tol); break;
      case SweepTarget::t3: rep = bound_thm3(triple, cfg, tol, variant); break;
      case SweepTarget::t4: rep = bound_thm4(triple, cfg, tol); break;
      case SweepTarget::t5: rep = bound_thm5(triple, cfg, tol); break;
      case SweepTarget::c1:
        rep = corollary_equal_endpoints(DerivOrder::second, triple, cfg,
                                        exps.q(), tol);
        break;
      case SweepTarget::c3:
        rep = corollary_equal_endpoints(DerivOrder::first, triple, cfg,
                                        exps.q(), tol);
        break;
      default:
        throw std::logic_error("bound_row: identity target");
    }
    row.lhs = rep.lhs;
    row.rhs = rep.rhs;
    row.slack = rep.slack;
    row.ratio = rep.ratio;
    row.hyp_ok = rep.hyp.passed ? 1 : 0;
    row.flags = rep.flags.to_string();
  } catch (const std::exception& e) {
    row.flags = "error:" + sanitize_flag_text(e.what());
  }
  return row;
}

inline SweepRow identity_row(const FunctionTriple& triple, double a, double b,
                             double x, SweepTarget target,
                             IdentityVariant variant, double tol) {
  SweepRow row;
  row.entry = triple.family;
  row.params = param_string(triple.params, ';');
  row.a = a;
  row.b = b;
  row.x = x;
  row.theorem = sweep_target_name(target);
  row.variant = identity_variant_name(
      target == SweepTarget::lemma2 ? variant : IdentityVariant::corrected);
  try {
    EvalConfig cfg{a, b, x, std::nullopt};
    const IdentityReport rep =
        (target == SweepTarget::lemma1)
            ? lemma1_check(triple, cfg, tol)
            : lemma2_check(triple, cfg, tol, variant);
    row.lhs = rep.lhs;
    row.rhs = rep.rhs;
    row.slack = rep.residual;
    row.ratio = (rep.rhs == 0.0)
                    ? (rep.lhs == 0.0 ? 0.0
                                      : std::numeric_limits<double>::infinity())
                    : rep.lhs / rep.rhs;
  } catch (const std::exception& e) {
    row.flags = "error:" + sanitize_flag_text(e.what());
  }
  return row;
}

}  // namespace detail

inline void validate_config(const SweepConfig& config) {
  for (std::size_t i = 0; i < config.entries.size(); ++i) {
    try {
      make_from_family(config.entries[i].family, config.entries[i].params);
    } catch (const std::exception& e) {
      throw config_error("entries[" + std::to_string(i) + "]", e.what());
    }
  }
  bool has_bound_target = false;
  for (const SweepTarget t : config.theorems)
    has_bound_target = has_bound_target || !is_identity_target(t);
  for (std::size_t i = 0; i < config.intervals.size(); ++i) {
    const auto& [a, b] = config.intervals[i];
    if (!(std::isfinite(a) && std::isfinite(b) && a < b))
      throw config_error("intervals[" + std::to_string(i) + "]",
                         "requires finite a < b");
    if (has_bound_target && !(a > 0.0))
      throw config_error("intervals[" + std::to_string(i) + "]",
                         "bound theorems require 0 < a");
  }
  for (std::size_t i = 0; i < config.x_positions.size(); ++i) {
    const double r = config.x_positions[i];
    if (!(r >= 0.0 && r <= 1.0))
      throw config_error("x_positions[" + std::to_string(i) + "]",
                         "relative position must lie in [0, 1]");
  }
  if (!(config.tol >= 1e-14))
    throw config_error("tol", "must be >= 1e-14");
  if (config.parallelism < 1)
    throw config_error("parallelism", "must be >= 1");
  if (config.variants.empty())
    throw config_error("variants", "must not be empty");
}

// Runs the full cartesian grid. Row order is declaration order:
// entry, interval, x position, then per (e, i, x) first the identity targets
// (independent of exponents), then exponent x theorem x variant for the
// compatible bound targets. Rows may be computed concurrently but are
// buffered and returned in this order regardless of parallelism.
inline SweepResult run_sweep(const SweepConfig& config) {
  validate_config(config);

  std::vector<FunctionTriple> triples;
  triples.reserve(config.entries.size());
  for (const EntrySpec& e : config.entries)
    triples.push_back(make_from_family(e.family, e.params));

  std::vector<std::function<SweepRow()>> tasks;
  const double tol = config.tol;

  for (const FunctionTriple& triple : triples) {
    for (const auto& [a, b] : config.intervals) {
      const bool in_domain = triple.contains(a, b);
      for (const double r : config.x_positions) {
        const double x = std::clamp(a + r * (b - a), a, b);
        auto domain_error_row = [&, a, b, x](SweepTarget target,
                                             const char* variant) {
          SweepRow row;
          row.entry = triple.family;
          row.params = detail::param_string(triple.params, ';');
          row.a = a;
          row.b = b;
          row.x = x;
          row.theorem = sweep_target_name(target);
          row.variant = variant;
          row.flags = "error:interval outside function domain";
          return row;
        };

        // Identity targets run once per (entry, interval, x).
        for (const SweepTarget target : config.theorems) {
          if (!is_identity_target(target)) continue;
          if (target == SweepTarget::lemma1) {
            if (!in_domain)
              tasks.push_back([row = domain_error_row(target, "corrected")] {
                return row;
              });
            else
              tasks.push_back([&triple, a, b, x, tol] {
                return detail::identity_row(triple, a, b, x,
                                            SweepTarget::lemma1,
                                            IdentityVariant::corrected, tol);
              });
            continue;
          }
          for (const BoundVariant v : config.variants) {
            const IdentityVariant iv = (v == BoundVariant::standard)
                                           ? IdentityVariant::corrected
                                           : IdentityVariant::paper_literal;
            if (!in_domain)
              tasks.push_back(
                  [row = domain_error_row(
                       target, detail::identity_variant_name(iv))] {
                    return row;
                  });
            else
              tasks.push_back([&triple, a, b, x, iv, tol] {
                return detail::identity_row(triple, a, b, x,
                                            SweepTarget::lemma2, iv, tol);
              });
          }
        }

        for (const HolderPair& exps : config.exponents) {
          for (const SweepTarget target : config.theorems) {
            if (is_identity_target(target)) continue;
            if (target_wants_holder(target) != exps.has_p()) continue;
            const auto variants =
                (target == SweepTarget::t3)
                    ? config.variants
                    : std::vector<BoundVariant>{BoundVariant::standard};
            for (const BoundVariant v : variants) {
              if (!in_domain) {
                tasks.push_back([row = domain_error_row(
                                     target, detail::variant_name(v))] {
                  return row;
                });
                continue;
              }
              tasks.push_back([&triple, a, b, x, exps, target, v, tol] {
                return detail::bound_row(triple, a, b, x, exps, target, v, tol);
              });
            }
          }
        }
      }
    }
  }

  std::vector<SweepRow> rows(tasks.size());
  const int jobs = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(config.parallelism),
                            std::max<std::size_t>(tasks.size(), 1)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) rows[i] = tasks[i]();
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < tasks.size();
           i = next.fetch_add(1))
        rows[i] = tasks[i]();
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  SweepSummary summary = summarize(rows, tol);
  return {std::move(rows), std::move(summary)};
}

struct TightnessParams {
  std::size_t grid_n = 33;
  int refine_iters = 20;
};

// Maximizes ratio = lhs/rhs over x in [a, b]: coarse grid, then golden
// section on the bracket around the best grid point. Derivative-free; the
// ratio is only piecewise smooth.
inline SweepRow tightness_search(SweepTarget target, const EntrySpec& entry,
                                 std::pair<double, double> interval,
                                 const HolderPair& exps,
                                 TightnessParams params = {},
                                 double tol = 1e-10) {
  if (is_identity_target(target))
    throw std::invalid_argument("tightness_search: bound targets only");
  if (params.grid_n < 3)
    throw std::invalid_argument("tightness_search: grid_n must be >= 3");
  const FunctionTriple triple = make_from_family(entry.family, entry.params);
  const auto [a, b] = interval;
  if (!(a > 0.0 && a < b))
    throw std::invalid_argument("tightness_search: requires 0 < a < b");
  if (!triple.contains(a, b))
    throw std::invalid_argument("tightness_search: interval outside domain");

  bool any_positive_rhs = false;
  auto ratio_at = [&](double x) -> double {
    const SweepRow row = detail::bound_row(triple, a, b, x, exps, target,
                                           BoundVariant::standard, tol);
    if (row.rhs > 0.0) any_positive_rhs = true;
    if (std::isnan(row.ratio) || std::isinf(row.ratio)) return -1.0;
    return row.ratio;
  };

  const std::size_t n = params.grid_n;
  std::vector<double> xs(n), ratios(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    ratios[i] = ratio_at(xs[i]);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (ratios[i] > ratios[best]) best = i;

  double best_x = xs[best];
  double best_ratio = ratios[best];

  double lo = xs[best == 0 ? 0 : best - 1];
  double hi = xs[best + 1 >= n ? n - 1 : best + 1];
  if (lo < hi) {
    const double gr = 0.6180339887498948482;  // (sqrt(5) - 1) / 2
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = ratio_at(c);
    double fd = ratio_at(d);
    for (int it = 0; it < params.refine_iters; ++it) {
      if (fc > fd) {
        hi = d;
        d = c;
        fd = fc;
        c = hi - gr * (hi - lo);
        fc = ratio_at(c);
      } else {
        lo = c;
        c = d;
        fc = fd;
        d = lo + gr * (hi - lo);
        fd = ratio_at(d);
      }
      const double px = (fc > fd) ? c : d;
      const double pr = std::max(fc, fd);
      if (pr > best_ratio) {
        best_ratio = pr;
        best_x = px;
      }
    }
  }

  SweepRow row = detail::bound_row(triple, a, b, best_x, exps, target,
                                   BoundVariant::standard, tol);
  if (!any_positive_rhs) {
    if (!row.flags.empty()) row.flags += ";";
    row.flags += "degenerate_rhs_everywhere";
  }
  return row;
}

// ---- report files ---------------------------------------------------------

enum class ReportFormat { csv, json };

inline constexpr const char* kCsvHeader =
    "entry,params,a,b,x,p,q,theorem,variant,lhs,rhs,slack,ratio,hyp_ok,flags";

namespace detail {

// 17 significant digits round-trip doubles exactly; absent values (NaN)
// print as empty fields.
inline std::string fmt17(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string csv_line(const SweepRow& r) {
  std::string out;
  out += r.entry;
  out += ',';
  out += r.params;
  out += ',';
  out += fmt17(r.a);
  out += ',';
  out += fmt17(r.b);
  out += ',';
  out += fmt17(r.x);
  out += ',';
  out += fmt17(r.p);
  out += ',';
  out += fmt17(r.q);
  out += ',';
  out += r.theorem;
  out += ',';
  out += r.variant;
  out += ',';
  out += fmt17(r.lhs);
  out += ',';
  out += fmt17(r.rhs);
  out += ',';
  out += fmt17(r.slack);
  out += ',';
  out += fmt17(r.ratio);
  out += ',';
  if (r.hyp_ok >= 0) out += r.hyp_ok ? '1' : '0';
  out += ',';
  out += r.flags;
  return out;
}

inline nlohmann::json row_json(const SweepRow& r) {
  nlohmann::json j;
  j["entry"] = r.entry;
  j["params"] = r.params;
  j["a"] = r.a;
  j["b"] = r.b;
  j["x"] = r.x;
  if (std::isnan(r.p)) j["p"] = nullptr; else j["p"] = r.p;
  if (std::isnan(r.q)) j["q"] = nullptr; else j["q"] = r.q;
  j["theorem"] = r.theorem;
  j["variant"] = r.variant;
  auto num = [](double v) -> nlohmann::json {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return nullptr;
    return v > 0 ? "inf" : "-inf";
  };
  j["lhs"] = num(r.lhs);
  j["rhs"] = num(r.rhs);
  j["slack"] = num(r.slack);
  j["ratio"] = num(r.ratio);
  if (r.hyp_ok >= 0) j["hyp_ok"] = r.hyp_ok == 1; else j["hyp_ok"] = nullptr;
  j["flags"] = r.flags;
  return j;
}

}  // namespace detail

inline void emit_report(const std::vector<SweepRow>& rows,
                        const SweepSummary& summary, ReportFormat format,
                        const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("emit_report: cannot open '" + path + "'");
  if (format == ReportFormat::csv) {
    out << kCsvHeader << '\n';
    for (const SweepRow& r : rows) out << detail::csv_line(r) << '\n';
  } else {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const SweepRow& r : rows) j["rows"].push_back(detail::row_json(r));
    auto num = [](double v) -> nlohmann::json {
      if (std::isfinite(v)) return v;
      if (std::isnan(v)) return nullptr;
      return v > 0 ? "inf" : "-inf";
    };
    j["summary"] = {{"rows", summary.rows},
                    {"pass", summary.pass},
                    {"violation", summary.violation},
                    {"degenerate", summary.degenerate},
                    {"hyp_fail", summary.hyp_fail},
                    {"min_slack", num(summary.min_slack)},
                    {"min_slack_witness", summary.min_slack_witness},
                    {"max_ratio", num(summary.max_ratio)},
                    {"max_ratio_witness", summary.max_ratio_witness}};
    out << j.dump(2) << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("emit_report: write failed for '" + path + "'");
}

// Parses a CSV report back into rows; numeric fields round-trip bit-exactly.
inline std::vector<SweepRow> read_csv_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_csv_rows: cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw std::runtime_error("read_csv_rows: unexpected header in '" + path + "'");

  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        fields.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    if (fields.size() != 15)
      throw std::runtime_error("read_csv_rows: malformed row in '" + path + "'");
    auto num = [](const std::string& s) {
      if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
      return std::strtod(s.c_str(), nullptr);
    };
    SweepRow r;
    r.entry = fields[0];
    r.params = fields[1];
    r.a = num(fields[2]);
    r.b = num(fields[3]);
    r.x = num(fields[4]);
    r.p = num(fields[5]);
    r.q = num(fields[6]);
    r.theorem = fields[7];
    r.variant = fields[8];
    r.lhs = num(fields[9]);
    r.rhs = num(fields[10]);
    r.slack = num(fields[11]);
    r.ratio = num(fields[12]);
    r.hyp_ok = fields[13].empty() ? -1 : (fields[13] == "1" ? 1 : 0);
    r.flags = fields[14];
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---- configuration files ---------------------------------------------------

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& obj,
                                const std::string& path,
                                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw config_error(path + "." + key, "unknown key");
  }
}

inline SweepTarget parse_target(const std::string& name, const std::string& path) {
  static const std::pair<const char*, SweepTarget> table[] = {
      {"T1", SweepTarget::t1},         {"T2", SweepTarget::t2},
      {"T3", SweepTarget::t3},         {"T4", SweepTarget::t4},
      {"T5", SweepTarget::t5},         {"C1", SweepTarget::c1},
      {"C3", SweepTarget::c3},         {"lemma1", SweepTarget::lemma1},
      {"lemma2", SweepTarget::lemma2}};
  for (const auto& [n, t] : table)
    if (name == n) return t;
  throw config_error(path, "unknown theorem '" + name + "'");
}

}  // namespace detail

inline SweepConfig parse_config_json(const nlohmann::json& j) {
  if (!j.is_object()) throw config_error("", "config must be a JSON object");
  detail::reject_unknown_keys(j, "",
                              {"entries", "intervals", "x_positions", "exponents",
                               "theorems", "variants", "tol", "parallelism",
                               "seed"});
  for (const char* required : {"entries", "intervals", "x_positions", "theorems"})
    if (!j.contains(required)) throw config_error(required, "missing required key");

  SweepConfig config;
  const auto& entries = j.at("entries");
  if (!entries.is_array()) throw config_error("entries", "must be an array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string path = "entries[" + std::to_string(i) + "]";
    const auto& e = entries[i];
    if (!e.is_object()) throw config_error(path, "must be an object");
    detail::reject_unknown_keys(e, path, {"family", "params"});
    if (!e.contains("family") || !e.at("family").is_string())
      throw config_error(path + ".family", "missing or not a string");
    EntrySpec spec;
    spec.family = e.at("family").get<std::string>();
    if (e.contains("params")) {
      if (!e.at("params").is_object())
        throw config_error(path + ".params", "must be an object");
      for (const auto& [key, value] : e.at("params").items()) {
        if (!value.is_number())
          throw config_error(path + ".params." + key, "must be a number");
        spec.params.emplace_back(key, value.get<double>());
      }
    }
    config.entries.push_back(std::move(spec));
  }

  const auto& intervals = j.at("intervals");
  if (!intervals.is_array()) throw config_error("intervals", "must be an array");
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const std::string path = "intervals[" + std::to_string(i) + "]";
    const auto& iv = intervals[i];
    if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number())
      throw config_error(path, "must be a [a, b] number pair");
    config.intervals.emplace_back(iv[0].get<double>(), iv[1].get<double>());
  }

  const auto& xs = j.at("x_positions");
  if (!xs.is_array()) throw config_error("x_positions", "must be an array");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!xs[i].is_number())
      throw config_error("x_positions[" + std::to_string(i) + "]",
                         "must be a number");
    config.x_positions.push_back(xs[i].get<double>());
  }

  if (j.contains("exponents")) {
    const auto& exps = j.at("exponents");
    if (!exps.is_array()) throw config_error("exponents", "must be an array");
    for (std::size_t i = 0; i < exps.size(); ++i) {
      const std::string path = "exponents[" + std::to_string(i) + "]";
      const auto& e = exps[i];
      if (!e.is_object()) throw config_error(path, "must be an object");
      detail::reject_unknown_keys(e, path, {"mode", "p", "q"});
      if (!e.contains("mode") || !e.at("mode").is_string())
        throw config_error(path + ".mode", "missing or not a string");
      const std::string mode = e.at("mode").get<std::string>();
      try {
        if (mode == "holder") {
          if (!e.contains("p")) throw config_error(path + ".p", "required");
          if (e.contains("q"))
            config.exponents.push_back(HolderPair::holder(
                e.at("p").get<double>(), e.at("q").get<double>()));
          else
            config.exponents.push_back(HolderPair::holder(e.at("p").get<double>()));
        } else if (mode == "power_mean") {
          if (e.contains("p")) throw config_error(path + ".p", "not allowed here");
          if (!e.contains("q")) throw config_error(path + ".q", "required");
          config.exponents.push_back(
              HolderPair::power_mean(e.at("q").get<double>()));
        } else {
          throw config_error(path + ".mode",
                             "must be 'holder' or 'power_mean'");
        }
      } catch (const config_error&) {
        throw;
      } catch (const std::exception& ex) {
        throw config_error(path, ex.what());
      }
    }
  }

  const auto& theorems = j.at("theorems");
  if (!theorems.is_array()) throw config_error("theorems", "must be an array");
  for (std::size_t i = 0; i < theorems.size(); ++i) {
    if (!theorems[i].is_string())
      throw config_error("theorems[" + std::to_string(i) + "]",
                         "must be a string");
    config.theorems.push_back(detail::parse_target(
        theorems[i].get<std::string>(), "theorems[" + std::to_string(i) + "]"));
  }

  if (j.contains("variants")) {
    const auto& vs = j.at("variants");
    if (!vs.is_array()) throw config_error("variants", "must be an array");
    config.variants.clear();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const std::string path = "variants[" + std::to_string(i) + "]";
      if (!vs[i].is_string()) throw config_error(path, "must be a string");
      const std::string v = vs[i].get<std::string>();
      if (v == "standard")
        config.variants.push_back(BoundVariant::standard);
      else if (v == "paper_literal")
        config.variants.push_back(BoundVariant::paper_literal);
      else
        throw config_error(path, "must be 'standard' or 'paper_literal'");
    }
  }

  if (j.contains("tol")) {
    if (!j.at("tol").is_number()) throw config_error("tol", "must be a number");
    config.tol = j.at("tol").get<double>();
  }
  if (j.contains("parallelism")) {
    if (!j.at("parallelism").is_number_integer())
      throw config_error("parallelism", "must be an integer");
    config.parallelism = j.at("parallelism").get<int>();
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_integer())
      throw config_error("seed", "must be an integer");
    config.seed = j.at("seed").get<std::uint64_t>();
  }

  validate_config(config);
  return config;
}

inline SweepConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error(path, "cannot open config file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw config_error(path, std::string("invalid JSON: ") + e.what());
  }
  return parse_config_json(j);
}

}  // namespace ggbound

#endif
