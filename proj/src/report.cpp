#include "rgresum/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "rgresum/models.hpp"
#include "rgresum/rg_flow.hpp"

namespace rgresum {

std::optional<Command> parse_command(std::string_view name) {
  if (name == "demo") return Command::Demo;
  if (name == "partition") return Command::Partition;
  if (name == "oscillator") return Command::Oscillator;
  if (name == "fit-p") return Command::FitP;
  if (name == "verify") return Command::Verify;
  return std::nullopt;
}

void GridSpec::validate() const {
  if (count < 1) throw Error(ErrorKind::ConfigError, "grid count must be at least 1");
  if (!std::isfinite(min) || !std::isfinite(max)) {
    throw Error(ErrorKind::ConfigError, "grid bounds must be finite");
  }
  if (min > max) throw Error(ErrorKind::ConfigError, "grid min must not exceed max");
  if (spacing == GridSpacing::Log && !(min > 0.0)) {
    throw Error(ErrorKind::ConfigError, "log grid needs min > 0");
  }
}

std::vector<double> GridSpec::points() const {
  validate();
  std::vector<double> pts(static_cast<std::size_t>(count));
  if (count == 1) {
    pts[0] = min;
    return pts;
  }
  const double lo = spacing == GridSpacing::Log ? std::log(min) : min;
  const double hi = spacing == GridSpacing::Log ? std::log(max) : max;
  for (int i = 0; i < count; ++i) {
    const double u = lo + (hi - lo) * i / (count - 1);
    pts[i] = spacing == GridSpacing::Log ? std::exp(u) : u;
  }
  pts.front() = min;
  pts.back() = max;
  return pts;
}

GridSpec parse_grid(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  if (parts.size() != 4) {
    throw Error(ErrorKind::ConfigError, "grid spec must be min,max,count,linear|log");
  }
  GridSpec grid;
  try {
    std::size_t used = 0;
    grid.min = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("min");
    grid.max = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("max");
    grid.count = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("count");
  } catch (const std::logic_error &) {
    throw Error(ErrorKind::ConfigError, "malformed grid spec '" + std::string(text) + "'");
  }
  if (parts[3] == "linear") {
    grid.spacing = GridSpacing::Linear;
  } else if (parts[3] == "log") {
    grid.spacing = GridSpacing::Log;
  } else {
    throw Error(ErrorKind::ConfigError, "grid spacing must be linear or log");
  }
  grid.validate();
  return grid;
}

void RunConfig::validate() const {
  g_grid.validate();
  if (p_mode == PMode::Fixed && !(p_value > 0.0)) {
    throw Error(ErrorKind::ConfigError, "fixed p must be positive");
  }
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

nlohmann::json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

nlohmann::json json_optional(const std::optional<double> &v) {
  return v ? json_number(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::string to_csv(const Report &report) {
  std::ostringstream out;
  out << "model,method,p,g,approx,oracle,delta_percent,error\n";
  for (const ReportRow &r : report.rows) {
    out << csv_field(r.model) << ',' << csv_field(r.method) << ','
        << (r.p ? format_number(*r.p) : std::string()) << ',' << format_number(r.row.abscissa);
    if (r.row.valid()) {
      out << ',' << format_number(r.row.approx_value) << ',' << format_number(r.row.oracle_value)
          << ',' << format_number(r.row.delta_percent) << ",\n";
    } else {
      out << ",,,," << csv_field(*r.row.error) << '\n';
    }
  }
  return out.str();
}

std::string to_json(const Report &report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ReportRow &r : report.rows) {
    nlohmann::json row = {{"model", r.model},
                          {"method", r.method},
                          {"p", json_optional(r.p)},
                          {"g", json_number(r.row.abscissa)}};
    if (r.row.valid()) {
      row["approx"] = json_number(r.row.approx_value);
      row["oracle"] = json_number(r.row.oracle_value);
      row["delta_percent"] = json_number(r.row.delta_percent);
    } else {
      row["approx"] = nullptr;
      row["oracle"] = nullptr;
      row["delta_percent"] = nullptr;
      row["error"] = *r.row.error;
    }
    rows.push_back(std::move(row));
  }
  nlohmann::json doc = {{"model", report.model},
                        {"p", json_optional(report.p)},
                        {"fitted", report.fitted},
                        {"rows", std::move(rows)}};
  return doc.dump(2) + "\n";
}

Report demo_report() {
  Report report{"demo", std::nullopt, false, {}};
  constexpr double grid[] = {1.0};
  for (const ReferenceFunction &fn : reference_functions()) {
    for (AccuracyRow &row : delta_table(fn.series, fn.value, kAllApproximantKinds, grid)) {
      report.rows.push_back({fn.name, row.method, std::nullopt, std::move(row)});
    }
  }
  return report;
}

Report profile_report(PmsModel model, PMode mode, double p_value, const GridSpec &grid) {
  Report report{std::string(to_string(model)), 1.0, false, {}};
  switch (mode) {
    case PMode::Auto:
      report.p = fit_p(model, strong_asym(model).leading_coeff);
      report.fitted = true;
      break;
    case PMode::Unit: report.p = 1.0; break;
    case PMode::Fixed: report.p = p_value; break;
  }
  const std::vector<double> pts = grid.points();
  for (AccuracyRow &row : error_profile(model, *report.p, pts)) {
    report.rows.push_back({report.model, row.method, report.p, std::move(row)});
  }
  return report;
}

PFitResult fit_p_report(PmsModel model) {
  const double target = strong_asym(model).leading_coeff;
  const double p = fit_p(model, target);
  return {model, target, p, strong_matching_residual(model, p, target)};
}

namespace {

VerifyCheck check(std::string name, bool passed, double measured, double bound) {
  return {std::move(name), passed,
          "measured " + format_number(measured) + " bound " + format_number(bound)};
}

}  // namespace

std::vector<VerifyCheck> verify_suite() {
  std::vector<VerifyCheck> checks;
  auto guarded = [&checks](const std::string &name, auto &&body) {
    try {
      checks.push_back(body());
    } catch (const std::exception &e) {
      checks.push_back({name, false, e.what()});
    }
  };
  const Series ln_series = reference_functions()[0].series;

  guarded("reversion_round_trip", [&] {
    const Series s{0.3, 1.7, -0.4, 2.2, 0.9, -1.1};
    const Series id = compose(normalized(s), reversion(s));
    const double err = (id.coeffs() - Series::identity(s.order()).coeffs()).cwiseAbs().maxCoeff();
    return check("reversion_round_trip", err <= 1e-12, err, 1e-12);
  });
  guarded("beta_leading_coefficient", [&] {
    const double err = std::abs(beta_series(ln_series)[0] - ln_series[1]);
    return check("beta_leading_coefficient", err == 0.0, err, 0.0);
  });
  guarded("generic_flow_matches_beta2", [&] {
    const double err = std::abs(generic_rg_value(ln_series, 1.0, 1) -
                                eval(fit(ln_series, ApproximantKind::Beta2), 1.0));
    return check("generic_flow_matches_beta2", err <= 1e-9, err, 1e-9);
  });
  guarded("generic_flow_matches_beta3", [&] {
    const double err = std::abs(generic_rg_value(ln_series, 1.0, 2) -
                                eval(fit(ln_series, ApproximantKind::Beta3), 1.0));
    return check("generic_flow_matches_beta3", err <= 1e-9, err, 1e-9);
  });
  guarded("group_property", [&] {
    const double res = check_group_property(ln_series, 0.3, 0.4);
    return check("group_property", res <= 1e-9, res, 1e-9);
  });
  guarded("infinitesimal_operator", [&] {
    const double res = check_infinitesimal_operator(ln_series, 0.5, 1e-4);
    return check("infinitesimal_operator", res <= 1e-6, res, 1e-6);
  });
  guarded("inversion_round_trip", [&] {
    double worst = 0.0;
    for (PmsModel model : {PmsModel::PartitionPhi4, PmsModel::QuarticOscillator}) {
      for (double p : {0.8, 1.0, 1.472032, 1.779643, 2.0}) {
        const PmsRelation rel(model, p);
        for (double e = -4.0; e <= 6.0; e += 0.25) {
          const double g = std::pow(10.0, e);
          worst = std::max(worst, std::abs(relation_g_of_x(rel, invert_relation(rel, g)) / g - 1.0));
        }
      }
    }
    return check("inversion_round_trip", worst <= 1e-12, worst, 1e-12);
  });
  guarded("pipeline_equivalence", [&] {
    const double res = std::max(
        pipeline_equivalence_residual(PmsRelation(PmsModel::PartitionPhi4, 1.3), 2.0),
        pipeline_equivalence_residual(PmsRelation(PmsModel::QuarticOscillator, 1.472032), 0.7));
    return check("pipeline_equivalence", res <= 1e-10, res, 1e-10);
  });
  guarded("fit_p_partition", [&] {
    const double err = std::abs(fit_p_report(PmsModel::PartitionPhi4).p - 1.779643);
    return check("fit_p_partition", err <= 1e-3, err, 1e-3);
  });
  guarded("fit_p_oscillator", [&] {
    const double err = std::abs(fit_p_report(PmsModel::QuarticOscillator).p - 1.472032);
    return check("fit_p_oscillator", err <= 1e-3, err, 1e-3);
  });
  guarded("oscillator_harmonic_limit", [&] {
    const double err = std::abs(oscillator_exact(0.0) - 0.5);
    return check("oscillator_harmonic_limit", err <= 1e-12, err, 1e-12);
  });
  guarded("partition_gaussian_limit", [&] {
    const double err = std::abs(partition_exact(0.0) - 1.0);
    return check("partition_gaussian_limit", err <= 1e-12, err, 1e-12);
  });
  guarded("partition_weak_overlap", [&] {
    const double g = 0.01;
    const double err = std::abs(partition_exact(g) - partition_weak_series(5)(g));
    return check("partition_weak_overlap", err <= 1e-6, err, 1e-6);
  });
  return checks;
}

void write_error(const Error &e, OutputFormat format, std::ostream &out) {
  if (format == OutputFormat::Json) {
    out << nlohmann::json{{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}}.dump(2)
        << '\n';
  } else {
    out << "error,kind,message\nerror," << to_string(e.kind()) << ',' << csv_field(e.what()) << '\n';
  }
}

int run(const RunConfig &cfg, std::ostream &out) {
  try {
    cfg.validate();
    switch (cfg.command) {
      case Command::Demo: {
        const Report r = demo_report();
        out << (cfg.output_format == OutputFormat::Json ? to_json(r) : to_csv(r));
        return kExitOk;
      }
      case Command::Partition:
      case Command::Oscillator: {
        const PmsModel model = cfg.command == Command::Partition ? PmsModel::PartitionPhi4
                                                                 : PmsModel::QuarticOscillator;
        const Report r = profile_report(model, cfg.p_mode, cfg.p_value, cfg.g_grid);
        out << (cfg.output_format == OutputFormat::Json ? to_json(r) : to_csv(r));
        return kExitOk;
      }
      case Command::FitP: {
        const PFitResult fr = fit_p_report(cfg.model);
        if (cfg.output_format == OutputFormat::Json) {
          out << nlohmann::json{{"model", to_string(fr.model)},
                                {"target", fr.target},
                                {"p", fr.p},
                                {"residual", fr.residual}}
                     .dump(2)
              << '\n';
        } else {
          out << "model,target,p,residual\n"
              << to_string(fr.model) << ',' << format_number(fr.target) << ','
              << format_number(fr.p) << ',' << format_number(fr.residual) << '\n';
        }
        return kExitOk;
      }
      case Command::Verify: {
        const std::vector<VerifyCheck> checks = verify_suite();
        int passed = 0;
        for (const VerifyCheck &c : checks) passed += c.passed ? 1 : 0;
        const int failed = static_cast<int>(checks.size()) - passed;
        if (cfg.output_format == OutputFormat::Json) {
          nlohmann::json list = nlohmann::json::array();
          for (const VerifyCheck &c : checks) {
            list.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
          }
          out << nlohmann::json{{"checks", list}, {"passed", passed}, {"failed", failed}}.dump(2)
              << '\n';
        } else {
          out << "check,passed,detail\n";
          for (const VerifyCheck &c : checks) {
            out << c.name << ',' << (c.passed ? "true" : "false") << ',' << csv_field(c.detail)
                << '\n';
          }
          out << "total," << (failed == 0 ? "true" : "false") << ',' << passed << " passed "
              << failed << " failed\n";
        }
        return failed == 0 ? kExitOk : kExitChecksFailed;
      }
    }
  } catch (const Error &e) {
    write_error(e, cfg.output_format, out);
    return e.is_convergence() ? kExitConvergence : kExitDomain;
  }
  return kExitDomain;
}

}  // namespace rgresum
