#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rgresum/approximants.hpp"
#include "rgresum/error.hpp"
#include "rgresum/pms.hpp"

namespace rgresum {

enum class Command { Demo, Partition, Oscillator, FitP, Verify };
enum class GridSpacing { Linear, Log };
enum class PMode { Auto, Fixed, Unit };
enum class OutputFormat { Csv, Json };

std::optional<Command> parse_command(std::string_view name);

struct GridSpec {
  double min = 1e-2;
  double max = 1e2;
  int count = 60;
  GridSpacing spacing = GridSpacing::Log;

  void validate() const;
  std::vector<double> points() const;
};

/// Parses "min,max,count,linear|log".
GridSpec parse_grid(std::string_view text);

struct RunConfig {
  Command command = Command::Demo;
  GridSpec g_grid;
  PMode p_mode = PMode::Auto;
  double p_value = 1.0;  // used when p_mode == Fixed
  PmsModel model = PmsModel::PartitionPhi4;  // fit-p target
  OutputFormat output_format = OutputFormat::Csv;
  std::optional<std::string> output_path;

  void validate() const;
};

/// One CSV/JSON line: model, method, p, g, approx, oracle, delta_percent.
struct ReportRow {
  std::string model;
  std::string method;
  std::optional<double> p;
  AccuracyRow row;
};

struct Report {
  std::string model;
  std::optional<double> p;
  bool fitted = false;
  std::vector<ReportRow> rows;
};

/// Shortest-faithful 17-significant-digit rendering used in every CSV field.
std::string format_number(double v);

std::string to_csv(const Report &report);
std::string to_json(const Report &report);

Report demo_report();
Report profile_report(PmsModel model, PMode mode, double p_value, const GridSpec &grid);

struct PFitResult {
  PmsModel model;
  double target;
  double p;
  double residual;
};

PFitResult fit_p_report(PmsModel model);

struct VerifyCheck {
  std::string name;
  bool passed;
  std::string detail;
};

/// Fast subset of the library's invariants, used by the `verify` command.
std::vector<VerifyCheck> verify_suite();

inline constexpr int kExitOk = 0;
inline constexpr int kExitChecksFailed = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitConvergence = 3;

/// Structured error record in the requested format.
void write_error(const Error &e, OutputFormat format, std::ostream &out);

/// Executes one command and writes its report to out. Errors are written as a
/// structured record and mapped to exit codes 2 (domain/config) or 3
/// (convergence).
int run(const RunConfig &cfg, std::ostream &out);

}  // namespace rgresum
