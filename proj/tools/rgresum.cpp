#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rgresum/error.hpp"
#include "rgresum/report.hpp"

namespace {

// Options shared by every subcommand.
void add_common(CLI::App *cmd, std::string &grid, std::string &p_mode, double &p, bool &p_given,
                std::string &format, std::string &out) {
  cmd->add_option("--g-grid", grid, "coupling grid as min,max,count,linear|log");
  cmd->add_option("--p-mode", p_mode, "auto, fixed or unit")
      ->check(CLI::IsMember({"auto", "fixed", "unit"}));
  cmd->add_option_function<double>("--p", [&](double v) { p = v; p_given = true; },
                                   "trial parameter (implies --p-mode fixed)");
  cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", out, "write the report to this file");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"RG-approximant resummation of truncated weak-coupling series"};
  app.require_subcommand(1);

  std::string grid, p_mode = "auto", format = "csv", out, model = "partition";
  double p = 1.0;
  bool p_given = false;

  const std::pair<const char *, const char *> commands[] = {
      {"demo", "approximant accuracy on the reference functions at x = 1"},
      {"partition", "improved approximant error profile for the zero-dimensional phi^4 model"},
      {"oscillator", "improved approximant error profile for the quartic oscillator"},
      {"fit-p", "fit p to the strong-coupling leading coefficient"},
      {"verify", "run the built-in invariant checks"},
  };
  for (const auto &[name, help] : commands) {
    CLI::App *cmd = app.add_subcommand(name, help);
    add_common(cmd, grid, p_mode, p, p_given, format, out);
    if (std::string(name) == "fit-p") {
      cmd->add_option("--model", model, "partition or oscillator")
          ->check(CLI::IsMember({"partition", "oscillator"}));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? rgresum::kExitOk : rgresum::kExitDomain;
  }

  rgresum::RunConfig cfg;
  cfg.output_format = format == "json" ? rgresum::OutputFormat::Json : rgresum::OutputFormat::Csv;
  try {
    cfg.command = *rgresum::parse_command(app.get_subcommands().front()->get_name());
    if (!grid.empty()) cfg.g_grid = rgresum::parse_grid(grid);
    if (p_mode == "unit") {
      cfg.p_mode = rgresum::PMode::Unit;
    } else if (p_mode == "fixed" || p_given) {
      if (!p_given) throw rgresum::Error(rgresum::ErrorKind::ConfigError, "--p-mode fixed needs --p");
      cfg.p_mode = rgresum::PMode::Fixed;
      cfg.p_value = p;
    }
    cfg.model = *rgresum::parse_pms_model(model);
    if (!out.empty()) cfg.output_path = out;
  } catch (const rgresum::Error &e) {
    rgresum::write_error(e, cfg.output_format, std::cout);
    return rgresum::kExitDomain;
  }

  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path);
    if (!file) {
      std::cerr << "error: cannot open " << *cfg.output_path << '\n';
      return rgresum::kExitDomain;
    }
    return rgresum::run(cfg, file);
  }
  return rgresum::run(cfg, std::cout);
}
