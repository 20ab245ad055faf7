#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "rgresum/error.hpp"
#include "rgresum/models.hpp"
#include "rgresum/report.hpp"

using namespace rgresum;

namespace {

std::vector<std::vector<std::string>> split_csv(const std::string &text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (c == '"' && quoted && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = !quoted;
      } else if (c == ',' && !quoted) {
        fields.emplace_back();
      } else {
        fields.back() += c;
      }
    }
    out.push_back(fields);
  }
  return out;
}

GridSpec small_grid() { return parse_grid("0.1,10,4,log"); }

}  // namespace

TEST_CASE("grid parsing") {
  const GridSpec g = parse_grid("1e-2,1e2,5,log");
  const auto pts = g.points();
  REQUIRE(pts.size() == 5);
  CHECK(pts.front() == 1e-2);
  CHECK(pts.back() == 1e2);
  CHECK(pts[2] == doctest::Approx(1.0).epsilon(1e-14));
  const auto lin = parse_grid("0,1,3,linear").points();
  CHECK(lin[1] == 0.5);
  CHECK(parse_grid("1e6,1e6,1,log").points() == std::vector<double>{1e6});

  for (const char *bad : {"0,1,3,log", "1,2,0,log", "2,1,3,linear", "1,2,3", "1,2,3,cubic", "a,2,3,log", "1,2,3.5,log"}) {
    try {
      parse_grid(bad);
      FAIL("accepted " << bad);
    } catch (const Error &e) {
      CHECK(e.kind() == ErrorKind::ConfigError);
    }
  }
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(1.0) == "1");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(parse_command("fit-p") == Command::FitP);
  CHECK_FALSE(parse_command("plot").has_value());
}

TEST_CASE("csv and json encode the same values") {
  Report r = profile_report(PmsModel::PartitionPhi4, PMode::Auto, 1.0, small_grid());
  CHECK(r.fitted);
  CHECK(*r.p == doctest::Approx(1.7796).epsilon(1e-4));
  r.rows.push_back({r.model, kImprovedMethod, r.p, make_error_row(kImprovedMethod, -1.0, "bad, \"g\"")});

  const auto csv = split_csv(to_csv(r));
  const auto json = nlohmann::json::parse(to_json(r));
  REQUIRE(csv.size() == r.rows.size() + 1);
  CHECK(csv[0] == std::vector<std::string>{"model", "method", "p", "g", "approx", "oracle", "delta_percent", "error"});
  CHECK(json["model"] == "partition");
  CHECK(json["fitted"] == true);
  CHECK(json["p"].get<double>() == *r.p);
  REQUIRE(json["rows"].size() == r.rows.size());

  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto &fields = csv[i + 1];
    const auto &row = json["rows"][i];
    REQUIRE(fields.size() == 8);
    CHECK(fields[0] == row["model"].get<std::string>());
    CHECK(fields[1] == row["method"].get<std::string>());
    CHECK(std::stod(fields[2]) == row["p"].get<double>());
    CHECK(std::stod(fields[3]) == row["g"].get<double>());
    if (r.rows[i].row.valid()) {
      for (auto [col, key] : {std::pair{4, "approx"}, {5, "oracle"}, {6, "delta_percent"}}) {
        const double a = std::stod(fields[col]);
        const double b = row[key].get<double>();
        CHECK(std::abs(a - b) <= 1e-15 * std::abs(b));
      }
      CHECK(fields[7].empty());
      const double approx = row["approx"].get<double>();
      const double oracle = row["oracle"].get<double>();
      CHECK(row["delta_percent"].get<double>() == (approx - oracle) / oracle * 100.0);
    } else {
      CHECK(row["approx"].is_null());
      CHECK(fields[4].empty());
      CHECK(fields[7] == row["error"].get<std::string>());
      CHECK(fields[7] == "bad, \"g\"");
    }
  }
}

TEST_CASE("output is deterministic") {
  RunConfig cfg;
  cfg.command = Command::Partition;
  cfg.g_grid = small_grid();
  cfg.p_mode = PMode::Unit;
  std::ostringstream a, b;
  CHECK(run(cfg, a) == kExitOk);
  CHECK(run(cfg, b) == kExitOk);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("partition,ImprovedBeta2,1,0.10000000000000001,") != std::string::npos);
}

TEST_CASE("commands") {
  RunConfig cfg;
  std::ostringstream demo;
  CHECK(run(cfg, demo) == kExitOk);
  CHECK(split_csv(demo.str()).size() == 13);
  CHECK(demo.str().find("ln(1+x),Taylor2,,1,0.5,") != std::string::npos);

  cfg.command = Command::FitP;
  cfg.model = PmsModel::QuarticOscillator;
  cfg.output_format = OutputFormat::Json;
  std::ostringstream fp;
  CHECK(run(cfg, fp) == kExitOk);
  const auto j = nlohmann::json::parse(fp.str());
  CHECK(std::abs(j["p"].get<double>() - 1.472032) <= 1e-3);
  CHECK(std::abs(j["residual"].get<double>()) <= 1e-10);

  cfg.command = Command::Verify;
  std::ostringstream v;
  CHECK(run(cfg, v) == kExitOk);
  CHECK(nlohmann::json::parse(v.str())["failed"] == 0);
}

TEST_CASE("errors map to exit codes and records") {
  RunConfig cfg;
  cfg.command = Command::Oscillator;
  cfg.p_mode = PMode::Fixed;
  cfg.p_value = -1.0;
  std::ostringstream out;
  CHECK(run(cfg, out) == kExitDomain);
  CHECK(out.str().rfind("error,kind,message\nerror,ConfigError,", 0) == 0);

  cfg.p_value = 0.4;
  cfg.g_grid = small_grid();
  cfg.output_format = OutputFormat::Json;
  std::ostringstream rows;
  CHECK(run(cfg, rows) == kExitOk);
  for (const auto &row : nlohmann::json::parse(rows.str())["rows"]) CHECK(row.contains("error"));

  cfg.g_grid.min = 0.0;
  std::ostringstream bad_grid;
  CHECK(run(cfg, bad_grid) == kExitDomain);
  CHECK(nlohmann::json::parse(bad_grid.str())["error"]["kind"] == "ConfigError");
}
