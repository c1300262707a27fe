// End-to-end checks of the command-line tool: output schema, determinism,
// CSV/JSON agreement, config files, and the exit-code contract.  The binary
// under test is injected via the CASILEV_CLI_PATH compile definition.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "casilev/potential.hpp"

#ifndef CASILEV_CLI_PATH
#error "CASILEV_CLI_PATH must name the casilev binary"
#endif

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(CASILEV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  return cells;
}

// Comment lines, then the header row, then data rows.
struct Table {
  std::vector<std::string> comments;
  std::string header;
  std::vector<std::vector<std::string>> rows;
};

Table parse_csv(const std::string& text) {
  Table t;
  bool seen_header = false;
  for (const std::string& line : lines_of(text)) {
    if (!seen_header && line.rfind("#", 0) == 0) {
      t.comments.push_back(line);
    } else if (!seen_header) {
      t.header = line;
      seen_header = true;
    } else {
      t.rows.push_back(split_csv(line));
    }
  }
  return t;
}

double as_double(const std::string& cell) {
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  REQUIRE(end == cell.c_str() + cell.size());
  return v;
}

std::string temp_path(const std::string& tag) {
  return "/tmp/casilev_cli_test_" + std::to_string(::getpid()) + "_" + tag;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
  REQUIRE(out.good());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("force curve emits the documented csv schema") {
  const RunResult r = run_cli("force");
  REQUIRE(r.status == 0);
  const Table t = parse_csv(r.out);
  REQUIRE(t.comments.size() >= 3);
  CHECK(t.comments[0] == "# casilev 1.0.0");
  CHECK(t.comments[1] == "# command: force");
  CHECK(contains(t.comments[2], "config:"));
  CHECK(t.header == "z,f_total,f_j,f_p,v_total,v_j,v_p");
  REQUIRE(t.rows.size() == 200);
  CHECK(as_double(t.rows.front()[0]) == 2.0);
  CHECK(as_double(t.rows.back()[0]) == 16.0);
  double prev_z = 0.0;
  for (const auto& row : t.rows) {
    REQUIRE(row.size() == 7);
    for (const auto& cell : row) CHECK(std::isfinite(as_double(cell)));
    const double z = as_double(row[0]);
    CHECK(z > prev_z);
    prev_z = z;
    CHECK(as_double(row[1]) ==
          doctest::Approx(as_double(row[2]) + as_double(row[3]))
              .epsilon(1e-12));
  }
}

TEST_CASE("reruns are byte-identical") {
  const std::string args = "force --points 7 --z-min 3 --z-max 6";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  REQUIRE(a.status == 0);
  REQUIRE(b.status == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("csv and json encodings carry identical values") {
  const std::string base = "force --points 5 --z-min 3 --z-max 5";
  const RunResult csv = run_cli(base);
  const RunResult js = run_cli(base + " --format json");
  REQUIRE(csv.status == 0);
  REQUIRE(js.status == 0);

  const Table t = parse_csv(csv.out);
  const nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j.at("version") == "casilev 1.0.0");
  CHECK(j.at("command") == "force");
  const auto& rows = j.at("rows");
  REQUIRE(rows.size() == t.rows.size());

  const std::vector<std::string> cols = split_csv(t.header);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    REQUIRE(t.rows[i].size() == cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      // 17 significant digits round-trip exactly through strtod.
      CHECK(as_double(t.rows[i][c]) == rows[i].at(cols[c]).get<double>());
    }
  }
}

TEST_CASE("exit codes map the error classes") {
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("force --help").status == 0);
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("force --no-such-flag").status == 2);
  CHECK(run_cli("force --z-min 5 --z-max 5").status == 2);
  CHECK(run_cli("force --wall-ratio nonsense").status == 2);
  CHECK(run_cli("force --wall-ratio perfect --gamma-w 0.1").status == 2);
  CHECK(run_cli("thermal --z-min 3 --z-max 4 --points 2").status == 2);
  CHECK(run_cli("units --z-um 0").status == 2);
  CHECK(run_cli("force --gamma-s 1.2 --points 3 --z-min 3 --z-max 4").status ==
        4);
  CHECK(run_cli("force --points 3 --z-min 3 --z-max 4 --rel-tol 1e-13 "
                "--max-subdivisions 1")
            .status == 3);
}

TEST_CASE("config file drives a run and explicit flags win") {
  const std::string cfg = temp_path("cfg.ini");
  write_file(cfg,
             "# scenario\n"
             "z-min=3\n"
             "z_max = 4\n"
             "points=5\n"
             "wall-ratio = \"2.0\"\n");

  SUBCASE("file values are applied") {
    const RunResult r = run_cli("force --config " + cfg);
    REQUIRE(r.status == 0);
    const Table t = parse_csv(r.out);
    CHECK(t.rows.size() == 5);
    CHECK(as_double(t.rows.front()[0]) == 3.0);
    CHECK(as_double(t.rows.back()[0]) == 4.0);
    REQUIRE(t.comments.size() >= 3);
    CHECK(contains(t.comments[2], "z_min=3 z_max=4 points=5"));
  }

  SUBCASE("a flag given on the command line overrides the file") {
    const RunResult r = run_cli("force --config " + cfg + " --points 7");
    REQUIRE(r.status == 0);
    CHECK(parse_csv(r.out).rows.size() == 7);
  }

  SUBCASE("a required option can come from the file") {
    const std::string cfg_beta = temp_path("cfg_beta.ini");
    write_file(cfg_beta, "beta = 5\nz-min=3\nz-max=4\npoints=3\n");
    const RunResult r = run_cli("thermal --config " + cfg_beta);
    REQUIRE(r.status == 0);
    const Table t = parse_csv(r.out);
    CHECK(t.rows.size() == 3);
    CHECK(contains(t.comments[2], "beta=5"));
    std::remove(cfg_beta.c_str());
  }

  SUBCASE("unknown keys are rejected") {
    const std::string bad = temp_path("cfg_bad.ini");
    write_file(bad, "bogus=1\n");
    CHECK(run_cli("force --config " + bad).status == 2);
    std::remove(bad.c_str());
  }

  SUBCASE("a missing file is a usage error") {
    CHECK(run_cli("force --config /nonexistent/cfg.ini").status == 2);
  }

  SUBCASE("malformed lines are rejected") {
    const std::string bad = temp_path("cfg_malformed.ini");
    write_file(bad, "points\n");
    CHECK(run_cli("force --config " + bad).status == 2);
    std::remove(bad.c_str());
  }

  std::remove(cfg.c_str());
}

TEST_CASE("--out writes exactly the stdout bytes") {
  const std::string base = "force --points 5 --z-min 3 --z-max 5";
  const RunResult direct = run_cli(base);
  REQUIRE(direct.status == 0);

  const std::string path = temp_path("out.csv");
  const RunResult filed = run_cli(base + " --out " + path);
  REQUIRE(filed.status == 0);
  CHECK(filed.out.empty());
  CHECK(read_file(path) == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("spectrum columns reproduce the library values") {
  const RunResult r = run_cli(
      "spectrum --z 2 --points 5 --omega-min 0.5 --omega-max 1.5 "
      "--wall-ratio perfect");
  REQUIRE(r.status == 0);
  const Table t = parse_csv(r.out);
  CHECK(t.header == "omega,sigma,e2");
  REQUIRE(t.rows.size() == 5);

  const double z = 2.0;
  for (const auto& row : t.rows) {
    REQUIRE(row.size() == 3);
    const double omega = as_double(row[0]);
    const double sigma = as_double(row[1]);
    const double e2 = as_double(row[2]);
    CHECK(sigma ==
          doctest::Approx(casilev::cp_spectrum(omega, z)).epsilon(1e-12));
    // For a perfect conductor e2 collapses to -sigma / (8 pi z^3).
    const double pi = 3.14159265358979323846;
    CHECK(e2 == doctest::Approx(-sigma / (8.0 * pi * z * z * z))
                    .epsilon(1e-10));
  }

  bool saw_regularized = false;
  bool saw_limit = false;
  for (const std::string& c : t.comments) {
    if (contains(c, "regularized_sigma_integral:")) {
      saw_regularized = true;
      const double v = as_double(c.substr(c.find(':') + 1));
      CHECK(v == doctest::Approx(-0.75).epsilon(1e-5));
    }
    if (contains(c, "cp_limit")) saw_limit = true;
  }
  CHECK(saw_regularized);
  CHECK(saw_limit);
}

TEST_CASE("units defaults report the reference numbers") {
  const RunResult r = run_cli("units");
  REQUIRE(r.status == 0);
  const Table t = parse_csv(r.out);
  CHECK(t.header == "quantity,value");
  std::map<std::string, double> vals;
  for (const auto& row : t.rows) {
    REQUIRE(row.size() == 2);
    vals[row[0]] = as_double(row[1]);
  }
  REQUIRE(vals.size() == 4);
  CHECK(vals.at("dipole_scale_nm") == doctest::Approx(19.7327).epsilon(1e-12));
  CHECK(vals.at("stated_gold_bound_nm") == 20.0);
  CHECK(vals.at("barrier_kelvin") == doctest::Approx(2125.66).epsilon(1e-4));
  CHECK(vals.at("levitation_ratio") == doctest::Approx(270000.0).epsilon(1e-9));

  const RunResult js = run_cli("units --format json");
  REQUIRE(js.status == 0);
  const nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j.at("rows").at(0).at("quantity") == "dipole_scale_nm");
}

TEST_CASE("equilibria table lists roots with stability and barriers") {
  const RunResult r = run_cli(
      "equilibria --wall-ratio perfect --z-min 3 --z-max 12 --points 121");
  REQUIRE(r.status == 0);
  const Table t = parse_csv(r.out);
  CHECK(t.header == "z_star,stable,stiffness,barrier_to_next");
  REQUIRE(t.rows.size() >= 2);

  double prev = 0.0;
  bool saw_barrier = false;
  for (const auto& row : t.rows) {
    REQUIRE(row.size() == 4);
    const double z = as_double(row[0]);
    CHECK(z > prev);
    prev = z;
    CHECK((row[1] == "0" || row[1] == "1"));
    CHECK(as_double(row[2]) > 0.0);
    if (row[3] != "nan") {
      CHECK(as_double(row[3]) > 0.0);
      saw_barrier = true;
      CHECK(row[1] == "1");  // only stable points own a barrier
    }
  }
  CHECK(saw_barrier);
}

TEST_CASE("thermal curve runs at finite temperature") {
  const RunResult r = run_cli("thermal --beta 5 --z-min 3 --z-max 4 --points 3");
  REQUIRE(r.status == 0);
  const Table t = parse_csv(r.out);
  CHECK(t.header == "z,f_total,f_j,f_p,v_total,v_j,v_p");
  REQUIRE(t.rows.size() == 3);
  CHECK(contains(t.comments[2], "beta=5"));
  for (const auto& row : t.rows) {
    CHECK(std::isfinite(as_double(row[1])));
  }
}
