#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "yfluor/experiment.hpp"

using namespace yfluor;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "yfluor_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream file(path, std::ios::binary);
  REQUIRE(file.good());
  std::ostringstream text;
  text << file.rdbuf();
  return text.str();
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(YFLUOR_CLI_PATH) + " " + args + " > /dev/null 2> /dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

// numeric comparison of two CSV files, tolerance 1e-9 on every field
void compare_csv(const std::string& got, const std::string& want) {
  std::istringstream got_stream(got), want_stream(want);
  std::string got_line, want_line;
  int line_no = 0;
  while (std::getline(want_stream, want_line)) {
    ++line_no;
    REQUIRE(std::getline(got_stream, got_line));
    if (!want_line.empty() && (want_line[0] == '#' || std::isalpha(want_line[0]))) {
      CHECK(got_line == want_line);
      continue;
    }
    std::istringstream got_fields(got_line), want_fields(want_line);
    std::string gf, wf;
    while (std::getline(want_fields, wf, ',')) {
      REQUIRE(std::getline(got_fields, gf, ','));
      if (wf.empty()) {
        CHECK(gf.empty());
      } else {
        const double gv = std::stod(gf);
        const double wv = std::stod(wf);
        CHECK(std::abs(gv - wv) <= 1e-9 * std::max(1.0, std::abs(wv)));
      }
    }
    CHECK_FALSE(std::getline(got_fields, gf, ','));
  }
  CHECK_FALSE(std::getline(got_stream, got_line));
}

}  // namespace

TEST_CASE("config text resolves against the defaults") {
  const ExperimentConfig c = parse_config("experiment = steady\nomega1 = 3\n");
  CHECK(c.experiment == "steady");
  CHECK(c.params.omega1 == 3.0);
  CHECK(c.params.gamma3 == 1.0);
  CHECK(c.params.p == 1.0);
  CHECK(c.points == 601);
  CHECK(c.spectrum_points == 2001);
}

TEST_CASE("comments, blank lines and spacing are tolerated") {
  const ExperimentConfig c = parse_config(
      "# a comment\n"
      "\n"
      "experiment=sweep   # trailing comment\n"
      "  axis =  omega_all\n"
      "w12\t=\t2.5\n");
  CHECK(c.experiment == "sweep");
  CHECK(c.axis == "omega_all");
  CHECK(c.params.w12 == 2.5);
}

TEST_CASE("out-of-range values are rejected with the key name") {
  try {
    parse_config("experiment = steady\np = 2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("p") != std::string::npos);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("unknown keys carry their line number") {
  try {
    parse_config("experiment = steady\nomeg = 3\n");
    FAIL("expected UnknownKey");
  } catch (const UnknownKey& e) {
    CHECK(std::string(e.what()).find("omeg") != std::string::npos);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("malformed lines and missing experiment are reported") {
  CHECK_THROWS_AS(parse_config("experiment = steady\nnonsense\n"), ParseError);
  CHECK_THROWS_AS(parse_config("omega1 = 3\n"), MissingExperiment);
}

TEST_CASE("figure presets resolve from config text") {
  const ExperimentConfig c = parse_config("experiment = figures\nfigure = 2b\n");
  CHECK(c.figure == "2b");
  CHECK(c.params.gamma1 == 2.0);
  CHECK(c.params.gamma2 == 2.0);
  CHECK(c.params.w12 == 5.0);
  CHECK(c.params.delta_b == 0.0);
  CHECK(c.params.omega1 == 3.0);
  CHECK(c.params.omega2 == 3.0);
  CHECK(c.params.omega3 == 3.0);
  CHECK(c.axis_min == -15.0);
  CHECK(c.axis_max == 15.0);
  CHECK(c.points == 601);
}

TEST_CASE("explicit keys override a figure preset") {
  const ExperimentConfig c =
      parse_config("experiment = figures\nfigure = 2b\ngamma1 = 7\n");
  CHECK(c.params.gamma1 == 7.0);
  CHECK(c.params.gamma2 == 2.0);
}

TEST_CASE("unknown figure ids are a configuration error") {
  CHECK_THROWS_AS(figure_preset("9z"), ParseError);
}

TEST_CASE("steady experiment prints the populations") {
  ExperimentConfig config;
  config.experiment = "steady";
  config.params.gamma1 = config.params.gamma2 = 1.0;
  config.params.w12 = 0.2;
  config.params.omega1 = config.params.omega2 = config.params.omega3 = 10.0;
  config.params.p = 1.0;
  std::ostringstream out, err;
  CHECK(run_experiment(config, out, err) == 0);
  const std::string text = out.str();
  const auto pos = text.find("rho11 = ");
  REQUIRE(pos != std::string::npos);
  const double rho11 = std::stod(text.substr(pos + 8));
  CHECK(std::abs(rho11 - 0.25) < 0.025);
  CHECK(text.find("rho44 = ") != std::string::npos);
}

TEST_CASE("singular steady state exits with code 2") {
  ExperimentConfig config;
  config.experiment = "steady";
  config.params.gamma1 = config.params.gamma2 = 1.0;
  config.params.w12 = 0.0;
  config.params.p = 1.0;
  config.params.omega1 = config.params.omega2 = config.params.omega3 = 3.0;
  std::ostringstream out, err;
  CHECK(run_experiment(config, out, err) == 2);
  CHECK(err.str().find("steady state") != std::string::npos);
}

TEST_CASE("sweep emits gaps as empty fields") {
  const fs::path dir = fresh_dir("sweep_gaps");
  ExperimentConfig config;
  config.experiment = "sweep";
  config.axis = "w12";
  config.axis_min = -0.1;
  config.axis_max = 0.1;
  config.points = 3;
  config.params.gamma1 = config.params.gamma2 = 1.0;
  config.params.p = 1.0;
  config.params.omega1 = config.params.omega2 = config.params.omega3 = 3.0;
  config.out_prefix = (dir / "run").string();
  std::ostringstream out, err;
  CHECK(run_experiment(config, out, err) == 0);
  const std::string csv = slurp(dir / "run_sweep.csv");
  CHECK(csv.find("w12,rho11,rho22,rho33,rho44,rho_ss,rho_aa") != std::string::npos);
  CHECK(csv.find("\n0,,,,,,\n") != std::string::npos);
  CHECK(out.str().find("1 singular point(s)") != std::string::npos);
}

TEST_CASE("dump option writes the generator as CSV") {
  const fs::path dir = fresh_dir("dump");
  ExperimentConfig config;
  config.experiment = "steady";
  config.params.omega1 = config.params.omega2 = config.params.omega3 = 3.0;
  config.params.w12 = 5.0;
  config.dump_liouvillian = (dir / "generator.csv").string();
  std::ostringstream out, err;
  CHECK(run_experiment(config, out, err) == 0);
  const std::string csv = slurp(dir / "generator.csv");
  CHECK(csv.find("row,col,re,im") != std::string::npos);
  // row 1 diagonal: -2*gamma1 = -1
  CHECK(csv.find("1,1,-1,0") != std::string::npos);
  // inhomogeneous entries land in col 0: slot 9 = i*omega3
  CHECK(csv.find("9,0,0,3") != std::string::npos);
  CHECK(csv.find("15,0,0,-3") != std::string::npos);
}

TEST_CASE("figure runs are byte-identical across repeats") {
  const fs::path dir1 = fresh_dir("repeat1");
  const fs::path dir2 = fresh_dir("repeat2");
  for (const fs::path& dir : {dir1, dir2}) {
    ExperimentConfig config = figure_preset("6");
    config.out_prefix = (dir / "run").string();
    std::ostringstream out, err;
    REQUIRE(run_experiment(config, out, err) == 0);
  }
  CHECK(slurp(dir1 / "run_fig6.csv") == slurp(dir2 / "run_fig6.csv"));
  CHECK(slurp(dir1 / "run_fig6.gp") == slurp(dir2 / "run_fig6.gp"));
}

TEST_CASE("figure presets regenerate the stored goldens") {
  const fs::path dir = fresh_dir("golden");
  for (const char* id : {"2b", "6"}) {
    ExperimentConfig config = figure_preset(id);
    config.out_prefix = (dir / "run").string();
    std::ostringstream out, err;
    REQUIRE(run_experiment(config, out, err) == 0);
  }
  compare_csv(slurp(dir / "run_fig2b_p1.csv"),
              slurp(fs::path(YFLUOR_GOLDEN_DIR) / "fig2b_p1.csv"));
  compare_csv(slurp(dir / "run_fig6.csv"),
              slurp(fs::path(YFLUOR_GOLDEN_DIR) / "fig6.csv"));
}

TEST_CASE("figure 5a emits both interference columns and a plot script") {
  const fs::path dir = fresh_dir("fig5a");
  ExperimentConfig config = figure_preset("5a");
  config.spectrum_points = 101;  // keep the unit test quick
  config.out_prefix = (dir / "run").string();
  std::ostringstream out, err;
  REQUIRE(run_experiment(config, out, err) == 0);
  const std::string csv = slurp(dir / "run_fig5a.csv");
  CHECK(csv.find("offset,s_a_p0,s_a_p1") != std::string::npos);
  const std::string gp = slurp(dir / "run_fig5a.gp");
  CHECK(gp.find("run_fig5a.csv") != std::string::npos);
}

TEST_CASE("command-line interface round trip") {
  const fs::path dir = fresh_dir("cli");
  // steady run with flags only
  CHECK(run_cli("steady --gamma1 1 --gamma2 1 --w12 0.2 --omega 10 --p 1") == 0);
  // singular Liouvillian propagates exit code 2
  CHECK(run_cli("steady --gamma1 1 --gamma2 1 --w12 0 --omega 3 --p 1") == 2);
  // config errors exit with 3
  CHECK(run_cli("figures nope") == 3);
  CHECK(run_cli("sweep --axis banana") == 3);
  // no subcommand, no config: help + exit 3
  CHECK(run_cli("") == 3);
  // config file driving the experiment without a subcommand
  const fs::path cfg = dir / "exp.cfg";
  {
    std::ofstream file(cfg);
    file << "experiment = steady\nomega = 10\nw12 = 0.2\ngamma1 = 1\ngamma2 = 1\n";
  }
  CHECK(run_cli("--config " + cfg.string()) == 0);
  // flag overrides file value: driving force removed, still fine
  CHECK(run_cli("steady --config " + cfg.string() + " --omega 0") == 0);
  // sweep writes its CSV where --out points
  CHECK(run_cli("sweep --axis delta_a --min -2 --max 2 --points 5 --omega 3 "
                "--w12 5 --out " + (dir / "cli").string()) == 0);
  CHECK(fs::exists(dir / "cli_sweep.csv"));
}
