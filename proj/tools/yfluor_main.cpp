// Command-line front end: steady states, parameter sweeps, fluorescence
// spectra, dressed-state tables, and the bundled figure presets.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "yfluor/experiment.hpp"

namespace {

struct CliValues {
  std::optional<std::string> config_path;
  std::optional<double> gamma1, gamma2, gamma3, w12, delta_a, delta_b;
  std::optional<double> omega1, omega2, omega3, omega, p;
  std::optional<std::string> axis;
  std::optional<double> min, max;
  std::optional<int> points;
  std::optional<std::string> channel;
  std::optional<double> offset_min, offset_max;
  std::optional<int> spectrum_points;
  std::optional<std::string> out;
  std::optional<std::string> dump_liouvillian;
};

void add_common_options(CLI::App* cmd, CliValues& v) {
  cmd->add_option("--config", v.config_path, "key = value configuration file");
  cmd->add_option("--gamma1", v.gamma1, "half decay rate of |1> -> |3>");
  cmd->add_option("--gamma2", v.gamma2, "half decay rate of |2> -> |3>");
  cmd->add_option("--gamma3", v.gamma3, "half decay rate of |3> -> |4> (unit)");
  cmd->add_option("--w12", v.w12, "excited-level splitting");
  cmd->add_option("--delta_a", v.delta_a, "detuning of the upper-transition field");
  cmd->add_option("--delta_b", v.delta_b, "detuning of the lower-transition field");
  cmd->add_option("--omega1", v.omega1, "Rabi frequency on |1> <-> |3>");
  cmd->add_option("--omega2", v.omega2, "Rabi frequency on |2> <-> |3>");
  cmd->add_option("--omega3", v.omega3, "Rabi frequency on |3> <-> |4>");
  cmd->add_option("--omega", v.omega, "sets omega1 = omega2 = omega3");
  cmd->add_option("--p", v.p, "interference parameter, |p| <= 1");
  cmd->add_option("--out", v.out, "output path prefix");
  cmd->add_option("--dump-liouvillian", v.dump_liouvillian,
                  "dump the generator matrix and inhomogeneous vector as CSV");
}

// Applies file values first, command-line flags second (flags win).
void resolve(yfluor::ExperimentConfig& config, const CliValues& v) {
  using yfluor::apply_config_value;
  if (v.config_path) {
    std::ifstream file(*v.config_path);
    if (!file) throw yfluor::ConfigError("cannot read config file '" + *v.config_path + "'");
    std::ostringstream text;
    text << file.rdbuf();
    yfluor::apply_config_text(config, text.str());
  }
  auto set_d = [&config](const char* key, const std::optional<double>& value) {
    if (value) {
      std::ostringstream s;
      s.precision(17);
      s << *value;
      apply_config_value(config, key, s.str(), 0);
    }
  };
  auto set_i = [&config](const char* key, const std::optional<int>& value) {
    if (value) apply_config_value(config, key, std::to_string(*value), 0);
  };
  auto set_s = [&config](const char* key, const std::optional<std::string>& value) {
    if (value) apply_config_value(config, key, *value, 0);
  };
  set_d("gamma1", v.gamma1);
  set_d("gamma2", v.gamma2);
  set_d("gamma3", v.gamma3);
  set_d("w12", v.w12);
  set_d("delta_a", v.delta_a);
  set_d("delta_b", v.delta_b);
  set_d("omega1", v.omega1);
  set_d("omega2", v.omega2);
  set_d("omega3", v.omega3);
  set_d("omega", v.omega);
  set_d("p", v.p);
  set_s("axis", v.axis);
  set_d("min", v.min);
  set_d("max", v.max);
  set_i("points", v.points);
  set_s("channel", v.channel);
  set_d("offset_min", v.offset_min);
  set_d("offset_max", v.offset_max);
  set_i("spectrum_points", v.spectrum_points);
  set_s("out", v.out);
  set_s("dump_liouvillian", v.dump_liouvillian);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "yfluor: steady states, dressed states and resonance-fluorescence "
      "spectra of a coherently driven four-level Y atom with "
      "spontaneous-emission interference"};
  app.require_subcommand(0, 1);

  CliValues top_values;
  app.add_option("--config", top_values.config_path,
                 "configuration file naming the experiment");

  CliValues steady_values, sweep_values, spectrum_values, dressed_values,
      figures_values;

  CLI::App* steady = app.add_subcommand("steady", "print the steady-state populations");
  add_common_options(steady, steady_values);

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "steady-state observables along a parameter grid");
  add_common_options(sweep_cmd, sweep_values);
  sweep_cmd->add_option("--axis", sweep_values.axis,
                        "delta_a|delta_b|omega_all|omega1|omega2|omega3|p|w12");
  sweep_cmd->add_option("--min", sweep_values.min, "grid start");
  sweep_cmd->add_option("--max", sweep_values.max, "grid end");
  sweep_cmd->add_option("--points", sweep_values.points, "grid size");

  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "incoherent fluorescence spectrum");
  add_common_options(spectrum_cmd, spectrum_values);
  spectrum_cmd->add_option("--channel", spectrum_values.channel, "a or b");
  spectrum_cmd->add_option("--offset_min", spectrum_values.offset_min, "lowest offset");
  spectrum_cmd->add_option("--offset_max", spectrum_values.offset_max, "highest offset");
  spectrum_cmd->add_option("--spectrum_points", spectrum_values.spectrum_points,
                           "frequency grid size");

  CLI::App* dressed_cmd = app.add_subcommand(
      "dressed", "dressed eigenvalues and populations vs Rabi frequency");
  add_common_options(dressed_cmd, dressed_values);
  dressed_cmd->add_option("--min", dressed_values.min, "lowest omega");
  dressed_cmd->add_option("--max", dressed_values.max, "highest omega");
  dressed_cmd->add_option("--points", dressed_values.points, "grid size");

  std::string figure_id;
  CLI::App* figures_cmd =
      app.add_subcommand("figures", "run a named figure preset");
  figures_cmd->add_option("id", figure_id, "preset id: 2a 2b 3a 3b 4 5a 5b 6 7a 7b")
      ->required();
  add_common_options(figures_cmd, figures_values);

  CLI11_PARSE(app, argc, argv);

  try {
    yfluor::ExperimentConfig config;
    if (steady->parsed()) {
      config.experiment = "steady";
      resolve(config, steady_values);
    } else if (sweep_cmd->parsed()) {
      config.experiment = "sweep";
      resolve(config, sweep_values);
    } else if (spectrum_cmd->parsed()) {
      config.experiment = "spectrum";
      resolve(config, spectrum_values);
    } else if (dressed_cmd->parsed()) {
      config.experiment = "dressed";
      // dressed sweeps the Rabi frequency; start the grid at zero by default
      config.axis_min = 0.0;
      config.axis_max = 20.0;
      resolve(config, dressed_values);
    } else if (figures_cmd->parsed()) {
      config = yfluor::figure_preset(figure_id);
      resolve(config, figures_values);
    } else if (top_values.config_path) {
      std::ifstream file(*top_values.config_path);
      if (!file) {
        throw yfluor::ConfigError("cannot read config file '" +
                                  *top_values.config_path + "'");
      }
      std::ostringstream text;
      text << file.rdbuf();
      config = yfluor::parse_config(text.str());
    } else {
      std::cerr << app.help() << std::endl;
      return 3;
    }
    return yfluor::run_experiment(config, std::cout, std::cerr);
  } catch (const yfluor::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << std::endl;
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
}
