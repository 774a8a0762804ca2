#pragma once

#include <iosfwd>
#include <string>

#include "yfluor/types.hpp"

namespace yfluor {

struct ConfigError : Error { using Error::Error; };
struct UnknownKey : ConfigError { using ConfigError::ConfigError; };
struct ParseError : ConfigError { using ConfigError::ConfigError; };
struct MissingExperiment : ConfigError { using ConfigError::ConfigError; };

/// Everything needed to run one named experiment. Field defaults double as
/// the configuration defaults.
struct ExperimentConfig {
  std::string experiment;  // steady | sweep | spectrum | dressed | figures

  AtomParams params;  // gamma3 = 1, p = 1 by default

  // sweep / dressed grids
  std::string axis = "delta_a";
  double axis_min = -15.0;
  double axis_max = 15.0;
  int points = 601;

  // spectrum grid
  std::string channel = "a";
  double offset_min = -30.0;
  double offset_max = 30.0;
  int spectrum_points = 2001;

  std::string figure;  // figure preset id (2a, 2b, 3a, 3b, 4, 5a, 5b, 6, 7a, 7b)

  std::string out_prefix = "yfluor";
  std::string dump_liouvillian;  // when non-empty, L and I are dumped here as CSV
};

/// Applies one `key = value` assignment. line_no is used in error messages
/// (pass 0 for command-line overrides). Unknown keys raise UnknownKey,
/// malformed or out-of-range values raise ParseError naming the key.
void apply_config_value(ExperimentConfig& config, const std::string& key,
                        const std::string& value, int line_no);

/// Applies every `key = value` line of a config text onto an existing
/// config, in order (# starts a comment). Does not require an experiment
/// key and performs no figure-preset resolution; used when a subcommand
/// already fixes the experiment.
void apply_config_text(ExperimentConfig& config, const std::string& text);

/// Parses line-oriented `key = value` text (# starts a comment). The
/// experiment key is mandatory; everything else falls back to defaults.
ExperimentConfig parse_config(const std::string& text);

/// The compiled-in parameter sets behind `figures <id>`.
ExperimentConfig figure_preset(const std::string& id);

/// Runs the experiment: writes CSV files (and plot scripts for figure
/// presets) under config.out_prefix and prints a short report to `out`.
/// Returns the process exit code: 0 success, 2 singular Liouvillian,
/// 3 configuration error.
int run_experiment(const ExperimentConfig& config, std::ostream& out,
                   std::ostream& err);

}  // namespace yfluor
