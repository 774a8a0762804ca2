#include "yfluor/experiment.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "yfluor/dressed.hpp"
#include "yfluor/dynamics.hpp"
#include "yfluor/spectrum.hpp"

namespace yfluor {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value, int line_no) {
  try {
    size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": " + key +
                     ": cannot parse '" + value + "' as a number");
  }
}

int parse_int(const std::string& key, const std::string& value, int line_no) {
  try {
    size_t pos = 0;
    const int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": " + key +
                     ": cannot parse '" + value + "' as an integer");
  }
}

[[noreturn]] void bad_value(const std::string& key, const std::string& what,
                            int line_no) {
  throw ParseError("line " + std::to_string(line_no) + ": " + key + ": " + what);
}

}  // namespace

void apply_config_value(ExperimentConfig& config, const std::string& key,
                        const std::string& value, int line_no) {
  if (key == "experiment") {
    if (value != "steady" && value != "sweep" && value != "spectrum" &&
        value != "dressed" && value != "figures") {
      bad_value(key, "unknown experiment '" + value + "'", line_no);
    }
    config.experiment = value;
  } else if (key == "figure") {
    config.figure = value;
  } else if (key == "gamma1") {
    config.params.gamma1 = parse_double(key, value, line_no);
    if (config.params.gamma1 < 0) bad_value(key, "must be non-negative", line_no);
  } else if (key == "gamma2") {
    config.params.gamma2 = parse_double(key, value, line_no);
    if (config.params.gamma2 < 0) bad_value(key, "must be non-negative", line_no);
  } else if (key == "gamma3") {
    config.params.gamma3 = parse_double(key, value, line_no);
    if (config.params.gamma3 <= 0) bad_value(key, "must be positive", line_no);
  } else if (key == "w12") {
    config.params.w12 = parse_double(key, value, line_no);
  } else if (key == "delta_a") {
    config.params.delta_a = parse_double(key, value, line_no);
  } else if (key == "delta_b") {
    config.params.delta_b = parse_double(key, value, line_no);
  } else if (key == "omega1") {
    config.params.omega1 = parse_double(key, value, line_no);
  } else if (key == "omega2") {
    config.params.omega2 = parse_double(key, value, line_no);
  } else if (key == "omega3") {
    config.params.omega3 = parse_double(key, value, line_no);
  } else if (key == "omega") {
    const double v = parse_double(key, value, line_no);
    config.params.omega1 = config.params.omega2 = config.params.omega3 = v;
  } else if (key == "p") {
    config.params.p = parse_double(key, value, line_no);
    if (std::abs(config.params.p) > 1.0) {
      bad_value(key, "interference parameter must satisfy |p| <= 1", line_no);
    }
  } else if (key == "axis") {
    try {
      sweep_axis_from_name(value);
    } catch (const Error&) {
      bad_value(key, "unknown sweep axis '" + value + "'", line_no);
    }
    config.axis = value;
  } else if (key == "min") {
    config.axis_min = parse_double(key, value, line_no);
  } else if (key == "max") {
    config.axis_max = parse_double(key, value, line_no);
  } else if (key == "points") {
    config.points = parse_int(key, value, line_no);
    if (config.points < 1) bad_value(key, "must be at least 1", line_no);
  } else if (key == "channel") {
    if (value != "a" && value != "b") bad_value(key, "must be 'a' or 'b'", line_no);
    config.channel = value;
  } else if (key == "offset_min") {
    config.offset_min = parse_double(key, value, line_no);
  } else if (key == "offset_max") {
    config.offset_max = parse_double(key, value, line_no);
  } else if (key == "spectrum_points") {
    config.spectrum_points = parse_int(key, value, line_no);
    if (config.spectrum_points < 1) bad_value(key, "must be at least 1", line_no);
  } else if (key == "out") {
    config.out_prefix = value;
  } else if (key == "dump_liouvillian") {
    config.dump_liouvillian = value;
  } else {
    throw UnknownKey("line " + std::to_string(line_no) + ": unknown key '" +
                     key + "'");
  }
}

namespace {

struct Assignment {
  std::string key, value;
  int line_no;
};

std::vector<Assignment> collect_assignments(const std::string& text) {
  std::vector<Assignment> out;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": empty key");
    }
    out.push_back({key, value, line_no});
  }
  return out;
}

}  // namespace

void apply_config_text(ExperimentConfig& config, const std::string& text) {
  for (const Assignment& a : collect_assignments(text)) {
    apply_config_value(config, a.key, a.value, a.line_no);
  }
}

ExperimentConfig parse_config(const std::string& text) {
  const std::vector<Assignment> assignments = collect_assignments(text);

  ExperimentConfig config;
  for (const auto& a : assignments) {
    apply_config_value(config, a.key, a.value, a.line_no);
  }
  if (config.experiment.empty()) {
    throw MissingExperiment("configuration does not name an experiment");
  }
  // A figure preset supplies the base parameters; explicit keys win over it.
  if (config.experiment == "figures" && !config.figure.empty()) {
    ExperimentConfig resolved = figure_preset(config.figure);
    for (const auto& a : assignments) {
      apply_config_value(resolved, a.key, a.value, a.line_no);
    }
    return resolved;
  }
  validate(config.params);
  return config;
}

ExperimentConfig figure_preset(const std::string& id) {
  ExperimentConfig c;
  c.experiment = "figures";
  c.figure = id;
  auto& p = c.params;
  p.gamma3 = 1.0;
  if (id == "2a" || id == "2b") {
    p.gamma1 = p.gamma2 = (id == "2a") ? 0.5 : 2.0;
    p.w12 = 5.0;
    p.delta_b = 0.0;
    p.omega1 = p.omega2 = p.omega3 = 3.0;
    c.axis = "delta_a";
    c.axis_min = -15.0;
    c.axis_max = 15.0;
    c.points = 601;
  } else if (id == "3a" || id == "3b" || id == "4") {
    p.gamma1 = p.gamma2 = (id == "3b") ? 1.0 : 5.0;
    p.w12 = 0.2;
    p.delta_b = 0.0;
    p.omega1 = p.omega2 = p.omega3 = 10.0;
    c.axis = "delta_a";
    c.axis_min = -20.0;
    c.axis_max = 20.0;
    c.points = 601;
    if (id == "4") p.p = 1.0;
  } else if (id == "5a" || id == "5b") {
    p.gamma1 = p.gamma2 = 3.0;
    p.w12 = 10.0;
    p.delta_a = p.delta_b = 0.0;
    p.omega1 = p.omega2 = 10.0;
    p.omega3 = 5.0;
    c.channel = (id == "5a") ? "a" : "b";
    c.offset_min = -30.0;
    c.offset_max = 30.0;
    c.spectrum_points = 2001;
  } else if (id == "6" || id == "7a" || id == "7b") {
    p.gamma1 = p.gamma2 = 3.0;
    p.w12 = 10.0;
    p.delta_a = p.delta_b = 0.0;
    p.omega3 = 5.0;
    c.axis = "omega_all";
    c.axis_min = 0.0;
    c.axis_max = 20.0;
    c.points = 601;
  } else {
    throw ParseError("unknown figure id '" + id +
                     "' (expected one of 2a 2b 3a 3b 4 5a 5b 6 7a 7b)");
  }
  return c;
}

// ---------------------------------------------------------------------------
// output helpers
// ---------------------------------------------------------------------------
namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> grid(n);
  if (n == 1) {
    grid[0] = lo;
    return grid;
  }
  for (int i = 0; i < n; ++i) grid[i] = lo + (hi - lo) * i / (n - 1);
  return grid;
}

std::ofstream open_output(const std::string& path) {
  const std::filesystem::path parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream file(path, std::ios::binary);  // binary: identical bytes everywhere
  if (!file) throw Error("cannot open output file '" + path + "'");
  return file;
}

std::string params_comment(const AtomParams& p) {
  return "# gamma1=" + fmt(p.gamma1) + " gamma2=" + fmt(p.gamma2) +
         " gamma3=" + fmt(p.gamma3) + " w12=" + fmt(p.w12) +
         " delta_a=" + fmt(p.delta_a) + " delta_b=" + fmt(p.delta_b) +
         " omega1=" + fmt(p.omega1) + " omega2=" + fmt(p.omega2) +
         " omega3=" + fmt(p.omega3) + " p=" + fmt(p.p) + "\n";
}

using Row = std::vector<std::optional<double>>;

void write_csv(const std::string& path, const std::string& meta,
               const std::string& header, const std::vector<Row>& rows,
               std::ostream& report) {
  std::ofstream file = open_output(path);
  file << meta << header << "\n";
  for (const Row& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) file << ",";
      if (row[i]) file << fmt(*row[i]);
    }
    file << "\n";
  }
  report << "wrote " << path << " (" << rows.size() << " rows)\n";
}

void dump_liouvillian_csv(const AtomParams& params, const std::string& path,
                          std::ostream& report) {
  const LiouvillianSystem sys = build_liouvillian(params);
  std::ofstream file = open_output(path);
  file << "# Liouvillian matrix entries (1-based coherence-vector indices); "
          "rows with col=0 hold the inhomogeneous vector\n";
  file << params_comment(params);
  file << "row,col,re,im\n";
  for (int r = 0; r < kPsiSize; ++r) {
    for (int c = 0; c < kPsiSize; ++c) {
      file << (r + 1) << "," << (c + 1) << "," << fmt(sys.L(r, c).real()) << ","
           << fmt(sys.L(r, c).imag()) << "\n";
    }
  }
  for (int r = 0; r < kPsiSize; ++r) {
    file << (r + 1) << ",0," << fmt(sys.inhom[r].real()) << ","
         << fmt(sys.inhom[r].imag()) << "\n";
  }
  report << "wrote " << path << "\n";
}

std::string base_name(const std::string& prefix) {
  return std::filesystem::path(prefix).filename().string();
}

// ---------------------------------------------------------------------------
// experiments
// ---------------------------------------------------------------------------

int run_steady(const ExperimentConfig& config, std::ostream& out) {
  const DensityMatrix rho = steady_state(config.params);
  out << "rho11 = " << fmt(rho(1, 1).real()) << "\n";
  out << "rho22 = " << fmt(rho(2, 2).real()) << "\n";
  out << "rho33 = " << fmt(rho(3, 3).real()) << "\n";
  out << "rho44 = " << fmt(rho(4, 4).real()) << "\n";
  return 0;
}

int run_sweep(const ExperimentConfig& config, std::ostream& out) {
  const SweepAxis axis = sweep_axis_from_name(config.axis);
  const std::vector<double> grid =
      linspace(config.axis_min, config.axis_max, config.points);
  const SweepSeries series = sweep(config.params, axis, grid);

  std::vector<Row> rows;
  rows.reserve(grid.size());
  size_t gaps = 0;
  for (size_t i = 0; i < grid.size(); ++i) {
    const SweepRecord& rec = series.records[i];
    Row row(7);
    row[0] = grid[i];
    if (rec.ok) {
      row[1] = rec.rho11;
      row[2] = rec.rho22;
      row[3] = rec.rho33;
      row[4] = rec.rho44;
      row[5] = rec.rho_ss;
      row[6] = rec.rho_aa;
    } else {
      ++gaps;
    }
    rows.push_back(std::move(row));
  }
  const std::string meta =
      "# experiment=sweep axis=" + config.axis + " min=" + fmt(config.axis_min) +
      " max=" + fmt(config.axis_max) + " points=" + std::to_string(config.points) +
      "\n" + params_comment(config.params);
  write_csv(config.out_prefix + "_sweep.csv", meta,
            sweep_axis_name(axis) + ",rho11,rho22,rho33,rho44,rho_ss,rho_aa", rows,
            out);
  if (gaps) out << gaps << " singular point(s) recorded as gaps\n";
  return 0;
}

int run_spectrum(const ExperimentConfig& config, std::ostream& out) {
  const std::vector<double> offsets =
      linspace(config.offset_min, config.offset_max, config.spectrum_points);
  const SpectrumSeries series = (config.channel == "a")
                                    ? spectrum_a(config.params, offsets)
                                    : spectrum_b(config.params, offsets);
  std::vector<Row> rows;
  rows.reserve(offsets.size());
  for (size_t i = 0; i < offsets.size(); ++i) {
    rows.push_back({offsets[i], series.values[i]});
  }
  const std::string meta = "# experiment=spectrum channel=" + config.channel +
                           " offset_min=" + fmt(config.offset_min) +
                           " offset_max=" + fmt(config.offset_max) + " points=" +
                           std::to_string(config.spectrum_points) + "\n" +
                           params_comment(config.params);
  write_csv(config.out_prefix + "_spectrum_" + config.channel + ".csv", meta,
            "offset,s_" + config.channel, rows, out);
  return 0;
}

int run_dressed(const ExperimentConfig& config, std::ostream& out) {
  const std::vector<double> grid =
      linspace(config.axis_min, config.axis_max, config.points);
  const AtomParams& base = config.params;
  const bool labeled = std::abs(base.delta_a) < 1e-12 &&
                       std::abs(base.delta_b) < 1e-12 &&
                       std::abs(base.omega3 - 0.5 * base.w12) < 1e-12;

  auto state_order = [&](const std::array<DressedState, 4>& states) {
    std::array<int, 4> order{0, 1, 2, 3};
    if (labeled) {
      for (int k = 0; k < 4; ++k) {
        switch (states[k].label) {
          case DressedLabel::d: order[0] = k; break;
          case DressedLabel::m: order[1] = k; break;
          case DressedLabel::plus: order[2] = k; break;
          case DressedLabel::minus: order[3] = k; break;
          case DressedLabel::generic: break;
        }
      }
    }
    return order;
  };

  std::vector<Row> eig_rows, pop_rows;
  for (double omega : grid) {
    AtomParams point = base;
    point.omega1 = point.omega2 = omega;
    Row erow(5), prow(5);
    erow[0] = prow[0] = omega;
    try {
      const auto states = dressed_states(point);
      const auto order = state_order(states);
      for (int k = 0; k < 4; ++k) erow[1 + k] = states[order[k]].lambda;
      const DensityMatrix rho = steady_state(point);
      const auto pops = dressed_populations(rho, states);
      for (int k = 0; k < 4; ++k) prow[1 + k] = pops[order[k]];
    } catch (const Error&) {
      // degenerate or singular point: keep the row as a gap
    }
    eig_rows.push_back(std::move(erow));
    pop_rows.push_back(std::move(prow));
  }

  const std::string eig_header =
      labeled ? "omega,lambda_d,lambda_m,lambda_plus,lambda_minus"
              : "omega,lambda_1,lambda_2,lambda_3,lambda_4";
  const std::string pop_header =
      labeled ? "omega,rho_dd,rho_mm,rho_plus_plus,rho_minus_minus"
              : "omega,pop_1,pop_2,pop_3,pop_4";
  const std::string meta = "# experiment=dressed min=" + fmt(config.axis_min) +
                           " max=" + fmt(config.axis_max) + " points=" +
                           std::to_string(config.points) + "\n" +
                           params_comment(base);
  write_csv(config.out_prefix + "_dressed_eigenvalues.csv", meta, eig_header,
            eig_rows, out);
  write_csv(config.out_prefix + "_dressed_populations.csv", meta, pop_header,
            pop_rows, out);
  return 0;
}

void write_plot_script(const std::string& path, const std::string& body,
                       std::ostream& report) {
  std::ofstream file = open_output(path);
  file << body;
  report << "wrote " << path << "\n";
}

int run_population_figure(const ExperimentConfig& config, std::ostream& out) {
  // figures 2a/2b/3a/3b: steady populations vs delta_a at p = 0 and p = 1
  const std::string& id = config.figure;
  const std::vector<double> grid =
      linspace(config.axis_min, config.axis_max, config.points);
  const double rho33_divisor = (id == "2a") ? 3.0 : 6.0;

  for (int pflag : {0, 1}) {
    AtomParams params = config.params;
    params.p = pflag;
    const SweepSeries series = sweep(params, SweepAxis::delta_a, grid);
    std::vector<Row> rows;
    for (size_t i = 0; i < grid.size(); ++i) {
      const SweepRecord& r = series.records[i];
      Row row(5);
      row[0] = grid[i];
      if (r.ok) {
        row[1] = r.rho11;
        row[2] = r.rho22;
        row[3] = r.rho33;
        row[4] = r.rho44;
      }
      rows.push_back(std::move(row));
    }
    const std::string meta = "# experiment=figures figure=" + id +
                             " p=" + std::to_string(pflag) + "\n" +
                             params_comment(params);
    write_csv(config.out_prefix + "_fig" + id + "_p" + std::to_string(pflag) +
                  ".csv",
              meta, "delta_a,rho11,rho22,rho33,rho44", rows, out);
  }

  const std::string stem = base_name(config.out_prefix) + "_fig" + id;
  std::string gp;
  gp += "# populations vs detuning, figure preset " + id + "\n";
  gp += "set datafile separator ','\n";
  gp += "set xlabel 'delta_a / gamma3'\n";
  gp += "set ylabel 'steady-state population'\n";
  gp += "# rho33 is drawn divided by " + fmt(rho33_divisor) +
        " (the files hold actual values)\n";
  gp += "plot '" + stem + "_p1.csv' using 1:2 with lines lw 2 title 'rho11 (p=1)', \\\n";
  gp += "     '" + stem + "_p0.csv' using 1:2 with lines dashtype 2 title 'rho11 (p=0)', \\\n";
  gp += "     '" + stem + "_p1.csv' using 1:($4/" + fmt(rho33_divisor) +
        ") with lines lw 2 title 'rho33/" + fmt(rho33_divisor) + " (p=1)', \\\n";
  gp += "     '" + stem + "_p0.csv' using 1:($4/" + fmt(rho33_divisor) +
        ") with lines dashtype 2 title 'rho33/" + fmt(rho33_divisor) + " (p=0)'\n";
  write_plot_script(config.out_prefix + "_fig" + id + ".gp", gp, out);
  return 0;
}

int run_sym_antisym_figure(const ExperimentConfig& config, std::ostream& out) {
  const std::vector<double> grid =
      linspace(config.axis_min, config.axis_max, config.points);
  AtomParams params = config.params;
  params.p = 1.0;
  const SweepSeries series = sweep(params, SweepAxis::delta_a, grid);
  std::vector<Row> rows;
  for (size_t i = 0; i < grid.size(); ++i) {
    const SweepRecord& r = series.records[i];
    Row row(3);
    row[0] = grid[i];
    if (r.ok) {
      row[1] = r.rho_ss;
      row[2] = r.rho_aa;
    }
    rows.push_back(std::move(row));
  }
  const std::string meta =
      "# experiment=figures figure=4 p=1\n" + params_comment(params);
  write_csv(config.out_prefix + "_fig4.csv", meta, "delta_a,rho_ss,rho_aa", rows,
            out);

  const std::string stem = base_name(config.out_prefix) + "_fig4";
  std::string gp;
  gp += "# symmetric/antisymmetric populations vs detuning, figure preset 4\n";
  gp += "set datafile separator ','\n";
  gp += "set xlabel 'delta_a / gamma3'\n";
  gp += "set ylabel 'steady-state population'\n";
  gp += "plot '" + stem + ".csv' using 1:2 with lines title 'rho_ss', \\\n";
  gp += "     '" + stem + ".csv' using 1:3 with lines title 'rho_aa'\n";
  write_plot_script(config.out_prefix + "_fig4.gp", gp, out);
  return 0;
}

int run_spectrum_figure(const ExperimentConfig& config, std::ostream& out) {
  const std::string& id = config.figure;  // 5a or 5b
  const bool channel_a = (id == "5a");
  const std::vector<double> offsets =
      linspace(config.offset_min, config.offset_max, config.spectrum_points);

  std::vector<double> values_p0, values_p1;
  for (int pflag : {0, 1}) {
    AtomParams params = config.params;
    params.p = pflag;
    const SpectrumSeries series = channel_a ? spectrum_a(params, offsets)
                                            : spectrum_b(params, offsets);
    (pflag ? values_p1 : values_p0) = series.values;
  }
  std::vector<Row> rows;
  for (size_t i = 0; i < offsets.size(); ++i) {
    rows.push_back({offsets[i], values_p0[i], values_p1[i]});
  }
  const std::string column = channel_a ? "s_a" : "s_b";
  const std::string meta = "# experiment=figures figure=" + id +
                           " (columns hold p=0 and p=1)\n" +
                           params_comment(config.params);
  write_csv(config.out_prefix + "_fig" + id + ".csv", meta,
            "offset," + column + "_p0," + column + "_p1", rows, out);

  const std::string stem = base_name(config.out_prefix) + "_fig" + id;
  std::string gp;
  gp += "# incoherent spectrum, figure preset " + id + "\n";
  gp += "set datafile separator ','\n";
  gp += "set xlabel 'offset / gamma3'\n";
  gp += "set ylabel 'spectral density'\n";
  gp += "plot '" + stem + ".csv' using 1:3 with lines lw 2 title '" + column +
        " (p=1)', \\\n";
  gp += "     '" + stem + ".csv' using 1:2 with lines dashtype 2 title '" +
        column + " (p=0)'\n";
  write_plot_script(config.out_prefix + "_fig" + id + ".gp", gp, out);
  return 0;
}

int run_eigenvalue_figure(const ExperimentConfig& config, std::ostream& out) {
  const std::vector<double> grid =
      linspace(config.axis_min, config.axis_max, config.points);
  std::vector<Row> rows;
  for (double omega : grid) {
    AtomParams point = config.params;
    point.omega1 = point.omega2 = omega;
    const auto states = dressed_states(point);
    Row row(5);
    row[0] = omega;
    for (const auto& st : states) {
      switch (st.label) {
        case DressedLabel::d: row[1] = st.lambda; break;
        case DressedLabel::m: row[2] = st.lambda; break;
        case DressedLabel::plus: row[3] = st.lambda; break;
        case DressedLabel::minus: row[4] = st.lambda; break;
        case DressedLabel::generic: break;
      }
    }
    rows.push_back(std::move(row));
  }
  const std::string meta =
      "# experiment=figures figure=6 (omega1=omega2 swept)\n" +
      params_comment(config.params);
  write_csv(config.out_prefix + "_fig6.csv", meta,
            "omega,lambda_d,lambda_m,lambda_plus,lambda_minus", rows, out);

  const std::string stem = base_name(config.out_prefix) + "_fig6";
  std::string gp;
  gp += "# dressed eigenvalues vs Rabi frequency, figure preset 6\n";
  gp += "set datafile separator ','\n";
  gp += "set xlabel 'omega / gamma3'\n";
  gp += "set ylabel 'eigenvalue / gamma3'\n";
  gp += "plot '" + stem + ".csv' using 1:2 with lines title 'lambda_d', \\\n";
  gp += "     '" + stem + ".csv' using 1:3 with lines title 'lambda_m', \\\n";
  gp += "     '" + stem + ".csv' using 1:4 with lines title 'lambda_+', \\\n";
  gp += "     '" + stem + ".csv' using 1:5 with lines title 'lambda_-'\n";
  write_plot_script(config.out_prefix + "_fig6.gp", gp, out);
  return 0;
}

int run_dressed_population_figure(const ExperimentConfig& config, std::ostream& out) {
  const std::string& id = config.figure;  // 7a or 7b
  const std::vector<double> grid =
      linspace(config.axis_min, config.axis_max, config.points);

  for (int pflag : {0, 1}) {
    AtomParams params = config.params;
    params.p = pflag;
    std::vector<Row> rows;
    for (double omega : grid) {
      AtomParams point = params;
      point.omega1 = point.omega2 = omega;
      Row row(5);
      row[0] = omega;
      try {
        const auto states = dressed_states(point);
        const DensityMatrix rho = steady_state(point);
        const auto pops = dressed_populations(rho, states);
        for (int k = 0; k < 4; ++k) {
          switch (states[k].label) {
            case DressedLabel::d: row[1] = pops[k]; break;
            case DressedLabel::m: row[2] = pops[k]; break;
            case DressedLabel::plus: row[3] = pops[k]; break;
            case DressedLabel::minus: row[4] = pops[k]; break;
            case DressedLabel::generic: break;
          }
        }
      } catch (const Error&) {
        // gap
      }
      rows.push_back(std::move(row));
    }
    const std::string meta = "# experiment=figures figure=" + id +
                             " p=" + std::to_string(pflag) +
                             " (omega1=omega2 swept)\n" + params_comment(params);
    write_csv(config.out_prefix + "_fig7_p" + std::to_string(pflag) + ".csv",
              meta, "omega,rho_dd,rho_mm,rho_plus_plus,rho_minus_minus", rows,
              out);
  }

  const std::string stem = base_name(config.out_prefix) + "_fig7";
  const bool panel_a = (id == "7a");
  std::string gp;
  gp += "# dressed populations vs Rabi frequency, figure preset " + id + "\n";
  gp += "set datafile separator ','\n";
  gp += "set xlabel 'omega / gamma3'\n";
  gp += "set ylabel 'steady-state population'\n";
  if (panel_a) {
    gp += "plot '" + stem + "_p1.csv' using 1:3 with lines lw 2 title 'rho_mm (p=1)', \\\n";
    gp += "     '" + stem + "_p0.csv' using 1:3 with lines dashtype 2 title 'rho_mm (p=0)', \\\n";
    gp += "     '" + stem + "_p1.csv' using 1:2 with lines lw 2 title 'rho_dd (p=1)', \\\n";
    gp += "     '" + stem + "_p0.csv' using 1:2 with lines dashtype 2 title 'rho_dd (p=0)'\n";
  } else {
    gp += "plot '" + stem + "_p1.csv' using 1:4 with lines lw 2 title 'rho_++ (p=1)', \\\n";
    gp += "     '" + stem + "_p0.csv' using 1:4 with lines dashtype 2 title 'rho_++ (p=0)', \\\n";
    gp += "     '" + stem + "_p1.csv' using 1:5 with lines lw 2 title 'rho_-- (p=1)', \\\n";
    gp += "     '" + stem + "_p0.csv' using 1:5 with lines dashtype 2 title 'rho_-- (p=0)'\n";
  }
  write_plot_script(config.out_prefix + "_fig" + id + ".gp", gp, out);
  return 0;
}

int run_figures(const ExperimentConfig& config, std::ostream& out) {
  const std::string& id = config.figure;
  if (id == "2a" || id == "2b" || id == "3a" || id == "3b") {
    return run_population_figure(config, out);
  }
  if (id == "4") return run_sym_antisym_figure(config, out);
  if (id == "5a" || id == "5b") return run_spectrum_figure(config, out);
  if (id == "6") return run_eigenvalue_figure(config, out);
  if (id == "7a" || id == "7b") return run_dressed_population_figure(config, out);
  throw ParseError("unknown figure id '" + id + "'");
}

}  // namespace

int run_experiment(const ExperimentConfig& config, std::ostream& out,
                   std::ostream& err) {
  try {
    validate(config.params);
    if (!config.dump_liouvillian.empty()) {
      dump_liouvillian_csv(config.params, config.dump_liouvillian, out);
    }
    if (config.experiment == "steady") return run_steady(config, out);
    if (config.experiment == "sweep") return run_sweep(config, out);
    if (config.experiment == "spectrum") return run_spectrum(config, out);
    if (config.experiment == "dressed") return run_dressed(config, out);
    if (config.experiment == "figures") return run_figures(config, out);
    throw MissingExperiment(config.experiment.empty()
                                ? "no experiment selected"
                                : "unknown experiment '" + config.experiment + "'");
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return 3;
  } catch (const SingularLiouvillian& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace yfluor
