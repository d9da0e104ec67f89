#include "flncs/cli.hpp"

#include "flncs/algebra.hpp"
#include "flncs/errors.hpp"
#include "flncs/generation.hpp"
#include "flncs/identity.hpp"
#include "flncs/serialize.hpp"
#include "flncs/statistics.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

namespace flncs::cli {

namespace {

double parse_real(std::string_view text) {
  const std::string s(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("malformed number '" + s + "'");
  }
  if (used != s.size()) {
    throw ConfigError("malformed number '" + s + "'");
  }
  return value;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) {
    throw ConfigError("empty complex number");
  }
  if (s.back() != 'i') {
    return {parse_real(s), 0.0};
  }
  s.pop_back();
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (split == std::string::npos) {
    return {0.0, imag_part(s)};
  }
  return {parse_real(s.substr(0, split)), imag_part(s.substr(split))};
}

namespace {

enum class Format { Csv, Json };

struct Common {
  int n{1};
  int pair{2};
  std::string z{"1"};
  std::string format{"csv"};
  std::string output;
};

void add_model(CLI::App* cmd, Common& c, bool with_z = true) {
  cmd->add_option("-N", c.n, "Fock-space index N (dimension N+1)")->capture_default_str();
  cmd->add_option("--pair", c.pair,
                  "Branch: 1 -> (A,B)=(2/3,4/3), 2 -> (2/3,1/3), 3 -> (5/3,4/3)")
      ->capture_default_str();
  if (with_z) {
    cmd->add_option("-z", c.z, "Complex label z as a, a+bi or a-bi")->capture_default_str();
  }
}

void add_output(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", c.output,
                  std::string("Output file (default: standard output; relative paths go under $") +
                      kOutputDirEnv + " when set)");
}

Format format_of(const Common& c) { return c.format == "json" ? Format::Json : Format::Csv; }

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::filesystem::path path(c.output);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / path;
    }
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw ConfigError("cannot open output file '" + path.string() + "'");
  }
  file << text;
}

std::string dump(const io::ordered_json& j) { return j.dump(2) + "\n"; }

ModelParams model_of(const Common& c) { return ModelParams(c.n, pair_from_index(c.pair)); }

std::vector<double> parse_schedule(const std::string& text, int atoms) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    values.push_back(parse_real(item));
  }
  if (values.size() == 1) {
    return uniform_schedule(atoms, values.front());
  }
  if (static_cast<int>(values.size()) != atoms) {
    throw ConfigError("--gtau needs one value or N comma-separated values");
  }
  return values;
}

Window parse_window(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    v.push_back(parse_real(item));
  }
  if (v.size() != 4) {
    throw ConfigError("--window needs re_min,re_max,im_min,im_max");
  }
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-dimensional nonlinear coherent states of the Fokas-Lagerstrom oscillator",
               "flncs"};
  app.require_subcommand(1);

  Common c;

  auto* state = app.add_subcommand(
      "state", "Normalized coherent-state amplitudes d_n (CSV columns n,re,im)");
  add_model(state, c);
  add_output(state, c);

  auto* stats = app.add_subcommand(
      "stats",
      "Photon statistics P(n), mean, variance and Mandel parameter. Source data for figure "
      "fig2 (photon-number distribution)");
  add_model(stats, c);
  add_output(stats, c);

  std::string observable = "mean";
  std::optional<double> range_min;
  std::optional<double> range_max;
  int points = 0;
  auto* scan_cmd = app.add_subcommand(
      "scan",
      "Observable scans: mean and mandel versus real z (figures fig3 and fig4), s1 and s2 "
      "versus phi at fixed z (figure fig5). Phase scans default to 720 points on [0, 2pi)");
  add_model(scan_cmd, c);
  add_output(scan_cmd, c);
  scan_cmd->add_option("--observable", observable, "mandel | mean | s1 | s2")
      ->capture_default_str();
  scan_cmd->add_option("--min", range_min, "Range start (z or phi)");
  scan_cmd->add_option("--max", range_max, "Range end (z or phi)");
  scan_cmd->add_option("--points", points, "Number of samples (>= 2; default 201 for z, 720 for phi)");

  std::string window_text;
  int nx = 101;
  int ny = 101;
  std::optional<int> step;
  std::string gtau_text = "0.6283185307179586";
  auto* qfunc = app.add_subcommand(
      "qfunc",
      "Husimi Q-function grid (CSV columns re,im,q). Source data for figure fig1: with --step k "
      "it grids the cavity state after k atoms of the synthesis protocol for the target state "
      "(default gtau = pi/5, z = 1 is a free choice)");
  add_model(qfunc, c);
  add_output(qfunc, c);
  qfunc->add_option("--window", window_text,
                    "re_min,re_max,im_min,im_max (default: +-(sqrt(N)+3) on both axes)");
  qfunc->add_option("--nx", nx, "Grid points along Re alpha")->capture_default_str();
  qfunc->add_option("--ny", ny, "Grid points along Im alpha")->capture_default_str();
  qfunc->add_option("--step", step, "Grid the intermediate cavity state after this many atoms");
  qfunc->add_option("--gtau", gtau_text, "Interaction schedule for --step (one value or N values)");

  std::optional<int> max_n;
  std::optional<double> abscissa;
  bool profile = false;
  double x_min = 1e-3;
  double x_max = 1e2;
  int profile_points = 50;
  auto* identity = app.add_subcommand(
      "identity-check",
      "Resolution of identity: moments of the contour-integral weight w(x) against rho(n) "
      "(CSV columns n,numeric,analytic,rel_error); --profile dumps x,w instead");
  add_model(identity, c, false);
  add_output(identity, c);
  identity->add_option("--max-n", max_n, "Highest moment order (default N; must not exceed N)");
  identity->add_option("--abscissa", abscissa,
                       "Fixed contour abscissa c in (0, min(N+2, N+A+1, N+B+1)); default picks "
                       "the saddle point per x");
  identity->add_flag("--profile", profile, "Emit the weight profile x,w on log-spaced x");
  identity->add_option("--x-min", x_min, "Profile start")->capture_default_str();
  identity->add_option("--x-max", x_max, "Profile end")->capture_default_str();
  identity->add_option("--points", profile_points, "Profile samples")->capture_default_str();

  std::string intermediates_path;
  auto* generate = app.add_subcommand(
      "generate",
      "Atom parameters eps_k for cavity synthesis of the coherent state, plus a forward "
      "simulation report. --intermediates writes the cavity states after each atom (k,n,re,im), "
      "the input of figure fig1");
  add_model(generate, c);
  add_output(generate, c);
  generate->add_option("--gtau", gtau_text, "Interaction parameters g*tau (one value or N values)")
      ->capture_default_str();
  generate->add_option("--intermediates", intermediates_path, "CSV file for intermediate states");

  auto* spectrum = app.add_subcommand(
      "spectrum", "Energy eigenvalue E_N of each branch (CSV columns branch,energy)");
  spectrum->add_option("-N", c.n, "Fock-space index N")->capture_default_str();
  add_output(spectrum, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    const Format fmt = format_of(c);
    if (state->parsed()) {
      const ModelParams params = model_of(c);
      const Complex z = parse_complex(c.z);
      const FockVector v = coherent_state(params, z);
      emit(c, fmt == Format::Csv ? io::state_csv(v) : dump(io::state_json(params, z, v)), out);
    } else if (stats->parsed()) {
      const ModelParams params = model_of(c);
      const Complex z = parse_complex(c.z);
      const PhotonStats st = photon_stats(coherent_state(params, z));
      emit(c, fmt == Format::Csv ? io::stats_csv(st) : dump(io::stats_json(params, z, st)), out);
    } else if (scan_cmd->parsed()) {
      const ModelParams params = model_of(c);
      const Observable obs = parse_observable(observable);
      const bool phase = obs == Observable::S1 || obs == Observable::S2;
      std::vector<ScanRow> rows;
      if (phase && !range_min && !range_max) {
        rows = scan_phi(obs, coherent_state(params, parse_complex(c.z)),
                        default_phi_grid(points > 0 ? points : 720));
      } else {
        if (!range_min || !range_max) {
          throw ConfigError("scan needs both --min and --max");
        }
        rows = scan(obs, params, {*range_min, *range_max, points > 0 ? points : 201},
                    parse_complex(c.z));
      }
      emit(c, fmt == Format::Csv ? io::scan_csv(rows) : dump(io::scan_json(obs, params, rows)),
           out);
    } else if (qfunc->parsed()) {
      const ModelParams params = model_of(c);
      const FockVector target = coherent_state(params, parse_complex(c.z));
      FockVector gridded = target;
      if (step) {
        if (*step < 0 || *step > params.n()) {
          throw DomainError("--step must lie in 0..N");
        }
        const SimulationResult sim = simulate(plan(target, parse_schedule(gtau_text, params.n())));
        gridded = sim.intermediates[*step];
      }
      const Window window = window_text.empty() ? default_window(params.n())
                                                : parse_window(window_text);
      const QGrid grid = qfunction_grid(gridded, window, nx, ny);
      emit(c, fmt == Format::Csv ? io::qgrid_csv(grid) : dump(io::qgrid_json(grid)), out);
    } else if (identity->parsed()) {
      const ModelParams params = model_of(c);
      WeightOptions options;
      options.abscissa = abscissa;
      const WeightEvaluator evaluator(params, options);
      if (profile) {
        const auto prof = weight_profile(evaluator, x_min, x_max, profile_points);
        emit(c, fmt == Format::Csv ? io::profile_csv(prof) : dump(io::profile_json(params, prof)),
             out);
      } else {
        const auto reports = verify_moments(evaluator, max_n.value_or(params.n()));
        emit(c,
             fmt == Format::Csv ? io::moments_csv(reports)
                                : dump(io::moments_json(params, reports)),
             out);
      }
    } else if (generate->parsed()) {
      const ModelParams params = model_of(c);
      const FockVector target = coherent_state(params, parse_complex(c.z));
      const GenerationPlan p = plan(target, parse_schedule(gtau_text, params.n()));
      const SimulationResult sim = simulate(p);
      if (!intermediates_path.empty()) {
        Common side = c;
        side.output = intermediates_path;
        emit(side, io::intermediates_csv(sim.intermediates), out);
      }
      emit(c, fmt == Format::Csv ? io::plan_csv(p) : dump(io::generation_json(p, sim)), out);
    } else if (spectrum->parsed()) {
      const auto levels = energy_spectrum(c.n);
      emit(c,
           fmt == Format::Csv ? io::spectrum_csv(levels) : dump(io::spectrum_json(c.n, levels)),
           out);
    }
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kOk;
}

}  // namespace flncs::cli
