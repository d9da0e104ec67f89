#include "flncs/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace flncs::io {

std::string format_number(double value) {
  if (value == 0.0) {
    return "0";  // folds -0
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

double round12(double value) {
  if (!std::isfinite(value)) {
    return value;
  }
  return std::stod(format_number(value));
}

std::string format_optional(const std::optional<double>& value) {
  return value ? format_number(*value) : "undefined";
}

namespace {

ordered_json complex_json(Complex c) { return ordered_json{round12(c.real()), round12(c.imag())}; }

ordered_json optional_json(const std::optional<double>& value) {
  return value ? ordered_json(round12(*value)) : ordered_json("undefined");
}

ordered_json params_json(const ModelParams& params) {
  return {{"N", params.n()},
          {"pair", static_cast<int>(params.pair())},
          {"A", round12(params.a().value())},
          {"B", round12(params.b().value())},
          {"energy", round12(params.energy())}};
}

ordered_json amplitudes_json(const FockVector& state) {
  ordered_json out = ordered_json::array();
  for (int n = 0; n < state.dim(); ++n) {
    out.push_back(complex_json(state.amp(n)));
  }
  return out;
}

}  // namespace

std::string state_csv(const FockVector& state) {
  std::ostringstream out;
  out << "n,re,im\n";
  for (int n = 0; n < state.dim(); ++n) {
    out << n << ',' << format_number(state.amp(n).real()) << ','
        << format_number(state.amp(n).imag()) << '\n';
  }
  return out.str();
}

ordered_json state_json(const ModelParams& params, Complex z, const FockVector& state) {
  return {{"params", params_json(params)}, {"z", complex_json(z)},
          {"amplitudes", amplitudes_json(state)}};
}

std::string stats_csv(const PhotonStats& stats) {
  std::ostringstream out;
  out << "quantity,value\n";
  for (std::size_t n = 0; n < stats.p.size(); ++n) {
    out << "p" << n << ',' << format_number(stats.p[n]) << '\n';
  }
  out << "mean," << format_number(stats.mean) << '\n';
  out << "variance," << format_number(stats.variance) << '\n';
  out << "mandel," << format_optional(stats.mandel) << '\n';
  return out.str();
}

ordered_json stats_json(const ModelParams& params, Complex z, const PhotonStats& stats) {
  ordered_json p = ordered_json::array();
  for (double v : stats.p) p.push_back(round12(v));
  return {{"params", params_json(params)}, {"z", complex_json(z)}, {"p", p},
          {"mean", round12(stats.mean)}, {"variance", round12(stats.variance)},
          {"mandel", optional_json(stats.mandel)}};
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "x,value\n";
  for (const auto& row : rows) {
    out << format_number(row.x) << ',' << format_optional(row.value) << '\n';
  }
  return out.str();
}

ordered_json scan_json(Observable obs, const ModelParams& params,
                       const std::vector<ScanRow>& rows) {
  ordered_json x = ordered_json::array();
  ordered_json v = ordered_json::array();
  for (const auto& row : rows) {
    x.push_back(round12(row.x));
    v.push_back(optional_json(row.value));
  }
  return {{"observable", std::string(observable_name(obs))}, {"params", params_json(params)},
          {"x", x}, {"value", v}};
}

std::string qgrid_csv(const QGrid& grid) {
  std::ostringstream out;
  out << "re,im,q\n";
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) {
      out << format_number(grid.re_at(i)) << ',' << format_number(grid.im_at(j)) << ','
          << format_number(grid.values(i, j)) << '\n';
    }
  }
  return out.str();
}

ordered_json qgrid_json(const QGrid& grid) {
  ordered_json values = ordered_json::array();
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) {
      values.push_back(round12(grid.values(i, j)));
    }
  }
  return {{"re_min", round12(grid.window.re_min)}, {"re_max", round12(grid.window.re_max)},
          {"im_min", round12(grid.window.im_min)}, {"im_max", round12(grid.window.im_max)},
          {"nx", grid.nx}, {"ny", grid.ny}, {"order", "re-major"}, {"values", values}};
}

std::string moments_csv(const std::vector<MomentReport>& reports) {
  std::ostringstream out;
  out << "n,numeric,analytic,rel_error\n";
  for (const auto& r : reports) {
    out << r.n << ',' << format_number(r.numeric) << ',' << format_number(r.analytic) << ','
        << format_number(r.rel_error) << '\n';
  }
  return out.str();
}

ordered_json moments_json(const ModelParams& params, const std::vector<MomentReport>& reports) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : reports) {
    rows.push_back({{"n", r.n}, {"numeric", round12(r.numeric)},
                    {"analytic", round12(r.analytic)}, {"rel_error", round12(r.rel_error)}});
  }
  return {{"params", params_json(params)}, {"moments", rows}};
}

std::string profile_csv(const std::vector<WeightPoint>& profile) {
  std::ostringstream out;
  out << "x,w\n";
  for (const auto& pt : profile) {
    out << format_number(pt.x) << ',' << format_number(pt.w) << '\n';
  }
  return out.str();
}

ordered_json profile_json(const ModelParams& params, const std::vector<WeightPoint>& profile) {
  ordered_json x = ordered_json::array();
  ordered_json w = ordered_json::array();
  for (const auto& pt : profile) {
    x.push_back(round12(pt.x));
    w.push_back(round12(pt.w));
  }
  return {{"params", params_json(params)}, {"x", x}, {"w", w}};
}

std::string spectrum_csv(const std::array<BranchEnergy, 3>& spectrum) {
  std::ostringstream out;
  out << "branch,energy\n";
  for (const auto& b : spectrum) {
    out << static_cast<int>(b.pair) << ',' << format_number(b.energy) << '\n';
  }
  return out.str();
}

ordered_json spectrum_json(int n, const std::array<BranchEnergy, 3>& spectrum) {
  ordered_json rows = ordered_json::array();
  for (const auto& b : spectrum) {
    rows.push_back({{"branch", static_cast<int>(b.pair)},
                    {"A", round12(pair_a(b.pair).value())},
                    {"B", round12(pair_b(b.pair).value())},
                    {"energy", round12(b.energy)}});
  }
  return {{"N", n}, {"branches", rows}};
}

ordered_json plan_json(const GenerationPlan& plan) {
  ordered_json gtau = ordered_json::array();
  ordered_json eps = ordered_json::array();
  ordered_json roots = ordered_json::array();
  for (int k = 0; k < plan.n; ++k) {
    gtau.push_back(round12(plan.gtau[k]));
    eps.push_back(complex_json(plan.epsilons[k]));
    ordered_json step = ordered_json::array();
    for (const auto& c : plan.all_roots[k]) {
      step.push_back(complex_json(c.epsilon));
    }
    roots.push_back(step);
  }
  return {{"N", plan.n}, {"gtau", gtau}, {"epsilons", eps}, {"all_roots", roots},
          {"success_prob", round12(plan.success_prob)},
          {"target_amplitudes", amplitudes_json(plan.target)}};
}

std::string plan_csv(const GenerationPlan& plan) {
  std::ostringstream out;
  out << "k,gtau,eps_re,eps_im,step_prob\n";
  for (int k = 1; k <= plan.n; ++k) {
    out << k << ',' << format_number(plan.gtau[k - 1]) << ','
        << format_number(plan.epsilons[k - 1].real()) << ','
        << format_number(plan.epsilons[k - 1].imag()) << ','
        << format_number(plan.step_probs[k - 1]) << '\n';
  }
  return out.str();
}

ordered_json generation_json(const GenerationPlan& plan, const SimulationResult& sim) {
  return {{"plan", plan_json(plan)},
          {"simulation",
           {{"fidelity", round12(sim.fidelity)},
            {"success_prob", round12(sim.success_prob)},
            {"final_amplitudes", amplitudes_json(sim.final_state)}}}};
}

std::string intermediates_csv(const std::vector<FockVector>& states) {
  std::ostringstream out;
  out << "k,n,re,im\n";
  for (std::size_t k = 0; k < states.size(); ++k) {
    for (int n = 0; n < states[k].dim(); ++n) {
      out << k << ',' << n << ',' << format_number(states[k].amp(n).real()) << ','
          << format_number(states[k].amp(n).imag()) << '\n';
    }
  }
  return out.str();
}

}  // namespace flncs::io
