#include "flncs/statistics.hpp"

#include "flncs/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace flncs {

PhotonStats photon_stats(const FockVector& state) {
  PhotonStats out;
  out.p.resize(state.dim());
  double second = 0.0;
  for (int n = 0; n < state.dim(); ++n) {
    out.p[n] = std::norm(state.amp(n));
    out.mean += n * out.p[n];
    second += static_cast<double>(n) * n * out.p[n];
  }
  out.variance = std::max(0.0, second - out.mean * out.mean);
  if (out.mean > 0.0) {
    out.mandel = (out.variance - out.mean) / out.mean;
  }
  return out;
}

BosonicMoments bosonic_moments(const FockVector& state) {
  BosonicMoments m{0.0, 0.0, 0.0};
  const int dim = state.dim();
  for (int n = 0; n < dim; ++n) {
    const Complex cn = std::conj(state.amp(n));
    if (n + 1 < dim) {
      m.a += cn * state.amp(n + 1) * std::sqrt(n + 1.0);
    }
    if (n + 2 < dim) {
      m.a2 += cn * state.amp(n + 2) * std::sqrt((n + 1.0) * (n + 2.0));
    }
    m.number += n * std::norm(state.amp(n));
  }
  return m;
}

QuadratureReport quadrature_report(const BosonicMoments& m, double phi) {
  const Complex rot = std::polar(1.0, phi);
  const Complex a_rot = m.a * rot;
  const double a2_rot = (m.a2 * rot * rot).real();
  // <a a^dag> = <a^dag a> + 1
  const double base = 2.0 * m.number + 1.0;
  QuadratureReport r;
  r.phi = phi;
  r.var1 = 0.25 * (2.0 * a2_rot + base) - a_rot.real() * a_rot.real();
  r.var2 = 0.25 * (-2.0 * a2_rot + base) - a_rot.imag() * a_rot.imag();
  r.s1 = 4.0 * r.var1 - 1.0;
  r.s2 = 4.0 * r.var2 - 1.0;
  r.product = r.var1 * r.var2;
  return r;
}

QuadratureReport quadrature_report(const FockVector& state, double phi) {
  return quadrature_report(bosonic_moments(state), phi);
}

Observable parse_observable(std::string_view name) {
  if (name == "mandel") return Observable::Mandel;
  if (name == "s1") return Observable::S1;
  if (name == "s2") return Observable::S2;
  if (name == "mean") return Observable::Mean;
  throw ConfigError("unknown observable '" + std::string(name) +
                    "' (expected mandel, s1, s2 or mean)");
}

std::string_view observable_name(Observable obs) noexcept {
  switch (obs) {
    case Observable::Mandel: return "mandel";
    case Observable::S1: return "s1";
    case Observable::S2: return "s2";
    case Observable::Mean: return "mean";
  }
  return "";
}

std::vector<double> default_phi_grid(int points) {
  std::vector<double> out(points);
  for (int i = 0; i < points; ++i) {
    out[i] = 2.0 * std::numbers::pi * i / points;
  }
  return out;
}

std::vector<ScanRow> scan_phi(Observable obs, const FockVector& state,
                              const std::vector<double>& phis) {
  if (obs != Observable::S1 && obs != Observable::S2) {
    throw ConfigError("phase scans are only defined for s1 and s2");
  }
  const BosonicMoments m = bosonic_moments(state);
  std::vector<ScanRow> rows;
  rows.reserve(phis.size());
  for (double phi : phis) {
    const QuadratureReport r = quadrature_report(m, phi);
    rows.push_back({phi, obs == Observable::S1 ? r.s1 : r.s2});
  }
  return rows;
}

std::vector<ScanRow> scan(Observable obs, const ModelParams& params, const ScanRange& range,
                          Complex fixed_z) {
  if (range.points < 2) {
    throw ConfigError("scan resolution must be at least 2");
  }
  if (!(range.min < range.max)) {
    throw ConfigError("scan range must satisfy min < max");
  }
  std::vector<double> xs(range.points);
  for (int i = 0; i < range.points; ++i) {
    xs[i] = range.min + (range.max - range.min) * i / (range.points - 1);
  }
  if (obs == Observable::S1 || obs == Observable::S2) {
    return scan_phi(obs, coherent_state(params, fixed_z), xs);
  }
  std::vector<ScanRow> rows;
  rows.reserve(xs.size());
  for (double z : xs) {
    const PhotonStats st = photon_stats(coherent_state(params, z));
    rows.push_back({z, obs == Observable::Mean ? std::optional<double>(st.mean) : st.mandel});
  }
  return rows;
}

}  // namespace flncs
