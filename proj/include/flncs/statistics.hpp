#pragma once

#include "flncs/algebra.hpp"
#include "flncs/states.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace flncs {

struct PhotonStats {
  std::vector<double> p;
  double mean{0.0};
  double variance{0.0};
  // Mandel Q = (variance - mean) / mean; empty exactly when mean == 0.
  std::optional<double> mandel;
};

PhotonStats photon_stats(const FockVector& state);

// Quadratures X1 = (a e^{i phi} + a^dag e^{-i phi}) / 2 and
// X2 = (a e^{i phi} - a^dag e^{-i phi}) / 2i with bosonic a, a^dag.
struct QuadratureReport {
  double phi{0.0};
  double s1{0.0};
  double s2{0.0};
  double var1{0.0};
  double var2{0.0};
  double product{0.0};
};

// Bosonic moments of a finite-support state, exact (no truncated matrices).
struct BosonicMoments {
  Complex a;       // <a>
  Complex a2;      // <a^2>
  double number;   // <a^dag a>
};

BosonicMoments bosonic_moments(const FockVector& state);
QuadratureReport quadrature_report(const BosonicMoments& moments, double phi);
QuadratureReport quadrature_report(const FockVector& state, double phi);

enum class Observable { Mandel, S1, S2, Mean };

Observable parse_observable(std::string_view name);
std::string_view observable_name(Observable obs) noexcept;

// Range scanned by `scan`: z for Mandel/Mean, phi for S1/S2.
struct ScanRange {
  double min;
  double max;
  int points;
};

struct ScanRow {
  double x;
  std::optional<double> value;  // empty only for an undefined Mandel parameter
};

// Default phi scan: 720 points uniformly spaced on [0, 2 pi).
std::vector<double> default_phi_grid(int points = 720);

// Samples `obs` over the range. Mandel/Mean vary real z with the given
// params; S1/S2 vary phi at fixed z. Both endpoints are included.
std::vector<ScanRow> scan(Observable obs, const ModelParams& params, const ScanRange& range,
                          Complex fixed_z = 1.0);

// Phase scan on an explicit grid (used with default_phi_grid, which omits 2 pi).
std::vector<ScanRow> scan_phi(Observable obs, const FockVector& state,
                              const std::vector<double>& phis);

}  // namespace flncs
