#pragma once

// Resolution of identity for the FLNCS family: the weight w(x) on x = |z|^2
// whose moments are int_0^inf x^n w(x) dx = rho(n), computed by inverting its
// Mellin transform M[w](s) = rho(s - 1) along a vertical contour Re s = c.
//
// The measure of the overcompleteness relation is W(|z|^2) = C(|z|^2) w(|z|^2) / pi.

#include "flncs/algebra.hpp"

#include <array>
#include <complex>
#include <optional>
#include <vector>

namespace flncs {

struct WeightOptions {
  // Fixed contour abscissa in the pole-free strip. When empty, each x uses the
  // real saddle point of |rho(c-1) x^{-c}|, shifted past poles (with their
  // residues added) when that shrinks the remaining integral.
  std::optional<double> abscissa;
  // Relative accuracy requested from the contour quadrature.
  double tolerance{1e-12};
};

struct WeightSample {
  double value;      // x^power w(x)
  double imag;       // discarded imaginary residue
  double abscissa;   // contour used
  double cutoff;     // integration range is t in [-cutoff, cutoff]
  int shifted_poles; // residues picked up by moving the contour
};

class WeightEvaluator {
 public:
  explicit WeightEvaluator(ModelParams params, WeightOptions options = {});

  const ModelParams& params() const noexcept { return params_; }
  const WeightOptions& options() const noexcept { return options_; }

  // Upper end of the pole-free strip, min(N+2, N+A+1, N+B+1).
  double strip_end() const noexcept { return strip_end_; }

  // log rho(s - 1), analytically continued in s.
  std::complex<double> log_mellin(std::complex<double> s) const;

  double weight(double x) const;

  // x^power w(x) with x = exp(log_x). Working in log x keeps huge and tiny x
  // (moment tails) free of overflow.
  // check_imag also integrates the imaginary part and throws NumericalError
  // when it is not negligible.
  WeightSample sample_log(double log_x, double power = 0.0, bool check_imag = true) const;

  // (1/2pi) int |rho(c - 1 + it)| dt; bounds |w(x)| <= x^{-c} contour_l1(c).
  double contour_l1(double c) const;

 private:
  struct Pole {
    double s;
    int family;  // -1 for Gamma(s), else index into tops_
    int k;
  };
  struct Contour {
    double abscissa;
    int shifted;
    double residues;
  };

  std::complex<double> log_residue(const Pole& pole, double log_x, double power) const;
  Contour choose_contour(double log_x, double power) const;
  double cutoff_for(double c, double log_x, double power, double scale) const;

  ModelParams params_;
  WeightOptions options_;
  std::array<double, 3> tops_;
  double strip_end_;
  double log_norm_;
  std::vector<Pole> left_poles_;
  std::vector<Pole> right_poles_;
};

struct MomentReport {
  int n;
  double numeric;
  double analytic;
  double rel_error;
};

std::vector<MomentReport> verify_moments(const WeightEvaluator& evaluator, int max_n);

struct WeightPoint {
  double x;
  double w;
};

// w on log-spaced x in [x_min, x_max].
std::vector<WeightPoint> weight_profile(const WeightEvaluator& evaluator, double x_min,
                                        double x_max, int points);

struct PositivityReport {
  double min_value;
  double argmin;
  std::vector<WeightPoint> violations;  // points with w < -threshold
};

PositivityReport check_positivity(const std::vector<WeightPoint>& profile,
                                  double threshold = 1e-9);

}  // namespace flncs
