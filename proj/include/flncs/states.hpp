#pragma once

#include "flncs/algebra.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace flncs {

using Complex = std::complex<double>;

// Complex amplitudes over |0>..|dim-1>. Vectors produced by constructors in this
// library are normalized; `normalized` is false only for explicit intermediates.
struct FockVector {
  Eigen::VectorXcd amp;
  bool normalized{true};

  int dim() const noexcept { return static_cast<int>(amp.size()); }
  double norm_squared() const noexcept { return amp.squaredNorm(); }

  static FockVector basis(int dim, int n);
  // Rescales to unit norm. Throws DomainError for the zero vector.
  static FockVector normalize(Eigen::VectorXcd amp);
};

// Normalized FLNCS amplitudes d_n = C^{-1/2}(|z|^2) z^n / sqrt(rho(n)).
FockVector coherent_state(const ModelParams& params, Complex z);

// <alpha|psi> for the Glauber coherent state |alpha>.
Complex glauber_overlap(const FockVector& state, Complex alpha);

struct Window {
  double re_min;
  double re_max;
  double im_min;
  double im_max;
};

// Square window [-(sqrt(N)+3), sqrt(N)+3]^2.
Window default_window(int n);

// Husimi Q(alpha) = |<alpha|psi>|^2 / pi sampled on a uniform nx-by-ny grid
// including the window edges. values(i, j) is at re index i, im index j.
struct QGrid {
  Window window;
  int nx;
  int ny;
  Eigen::MatrixXd values;

  double re_at(int i) const noexcept;
  double im_at(int j) const noexcept;
  // Sum of values times the cell area dx*dy.
  double riemann_sum() const noexcept;
};

QGrid qfunction_grid(const FockVector& state, const Window& window, int nx, int ny);

}  // namespace flncs
