#include "flncs/states.hpp"

#include "flncs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace flncs {

FockVector FockVector::basis(int dim, int n) {
  if (n < 0 || n >= dim) {
    throw DomainError("basis state |" + std::to_string(n) + "> outside dimension " +
                      std::to_string(dim));
  }
  FockVector v{Eigen::VectorXcd::Zero(dim), true};
  v.amp(n) = 1.0;
  return v;
}

FockVector FockVector::normalize(Eigen::VectorXcd amp) {
  const double norm = amp.norm();
  if (!(norm > 0.0)) {
    throw DomainError("cannot normalize the zero vector");
  }
  amp /= norm;
  return FockVector{std::move(amp), true};
}

FockVector coherent_state(const ModelParams& params, Complex z) {
  const int dim = params.dim();
  const double modulus = std::abs(z);
  const double phase = std::arg(z);
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(dim);
  if (modulus == 0.0) {
    amp(0) = 1.0;
    return FockVector{std::move(amp), true};
  }

  // log|d_n|^2 up to the common normalization: n log|z|^2 - log rho(n).
  std::vector<double> log_weight(dim);
  const double log_r2 = 2.0 * std::log(modulus);
  for (int n = 0; n < dim; ++n) {
    log_weight[n] = n * log_r2 - log_rho(params, n);
  }
  const double shift = *std::max_element(log_weight.begin(), log_weight.end());
  double total = 0.0;
  for (double lw : log_weight) {
    total += std::exp(lw - shift);
  }
  const double log_c = shift + std::log(total);
  for (int n = 0; n < dim; ++n) {
    amp(n) = std::polar(std::exp(0.5 * (log_weight[n] - log_c)), n * phase);
  }
  return FockVector{std::move(amp), true};
}

Complex glauber_overlap(const FockVector& state, Complex alpha) {
  // sum_n conj(alpha)^n / sqrt(n!) a_n via the running term conj(alpha)^n / sqrt(n!)
  const Complex ca = std::conj(alpha);
  Complex term = 1.0;
  Complex sum = 0.0;
  for (int n = 0; n < state.dim(); ++n) {
    if (n > 0) {
      term *= ca / std::sqrt(static_cast<double>(n));
    }
    sum += term * state.amp(n);
  }
  return std::exp(-0.5 * std::norm(alpha)) * sum;
}

Window default_window(int n) {
  const double half = std::sqrt(static_cast<double>(n)) + 3.0;
  return {-half, half, -half, half};
}

double QGrid::re_at(int i) const noexcept {
  return window.re_min + (window.re_max - window.re_min) * i / (nx - 1);
}

double QGrid::im_at(int j) const noexcept {
  return window.im_min + (window.im_max - window.im_min) * j / (ny - 1);
}

double QGrid::riemann_sum() const noexcept {
  const double dx = (window.re_max - window.re_min) / (nx - 1);
  const double dy = (window.im_max - window.im_min) / (ny - 1);
  return values.sum() * dx * dy;
}

QGrid qfunction_grid(const FockVector& state, const Window& window, int nx, int ny) {
  if (!(window.re_min < window.re_max) || !(window.im_min < window.im_max)) {
    throw ConfigError("Q-function window must satisfy min < max on both axes");
  }
  if (nx < 2 || ny < 2) {
    throw ConfigError("Q-function grid needs at least 2 points per axis");
  }
  QGrid grid{window, nx, ny, Eigen::MatrixXd::Zero(nx, ny)};
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      const Complex alpha(grid.re_at(i), grid.im_at(j));
      grid.values(i, j) = std::norm(glauber_overlap(state, alpha)) / std::numbers::pi;
    }
  }
  return grid;
}

}  // namespace flncs
