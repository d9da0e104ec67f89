#include "flncs/polynomial.hpp"

#include "flncs/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace flncs {

using Complex = std::complex<double>;

Complex Polynomial::operator()(Complex x) const noexcept {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) {
    return Polynomial({0.0});
  }
  std::vector<Complex> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = static_cast<double>(i) * coeffs_[i];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::trimmed(double rel_tol) const {
  double scale = 0.0;
  for (const auto& c : coeffs_) {
    scale = std::max(scale, std::abs(c));
  }
  std::vector<Complex> out = coeffs_;
  while (out.size() > 1 && std::abs(out.back()) <= rel_tol * scale) {
    out.pop_back();
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), 0.0);
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  return *this;
}

Polynomial& Polynomial::operator*=(Complex scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial& Polynomial::operator/=(Complex scalar) {
  for (auto& c : coeffs_) c /= scalar;
  return *this;
}

Polynomial Polynomial::shifted() const {
  std::vector<Complex> out(coeffs_.size() + 1, 0.0);
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + 1);
  return Polynomial(std::move(out));
}

std::vector<Complex> polynomial_roots(const Polynomial& poly) {
  const Polynomial p = poly.trimmed();
  const int deg = p.degree();
  if (deg < 0 || (deg == 0 && p.coeffs()[0] == Complex(0.0))) {
    throw NumericalError("polynomial_roots: zero polynomial");
  }
  if (deg == 0) {
    return {};
  }
  const auto& c = p.coeffs();
  const Complex lead = c.back();
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) {
    companion(i, i - 1) = 1.0;
  }
  for (int i = 0; i < deg; ++i) {
    companion(i, deg - 1) = -c[i] / lead;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("polynomial_roots: companion eigenvalue solve failed");
  }
  const Polynomial dp = p.derivative();
  std::vector<Complex> roots(deg);
  for (int i = 0; i < deg; ++i) {
    Complex x = solver.eigenvalues()(i);
    double residual = std::abs(p(x));
    for (int iter = 0; iter < 4 && residual > 0.0; ++iter) {
      const Complex slope = dp(x);
      if (slope == Complex(0.0)) break;
      const Complex next = x - p(x) / slope;
      const double next_residual = std::abs(p(next));
      if (!(next_residual < residual)) break;
      x = next;
      residual = next_residual;
    }
    roots[i] = x;
  }
  return roots;
}

}  // namespace flncs
