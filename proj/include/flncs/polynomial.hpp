#pragma once

#include <complex>
#include <vector>

namespace flncs {

// Dense univariate polynomial, coefficients in ascending degree order.
class Polynomial {
 public:
  using Complex = std::complex<double>;

  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {}

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

  Complex operator()(Complex x) const noexcept;
  Polynomial derivative() const;

  // Drops leading coefficients whose modulus is below rel_tol * max |coeff|.
  Polynomial trimmed(double rel_tol = 1e-14) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator*=(Complex scalar);
  Polynomial& operator/=(Complex scalar);
  // Multiplication by the monomial x.
  Polynomial shifted() const;

 private:
  std::vector<Complex> coeffs_;
};

// All roots (with multiplicity) from the eigenvalues of the companion matrix of
// the monic polynomial, each refined by a few Newton steps. Throws
// NumericalError for a zero polynomial or if the eigensolver fails.
std::vector<std::complex<double>> polynomial_roots(const Polynomial& poly);

}  // namespace flncs
