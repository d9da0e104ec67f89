#include "flncs/errors.hpp"
#include "flncs/special.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using flncs::log_gamma;
using Complex = std::complex<double>;

TEST_CASE("log_gamma agrees with lgamma on the positive axis") {
  for (double x : {0.001, 0.3, 0.5, 1.0, 1.5, 2.0, 3.7, 9.99, 10.0, 25.5, 170.3}) {
    const Complex v = log_gamma(Complex(x, 0.0));
    CHECK(v.real() == doctest::Approx(std::lgamma(x)).epsilon(1e-14));
    CHECK(v.imag() == 0.0);
  }
}

TEST_CASE("log_gamma at complex points (mpmath loggamma)") {
  struct Case {
    Complex z;
    Complex expected;
  };
  const Case cases[] = {
      {{1.3, 4.7}, {-5.22340193239380190, 3.77105622373155882}},
      {{0.2, -12.5}, {-19.4736828963708351, -18.6001021584335243}},
      {{7.5, 0.3}, {7.52794846819599316, 0.584118569188909041}},
  };
  for (const auto& c : cases) {
    const Complex v = log_gamma(c.z);
    CHECK(std::abs(v - c.expected) < 1e-13 * std::max(1.0, std::abs(c.expected)));
  }
}

TEST_CASE("log_gamma recurrence and reflection") {
  for (double re : {-3.3, -0.5, 0.01, 0.8, 4.2}) {
    for (double im : {-20.0, -1.0, 0.5, 7.0}) {
      const Complex z(re, im);
      // Gamma(z+1) = z Gamma(z), compared through exp to stay branch-agnostic.
      const Complex lhs = std::exp(log_gamma(z + 1.0) - log_gamma(z));
      CHECK(std::abs(lhs - z) < 1e-12 * std::abs(z));
      // Conjugate symmetry.
      CHECK(std::abs(log_gamma(std::conj(z)) - std::conj(log_gamma(z))) < 1e-12);
    }
  }
  CHECK_THROWS_AS(log_gamma(Complex(-2.0, 0.0)), flncs::DomainError);
  CHECK_THROWS_AS(log_gamma(Complex(0.0, 0.0)), flncs::DomainError);
}
