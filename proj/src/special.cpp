#include "flncs/special.hpp"

#include "flncs/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace flncs {

namespace {

using Complex = std::complex<double>;

// B_{2k} / (2k (2k-1)), k = 1..8
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,         -1.0 / 360.0,      1.0 / 1260.0,   -1.0 / 1680.0,
    1.0 / 1188.0,       -691.0 / 360360.0, 1.0 / 156.0,    -3617.0 / 122400.0,
};

constexpr double kShiftThreshold = 10.0;

Complex stirling(Complex z) {
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

}  // namespace

Complex log_gamma(Complex z) {
  if (z.real() <= 0.0) {
    if (z.imag() == 0.0 && z.real() == std::floor(z.real())) {
      throw DomainError("log_gamma: pole at nonpositive integer");
    }
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(std::numbers::pi) - std::log(std::sin(std::numbers::pi * z)) -
           log_gamma(1.0 - z);
  }
  Complex shift = 0.0;
  while (z.real() < kShiftThreshold) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

}  // namespace flncs
