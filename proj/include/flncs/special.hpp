#pragma once

#include <complex>

namespace flncs {

// Principal branch of log Gamma(z) for complex z off the nonpositive integers.
// Stirling series after an upward shift to Re z >= 10; reflection for Re z < 0.5
// only when Re z <= 0.
std::complex<double> log_gamma(std::complex<double> z);

}  // namespace flncs
