#pragma once

// Fokas-Lagerstrom deformed oscillator algebra on the (N+1)-dimensional
// Fock space |0>..|N> belonging to a fixed energy eigenvalue E_N.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <string>
#include <string_view>

namespace flncs {

// Exact rational p/q. Only the thirds appearing in the (A, B) pairs are needed.
struct Rational {
  int num{0};
  int den{1};

  constexpr double value() const noexcept { return static_cast<double>(num) / den; }
  friend constexpr bool operator==(const Rational&, const Rational&) = default;
};

// The three constructible branches, numbered in the order the structure
// functions are usually listed:
//   Pair::One   -> (A, B) = (2/3, 4/3), E_N = N + 1
//   Pair::Two   -> (A, B) = (2/3, 1/3), E_N = N + 2/3
//   Pair::Three -> (A, B) = (5/3, 4/3), E_N = N + 4/3
enum class Pair : int { One = 1, Two = 2, Three = 3 };

Pair pair_from_index(int index);
Rational pair_a(Pair pair) noexcept;
Rational pair_b(Pair pair) noexcept;
Rational branch_energy_offset(Pair pair) noexcept;

class ModelParams {
 public:
  ModelParams(int n, Pair pair);

  int n() const noexcept { return n_; }
  int dim() const noexcept { return n_ + 1; }
  Pair pair() const noexcept { return pair_; }
  Rational a() const noexcept { return pair_a(pair_); }
  Rational b() const noexcept { return pair_b(pair_); }
  static constexpr Rational u() noexcept { return {1, 2}; }
  double energy() const noexcept;

  // Canonical text form "N=<int>,pair=<1|2|3>".
  std::string to_string() const;
  static ModelParams parse(std::string_view text);

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  int n_;
  Pair pair_;
};

// Extended precision keeps commutators of entries of size ~Phi(n) accurate to
// well below 1e-10 in absolute terms up to N ~ 30.
using OperatorScalar = std::complex<long double>;
using OperatorMatrix = Eigen::Matrix<OperatorScalar, Eigen::Dynamic, Eigen::Dynamic>;

// Phi(E_N, x) = 16 x (N+1-x)(N+A-x)(N+B-x)
double structure_phi(const ModelParams& params, double x) noexcept;

// 9 Phi(E_N, n) for integer n, exact (A and B are thirds).
long long structure_phi_ninths(const ModelParams& params, long long n) noexcept;

// f(n) = sqrt(16 (N+1-n)(N+A-n)(N+B-n)), so that n f(n)^2 = Phi(n). Requires 0 <= n <= N+1.
double deformation_f(const ModelParams& params, int n);

// rho(n) = (n!)^2 / prod_{k=1..n} Phi(k), evaluated through log-gamma differences.
double rho(const ModelParams& params, int n);
double log_rho(const ModelParams& params, int n);

struct LadderOperators {
  OperatorMatrix annihilation;
  OperatorMatrix creation;
  OperatorMatrix number;
};

LadderOperators ladder_operators(const ModelParams& params);

OperatorMatrix commutator(const OperatorMatrix& lhs, const OperatorMatrix& rhs);

struct BranchEnergy {
  Pair pair;
  double energy;
};

std::array<BranchEnergy, 3> energy_spectrum(int n);

}  // namespace flncs
