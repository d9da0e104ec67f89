#include "flncs/algebra.hpp"

#include "flncs/errors.hpp"

#include <cmath>
#include <charconv>

namespace flncs {

Pair pair_from_index(int index) {
  if (index < 1 || index > 3) {
    throw ConfigError("pair index must be 1, 2 or 3, got " + std::to_string(index));
  }
  return static_cast<Pair>(index);
}

Rational pair_a(Pair pair) noexcept {
  switch (pair) {
    case Pair::One: return {2, 3};
    case Pair::Two: return {2, 3};
    case Pair::Three: return {5, 3};
  }
  return {};
}

Rational pair_b(Pair pair) noexcept {
  switch (pair) {
    case Pair::One: return {4, 3};
    case Pair::Two: return {1, 3};
    case Pair::Three: return {4, 3};
  }
  return {};
}

Rational branch_energy_offset(Pair pair) noexcept {
  switch (pair) {
    case Pair::One: return {1, 1};
    case Pair::Two: return {2, 3};
    case Pair::Three: return {4, 3};
  }
  return {};
}

ModelParams::ModelParams(int n, Pair pair) : n_(n), pair_(pair) {
  if (n < 0) {
    throw DomainError("N must be nonnegative, got " + std::to_string(n));
  }
  pair_from_index(static_cast<int>(pair));
}

double ModelParams::energy() const noexcept {
  return n_ + branch_energy_offset(pair_).value();
}

std::string ModelParams::to_string() const {
  return "N=" + std::to_string(n_) + ",pair=" + std::to_string(static_cast<int>(pair_));
}

namespace {

int parse_int_field(std::string_view field, std::string_view key) {
  if (field.substr(0, key.size()) != key) {
    throw ConfigError("expected '" + std::string(key) + "' in model parameters");
  }
  field.remove_prefix(key.size());
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ConfigError("malformed integer '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

ModelParams ModelParams::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw ConfigError("model parameters must look like N=<int>,pair=<1|2|3>");
  }
  const int n = parse_int_field(text.substr(0, comma), "N=");
  const int pair = parse_int_field(text.substr(comma + 1), "pair=");
  return ModelParams(n, pair_from_index(pair));
}

long long structure_phi_ninths(const ModelParams& params, long long n) noexcept {
  const long long top = params.n();
  return 16 * n * (top + 1 - n) * (3 * (top - n) + params.a().num) *
         (3 * (top - n) + params.b().num);
}

double structure_phi(const ModelParams& params, double x) noexcept {
  if (x == std::floor(x) && std::abs(x) < 1e4) {
    return static_cast<double>(structure_phi_ninths(params, static_cast<long long>(x))) / 9.0;
  }
  const double n = params.n();
  return 16.0 * x * (n + 1.0 - x) * (n + params.a().value() - x) * (n + params.b().value() - x);
}

double deformation_f(const ModelParams& params, int n) {
  if (n < 0 || n > params.n() + 1) {
    throw DomainError("deformation_f: n=" + std::to_string(n) + " outside 0..N+1");
  }
  const double top = params.n();
  return std::sqrt(16.0 * (top + 1.0 - n) * (top + params.a().value() - n) *
                   (top + params.b().value() - n));
}

double log_rho(const ModelParams& params, int n) {
  const int top = params.n();
  if (n < 0 || n > top) {
    throw DomainError("rho: n=" + std::to_string(n) + " outside 0..N");
  }
  const double a = params.a().value();
  const double b = params.b().value();
  return -n * std::log(16.0) + std::lgamma(n + 1.0) + std::lgamma(top - n + 1.0) -
         std::lgamma(top + 1.0) + std::lgamma(top + a - n) - std::lgamma(top + a) +
         std::lgamma(top + b - n) - std::lgamma(top + b);
}

double rho(const ModelParams& params, int n) { return std::exp(log_rho(params, n)); }

LadderOperators ladder_operators(const ModelParams& params) {
  const int dim = params.dim();
  LadderOperators ops{OperatorMatrix::Zero(dim, dim), OperatorMatrix::Zero(dim, dim),
                      OperatorMatrix::Zero(dim, dim)};
  for (int n = 1; n <= params.n(); ++n) {
    // <n-1|A|n> = sqrt(n) f(n) = sqrt(Phi(n))
    ops.annihilation(n - 1, n) =
        std::sqrt(static_cast<long double>(structure_phi_ninths(params, n)) / 9.0L);
  }
  ops.creation = ops.annihilation.adjoint();
  for (int n = 0; n < dim; ++n) {
    ops.number(n, n) = static_cast<long double>(n);
  }
  return ops;
}

OperatorMatrix commutator(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  return lhs * rhs - rhs * lhs;
}

std::array<BranchEnergy, 3> energy_spectrum(int n) {
  if (n < 0) {
    throw DomainError("energy_spectrum: N must be nonnegative");
  }
  std::array<BranchEnergy, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const Pair pair = static_cast<Pair>(i + 1);
    out[i] = {pair, n + branch_energy_offset(pair).value()};
  }
  return out;
}

}  // namespace flncs
