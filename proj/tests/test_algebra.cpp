#include "flncs/algebra.hpp"
#include "flncs/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace flncs;

namespace {

constexpr Pair kPairs[] = {Pair::One, Pair::Two, Pair::Three};

// (n!)^2 / prod_{k=1..n} Phi(k) by direct multiplication (independent of the log-gamma route).
double rho_by_product(const ModelParams& params, int n) {
  double value = 1.0;
  for (int k = 1; k <= n; ++k) {
    value *= static_cast<double>(k) * k / structure_phi(params, k);
  }
  return value;
}

}  // namespace

TEST_CASE("model parameters carry the three exact branches") {
  const ModelParams p1(3, Pair::One);
  CHECK(p1.a() == Rational{2, 3});
  CHECK(p1.b() == Rational{4, 3});
  CHECK(p1.energy() == doctest::Approx(4.0));
  const ModelParams p2(3, Pair::Two);
  CHECK(p2.b() == Rational{1, 3});
  CHECK(p2.energy() == doctest::Approx(11.0 / 3.0));
  const ModelParams p3(3, Pair::Three);
  CHECK(p3.a() == Rational{5, 3});
  CHECK(p3.energy() == doctest::Approx(13.0 / 3.0));
  CHECK(ModelParams::u() == Rational{1, 2});

  CHECK_THROWS_AS(ModelParams(-1, Pair::One), DomainError);
  CHECK_THROWS_AS(pair_from_index(0), ConfigError);
  CHECK_THROWS_AS(pair_from_index(4), ConfigError);
}

TEST_CASE("canonical text form round-trips") {
  for (int n : {0, 1, 7, 30}) {
    for (Pair pair : kPairs) {
      const ModelParams p(n, pair);
      CHECK(ModelParams::parse(p.to_string()) == p);
    }
  }
  CHECK(ModelParams(4, Pair::Two).to_string() == "N=4,pair=2");
  CHECK_THROWS_AS(ModelParams::parse("N=4"), ConfigError);
  CHECK_THROWS_AS(ModelParams::parse("N=x,pair=1"), ConfigError);
  CHECK_THROWS_AS(ModelParams::parse("N=4,pair=9"), ConfigError);
}

TEST_CASE("structure function") {
  const ModelParams p3(3, Pair::Two);
  CHECK(structure_phi(p3, 0.0) == 0.0);
  CHECK(structure_phi(p3, 4.0) == 0.0);
  const ModelParams p1(1, Pair::Two);
  CHECK(structure_phi(p1, 1.0) == doctest::Approx(32.0 / 9.0).epsilon(1e-15));

  for (int n = 0; n <= 20; ++n) {
    for (Pair pair : kPairs) {
      const ModelParams p(n, pair);
      CHECK(structure_phi(p, 0.0) == 0.0);
      CHECK(structure_phi(p, n + 1.0) == 0.0);
      CHECK(structure_phi_ninths(p, n + 1) == 0);
      // Real-valued path agrees with the exact integer path.
      for (int k = 1; k <= n; ++k) {
        const double shifted = structure_phi(p, k + 1e-300);
        CHECK(shifted == doctest::Approx(structure_phi_ninths(p, k) / 9.0).epsilon(1e-14));
      }
      for (int k = 1; k <= n; ++k) {
        CHECK(structure_phi(p, k) > 0.0);
        CHECK(deformation_f(p, k) > 0.0);
      }
    }
  }
}

TEST_CASE("deformation function") {
  CHECK(deformation_f(ModelParams(5, Pair::One), 6) == 0.0);
  CHECK(deformation_f(ModelParams(1, Pair::Two), 1) ==
        doctest::Approx(std::sqrt(32.0 / 9.0)).epsilon(1e-15));
  CHECK_THROWS_AS(deformation_f(ModelParams(2, Pair::One), 4), DomainError);
  CHECK_THROWS_AS(deformation_f(ModelParams(2, Pair::One), -1), DomainError);

  for (Pair pair : kPairs) {
    const ModelParams p(12, pair);
    for (int n = 1; n <= 12; ++n) {
      const double f = deformation_f(p, n);
      CHECK(n * f * f == doctest::Approx(structure_phi(p, n)).epsilon(1e-12));
    }
  }
}

TEST_CASE("rho") {
  CHECK(rho(ModelParams(4, Pair::Three), 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rho(ModelParams(1, Pair::Two), 1) == doctest::Approx(9.0 / 32.0).epsilon(1e-14));
  CHECK_THROWS_AS(rho(ModelParams(3, Pair::One), 4), DomainError);
  CHECK_THROWS_AS(rho(ModelParams(3, Pair::One), -1), DomainError);

  for (int n = 0; n <= 30; ++n) {
    for (Pair pair : kPairs) {
      const ModelParams p(n, pair);
      for (int k = 0; k <= n; ++k) {
        const double value = rho(p, k);
        CHECK(value > 0.0);
        CHECK(value == doctest::Approx(rho_by_product(p, k)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("ladder operators") {
  for (int n = 1; n <= 20; ++n) {
    for (Pair pair : kPairs) {
      const ModelParams p(n, pair);
      const LadderOperators ops = ladder_operators(p);
      CHECK(ops.annihilation.rows() == n + 1);
      CHECK(ops.annihilation.cols() == n + 1);
      CHECK((ops.creation.adjoint() - ops.annihilation).norm() == 0.0);

      using Vec = Eigen::Matrix<OperatorScalar, Eigen::Dynamic, 1>;
      Vec vacuum = Vec::Zero(n + 1);
      vacuum(0) = 1.0L;
      Vec top = Vec::Zero(n + 1);
      top(n) = 1.0L;
      CHECK((ops.annihilation * vacuum).norm() == 0.0);
      CHECK((ops.creation * top).norm() < 1e-12);

      OperatorMatrix expected = OperatorMatrix::Zero(n + 1, n + 1);
      for (int k = 0; k <= n; ++k) {
        expected(k, k) = static_cast<long double>(structure_phi_ninths(p, k + 1) -
                                                  structure_phi_ninths(p, k)) / 9.0L;
      }
      CHECK((commutator(ops.annihilation, ops.creation) - expected).norm() < 1e-10);
      CHECK((commutator(ops.number, ops.creation) - ops.creation).norm() < 1e-12);
      CHECK((commutator(ops.number, ops.annihilation) + ops.annihilation).norm() < 1e-12);

      // Same matrix from sqrt(n) f(n).
      OperatorMatrix from_phi = OperatorMatrix::Zero(n + 1, n + 1);
      for (int k = 1; k <= n; ++k) {
        from_phi(k - 1, k) = std::sqrt(static_cast<double>(k)) * deformation_f(p, k);
      }
      CHECK((from_phi - ops.annihilation).norm() < 1e-12L * ops.annihilation.norm());
    }
  }
}

TEST_CASE("energy spectrum") {
  const auto e0 = energy_spectrum(0);
  CHECK(e0[0].pair == Pair::One);
  CHECK(e0[0].energy == doctest::Approx(1.0));
  CHECK(e0[1].pair == Pair::Two);
  CHECK(e0[1].energy == doctest::Approx(2.0 / 3.0));
  CHECK(e0[2].pair == Pair::Three);
  CHECK(e0[2].energy == doctest::Approx(4.0 / 3.0));

  const auto e3 = energy_spectrum(3);
  CHECK(e3[0].energy == doctest::Approx(4.0));
  CHECK(e3[1].energy == doctest::Approx(11.0 / 3.0));
  CHECK(e3[2].energy == doctest::Approx(13.0 / 3.0));
  for (const auto& level : e3) {
    CHECK(ModelParams(3, level.pair).energy() == level.energy);
  }
  CHECK_THROWS_AS(energy_spectrum(-1), DomainError);
}
