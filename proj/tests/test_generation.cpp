#include "flncs/errors.hpp"
#include "flncs/generation.hpp"
#include "random_states.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace flncs;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr Pair kPairs[] = {Pair::One, Pair::Two, Pair::Three};
}  // namespace

TEST_CASE("full Rabi transfer") {
  const JointState j = jc_interact(FockVector::basis(1, 0), 0.0, kPi / 2.0);
  CHECK(j.field_a.dim() == 2);
  CHECK(j.field_a.norm_squared() < 1e-30);
  CHECK(std::abs(std::abs(j.field_b.amp(1)) - 1.0) < 1e-15);

  const Projection pr = project_ground(j);
  CHECK(pr.prob == doctest::Approx(1.0));
  CHECK(std::abs(std::abs(pr.field.amp(1)) - 1.0) < 1e-15);
}

TEST_CASE("vanishing interaction leaves the excited atom untouched") {
  const JointState j = jc_interact(FockVector::basis(1, 0), 0.0, 1e-9);
  CHECK(std::abs(j.field_a.amp(0) - Complex(1.0)) < 1e-15);
  CHECK(j.field_b.norm_squared() < 1e-17);
}

TEST_CASE("ground detection probability for a tilted atom") {
  const JointState j = jc_interact(FockVector::basis(1, 0), 1.0, kPi / 5.0);
  const Projection pr = project_ground(j);
  const double s0 = std::sin(kPi / 5.0);
  CHECK(pr.prob == doctest::Approx((s0 * s0 + 1.0) / 2.0).epsilon(1e-14));
  CHECK(pr.prob == doctest::Approx(0.672745751406263).epsilon(1e-12));
}

TEST_CASE("jc_interact is unitary") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> t(0.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const FockVector field = testing::random_state(rng, 1 + static_cast<int>(rng() % 10));
    const JointState j = jc_interact(field, Complex(g(rng), g(rng)), t(rng));
    CHECK(j.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("measurement with no ground component") {
  JointState j{FockVector::basis(2, 0), FockVector{Eigen::VectorXcd::Zero(2), false}};
  CHECK_THROWS_AS(project_ground(j), MeasurementError);
  JointState only_b{FockVector{Eigen::VectorXcd::Zero(2), false}, FockVector::basis(2, 1)};
  const Projection pr = project_ground(only_b);
  CHECK(pr.prob == 1.0);
  CHECK(pr.field.amp(1) == Complex(1.0));
}

TEST_CASE("plan for N = 1 matches the closed form") {
  const FockVector target = coherent_state(ModelParams(1, Pair::Two), 1.0);
  const GenerationPlan p = plan(target, uniform_schedule(1));
  const double expected = -std::sin(kPi / 5.0) * target.amp(0).real() / target.amp(1).real();
  CHECK(expected == doctest::Approx(-0.311720203333090).epsilon(1e-12));
  CHECK(std::abs(p.epsilons[0] - Complex(expected)) < 1e-12);
  REQUIRE(p.all_roots.size() == 1);
  CHECK(p.all_roots[0].size() == 1);

  const SimulationResult sim = simulate(p);
  CHECK(sim.fidelity >= 1.0 - 1e-10);
  CHECK(sim.success_prob == doctest::Approx(p.success_prob).epsilon(1e-12));
}

TEST_CASE("plan for the single-photon target") {
  const GenerationPlan p = plan(FockVector::basis(2, 1), {kPi / 2.0});
  CHECK(std::abs(p.epsilons[0]) < 1e-15);
  CHECK(p.success_prob == doctest::Approx(1.0));
  CHECK(simulate(p).fidelity == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("plan preconditions") {
  Eigen::VectorXcd amp(3);
  amp << 0.6, 0.8, 0.0;
  CHECK_THROWS_AS(plan(FockVector{amp, true}, uniform_schedule(2)), DomainError);
  const FockVector target = coherent_state(ModelParams(2, Pair::Two), 1.0);
  CHECK_THROWS_AS(plan(target, uniform_schedule(1)), ConfigError);
  // sin(pi sqrt(1)) = 0 for the first photon number.
  CHECK_THROWS_AS(plan(target, {kPi / 5.0, kPi}), DomainError);
  // sin(pi/2 * sqrt(4)) = 0 enters only at atom k >= 4 (m = 3).
  CHECK_NOTHROW(plan(coherent_state(ModelParams(3, Pair::Two), 1.0), {0.3, 0.3, kPi / 2.0}));
  CHECK_THROWS_AS(plan(coherent_state(ModelParams(4, Pair::Two), 1.0), {0.3, 0.3, 0.3, kPi / 2.0}),
                  DomainError);
  CHECK_THROWS_AS(plan(target, uniform_schedule(2),
                       [](int, std::span<const RootCandidate> c) { return c.size(); }),
                  ConfigError);
}

TEST_CASE("N = 2 synthesis with the default schedule") {
  const FockVector target = coherent_state(ModelParams(2, Pair::Two), 1.0);
  const GenerationPlan p = plan(target, uniform_schedule(2));
  const SimulationResult sim = simulate(p);
  CHECK(sim.fidelity >= 1.0 - 1e-8);
  CHECK(sim.intermediates.size() == 3);
  CHECK(sim.intermediates[0].dim() == 1);
  CHECK(sim.intermediates[2].dim() == 3);
}

TEST_CASE("round trip over models, labels and all root choices") {
  for (int n = 1; n <= 6; ++n) {
    for (Pair pair : kPairs) {
      for (double z : {0.3, 1.0, 3.0}) {
        const FockVector target = coherent_state(ModelParams(n, pair), z);
        const auto schedule = uniform_schedule(n);
        const GenerationPlan p = plan(target, schedule);
        for (int k = 1; k <= n; ++k) {
          CHECK(static_cast<int>(p.all_roots[k - 1].size()) == k);
        }
        const SimulationResult sim = simulate(p);
        CHECK(sim.fidelity >= 1.0 - 1e-8);
        CHECK(p.success_prob > 0.0);
        CHECK(p.success_prob <= 1.0);
        CHECK(sim.success_prob == doctest::Approx(p.success_prob).epsilon(1e-8));

        // Any other root at a single step, default choice elsewhere.
        for (int step = 1; step <= n; ++step) {
          for (std::size_t alt = 0; alt < static_cast<std::size_t>(step); ++alt) {
            auto selector = [&](int k, std::span<const RootCandidate> c) {
              return k == step ? alt : select_max_probability(k, c);
            };
            const SimulationResult other = simulate(plan(target, schedule, selector));
            CHECK(other.fidelity >= 1.0 - 1e-8);
          }
        }
      }
    }
  }
}

TEST_CASE("root selection rule") {
  const RootCandidate cands[] = {{Complex(2.0), 0.3}, {Complex(0.5), 0.6}, {Complex(-0.1), 0.6}};
  CHECK(select_max_probability(1, cands) == 2);
  const RootCandidate single[] = {{Complex(1.0), 0.1}};
  CHECK(select_max_probability(1, single) == 0);
}

TEST_CASE("success probability ignores the global phase of the target") {
  const FockVector target = coherent_state(ModelParams(4, Pair::Three), Complex(0.8, 0.5));
  FockVector rotated = target;
  rotated.amp *= std::polar(1.0, 1.1);
  const GenerationPlan a = plan(target, uniform_schedule(4));
  const GenerationPlan b = plan(rotated, uniform_schedule(4));
  CHECK(a.success_prob == doctest::Approx(b.success_prob).epsilon(1e-10));
  CHECK(simulate(a).fidelity >= 1.0 - 1e-8);
}

TEST_CASE("random targets with random schedules") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> t(0.2, 1.2);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const FockVector target = testing::random_state(rng, n + 1);
    std::vector<double> schedule(n);
    for (auto& g : schedule) g = t(rng);
    const SimulationResult sim = simulate(plan(target, schedule));
    CHECK(sim.fidelity >= 1.0 - 1e-8);
  }
}
