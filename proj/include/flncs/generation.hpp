#pragma once

// Cavity synthesis of finite Fock superpositions: N two-level atoms, each
// prepared in (|a> + i eps_k |b>) / sqrt(1 + |eps_k|^2), cross a resonant
// cavity one after another starting from the vacuum, and every atom is
// post-selected in the ground state |b>.

#include "flncs/errors.hpp"
#include "flncs/states.hpp"

#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace flncs {

// Field components of the atom-field state, paired with |a> and |b>.
struct JointState {
  FockVector field_a;
  FockVector field_b;

  double norm_squared() const noexcept {
    return field_a.norm_squared() + field_b.norm_squared();
  }
};

// Resonant Jaynes-Cummings step with C_n = cos(g tau sqrt(n+1)), S_n = sin(g tau sqrt(n+1)):
//   |n,a> -> C_n |n,a> - i S_n |n+1,b>,   |n,b> -> C_{n-1} |n,b> - i S_{n-1} |n-1,a>.
// The output lives in a Fock space one photon larger than the input field.
JointState jc_interact(const FockVector& field, Complex epsilon, double gtau);

struct Projection {
  FockVector field;
  double prob;
};

// Ground-state detection. Throws MeasurementError when the probability is below 1e-14.
Projection project_ground(const JointState& joint);

class MeasurementError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

struct RootCandidate {
  Complex epsilon;
  double step_prob;  // ground-detection probability of this atom
};

// Picks one candidate per step. Receives the step k (1-based atom index).
using RootSelector = std::function<std::size_t(int step, std::span<const RootCandidate>)>;

// Largest step probability, ties (within 1e-12 relative) broken by smallest |eps|.
std::size_t select_max_probability(int step, std::span<const RootCandidate> candidates);

struct GenerationPlan {
  int n{0};
  std::vector<double> gtau;                        // atom k uses gtau[k-1]
  std::vector<Complex> epsilons;                   // eps_1..eps_N
  std::vector<std::vector<RootCandidate>> all_roots;  // candidates for atom k at [k-1]
  std::vector<double> step_probs;
  double success_prob{1.0};
  FockVector target;
};

inline constexpr double kDefaultGtau = std::numbers::pi / 5.0;

std::vector<double> uniform_schedule(int atoms, double gtau = kDefaultGtau);

// Back-solves the atom parameters for a normalized target with nonzero top
// amplitude. Each step's coefficients phi^{(k-1)} are carried as polynomials in
// eps_k; the n = 0 row yields the degree-k characteristic polynomial.
GenerationPlan plan(const FockVector& target, const std::vector<double>& gtau,
                    const RootSelector& selector = select_max_probability);

struct SimulationResult {
  FockVector final_state;
  double fidelity;
  double success_prob;
  std::vector<FockVector> intermediates;  // phi^{(0)} = vacuum .. phi^{(N)}
};

SimulationResult simulate(const GenerationPlan& plan);

}  // namespace flncs
