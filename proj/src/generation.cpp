#include "flncs/generation.hpp"

#include "flncs/errors.hpp"
#include "flncs/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace flncs {

namespace {

constexpr double kMinTopAmplitude = 1e-14;
constexpr double kMinSine = 1e-12;
constexpr double kMinDetection = 1e-14;

struct Rabi {
  std::vector<double> c;
  std::vector<double> s;
};

// C_m, S_m for m = 0..count-1.
Rabi rabi_factors(double gtau, int count) {
  Rabi r{std::vector<double>(count), std::vector<double>(count)};
  for (int m = 0; m < count; ++m) {
    const double angle = gtau * std::sqrt(m + 1.0);
    r.c[m] = std::cos(angle);
    r.s[m] = std::sin(angle);
  }
  return r;
}

}  // namespace

JointState jc_interact(const FockVector& field, Complex epsilon, double gtau) {
  const int dim = field.dim();
  const Rabi r = rabi_factors(gtau, dim + 1);
  const Complex i(0.0, 1.0);
  const double scale = 1.0 / std::sqrt(1.0 + std::norm(epsilon));
  auto amp = [&](int m) -> Complex { return m >= 0 && m < dim ? field.amp(m) : 0.0; };

  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim + 1);
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(dim + 1);
  for (int m = 0; m <= dim; ++m) {
    const double s_prev = m > 0 ? r.s[m - 1] : 0.0;
    const double c_prev = m > 0 ? r.c[m - 1] : 1.0;
    a(m) = scale * (r.c[m] * amp(m) + epsilon * r.s[m] * amp(m + 1));
    b(m) = -i * scale * (s_prev * amp(m - 1) - epsilon * c_prev * amp(m));
  }
  return {FockVector{std::move(a), false}, FockVector{std::move(b), false}};
}

Projection project_ground(const JointState& joint) {
  const double prob = joint.field_b.norm_squared();
  if (!(prob >= kMinDetection)) {
    std::ostringstream msg;
    msg << "ground-state detection impossible (probability " << prob << ")";
    throw MeasurementError(msg.str());
  }
  return {FockVector::normalize(joint.field_b.amp), prob};
}

std::size_t select_max_probability(int /*step*/, std::span<const RootCandidate> candidates) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < candidates.size(); ++j) {
    const auto& cur = candidates[j];
    const auto& top = candidates[best];
    const double gap = cur.step_prob - top.step_prob;
    const double tie = 1e-12 * std::max(cur.step_prob, top.step_prob);
    if (gap > tie || (std::abs(gap) <= tie && std::abs(cur.epsilon) < std::abs(top.epsilon))) {
      best = j;
    }
  }
  return best;
}

std::vector<double> uniform_schedule(int atoms, double gtau) {
  return std::vector<double>(static_cast<std::size_t>(std::max(atoms, 0)), gtau);
}

GenerationPlan plan(const FockVector& target, const std::vector<double>& gtau,
                    const RootSelector& selector) {
  const int n = target.dim() - 1;
  if (n < 0) {
    throw DomainError("plan: empty target");
  }
  if (static_cast<int>(gtau.size()) != n) {
    throw ConfigError("plan: schedule has " + std::to_string(gtau.size()) +
                      " interaction parameters, target needs " + std::to_string(n));
  }
  if (std::abs(target.amp(n)) < kMinTopAmplitude) {
    throw DomainError("plan: underdetermined target (top amplitude d_N is zero)");
  }
  for (int k = 1; k <= n; ++k) {
    const Rabi r = rabi_factors(gtau[k - 1], k);
    for (int m = 0; m < k; ++m) {
      if (std::abs(r.s[m]) < kMinSine) {
        std::ostringstream msg;
        msg << "plan: degenerate schedule, sin(gtau_" << k << " sqrt(" << m + 1 << ")) = 0";
        throw DomainError(msg.str());
      }
    }
  }

  GenerationPlan out;
  out.n = n;
  out.gtau = gtau;
  out.epsilons.assign(n, 0.0);
  out.all_roots.assign(n, {});
  out.step_probs.assign(n, 1.0);
  out.target = FockVector::normalize(target.amp);

  Eigen::VectorXcd current = out.target.amp;
  for (int k = n; k >= 1; --k) {
    const Rabi r = rabi_factors(gtau[k - 1], k);
    // d_m = S_{m-1} phi_{m-1} - eps C_{m-1} phi_m, phi_k = 0, solved downward from m = k.
    std::vector<Polynomial> phi(k);
    phi[k - 1] = Polynomial({current(k) / r.s[k - 1]});
    for (int m = k - 1; m >= 1; --m) {
      Polynomial next = phi[m].shifted();
      next *= r.c[m - 1];
      next += Polynomial({current(m)});
      next /= r.s[m - 1];
      phi[m - 1] = std::move(next);
    }
    // n = 0 row: d_0 = -eps phi_0.
    Polynomial characteristic = phi[0].shifted();
    characteristic += Polynomial({current(0)});

    const std::vector<Complex> roots = polynomial_roots(characteristic);
    if (roots.empty()) {
      throw NumericalError("plan: characteristic polynomial has no roots at atom " +
                           std::to_string(k));
    }
    std::vector<RootCandidate> candidates;
    candidates.reserve(roots.size());
    for (const Complex& eps : roots) {
      double norm = 0.0;
      for (const auto& p : phi) {
        norm += std::norm(p(eps));
      }
      // The unnormalized phi reproduces d exactly and |d| = 1.
      candidates.push_back({eps, 1.0 / ((1.0 + std::norm(eps)) * norm)});
    }
    std::sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) {
      if (x.epsilon.real() != y.epsilon.real()) return x.epsilon.real() < y.epsilon.real();
      return x.epsilon.imag() < y.epsilon.imag();
    });
    const std::size_t pick = selector(k, candidates);
    if (pick >= candidates.size()) {
      throw ConfigError("plan: root selector returned an out-of-range index");
    }
    const Complex eps = candidates[pick].epsilon;
    out.epsilons[k - 1] = eps;
    out.step_probs[k - 1] = candidates[pick].step_prob;
    out.all_roots[k - 1] = std::move(candidates);

    Eigen::VectorXcd previous(k);
    for (int m = 0; m < k; ++m) {
      previous(m) = phi[m](eps);
    }
    current = FockVector::normalize(std::move(previous)).amp;
  }
  for (double p : out.step_probs) {
    out.success_prob *= p;
  }
  return out;
}

SimulationResult simulate(const GenerationPlan& plan) {
  SimulationResult result{FockVector::basis(1, 0), 0.0, 1.0, {}};
  result.intermediates.push_back(result.final_state);
  for (int k = 1; k <= plan.n; ++k) {
    const JointState joint = jc_interact(result.final_state, plan.epsilons[k - 1], plan.gtau[k - 1]);
    Projection measured = project_ground(joint);
    result.success_prob *= measured.prob;
    result.final_state = std::move(measured.field);
    result.intermediates.push_back(result.final_state);
  }
  if (result.final_state.dim() != plan.target.dim()) {
    throw ConfigError("simulate: plan and target dimensions disagree");
  }
  result.fidelity = std::abs(plan.target.amp.dot(result.final_state.amp));
  return result;
}

}  // namespace flncs
