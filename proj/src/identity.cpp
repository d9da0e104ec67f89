#include "flncs/identity.hpp"

#include "flncs/errors.hpp"
#include "flncs/special.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>

namespace flncs {

namespace {

using Complex = std::complex<double>;

constexpr double kMaxCutoff = 400.0;
constexpr double kImagTolerance = 1e-9;
constexpr int kPolesPerFamily = 40;
constexpr std::size_t kQagLimit = 2000;
// Residue shifting stops once the shifted remainder is this small relative to
// the residue sum.
constexpr double kNegligibleRemainder = 1e-12;
// Moments are integrated to this relative accuracy; truncated ends contribute
// at most kTruncationShare of it.
constexpr double kMomentTolerance = 1e-10;
constexpr double kTruncationShare = 1e-2;

// Adaptive Gauss-Kronrod (GSL qag) with absolute and relative targets.
// Exceptions thrown by f are carried across the C callback.
struct QagResult {
  double value;
  double error;
  int status;
};

template <typename F>
QagResult qag(const F& f, double a, double b, double epsabs, double epsrel) {
  static const bool handler_off = [] {
    gsl_set_error_handler_off();
    return true;
  }();
  (void)handler_off;
  struct Context {
    const F* f;
    std::exception_ptr error;
  } ctx{&f, nullptr};
  gsl_function fn;
  fn.function = [](double x, void* p) -> double {
    auto* c = static_cast<Context*>(p);
    if (c->error) {
      return 0.0;
    }
    try {
      return (*c->f)(x);
    } catch (...) {
      c->error = std::current_exception();
      return 0.0;
    }
  };
  fn.params = &ctx;
  std::unique_ptr<gsl_integration_workspace, decltype(&gsl_integration_workspace_free)> ws(
      gsl_integration_workspace_alloc(kQagLimit), gsl_integration_workspace_free);
  QagResult out{0.0, 0.0, 0};
  out.status = gsl_integration_qag(&fn, a, b, epsabs, epsrel, kQagLimit, GSL_INTEG_GAUSS21,
                                   ws.get(), &out.value, &out.error);
  if (ctx.error) {
    std::rethrow_exception(ctx.error);
  }
  return out;
}

// Minimum of a function convex on (lo, hi).
template <typename F>
double golden_min(F&& h, double lo, double hi, double width) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c1 = hi - ratio * (hi - lo);
  double c2 = lo + ratio * (hi - lo);
  double h1 = h(c1);
  double h2 = h(c2);
  while (hi - lo > width) {
    if (h1 < h2) {
      hi = c2;
      c2 = c1;
      h2 = h1;
      c1 = hi - ratio * (hi - lo);
      h1 = h(c1);
    } else {
      lo = c1;
      c1 = c2;
      h1 = h2;
      c2 = lo + ratio * (hi - lo);
      h2 = h(c2);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

WeightEvaluator::WeightEvaluator(ModelParams params, WeightOptions options)
    : params_(params), options_(options) {
  const double n = params_.n();
  tops_ = {n + 2.0, n + params_.a().value() + 1.0, n + params_.b().value() + 1.0};
  strip_end_ = std::min({tops_[0], tops_[1], tops_[2]});
  if (options_.abscissa) {
    const double c = *options_.abscissa;
    if (!(c > 0.0 && c < strip_end_)) {
      std::ostringstream msg;
      msg << "contour abscissa c=" << c << " outside the pole-free strip (0, " << strip_end_
          << ")";
      throw DomainError(msg.str());
    }
  }
  if (!(options_.tolerance > 0.0)) {
    throw ConfigError("weight tolerance must be positive");
  }
  log_norm_ = -std::lgamma(n + 1.0) - std::lgamma(n + params_.a().value()) -
              std::lgamma(n + params_.b().value());
  for (int k = 0; k < kPolesPerFamily; ++k) {
    left_poles_.push_back({-static_cast<double>(k), -1, k});
    for (int f = 0; f < 3; ++f) {
      right_poles_.push_back({tops_[f] + k, f, k});
    }
  }
  std::sort(right_poles_.begin(), right_poles_.end(),
            [](const Pole& p, const Pole& q) { return p.s < q.s; });
}

Complex WeightEvaluator::log_mellin(Complex s) const {
  return (1.0 - s) * std::log(16.0) + log_gamma(s) + log_gamma(tops_[0] - s) +
         log_gamma(tops_[1] - s) + log_gamma(tops_[2] - s) + log_norm_;
}

Complex WeightEvaluator::log_residue(const Pole& pole, double log_x, double power) const {
  // Residue of M(s) x^{-s} at a simple pole, with the sign that makes it an
  // additive correction to the shifted contour integral.
  const double s = pole.s;
  Complex log_rest = (1.0 - s) * std::log(16.0) + log_norm_;
  log_rest += pole.family < 0 ? Complex(0.0) : log_gamma(Complex(s, 0.0));
  for (int f = 0; f < 3; ++f) {
    if (f != pole.family) {
      log_rest += log_gamma(Complex(tops_[f] - s, 0.0));
    }
  }
  const Complex sign(0.0, std::numbers::pi * pole.k);
  return log_rest + sign - std::lgamma(pole.k + 1.0) + (power - s) * log_x;
}

WeightEvaluator::Contour WeightEvaluator::choose_contour(double log_x, double power) const {
  auto h = [&](double c) { return log_mellin(Complex(c, 0.0)).real() + (power - c) * log_x; };
  if (options_.abscissa) {
    return {*options_.abscissa, 0, 0.0};
  }
  const double width = 1e-6;
  Contour best{golden_min(h, width, strip_end_ - width, width), 0, 0.0};
  // Shift towards the side where x^{-s} shrinks, collecting residues, and keep
  // the shift with the smallest remainder relative to the residue sum.
  const auto& poles = log_x < 0.0 ? left_poles_ : right_poles_;
  double best_ratio = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < poles.size(); ++k) {
    sum += std::exp(log_residue(poles[k], log_x, power)).real();
    const double lo = std::min(poles[k].s, poles[k + 1].s);
    const double hi = std::max(poles[k].s, poles[k + 1].s);
    if (!(std::abs(sum) > 0.0)) {
      continue;
    }
    const double ratio = std::exp(h(0.5 * (lo + hi))) / std::abs(sum);
    if (ratio < best_ratio) {
      best_ratio = ratio;
      best.shifted = static_cast<int>(k + 1);
    } else if (ratio > 1e6 * best_ratio) {
      break;
    }
    if (ratio < kNegligibleRemainder) {
      break;
    }
  }
  if (best.shifted == 0 || best_ratio > 1e-2) {
    best.shifted = 0;
    return best;
  }
  const std::size_t k = best.shifted;
  const double lo = std::min(poles[k - 1].s, poles[k].s);
  const double hi = std::max(poles[k - 1].s, poles[k].s);
  const double gap = hi - lo;
  best.abscissa = golden_min(h, lo + 1e-3 * gap, hi - 1e-3 * gap, 1e-4 * gap);
  for (std::size_t j = 0; j < k; ++j) {
    best.residues += std::exp(log_residue(poles[j], log_x, power)).real();
  }
  return best;
}

double WeightEvaluator::cutoff_for(double c, double log_x, double power, double scale) const {
  // The integrand modulus eventually decays like exp(-pi |t|); step outwards
  // until it stays below the target relative to its peak and the residue sum.
  auto log_mag = [&](double t) {
    return log_mellin(Complex(c, t)).real() + (power - c) * log_x;
  };
  double peak = std::max(log_mag(0.0), scale > 0.0 ? std::log(scale) : -1e300);
  const double margin = std::log(options_.tolerance) - std::log(100.0);
  double t = 0.5;
  int below = 0;
  while (below < 2) {
    const double m = log_mag(t);
    peak = std::max(peak, m);
    below = m < peak + margin ? below + 1 : 0;
    t += 0.5;
    if (t > kMaxCutoff) {
      std::ostringstream msg;
      msg << "weight: contour integrand does not decay (c=" << c << ", T>" << kMaxCutoff
          << ", x=" << std::exp(log_x) << ")";
      throw NumericalError(msg.str());
    }
  }
  return t;
}

WeightSample WeightEvaluator::sample_log(double log_x, double power, bool check_imag) const {
  const Contour contour = choose_contour(log_x, power);
  const double c = contour.abscissa;
  const double cutoff = cutoff_for(c, log_x, power, std::abs(contour.residues));
  auto term = [&](double t) {
    const Complex s(c, t);
    return std::exp(log_mellin(s) + (power - s) * log_x);
  };
  // Accuracy is relative to the larger of the residue sum and the integrand
  // peak; a fixed contour far from the saddle cannot resolve more than that.
  const double peak = std::abs(term(0.0));
  const double epsabs = 1e-2 * options_.tolerance * std::max(std::abs(contour.residues), peak);
  // Conjugate symmetry of the integrand: the real part is even in t.
  const QagResult re = qag([&](double t) { return term(t).real(); }, 0.0, cutoff, epsabs,
                           options_.tolerance);
  const double remainder = re.value / std::numbers::pi;
  if (re.status != GSL_SUCCESS &&
      !(re.error <= 1e2 * std::max(epsabs, options_.tolerance * std::abs(re.value)))) {
    std::ostringstream msg;
    msg << "weight: contour quadrature failed (" << gsl_strerror(re.status) << ", c=" << c
        << ", x=" << std::exp(log_x) << ")";
    throw NumericalError(msg.str());
  }
  WeightSample out{contour.residues + remainder, 0.0, c, cutoff, contour.shifted};
  if (check_imag) {
    const double scale = std::max(std::abs(re.value), epsabs);
    const QagResult im = qag([&](double t) { return term(t).imag(); }, -cutoff, cutoff,
                             1e-2 * kImagTolerance * std::max(1.0, scale), options_.tolerance);
    out.imag = im.value / (2.0 * std::numbers::pi);
    if (!(std::abs(out.imag) <= kImagTolerance * std::max(1.0, std::abs(out.value)))) {
      std::ostringstream msg;
      msg << "weight: residual imaginary part " << out.imag << " (c=" << c << ", T=" << cutoff
          << ", x=" << std::exp(log_x) << ")";
      throw NumericalError(msg.str());
    }
  }
  return out;
}

double WeightEvaluator::weight(double x) const {
  if (!(x > 0.0)) {
    throw DomainError("weight: x must be positive");
  }
  return sample_log(std::log(x)).value;
}

double WeightEvaluator::contour_l1(double c) const {
  // (1/2pi) int |rho(c - 1 + it)| dt, so that |w(x)| <= x^{-c} contour_l1(c).
  const double cutoff = cutoff_for(c, 0.0, 0.0, 0.0);
  const QagResult r = qag([&](double t) { return std::exp(log_mellin(Complex(c, t)).real()); },
                          0.0, cutoff, 0.0, 1e-6);
  return r.value / std::numbers::pi;
}

std::vector<MomentReport> verify_moments(const WeightEvaluator& evaluator, int max_n) {
  const ModelParams& params = evaluator.params();
  if (max_n < 0) {
    throw DomainError("moment order must be nonnegative");
  }
  if (max_n > params.n()) {
    throw DomainError("moment order exceeds N (moments above N diverge)");
  }
  std::vector<MomentReport> out;
  for (int n = 0; n <= max_n; ++n) {
    const double analytic = rho(params, n);
    const double budget = kTruncationShare * kMomentTolerance * analytic;
    // Bound the discarded ends with contours left and right of the moment order.
    const double c_near = 0.5;
    const double gap_near = n + 1.0 - c_near;
    const double c_far = n + 1.0 + 0.75 * (evaluator.strip_end() - n - 1.0);
    const double gap_far = c_far - n - 1.0;
    const double log_lo = std::min(
        std::log(1e-3),
        (std::log(budget * gap_near) - std::log(evaluator.contour_l1(c_near))) / gap_near);
    const double log_hi = std::max(
        std::log(1e3),
        (std::log(evaluator.contour_l1(c_far)) - std::log(budget * gap_far)) / gap_far);
    // int x^n w(x) dx = int x^{n+1} w(x) d(log x), split at x = 1.
    auto integrand = [&](double u) { return evaluator.sample_log(u, n + 1.0, false).value; };
    const double epsabs = 0.5 * kMomentTolerance * analytic;
    const QagResult head = qag(integrand, log_lo, 0.0, epsabs, kMomentTolerance);
    const QagResult tail = qag(integrand, 0.0, log_hi, epsabs, kMomentTolerance);
    const double numeric = head.value + tail.value;
    if (!(head.error + tail.error <= 1e-8 * analytic)) {
      std::ostringstream msg;
      msg << "verify_moments: quadrature did not converge for n=" << n << " (error estimate "
          << head.error + tail.error << ", value " << numeric << ")";
      throw NumericalError(msg.str());
    }
    out.push_back({n, numeric, analytic, std::abs(numeric - analytic) / analytic});
  }
  return out;
}

std::vector<WeightPoint> weight_profile(const WeightEvaluator& evaluator, double x_min,
                                        double x_max, int points) {
  if (!(x_min > 0.0) || !(x_min < x_max)) {
    throw ConfigError("weight profile needs 0 < x_min < x_max");
  }
  if (points < 2) {
    throw ConfigError("weight profile needs at least 2 points");
  }
  const double lo = std::log(x_min);
  const double hi = std::log(x_max);
  std::vector<WeightPoint> out;
  out.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double log_x = lo + (hi - lo) * i / (points - 1);
    out.push_back({std::exp(log_x), evaluator.sample_log(log_x).value});
  }
  return out;
}

PositivityReport check_positivity(const std::vector<WeightPoint>& profile, double threshold) {
  PositivityReport report{std::numeric_limits<double>::infinity(), 0.0, {}};
  for (const auto& pt : profile) {
    if (pt.w < report.min_value) {
      report.min_value = pt.w;
      report.argmin = pt.x;
    }
    if (pt.w < -threshold) {
      report.violations.push_back(pt);
    }
  }
  return report;
}

}  // namespace flncs
