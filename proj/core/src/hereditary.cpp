#include "besselvisco/hereditary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "besselvisco/error.hpp"

namespace bvisco {

namespace {

// Exact integrals of e^{-r (h-u)} against 1 and u on [0, h].
struct ModeStep {
  double decay;     // e^{-r h}
  double constant;  // int_0^h e^{-r(h-u)} du
  double linear;    // int_0^h e^{-r(h-u)} u du
};

ModeStep mode_step(double rate, double h) {
  const double x = rate * h;
  ModeStep s;
  s.decay = std::exp(-x);
  s.constant = -std::expm1(-x) / rate;
  double b;  // (1 - e^{-x}(1+x)) / r^2
  if (x < 1e-3) {
    b = h * h * (0.5 - x * (1.0 / 3.0 - x * (0.125 - x / 30.0)));
  } else {
    b = (-std::expm1(-x) - x * s.decay) / (rate * rate);
  }
  s.linear = h * s.constant - b;
  return s;
}

PronyKernel build_kernel(const Order& order, CurveKind kind, double t_ref, const SeriesPolicy& policy) {
  const double nu = order.value();
  const Model model(order, policy, t_ref);
  const ZeroTable& zeros = model.zeros_for(kind);
  const std::size_t n = model.series(kind, t_ref).terms;
  const bool creep = kind == CurveKind::creep_compliance;

  // Mode n of Psi is amp e^{-j^2 t}; mode n of G is amp e^{-j^2 t} / j^2.
  PronyKernel k;
  const double amp = 4.0 * (nu + 1.0);
  k.instantaneous = creep ? 1.0 : 0.0;
  k.constant_rate = creep ? 4.0 * (nu + 1.0) * (nu + 2.0) : 0.0;
  k.drive = creep ? ModeDrive::load : ModeDrive::load_increment;
  double inv_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double rate = zeros[i] * zeros[i];
    k.rates.push_back(rate);
    k.weights.push_back(creep ? amp : amp / rate);
    inv_sum += 1.0 / rate;
  }
  // Lumped tail mode: rate j_{n+1}^2 carrying the Rayleigh remainder, so that
  // the step response matches the tail-corrected material function.
  const double remainder = std::max(1.0 / (4.0 * (zeros.order + 1.0)) - inv_sum, 0.0);
  const double tail_rate = zeros[n] * zeros[n];
  k.rates.push_back(tail_rate);
  k.weights.push_back(creep ? amp * remainder * tail_rate : amp * remainder);
  return k;
}

MaterialCurve respond(const Order& order, CurveKind out_kind, CurveKind kernel_kind, const LoadHistory& input,
                      std::span<const double> t_eval, const SeriesPolicy& policy) {
  policy.validate();
  // A general load samples the kernel at every lag down to zero, so the
  // modes must resolve it to min_time regardless of where t_eval starts.
  const PronyKernel kernel = build_kernel(order, kernel_kind, policy.min_time, policy);
  const std::vector<double> values = convolve(kernel, input, t_eval);
  MaterialCurve curve(order, out_kind);
  for (std::size_t i = 0; i < t_eval.size(); ++i) curve.push_back({t_eval[i], values[i], Provenance::series});
  return curve;
}

}  // namespace

LoadHistory::LoadHistory(std::vector<double> times, std::vector<double> values, Interpolation interpolation)
    : times_(std::move(times)), values_(std::move(values)), interpolation_(interpolation) {
  if (times_.empty()) throw DomainError("LoadHistory needs at least one sample");
  if (times_.size() != values_.size()) throw DomainError("LoadHistory times and values differ in length");
  if (times_.front() != 0.0) throw DomainError("LoadHistory must start at t = 0");
  for (std::size_t i = 1; i < times_.size(); ++i)
    if (!(times_[i] > times_[i - 1])) throw DomainError("LoadHistory times must increase strictly");
  for (double v : values_)
    if (!std::isfinite(v)) throw DomainError("LoadHistory values must be finite");
}

LoadHistory LoadHistory::step(double t_end, double amplitude) {
  if (!(t_end > 0.0)) throw DomainError("step history needs t_end > 0");
  return LoadHistory({0.0, t_end}, {amplitude, amplitude}, Interpolation::piecewise_linear);
}

double LoadHistory::value_at(double t) const {
  if (t < 0.0 || t > end_time()) throw ExtrapolationError("t=" + std::to_string(t) + " outside the load history");
  const auto it = std::upper_bound(times_.begin(), times_.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - times_.begin()) - 1;
  if (interpolation_ == Interpolation::piecewise_constant || k + 1 == times_.size()) return values_[k];
  const double w = (t - times_[k]) / (times_[k + 1] - times_[k]);
  return values_[k] + w * (values_[k + 1] - values_[k]);
}

PronyKernel creep_kernel(const Order& order, double t_ref, const SeriesPolicy& policy) {
  return build_kernel(order, CurveKind::creep_compliance, t_ref, policy);
}

PronyKernel relaxation_kernel(const Order& order, double t_ref, const SeriesPolicy& policy) {
  return build_kernel(order, CurveKind::relax_modulus, t_ref, policy);
}

std::vector<double> convolve(const PronyKernel& kernel, const LoadHistory& input, std::span<const double> t_eval) {
  for (std::size_t i = 0; i < t_eval.size(); ++i) {
    if (t_eval[i] < 0.0) throw DomainError("response times must be non-negative");
    if (t_eval[i] > input.end_time())
      throw ExtrapolationError("response requested at t=" + std::to_string(t_eval[i]) +
                               " beyond the load history end " + std::to_string(input.end_time()));
    if (i > 0 && !(t_eval[i] > t_eval[i - 1])) throw DomainError("response times must increase strictly");
  }
  const auto& times = input.times();
  const auto& values = input.values();
  const bool linear = input.interpolation() == Interpolation::piecewise_linear;
  const bool increments = kernel.drive == ModeDrive::load_increment;
  const std::size_t modes = kernel.rates.size();

  // Per-mode state at the start of the current segment k, and the running
  // integral of the input.
  std::vector<double> q(modes, increments ? values[0] : 0.0);
  std::vector<double> q_eval(modes, 0.0);
  double integral = 0.0;
  std::size_t k = 0;

  const auto slope_of = [&](std::size_t seg) {
    if (!linear || seg + 1 >= times.size()) return 0.0;
    return (values[seg + 1] - values[seg]) / (times[seg + 1] - times[seg]);
  };
  // Step coefficients are reused while the step length repeats to roundoff.
  std::vector<ModeStep> steps(modes);
  double steps_h = -1.0;
  // Advances `state` and `acc` by h from the start of segment seg.
  const auto advance = [&](std::size_t seg, double h, std::vector<double>& state, double& acc) {
    const double x0 = values[seg];
    const double m = slope_of(seg);
    acc += x0 * h + 0.5 * m * h * h;
    if (std::abs(h - steps_h) > 8.0 * std::numeric_limits<double>::epsilon() * h) {
      for (std::size_t n = 0; n < modes; ++n) steps[n] = mode_step(kernel.rates[n], h);
      steps_h = h;
    }
    for (std::size_t n = 0; n < modes; ++n) {
      const ModeStep& s = steps[n];
      state[n] = increments ? s.decay * state[n] + m * s.constant
                            : s.decay * state[n] + x0 * s.constant + m * s.linear;
    }
  };

  std::vector<double> out;
  out.reserve(t_eval.size());
  for (double te : t_eval) {
    while (k + 1 < times.size() && times[k + 1] <= te) {
      advance(k, times[k + 1] - times[k], q, integral);
      ++k;
      // Jumps of a piecewise-constant input enter the increment-driven modes.
      if (increments && !linear) {
        const double jump = values[k] - values[k - 1];
        for (double& state : q) state += jump;
      }
    }
    const double h = te - times[k];
    double acc = integral;
    q_eval = q;
    if (h > 0.0) advance(k, h, q_eval, acc);
    const double x = values[k] + slope_of(k) * h;
    double y = kernel.instantaneous * x + kernel.constant_rate * acc;
    for (std::size_t n = 0; n < modes; ++n) y += kernel.weights[n] * q_eval[n];
    out.push_back(y);
  }
  return out;
}

MaterialCurve strain_response(const Order& order, const LoadHistory& stress, std::span<const double> t_eval,
                              const SeriesPolicy& policy) {
  return respond(order, CurveKind::strain, CurveKind::creep_compliance, stress, t_eval, policy);
}

MaterialCurve stress_response(const Order& order, const LoadHistory& strain, std::span<const double> t_eval,
                              const SeriesPolicy& policy) {
  return respond(order, CurveKind::stress, CurveKind::relax_modulus, strain, t_eval, policy);
}

}  // namespace bvisco
