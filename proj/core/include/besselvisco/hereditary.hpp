#pragma once

#include <span>
#include <vector>

#include "besselvisco/specfun.hpp"
#include "besselvisco/timedomain.hpp"

namespace bvisco {

enum class Interpolation { piecewise_constant, piecewise_linear };

/// Sampled causal load (stress or strain) starting at t = 0.
class LoadHistory {
 public:
  /// Throws DomainError unless the lengths match, times[0] == 0 and the
  /// times increase strictly.
  LoadHistory(std::vector<double> times, std::vector<double> values,
              Interpolation interpolation = Interpolation::piecewise_linear);

  /// Heaviside load of the given amplitude on [0, t_end].
  static LoadHistory step(double t_end, double amplitude = 1.0);

  const std::vector<double>& times() const noexcept { return times_; }
  const std::vector<double>& values() const noexcept { return values_; }
  Interpolation interpolation() const noexcept { return interpolation_; }
  double end_time() const noexcept { return times_.back(); }
  std::size_t size() const noexcept { return times_.size(); }

  /// Interpolated load at t in [0, end_time()].
  double value_at(double t) const;

 private:
  std::vector<double> times_;
  std::vector<double> values_;
  Interpolation interpolation_;
};

/// What feeds the exponential modes: the load x itself or its increments dx.
enum class ModeDrive { load, load_increment };

/// Memory kernel as an instantaneous term, a constant (Newtonian) rate and a
/// finite set of exponential modes. The last mode lumps the truncated tail of
/// the Dirichlet series.
struct PronyKernel {
  double instantaneous = 1.0;
  double constant_rate = 0.0;
  std::vector<double> rates;
  std::vector<double> weights;
  ModeDrive drive = ModeDrive::load;
};

/// Creep side, eps = sigma + int Psi(t-s) sigma(s) ds, truncated for t >= t_ref.
PronyKernel creep_kernel(const Order& order, double t_ref, const SeriesPolicy& policy = {});
/// Relaxation side in Stieltjes form, sigma = int G(t-s) d eps(s). Equivalent
/// to eps - int Phi eps, but free of cancellation once G is small.
PronyKernel relaxation_kernel(const Order& order, double t_ref, const SeriesPolicy& policy = {});

/// y(t) = k.instantaneous x(t) + k.constant_rate int_0^t x + sum_n w_n m_n(t), with
/// m_n = int_0^t e^{-r_n (t-s)} x(s) ds for ModeDrive::load and
/// m_n = int_{0-}^t e^{-r_n (t-s)} dx(s) for ModeDrive::load_increment,
/// integrated exactly against the interpolant of x (x(0-) = 0).
std::vector<double> convolve(const PronyKernel& kernel, const LoadHistory& input, std::span<const double> t_eval);

// Both responses use kernels resolved down to policy.min_time; lags shorter
// than that are carried by the lumped tail mode.

/// Strain from a stress history through eps = sigma + int Psi(t-s) sigma(s) ds.
MaterialCurve strain_response(const Order& order, const LoadHistory& stress, std::span<const double> t_eval,
                              const SeriesPolicy& policy = {});

/// Stress from a strain history through sigma = eps - int Phi(t-s) eps(s) ds.
MaterialCurve stress_response(const Order& order, const LoadHistory& strain, std::span<const double> t_eval,
                              const SeriesPolicy& policy = {});

}  // namespace bvisco
