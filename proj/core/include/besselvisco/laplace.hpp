#pragma once

#include <complex>
#include <functional>
#include <optional>

#include "besselvisco/specfun.hpp"

namespace bvisco {

using Complex = std::complex<double>;

/// Distance in s below which evaluation at a pole -j^2 is refused.
inline constexpr double kPoleExclusionRadius = 1e-6;

/// Laplace transform of the creep-rate memory function,
///   2(nu+1)/sqrt(s) * I_{nu+1}(sqrt(s)) / I_{nu+2}(sqrt(s)),
/// on the principal branch of sqrt(s). Poles at s = 0 and s = -j_{nu+2,n}^2.
Complex psi_tilde(const Order& order, Complex s);
double psi_tilde(const Order& order, double s);

/// Laplace transform of the relaxation-rate memory function,
///   2(nu+1)/sqrt(s) * I_{nu+1}(sqrt(s)) / I_nu(sqrt(s)).
/// Poles at s = -j_{nu,n}^2.
Complex phi_tilde(const Order& order, Complex s);
double phi_tilde(const Order& order, double s);

/// |(1 + psi_tilde)(1 - phi_tilde) - 1| at real s > 0.
double check_reciprocity(const Order& order, double s);

/// Fixed-Talbot contour settings. Rounding grows like eps e^{0.4 node_count},
/// so in double precision 20-24 nodes are the most accurate; the default 48
/// resolves smooth transforms to about 1e-8.
struct TalbotConfig {
  int node_count = 48;
  /// Contour scale r; defaults to 2 node_count / (5 t) for each t.
  std::optional<double> contour_scale;
  /// Exponential shift c: invert F(s - c) and multiply by e^{-ct}. Moving the
  /// dominant pole towards the origin keeps decaying targets O(1).
  double shift = 0.0;

  /// node_count even and >= 16, positive scale.
  void validate() const;
};

struct InversionResult {
  double value = 0.0;
  /// Estimate with half the nodes.
  double coarse_value = 0.0;
  /// Set when the two estimates differ by more than 1e-6 relative or either
  /// is not finite.
  bool degraded = false;
};

using LaplaceFunction = std::function<Complex(Complex)>;

/// Numerical inverse Laplace transform f(t) by fixed-Talbot quadrature.
/// `f` must be analytic off the negative real axis (and to the right of the
/// contour).
InversionResult invert_numeric(const LaplaceFunction& f, double t, const TalbotConfig& cfg = {});

}  // namespace bvisco
