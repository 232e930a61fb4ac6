#pragma once

// Gamma function, Bessel functions of the first kind J_nu and modified
// Bessel functions I_nu for real order nu > -1 and positive real argument.

namespace bvisco {

/// Model order nu, constrained to nu > -1.
class Order {
 public:
  explicit Order(double nu);
  double value() const noexcept { return nu_; }
  /// The order shifted by `k`, e.g. nu + 2 for the creep-side zeros.
  double shifted(double k) const noexcept { return nu_ + k; }

  friend bool operator==(const Order&, const Order&) = default;

 private:
  double nu_;
};

struct EvalAccuracy {
  double rel_tol = 1e-12;
  int max_terms = 200;

  /// Throws DomainError unless 0 < rel_tol < 1 and max_terms >= 10.
  void validate() const;
};

/// Gamma(x). Throws PoleError at non-positive integers.
double gamma(double x);

/// 1/Gamma(x); entire, zero at non-positive integers.
double reciprocal_gamma(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// I_nu(z) for nu >= -1, z > 0. Throws OverflowError when the value exceeds
/// the double range; use bessel_i_ratio for ratios at large z.
double bessel_i(double order, double z, const EvalAccuracy& acc = {});

/// I_a(z) / I_b(z) with |a - b| = 1, evaluated without forming either
/// function, so any z up to 1e6 is safe.
double bessel_i_ratio(double order_num, double order_den, double z);

/// J_nu(x) for nu > -1, x > 0.
double bessel_j(double order, double x, const EvalAccuracy& acc = {});

/// dJ_nu/dx computed as (nu/x) J_nu(x) - J_{nu+1}(x).
double bessel_j_deriv(double order, double x);

}  // namespace bvisco
