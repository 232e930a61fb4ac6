#include "besselvisco/laplace.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "besselvisco/detail/bessel_kernels.hpp"
#include "besselvisco/error.hpp"

namespace bvisco {

namespace {

constexpr double kPi = std::numbers::pi;

// Refuses s within the exclusion radius of a pole -j^2 of J_{zero_order}.
// The distance to the nearest zero is estimated with one Newton step.
void check_pole(double zero_order, Complex s) {
  if (s.real() >= 0.0 || std::abs(s.imag()) >= kPoleExclusionRadius) return;
  const double lambda = std::sqrt(-s.real());
  const double j = bessel_j(zero_order, lambda);
  const double dj = bessel_j_deriv(zero_order, lambda);
  const double dlambda = j / dj;
  const double distance = std::hypot(2.0 * lambda * dlambda, s.imag());
  if (distance < kPoleExclusionRadius)
    throw PoleError("s = " + std::to_string(s.real()) + " lies at a pole -j^2 of J_" + std::to_string(zero_order));
}

// I_nu(w) / I_{nu-1}(w), nu > 0, complex w with Re w >= 0.
Complex ratio_complex(double nu, Complex w) {
  const int budget = 2000 + static_cast<int>(20.0 * std::abs(w));
  return detail::modified_bessel_ratio_cf(nu, w, budget);
}

double talbot_sum(const LaplaceFunction& g, double t, int nodes, double r) {
  double sum = 0.5 * (std::exp(r * t) * g(Complex(r, 0.0))).real();
  for (int k = 1; k < nodes; ++k) {
    const double theta = k * kPi / nodes;
    const double cot = std::cos(theta) / std::sin(theta);
    const Complex s(r * theta * cot, r * theta);
    const double sigma = theta + (theta * cot - 1.0) * cot;
    sum += (std::exp(s * t) * g(s) * Complex(1.0, sigma)).real();
  }
  return r / nodes * sum;
}

}  // namespace

Complex psi_tilde(const Order& order, Complex s) {
  if (s == Complex(0.0, 0.0)) throw PoleError("psi_tilde has a pole at s = 0");
  if (s.imag() == 0.0 && s.real() > 0.0) return psi_tilde(order, s.real());
  const double nu = order.value();
  check_pole(nu + 2.0, s);
  const Complex w = std::sqrt(s);
  return 2.0 * (nu + 1.0) / w / ratio_complex(nu + 2.0, w);
}

double psi_tilde(const Order& order, double s) {
  if (!(s > 0.0)) return psi_tilde(order, Complex(s, 0.0)).real();
  const double nu = order.value();
  const double z = std::sqrt(s);
  return 2.0 * (nu + 1.0) / z * bessel_i_ratio(nu + 1.0, nu + 2.0, z);
}

Complex phi_tilde(const Order& order, Complex s) {
  if (s == Complex(0.0, 0.0)) throw DomainError("phi_tilde requires s != 0");
  if (s.imag() == 0.0 && s.real() > 0.0) return phi_tilde(order, s.real());
  const double nu = order.value();
  check_pole(nu, s);
  const Complex w = std::sqrt(s);
  return 2.0 * (nu + 1.0) / w * ratio_complex(nu + 1.0, w);
}

double phi_tilde(const Order& order, double s) {
  if (!(s > 0.0)) return phi_tilde(order, Complex(s, 0.0)).real();
  const double nu = order.value();
  const double z = std::sqrt(s);
  return 2.0 * (nu + 1.0) / z * bessel_i_ratio(nu + 1.0, nu, z);
}

double check_reciprocity(const Order& order, double s) {
  if (!(s > 0.0)) throw DomainError("check_reciprocity requires s > 0");
  return std::abs((1.0 + psi_tilde(order, s)) * (1.0 - phi_tilde(order, s)) - 1.0);
}

void TalbotConfig::validate() const {
  if (node_count < 16 || node_count % 2 != 0) throw DomainError("TalbotConfig.node_count must be even and >= 16");
  if (contour_scale && !(*contour_scale > 0.0)) throw DomainError("TalbotConfig.contour_scale must be positive");
  if (!std::isfinite(shift)) throw DomainError("TalbotConfig.shift must be finite");
}

InversionResult invert_numeric(const LaplaceFunction& f, double t, const TalbotConfig& cfg) {
  cfg.validate();
  if (!(t > 0.0)) throw DomainError("invert_numeric requires t > 0");
  const double c = cfg.shift;
  const LaplaceFunction shifted = c == 0.0 ? f : LaplaceFunction([&f, c](Complex s) { return f(s - c); });
  const double decay = std::exp(-c * t);

  const int fine_nodes = cfg.node_count;
  const int coarse_nodes = cfg.node_count / 2;
  const double fine_r = cfg.contour_scale.value_or(2.0 * fine_nodes / (5.0 * t));
  const double coarse_r = cfg.contour_scale ? *cfg.contour_scale : 2.0 * coarse_nodes / (5.0 * t);

  InversionResult result;
  result.value = decay * talbot_sum(shifted, t, fine_nodes, fine_r);
  result.coarse_value = decay * talbot_sum(shifted, t, coarse_nodes, coarse_r);
  const double scale = std::max(std::abs(result.value), std::numeric_limits<double>::min());
  result.degraded = !(std::abs(result.value - result.coarse_value) <= 1e-6 * scale);
  return result;
}

}  // namespace bvisco
