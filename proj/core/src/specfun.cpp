#include "besselvisco/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "besselvisco/detail/bessel_kernels.hpp"
#include "besselvisco/error.hpp"

namespace bvisco {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLogMax = 709.0;

// Lanczos approximation, g = 7, nine coefficients.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_series(double xm1) {
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (xm1 + static_cast<double>(i));
  return a;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// sin(pi x) and cos(pi x) with exact argument reduction.
double sin_pi(double x) {
  double r = std::remainder(x, 2.0);  // [-1, 1]
  if (r > 0.5) r = 1.0 - r;
  else if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

// J_nu(x) by its alternating power series.
double bessel_j_series(double nu, double x, int max_terms) {
  const double half = 0.5 * x;
  const double q = half * half;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < max_terms; ++k) {
    const double kp = k + 1.0;
    term *= -q / (kp * (kp + nu));
    sum += term;
    if (std::abs(term) <= 0.5 * kEps * std::max(std::abs(sum), 1.0) && kp * (kp + nu) > q) {
      const double log_lead = nu * std::log(half) - log_gamma(nu + 1.0);
      if (std::abs(log_lead) < kLogMax) return std::pow(half, nu) * reciprocal_gamma(nu + 1.0) * sum;
      return std::exp(log_lead) * sum;
    }
  }
  throw ConvergenceError("J_nu power series did not converge");
}

// Below this x the Hankel form at orders 0..2 does not reach full precision.
constexpr double kHankelRecurrenceMin = 25.0;

struct HankelJY {
  double j;
  double y;
};

// Phase-amplitude (Hankel) asymptotic form; empty when x is too small for
// the series to reach machine precision at this order.
std::optional<HankelJY> bessel_jy_hankel(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double prev = 1.0;
  bool converged = false;
  for (int k = 1; k < 80; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (8.0 * k * x);
    const double size = std::abs(term);
    if (size == 0.0) {
      converged = true;
      break;
    }
    if (size > prev) return std::nullopt;
    // a_k / x^k enters P with sign (-1)^{k/2} for even k, Q with (-1)^{(k-1)/2}.
    switch (k % 4) {
      case 0: p += term; break;
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
    }
    prev = size;
    if (size <= 0.25 * kEps * (std::abs(p) + std::abs(q))) {
      converged = true;
      break;
    }
  }
  if (!converged) return std::nullopt;
  // chi = x - (nu/2 + 1/4) pi, expanded so that the large x is never rounded.
  const double phase = 0.5 * nu + 0.25;
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  const double cp = cos_pi(phase);
  const double sp = sin_pi(phase);
  const double cos_chi = cx * cp + sx * sp;
  const double sin_chi = sx * cp - cx * sp;
  const double amp = std::sqrt(2.0 / (kPi * x));
  return HankelJY{amp * (p * cos_chi - q * sin_chi), amp * (p * sin_chi + q * cos_chi)};
}

// Steed's method: CF1 for J'/J, downward recurrence to a small order mu,
// then the complex continued fraction CF2 for (J' + iY')/(J + iY). Requires
// nu >= 0 and x >= 2.
HankelJY bessel_jy_steed(double nu, double x) {
  constexpr int kMaxIter = 100000;
  constexpr double kFpMin = 1e-30;
  constexpr double kTol = 1e-16;

  const int nl = std::max(0, static_cast<int>(nu - x + 1.5));
  const double xmu = nu - nl;
  const double xmu2 = xmu * xmu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double w = xi2 / kPi;

  int isign = 1;
  double h = std::max(nu * xi, kFpMin);
  double b = xi2 * nu;
  double d = 0.0;
  double c = h;
  int i = 1;
  for (; i <= kMaxIter; ++i) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = b - 1.0 / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::abs(del - 1.0) < kTol) break;
  }
  if (i > kMaxIter) throw ConvergenceError("Steed CF1 did not converge");

  double rjl = isign * kFpMin;
  double rjpl = h * rjl;
  const double rjl1 = rjl;
  double fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const double rjtemp = fact * rjl + rjpl;
    fact -= xi;
    rjpl = fact * rjtemp - rjl;
    rjl = rjtemp;
  }
  if (rjl == 0.0) rjl = kEps;
  const double f = rjpl / rjl;

  double a = 0.25 - xmu2;
  double p = -0.5 * xi;
  double q = 1.0;
  const double br = 2.0 * x;
  double bi = 2.0;
  fact = a * xi / (p * p + q * q);
  double cr = br + q * fact;
  double ci = bi + p * fact;
  double den = br * br + bi * bi;
  double dr = br / den;
  double di = -bi / den;
  double dlr = cr * dr - ci * di;
  double dli = cr * di + ci * dr;
  double temp = p * dlr - q * dli;
  q = p * dli + q * dlr;
  p = temp;
  for (i = 2; i <= kMaxIter; ++i) {
    a += 2.0 * (i - 1);
    bi += 2.0;
    dr = a * dr + br;
    di = a * di + bi;
    if (std::abs(dr) + std::abs(di) < kFpMin) dr = kFpMin;
    fact = a / (cr * cr + ci * ci);
    cr = br + cr * fact;
    ci = bi - ci * fact;
    if (std::abs(cr) + std::abs(ci) < kFpMin) cr = kFpMin;
    den = dr * dr + di * di;
    dr /= den;
    di /= -den;
    dlr = cr * dr - ci * di;
    dli = cr * di + ci * dr;
    temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    if (std::abs(dlr - 1.0) + std::abs(dli) < kTol) break;
  }
  if (i > kMaxIter) throw ConvergenceError("Steed CF2 did not converge");

  const double gam = (p - f) / q;
  double rjmu = std::sqrt(w / ((p - f) * gam + q));
  rjmu = std::copysign(rjmu, rjl);
  double rymu = rjmu * gam;
  const double rymup = rymu * (p + q / gam);
  double ry1 = xmu * xi * rymu - rymup;
  const double scale = rjmu / rjl;
  const double rj = rjl1 * scale;
  for (int k = 1; k <= nl; ++k) {
    const double rytemp = (xmu + k) * xi2 * ry1 - rymu;
    rymu = ry1;
    ry1 = rytemp;
  }
  return HankelJY{rj, rymu};
}

}  // namespace

Order::Order(double nu) : nu_(nu) {
  if (!(nu > -1.0) || !std::isfinite(nu))
    throw DomainError("model order must satisfy nu > -1, got " + std::to_string(nu));
}

void EvalAccuracy::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw DomainError("EvalAccuracy.rel_tol must lie in (0, 1)");
  if (max_terms < 10) throw DomainError("EvalAccuracy.max_terms must be at least 10");
}

double gamma(double x) {
  if (std::isnan(x)) throw DomainError("gamma of NaN");
  if (is_nonpositive_integer(x)) throw PoleError("gamma has a pole at " + std::to_string(x));
  if (x < 0.5) return kPi / (sin_pi(x) * gamma(1.0 - x));
  if (x > 171.6) throw OverflowError("gamma overflows for x = " + std::to_string(x));
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  // Split the power so that t^(x-1/2) does not overflow before e^{-t} is applied.
  const double half_pow = std::pow(t, 0.5 * (xm1 + 0.5));
  return std::sqrt(2.0 * kPi) * lanczos_series(xm1) * (half_pow * std::exp(-t)) * half_pow;
}

double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x < 0.5) return sin_pi(x) * gamma(1.0 - x) / kPi;
  if (x > 171.6) return 0.0;
  return 1.0 / gamma(x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  if (x < 0.5) return std::log(kPi / sin_pi(x)) - log_gamma(1.0 - x);
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (xm1 + 0.5) * std::log(t) - t + std::log(lanczos_series(xm1));
}

double bessel_i(double order, double z, const EvalAccuracy& acc) {
  acc.validate();
  if (!(order >= -1.0)) throw DomainError("bessel_i requires order >= -1");
  if (!(z > 0.0)) throw DomainError("bessel_i requires z > 0");
  if (order == -1.0) order = 1.0;

  constexpr double kCrossover = 30.0;
  if (z > kCrossover) {
    if (auto s = detail::hankel_i_sum(order, z)) {
      const double log_scale = z - 0.5 * std::log(2.0 * kPi * z);
      if (log_scale > kLogMax) throw OverflowError("I_nu(z) overflows; use bessel_i_ratio");
      return std::exp(log_scale) * *s;
    }
  }

  // Positive-term power series; the term budget scales with z because the
  // largest term sits near k = z/2.
  const double half = 0.5 * z;
  const double q = half * half;
  const int budget = std::max(acc.max_terms, static_cast<int>(2.0 * z) + 100);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < budget; ++k) {
    const double kp = k + 1.0;
    const double ratio = q / (kp * (kp + order));
    term *= ratio;
    sum += term;
    if (!std::isfinite(sum)) throw OverflowError("I_nu(z) overflows; use bessel_i_ratio");
    if (ratio < 1.0 && term <= 0.5 * kEps * (1.0 - ratio) * sum) {
      const double log_lead = order * std::log(half) - log_gamma(order + 1.0);
      const double value = std::abs(log_lead) < kLogMax
                               ? std::pow(half, order) * reciprocal_gamma(order + 1.0) * sum
                               : std::exp(log_lead + std::log(sum));
      if (!std::isfinite(value)) throw OverflowError("I_nu(z) overflows; use bessel_i_ratio");
      return value;
    }
  }
  throw ConvergenceError("I_nu power series exhausted its term budget");
}

double bessel_i_ratio(double order_num, double order_den, double z) {
  if (std::abs(std::abs(order_num - order_den) - 1.0) > 1e-12)
    throw DomainError("bessel_i_ratio requires orders differing by exactly one");
  const double lo = std::min(order_num, order_den);
  const double hi = std::max(order_num, order_den);
  if (!(lo > -1.0)) throw DomainError("bessel_i_ratio requires both orders > -1");
  if (!(z > 0.0)) throw DomainError("bessel_i_ratio requires z > 0");

  double hi_over_lo = 0.0;
  bool done = false;
  if (z > 30.0) {
    const auto s_hi = detail::hankel_i_sum(hi, z);
    const auto s_lo = detail::hankel_i_sum(lo, z);
    if (s_hi && s_lo) {
      hi_over_lo = *s_hi / *s_lo;
      done = true;
    }
  }
  if (!done) hi_over_lo = detail::modified_bessel_ratio_cf(hi, z, 1000 + static_cast<int>(10.0 * z));
  return order_num > order_den ? hi_over_lo : 1.0 / hi_over_lo;
}

double bessel_j(double order, double x, const EvalAccuracy& acc) {
  acc.validate();
  if (!(order > -1.0)) throw DomainError("bessel_j requires order > -1");
  if (!(x > 0.0)) throw DomainError("bessel_j requires x > 0");

  if (x <= 6.0 || x * x <= 4.0 * (order + 1.0))
    return bessel_j_series(order, x, std::max(acc.max_terms, 100));
  if (auto h = bessel_jy_hankel(order, x)) return h->j;
  if (order >= 0.0 && order < x && x >= kHankelRecurrenceMin) {
    // Upward recurrence from a low order is stable while the order stays
    // below x, and avoids Steed's O(x) continued fraction.
    const double base = order - std::floor(order);
    const auto j0 = bessel_jy_hankel(base, x);
    const auto j1 = bessel_jy_hankel(base + 1.0, x);
    if (j0 && j1) {
      double lo = j0->j;
      double hi = j1->j;
      const int steps = static_cast<int>(std::lround(order - base));
      if (steps == 0) return lo;
      for (int k = 1; k < steps; ++k) {
        const double next = 2.0 * (base + k) / x * hi - lo;
        lo = hi;
        hi = next;
      }
      return hi;
    }
  }
  if (order >= 0.0) return bessel_jy_steed(order, x).j;
  // J_{-mu} = cos(mu pi) J_mu - sin(mu pi) Y_mu
  const double mu = -order;
  const auto jy = bessel_jy_steed(mu, x);
  return cos_pi(mu) * jy.j - sin_pi(mu) * jy.y;
}

double bessel_j_deriv(double order, double x) {
  if (!(order > -1.0)) throw DomainError("bessel_j_deriv requires order > -1");
  if (!(x > 0.0)) throw DomainError("bessel_j_deriv requires x > 0");
  return (order / x) * bessel_j(order, x) - bessel_j(order + 1.0, x);
}

}  // namespace bvisco
