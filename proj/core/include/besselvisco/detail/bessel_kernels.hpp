#pragma once

// Internal numerical kernels shared by the real (specfun) and complex
// (laplace) evaluators. Not part of the public interface.

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>

#include "besselvisco/error.hpp"

namespace bvisco::detail {

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const std::complex<double>& x) { return std::abs(x); }

// I_nu(z) / I_{nu-1}(z) for nu > 0 via the continued fraction
//   1 / (2nu/z + 1 / (2(nu+1)/z + 1 / (2(nu+2)/z + ...)))
// evaluated with the modified Lentz algorithm. Converges for every z != 0;
// the number of iterations grows roughly like |z|.
template <class T>
T modified_bessel_ratio_cf(double nu, T z, int max_iter) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 4.0 * std::numeric_limits<double>::epsilon();
  T f = tiny;
  T c = f;
  T d = 0.0;
  for (int k = 0; k < max_iter; ++k) {
    const T b = 2.0 * (nu + k) / z;
    d = b + d;
    if (magnitude(d) == 0.0) d = tiny;
    d = T(1.0) / d;
    c = b + T(1.0) / c;
    if (magnitude(c) == 0.0) c = tiny;
    const T delta = c * d;
    f *= delta;
    if (magnitude(delta - T(1.0)) < eps) return f;
  }
  throw ConvergenceError("modified Bessel ratio continued fraction did not converge (nu=" +
                         std::to_string(nu) + ")");
}

// Scaled Hankel sum sum_k (-1)^k a_k(nu) / z^k, with
// a_k(nu) = prod_{j=1..k} (4nu^2 - (2j-1)^2) / (k! 8^k), so that
// I_nu(z) ~ e^z / sqrt(2 pi z) * sum. Empty when the asymptotic series starts
// to diverge before reaching machine precision.
template <class T>
std::optional<T> hankel_i_sum(double nu, T z, int max_terms = 60) {
  const double mu = 4.0 * nu * nu;
  T term = 1.0;
  T sum = 1.0;
  double prev = 1.0;
  for (int k = 1; k < max_terms; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (8.0 * k) / z;
    const double size = magnitude(term);
    if (size == 0.0) return sum;
    if (size > prev) return std::nullopt;
    sum += term;
    if (size <= 0.25 * std::numeric_limits<double>::epsilon() * magnitude(sum)) return sum;
    prev = size;
  }
  return std::nullopt;
}

}  // namespace bvisco::detail
