#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace bvisco {

/// Lower bound on the spacing of consecutive zeros of J_nu for nu > -1.
inline constexpr double kMinZeroGap = 2.9;

/// The first positive zeros j_{nu,1} < j_{nu,2} < ... of J_nu.
struct ZeroTable {
  double order = 0.0;
  std::vector<double> zeros;
  /// Requested accuracy. Entries beyond ~1e3 are limited by the spacing of
  /// doubles instead; see effective_tolerance().
  double abs_tol = 1e-12;

  std::size_t size() const noexcept { return zeros.size(); }
  double operator[](std::size_t i) const { return zeros[i]; }
  /// max(abs_tol, 4 ulp(j)) for the zero j.
  double effective_tolerance(double j) const noexcept;
};

/// McMahon's large-n expansion for j_{nu,n} (four terms).
double mcmahon_guess(double order, std::size_t n);

/// Computes the first `count` zeros of J_order. Deterministic; throws
/// ConvergenceError if a Newton/bisection refinement stalls.
ZeroTable compute_zeros(double order, std::size_t count, double abs_tol = 1e-12);

struct RayleighSum {
  double partial = 0.0;  ///< sum over the tabulated zeros of 1/j^2
  double tail = 0.0;     ///< asymptotic estimate of the neglected terms
  double corrected() const noexcept { return partial + tail; }
  /// 1/(4(nu+1)), the closed-form value of the full sum.
  double exact = 0.0;
};

/// sum_n 1/j_{nu,n}^2 over the table, plus a tail estimate built from the
/// two-term McMahon zero location.
RayleighSum rayleigh_sum(const ZeroTable& table);

/// Hurwitz zeta sum_{k>=0} (x+k)^{-s} for integer s >= 2 and x > 0.
double hurwitz_zeta(int s, double x);

/// Thread-safe memo of zero tables keyed by (order, count, abs_tol).
class ZeroCache {
 public:
  std::shared_ptr<const ZeroTable> get(double order, std::size_t count, double abs_tol = 1e-12);
  std::size_t size() const;
  void clear();

  /// Process-wide instance.
  static ZeroCache& global();

 private:
  using Key = std::tuple<long long, std::size_t, double>;
  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const ZeroTable>> tables_;
};

}  // namespace bvisco
