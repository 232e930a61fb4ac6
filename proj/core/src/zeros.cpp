#include "besselvisco/zeros.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>

#include "besselvisco/error.hpp"
#include "besselvisco/specfun.hpp"

namespace bvisco {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxRefineIter = 100;
constexpr double kScanStep = 0.25;

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

struct Bracket {
  double lo;
  double hi;
};

class ZeroFinder {
 public:
  ZeroFinder(double order, double abs_tol) : order_(order), abs_tol_(abs_tol) {}

  double j(double x) const { return bessel_j(order_, x); }

  // Scan [start, ...) in fixed steps until J changes sign away from `sign`.
  std::optional<Bracket> scan(double start, int sign, double step) const {
    double a = start;
    if (sign_of(j(a)) != sign) return std::nullopt;
    for (int i = 0; i < 100000; ++i) {
      const double b = a + step;
      const int sb = sign_of(j(b));
      if (sb == 0) return Bracket{b, b};
      if (sb != sign) return Bracket{a, b};
      a = b;
    }
    return std::nullopt;
  }

  Bracket bracket(std::size_t n, double prev, int sign) const {
    if (n == 1) {
      // j_{nu,1}^2 > 4(nu+1) follows from the Rayleigh sum, so J_nu keeps
      // its initial positive sign up to that point.
      double start = 2.0 * std::sqrt(order_ + 1.0);
      if (auto b = scan(start, sign, kScanStep)) return *b;
      if (auto b = scan(0.5 * start, sign, 0.05)) return *b;
    } else {
      const double g = mcmahon_guess(order_, n);
      const double a = g - 0.75;
      const double b = g + 0.75;
      if (a > prev && a - prev < kMinZeroGap) {
        const int sa = sign_of(j(a));
        const int sb = sign_of(j(b));
        if (sa == sign && sb == -sign) return Bracket{a, b};
      }
      if (auto br = scan(prev + 2.5, sign, kScanStep)) return *br;
      if (auto br = scan(prev + 0.25, sign, 0.05)) return *br;
    }
    throw ConvergenceError("could not bracket zero " + std::to_string(n) + " of J_" + std::to_string(order_));
  }

  double refine(Bracket br, double guess) const {
    if (br.lo == br.hi) return br.lo;
    double lo = br.lo;
    double hi = br.hi;
    const int s_lo = sign_of(j(lo));
    double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
    for (int it = 0; it < kMaxRefineIter; ++it) {
      const double tol = std::max(abs_tol_, 4.0 * (std::nextafter(x, 2.0 * x + 1.0) - x));
      const double f = j(x);
      if (f == 0.0) return x;
      if (sign_of(f) == s_lo) lo = x;
      else hi = x;
      const double df = bessel_j_deriv(order_, x);
      double next = x - f / df;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - x) <= 0.5 * tol || hi - lo <= tol) return next;
      x = next;
    }
    throw ConvergenceError("zero refinement for J_" + std::to_string(order_) + " did not converge");
  }

 private:
  double order_;
  double abs_tol_;
};

constexpr std::array<double, 6> kBernoulli = {1.0 / 6.0,   -1.0 / 30.0,  1.0 / 42.0,
                                              -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0};

}  // namespace

double ZeroTable::effective_tolerance(double j) const noexcept {
  return std::max(abs_tol, 4.0 * (std::nextafter(j, 2.0 * j + 1.0) - j));
}

double mcmahon_guess(double order, std::size_t n) {
  const double beta = (static_cast<double>(n) + 0.5 * order - 0.25) * kPi;
  const double mu = 4.0 * order * order;
  const double b8 = 8.0 * beta;
  const double b8_2 = b8 * b8;
  const double m1 = mu - 1.0;
  return beta - m1 / b8 - 4.0 * m1 * (7.0 * mu - 31.0) / (3.0 * b8 * b8_2) -
         32.0 * m1 * ((83.0 * mu - 982.0) * mu + 3779.0) / (15.0 * b8 * b8_2 * b8_2);
}

ZeroTable compute_zeros(double order, std::size_t count, double abs_tol) {
  if (!(order > -1.0)) throw DomainError("compute_zeros requires order > -1");
  if (count < 1) throw DomainError("compute_zeros requires count >= 1");
  if (!(abs_tol > 0.0 && abs_tol <= 1e-6)) throw DomainError("compute_zeros requires abs_tol in (0, 1e-6]");

  ZeroFinder finder(order, abs_tol);
  ZeroTable table;
  table.order = order;
  table.abs_tol = abs_tol;
  table.zeros.reserve(count);

  double prev = 0.0;
  int sign = 1;  // J_nu > 0 just to the right of the origin
  for (std::size_t n = 1; n <= count; ++n) {
    const Bracket br = finder.bracket(n, prev, sign);
    const double guess = (n > 1 || order >= 0.0) ? mcmahon_guess(order, n) : 0.5 * (br.lo + br.hi);
    const double root = finder.refine(br, guess);
    table.zeros.push_back(root);
    prev = root;
    sign = -sign;
  }
  return table;
}

double hurwitz_zeta(int s, double x) {
  if (s < 2) throw DomainError("hurwitz_zeta requires s >= 2");
  if (!(x > 0.0)) throw DomainError("hurwitz_zeta requires x > 0");
  double head = 0.0;
  while (x < 20.0) {
    head += std::pow(x, -s);
    x += 1.0;
  }
  // Euler-Maclaurin remainder at x >= 20.
  double sum = std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  double rising = s;  // s (s+1) ... (s+2k-2)
  double fact = 2.0;  // (2k)!
  double xpow = std::pow(x, -s - 1.0);
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    sum += kBernoulli[k - 1] / fact * rising * xpow;
    const double kk = static_cast<double>(k);
    rising *= (s + 2.0 * kk - 1.0) * (s + 2.0 * kk);
    fact *= (2.0 * kk + 1.0) * (2.0 * kk + 2.0);
    xpow /= x * x;
  }
  return head + sum;
}

RayleighSum rayleigh_sum(const ZeroTable& table) {
  if (table.zeros.empty()) throw DomainError("rayleigh_sum requires at least one zero");
  RayleighSum r;
  for (auto it = table.zeros.rbegin(); it != table.zeros.rend(); ++it) r.partial += 1.0 / ((*it) * (*it));
  // j_n ~ beta_n - (mu-1)/(8 beta_n), beta_n = (n + nu/2 - 1/4) pi, so
  // 1/j_n^2 ~ 1/beta_n^2 + (mu-1)/(4 beta_n^4).
  const double nu = table.order;
  const double mu = 4.0 * nu * nu;
  const double x0 = static_cast<double>(table.size()) + 1.0 + 0.5 * nu - 0.25;
  const double pi2 = kPi * kPi;
  r.tail = hurwitz_zeta(2, x0) / pi2 + 0.25 * (mu - 1.0) * hurwitz_zeta(4, x0) / (pi2 * pi2);
  r.exact = 1.0 / (4.0 * (nu + 1.0));
  return r;
}

std::shared_ptr<const ZeroTable> ZeroCache::get(double order, std::size_t count, double abs_tol) {
  const Key key{std::llround(order * 1e14), count, abs_tol};
  {
    std::shared_lock lock(mutex_);
    if (auto it = tables_.find(key); it != tables_.end()) return it->second;
  }
  auto table = std::make_shared<const ZeroTable>(compute_zeros(order, count, abs_tol));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = tables_.emplace(key, std::move(table));
  return it->second;
}

std::size_t ZeroCache::size() const {
  std::shared_lock lock(mutex_);
  return tables_.size();
}

void ZeroCache::clear() {
  std::unique_lock lock(mutex_);
  tables_.clear();
}

ZeroCache& ZeroCache::global() {
  static ZeroCache cache;
  return cache;
}

}  // namespace bvisco
