#include "besselvisco/timedomain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "besselvisco/asymptotics.hpp"
#include "besselvisco/error.hpp"

namespace bvisco {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTableTolerance = 1e-12;

void require_table(const ZeroTable& zeros, double expected_order, const char* what) {
  if (std::abs(zeros.order - expected_order) > 1e-12)
    throw DomainError(std::string(what) + " needs zeros of J_" + std::to_string(expected_order) +
                      ", got a table for J_" + std::to_string(zeros.order));
  if (zeros.size() < 2) throw InsufficientZerosError(std::string(what) + " needs at least two zeros", 2);
}

// Sum over m > n of e^{-j_m^2 t} given j_{n+1}, using j_{n+1+k} >= j_{n+1} + k g.
double exp_tail(double j_next, double t) {
  const double head = std::exp(-j_next * j_next * t);
  const double ratio = -std::expm1(-2.0 * kMinZeroGap * j_next * t);
  return ratio > 0.0 ? head / ratio : head;
}

[[noreturn]] void insufficient(const Order& order, CurveKind kind, double t, const SeriesPolicy& policy,
                               const ZeroTable& zeros) {
  const std::size_t need = required_zero_count(order, kind, t, policy);
  std::string msg = std::string(to_string(kind)) + " at t=" + std::to_string(t) + " needs about " +
                    std::to_string(need) + " zeros of J_" + std::to_string(zeros.order) + ", table has " +
                    std::to_string(zeros.size());
  if (need > policy.max_terms) msg += " (exceeds policy.max_terms=" + std::to_string(policy.max_terms) + ")";
  throw InsufficientZerosError(msg, std::max(need, zeros.size() + 1));
}

// constant + amp * sum_n e^{-j_n^2 t}
SeriesValue rate_series(const Order& order, CurveKind kind, double constant, double amp, double t,
                        const SeriesPolicy& policy, const ZeroTable& zeros) {
  const std::size_t limit = std::min(zeros.size(), policy.max_terms + 1);
  double sum = 0.0;
  for (std::size_t n = 1; n < limit; ++n) {
    const double j = zeros[n - 1];
    sum += std::exp(-j * j * t);
    const double bound = amp * exp_tail(zeros[n], t);
    const double value = constant + amp * sum;
    if (bound <= policy.tail_tol * std::min(1.0, std::abs(value))) return {value, bound, n};
  }
  insufficient(order, kind, t, policy, zeros);
}

// amp * sum_n e^{-j_n^2 t} / j_n^2 with the Rayleigh remainder
// R_n = 1/(4(nu'+1)) - sum_{m<=n} 1/j_m^2 added as R_n e^{-j_{n+1}^2 t}.
// The true tail lies between its first term e^{-j_{n+1}^2 t}/j_{n+1}^2 and
// that correction, so the error is at most R_{n+1} e^{-j_{n+1}^2 t}.
struct MaterialSum {
  double sum;
  double bound;
  std::size_t terms;
};

template <class ValueOf>
MaterialSum material_series(const Order& order, CurveKind kind, double amp, double t, const SeriesPolicy& policy,
                            const ZeroTable& zeros, ValueOf value_of) {
  const double total = 1.0 / (4.0 * (zeros.order + 1.0));
  const std::size_t limit = std::min(zeros.size(), policy.max_terms + 1);
  double partial = 0.0;
  double inv_sq = 0.0;
  for (std::size_t n = 1; n < limit; ++n) {
    const double j = zeros[n - 1];
    const double w = 1.0 / (j * j);
    inv_sq += w;
    partial += w * std::exp(-j * j * t);
    const double j_next = zeros[n];
    const double w_next = 1.0 / (j_next * j_next);
    const double remainder = std::max(total - inv_sq, 0.0);
    const double head = std::exp(-j_next * j_next * t);
    const double sum = partial + remainder * head;
    const double bound = amp * std::max(remainder - w_next, 0.0) * head;
    if (t == 0.0) {
      if (n + 1 == limit) return {sum, 0.0, n};
      continue;
    }
    if (bound <= policy.tail_tol * std::min(1.0, std::abs(value_of(sum)))) return {sum, bound, n};
  }
  insufficient(order, kind, t, policy, zeros);
}

}  // namespace

void SeriesPolicy::validate() const {
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) throw DomainError("SeriesPolicy.tail_tol must lie in (0, 1)");
  if (max_terms < 100) throw DomainError("SeriesPolicy.max_terms must be at least 100");
  if (!(min_time > 0.0)) throw DomainError("SeriesPolicy.min_time must be positive");
}

std::string_view to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::creep_rate: return "creep_rate";
    case CurveKind::relax_rate: return "relax_rate";
    case CurveKind::creep_compliance: return "creep_compliance";
    case CurveKind::relax_modulus: return "relax_modulus";
    case CurveKind::strain: return "strain";
    case CurveKind::stress: return "stress";
  }
  return "unknown";
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::series: return "series";
    case Provenance::asymptotic_short: return "asymptotic_short";
    case Provenance::asymptotic_long: return "asymptotic_long";
    case Provenance::oracle: return "oracle";
  }
  return "unknown";
}

CurveKind curve_kind_from_string(std::string_view name) {
  for (auto k : {CurveKind::creep_rate, CurveKind::relax_rate, CurveKind::creep_compliance, CurveKind::relax_modulus,
                 CurveKind::strain, CurveKind::stress})
    if (to_string(k) == name) return k;
  throw DomainError("unknown curve kind '" + std::string(name) + "'");
}

double zero_order_for(const Order& order, CurveKind kind) {
  switch (kind) {
    case CurveKind::creep_rate:
    case CurveKind::creep_compliance:
    case CurveKind::strain: return order.shifted(2.0);
    default: return order.value();
  }
}

void MaterialCurve::push_back(const Sample& s) {
  if (!samples_.empty() && !(s.t > samples_.back().t))
    throw DomainError("MaterialCurve times must be strictly increasing");
  samples_.push_back(s);
}

SeriesValue psi_series(const Order& order, double t, const SeriesPolicy& policy, const ZeroTable& zeros) {
  policy.validate();
  if (!(t > 0.0)) throw DomainError("psi requires t > 0");
  if (t < policy.min_time)
    throw BelowMinTimeError("psi at t=" + std::to_string(t) + " is below min_time; use the short-time asymptotic");
  require_table(zeros, order.shifted(2.0), "psi");
  const double nu = order.value();
  return rate_series(order, CurveKind::creep_rate, 4.0 * (nu + 1.0) * (nu + 2.0), 4.0 * (nu + 1.0), t, policy,
                     zeros);
}

SeriesValue phi_series(const Order& order, double t, const SeriesPolicy& policy, const ZeroTable& zeros) {
  policy.validate();
  if (!(t > 0.0)) throw DomainError("phi requires t > 0");
  if (t < policy.min_time)
    throw BelowMinTimeError("phi at t=" + std::to_string(t) + " is below min_time; use the short-time asymptotic");
  require_table(zeros, order.value(), "phi");
  return rate_series(order, CurveKind::relax_rate, 0.0, 4.0 * (order.value() + 1.0), t, policy, zeros);
}

SeriesValue creep_compliance_series(const Order& order, double t, const SeriesPolicy& policy,
                                    const ZeroTable& zeros) {
  policy.validate();
  if (!(t >= 0.0)) throw DomainError("creep_compliance requires t >= 0");
  require_table(zeros, order.shifted(2.0), "creep_compliance");
  const double nu = order.value();
  const double amp = 4.0 * (nu + 1.0);
  const double base = 2.0 * (nu + 2.0) / (nu + 3.0) + 4.0 * (nu + 1.0) * (nu + 2.0) * t;
  const auto s = material_series(order, CurveKind::creep_compliance, amp, t, policy, zeros,
                                 [&](double sum) { return base - amp * sum; });
  return {base - amp * s.sum, s.bound, s.terms};
}

SeriesValue relaxation_modulus_series(const Order& order, double t, const SeriesPolicy& policy,
                                      const ZeroTable& zeros) {
  policy.validate();
  if (!(t >= 0.0)) throw DomainError("relaxation_modulus requires t >= 0");
  require_table(zeros, order.value(), "relaxation_modulus");
  const double amp = 4.0 * (order.value() + 1.0);
  const auto s = material_series(order, CurveKind::relax_modulus, amp, t, policy, zeros,
                                 [&](double sum) { return amp * sum; });
  return {amp * s.sum, s.bound, s.terms};
}

double psi(const Order& order, double t, const SeriesPolicy& policy, const ZeroTable& zeros) {
  return psi_series(order, t, policy, zeros).value;
}
double phi(const Order& order, double t, const SeriesPolicy& policy, const ZeroTable& zeros) {
  return phi_series(order, t, policy, zeros).value;
}
double creep_compliance(const Order& order, double t, const SeriesPolicy& policy, const ZeroTable& zeros) {
  return creep_compliance_series(order, t, policy, zeros).value;
}
double relaxation_modulus(const Order& order, double t, const SeriesPolicy& policy, const ZeroTable& zeros) {
  return relaxation_modulus_series(order, t, policy, zeros).value;
}

std::size_t required_zero_count(const Order& order, CurveKind kind, double t, const SeriesPolicy& policy) {
  const double zorder = zero_order_for(order, kind);
  const bool material = kind == CurveKind::creep_compliance || kind == CurveKind::relax_modulus ||
                        kind == CurveKind::strain || kind == CurveKind::stress;
  if (!(t > 0.0)) {
    if (material) return 100;
    throw DomainError("required_zero_count: memory functions need t > 0");
  }
  const double nu = order.value();
  const double amp = 4.0 * (nu + 1.0);
  // Expected magnitude of the value, for the relative part of the tolerance.
  const double j1 = std::max(2.0 * std::sqrt(zorder + 1.0), mcmahon_guess(zorder, 1));
  double magnitude = 1.0;
  if (kind == CurveKind::relax_rate) magnitude = amp * std::exp(-j1 * j1 * t);
  if (kind == CurveKind::relax_modulus || kind == CurveKind::stress) magnitude = amp * std::exp(-j1 * j1 * t) / (j1 * j1);
  const double tol = policy.tail_tol * std::min(1.0, magnitude);

  double j = 10.0;
  for (int it = 0; it < 50; ++it) {
    // Material series are bounded by the Rayleigh remainder, about 1/(pi j).
    const double weight = material ? 1.0 / (kPi * j) : 1.0;
    const double denom = -std::expm1(-2.0 * kMinZeroGap * j * t);
    const double log_arg = amp * weight / (tol * std::max(denom, 1e-300));
    const double next = std::sqrt(std::max(std::log(log_arg), 1.0) / t);
    if (std::abs(next - j) < 1e-6 * j) {
      j = next;
      break;
    }
    j = next;
  }
  const double n = j / kPi - 0.5 * zorder + 0.25;
  return static_cast<std::size_t>(std::ceil(std::max(n, 1.0))) + 3;
}

Model::Model(Order order, SeriesPolicy policy) : Model(order, policy, policy.min_time) {}

Model::Model(Order order, SeriesPolicy policy, double t_floor) : order_(order), policy_(policy) {
  policy_.validate();
  if (!(t_floor > 0.0)) throw DomainError("Model requires a positive time floor");
  std::size_t n_nu = 0;
  std::size_t n_nu2 = 0;
  for (auto kind : {CurveKind::creep_rate, CurveKind::creep_compliance})
    n_nu2 = std::max(n_nu2, required_zero_count(order_, kind, t_floor, policy_));
  for (auto kind : {CurveKind::relax_rate, CurveKind::relax_modulus})
    n_nu = std::max(n_nu, required_zero_count(order_, kind, t_floor, policy_));
  const std::size_t cap = policy_.max_terms + 1;
  if (n_nu > cap || n_nu2 > cap)
    throw InsufficientZerosError("time floor " + std::to_string(t_floor) + " needs more than policy.max_terms zeros",
                                 std::max(n_nu, n_nu2));
  // Round up so that nearby floors share cached tables.
  const auto round_up = [cap](std::size_t n) { return std::min(((n + 10) / 64 + 1) * 64, cap); };
  n_nu = round_up(n_nu);
  n_nu2 = round_up(n_nu2);
  zeros_nu_ = ZeroCache::global().get(order_.value(), n_nu, kTableTolerance);
  zeros_nu2_ = ZeroCache::global().get(order_.shifted(2.0), n_nu2, kTableTolerance);
}

const ZeroTable& Model::zeros_for(CurveKind kind) const {
  return zero_order_for(order_, kind) == order_.value() ? *zeros_nu_ : *zeros_nu2_;
}

double Model::psi(double t) const { return psi_series(order_, t, policy_, *zeros_nu2_).value; }
double Model::phi(double t) const { return phi_series(order_, t, policy_, *zeros_nu_).value; }
double Model::creep_compliance(double t) const {
  return creep_compliance_series(order_, t, policy_, *zeros_nu2_).value;
}
double Model::relaxation_modulus(double t) const {
  return relaxation_modulus_series(order_, t, policy_, *zeros_nu_).value;
}

SeriesValue Model::series(CurveKind kind, double t) const {
  switch (kind) {
    case CurveKind::creep_rate: return psi_series(order_, t, policy_, *zeros_nu2_);
    case CurveKind::relax_rate: return phi_series(order_, t, policy_, *zeros_nu_);
    case CurveKind::creep_compliance: return creep_compliance_series(order_, t, policy_, *zeros_nu2_);
    case CurveKind::relax_modulus: return relaxation_modulus_series(order_, t, policy_, *zeros_nu_);
    default: break;
  }
  throw DomainError("Model::series: '" + std::string(to_string(kind)) + "' is not a model function");
}

Sample Model::evaluate(CurveKind kind, double t) const {
  if (t < policy_.min_time) {
    const AsymptoticBranch branch{BranchKind::short_time, order_};
    return {t, asymptotic_value(kind, branch, t), Provenance::asymptotic_short};
  }
  return {t, series(kind, t).value, Provenance::series};
}

MaterialCurve sample_curve(const Order& order, CurveKind kind, std::span<const double> t_grid,
                           const SeriesPolicy& policy) {
  if (t_grid.empty()) throw DomainError("sample_curve requires a non-empty grid");
  if (!(t_grid.front() > 0.0)) throw DomainError("sample_curve requires positive times");
  if (kind == CurveKind::strain || kind == CurveKind::stress)
    throw DomainError("sample_curve: use the hereditary module for responses");
  const Model model(order, policy, std::max(t_grid.front(), policy.min_time));
  MaterialCurve curve(order, kind);
  for (double t : t_grid) curve.push_back(model.evaluate(kind, t));
  return curve;
}

std::vector<double> log_grid(double t_min, double t_max, std::size_t points) {
  if (points < 1) throw DomainError("grid needs at least one point");
  if (!(t_min > 0.0) || !(t_max >= t_min)) throw DomainError("log grid needs 0 < t_min <= t_max");
  if (points == 1) return {t_min};
  std::vector<double> grid(points);
  // Base-10 exponents keep decade points exact.
  const double a = std::log10(t_min);
  const double step = (std::log10(t_max) - a) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = std::pow(10.0, a + step * static_cast<double>(i));
  grid.front() = t_min;
  grid.back() = t_max;
  return grid;
}

std::vector<double> linear_grid(double t_min, double t_max, std::size_t points) {
  if (points < 1) throw DomainError("grid needs at least one point");
  if (!(t_max >= t_min)) throw DomainError("linear grid needs t_min <= t_max");
  if (points == 1) return {t_min};
  std::vector<double> grid(points);
  const double step = (t_max - t_min) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = t_min + step * static_cast<double>(i);
  grid.back() = t_max;
  return grid;
}

}  // namespace bvisco
