#include "besselvisco/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "besselvisco/error.hpp"
#include "besselvisco/zeros.hpp"

namespace bvisco {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double t, const char* what) {
  if (!(t > 0.0)) throw DomainError(std::string(what) + " requires t > 0");
}

void require_nonnegative(double t, const char* what) {
  if (!(t >= 0.0)) throw DomainError(std::string(what) + " requires t >= 0");
}

double rel_error(double approx, double exact) {
  return std::abs(approx - exact) / std::abs(exact);
}

}  // namespace

std::string_view to_string(BranchKind kind) {
  return kind == BranchKind::short_time ? "short" : "long";
}

double first_zero(double order) {
  return ZeroCache::global().get(order, 1, 1e-13)->zeros.front();
}

double psi_asymptotic(const AsymptoticBranch& branch, double t) {
  require_positive(t, "psi_asymptotic");
  const double nu = branch.order.value();
  if (branch.kind == BranchKind::short_time) return 2.0 * (nu + 1.0) / std::sqrt(kPi * t);
  return 4.0 * (nu + 1.0) * (nu + 2.0);
}

double phi_asymptotic(const AsymptoticBranch& branch, double t) {
  require_positive(t, "phi_asymptotic");
  const double nu = branch.order.value();
  if (branch.kind == BranchKind::short_time) return 2.0 * (nu + 1.0) / std::sqrt(kPi * t);
  const double j1 = first_zero(nu);
  return 4.0 * (nu + 1.0) * std::exp(-j1 * j1 * t);
}

double creep_asymptotic(const AsymptoticBranch& branch, double t) {
  require_nonnegative(t, "creep_asymptotic");
  const double nu = branch.order.value();
  if (branch.kind == BranchKind::short_time) return 1.0 + 4.0 * (nu + 1.0) * std::sqrt(t / kPi);
  return 2.0 * (nu + 2.0) / (nu + 3.0) + 4.0 * (nu + 1.0) * (nu + 2.0) * t;
}

double modulus_asymptotic(const AsymptoticBranch& branch, double t) {
  require_nonnegative(t, "modulus_asymptotic");
  const double nu = branch.order.value();
  if (branch.kind == BranchKind::short_time) return 1.0 - 4.0 * (nu + 1.0) * std::sqrt(t / kPi);
  const double j1 = first_zero(nu);
  return 4.0 * (nu + 1.0) / (j1 * j1) * std::exp(-j1 * j1 * t);
}

double asymptotic_value(CurveKind kind, const AsymptoticBranch& branch, double t) {
  switch (kind) {
    case CurveKind::creep_rate: return psi_asymptotic(branch, t);
    case CurveKind::relax_rate: return phi_asymptotic(branch, t);
    case CurveKind::creep_compliance: return creep_asymptotic(branch, t);
    case CurveKind::relax_modulus: return modulus_asymptotic(branch, t);
    default: break;
  }
  throw DomainError("no asymptotic form for '" + std::string(to_string(kind)) + "'");
}

std::vector<CrossoverRow> crossover_report(const Order& order, CurveKind kind, std::span<const double> t_grid,
                                           const SeriesPolicy& policy) {
  if (t_grid.empty()) throw DomainError("crossover_report requires a non-empty grid");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0)) throw DomainError("crossover_report requires positive times");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1])) throw DomainError("crossover_report requires increasing times");
  }
  SeriesPolicy p = policy;
  p.min_time = std::min(policy.min_time, t_grid.front());
  const Model model(order, p, t_grid.front());
  const AsymptoticBranch short_branch{BranchKind::short_time, order};
  const AsymptoticBranch long_branch{BranchKind::long_time, order};

  std::vector<CrossoverRow> rows;
  rows.reserve(t_grid.size());
  for (double t : t_grid) {
    CrossoverRow row;
    row.t = t;
    row.series = model.series(kind, t).value;
    row.short_value = asymptotic_value(kind, short_branch, t);
    row.long_value = asymptotic_value(kind, long_branch, t);
    row.short_rel_error = rel_error(row.short_value, row.series);
    row.long_rel_error = rel_error(row.long_value, row.series);
    row.best = row.short_rel_error <= row.long_rel_error ? BranchKind::short_time : BranchKind::long_time;
    rows.push_back(row);
  }
  return rows;
}

double crossover_time(const Order& order, CurveKind kind, double t_lo, double t_hi, const SeriesPolicy& policy) {
  if (!(t_lo > 0.0 && t_hi > t_lo)) throw DomainError("crossover_time requires 0 < t_lo < t_hi");
  SeriesPolicy p = policy;
  p.min_time = std::min(policy.min_time, t_lo);
  const Model model(order, p, t_lo);
  const AsymptoticBranch short_branch{BranchKind::short_time, order};
  const AsymptoticBranch long_branch{BranchKind::long_time, order};
  // Positive where the long branch is the better one.
  const auto gap = [&](double t) {
    const double s = model.series(kind, t).value;
    return std::log(rel_error(asymptotic_value(kind, short_branch, t), s)) -
           std::log(rel_error(asymptotic_value(kind, long_branch, t), s));
  };
  double a = std::log(t_lo);
  double b = std::log(t_hi);
  const double ga = gap(t_lo);
  const double gb = gap(t_hi);
  if (!(ga < 0.0 && gb > 0.0))
    throw DomainError("short/long branch errors do not cross on [" + std::to_string(t_lo) + ", " +
                      std::to_string(t_hi) + "]");
  for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
    const double m = 0.5 * (a + b);
    if (gap(std::exp(m)) < 0.0) a = m;
    else b = m;
  }
  return std::exp(0.5 * (a + b));
}

}  // namespace bvisco
