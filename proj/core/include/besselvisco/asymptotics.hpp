#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "besselvisco/specfun.hpp"
#include "besselvisco/timedomain.hpp"

namespace bvisco {

enum class BranchKind { short_time, long_time };

std::string_view to_string(BranchKind kind);

struct AsymptoticBranch {
  BranchKind kind;
  Order order;
};

/// First positive zero of J_order (memoised through ZeroCache).
double first_zero(double order);

// Short time: 2(nu+1)/sqrt(pi t) for both memory functions.
// Long time:  4(nu+1)(nu+2) for psi, 4(nu+1) exp(-j_{nu,1}^2 t) for phi.
double psi_asymptotic(const AsymptoticBranch& branch, double t);
double phi_asymptotic(const AsymptoticBranch& branch, double t);

// Short time: 1 +/- 4(nu+1) sqrt(t/pi).
// Long time:  2(nu+2)/(nu+3) + 4(nu+1)(nu+2) t for the creep compliance,
//             4(nu+1)/j_{nu,1}^2 exp(-j_{nu,1}^2 t) for the relaxation modulus.
// The short-time modulus goes negative past t = pi/(16(nu+1)^2); it is
// returned unclamped.
double creep_asymptotic(const AsymptoticBranch& branch, double t);
double modulus_asymptotic(const AsymptoticBranch& branch, double t);

/// Dispatch on one of the four model function kinds.
double asymptotic_value(CurveKind kind, const AsymptoticBranch& branch, double t);

struct CrossoverRow {
  double t = 0.0;
  double series = 0.0;
  double short_value = 0.0;
  double long_value = 0.0;
  double short_rel_error = 0.0;
  double long_rel_error = 0.0;
  BranchKind best = BranchKind::short_time;
};

/// Series value against both branches at every grid point; `best` is the
/// branch with the smaller relative error.
std::vector<CrossoverRow> crossover_report(const Order& order, CurveKind kind, std::span<const double> t_grid,
                                           const SeriesPolicy& policy = {});

/// Time at which the short and long branches have equal relative error,
/// found by bisection in log t on [t_lo, t_hi]. Throws DomainError if the
/// error difference does not change sign on the interval.
double crossover_time(const Order& order, CurveKind kind, double t_lo, double t_hi,
                      const SeriesPolicy& policy = {});

}  // namespace bvisco
