#include <doctest.h>

#include <cmath>
#include <numbers>

#include "besselvisco/asymptotics.hpp"
#include "besselvisco/error.hpp"
#include "reference_values.hpp"

using namespace bvisco;

namespace {
constexpr double kPi = std::numbers::pi;
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
const double kOrders[] = {-0.5, 0.0, 0.5, 1.0};
}  // namespace

TEST_SUITE("asymptotics") {
  TEST_CASE("closed forms") {
    const AsymptoticBranch s0{BranchKind::short_time, Order(0.0)};
    CHECK(rel(psi_asymptotic(s0, 0.01), 2.0 / std::sqrt(kPi * 0.01)) < 1e-15);
    CHECK(psi_asymptotic(s0, 0.01) == phi_asymptotic(s0, 0.01));
    const AsymptoticBranch l0{BranchKind::long_time, Order(0.0)};
    CHECK(psi_asymptotic(l0, 3.0) == 8.0);
    CHECK(rel(creep_asymptotic(l0, 2.0), 4.0 / 3.0 + 16.0) < 1e-15);
    CHECK(creep_asymptotic(s0, 0.0) == 1.0);
    CHECK(modulus_asymptotic(s0, 0.0) == 1.0);
    const AsymptoticBranch l1{BranchKind::long_time, Order(1.0)};
    const double decay = -std::log(phi_asymptotic(l1, 1.0) / 8.0);
    CHECK(std::abs(decay - 14.68) < 0.005);
    CHECK_THROWS_AS(psi_asymptotic(s0, 0.0), DomainError);
    CHECK_THROWS_AS(creep_asymptotic(s0, -1.0), DomainError);
    CHECK_THROWS_AS(asymptotic_value(CurveKind::strain, s0, 1.0), DomainError);
  }

  TEST_CASE("short-time modulus branch goes negative and is returned unclamped") {
    const AsymptoticBranch s{BranchKind::short_time, Order(0.0)};
    const double t_zero = kPi / 16.0;
    CHECK(modulus_asymptotic(s, 0.5 * t_zero) > 0.0);
    CHECK(modulus_asymptotic(s, 2.0 * t_zero) < 0.0);
  }

  TEST_CASE("short-time consistency at t = 1e-5") {
    const double t = 1e-5;
    SeriesPolicy policy;
    policy.min_time = t;
    for (double nu : kOrders) {
      const Model m(Order(nu), policy, t);
      const AsymptoticBranch s{BranchKind::short_time, Order(nu)};
      CAPTURE(nu);
      CHECK(rel(phi_asymptotic(s, t), m.phi(t)) <= 1e-2);
      if (nu <= 0.0) CHECK(rel(psi_asymptotic(s, t), m.psi(t)) <= 1e-2);
      // First-order corrections: psi ~ a/sqrt(pi t) + (nu+1)(2nu+3), phi ~ a/sqrt(pi t) - (nu+1)(2nu+1).
      const double a = 2.0 * (nu + 1.0);
      CHECK(rel(a / std::sqrt(kPi * t) + (nu + 1.0) * (2.0 * nu + 3.0), m.psi(t)) < 1e-3);
      CHECK(rel(a / std::sqrt(kPi * t) - (nu + 1.0) * (2.0 * nu + 1.0), m.phi(t)) < 1e-3);
    }
  }

  TEST_CASE("phi short branch within 2% at nu = 0.5, t = 1e-4") {
    const Model m(Order(0.5), {}, 1e-4);
    const AsymptoticBranch s{BranchKind::short_time, Order(0.5)};
    CHECK(rel(phi_asymptotic(s, 1e-4), m.phi(1e-4)) < 0.02);
  }

  TEST_CASE("long-time consistency") {
    for (double nu : kOrders) {
      const Model m(Order(nu), {}, 1.0);
      const AsymptoticBranch l{BranchKind::long_time, Order(nu)};
      for (double t : {5.0, 7.5, 20.0}) {
        CHECK(rel(phi_asymptotic(l, t), m.phi(t)) <= 1e-6);
        CHECK(rel(modulus_asymptotic(l, t), m.relaxation_modulus(t)) <= 1e-6);
      }
      for (double t : {1.0, 2.0, 20.0}) {
        CHECK(rel(psi_asymptotic(l, t), m.psi(t)) <= 1e-6);
        CHECK(rel(creep_asymptotic(l, t), m.creep_compliance(t)) <= 1e-6);
      }
    }
    const Model m(Order(1.0), {}, 1.0);
    const AsymptoticBranch l{BranchKind::long_time, Order(1.0)};
    CHECK(rel(modulus_asymptotic(l, 2.0), m.relaxation_modulus(2.0)) < 1e-3);
  }

  TEST_CASE("short-time amplitude grows with order; log-log slope -1/2") {
    double prev = 0.0;
    for (double nu : kOrders) {
      const AsymptoticBranch s{BranchKind::short_time, Order(nu)};
      const double amp = psi_asymptotic(s, 1.0) * std::sqrt(kPi) / std::sqrt(kPi);
      CHECK(amp > prev);
      prev = amp;
      const double slope = (std::log(phi_asymptotic(s, 1e-3)) - std::log(phi_asymptotic(s, 1e-5))) / std::log(100.0);
      CHECK(slope == doctest::Approx(-0.5).epsilon(1e-12));
    }
  }

  TEST_CASE("crossover report") {
    const auto grid = log_grid(1e-4, 3.0, 30);
    const auto rows = crossover_report(Order(1.0), CurveKind::relax_rate, grid);
    REQUIRE(rows.size() == grid.size());
    CHECK(rows.front().best == BranchKind::short_time);
    CHECK(rows.back().best == BranchKind::long_time);
    std::size_t switches = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) switches += rows[i].best != rows[i - 1].best;
    CHECK(switches == 1);
    const double one[] = {0.3};
    CHECK(crossover_report(Order(0.0), CurveKind::creep_compliance, one).size() == 1);
  }

  TEST_CASE("crossover time") {
    const double t = crossover_time(Order(0.0), CurveKind::relax_rate, 1e-3, 1.0);
    CHECK(rel(t, ref::kPhiCrossoverOrder0) < 1e-6);
    CHECK_THROWS_AS(crossover_time(Order(0.0), CurveKind::relax_rate, 1.0, 2.0), DomainError);
  }
}
