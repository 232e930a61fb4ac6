#include <doctest.h>

#include <cmath>
#include <numbers>

#include "besselvisco/error.hpp"
#include "besselvisco/specfun.hpp"
#include "besselvisco/timedomain.hpp"
#include "reference_values.hpp"

using namespace bvisco;

namespace {
constexpr double kPi = std::numbers::pi;
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_SUITE("specfun") {
  TEST_CASE("order rejects nu <= -1") {
    CHECK_THROWS_AS(Order(-1.0), DomainError);
    CHECK_THROWS_AS(Order(-2.5), DomainError);
    CHECK_THROWS_AS(Order(std::nan("")), DomainError);
    CHECK(Order(-0.999).value() == doctest::Approx(-0.999));
    CHECK(Order(1.0).shifted(2.0) == 3.0);
  }

  TEST_CASE("eval accuracy validation") {
    CHECK_NOTHROW(EvalAccuracy{}.validate());
    CHECK_THROWS_AS((EvalAccuracy{0.0, 200}.validate()), DomainError);
    CHECK_THROWS_AS((EvalAccuracy{1.0, 200}.validate()), DomainError);
    CHECK_THROWS_AS((EvalAccuracy{1e-12, 5}.validate()), DomainError);
  }

  TEST_CASE("gamma") {
    CHECK(bvisco::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel(bvisco::gamma(0.5), std::sqrt(kPi)) < 1e-14);
    CHECK(rel(bvisco::gamma(7.3), ref::kGamma7p3) < 1e-13);
    CHECK(rel(bvisco::gamma(-0.5), -2.0 * std::sqrt(kPi)) < 1e-13);
    for (double x = 0.5; x < 50.0; x += 0.37) CHECK(rel(bvisco::gamma(x + 1.0), x * bvisco::gamma(x)) < 1e-13);
    CHECK_THROWS_AS(bvisco::gamma(0.0), PoleError);
    CHECK_THROWS_AS(bvisco::gamma(-3.0), PoleError);
    CHECK(reciprocal_gamma(-3.0) == 0.0);
    CHECK(rel(log_gamma(100.0), std::lgamma(100.0)) < 1e-14);
  }

  TEST_CASE("bessel_i values") {
    CHECK(rel(bessel_i(1.0, 2.0), ref::kBesselI1At2) < 1e-13);
    CHECK(rel(bessel_i(2.0, 10.0), ref::kBesselI2At10) < 1e-13);
    const double z = 1e-3;
    CHECK(rel(bessel_i(0.0, z), 1.0 + z * z / 4.0) < 1e-12);
    for (double x : {0.1, 1.0, 5.0, 25.0, 35.0, 80.0})
      CHECK(rel(bessel_i(0.5, x), std::sqrt(2.0 / (kPi * x)) * std::sinh(x)) < 1e-12);
    CHECK(rel(bessel_i(-0.5, 3.0), std::sqrt(2.0 / (kPi * 3.0)) * std::cosh(3.0)) < 1e-12);
    CHECK(rel(bessel_i(-1.0, 2.0), bessel_i(1.0, 2.0)) < 1e-13);
  }

  TEST_CASE("bessel_i errors") {
    CHECK_THROWS_AS(bessel_i(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_i(0.0, -1.0), DomainError);
    CHECK_THROWS_AS(bessel_i(-1.5, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_i(0.0, 800.0), OverflowError);
  }

  TEST_CASE("bessel_i_ratio") {
    CHECK(rel(bessel_i_ratio(2.0, 1.0, 10.0), ref::kBesselRatioI2I1At10) < 1e-13);
    for (double z : {1e-3, 0.5, 3.0, 29.0, 31.0, 300.0, 1e6}) {
      // coth z - 1/z, by its series where the difference cancels.
      const double expect = z < 0.1 ? z / 3.0 - z * z * z / 45.0 + 2.0 * std::pow(z, 5) / 945.0
                                    : 1.0 / std::tanh(z) - 1.0 / z;
      CHECK(rel(bessel_i_ratio(1.5, 0.5, z), expect) < 1e-12);
      CHECK(rel(bessel_i_ratio(0.5, 1.5, z), 1.0 / expect) < 1e-12);
    }
    const double nu = 0.7;
    const double z = 1e-4;
    CHECK(rel(bessel_i_ratio(nu + 1.0, nu, z), z / (2.0 * (nu + 1.0))) < 1e-8);
    CHECK_THROWS_AS(bessel_i_ratio(2.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_i_ratio(1.0, 0.0, 0.0), DomainError);
  }

  TEST_CASE("bessel_j values") {
    CHECK(rel(bessel_j(2.0, 5.0), ref::kBesselJ2At5) < 1e-12);
    CHECK(rel(bessel_j(2.7, 12.5), ref::kBesselJ2p7At12p5) < 1e-11);
    CHECK(rel(bessel_j(-0.3, 40.0), ref::kBesselJm0p3At40) < 1e-11);
    for (double x : {0.1, 1.0, 7.0, 33.0, 99.0}) {
      const double amp = std::sqrt(2.0 / (kPi * x));
      CHECK(std::abs(bessel_j(0.5, x) - amp * std::sin(x)) < 1e-12 * amp);
      CHECK(std::abs(bessel_j(-0.5, x) - amp * std::cos(x)) < 1e-12 * amp);
    }
    CHECK_THROWS_AS(bessel_j(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(0.0, 0.0), DomainError);
  }

  TEST_CASE("bessel_j_deriv") {
    for (double x : {0.3, 2.0, 9.0, 40.0}) CHECK(std::abs(bessel_j_deriv(0.0, x) + bessel_j(1.0, x)) < 1e-13);
    const double x = kPi;
    const double expect = std::sqrt(2.0 / (kPi * x)) * (std::cos(x) - std::sin(x) / (2.0 * x));
    CHECK(rel(bessel_j_deriv(0.5, x), expect) < 1e-11);
    CHECK(rel(bessel_j_deriv(1.0, 3.831706), ref::kBesselJ1DerivAt3p831706) < 1e-11);
    const double h = 1e-6;
    const double fd = (bessel_j(1.0, 3.831706 + h) - bessel_j(1.0, 3.831706 - h)) / (2 * h);
    CHECK(std::abs(bessel_j_deriv(1.0, 3.831706) - fd) < 1e-6);
  }

  TEST_CASE("recurrence residual and ratio consistency") {
    for (double nu : {0.0, 0.5, 1.0, 2.7, 6.25}) {
      for (double z : log_grid(0.1, 50.0, 25)) {
        const double im1 = bessel_i(nu - 1.0, z);
        const double r = im1 - (2.0 * nu / z) * bessel_i(nu, z) - bessel_i(nu + 1.0, z);
        CHECK(std::abs(r) <= 1e-10 * im1);
        CHECK(rel(bessel_i_ratio(nu + 1.0, nu, z) * bessel_i(nu, z), bessel_i(nu + 1.0, z)) < 1e-10);
      }
    }
  }
}
