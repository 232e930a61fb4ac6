#include <doctest.h>

#include <cmath>

#include "besselvisco/error.hpp"
#include "besselvisco/laplace.hpp"
#include "besselvisco/timedomain.hpp"
#include "besselvisco/zeros.hpp"
#include "reference_values.hpp"

using namespace bvisco;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
const double kOrders[] = {-0.5, 0.0, 0.5, 1.0};
}  // namespace

TEST_SUITE("laplace") {
  TEST_CASE("reference transform values") {
    CHECK(rel(psi_tilde(Order(1.0), 4.0), ref::kPsiTilde1At4) < 1e-13);
    CHECK(rel(phi_tilde(Order(0.0), 1.0), ref::kPhiTilde0At1) < 1e-13);
    CHECK(rel(psi_tilde(Order(1.0), 100.0), ref::kReciprocityPsiTilde1At100) < 1e-13);
    CHECK(rel(phi_tilde(Order(1.0), 100.0), ref::kPhiTilde1At100) < 1e-13);
  }

  TEST_CASE("complex and real overloads agree on the positive axis") {
    for (double nu : kOrders)
      for (double s : {1e-3, 0.7, 40.0, 2e4}) {
        CHECK(rel(psi_tilde(Order(nu), Complex(s, 0.0)).real(), psi_tilde(Order(nu), s)) < 1e-12);
        CHECK(rel(phi_tilde(Order(nu), Complex(s, 0.0)).real(), phi_tilde(Order(nu), s)) < 1e-12);
      }
  }

  TEST_CASE("half-integer closed forms") {
    for (double s : {1.0, 10.0, 1e4}) {
      const double r = std::sqrt(s);
      CHECK(rel(phi_tilde(Order(-0.5), s), std::tanh(r) / r) < 1e-12);
      // nu = 0.5: 3/r * I_{3/2}/I_{5/2}, reduced to coth through the recurrence.
      const double l1 = 1.0 / std::tanh(r) - 1.0 / r;  // I_{3/2}/I_{1/2}
      const double l2 = 1.0 / l1 - 3.0 / r;             // I_{5/2}/I_{3/2} from I_{1/2} - I_{5/2} = (3/r) I_{3/2}
      CHECK(rel(psi_tilde(Order(0.5), s), 3.0 / r / l2) < 1e-11);
    }
  }

  TEST_CASE("complex evaluation off the axis") {
    const Complex s(-3.0, 4.0);
    const Complex p = psi_tilde(Order(0.5), s);
    const Complex f = phi_tilde(Order(0.5), s);
    CHECK(std::abs((1.0 + p) * (1.0 - f) - 1.0) < 1e-12);
    CHECK(std::abs(psi_tilde(Order(0.5), std::conj(s)) - std::conj(p)) < 1e-13);
  }

  TEST_CASE("pole handling") {
    CHECK_THROWS_AS(psi_tilde(Order(0.0), Complex(0.0, 0.0)), PoleError);
    CHECK_THROWS_AS(phi_tilde(Order(0.0), Complex(0.0, 0.0)), DomainError);
    const double j = compute_zeros(0.0, 1)[0];
    CHECK_THROWS_AS(phi_tilde(Order(0.0), Complex(-j * j + 1e-8, 0.0)), PoleError);
    const double j2 = compute_zeros(2.0, 1)[0];
    CHECK_THROWS_AS(psi_tilde(Order(0.0), Complex(-j2 * j2, 1e-9)), PoleError);
    CHECK_NOTHROW(phi_tilde(Order(0.0), Complex(-j * j + 1e-3, 0.0)));
  }

  TEST_CASE("pole residue at the origin") {
    for (double nu : kOrders) {
      const double s = 1e-10;
      CHECK(rel(s * psi_tilde(Order(nu), s), 4.0 * (nu + 1.0) * (nu + 2.0)) < 1e-8);
    }
  }

  TEST_CASE("reciprocity, positivity and monotonicity on the real axis") {
    for (double nu : kOrders) {
      double pp = INFINITY;
      double pf = INFINITY;
      for (double s : log_grid(1e-3, 1e6, 25)) {
        CHECK(check_reciprocity(Order(nu), s) <= 1e-10);
        const double p = psi_tilde(Order(nu), s);
        const double f = phi_tilde(Order(nu), s);
        CHECK(p > 0.0);
        CHECK(f > 0.0);
        CHECK(f < 1.0);
        CHECK(p < pp);
        CHECK(f < pf);
        pp = p;
        pf = f;
      }
    }
    CHECK(check_reciprocity(Order(0.5), 10.0) <= 1e-12);
    CHECK_THROWS_AS(check_reciprocity(Order(0.5), 0.0), DomainError);
  }

  TEST_CASE("large-s leading behaviour") {
    for (double nu : kOrders) {
      const double s = 1e10;
      CHECK(rel(phi_tilde(Order(nu), s), 2.0 * (nu + 1.0) / std::sqrt(s)) < 1e-4);
    }
  }

  TEST_CASE("talbot on elementary transforms") {
    TalbotConfig best;
    best.node_count = 20;
    for (double t : {0.1, 1.0, 7.0}) {
      const auto step = invert_numeric([](Complex s) { return 1.0 / s; }, t);
      CHECK(std::abs(step.value - 1.0) < 1e-7);
      CHECK_FALSE(step.degraded);
      CHECK(std::abs(invert_numeric([](Complex s) { return 1.0 / s; }, t, best).value - 1.0) < 1e-11);
    }
    const auto e = invert_numeric([](Complex s) { return 1.0 / (s + 1.0); }, 1.0);
    CHECK(rel(e.value, std::exp(-1.0)) < 1e-7);
    CHECK(rel(invert_numeric([](Complex s) { return 1.0 / (s + 1.0); }, 1.0, best).value, std::exp(-1.0)) < 1e-11);
    TalbotConfig shifted;
    shifted.shift = 20.0;
    const auto far = invert_numeric([](Complex s) { return 1.0 / (s + 20.0); }, 5.0, shifted);
    CHECK(rel(far.value, std::exp(-100.0)) < 1e-7);
    for (double t : {0.5, 2.0}) {
      const auto root = invert_numeric([](Complex s) { return 1.0 / std::sqrt(s); }, t);
      CHECK(rel(root.value, 1.0 / std::sqrt(3.141592653589793 * t)) < 1e-7);
    }
  }

  TEST_CASE("talbot config validation") {
    TalbotConfig c;
    CHECK_NOTHROW(c.validate());
    c.node_count = 15;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c.node_count = 17;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c.node_count = 48;
    c.contour_scale = -1.0;
    CHECK_THROWS_AS(c.validate(), DomainError);
    CHECK_THROWS_AS(invert_numeric([](Complex s) { return 1.0 / s; }, 0.0), DomainError);
  }

  TEST_CASE("degraded flag on a transform the contour cannot handle") {
    // e^{-s}/s grows on the left of the contour; the quadrature breaks down.
    const auto r = invert_numeric([](Complex s) { return std::exp(-s) / s; }, 1.0);
    CHECK(r.degraded);
  }

  TEST_CASE("talbot reproduces reference time-domain values") {
    TalbotConfig best;
    best.node_count = 24;
    const auto psi = [](Complex s) { return psi_tilde(Order(1.0), s); };
    const auto phi = [](Complex s) { return phi_tilde(Order(0.0), s); };
    CHECK(rel(invert_numeric(psi, 0.05).value, ref::kPsi1At0p05) < 5e-7);
    CHECK(rel(invert_numeric(phi, 0.1).value, ref::kPhi0At0p1) < 5e-7);
    CHECK(rel(invert_numeric(psi, 0.05, best).value, ref::kPsi1At0p05) < 1e-10);
    CHECK(rel(invert_numeric(phi, 0.1, best).value, ref::kPhi0At0p1) < 1e-10);
  }
}
