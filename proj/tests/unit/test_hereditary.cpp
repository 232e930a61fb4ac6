#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "besselvisco/error.hpp"
#include "besselvisco/hereditary.hpp"
#include "reference_values.hpp"

using namespace bvisco;

namespace {
constexpr double kPi = std::numbers::pi;
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
const double kOrders[] = {-0.5, 0.0, 0.5, 1.0};

std::vector<double> sample(const std::vector<double>& t, double (*f)(double)) {
  std::vector<double> v;
  for (double x : t) v.push_back(f(x));
  return v;
}
}  // namespace

TEST_SUITE("hereditary") {
  TEST_CASE("load history validation") {
    CHECK_THROWS_AS(LoadHistory({}, {}), DomainError);
    CHECK_THROWS_AS(LoadHistory({0.0, 1.0}, {1.0}), DomainError);
    CHECK_THROWS_AS(LoadHistory({0.1, 1.0}, {1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(LoadHistory({0.0, 1.0, 1.0}, {1.0, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(LoadHistory({0.0, 1.0}, {1.0, NAN}), DomainError);
    CHECK_THROWS_AS(LoadHistory::step(0.0), DomainError);
  }

  TEST_CASE("interpolation") {
    const LoadHistory lin({0.0, 1.0, 3.0}, {0.0, 2.0, 0.0});
    CHECK(lin.value_at(0.5) == doctest::Approx(1.0));
    CHECK(lin.value_at(2.0) == doctest::Approx(1.0));
    CHECK(lin.value_at(3.0) == 0.0);
    const LoadHistory pc({0.0, 1.0, 3.0}, {0.0, 2.0, 0.0}, Interpolation::piecewise_constant);
    CHECK(pc.value_at(0.5) == 0.0);
    CHECK(pc.value_at(1.0) == 2.0);
    CHECK_THROWS_AS(pc.value_at(3.5), ExtrapolationError);
    CHECK_THROWS_AS(pc.value_at(-0.1), ExtrapolationError);
  }

  TEST_CASE("unit step reproduces the material functions") {
    const auto grid = linear_grid(0.0, 3.0, 61);
    for (double nu : kOrders) {
      const auto eps = strain_response(Order(nu), LoadHistory::step(3.0), grid);
      const auto sig = stress_response(Order(nu), LoadHistory::step(3.0), grid);
      const Model m(Order(nu), {}, grid[1]);
      CHECK(eps.kind() == CurveKind::strain);
      CHECK(sig.kind() == CurveKind::stress);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(rel(eps[i].value, m.creep_compliance(grid[i])) <= 1e-8);
        CHECK(rel(sig[i].value, m.relaxation_modulus(grid[i])) <= 1e-8);
      }
    }
  }

  TEST_CASE("zero load gives zero response") {
    const auto grid = linear_grid(0.0, 1.0, 11);
    const LoadHistory zero(grid, std::vector<double>(grid.size(), 0.0));
    const auto eps = strain_response(Order(0.3), zero, grid);
    const auto sig = stress_response(Order(0.3), zero, grid);
    for (const Sample& s : eps.samples()) CHECK(s.value == 0.0);
    for (const Sample& s : sig.samples()) CHECK(s.value == 0.0);
  }

  TEST_CASE("ramp stress matches the reference integral") {
    const LoadHistory ramp({0.0, 1.0}, {0.0, 1.0});
    const double t[] = {1.0};
    const auto eps = strain_response(Order(0.0), ramp, t);
    CHECK(rel(eps[0].value, ref::kRampStrain0At1) < 1e-10);
  }

  TEST_CASE("sinusoidal strain against the quadrature oracle") {
    const auto grid = linear_grid(0.0, 1.0, 20001);
    const LoadHistory strain(grid, sample(grid, [](double x) { return std::sin(2.0 * kPi * x); }));
    const double t[] = {0.25, 0.5, 0.75, 1.0};
    const double expect[] = {ref::kSineStressHalfAt0p25, ref::kSineStressHalfAt0p5, ref::kSineStressHalfAt0p75,
                             ref::kSineStressHalfAt1};
    const auto sig = stress_response(Order(0.5), strain, t);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(sig[i].value - expect[i]) <= 1e-6 * std::abs(expect[i]));
  }

  TEST_CASE("piecewise-linear error is second order, piecewise-constant first order") {
    const double t[] = {1.0};
    const auto err = [&](std::size_t n, Interpolation interp) {
      const auto grid = linear_grid(0.0, 1.0, n + 1);
      const LoadHistory s(grid, sample(grid, [](double x) { return std::sin(2.0 * kPi * x); }), interp);
      return std::abs(stress_response(Order(0.5), s, t)[0].value - ref::kSineStressHalfAt1);
    };
    const double l1 = err(50, Interpolation::piecewise_linear);
    const double l2 = err(100, Interpolation::piecewise_linear);
    CHECK(std::log2(l1 / l2) > 1.8);
    const double c1 = err(50, Interpolation::piecewise_constant);
    const double c2 = err(100, Interpolation::piecewise_constant);
    CHECK(std::log2(c1 / c2) > 0.9);
  }

  TEST_CASE("linearity") {
    const auto grid = linear_grid(0.0, 2.0, 101);
    const auto a = sample(grid, [](double x) { return std::sin(3.0 * x); });
    const auto b = sample(grid, [](double x) { return x * x - 0.5; });
    std::vector<double> c(grid.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = 1.5 * a[i] - 2.0 * b[i];
    for (auto interp : {Interpolation::piecewise_linear, Interpolation::piecewise_constant}) {
      const auto ra = stress_response(Order(1.0), LoadHistory(grid, a, interp), grid);
      const auto rb = stress_response(Order(1.0), LoadHistory(grid, b, interp), grid);
      const auto rc = stress_response(Order(1.0), LoadHistory(grid, c, interp), grid);
      for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(std::abs(rc[i].value - (1.5 * ra[i].value - 2.0 * rb[i].value)) <= 1e-12 * (1 + std::abs(rc[i].value)));
    }
  }

  TEST_CASE("causality is bitwise") {
    const auto grid = linear_grid(0.0, 2.0, 81);
    const auto v = sample(grid, [](double x) { return std::cos(5.0 * x) + x; });
    const std::vector<double> head_t(grid.begin(), grid.begin() + 41);
    const std::vector<double> head_v(v.begin(), v.begin() + 41);
    const auto full = strain_response(Order(0.2), LoadHistory(grid, v), head_t);
    const auto head = strain_response(Order(0.2), LoadHistory(head_t, head_v), head_t);
    for (std::size_t i = 0; i < head_t.size(); ++i) CHECK(full[i].value == head[i].value);
  }

  TEST_CASE("evaluation times off the load grid") {
    const LoadHistory ramp({0.0, 0.3, 1.0}, {0.0, 0.3, 1.0});
    const double t[] = {0.1, 0.65, 1.0};
    const LoadHistory fine(linear_grid(0.0, 1.0, 11), linear_grid(0.0, 1.0, 11));
    const auto a = strain_response(Order(0.0), ramp, t);
    const auto b = strain_response(Order(0.0), fine, t);
    for (int i = 0; i < 3; ++i) CHECK(rel(a[i].value, b[i].value) < 1e-12);
  }

  TEST_CASE("errors") {
    const LoadHistory h = LoadHistory::step(1.0);
    const double beyond[] = {0.5, 1.5};
    CHECK_THROWS_AS(strain_response(Order(0.0), h, beyond), ExtrapolationError);
    const double negative[] = {-0.5};
    CHECK_THROWS_AS(strain_response(Order(0.0), h, negative), DomainError);
    const double unordered[] = {0.5, 0.2};
    CHECK_THROWS_AS(stress_response(Order(0.0), h, unordered), DomainError);
  }

  TEST_CASE("kernels") {
    const PronyKernel c = creep_kernel(Order(0.0), 0.01);
    CHECK(c.constant_rate == 8.0);
    CHECK(c.rates.size() == c.weights.size());
    CHECK(c.drive == ModeDrive::load);
    const PronyKernel r = relaxation_kernel(Order(0.0), 0.01);
    double total = 0.0;
    for (double w : r.weights) total += w;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r.drive == ModeDrive::load_increment);
    CHECK(creep_kernel(Order(0.0), 1e-4).rates.size() > c.rates.size());
  }
}
