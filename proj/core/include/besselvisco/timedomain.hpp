#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "besselvisco/specfun.hpp"
#include "besselvisco/zeros.hpp"

namespace bvisco {

/// Truncation policy for the Dirichlet series.
struct SeriesPolicy {
  /// Bound on the neglected tail. Absolute for values of order one and
  /// above, relative once the value itself drops below one.
  double tail_tol = 1e-12;
  std::size_t max_terms = 10000;
  /// Series evaluation of the memory functions is refused below this time;
  /// sample_curve switches to the short-time asymptotic instead.
  double min_time = 1e-6;

  void validate() const;
};

enum class CurveKind { creep_rate, relax_rate, creep_compliance, relax_modulus, strain, stress };
enum class Provenance { series, asymptotic_short, asymptotic_long, oracle };

std::string_view to_string(CurveKind kind);
std::string_view to_string(Provenance p);
/// Throws DomainError on unknown names.
CurveKind curve_kind_from_string(std::string_view name);

/// Which zero table a kind is built on: nu+2 for the creep side, nu for the
/// relaxation side.
double zero_order_for(const Order& order, CurveKind kind);

struct Sample {
  double t = 0.0;
  double value = 0.0;
  Provenance provenance = Provenance::series;
};

/// Sampled material or response function with per-sample provenance.
class MaterialCurve {
 public:
  MaterialCurve(Order order, CurveKind kind) : order_(order), kind_(kind) {}

  /// Appends a sample; times must be strictly increasing.
  void push_back(const Sample& s);

  const Order& order() const noexcept { return order_; }
  CurveKind kind() const noexcept { return kind_; }
  const std::vector<Sample>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  const Sample& operator[](std::size_t i) const { return samples_[i]; }

 private:
  Order order_;
  CurveKind kind_;
  std::vector<Sample> samples_;
};

/// A truncated series value with its tail bound.
struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
  std::size_t terms = 0;
};

// Series evaluators. `zeros` must hold the zeros of J_{nu+2} for the creep
// side (psi, creep_compliance) and of J_nu for the relaxation side. They throw
// InsufficientZerosError carrying the required count when the table is too
// short for the tail tolerance.
SeriesValue psi_series(const Order& order, double t, const SeriesPolicy& policy, const ZeroTable& zeros);
SeriesValue phi_series(const Order& order, double t, const SeriesPolicy& policy, const ZeroTable& zeros);
SeriesValue creep_compliance_series(const Order& order, double t, const SeriesPolicy& policy, const ZeroTable& zeros);
SeriesValue relaxation_modulus_series(const Order& order, double t, const SeriesPolicy& policy,
                                      const ZeroTable& zeros);

double psi(const Order& order, double t, const SeriesPolicy& policy, const ZeroTable& zeros);
double phi(const Order& order, double t, const SeriesPolicy& policy, const ZeroTable& zeros);
double creep_compliance(const Order& order, double t, const SeriesPolicy& policy, const ZeroTable& zeros);
double relaxation_modulus(const Order& order, double t, const SeriesPolicy& policy, const ZeroTable& zeros);

/// Estimated number of zeros needed to evaluate `kind` at time t > 0 within
/// the policy's tail tolerance.
std::size_t required_zero_count(const Order& order, CurveKind kind, double t, const SeriesPolicy& policy);

/// A model order together with zero tables large enough for every t >= t_floor.
class Model {
 public:
  explicit Model(Order order, SeriesPolicy policy = {});
  Model(Order order, SeriesPolicy policy, double t_floor);

  const Order& order() const noexcept { return order_; }
  const SeriesPolicy& policy() const noexcept { return policy_; }
  const ZeroTable& zeros_nu() const noexcept { return *zeros_nu_; }
  const ZeroTable& zeros_nu2() const noexcept { return *zeros_nu2_; }
  const ZeroTable& zeros_for(CurveKind kind) const;

  double psi(double t) const;
  double phi(double t) const;
  double creep_compliance(double t) const;
  double relaxation_modulus(double t) const;
  /// Series value of one of the four model functions.
  SeriesValue series(CurveKind kind, double t) const;
  /// Series value, or the short-time asymptotic below policy.min_time.
  Sample evaluate(CurveKind kind, double t) const;

 private:
  Order order_;
  SeriesPolicy policy_;
  std::shared_ptr<const ZeroTable> zeros_nu_;
  std::shared_ptr<const ZeroTable> zeros_nu2_;
};

/// Samples one of the four model functions on a strictly increasing positive
/// grid.
MaterialCurve sample_curve(const Order& order, CurveKind kind, std::span<const double> t_grid,
                           const SeriesPolicy& policy = {});

/// Grid helpers used throughout the tools and tests.
std::vector<double> log_grid(double t_min, double t_max, std::size_t points);
std::vector<double> linear_grid(double t_min, double t_max, std::size_t points);

}  // namespace bvisco
