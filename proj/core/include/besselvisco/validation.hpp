#pragma once

#include <string>
#include <vector>

#include "besselvisco/laplace.hpp"
#include "besselvisco/timedomain.hpp"

namespace bvisco {

/// Dirichlet series against numerical Laplace inversion at one time.
struct OracleComparison {
  double t = 0.0;
  double series = 0.0;
  double oracle = 0.0;
  double rel_gap = 0.0;
  bool degraded = false;
};

/// Compares psi (kind creep_rate) or phi (kind relax_rate) with the Talbot
/// inversion of its transform. For phi the contour is shifted by j_{nu,1}^2 so
/// that the exponentially small values at large t stay resolvable.
OracleComparison oracle_compare(const Order& order, CurveKind kind, double t, const SeriesPolicy& policy = {},
                                const TalbotConfig& cfg = {});

struct InvariantRecord {
  std::string name;
  double tolerance = 0.0;
  double measured = 0.0;
  bool pass = false;
};

/// Runs the library's property checks over the standard orders
/// {-0.5, 0, 0.5, 1}. Each record reports the worst measured value against
/// its tolerance; counting checks use tolerance 0.
std::vector<InvariantRecord> run_invariant_suite();

}  // namespace bvisco
