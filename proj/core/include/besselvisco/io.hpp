#pragma once

#include <iosfwd>
#include <string>

#include "besselvisco/hereditary.hpp"
#include "besselvisco/timedomain.hpp"
#include "besselvisco/zeros.hpp"

namespace bvisco {

/// Shortest round-trip decimal form of x ("%.17g" trimmed to the fewest
/// digits that parse back to x). Locale independent.
std::string format_double(double x);

/// Reads a load history from CSV with a header row and columns time, value.
/// Blank lines and lines starting with '#' are skipped. Throws ParseError.
LoadHistory read_load_history_csv(std::istream& in, Interpolation interpolation = Interpolation::piecewise_linear);

/// Header "t,value,provenance" followed by one row per sample.
void write_curve_csv(std::ostream& out, const MaterialCurve& curve);

/// Header "n,j,j_squared", n counted from 1.
void write_zeros_csv(std::ostream& out, const ZeroTable& table);

}  // namespace bvisco
