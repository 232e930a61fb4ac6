#include "besselvisco/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "besselvisco/error.hpp"

namespace bvisco {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view field, std::size_t line) {
  field = trim(field);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError("line " + std::to_string(line) + ": cannot parse '" + std::string(field) + "' as a number");
  return v;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

LoadHistory read_load_history_csv(std::istream& in, Interpolation interpolation) {
  std::vector<double> times;
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty() || row.front() == '#') continue;
    const auto comma = row.find(',');
    if (comma == std::string_view::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected two comma-separated columns");
    const std::string_view a = trim(row.substr(0, comma));
    const std::string_view b = trim(row.substr(comma + 1));
    if (b.find(',') != std::string_view::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected exactly two columns");
    if (!header_seen) {
      if (a != "time" || b != "value")
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'time,value'");
      header_seen = true;
      continue;
    }
    times.push_back(parse_number(a, line_no));
    values.push_back(parse_number(b, line_no));
  }
  if (!header_seen) throw ParseError("load history CSV is empty");
  if (times.empty()) throw ParseError("load history CSV has no data rows");
  try {
    return LoadHistory(std::move(times), std::move(values), interpolation);
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid load history: ") + e.what());
  }
}

void write_curve_csv(std::ostream& out, const MaterialCurve& curve) {
  out << "t,value,provenance\n";
  for (const Sample& s : curve.samples())
    out << format_double(s.t) << ',' << format_double(s.value) << ',' << to_string(s.provenance) << '\n';
}

void write_zeros_csv(std::ostream& out, const ZeroTable& table) {
  out << "n,j,j_squared\n";
  for (std::size_t i = 0; i < table.size(); ++i)
    out << (i + 1) << ',' << format_double(table[i]) << ',' << format_double(table[i] * table[i]) << '\n';
}

}  // namespace bvisco
