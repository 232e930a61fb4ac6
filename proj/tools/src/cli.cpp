#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "besselvisco/asymptotics.hpp"
#include "besselvisco/error.hpp"
#include "besselvisco/hereditary.hpp"
#include "besselvisco/io.hpp"
#include "besselvisco/timedomain.hpp"
#include "besselvisco/validation.hpp"
#include "besselvisco/zeros.hpp"

namespace bvisco::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "usage"; }
};

struct CommonOptions {
  std::string format;
  std::string output;
  int decimals = -1;
  SeriesPolicy policy;
};

struct GridOptions {
  std::vector<std::string> grid;
  std::vector<double> times;
};

using Cell = std::variant<double, long long, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  json meta = json::object();
};

std::string format_value(double x, int decimals) {
  if (decimals < 0 || !std::isfinite(x)) return format_double(x);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
  return buf;
}

void write_csv(std::ostream& out, const Table& table, int decimals) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) out << format_value(v, decimals);
            else if constexpr (std::is_same_v<V, bool>) out << (v ? "true" : "false");
            else out << v;
          },
          row[i]);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table, int decimals) {
  json doc = table.meta;
  json rows = json::array();
  for (const auto& row : table.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) {
              if (!std::isfinite(v)) obj[table.columns[i]] = format_double(v);
              else if (decimals >= 0) obj[table.columns[i]] = std::stod(format_value(v, decimals));
              else obj[table.columns[i]] = v;
            } else {
              obj[table.columns[i]] = v;
            }
          },
          row[i]);
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

void emit(const Table& table, const CommonOptions& opts, const std::string& default_format, std::ostream& out) {
  const std::string format = opts.format.empty() ? default_format : opts.format;
  std::ofstream file;
  std::ostream* sink = &out;
  if (!opts.output.empty()) {
    file.open(opts.output, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + opts.output + "'");
    sink = &file;
  }
  if (format == "json") write_json(*sink, table, opts.decimals);
  else write_csv(*sink, table, opts.decimals);
  sink->flush();
  if (!*sink) throw UsageError("failed writing output");
}

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output,-o", opts.output, "Write to this file instead of stdout");
  cmd->add_option("--decimals", opts.decimals, "Round real columns to this many decimals")->check(CLI::Range(0, 17));
  cmd->add_option("--tail-tol", opts.policy.tail_tol, "Series truncation tolerance")->capture_default_str();
  cmd->add_option("--max-terms", opts.policy.max_terms, "Maximum series terms")->capture_default_str();
  cmd->add_option("--min-time", opts.policy.min_time, "Below this time use the short-time branch")
      ->capture_default_str();
}

void add_grid(CLI::App* cmd, GridOptions& grid) {
  auto* g = cmd->add_option("--grid", grid.grid, "Grid: log|linear T_MIN T_MAX POINTS")->expected(4);
  auto* t = cmd->add_option("--t,--times", grid.times, "Explicit evaluation times")->delimiter(',');
  g->excludes(t);
}

std::vector<double> resolve_grid(const GridOptions& grid, bool required = true) {
  if (!grid.times.empty()) return grid.times;
  if (grid.grid.empty()) {
    if (required) throw UsageError("specify --grid or --t");
    return {};
  }
  const std::string& type = grid.grid[0];
  double lo = 0.0;
  double hi = 0.0;
  long long points = 0;
  try {
    lo = std::stod(grid.grid[1]);
    hi = std::stod(grid.grid[2]);
    points = std::stoll(grid.grid[3]);
  } catch (const std::exception&) {
    throw UsageError("--grid expects log|linear T_MIN T_MAX POINTS");
  }
  if (points < 1) throw UsageError("--grid needs at least one point");
  if (type == "log") return log_grid(lo, hi, static_cast<std::size_t>(points));
  if (type == "linear") return linear_grid(lo, hi, static_cast<std::size_t>(points));
  throw UsageError("--grid type must be 'log' or 'linear', got '" + type + "'");
}

CurveKind model_kind(const std::string& name) {
  const CurveKind kind = curve_kind_from_string(name);
  if (kind == CurveKind::strain || kind == CurveKind::stress)
    throw UsageError("--kind must be one of creep_rate, relax_rate, creep_compliance, relax_modulus");
  return kind;
}

json base_meta(const char* command, double order) {
  json meta = json::object();
  meta["command"] = command;
  meta["order"] = order;
  return meta;
}

Table curve_table(const MaterialCurve& curve) {
  Table table;
  table.columns = {"t", "value", "provenance"};
  for (const Sample& s : curve.samples()) table.rows.push_back({s.t, s.value, std::string(to_string(s.provenance))});
  return table;
}

void write_error(std::ostream& err, std::string_view kind, const std::string& message,
                 std::optional<std::size_t> required = std::nullopt) {
  json rec = json::object();
  rec["error"] = std::string(kind);
  rec["message"] = message;
  if (required) rec["required_zeros"] = *required;
  err << rec.dump() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bessel-class linear viscoelastic models", "bvisco"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "bvisco 0.1.0");

  CommonOptions common;
  GridOptions grid;
  double order = 0.0;
  std::string kind_name;

  // zeros
  std::size_t count = 1;
  double zero_tol = 1e-12;
  auto* zeros_cmd = app.add_subcommand("zeros", "Positive zeros of J_order");
  zeros_cmd->add_option("--order", order, "Bessel order (> -1)")->required();
  zeros_cmd->add_option("--count", count, "Number of zeros")->capture_default_str();
  zeros_cmd->add_option("--tol", zero_tol, "Absolute accuracy of each zero")->capture_default_str();
  add_common(zeros_cmd, common);

  // eval / curve
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a model function at given times");
  auto* curve_cmd = app.add_subcommand("curve", "Sample a model function on a grid");
  for (auto* cmd : {eval_cmd, curve_cmd}) {
    cmd->add_option("--order", order, "Model order nu (> -1)")->required();
    cmd->add_option("--kind", kind_name, "creep_rate|relax_rate|creep_compliance|relax_modulus")->required();
    add_grid(cmd, grid);
    add_common(cmd, common);
  }

  // asymptote-compare
  std::vector<double> crossover;
  auto* asym_cmd = app.add_subcommand("asymptote-compare", "Series against short- and long-time branches");
  asym_cmd->add_option("--order", order, "Model order nu (> -1)")->required();
  asym_cmd->add_option("--kind", kind_name, "creep_rate|relax_rate|creep_compliance|relax_modulus")->required();
  asym_cmd->add_option("--crossover", crossover, "Also locate the equal-error time in [T_LO, T_HI]")->expected(2);
  add_grid(asym_cmd, grid);
  add_common(asym_cmd, common);

  // oracle-check
  std::string oracle_kind = "both";
  double oracle_tol = 1e-6;
  int nodes = 48;
  auto* oracle_cmd = app.add_subcommand("oracle-check", "Series against numerical Laplace inversion");
  oracle_cmd->add_option("--order", order, "Model order nu (> -1)")->required();
  oracle_cmd->add_option("--kind", oracle_kind, "creep_rate|relax_rate|both")
      ->check(CLI::IsMember({"creep_rate", "relax_rate", "both"}))
      ->capture_default_str();
  oracle_cmd->add_option("--nodes", nodes, "Talbot node count")->capture_default_str();
  oracle_cmd->add_option("--tol", oracle_tol, "Relative gap treated as agreement")->capture_default_str();
  add_grid(oracle_cmd, grid);
  add_common(oracle_cmd, common);

  // respond
  std::string input_path;
  std::string response = "strain";
  std::string interpolation = "linear";
  auto* respond_cmd = app.add_subcommand("respond", "Hereditary response to a load history CSV");
  respond_cmd->add_option("--order", order, "Model order nu (> -1)")->required();
  respond_cmd->add_option("--input", input_path, "CSV with header time,value")->required();
  respond_cmd->add_option("--response", response, "strain (input is stress) or stress (input is strain)")
      ->check(CLI::IsMember({"strain", "stress"}))
      ->capture_default_str();
  respond_cmd->add_option("--interpolation", interpolation, "linear|constant")
      ->check(CLI::IsMember({"linear", "constant"}))
      ->capture_default_str();
  add_grid(respond_cmd, grid);
  add_common(respond_cmd, common);

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Run the invariant suite");
  add_common(validate_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what());
    return ExitCode::error;
  }

  try {
    common.policy.validate();

    if (*zeros_cmd) {
      const ZeroTable zt = compute_zeros(order, count, zero_tol);
      Table table;
      table.meta = base_meta("zeros", order);
      table.meta["abs_tol"] = zero_tol;
      table.columns = {"n", "j", "j_squared"};
      for (std::size_t i = 0; i < zt.size(); ++i)
        table.rows.push_back({static_cast<long long>(i + 1), zt[i], zt[i] * zt[i]});
      emit(table, common, "csv", out);
      return ExitCode::ok;
    }

    if (*eval_cmd || *curve_cmd) {
      const Order ord(order);
      const CurveKind kind = model_kind(kind_name);
      const auto times = resolve_grid(grid);
      MaterialCurve curve(ord, kind);
      if (*curve_cmd) {
        curve = sample_curve(ord, kind, times, common.policy);
      } else {
        const double t_min = *std::min_element(times.begin(), times.end());
        const Model model(ord, common.policy, std::max(common.policy.min_time, t_min));
        for (double t : times) curve.push_back(model.evaluate(kind, t));
      }
      Table table = curve_table(curve);
      table.meta = base_meta(*curve_cmd ? "curve" : "eval", order);
      table.meta["kind"] = std::string(to_string(kind));
      emit(table, common, "csv", out);
      return ExitCode::ok;
    }

    if (*asym_cmd) {
      const Order ord(order);
      const CurveKind kind = model_kind(kind_name);
      const auto times = resolve_grid(grid);
      Table table;
      table.meta = base_meta("asymptote-compare", order);
      table.meta["kind"] = std::string(to_string(kind));
      if (!crossover.empty())
        table.meta["crossover_time"] = crossover_time(ord, kind, crossover[0], crossover[1], common.policy);
      table.columns = {"t", "series", "short", "long", "short_rel_error", "long_rel_error", "best"};
      for (const auto& row : crossover_report(ord, kind, times, common.policy))
        table.rows.push_back({row.t, row.series, row.short_value, row.long_value, row.short_rel_error,
                              row.long_rel_error, std::string(to_string(row.best))});
      emit(table, common, "csv", out);
      return ExitCode::ok;
    }

    if (*oracle_cmd) {
      const Order ord(order);
      const auto times = resolve_grid(grid);
      TalbotConfig cfg;
      cfg.node_count = nodes;
      cfg.validate();
      std::vector<CurveKind> kinds;
      if (oracle_kind != "relax_rate") kinds.push_back(CurveKind::creep_rate);
      if (oracle_kind != "creep_rate") kinds.push_back(CurveKind::relax_rate);
      Table table;
      table.meta = base_meta("oracle-check", order);
      table.meta["tolerance"] = oracle_tol;
      table.columns = {"t", "kind", "series", "oracle", "rel_gap", "degraded", "pass", "provenance"};
      bool all_pass = true;
      for (double t : times) {
        for (CurveKind kind : kinds) {
          const OracleComparison c = oracle_compare(ord, kind, t, common.policy, cfg);
          const bool pass = c.rel_gap <= oracle_tol;
          all_pass = all_pass && pass;
          table.rows.push_back({t, std::string(to_string(kind)), c.series, c.oracle, c.rel_gap, c.degraded, pass,
                                std::string("oracle")});
        }
      }
      table.meta["pass"] = all_pass;
      emit(table, common, "csv", out);
      return all_pass ? ExitCode::ok : ExitCode::validation_failed;
    }

    if (*respond_cmd) {
      const Order ord(order);
      std::ifstream in(input_path);
      if (!in) throw UsageError("cannot open input file '" + input_path + "'");
      const LoadHistory history = read_load_history_csv(
          in, interpolation == "constant" ? Interpolation::piecewise_constant : Interpolation::piecewise_linear);
      std::vector<double> times = resolve_grid(grid, false);
      if (times.empty()) times = history.times();
      const MaterialCurve curve = response == "strain" ? strain_response(ord, history, times, common.policy)
                                                       : stress_response(ord, history, times, common.policy);
      Table table = curve_table(curve);
      table.meta = base_meta("respond", order);
      table.meta["response"] = response;
      table.meta["interpolation"] = interpolation;
      emit(table, common, "csv", out);
      return ExitCode::ok;
    }

    if (*validate_cmd) {
      Table table;
      table.meta["command"] = "validate";
      table.columns = {"name", "tolerance", "measured", "pass"};
      bool all_pass = true;
      for (const auto& rec : run_invariant_suite()) {
        all_pass = all_pass && rec.pass;
        table.rows.push_back({rec.name, rec.tolerance, rec.measured, rec.pass});
      }
      table.meta["pass"] = all_pass;
      emit(table, common, "json", out);
      return all_pass ? ExitCode::ok : ExitCode::validation_failed;
    }
  } catch (const InsufficientZerosError& e) {
    write_error(err, e.kind(), e.what(), e.required_count());
    return ExitCode::error;
  } catch (const Error& e) {
    write_error(err, e.kind(), e.what());
    return ExitCode::error;
  } catch (const std::exception& e) {
    write_error(err, "internal", e.what());
    return ExitCode::error;
  }
  write_error(err, "usage", "no subcommand given");
  return ExitCode::error;
}

}  // namespace bvisco::cli
