#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "pantsbd/coordinates.hpp"
#include "pantsbd/errors.hpp"
#include "pantsbd/pants.hpp"

namespace pantsbd::cli {
namespace {

using nlohmann::ordered_json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("malformed number '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw DomainError("malformed number '" + text + "'");
  return v;
}

std::array<std::string, 3> split_triple(const std::string& text, const char* what) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) {
    throw DomainError(std::string(what) + " expects three comma-separated values, got '" + text + "'");
  }
  return {parts[0], parts[1], parts[2]};
}

void require_n(int n) {
  if (n < 2) throw DomainError("n must be at least 2, got " + std::to_string(n));
}

/// Resolves the parameter point from --lengths or --abc.
PantsParams resolve_params(const RunConfig& config) {
  if (config.lengths && config.abc) throw DomainError("--lengths and --abc are mutually exclusive");
  if (config.lengths) {
    if (config.mode == Backend::exact) {
      throw DomainError("--lengths input requires --mode float");
    }
    const auto t = split_triple(*config.lengths, "--lengths");
    return params_from_lengths({parse_double(t[0]), parse_double(t[1]), parse_double(t[2])});
  }
  if (!config.abc) throw DomainError("one of --lengths or --abc is required");
  const Backend bk = config.mode.value_or(Backend::exact);
  const auto t = split_triple(*config.abc, "--abc");
  PantsParams params{Scalar::parse(t[0], bk), Scalar::parse(t[1], bk), Scalar::parse(t[2], bk)};
  params.validate();
  const DomainReport report = check_domain(params);
  if (const DomainCheck* bad = report.first_failure()) {
    throw DomainError("parameters outside the pants domain: " + bad->name);
  }
  return params;
}

ordered_json exp_json(const Scalar& s) {
  if (s.is_exact()) return s.to_string();
  return s.to_double();
}

ordered_json log_json(const InvariantValue& v) {
  const auto lv = v.log_value();
  if (!lv) return nullptr;
  return *lv;
}

ordered_json invariant_json(const InvariantValue& v) {
  return ordered_json{{"exp", exp_json(v.exp_value)}, {"log", log_json(v)}};
}

std::string leaf_column(Leaf leaf) {
  std::string s(name(leaf));
  s.erase(s.find('_'), 1);  // "h_AB" -> "hAB"
  return s;
}

/// Coordinate column names in the fixed output order.
std::vector<std::string> coordinate_columns(int n) {
  std::vector<std::string> cols;
  for (Leaf leaf : kLeaves) {
    for (int p = 1; p < n; ++p) cols.push_back("sigma_" + leaf_column(leaf) + "_p" + std::to_string(p));
  }
  for (Triangle t : kTriangles) {
    for (const auto& idx : triple_indices(n)) {
      cols.push_back("tau_" + std::string(name(t)) + "_p" + std::to_string(idx.p) + "q" +
                     std::to_string(idx.q) + "r" + std::to_string(idx.r));
    }
  }
  return cols;
}

std::vector<const InvariantValue*> coordinate_values(const CoordinateVector& coords) {
  std::vector<const InvariantValue*> values;
  for (Leaf leaf : kLeaves) {
    for (int p = 1; p < coords.n; ++p) values.push_back(&coords.sigma_at(leaf, p));
  }
  for (Triangle t : kTriangles) {
    for (const auto& idx : triple_indices(coords.n)) values.push_back(&coords.tau_at(t, idx));
  }
  return values;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string csv_header(int n) {
  std::string line = "lA,lB,lC,alpha,beta,gamma";
  for (const auto& c : coordinate_columns(n)) line += "," + c;
  return line;
}

std::string csv_row(const PantsParams& params, const CoordinateVector& coords) {
  const PantsLengths len = lengths_from_params(params);
  std::string line = format_double(len.l_a) + "," + format_double(len.l_b) + "," +
                     format_double(len.l_c);
  for (const Scalar* s : {&params.alpha, &params.beta, &params.gamma}) line += "," + s->to_string();
  for (const InvariantValue* v : coordinate_values(coords)) {
    const auto lv = v->log_value();
    line += ",";
    if (lv) line += format_double(*lv);
  }
  return line;
}

ordered_json coords_document(const PantsParams& params, const CoordinateVector& coords) {
  const PantsLengths len = lengths_from_params(params);
  ordered_json doc;
  doc["n"] = coords.n;
  doc["mode"] = std::string(to_string(params.backend()));
  doc["params"] = {{"alpha", exp_json(params.alpha)},
                   {"beta", exp_json(params.beta)},
                   {"gamma", exp_json(params.gamma)}};
  doc["lengths"] = {{"lA", len.l_a}, {"lB", len.l_b}, {"lC", len.l_c}};

  ordered_json sigma = ordered_json::object();
  for (Leaf leaf : kLeaves) {
    ordered_json list = ordered_json::array();
    for (const auto& v : coords.sigma.at(leaf)) list.push_back(invariant_json(v));
    sigma[std::string(name(leaf))] = std::move(list);
  }
  ordered_json tau = ordered_json::object();
  for (Triangle t : kTriangles) {
    ordered_json entries = ordered_json::object();
    for (const auto& [idx, v] : coords.tau.at(t)) entries[idx.key()] = invariant_json(v);
    tau[std::string(name(t))] = std::move(entries);
  }
  doc["coordinates"] = {{"sigma", std::move(sigma)}, {"tau", std::move(tau)}};

  ordered_json checks = ordered_json::object();
  for (const auto& c : polytope_check(coords, params).checks) {
    checks[c.name] = {{"passed", c.passed}, {"detail", c.detail}};
  }
  doc["checks"] = std::move(checks);
  return doc;
}

/// Runs body, mapping library errors onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const DegenerateFlagsError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::degenerate;
  } catch (const PositivityViolation& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::degenerate;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::degenerate;
  }
}

/// Writes text to config.out, or to out when no path was given.
int emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return exit_code::ok;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return exit_code::usage;
  }
  file << text;
  file.flush();
  if (!file) {
    err << "error: failed writing '" << path << "'\n";
    return exit_code::usage;
  }
  return exit_code::ok;
}

}  // namespace

std::vector<double> GridAxis::points() const {
  std::vector<double> pts;
  if (steps == 1) return {start};
  for (int i = 0; i < steps; ++i) {
    pts.push_back(start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1));
  }
  return pts;
}

std::array<GridAxis, 3> parse_grid(const std::string& text) {
  std::array<std::optional<GridAxis>, 3> axes;
  for (const auto& item : split(text, ',')) {
    const auto f = split(item, ':');
    if (f.size() != 4) throw DomainError("grid axis must be name:start:stop:steps, got '" + item + "'");
    int slot = -1;
    if (f[0] == "lA") slot = 0;
    if (f[0] == "lB") slot = 1;
    if (f[0] == "lC") slot = 2;
    if (slot < 0) throw DomainError("unknown grid axis '" + f[0] + "'");
    if (axes[static_cast<std::size_t>(slot)]) throw DomainError("grid axis '" + f[0] + "' given twice");
    GridAxis axis{parse_double(f[1]), parse_double(f[2]), 0};
    const double steps = parse_double(f[3]);
    if (steps < 1 || steps != std::floor(steps)) throw DomainError("grid steps must be a positive integer");
    axis.steps = static_cast<int>(steps);
    axes[static_cast<std::size_t>(slot)] = axis;
  }
  std::array<GridAxis, 3> result;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!axes[i]) throw DomainError("grid is missing an axis (need lA, lB and lC)");
    result[i] = *axes[i];
  }
  return result;
}

int run_coords(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_n(config.n);
    const PantsParams params = resolve_params(config);
    const CoordinateVector coords = assemble_phi(config.n, params, Method::closed_form);
    std::string text;
    if (config.format == OutputFormat::json) {
      text = coords_document(params, coords).dump(2) + "\n";
    } else {
      text = csv_header(config.n) + "\n" + csv_row(params, coords) + "\n";
    }
    return emit(config.out, text, out, err);
  });
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_n(config.n);
    if (config.mode == Backend::exact) throw DomainError("sweep works on lengths and needs --mode float");
    const auto axes = parse_grid(config.grid);
    std::string text = csv_header(config.n) + "\n";
    for (double la : axes[0].points()) {
      for (double lb : axes[1].points()) {
        for (double lc : axes[2].points()) {
          const PantsParams params = params_from_lengths({la, lb, lc});
          text += csv_row(params, assemble_phi(config.n, params, Method::closed_form)) + "\n";
        }
      }
    }
    return emit(config.out, text, out, err);
  });
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string mode_text;
  std::string format_text = "json";

  CLI::App app{"Boundary-length coordinates of Fuchsian pants representations", "pantsbd"};
  app.require_subcommand(0, 1);
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", config.n, "Dimension n >= 2");
    cmd->add_option("--mode", mode_text, "Scalar mode")->check(CLI::IsMember({"exact", "float"}));
  };
  add_common(&app);
  app.add_option("--lengths", config.lengths, "Boundary lengths lA,lB,lC (float mode)");
  app.add_option("--abc", config.abc, "Parameters alpha,beta,gamma as rationals");
  app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", config.out, "Output path (default: stdout)");

  CLI::App* verify = app.add_subcommand("verify", "Run the property verification suite");
  add_common(verify);
  verify->add_option("--samples", config.samples, "Random parameter samples")->check(CLI::PositiveNumber);
  verify->add_option("--seed", config.seed, "RNG seed");
  verify->add_option("--max-n", config.max_n, "Largest n to check");

  CLI::App* sweep = app.add_subcommand("sweep", "Tabulate coordinates over a grid of lengths");
  add_common(sweep);
  sweep->add_option("--grid", config.grid, "lA:start:stop:steps,lB:...,lC:...")->required();
  sweep->add_option("--out", config.out, "Output CSV path (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }

  if (!mode_text.empty()) config.mode = mode_text == "exact" ? Backend::exact : Backend::floating;
  config.format = format_text == "csv" ? OutputFormat::csv : OutputFormat::json;

  if (verify->parsed()) return run_verify(config, out, err);
  if (sweep->parsed()) return run_sweep(config, out, err);
  return run_coords(config, out, err);
}

}  // namespace pantsbd::cli
