#pragma once

// Command-line front end. run_cli() is the whole program minus main(), so the
// tests can drive it with in-memory streams.
//
//   concave_cli coeffs --alpha A --gamma G --n N
//   concave_cli area   --family F [--theta T | --alpha A --gamma G --t T] --r R --method M
//   concave_cli verify {lemmas|coefficients|geometry|area|all} [grid flags]
//   concave_cli bound  --alpha A --b B
//
// Global: --seed, --format {json,csv,pretty}, -o FILE, --timing.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "concave/concave.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace concave::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

enum class Format { json, csv, pretty };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rows of (column -> value); numbers stay doubles until the writer formats them.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
};

inline std::string cell_text(const nlohmann::json& v) {
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_null()) return "null";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline void write_table(std::ostream& os, const Table& t, Format f) {
  switch (f) {
    case Format::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& row : t.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i];
        arr.push_back(std::move(obj));
      }
      os << arr.dump(2) << "\n";
      return;
    }
    case Format::csv: {
      write_csv_row(os, t.columns);
      for (const auto& row : t.rows) {
        std::vector<std::string> fields;
        for (const auto& v : row) fields.push_back(cell_text(v));
        write_csv_row(os, fields);
      }
      return;
    }
    case Format::pretty: {
      std::vector<std::size_t> width(t.columns.size());
      for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
      std::vector<std::vector<std::string>> text;
      for (const auto& row : t.rows) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < row.size(); ++i) {
          line.push_back(cell_text(row[i]));
          width[i] = std::max(width[i], line.back().size());
        }
        text.push_back(std::move(line));
      }
      const auto put = [&](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i) {
          os << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << line[i];
        }
        os << "\n";
      };
      put(t.columns);
      for (const auto& line : text) put(line);
      return;
    }
  }
}

// --- commands ------------------------------------------------------------------

inline Table coeffs_table(double alpha, double gamma, std::size_t n_max) {
  if (!(alpha > -1.0 && alpha <= 2.0) || alpha == 1.0) {
    throw UsageError("--alpha must lie in (-1, 1) or (1, 2]");
  }
  if (n_max < 1 || n_max > default_truncation_order) {
    throw UsageError("--n must lie in [1, " + std::to_string(default_truncation_order) + "]");
  }
  std::optional<UnitModulusParameter> x;
  try {
    x.emplace(gamma);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Table t{{"n", "A_re", "A_im", "A_abs", "B_re", "B_im", "B_abs"}, {}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    const cplx b = coefficient_B(n, alpha, *x);
    const cplx a = coefficient_A(n, alpha, *x);
    t.rows.push_back({n, a.real(), a.imag(), std::abs(a), b.real(), b.imag(), std::abs(b)});
  }
  return t;
}

struct AreaRequest {
  std::string family = "z-over-koebe";
  double theta = 0.0;
  double alpha = 2.0;
  double gamma = 0.0;
  double t = 0.0;
  double r = 0.5;
  std::string method = "all";
  std::size_t nodes = 1024;
};

inline Table area_table(const AreaRequest& q) {
  if (!(q.r > 0.0 && q.r < 1.0)) throw UsageError("--r must lie in (0, 1)");
  const std::size_t N = default_truncation_order;
  std::function<cplx(cplx)> g, dg;
  std::optional<TruncatedSeries> series;
  std::optional<double> exact;
  const double pi = std::numbers::pi;
  const double r2 = q.r * q.r;

  if (q.family == "identity") {
    g = [](cplx z) { return z; };
    dg = [](cplx) { return cplx{1.0, 0.0}; };
    series = TruncatedSeries::identity(N);
    exact = pi * r2;
  } else if (q.family == "z-over-koebe") {
    g = [](cplx z) { return (1.0 - z) * (1.0 - z); };
    dg = [](cplx z) { return -2.0 * (1.0 - z); };
    series = TruncatedSeries::polynomial({1.0, -2.0, 1.0}, N);
    exact = yamashita_max(YamashitaKind::z_over_f, q.r);
  } else if (q.family == "koebe-over-z") {
    g = [](cplx z) { return 1.0 / ((1.0 - z) * (1.0 - z)); };
    dg = [](cplx z) { return 2.0 / ((1.0 - z) * (1.0 - z) * (1.0 - z)); };
    series = series_pow_real(TruncatedSeries::polynomial({1.0, -1.0}, N), -2.0);
    exact = yamashita_max(YamashitaKind::f_over_z, q.r);
  } else if (q.family == "z-over-j") {
    g = [](cplx z) { return 1.0 - z; };
    dg = [](cplx) { return cplx{-1.0, 0.0}; };
    series = TruncatedSeries::polynomial({1.0, -1.0}, N);
    exact = pi * r2;
  } else if (q.family == "z-over-ftheta") {
    const cplx c = 0.5 * (1.0 - std::polar(1.0, q.theta));
    g = [c](cplx z) { return (1.0 - z) * (1.0 - z) / (1.0 - c * z); };
    dg = [c](cplx z) {
      const cplx d = 1.0 - c * z;
      return (-2.0 * (1.0 - z) * d + c * (1.0 - z) * (1.0 - z)) / (d * d);
    };
    series = series_mul(TruncatedSeries::polynomial({1.0, -2.0, 1.0}, N),
                        series_pow_real(TruncatedSeries::polynomial({1.0, -c}, N), -1.0));
  } else if (q.family == "phi-over-f") {
    std::optional<SchwarzSpec> phi;
    std::optional<ConcaveMapSpec> spec;
    try {
      if (q.t != 0.0) phi = SchwarzSpec::quadratic(q.t);
      spec = ConcaveMapSpec::normalized(q.alpha, UnitModulusParameter(q.gamma), phi);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const auto p = spec->phi();
    g = [s = *spec, p](cplx z) {
      const cplx w = p(z);
      return w / extremal_F(s, w);
    };
    dg = [s = *spec, p](cplx z) { return z_over_F_derivative(s, p(z)) * p.derivative(z); };
    series = series_compose(z_over_F_series(*spec), p.series(N));
  } else {
    throw UsageError("unknown --family '" + q.family + "'");
  }

  std::vector<std::string> methods;
  if (q.method == "all") {
    methods = {"green", "parseval", "grid2d"};
  } else if (q.method == "green" || q.method == "parseval" || q.method == "grid2d") {
    methods = {q.method};
  } else {
    throw UsageError("unknown --method '" + q.method + "'");
  }

  Table t{{"family", "r", "method", "value", "est_error", "nodes", "exact", "rel_err"}, {}};
  for (const auto& m : methods) {
    AreaResult res;
    if (m == "green") {
      res = area_green(g, dg, q.r, q.nodes);
    } else if (m == "parseval") {
      res = area_parseval(*series, q.r);
    } else {
      res = area_grid2d(dg, q.r, {64, std::max<std::size_t>(q.nodes / 2, 8)});
    }
    t.rows.push_back({q.family, q.r, m, res.value, res.est_error, res.nodes,
                      exact ? nlohmann::json(*exact) : nlohmann::json(nullptr),
                      exact ? nlohmann::json(std::abs(res.value - *exact) / *exact)
                            : nlohmann::json(nullptr)});
  }
  return t;
}

inline Table bound_table(double alpha, double b_abs) {
  if (!(alpha > 1.0 && alpha <= 2.0)) throw UsageError("--alpha must lie in (1, 2]");
  MBound m;
  try {
    m = M_bound(alpha, b_abs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return {{"alpha", "b_abs", "gamma0", "E0_scan", "E0_argmax", "E_endpoint", "M", "skipped"},
          {{alpha, b_abs, m.gamma0, m.E0_scan, m.E0_gamma,
            m.E_endpoint ? nlohmann::json(*m.E_endpoint) : nlohmann::json(nullptr), m.M,
            m.skipped.size()}}};
}

inline Suite parse_suite(const std::string& s) {
  static const std::map<std::string, Suite> names{{"lemmas", Suite::lemmas},
                                                  {"coefficients", Suite::coefficients},
                                                  {"geometry", Suite::geometry},
                                                  {"area", Suite::area},
                                                  {"all", Suite::all}};
  const auto it = names.find(s);
  if (it == names.end()) throw UsageError("unknown suite '" + s + "'");
  return it->second;
}

inline void write_reports(std::ostream& os, const std::vector<VerificationReport>& reports,
                          Format f, bool timing) {
  if (f == Format::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
      auto j = to_json(r);
      if (timing) j["runtime_ms"] = r.runtime_ms;
      arr.push_back(std::move(j));
    }
    os << arr.dump(2) << "\n";
    return;
  }
  if (f == Format::csv) {
    write_csv(os, reports);
    return;
  }
  Table t{{"status", "claim_id", "ratio", "tolerance", "skipped"}, {}};
  if (timing) t.columns.push_back("runtime_ms");
  Table bounds{{"alpha", "gamma", "r", "quadrature", "closed_area", "M_pi_r2", "dev_closed", "dev_M",
                "exceeds"},
               {}};
  for (const auto& r : reports) {
    const std::string status = r.kind == ClaimKind::informational ? (r.flagged ? "FLAG" : "info")
                                                                  : (r.pass ? "PASS" : "FAIL");
    std::vector<nlohmann::json> row{status, r.claim_id, r.worst_ratio, r.tolerance, r.skipped.size()};
    if (timing) row.push_back(r.runtime_ms);
    t.rows.push_back(std::move(row));
    if (r.claim_id.rfind("area.bound_table.", 0) == 0 && r.grid_spec.contains("quadrature")) {
      const auto& p = r.grid_spec;
      bounds.rows.push_back({p["alpha"], p["gamma"], p["r"], p["quadrature"], p["closed_area"],
                             p["M_pi_r2"], p["dev_closed"], p["dev_M"], r.flagged});
    }
  }
  write_table(os, t, Format::pretty);
  if (!bounds.rows.empty()) {
    os << "\nbound table (informational)\n";
    write_table(os, bounds, Format::pretty);
  }
}

inline std::vector<double> parse_list(const std::string& s, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": cannot parse '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(flag) + ": empty list");
  return out;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coefficient, distance and area checks for concave univalent maps"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::uint64_t seed = 7;
  std::string format = "pretty";
  std::string output;
  bool timing = false;
  app.add_option("--seed", seed, "RNG seed for randomized sweeps")->capture_default_str();
  app.add_option("--format", format, "json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  app.add_option("-o,--output", output, "write to FILE instead of stdout");
  app.add_flag("--timing", timing, "include per-report runtime (not deterministic)");

  double c_alpha = 2.0, c_gamma = 0.0;
  std::size_t c_n = 10;
  auto* coeffs = app.add_subcommand("coeffs", "table of A_n(alpha, x) and B_n(alpha, x)");
  coeffs->add_option("--alpha", c_alpha)->capture_default_str();
  coeffs->add_option("--gamma", c_gamma, "x = e^{i gamma}")->capture_default_str();
  coeffs->add_option("--n", c_n, "largest n")->capture_default_str();

  AreaRequest aq;
  auto* area = app.add_subcommand("area", "area of g(D_r) by the three engines");
  area->add_option("--family", aq.family,
                   "identity, z-over-koebe, koebe-over-z, z-over-j, z-over-ftheta, phi-over-f")
      ->capture_default_str();
  area->add_option("--theta", aq.theta, "z-over-ftheta parameter")->capture_default_str();
  area->add_option("--alpha", aq.alpha, "phi-over-f opening parameter")->capture_default_str();
  area->add_option("--gamma", aq.gamma, "phi-over-f: x = e^{i gamma}")->capture_default_str();
  area->add_option("--t", aq.t, "phi-over-f: phi(z) = (1-t) z + t z^2, 0 means identity")
      ->capture_default_str();
  area->add_option("--r", aq.r)->capture_default_str();
  area->add_option("--method", aq.method, "green, parseval, grid2d or all")->capture_default_str();
  area->add_option("--nodes", aq.nodes, "contour nodes")->capture_default_str();

  GridSpec grid;
  std::string suite_name, alphas, radii;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suite_name, "lemmas, coefficients, geometry, area or all")->required();
  verify->add_option("--alphas", alphas, "comma-separated alpha values for the lemma sweep");
  verify->add_option("--gamma-count", grid.gamma_count)->capture_default_str();
  verify->add_option("--n-max", grid.n_max)->capture_default_str();
  verify->add_option("--r-values", radii, "comma-separated radii for the area oracles");
  verify->add_option("--trials", grid.trials, "random measures per alpha")->capture_default_str();
  verify->add_option("--samples", grid.distance_samples, "boundary samples")->capture_default_str();

  double b_alpha = 1.5, b_abs = 0.5;
  auto* bound = app.add_subcommand("bound", "gamma0, E0 (scan and endpoint) and M");
  bound->add_option("--alpha", b_alpha)->capture_default_str();
  bound->add_option("--b", b_abs, "|b|")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  const Format fmt = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::pretty;
  std::ostringstream buf;
  int code = exit_ok;
  try {
    if (*coeffs) {
      write_table(buf, coeffs_table(c_alpha, c_gamma, c_n), fmt);
    } else if (*area) {
      write_table(buf, area_table(aq), fmt);
    } else if (*bound) {
      write_table(buf, bound_table(b_alpha, b_abs), fmt);
    } else if (*verify) {
      const Suite s = parse_suite(suite_name);
      grid.seed = seed;
      if (!alphas.empty()) grid.alpha_values = parse_list(alphas, "--alphas");
      if (!radii.empty()) grid.r_values = parse_list(radii, "--r-values");
      try {
        grid.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto reports = run_suite(s, grid);
      write_reports(buf, reports, fmt, timing);
      code = all_pass(reports) ? exit_ok : exit_failed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  if (output.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << output << "\n";
      return exit_usage;
    }
    f << buf.str();
  }
  return code;
}

}  // namespace concave::cli
