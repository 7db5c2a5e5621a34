#pragma once

// Grid sweeps over the coefficient, geometry and area claims. Each sweep cell
// produces one VerificationReport; cells run concurrently and are gathered
// back in grid order, so output does not depend on scheduling.

#include "concave/area.hpp"
#include "concave/concave_family.hpp"
#include "concave/hypergeom.hpp"
#include "concave/report.hpp"
#include "concave/rng.hpp"
#include "concave/series.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace concave {

struct GridSpec {
  std::vector<double> alpha_values{-0.75, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75,
                                   1.1,   1.2,  1.3,   1.4, 1.5,  1.6, 1.7,
                                   1.8,   1.9,  2.0};
  std::size_t gamma_count = 256;
  std::size_t n_max = 50;
  std::vector<double> r_values{0.25, 0.5, 0.75, 0.9};
  std::uint64_t seed = 7;

  std::vector<double> scaling_t{0.1, 0.25, 0.4, 0.55, 0.7};
  std::size_t random_pairs = 20;
  std::vector<double> coefficient_alphas{1.25, 1.5, 1.75, 2.0};
  std::size_t coefficient_n_max = 30;
  std::size_t trials = 100;
  std::size_t atoms = 4;
  std::vector<double> distance_alphas{1.25, 1.5, 2.0};
  std::vector<double> distance_gammas{0.0, std::numbers::pi / 3.0, -std::numbers::pi / 3.0};
  std::size_t distance_samples = std::size_t{1} << 14;
  std::vector<double> schwarz_t{0.1, 0.2, 0.3};
  std::vector<double> schwarz_alphas{1.5, 2.0};
  std::vector<double> schwarz_gammas{0.0, std::numbers::pi / 4.0};
  double schwarz_r = 0.5;
  std::size_t identity_gamma_count = 512;
  std::vector<double> table_alphas{1.25, 1.5, 1.75};
  std::vector<double> table_gammas{std::numbers::pi / 4.0, -std::numbers::pi / 4.0,
                                   std::numbers::pi / 2.0, -std::numbers::pi / 2.0};
  std::vector<double> table_r{0.25, 0.5};

  void validate() const {
    if (n_max == 0 || n_max > default_truncation_order) {
      throw std::invalid_argument("GridSpec: n_max must lie in [1, " +
                                  std::to_string(default_truncation_order) + "]");
    }
    if (coefficient_n_max < 2 || coefficient_n_max > default_truncation_order) {
      throw std::invalid_argument("GridSpec: coefficient_n_max must lie in [2, 64]");
    }
    if (gamma_count == 0) throw std::invalid_argument("GridSpec: gamma_count must be positive");
    for (double r : r_values) {
      if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("GridSpec: r values must lie in (0, 1)");
    }
    for (double a : alpha_values) {
      if (!(a > -1.0 && a <= 2.0)) throw std::invalid_argument("GridSpec: alpha must lie in (-1, 2]");
    }
  }
};

namespace detail {

inline std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

using Cell = std::function<VerificationReport()>;

inline std::vector<VerificationReport> run_cells(const std::vector<Cell>& cells) {
  std::vector<std::future<VerificationReport>> futures;
  futures.reserve(cells.size());
  for (const auto& c : cells) {
    futures.push_back(std::async(std::launch::async, [c] {
      const auto start = std::chrono::steady_clock::now();
      VerificationReport r = c();
      r.runtime_ms = elapsed_ms(start);
      return r;
    }));
  }
  std::vector<VerificationReport> out;
  out.reserve(cells.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

inline double rel_err(double got, double want) {
  return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

}  // namespace detail

// --- lemmas --------------------------------------------------------------------

inline std::vector<VerificationReport> run_lemma_suite(const GridSpec& grid) {
  grid.validate();
  const auto gammas = uniform_gamma_grid(grid.gamma_count);
  std::vector<detail::Cell> cells;
  for (double a : grid.alpha_values) {
    cells.push_back([=] { return domination_check(a, grid.n_max, gammas); });
  }
  for (double a : grid.alpha_values) {
    if (a <= 1.0) continue;
    cells.push_back([=] {
      auto r = scaling_check(a, grid.scaling_t, grid.n_max, gammas);
      r.claim_id += ".alpha_" + format_double(a);
      return r;
    });
  }
  auto reports = detail::run_cells(cells);
  for (std::size_t i = 0; i < grid.alpha_values.size(); ++i) {
    reports[i].claim_id += "." + format_double(grid.alpha_values[i]);
  }
  return reports;
}

// --- coefficients ------------------------------------------------------------

inline VerificationReport koebe_coefficient_report() {
  VerificationReport rep;
  rep.claim_id = "coefficients.A_n_alpha2_x1_equals_4n";
  rep.kind = ClaimKind::equality;
  rep.tolerance = 1e-10;
  rep.grid_spec = {{"n_max", default_truncation_order}};
  const auto one = UnitModulusParameter::one();
  for (std::size_t n = 1; n <= default_truncation_order; ++n) {
    const double want = 4.0 * static_cast<double>(n);
    const cplx got = coefficient_A(n, 2.0, one);
    rep.observe(std::abs(got - want) / want, std::abs(got), want, {{"n", n}});
  }
  return rep.finalize();
}

/// A_n(alpha, x) against the Taylor coefficients of ((1 + x z)/(1 - z))^alpha
/// produced by series exponentiation, for random (alpha, gamma).
inline VerificationReport power_series_agreement_report(std::size_t pairs, std::size_t n_max,
                                                        std::uint64_t seed) {
  VerificationReport rep;
  rep.claim_id = "coefficients.A_n_matches_series_power";
  rep.kind = ClaimKind::equality;
  rep.tolerance = 1e-10;
  rep.grid_spec = {{"pairs", pairs}, {"n_max", n_max}, {"seed", seed}};
  Rng rng(seed);
  for (std::size_t p = 0; p < pairs; ++p) {
    const double alpha = rng.uniform(-1.0, 2.0);
    const double gamma = rng.uniform(-std::numbers::pi + 1e-3, std::numbers::pi - 1e-3);
    const UnitModulusParameter x(gamma);
    std::vector<cplx> base(n_max + 1, 1.0 + x.x());
    base[0] = 1.0;
    const auto s = series_pow_real(TruncatedSeries(std::move(base)), alpha);
    for (std::size_t n = 1; n <= n_max; ++n) {
      const cplx a = coefficient_A(n, alpha, x);
      const double scale = std::max(std::abs(s[n]), std::numeric_limits<double>::min());
      rep.observe(std::abs(a - s[n]) / scale, std::abs(a), std::abs(s[n]),
                  {{"alpha", alpha}, {"gamma", gamma}, {"n", n}});
    }
  }
  return rep.finalize();
}

/// A_n(alpha, 1) <= A_n(2, 1) = 4n for alpha <= 2.
inline VerificationReport A_n_monotone_report(double alpha, std::size_t n_max) {
  VerificationReport rep;
  rep.claim_id = "coefficients.A_n_at_most_4n." + format_double(alpha);
  rep.kind = ClaimKind::bound;
  rep.tolerance = 1e-12;
  rep.grid_spec = {{"alpha", alpha}, {"n_max", n_max}};
  const auto one = UnitModulusParameter::one();
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double a = coefficient_A(n, alpha, one).real();
    const double b = 4.0 * static_cast<double>(n);
    rep.observe(a / b, a, b, {{"n", n}});
  }
  return rep.finalize();
}

inline std::vector<double> f_theta_angles() {
  std::vector<double> t;
  for (int k = 0; k <= 8; ++k) t.push_back(k * std::numbers::pi / 4.0);
  return t;
}

inline std::vector<VerificationReport> run_coefficient_suite(const GridSpec& grid) {
  grid.validate();
  const std::size_t n = grid.coefficient_n_max;
  std::vector<detail::Cell> cells;
  cells.push_back([] { return koebe_coefficient_report(); });
  cells.push_back([=] { return power_series_agreement_report(grid.random_pairs, grid.n_max, grid.seed); });
  for (double a : grid.coefficient_alphas) {
    cells.push_back([=] { return A_n_monotone_report(a, default_truncation_order); });
    cells.push_back([=] {
      auto r = coefficient_bound_report(extremal_family(a), n, ClaimKind::equality);
      r.claim_id += "." + format_double(a);
      return r;
    });
    cells.push_back([=] {
      auto r = coefficient_bound_report(
          random_measure_family(a, grid.trials, grid.atoms, grid.seed), n, ClaimKind::bound);
      r.claim_id += "." + format_double(a);
      r.grid_spec["seed"] = grid.seed;
      return r;
    });
  }
  cells.push_back([=] {
    std::vector<TruncatedSeries> members;
    for (double th : f_theta_angles()) members.push_back(f_theta_series(th));
    auto r = shifted_bound_report("f_theta.sharp", members, n, ClaimKind::equality);
    r.grid_spec["theta_values"] = f_theta_angles();
    return r;
  });
  cells.push_back([=] {
    const auto fam = random_measure_family(2.0, grid.trials, grid.atoms, grid.seed);
    std::vector<TruncatedSeries> members;
    for (const auto& m : fam.members) members.push_back(coeffs_from_measure(m, n));
    auto r = shifted_bound_report("random_measures.alpha_2", members, n, ClaimKind::bound);
    r.grid_spec["seed"] = grid.seed;
    return r;
  });
  return detail::run_cells(cells);
}

// --- geometry ------------------------------------------------------------------

/// The distance from f(0) = 0 to the boundary equals 1/(|1 + x| alpha).
inline VerificationReport distance_report(double alpha, const std::vector<double>& gammas,
                                          std::size_t samples) {
  VerificationReport rep;
  rep.claim_id = "geometry.distance_from_origin." + format_double(alpha);
  rep.kind = ClaimKind::equality;
  rep.tolerance = 1e-4;
  rep.grid_spec = {{"alpha", alpha}, {"gammas", gammas}, {"samples", samples}};
  for (double g : gammas) {
    const auto spec = ConcaveMapSpec::normalized(alpha, UnitModulusParameter(g));
    const double want = 1.0 / (std::abs(1.0 + spec.x.x()) * alpha);
    const double got = boundary_distance(spec, 0.0, samples);
    rep.observe(detail::rel_err(got, want), got, want, {{"gamma", g}});
  }
  return rep.finalize();
}

inline std::vector<cplx> polar_sample() {
  std::vector<cplx> pts;
  for (int i = 0; i < 5; ++i) {
    for (int k = 0; k < 8; ++k) pts.push_back(std::polar(0.2 * i, k * std::numbers::pi / 4.0));
  }
  return pts;
}

/// 1/(2 alpha) <= d(f(a), boundary) / ((1 - |a|^2) |f'(a)|) <= 1 on the polar sample.
/// `upper` selects which side is judged; both sides share the sampling.
inline VerificationReport hyperbolic_report(double alpha, const std::vector<double>& gammas,
                                            std::size_t samples, bool upper) {
  VerificationReport rep;
  rep.claim_id = std::string("geometry.hyperbolic_product.") + (upper ? "upper." : "lower.") +
                 format_double(alpha);
  rep.kind = ClaimKind::bound;
  rep.tolerance = upper ? 5e-3 : 1e-4;
  rep.grid_spec = {{"alpha", alpha}, {"gammas", gammas}, {"samples", samples},
                   {"points", "|a| in {0,0.2,0.4,0.6,0.8} x 8 angles"}};
  const double lower = 1.0 / (2.0 * alpha);
  for (double g : gammas) {
    const auto spec = ConcaveMapSpec::normalized(alpha, UnitModulusParameter(g));
    for (cplx a : polar_sample()) {
      const double h = hyperbolic_product(spec, a, samples);
      const nlohmann::json pt = {{"gamma", g}, {"a_re", a.real()}, {"a_im", a.imag()}};
      if (upper) {
        rep.observe(h, h, 1.0, pt);
      } else {
        rep.observe(lower / h, h, lower, pt);
      }
    }
  }
  return rep.finalize();
}

inline std::vector<VerificationReport> run_geometry_suite(const GridSpec& grid) {
  grid.validate();
  std::vector<detail::Cell> cells;
  cells.push_back([=] {
    auto r = distance_report(2.0, {0.0}, grid.distance_samples);
    r.claim_id = "geometry.koebe_distance_quarter";
    return r;
  });
  for (double a : grid.distance_alphas) {
    cells.push_back([=] { return distance_report(a, grid.distance_gammas, grid.distance_samples); });
  }
  for (double a : grid.distance_alphas) {
    cells.push_back([=] { return hyperbolic_report(a, grid.distance_gammas, grid.distance_samples, true); });
    cells.push_back([=] { return hyperbolic_report(a, grid.distance_gammas, grid.distance_samples, false); });
  }
  return detail::run_cells(cells);
}

// --- area ----------------------------------------------------------------------

namespace detail {

// Compare all three engines against an exact value on each radius.
inline VerificationReport area_oracle_report(const std::string& id, const TruncatedSeries& g,
                                             const std::function<double(double)>& exact,
                                             const std::vector<double>& radii, double tolerance,
                                             const std::function<double(double)>& certified_tail = {}) {
  VerificationReport rep;
  rep.claim_id = id;
  rep.kind = ClaimKind::equality;
  rep.tolerance = tolerance;
  rep.grid_spec = {{"radii", radii}, {"order", g.order()}, {"methods", {"green", "parseval", "grid2d"}}};
  const auto dg = series_derivative(g);
  const auto gfun = [&](cplx z) { return eval(g, z); };
  const auto dgfun = [&](cplx z) { return eval(dg, z); };
  for (double r : radii) {
    const double want = exact(r);
    const auto green = area_green(gfun, dgfun, r, 2048);
    const auto pars = area_parseval(g, r);
    const auto grid = area_grid2d(dgfun, r, {64, 512});
    double tail = 0.0;
    if (certified_tail) {
      tail = certified_tail(r);
      rep.grid_spec["certified_tail_r" + format_double(r)] = tail;
    }
    rep.observe((std::abs(pars.value - want) + tail) / want, pars.value, want,
                {{"r", r}, {"method", "parseval"}});
    rep.observe(rel_err(green.value, want), green.value, want, {{"r", r}, {"method", "green"}});
    rep.observe(rel_err(grid.value, want), grid.value, want, {{"r", r}, {"method", "grid2d"}});
  }
  return rep.finalize();
}

// Pairwise agreement of the engines on random polynomials.
inline VerificationReport area_engine_agreement_report(std::uint64_t seed) {
  VerificationReport rep;
  rep.claim_id = "area.engines_agree_on_polynomials";
  rep.kind = ClaimKind::equality;
  rep.tolerance = 1e-8;
  const std::vector<double> radii{0.25, 0.5, 0.75};
  rep.grid_spec = {{"degree_max", 8}, {"polynomials", 10}, {"radii", radii}, {"seed", seed}};
  Rng rng(seed);
  for (int p = 0; p < 10; ++p) {
    const std::size_t deg = 1 + static_cast<std::size_t>(rng.uniform() * 8.0);
    TruncatedSeries g(16);
    for (std::size_t k = 0; k <= deg; ++k) g[k] = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
    g[0] += 10.0;  // |g - 10| < 6 on |z| <= 0.75, so g has no zeros on the contours
    const auto dg = series_derivative(g);
    const auto gfun = [&](cplx z) { return eval(g, z); };
    const auto dgfun = [&](cplx z) { return eval(dg, z); };
    for (double r : radii) {
      const double a = area_green(gfun, dgfun, r, 64).value;
      const double b = area_parseval(g, r).value;
      const double c = area_grid2d(dgfun, r, {16, 64}).value;
      const nlohmann::json pt = {{"poly", p}, {"degree", deg}, {"r", r}};
      rep.observe(rel_err(a, b), a, b, pt);
      rep.observe(rel_err(c, b), c, b, pt);
    }
  }
  return rep.finalize();
}

}  // namespace detail

/// Taylor series of w / F(w) for the spec's extremal map (Schwarz map ignored).
inline TruncatedSeries z_over_F_series(const ConcaveMapSpec& spec,
                                       std::size_t order = default_truncation_order) {
  ConcaveMapSpec bare = spec;
  bare.schwarz.reset();
  const auto F = concave_map_series(bare, order + 1);
  std::vector<cplx> h(order + 1);
  for (std::size_t n = 0; n <= order; ++n) h[n] = F[n + 1];
  return series_pow_real(TruncatedSeries(std::move(h)), -1.0);
}

/// (w / F)'(w) = (F - w F') / F^2, w != 0.
inline cplx z_over_F_derivative(const ConcaveMapSpec& spec, cplx w) {
  const cplx F = extremal_F(spec, w);
  return (F - w * extremal_F_derivative(spec, w)) / (F * F);
}

/// Delta(r, phi/(F o phi)) from the composed series against the integral of
/// |(w/F)'|^2 over phi(D_r), evaluated on D_r with the Jacobian |phi'|^2.
inline VerificationReport change_of_variables_report(double alpha, double gamma,
                                                     const std::vector<double>& t_values,
                                                     double r) {
  VerificationReport rep;
  rep.claim_id = "area.change_of_variables." + format_double(alpha) + ".gamma_" +
                 format_double(gamma);
  rep.kind = ClaimKind::equality;
  rep.tolerance = 1e-5;
  rep.grid_spec = {{"alpha", alpha}, {"gamma", gamma}, {"t_values", t_values}, {"r", r}};
  for (double t : t_values) {
    const auto phi = SchwarzSpec::quadratic(t);
    const auto spec = ConcaveMapSpec::normalized(alpha, UnitModulusParameter(gamma), phi);
    const auto lhs_series = series_compose(z_over_F_series(spec), phi.series(default_truncation_order));
    const auto lhs = area_parseval(lhs_series, r);
    const auto rhs = area_grid2d(
        [&](cplx z) { return z_over_F_derivative(spec, phi(z)) * phi.derivative(z); }, r, {64, 512});
    rep.observe(detail::rel_err(lhs.value, rhs.value), lhs.value, rhs.value,
                {{"t", t}, {"parseval_tail_estimate", lhs.est_error}});
  }
  return rep.finalize();
}

inline VerificationReport half_identity_report(double alpha, std::size_t count) {
  VerificationReport rep;
  rep.claim_id = "area.re_inverse_one_minus_power_is_half." + format_double(alpha);
  rep.kind = ClaimKind::equality;
  rep.tolerance = 1e-12;
  rep.grid_spec = {{"alpha", alpha}, {"gamma_count", count}};
  for (double g : uniform_gamma_grid(count)) {
    try {
      const double h = half_identity(alpha, UnitModulusParameter(g));
      rep.observe(std::abs(h - 0.5), h, 0.5, {{"gamma", g}});
    } catch (const SingularityError& e) {
      rep.skipped.push_back("gamma=" + format_double(g) + ": " + e.locus());
    }
  }
  return rep.finalize();
}

/// Re D(x) - 1/4 = E(gamma), relative to max(1, |E|).
inline VerificationReport decomposition_report(double alpha, std::size_t count) {
  VerificationReport rep;
  rep.claim_id = "area.re_D_equals_quarter_plus_E." + format_double(alpha);
  rep.kind = ClaimKind::equality;
  rep.tolerance = 1e-12;
  rep.grid_spec = {{"alpha", alpha}, {"gamma_count", count}};
  for (double g : uniform_gamma_grid(count)) {
    try {
      const double re_d = D_of_x(alpha, UnitModulusParameter(g)).real();
      const double e = E_gamma(alpha, g);
      rep.observe(std::abs(re_d - 0.25 - e) / std::max(1.0, std::abs(e)), re_d - 0.25, e,
                  {{"gamma", g}});
    } catch (const SingularityError& e) {
      rep.skipped.push_back("gamma=" + format_double(g) + ": " + e.locus());
    }
  }
  return rep.finalize();
}

/// E' against central differences (h = 1e-6), away from gamma = 0 and the poles.
inline VerificationReport derivative_report(double alpha) {
  VerificationReport rep;
  rep.claim_id = "area.E_prime_matches_finite_difference." + format_double(alpha);
  rep.kind = ClaimKind::equality;
  rep.tolerance = 1e-6;
  constexpr double h = 1e-6;
  rep.grid_spec = {{"alpha", alpha}, {"h", h}, {"gamma_range", {-2.5, 2.5}}, {"nodes", 51}};
  for (int i = 0; i <= 50; ++i) {
    const double g = -2.5 + 0.1 * i;
    if (std::abs(g) < 0.05) {
      rep.skipped.push_back("gamma=" + format_double(g) + ": kink of the even extension");
      continue;
    }
    // keep 0.05 away from tan((pi - |gamma|) alpha/2) = inf
    const double pole = std::numbers::pi - std::numbers::pi / alpha;
    if (std::abs(std::abs(g) - pole) < 0.05) {
      rep.skipped.push_back("gamma=" + format_double(g) + ": near tan pole");
      continue;
    }
    try {
      const double fd = (E_gamma(alpha, g + h) - E_gamma(alpha, g - h)) / (2.0 * h);
      const double ex = E_prime(alpha, g);
      rep.observe(std::abs(fd - ex), ex, fd, {{"gamma", g}});
    } catch (const SingularityError& e) {
      rep.skipped.push_back("gamma=" + format_double(g) + ": " + e.locus());
    }
  }
  return rep.finalize();
}

inline VerificationReport gamma0_endpoint_report(const std::vector<double>& alphas) {
  VerificationReport rep;
  rep.claim_id = "area.gamma0_endpoints";
  rep.kind = ClaimKind::equality;
  rep.tolerance = 1e-12;
  rep.grid_spec = {{"alphas", alphas}};
  for (double a : alphas) {
    const double g_lo = gamma0(a, 1.0 / (2.0 * a));
    rep.observe(std::abs(g_lo), g_lo, 0.0, {{"alpha", a}, {"case", "|b| = 1/(2 alpha)"}});
    const double g_mid = gamma0(a, 1.0 / (a * std::numbers::sqrt2));
    rep.observe(std::abs(g_mid - std::numbers::pi / 2.0), g_mid, std::numbers::pi / 2.0,
                {{"alpha", a}, {"case", "2 alpha^2 |b|^2 = 1"}});
  }
  return rep.finalize();
}

/// Scan maximum E_0 against the endpoint value E(gamma0). Flagged when the
/// maximum is not attained at the endpoint.
inline VerificationReport endpoint_maximum_report(double alpha, double b_abs) {
  VerificationReport rep;
  rep.claim_id = "area.E0_scan_vs_endpoint." + format_double(alpha) + ".b_" + format_double(b_abs);
  rep.kind = ClaimKind::informational;
  rep.tolerance = 1e-12;
  const auto m = M_bound(alpha, b_abs);
  rep.grid_spec = {{"alpha", alpha}, {"b_abs", b_abs}, {"gamma0", m.gamma0},
                   {"E0_scan", m.E0_scan}, {"E0_argmax", m.E0_gamma}, {"M", m.M}};
  rep.skipped = m.skipped;
  if (m.E_endpoint) {
    rep.grid_spec["E_endpoint"] = *m.E_endpoint;
    rep.observe(m.E0_scan - *m.E_endpoint, m.E0_scan, *m.E_endpoint, {{"gamma0", m.gamma0}});
    rep.flagged = m.E0_scan > *m.E_endpoint + rep.tolerance;
  } else {
    rep.note = "E(gamma0) singular";
    rep.flagged = true;
  }
  if (rep.flagged && rep.note.empty()) rep.note = "maximum of E not attained at gamma0";
  return rep.finalize();
}

/// E(2, gamma) as gamma -> 0 against the removable value -1/8; the formula
/// itself is 0/0 at gamma = 0 and is never evaluated there.
inline VerificationReport alpha2_limit_report() {
  VerificationReport rep;
  rep.claim_id = "area.E_alpha2_gamma0_limit";
  rep.kind = ClaimKind::informational;
  rep.tolerance = 1e-6;
  rep.grid_spec = {{"limit", E_limit_alpha2_gamma0}};
  for (double g : {1e-2, 1e-3, 1e-4, -1e-4}) {
    const double e = E_gamma(2.0, g);
    rep.observe(std::abs(e - E_limit_alpha2_gamma0), e, E_limit_alpha2_gamma0, {{"gamma", g}});
  }
  try {
    (void)E_gamma(2.0, 0.0);
    rep.note = "E(2, 0) unexpectedly evaluated";
    rep.flagged = true;
  } catch (const SingularityError& e) {
    rep.skipped.push_back(std::string("gamma=0: ") + e.locus());
    rep.note = "removable value recorded separately, not substituted";
  }
  return rep.finalize();
}

struct AreaTableRow {
  double alpha, gamma, r;
  double quadrature, parseval, closed, m_pi_r2;
};

inline AreaTableRow area_table_row(double alpha, double gamma, double r) {
  const auto spec = ConcaveMapSpec::normalized(alpha, UnitModulusParameter(gamma));
  AreaTableRow row{alpha, gamma, r, 0, 0, 0, 0};
  row.quadrature = area_grid2d([&](cplx z) { return z_over_F_derivative(spec, z); }, r, {64, 512}).value;
  row.parseval = area_parseval(z_over_F_series(spec), r).value;
  row.closed = closed_area(alpha, spec.x, spec.b, r);
  row.m_pi_r2 = M_bound(alpha, spec.b).M * std::numbers::pi * r * r;
  return row;
}

/// Quadrature Delta(r, z/F) next to the closed form and M pi r^2. Never judged;
/// flagged when the quadrature exceeds M pi r^2.
inline VerificationReport area_table_report(double alpha, double gamma, double r) {
  VerificationReport rep;
  rep.claim_id = "area.bound_table." + format_double(alpha) + ".gamma_" + format_double(gamma) +
                 ".r_" + format_double(r);
  rep.kind = ClaimKind::informational;
  rep.tolerance = 0.0;
  try {
    const auto row = area_table_row(alpha, gamma, r);
    rep.grid_spec = {{"alpha", alpha},
                     {"gamma", gamma},
                     {"r", r},
                     {"quadrature", row.quadrature},
                     {"parseval", row.parseval},
                     {"closed_area", row.closed},
                     {"M_pi_r2", row.m_pi_r2},
                     {"dev_closed", detail::rel_err(row.quadrature, row.closed)},
                     {"dev_M", detail::rel_err(row.quadrature, row.m_pi_r2)}};
    rep.observe(row.quadrature / row.m_pi_r2, row.quadrature, row.m_pi_r2,
                {{"alpha", alpha}, {"gamma", gamma}, {"r", r}});
    rep.flagged = row.quadrature > row.m_pi_r2;
    if (rep.flagged) rep.note = "quadrature exceeds M pi r^2";
  } catch (const SingularityError& e) {
    rep.skipped.push_back(e.what());
    rep.note = "singular cell";
  }
  return rep.finalize();
}

inline std::vector<VerificationReport> run_area_suite(const GridSpec& grid) {
  grid.validate();
  const double pi = std::numbers::pi;
  std::vector<detail::Cell> cells;
  const std::size_t N = default_truncation_order;

  cells.push_back([=] { return detail::area_engine_agreement_report(grid.seed); });
  cells.push_back([=] {
    return detail::area_oracle_report(
        "area.z_over_koebe", TruncatedSeries::polynomial({1.0, -2.0, 1.0}, N),
        [=](double r) { return yamashita_max(YamashitaKind::z_over_f, r); }, grid.r_values, 1e-8);
  });
  cells.push_back([=] {
    return detail::area_oracle_report(
        "area.z_over_convex_extremal", TruncatedSeries::polynomial({1.0, -1.0}, N),
        [=](double r) { return pi * r * r; }, grid.r_values, 1e-10);
  });
  cells.push_back([=] {
    std::vector<double> radii;
    for (double r : grid.r_values) {
      if (r <= 0.75) radii.push_back(r);
    }
    std::vector<cplx> c(N + 1);
    for (std::size_t n = 0; n <= N; ++n) c[n] = static_cast<double>(n + 1);
    return detail::area_oracle_report(
        "area.koebe_over_z", TruncatedSeries(c),
        [=](double r) { return yamashita_max(YamashitaKind::f_over_z, r); }, radii, 1e-7,
        [=](double r) { return parseval_tail_bound(1.0, 1.0, N, r); });
  });

  for (double a : grid.schwarz_alphas) {
    for (double g : grid.schwarz_gammas) {
      cells.push_back([=] { return change_of_variables_report(a, g, grid.schwarz_t, grid.schwarz_r); });
    }
  }
  for (double a : grid.table_alphas) {
    cells.push_back([=] { return half_identity_report(a, grid.identity_gamma_count); });
    cells.push_back([=] { return decomposition_report(a, grid.identity_gamma_count); });
    cells.push_back([=] { return derivative_report(a); });
  }
  cells.push_back([=] {
    auto alphas = grid.table_alphas;
    alphas.push_back(2.0);
    return gamma0_endpoint_report(alphas);
  });
  for (double a : grid.table_alphas) {
    for (double g : grid.table_gammas) {
      if (g < 0.0) continue;  // |b| depends on |gamma| only
      const double b_abs = 1.0 / (2.0 * std::cos(g / 2.0) * a);
      cells.push_back([=] { return endpoint_maximum_report(a, b_abs); });
    }
  }
  cells.push_back([] { return alpha2_limit_report(); });
  for (double a : grid.table_alphas) {
    for (double g : grid.table_gammas) {
      for (double r : grid.table_r) cells.push_back([=] { return area_table_report(a, g, r); });
    }
  }
  return detail::run_cells(cells);
}

enum class Suite { lemmas, coefficients, geometry, area, all };

inline std::vector<VerificationReport> run_suite(Suite s, const GridSpec& grid) {
  std::vector<VerificationReport> out;
  const auto append = [&](std::vector<VerificationReport> v) {
    for (auto& r : v) out.push_back(std::move(r));
  };
  if (s == Suite::lemmas || s == Suite::all) append(run_lemma_suite(grid));
  if (s == Suite::coefficients || s == Suite::all) append(run_coefficient_suite(grid));
  if (s == Suite::geometry || s == Suite::all) append(run_geometry_suite(grid));
  if (s == Suite::area || s == Suite::all) append(run_area_suite(grid));
  return out;
}

/// True iff every judged (non-informational) report passes.
inline bool all_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (r.kind != ClaimKind::informational && !r.pass) return false;
  }
  return true;
}

}  // namespace concave
