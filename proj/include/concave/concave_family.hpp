#pragma once

// Members of the concave classes: the extremal maps
//   F(z) = -b ((1 + x z)/(1 - z))^alpha + b,      f = F o phi,
// the Herglotz-type sums over finite point-mass measures on the circle, the
// one-parameter family f_theta, and the geometric functionals built on them.

#include "concave/hypergeom.hpp"
#include "concave/report.hpp"
#include "concave/rng.hpp"
#include "concave/series.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace concave {

/// Finite probability measure on the unit circle.
struct DiscreteCircleMeasure {
  struct Atom {
    cplx y;
    double w;
  };
  std::vector<Atom> atoms;

  static constexpr double tolerance = 1e-12;

  static DiscreteCircleMeasure dirac(cplx y) { return {{{y, 1.0}}}; }

  /// `count` atoms at uniform random angles with uniform random weights, normalized.
  static DiscreteCircleMeasure random(std::size_t count, Rng& rng) {
    DiscreteCircleMeasure m;
    double total = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const double w = rng.uniform() + 1e-3;
      m.atoms.push_back({std::polar(1.0, angle), w});
      total += w;
    }
    for (auto& a : m.atoms) a.w /= total;
    return m;
  }

  void validate() const {
    if (atoms.empty()) throw std::invalid_argument("DiscreteCircleMeasure: no atoms");
    double total = 0.0;
    for (const auto& a : atoms) {
      if (!(a.w >= 0.0)) throw std::invalid_argument("DiscreteCircleMeasure: negative weight");
      if (std::abs(std::abs(a.y) - 1.0) > tolerance) {
        throw std::invalid_argument("DiscreteCircleMeasure: atom off the unit circle");
      }
      total += a.w;
    }
    if (std::abs(total - 1.0) > tolerance) {
      throw std::invalid_argument("DiscreteCircleMeasure: weights sum to " +
                                  format_double(total));
    }
  }
};

/// Schwarz map phi with phi(0) = 0, phi(1) = 1.
struct SchwarzSpec {
  enum class Kind { identity, quadratic };
  Kind kind = Kind::identity;
  double t = 0.0;  // quadratic: phi(z) = (1 - t) z + t z^2, univalent for t <= 1/3

  static SchwarzSpec identity() { return {}; }
  static SchwarzSpec quadratic(double t) {
    if (!(t >= 0.0 && t <= 1.0 / 3.0)) {
      throw std::invalid_argument("SchwarzSpec::quadratic: t must lie in [0, 1/3]");
    }
    return {Kind::quadratic, t};
  }

  cplx operator()(cplx z) const { return kind == Kind::identity ? z : (1.0 - t) * z + t * z * z; }
  cplx derivative(cplx z) const { return kind == Kind::identity ? cplx{1.0, 0.0} : (1.0 - t) + 2.0 * t * z; }
  double derivative_at_zero() const { return kind == Kind::identity ? 1.0 : 1.0 - t; }

  TruncatedSeries series(std::size_t order) const {
    if (kind == Kind::identity) return TruncatedSeries::identity(order);
    return TruncatedSeries::polynomial({0.0, 1.0 - t, t}, order);
  }
};

struct ConcaveMapSpec {
  double alpha = 2.0;
  UnitModulusParameter x = UnitModulusParameter::one();
  cplx b{-0.25, 0.0};
  std::optional<DiscreteCircleMeasure> measure;
  std::optional<SchwarzSpec> schwarz;

  /// Spec with f = F o phi normalized to f'(0) = 1: b = -1 / ((1 + x) alpha phi'(0)).
  static ConcaveMapSpec normalized(double alpha, UnitModulusParameter x,
                                   std::optional<SchwarzSpec> schwarz = std::nullopt,
                                   std::optional<DiscreteCircleMeasure> measure = std::nullopt) {
    ConcaveMapSpec s;
    s.alpha = alpha;
    s.x = x;
    s.schwarz = schwarz;
    s.measure = std::move(measure);
    const double phi0 = schwarz ? schwarz->derivative_at_zero() : 1.0;
    s.b = -1.0 / ((1.0 + x.x()) * alpha * phi0);
    s.validate();
    return s;
  }

  SchwarzSpec phi() const { return schwarz.value_or(SchwarzSpec::identity()); }

  /// 1/(2 alpha) <= |b| <= 1 and |1 + x| >= 1/alpha, up to 1e-12.
  void validate() const {
    constexpr double tol = 1e-12;
    if (!(alpha > 1.0 && alpha <= 2.0)) {
      throw std::invalid_argument("ConcaveMapSpec: alpha must lie in (1, 2]");
    }
    const double b_abs = std::abs(b);
    if (b_abs < 1.0 / (2.0 * alpha) - tol || b_abs > 1.0 + tol) {
      throw std::invalid_argument("ConcaveMapSpec: |b| = " + format_double(b_abs) +
                                  " outside [1/(2 alpha), 1]");
    }
    if (std::abs(1.0 + x.x()) < 1.0 / alpha - tol) {
      throw std::invalid_argument("ConcaveMapSpec: |1 + x| < 1/alpha");
    }
    if (measure) measure->validate();
  }
};

namespace detail {

// ((1 + x z)/(1 - z))^alpha on the principal branch. The Moebius image of the
// disk is a half-plane through 0 that avoids the negative axis for x != -1.
inline cplx moebius_power(cplx x, double alpha, cplx z) {
  if (z == cplx{1.0, 0.0}) throw std::domain_error("extremal map: pole at z = 1");
  const cplx w = (1.0 + x * z) / (1.0 - z);
  if (w == cplx{0.0, 0.0}) return {0.0, 0.0};
  if (w.real() < 0.0 && std::abs(w.imag()) <= 1e-15 * std::abs(w)) {
    throw std::domain_error("extremal map: base on the negative real axis (branch cut)");
  }
  return std::exp(alpha * std::log(w));
}

}  // namespace detail

/// F(z) = -b ((1 + x z)/(1 - z))^alpha + b, without the Schwarz map.
inline cplx extremal_F(const ConcaveMapSpec& spec, cplx z) {
  return -spec.b * (detail::moebius_power(spec.x.x(), spec.alpha, z) - 1.0);
}

inline cplx extremal_F_derivative(const ConcaveMapSpec& spec, cplx z) {
  const cplx x = spec.x.x();
  const cplx w = (1.0 + x * z) / (1.0 - z);
  return -spec.b * spec.alpha * std::exp((spec.alpha - 1.0) * std::log(w)) * (1.0 + x) /
         ((1.0 - z) * (1.0 - z));
}

/// f = F o phi with the spec's Schwarz map (identity when absent).
inline cplx concave_map(const ConcaveMapSpec& spec, cplx z) {
  return extremal_F(spec, spec.phi()(z));
}

inline cplx concave_map_derivative(const ConcaveMapSpec& spec, cplx z) {
  const auto phi = spec.phi();
  return extremal_F_derivative(spec, phi(z)) * phi.derivative(z);
}

/// Taylor series of F o phi.
inline TruncatedSeries concave_map_series(const ConcaveMapSpec& spec,
                                          std::size_t order = default_truncation_order) {
  std::vector<cplx> base(order + 1, 1.0 + spec.x.x());
  base[0] = 1.0;
  TruncatedSeries power = series_pow_real(TruncatedSeries(std::move(base)), spec.alpha);
  power[0] -= 1.0;
  const TruncatedSeries outer = (-spec.b) * power;
  return series_compose(outer, spec.phi().series(order));
}

/// f_theta(z) = (z - (1 - e^{i theta}) z^2 / 2) / (1 - z)^2.
inline cplx f_theta(double theta, cplx z) {
  if (z == cplx{1.0, 0.0}) throw std::domain_error("f_theta: pole at z = 1");
  const cplx e = std::polar(1.0, theta);
  return (z - 0.5 * (1.0 - e) * z * z) / ((1.0 - z) * (1.0 - z));
}

inline cplx f_theta_derivative(double theta, cplx z) {
  const cplx e = std::polar(1.0, theta);
  // d/dz [(z - c z^2)/(1-z)^2] = (1 + (1 - 2c) z) / (1 - z)^3, c = (1 - e)/2
  return (1.0 + e * z) / ((1.0 - z) * (1.0 - z) * (1.0 - z));
}

/// Series of f_theta assembled with series arithmetic: numerator times (1-z)^{-2}.
inline TruncatedSeries f_theta_series(double theta, std::size_t order = default_truncation_order) {
  const cplx e = std::polar(1.0, theta);
  const auto numerator = TruncatedSeries::polynomial({0.0, 1.0, -0.5 * (1.0 - e)}, order);
  const auto inverse_square =
      series_pow_real(TruncatedSeries::polynomial({1.0, -1.0}, order), -2.0);
  return series_mul(numerator, inverse_square);
}

/// Coefficients a_n = B_n(alpha, x) int y^{n-1} dmu(y) for n = 1..n_max,
/// returned as the series sum a_n z^n (a_0 = 0, a_1 = 1).
inline TruncatedSeries coeffs_from_measure(const ConcaveMapSpec& spec, std::size_t n_max) {
  if (!spec.measure) throw std::invalid_argument("coeffs_from_measure: spec has no measure");
  spec.measure->validate();
  TruncatedSeries a(n_max);
  if (n_max == 0) return a;
  a[1] = 1.0;  // zeroth moment of a probability measure, B_1 = 1
  std::vector<cplx> power(spec.measure->atoms.size(), cplx{1.0, 0.0});
  for (std::size_t n = 2; n <= n_max; ++n) {
    cplx moment{0.0, 0.0};
    for (std::size_t j = 0; j < power.size(); ++j) {
      const auto& atom = spec.measure->atoms[j];
      power[j] *= atom.y;
      moment += atom.w * power[j];
    }
    a[n] = coefficient_B(n, spec.alpha, spec.x) * moment;
  }
  return a;
}

/// (1/((1+x) alpha)) sum_j (w_j / y_j) [((1 + x y_j z)/(1 - y_j z))^alpha - 1].
inline cplx herglotz_eval(const ConcaveMapSpec& spec, cplx z) {
  if (!spec.measure) throw std::invalid_argument("herglotz_eval: spec has no measure");
  spec.measure->validate();
  const cplx x = spec.x.x();
  cplx acc{0.0, 0.0};
  for (const auto& atom : spec.measure->atoms) {
    const cplx yz = atom.y * z;
    if (std::abs(1.0 - yz) < 1e-14) {
      throw std::domain_error("herglotz_eval: z coincides with the pole of an atom");
    }
    acc += (atom.w / atom.y) * (detail::moebius_power(x, spec.alpha, yz) - 1.0);
  }
  return acc / ((1.0 + x) * spec.alpha);
}

/// Excluded arc around the prevertex z = 1 where the boundary runs off to infinity.
inline constexpr double prevertex_arc = 1e-3;

/// Distance from w to the boundary curve theta -> f(e^{i theta}),
/// theta in [eps, 2 pi - eps]: minimum over n_samples + 1 nested samples,
/// refined by golden-section search between the neighbours of the best sample.
inline double boundary_distance(const ConcaveMapSpec& spec, cplx w,
                                std::size_t n_samples = std::size_t{1} << 14) {
  if (n_samples < 2) throw std::invalid_argument("boundary_distance: need >= 2 samples");
  const double lo = prevertex_arc;
  const double span = 2.0 * std::numbers::pi - 2.0 * prevertex_arc;
  const auto dist = [&](double theta) {
    return std::abs(w - concave_map(spec, std::polar(1.0, theta)));
  };

  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i <= n_samples; ++i) {
    const double theta = lo + span * static_cast<double>(i) / static_cast<double>(n_samples);
    const double d = dist(theta);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }

  const double step = span / static_cast<double>(n_samples);
  double a = lo + step * static_cast<double>(best > 0 ? best - 1 : 0);
  double b = lo + step * static_cast<double>(std::min(best + 1, n_samples));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = dist(c), fd = dist(d);
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = dist(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = dist(d);
    }
  }
  return std::min({best_d, fc, fd});
}

/// d(f(a), boundary) / ((1 - |a|^2) |f'(a)|): the boundary distance measured
/// in the hyperbolic density of the image domain.
inline double hyperbolic_product(const ConcaveMapSpec& spec, cplx a,
                                 std::size_t n_samples = std::size_t{1} << 14) {
  if (!(std::abs(a) < 1.0)) throw std::invalid_argument("hyperbolic_product: |a| < 1 required");
  const double d = boundary_distance(spec, concave_map(spec, a), n_samples);
  return d / ((1.0 - std::norm(a)) * std::abs(concave_map_derivative(spec, a)));
}

// --- coefficient bounds ----------------------------------------------------

/// A set of measure-backed specs sharing alpha.
struct CoefficientFamily {
  std::string label;
  double alpha = 2.0;
  std::vector<ConcaveMapSpec> members;
};

/// The extremal member mu = delta_1, x = 1.
inline CoefficientFamily extremal_family(double alpha) {
  return {"extremal", alpha,
          {ConcaveMapSpec::normalized(alpha, UnitModulusParameter::one(), std::nullopt,
                                      DiscreteCircleMeasure::dirac(1.0))}};
}

/// `trials` members with random `atoms`-point measures and random admissible x.
inline CoefficientFamily random_measure_family(double alpha, std::size_t trials,
                                               std::size_t atoms, std::uint64_t seed) {
  Rng rng(seed);
  CoefficientFamily fam{"random_measures", alpha, {}};
  const double gamma_cap = 2.0 * std::acos(1.0 / (2.0 * alpha));  // |1 + x| >= 1/alpha
  for (std::size_t i = 0; i < trials; ++i) {
    const double g = rng.uniform(-gamma_cap, gamma_cap);
    fam.members.push_back(ConcaveMapSpec::normalized(
        alpha, UnitModulusParameter(std::clamp(g, -std::numbers::pi + 1e-6, std::numbers::pi - 1e-6)),
        std::nullopt, DiscreteCircleMeasure::random(atoms, rng)));
  }
  return fam;
}

/// |a_n| <= A_n(alpha, 1) / (2 alpha) over the family and 2 <= n <= n_max.
/// As an equality claim the ratio must sit at 1 for every n (extremal members).
inline VerificationReport coefficient_bound_report(const CoefficientFamily& family,
                                                   std::size_t n_max, ClaimKind kind,
                                                   double tolerance = 1e-10) {
  VerificationReport rep;
  rep.claim_id = std::string("concave.coefficient_bound.") + family.label +
                 (kind == ClaimKind::equality ? ".sharp" : "");
  rep.kind = kind;
  rep.tolerance = tolerance;
  rep.grid_spec = {{"alpha", family.alpha}, {"members", family.members.size()}, {"n_max", n_max}};
  const auto one = UnitModulusParameter::one();
  for (std::size_t m = 0; m < family.members.size(); ++m) {
    const auto a = coeffs_from_measure(family.members[m], n_max);
    for (std::size_t n = 2; n <= n_max; ++n) {
      const double bound = coefficient_A(n, family.alpha, one).real() / (2.0 * family.alpha);
      const double ratio = std::abs(a[n]) / bound;
      rep.observe(kind == ClaimKind::equality ? std::abs(ratio - 1.0) : ratio, std::abs(a[n]),
                  bound, {{"member", m}, {"n", n}});
    }
  }
  rep.finalize();
  return rep;
}

/// |a_n - (n+1)/2| <= (n-1)/2 over the family (bound), or = (n-1)/2 (equality,
/// relative deviation), for 2 <= n <= n_max.
inline VerificationReport shifted_bound_report(const std::string& label,
                                               const std::vector<TruncatedSeries>& members,
                                               std::size_t n_max, ClaimKind kind,
                                               double tolerance = 1e-10) {
  VerificationReport rep;
  rep.claim_id = "concave.shifted_coefficient_bound." + label;
  rep.kind = kind;
  rep.tolerance = tolerance;
  rep.grid_spec = {{"members", members.size()}, {"n_max", n_max}};
  for (std::size_t m = 0; m < members.size(); ++m) {
    for (std::size_t n = 2; n <= n_max; ++n) {
      const double nn = static_cast<double>(n);
      const double dev = std::abs(members[m][n] - 0.5 * (nn + 1.0));
      const double ref = 0.5 * (nn - 1.0);
      const double ratio = kind == ClaimKind::equality ? std::abs(dev - ref) / ref : dev / ref;
      rep.observe(ratio, dev, ref, {{"member", m}, {"n", n}});
    }
  }
  rep.finalize();
  return rep;
}

}  // namespace concave
