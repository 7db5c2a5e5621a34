#pragma once

// Area of g(D_r) counted with multiplicity,
//   Delta(r, g) = int int_{|z|<r} |g'(z)|^2 dsigma,
// by three independent engines (contour, coefficients, 2-D quadrature), and
// the closed-form quantities of the area bound for z/f over concave maps.

#include "concave/errors.hpp"
#include "concave/hypergeom.hpp"
#include "concave/quadrature.hpp"
#include "concave/series.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace concave {

template <class G>
concept ComplexMap = std::invocable<const G&, cplx> &&
                     std::convertible_to<std::invoke_result_t<const G&, cplx>, cplx>;

enum class AreaMethod { green, parseval, grid2d };

inline std::string_view to_string(AreaMethod m) {
  switch (m) {
    case AreaMethod::green: return "green";
    case AreaMethod::parseval: return "parseval";
    case AreaMethod::grid2d: return "grid2d";
  }
  return "unknown";
}

struct AreaResult {
  double value = 0.0;  // area, >= 0
  AreaMethod method = AreaMethod::green;
  std::size_t nodes = 0;
  double est_error = 0.0;
  double signed_value = 0.0;  // green: raw contour value before taking the magnitude
};

namespace detail {

inline void require_radius(double r, const char* who) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument(std::string(who) + ": r must lie in (0, 1)");
}

template <ComplexMap G, ComplexMap DG>
double green_raw(const G& g, const DG& dg, double r, std::size_t n) {
  const double h = 2.0 * std::numbers::pi / static_cast<double>(n);
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx z = std::polar(r, h * static_cast<double>(k));
    const cplx gz = g(z);
    if (std::abs(gz) < 1e-12) {
      throw std::domain_error("area_green: g vanishes on |z| = r near theta = " +
                              format_double(h * static_cast<double>(k)));
    }
    // |g|^2 Re(-z g'/g) = Re(-conj(g) z g')
    acc += std::real(-std::conj(gz) * z * cplx(dg(z)));
  }
  return 0.5 * h * acc;
}

}  // namespace detail

/// Contour form of the area: (1/2) int_0^{2 pi} |g|^2 Re(-z g'/g) dtheta on
/// |z| = r, trapezoid rule with n nodes. For a positively oriented image the
/// raw value is minus the area; the magnitude is returned and the raw value
/// kept in signed_value. est_error compares against n/2 nodes.
template <ComplexMap G, ComplexMap DG>
AreaResult area_green(const G& g, const DG& dg, double r, std::size_t n = 1024) {
  detail::require_radius(r, "area_green");
  if (n < 4) throw std::invalid_argument("area_green: need at least 4 nodes");
  const double raw = detail::green_raw(g, dg, r, n);
  const double coarse = detail::green_raw(g, dg, r, n / 2);
  return {std::abs(raw), AreaMethod::green, n, std::abs(raw - coarse), raw};
}

inline AreaResult area_green(const TruncatedSeries& g, double r, std::size_t n = 1024) {
  const TruncatedSeries dg = series_derivative(g);
  return area_green([&](cplx z) { return eval(g, z); }, [&](cplx z) { return eval(dg, z); }, r, n);
}

inline AreaResult area_parseval(const TruncatedSeries& g, double r) {
  const auto sum = dirichlet_parseval(g, r);
  return {sum.value, AreaMethod::parseval, g.order(), sum.tail_estimate, sum.value};
}

struct PolarGrid {
  std::size_t radial = 64;    // Gauss-Legendre nodes in rho
  std::size_t angular = 256;  // uniform nodes in theta (periodic trapezoid)
};

namespace detail {

template <ComplexMap DG>
double polar_sum(const DG& dg, double r, std::size_t nr, std::size_t nt) {
  const auto rule = quadrature::gauss_legendre(nr);
  const double h = 2.0 * std::numbers::pi / static_cast<double>(nt);
  double acc = 0.0;
  for (std::size_t i = 0; i < nr; ++i) {
    const double rho = 0.5 * r * (1.0 + rule.nodes[i]);
    double ring = 0.0;
    for (std::size_t k = 0; k < nt; ++k) {
      ring += std::norm(cplx(dg(std::polar(rho, h * (static_cast<double>(k) + 0.5)))));
    }
    acc += rule.weights[i] * rho * ring;
  }
  return 0.5 * r * h * acc;
}

}  // namespace detail

/// int int_{|z|<r} |g'|^2 dsigma on a polar tensor grid. Needs only g'.
template <ComplexMap DG>
AreaResult area_grid2d(const DG& dg, double r, PolarGrid grid = {}) {
  detail::require_radius(r, "area_grid2d");
  if (grid.radial < 2 || grid.angular < 4) {
    throw std::invalid_argument("area_grid2d: grid too coarse");
  }
  const double v = detail::polar_sum(dg, r, grid.radial, grid.angular);
  const double coarse = detail::polar_sum(dg, r, grid.radial / 2, grid.angular / 2);
  return {v, AreaMethod::grid2d, grid.radial * grid.angular, std::abs(v - coarse), v};
}

// --- closed forms ------------------------------------------------------------

enum class YamashitaKind { f_over_z, z_over_f };

/// Sharp maxima of Delta(r, f/z) and Delta(r, z/f) over the univalent class.
inline double yamashita_max(YamashitaKind kind, double r) {
  if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("yamashita_max: r must lie in (0, 1]");
  const double r2 = r * r;
  const double base = 2.0 * std::numbers::pi * r2 * (r2 + 2.0);
  if (kind == YamashitaKind::z_over_f) return base;
  if (r == 1.0) throw std::domain_error("yamashita_max: Delta(1, f/z) diverges");
  const double d = 1.0 - r2;
  return base / (d * d * d * d);
}

/// Arg(-conj x) in (-pi, pi], taken from gamma so that gamma = 0 lands on +pi.
inline double arg_neg_conj(const UnitModulusParameter& x) {
  const double g = x.gamma();
  return g >= 0.0 ? std::numbers::pi - g : -std::numbers::pi - g;
}

/// (-conj x)^alpha on the principal branch.
inline cplx neg_conj_power(double alpha, const UnitModulusParameter& x) {
  return std::polar(1.0, alpha * arg_neg_conj(x));
}

/// 1 - (-conj x)^alpha, written as -2i sin(t/2) e^{i t/2} with t = alpha Arg(-conj x)
/// to avoid cancellation when the power is close to 1.
inline cplx one_minus_neg_conj_power(double alpha, const UnitModulusParameter& x) {
  const double t = alpha * arg_neg_conj(x);
  const cplx d = cplx(0.0, -2.0 * std::sin(t / 2.0)) * std::polar(1.0, t / 2.0);
  if (std::abs(d) < 1e-12) {
    throw SingularityError("(-conj x)^alpha = 1", "alpha = " + format_double(alpha) +
                                                      ", gamma = " + format_double(x.gamma()));
  }
  return d;
}

/// Re(1 / (1 - (-conj x)^alpha)); equals 1/2 off the singular set.
inline double half_identity(double alpha, const UnitModulusParameter& x) {
  return std::real(1.0 / one_minus_neg_conj_power(alpha, x));
}

/// D(x) = 1 / ((1 + x)(1 - (-conj x)^alpha)).
inline cplx D_of_x(double alpha, const UnitModulusParameter& x) {
  const double half = half_identity(alpha, x);
  if (std::abs(half - 0.5) > 1e-9) {
    throw std::logic_error("D_of_x: Re(1/(1 - p)) = " + format_double(half) + ", expected 1/2");
  }
  return 1.0 / ((1.0 + x.x()) * one_minus_neg_conj_power(alpha, x));
}

/// (pi r^2 / (alpha |b|^2)) [(alpha - 1)/4 + Re D(x)].
inline double closed_area(double alpha, const UnitModulusParameter& x, cplx b, double r) {
  const double b2 = std::norm(b);
  if (!(b2 > 0.0)) throw std::invalid_argument("closed_area: b must be nonzero");
  return std::numbers::pi * r * r / (alpha * b2) *
         ((alpha - 1.0) / 4.0 + D_of_x(alpha, x).real());
}

namespace detail {

// u = (pi - |gamma|) alpha / 2, rejecting tan(u) = 0 and tan(u) = inf.
inline double e_gamma_angle(double alpha, double gamma) {
  if (!(std::abs(gamma) < std::numbers::pi)) {
    throw std::invalid_argument("E_gamma: |gamma| < pi required");
  }
  const double u = (std::numbers::pi - std::abs(gamma)) * alpha / 2.0;
  if (std::abs(std::sin(u)) < 1e-12) {
    throw SingularityError("tan((pi - gamma) alpha/2) = 0",
                           "alpha = " + format_double(alpha) + ", gamma = " + format_double(gamma));
  }
  if (std::abs(std::cos(u)) < 1e-12) {
    throw SingularityError("tan((pi - gamma) alpha/2) pole",
                           "alpha = " + format_double(alpha) + ", gamma = " + format_double(gamma));
  }
  return u;
}

}  // namespace detail

/// E(gamma) = tan(gamma/2) / (4 tan((pi - gamma) alpha/2)) for gamma >= 0,
/// extended evenly to gamma < 0.
inline double E_gamma(double alpha, double gamma) {
  const double u = detail::e_gamma_angle(alpha, gamma);
  return std::tan(std::abs(gamma) / 2.0) / (4.0 * std::tan(u)) + 0.0;  // no -0 at gamma = 0
}

/// Removable value of E at alpha = 2, gamma -> 0, where the formula is 0/0.
inline constexpr double E_limit_alpha2_gamma0 = -0.125;

/// dE/dgamma = (sin((pi - gamma) alpha) + alpha sin gamma)
///             / (16 cos^2(gamma/2) sin^2((pi - gamma) alpha/2)),  gamma >= 0;
/// odd extension for gamma < 0. At gamma = 0 this is the right derivative.
inline double E_prime(double alpha, double gamma) {
  const double u = detail::e_gamma_angle(alpha, gamma);
  const double g = std::abs(gamma);
  const double c = std::cos(g / 2.0);
  const double s = std::sin(u);
  const double v = (std::sin(2.0 * u) + alpha * std::sin(g)) / (16.0 * c * c * s * s);
  return gamma < 0.0 ? -v : v;
}

/// gamma_0 in [0, pi) from alpha and |b| in [1/(2 alpha), 1].
inline double gamma0(double alpha, double b_abs) {
  constexpr double tol = 1e-12;
  if (!(b_abs >= 1.0 / (2.0 * alpha) - tol && b_abs <= 1.0 + tol)) {
    throw std::invalid_argument("gamma0: |b| must lie in [1/(2 alpha), 1]");
  }
  const double ab2 = alpha * alpha * b_abs * b_abs;
  const double num = std::sqrt(std::max(0.0, 4.0 * ab2 - 1.0));
  const double c = 2.0 * ab2 - 1.0;
  const double t = std::atan2(num, std::abs(c));  // arctan(num/|c|), pi/2 when c = 0
  return c >= 0.0 ? std::numbers::pi - t : t;
}

struct MBound {
  double alpha = 0.0;
  double b_abs = 0.0;
  double gamma0 = 0.0;
  double E0_scan = 0.0;     // max of E over [-gamma0, gamma0], the returned basis of M
  double E0_gamma = 0.0;    // where the scan maximum sits
  std::optional<double> E_endpoint;  // E(gamma0); empty when singular
  double M = 0.0;
  std::vector<std::string> skipped;  // singular scan nodes
};

/// M = (1/(alpha |b|^2)) [(alpha - 1)/4 + 1/4 + E_0], E_0 = max_{|gamma| <= gamma0} E.
/// E_0 comes from a 4097-node scan plus golden-section refinement; the
/// endpoint value E(gamma0) is recorded alongside for comparison.
inline MBound M_bound(double alpha, cplx b, std::size_t scan_nodes = 4097) {
  if (scan_nodes < 3) throw std::invalid_argument("M_bound: need at least 3 scan nodes");
  MBound out;
  out.alpha = alpha;
  out.b_abs = std::abs(b);
  out.gamma0 = gamma0(alpha, out.b_abs);
  const double g0 = out.gamma0;

  try {
    out.E_endpoint = E_gamma(alpha, g0);
  } catch (const SingularityError& e) {
    out.skipped.push_back(std::string("endpoint: ") + e.what());
  }

  // E is even, so scanning [0, gamma0] covers [-gamma0, gamma0].
  const std::size_t half = scan_nodes / 2;
  std::vector<double> grid(half + 1);
  for (std::size_t i = 0; i <= half; ++i) {
    grid[i] = half == 0 ? 0.0 : g0 * static_cast<double>(i) / static_cast<double>(half);
  }
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  bool any = false;
  for (std::size_t i = 0; i <= half; ++i) {
    try {
      const double e = E_gamma(alpha, grid[i]);
      if (e > best) {
        best = e;
        best_i = i;
      }
      any = true;
    } catch (const SingularityError& e) {
      out.skipped.push_back("gamma = " + format_double(grid[i]) + ": " + e.locus());
    }
    if (g0 == 0.0) break;
  }
  if (!any) {
    throw SingularityError("E_gamma on [-gamma0, gamma0]",
                           "every scan node is singular (alpha = " + format_double(alpha) + ")");
  }
  out.E0_gamma = grid[best_i];

  if (g0 > 0.0) {
    double a = grid[best_i > 0 ? best_i - 1 : 0];
    double c = grid[std::min(best_i + 1, half)];
    const auto f = [&](double g) {
      try {
        return E_gamma(alpha, g);
      } catch (const SingularityError&) {
        return -std::numeric_limits<double>::infinity();
      }
    };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = c - inv_phi * (c - a), x2 = a + inv_phi * (c - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 100 && c - a > 1e-14; ++it) {
      if (f1 > f2) {
        c = x2;
        x2 = x1;
        f2 = f1;
        x1 = c - inv_phi * (c - a);
        f1 = f(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + inv_phi * (c - a);
        f2 = f(x2);
      }
    }
    if (f1 > best) {
      best = f1;
      out.E0_gamma = x1;
    }
    if (f2 > best) {
      best = f2;
      out.E0_gamma = x2;
    }
  }
  out.E0_scan = best;
  out.M = ((alpha - 1.0) / 4.0 + 0.25 + best) / (alpha * out.b_abs * out.b_abs);
  return out;
}

}  // namespace concave
