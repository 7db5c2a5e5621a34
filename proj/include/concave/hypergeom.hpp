#pragma once

// Gauss hypergeometric function for the terminating case, an Euler-integral
// cross-check, and the coefficient polynomials
//
//   ((1 + x z) / (1 - z))^alpha = 1 + sum_{n>=1} A_n(alpha, x) z^n,
//   A_n(alpha, x) = alpha (1 + x) B_n(alpha, x),
//   B_n(alpha, x) = F(1 - n, 1 - alpha; 2; 1 + x),      |x| = 1, x != -1.

#include "concave/quadrature.hpp"
#include "concave/report.hpp"
#include "concave/series.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace concave {

/// Boundary parameter x = e^{i gamma}; gamma stays inside (-pi, pi) with a
/// margin so that x = -1 is never represented.
class UnitModulusParameter {
public:
  static constexpr double exclusion = 1e-9;

  explicit UnitModulusParameter(double gamma) : gamma_(gamma) {
    if (!std::isfinite(gamma) || std::abs(gamma) >= std::numbers::pi - exclusion) {
      throw std::invalid_argument("UnitModulusParameter: |gamma| must be < pi - 1e-9, got " +
                                  format_double(gamma));
    }
  }

  static UnitModulusParameter one() { return UnitModulusParameter(0.0); }

  double gamma() const noexcept { return gamma_; }
  cplx x() const noexcept { return gamma_ == 0.0 ? cplx{1.0, 0.0} : std::polar(1.0, gamma_); }

private:
  double gamma_;
};

/// Uniform grid of `count` angles over [-(pi - margin), pi - margin].
inline std::vector<double> uniform_gamma_grid(std::size_t count, double margin = 1e-3) {
  if (count == 0) return {};
  if (!(margin >= UnitModulusParameter::exclusion)) {
    throw std::invalid_argument("uniform_gamma_grid: margin must exclude x = -1");
  }
  const double hi = std::numbers::pi - margin;
  if (count == 1) return {0.0};
  std::vector<double> g(count);
  for (std::size_t i = 0; i < count; ++i) {
    g[i] = -hi + 2.0 * hi * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return g;
}

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), (a)_0 = 1.
template <class T>
T pochhammer(T a, std::size_t n) {
  T p = T(1);
  for (std::size_t k = 0; k < n; ++k) p *= a + T(static_cast<double>(k));
  return p;
}

/// F(-m, b; c; z) as the exact finite sum of m + 1 terms.
///
/// c = -j with j < m is a pole; c = -j with j >= m is allowed, since the
/// numerator factor (-m)_k vanishes before (c)_k does.
template <class T>
T hyp2f1_terminating(std::size_t m, T b, T c, T z) {
  if (std::imag(std::complex<double>(c)) == 0.0) {
    const double cr = std::real(std::complex<double>(c));
    if (cr <= 0.0 && cr == std::round(cr) && static_cast<double>(m) > -cr) {
      throw std::domain_error("hyp2f1_terminating: c = " + format_double(cr) +
                              " is a pole for m = " + std::to_string(m));
    }
  }
  T sum = T(1);
  T term = T(1);
  const double md = static_cast<double>(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double kd = static_cast<double>(k);
    term *= (T(kd - md) * (b + T(kd))) / ((c + T(kd)) * T(kd + 1.0)) * z;
    sum += term;
  }
  return sum;
}

/// F(a, b; c; z) from the Euler integral
///   Gamma(c)/(Gamma(b) Gamma(c-b)) int_0^1 t^{b-1} (1-t)^{c-b-1} (1-tz)^{-a} dt
/// with a Gauss-Jacobi rule carrying the endpoint singularities exactly.
///
/// For -1 < b < 0 (and c - b > 1) the integral is continued analytically by
/// one integration by parts:
///   int t^{b-1} h dt = -(1/b) int t^b h'(t) dt,  h = (1-t)^{c-b-1} (1-tz)^{-a}.
inline cplx hyp2f1_euler(cplx a, double b, double c, cplx z, std::size_t nodes = 256) {
  if (z.imag() == 0.0 && z.real() >= 1.0) {
    throw std::domain_error("hyp2f1_euler: z lies on the branch cut [1, inf)");
  }
  const auto u = [&](double t) { return std::exp(-a * std::log(1.0 - t * z)); };
  const double prefactor = std::tgamma(c) / (std::tgamma(b) * std::tgamma(c - b));

  if (b > 0.0 && c - b > 0.0) {
    const auto rule = quadrature::gauss_jacobi_unit(nodes, b - 1.0, c - b - 1.0);
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < nodes; ++i) acc += rule.weights[i] * u(rule.nodes[i]);
    return prefactor * acc;
  }
  if (b > -1.0 && b < 0.0 && c - b > 1.0) {
    const auto rule = quadrature::gauss_jacobi_unit(nodes, b, c - b - 2.0);
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < nodes; ++i) {
      const double t = rule.nodes[i];
      const cplx ut = u(t);
      const cplx dut = a * z * ut / (1.0 - t * z);
      acc += rule.weights[i] * ((1.0 - t) * dut - (c - b - 1.0) * ut);
    }
    return -prefactor * acc / b;
  }
  throw std::invalid_argument("hyp2f1_euler: need c > b > 0, or -1 < b < 0 with c - b > 1");
}

/// B_n(alpha, x) by the direct terminating sum at argument 1 + x. Loses
/// accuracy for large n (terms grow like 3^n); kept as a cross-check.
inline cplx coefficient_B_direct(std::size_t n, double alpha, const UnitModulusParameter& x) {
  if (n == 0) throw std::invalid_argument("coefficient_B_direct: n >= 1 required");
  return hyp2f1_terminating<cplx>(n - 1, 1.0 - alpha, 2.0, 1.0 + x.x());
}

/// B_n(alpha, x) = F(1-n, 1-alpha; 2; 1+x).
///
/// Evaluated through the terminating connection formula
///   F(-m, b; c; z) = (c-b)_m / (c)_m  F(-m, b; b-c-m+1; 1-z),
/// which moves the argument to -x on the unit circle where the sum is well
/// conditioned: B_n = (1+alpha)_{n-1}/n!  F(1-n, 1-alpha; 1-alpha-n; -x).
inline cplx coefficient_B(std::size_t n, double alpha, const UnitModulusParameter& x) {
  if (n == 0) throw std::invalid_argument("coefficient_B: n >= 1 required");
  if (n == 1) return {1.0, 0.0};
  double scale = 1.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    scale *= (1.0 + alpha + static_cast<double>(k)) / static_cast<double>(k + 2);
  }
  const double c = 1.0 - alpha - static_cast<double>(n);
  return scale * hyp2f1_terminating<cplx>(n - 1, 1.0 - alpha, c, -x.x());
}

/// A_n(alpha, x) = alpha (1 + x) F(1-n, 1-alpha; 2; 1+x).
inline cplx coefficient_A(std::size_t n, double alpha, const UnitModulusParameter& x) {
  return alpha * (1.0 + x.x()) * coefficient_B(n, alpha, x);
}

/// Sweep of |B_n(alpha, x)| / |B_n(alpha, 1)| over n <= n_max and the grid.
/// The claim holds when the worst ratio stays below 1 + tolerance.
inline VerificationReport domination_check(double alpha, std::size_t n_max,
                                           const std::vector<double>& gamma_grid,
                                           double tolerance = 1e-12) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.claim_id = alpha > 1.0 ? "hypergeom.domination.alpha_above_1"
                             : "hypergeom.domination.alpha_below_1";
  rep.kind = ClaimKind::bound;
  rep.tolerance = tolerance;
  rep.grid_spec = {{"alpha", alpha},
                   {"n_max", n_max},
                   {"gamma_count", gamma_grid.size()},
                   {"gamma_min", gamma_grid.empty() ? 0.0 : gamma_grid.front()},
                   {"gamma_max", gamma_grid.empty() ? 0.0 : gamma_grid.back()}};

  if (alpha == 1.0) {
    rep.observe(1.0, 1.0, 1.0, {{"alpha", alpha}});
    rep.note = "degenerate: B_n(1, x) = 1 identically";
    rep.finalize();
    return rep;
  }
  if (!(alpha > -1.0 && alpha <= 2.0)) {
    throw std::invalid_argument("domination_check: alpha must lie in (-1, 1) or (1, 2]");
  }

  const auto one = UnitModulusParameter::one();
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double ref = std::abs(coefficient_B(n, alpha, one));
    for (double g : gamma_grid) {
      const double val = std::abs(coefficient_B(n, alpha, UnitModulusParameter(g)));
      const double ratio = ref > 0.0 ? val / ref : (val > 0.0 ? INFINITY : 1.0);
      rep.observe(ratio, val, ref, {{"n", n}, {"gamma", g}});
    }
  }
  rep.finalize();
  rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

/// Sweep of |(1+x)^{-t} A_n(alpha t, x)| / (2^{-t} A_n(alpha t, 1)) for the
/// sampled t with 0 < alpha t < 1.
inline VerificationReport scaling_check(double alpha, const std::vector<double>& t_values,
                                        std::size_t n_max, const std::vector<double>& gamma_grid,
                                        double tolerance = 1e-12) {
  VerificationReport rep;
  rep.claim_id = "hypergeom.scaled_domination";
  rep.kind = ClaimKind::bound;
  rep.tolerance = tolerance;
  rep.grid_spec = {{"alpha", alpha},
                   {"t_values", t_values},
                   {"n_max", n_max},
                   {"gamma_count", gamma_grid.size()}};
  const auto one = UnitModulusParameter::one();
  for (double t : t_values) {
    const double beta = alpha * t;
    if (!(beta > 0.0 && beta < 1.0)) {
      rep.skipped.push_back("t=" + format_double(t) + ": alpha t outside (0, 1)");
      continue;
    }
    for (std::size_t n = 1; n <= n_max; ++n) {
      const double ref = std::pow(2.0, -t) * coefficient_A(n, beta, one).real();
      for (double g : gamma_grid) {
        const UnitModulusParameter x(g);
        const double val = std::pow(std::abs(1.0 + x.x()), -t) * std::abs(coefficient_A(n, beta, x));
        rep.observe(val / ref, val, ref, {{"t", t}, {"n", n}, {"gamma", g}});
      }
    }
  }
  rep.finalize();
  return rep;
}

}  // namespace concave
