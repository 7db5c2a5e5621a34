#pragma once

// Gauss-Jacobi rules for integrals of the form
//   int_{-1}^{1} (1-x)^a (1+x)^b u(x) dx,   a, b > -1.
// Nodes come from the Golub-Welsch eigenproblem and are then polished with
// Newton's method on P_n^{(a,b)}; weights use the closed-form expression in
// terms of P_n', which is more accurate than squared eigenvector components.

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace concave::quadrature {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

namespace detail {

// (P_n(x), P_n'(x)) for the Jacobi polynomial with parameters (a, b).
inline std::pair<double, double> jacobi_with_derivative(std::size_t n, double a, double b,
                                                        double x) {
  double p_prev = 1.0;
  double p = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
  if (n == 0) return {1.0, 0.0};
  for (std::size_t k = 2; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    const double s = 2.0 * kk + a + b;
    const double c1 = 2.0 * kk * (kk + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
    const double c3 = 2.0 * (kk + a - 1.0) * (kk + b - 1.0) * s;
    const double next = (c2 * p - c3 * p_prev) / c1;
    p_prev = p;
    p = next;
  }
  const double nn = static_cast<double>(n);
  const double s = 2.0 * nn + a + b;
  const double dp = (nn * ((a - b) - s * x) * p + 2.0 * (nn + a) * (nn + b) * p_prev) /
                    (s * (1.0 - x * x));
  return {p, dp};
}

}  // namespace detail

inline Rule gauss_jacobi(std::size_t n, double a, double b) {
  if (n == 0) throw std::invalid_argument("gauss_jacobi: need at least one node");
  if (!(a > -1.0 && b > -1.0)) {
    throw std::invalid_argument("gauss_jacobi: exponents must exceed -1");
  }
  const double ab = a + b;

  Eigen::VectorXd diag(static_cast<Eigen::Index>(n));
  Eigen::VectorXd sub(static_cast<Eigen::Index>(n > 1 ? n - 1 : 1));
  for (std::size_t k = 0; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double s = 2.0 * kk + ab;
    diag(static_cast<Eigen::Index>(k)) =
        (k == 0) ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (std::size_t k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double s = 2.0 * kk + ab;
    double v;
    if (k == 1) {
      v = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      v = 4.0 * kk * (kk + a) * (kk + b) * (kk + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(static_cast<Eigen::Index>(k - 1)) = std::sqrt(v);
  }

  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = diag(0);
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    for (std::size_t i = 0; i < n; ++i) {
      rule.nodes[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    }
  }

  const double nn = static_cast<double>(n);
  const double log_const = std::lgamma(nn + a + 1.0) + std::lgamma(nn + b + 1.0) -
                           std::lgamma(nn + ab + 1.0) - std::lgamma(nn + 1.0) +
                           (ab + 1.0) * std::log(2.0);
  for (std::size_t i = 0; i < n; ++i) {
    double x = rule.nodes[i];
    for (int it = 0; it < 3; ++it) {
      const auto [p, dp] = detail::jacobi_with_derivative(n, a, b, x);
      const double step = p / dp;
      if (!std::isfinite(step)) break;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const auto [p, dp] = detail::jacobi_with_derivative(n, a, b, x);
    (void)p;
    rule.nodes[i] = x;
    rule.weights[i] = std::exp(log_const) / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

inline Rule gauss_legendre(std::size_t n) { return gauss_jacobi(n, 0.0, 0.0); }

/// Rule for int_0^1 t^p (1-t)^q u(t) dt, nodes in (0, 1).
inline Rule gauss_jacobi_unit(std::size_t n, double p, double q) {
  Rule r = gauss_jacobi(n, q, p);
  const double scale = std::pow(2.0, -(p + q + 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    r.nodes[i] = 0.5 * (1.0 + r.nodes[i]);
    r.weights[i] *= scale;
  }
  return r;
}

}  // namespace concave::quadrature
