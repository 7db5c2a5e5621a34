#pragma once

// Reference computations used only by the tests. They share no code path
// with the library beyond std::complex.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// Taylor coefficients c_0..c_n of f from M samples on |z| = rho (discrete
// Cauchy integral). Accurate when f is analytic on a disk larger than rho.
inline std::vector<cplx> taylor_by_sampling(const std::function<cplx(cplx)>& f, std::size_t n,
                                            double rho = 0.9, std::size_t m = 2048) {
  std::vector<cplx> samples(m);
  for (std::size_t k = 0; k < m; ++k) {
    samples[k] = f(std::polar(rho, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m)));
  }
  std::vector<cplx> c(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    cplx acc{0.0, 0.0};
    for (std::size_t k = 0; k < m; ++k) {
      const double ang = -2.0 * std::numbers::pi * static_cast<double>(j * k % m) / static_cast<double>(m);
      acc += samples[k] * std::polar(1.0, ang);
    }
    c[j] = acc / (static_cast<double>(m) * std::pow(rho, static_cast<double>(j)));
  }
  return c;
}

inline cplx central_difference(const std::function<cplx(cplx)>& f, cplx z, double h = 1e-6) {
  return (f(z + h) - f(z - h)) / (2.0 * h);
}

inline double central_difference(const std::function<double(double)>& f, double x, double h = 1e-6) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Adaptive-free composite Simpson on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, std::size_t n = 2000) {
  const double h = (b - a) / static_cast<double>(n);
  double s = f(a) + f(b);
  for (std::size_t i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i));
  return s * h / 3.0;
}

inline double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }
inline double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

}  // namespace oracle
