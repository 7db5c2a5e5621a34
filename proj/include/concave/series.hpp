#pragma once

// Truncated complex power series c_0 + c_1 z + ... + c_N z^N.
//
// Every operation truncates its result to the order of its inputs; nothing
// here tries to estimate a radius of convergence.

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace concave {

using cplx = std::complex<double>;

inline constexpr std::size_t default_truncation_order = 64;

class TruncatedSeries {
public:
  TruncatedSeries() : coeffs_(1, cplx{0.0, 0.0}) {}

  /// Zero series of order `order`.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, cplx{0.0, 0.0}) {}

  explicit TruncatedSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
      throw std::invalid_argument("TruncatedSeries: at least one coefficient required");
    }
    for (const auto& c : coeffs_) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw std::invalid_argument("TruncatedSeries: non-finite coefficient");
      }
    }
  }

  /// Polynomial given by its leading coefficients, zero-padded up to `order`.
  static TruncatedSeries polynomial(std::initializer_list<cplx> leading, std::size_t order) {
    if (leading.size() > order + 1) {
      throw std::invalid_argument("TruncatedSeries::polynomial: degree exceeds order");
    }
    std::vector<cplx> c(order + 1, cplx{0.0, 0.0});
    std::size_t i = 0;
    for (const auto& v : leading) c[i++] = v;
    return TruncatedSeries(std::move(c));
  }

  static TruncatedSeries constant(cplx value, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = value;
    return s;
  }

  /// The identity map z.
  static TruncatedSeries identity(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = 1.0;
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }

  const cplx& operator[](std::size_t n) const { return coeffs_.at(n); }
  cplx& operator[](std::size_t n) { return coeffs_.at(n); }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    require_same_order(a, b, "operator+");
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
  }

  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    require_same_order(a, b, "operator-");
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
  }

  friend TruncatedSeries operator*(cplx k, TruncatedSeries a) {
    for (auto& c : a.coeffs_) c *= k;
    return a;
  }

  static void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b,
                                 const char* what) {
    if (a.order() != b.order()) {
      throw std::invalid_argument(std::string(what) + ": mismatched truncation orders (" +
                                  std::to_string(a.order()) + " vs " +
                                  std::to_string(b.order()) + ")");
    }
  }

private:
  std::vector<cplx> coeffs_;
};

/// Cauchy product truncated to the common order.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries::require_same_order(a, b, "series_mul");
  const std::size_t n = a.order();
  std::vector<cplx> out(n + 1, cplx{0.0, 0.0});
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == cplx{0.0, 0.0}) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(std::move(out));
}

/// f(z)^alpha with the principal branch of log f(0).
///
/// Uses the first-order power recurrence
///   n f_0 g_n = sum_{k=1}^{n} ((alpha+1) k - n) f_k g_{n-k},
/// which follows from f g' = alpha f' g.
inline TruncatedSeries series_pow_real(const TruncatedSeries& f, double alpha) {
  const cplx f0 = f[0];
  if (f0 == cplx{0.0, 0.0}) {
    throw std::domain_error("series_pow_real: constant term is zero (branch point)");
  }
  if (alpha == 1.0) return f;
  const std::size_t n_max = f.order();
  std::vector<cplx> g(n_max + 1, cplx{0.0, 0.0});
  g[0] = alpha == 0.0 ? cplx{1.0, 0.0} : std::exp(alpha * std::log(f0));
  for (std::size_t n = 1; n <= n_max; ++n) {
    cplx acc{0.0, 0.0};
    for (std::size_t k = 1; k <= n; ++k) {
      const double weight = (alpha + 1.0) * static_cast<double>(k) - static_cast<double>(n);
      acc += weight * f[k] * g[n - k];
    }
    g[n] = acc / (static_cast<double>(n) * f0);
  }
  return TruncatedSeries(std::move(g));
}

/// f(phi(z)) for phi(0) = 0, by Horner's scheme in series arithmetic.
inline TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& phi) {
  TruncatedSeries::require_same_order(f, phi, "series_compose");
  if (phi[0] != cplx{0.0, 0.0}) {
    throw std::invalid_argument("series_compose: inner series must vanish at 0");
  }
  const std::size_t n = f.order();
  TruncatedSeries acc = TruncatedSeries::constant(f[n], n);
  for (std::size_t k = n; k-- > 0;) {
    acc = series_mul(acc, phi);
    acc[0] += f[k];
  }
  return acc;
}

/// f'(z); the result has order N-1 (order 0 for a constant of order 0).
inline TruncatedSeries series_derivative(const TruncatedSeries& f) {
  const std::size_t n = f.order();
  if (n == 0) return TruncatedSeries(0);
  std::vector<cplx> d(n, cplx{0.0, 0.0});
  for (std::size_t k = 1; k <= n; ++k) d[k - 1] = static_cast<double>(k) * f[k];
  return TruncatedSeries(std::move(d));
}

/// Horner evaluation of the truncated polynomial. Meaningful for |z| < 1.
inline cplx eval(const TruncatedSeries& f, cplx z) {
  const auto& c = f.coeffs();
  cplx acc{0.0, 0.0};
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return acc;
}

struct ParsevalSum {
  double value = 0.0;          // pi * sum_{n=1}^{N} n |c_n|^2 r^{2n}
  double tail_estimate = 0.0;  // extrapolated size of the omitted terms n > N
};

/// Area of g(D_r) with multiplicity via pi * sum n |c_n|^2 r^{2n}.
///
/// The tail estimate extrapolates the ratio of the last two nonzero terms; it
/// is a heuristic. Use parseval_tail_bound for a certified bound when a
/// coefficient growth bound is known.
inline ParsevalSum dirichlet_parseval(const TruncatedSeries& g, double r) {
  if (!(r > 0.0 && r <= 1.0)) {
    throw std::invalid_argument("dirichlet_parseval: r must lie in (0, 1]");
  }
  const double rho = r * r;
  ParsevalSum out;
  double last = 0.0, before_last = 0.0;
  double rho_n = 1.0;
  for (std::size_t n = 1; n <= g.order(); ++n) {
    rho_n *= rho;
    const double term = static_cast<double>(n) * std::norm(g[n]) * rho_n;
    out.value += term;
    if (term > 0.0) {
      before_last = last;
      last = term;
    }
  }
  out.value *= std::numbers::pi;
  // A vanishing top coefficient is read as a polynomial of lower degree.
  const bool top_nonzero = g.order() >= 1 && g[g.order()] != cplx{0.0, 0.0};
  if (top_nonzero && before_last > 0.0) {
    const double q = last / before_last;
    out.tail_estimate = q < 1.0 ? std::numbers::pi * last * q / (1.0 - q)
                                : std::numeric_limits<double>::infinity();
  }
  return out;
}

/// Certified bound on pi * sum_{n>N} n |c_n|^2 r^{2n} given |c_n| <= C (n+1)^p.
///
/// For n > N the term ratio is at most q = ((N+2)/(N+1))^{2p+1} r^2; when
/// q < 1 the tail is dominated by a geometric series starting at n = N+1.
inline double parseval_tail_bound(double growth_constant, double growth_power,
                                  std::size_t order, double r) {
  const double n1 = static_cast<double>(order + 1);
  const double q = std::pow((n1 + 1.0) / n1, 2.0 * growth_power + 1.0) * r * r;
  if (q >= 1.0) return std::numeric_limits<double>::infinity();
  const double first = n1 * growth_constant * growth_constant *
                       std::pow(n1 + 1.0, 2.0 * growth_power) * std::pow(r, 2.0 * n1);
  return std::numbers::pi * first / (1.0 - q);
}

}  // namespace concave
