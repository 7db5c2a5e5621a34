#include "concave/area.hpp"
#include "concave/concave_family.hpp"
#include "concave/verify.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace concave;
constexpr double pi = std::numbers::pi;

TEST(Green, Identity) {
  const auto r = area_green([](cplx z) { return z; }, [](cplx) { return cplx(1.0); }, 0.6, 64);
  EXPECT_NEAR(r.value, pi * 0.36, 1e-14);
  EXPECT_LT(r.signed_value, 0.0);
  EXPECT_EQ(r.method, AreaMethod::green);
}

TEST(Green, KoebeQuotientAndConvexExtremal) {
  const auto k = area_green(TruncatedSeries::polynomial({1.0, -2.0, 1.0}, 8), 0.5);
  EXPECT_NEAR(k.value, 9.0 * pi / 8.0, 1e-13);
  const auto j = area_green(TruncatedSeries::polynomial({1.0, -1.0}, 8), 0.7);
  EXPECT_NEAR(j.value, pi * 0.49, 1e-13);
}

TEST(Green, RejectsZeroOnContour) {
  EXPECT_THROW(area_green([](cplx z) { return z - 0.5; }, [](cplx) { return cplx(1.0); }, 0.5, 16),
               std::domain_error);
  EXPECT_THROW(area_green([](cplx z) { return z; }, [](cplx) { return cplx(1.0); }, 1.0, 16),
               std::invalid_argument);
}

TEST(Grid2d, ConstantAndKoebe) {
  const cplx c(1.5, -2.0);
  EXPECT_NEAR(area_grid2d([c](cplx) { return c; }, 0.3).value, std::norm(c) * pi * 0.09, 1e-13);
  EXPECT_NEAR(area_grid2d([](cplx z) { return -2.0 * (1.0 - z); }, 0.5).value, 9.0 * pi / 8.0, 1e-13);
}

TEST(Grid2d, MatchesIndependentSimpsonIntegral) {
  // |g'|^2 for g' = 1/(1 - z/2): radial-angular Simpson as the oracle
  const auto dg = [](cplx z) { return 1.0 / (1.0 - 0.5 * z); };
  const double r = 0.8;
  const double ref = oracle::simpson(
      [&](double rho) {
        return rho * oracle::simpson([&](double t) { return std::norm(dg(std::polar(rho, t))); }, 0.0, 2 * pi, 400);
      },
      0.0, r, 400);
  EXPECT_LT(oracle::rel(area_grid2d(dg, r).value, ref), 1e-9);
}

TEST(Engines, AgreeOnRandomPolynomials) {
  Rng rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    TruncatedSeries g(12);
    for (std::size_t k = 0; k <= 8; ++k) g[k] = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
    g[0] += 10.0;
    const auto dg = series_derivative(g);
    for (double r : {0.25, 0.5, 0.75}) {
      const double p = area_parseval(g, r).value;
      EXPECT_LT(oracle::rel(area_green(g, r).value, p), 1e-10);
      EXPECT_LT(oracle::rel(area_grid2d([&](cplx z) { return eval(dg, z); }, r).value, p), 1e-10);
    }
  }
}

TEST(Yamashita, ClosedForms) {
  EXPECT_NEAR(yamashita_max(YamashitaKind::z_over_f, 1.0), 6.0 * pi, 1e-14);
  EXPECT_NEAR(yamashita_max(YamashitaKind::z_over_f, 0.5), 9.0 * pi / 8.0, 1e-14);
  // (1 - r^2)^4 = 81/256 at r = 1/2
  EXPECT_NEAR(yamashita_max(YamashitaKind::f_over_z, 0.5), (9.0 * pi / 8.0) / (81.0 / 256.0), 1e-12);
  EXPECT_THROW(yamashita_max(YamashitaKind::f_over_z, 1.0), std::domain_error);
}

TEST(ClosedForms, DOfX) {
  const UnitModulusParameter x(pi / 2.0);
  // -conj(i) = i, so the power is e^{i 1.5 pi/2}
  const cplx want = 1.0 / ((1.0 + cplx(0.0, 1.0)) * (1.0 - std::exp(cplx(0.0, 0.75 * pi))));
  EXPECT_LT(oracle::rel(D_of_x(1.5, x), want), 1e-15);
  EXPECT_NEAR(half_identity(1.5, x), 0.5, 1e-15);
  EXPECT_THROW(D_of_x(2.0, UnitModulusParameter::one()), SingularityError);
  try {
    D_of_x(2.0, UnitModulusParameter::one());
  } catch (const SingularityError& e) {
    EXPECT_FALSE(e.locus().empty());
  }
}

TEST(ClosedForms, DecompositionAndE) {
  EXPECT_NEAR(D_of_x(1.5, UnitModulusParameter(pi / 4)).real() - 0.25, E_gamma(1.5, pi / 4), 1e-15);
  EXPECT_EQ(E_gamma(1.5, 0.0), 0.0);
  EXPECT_NEAR(E_gamma(1.5, pi / 2), std::tan(pi / 4) / (4.0 * std::tan(3.0 * pi / 8.0)), 1e-15);
  EXPECT_EQ(E_gamma(1.8, -pi / 3), E_gamma(1.8, pi / 3));
  EXPECT_THROW(E_gamma(1.5, pi / 3), SingularityError);  // tan(pi/2)
  EXPECT_THROW(E_gamma(2.0, 0.0), SingularityError);
  EXPECT_NEAR(E_gamma(2.0, 1e-4), E_limit_alpha2_gamma0, 1e-8);
}

TEST(ClosedForms, EPrime) {
  const auto e = [](double g) { return E_gamma(1.5, g); };
  EXPECT_NEAR(E_prime(1.5, 0.4), oracle::central_difference(e, 0.4), 1e-6);
  EXPECT_NEAR(E_prime(1.5, 0.0), std::sin(1.5 * pi) / (16.0 * std::pow(std::sin(0.75 * pi), 2)), 1e-15);
  EXPECT_EQ(E_prime(1.7, -0.6), -E_prime(1.7, 0.6));
}

TEST(ClosedForms, Gamma0) {
  EXPECT_NEAR(gamma0(1.5, 1.0 / 3.0), 0.0, 1e-12);
  EXPECT_NEAR(gamma0(1.5, 1.0 / (1.5 * std::sqrt(2.0))), pi / 2.0, 1e-12);
  EXPECT_NEAR(gamma0(2.0, 1.0), pi - std::atan(std::sqrt(15.0) / 7.0), 1e-14);
  EXPECT_THROW(gamma0(1.5, 0.2), std::invalid_argument);
  EXPECT_THROW(gamma0(1.5, 1.2), std::invalid_argument);
  // normalized b puts gamma0 at |gamma|
  for (double g : {0.3, 1.0, 2.0}) EXPECT_NEAR(gamma0(1.6, 1.0 / (1.6 * 2.0 * std::cos(g / 2))), g, 1e-12);
}

TEST(ClosedForms, MBound) {
  const auto m = M_bound(1.5, 1.0 / 3.0);
  EXPECT_EQ(m.gamma0, 0.0);
  EXPECT_EQ(m.E0_scan, 0.0);
  EXPECT_NEAR(m.M, 2.25, 1e-14);
  for (double b : {0.4, 0.5, 0.8}) {
    const auto mb = M_bound(1.75, b);
    ASSERT_TRUE(mb.E_endpoint.has_value());
    EXPECT_GE(mb.E0_scan, *mb.E_endpoint - 1e-12);
  }
}

TEST(ClosedForms, ClosedAreaScalesWithRSquared) {
  const UnitModulusParameter x(pi / 2);
  const cplx b = -1.0 / ((1.0 + x.x()) * 1.5);
  EXPECT_NEAR(closed_area(1.5, x, b, 0.5) / closed_area(1.5, x, b, 0.25), 4.0, 1e-14);
}

TEST(ChangeOfVariables, BothSidesAgree) {
  const auto r = change_of_variables_report(1.5, 0.4, {0.2}, 0.5);
  EXPECT_TRUE(r.pass) << r.worst_ratio;
}

TEST(ZOverF, SeriesMatchesPointwise) {
  const auto s = ConcaveMapSpec::normalized(1.3, UnitModulusParameter(-0.7));
  const auto q = z_over_F_series(s);
  for (cplx w : {cplx(0.3, 0.2), cplx(-0.5, 0.1)}) {
    EXPECT_LT(oracle::rel(eval(q, w), w / extremal_F(s, w)), 1e-12);
    EXPECT_LT(oracle::rel(eval(series_derivative(q), w), z_over_F_derivative(s, w)), 1e-10);
  }
}
