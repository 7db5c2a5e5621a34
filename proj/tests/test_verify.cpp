#include "concave/verify.hpp"

#include <gtest/gtest.h>

using namespace concave;

namespace {

GridSpec small_grid() {
  GridSpec g;
  g.alpha_values = {1.5, 2.0};
  g.gamma_count = 16;
  g.n_max = 10;
  g.trials = 5;
  g.distance_samples = 512;
  return g;
}

}  // namespace

TEST(GridSpec, Validation) {
  GridSpec g;
  g.n_max = 65;
  EXPECT_THROW(g.validate(), std::invalid_argument);
  g = GridSpec{};
  g.r_values = {1.0};
  EXPECT_THROW(g.validate(), std::invalid_argument);
  g = GridSpec{};
  g.alpha_values = {2.5};
  EXPECT_THROW(g.validate(), std::invalid_argument);
}

TEST(Suites, LemmaSuiteOneReportPerLemmaAndAlpha) {
  const auto r = run_lemma_suite(small_grid());
  ASSERT_EQ(r.size(), 4u);  // domination x2, scaled domination x2
  EXPECT_EQ(r[0].claim_id, "hypergeom.domination.alpha_above_1.1.5");
  EXPECT_TRUE(r[0].pass);
  EXPECT_TRUE(r[1].pass);
}

TEST(Suites, FirstCoefficientIsTrivial) {
  auto g = small_grid();
  g.alpha_values = {-0.5, 0.5, 1.0, 1.5};
  g.n_max = 1;
  for (const auto& r : run_lemma_suite(g)) {
    if (r.claim_id.rfind("hypergeom.domination", 0) == 0) EXPECT_TRUE(r.pass) << r.claim_id;
  }
}

TEST(Suites, AlphaOneIsDegeneratePass) {
  auto g = small_grid();
  g.alpha_values = {1.0};
  const auto r = run_lemma_suite(g);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(r[0].pass);
  EXPECT_FALSE(r[0].note.empty());
}

TEST(Suites, Deterministic) {
  auto g = small_grid();
  g.seed = 99;
  const auto a = to_json_text(run_suite(Suite::coefficients, g));
  const auto b = to_json_text(run_suite(Suite::coefficients, g));
  EXPECT_EQ(a, b);
  g.seed = 100;
  EXPECT_NE(a, to_json_text(run_suite(Suite::coefficients, g)));
}

TEST(Suites, AreaTableIsInformational) {
  const auto reports = run_area_suite(small_grid());
  std::size_t table = 0;
  for (const auto& r : reports) {
    if (r.claim_id.rfind("area.bound_table.", 0) == 0) {
      ++table;
      EXPECT_EQ(r.kind, ClaimKind::informational);
      EXPECT_TRUE(r.pass);
      EXPECT_TRUE(r.grid_spec.contains("closed_area"));
    } else {
      if (r.kind != ClaimKind::informational) EXPECT_TRUE(r.pass) << r.claim_id;
    }
  }
  EXPECT_EQ(table, 24u);
  EXPECT_TRUE(all_pass(reports));
}

TEST(Suites, GeometryDistanceHoldsWhereVertexIsNearest) {
  auto g = small_grid();
  g.distance_alphas = {2.0};
  for (const auto& r : run_geometry_suite(g)) EXPECT_TRUE(r.pass) << r.claim_id << " " << r.worst_ratio;
}
