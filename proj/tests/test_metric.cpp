#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include <skorodist/metric.hpp>
#include <skorodist/squeeze.hpp>

#include "oracles.hpp"

using namespace skorodist;

TEST(SqueezedDistance, SameTimeUsesSpatialDistance) {
  const auto a = SqueezedPoint<double>::at(0.0, 0.0);
  const auto b = SqueezedPoint<double>::at(0.5, 0.0);
  EXPECT_DOUBLE_EQ(d_sqz(a, b, AbsMetric{}), 0.5);
}

TEST(SqueezedDistance, StarPointsAreTwoApart) {
  const auto lo = SqueezedPoint<double>::minus_infinity();
  const auto hi = SqueezedPoint<double>::plus_infinity();
  EXPECT_DOUBLE_EQ(d_sqz(hi, lo, AbsMetric{}), 2.0);
}

TEST(SqueezedDistance, SpatialTermIsCapped) {
  const auto a = SqueezedPoint<double>::at(0.0, 0.0);
  const auto b = SqueezedPoint<double>::at(5.0, 0.0);
  EXPECT_DOUBLE_EQ(d_sqz(a, b, AbsMetric{}), 1.0);
}

TEST(SqueezedDistance, MatchesFormulaOffDiagonal) {
  const SqueezeConfig cfg;
  const auto a = SqueezedPoint<double>::at(0.0, 0.3);
  const auto b = SqueezedPoint<double>::at(0.4, -1.2);
  const double expect = std::min(std::exp(-0.3), std::exp(-1.2)) * 0.4 + std::abs(std::exp(-0.3) - std::exp(-1.2)) +
                        std::abs(std::tanh(0.3) - std::tanh(-1.2));
  EXPECT_NEAR(d_sqz(a, b, AbsMetric{}, cfg), expect, 1e-15);
}

TEST(SqueezedDistance, AlternativePhi) {
  SqueezeConfig cfg;
  cfg.phi_kind = PhiKind::inv_one_plus_sq;
  EXPECT_DOUBLE_EQ(cfg.phi(1.0), 0.5);
  EXPECT_DOUBLE_EQ(cfg.phi(kInf), 0.0);
  EXPECT_DOUBLE_EQ(cfg.phi(-kInf), 0.0);
}

TEST(SqueezedDistance, ConvergesToStarAtLargeTimes) {
  const SqueezeConfig cfg;
  double prev = kInf;
  for (double T : {10.0, 20.0, 40.0}) {
    const auto a = SqueezedPoint<double>::at(123.0, T);
    const double d = d_sqz(a, SqueezedPoint<double>::plus_infinity(), AbsMetric{}, cfg);
    const double bound = cfg.phi(T) + cfg.dbar(T, kInf);
    EXPECT_LE(d, bound + 1e-15);
    EXPECT_LT(bound, prev);
    prev = bound;
  }
  EXPECT_LT(prev, 1e-15 + std::exp(-40.0) * 2);
}

TEST(SqueezedDistance, IsAMetricOnSamples) {
  std::mt19937_64 rng(7);
  std::vector<SqueezedPoint<Vec>> pts = {SqueezedPoint<Vec>::minus_infinity(), SqueezedPoint<Vec>::plus_infinity()};
  for (int i = 0; i < 60; ++i)
    pts.push_back(SqueezedPoint<Vec>::at(oracle::random_vec(rng, 2, -2, 2), oracle::random_real(rng, -5, 5)));
  for (SqueezeConfig cfg : {SqueezeConfig{}, SqueezeConfig{PhiKind::inv_one_plus_sq, DbarKind::tanh}}) {
    const SqueezedMetric<Vec, EuclideanMetric> m{{}, cfg};
    const auto report = validate_metric<SqueezedPoint<Vec>>(m, std::span<const SqueezedPoint<Vec>>(pts), 1e-12);
    EXPECT_TRUE(report.ok());
  }
}

TEST(SqueezedDistance, ConfigNamesParse) {
  EXPECT_EQ(parse_phi_kind("exp_neg_abs"), PhiKind::exp_neg_abs);
  EXPECT_EQ(parse_phi_kind("inv_one_plus_sq"), PhiKind::inv_one_plus_sq);
  EXPECT_EQ(parse_dbar_kind("tanh"), DbarKind::tanh);
  EXPECT_THROW(parse_phi_kind("gauss"), InputError);
  EXPECT_THROW(parse_dbar_kind("arctan"), InputError);
}

TEST(SqueezedPointTest, StarsCarryNoSpace) {
  EXPECT_TRUE(SqueezedPoint<double>::plus_infinity().is_star());
  EXPECT_FALSE(SqueezedPoint<double>::at(1.0, 2.0).is_star());
  EXPECT_THROW(SqueezedPoint<double>::at(1.0, kInf), InputError);
}

TEST(ValidateMetric, EuclideanPlaneIsClean) {
  std::mt19937_64 rng(1);
  std::vector<Vec> pts;
  for (int i = 0; i < 100; ++i) pts.push_back(oracle::random_vec(rng, 2, -10, 10));
  EXPECT_TRUE(validate_metric<Vec>(EuclideanMetric{}, std::span<const Vec>(pts)).ok());
}

TEST(ValidateMetric, SquaredDistanceBreaksTriangle) {
  const std::vector<double> pts = {0.0, 1.0, 2.0};
  auto sq = [](double a, double b) { return (a - b) * (a - b); };
  const auto report = validate_metric<double>(sq, std::span<const double>(pts));
  ASSERT_FALSE(report.ok());
  const auto& v = report.violations.front();
  EXPECT_EQ(v.axiom, MetricAxiom::triangle);
  EXPECT_EQ(v.x, 0.0);
  EXPECT_EQ(v.y, 1.0);
  EXPECT_EQ(v.z, 2.0);
  EXPECT_DOUBLE_EQ(v.excess, 2.0);
}

TEST(ValidateMetric, SingleSampleIsVacuous) {
  const std::vector<double> pts = {3.0};
  EXPECT_TRUE(validate_metric<double>(AbsMetric{}, std::span<const double>(pts)).ok());
}

TEST(ValidateMetric, DetectsAsymmetry) {
  const std::vector<double> pts = {0.0, 1.0};
  auto skew = [](double a, double b) { return a < b ? 2.0 * (b - a) : a - b; };
  const auto report = validate_metric<double>(skew, std::span<const double>(pts));
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations.front().axiom, MetricAxiom::symmetry);
}

TEST(FiniteMetricTest, LooksUpTable) {
  const FiniteMetric m({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  EXPECT_EQ(m(0, 2), 2.0);
  const std::vector<std::size_t> pts = {0, 1, 2};
  EXPECT_TRUE(validate_metric<std::size_t>(m, std::span<const std::size_t>(pts)).ok());
  EXPECT_THROW(FiniteMetric({{0, 1}}), InputError);
}

TEST(EuclideanMetricTest, RejectsDimensionMismatch) {
  EXPECT_THROW(EuclideanMetric{}(Vec{1.0}, Vec{1.0, 2.0}), InputError);
}
