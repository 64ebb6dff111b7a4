// Copyright 2026 The qdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "qdp/hypothesis.hpp"
#include "test_util.hpp"

namespace qdp {
namespace {

using testing::any_channel;
using testing::any_state;
using testing::ket0;
using testing::ket1;

const DensityMatrix& fixture_rho() {
  static const DensityMatrix r = DensityMatrix::diagonal({2.0 / 3.0, 1.0 / 3.0});
  return r;
}
const DensityMatrix& fixture_sigma() {
  static const DensityMatrix s = DensityMatrix::diagonal({1.0 / 3.0, 2.0 / 3.0});
  return s;
}

TEST(PrivacyRegion, MembershipExamples) {
  for (const double eps : {0.0, 0.3, 2.0}) {
    for (const double delta : {0.0, 0.1, 1.0}) {
      const PrivacyRegion r(eps, delta);
      // Blind tests always and the two perfect tests only when delta = 1.
      EXPECT_TRUE(region_contains(r, {0.0, 1.0}));
      EXPECT_TRUE(region_contains(r, {1.0, 0.0}));
      EXPECT_TRUE(region_contains(r, {0.5, 0.5}));
      EXPECT_EQ(region_contains(r, {0.0, 0.0}), delta >= 1.0);
      EXPECT_EQ(region_contains(r, {1.0, 1.0}), delta >= 1.0);
    }
  }
  EXPECT_THROW(PrivacyRegion(-0.1, 0.0), DomainError);
}

TEST(PrivacyRegion, CornerOnBoundary) {
  const ErrorPoint c0 = region_corner(0.0, 0.0);
  EXPECT_DOUBLE_EQ(c0.alpha, 0.5);
  EXPECT_DOUBLE_EQ(c0.beta, 0.5);
  const ErrorPoint c = region_corner(0.2, 0.01);
  EXPECT_NEAR(c.alpha, 0.99 / (1.0 + std::exp(0.2)), 1e-15);
  EXPECT_NEAR(c.alpha, 0.44566, 1e-5);
  const PrivacyRegion r(0.2, 0.01);
  EXPECT_TRUE(region_contains(r, c));
  EXPECT_NEAR(region_excess(r, c), 0.0, 1e-15);
  EXPECT_FALSE(region_contains(r, {c.alpha - 1e-6, c.beta - 1e-6}));
  const ErrorPoint c1 = region_corner(0.7, 1.0);
  EXPECT_DOUBLE_EQ(c1.alpha, 0.0);
}

TEST(PrivacyRegion, SymmetricAboutAntiDiagonal) {
  Rng rng(11);
  for (int i = 0; i < 10000; ++i) {
    const PrivacyRegion r(2.0 * rng.uniform(), 0.2 * rng.uniform());
    const ErrorPoint p{rng.uniform(), rng.uniform()};
    EXPECT_EQ(region_contains(r, p), region_contains(r, {1.0 - p.beta, 1.0 - p.alpha}));
    EXPECT_NEAR(region_excess(r, p), region_excess(r, {1.0 - p.beta, 1.0 - p.alpha}), 1e-12);
  }
}

TEST(SampleChannelRegion, LayoutAndEndpoints) {
  const auto pts = sample_channel_region(depolarizing_channel(2, 0.3), fixture_rho(), fixture_sigma(), 3, 42, {0.2});
  ASSERT_EQ(pts.size(), 7u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(pts[i].source, PointSource::kSampled);
  EXPECT_EQ(pts[3].source, PointSource::kEndpoint);
  EXPECT_NEAR(pts[3].point.alpha, 0.0, 1e-15);
  EXPECT_NEAR(pts[3].point.beta, 1.0, 1e-15);
  EXPECT_NEAR(pts[4].point.alpha, 1.0, 1e-15);
  EXPECT_NEAR(pts[4].point.beta, 0.0, 1e-15);
  EXPECT_EQ(pts[5].source, PointSource::kOptimal);
  EXPECT_EQ(pts[6].source, PointSource::kOptimal);
  EXPECT_THROW(sample_channel_region(identity_channel(2), ket0(), ket1(), 0, 1), ValidationError);
}

TEST(SampleChannelRegion, Deterministic) {
  const auto a = sample_channel_region(any_channel(3, 2), any_state(3, 1), any_state(3, 2), 20, 9);
  const auto b = sample_channel_region(any_channel(3, 2), any_state(3, 1), any_state(3, 2), 20, 9);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].point.alpha, b[i].point.alpha);
    EXPECT_EQ(a[i].point.beta, b[i].point.beta);
  }
}

TEST(SampleChannelRegion, NoisyFixtureInsideAndWeakNoiseOutside) {
  const PrivacyRegion r(0.2, 0.01);
  std::size_t outside_strong = 0;
  for (const auto& s : sample_channel_region(depolarizing_channel(2, 0.72), fixture_rho(), fixture_sigma(), 1000, 42, {0.2})) {
    outside_strong += region_contains(r, s.point) ? 0 : 1;
  }
  EXPECT_EQ(outside_strong, 0u);
  std::size_t outside_weak = 0;
  for (const auto& s : sample_channel_region(depolarizing_channel(2, 0.3), fixture_rho(), fixture_sigma(), 1000, 42, {0.2})) {
    outside_weak += region_contains(r, s.point) ? 0 : 1;
  }
  EXPECT_GE(outside_weak, 1u);
}

TEST(RegionSubsetCheck, Examples) {
  const RegionReport id = region_subset_check(identity_channel(2), {{ket0(), ket1()}}, 0.2, 0.01, 10, 1);
  EXPECT_EQ(id.verdict, RegionVerdict::kCertifiedViolation);
  EXPECT_NEAR(id.max_excess, 0.99, 1e-12);
  EXPECT_FALSE(id.certified_within_budget);

  const RegionReport full = region_subset_check(depolarizing_channel(2, 1.0), {{ket0(), ket1()}}, 0.2, 0.01, 50, 1);
  EXPECT_EQ(full.verdict, RegionVerdict::kNoViolationFound);
  EXPECT_NEAR(full.certified_delta, 0.0, 1e-15);

  const RegionReport noisy = region_subset_check(depolarizing_channel(2, 0.72), {{fixture_rho(), fixture_sigma()}}, 0.2,
                                               0.01, 1000, 42);
  EXPECT_EQ(noisy.verdict, RegionVerdict::kNoViolationFound);
  EXPECT_EQ(noisy.n_points, 1004u);
  EXPECT_LE(noisy.certified_delta, 0.01);
  EXPECT_TRUE(noisy.certified_within_budget);
  EXPECT_EQ(to_string(noisy.verdict), "no_violation_found");
}

TEST(RegionProperties, OptimalPointAttainsCertificate) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const std::size_t d = testing::small_dim(s);
    const QuantumChannel n = any_channel(d, s);
    const DensityMatrix rho = any_state(d, s + 1);
    const DensityMatrix sigma = any_state(d, s + 2);
    for (const double eps : {0.0, 0.1, 0.5, 1.0}) {
      const double g = std::exp(eps);
      double best = -INFINITY;
      for (const auto& p : sample_channel_region(n, rho, sigma, 50, s, {eps})) {
        best = std::max(best, 1.0 - p.point.alpha - g * p.point.beta);
      }
      EXPECT_NEAR(best, certify_pair(n, rho, sigma, eps), 1e-9);
    }
  }
}

TEST(RegionProperties, ConcatenationShrinks) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const std::size_t d = testing::small_dim(s);
    const QuantumChannel a = any_channel(d, s);
    const QuantumChannel post = any_channel(d, s + 100);
    const DensityMatrix rho = any_state(d, s + 1);
    const DensityMatrix sigma = any_state(d, s + 2);
    for (double eps = 0.0; eps <= 2.0; eps += 0.25) {
      EXPECT_LE(certify_pair_symmetric(compose(post, a), rho, sigma, eps),
                certify_pair_symmetric(a, rho, sigma, eps) + 1e-9);
    }
  }
}

TEST(RelaxBudget, Examples) {
  EXPECT_NEAR(relax_budget(0.2, 0.01, 0.01), 0.2, 1e-14);
  EXPECT_NEAR(relax_budget(0.2, 0.01, 0.05), std::log(0.95 / 0.99 * (1.0 + std::exp(0.2)) - 1.0), 1e-15);
  EXPECT_NEAR(relax_budget(0.2, 0.01, 0.05), 0.12367, 1e-5);
  EXPECT_EQ(relax_budget(0.2, 0.01, 1.0), 0.0);
  EXPECT_THROW(relax_budget(0.2, 0.05, 0.01), PreconditionError);
  EXPECT_THROW(relax_budget(0.2, 1.0, 1.0), PreconditionError);
}

TEST(RelaxBudget, RegionContainment) {
  Rng rng(2024);
  for (int t = 0; t < 100; ++t) {
    const double eps = 2.0 * rng.uniform();
    const double delta = 0.3 * rng.uniform();
    const double relaxed = delta + (1.0 - delta) * rng.uniform();
    const PrivacyRegion outer(relax_budget(eps, delta, relaxed), relaxed);
    for (const BoundarySegment& seg : region_boundary(eps, delta, 1000)) {
      if (seg.beta_low > seg.beta_high) continue;
      EXPECT_LE(region_excess(outer, {seg.alpha, seg.beta_low}), 1e-8);
      EXPECT_LE(region_excess(outer, {seg.alpha, seg.beta_high}), 1e-8);
    }
  }
}

TEST(RegionBoundary, EndsAndValidation) {
  const auto b = region_boundary(0.2, 0.01, 11);
  ASSERT_EQ(b.size(), 11u);
  EXPECT_DOUBLE_EQ(b.front().alpha, 0.0);
  EXPECT_DOUBLE_EQ(b.back().alpha, 1.0);
  EXPECT_NEAR(b.front().beta_low, 0.99, 1e-15);
  EXPECT_DOUBLE_EQ(b.front().beta_high, 1.0);
  EXPECT_THROW(region_boundary(0.2, 0.01, 1), ValidationError);
}

}  // namespace
}  // namespace qdp
