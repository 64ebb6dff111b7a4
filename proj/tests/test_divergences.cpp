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
#include <limits>
#include <vector>

#include "qdp/divergences.hpp"
#include "qdp/properties.hpp"
#include "test_util.hpp"

namespace qdp {
namespace {

using testing::any_channel;
using testing::any_state;
using testing::half;
using testing::ket0;
using testing::ket1;

const double kE02 = std::exp(0.2);

// -- hockey-stick oracles -------------------------------------------------------

TEST(HockeyStick, EqualStatesGiveZero) {
  const DensityMatrix rho = any_state(3, 1);
  for (const double g : {1.0, 1.5, 10.0}) EXPECT_NEAR(hockey_stick(rho, rho, Gamma(g)), 0.0, 1e-12);
}

TEST(HockeyStick, OrthogonalPuresGiveOne) {
  for (const double g : {1.0, 2.0, 50.0}) EXPECT_NEAR(hockey_stick(ket0(), ket1(), Gamma(g)), 1.0, 1e-15);
}

TEST(HockeyStick, PureVersusMaximallyMixed) {
  // 1 - e^0.2 / 2, frozen.
  EXPECT_NEAR(hockey_stick(ket0(), half(), Gamma::from_epsilon(0.2)), 0.389298620920, 5e-13);
  EXPECT_NEAR(hockey_stick(ket0(), half(), Gamma(kE02)), 1.0 - kE02 / 2.0, 1e-15);
}

TEST(HockeyStick, GammaDomain) {
  EXPECT_THROW(Gamma(0.99), DomainError);
  EXPECT_THROW(Gamma(std::numeric_limits<double>::infinity()), DomainError);
  EXPECT_THROW(Gamma(std::nan("")), DomainError);
  EXPECT_THROW(Gamma::from_epsilon(-0.1), DomainError);
  EXPECT_NEAR(Gamma::from_epsilon(0.7).epsilon(), 0.7, 1e-15);
}

TEST(HockeyStick, DimensionMismatch) {
  EXPECT_THROW(hockey_stick(ket0(), DensityMatrix::maximally_mixed(3), Gamma(1.0)), ValidationError);
}

TEST(HockeyStick, EqualsTraceDistanceAtGammaOne) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const DensityMatrix a = any_state(3, s);
    const DensityMatrix b = any_state(3, s + 100);
    EXPECT_NEAR(hockey_stick(a, b, Gamma(1.0)), trace_distance(a, b), 1e-10);
  }
}

TEST(HockeyStick, ThreeRoutesAgree) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const std::size_t d = 2 + s % 3;
    const DensityMatrix a = any_state(d, s);
    const DensityMatrix b = any_state(d, s + 500);
    for (const double g : {1.0, 1.5, std::exp(1.0)}) {
      const double e = hockey_stick(a, b, Gamma(g));
      EXPECT_GE(e, 0.0);
      EXPECT_LE(e, 1.0 + 1e-12);
      EXPECT_NEAR(hockey_stick_trace_norm(a, b, Gamma(g)), e, 1e-9);
      EXPECT_NEAR(hockey_stick_measurement_oracle(a, b, Gamma(g), 50, s), e, 1e-9);
    }
  }
}

TEST(MeasurementOracle, Examples) {
  const DensityMatrix rho = any_state(4, 3);
  EXPECT_NEAR(hockey_stick_measurement_oracle(rho, rho, Gamma(1.3), 100, 1), 0.0, 1e-12);
  EXPECT_NEAR(hockey_stick_measurement_oracle(ket0(), half(), Gamma(1.0), 100, 1), 0.5, 1e-12);
}

TEST(HockeyStick, NonIncreasingInGamma) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const DensityMatrix a = any_state(3, s);
    const DensityMatrix b = any_state(3, s + 7);
    double prev = 2.0;
    for (double g = 1.0; g < 5.0; g += 0.25) {
      const double e = hockey_stick(a, b, Gamma(g));
      EXPECT_LE(e, prev + 1e-12);
      prev = e;
    }
  }
}

TEST(HockeyStick, JointConvexity) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const std::vector<double> w{0.25, 0.35, 0.4};
    std::vector<DensityMatrix> rs, ss;
    for (std::uint64_t i = 0; i < 3; ++i) {
      rs.push_back(any_state(3, 10 * s + i));
      ss.push_back(any_state(3, 10 * s + i + 1000));
    }
    const Gamma g(1.0 + 0.1 * static_cast<double>(s % 10));
    double rhs = 0.0;
    for (std::size_t i = 0; i < 3; ++i) rhs += w[i] * hockey_stick(rs[i], ss[i], g);
    EXPECT_LE(hockey_stick(mixture(w, rs), mixture(w, ss), g), rhs + 1e-9);
  }
}

TEST(HockeyStick, DataProcessing) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const std::size_t d = testing::small_dim(s);
    const QuantumChannel n = any_channel(d, s);
    const DensityMatrix a = any_state(d, s + 1);
    const DensityMatrix b = any_state(d, s + 2);
    for (const double g : {1.0, 1.1, std::exp(1.0)}) {
      EXPECT_LE(hockey_stick(apply(n, a), apply(n, b), Gamma(g)), hockey_stick(a, b, Gamma(g)) + 1e-9);
    }
  }
}

// -- bounds ---------------------------------------------------------------------

TEST(FvdgBound, Examples) {
  const DensityMatrix rho = any_state(3, 2);
  EXPECT_NEAR(fvdg_upper_bound(rho, rho, Gamma(1.7)), 0.0, 1e-7);
  EXPECT_NEAR(fvdg_upper_bound(ket0(), ket1(), Gamma(1.0)), 1.0, 1e-12);
  EXPECT_NEAR(fvdg_upper_bound(ket0(), half(), Gamma(1.0)), std::sqrt(0.5), 1e-12);
}

TEST(FvdgBound, DominatesHockeyStick) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const DensityMatrix a = any_state(3, s);
    const DensityMatrix b = any_state(3, s + 300);
    const Gamma g(1.0 + 0.05 * static_cast<double>(s));
    EXPECT_GE(fvdg_upper_bound(a, b, g), hockey_stick(a, b, g) - 1e-9);
  }
  const DensityMatrix a = any_state(2, 1);
  const DensityMatrix b = any_state(2, 2);
  EXPECT_NEAR(fvdg_upper_bound(a, b, Gamma(1.0)), std::sqrt(1.0 - fidelity(a, b)), 1e-12);
}

TEST(TraceSandwich, Examples) {
  const DensityMatrix rho = any_state(2, 4);
  const Interval same = trace_distance_sandwich(rho, rho, Gamma(1.5));
  EXPECT_NEAR(same.lower, -0.5, 1e-12);
  EXPECT_NEAR(same.upper, 0.0, 1e-12);
  const Interval orth = trace_distance_sandwich(ket0(), ket1(), Gamma(3.0));
  EXPECT_NEAR(orth.lower, 1.0, 1e-15);
  EXPECT_NEAR(orth.upper, 1.0, 1e-15);
  const Interval mix = trace_distance_sandwich(ket0(), half(), Gamma(kE02));
  EXPECT_NEAR(mix.lower, 1.0 - kE02 * 0.5, 1e-15);
  EXPECT_NEAR(mix.upper, 0.5, 1e-15);
  EXPECT_NEAR(mix.lower, hockey_stick(ket0(), half(), Gamma(kE02)), 1e-15);
}

TEST(TraceSandwich, Brackets) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const DensityMatrix a = any_state(3, s);
    const DensityMatrix b = any_state(3, s + 900);
    const Gamma g(1.0 + 0.03 * static_cast<double>(s));
    const Interval iv = trace_distance_sandwich(a, b, g);
    const double e = hockey_stick(a, b, g);
    EXPECT_LE(iv.lower, e + 1e-9);
    EXPECT_LE(e, iv.upper + 1e-9);
  }
}

// -- max-relative entropy and the smoothing witness -------------------------------

TEST(DMax, Examples) {
  const DensityMatrix rho = any_state(3, 8);
  EXPECT_NEAR(d_max(rho, rho), 0.0, 1e-9);
  EXPECT_NEAR(d_max(ket0(), half()), std::log(2.0), 1e-12);
  EXPECT_TRUE(std::isinf(d_max(ket0(), ket1())));
}

TEST(DMax, OperatorInequalityHolds) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const DensityMatrix a = any_state(3, s);
    const DensityMatrix b = sample_state(3, s + 50);
    const double lam = d_max(a, b);
    const RealVector ev = eigenvalues(HermitianOperator(Matrix(std::exp(lam) * b.matrix() - a.matrix())));
    EXPECT_GE(ev.minCoeff(), -1e-9);
  }
}

TEST(SmoothingWitness, Examples) {
  const DensityMatrix rho = any_state(2, 3);
  const SmoothingWitness w0 = smooth_dmax_witness(rho, rho, Gamma(1.4));
  EXPECT_NEAR(w0.smoothing_radius, 0.0, 1e-12);
  EXPECT_NEAR(w0.dmax_value, std::log(1.4), 1e-15);
  EXPECT_NEAR(smooth_dmax_witness(ket0(), half(), Gamma(kE02)).smoothing_radius, 1.0 - kE02 / 2.0, 1e-12);
  const DensityMatrix a = any_state(3, 1);
  const DensityMatrix b = any_state(3, 2);
  EXPECT_NEAR(smooth_dmax_witness(a, b, Gamma(1.0)).smoothing_radius, trace_distance(a, b), 1e-12);
}

TEST(SmoothingWitness, RoundTrip) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const DensityMatrix a = any_state(3, s);
    const DensityMatrix b = any_state(3, s + 77);
    const Gamma g(1.0 + 0.02 * static_cast<double>(s));
    const SmoothingWitness w = smooth_dmax_witness(a, b, g);
    EXPECT_NEAR(w.smoothing_radius, hockey_stick(a, b, g), 1e-12);
    EXPECT_GE(eigenvalues(w.rho_bar).minCoeff(), -1e-12);
    const RealVector gap = eigenvalues(HermitianOperator(Matrix(g.value() * b.matrix() - w.rho_bar.matrix())));
    EXPECT_GE(gap.minCoeff(), -1e-9);
    EXPECT_GE(w.half_trace_norm, w.smoothing_radius - 1e-12);
  }
}

// An external witness rho_bar <= gamma sigma with Tr(rho - rho_bar)^+ <= e
// forces E_gamma(rho || sigma) <= e.
TEST(SmoothingWitness, ExternalWitnessBoundsHockeyStick) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const DensityMatrix rho = any_state(3, s);
    const DensityMatrix sigma = sample_state(3, s + 3);
    const Gamma g(1.0 + 0.05 * static_cast<double>(s % 20));
    const double t = 0.3 + 0.7 * static_cast<double>(s % 10) / 10.0;
    const HermitianOperator rho_bar(Matrix(t * g.value() * sigma.matrix()));
    const double radius = positive_part(HermitianOperator(Matrix(rho.matrix() - rho_bar.matrix()))).trace_plus;
    EXPECT_LE(hockey_stick(rho, sigma, g), radius + 1e-9);
  }
}

TEST(ClassicalHockeyStick, Basic) {
  EXPECT_NEAR(hockey_stick_classical({0.5, 0.5}, {0.2, 0.8}, 1.0), 0.3, 1e-15);
  EXPECT_NEAR(hockey_stick_classical({0.5, 0.5}, {0.2, 0.8}, 2.0), 0.1, 1e-15);
  EXPECT_THROW(hockey_stick_classical({1.0}, {0.5, 0.5}, 1.0), ValidationError);
}

// -- structural properties ----------------------------------------------------------

class PropertySuite : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  std::size_t dim() const { return testing::small_dim(GetParam()); }
  DensityMatrix state(std::uint64_t k) const { return any_state(dim(), 97 * GetParam() + k); }
  Gamma gamma(std::uint64_t k) const {
    return Gamma(1.0 + 0.5 * static_cast<double>(mix_seed(GetParam() * 31 + k) % 1000) / 1000.0);
  }
};

TEST_P(PropertySuite, Triangle) {
  EXPECT_TRUE(check_triangle(state(0), state(1), state(2), gamma(0), gamma(1)).pass);
}

TEST_P(PropertySuite, StrongConvexity) {
  const std::vector<double> p{0.3, 0.7};
  const std::vector<double> q{0.6, 0.4};
  EXPECT_TRUE(check_strong_convexity(p, q, {state(0), state(1)}, {state(2), state(3)}, gamma(0), gamma(1)).pass);
}

TEST_P(PropertySuite, Stability) {
  EXPECT_TRUE(check_stability(state(0), state(1), any_state(2, GetParam()), gamma(0)).pass);
}

TEST_P(PropertySuite, Subadditivity) {
  EXPECT_TRUE(check_subadditivity(state(0), any_state(2, GetParam() + 1), state(1),
                                  any_state(2, GetParam() + 2), gamma(0), gamma(1))
                  .pass);
}

TEST_P(PropertySuite, Symmetry) { EXPECT_TRUE(check_symmetry(state(0), state(1), gamma(0)).pass); }

TEST_P(PropertySuite, TraceBound) {
  EXPECT_TRUE(check_trace_bound(state(0), state(1), state(2), gamma(0)).pass);
}

TEST_P(PropertySuite, FvdgPsd) {
  const double sa = 0.5 + static_cast<double>(GetParam() % 5);
  const HermitianOperator a(Matrix(sa * state(0).matrix()));
  const HermitianOperator b(Matrix(state(1).matrix()));
  EXPECT_TRUE(check_fvdg_psd(a, b).pass);
}

INSTANTIATE_TEST_SUITE_P(Random, PropertySuite, ::testing::Range<std::uint64_t>(0, 100));

TEST(PropertyCheck, Examples) {
  const DensityMatrix rho = any_state(2, 1);
  const DensityMatrix sigma = any_state(2, 2);
  const DensityMatrix tau = any_state(3, 3);
  const PropertyResult st = check_stability(rho, sigma, tau, Gamma(1.3));
  EXPECT_NEAR(st.residual, 0.0, 1e-9);
  EXPECT_GE(check_subadditivity(rho, sigma, sigma, rho, Gamma(1.1), Gamma(1.1)).residual, 0.0);
  const PropertyResult tb = check_trace_bound(rho, sigma, sigma, Gamma(1.5));
  EXPECT_TRUE(tb.pass);
  EXPECT_NEAR(tb.residual, 2.0 * hockey_stick(rho, sigma, Gamma(1.5)) + 0.5, 1e-12);
}

TEST(PropertyCheck, DispatcherMatchesDirectCalls) {
  const std::vector<DensityMatrix> st{any_state(2, 1), any_state(2, 2), any_state(2, 3)};
  const std::vector<double> gs{1.2, 1.4};
  EXPECT_DOUBLE_EQ(property_check(PropertyId::kTriangle, st, gs).residual,
                   check_triangle(st[0], st[1], st[2], Gamma(1.2), Gamma(1.4)).residual);
  const std::vector<DensityMatrix> sc{any_state(2, 1), any_state(2, 2), any_state(2, 3), any_state(2, 4)};
  const std::vector<double> scp{1.1, 1.2, 0.4, 0.6, 0.5, 0.5};
  EXPECT_DOUBLE_EQ(property_check(PropertyId::kStrongConvexity, sc, scp).residual,
                   check_strong_convexity({0.4, 0.6}, {0.5, 0.5}, {sc[0], sc[1]}, {sc[2], sc[3]},
                                          Gamma(1.1), Gamma(1.2))
                       .residual);
  EXPECT_TRUE(property_check(PropertyId::kSymmetry, std::vector<DensityMatrix>{st[0], st[1]},
                             std::vector<double>{2.0})
                  .pass);
}

TEST(PropertyCheck, ArityMismatchThrows) {
  const std::vector<DensityMatrix> two{any_state(2, 1), any_state(2, 2)};
  EXPECT_THROW(property_check(PropertyId::kTriangle, two, std::vector<double>{1.0, 1.0}), ValidationError);
  EXPECT_THROW(property_check(PropertyId::kSymmetry, two, std::vector<double>{}), ValidationError);
  EXPECT_THROW(property_check(PropertyId::kStrongConvexity, two, std::vector<double>{1.0}), ValidationError);
}

TEST(PropertyCheck, SymmetryResidualIsExact) {
  const PropertyResult r = check_symmetry(ket0(), half(), Gamma(kE02));
  EXPECT_NEAR(r.residual, 0.0, 1e-14);
}

}  // namespace
}  // namespace qdp
