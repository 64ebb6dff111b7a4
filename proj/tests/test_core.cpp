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

#include "qdp/channel.hpp"
#include "qdp/core.hpp"
#include "qdp/random.hpp"
#include "qdp/spectral.hpp"
#include "test_util.hpp"

namespace qdp {
namespace {

using testing::any_channel;
using testing::any_state;
using testing::half;
using testing::ket0;
using testing::ket1;
using testing::max_abs;

// -- validation ---------------------------------------------------------------

TEST(HermitianOperator, RejectsAsymmetryAboveTolerance) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1e-7;
  EXPECT_THROW(HermitianOperator{m}, ValidationError);
  m(0, 1) = 1e-10;
  EXPECT_NO_THROW(HermitianOperator{m});
}

TEST(HermitianOperator, RejectsNonSquare) {
  EXPECT_THROW(HermitianOperator(Matrix::Zero(2, 3)), ValidationError);
}

TEST(DensityMatrix, EnforcesTraceAndPositivity) {
  EXPECT_THROW(DensityMatrix(Matrix(Matrix::Identity(2, 2))), ValidationError);
  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 1.1;
  neg(1, 1) = -0.1;
  EXPECT_THROW(DensityMatrix{neg}, ValidationError);
  Matrix skew = Matrix::Identity(2, 2) / 2.0;
  skew(0, 1) = Complex(0.0, 1e-9);
  EXPECT_THROW(DensityMatrix{skew}, ValidationError);
}

TEST(MeasurementEffect, EigenvaluesInUnitInterval) {
  EXPECT_NO_THROW(MeasurementEffect::identity(3));
  EXPECT_THROW(MeasurementEffect(Matrix(2.0 * Matrix::Identity(2, 2))), ValidationError);
  EXPECT_THROW(MeasurementEffect(Matrix(-0.1 * Matrix::Identity(2, 2))), ValidationError);
  const MeasurementEffect m = sample_effect(3, 7);
  EXPECT_LT(max_abs(m.complement().matrix() + m.matrix() - Matrix::Identity(3, 3)), 1e-15);
}

// -- spectral -----------------------------------------------------------------

TEST(PositivePart, DiagonalExample) {
  Matrix x = Matrix::Zero(2, 2);
  x(0, 0) = 0.5;
  x(1, 1) = -0.5;
  const PositivePart pp = positive_part(HermitianOperator(x));
  EXPECT_NEAR(pp.trace_plus, 0.5, 1e-15);
  EXPECT_NEAR(pp.positive.matrix()(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(pp.positive.matrix()(1, 1)), 0.0, 1e-15);
}

TEST(PositivePart, PsdInputIsFixed) {
  const DensityMatrix rho = any_state(3, 11);
  const PositivePart pp = positive_part(rho);
  EXPECT_NEAR(pp.trace_plus, 1.0, 1e-12);
  EXPECT_LT(max_abs(pp.positive.matrix() - rho.matrix()), 1e-12);
}

TEST(PositivePart, RemainderHasNoPositiveEigenvalue) {
  const HermitianOperator x(Matrix(any_state(4, 1).matrix() - 1.3 * any_state(4, 2).matrix()));
  const PositivePart pp = positive_part(x);
  EXPECT_LE(eigenvalues(x - pp.positive).maxCoeff(), 1e-12);
}

TEST(PositivePart, RandomEffectsNeverExceedTracePlus) {
  const HermitianOperator x(Matrix(sample_state(3, 5).matrix() - 1.5 * sample_state(3, 6).matrix()));
  const double tp = positive_part(x).trace_plus;
  Rng rng(99);
  double best = -1.0;
  for (int i = 0; i < 100000; ++i) best = std::max(best, trace_product(sample_effect(3, rng), x));
  EXPECT_LE(best, tp + 1e-12);
  EXPECT_GT(best, 0.5 * tp);
  EXPECT_NEAR(trace_product(HermitianOperator(positive_part(x).projector), x), tp, 1e-12);
}

TEST(TraceNorm, Oracles) {
  EXPECT_EQ(trace_norm(HermitianOperator(Matrix(Matrix::Zero(3, 3)))), 0.0);
  EXPECT_NEAR(trace_norm(HermitianOperator(Matrix(ket0().matrix() - ket1().matrix()))), 2.0, 1e-15);
  Matrix d = Matrix::Zero(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = -0.6;
  d(2, 2) = -0.6;
  EXPECT_NEAR(trace_norm(HermitianOperator(d)), 2.2, 1e-14);
}

TEST(TraceNorm, SplitsIntoPositiveAndNegativeParts) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const std::size_t d = testing::small_dim(s) + 1;
    const HermitianOperator x(Matrix(any_state(d, s).matrix() - 1.7 * any_state(d, s + 1000).matrix()));
    const double plus = positive_part(x).trace_plus;
    const double minus = positive_part(HermitianOperator(Matrix(-x.matrix()))).trace_plus;
    EXPECT_NEAR(trace_norm(x), plus + minus, 1e-9);
    EXPECT_NEAR(x.trace(), plus - minus, 1e-9);
    EXPECT_NEAR(trace_norm(x), trace_norm(x.matrix()), 1e-9);
  }
}

TEST(Fidelity, Oracles) {
  const DensityMatrix rho = any_state(3, 4);
  EXPECT_NEAR(fidelity(rho, rho), 1.0, 1e-9);
  EXPECT_NEAR(fidelity(ket0(), ket1()), 0.0, 1e-15);
  EXPECT_NEAR(fidelity(ket0(), half()), 0.5, 1e-12);
  EXPECT_THROW(fidelity(ket0(), DensityMatrix::maximally_mixed(3)), ValidationError);
}

// -- channels -----------------------------------------------------------------

TEST(Channel, RejectsNonTracePreserving) {
  EXPECT_THROW(QuantumChannel(2, 2, {Matrix(0.9 * Matrix::Identity(2, 2))}), ValidationError);
  EXPECT_THROW(QuantumChannel(2, 2, {Matrix(Matrix::Identity(3, 3))}), ValidationError);
  EXPECT_THROW(QuantumChannel(2, 2, {}), ValidationError);
}

TEST(Channel, ApplyOracles) {
  const DensityMatrix rho = any_state(3, 8);
  EXPECT_LT(max_abs(apply(identity_channel(3), rho).matrix() - rho.matrix()), 1e-15);
  EXPECT_LT(max_abs(apply(depolarizing_channel(3, 1.0), rho).matrix() - Matrix::Identity(3, 3) / 3.0), 1e-14);
  const DensityMatrix out = apply(depolarizing_channel(2, 0.3), ket0());
  EXPECT_NEAR(out.matrix()(0, 0).real(), 0.85, 1e-15);
  EXPECT_NEAR(out.matrix()(1, 1).real(), 0.15, 1e-15);
  EXPECT_THROW(apply(identity_channel(2), rho), ValidationError);
}

TEST(Channel, DepolarizingMatchesDefinition) {
  for (const std::size_t d : {2u, 3u, 4u}) {
    const DensityMatrix rho = any_state(d, d);
    const Matrix expect = 0.6 * rho.matrix() + 0.4 * Matrix::Identity(d, d) / static_cast<double>(d);
    EXPECT_LT(max_abs(apply(depolarizing_channel(d, 0.4), rho).matrix() - expect), 1e-14);
  }
}

TEST(Channel, CommutesWithMixing) {
  const QuantumChannel n = any_channel(3, 21);
  const std::vector<double> w{0.2, 0.5, 0.3};
  const std::vector<DensityMatrix> states{any_state(3, 1), any_state(3, 2), any_state(3, 3)};
  Matrix lhs = apply(n, mixture(w, states)).matrix();
  Matrix rhs = Matrix::Zero(3, 3);
  for (std::size_t i = 0; i < 3; ++i) rhs += w[i] * apply(n, states[i]).matrix();
  EXPECT_LT(max_abs(lhs - rhs), 1e-10);
}

TEST(Adjoint, UnitaryChannel) {
  const Matrix u = haar_unitary(3, 5);
  const KrausMap adj = adjoint(unitary_channel(u));
  const Matrix x = any_state(3, 6).matrix();
  EXPECT_LT(max_abs(adj.apply(x) - u.adjoint() * x * u), 1e-13);
}

TEST(Adjoint, UnitalAndDual) {
  for (std::uint64_t c = 0; c < 5; ++c) {
    const std::size_t d = testing::small_dim(c);
    const QuantumChannel n = any_channel(d, c);
    const KrausMap adj = adjoint(n);
    EXPECT_LT(max_abs(adj.apply(Matrix::Identity(d, d)) - Matrix::Identity(d, d)), 1e-12);
    for (std::uint64_t t = 0; t < 100; ++t) {
      const MeasurementEffect m = sample_effect(d, 1000 * c + t);
      const DensityMatrix rho = any_state(d, 5000 * c + t);
      const double lhs = trace_product(m, apply(n, rho));
      const double rhs = trace_product(apply(adj, m), rho);
      EXPECT_NEAR(lhs, rhs, 1e-10);
    }
  }
}

TEST(Choi, IdentityQubit) {
  const ChoiMatrix c = choi(identity_channel(2));
  Matrix expect = Matrix::Zero(4, 4);
  for (int i : {0, 3}) {
    for (int j : {0, 3}) expect(i, j) = 1.0;
  }
  EXPECT_LT(max_abs(c.matrix() - expect), 1e-15);
  EXPECT_NEAR(c.matrix().trace().real(), 2.0, 1e-15);
  EXPECT_EQ((c.eigenvalues().array() > 1e-12).count(), 1);
}

TEST(Choi, FullyDepolarizingQubit) {
  const ChoiMatrix c = choi(depolarizing_channel(2, 1.0));
  EXPECT_LT(max_abs(c.matrix() - Matrix::Identity(4, 4) / 2.0), 1e-15);
}

TEST(Choi, InvariantsAndRoundTrip) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const std::size_t d = testing::small_dim(s);
    const QuantumChannel n = s == 0 ? identity_channel(d) : s == 1 ? depolarizing_channel(d, 1.0) : any_channel(d, s);
    const ChoiMatrix c = choi(n);
    EXPECT_GE(c.min_eigenvalue(), -1e-9);
    EXPECT_LT(max_abs(c.partial_trace_output() - Matrix::Identity(d, d)), 1e-9);
    const QuantumChannel back(kraus_from_choi(c));
    EXPECT_LT(max_abs(choi(back).matrix() - c.matrix()), 1e-10);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        Matrix e = Matrix::Zero(d, d);
        e(i, j) = 1.0;
        EXPECT_LT(max_abs(back.apply(e) - n.apply(e)), 1e-10);
      }
    }
  }
}

TEST(Choi, RectangularRejected) {
  const KrausMap trace_out(2, 1, {Matrix(Matrix::Ones(1, 2) / std::sqrt(2.0))});
  EXPECT_THROW(choi(trace_out), ValidationError);
}

TEST(RecognizeDepolarizing, DetectsAndRejects) {
  for (const double p : {0.0, 0.3, 0.72, 1.0}) {
    const auto got = recognize_depolarizing(depolarizing_channel(3, p));
    ASSERT_TRUE(got.has_value());
    EXPECT_NEAR(*got, p, 1e-12);
  }
  EXPECT_FALSE(recognize_depolarizing(amplitude_damping_channel(0.3)).has_value());
  EXPECT_FALSE(recognize_depolarizing(unitary_channel(haar_unitary(2, 3))).has_value());
}

TEST(TensorPower, DimensionsAndAction) {
  const QuantumChannel t = tensor_power(depolarizing_channel(2, 0.5), 2);
  EXPECT_EQ(t.dim_in(), 4u);
  const DensityMatrix in = tensor(ket0(), ket1());
  const DensityMatrix out = apply(t, in);
  const DensityMatrix each = apply(depolarizing_channel(2, 0.5), ket0());
  const DensityMatrix each1 = apply(depolarizing_channel(2, 0.5), ket1());
  EXPECT_LT(max_abs(out.matrix() - kron(each.matrix(), each1.matrix())), 1e-14);
}

// -- sampling -----------------------------------------------------------------

TEST(Sampling, RankOneStatesArePure) {
  for (std::uint64_t s = 0; s < 20; ++s) EXPECT_NEAR(sample_state(2, 1, s).purity(), 1.0, 1e-10);
  EXPECT_THROW(sample_state(2, 3, 1), ValidationError);
  EXPECT_THROW(sample_state(2, 0, 1), ValidationError);
}

TEST(Sampling, OrthogonalPairs) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const PurePair pr = sample_orthogonal_pure_pair(3, s);
    EXPECT_LT(std::abs(pr.phi.dot(pr.psi)), 1e-10);
    EXPECT_NEAR(pr.phi.norm(), 1.0, 1e-12);
  }
  EXPECT_THROW(sample_orthogonal_pure_pair(1, 0), ValidationError);
}

TEST(Sampling, EffectsInRange) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const RealVector ev = eigenvalues(sample_effect(2, s));
    EXPECT_GE(ev.minCoeff(), -1e-10);
    EXPECT_LE(ev.maxCoeff(), 1.0 + 1e-10);
  }
}

TEST(Sampling, DeterministicGivenSeed) {
  EXPECT_EQ(sample_state(3, 2, 77).matrix(), sample_state(3, 2, 77).matrix());
  EXPECT_EQ(haar_unitary(4, 5), haar_unitary(4, 5));
  EXPECT_NE(haar_unitary(4, 5), haar_unitary(4, 6));
  EXPECT_EQ(sample_effect(3, 9).matrix(), sample_effect(3, 9).matrix());
}

TEST(Sampling, HaarUnitaryIsUnitary) {
  const Matrix u = haar_unitary(5, 1);
  EXPECT_LT(max_abs(u.adjoint() * u - Matrix::Identity(5, 5)), 1e-12);
}

TEST(Sampling, HaarVectorsAreUnbiased) {
  const std::size_t d = 3;
  Matrix a = Matrix::Zero(d, d);
  a(0, 0) = 1.0;
  a(1, 1) = 2.0;
  a(2, 2) = -0.5;
  a(0, 1) = Complex(0.3, 0.4);
  a(1, 0) = Complex(0.3, -0.4);
  const int n = 10000;
  double sum = 0.0;
  double sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vector phi = sample_orthogonal_pure_pair(d, static_cast<std::uint64_t>(i)).phi;
    const double v = phi.dot(a * phi).real();
    sum += v;
    sum2 += v * v;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum2 / n - mean * mean) / n);
  EXPECT_LT(std::abs(mean - a.trace().real() / d), 3.0 * se);
}

}  // namespace
}  // namespace qdp
