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

// Seeded sampling of states, unitaries, orthogonal pure pairs, measurement
// effects and channels. Every sampler is a pure function of its seed.

#ifndef QDP_RANDOM_HPP_
#define QDP_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "qdp/channel.hpp"
#include "qdp/core.hpp"
#include "qdp/spectral.hpp"

namespace qdp {

// SplitMix64 finalizer; used to derive independent child seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix_seed(mix_seed(seed) ^ mix_seed(index + 0x632be59bd9b4e019ULL));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed)) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  Complex complex_normal() {
    // Standard complex Gaussian: E|z|^2 = 1.
    const double re = normal();
    const double im = normal();
    return {re * kInvSqrt2, im * kInvSqrt2};
  }

  Matrix ginibre(std::size_t rows, std::size_t cols) {
    Matrix g(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t i = 0; i < rows; ++i) g(i, j) = complex_normal();
    }
    return g;
  }

 private:
  static constexpr double kInvSqrt2 = 0.70710678118654752440;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

// Haar-random unitary: QR of a Ginibre matrix with the phases of R's
// diagonal absorbed into Q.
inline Matrix haar_unitary(std::size_t dim, Rng& rng) {
  const Matrix g = rng.ginibre(dim, dim);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q;
}

inline Matrix haar_unitary(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return haar_unitary(dim, rng);
}

// Ginibre ensemble: G G^dagger / Tr with G of shape dim x rank.
inline DensityMatrix sample_state(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  if (dim == 0 || rank == 0 || rank > dim) {
    throw ValidationError("sample_state: require 1 <= rank <= dim");
  }
  Rng rng(seed);
  const Matrix g = rng.ginibre(dim, rank);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(detail::symmetrized(m));
}

inline DensityMatrix sample_state(std::size_t dim, std::uint64_t seed) {
  return sample_state(dim, dim, seed);
}

struct PurePair {
  Vector phi;
  Vector psi;

  DensityMatrix phi_state() const { return DensityMatrix::pure(phi); }
  DensityMatrix psi_state() const { return DensityMatrix::pure(psi); }
};

// First two columns of a Haar unitary.
inline PurePair sample_orthogonal_pure_pair(std::size_t dim, std::uint64_t seed) {
  if (dim < 2) throw ValidationError("sample_orthogonal_pure_pair: dim must be at least 2");
  const Matrix u = haar_unitary(dim, seed);
  return {u.col(0), u.col(1)};
}

// M = u H / lambda_max(H), H = G G^dagger, u ~ U[0, 1].
inline MeasurementEffect sample_effect(std::size_t dim, Rng& rng) {
  if (dim == 0) throw ValidationError("sample_effect: dim must be positive");
  const Matrix g = rng.ginibre(dim, dim);
  const HermitianOperator h(Matrix(g * g.adjoint()));
  const double top = eigenvalues(h).maxCoeff();
  const double u = rng.uniform();
  Matrix m = (u / top) * h.matrix();
  return MeasurementEffect(std::move(m));
}

inline MeasurementEffect sample_effect(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return sample_effect(dim, rng);
}

// Random channel from a Haar isometry C^dim -> C^(dim * n_kraus).
inline QuantumChannel sample_channel(std::size_t dim, std::size_t n_kraus, std::uint64_t seed) {
  if (dim == 0 || n_kraus == 0) throw ValidationError("sample_channel: invalid sizes");
  const Matrix u = haar_unitary(dim * n_kraus, seed);
  std::vector<Matrix> ks;
  ks.reserve(n_kraus);
  for (std::size_t k = 0; k < n_kraus; ++k) ks.push_back(u.block(k * dim, 0, dim, dim));
  return QuantumChannel(dim, dim, std::move(ks));
}

}  // namespace qdp

#endif  // QDP_RANDOM_HPP_
