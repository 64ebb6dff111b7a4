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

// Completely positive maps in Kraus form, their Choi matrices and the
// channels used throughout the library (identity, unitary, depolarizing,
// amplitude damping).

#ifndef QDP_CHANNEL_HPP_
#define QDP_CHANNEL_HPP_

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdp/core.hpp"
#include "qdp/spectral.hpp"

namespace qdp {

// Completely positive map rho -> sum_i K_i rho K_i^dagger. Not necessarily
// trace preserving (adjoints of channels, N^dagger o N, ...).
class KrausMap {
 public:
  KrausMap() = default;

  KrausMap(std::size_t dim_in, std::size_t dim_out, std::vector<Matrix> kraus)
      : dim_in_(dim_in), dim_out_(dim_out), kraus_(std::move(kraus)) {
    if (dim_in_ == 0 || dim_out_ == 0) throw ValidationError("KrausMap: dimensions must be positive");
    if (kraus_.empty()) throw ValidationError("KrausMap: at least one Kraus operator required");
    for (const Matrix& k : kraus_) {
      if (static_cast<std::size_t>(k.rows()) != dim_out_ ||
          static_cast<std::size_t>(k.cols()) != dim_in_) {
        throw ValidationError("KrausMap: Kraus operator has shape " + std::to_string(k.rows()) +
                              "x" + std::to_string(k.cols()) + ", expected " +
                              std::to_string(dim_out_) + "x" + std::to_string(dim_in_));
      }
    }
  }

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  bool is_square() const { return dim_in_ == dim_out_; }

  Matrix apply(const Matrix& x) const {
    if (static_cast<std::size_t>(x.rows()) != dim_in_ ||
        static_cast<std::size_t>(x.cols()) != dim_in_) {
      throw ValidationError("apply: operator dimension " + std::to_string(x.rows()) +
                            " does not match channel input dimension " + std::to_string(dim_in_));
    }
    Matrix out = Matrix::Zero(dim_out_, dim_out_);
    for (const Matrix& k : kraus_) out.noalias() += k * x * k.adjoint();
    return out;
  }

  // sum_i K_i^dagger K_i
  Matrix kraus_gram() const {
    Matrix g = Matrix::Zero(dim_in_, dim_in_);
    for (const Matrix& k : kraus_) g.noalias() += k.adjoint() * k;
    return g;
  }

 private:
  std::size_t dim_in_ = 0;
  std::size_t dim_out_ = 0;
  std::vector<Matrix> kraus_;
};

// CPTP map: a KrausMap with sum_i K_i^dagger K_i = 1.
class QuantumChannel : public KrausMap {
 public:
  QuantumChannel() = default;

  QuantumChannel(std::size_t dim_in, std::size_t dim_out, std::vector<Matrix> kraus)
      : KrausMap(dim_in, dim_out, std::move(kraus)) {
    check_trace_preserving();
  }

  explicit QuantumChannel(KrausMap map) : KrausMap(std::move(map)) { check_trace_preserving(); }

 private:
  void check_trace_preserving() const {
    const Matrix defect = kraus_gram() - Matrix::Identity(dim_in(), dim_in());
    const double err = defect.cwiseAbs().maxCoeff();
    if (!(err <= kChannelTolerance)) {
      throw ValidationError("QuantumChannel: Kraus operators are not trace preserving (defect " +
                            std::to_string(err) + ")");
    }
  }
};

inline HermitianOperator apply(const KrausMap& map, const HermitianOperator& x) {
  return HermitianOperator(map.apply(x.matrix()));
}

inline DensityMatrix apply(const QuantumChannel& channel, const DensityMatrix& rho) {
  return DensityMatrix(channel.apply(rho.matrix()));
}

// Heisenberg-picture map with Kraus operators K_i^dagger.
inline KrausMap adjoint(const KrausMap& map) {
  std::vector<Matrix> ks;
  ks.reserve(map.kraus().size());
  for (const Matrix& k : map.kraus()) ks.push_back(k.adjoint());
  return KrausMap(map.dim_out(), map.dim_in(), std::move(ks));
}

// outer o inner (inner applied first).
inline KrausMap compose(const KrausMap& outer, const KrausMap& inner) {
  if (outer.dim_in() != inner.dim_out()) throw ValidationError("compose: dimension mismatch");
  std::vector<Matrix> ks;
  ks.reserve(outer.kraus().size() * inner.kraus().size());
  for (const Matrix& a : outer.kraus()) {
    for (const Matrix& b : inner.kraus()) ks.push_back(a * b);
  }
  return KrausMap(inner.dim_in(), outer.dim_out(), std::move(ks));
}

inline QuantumChannel compose(const QuantumChannel& outer, const QuantumChannel& inner) {
  return QuantumChannel(compose(static_cast<const KrausMap&>(outer),
                                static_cast<const KrausMap&>(inner)));
}

inline KrausMap tensor(const KrausMap& a, const KrausMap& b) {
  std::vector<Matrix> ks;
  ks.reserve(a.kraus().size() * b.kraus().size());
  for (const Matrix& x : a.kraus()) {
    for (const Matrix& y : b.kraus()) ks.push_back(kron(x, y));
  }
  return KrausMap(a.dim_in() * b.dim_in(), a.dim_out() * b.dim_out(), std::move(ks));
}

inline QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b) {
  return QuantumChannel(
      tensor(static_cast<const KrausMap&>(a), static_cast<const KrausMap&>(b)));
}

inline QuantumChannel tensor_power(const QuantumChannel& c, std::size_t k) {
  if (k == 0) throw ValidationError("tensor_power: k must be positive");
  QuantumChannel out = c;
  for (std::size_t i = 1; i < k; ++i) out = tensor(out, c);
  return out;
}

// Choi matrix sum_ij N(|i><j|) (x) |i><j| (output factor first).
class ChoiMatrix {
 public:
  ChoiMatrix(std::size_t dim_in, std::size_t dim_out, Matrix m)
      : dim_in_(dim_in), dim_out_(dim_out), m_(std::move(m)) {
    if (static_cast<std::size_t>(m_.rows()) != dim_in_ * dim_out_ || m_.rows() != m_.cols()) {
      throw ValidationError("ChoiMatrix: shape mismatch");
    }
  }

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  const Matrix& matrix() const { return m_; }

  RealVector eigenvalues() const { return qdp::eigenvalues(HermitianOperator(m_)); }
  double min_eigenvalue() const { return eigenvalues().minCoeff(); }

  // Tr over the output factor; equals the identity for trace-preserving maps.
  Matrix partial_trace_output() const {
    Matrix out = Matrix::Zero(dim_in_, dim_in_);
    for (std::size_t a = 0; a < dim_out_; ++a) {
      out += m_.block(a * dim_in_, a * dim_in_, dim_in_, dim_in_);
    }
    return out;
  }

 private:
  std::size_t dim_in_;
  std::size_t dim_out_;
  Matrix m_;
};

inline ChoiMatrix choi(const KrausMap& map) {
  if (!map.is_square()) throw ValidationError("choi: channel must have dim_in == dim_out");
  const std::size_t din = map.dim_in();
  const std::size_t dout = map.dim_out();
  Matrix c = Matrix::Zero(din * dout, din * dout);
  // Column-vectorized form: v_k[(a, i)] = K_k(a, i), C = sum_k v_k v_k^dagger.
  for (const Matrix& k : map.kraus()) {
    Vector v(din * dout);
    for (std::size_t a = 0; a < dout; ++a) {
      for (std::size_t i = 0; i < din; ++i) v(a * din + i) = k(a, i);
    }
    c.noalias() += v * v.adjoint();
  }
  return ChoiMatrix(din, dout, std::move(c));
}

// Kraus operators from the spectral decomposition of a Choi matrix.
inline KrausMap kraus_from_choi(const ChoiMatrix& c, double tol = 1e-12) {
  const Eigensystem es = eigensystem(HermitianOperator(c.matrix()));
  if (es.values.minCoeff() < -kChannelTolerance) {
    throw ValidationError("kraus_from_choi: Choi matrix is not positive semidefinite");
  }
  const std::size_t din = c.dim_in();
  const std::size_t dout = c.dim_out();
  std::vector<Matrix> ks;
  for (Eigen::Index e = 0; e < es.values.size(); ++e) {
    if (es.values(e) <= tol) continue;
    const Vector v = std::sqrt(es.values(e)) * es.vectors.col(e);
    Matrix k(dout, din);
    for (std::size_t a = 0; a < dout; ++a) {
      for (std::size_t i = 0; i < din; ++i) k(a, i) = v(a * din + i);
    }
    ks.push_back(std::move(k));
  }
  if (ks.empty()) ks.push_back(Matrix::Zero(dout, din));
  return KrausMap(din, dout, std::move(ks));
}

// -- standard channels -------------------------------------------------------

inline QuantumChannel identity_channel(std::size_t dim) {
  return QuantumChannel(dim, dim, {Matrix::Identity(dim, dim)});
}

inline QuantumChannel unitary_channel(const Matrix& u) {
  detail::require_square(u, "unitary_channel");
  const Matrix defect = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  if (defect.cwiseAbs().maxCoeff() > kChannelTolerance) {
    throw ValidationError("unitary_channel: matrix is not unitary");
  }
  const auto d = static_cast<std::size_t>(u.rows());
  return QuantumChannel(d, d, {u});
}

// Weyl (generalized Pauli) operator X^a Z^b on C^dim.
inline Matrix weyl_operator(std::size_t dim, std::size_t a, std::size_t b) {
  const double two_pi = 2.0 * std::numbers::pi;
  Matrix w = Matrix::Zero(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const double phase = two_pi * static_cast<double>(b * j) / static_cast<double>(dim);
    w((j + a) % dim, j) = std::polar(1.0, phase);
  }
  return w;
}

// D_p(rho) = (1 - p) rho + p 1/D, via the Weyl twirl
// (1/D^2) sum_ab W_ab rho W_ab^dagger = Tr(rho) 1/D.
inline QuantumChannel depolarizing_channel(std::size_t dim, double p) {
  if (dim < 2) throw ValidationError("depolarizing_channel: dimension must be at least 2");
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("depolarizing_channel: p must lie in [0, 1]");
  const double d2 = static_cast<double>(dim * dim);
  std::vector<Matrix> ks;
  ks.reserve(dim * dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      const double w = (a == 0 && b == 0) ? (1.0 - p + p / d2) : p / d2;
      if (w == 0.0 && !(a == 0 && b == 0)) continue;
      ks.push_back(std::sqrt(w) * weyl_operator(dim, a, b));
    }
  }
  return QuantumChannel(dim, dim, std::move(ks));
}

// Qubit amplitude damping with decay probability `gamma_decay`.
inline QuantumChannel amplitude_damping_channel(double gamma_decay) {
  if (!(gamma_decay >= 0.0 && gamma_decay <= 1.0)) {
    throw ValidationError("amplitude_damping_channel: parameter must lie in [0, 1]");
  }
  Matrix k0 = Matrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma_decay);
  Matrix k1 = Matrix::Zero(2, 2);
  k1(0, 1) = std::sqrt(gamma_decay);
  return QuantumChannel(2, 2, {k0, k1});
}

// If `c` acts as a depolarizing channel D_p, returns p. Detection compares
// the Choi matrix against (1 - p) |Omega><Omega| + (p / D) 1 (x) 1 entrywise.
inline std::optional<double> recognize_depolarizing(const KrausMap& c, double tol = 1e-9) {
  if (!c.is_square() || c.dim_in() < 2) return std::nullopt;
  const std::size_t d = c.dim_in();
  const Matrix cm = choi(c).matrix();
  // Entry <00| C |11> = 1 - p for the depolarizing channel.
  const double p = 1.0 - cm(0, d + 1).real();
  if (!(p >= -tol && p <= 1.0 + tol)) return std::nullopt;
  Matrix expected = (p / static_cast<double>(d)) * Matrix::Identity(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) expected(i * d + i, j * d + j) += 1.0 - p;
  }
  if ((cm - expected).cwiseAbs().maxCoeff() > tol) return std::nullopt;
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace qdp

#endif  // QDP_CHANNEL_HPP_
