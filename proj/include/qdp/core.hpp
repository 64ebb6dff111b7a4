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

// Dense complex-matrix foundation: operator types with validated invariants
// and the error hierarchy shared by every qdp module.

#ifndef QDP_CORE_HPP_
#define QDP_CORE_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qdp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerances. Eigenvalues below kSpectralZero in magnitude are treated as
// zero when splitting an operator into positive and negative parts.
inline constexpr double kSpectralZero = 1e-12;
inline constexpr double kHermitianTolerance = 1e-8;
inline constexpr double kStateTolerance = 1e-10;
inline constexpr double kChannelTolerance = 1e-9;

// Input failed a structural check (shape, symmetry, positivity, trace).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameter outside the mathematical domain of an operation (gamma < 1,
// alpha out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A caller-asserted premise does not hold for the supplied inputs.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The requested method does not apply to the supplied object.
class MethodError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A certificate would have to rely on a quantity that is not a sound upper
// bound (e.g. an optimizer's lower estimate of a contraction coefficient).
class SoundnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline double hermitian_defect(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ValidationError(std::string(what) + ": matrix must be square and non-empty, got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

inline Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

inline Matrix checked_hermitian(Matrix m, double tol, const char* what) {
  require_square(m, what);
  const double defect = hermitian_defect(m);
  if (!(defect <= tol)) {
    throw ValidationError(std::string(what) + ": asymmetry " + std::to_string(defect) +
                          " exceeds tolerance");
  }
  return m;
}

}  // namespace detail

// Hermitian matrix; not necessarily positive or normalized. Holds
// differences such as rho - gamma * sigma.
class HermitianOperator {
 public:
  HermitianOperator() = default;

  explicit HermitianOperator(Matrix m)
      : m_(detail::symmetrized(
            detail::checked_hermitian(std::move(m), kHermitianTolerance, "HermitianOperator"))) {}

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }

  friend HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
    check_same_dim(a, b);
    return HermitianOperator(a.m_ + b.m_);
  }
  friend HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b) {
    check_same_dim(a, b);
    return HermitianOperator(a.m_ - b.m_);
  }
  friend HermitianOperator operator*(double s, const HermitianOperator& a) {
    return HermitianOperator(s * a.m_);
  }

 protected:
  static void check_same_dim(const HermitianOperator& a, const HermitianOperator& b) {
    if (a.dim() != b.dim()) {
      throw ValidationError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
    }
  }

  Matrix m_;
};

inline RealVector eigenvalues(const HermitianOperator& x) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(x.matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

// Positive semidefinite, unit-trace Hermitian matrix.
class DensityMatrix : public HermitianOperator {
 public:
  DensityMatrix() = default;

  explicit DensityMatrix(Matrix m)
      : HermitianOperator(detail::checked_hermitian(std::move(m), kStateTolerance,
                                                    "DensityMatrix")) {
    const double tr = trace();
    if (!(std::abs(tr - 1.0) <= kStateTolerance)) {
      throw ValidationError("DensityMatrix: trace " + std::to_string(tr) + " differs from 1");
    }
    const double min_eig = eigenvalues(*this).minCoeff();
    if (!(min_eig >= -kStateTolerance)) {
      throw ValidationError("DensityMatrix: negative eigenvalue " + std::to_string(min_eig));
    }
  }

  // Accepts an operator that is already known to be a state up to rounding
  // (e.g. a channel output) and re-validates it.
  explicit DensityMatrix(const HermitianOperator& x) : DensityMatrix(x.matrix()) {}

  static DensityMatrix pure(const Vector& psi) {
    const double n = psi.norm();
    if (!(n > 0.0)) throw ValidationError("DensityMatrix::pure: zero vector");
    const Vector v = psi / n;
    return DensityMatrix(Matrix(v * v.adjoint()));
  }

  static DensityMatrix basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw ValidationError("DensityMatrix::basis: index out of range");
    Matrix m = Matrix::Zero(dim, dim);
    m(index, index) = 1.0;
    return DensityMatrix(std::move(m));
  }

  static DensityMatrix maximally_mixed(std::size_t dim) {
    if (dim == 0) throw ValidationError("DensityMatrix::maximally_mixed: dim must be positive");
    return DensityMatrix(Matrix(Matrix::Identity(dim, dim) / static_cast<double>(dim)));
  }

  static DensityMatrix diagonal(const std::vector<double>& probs) {
    Matrix m = Matrix::Zero(probs.size(), probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i) m(i, i) = probs[i];
    return DensityMatrix(std::move(m));
  }

  double purity() const { return (matrix() * matrix()).trace().real(); }
};

// Measurement effect 0 <= M <= 1.
class MeasurementEffect : public HermitianOperator {
 public:
  MeasurementEffect() = default;

  explicit MeasurementEffect(Matrix m) : HermitianOperator(std::move(m)) {
    const RealVector ev = eigenvalues(*this);
    if (!(ev.minCoeff() >= -kStateTolerance) || !(ev.maxCoeff() <= 1.0 + kStateTolerance)) {
      throw ValidationError("MeasurementEffect: eigenvalues must lie in [0, 1]");
    }
  }

  static MeasurementEffect identity(std::size_t dim) {
    return MeasurementEffect(Matrix(Matrix::Identity(dim, dim)));
  }
  static MeasurementEffect zero(std::size_t dim) {
    return MeasurementEffect(Matrix(Matrix::Zero(dim, dim)));
  }

  MeasurementEffect complement() const {
    return MeasurementEffect(Matrix(Matrix::Identity(dim(), dim()) - matrix()));
  }
};

// Tr[A B] for Hermitian A, B (real part; the imaginary part vanishes).
inline double trace_product(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw ValidationError("trace_product: dimension mismatch");
  return (a.matrix().cwiseProduct(b.matrix().transpose())).sum().real();
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

// Convex mixture sum_x weights[x] * states[x].
inline DensityMatrix mixture(const std::vector<double>& weights,
                             const std::vector<DensityMatrix>& states) {
  if (weights.size() != states.size() || states.empty()) {
    throw ValidationError("mixture: weights and states must be non-empty and equally sized");
  }
  Matrix m = Matrix::Zero(states[0].dim(), states[0].dim());
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].dim() != states[0].dim()) throw ValidationError("mixture: dimension mismatch");
    if (weights[i] < 0.0) throw ValidationError("mixture: negative weight");
    m += weights[i] * states[i].matrix();
  }
  return DensityMatrix(std::move(m));
}

}  // namespace qdp

#endif  // QDP_CORE_HPP_
