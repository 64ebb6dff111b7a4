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

#ifndef QDP_SPECTRAL_HPP_
#define QDP_SPECTRAL_HPP_

#include <cmath>
#include <functional>
#include <limits>

#include "qdp/core.hpp"

namespace qdp {

struct Eigensystem {
  RealVector values;  // ascending
  Matrix vectors;     // columns
};

inline Eigensystem eigensystem(const HermitianOperator& x) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(x.matrix());
  if (es.info() != Eigen::Success) throw ValidationError("eigensystem: solver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

// V f(Lambda) V^dagger. `f` is only evaluated on eigenvalues it is given.
inline Matrix spectral_apply(const Eigensystem& es, const std::function<double(double)>& f) {
  RealVector mapped(es.values.size());
  for (Eigen::Index i = 0; i < es.values.size(); ++i) mapped(i) = f(es.values(i));
  return es.vectors * mapped.cast<Complex>().asDiagonal() * es.vectors.adjoint();
}

struct PositivePart {
  HermitianOperator positive;  // X^+
  double trace_plus = 0.0;     // Tr X^+
  Matrix projector;            // onto the eigenspace of strictly positive eigenvalues
};

inline PositivePart positive_part(const HermitianOperator& x) {
  const Eigensystem es = eigensystem(x);
  const Eigen::Index d = es.values.size();
  RealVector kept = RealVector::Zero(d);
  RealVector proj = RealVector::Zero(d);
  double trace_plus = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (es.values(i) > kSpectralZero) {
      kept(i) = es.values(i);
      proj(i) = 1.0;
      trace_plus += es.values(i);
    }
  }
  const Matrix& v = es.vectors;
  return {HermitianOperator(Matrix(v * kept.cast<Complex>().asDiagonal() * v.adjoint())),
          trace_plus, Matrix(v * proj.cast<Complex>().asDiagonal() * v.adjoint())};
}

// Sum of absolute eigenvalues.
inline double trace_norm(const HermitianOperator& x) {
  return eigenvalues(x).cwiseAbs().sum();
}

// Sum of singular values of an arbitrary square matrix.
inline double trace_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

// Principal square root of a positive semidefinite operator; tiny negative
// eigenvalues from rounding are clipped to zero.
inline Matrix psd_sqrt(const HermitianOperator& x) {
  return spectral_apply(eigensystem(x), [](double v) { return v > 0.0 ? std::sqrt(v) : 0.0; });
}

// Power restricted to the support (eigenvalues above `support_tol`);
// negative exponents are pseudo-inverse powers.
inline Matrix support_power(const Eigensystem& es, double exponent,
                            double support_tol = kSpectralZero) {
  return spectral_apply(es, [&](double v) { return v > support_tol ? std::pow(v, exponent) : 0.0; });
}

inline Matrix support_projector(const Eigensystem& es, double support_tol = kSpectralZero) {
  return spectral_apply(es, [&](double v) { return v > support_tol ? 1.0 : 0.0; });
}

// F(rho, sigma) = || sqrt(rho) sqrt(sigma) ||_1^2.
inline double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw ValidationError("fidelity: dimension mismatch");
  const double root = trace_norm(Matrix(psd_sqrt(rho) * psd_sqrt(sigma)));
  return root * root;
}

}  // namespace qdp

#endif  // QDP_SPECTRAL_HPP_
