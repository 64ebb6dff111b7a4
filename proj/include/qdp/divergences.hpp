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

// The quantum hockey-stick divergence E_gamma(rho || sigma) = Tr(rho - gamma
// sigma)^+, its equivalent forms and bounds, and the max-relative entropy.

#ifndef QDP_DIVERGENCES_HPP_
#define QDP_DIVERGENCES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "qdp/core.hpp"
#include "qdp/random.hpp"
#include "qdp/spectral.hpp"

namespace qdp {

// gamma >= 1, with epsilon = ln(gamma).
class Gamma {
 public:
  explicit Gamma(double gamma) : gamma_(gamma) {
    if (!(gamma >= 1.0) || !std::isfinite(gamma)) {
      throw DomainError("gamma must be a finite value >= 1, got " + std::to_string(gamma));
    }
  }

  static Gamma from_epsilon(double epsilon) {
    if (!(epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
    return Gamma(std::exp(epsilon));
  }

  double value() const { return gamma_; }
  double epsilon() const { return std::log(gamma_); }

 private:
  double gamma_;
};

namespace detail {

inline void require_same_dim(const HermitianOperator& a, const HermitianOperator& b,
                             const char* what) {
  if (a.dim() != b.dim()) {
    throw ValidationError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()) + ")");
  }
}

// Tr(a - scale * b)^+ for any scale >= 0; no restriction to scale >= 1.
inline double scaled_positive_trace(const HermitianOperator& a, const HermitianOperator& b,
                                    double scale) {
  const RealVector ev = eigenvalues(HermitianOperator(Matrix(a.matrix() - scale * b.matrix())));
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > kSpectralZero) s += ev(i);
  }
  return s;
}

}  // namespace detail

// E_gamma(rho || sigma) from the positive eigenvalues of rho - gamma sigma.
inline double hockey_stick(const DensityMatrix& rho, const DensityMatrix& sigma, Gamma gamma) {
  detail::require_same_dim(rho, sigma, "hockey_stick");
  return detail::scaled_positive_trace(rho, sigma, gamma.value());
}

// Same quantity via 1/2 ||rho - gamma sigma||_1 + 1/2 (1 - gamma).
inline double hockey_stick_trace_norm(const DensityMatrix& rho, const DensityMatrix& sigma,
                                      Gamma gamma) {
  detail::require_same_dim(rho, sigma, "hockey_stick_trace_norm");
  const double g = gamma.value();
  const double norm = trace_norm(HermitianOperator(Matrix(rho.matrix() - g * sigma.matrix())));
  return std::max(0.0, 0.5 * norm + 0.5 * (1.0 - g));
}

// 1/2 ||rho - sigma||_1.
inline double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho, sigma, "trace_distance");
  return 0.5 * trace_norm(HermitianOperator(Matrix(rho.matrix() - sigma.matrix())));
}

// max over {projector onto supp (rho - gamma sigma)^+} and `n_samples`
// random effects of Tr Lambda (rho - gamma sigma).
inline double hockey_stick_measurement_oracle(const DensityMatrix& rho, const DensityMatrix& sigma,
                                              Gamma gamma, std::size_t n_samples,
                                              std::uint64_t seed) {
  detail::require_same_dim(rho, sigma, "hockey_stick_measurement_oracle");
  const HermitianOperator x(Matrix(rho.matrix() - gamma.value() * sigma.matrix()));
  const Eigensystem es = eigensystem(x);
  Matrix projector = Matrix::Zero(x.dim(), x.dim());
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    if (es.values(i) > kSpectralZero) projector += es.vectors.col(i) * es.vectors.col(i).adjoint();
  }
  double best = std::max(0.0, (projector * x.matrix()).trace().real());
  Rng rng(seed);
  for (std::size_t s = 0; s < n_samples; ++s) {
    const MeasurementEffect m = sample_effect(x.dim(), rng);
    best = std::max(best, trace_product(m, x));
  }
  return best;
}

// 1/2 sqrt((1 + gamma)^2 - 4 gamma F) + (1 - gamma) / 2.
inline double fvdg_bound_from_fidelity(double fidelity_value, Gamma gamma) {
  const double g = gamma.value();
  const double f = std::clamp(fidelity_value, 0.0, 1.0);
  const double radicand = std::max(0.0, (1.0 + g) * (1.0 + g) - 4.0 * g * f);
  return 0.5 * std::sqrt(radicand) + 0.5 * (1.0 - g);
}

inline double fvdg_upper_bound(const DensityMatrix& rho, const DensityMatrix& sigma, Gamma gamma) {
  return fvdg_bound_from_fidelity(fidelity(rho, sigma), gamma);
}

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

// 1 - gamma (1 - T) <= E_gamma <= T with T the trace distance.
inline Interval trace_distance_sandwich(const DensityMatrix& rho, const DensityMatrix& sigma,
                                        Gamma gamma) {
  const double t = trace_distance(rho, sigma);
  return {1.0 - gamma.value() * (1.0 - t), t};
}

// inf { lambda : rho <= e^lambda sigma }; +infinity when supp rho is not
// contained in supp sigma.
inline double d_max(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho, sigma, "d_max");
  const Eigensystem es = eigensystem(sigma);
  const Matrix outside = Matrix::Identity(rho.dim(), rho.dim()) - support_projector(es);
  if ((outside * rho.matrix() * outside).trace().real() > kStateTolerance) {
    return std::numeric_limits<double>::infinity();
  }
  const Matrix s = support_power(es, -0.5);
  const double top = eigenvalues(HermitianOperator(Matrix(s * rho.matrix() * s))).maxCoeff();
  return std::log(top);
}

// Witness for the smooth max-relative entropy: rho_bar = gamma sigma has
// D_max(rho_bar || sigma) = ln gamma, and Tr(rho - rho_bar)^+ equals
// E_gamma(rho || sigma).
struct SmoothingWitness {
  HermitianOperator rho_bar;
  double dmax_value = 0.0;
  double smoothing_radius = 0.0;  // Tr(rho - rho_bar)^+
  double half_trace_norm = 0.0;   // 1/2 ||rho - rho_bar||_1, reported alongside
};

inline SmoothingWitness smooth_dmax_witness(const DensityMatrix& rho, const DensityMatrix& sigma,
                                            Gamma gamma) {
  detail::require_same_dim(rho, sigma, "smooth_dmax_witness");
  HermitianOperator rho_bar(Matrix(gamma.value() * sigma.matrix()));
  const HermitianOperator diff(Matrix(rho.matrix() - rho_bar.matrix()));
  return {std::move(rho_bar), gamma.epsilon(), positive_part(diff).trace_plus,
          0.5 * trace_norm(diff)};
}

// Classical hockey-stick divergence of probability vectors.
inline double hockey_stick_classical(const std::vector<double>& p, const std::vector<double>& q,
                                     double gamma) {
  if (p.size() != q.size()) throw ValidationError("hockey_stick_classical: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::max(0.0, p[i] - gamma * q[i]);
  return s;
}

}  // namespace qdp

#endif  // QDP_DIVERGENCES_HPP_
