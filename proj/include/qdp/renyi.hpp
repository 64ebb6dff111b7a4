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

// Quantum relative entropies (natural log): sandwiched and Petz Renyi
// divergences, Umegaki relative entropy, and the measured relative entropy
// envelope for epsilon-DP channels.

#ifndef QDP_RENYI_HPP_
#define QDP_RENYI_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>

#include "qdp/channel.hpp"
#include "qdp/core.hpp"
#include "qdp/divergences.hpp"
#include "qdp/random.hpp"
#include "qdp/spectral.hpp"

namespace qdp {

enum class RenyiKind { kSandwiched, kPetz, kUmegaki };

inline std::string_view to_string(RenyiKind k) {
  switch (k) {
    case RenyiKind::kSandwiched: return "sandwiched";
    case RenyiKind::kPetz: return "petz";
    case RenyiKind::kUmegaki: return "umegaki";
  }
  return "unknown";
}

inline RenyiKind parse_renyi_kind(std::string_view s) {
  if (s == "sandwiched") return RenyiKind::kSandwiched;
  if (s == "petz") return RenyiKind::kPetz;
  if (s == "umegaki") return RenyiKind::kUmegaki;
  throw DomainError("unknown Renyi divergence kind '" + std::string(s) + "'");
}

namespace detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool support_contained(const DensityMatrix& rho, const Eigensystem& sigma_es) {
  const Matrix outside =
      Matrix::Identity(rho.dim(), rho.dim()) - support_projector(sigma_es);
  return (outside * rho.matrix() * outside).trace().real() <= kStateTolerance;
}

// ln sum_i lambda_i^alpha without overflow for large alpha.
inline double log_power_sum(const RealVector& lambda, double alpha) {
  const double top = lambda.maxCoeff();
  if (!(top > kSpectralZero)) return -kInf;
  double s = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) > 0.0) s += std::pow(lambda(i) / top, alpha);
  }
  return alpha * std::log(top) + std::log(s);
}

inline double sandwiched(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha) {
  const Eigensystem es = eigensystem(sigma);
  if (alpha > 1.0 && !support_contained(rho, es)) return kInf;
  const Matrix s = support_power(es, (1.0 - alpha) / (2.0 * alpha));
  const RealVector lambda = eigenvalues(HermitianOperator(Matrix(s * rho.matrix() * s)));
  const double log_q = log_power_sum(lambda, alpha);
  if (log_q == -kInf) return kInf;
  return log_q / (alpha - 1.0);
}

inline double petz(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha) {
  const Eigensystem es = eigensystem(sigma);
  if (alpha > 1.0 && !support_contained(rho, es)) return kInf;
  const Matrix a = support_power(eigensystem(rho), alpha);
  const Matrix b = support_power(es, 1.0 - alpha);
  const double q = (a * b).trace().real();
  if (!(q > 0.0)) return kInf;
  return std::log(q) / (alpha - 1.0);
}

inline double umegaki(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const Eigensystem es = eigensystem(sigma);
  if (!support_contained(rho, es)) return kInf;
  const RealVector lr = eigenvalues(rho);
  double entropy_term = 0.0;
  for (Eigen::Index i = 0; i < lr.size(); ++i) {
    if (lr(i) > kSpectralZero) entropy_term += lr(i) * std::log(lr(i));
  }
  const Matrix log_sigma =
      spectral_apply(es, [](double v) { return v > kSpectralZero ? std::log(v) : 0.0; });
  return entropy_term - (rho.matrix() * log_sigma).trace().real();
}

}  // namespace detail

// Sandwiched: alpha >= 1/2, alpha != 1. Petz: alpha in (0, 1) u (1, 2].
// Umegaki ignores alpha. Returns +infinity when the support condition fails.
inline double renyi_divergence(RenyiKind kind, const DensityMatrix& rho,
                               const DensityMatrix& sigma, double alpha) {
  detail::require_same_dim(rho, sigma, "renyi_divergence");
  switch (kind) {
    case RenyiKind::kSandwiched:
      if (!(alpha >= 0.5) || alpha == 1.0 || std::isnan(alpha)) {
        throw DomainError("sandwiched Renyi divergence requires alpha >= 1/2 and alpha != 1");
      }
      if (std::isinf(alpha)) return d_max(rho, sigma);
      return detail::sandwiched(rho, sigma, alpha);
    case RenyiKind::kPetz:
      if (!(alpha > 0.0 && alpha <= 2.0) || alpha == 1.0) {
        throw DomainError("Petz Renyi divergence requires alpha in (0, 1) or (1, 2]");
      }
      return detail::petz(rho, sigma, alpha);
    case RenyiKind::kUmegaki:
      return detail::umegaki(rho, sigma);
  }
  throw DomainError("renyi_divergence: unknown kind");
}

inline double umegaki_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return renyi_divergence(RenyiKind::kUmegaki, rho, sigma, 1.0);
}

// Classical KL divergence; 0 log 0 = 0, p > 0 with q = 0 gives +infinity.
inline double kl_divergence(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw ValidationError("kl_divergence: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return detail::kInf;
    s += p[i] * std::log(p[i] / q[i]);
  }
  return std::max(0.0, s);
}

struct MeasuredRelentReport {
  bool pass = false;
  double epsilon = 0.0;
  double dmax_forward = 0.0;   // D_max(A(rho) || A(sigma))
  double dmax_backward = 0.0;  // D_max(A(sigma) || A(rho))
  double trace_distance = 0.0; // E_1(A(rho) || A(sigma))
  double envelope = 0.0;       // 2 epsilon E_1
  double outer_envelope = 0.0; // 2 epsilon (1 - e^-epsilon)
  double max_kl = 0.0;         // over all evaluated two-outcome POVMs
  std::size_t n_evaluated = 0;
};

// For an epsilon-DP pair of outputs, every two-outcome POVM {M, 1 - M} has
// KL(p || q) <= 2 epsilon E_1(A(rho) || A(sigma)) <= 2 epsilon (1 - e^-epsilon).
// Besides `n_povms` random effects, the projector onto the positive part of
// A(rho) - A(sigma) is evaluated.
inline MeasuredRelentReport measured_relent_bound_check(const QuantumChannel& channel,
                                                        const DensityMatrix& rho,
                                                        const DensityMatrix& sigma, double epsilon,
                                                        std::size_t n_povms, std::uint64_t seed) {
  if (!(epsilon >= 0.0)) throw DomainError("measured_relent_bound_check: epsilon must be >= 0");
  const DensityMatrix out_rho = apply(channel, rho);
  const DensityMatrix out_sigma = apply(channel, sigma);

  MeasuredRelentReport r;
  r.epsilon = epsilon;
  r.dmax_forward = d_max(out_rho, out_sigma);
  r.dmax_backward = d_max(out_sigma, out_rho);
  constexpr double kPremiseSlack = 1e-9;
  if (!(r.dmax_forward <= epsilon + kPremiseSlack) ||
      !(r.dmax_backward <= epsilon + kPremiseSlack)) {
    std::ostringstream msg;
    msg << "measured_relent_bound_check: outputs are not epsilon-DP related (epsilon = "
        << epsilon << ", D_max forward = " << r.dmax_forward
        << ", D_max backward = " << r.dmax_backward << ")";
    throw PreconditionError(msg.str());
  }
  r.trace_distance = trace_distance(out_rho, out_sigma);
  r.envelope = 2.0 * epsilon * r.trace_distance;
  r.outer_envelope = 2.0 * epsilon * (1.0 - std::exp(-epsilon));

  auto evaluate = [&](const HermitianOperator& m) {
    const double p1 = std::clamp(trace_product(m, out_rho), 0.0, 1.0);
    const double q1 = std::clamp(trace_product(m, out_sigma), 0.0, 1.0);
    r.max_kl = std::max(r.max_kl, kl_divergence({p1, 1.0 - p1}, {q1, 1.0 - q1}));
    ++r.n_evaluated;
  };
  evaluate(HermitianOperator(
      positive_part(HermitianOperator(Matrix(out_rho.matrix() - out_sigma.matrix()))).projector));
  Rng rng(seed);
  for (std::size_t i = 0; i < n_povms; ++i) evaluate(sample_effect(out_rho.dim(), rng));

  constexpr double kSlack = 1e-9;
  r.pass = r.max_kl <= r.envelope + kSlack && r.envelope <= r.outer_envelope + kSlack;
  return r;
}

}  // namespace qdp

#endif  // QDP_RENYI_HPP_
