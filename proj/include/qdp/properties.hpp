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

// Structural properties of the hockey-stick divergence as executable
// predicates. Inequalities report residual = rhs - lhs and pass when the
// residual is >= -kPropertySlack; identities report lhs - rhs and pass when
// its magnitude is <= kPropertySlack.

#ifndef QDP_PROPERTIES_HPP_
#define QDP_PROPERTIES_HPP_

#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdp/core.hpp"
#include "qdp/divergences.hpp"
#include "qdp/spectral.hpp"

namespace qdp {

inline constexpr double kPropertySlack = 1e-8;

struct PropertyResult {
  bool pass = false;
  double residual = 0.0;
};

enum class PropertyId {
  kTriangle,
  kStrongConvexity,
  kStability,
  kSubadditivity,
  kSymmetry,
  kTraceBound,
};

inline std::string_view to_string(PropertyId id) {
  switch (id) {
    case PropertyId::kTriangle: return "triangle";
    case PropertyId::kStrongConvexity: return "strong_convexity";
    case PropertyId::kStability: return "stability";
    case PropertyId::kSubadditivity: return "subadditivity";
    case PropertyId::kSymmetry: return "symmetry";
    case PropertyId::kTraceBound: return "trace_bound";
  }
  return "unknown";
}

namespace detail {

inline PropertyResult inequality(double lhs, double rhs) {
  const double r = rhs - lhs;
  return {r >= -kPropertySlack, r};
}

inline PropertyResult identity(double lhs, double rhs) {
  const double r = lhs - rhs;
  return {std::abs(r) <= kPropertySlack, r};
}

}  // namespace detail

// E_{g1 g2}(rho || sigma) <= E_{g1}(rho || tau) + g1 E_{g2}(tau || sigma).
inline PropertyResult check_triangle(const DensityMatrix& rho, const DensityMatrix& sigma,
                                     const DensityMatrix& tau, Gamma g1, Gamma g2) {
  const double lhs = hockey_stick(rho, sigma, Gamma(g1.value() * g2.value()));
  const double rhs = hockey_stick(rho, tau, g1) + g1.value() * hockey_stick(tau, sigma, g2);
  return detail::inequality(lhs, rhs);
}

// With rho = sum_x p(x) rho_x and sigma = sum_x q(x) sigma_x:
// E_{g1 g2}(rho || sigma) <= sum_x p(x) E_{g1}(rho_x || sigma_x) + g1 E_{g2}(p || q).
inline PropertyResult check_strong_convexity(const std::vector<double>& p,
                                             const std::vector<double>& q,
                                             const std::vector<DensityMatrix>& rhos,
                                             const std::vector<DensityMatrix>& sigmas, Gamma g1,
                                             Gamma g2) {
  if (p.size() != q.size() || p.size() != rhos.size() || p.size() != sigmas.size()) {
    throw ValidationError("check_strong_convexity: mismatched ensemble sizes");
  }
  const DensityMatrix rho = mixture(p, rhos);
  const DensityMatrix sigma = mixture(q, sigmas);
  const double lhs = hockey_stick(rho, sigma, Gamma(g1.value() * g2.value()));
  double rhs = g1.value() * hockey_stick_classical(p, q, g2.value());
  for (std::size_t x = 0; x < p.size(); ++x) rhs += p[x] * hockey_stick(rhos[x], sigmas[x], g1);
  return detail::inequality(lhs, rhs);
}

// E_gamma(rho (x) tau || sigma (x) tau) = E_gamma(rho || sigma).
inline PropertyResult check_stability(const DensityMatrix& rho, const DensityMatrix& sigma,
                                      const DensityMatrix& tau, Gamma gamma) {
  return detail::identity(hockey_stick(tensor(rho, tau), tensor(sigma, tau), gamma),
                          hockey_stick(rho, sigma, gamma));
}

// Both orderings of
// E_{g1 g2}(rho1 (x) rho2 || sigma1 (x) sigma2) <= E_{g1}(.) + g1 E_{g2}(.);
// the reported residual is the smaller of the two.
inline PropertyResult check_subadditivity(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                          const DensityMatrix& sigma1,
                                          const DensityMatrix& sigma2, Gamma g1, Gamma g2) {
  const double lhs =
      hockey_stick(tensor(rho1, rho2), tensor(sigma1, sigma2), Gamma(g1.value() * g2.value()));
  const PropertyResult a = detail::inequality(
      lhs, hockey_stick(rho1, sigma1, g1) + g1.value() * hockey_stick(rho2, sigma2, g2));
  const PropertyResult b = detail::inequality(
      lhs, hockey_stick(rho2, sigma2, g1) + g1.value() * hockey_stick(rho1, sigma1, g2));
  return a.residual <= b.residual ? a : b;
}

// E_gamma(rho || sigma) = gamma E_{1/gamma}(sigma || rho) + (1 - gamma). The
// right-hand side is evaluated directly as Tr(sigma - rho / gamma)^+.
inline PropertyResult check_symmetry(const DensityMatrix& rho, const DensityMatrix& sigma,
                                     Gamma gamma) {
  const double g = gamma.value();
  const double reversed = detail::scaled_positive_trace(sigma, rho, 1.0 / g);
  return detail::identity(hockey_stick(rho, sigma, gamma), g * reversed + (1.0 - g));
}

// E_gamma(rho || sigma) + E_gamma(rho || tau) >= gamma/2 ||tau - sigma||_1 + (1 - gamma).
inline PropertyResult check_trace_bound(const DensityMatrix& rho, const DensityMatrix& sigma,
                                        const DensityMatrix& tau, Gamma gamma) {
  const double g = gamma.value();
  const double lhs = g * trace_distance(tau, sigma) + (1.0 - g);
  const double rhs = hockey_stick(rho, sigma, gamma) + hockey_stick(rho, tau, gamma);
  return detail::inequality(lhs, rhs);
}

// Dispatcher over packed arguments.
//   triangle:         states {rho, sigma, tau},             params {g1, g2}
//   strong_convexity: states {rho_1..rho_m, sigma_1..sigma_m}, params {g1, g2, p_1..p_m, q_1..q_m}
//   stability:        states {rho, sigma, tau},             params {gamma}
//   subadditivity:    states {rho1, rho2, sigma1, sigma2},  params {g1, g2}
//   symmetry:         states {rho, sigma},                  params {gamma}
//   trace_bound:      states {rho, sigma, tau},             params {gamma}
inline PropertyResult property_check(PropertyId id, std::span<const DensityMatrix> states,
                                     std::span<const double> params) {
  auto arity = [&](std::size_t n_states, std::size_t n_params) {
    if (states.size() != n_states || params.size() != n_params) {
      throw ValidationError("property_check(" + std::string(to_string(id)) + "): expected " +
                            std::to_string(n_states) + " states and " + std::to_string(n_params) +
                            " parameters, got " + std::to_string(states.size()) + " and " +
                            std::to_string(params.size()));
    }
  };
  switch (id) {
    case PropertyId::kTriangle:
      arity(3, 2);
      return check_triangle(states[0], states[1], states[2], Gamma(params[0]), Gamma(params[1]));
    case PropertyId::kStrongConvexity: {
      const std::size_t m = states.size() / 2;
      if (m == 0) arity(2, 4);
      arity(2 * m, 2 + 2 * m);
      std::vector<double> p(params.begin() + 2, params.begin() + 2 + m);
      std::vector<double> q(params.begin() + 2 + m, params.end());
      std::vector<DensityMatrix> rhos(states.begin(), states.begin() + m);
      std::vector<DensityMatrix> sigmas(states.begin() + m, states.end());
      return check_strong_convexity(p, q, rhos, sigmas, Gamma(params[0]), Gamma(params[1]));
    }
    case PropertyId::kStability:
      arity(3, 1);
      return check_stability(states[0], states[1], states[2], Gamma(params[0]));
    case PropertyId::kSubadditivity:
      arity(4, 2);
      return check_subadditivity(states[0], states[1], states[2], states[3], Gamma(params[0]),
                                 Gamma(params[1]));
    case PropertyId::kSymmetry:
      arity(2, 1);
      return check_symmetry(states[0], states[1], Gamma(params[0]));
    case PropertyId::kTraceBound:
      arity(3, 1);
      return check_trace_bound(states[0], states[1], states[2], Gamma(params[0]));
  }
  throw ValidationError("property_check: unknown property");
}

// ||A - B||_1^2 + 4 ||A^{1/2} B^{1/2}||_1^2 <= (Tr[A + B])^2 for PSD A, B.
inline PropertyResult check_fvdg_psd(const HermitianOperator& a, const HermitianOperator& b,
                                     double slack = 1e-6) {
  if (a.dim() != b.dim()) throw ValidationError("check_fvdg_psd: dimension mismatch");
  const double diff = trace_norm(HermitianOperator(Matrix(a.matrix() - b.matrix())));
  const double overlap = trace_norm(Matrix(psd_sqrt(a) * psd_sqrt(b)));
  const double lhs = diff * diff + 4.0 * overlap * overlap;
  const double tr = a.trace() + b.trace();
  const double r = tr * tr - lhs;
  return {r >= -slack, r};
}

}  // namespace qdp

#endif  // QDP_PROPERTIES_HPP_
