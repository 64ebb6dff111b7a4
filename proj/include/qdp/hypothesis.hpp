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

// Hypothesis-testing view of differential privacy.
//
// A binary test {M, 1 - M} distinguishing A(rho) from A(sigma) has Type-I
// error alpha = Tr (1 - M) A(rho) and Type-II error beta = Tr M A(sigma).
// A is (eps, delta)-DP iff every achievable (alpha, beta) lies in R(eps, delta).
// Sampling can refute that containment but never prove it.

#ifndef QDP_HYPOTHESIS_HPP_
#define QDP_HYPOTHESIS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "qdp/channel.hpp"
#include "qdp/core.hpp"
#include "qdp/dp.hpp"
#include "qdp/random.hpp"
#include "qdp/spectral.hpp"

namespace qdp {

inline constexpr double kRegionSlack = 1e-9;

struct ErrorPoint {
  double alpha = 0.0;  // Type-I
  double beta = 0.0;   // Type-II
};

struct PrivacyRegion {
  double epsilon = 0.0;
  double delta = 0.0;

  PrivacyRegion() = default;
  PrivacyRegion(double eps, double del) : epsilon(eps), delta(del) {
    const DpBudget check(eps, del);
    (void)check;
  }
};

// Largest violation over the four constraints; <= 0 inside the region.
inline double region_excess(const PrivacyRegion& r, const ErrorPoint& pt) {
  const double g = std::exp(r.epsilon);
  const double a = pt.alpha;
  const double b = pt.beta;
  return std::max({(1.0 - a) - (g * b + r.delta), (1.0 - b) - (g * a + r.delta),
                   b - (g * (1.0 - a) + r.delta), a - (g * (1.0 - b) + r.delta)});
}

inline bool region_contains(const PrivacyRegion& r, const ErrorPoint& pt) {
  return region_excess(r, pt) <= kRegionSlack;
}

// The two lower boundary lines meet at ((1 - delta)/(1 + e^eps), same).
inline ErrorPoint region_corner(double epsilon, double delta) {
  const PrivacyRegion r(epsilon, delta);
  const double c = (1.0 - r.delta) / (1.0 + std::exp(r.epsilon));
  return {c, c};
}

enum class PointSource { kSampled, kEndpoint, kOptimal };

inline std::string_view to_string(PointSource s) {
  switch (s) {
    case PointSource::kSampled: return "sampled";
    case PointSource::kEndpoint: return "endpoint";
    case PointSource::kOptimal: return "optimal";
  }
  return "unknown";
}

struct RegionSample {
  ErrorPoint point;
  PointSource source = PointSource::kSampled;
};

inline ErrorPoint error_point(const HermitianOperator& m, const DensityMatrix& out_rho,
                              const DensityMatrix& out_sigma) {
  return {std::clamp(1.0 - trace_product(m, out_rho), 0.0, 1.0),
          std::clamp(trace_product(m, out_sigma), 0.0, 1.0)};
}

// Point list in this order: `n_povms` sampled effects (effect i drawn from
// derive_seed(seed, i)), the endpoints M = 1 and M = 0, then for each epsilon
// the projector onto (A(rho) - e^eps A(sigma))^+ and the complement of the
// projector onto (A(sigma) - e^eps A(rho))^+.
inline std::vector<RegionSample> sample_channel_region(const QuantumChannel& channel,
                                                       const DensityMatrix& rho,
                                                       const DensityMatrix& sigma,
                                                       std::size_t n_povms, std::uint64_t seed,
                                                       const std::vector<double>& epsilons = {}) {
  detail::require_same_dim(rho, sigma, "sample_channel_region");
  if (n_povms < 1) throw ValidationError("sample_channel_region: n_povms must be at least 1");
  const DensityMatrix a = apply(channel, rho);
  const DensityMatrix b = apply(channel, sigma);
  const std::size_t d = a.dim();

  std::vector<RegionSample> out;
  out.reserve(n_povms + 2 + 2 * epsilons.size());
  for (std::size_t i = 0; i < n_povms; ++i) {
    out.push_back({error_point(sample_effect(d, derive_seed(seed, i)), a, b), PointSource::kSampled});
  }
  out.push_back({error_point(MeasurementEffect::identity(d), a, b), PointSource::kEndpoint});
  out.push_back({error_point(MeasurementEffect::zero(d), a, b), PointSource::kEndpoint});
  for (const double eps : epsilons) {
    const double g = Gamma::from_epsilon(eps).value();
    const Matrix forward = positive_part(HermitianOperator(Matrix(a.matrix() - g * b.matrix()))).projector;
    const Matrix backward = positive_part(HermitianOperator(Matrix(b.matrix() - g * a.matrix()))).projector;
    out.push_back({error_point(HermitianOperator(forward), a, b), PointSource::kOptimal});
    out.push_back({error_point(HermitianOperator(Matrix(Matrix::Identity(d, d) - backward)), a, b),
                   PointSource::kOptimal});
  }
  return out;
}

enum class RegionVerdict { kCertifiedViolation, kNoViolationFound };

inline std::string_view to_string(RegionVerdict v) {
  return v == RegionVerdict::kCertifiedViolation ? "certified_violation" : "no_violation_found";
}

struct RegionReport {
  RegionVerdict verdict = RegionVerdict::kNoViolationFound;
  std::size_t n_points = 0;
  std::size_t n_outside = 0;
  double max_excess = 0.0;
  // Exact symmetric certificate max over pairs; the proof path for DP.
  double certified_delta = 0.0;
  bool certified_within_budget = false;
};

inline RegionReport region_subset_check(const QuantumChannel& channel,
                                        const std::vector<StatePair>& pairs, double epsilon,
                                        double delta, std::size_t n_povms, std::uint64_t seed) {
  const PrivacyRegion region(epsilon, delta);
  RegionReport rep;
  rep.max_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const auto& [rho, sigma] = pairs[j];
    for (const RegionSample& s :
         sample_channel_region(channel, rho, sigma, n_povms, derive_seed(seed, j), {epsilon})) {
      const double e = region_excess(region, s.point);
      rep.max_excess = std::max(rep.max_excess, e);
      ++rep.n_points;
      if (e > kRegionSlack) ++rep.n_outside;
    }
    rep.certified_delta =
        std::max(rep.certified_delta, certify_pair_symmetric(channel, rho, sigma, epsilon));
  }
  rep.verdict = rep.n_outside > 0 ? RegionVerdict::kCertifiedViolation
                                  : RegionVerdict::kNoViolationFound;
  rep.certified_within_budget = rep.certified_delta <= delta + kRegionSlack;
  return rep;
}

// Smallest eps~ with R(eps, delta) inside R(eps~, delta~):
// ln((1 - delta~)/(1 - delta) (1 + e^eps) - 1), clamped at 0.
inline double relax_budget(double epsilon, double delta, double delta_relaxed) {
  const DpBudget base(epsilon, delta);
  const DpBudget relaxed(0.0, delta_relaxed);
  if (base.delta >= 1.0) throw PreconditionError("relax_budget: delta must be < 1");
  if (relaxed.delta < base.delta) throw PreconditionError("relax_budget: delta~ must be >= delta");
  const double arg = (1.0 - delta_relaxed) / (1.0 - delta) * (1.0 + std::exp(epsilon)) - 1.0;
  if (!(arg > 1.0)) return 0.0;
  return std::log(arg);
}

struct BoundarySegment {
  double alpha = 0.0;
  double beta_low = 0.0;
  double beta_high = 1.0;
};

// Feasible beta range of R(eps, delta) at a given alpha.
inline BoundarySegment region_boundary_at(const PrivacyRegion& r, double alpha) {
  const double g = std::exp(r.epsilon);
  const double lo = std::max({0.0, (1.0 - r.delta - alpha) / g, 1.0 - r.delta - g * alpha});
  const double hi = std::min({1.0, g * (1.0 - alpha) + r.delta, 1.0 - (alpha - r.delta) / g});
  return {alpha, lo, hi};
}

// Lower and upper boundary of R(eps, delta) on a uniform alpha grid.
inline std::vector<BoundarySegment> region_boundary(double epsilon, double delta,
                                                    std::size_t n_points) {
  const PrivacyRegion r(epsilon, delta);
  if (n_points < 2) throw ValidationError("region_boundary: need at least 2 points");
  std::vector<BoundarySegment> out;
  out.reserve(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    out.push_back(region_boundary_at(r, static_cast<double>(i) / static_cast<double>(n_points - 1)));
  }
  return out;
}

}  // namespace qdp

#endif  // QDP_HYPOTHESIS_HPP_
