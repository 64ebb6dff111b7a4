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

// (epsilon, delta) differential privacy for quantum channels.
//
// Neighbors are states within trace distance kappa. A channel A is
// (epsilon, delta)-DP iff E_{e^epsilon}(A(rho) || A(sigma)) <= delta for all
// neighbors, so certificates are either exact hockey-stick values on given
// pairs or kappa times a product of sound contraction upper bounds.

#ifndef QDP_DP_HPP_
#define QDP_DP_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qdp/channel.hpp"
#include "qdp/contraction.hpp"
#include "qdp/core.hpp"
#include "qdp/divergences.hpp"
#include "qdp/renyi.hpp"

namespace qdp {

struct DpBudget {
  double epsilon = 0.0;
  double delta = 0.0;

  DpBudget() = default;
  DpBudget(double eps, double del) : epsilon(eps), delta(del) {
    if (!(epsilon >= 0.0)) throw DomainError("DpBudget: epsilon must be >= 0");
    if (!(delta >= 0.0 && delta <= 1.0)) throw DomainError("DpBudget: delta must lie in [0, 1]");
  }
};

// Trace-distance ball: rho ~ sigma iff 1/2 ||rho - sigma||_1 <= kappa.
// kappa = 0 is accepted and makes every bound vanish.
struct NeighborRelation {
  double kappa = 0.0;

  explicit NeighborRelation(double k) : kappa(k) {
    if (!(kappa >= 0.0 && kappa <= 1.0)) throw DomainError("NeighborRelation: kappa must lie in [0, 1]");
  }

  bool related(const DensityMatrix& rho, const DensityMatrix& sigma) const {
    return trace_distance(rho, sigma) <= kappa + 1e-12;
  }
};

namespace detail {

inline void check_epsilon(double eps, const char* what) {
  if (!(eps >= 0.0)) throw DomainError(std::string(what) + ": epsilon must be >= 0");
}

inline void check_delta(double delta, const char* what) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw DomainError(std::string(what) + ": delta must lie in [0, 1]");
}

inline void check_kappa(double kappa, const char* what) {
  if (!(kappa >= 0.0 && kappa <= 1.0)) throw DomainError(std::string(what) + ": kappa must lie in [0, 1]");
}

inline double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace detail

// -- pairwise certificates ----------------------------------------------------

// delta = E_{e^epsilon}(A(rho) || A(sigma)).
inline double certify_pair(const QuantumChannel& channel, const DensityMatrix& rho,
                           const DensityMatrix& sigma, double epsilon) {
  detail::check_epsilon(epsilon, "certify_pair");
  detail::require_same_dim(rho, sigma, "certify_pair");
  return hockey_stick(apply(channel, rho), apply(channel, sigma), Gamma::from_epsilon(epsilon));
}

// Both orderings of the pair.
inline double certify_pair_symmetric(const QuantumChannel& channel, const DensityMatrix& rho,
                                     const DensityMatrix& sigma, double epsilon) {
  return std::max(certify_pair(channel, rho, sigma, epsilon),
                  certify_pair(channel, sigma, rho, epsilon));
}

// -- layered algorithms -------------------------------------------------------

struct GlobalDepolarizing {
  double p = 0.0;
};

// D_p applied to each of k local subsystems of dimension D, with D^k the
// algorithm dimension.
struct LocalDepolarizing {
  double p = 0.0;
  std::size_t k = 1;
};

// Either acts on the full dimension, or is a qubit channel applied to every
// qubit when the algorithm dimension is 2^k.
struct KrausNoise {
  QuantumChannel channel;
};

using NoiseSpec = std::variant<GlobalDepolarizing, LocalDepolarizing, KrausNoise>;

struct Layer {
  QuantumChannel gate;
  NoiseSpec noise;
};

namespace detail {

// Returns m when base^m == value exactly.
inline std::optional<std::size_t> integer_log(std::size_t value, std::size_t base) {
  if (base < 2 || value < 1) return std::nullopt;
  std::size_t m = 0;
  std::size_t acc = 1;
  while (acc < value) {
    acc *= base;
    ++m;
  }
  if (acc == value) return m;
  return std::nullopt;
}

// Integer D with D^k == value.
inline std::optional<std::size_t> integer_root(std::size_t value, std::size_t k) {
  const auto guess = static_cast<std::size_t>(
      std::llround(std::pow(static_cast<double>(value), 1.0 / static_cast<double>(k))));
  for (std::size_t d = (guess > 1 ? guess - 1 : 1); d <= guess + 1; ++d) {
    std::size_t acc = 1;
    for (std::size_t i = 0; i < k; ++i) acc *= d;
    if (acc == value) return d;
  }
  return std::nullopt;
}

}  // namespace detail

class LayeredAlgorithm {
 public:
  LayeredAlgorithm(std::size_t dim, std::vector<Layer> layers)
      : dim_(dim), layers_(std::move(layers)) {
    if (dim_ < 2) throw ValidationError("LayeredAlgorithm: dim must be at least 2");
    if (layers_.empty()) throw ValidationError("LayeredAlgorithm: at least one layer required");
    noise_.reserve(layers_.size());
    for (std::size_t i = 0; i < layers_.size(); ++i) {
      const Layer& l = layers_[i];
      if (l.gate.dim_in() != dim_ || l.gate.dim_out() != dim_) {
        throw ValidationError("LayeredAlgorithm: layer " + std::to_string(i) +
                              " gate does not act on dimension " + std::to_string(dim_));
      }
      noise_.push_back(instantiate(l.noise, i));
    }
  }

  std::size_t dim() const { return dim_; }
  std::size_t n_layers() const { return layers_.size(); }
  const std::vector<Layer>& layers() const { return layers_; }
  const QuantumChannel& noise_channel(std::size_t i) const { return noise_.at(i); }

  // Local subsystem dimension and count for local depolarizing noise.
  std::pair<std::size_t, std::size_t> local_structure(const LocalDepolarizing& n) const {
    const auto d = detail::integer_root(dim_, n.k);
    if (!d || *d < 2) {
      throw ValidationError("LayeredAlgorithm: dim " + std::to_string(dim_) +
                            " is not a k-th power of a local dimension >= 2 (k = " +
                            std::to_string(n.k) + ")");
    }
    return {*d, n.k};
  }

  // Exact output state, layer by layer.
  DensityMatrix apply(const DensityMatrix& rho) const {
    if (rho.dim() != dim_) throw ValidationError("LayeredAlgorithm::apply: dimension mismatch");
    Matrix x = rho.matrix();
    for (std::size_t i = 0; i < layers_.size(); ++i) {
      x = noise_[i].apply(layers_[i].gate.apply(x));
    }
    return DensityMatrix(x);
  }

 private:
  QuantumChannel instantiate(const NoiseSpec& spec, std::size_t index) const {
    const std::string where = "LayeredAlgorithm: layer " + std::to_string(index) + " noise";
    if (const auto* g = std::get_if<GlobalDepolarizing>(&spec)) {
      if (!(g->p >= 0.0 && g->p <= 1.0)) throw ValidationError(where + ": p must lie in [0, 1]");
      return depolarizing_channel(dim_, g->p);
    }
    if (const auto* l = std::get_if<LocalDepolarizing>(&spec)) {
      if (!(l->p >= 0.0 && l->p <= 1.0)) throw ValidationError(where + ": p must lie in [0, 1]");
      if (l->k == 0) throw ValidationError(where + ": k must be at least 1");
      const auto [d, k] = local_structure(*l);
      return tensor_power(depolarizing_channel(d, l->p), k);
    }
    const auto& kn = std::get<KrausNoise>(spec);
    if (kn.channel.dim_in() == dim_ && kn.channel.dim_out() == dim_) return kn.channel;
    if (kn.channel.dim_in() == 2 && kn.channel.dim_out() == 2) {
      if (const auto k = detail::integer_log(dim_, 2)) return tensor_power(kn.channel, *k);
    }
    throw ValidationError(where + ": channel dimension does not fit the algorithm");
  }

  std::size_t dim_;
  std::vector<Layer> layers_;
  std::vector<QuantumChannel> noise_;
};

inline DensityMatrix apply(const LayeredAlgorithm& algo, const DensityMatrix& rho) {
  return algo.apply(rho);
}

inline double certify_pair(const LayeredAlgorithm& algo, const DensityMatrix& rho,
                           const DensityMatrix& sigma, double epsilon) {
  detail::check_epsilon(epsilon, "certify_pair");
  return hockey_stick(algo.apply(rho), algo.apply(sigma), Gamma::from_epsilon(epsilon));
}

enum class ContractionMode { kSound, kOptimized };

struct LayerFactor {
  double eta = 1.0;
  MethodTag tag = MethodTag::kClosedForm;
};

// Sound upper bound on eta_gamma of a layer's noise. Gates contribute 1.
inline LayerFactor sound_layer_factor(const LayeredAlgorithm& algo, std::size_t i, Gamma gamma) {
  const NoiseSpec& spec = algo.layers()[i].noise;
  if (const auto* g = std::get_if<GlobalDepolarizing>(&spec)) {
    return {eta_depolarizing_closed(g->p, algo.dim(), gamma), MethodTag::kClosedForm};
  }
  if (const auto* l = std::get_if<LocalDepolarizing>(&spec)) {
    const auto [d, k] = algo.local_structure(*l);
    return {eta_local_depolarizing_upper(l->p, d, k, gamma), MethodTag::kClosedForm};
  }
  const QuantumChannel& ch = std::get<KrausNoise>(spec).channel;
  if (ch.dim_in() == algo.dim()) {
    if (const auto p = recognize_depolarizing(ch)) {
      return {eta_depolarizing_closed(*p, algo.dim(), gamma), MethodTag::kClosedForm};
    }
  }
  if (ch.dim_in() == 2) {
    const std::size_t k = ch.dim_in() == algo.dim() ? 1 : *detail::integer_log(algo.dim(), 2);
    try {
      return {eta_qubit_tensor_upper(ch, k, gamma).value, MethodTag::kChoiFidelityUpper};
    } catch (const PreconditionError& e) {
      throw SoundnessError(std::string("layer ") + std::to_string(i) +
                           ": no sound contraction bound available (" + e.what() + ")");
    }
  }
  throw SoundnessError("layer " + std::to_string(i) +
                       ": no sound contraction bound for an unstructured Kraus channel of "
                       "dimension " + std::to_string(ch.dim_in()) +
                       "; optimized values are lower bounds and cannot certify privacy");
}

// delta = kappa * prod_i eta_i with every eta_i a sound upper bound.
inline double delta_layered_generic(const LayeredAlgorithm& algo, const NeighborRelation& rel,
                                    double epsilon, ContractionMode mode = ContractionMode::kSound) {
  detail::check_epsilon(epsilon, "delta_layered_generic");
  if (mode == ContractionMode::kOptimized) {
    throw SoundnessError(
        "optimized contraction coefficients are lower bounds; a certificate requires sound "
        "upper bounds (use the sound mode)");
  }
  const Gamma gamma = Gamma::from_epsilon(epsilon);
  double delta = rel.kappa;
  for (std::size_t i = 0; i < algo.n_layers(); ++i) delta *= sound_layer_factor(algo, i, gamma).eta;
  return detail::clamp_unit(delta);
}

// -- depolarizing closed forms --------------------------------------------------

namespace detail {

inline double depolarizing_delta(double p_star, double dim_power, double kappa, double epsilon) {
  return std::clamp((1.0 - std::exp(epsilon)) * p_star / dim_power + (1.0 - p_star) * kappa,
                    0.0, 1.0);
}

inline double depolarizing_epsilon(double p_star, double dim_power, double kappa, double delta) {
  const double slack = (1.0 - p_star) * kappa - delta;
  if (!(slack > 0.0)) return 0.0;
  if (!(p_star > 0.0)) return std::numeric_limits<double>::infinity();
  return std::max(0.0, std::log(dim_power / p_star * slack + 1.0));
}

inline double global_p_star(const std::vector<double>& p_list) {
  if (p_list.empty()) throw ValidationError("p_list must be non-empty");
  double keep = 1.0;
  for (const double p : p_list) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("depolarizing p must lie in [0, 1]");
    keep *= 1.0 - p;
  }
  return 1.0 - keep;
}

inline double local_p_star(double p, std::size_t k, std::size_t n) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("depolarizing p must lie in [0, 1]");
  if (k == 0) throw DomainError("k must be at least 1");
  if (n == 0) throw DomainError("n must be at least 1");
  return 1.0 - std::pow(1.0 - std::pow(p, static_cast<double>(k)), static_cast<double>(n));
}

inline double dim_power(std::size_t dim, std::size_t k) {
  if (dim < 2) throw DomainError("D must be at least 2");
  return std::pow(static_cast<double>(dim), static_cast<double>(k));
}

}  // namespace detail

// max{0, (1 - e^eps) p*/D + (1 - p*) kappa}, p* = 1 - prod_i (1 - p_i).
inline double delta_global_depolarizing(const std::vector<double>& p_list, std::size_t dim,
                                        double kappa, double epsilon) {
  detail::check_kappa(kappa, "delta_global_depolarizing");
  detail::check_epsilon(epsilon, "delta_global_depolarizing");
  return detail::depolarizing_delta(detail::global_p_star(p_list), detail::dim_power(dim, 1),
                                    kappa, epsilon);
}

// max{0, ln(D/p* ((1 - p*) kappa - delta) + 1)}; +infinity when p* = 0 and
// kappa > delta.
inline double eps_global_depolarizing(const std::vector<double>& p_list, std::size_t dim,
                                      double kappa, double delta) {
  detail::check_kappa(kappa, "eps_global_depolarizing");
  detail::check_delta(delta, "eps_global_depolarizing");
  return detail::depolarizing_epsilon(detail::global_p_star(p_list), detail::dim_power(dim, 1),
                                      kappa, delta);
}

// As the global form with D^k and p* = 1 - (1 - p^k)^n.
inline double delta_local_depolarizing(double p, std::size_t dim, std::size_t k, std::size_t n,
                                       double kappa, double epsilon) {
  detail::check_kappa(kappa, "delta_local_depolarizing");
  detail::check_epsilon(epsilon, "delta_local_depolarizing");
  return detail::depolarizing_delta(detail::local_p_star(p, k, n), detail::dim_power(dim, k),
                                    kappa, epsilon);
}

inline double eps_local_depolarizing(double p, std::size_t dim, std::size_t k, std::size_t n,
                                     double kappa, double delta) {
  detail::check_kappa(kappa, "eps_local_depolarizing");
  detail::check_delta(delta, "eps_local_depolarizing");
  return detail::depolarizing_epsilon(detail::local_p_star(p, k, n), detail::dim_power(dim, k),
                                      kappa, delta);
}

// Per-layer factor 1/2 sqrt((1 + e^eps)^2 - 4 e^eps (lambda/4)^k) + (1 - e^eps)/2.
inline double qubit_noise_factor(double lambda_min, std::size_t k, double epsilon) {
  if (!(lambda_min >= 0.0 && lambda_min <= 4.0 + 1e-12)) {
    throw DomainError("qubit noise: lambda_min must lie in [0, 4]");
  }
  if (k == 0) throw DomainError("qubit noise: k must be at least 1");
  detail::check_epsilon(epsilon, "qubit noise");
  return fvdg_bound_from_fidelity(std::pow(std::min(lambda_min, 4.0) / 4.0, static_cast<double>(k)),
                                  Gamma::from_epsilon(epsilon));
}

inline double delta_qubit_noise(double lambda_min, std::size_t k, std::size_t n, double kappa,
                                double epsilon) {
  detail::check_kappa(kappa, "delta_qubit_noise");
  const double f = qubit_noise_factor(lambda_min, k, epsilon);
  return detail::clamp_unit(std::pow(f, static_cast<double>(n)) * kappa);
}

// Smallest epsilon with delta_of(epsilon) <= target, for a non-increasing
// delta_of. +infinity when even epsilon = hi misses the target.
template <typename DeltaOf>
double invert_delta(DeltaOf&& delta_of, double target, double hi = 64.0) {
  detail::check_delta(target, "invert_delta");
  if (delta_of(0.0) <= target) return 0.0;
  if (delta_of(hi) > target) return std::numeric_limits<double>::infinity();
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    (delta_of(mid) <= target ? hi : lo) = mid;
  }
  return hi;
}

// -- bounds used for the privacy/usefulness separation --------------------------

struct FlaggedValue {
  double value = 0.0;
  bool flag = false;
};

// (1 - 2p)^{kn} times the initial trace distance; flag = bound vacuous (p >= 1/2).
inline FlaggedValue trace_lower_bound_local(double p, std::size_t k, std::size_t n,
                                            double initial_distance) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("trace_lower_bound_local: p must lie in [0, 1]");
  if (!(initial_distance >= 0.0 && initial_distance <= 1.0)) {
    throw DomainError("trace_lower_bound_local: initial distance must lie in [0, 1]");
  }
  if (p >= 0.5) return {0.0, true};
  return {std::pow(1.0 - 2.0 * p, static_cast<double>(k * n)) * initial_distance, false};
}

// 2k (2 |I| (1 - p))^n; flag = decay regime 2 |I| (1 - p) < 1.
inline FlaggedValue wasserstein_lightcone_upper(std::size_t k, std::size_t n, double p,
                                                std::size_t lightcone_size) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("wasserstein_lightcone_upper: p must lie in [0, 1]");
  if (lightcone_size < 1) throw DomainError("wasserstein_lightcone_upper: lightcone size must be >= 1");
  const double factor = 2.0 * static_cast<double>(lightcone_size) * (1.0 - p);
  return {2.0 * static_cast<double>(k) * std::pow(factor, static_cast<double>(n)), factor < 1.0};
}

// -- composition ----------------------------------------------------------------

inline DpBudget compose_parallel(const DpBudget& a, const DpBudget& b) {
  return {a.epsilon + b.epsilon, std::min(1.0, a.delta + b.delta)};
}

inline DpBudget post_process(const DpBudget& b) { return b; }

// -- local differential privacy -------------------------------------------------

struct LdpEstimate {
  double delta = 0.0;  // lower bound on the LDP delta
  PurePair pair;
};

// Max of E_{e^eps}(A(phi) || A(psi)) over optimized orthogonal pure pairs,
// `samples` restarts.
inline LdpEstimate ldp_delta_estimate(const QuantumChannel& channel, double epsilon,
                                      std::size_t samples, std::uint64_t seed) {
  detail::check_epsilon(epsilon, "ldp_delta_estimate");
  const EtaLower r = eta_lower_optimize(channel, Gamma::from_epsilon(epsilon), samples, seed);
  return {r.value, r.pair};
}

// phi(eps, delta) = 1 - e^{-eps} (1 - delta) bounds eta_1 of an (eps, delta)-LDP channel.
inline double ldp_eta1_bound(double epsilon, double delta) {
  detail::check_epsilon(epsilon, "ldp_eta1_bound");
  detail::check_delta(delta, "ldp_eta1_bound");
  return 1.0 - std::exp(-epsilon) * (1.0 - delta);
}

// -- Renyi differential privacy -------------------------------------------------

struct RenyiBudget {
  double epsilon = 0.0;
  double alpha = 2.0;  // +infinity allowed
  RenyiKind kind = RenyiKind::kSandwiched;

  RenyiBudget() = default;
  RenyiBudget(double eps, double a, RenyiKind k) : epsilon(eps), alpha(a), kind(k) {
    if (!(epsilon >= 0.0)) throw DomainError("RenyiBudget: epsilon must be >= 0");
    if (!(alpha > 1.0)) throw DomainError("RenyiBudget: alpha must be > 1");
    if (kind == RenyiKind::kUmegaki) throw DomainError("RenyiBudget: kind must be sandwiched or petz");
  }
};

using StatePair = std::pair<DensityMatrix, DensityMatrix>;

// Max over the supplied pairs, both orders. An empirical lower bound on the
// true supremum over all neighbors.
inline double renyi_dp_certify(const QuantumChannel& channel, const std::vector<StatePair>& pairs,
                               double alpha, RenyiKind kind) {
  double best = 0.0;
  for (const auto& [rho, sigma] : pairs) {
    const DensityMatrix a = apply(channel, rho);
    const DensityMatrix b = apply(channel, sigma);
    best = std::max({best, renyi_divergence(kind, a, b, alpha), renyi_divergence(kind, b, a, alpha)});
  }
  return best;
}

// epsilon-DP implies (epsilon, alpha)-Renyi DP for every alpha.
inline RenyiBudget renyi_from_pure_dp(double epsilon, double alpha,
                                      RenyiKind kind = RenyiKind::kSandwiched) {
  return {epsilon, alpha, kind};
}

// g(delta) = -ln(1 - sqrt(1 - delta^2)).
inline double g_function(double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("g: delta must lie in (0, 1]");
  // 1 - sqrt(1 - d^2) = d^2 / (1 + sqrt(1 - d^2)), stable for small d.
  return -std::log(delta * delta / (1.0 + std::sqrt(1.0 - delta * delta)));
}

// (epsilon + g(delta)/(alpha - 1), delta).
inline DpBudget renyi_to_approx_dp(const RenyiBudget& b, double delta) {
  if (!(b.alpha > 1.0)) throw DomainError("renyi_to_approx_dp: alpha must be > 1");
  const double g = g_function(delta);
  return {b.epsilon + (std::isinf(b.alpha) ? 0.0 : g / (b.alpha - 1.0)), delta};
}

}  // namespace qdp

#endif  // QDP_DP_HPP_
