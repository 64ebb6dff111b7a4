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

// Contraction coefficients eta_gamma(N) of the hockey-stick divergence.
//
// eta_gamma(N) is the supremum of E_gamma(N(phi) || N(psi)) over orthogonal
// pure input pairs, so any evaluated pair gives a lower bound. Upper bounds
// come from closed forms (depolarizing noise), the fidelity form of the
// Fuchs-van de Graaf type bound, and the Choi-spectrum bound for tensor
// powers of qubit channels. Optimized values are always lower bounds.

#ifndef QDP_CONTRACTION_HPP_
#define QDP_CONTRACTION_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdp/channel.hpp"
#include "qdp/core.hpp"
#include "qdp/divergences.hpp"
#include "qdp/pair_search.hpp"
#include "qdp/spectral.hpp"

namespace qdp {

inline constexpr std::size_t kDefaultRestarts = 200;

namespace detail {

inline void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError(std::string(what) + ": p must lie in [0, 1]");
}

}  // namespace detail

// eta_gamma(D_p) = max{0, (1 - gamma) p / D + (1 - p)}.
inline double eta_depolarizing_closed(double p, std::size_t dim, Gamma gamma) {
  detail::check_probability(p, "eta_depolarizing_closed");
  if (dim < 2) throw DomainError("eta_depolarizing_closed: D must be at least 2");
  const double g = gamma.value();
  return std::max(0.0, (1.0 - g) * p / static_cast<double>(dim) + (1.0 - p));
}

// Upper bound eta_gamma(D_p^{(x)k}) <= max{0, (1 - gamma) p^k / D^k + (1 - p^k)}.
// Whether the bound is attained is not known; it is never reported as exact.
inline double eta_local_depolarizing_upper(double p, std::size_t dim, std::size_t k,
                                           Gamma gamma) {
  detail::check_probability(p, "eta_local_depolarizing_upper");
  if (dim < 2) throw DomainError("eta_local_depolarizing_upper: D must be at least 2");
  if (k == 0) throw DomainError("eta_local_depolarizing_upper: k must be at least 1");
  const double pk = std::pow(p, static_cast<double>(k));
  const double dk = std::pow(static_cast<double>(dim), static_cast<double>(k));
  return std::max(0.0, (1.0 - gamma.value()) * pk / dk + (1.0 - pk));
}

struct EtaLower {
  double value = 0.0;
  PurePair pair;
};

inline double pair_divergence(const KrausMap& channel, const Vector& phi, const Vector& psi,
                              Gamma gamma) {
  const Matrix a = channel.apply(phi * phi.adjoint());
  const Matrix b = channel.apply(psi * psi.adjoint());
  return detail::scaled_positive_trace(HermitianOperator(a), HermitianOperator(b), gamma.value());
}

inline double pair_fidelity(const KrausMap& channel, const Vector& phi, const Vector& psi) {
  const HermitianOperator a(channel.apply(phi * phi.adjoint()));
  const HermitianOperator b(channel.apply(psi * psi.adjoint()));
  const double root = trace_norm(Matrix(psd_sqrt(a) * psd_sqrt(b)));
  return root * root;
}

// max over evaluated orthogonal pure pairs of E_gamma(N(phi) || N(psi)).
inline EtaLower eta_lower_optimize(const QuantumChannel& channel, Gamma gamma,
                                   std::size_t restarts = kDefaultRestarts,
                                   std::uint64_t seed = 42) {
  if (!channel.is_square()) throw ValidationError("eta_lower_optimize: channel must be square");
  PairSearchOptions opts;
  opts.restarts = restarts;
  opts.seed = seed;
  const PairSearchResult r = maximize_over_orthogonal_pairs(
      channel.dim_in(),
      [&](const Vector& phi, const Vector& psi) { return pair_divergence(channel, phi, psi, gamma); },
      opts);
  return {std::clamp(r.value, 0.0, 1.0), r.pair};
}

struct FvdgUpper {
  double value = 0.0;        // 1/2 sqrt((1 + g)^2 - 4 g F_min) + (1 - g)/2
  double min_fidelity = 0.0; // smallest output fidelity found
  PurePair pair;
  double optimized_lower = 0.0;
  bool consistent = true;    // optimized_lower <= value + 1e-9
};

// Heuristic: the inner infimum over pairs is itself numerical, so the value
// is only an estimate of the bound. Never used in certificates.
inline FvdgUpper eta_upper_fvdg(const QuantumChannel& channel, Gamma gamma,
                                std::size_t restarts = kDefaultRestarts,
                                std::uint64_t seed = 42) {
  if (!channel.is_square()) throw ValidationError("eta_upper_fvdg: channel must be square");
  PairSearchOptions opts;
  opts.restarts = restarts;
  opts.seed = seed;
  const PairSearchResult r = maximize_over_orthogonal_pairs(
      channel.dim_in(),
      [&](const Vector& phi, const Vector& psi) { return -pair_fidelity(channel, phi, psi); },
      opts);
  FvdgUpper out;
  out.min_fidelity = std::clamp(-r.value, 0.0, 1.0);
  out.value = fvdg_bound_from_fidelity(out.min_fidelity, gamma);
  out.pair = r.pair;
  out.optimized_lower = eta_lower_optimize(channel, gamma, restarts, seed).value;
  out.consistent = out.optimized_lower <= out.value + 1e-9;
  return out;
}

// eta_gamma(N) <= eta_1(N).
inline double eta_upper_trace(double eta1, Gamma /*gamma*/) { return eta1; }

// eta_gamma(N) >= 1 - gamma (1 - eta_1(N)), clamped at 0.
inline double eta_lower_from_eta1(double eta1, Gamma gamma) {
  return std::max(0.0, 1.0 - gamma.value() * (1.0 - eta1));
}

struct QubitTensorBound {
  double value = 1.0;
  double lambda_min = 0.0;  // lambda_min of the Choi matrix of N^dagger o N
  bool unital = true;
};

// eta_gamma(N^{(x)k}) <= 1/2 sqrt((1 + g)^2 - 4 g (lambda_min / 4)^k) + (1 - g)/2
// with lambda_min the smallest eigenvalue of the Choi matrix of N^dagger o N.
inline QubitTensorBound eta_qubit_tensor_upper(const QuantumChannel& channel, std::size_t k,
                                               Gamma gamma) {
  if (channel.dim_in() != 2 || channel.dim_out() != 2) {
    throw ValidationError("eta_qubit_tensor_upper: requires a qubit channel");
  }
  if (k == 0) throw DomainError("eta_qubit_tensor_upper: k must be at least 1");
  const KrausMap composite = compose(adjoint(channel), channel);
  QubitTensorBound out;
  out.lambda_min = std::max(0.0, choi(composite).min_eigenvalue());
  const Matrix image_of_identity = channel.apply(Matrix::Identity(2, 2));
  out.unital = (image_of_identity - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-9;
  if (!out.unital && !(out.lambda_min > 0.0)) {
    throw PreconditionError(
        "eta_qubit_tensor_upper: non-unital channel with vanishing Choi eigenvalue");
  }
  const double fid = std::pow(out.lambda_min / 4.0, static_cast<double>(k));
  out.value = fvdg_bound_from_fidelity(fid, gamma);
  return out;
}

// -- combined estimate --------------------------------------------------------

enum class MethodTag { kClosedForm, kOptimizedLower, kFvdgUpper, kTraceUpper, kChoiFidelityUpper };

inline std::string_view to_string(MethodTag t) {
  switch (t) {
    case MethodTag::kClosedForm: return "closed_form";
    case MethodTag::kOptimizedLower: return "optimized_lower";
    case MethodTag::kFvdgUpper: return "fvdg_upper";
    case MethodTag::kTraceUpper: return "trace_upper";
    case MethodTag::kChoiFidelityUpper: return "choi_fidelity_upper";
  }
  return "unknown";
}

enum class ContractionMethod { kClosed, kOptimize, kFvdg, kTrace, kChoi };

inline ContractionMethod parse_contraction_method(std::string_view s) {
  if (s == "closed") return ContractionMethod::kClosed;
  if (s == "optimize") return ContractionMethod::kOptimize;
  if (s == "fvdg") return ContractionMethod::kFvdg;
  if (s == "trace") return ContractionMethod::kTrace;
  if (s == "choi") return ContractionMethod::kChoi;
  throw MethodError("unknown contraction method '" + std::string(s) + "'");
}

struct ContractionEstimate {
  std::string channel_id;
  double gamma = 1.0;
  double lower = 0.0;
  double upper = 1.0;
  std::vector<MethodTag> method_tags;
  std::optional<PurePair> best_pair;
  // False when `upper` rests on a numerical estimate rather than a formula.
  bool upper_is_rigorous = true;
};

struct ContractionRequest {
  ContractionMethod method = ContractionMethod::kOptimize;
  std::size_t restarts = kDefaultRestarts;
  std::uint64_t seed = 42;
  std::size_t qubit_power = 1;  // k for the Choi bound on N^{(x)k}
  std::string channel_id;
};

inline ContractionEstimate estimate_contraction(const QuantumChannel& channel, Gamma gamma,
                                                const ContractionRequest& req) {
  ContractionEstimate est;
  est.channel_id = req.channel_id;
  est.gamma = gamma.value();
  auto add_optimized = [&] {
    const EtaLower lo = eta_lower_optimize(channel, gamma, req.restarts, req.seed);
    est.lower = std::max(est.lower, lo.value);
    est.best_pair = lo.pair;
    est.method_tags.push_back(MethodTag::kOptimizedLower);
  };

  switch (req.method) {
    case ContractionMethod::kClosed: {
      const std::optional<double> p = recognize_depolarizing(channel);
      if (!p) {
        throw MethodError("closed form is only available for depolarizing channels");
      }
      est.lower = est.upper = eta_depolarizing_closed(*p, channel.dim_in(), gamma);
      est.method_tags.push_back(MethodTag::kClosedForm);
      return est;
    }
    case ContractionMethod::kOptimize:
      add_optimized();
      est.upper = 1.0;
      return est;
    case ContractionMethod::kFvdg: {
      const FvdgUpper f = eta_upper_fvdg(channel, gamma, req.restarts, req.seed);
      add_optimized();
      est.upper = std::max(f.value, est.lower);
      est.upper_is_rigorous = false;
      est.method_tags.push_back(MethodTag::kFvdgUpper);
      return est;
    }
    case ContractionMethod::kTrace: {
      const std::optional<double> p = recognize_depolarizing(channel);
      double eta1 = 0.0;
      if (p) {
        eta1 = 1.0 - *p;
      } else {
        eta1 = eta_lower_optimize(channel, Gamma(1.0), req.restarts, req.seed).value;
        est.upper_is_rigorous = false;
      }
      add_optimized();
      est.lower = std::max(est.lower, eta_lower_from_eta1(eta1, gamma));
      est.upper = std::max(eta_upper_trace(eta1, gamma), est.lower);
      est.method_tags.push_back(MethodTag::kTraceUpper);
      return est;
    }
    case ContractionMethod::kChoi: {
      if (channel.dim_in() != 2 || channel.dim_out() != 2) {
        throw MethodError("the Choi-spectrum bound requires a qubit channel");
      }
      const QubitTensorBound b = eta_qubit_tensor_upper(channel, req.qubit_power, gamma);
      if (req.qubit_power == 1) add_optimized();
      est.upper = std::max(b.value, est.lower);
      est.method_tags.push_back(MethodTag::kChoiFidelityUpper);
      return est;
    }
  }
  throw MethodError("estimate_contraction: unknown method");
}

}  // namespace qdp

#endif  // QDP_CONTRACTION_HPP_
