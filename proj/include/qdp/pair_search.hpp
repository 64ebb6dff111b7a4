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

// Multi-start derivative-free maximization over orthonormal pairs
// (|phi>, |psi>) in C^dim.
//
// A pair is carried as the first two columns of a unitary U. Each restart
// draws a Haar U; refinement is coordinate search over Givens rotations that
// mix column 0 or 1 with every other column (including the random
// complement), in a real and an imaginary variant. A sweep tries +step and
// -step for each generator and accepts improvements larger than
// `min_improvement`; a sweep without improvement halves the step, and the
// search stops once the step drops below `final_step`.

#ifndef QDP_PAIR_SEARCH_HPP_
#define QDP_PAIR_SEARCH_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

#include "qdp/core.hpp"
#include "qdp/random.hpp"

namespace qdp {

struct PairSearchOptions {
  std::size_t restarts = 200;
  std::uint64_t seed = 42;
  double initial_step = 0.5;
  double final_step = 1e-4;
  double min_improvement = 1e-10;
  std::size_t max_sweeps_per_step = 64;
};

struct PairSearchResult {
  double value = -std::numeric_limits<double>::infinity();
  PurePair pair;
  std::size_t best_restart = 0;
  std::size_t evaluations = 0;
};

namespace detail {

// Rotates columns (i, j) of u in place by angle theta; `imaginary` selects
// exp(-i theta sigma_x) instead of exp(-i theta sigma_y).
inline void givens_rotate(Matrix& u, Eigen::Index i, Eigen::Index j, double theta,
                          bool imaginary) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Vector ci = u.col(i);
  const Vector cj = u.col(j);
  if (imaginary) {
    const Complex is(0.0, s);
    u.col(i) = c * ci + is * cj;
    u.col(j) = is * ci + c * cj;
  } else {
    u.col(i) = c * ci + s * cj;
    u.col(j) = -s * ci + c * cj;
  }
}

}  // namespace detail

// `objective(phi, psi)` is maximized. Ties across restarts keep the lowest
// restart index.
template <typename Objective>
PairSearchResult maximize_over_orthogonal_pairs(std::size_t dim, Objective&& objective,
                                                const PairSearchOptions& opts = {}) {
  if (dim < 2) throw ValidationError("maximize_over_orthogonal_pairs: dim must be at least 2");
  if (opts.restarts == 0) throw ValidationError("maximize_over_orthogonal_pairs: restarts >= 1");

  PairSearchResult best;
  const auto d = static_cast<Eigen::Index>(dim);
  for (std::size_t r = 0; r < opts.restarts; ++r) {
    Matrix u = haar_unitary(dim, derive_seed(opts.seed, r));
    double current = objective(Vector(u.col(0)), Vector(u.col(1)));
    ++best.evaluations;

    for (double step = opts.initial_step; step >= opts.final_step; step *= 0.5) {
      for (std::size_t sweep = 0; sweep < opts.max_sweeps_per_step; ++sweep) {
        bool improved = false;
        for (Eigen::Index i = 0; i < 2; ++i) {
          for (Eigen::Index j = i + 1; j < d; ++j) {
            for (const bool imaginary : {false, true}) {
              for (const double sign : {1.0, -1.0}) {
                Matrix trial = u;
                detail::givens_rotate(trial, i, j, sign * step, imaginary);
                const double v = objective(Vector(trial.col(0)), Vector(trial.col(1)));
                ++best.evaluations;
                if (v > current + opts.min_improvement) {
                  current = v;
                  u = std::move(trial);
                  improved = true;
                  break;
                }
              }
            }
          }
        }
        if (!improved) break;
      }
    }

    if (current > best.value) {
      best.value = current;
      best.pair = {u.col(0), u.col(1)};
      best.best_restart = r;
    }
  }
  return best;
}

}  // namespace qdp

#endif  // QDP_PAIR_SEARCH_HPP_
