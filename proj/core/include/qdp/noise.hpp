// Copyright 2026 The qdp developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDP_NOISE_HPP_
#define QDP_NOISE_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace qdp {

// Laplace(0, scale) via inverse CDF: x = -scale * sgn(u - 1/2) * ln(1 - 2|u - 1/2|).
// Draws of u that would hit the log endpoint are rejected and redrawn.
double sample_laplace(std::mt19937_64& rng, double scale);

double laplace_density(double x, double scale);

class LaplaceSampler {
 public:
  LaplaceSampler(double scale, std::uint64_t seed);

  double sample() { return sample_laplace(rng_, scale_); }
  double scale() const { return scale_; }

 private:
  double scale_;
  std::mt19937_64 rng_;
};

// A stack of depolarizing layers with strengths probs acting on a
// dim-dimensional system (the Hilbert-space dimension, not the row width).
struct DepolarizingSpec {
  std::vector<double> probs;
  int dim = 2;
};

// Composition law: the stack collapses to one layer of strength
// 1 - prod_i (1 - p_i).
double compose_depolarizing(std::span<const double> probs);

// D_p(rho) = (1 - p) rho + p I/dim. Validates that rho is square, Hermitian
// and unit trace.
Eigen::MatrixXcd apply_depolarizing(const Eigen::MatrixXcd& rho, double p);

// DP parameter of a depolarizing output for states at trace distance <= tau:
// epsilon = ln(1 + ((1 - p)/p) * dim * tau). p must be positive; p = 1 gives 0.
double depolarizing_epsilon(double p, int dim, double tau);

}  // namespace qdp

#endif  // QDP_NOISE_HPP_
