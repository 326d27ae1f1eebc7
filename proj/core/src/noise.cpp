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

#include "qdp/noise.hpp"

#include <cmath>

#include "qdp/errors.hpp"
#include "qdp/rng.hpp"

namespace qdp {

double sample_laplace(std::mt19937_64& rng, double scale) {
  if (scale < 0.0) throw Error("laplace scale must be non-negative");
  if (scale == 0.0) return 0.0;
  for (;;) {
    const double u = uniform01(rng);
    const double centered = u - 0.5;
    const double inner = 1.0 - 2.0 * std::abs(centered);
    if (inner <= 0.0) continue;  // u == 0 would push ln to -inf
    const double sign = centered < 0.0 ? -1.0 : 1.0;
    return -scale * sign * std::log(inner);
  }
}

double laplace_density(double x, double scale) {
  if (scale <= 0.0) throw Error("laplace density needs a positive scale");
  return std::exp(-std::abs(x) / scale) / (2.0 * scale);
}

LaplaceSampler::LaplaceSampler(double scale, std::uint64_t seed)
    : scale_(scale), rng_(seed) {
  if (scale < 0.0) throw Error("laplace scale must be non-negative");
}

double compose_depolarizing(std::span<const double> probs) {
  double keep = 1.0;
  for (double p : probs) {
    if (p < 0.0 || p > 1.0) throw Error("depolarizing strength outside [0, 1]");
    keep *= 1.0 - p;
  }
  return 1.0 - keep;
}

Eigen::MatrixXcd apply_depolarizing(const Eigen::MatrixXcd& rho, double p) {
  if (p < 0.0 || p > 1.0) throw Error("depolarizing strength outside [0, 1]");
  if (rho.rows() != rho.cols())
    throw NotDensityMatrixError("density matrix must be square");
  constexpr double kTol = 1e-9;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kTol)
    throw NotDensityMatrixError("density matrix must be Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > kTol || std::abs(rho.trace().imag()) > kTol)
    throw NotDensityMatrixError("density matrix must have unit trace");
  const auto dim = rho.rows();
  return (1.0 - p) * rho +
         (p / static_cast<double>(dim)) *
             Eigen::MatrixXcd::Identity(dim, dim);
}

double depolarizing_epsilon(double p, int dim, double tau) {
  if (p <= 0.0) throw ZeroPError("depolarizing epsilon diverges as p -> 0");
  if (p > 1.0) throw Error("depolarizing strength outside (0, 1]");
  if (dim < 1) throw Error("dimension must be positive");
  if (tau < 0.0) throw Error("trace distance must be non-negative");
  return std::log1p((1.0 - p) / p * static_cast<double>(dim) * tau);
}

}  // namespace qdp
