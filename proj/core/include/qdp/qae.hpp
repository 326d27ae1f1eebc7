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

#ifndef QDP_QAE_HPP_
#define QDP_QAE_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qdp/dataset.hpp"
#include "qdp/query.hpp"

namespace qdp {

// Privacy post-treatments of the amplitude estimation readout.
enum class DpMode {
  none,          // raw estimate, no privacy
  post_laplace,  // Laplace noise on the reported angle after measurement
  phase_noise,   // Laplace phase kick on the Grover eigenphase before readout
};

struct QaeConfig {
  std::uint64_t M = 16;          // grid size, 2^m readout outcomes
  DpMode dp_mode = DpMode::none;
  double epsilon = 1.0;          // used by post_laplace / phase_noise
  std::uint64_t seed = 0;
};

struct QaeOutcome {
  std::uint64_t y = 0;           // measured grid index in [0, M)
  double alpha_hat = 0.0;        // sin^2 of the reported angle
  double theta_reported = 0.0;   // pi*y/M, plus Laplace noise under post_laplace
  std::optional<double> eta;     // phase kick actually drawn (phase_noise only)
};

// Exact M-point phase-estimation readout law for Grover eigenphases
// e^{+-2i theta}:
//   Pr[y] = 1/2 F_M(theta/pi - y/M) + 1/2 F_M(-theta/pi - y/M)
// with F_M(d) = sin^2(pi M d) / (M^2 sin^2(pi d)), extended by 1 at integer d.
// Valid for any real theta and sums to 1 exactly.
std::vector<double> outcome_distribution(double theta, std::uint64_t M);

// Inverse-CDF draw from a finite distribution (deterministic given the rng).
std::uint64_t sample_outcome(const std::vector<double>& dist, std::mt19937_64& rng);

// One amplitude-estimation run against the encoded dataset. phase_noise draws
// one eta ~ Lap(angle_sensitivity(n)/epsilon) and reads out the clean
// distribution at theta + eta; post_laplace requires
// M < pi / angle_sensitivity(n) and adds Lap(pi/(M epsilon)) to the angle.
QaeOutcome run_qae(const Dataset& d, const PredicateQuery& q, const QaeConfig& cfg);

// t independent runs (seeds derived per repetition), lower median of the
// alpha estimates.
struct MedianReport {
  double alpha_hat = 0.0;
  std::vector<QaeOutcome> runs;
};
MedianReport median_amplify(const Dataset& d, const PredicateQuery& q,
                            const QaeConfig& cfg, std::uint64_t t);

// |alpha_hat - alpha| <= 2 pi sqrt(alpha(1-alpha))/M + pi^2/M^2, with
// probability at least 8/pi^2 for a single run.
double error_bound(double alpha, std::uint64_t M);

// Worst-case angle shift of a one-row substitution: arcsin(1/sqrt(n)).
double angle_sensitivity(std::uint64_t n);

// Largest M allowed by the post_laplace premise M < pi / arcsin(1/sqrt(n)).
std::uint64_t max_post_laplace_m(std::uint64_t n);

// Hoeffding bound on the lower-median failure probability after t runs:
// exp(-2 t (8/pi^2 - 1/2)^2).
double median_failure_bound(std::uint64_t t);

}  // namespace qdp

#endif  // QDP_QAE_HPP_
