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

#ifndef QDP_DIRECT_HPP_
#define QDP_DIRECT_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qdp/dataset.hpp"
#include "qdp/query.hpp"

namespace qdp {

// Direct measurement mechanism: measuring the basis-encoded state t times
// with the query's two-outcome POVM is distributed exactly like sampling t
// rows uniformly with replacement, so the mechanism runs as classical
// sampling plus Laplace noise of scale k/(t*epsilon).
struct DirectConfig {
  std::uint64_t t = 1;       // number of measurements
  std::uint64_t k = 1;       // accounted sensitivity multiplier; 0 disables noise
  double epsilon = 1.0;      // per-query budget parameter
  std::uint64_t seed = 0;
};

struct DirectReport {
  double answer = 0.0;       // raw_mean + Laplace noise, unclamped
  double raw_mean = 0.0;     // non-private; expose only in debug output
  double noise_scale = 0.0;  // k/(t*epsilon), 0 when k == 0
  double eps_prime = 0.0;
  double delta = 0.0;
  std::uint64_t n = 0;
  std::uint64_t t = 0;
  std::uint64_t k = 0;
  std::uint64_t seed = 0;

  std::vector<std::pair<std::string, std::string>> to_kv() const;
};

DirectReport run_direct(const Dataset& d, const PredicateQuery& q,
                        const DirectConfig& cfg);

// Privacy pair of the k-truncated accounting:
//   eps'_k  = ln( sum_{j=0..k} e^{j*eps/k} B(t, j) )       (0 when k == 0)
//   delta_k = sum_{j=k+1..t} B(t, j)
// with B(t, j) = C(t, j) (1/n)^j (1 - 1/n)^(t-j). delta is evaluated as the
// upper binomial tail in extended precision, so values down to 1e-12 keep
// more than four significant digits. When k is far below the expected
// collision count t/n the raw eps' formula is negative; that still implies
// the (0, delta_k) guarantee, so eps_prime is floored at zero.
struct DirectPrivacy {
  double eps_prime = 0.0;
  double delta = 0.0;
};
DirectPrivacy account_direct(std::uint64_t n, std::uint64_t t, std::uint64_t k,
                             double epsilon);

// Laplace scale of the POVM baseline for comparison: (tau + sqrt(2n-1)/n)/epsilon,
// or the counting-query refinement (tau + 1/n)/epsilon.
double baseline_povm_scale(std::uint64_t n, double tau, double epsilon, bool refined);

}  // namespace qdp

#endif  // QDP_DIRECT_HPP_
