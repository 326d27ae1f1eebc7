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

#include "qdp/qae.hpp"

#include <algorithm>
#include <cmath>

#include "qdp/errors.hpp"
#include "qdp/noise.hpp"
#include "qdp/rng.hpp"
#include "qdp/state.hpp"

namespace qdp {
namespace {

constexpr double kPi = 3.14159265358979323846;

// F_M(d) = sin^2(pi M d)/(M^2 sin^2(pi d)), period 1. Reducing d to the
// nearest integer first keeps both sines well conditioned; the squared kernel
// is insensitive to the sign flips the reduction introduces.
double fejer_kernel(double delta, std::uint64_t M) {
  const double dw = delta - std::round(delta);
  if (std::abs(dw) < 1e-12) return 1.0;
  const double num = std::sin(kPi * static_cast<double>(M) * dw);
  const double den = static_cast<double>(M) * std::sin(kPi * dw);
  return (num * num) / (den * den);
}

QaeOutcome readout(double theta, const QaeConfig& cfg, std::mt19937_64& rng) {
  const auto dist = outcome_distribution(theta, cfg.M);
  QaeOutcome out;
  out.y = sample_outcome(dist, rng);
  out.theta_reported = kPi * static_cast<double>(out.y) / static_cast<double>(cfg.M);
  const double s = std::sin(out.theta_reported);
  out.alpha_hat = s * s;
  return out;
}

}  // namespace

std::vector<double> outcome_distribution(double theta, std::uint64_t M) {
  if (M < 1) throw Error("outcome_distribution requires M >= 1");
  const double w = theta / kPi;
  std::vector<double> dist(M);
  for (std::uint64_t y = 0; y < M; ++y) {
    const double dy = static_cast<double>(y) / static_cast<double>(M);
    dist[y] = 0.5 * fejer_kernel(w - dy, M) + 0.5 * fejer_kernel(-w - dy, M);
  }
  return dist;
}

std::uint64_t sample_outcome(const std::vector<double>& dist, std::mt19937_64& rng) {
  if (dist.empty()) throw Error("sample_outcome requires a nonempty distribution");
  const double u = uniform01(rng);
  double acc = 0.0;
  for (std::uint64_t y = 0; y + 1 < dist.size(); ++y) {
    acc += dist[y];
    if (u < acc) return y;
  }
  return dist.size() - 1;
}

QaeOutcome run_qae(const Dataset& d, const PredicateQuery& q, const QaeConfig& cfg) {
  if (cfg.M < 1) throw Error("run_qae requires M >= 1");
  const GoodBadSplit split = decompose(d, q);
  auto rng = substream(cfg.seed, "qae", 0);

  switch (cfg.dp_mode) {
    case DpMode::none:
      return readout(split.theta, cfg, rng);

    case DpMode::post_laplace: {
      if (!(cfg.epsilon > 0.0)) throw Error("post_laplace requires epsilon > 0");
      if (cfg.M > max_post_laplace_m(d.size())) {
        throw MTooLargeForPostLaplaceError(
            "post_laplace requires M < pi / arcsin(1/sqrt(n))");
      }
      QaeOutcome out = readout(split.theta, cfg, rng);
      const double scale = kPi / (static_cast<double>(cfg.M) * cfg.epsilon);
      out.theta_reported += sample_laplace(rng, scale);
      const double s = std::sin(out.theta_reported);
      out.alpha_hat = s * s;
      return out;
    }

    case DpMode::phase_noise: {
      if (!(cfg.epsilon > 0.0)) throw Error("phase_noise requires epsilon > 0");
      const double scale = angle_sensitivity(d.size()) / cfg.epsilon;
      const double eta = sample_laplace(rng, scale);
      QaeOutcome out = readout(split.theta + eta, cfg, rng);
      out.eta = eta;
      return out;
    }
  }
  throw Error("unknown dp mode");
}

MedianReport median_amplify(const Dataset& d, const PredicateQuery& q,
                            const QaeConfig& cfg, std::uint64_t t) {
  if (t < 1) throw Error("median_amplify requires t >= 1");
  MedianReport rep;
  rep.runs.reserve(t);
  std::vector<double> alphas;
  alphas.reserve(t);
  for (std::uint64_t i = 0; i < t; ++i) {
    QaeConfig rc = cfg;
    rc.seed = derive_seed(cfg.seed, "rep", i);
    rep.runs.push_back(run_qae(d, q, rc));
    alphas.push_back(rep.runs.back().alpha_hat);
  }
  std::sort(alphas.begin(), alphas.end());
  rep.alpha_hat = alphas[(t - 1) / 2];
  return rep;
}

double error_bound(double alpha, std::uint64_t M) {
  if (M < 1) throw Error("error_bound requires M >= 1");
  if (alpha < 0.0 || alpha > 1.0) throw Error("error_bound requires alpha in [0, 1]");
  const double m = static_cast<double>(M);
  return 2.0 * kPi * std::sqrt(alpha * (1.0 - alpha)) / m + kPi * kPi / (m * m);
}

double angle_sensitivity(std::uint64_t n) {
  if (n < 2) throw NTooSmallError("angle sensitivity requires n >= 2");
  return std::asin(1.0 / std::sqrt(static_cast<double>(n)));
}

std::uint64_t max_post_laplace_m(std::uint64_t n) {
  const long double as =
      std::asin(1.0L / std::sqrt(static_cast<long double>(n)));
  const long double pi_l = 3.141592653589793238462643383279502884L;
  if (n < 2) throw NTooSmallError("post_laplace bound requires n >= 2");
  auto m = static_cast<std::uint64_t>(std::floor(pi_l / as));
  while (m >= 1 && static_cast<long double>(m) * as >= pi_l) --m;
  if (m < 1) throw MTooLargeForPostLaplaceError("no admissible M for this n");
  return m;
}

double median_failure_bound(std::uint64_t t) {
  const double p_good = 8.0 / (kPi * kPi);
  const double gap = p_good - 0.5;
  return std::exp(-2.0 * static_cast<double>(t) * gap * gap);
}

}  // namespace qdp
