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

#include "qdp/direct.hpp"

#include <cmath>
#include <cstdio>

#include "qdp/errors.hpp"
#include "qdp/noise.hpp"
#include "qdp/rng.hpp"

namespace qdp {
namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// log C(t, j) via lgamma; exact enough that the dominant tail term keeps
// ~18 significant digits in long double.
long double log_binom(std::uint64_t t, std::uint64_t j) {
  return std::lgamma(static_cast<long double>(t) + 1.0L) -
         std::lgamma(static_cast<long double>(j) + 1.0L) -
         std::lgamma(static_cast<long double>(t - j) + 1.0L);
}

// B(t, j) = C(t, j) p^j (1-p)^(t-j) with p = 1/n, in log space.
long double binom_pmf(std::uint64_t t, std::uint64_t j, long double log_p,
                      long double log_1mp) {
  return std::exp(log_binom(t, j) + static_cast<long double>(j) * log_p +
                   static_cast<long double>(t - j) * log_1mp);
}

}  // namespace

DirectPrivacy account_direct(std::uint64_t n, std::uint64_t t, std::uint64_t k,
                             double epsilon) {
  if (n < 1) throw EmptyDatasetError("accounting requires n >= 1");
  if (t < 1) throw Error("accounting requires t >= 1");
  if (k >= 1 && !(epsilon > 0.0)) {
    throw Error("accounting requires epsilon > 0 when k >= 1");
  }

  const long double p = 1.0L / static_cast<long double>(n);
  const long double log_p = -std::log(static_cast<long double>(n));
  const long double log_1mp = std::log1p(-p);

  // delta_k = P[Binom(t, 1/n) > k], summed from the smallest term up. For
  // k = 0 the closed form 1 - (1-p)^t is exact and cheaper.
  long double delta;
  if (k == 0) {
    delta = -std::expm1(static_cast<long double>(t) * log_1mp);
  } else if (k >= t) {
    delta = 0.0L;
  } else {
    long double sum = 0.0L, comp = 0.0L;
    for (std::uint64_t j = t; j > k; --j) {
      const long double term = binom_pmf(t, j, log_p, log_1mp);
      const long double y = term - comp;
      const long double s = sum + y;
      comp = (s - sum) - y;
      sum = s;
    }
    delta = sum;
  }

  // eps'_k = ln( sum_{j=0..k} e^{j eps/k} B(t, j) ). Rewriting the sum as
  // (1 - delta_k) + sum_{j=1..k} B(t, j) expm1(j eps/k) keeps full precision
  // when the whole expression sits near 1.
  long double eps_prime = 0.0L;
  if (k >= 1) {
    long double excess = 0.0L, comp = 0.0L;
    const std::uint64_t j_hi = std::min(k, t);
    for (std::uint64_t j = j_hi; j >= 1; --j) {
      const long double term =
          binom_pmf(t, j, log_p, log_1mp) *
          std::expm1(static_cast<long double>(j) * epsilon /
                      static_cast<long double>(k));
      const long double y = term - comp;
      const long double s = excess + y;
      comp = (s - excess) - y;
      excess = s;
    }
    // The raw formula can dip below zero when k undershoots the expected
    // collision count; a negative bound implies the (0, delta) guarantee, so
    // report the floor. The same guard catches log1p of values under -1.
    const long double x = excess - delta;
    eps_prime = x > -1.0L ? std::log1p(x) : 0.0L;
    if (eps_prime < 0.0L) eps_prime = 0.0L;
  }

  DirectPrivacy out;
  out.eps_prime = static_cast<double>(eps_prime);
  out.delta = static_cast<double>(delta);
  return out;
}

DirectReport run_direct(const Dataset& d, const PredicateQuery& q,
                        const DirectConfig& cfg) {
  if (cfg.t < 1) throw Error("run_direct requires t >= 1");
  if (d.row_width() != q.row_width) {
    throw DimensionMismatchError("query was built against a different row width");
  }
  const std::uint64_t n = d.size();

  // Measuring |phi_D> in the computational basis yields row i with
  // probability exactly 1/n, so the t measurements reduce to t uniform draws.
  auto rng = substream(cfg.seed, "direct", 0);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < cfg.t; ++i) {
    const std::uint64_t idx = uniform_below(rng, n);
    if (eval_row(q, d.rows()[idx])) ++hits;
  }

  DirectReport r;
  r.n = n;
  r.t = cfg.t;
  r.k = cfg.k;
  r.seed = cfg.seed;
  r.raw_mean = static_cast<double>(hits) / static_cast<double>(cfg.t);
  if (cfg.k >= 1) {
    if (!(cfg.epsilon > 0.0)) throw Error("run_direct requires epsilon > 0 when k >= 1");
    r.noise_scale = static_cast<double>(cfg.k) /
                    (static_cast<double>(cfg.t) * cfg.epsilon);
    r.answer = r.raw_mean + sample_laplace(rng, r.noise_scale);
  } else {
    r.noise_scale = 0.0;
    r.answer = r.raw_mean;
  }
  const DirectPrivacy pv = account_direct(n, cfg.t, cfg.k, cfg.epsilon);
  r.eps_prime = pv.eps_prime;
  r.delta = pv.delta;
  return r;
}

double baseline_povm_scale(std::uint64_t n, double tau, double epsilon,
                           bool refined) {
  if (n < 1) throw EmptyDatasetError("baseline requires n >= 1");
  if (!(epsilon > 0.0)) throw Error("baseline requires epsilon > 0");
  if (tau < 0.0) throw Error("baseline requires tau >= 0");
  const double nn = static_cast<double>(n);
  const double shift =
      refined ? 1.0 / nn : std::sqrt(2.0 * nn - 1.0) / nn;
  return (tau + shift) / epsilon;
}

std::vector<std::pair<std::string, std::string>> DirectReport::to_kv() const {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("mechanism", "direct");
  kv.emplace_back("n", std::to_string(n));
  kv.emplace_back("t", std::to_string(t));
  kv.emplace_back("k", std::to_string(k));
  kv.emplace_back("seed", std::to_string(seed));
  kv.emplace_back("noise_scale", fmt17(noise_scale));
  kv.emplace_back("answer", fmt17(answer));
  kv.emplace_back("eps_prime", fmt17(eps_prime));
  kv.emplace_back("delta", fmt17(delta));
  return kv;
}

}  // namespace qdp
