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

#include "qdp/state.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <set>

#include "qdp/errors.hpp"
#include "qdp/rng.hpp"

namespace qdp {
namespace {

constexpr double kAmpEps = 1e-14;  // dropped after destructive interference

void check_qubit(const SparseState& s, std::uint32_t q) {
  if (q >= s.num_qubits)
    throw IndexOutOfRangeError("qubit " + std::to_string(q) + " out of range for " +
                               std::to_string(s.num_qubits) + "-qubit state");
}

}  // namespace

double SparseState::norm_sq() const {
  double n = 0.0;
  for (const auto& [idx, a] : amps) n += std::norm(a);
  return n;
}

SparseState basis_encode(const Dataset& d) {
  std::set<std::uint64_t> distinct(d.rows().begin(), d.rows().end());
  if (distinct.size() != d.rows().size())
    throw DuplicateRowsError(
        "dataset rows are not distinct; enable the index prefix to encode duplicates");
  SparseState s;
  s.num_qubits = static_cast<std::uint32_t>(d.row_width());
  const double amp = 1.0 / std::sqrt(static_cast<double>(d.size()));
  for (std::uint64_t row : d.rows()) s.amps[row] = amp;
  return s;
}

GoodBadSplit decompose(const Dataset& d, const PredicateQuery& q) {
  const SparseState full = basis_encode(d);
  GoodBadSplit split;
  split.good.num_qubits = full.num_qubits;
  split.bad.num_qubits = full.num_qubits;
  for (const auto& [row, amp] : full.amps) {
    if (eval_row(q, row)) {
      split.good.amps[row] = amp;
    } else {
      split.bad.amps[row] = amp;
    }
  }
  split.alpha = eval_dataset(q, d);
  split.theta = std::asin(std::sqrt(split.alpha.to_double()));
  return split;
}

double kernel(const Dataset& d1, const Dataset& d2) {
  if (d1.size() != d2.size())
    throw DimensionMismatchError("kernel requires equal row counts");
  if (d1.row_width() != d2.row_width())
    throw DimensionMismatchError("kernel requires equal row widths");
  const std::set<std::uint64_t> r1(d1.rows().begin(), d1.rows().end());
  std::uint64_t overlap = 0;
  std::set<std::uint64_t> seen;
  for (std::uint64_t row : d2.rows())
    if (r1.count(row) && seen.insert(row).second) ++overlap;
  const double frac = static_cast<double>(overlap) / static_cast<double>(d1.size());
  return frac * frac;
}

double min_adjacent_kernel(std::uint64_t n) {
  const double inv = 1.0 / static_cast<double>(n);
  return (1.0 - inv) * (1.0 - inv);
}

double trace_distance_bound(std::uint64_t n) {
  const double dn = static_cast<double>(n);
  return std::sqrt(2.0 * dn - 1.0) / dn;
}

namespace {

void apply_permutation_gate(SparseState& state, const Gate& g) {
  const std::uint64_t target_mask = std::uint64_t{1} << g.target;
  std::uint64_t control_mask = 0;
  for (std::uint32_t c : g.controls) control_mask |= std::uint64_t{1} << c;
  std::map<std::uint64_t, std::complex<double>> next;
  for (const auto& [idx, amp] : state.amps) {
    const std::uint64_t moved =
        ((idx & control_mask) == control_mask) ? (idx ^ target_mask) : idx;
    next[moved] += amp;
  }
  state.amps = std::move(next);
}

void apply_phase_gate(SparseState& state, std::uint32_t q, std::complex<double> phase) {
  const std::uint64_t mask = std::uint64_t{1} << q;
  for (auto& [idx, amp] : state.amps)
    if (idx & mask) amp *= phase;
}

void apply_h(SparseState& state, std::uint32_t q) {
  const std::uint64_t mask = std::uint64_t{1} << q;
  const double inv_sqrt2 = (1.0 / std::numbers::sqrt2);
  std::map<std::uint64_t, std::complex<double>> next;
  for (const auto& [idx, amp] : state.amps) {
    const bool bit = idx & mask;
    next[idx & ~mask] += amp * inv_sqrt2;
    next[idx | mask] += (bit ? -amp : amp) * inv_sqrt2;
  }
  for (auto it = next.begin(); it != next.end();) {
    if (std::abs(it->second.real()) < kAmpEps && std::abs(it->second.imag()) < kAmpEps) {
      it = next.erase(it);
    } else {
      it->second = {std::abs(it->second.real()) < kAmpEps ? 0.0 : it->second.real(),
                    std::abs(it->second.imag()) < kAmpEps ? 0.0 : it->second.imag()};
      ++it;
    }
  }
  state.amps = std::move(next);
}

}  // namespace

void apply_gate(SparseState& state, const Gate& g) {
  check_qubit(state, g.target);
  for (std::uint32_t c : g.controls) {
    check_qubit(state, c);
    if (c == g.target) throw IndexOutOfRangeError("gate control equals target");
  }
  using namespace std::complex_literals;
  const double isq2 = (1.0 / std::numbers::sqrt2);
  switch (g.kind) {
    case GateKind::x:
    case GateKind::cnot:
    case GateKind::toffoli:
    case GateKind::mcx:
      apply_permutation_gate(state, g);
      return;
    case GateKind::z:
      apply_phase_gate(state, g.target, -1.0);
      return;
    case GateKind::s:
      apply_phase_gate(state, g.target, 1.0i);
      return;
    case GateKind::sdg:
      apply_phase_gate(state, g.target, -1.0i);
      return;
    case GateKind::t:
      apply_phase_gate(state, g.target, std::complex<double>(isq2, isq2));
      return;
    case GateKind::tdg:
      apply_phase_gate(state, g.target, std::complex<double>(isq2, -isq2));
      return;
    case GateKind::h:
      apply_h(state, g.target);
      return;
  }
  throw UnsupportedGateError("unknown gate kind");
}

void apply_circuit(SparseState& state, std::span<const Gate> gates) {
  for (const Gate& g : gates) apply_gate(state, g);
}

SparseState with_ancillas(const SparseState& s, std::span<const std::uint8_t> init) {
  SparseState out;
  out.num_qubits = s.num_qubits + static_cast<std::uint32_t>(init.size());
  std::uint64_t anc = 0;
  for (std::size_t i = 0; i < init.size(); ++i)
    if (init[i]) anc |= std::uint64_t{1} << (s.num_qubits + i);
  for (const auto& [idx, amp] : s.amps) out.amps[idx | anc] = amp;
  return out;
}

SparseState encoded_input(const Dataset& d, const ReversibleCircuit& c) {
  const SparseState base = basis_encode(d);
  if (base.num_qubits != c.data_qubits)
    throw DimensionMismatchError("circuit was compiled for a different row width");
  return with_ancillas(base, c.ancilla_init);
}

double marginal_prob_one(const SparseState& s, std::uint32_t qubit) {
  check_qubit(s, qubit);
  const std::uint64_t mask = std::uint64_t{1} << qubit;
  double p = 0.0;
  for (const auto& [idx, amp] : s.amps)
    if (idx & mask) p += std::norm(amp);
  return p;
}

int measure_qubit(SparseState& s, std::uint32_t qubit, std::mt19937_64& rng) {
  const double p1 = marginal_prob_one(s, qubit);
  const int outcome = uniform01(rng) < p1 ? 1 : 0;
  const double keep_prob = outcome ? p1 : 1.0 - p1;
  const std::uint64_t mask = std::uint64_t{1} << qubit;
  const double scale = 1.0 / std::sqrt(keep_prob);
  for (auto it = s.amps.begin(); it != s.amps.end();) {
    const bool bit = it->first & mask;
    if (static_cast<int>(bit) == outcome) {
      it->second *= scale;
      ++it;
    } else {
      it = s.amps.erase(it);
    }
  }
  return outcome;
}

void remove_top_qubit(SparseState& s, int bit) {
  if (s.num_qubits == 0) throw IndexOutOfRangeError("state has no qubits");
  const std::uint64_t mask = std::uint64_t{1} << (s.num_qubits - 1);
  std::map<std::uint64_t, std::complex<double>> next;
  for (const auto& [idx, amp] : s.amps) {
    if (static_cast<int>(static_cast<bool>(idx & mask)) != bit)
      throw Error("top qubit is not in the expected basis state");
    next[idx & ~mask] = amp;
  }
  s.amps = std::move(next);
  --s.num_qubits;
}

std::complex<double> inner_product(const SparseState& a, const SparseState& b) {
  if (a.num_qubits != b.num_qubits)
    throw DimensionMismatchError("inner product requires equal qubit counts");
  // Iterate the smaller support.
  const SparseState& small = a.amps.size() <= b.amps.size() ? a : b;
  const SparseState& large = a.amps.size() <= b.amps.size() ? b : a;
  const bool swapped = &small != &a;
  std::complex<double> acc = 0.0;
  for (const auto& [idx, amp] : small.amps) {
    const auto it = large.amps.find(idx);
    if (it == large.amps.end()) continue;
    acc += swapped ? std::conj(it->second) * amp : std::conj(amp) * it->second;
  }
  return acc;
}

double fidelity(const SparseState& a, const SparseState& b) {
  return std::norm(inner_product(a, b));
}

std::string to_debug_string(const SparseState& s) {
  std::string out;
  char buf[96];
  for (const auto& [idx, amp] : s.amps) {
    std::string bits(s.num_qubits, '0');
    for (std::uint32_t i = 0; i < s.num_qubits; ++i)
      if ((idx >> (s.num_qubits - 1 - i)) & 1) bits[i] = '1';
    std::snprintf(buf, sizeof(buf), " %.17g %.17g\n", amp.real(), amp.imag());
    out += bits;
    out += buf;
  }
  return out;
}

}  // namespace qdp
