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

#include "qdp/qotp.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <utility>

#include "qdp/errors.hpp"

namespace qdp {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::uint64_t qubit_mask(std::uint32_t num_qubits) {
  return num_qubits >= 64 ? ~std::uint64_t{0}
                          : (std::uint64_t{1} << num_qubits) - 1;
}

void check_key(const PauliKey& key, const SparseState& s) {
  if (key.num_qubits != s.num_qubits) {
    throw KeyLengthMismatchError("key and state qubit counts differ");
  }
}

int parity(std::uint64_t x) { return std::popcount(x) & 1; }

// Tensors one qubit with amplitudes (amp0, amp1) above the register.
SparseState append_qubit(const SparseState& s, std::complex<double> amp0,
                         std::complex<double> amp1) {
  SparseState out;
  out.num_qubits = s.num_qubits + 1;
  const std::uint64_t top = std::uint64_t{1} << s.num_qubits;
  for (const auto& [idx, amp] : s.amps) {
    if (std::norm(amp * amp0) > 0.0) out.amps[idx] = amp * amp0;
    if (std::norm(amp * amp1) > 0.0) out.amps[idx | top] = amp * amp1;
  }
  return out;
}

}  // namespace

PauliKey random_key(std::uint32_t num_qubits, std::mt19937_64& rng) {
  if (num_qubits < 1 || num_qubits > 64) {
    throw Error("random_key requires 1 <= num_qubits <= 64");
  }
  PauliKey k;
  k.num_qubits = num_qubits;
  k.a = rng() & qubit_mask(num_qubits);
  k.b = rng() & qubit_mask(num_qubits);
  return k;
}

SparseState qotp_encrypt(const SparseState& s, const PauliKey& key) {
  check_key(key, s);
  SparseState out;
  out.num_qubits = s.num_qubits;
  for (const auto& [idx, amp] : s.amps) {
    out.amps[idx ^ key.a] = parity(key.b & idx) ? -amp : amp;
  }
  return out;
}

SparseState qotp_decrypt(const SparseState& s, const PauliKey& key) {
  check_key(key, s);
  SparseState out;
  out.num_qubits = s.num_qubits;
  for (const auto& [idx, amp] : s.amps) {
    const std::uint64_t plain = idx ^ key.a;
    out.amps[plain] = parity(key.b & plain) ? -amp : amp;
  }
  return out;
}

PauliKey key_update(const PauliKey& key, const Gate& g) {
  PauliKey k = key;
  const std::uint64_t tbit = std::uint64_t{1} << g.target;
  switch (g.kind) {
    case GateKind::x:
    case GateKind::z:
      return k;
    case GateKind::s:
    case GateKind::sdg:
      k.b ^= k.a & tbit;
      return k;
    case GateKind::h: {
      const std::uint64_t ai = (k.a >> g.target) & 1;
      const std::uint64_t bi = (k.b >> g.target) & 1;
      k.a = (k.a & ~tbit) | (bi << g.target);
      k.b = (k.b & ~tbit) | (ai << g.target);
      return k;
    }
    case GateKind::cnot: {
      const std::uint32_t c = g.controls[0];
      const std::uint64_t cbit = std::uint64_t{1} << c;
      if ((k.b >> g.target) & 1) k.b ^= cbit;
      if ((k.a >> c) & 1) k.a ^= tbit;
      return k;
    }
    default:
      throw UnknownGateError("no pure key update for this gate");
  }
}

HomomorphicResult homomorphic_exec(const SparseState& cipher, const PauliKey& key,
                                   std::span<const Gate> gates,
                                   std::mt19937_64& rng) {
  check_key(key, cipher);
  HomomorphicResult res;
  res.state = cipher;
  res.key = key;

  std::vector<Gate> lowered;
  for (const Gate& g : gates) {
    switch (g.kind) {
      case GateKind::tdg:
        lowered.push_back(gt(g.target));
        lowered.push_back(gs(g.target));
        lowered.push_back(gz(g.target));
        break;
      case GateKind::sdg:
        lowered.push_back(gs(g.target));
        lowered.push_back(gz(g.target));
        break;
      case GateKind::toffoli:
      case GateKind::mcx:
        throw UnsupportedGateError(
            "homomorphic execution needs a Clifford+T sequence; decompose first");
      default:
        lowered.push_back(g);
    }
  }

  for (const Gate& g : lowered) {
    if (g.kind != GateKind::t) {
      apply_gate(res.state, g);
      const PauliKey prev = res.key;
      res.key = key_update(res.key, g);
      res.transcript.push_back(
          {g, false, false, -1, prev.a ^ res.key.a, prev.b ^ res.key.b});
      continue;
    }

    // T gadget on qubit i. The client supplies X^c Z^d T|+> and keeps (c, d);
    // the server entangles, measures, and applies the announced corrections.
    const std::uint32_t i = g.target;
    if (i >= res.state.num_qubits) {
      throw IndexOutOfRangeError("t gate target out of range");
    }
    const int c = static_cast<int>(rng() & 1);
    const int d = static_cast<int>(rng() & 1);
    std::complex<double> m0(kInvSqrt2, 0.0);
    std::complex<double> m1 = std::polar(kInvSqrt2, 0.25 * 3.14159265358979323846);
    if (d) m1 = -m1;
    if (c) std::swap(m0, m1);

    const std::uint32_t magic = res.state.num_qubits;
    res.state = append_qubit(res.state, m0, m1);
    apply_gate(res.state, gcnot(i, magic));
    const int e = measure_qubit(res.state, magic, rng);
    remove_top_qubit(res.state, e);
    if (e) apply_gate(res.state, gs(i));

    // Every gadget costs one client round-trip; the client's answer is to
    // apply S^dagger exactly when a_i ^ c = 1.
    const int ai = static_cast<int>((res.key.a >> i) & 1);
    const bool corrected = (ai ^ c) == 1;
    ++res.interactions;
    if (corrected) {
      apply_gate(res.state, gsdg(i));
      ++res.corrections;
    }
    // Verified identity: decryption key picks up b_i ^= d ^ (c & !(a_i ^ e)).
    const std::uint64_t flip =
        static_cast<std::uint64_t>(d ^ (c & (1 ^ ai ^ e)))
        << i;
    res.key.b ^= flip;
    ++res.magic_uses;
    res.transcript.push_back({g, true, corrected, e, 0, flip});
  }
  return res;
}

}  // namespace qdp
