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

#ifndef QDP_QOTP_HPP_
#define QDP_QOTP_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qdp/circuit.hpp"
#include "qdp/state.hpp"

namespace qdp {

// Quantum one-time pad key: qubit i is masked by X^{a_i} Z^{b_i}.
struct PauliKey {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint32_t num_qubits = 0;
};

PauliKey random_key(std::uint32_t num_qubits, std::mt19937_64& rng);

// Applies X^a Z^b (encrypt) or its inverse Z^b X^a (decrypt).
SparseState qotp_encrypt(const SparseState& s, const PauliKey& key);
SparseState qotp_decrypt(const SparseState& s, const PauliKey& key);

// Key transformation under a Clifford gate applied to the ciphertext, so that
// decrypting with the new key recovers the gate applied to the plaintext.
// Accepts x, z, s, sdg, h, cnot; everything else (t, tdg, toffoli, mcx) has no
// pure key update and throws UnknownGateError.
PauliKey key_update(const PauliKey& key, const Gate& g);

struct TranscriptEntry {
  Gate gate;                 // gate the server actually executed
  bool interaction = false;  // true exactly for T-gadget steps
  bool corrected = false;    // client answered the round with "apply S^dagger"
  int measured = -1;         // magic-qubit outcome, -1 if none
  std::uint64_t a_delta = 0;  // key bits this step toggled (audit trail)
  std::uint64_t b_delta = 0;
};

struct HomomorphicResult {
  SparseState state;  // ciphertext after the whole sequence
  PauliKey key;       // final key
  std::vector<TranscriptEntry> transcript;
  std::uint64_t magic_uses = 0;    // magic states consumed (one per T)
  std::uint64_t interactions = 0;  // client round-trips; equals magic_uses
  std::uint64_t corrections = 0;   // rounds that applied S^dagger (~half)
};

// Executes a Clifford+T gate sequence on QOTP-encrypted data. Cliffords are
// applied directly with key updates. Each T on qubit i consumes one magic
// state X^c Z^d T|+>: the server entangles it with qubit i via CNOT, measures
// it (outcome e), applies S^e, and asks the client for the conditional
// correction (one interaction per gadget); the client requests S^dagger iff
// a_i ^ c = 1, and the key picks up b_i ^= d ^ (c & (1 ^ a_i ^ e)). tdg and
// sdg are lowered to [t, s, z] and [s, z]; toffoli/mcx must be decomposed
// first.
HomomorphicResult homomorphic_exec(const SparseState& cipher, const PauliKey& key,
                                   std::span<const Gate> gates,
                                   std::mt19937_64& rng);

}  // namespace qdp

#endif  // QDP_QOTP_HPP_
