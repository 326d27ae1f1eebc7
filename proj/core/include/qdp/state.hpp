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

#ifndef QDP_STATE_HPP_
#define QDP_STATE_HPP_

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>

#include "qdp/circuit.hpp"
#include "qdp/dataset.hpp"
#include "qdp/query.hpp"
#include "qdp/rational.hpp"

namespace qdp {

// Sparse statevector: basis index -> amplitude, ordered so iteration (and
// therefore measurement sampling) is deterministic. A basis-encoded dataset
// has n nonzero entries out of 2^m, so maps beat dense vectors for every
// workload in this library.
struct SparseState {
  std::uint32_t num_qubits = 0;
  std::map<std::uint64_t, std::complex<double>> amps;

  double norm_sq() const;
};

// |phi_D> = (1/sqrt(n)) sum_i |x_i>. Requires distinct rows; with the index
// prefix enabled this holds by construction, otherwise duplicates are an
// error rather than a silent norm change.
SparseState basis_encode(const Dataset& d);

// Splits |phi_D> into the (unnormalized) components over satisfying and
// non-satisfying rows: |phi_D> = |good> + |bad>, <good|bad> = 0,
// alpha = <good|good> = eval_dataset(q, d) exactly, theta = arcsin(sqrt(alpha)).
struct GoodBadSplit {
  SparseState good;
  SparseState bad;
  Rational alpha;
  double theta = 0.0;
};
GoodBadSplit decompose(const Dataset& d, const PredicateQuery& q);

// Squared overlap kernel of two equal-shape datasets: (|rows(d1) & rows(d2)| / n)^2.
double kernel(const Dataset& d1, const Dataset& d2);

// Minimum kernel over one-row-substitution neighbors: (1 - 1/n)^2.
double min_adjacent_kernel(std::uint64_t n);

// Trace-distance bound sqrt(1 - min_adjacent_kernel(n)) = sqrt(2n-1)/n.
double trace_distance_bound(std::uint64_t n);

// Gate application. Permutation gates (x/cnot/toffoli/mcx) remap indices,
// phase gates (z/s/sdg/t/tdg) scale amplitudes, h splits entries. Amplitudes
// below 1e-14 after interference are dropped.
void apply_gate(SparseState& state, const Gate& g);
void apply_circuit(SparseState& state, std::span<const Gate> gates);

// Tensors ancillas (each |0> or |1>) above the existing qubits.
SparseState with_ancillas(const SparseState& s, std::span<const std::uint8_t> init);

// Prepares |phi_D> extended with the circuit's ancilla register.
SparseState encoded_input(const Dataset& d, const ReversibleCircuit& c);

double marginal_prob_one(const SparseState& s, std::uint32_t qubit);

// Measures one qubit in the computational basis; collapses and renormalizes.
int measure_qubit(SparseState& s, std::uint32_t qubit, std::mt19937_64& rng);

// Removes the top qubit, which must be in the definite basis state |bit>.
void remove_top_qubit(SparseState& s, int bit);

std::complex<double> inner_product(const SparseState& a, const SparseState& b);
double fidelity(const SparseState& a, const SparseState& b);

// One line per basis state: "bitstring re im", most significant qubit first.
std::string to_debug_string(const SparseState& s);

}  // namespace qdp

#endif  // QDP_STATE_HPP_
