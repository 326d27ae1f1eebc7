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

#ifndef QDP_CIRCUIT_HPP_
#define QDP_CIRCUIT_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "qdp/query.hpp"

namespace qdp {

enum class GateKind { x, z, s, sdg, t, tdg, h, cnot, toffoli, mcx };

struct Gate {
  GateKind kind;
  std::vector<std::uint32_t> controls;  // empty for single-qubit gates
  std::uint32_t target = 0;
};

Gate gx(std::uint32_t t);
Gate gz(std::uint32_t t);
Gate gs(std::uint32_t t);
Gate gsdg(std::uint32_t t);
Gate gt(std::uint32_t t);
Gate gtdg(std::uint32_t t);
Gate gh(std::uint32_t t);
Gate gcnot(std::uint32_t c, std::uint32_t t);
Gate gtoffoli(std::uint32_t c1, std::uint32_t c2, std::uint32_t t);
Gate gmcx(std::vector<std::uint32_t> controls, std::uint32_t t);

// A circuit over data qubits [0, data_qubits) plus ancillas appended above
// them; ancilla i is qubit data_qubits + i and starts in |ancilla_init[i]>.
// The compiler's output alphabet is {x, cnot, toffoli, mcx}; the Clifford+T
// decomposition uses {x, h, t, tdg, cnot}. Circuits restore the data register
// on every basis input; ancillas may be left dirty.
struct ReversibleCircuit {
  std::uint32_t data_qubits = 0;
  std::vector<std::uint8_t> ancilla_init;
  std::vector<Gate> gates;
  std::uint32_t output_qubit = 0;

  std::uint32_t qubit_count() const {
    return data_qubits + static_cast<std::uint32_t>(ancilla_init.size());
  }
};

// Compiles the predicate into a reversible circuit writing q(x) onto
// output_qubit for every computational-basis input |x>. Per-bit equality
// gadgets write x_i == a_i onto |1>-initialized ancillas via CNOTs; a
// multi-controlled X combines them (target seeded |1> for inequality).
// Comparisons chain most-significant-bit-first prefix equalities so the
// strictly-greater/less events at each bit are mutually exclusive and can be
// XOR-accumulated onto the output. Conjunctions combine child outputs with
// one multi-controlled X; disjunctions do the same through De Morgan (X on
// each child output, target seeded |1>). Gate count is O(total predicate
// width).
ReversibleCircuit compile_circuit(const PredicateQuery& q, const Schema& schema);

struct GateCost {
  std::size_t x = 0;
  std::size_t cnot = 0;
  std::size_t toffoli = 0;
  std::map<std::size_t, std::size_t> mcx_by_arity;  // arity -> count, arity >= 3
  std::size_t ancillas = 0;

  // Elementary gate count; valid once no mcx gates remain.
  std::size_t total_elementary() const { return x + cnot + toffoli; }
};

GateCost gate_cost(const ReversibleCircuit& c);

// Rewrites every k-control mcx (k >= 3) into k-1 Toffolis chained through
// k-2 fresh |0> ancillas. The chain ancillas hold conjunction prefixes and
// are left dirty, which is harmless for predicate evaluation: they are
// deterministic functions of the data register.
ReversibleCircuit lower_mcx(const ReversibleCircuit& c);

// Exact Clifford+T form: lowers mcx to Toffolis, then expands each Toffoli
// into the standard 7-T realization (2 H, 6 CNOT, 7 T/T-dagger, no global
// phase). X gates pass through.
ReversibleCircuit decompose_to_clifford_t(const ReversibleCircuit& c);

std::size_t t_count(const ReversibleCircuit& c);

}  // namespace qdp

#endif  // QDP_CIRCUIT_HPP_
