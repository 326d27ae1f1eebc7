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

#include "qdp/circuit.hpp"

#include <algorithm>

#include "qdp/errors.hpp"

namespace qdp {

Gate gx(std::uint32_t t) { return {GateKind::x, {}, t}; }
Gate gz(std::uint32_t t) { return {GateKind::z, {}, t}; }
Gate gs(std::uint32_t t) { return {GateKind::s, {}, t}; }
Gate gsdg(std::uint32_t t) { return {GateKind::sdg, {}, t}; }
Gate gt(std::uint32_t t) { return {GateKind::t, {}, t}; }
Gate gtdg(std::uint32_t t) { return {GateKind::tdg, {}, t}; }
Gate gh(std::uint32_t t) { return {GateKind::h, {}, t}; }
Gate gcnot(std::uint32_t c, std::uint32_t t) {
  if (c == t) throw IndexOutOfRangeError("cnot control equals target");
  return {GateKind::cnot, {c}, t};
}
Gate gtoffoli(std::uint32_t c1, std::uint32_t c2, std::uint32_t t) {
  if (c1 == c2 || c1 == t || c2 == t)
    throw IndexOutOfRangeError("toffoli qubits must be distinct");
  return {GateKind::toffoli, {c1, c2}, t};
}
Gate gmcx(std::vector<std::uint32_t> controls, std::uint32_t t) {
  if (controls.empty()) throw Error("mcx needs at least one control");
  for (std::size_t i = 0; i < controls.size(); ++i) {
    if (controls[i] == t) throw IndexOutOfRangeError("mcx control equals target");
    for (std::size_t j = i + 1; j < controls.size(); ++j)
      if (controls[i] == controls[j])
        throw IndexOutOfRangeError("mcx controls must be distinct");
  }
  switch (controls.size()) {
    case 1:
      return gcnot(controls[0], t);
    case 2:
      return gtoffoli(controls[0], controls[1], t);
    default:
      return {GateKind::mcx, std::move(controls), t};
  }
}

namespace {

// Builds predicate circuits. Qubit i is bit i of the row value, so attribute
// bit positions are derived from the leaf's shift/width; ancillas are
// allocated above the data register in traversal order.
class Builder {
 public:
  explicit Builder(std::uint32_t data_qubits) : circuit_{data_qubits, {}, {}, 0} {}

  std::uint32_t alloc(std::uint8_t init) {
    circuit_.ancilla_init.push_back(init);
    return circuit_.data_qubits +
           static_cast<std::uint32_t>(circuit_.ancilla_init.size()) - 1;
  }

  void emit(Gate g) { circuit_.gates.push_back(std::move(g)); }

  // Ancillas b_i = (x_i == a_i), one per attribute bit, most significant
  // first: |1> seed, CNOT from the data bit, X when the constant bit is 1.
  std::vector<std::uint32_t> equality_bits(const QueryNode& leaf) {
    std::vector<std::uint32_t> bits;
    bits.reserve(leaf.width);
    for (int i = 0; i < leaf.width; ++i) {
      const std::uint32_t data_bit =
          static_cast<std::uint32_t>(leaf.shift + leaf.width - 1 - i);
      const int a_i = static_cast<int>((leaf.value >> (leaf.width - 1 - i)) & 1);
      const std::uint32_t b = alloc(1);
      emit(gcnot(data_bit, b));
      if (a_i == 1) emit(gx(b));
      bits.push_back(b);
    }
    return bits;
  }

  std::uint32_t compile_eq(const QueryNode& leaf, bool negate) {
    const auto bits = equality_bits(leaf);
    const std::uint32_t out = alloc(negate ? 1 : 0);
    emit(gmcx(bits, out));
    return out;
  }

  // x >= a (or x <= a): walk bits most significant first. With e_i the
  // running prefix equality, the event "first difference at bit i favors x"
  // is e_{i-1} AND x_i AND (a_i == 0); the mirrored event favors a. The
  // events plus full equality are mutually exclusive, so each one is
  // XOR-accumulated onto the output with one (controlled) CNOT/Toffoli.
  std::uint32_t compile_cmp(const QueryNode& leaf, bool greater_equal) {
    const auto bits = equality_bits(leaf);
    const std::uint32_t out = alloc(0);
    std::uint32_t e_prev = bits[0];
    std::vector<std::uint32_t> prefix{bits[0]};
    for (int i = 1; i < leaf.width; ++i) {
      const std::uint32_t e_i = alloc(0);
      emit(gtoffoli(e_prev, bits[i], e_i));
      e_prev = e_i;
      prefix.push_back(e_i);
    }
    for (int i = 0; i < leaf.width; ++i) {
      const int a_i = static_cast<int>((leaf.value >> (leaf.width - 1 - i)) & 1);
      const bool want = greater_equal ? (a_i == 0) : (a_i == 1);
      if (!want) continue;
      const std::uint32_t data_bit =
          static_cast<std::uint32_t>(leaf.shift + leaf.width - 1 - i);
      // For x <= a the favoring value of x_i is 0; conjugate the control by X
      // so the data register is restored immediately.
      if (!greater_equal) emit(gx(data_bit));
      if (i == 0) {
        emit(gcnot(data_bit, out));
      } else {
        emit(gtoffoli(prefix[i - 1], data_bit, out));
      }
      if (!greater_equal) emit(gx(data_bit));
    }
    emit(gcnot(e_prev, out));  // x == a also satisfies the predicate
    return out;
  }

  std::uint32_t compile_node(const QueryNode& node) {
    switch (node.kind) {
      case QueryNode::Kind::pred:
        switch (node.op) {
          case PredOp::eq:
            return compile_eq(node, false);
          case PredOp::neq:
            return compile_eq(node, true);
          case PredOp::geq:
            return compile_cmp(node, true);
          case PredOp::leq:
            return compile_cmp(node, false);
        }
        throw Error("unreachable");
      case QueryNode::Kind::conj: {
        std::vector<std::uint32_t> outs;
        outs.reserve(node.children.size());
        for (const QueryNode& c : node.children) outs.push_back(compile_node(c));
        if (outs.size() == 1) return outs[0];
        const std::uint32_t out = alloc(0);
        emit(gmcx(outs, out));
        return out;
      }
      case QueryNode::Kind::disj: {
        std::vector<std::uint32_t> outs;
        outs.reserve(node.children.size());
        for (const QueryNode& c : node.children) outs.push_back(compile_node(c));
        if (outs.size() == 1) return outs[0];
        for (std::uint32_t o : outs) emit(gx(o));
        const std::uint32_t out = alloc(1);
        emit(gmcx(outs, out));
        return out;
      }
    }
    throw Error("unreachable");
  }

  ReversibleCircuit finish(std::uint32_t output) {
    circuit_.output_qubit = output;
    return std::move(circuit_);
  }

 private:
  ReversibleCircuit circuit_;
};

}  // namespace

ReversibleCircuit compile_circuit(const PredicateQuery& q, const Schema& schema) {
  if (schema.row_width() != q.row_width)
    throw DimensionMismatchError("query was built against a different row width");
  Builder builder(static_cast<std::uint32_t>(schema.row_width()));
  const std::uint32_t out = builder.compile_node(q.root);
  return builder.finish(out);
}

GateCost gate_cost(const ReversibleCircuit& c) {
  GateCost cost;
  cost.ancillas = c.ancilla_init.size();
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::x:
        ++cost.x;
        break;
      case GateKind::cnot:
        ++cost.cnot;
        break;
      case GateKind::toffoli:
        ++cost.toffoli;
        break;
      case GateKind::mcx:
        ++cost.mcx_by_arity[g.controls.size()];
        break;
      default:
        throw UnsupportedGateError("gate_cost expects a reversible-alphabet circuit");
    }
  }
  return cost;
}

ReversibleCircuit lower_mcx(const ReversibleCircuit& c) {
  ReversibleCircuit out;
  out.data_qubits = c.data_qubits;
  out.ancilla_init = c.ancilla_init;
  out.output_qubit = c.output_qubit;
  for (const Gate& g : c.gates) {
    if (g.kind != GateKind::mcx) {
      out.gates.push_back(g);
      continue;
    }
    const auto& ctrl = g.controls;
    if (ctrl.size() <= 2) {
      out.gates.push_back(gmcx(ctrl, g.target));
      continue;
    }
    out.ancilla_init.push_back(0);
    std::uint32_t chain =
        out.data_qubits + static_cast<std::uint32_t>(out.ancilla_init.size()) - 1;
    out.gates.push_back(gtoffoli(ctrl[0], ctrl[1], chain));
    for (std::size_t i = 2; i + 1 < ctrl.size(); ++i) {
      out.ancilla_init.push_back(0);
      const std::uint32_t next =
          out.data_qubits + static_cast<std::uint32_t>(out.ancilla_init.size()) - 1;
      out.gates.push_back(gtoffoli(chain, ctrl[i], next));
      chain = next;
    }
    out.gates.push_back(gtoffoli(chain, ctrl.back(), g.target));
  }
  return out;
}

namespace {

// Exact Toffoli realization over {H, T, Tdg, CNOT} (seven T-type gates).
void expand_toffoli(std::uint32_t c1, std::uint32_t c2, std::uint32_t t,
                    std::vector<Gate>& out) {
  out.push_back(gh(t));
  out.push_back(gcnot(c2, t));
  out.push_back(gtdg(t));
  out.push_back(gcnot(c1, t));
  out.push_back(gt(t));
  out.push_back(gcnot(c2, t));
  out.push_back(gtdg(t));
  out.push_back(gcnot(c1, t));
  out.push_back(gt(c2));
  out.push_back(gt(t));
  out.push_back(gh(t));
  out.push_back(gcnot(c1, c2));
  out.push_back(gt(c1));
  out.push_back(gtdg(c2));
  out.push_back(gcnot(c1, c2));
}

}  // namespace

ReversibleCircuit decompose_to_clifford_t(const ReversibleCircuit& c) {
  const ReversibleCircuit lowered = lower_mcx(c);
  ReversibleCircuit out;
  out.data_qubits = lowered.data_qubits;
  out.ancilla_init = lowered.ancilla_init;
  out.output_qubit = lowered.output_qubit;
  for (const Gate& g : lowered.gates) {
    switch (g.kind) {
      case GateKind::x:
      case GateKind::cnot:
        out.gates.push_back(g);
        break;
      case GateKind::toffoli:
        expand_toffoli(g.controls[0], g.controls[1], g.target, out.gates);
        break;
      default:
        throw UnsupportedGateError("decompose_to_clifford_t expects x/cnot/toffoli/mcx");
    }
  }
  return out;
}

std::size_t t_count(const ReversibleCircuit& c) {
  std::size_t n = 0;
  for (const Gate& g : c.gates)
    if (g.kind == GateKind::t || g.kind == GateKind::tdg) ++n;
  return n;
}

}  // namespace qdp
