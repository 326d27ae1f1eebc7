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

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "dense_oracle.hpp"
#include "doctest.h"
#include "qdp/dataset.hpp"
#include "qdp/errors.hpp"
#include "qdp/query.hpp"
#include "qdp/rng.hpp"
#include "qdp/state.hpp"

namespace {

qdp::Dataset demo_dataset() {
  auto s = qdp::parse_schema(
      "index_prefix_bits = auto\n"
      "attribute = a:2\n"
      "attribute = b:1\n");
  return qdp::dataset_from_codes(s, {{0, 1}, {1, 0}, {2, 1}, {3, 1}, {1, 1}});
}

}  // namespace

TEST_CASE("basis encoding puts amplitude 1/sqrt(n) on each row") {
  const auto d = demo_dataset();
  const auto st = qdp::basis_encode(d);
  CHECK(st.num_qubits == 6);  // 3 prefix bits + 3 payload bits
  REQUIRE(st.amps.size() == 5);
  for (std::uint64_t i = 0; i < d.size(); ++i) {
    const auto it = st.amps.find(d.rows()[i]);
    REQUIRE(it != st.amps.end());
    CHECK(it->second.real() == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-15));
    CHECK(it->second.imag() == 0.0);
  }
  CHECK(st.norm_sq() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("basis encoding rejects duplicate rows") {
  auto s = qdp::parse_schema("index_prefix_bits = 0\nattribute = v:2\n");
  const qdp::Dataset d(s, {2, 2});
  CHECK_THROWS_AS((void)qdp::basis_encode(d), qdp::DuplicateRowsError);
}

TEST_CASE("decompose splits the encoded state exactly along the query") {
  const auto d = demo_dataset();
  const auto q = qdp::parse_query("a <= 01 AND b == 1", d.schema());
  const auto split = qdp::decompose(d, q);
  CHECK(split.alpha == qdp::eval_dataset(q, d));
  CHECK(split.alpha == qdp::Rational(2, 5));
  CHECK(split.theta == doctest::Approx(std::asin(std::sqrt(0.4))).epsilon(1e-15));
  CHECK(split.good.norm_sq() + split.bad.norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(split.good.norm_sq() == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(std::abs(qdp::inner_product(split.good, split.bad)) == 0.0);
  for (const auto& [idx, amp] : split.good.amps) CHECK(qdp::eval_row(q, idx));
  for (const auto& [idx, amp] : split.bad.amps) CHECK(!qdp::eval_row(q, idx));
}

TEST_CASE("kernel counts shared rows and is one only for identical sets") {
  auto s = qdp::parse_schema("index_prefix_bits = 0\nattribute = v:3\n");
  const qdp::Dataset d1(s, {0, 1, 2, 3});
  const qdp::Dataset d2(s, {0, 1, 2, 7});
  const qdp::Dataset d3(s, {4, 5, 6, 7});
  CHECK(qdp::kernel(d1, d1) == doctest::Approx(1.0));
  CHECK(qdp::kernel(d1, d2) == doctest::Approx(9.0 / 16.0).epsilon(1e-15));
  CHECK(qdp::kernel(d2, d1) == doctest::Approx(9.0 / 16.0).epsilon(1e-15));
  CHECK(qdp::kernel(d1, d3) == 0.0);
  auto other = qdp::parse_schema("index_prefix_bits = 0\nattribute = v:4\n");
  CHECK_THROWS_AS((void)qdp::kernel(d1, qdp::Dataset(other, {0, 1, 2, 3})),
                  qdp::DimensionMismatchError);
  CHECK_THROWS_AS((void)qdp::kernel(d1, qdp::Dataset(s, {0, 1, 2})),
                  qdp::DimensionMismatchError);
}

TEST_CASE("neighbor kernels never drop below the adjacent minimum") {
  auto s = qdp::parse_schema("index_prefix_bits = auto\nattribute = v:2\n");
  const auto d = qdp::dataset_from_codes(s, {{0}, {1}, {2}, {3}, {1}});
  const double floor = qdp::min_adjacent_kernel(d.size());
  CHECK(floor == doctest::Approx(0.64).epsilon(1e-15));  // (1 - 1/5)^2
  double seen_min = 1.0;
  qdp::for_each_neighbor(d, [&](const qdp::Dataset& nb) {
    const double k = qdp::kernel(d, nb);
    CHECK(k >= floor - 1e-15);
    seen_min = std::min(seen_min, k);
  });
  CHECK(seen_min == doctest::Approx(floor).epsilon(1e-15));
}

TEST_CASE("trace distance bound matches both closed forms") {
  for (std::uint64_t n : {1ull, 2ull, 5ull, 1000ull, 1000000ull}) {
    const double b = qdp::trace_distance_bound(n);
    const double nn = static_cast<double>(n);
    CHECK(b == doctest::Approx(std::sqrt(2.0 * nn - 1.0) / nn).epsilon(1e-14));
    // the subtraction in this form cancels, so compare more loosely
    CHECK(b == doctest::Approx(std::sqrt(1.0 - qdp::min_adjacent_kernel(n))).epsilon(1e-9));
  }
}

TEST_CASE("sparse gate application matches the dense oracle") {
  auto rng = qdp::substream(3, "state-oracle", 0);
  const std::vector<qdp::Gate> gates = {
      qdp::gx(0), qdp::gx(2), qdp::gz(1), qdp::gs(0), qdp::gsdg(2),
      qdp::gt(1), qdp::gtdg(0), qdp::gh(0), qdp::gh(2),
      qdp::gcnot(0, 2), qdp::gcnot(2, 0), qdp::gtoffoli(0, 1, 2),
      qdp::gtoffoli(2, 0, 1), qdp::gmcx({0, 1, 2}, 3)};
  for (const auto& g : gates) {
    const int nq = 4;
    auto st = qdp_test::random_state(nq, rng);
    const Eigen::VectorXcd want = qdp_test::gate_matrix(g, nq) * qdp_test::to_vector(st);
    qdp::apply_gate(st, g);
    const Eigen::VectorXcd got = qdp_test::to_vector(st);
    CHECK((got - want).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("hadamard cancellation prunes dead amplitudes") {
  qdp::SparseState st;
  st.num_qubits = 1;
  const double is2 = 1.0 / std::sqrt(2.0);
  st.amps[0] = is2;
  st.amps[1] = is2;
  qdp::apply_gate(st, qdp::gh(0));
  REQUIRE(st.amps.size() == 1);
  CHECK(st.amps.begin()->first == 0);
  CHECK(st.amps.begin()->second.real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("gate application validates qubit indices") {
  qdp::SparseState st;
  st.num_qubits = 2;
  st.amps[0] = 1.0;
  CHECK_THROWS_AS(qdp::apply_gate(st, qdp::gx(2)), qdp::IndexOutOfRangeError);
  CHECK_THROWS_AS(qdp::apply_gate(st, qdp::gcnot(0, 3)), qdp::IndexOutOfRangeError);
}

TEST_CASE("ancilla extension and encoded inputs lay out registers as documented") {
  const auto d = demo_dataset();
  const auto q = qdp::parse_query("b == 1", d.schema());
  const auto c = qdp::compile_circuit(q, d.schema());
  const auto st = qdp::encoded_input(d, c);
  CHECK(st.num_qubits == c.qubit_count());
  // every amplitude sits on a row value plus the ancilla seed pattern
  std::uint64_t seed_bits = 0;
  for (std::size_t i = 0; i < c.ancilla_init.size(); ++i) {
    if (c.ancilla_init[i]) seed_bits |= std::uint64_t{1} << (c.data_qubits + i);
  }
  for (const auto& [idx, amp] : st.amps) {
    CHECK(((idx >> c.data_qubits) << c.data_qubits) == seed_bits);
  }
}

TEST_CASE("marginal probability and measurement agree with the evaluator") {
  const auto d = demo_dataset();
  const auto q = qdp::parse_query("a >= 10", d.schema());
  const auto c = qdp::compile_circuit(q, d.schema());
  auto st = qdp::encoded_input(d, c);
  qdp::apply_circuit(st, c.gates);
  const double p1 = qdp::marginal_prob_one(st, c.output_qubit);
  CHECK(p1 == doctest::Approx(qdp::eval_dataset(q, d).to_double()).epsilon(1e-13));

  // measuring the output qubit collapses to a renormalized state
  auto rng = qdp::substream(4, "measure", 0);
  int ones = 0;
  const int trials = 4000;
  for (int i = 0; i < trials; ++i) {
    auto copy = st;
    const int bit = qdp::measure_qubit(copy, c.output_qubit, rng);
    ones += bit;
    CHECK(copy.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
    for (const auto& [idx, amp] : copy.amps) {
      CHECK(((idx >> c.output_qubit) & 1) == static_cast<std::uint64_t>(bit));
    }
  }
  // 4 sigma around p1 = 2/5
  const double sigma = std::sqrt(p1 * (1 - p1) / trials);
  CHECK(std::abs(static_cast<double>(ones) / trials - p1) < 4 * sigma);
}

TEST_CASE("remove_top_qubit undoes a definite ancilla") {
  const auto d = demo_dataset();
  auto st = qdp::basis_encode(d);
  const std::vector<std::uint8_t> init = {1};
  auto ext = qdp::with_ancillas(st, init);
  CHECK(ext.num_qubits == st.num_qubits + 1);
  qdp::remove_top_qubit(ext, 1);
  CHECK(qdp::fidelity(ext, st) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("inner product is conjugate symmetric and fidelity is normalized") {
  auto rng = qdp::substream(9, "ip", 0);
  const auto a = qdp_test::random_state(3, rng);
  const auto b = qdp_test::random_state(3, rng);
  const auto ab = qdp::inner_product(a, b);
  const auto ba = qdp::inner_product(b, a);
  CHECK(ab.real() == doctest::Approx(ba.real()).epsilon(1e-14));
  CHECK(ab.imag() == doctest::Approx(-ba.imag()).epsilon(1e-14));
  CHECK(qdp::fidelity(a, a) == doctest::Approx(1.0).epsilon(1e-13));
  const double f = qdp::fidelity(a, b);
  CHECK(f >= 0.0);
  CHECK(f <= 1.0);
}

TEST_CASE("debug rendering is deterministic and msb-first") {
  qdp::SparseState st;
  st.num_qubits = 3;
  st.amps[0b101] = {0.5, -0.25};
  st.amps[0b010] = {0.75, 0.0};
  CHECK(qdp::to_debug_string(st) ==
        "010 0.75 0\n"
        "101 0.5 -0.25\n");
}
