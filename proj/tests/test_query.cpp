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

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "qdp/dataset.hpp"
#include "qdp/errors.hpp"
#include "qdp/query.hpp"
#include "qdp/rational.hpp"
#include "qdp/rng.hpp"

namespace {

qdp::Schema two_attr() {
  return qdp::parse_schema(
      "index_prefix_bits = 0\n"
      "attribute = a:3\n"
      "attribute = b:2\n");
}

// Reference evaluator working from raw attribute codes.
bool oracle_pred(std::uint64_t code, qdp::PredOp op, std::uint64_t v) {
  switch (op) {
    case qdp::PredOp::eq: return code == v;
    case qdp::PredOp::neq: return code != v;
    case qdp::PredOp::leq: return code <= v;
    case qdp::PredOp::geq: return code >= v;
  }
  std::abort();
}

}  // namespace

TEST_CASE("single predicates match the oracle over every payload") {
  const auto s = two_attr();
  for (auto op : {qdp::PredOp::eq, qdp::PredOp::neq, qdp::PredOp::leq,
                  qdp::PredOp::geq}) {
    for (std::uint64_t v = 0; v < 8; ++v) {
      const auto q = qdp::make_query(s, qdp::make_pred(s, "a", op, v));
      for (std::uint64_t row = 0; row < 32; ++row) {
        const std::uint64_t a_code = row >> 2;
        CHECK(qdp::eval_row(q, row) == oracle_pred(a_code, op, v));
      }
    }
  }
}

TEST_CASE("parsed boolean combinations match a hand oracle") {
  const auto s = two_attr();
  const auto q = qdp::parse_query("(a <= 011 OR a == 110) AND b != 01", s);
  for (std::uint64_t row = 0; row < 32; ++row) {
    const std::uint64_t a = row >> 2, b = row & 3;
    const bool want = (a <= 3 || a == 6) && b != 1;
    CHECK(qdp::eval_row(q, row) == want);
  }
}

TEST_CASE("AND and OR chains flatten into one node") {
  const auto s = two_attr();
  const auto q = qdp::parse_query("a == 000 AND a != 001 AND b == 00", s);
  CHECK(q.root.kind == qdp::QueryNode::Kind::conj);
  CHECK(q.root.children.size() == 3);
  const auto r = qdp::parse_query("a == 000 OR a == 001 OR a == 010 OR a == 011", s);
  CHECK(r.root.kind == qdp::QueryNode::Kind::disj);
  CHECK(r.root.children.size() == 4);
}

TEST_CASE("bare labels resolve to equality on the declaring attribute") {
  const auto s = qdp::parse_schema(
      "index_prefix_bits = 0\n"
      "attribute = age:1:Child=0,Adult=1\n"
      "attribute = job:1:Teacher=0,Student=1\n");
  const auto q = qdp::parse_query("Adult AND Teacher", s);
  CHECK(qdp::eval_row(q, 0b10));
  CHECK(!qdp::eval_row(q, 0b11));
  const auto r = qdp::parse_query("age == Adult", s);
  CHECK(qdp::eval_row(r, 0b10));
}

TEST_CASE("operator precedence: AND binds tighter than OR") {
  const auto s = two_attr();
  const auto q = qdp::parse_query("a == 000 OR a == 001 AND b == 11", s);
  // reads as: a==000 OR (a==001 AND b==11)
  CHECK(qdp::eval_row(q, 0b00000));
  CHECK(qdp::eval_row(q, 0b00111));
  CHECK(!qdp::eval_row(q, 0b00100));
}

TEST_CASE("parser rejects malformed queries") {
  const auto s = two_attr();
  CHECK_THROWS_AS(qdp::parse_query("a = 000", s), qdp::QuerySyntaxError);
  CHECK_THROWS_AS(qdp::parse_query("a == 000 AND", s), qdp::QuerySyntaxError);
  CHECK_THROWS_AS(qdp::parse_query("(a == 000", s), qdp::QuerySyntaxError);
  CHECK_THROWS_AS(qdp::parse_query("a == 000 b == 00", s), qdp::QuerySyntaxError);
  CHECK_THROWS_AS(qdp::parse_query("", s), qdp::QuerySyntaxError);
  CHECK_THROWS_AS(qdp::parse_query("c == 000", s), qdp::UnknownAttributeError);
  CHECK_THROWS_AS(qdp::parse_query("a == 0000", s), qdp::WidthOverflowError);
  CHECK_THROWS_AS(qdp::parse_query("a == Potato", s), qdp::UnknownValueError);
  CHECK_THROWS_AS(qdp::parse_query("a AND b", s), qdp::UnknownValueError);
}

TEST_CASE("eval_dataset returns the exact rational count") {
  const auto s = two_attr();
  const auto d = qdp::dataset_from_codes(
      s, {{0, 0}, {1, 0}, {2, 1}, {3, 1}, {4, 2}, {5, 3}});
  const auto q = qdp::parse_query("a <= 011", s);
  const auto r = qdp::eval_dataset(q, d);
  CHECK(r == qdp::Rational(4, 6));
  CHECK(r == qdp::Rational(2, 3));  // reduced form compares equal
  CHECK(r.to_string() == "2/3");
  CHECK(r.to_double() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(qdp::global_sensitivity(d) == qdp::Rational(1, 6));
}

TEST_CASE("eval_dataset rejects a query built for another shape") {
  const auto s = two_attr();
  const auto q = qdp::parse_query("a == 000", s);
  auto other = qdp::parse_schema("index_prefix_bits = 0\nattribute = a:3\n");
  const auto d = qdp::dataset_from_codes(other, {{1}});
  CHECK_THROWS_AS((void)qdp::eval_dataset(q, d), qdp::DimensionMismatchError);
}

TEST_CASE("one-row substitution moves the count by at most 1/n") {
  auto rng = qdp::substream(11, "query-prop", 0);
  const auto s = two_attr();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<std::uint64_t>> codes;
    const std::uint64_t n = 2 + (rng() % 5);
    for (std::uint64_t i = 0; i < n; ++i) codes.push_back({rng() % 8, rng() % 4});
    const auto d = qdp::dataset_from_codes(s, codes);
    const auto q = qdp::parse_query(
        (trial % 2) ? "a >= 100 OR b == 01" : "a != 011 AND b <= 10", s);
    const auto base = qdp::eval_dataset(q, d);
    qdp::for_each_neighbor(d, [&](const qdp::Dataset& nb) {
      const auto moved = qdp::eval_dataset(q, nb);
      const long num = std::labs(base.num * moved.den - moved.num * base.den);
      // |base - moved| <= 1/n, exactly in integers
      CHECK(num * static_cast<long>(n) <= base.den * moved.den);
    });
  }
}

TEST_CASE("rational arithmetic reduces and validates") {
  CHECK(qdp::Rational(6, 8) == qdp::Rational(3, 4));
  CHECK(qdp::Rational(0, 5) == qdp::Rational(0, 1));
  CHECK(qdp::Rational(-2, 4).to_string() == "-1/2");
  CHECK(qdp::Rational(2, -4).to_string() == "-1/2");
  CHECK(qdp::Rational(1, 3) != qdp::Rational(1, 4));
  CHECK_THROWS_AS(qdp::Rational(1, 0), qdp::Error);
}
