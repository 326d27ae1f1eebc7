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

#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "qdp/dataset.hpp"
#include "qdp/errors.hpp"

namespace {

const char* kCensusSchema =
    "# demo schema\n"
    "index_prefix_bits = auto\n"
    "attribute = age:1:Child=0,Adult=1\n"
    "attribute = marital:2:Single=00,Married=01,Divorced=10\n"
    "attribute = prof:2:Teacher=00,Student=01\n";

qdp::Schema census() { return qdp::parse_schema(std::string(kCensusSchema)); }

}  // namespace

TEST_CASE("schema parses attributes in order with widths and labels") {
  const auto s = census();
  REQUIRE(s.attributes.size() == 3);
  CHECK(s.attributes[0].name == "age");
  CHECK(s.attributes[0].width == 1);
  CHECK(s.attributes[1].name == "marital");
  CHECK(s.attributes[1].width == 2);
  CHECK(s.payload_width() == 5);
  CHECK(!s.prefix_resolved());
  CHECK(*s.attributes[1].code_of("Divorced") == 2);
  CHECK(*s.attributes[1].label_of(1) == "Married");
  CHECK(!s.attributes[1].code_of("Widowed").has_value());
  CHECK(!s.attributes[1].label_of(3).has_value());
}

TEST_CASE("admissible codes: declared labels only, else full range") {
  const auto s = census();
  CHECK(s.attributes[1].admissible_codes() == std::vector<std::uint64_t>{0, 1, 2});
  const auto free_attr = qdp::parse_schema("attribute = v:3\n").attributes[0];
  CHECK(free_attr.admissible_codes().size() == 8);
}

TEST_CASE("attribute offsets and shifts follow the packed layout") {
  auto s = census();
  s.index_prefix_bits = 2;  // rows: [p1 p0 | age | m1 m0 | f1 f0]
  CHECK(s.row_width() == 7);
  CHECK(s.attribute_offset(0) == 0);
  CHECK(s.attribute_offset(1) == 1);
  CHECK(s.attribute_offset(2) == 3);
  CHECK(s.attribute_shift(0) == 4);
  CHECK(s.attribute_shift(1) == 2);
  CHECK(s.attribute_shift(2) == 0);
  CHECK(s.attribute_index("prof") == 2);
  CHECK_THROWS_AS((void)s.attribute_index("wage"), qdp::UnknownAttributeError);
}

TEST_CASE("resolve_label demands a unique owner") {
  const auto s = census();
  CHECK(s.resolve_label("Divorced") == std::pair<int, std::uint64_t>(1, 2));
  const auto dup = qdp::parse_schema(
      "attribute = a:1:Hot=0\n"
      "attribute = b:1:Hot=1\n");
  CHECK_THROWS_AS((void)dup.resolve_label("Hot"), qdp::UnknownValueError);
  CHECK_THROWS_AS((void)s.resolve_label("Widowed"), qdp::UnknownValueError);
}

TEST_CASE("schema rejects malformed input") {
  CHECK_THROWS_AS(qdp::parse_schema("attribute = a:0\n"), qdp::SchemaError);
  CHECK_THROWS_AS(qdp::parse_schema("attribute = a\n"), qdp::SchemaError);
  CHECK_THROWS_AS(qdp::parse_schema("attribute = a:1\nattribute = a:1\n"),
                  qdp::SchemaError);
  // label code wider than the attribute
  CHECK_THROWS_AS(qdp::parse_schema("attribute = a:1:Big=10\n"),
                  qdp::WidthOverflowError);
  // duplicate label and duplicate code within one attribute
  CHECK_THROWS_AS(qdp::parse_schema("attribute = a:2:X=00,X=01\n"), qdp::SchemaError);
  CHECK_THROWS_AS(qdp::parse_schema("attribute = a:2:X=00,Y=00\n"), qdp::SchemaError);
  CHECK_THROWS_AS(qdp::parse_schema("junk line\n"), qdp::SchemaError);
  CHECK_THROWS_AS(qdp::parse_schema("index_prefix_bits = -3\n"), qdp::SchemaError);
  // payload must leave room inside 63 bits
  CHECK_THROWS_AS(qdp::parse_schema("attribute = a:40\nattribute = b:30\n"),
                  qdp::SchemaError);
}

TEST_CASE("csv loader resolves labels and stamps auto prefix") {
  std::istringstream csv(
      "age,marital,prof\n"
      "Adult,Married,Teacher\n"
      "Child,Single,Student\n"
      "Adult,Divorced,Teacher\n");
  const auto d = qdp::load_dataset(csv, census());
  REQUIRE(d.size() == 3);
  CHECK(d.schema().index_prefix_bits == 2);  // ceil(log2 3)
  CHECK(d.row_width() == 7);
  // row 0: prefix 00, age=1, marital=01, prof=00
  CHECK(d.rows()[0] == 0b00'1'01'00);
  CHECK(d.rows()[1] == 0b01'0'00'01);
  CHECK(d.rows()[2] == 0b10'1'10'00);
  CHECK(d.payload(2) == 0b1'10'00);
  CHECK(d.attribute_code(2, 1) == 2);
  CHECK(d.row_bits(1) == "0100001");
}

TEST_CASE("csv loader accepts binary literals for label-free attributes") {
  auto s = qdp::parse_schema("index_prefix_bits = 0\nattribute = v:3\n");
  std::istringstream csv("v\n101\n010\n");
  const auto d = qdp::load_dataset(csv, s);
  CHECK(d.rows() == std::vector<std::uint64_t>{5, 2});
}

TEST_CASE("csv loader rejects bad headers, labels, and overflow") {
  auto s = census();
  {
    std::istringstream csv("age,prof,marital\nAdult,Teacher,Single\n");
    CHECK_THROWS_AS(qdp::load_dataset(csv, s), qdp::SchemaError);
  }
  {
    std::istringstream csv("age,marital,prof\nAdult,Widowed,Teacher\n");
    CHECK_THROWS_AS(qdp::load_dataset(csv, s), qdp::UnknownValueError);
  }
  {
    auto free3 = qdp::parse_schema("index_prefix_bits = 0\nattribute = v:2\n");
    std::istringstream csv("v\n101\n");
    CHECK_THROWS_AS(qdp::load_dataset(csv, free3), qdp::WidthOverflowError);
  }
  {
    std::istringstream empty("age,marital,prof\n");
    CHECK_THROWS_AS(qdp::load_dataset(empty, s), qdp::EmptyDatasetError);
  }
}

TEST_CASE("fixed prefix must be wide enough for the row count") {
  auto s = qdp::parse_schema("index_prefix_bits = 1\nattribute = v:2\n");
  std::istringstream csv("v\n00\n01\n10\n");  // 3 rows need 2 prefix bits
  CHECK_THROWS_AS(qdp::load_dataset(csv, s), qdp::SchemaError);
}

TEST_CASE("dataset_from_codes packs codes and prefixes rows") {
  const auto d = qdp::dataset_from_codes(census(), {{1, 1, 0}, {0, 0, 1}});
  CHECK(d.size() == 2);
  CHECK(d.schema().index_prefix_bits == 1);
  CHECK(d.rows()[0] == 0b0'1'01'00);
  CHECK(d.rows()[1] == 0b1'0'00'01);
}

TEST_CASE("neighbor enumeration covers every one-row substitution once") {
  auto s = qdp::parse_schema(
      "index_prefix_bits = auto\n"
      "attribute = a:1\n"
      "attribute = b:1:Y=0\n");  // admissible payloads: a in {0,1}, b fixed 0
  const auto d = qdp::dataset_from_codes(s, {{0, 0}, {1, 0}, {1, 0}});
  const auto nbrs = qdp::neighbors(d);
  // V = 2 admissible payloads, n = 3 rows: n * (V - 1) = 3 neighbors.
  REQUIRE(nbrs.size() == 3);
  std::set<std::vector<std::uint64_t>> seen;
  for (const auto& nb : nbrs) {
    REQUIRE(nb.size() == d.size());
    int diff = 0;
    for (std::uint64_t i = 0; i < d.size(); ++i) {
      // prefix survives substitution
      CHECK(((nb.rows()[i] >> 3) == (d.rows()[i] >> 3)));
      if (nb.payload(i) != d.payload(i)) ++diff;
    }
    CHECK(diff == 1);
    CHECK(seen.insert(nb.rows()).second);
  }
}

TEST_CASE("duplicate payloads stay distinct as rows under the prefix") {
  auto s = qdp::parse_schema("index_prefix_bits = auto\nattribute = v:1\n");
  const auto d = qdp::dataset_from_codes(s, {{1}, {1}, {1}, {1}});
  std::set<std::uint64_t> rows(d.rows().begin(), d.rows().end());
  CHECK(rows.size() == 4);
}

TEST_CASE("dataset constructor validates rows against the schema") {
  auto s = qdp::parse_schema("index_prefix_bits = 0\nattribute = v:2\n");
  CHECK_THROWS_AS(qdp::Dataset(s, {}), qdp::EmptyDatasetError);
  CHECK_THROWS_AS(qdp::Dataset(s, {4}), qdp::WidthOverflowError);
  auto unresolved = census();
  CHECK_THROWS_AS(qdp::Dataset(unresolved, {0}), qdp::SchemaError);
}
