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

#ifndef QDP_DATASET_HPP_
#define QDP_DATASET_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qdp {

// One fixed-width attribute. `values` maps declared labels to codes in
// declaration order; an attribute without labels admits every code in
// [0, 2^width).
struct AttributeDef {
  std::string name;
  int width = 0;
  std::vector<std::pair<std::string, std::uint64_t>> values;

  std::optional<std::uint64_t> code_of(std::string_view label) const;
  std::optional<std::string_view> label_of(std::uint64_t code) const;
  // Every admissible code for this attribute, ascending.
  std::vector<std::uint64_t> admissible_codes() const;
};

// Fixed schema over m-bit rows. Row layout, most significant bit first:
// [index prefix | attribute 0 | attribute 1 | ...]. Rows are stored as
// integers, so "qubit i" in circuits means bit i of the row value (the
// rightmost character of the printed bitstring is qubit 0).
struct Schema {
  static constexpr int kAutoPrefix = -1;

  std::vector<AttributeDef> attributes;
  // Number of index-prefix bits; kAutoPrefix resolves to ceil(log2 n) when a
  // dataset is loaded. Prefixing keeps duplicate records distinct so the
  // encoded state norm never degrades; 0 disables it.
  int index_prefix_bits = kAutoPrefix;

  int payload_width() const;
  bool prefix_resolved() const { return index_prefix_bits >= 0; }
  int row_width() const;  // requires a resolved prefix

  int attribute_index(std::string_view name) const;  // UnknownAttributeError
  const AttributeDef& attribute(std::string_view name) const;

  // Bit offset (from the most significant end of the payload) of attribute i.
  int attribute_offset(int index) const;
  // Right-shift that brings attribute i's code to the low bits of a full row.
  int attribute_shift(int index) const;  // requires a resolved prefix

  // Resolves a bare value label to (attribute index, code). The label must be
  // declared by exactly one attribute.
  std::pair<int, std::uint64_t> resolve_label(std::string_view label) const;
};

// Parses a flat key/value schema document. Keys:
//   index_prefix_bits = auto | <non-negative integer>   (default auto)
//   attribute = <name>:<width>[:<label>=<bincode>,...]  (repeated, ordered)
// '#' starts a comment; blank lines are ignored.
Schema parse_schema(std::istream& in);
Schema parse_schema(const std::string& text);
Schema load_schema(const std::filesystem::path& path);

class Dataset {
 public:
  Dataset(Schema schema, std::vector<std::uint64_t> rows);

  const Schema& schema() const { return schema_; }
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  std::uint64_t size() const { return rows_.size(); }
  int row_width() const { return schema_.row_width(); }

  std::uint64_t payload(std::uint64_t row_index) const;
  std::uint64_t attribute_code(std::uint64_t row_index, int attr_index) const;
  std::string row_bits(std::uint64_t row_index) const;

 private:
  Schema schema_;
  std::vector<std::uint64_t> rows_;
};

// Loads a CSV whose header names the schema attributes in order. Cells are
// declared labels, or binary literals for label-free attributes. Resolves an
// auto prefix to ceil(log2 n) and stamps row i with prefix i.
Dataset load_dataset(const std::filesystem::path& csv_path, Schema schema);
Dataset load_dataset(std::istream& in, Schema schema);

// Builds a dataset from per-row attribute codes, applying the index prefix.
Dataset dataset_from_codes(Schema schema,
                           const std::vector<std::vector<std::uint64_t>>& code_rows);

// Every dataset reachable by substituting exactly one row's payload with a
// different admissible payload. Fixed-n neighbors: |result| = n * (V - 1)
// where V is the number of admissible payloads.
std::vector<Dataset> neighbors(const Dataset& d);

// Calls fn(neighbor) for each neighbor without materializing the list.
void for_each_neighbor(const Dataset& d,
                       const std::function<void(const Dataset&)>& fn);

}  // namespace qdp

#endif  // QDP_DATASET_HPP_
