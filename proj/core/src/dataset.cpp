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

#include "qdp/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "qdp/errors.hpp"

namespace qdp {
namespace {

constexpr int kMaxRowWidth = 63;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

bool is_binary_literal(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

std::uint64_t parse_binary(std::string_view s, int width, const std::string& attr) {
  if (static_cast<int>(s.size()) > kMaxRowWidth)
    throw WidthOverflowError("binary literal too long for attribute '" + attr + "'");
  std::uint64_t v = 0;
  for (char c : s) v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  if (width < 64 && v >= (std::uint64_t{1} << width))
    throw WidthOverflowError("value '" + std::string(s) + "' does not fit in " +
                             std::to_string(width) + " bits of attribute '" + attr + "'");
  return v;
}

int ceil_log2(std::uint64_t n) {
  int bits = 0;
  while ((std::uint64_t{1} << bits) < n) ++bits;
  return bits;
}

}  // namespace

std::optional<std::uint64_t> AttributeDef::code_of(std::string_view label) const {
  for (const auto& [l, c] : values)
    if (l == label) return c;
  return std::nullopt;
}

std::optional<std::string_view> AttributeDef::label_of(std::uint64_t code) const {
  for (const auto& [l, c] : values)
    if (c == code) return std::string_view(l);
  return std::nullopt;
}

std::vector<std::uint64_t> AttributeDef::admissible_codes() const {
  std::vector<std::uint64_t> out;
  if (values.empty()) {
    out.resize(std::uint64_t{1} << width);
    for (std::uint64_t c = 0; c < out.size(); ++c) out[c] = c;
  } else {
    for (const auto& [l, c] : values) out.push_back(c);
    std::sort(out.begin(), out.end());
  }
  return out;
}

int Schema::payload_width() const {
  int w = 0;
  for (const auto& a : attributes) w += a.width;
  return w;
}

int Schema::row_width() const {
  if (!prefix_resolved()) throw SchemaError("index prefix width is unresolved");
  return index_prefix_bits + payload_width();
}

int Schema::attribute_index(std::string_view name) const {
  for (std::size_t i = 0; i < attributes.size(); ++i)
    if (attributes[i].name == name) return static_cast<int>(i);
  throw UnknownAttributeError("unknown attribute '" + std::string(name) + "'");
}

const AttributeDef& Schema::attribute(std::string_view name) const {
  return attributes[attribute_index(name)];
}

int Schema::attribute_offset(int index) const {
  int off = 0;
  for (int i = 0; i < index; ++i) off += attributes[i].width;
  return off;
}

int Schema::attribute_shift(int index) const {
  const int off = attribute_offset(index);
  return payload_width() - off - attributes[index].width;
}

std::pair<int, std::uint64_t> Schema::resolve_label(std::string_view label) const {
  int found_attr = -1;
  std::uint64_t found_code = 0;
  for (std::size_t i = 0; i < attributes.size(); ++i) {
    if (auto c = attributes[i].code_of(label)) {
      if (found_attr >= 0)
        throw UnknownValueError("label '" + std::string(label) +
                                "' is declared by more than one attribute");
      found_attr = static_cast<int>(i);
      found_code = *c;
    }
  }
  if (found_attr < 0)
    throw UnknownValueError("label '" + std::string(label) + "' is not declared");
  return {found_attr, found_code};
}

Schema parse_schema(std::istream& in) {
  Schema schema;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw SchemaError("schema line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key == "index_prefix_bits") {
      if (value == "auto") {
        schema.index_prefix_bits = Schema::kAutoPrefix;
      } else {
        try {
          schema.index_prefix_bits = std::stoi(value);
        } catch (const std::exception&) {
          throw SchemaError("schema line " + std::to_string(lineno) +
                            ": bad index_prefix_bits '" + value + "'");
        }
        if (schema.index_prefix_bits < 0)
          throw SchemaError("index_prefix_bits must be non-negative or auto");
      }
    } else if (key == "attribute") {
      const auto parts = split(value, ':');
      if (parts.size() < 2 || parts.size() > 3)
        throw SchemaError("schema line " + std::to_string(lineno) +
                          ": expected attribute = name:width[:label=code,...]");
      AttributeDef attr;
      attr.name = parts[0];
      if (attr.name.empty())
        throw SchemaError("schema line " + std::to_string(lineno) + ": empty attribute name");
      for (const auto& a : schema.attributes)
        if (a.name == attr.name)
          throw SchemaError("duplicate attribute '" + attr.name + "'");
      try {
        attr.width = std::stoi(parts[1]);
      } catch (const std::exception&) {
        throw SchemaError("schema line " + std::to_string(lineno) + ": bad width '" +
                          parts[1] + "'");
      }
      if (attr.width < 1 || attr.width > kMaxRowWidth)
        throw SchemaError("attribute '" + attr.name + "' width out of range");
      if (parts.size() == 3) {
        for (const auto& pair : split(parts[2], ',')) {
          const auto peq = pair.find('=');
          if (peq == std::string::npos)
            throw SchemaError("schema line " + std::to_string(lineno) +
                              ": expected label=code in '" + pair + "'");
          const std::string label = trim(pair.substr(0, peq));
          const std::string code_text = trim(pair.substr(peq + 1));
          if (label.empty() || !is_binary_literal(code_text))
            throw SchemaError("schema line " + std::to_string(lineno) +
                              ": bad value declaration '" + pair + "'");
          const std::uint64_t code = parse_binary(code_text, attr.width, attr.name);
          if (attr.code_of(label))
            throw SchemaError("duplicate label '" + label + "' in attribute '" +
                              attr.name + "'");
          if (attr.label_of(code))
            throw SchemaError("duplicate code '" + code_text + "' in attribute '" +
                              attr.name + "'");
          attr.values.emplace_back(label, code);
        }
        if (attr.values.empty())
          throw SchemaError("attribute '" + attr.name + "' declares no values");
      }
      schema.attributes.push_back(std::move(attr));
    } else {
      throw SchemaError("schema line " + std::to_string(lineno) + ": unknown key '" +
                        key + "'");
    }
  }
  if (schema.attributes.empty()) throw SchemaError("schema declares no attributes");
  if (schema.payload_width() > kMaxRowWidth)
    throw SchemaError("total payload width exceeds " + std::to_string(kMaxRowWidth) +
                      " bits");
  return schema;
}

Schema parse_schema(const std::string& text) {
  std::istringstream in(text);
  return parse_schema(in);
}

Schema load_schema(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open schema file " + path.string());
  return parse_schema(in);
}

Dataset::Dataset(Schema schema, std::vector<std::uint64_t> rows)
    : schema_(std::move(schema)), rows_(std::move(rows)) {
  if (rows_.empty()) throw EmptyDatasetError("dataset has no rows");
  if (!schema_.prefix_resolved())
    throw SchemaError("dataset constructed with unresolved index prefix");
  const int width = schema_.row_width();
  if (width > kMaxRowWidth) throw SchemaError("row width exceeds 63 bits");
  if (schema_.index_prefix_bits > 0 &&
      rows_.size() > (std::uint64_t{1} << schema_.index_prefix_bits))
    throw SchemaError("index prefix too narrow for row count");
  const std::uint64_t limit = std::uint64_t{1} << width;
  for (std::uint64_t r : rows_)
    if (r >= limit) throw WidthOverflowError("row value exceeds row width");
}

std::uint64_t Dataset::payload(std::uint64_t row_index) const {
  const int pw = schema_.payload_width();
  return rows_.at(row_index) & ((std::uint64_t{1} << pw) - 1);
}

std::uint64_t Dataset::attribute_code(std::uint64_t row_index, int attr_index) const {
  const int shift = schema_.attribute_shift(attr_index);
  const int width = schema_.attributes[attr_index].width;
  return (rows_.at(row_index) >> shift) & ((std::uint64_t{1} << width) - 1);
}

std::string Dataset::row_bits(std::uint64_t row_index) const {
  const int width = row_width();
  std::string out(width, '0');
  const std::uint64_t row = rows_.at(row_index);
  for (int i = 0; i < width; ++i)
    if ((row >> (width - 1 - i)) & 1) out[i] = '1';
  return out;
}

namespace {

Dataset assemble(Schema schema, std::vector<std::uint64_t> payloads) {
  const std::uint64_t n = payloads.size();
  if (n == 0) throw EmptyDatasetError("dataset has no rows");
  if (!schema.prefix_resolved()) schema.index_prefix_bits = ceil_log2(n);
  if (schema.index_prefix_bits > 0 && n > (std::uint64_t{1} << schema.index_prefix_bits))
    throw SchemaError("index prefix too narrow for row count");
  const int pw = schema.payload_width();
  const bool stamp = schema.index_prefix_bits > 0;
  std::vector<std::uint64_t> rows(n);
  for (std::uint64_t i = 0; i < n; ++i)
    rows[i] = stamp ? (i << pw) | payloads[i] : payloads[i];
  return Dataset(std::move(schema), std::move(rows));
}

}  // namespace

Dataset load_dataset(std::istream& in, Schema schema) {
  std::string line;
  if (!std::getline(in, line)) throw EmptyDatasetError("empty CSV");
  const auto header = split(line, ',');
  if (header.size() != schema.attributes.size())
    throw SchemaError("CSV header has " + std::to_string(header.size()) +
                      " columns, schema declares " +
                      std::to_string(schema.attributes.size()));
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] != schema.attributes[i].name)
      throw SchemaError("CSV column '" + header[i] + "' does not match attribute '" +
                        schema.attributes[i].name + "'");

  std::vector<std::uint64_t> payloads;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != schema.attributes.size())
      throw SchemaError("CSV line " + std::to_string(lineno) + " has " +
                        std::to_string(cells.size()) + " cells");
    std::uint64_t payload = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const AttributeDef& attr = schema.attributes[i];
      std::uint64_t code;
      if (!attr.values.empty()) {
        const auto c = attr.code_of(cells[i]);
        if (!c)
          throw UnknownValueError("CSV line " + std::to_string(lineno) + ": value '" +
                                  cells[i] + "' is not declared for attribute '" +
                                  attr.name + "'");
        code = *c;
      } else {
        if (!is_binary_literal(cells[i]))
          throw UnknownValueError("CSV line " + std::to_string(lineno) + ": cell '" +
                                  cells[i] + "' is not a binary literal for attribute '" +
                                  attr.name + "'");
        code = parse_binary(cells[i], attr.width, attr.name);
      }
      payload = (payload << attr.width) | code;
    }
    payloads.push_back(payload);
  }
  if (payloads.empty()) throw EmptyDatasetError("CSV contains no data rows");
  return assemble(std::move(schema), std::move(payloads));
}

Dataset load_dataset(const std::filesystem::path& csv_path, Schema schema) {
  std::ifstream in(csv_path);
  if (!in) throw Error("cannot open dataset file " + csv_path.string());
  return load_dataset(in, std::move(schema));
}

Dataset dataset_from_codes(Schema schema,
                           const std::vector<std::vector<std::uint64_t>>& code_rows) {
  std::vector<std::uint64_t> payloads;
  payloads.reserve(code_rows.size());
  for (const auto& codes : code_rows) {
    if (codes.size() != schema.attributes.size())
      throw SchemaError("code row arity does not match schema");
    std::uint64_t payload = 0;
    for (std::size_t i = 0; i < codes.size(); ++i) {
      const AttributeDef& attr = schema.attributes[i];
      if (codes[i] >= (std::uint64_t{1} << attr.width))
        throw WidthOverflowError("code does not fit attribute '" + attr.name + "'");
      payload = (payload << attr.width) | codes[i];
    }
    payloads.push_back(payload);
  }
  return assemble(std::move(schema), std::move(payloads));
}

void for_each_neighbor(const Dataset& d,
                       const std::function<void(const Dataset&)>& fn) {
  const Schema& schema = d.schema();
  // Admissible payloads: the product of each attribute's admissible codes.
  std::vector<std::uint64_t> payloads{0};
  for (const auto& attr : schema.attributes) {
    const auto codes = attr.admissible_codes();
    std::vector<std::uint64_t> next;
    next.reserve(payloads.size() * codes.size());
    for (std::uint64_t p : payloads)
      for (std::uint64_t c : codes) next.push_back((p << attr.width) | c);
    payloads = std::move(next);
  }
  const int pw = schema.payload_width();
  const std::uint64_t payload_mask = (std::uint64_t{1} << pw) - 1;
  for (std::uint64_t i = 0; i < d.size(); ++i) {
    const std::uint64_t current = d.rows()[i] & payload_mask;
    const std::uint64_t prefix = d.rows()[i] & ~payload_mask;
    for (std::uint64_t p : payloads) {
      if (p == current) continue;
      std::vector<std::uint64_t> rows = d.rows();
      rows[i] = prefix | p;
      fn(Dataset(schema, std::move(rows)));
    }
  }
}

std::vector<Dataset> neighbors(const Dataset& d) {
  std::vector<Dataset> out;
  for_each_neighbor(d, [&out](const Dataset& nb) { out.push_back(nb); });
  return out;
}

}  // namespace qdp
