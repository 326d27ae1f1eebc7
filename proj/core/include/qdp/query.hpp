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

#ifndef QDP_QUERY_HPP_
#define QDP_QUERY_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qdp/dataset.hpp"
#include "qdp/rational.hpp"

namespace qdp {

enum class PredOp { eq, neq, leq, geq };

// Predicate query AST. Leaves compare one attribute against a constant;
// internal nodes are conjunctions/disjunctions with >= 1 children (a single
// child is equivalent to the child itself).
struct QueryNode {
  enum class Kind { pred, conj, disj };
  Kind kind = Kind::pred;

  // Leaf payload. `shift`/`width` are frozen from the schema at build time so
  // evaluation needs only the row value.
  int attr_index = -1;
  PredOp op = PredOp::eq;
  std::uint64_t value = 0;
  int shift = 0;
  int width = 0;

  std::vector<QueryNode> children;
};

struct PredicateQuery {
  QueryNode root;
  int row_width = 0;  // width of the rows this query was built against
  std::string text;   // original source, if parsed
};

// Recursive-descent parser for
//   expr   := term ('OR' term)*
//   term   := factor ('AND' factor)*
//   factor := '(' expr ')' | pred
//   pred   := attr op value | label
// with op in {==, !=, <=, >=}. Values are declared labels or binary literals;
// a bare label resolves to equality on the attribute declaring it. AND/OR
// chains flatten into one node, so 'a AND b AND c' compiles to a single
// three-way conjunction. The schema's index prefix must be resolved.
PredicateQuery parse_query(std::string_view text, const Schema& schema);

// Programmatic constructors used by tests and tools.
QueryNode make_pred(const Schema& schema, std::string_view attr, PredOp op,
                    std::uint64_t value);
QueryNode make_pred_label(const Schema& schema, std::string_view attr, PredOp op,
                          std::string_view label);
QueryNode make_conj(std::vector<QueryNode> children);
QueryNode make_disj(std::vector<QueryNode> children);
PredicateQuery make_query(const Schema& schema, QueryNode root);

// Evaluates the query on one row (full row value including index prefix).
bool eval_row(const PredicateQuery& q, std::uint64_t row);

// Exact query average q(D) = (1/n) * sum_i q(x_i).
Rational eval_dataset(const PredicateQuery& q, const Dataset& d);

// Global sensitivity of a normalized counting query under one-row
// substitution: exactly 1/n.
Rational global_sensitivity(const Dataset& d);

}  // namespace qdp

#endif  // QDP_QUERY_HPP_
