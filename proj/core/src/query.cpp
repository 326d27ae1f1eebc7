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

#include "qdp/query.hpp"

#include <algorithm>
#include <cctype>

#include "qdp/errors.hpp"

namespace qdp {
namespace {

struct Token {
  enum class Kind { ident, op, lparen, rparen, and_kw, or_kw, end };
  Kind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Token::Kind::end, "", start};
      return;
    }
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      current_ = {Token::Kind::lparen, "(", start};
      return;
    }
    if (c == ')') {
      ++pos_;
      current_ = {Token::Kind::rparen, ")", start};
      return;
    }
    if (c == '=' || c == '!' || c == '<' || c == '>') {
      if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != '=')
        throw QuerySyntaxError("position " + std::to_string(start) +
                               ": expected one of ==, !=, <=, >=");
      const std::string op = std::string(text_.substr(pos_, 2));
      pos_ += 2;
      if (op == ">=" || op == "<=" || op == "==" || op == "!=") {
        current_ = {Token::Kind::op, op, start};
        return;
      }
      throw QuerySyntaxError("position " + std::to_string(start) + ": unknown operator '" +
                             op + "'");
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      const std::string word = std::string(text_.substr(pos_, end - pos_));
      pos_ = end;
      if (word == "AND") {
        current_ = {Token::Kind::and_kw, word, start};
      } else if (word == "OR") {
        current_ = {Token::Kind::or_kw, word, start};
      } else {
        current_ = {Token::Kind::ident, word, start};
      }
      return;
    }
    throw QuerySyntaxError("position " + std::to_string(start) + ": unexpected character '" +
                           std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Token::Kind::end, "", 0};
};

bool is_binary_literal(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

class Parser {
 public:
  Parser(std::string_view text, const Schema& schema) : lexer_(text), schema_(schema) {}

  QueryNode parse() {
    QueryNode node = expr();
    const Token& t = lexer_.peek();
    if (t.kind != Token::Kind::end)
      throw QuerySyntaxError("position " + std::to_string(t.pos) + ": trailing input '" +
                             t.text + "'");
    return node;
  }

 private:
  QueryNode expr() {
    std::vector<QueryNode> terms;
    terms.push_back(term());
    while (lexer_.peek().kind == Token::Kind::or_kw) {
      lexer_.take();
      terms.push_back(term());
    }
    if (terms.size() == 1) return std::move(terms.front());
    return make_disj(std::move(terms));
  }

  QueryNode term() {
    std::vector<QueryNode> factors;
    factors.push_back(factor());
    while (lexer_.peek().kind == Token::Kind::and_kw) {
      lexer_.take();
      factors.push_back(factor());
    }
    if (factors.size() == 1) return std::move(factors.front());
    return make_conj(std::move(factors));
  }

  QueryNode factor() {
    const Token t = lexer_.take();
    if (t.kind == Token::Kind::lparen) {
      QueryNode node = expr();
      const Token close = lexer_.take();
      if (close.kind != Token::Kind::rparen)
        throw QuerySyntaxError("position " + std::to_string(close.pos) + ": expected ')'");
      return node;
    }
    if (t.kind != Token::Kind::ident)
      throw QuerySyntaxError("position " + std::to_string(t.pos) +
                             ": expected predicate or '('");
    if (lexer_.peek().kind == Token::Kind::op) {
      const Token op = lexer_.take();
      const Token value = lexer_.take();
      if (value.kind != Token::Kind::ident)
        throw QuerySyntaxError("position " + std::to_string(value.pos) +
                               ": expected value after '" + op.text + "'");
      return pred_node(t, op, value);
    }
    // Bare label: equality on the attribute that declares it.
    const auto [attr_index, code] = schema_.resolve_label(t.text);
    return leaf(attr_index, PredOp::eq, code);
  }

  QueryNode pred_node(const Token& attr, const Token& op, const Token& value) {
    const int attr_index = schema_.attribute_index(attr.text);
    const AttributeDef& def = schema_.attributes[attr_index];
    PredOp pop;
    if (op.text == "==") {
      pop = PredOp::eq;
    } else if (op.text == "!=") {
      pop = PredOp::neq;
    } else if (op.text == "<=") {
      pop = PredOp::leq;
    } else {
      pop = PredOp::geq;
    }
    std::uint64_t code;
    if (auto c = def.code_of(value.text)) {
      code = *c;
    } else if (is_binary_literal(value.text)) {
      if (value.text.size() > static_cast<std::size_t>(def.width))
        throw WidthOverflowError("literal '" + value.text + "' is wider than the " +
                                 std::to_string(def.width) + "-bit attribute '" +
                                 def.name + "'");
      code = 0;
      for (char ch : value.text) code = (code << 1) | static_cast<std::uint64_t>(ch - '0');
    } else {
      throw UnknownValueError("value '" + value.text + "' is not declared for attribute '" +
                              def.name + "'");
    }
    return leaf(attr_index, pop, code);
  }

  QueryNode leaf(int attr_index, PredOp op, std::uint64_t code) {
    QueryNode node;
    node.kind = QueryNode::Kind::pred;
    node.attr_index = attr_index;
    node.op = op;
    node.value = code;
    node.shift = schema_.attribute_shift(attr_index);
    node.width = schema_.attributes[attr_index].width;
    return node;
  }

  Lexer lexer_;
  const Schema& schema_;
};

bool eval_node(const QueryNode& node, std::uint64_t row) {
  switch (node.kind) {
    case QueryNode::Kind::pred: {
      const std::uint64_t code =
          (row >> node.shift) & ((std::uint64_t{1} << node.width) - 1);
      switch (node.op) {
        case PredOp::eq:
          return code == node.value;
        case PredOp::neq:
          return code != node.value;
        case PredOp::leq:
          return code <= node.value;
        case PredOp::geq:
          return code >= node.value;
      }
      return false;
    }
    case QueryNode::Kind::conj:
      for (const QueryNode& c : node.children)
        if (!eval_node(c, row)) return false;
      return true;
    case QueryNode::Kind::disj:
      for (const QueryNode& c : node.children)
        if (eval_node(c, row)) return true;
      return false;
  }
  return false;
}

}  // namespace

PredicateQuery parse_query(std::string_view text, const Schema& schema) {
  if (!schema.prefix_resolved())
    throw SchemaError("cannot build a query against an unresolved schema");
  Parser parser(text, schema);
  PredicateQuery q;
  q.root = parser.parse();
  q.row_width = schema.row_width();
  q.text = std::string(text);
  return q;
}

QueryNode make_pred(const Schema& schema, std::string_view attr, PredOp op,
                    std::uint64_t value) {
  const int attr_index = schema.attribute_index(attr);
  const AttributeDef& def = schema.attributes[attr_index];
  if (value >= (std::uint64_t{1} << def.width))
    throw WidthOverflowError("value does not fit attribute '" + def.name + "'");
  QueryNode node;
  node.kind = QueryNode::Kind::pred;
  node.attr_index = attr_index;
  node.op = op;
  node.value = value;
  node.shift = schema.attribute_shift(attr_index);
  node.width = def.width;
  return node;
}

QueryNode make_pred_label(const Schema& schema, std::string_view attr, PredOp op,
                          std::string_view label) {
  const AttributeDef& def = schema.attribute(attr);
  const auto code = def.code_of(label);
  if (!code)
    throw UnknownValueError("label '" + std::string(label) +
                            "' is not declared for attribute '" + def.name + "'");
  return make_pred(schema, attr, op, *code);
}

QueryNode make_conj(std::vector<QueryNode> children) {
  if (children.empty()) throw Error("conjunction needs at least one child");
  QueryNode node;
  node.kind = QueryNode::Kind::conj;
  node.children = std::move(children);
  return node;
}

QueryNode make_disj(std::vector<QueryNode> children) {
  if (children.empty()) throw Error("disjunction needs at least one child");
  QueryNode node;
  node.kind = QueryNode::Kind::disj;
  node.children = std::move(children);
  return node;
}

PredicateQuery make_query(const Schema& schema, QueryNode root) {
  PredicateQuery q;
  q.root = std::move(root);
  q.row_width = schema.row_width();
  return q;
}

bool eval_row(const PredicateQuery& q, std::uint64_t row) {
  return eval_node(q.root, row);
}

Rational eval_dataset(const PredicateQuery& q, const Dataset& d) {
  if (q.row_width != d.row_width())
    throw DimensionMismatchError("query was built against a different row width");
  std::int64_t count = 0;
  for (std::uint64_t row : d.rows()) count += eval_row(q, row) ? 1 : 0;
  return Rational(count, static_cast<std::int64_t>(d.size()));
}

Rational global_sensitivity(const Dataset& d) {
  return Rational(1, static_cast<std::int64_t>(d.size()));
}

}  // namespace qdp
