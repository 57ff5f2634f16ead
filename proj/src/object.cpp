// Copyright 2026 The sccckit Authors
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

#include "sccckit/object.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <vector>

#include "sccckit/errors.hpp"

namespace sccckit {

struct ObjectExpr::Node {
  Kind kind = Kind::Unit;
  std::string name;
  std::size_t dim = 0;
  std::vector<ObjectExpr> children;
};

ObjectExpr::ObjectExpr() {
  static const auto unit_node = std::make_shared<const Node>();
  node_ = unit_node;
}

ObjectExpr::ObjectExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

ObjectExpr ObjectExpr::unit() { return ObjectExpr(); }

ObjectExpr ObjectExpr::zero() {
  static const auto node = [] {
    Node n;
    n.kind = Kind::Zero;
    return std::make_shared<const Node>(std::move(n));
  }();
  return ObjectExpr(node);
}

ObjectExpr ObjectExpr::gen(std::string name, std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("generator dimension must be positive");
  if (name.empty()) throw std::invalid_argument("generator name must be non-empty");
  Node n;
  n.kind = Kind::Gen;
  n.name = std::move(name);
  n.dim = dim;
  return ObjectExpr(std::make_shared<const Node>(std::move(n)));
}

ObjectExpr ObjectExpr::dual(ObjectExpr a) {
  Node n;
  n.kind = Kind::Dual;
  n.children.push_back(std::move(a));
  return ObjectExpr(std::make_shared<const Node>(std::move(n)));
}

ObjectExpr ObjectExpr::tensor(ObjectExpr a, ObjectExpr b) {
  Node n;
  n.kind = Kind::Tensor;
  n.children.push_back(std::move(a));
  n.children.push_back(std::move(b));
  return ObjectExpr(std::make_shared<const Node>(std::move(n)));
}

ObjectExpr ObjectExpr::oplus(ObjectExpr a, ObjectExpr b) {
  Node n;
  n.kind = Kind::Oplus;
  n.children.push_back(std::move(a));
  n.children.push_back(std::move(b));
  return ObjectExpr(std::make_shared<const Node>(std::move(n)));
}

ObjectExpr::Kind ObjectExpr::kind() const { return node_->kind; }

const std::string& ObjectExpr::name() const { return node_->name; }

std::size_t ObjectExpr::gen_dim() const { return node_->dim; }

const ObjectExpr& ObjectExpr::operand() const {
  if (kind() != Kind::Dual) throw std::logic_error("operand() on non-dual object");
  return node_->children[0];
}

const ObjectExpr& ObjectExpr::left() const {
  if (kind() != Kind::Tensor && kind() != Kind::Oplus)
    throw std::logic_error("left() on non-binary object");
  return node_->children[0];
}

const ObjectExpr& ObjectExpr::right() const {
  if (kind() != Kind::Tensor && kind() != Kind::Oplus)
    throw std::logic_error("right() on non-binary object");
  return node_->children[1];
}

bool operator==(const ObjectExpr& x, const ObjectExpr& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case ObjectExpr::Kind::Unit:
    case ObjectExpr::Kind::Zero:
      return true;
    case ObjectExpr::Kind::Gen:
      return x.name() == y.name() && x.gen_dim() == y.gen_dim();
    case ObjectExpr::Kind::Dual:
      return x.operand() == y.operand();
    case ObjectExpr::Kind::Tensor:
    case ObjectExpr::Kind::Oplus:
      return x.left() == y.left() && x.right() == y.right();
  }
  return false;
}

std::size_t dim(const ObjectExpr& a) {
  switch (a.kind()) {
    case ObjectExpr::Kind::Unit:
      return 1;
    case ObjectExpr::Kind::Zero:
      return 0;
    case ObjectExpr::Kind::Gen:
      return a.gen_dim();
    case ObjectExpr::Kind::Dual:
      return dim(a.operand());
    case ObjectExpr::Kind::Tensor:
      return dim(a.left()) * dim(a.right());
    case ObjectExpr::Kind::Oplus:
      return dim(a.left()) + dim(a.right());
  }
  return 0;
}

namespace {

ObjectExpr normalize_dual(const ObjectExpr& a);

ObjectExpr normalize_impl(const ObjectExpr& a) {
  switch (a.kind()) {
    case ObjectExpr::Kind::Unit:
    case ObjectExpr::Kind::Zero:
    case ObjectExpr::Kind::Gen:
      return a;
    case ObjectExpr::Kind::Dual:
      return normalize_dual(a.operand());
    case ObjectExpr::Kind::Tensor:
      return ObjectExpr::tensor(normalize_impl(a.left()), normalize_impl(a.right()));
    case ObjectExpr::Kind::Oplus:
      return ObjectExpr::oplus(normalize_impl(a.left()), normalize_impl(a.right()));
  }
  return a;
}

// Normal form of Dual(a).
ObjectExpr normalize_dual(const ObjectExpr& a) {
  switch (a.kind()) {
    case ObjectExpr::Kind::Unit:
    case ObjectExpr::Kind::Zero:
      return a;
    case ObjectExpr::Kind::Gen:
      return ObjectExpr::dual(a);
    case ObjectExpr::Kind::Dual:
      return normalize_impl(a.operand());
    case ObjectExpr::Kind::Tensor:
      return ObjectExpr::tensor(normalize_dual(a.left()), normalize_dual(a.right()));
    case ObjectExpr::Kind::Oplus:
      return ObjectExpr::oplus(normalize_dual(a.left()), normalize_dual(a.right()));
  }
  return a;
}

int precedence(const ObjectExpr& a) {
  switch (a.kind()) {
    case ObjectExpr::Kind::Oplus:
      return 1;
    case ObjectExpr::Kind::Tensor:
      return 2;
    case ObjectExpr::Kind::Dual:
      return 3;
    default:
      return 4;
  }
}

void print(const ObjectExpr& a, std::string& out);

void print_wrapped(const ObjectExpr& a, bool parens, std::string& out) {
  if (parens) out += '(';
  print(a, out);
  if (parens) out += ')';
}

void print(const ObjectExpr& a, std::string& out) {
  switch (a.kind()) {
    case ObjectExpr::Kind::Unit:
      out += 'I';
      return;
    case ObjectExpr::Kind::Zero:
      out += '0';
      return;
    case ObjectExpr::Kind::Gen:
      out += a.name();
      out += '[';
      out += std::to_string(a.gen_dim());
      out += ']';
      return;
    case ObjectExpr::Kind::Dual:
      print_wrapped(a.operand(), precedence(a.operand()) < 3, out);
      out += '*';
      return;
    case ObjectExpr::Kind::Tensor:
    case ObjectExpr::Kind::Oplus: {
      const int p = precedence(a);
      print_wrapped(a.left(), precedence(a.left()) < p, out);
      out += a.kind() == ObjectExpr::Kind::Tensor ? '@' : '+';
      print_wrapped(a.right(), precedence(a.right()) <= p, out);
      return;
    }
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ObjectExpr parse() {
    ObjectExpr e = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  ObjectExpr sum() {
    ObjectExpr e = product();
    while (consume('+')) e = ObjectExpr::oplus(e, product());
    return e;
  }

  ObjectExpr product() {
    ObjectExpr e = postfix();
    while (consume('@')) e = ObjectExpr::tensor(e, postfix());
    return e;
  }

  ObjectExpr postfix() {
    ObjectExpr e = primary();
    while (consume('*')) e = ObjectExpr::dual(e);
    return e;
  }

  ObjectExpr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ObjectExpr e = sum();
      if (!consume(')')) fail("expected ')'");
      return e;
    }
    if (c == '0') {
      ++pos_;
      return ObjectExpr::zero();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string ident(text_.substr(start, pos_ - start));
      if (!peek('[')) {
        if (ident == "I") return ObjectExpr::unit();
        fail("generator '" + ident + "' needs a dimension, e.g. " + ident + "[2]");
      }
      consume('[');
      skip_space();
      std::size_t d = 0;
      const char* first = text_.data() + pos_;
      const char* last = text_.data() + text_.size();
      auto [ptr, ec] = std::from_chars(first, last, d);
      if (ec != std::errc() || ptr == first) fail("expected a dimension");
      pos_ += static_cast<std::size_t>(ptr - first);
      if (!consume(']')) fail("expected ']'");
      if (d == 0) fail("generator dimension must be positive");
      return ObjectExpr::gen(std::move(ident), d);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("object syntax error at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ObjectExpr normalize(const ObjectExpr& a) { return normalize_impl(a); }

bool obj_equal(const ObjectExpr& a, const ObjectExpr& b) {
  return a == b || normalize(a) == normalize(b);
}

std::string to_string(const ObjectExpr& a) {
  std::string out;
  print(a, out);
  return out;
}

ObjectExpr parse_object(std::string_view text) { return Parser(text).parse(); }

ObjectExpr object_of_dim(std::size_t d, const std::string& name) {
  if (d == 0) return ObjectExpr::zero();
  if (d == 1) return ObjectExpr::unit();
  return ObjectExpr::gen(name, d);
}

}  // namespace sccckit
