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

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace sccckit {

/// A formal object of a strongly compact closed category with a monoidal
/// sum: the tensor unit, the zero object, named generators of fixed
/// dimension, duals, tensors and sums.
///
/// Objects are immutable values. Copies share their expression tree.
///
/// Only duality is strict: Dual distributes over Tensor/Oplus and is
/// involutive after normalize(). Tensor(Unit, A) and A are distinct objects
/// related by an explicit unitor.
class ObjectExpr {
 public:
  enum class Kind { Unit, Zero, Gen, Dual, Tensor, Oplus };

  /// The tensor unit I.
  ObjectExpr();

  static ObjectExpr unit();
  static ObjectExpr zero();
  /// Throws std::invalid_argument when dim == 0 or the name is empty.
  static ObjectExpr gen(std::string name, std::size_t dim);
  static ObjectExpr dual(ObjectExpr a);
  static ObjectExpr tensor(ObjectExpr a, ObjectExpr b);
  static ObjectExpr oplus(ObjectExpr a, ObjectExpr b);

  Kind kind() const;

  // Gen only.
  const std::string& name() const;
  std::size_t gen_dim() const;

  // Dual only.
  const ObjectExpr& operand() const;

  // Tensor and Oplus only.
  const ObjectExpr& left() const;
  const ObjectExpr& right() const;

  /// Structural equality of the expression trees as written (no
  /// normalization). Use obj_equal for the categorical notion.
  friend bool operator==(const ObjectExpr& a, const ObjectExpr& b);

 private:
  struct Node;
  explicit ObjectExpr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

std::size_t dim(const ObjectExpr& a);

/// Pushes Dual inward until it wraps only generators and removes double
/// duals. Tensor and Oplus association is left untouched.
ObjectExpr normalize(const ObjectExpr& a);

/// Structural equality of normal forms.
bool obj_equal(const ObjectExpr& a, const ObjectExpr& b);

/// Textual syntax: `I`, `0`, `Q[2]`, `A*`, `A@B`, `A+B`. `*` binds tightest,
/// then `@`, then `+`; binary operators associate to the left.
std::string to_string(const ObjectExpr& a);

/// Inverse of to_string. Throws ParseError on malformed input.
ObjectExpr parse_object(std::string_view text);

/// Convenience: I for d == 1, 0 for d == 0, otherwise the generator
/// `name[d]`.
ObjectExpr object_of_dim(std::size_t d, const std::string& name = "H");

}  // namespace sccckit
