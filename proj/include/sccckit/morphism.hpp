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

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sccckit/errors.hpp"
#include "sccckit/object.hpp"
#include "sccckit/semiring.hpp"

namespace sccckit {

/// Scale-aware equality: two matrices agree when the largest entrywise
/// distance is at most max(absolute, relative * largest entry magnitude).
struct Tolerance {
  double relative = 1e-9;
  double absolute = 1e-12;

  static constexpr Tolerance exact() { return {0.0, 0.0}; }
};

/// A morphism dom -> cod of a matrix model: a dim(cod) x dim(dom) matrix over
/// the semiring S.
///
/// Entries are stored column-major. Tensor bases are ordered
/// lexicographically with the left factor major, and sum bases list the left
/// block before the right block. With these conventions the name of f is
/// the column-stacking of f.
template <InvolutiveSemiring S>
class Morphism {
 public:
  using semiring = S;
  using value_type = typename S::value_type;

  /// The zero matrix dom -> cod.
  Morphism(ObjectExpr dom, ObjectExpr cod)
      : dom_(std::move(dom)),
        cod_(std::move(cod)),
        rows_(dim(cod_)),
        cols_(dim(dom_)),
        data_(rows_ * cols_, S::zero()) {}

  /// Takes ownership of column-major entries. Throws TypeMismatch when the
  /// entry count does not match the dimensions.
  Morphism(ObjectExpr dom, ObjectExpr cod, std::vector<value_type> column_major)
      : dom_(std::move(dom)),
        cod_(std::move(cod)),
        rows_(dim(cod_)),
        cols_(dim(dom_)),
        data_(std::move(column_major)) {
    if (data_.size() != rows_ * cols_)
      throw TypeMismatch("entry count " + std::to_string(data_.size()) + " does not match " +
                         std::to_string(rows_) + "x" + std::to_string(cols_) + " for " +
                         to_string(dom_) + " -> " + to_string(cod_));
  }

  /// Builds a morphism from row-major nested lists, the way matrices are
  /// usually written down.
  static Morphism from_rows(ObjectExpr dom, ObjectExpr cod,
                            std::initializer_list<std::initializer_list<value_type>> rows) {
    Morphism m(std::move(dom), std::move(cod));
    if (rows.size() != m.rows_) throw TypeMismatch("row count does not match codomain");
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != m.cols_) throw TypeMismatch("column count does not match domain");
      std::size_t c = 0;
      for (const auto& v : row) m(r, c++) = v;
      ++r;
    }
    return m;
  }

  const ObjectExpr& dom() const { return dom_; }
  const ObjectExpr& cod() const { return cod_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

  std::span<const value_type> entries() const { return data_; }
  std::span<value_type> entries() { return data_; }

  /// Same entries, new (dimension-compatible) types.
  Morphism retyped(ObjectExpr dom, ObjectExpr cod) const {
    return Morphism(std::move(dom), std::move(cod), data_);
  }

  bool is_scalar() const {
    return obj_equal(dom_, ObjectExpr::unit()) && obj_equal(cod_, ObjectExpr::unit());
  }

  /// The single entry of a 1x1 morphism.
  value_type value() const {
    if (rows_ != 1 || cols_ != 1) throw TypeMismatch("value() on a non-1x1 morphism");
    return data_[0];
  }

 private:
  ObjectExpr dom_;
  ObjectExpr cod_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

/// A morphism I -> I.
template <InvolutiveSemiring S>
using Scalar = Morphism<S>;

using CMorphism = Morphism<ComplexField>;

template <InvolutiveSemiring S>
Scalar<S> make_scalar(typename S::value_type v) {
  return Morphism<S>(ObjectExpr::unit(), ObjectExpr::unit(), {v});
}

template <InvolutiveSemiring S>
double max_magnitude(const Morphism<S>& f) {
  double m = 0.0;
  for (const auto& v : f.entries()) m = std::max(m, static_cast<double>(S::magnitude(v)));
  return m;
}

/// Largest entrywise distance; shapes must agree.
template <InvolutiveSemiring S>
double max_entry_distance(const Morphism<S>& a, const Morphism<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw TypeMismatch("cannot compare matrices of different shapes");
  double d = 0.0;
  auto x = a.entries();
  auto y = b.entries();
  for (std::size_t i = 0; i < x.size(); ++i)
    d = std::max(d, static_cast<double>(S::distance(x[i], y[i])));
  return d;
}

template <InvolutiveSemiring S>
double equality_threshold(const Morphism<S>& a, const Morphism<S>& b, const Tolerance& tol) {
  return std::max(tol.absolute, tol.relative * std::max(max_magnitude(a), max_magnitude(b)));
}

/// Equality of morphisms: same (normalized) types and entries within the
/// scale-aware tolerance. With Tolerance::exact() this is bitwise equality
/// of the entries.
template <InvolutiveSemiring S>
bool approx_equal(const Morphism<S>& a, const Morphism<S>& b, const Tolerance& tol = {}) {
  if (!obj_equal(a.dom(), b.dom()) || !obj_equal(a.cod(), b.cod())) return false;
  return max_entry_distance(a, b) <= equality_threshold(a, b, tol);
}

/// Equality of entries only, ignoring types.
template <InvolutiveSemiring S>
bool approx_equal_entries(const Morphism<S>& a, const Morphism<S>& b, const Tolerance& tol = {}) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_entry_distance(a, b) <= equality_threshold(a, b, tol);
}

}  // namespace sccckit
