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

#include "sccckit/born.hpp"

#include <Eigen/Dense>
#include <charconv>
#include <cmath>

namespace sccckit {

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(std::string_view text) {
  auto read = [&](std::string_view s) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v <= 0)
      throw ParseError("not a positive rational: '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {read(text), 1};
  return {read(text.substr(0, slash)), read(text.substr(slash + 1))};
}

Positivity<ComplexField> is_positive(const CMorphism& h) {
  if (!obj_equal(h.dom(), h.cod())) throw NotEndomorphism("positivity of a non-endomorphism");
  const auto n = static_cast<Eigen::Index>(h.rows());
  if (n == 0) return {true, h, true};
  if (!approx_equal(dagger(h), h)) return {false, std::nullopt, true};
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = 0.5 * (h(r, c) + std::conj(h(c, r)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  if (es.eigenvalues().minCoeff() < -1e-9 * scale) return {false, std::nullopt, true};
  Eigen::VectorXd roots = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Eigen::MatrixXcd root = es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
  CMorphism f(h.dom(), h.cod());
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) f(r, c) = root(r, c);
  return {true, f, true};
}

namespace {

using W = NonnegativeReals;

// Nonnegative lower-triangular L with h = L L^T, if the plain Cholesky
// factor happens to be nonnegative.
std::optional<Morphism<W>> nonnegative_cholesky(const Morphism<W>& h) {
  const std::size_t n = h.rows();
  Morphism<W> l(h.dom(), h.cod());
  for (std::size_t j = 0; j < n; ++j) {
    double d = h(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (d < -1e-12) return std::nullopt;
    l(j, j) = std::sqrt(std::max(d, 0.0));
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = h(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      if (l(j, j) == 0.0) {
        if (std::abs(s) > 1e-12) return std::nullopt;
        l(i, j) = 0.0;
      } else {
        l(i, j) = s / l(j, j);
      }
      if (l(i, j) < -1e-12) return std::nullopt;
    }
  }
  auto f = dagger(l);
  if (!approx_equal(compose(dagger(f), f), h)) return std::nullopt;
  return f;
}

}  // namespace

Positivity<NonnegativeReals> is_positive(const Morphism<NonnegativeReals>& h) {
  if (!obj_equal(h.dom(), h.cod())) throw NotEndomorphism("positivity of a non-endomorphism");
  if (!approx_equal(dagger(h), h)) return {false, std::nullopt, true};
  for (double v : h.entries())
    if (v < 0.0) return {false, std::nullopt, true};
  if (auto f = nonnegative_cholesky(h)) return {true, *f, true};
  // Square n x n factors with entries in {0..3}, for n <= 3.
  const std::size_t n = h.rows();
  if (n > 3) return {false, std::nullopt, false};
  const std::size_t cells = n * n;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    Morphism<W> f(h.dom(), h.cod());
    std::size_t c = code;
    for (auto& v : f.entries()) {
      v = static_cast<double>(c % 4);
      c /= 4;
    }
    if (approx_equal(compose(dagger(f), f), h)) return {true, f, true};
  }
  return {false, std::nullopt, false};
}

Positivity<BooleanSemiring> is_positive(const Morphism<BooleanSemiring>& h) {
  if (!obj_equal(h.dom(), h.cod())) throw NotEndomorphism("positivity of a non-endomorphism");
  const std::size_t n = h.rows();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (h(i, j).value != h(j, i).value) return {false, std::nullopt, true};
      if (h(i, j).value) {
        if (!h(i, i).value || !h(j, j).value) return {false, std::nullopt, true};
        pairs.emplace_back(i, j);
      }
    }
  // One row of the witness per related pair {i, j}.
  const ObjectExpr rows = object_of_dim(pairs.size(), "R");
  Morphism<BooleanSemiring> f(h.dom(), rows);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    f(k, pairs[k].first) = {true};
    f(k, pairs[k].second) = {true};
  }
  return {true, f, true};
}

}  // namespace sccckit
