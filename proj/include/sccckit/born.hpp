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

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "sccckit/ortho.hpp"

namespace sccckit {

//============================================================================
// Valuations and scalar sums
//============================================================================

struct Rational {
  long num = 1;
  long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  Rational inverse() const { return {den, num}; }
  std::string to_string() const;
  /// Accepts `p` or `p/q` with q > 0 and p > 0. Throws ParseError.
  static Rational parse(std::string_view text);
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// s^e for a nonnegative scalar s. Throws RootUnavailable when s is not a
/// nonnegative element, so that the power is not unique or does not exist.
template <HasRealPowers S>
Scalar<S> scalar_power(const Scalar<S>& s, double e) {
  const auto v = s.value();
  const double slack = 1e-12 * std::max(1.0, static_cast<double>(S::magnitude(v)));
  if (!S::is_nonnegative(v, slack))
    throw RootUnavailable("scalar has no unique nonnegative power");
  return make_scalar<S>(S::nonnegative_power(v, e));
}

/// ||f||^nu.
template <HasRealPowers S>
Scalar<S> valuation(const Morphism<S>& f, Rational nu) {
  return scalar_power(hs_norm_sq(f), nu.value());
}

template <InvolutiveSemiring S>
using TraceFn = std::function<Scalar<S>(const Morphism<S>&)>;

template <InvolutiveSemiring S>
TraceFn<S> standard_trace() {
  return [](const Morphism<S>& h) { return trace(h); };
}

/// A deliberately wrong trace that forgets the last diagonal entry. Used as
/// a negative control.
template <InvolutiveSemiring S>
TraceFn<S> corrupted_trace() {
  return [](const Morphism<S>& h) {
    if (!obj_equal(h.dom(), h.cod())) throw NotEndomorphism("trace of a non-endomorphism");
    auto acc = S::zero();
    for (std::size_t i = 0; i + 1 < h.rows(); ++i) acc = S::add(acc, h(i, i));
    return make_scalar<S>(acc);
  };
}

/// s + t for valuation exponent nu: (Tr(s^(1/nu) (+) t^(1/nu)))^nu.
template <HasRealPowers S>
Scalar<S> scalar_sum(const Scalar<S>& s, const Scalar<S>& t, Rational nu,
                     const TraceFn<S>& tr = standard_trace<S>()) {
  const double inv = nu.inverse().value();
  return scalar_power(tr(oplus(scalar_power(s, inv), scalar_power(t, inv))), nu.value());
}

//============================================================================
// Positivity and pseudo-diagonals
//============================================================================

template <InvolutiveSemiring S>
struct Positivity {
  bool positive = false;
  /// f with h = f^dagger o f when positive.
  std::optional<Morphism<S>> witness;
  /// False when the search could not decide (weights beyond its grid).
  bool conclusive = true;
};

/// Self-adjoint with spectrum >= -1e-9 ||h||; the witness is the symmetric
/// square root.
Positivity<ComplexField> is_positive(const CMorphism& h);
/// Nonnegative factorization by Cholesky, then a small integer grid search.
Positivity<NonnegativeReals> is_positive(const Morphism<NonnegativeReals>& h);
/// Exact: symmetric, and every related pair has reflexive endpoints.
Positivity<BooleanSemiring> is_positive(const Morphism<BooleanSemiring>& h);

/// h_11 (+) ... (+) h_nn.
template <InvolutiveSemiring S>
Morphism<S> pseudo_diagonal(const Morphism<S>& h, const OplusDecomposition& d) {
  if (!obj_equal(h.dom(), d.whole) || !obj_equal(h.cod(), d.whole))
    throw TypeMismatch("pseudo-diagonal needs an endomorphism of the decomposed object");
  Morphism<S> acc = pseudo_component(h, d, d, 0, 0);
  for (std::size_t i = 1; i < d.size(); ++i) acc = oplus(acc, pseudo_component(h, d, d, i, i));
  return acc;
}

//============================================================================
// Sample-level checks, judged in a chosen category
//============================================================================

/// Two sides of an identity and whether they agree.
template <class Arrow>
struct Comparison {
  bool holds = false;
  Arrow lhs;
  Arrow rhs;
};

template <class C, InvolutiveSemiring S>
Comparison<typename C::Arrow> judge(const C& cat, const Morphism<S>& lhs, const Morphism<S>& rhs,
                                    const Tolerance& tol) {
  auto l = embed_of(cat, lhs);
  auto r = embed_of(cat, rhs);
  const bool ok = cat.equal(l, r, tol);
  return {ok, std::move(l), std::move(r)};
}

/// Sum over i of ||f_i||^nu (summed at the same nu) against ||f||^nu, for
/// f : A -> (+)_i B_i.
template <class C, HasRealPowers S>
Comparison<typename C::Arrow> born_decomposition(const C& cat, const Morphism<S>& f,
                                                 const OplusDecomposition& cod, Rational nu,
                                                 const Tolerance& tol = {}) {
  Scalar<S> acc = valuation(compose(pseudo_maps<S>(cod, 0).p, f), nu);
  for (std::size_t i = 1; i < cod.size(); ++i)
    acc = scalar_sum(acc, valuation(compose(pseudo_maps<S>(cod, i).p, f), nu), nu);
  return judge(cat, acc, valuation(f, nu), tol);
}

/// Tr(h) against Tr(h_11 + h_22) for a two-part split with equal parts.
template <class C, InvolutiveSemiring S>
Comparison<typename C::Arrow> diagonal_axiom(const C& cat, const Morphism<S>& h,
                                             const OplusDecomposition& d, const TraceFn<S>& tr,
                                             const Tolerance& tol = {}) {
  auto h11 = pseudo_component(h, d, d, 0, 0);
  auto h22 = pseudo_component(h, d, d, 1, 1);
  return judge(cat, tr(h), tr(derived_sum(h11, h22.retyped(h11.dom(), h11.cod()))), tol);
}

/// Tr(h) + Tr(h') against Tr(h + h'), both sums derived from (+).
template <class C, InvolutiveSemiring S>
Comparison<typename C::Arrow> trace_linearity(const C& cat, const Morphism<S>& h,
                                              const Morphism<S>& h2, const TraceFn<S>& tr,
                                              const Tolerance& tol = {}) {
  return judge(cat, derived_sum(tr(h), tr(h2)), tr(derived_sum(h, h2)), tol);
}

/// Tr(h + h') against Tr(h (+) h').
template <class C, InvolutiveSemiring S>
Comparison<typename C::Arrow> trace_sum_vs_oplus(const C& cat, const Morphism<S>& h,
                                                 const Morphism<S>& h2, const TraceFn<S>& tr,
                                                 const Tolerance& tol = {}) {
  return judge(cat, tr(derived_sum(h, h2)), tr(oplus(h, h2)), tol);
}

/// Tr(h) against Tr(Tr(h_11) (+) Tr(h_22)) for positive h on a two-part split.
template <class C, InvolutiveSemiring S>
Comparison<typename C::Arrow> ortho_bornian_positive(const C& cat, const Morphism<S>& h,
                                                     const OplusDecomposition& d,
                                                     const TraceFn<S>& tr,
                                                     const Tolerance& tol = {}) {
  auto t11 = tr(pseudo_component(h, d, d, 0, 0));
  auto t22 = tr(pseudo_component(h, d, d, 1, 1));
  return judge(cat, tr(h), tr(oplus(t11, t22)), tol);
}

/// ||f|| against Tr(||f_1|| (+) ||f_2||) for f : A -> B_1 (+) B_2.
template <class C, InvolutiveSemiring S>
Comparison<typename C::Arrow> ortho_bornian_norm(const C& cat, const Morphism<S>& f,
                                                 const OplusDecomposition& cod,
                                                 const TraceFn<S>& tr, const Tolerance& tol = {}) {
  auto n1 = hs_norm_sq(compose(pseudo_maps<S>(cod, 0).p, f));
  auto n2 = hs_norm_sq(compose(pseudo_maps<S>(cod, 1).p, f));
  return judge(cat, hs_norm_sq(f), tr(oplus(n1, n2)), tol);
}

}  // namespace sccckit
