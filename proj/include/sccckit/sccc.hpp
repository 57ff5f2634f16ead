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

#include <concepts>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sccckit/morphism.hpp"

namespace sccckit {

//============================================================================
// Matrix primitives
//============================================================================

template <InvolutiveSemiring S>
Morphism<S> identity(const ObjectExpr& a) {
  Morphism<S> m(a, a);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = S::one();
  return m;
}

/// The 0/1 matrix sending basis vector `c` of dom to basis vector
/// `target[c]` of cod.
template <InvolutiveSemiring S>
Morphism<S> permutation(const ObjectExpr& dom, const ObjectExpr& cod,
                        const std::vector<std::size_t>& target) {
  Morphism<S> m(dom, cod);
  if (target.size() != m.cols()) throw TypeMismatch("permutation size does not match domain");
  for (std::size_t c = 0; c < target.size(); ++c) m(target[c], c) = S::one();
  return m;
}

/// g o f. Throws TypeMismatch unless cod(f) and dom(g) agree.
template <InvolutiveSemiring S>
Morphism<S> compose(const Morphism<S>& g, const Morphism<S>& f) {
  if (!obj_equal(f.cod(), g.dom()))
    throw TypeMismatch("cannot compose " + to_string(g.dom()) + " -> " + to_string(g.cod()) +
                       " after " + to_string(f.dom()) + " -> " + to_string(f.cod()));
  Morphism<S> out(f.dom(), g.cod());
  const std::size_t inner = f.rows();
  for (std::size_t c = 0; c < f.cols(); ++c) {
    for (std::size_t k = 0; k < inner; ++k) {
      const auto fk = f(k, c);
      if (S::is_zero(fk)) continue;
      for (std::size_t r = 0; r < g.rows(); ++r) out(r, c) = S::add(out(r, c), S::mul(g(r, k), fk));
    }
  }
  return out;
}

/// Kronecker product, left factor major.
template <InvolutiveSemiring S>
Morphism<S> tensor(const Morphism<S>& f, const Morphism<S>& g) {
  Morphism<S> out(ObjectExpr::tensor(f.dom(), g.dom()), ObjectExpr::tensor(f.cod(), g.cod()));
  const std::size_t gr = g.rows();
  const std::size_t gc = g.cols();
  for (std::size_t j = 0; j < f.cols(); ++j)
    for (std::size_t i = 0; i < f.rows(); ++i) {
      const auto fij = f(i, j);
      if (S::is_zero(fij)) continue;
      for (std::size_t l = 0; l < gc; ++l)
        for (std::size_t k = 0; k < gr; ++k) out(i * gr + k, j * gc + l) = S::mul(fij, g(k, l));
    }
  return out;
}

/// Conjugate transpose.
template <InvolutiveSemiring S>
Morphism<S> dagger(const Morphism<S>& f) {
  Morphism<S> out(f.cod(), f.dom());
  for (std::size_t c = 0; c < f.cols(); ++c)
    for (std::size_t r = 0; r < f.rows(); ++r) out(c, r) = S::involution(f(r, c));
  return out;
}

inline ObjectExpr dual_of(const ObjectExpr& a) { return normalize(ObjectExpr::dual(a)); }

/// f^* : B* -> A*, the transpose (contravariant).
template <InvolutiveSemiring S>
Morphism<S> star(const Morphism<S>& f) {
  Morphism<S> out(dual_of(f.cod()), dual_of(f.dom()));
  for (std::size_t c = 0; c < f.cols(); ++c)
    for (std::size_t r = 0; r < f.rows(); ++r) out(c, r) = f(r, c);
  return out;
}

/// f_* : A* -> B*, the entrywise involution (covariant).
template <InvolutiveSemiring S>
Morphism<S> lower_star(const Morphism<S>& f) {
  Morphism<S> out(dual_of(f.dom()), dual_of(f.cod()));
  auto src = f.entries();
  auto dst = out.entries();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = S::involution(src[i]);
  return out;
}

template <InvolutiveSemiring S>
std::pair<Morphism<S>, Morphism<S>> duals(const Morphism<S>& f) {
  return {star(f), lower_star(f)};
}

/// eta_A : I -> A* (x) A, the vectorization of the identity. For dim(A) = 0
/// this is the empty column I -> 0.
template <InvolutiveSemiring S>
Morphism<S> unit(const ObjectExpr& a) {
  Morphism<S> out(ObjectExpr::unit(), ObjectExpr::tensor(dual_of(a), a));
  const std::size_t d = dim(a);
  for (std::size_t i = 0; i < d; ++i) out(i * d + i, 0) = S::one();
  return out;
}

/// lambda_A : A -> I (x) A.
template <InvolutiveSemiring S>
Morphism<S> lambda(const ObjectExpr& a) {
  return identity<S>(a).retyped(a, ObjectExpr::tensor(ObjectExpr::unit(), a));
}

/// rho_A : A -> A (x) I.
template <InvolutiveSemiring S>
Morphism<S> rho(const ObjectExpr& a) {
  return identity<S>(a).retyped(a, ObjectExpr::tensor(a, ObjectExpr::unit()));
}

/// alpha_{A,B,C} : A (x) (B (x) C) -> (A (x) B) (x) C.
template <InvolutiveSemiring S>
Morphism<S> alpha(const ObjectExpr& a, const ObjectExpr& b, const ObjectExpr& c) {
  const ObjectExpr dom = ObjectExpr::tensor(a, ObjectExpr::tensor(b, c));
  const ObjectExpr cod = ObjectExpr::tensor(ObjectExpr::tensor(a, b), c);
  return identity<S>(dom).retyped(dom, cod);
}

/// sigma_{A,B} : A (x) B -> B (x) A.
template <InvolutiveSemiring S>
Morphism<S> sigma(const ObjectExpr& a, const ObjectExpr& b) {
  const std::size_t da = dim(a);
  const std::size_t db = dim(b);
  std::vector<std::size_t> target(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) target[i * db + j] = j * da + i;
  return permutation<S>(ObjectExpr::tensor(a, b), ObjectExpr::tensor(b, a), target);
}

/// u_I : I* -> I.
template <InvolutiveSemiring S>
Morphism<S> u_unit() {
  return identity<S>(ObjectExpr::unit()).retyped(ObjectExpr::dual(ObjectExpr::unit()),
                                                 ObjectExpr::unit());
}

//============================================================================
// Category interface
//============================================================================

/// The operations every model exposes to the generic constructions below.
/// Matrix models and the phase quotient both satisfy it.
template <class C>
concept DaggerCompactCategory = requires(const C& cat, const typename C::Arrow& f,
                                         const ObjectExpr& a, const Tolerance& tol) {
  { cat.identity(a) } -> std::same_as<typename C::Arrow>;
  { cat.compose(f, f) } -> std::same_as<typename C::Arrow>;
  { cat.tensor(f, f) } -> std::same_as<typename C::Arrow>;
  { cat.dagger(f) } -> std::same_as<typename C::Arrow>;
  { cat.star(f) } -> std::same_as<typename C::Arrow>;
  { cat.lower_star(f) } -> std::same_as<typename C::Arrow>;
  { cat.unit(a) } -> std::same_as<typename C::Arrow>;
  { cat.lambda(a) } -> std::same_as<typename C::Arrow>;
  { cat.rho(a) } -> std::same_as<typename C::Arrow>;
  { cat.alpha(a, a, a) } -> std::same_as<typename C::Arrow>;
  { cat.sigma(a, a) } -> std::same_as<typename C::Arrow>;
  { cat.u_unit() } -> std::same_as<typename C::Arrow>;
  { cat.equal(f, f, tol) } -> std::same_as<bool>;
  { cat.dom(f) } -> std::convertible_to<ObjectExpr>;
  { cat.cod(f) } -> std::convertible_to<ObjectExpr>;
  { cat.name() } -> std::convertible_to<std::string>;
};

/// The matrix calculus over S viewed as a category.
template <InvolutiveSemiring S>
struct MatrixCategory {
  using Arrow = Morphism<S>;
  using semiring = S;

  std::string name() const { return std::string(S::model_name); }

  Arrow identity(const ObjectExpr& a) const { return sccckit::identity<S>(a); }
  Arrow compose(const Arrow& g, const Arrow& f) const { return sccckit::compose(g, f); }
  Arrow tensor(const Arrow& f, const Arrow& g) const { return sccckit::tensor(f, g); }
  Arrow dagger(const Arrow& f) const { return sccckit::dagger(f); }
  Arrow star(const Arrow& f) const { return sccckit::star(f); }
  Arrow lower_star(const Arrow& f) const { return sccckit::lower_star(f); }
  Arrow unit(const ObjectExpr& a) const { return sccckit::unit<S>(a); }
  Arrow lambda(const ObjectExpr& a) const { return sccckit::lambda<S>(a); }
  Arrow rho(const ObjectExpr& a) const { return sccckit::rho<S>(a); }
  Arrow alpha(const ObjectExpr& a, const ObjectExpr& b, const ObjectExpr& c) const {
    return sccckit::alpha<S>(a, b, c);
  }
  Arrow sigma(const ObjectExpr& a, const ObjectExpr& b) const { return sccckit::sigma<S>(a, b); }
  Arrow u_unit() const { return sccckit::u_unit<S>(); }

  bool equal(const Arrow& f, const Arrow& g, const Tolerance& tol) const {
    return approx_equal(f, g, tol);
  }
  const ObjectExpr& dom(const Arrow& f) const { return f.dom(); }
  const ObjectExpr& cod(const Arrow& f) const { return f.cod(); }

  Arrow scalar(typename S::value_type v) const { return make_scalar<S>(v); }
  Arrow scalar_count(std::size_t n) const { return make_scalar<S>(S::from_count(n)); }
};

static_assert(DaggerCompactCategory<MatrixCategory<ComplexField>>);

//============================================================================
// Constructions derived from the compact structure (any category)
//============================================================================

/// Name by definition: (1_{A*} (x) f) o eta_A.
template <DaggerCompactCategory C>
typename C::Arrow name_by_definition(const C& cat, const typename C::Arrow& f) {
  const ObjectExpr a = cat.dom(f);
  return cat.compose(cat.tensor(cat.identity(dual_of(a)), f), cat.unit(a));
}

/// Name via absorption: (f^* (x) 1_B) o eta_B.
template <DaggerCompactCategory C>
typename C::Arrow name_by_absorption(const C& cat, const typename C::Arrow& f) {
  const ObjectExpr b = cat.cod(f);
  return cat.compose(cat.tensor(cat.star(f), cat.identity(b)), cat.unit(b));
}

/// The name of f : A -> B, a state I -> A* (x) B. Both unfoldings are
/// computed; AbsorptionMismatch is raised when they disagree.
template <DaggerCompactCategory C>
typename C::Arrow name(const C& cat, const typename C::Arrow& f, const Tolerance& tol = {}) {
  auto by_def = name_by_definition(cat, f);
  auto by_abs = name_by_absorption(cat, f);
  if (!cat.equal(by_def, by_abs, tol))
    throw AbsorptionMismatch("name unfoldings disagree in model " + cat.name());
  return by_def;
}

/// s . f := lambda_B^dagger o (s (x) f) o lambda_A.
template <DaggerCompactCategory C>
typename C::Arrow scalar_mult(const C& cat, const typename C::Arrow& s,
                              const typename C::Arrow& f) {
  return cat.compose(cat.dagger(cat.lambda(cat.cod(f))),
                     cat.compose(cat.tensor(s, f), cat.lambda(cat.dom(f))));
}

/// P_f := name(f) o name(f)^dagger.
template <DaggerCompactCategory C>
typename C::Arrow bipartite_projector(const C& cat, const typename C::Arrow& f,
                                      const Tolerance& tol = {}) {
  auto n = name(cat, f, tol);
  return cat.compose(n, cat.dagger(n));
}

/// Tr(h) := eta_A^dagger o (1_{A*} (x) h) o eta_A.
template <DaggerCompactCategory C>
typename C::Arrow trace(const C& cat, const typename C::Arrow& h) {
  const ObjectExpr a = cat.dom(h);
  if (!obj_equal(a, cat.cod(h))) throw NotEndomorphism("trace of a non-endomorphism");
  auto eta = cat.unit(a);
  return cat.compose(cat.dagger(eta),
                     cat.compose(cat.tensor(cat.identity(dual_of(a)), h), eta));
}

/// Partial trace over the left factor `traced` of f : A (x) B -> A (x) C,
/// yielding B -> C. When f is an endomorphism of `traced` itself it is
/// treated as A (x) I -> A (x) I and the full trace results.
template <DaggerCompactCategory C>
typename C::Arrow partial_trace(const C& cat, const typename C::Arrow& f,
                                const ObjectExpr& traced) {
  if (obj_equal(cat.dom(f), traced) && obj_equal(cat.cod(f), traced)) {
    auto r = cat.rho(traced);
    return partial_trace(cat, cat.compose(r, cat.compose(f, cat.dagger(r))), traced);
  }
  const ObjectExpr dom = normalize(cat.dom(f));
  const ObjectExpr cod = normalize(cat.cod(f));
  if (dom.kind() != ObjectExpr::Kind::Tensor || cod.kind() != ObjectExpr::Kind::Tensor ||
      !obj_equal(dom.left(), traced) || !obj_equal(cod.left(), traced))
    throw TypeMismatch("traced factor " + to_string(traced) + " does not prefix " +
                       to_string(cat.dom(f)) + " -> " + to_string(cat.cod(f)));
  const ObjectExpr& a = traced;
  const ObjectExpr b = dom.right();
  const ObjectExpr c = cod.right();
  const ObjectExpr ad = dual_of(a);
  auto eta = cat.unit(a);
  auto x = cat.lambda(b);
  x = cat.compose(cat.tensor(eta, cat.identity(b)), x);
  x = cat.compose(cat.dagger(cat.alpha(ad, a, b)), x);
  x = cat.compose(cat.tensor(cat.identity(ad), f), x);
  x = cat.compose(cat.alpha(ad, a, c), x);
  x = cat.compose(cat.tensor(cat.dagger(eta), cat.identity(c)), x);
  return cat.compose(cat.dagger(cat.lambda(c)), x);
}

/// <f|g> := name(f)^dagger o name(g).
template <DaggerCompactCategory C>
typename C::Arrow hs_inner(const C& cat, const typename C::Arrow& f, const typename C::Arrow& g,
                           const Tolerance& tol = {}) {
  if (!obj_equal(cat.dom(f), cat.dom(g)) || !obj_equal(cat.cod(f), cat.cod(g)))
    throw TypeMismatch("Hilbert-Schmidt inner product of morphisms with different types");
  return cat.compose(cat.dagger(name(cat, f, tol)), name(cat, g, tol));
}

/// ||f|| := <f|f>, the squared Hilbert-Schmidt norm.
template <DaggerCompactCategory C>
typename C::Arrow hs_norm_sq(const C& cat, const typename C::Arrow& f, const Tolerance& tol = {}) {
  return hs_inner(cat, f, f, tol);
}

/// f (x) f^dagger.
template <DaggerCompactCategory C>
typename C::Arrow doubled(const C& cat, const typename C::Arrow& f) {
  return cat.tensor(f, cat.dagger(f));
}

template <class Arrow>
struct PhaseWitnesses {
  Arrow s;
  Arrow t;
};

/// For f, g with equal doubles: s := name(f)^dagger o name(f) and
/// t := name(g)^dagger o name(f). Then s . f = t . g and s s^dagger = t t^dagger.
/// Throws NotPhaseEquivalent when the doubles differ.
template <DaggerCompactCategory C>
PhaseWitnesses<typename C::Arrow> phase_witnesses(const C& cat, const typename C::Arrow& f,
                                                  const typename C::Arrow& g,
                                                  const Tolerance& tol = {}) {
  if (!obj_equal(cat.dom(f), cat.dom(g)) || !obj_equal(cat.cod(f), cat.cod(g)) ||
      !cat.equal(doubled(cat, f), doubled(cat, g), tol))
    throw NotPhaseEquivalent("morphisms do not have equal doubled forms");
  auto nf = name(cat, f, tol);
  auto ng = name(cat, g, tol);
  return {cat.compose(cat.dagger(nf), nf), cat.compose(cat.dagger(ng), nf)};
}

/// psi o psi^dagger.
template <DaggerCompactCategory C>
typename C::Arrow density(const C& cat, const typename C::Arrow& psi) {
  return cat.compose(psi, cat.dagger(psi));
}

/// rho_A^dagger o (psi (x) psi^dagger) o lambda_A, the same density operator
/// obtained through the tensor.
template <DaggerCompactCategory C>
typename C::Arrow density_via_tensor(const C& cat, const typename C::Arrow& psi) {
  const ObjectExpr a = cat.cod(psi);
  return cat.compose(cat.dagger(cat.rho(a)),
                     cat.compose(cat.tensor(psi, cat.dagger(psi)), cat.lambda(a)));
}

template <DaggerCompactCategory C>
bool is_self_adjoint(const C& cat, const typename C::Arrow& p, const Tolerance& tol = {}) {
  return obj_equal(cat.dom(p), cat.cod(p)) && cat.equal(cat.dagger(p), p, tol);
}

template <DaggerCompactCategory C>
bool is_projector(const C& cat, const typename C::Arrow& p, const Tolerance& tol = {}) {
  return is_self_adjoint(cat, p, tol) && cat.equal(cat.compose(p, p), p, tol);
}

template <DaggerCompactCategory C>
bool is_unitary(const C& cat, const typename C::Arrow& u, const Tolerance& tol = {}) {
  return cat.equal(cat.compose(cat.dagger(u), u), cat.identity(cat.dom(u)), tol) &&
         cat.equal(cat.compose(u, cat.dagger(u)), cat.identity(cat.cod(u)), tol);
}

/// Prob(psi, P) := psi^dagger o P o psi for a projector P; cross-checked
/// against Tr(P o psi psi^dagger). Throws NotProjector, or ModelInconsistency
/// if the two routes disagree.
template <DaggerCompactCategory C>
typename C::Arrow born_prob(const C& cat, const typename C::Arrow& psi, const typename C::Arrow& p,
                            const Tolerance& tol = {}) {
  if (!is_projector(cat, p, tol)) throw NotProjector("not a self-adjoint idempotent");
  auto direct = cat.compose(cat.dagger(psi), cat.compose(p, psi));
  auto via_trace = trace(cat, cat.compose(p, density(cat, psi)));
  if (!cat.equal(direct, via_trace, tol))
    throw ModelInconsistency("psi^dagger P psi differs from Tr(P rho) in model " + cat.name());
  return direct;
}

//============================================================================
// Matrix-model shorthands
//============================================================================

template <InvolutiveSemiring S>
Morphism<S> name(const Morphism<S>& f, const Tolerance& tol = {}) {
  return name(MatrixCategory<S>{}, f, tol);
}

template <InvolutiveSemiring S>
Morphism<S> scalar_mult(const Scalar<S>& s, const Morphism<S>& f) {
  return scalar_mult(MatrixCategory<S>{}, s, f);
}

template <InvolutiveSemiring S>
Morphism<S> bipartite_projector(const Morphism<S>& f, const Tolerance& tol = {}) {
  return bipartite_projector(MatrixCategory<S>{}, f, tol);
}

template <InvolutiveSemiring S>
Scalar<S> trace(const Morphism<S>& h) {
  return trace(MatrixCategory<S>{}, h);
}

template <InvolutiveSemiring S>
Morphism<S> partial_trace(const Morphism<S>& f, const ObjectExpr& traced) {
  return partial_trace(MatrixCategory<S>{}, f, traced);
}

template <InvolutiveSemiring S>
Scalar<S> hs_inner(const Morphism<S>& f, const Morphism<S>& g, const Tolerance& tol = {}) {
  return hs_inner(MatrixCategory<S>{}, f, g, tol);
}

template <InvolutiveSemiring S>
Scalar<S> hs_norm_sq(const Morphism<S>& f, const Tolerance& tol = {}) {
  return hs_norm_sq(MatrixCategory<S>{}, f, tol);
}

template <InvolutiveSemiring S>
Morphism<S> doubled(const Morphism<S>& f) {
  return doubled(MatrixCategory<S>{}, f);
}

template <InvolutiveSemiring S>
PhaseWitnesses<Morphism<S>> phase_witnesses(const Morphism<S>& f, const Morphism<S>& g,
                                            const Tolerance& tol = {}) {
  return phase_witnesses(MatrixCategory<S>{}, f, g, tol);
}

template <InvolutiveSemiring S>
Scalar<S> born_prob(const Morphism<S>& psi, const Morphism<S>& p, const Tolerance& tol = {}) {
  return born_prob(MatrixCategory<S>{}, psi, p, tol);
}

/// Entrywise sum of the matrices; an independent route to the additive
/// structure used to cross-check constructions built from units and sums.
template <InvolutiveSemiring S>
Morphism<S> entrywise_sum(const Morphism<S>& f, const Morphism<S>& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw TypeMismatch("entrywise sum of differently shaped matrices");
  Morphism<S> out = f;
  auto dst = out.entries();
  auto src = g.entries();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = S::add(dst[i], src[i]);
  return out;
}

/// Entrywise scaling; the independent route for scalar multiplication.
template <InvolutiveSemiring S>
Morphism<S> scaled(typename S::value_type s, const Morphism<S>& f) {
  Morphism<S> out = f;
  for (auto& v : out.entries()) v = S::mul(s, v);
  return out;
}

}  // namespace sccckit
