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

#include <numbers>
#include <utility>
#include <vector>

#include "sccckit/models.hpp"
#include "sccckit/wproj.hpp"

namespace sccckit {

//============================================================================
// The sum on morphisms and its coherence isomorphisms
//============================================================================

/// f (+) g, block diagonal. Matrix models define it on all pairs.
template <InvolutiveSemiring S>
Morphism<S> oplus(const Morphism<S>& f, const Morphism<S>& g) {
  Morphism<S> out(ObjectExpr::oplus(f.dom(), g.dom()), ObjectExpr::oplus(f.cod(), g.cod()));
  for (std::size_t c = 0; c < f.cols(); ++c)
    for (std::size_t r = 0; r < f.rows(); ++r) out(r, c) = f(r, c);
  for (std::size_t c = 0; c < g.cols(); ++c)
    for (std::size_t r = 0; r < g.rows(); ++r) out(f.rows() + r, f.cols() + c) = g(r, c);
  return out;
}

/// l_A : A -> 0 (+) A.
template <InvolutiveSemiring S>
Morphism<S> oplus_left_unitor(const ObjectExpr& a) {
  return identity<S>(a).retyped(a, ObjectExpr::oplus(ObjectExpr::zero(), a));
}

/// r_A : A -> A (+) 0.
template <InvolutiveSemiring S>
Morphism<S> oplus_right_unitor(const ObjectExpr& a) {
  return identity<S>(a).retyped(a, ObjectExpr::oplus(a, ObjectExpr::zero()));
}

/// s_{A,B} : A (+) B -> B (+) A.
template <InvolutiveSemiring S>
Morphism<S> oplus_symmetry(const ObjectExpr& a, const ObjectExpr& b) {
  const std::size_t da = dim(a);
  const std::size_t db = dim(b);
  std::vector<std::size_t> target(da + db);
  for (std::size_t i = 0; i < da; ++i) target[i] = db + i;
  for (std::size_t j = 0; j < db; ++j) target[da + j] = j;
  return permutation<S>(ObjectExpr::oplus(a, b), ObjectExpr::oplus(b, a), target);
}

/// a_{A,B,C} : A (+) (B (+) C) -> (A (+) B) (+) C.
template <InvolutiveSemiring S>
Morphism<S> oplus_associator(const ObjectExpr& a, const ObjectExpr& b, const ObjectExpr& c) {
  const ObjectExpr dom = ObjectExpr::oplus(a, ObjectExpr::oplus(b, c));
  return identity<S>(dom).retyped(dom, ObjectExpr::oplus(ObjectExpr::oplus(a, b), c));
}

/// DIST_l : A (x) (B (+) C) -> (A (x) B) (+) (A (x) C).
template <InvolutiveSemiring S>
Morphism<S> dist_l(const ObjectExpr& a, const ObjectExpr& b, const ObjectExpr& c) {
  const std::size_t da = dim(a);
  const std::size_t db = dim(b);
  const std::size_t dc = dim(c);
  std::vector<std::size_t> target(da * (db + dc));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db + dc; ++j)
      target[i * (db + dc) + j] = j < db ? i * db + j : da * db + i * dc + (j - db);
  return permutation<S>(ObjectExpr::tensor(a, ObjectExpr::oplus(b, c)),
                        ObjectExpr::oplus(ObjectExpr::tensor(a, b), ObjectExpr::tensor(a, c)),
                        target);
}

/// DIST_r : (B (+) C) (x) A -> (B (x) A) (+) (C (x) A). With the left
/// factor major this is the identity permutation.
template <InvolutiveSemiring S>
Morphism<S> dist_r(const ObjectExpr& b, const ObjectExpr& c, const ObjectExpr& a) {
  const ObjectExpr dom = ObjectExpr::tensor(ObjectExpr::oplus(b, c), a);
  return identity<S>(dom).retyped(
      dom, ObjectExpr::oplus(ObjectExpr::tensor(b, a), ObjectExpr::tensor(c, a)));
}

/// DIST_{0,l} : A (x) 0 -> 0.
template <InvolutiveSemiring S>
Morphism<S> dist0_l(const ObjectExpr& a) {
  return Morphism<S>(ObjectExpr::tensor(a, ObjectExpr::zero()), ObjectExpr::zero());
}

/// DIST_{0,r} : 0 (x) A -> 0.
template <InvolutiveSemiring S>
Morphism<S> dist0_r(const ObjectExpr& a) {
  return Morphism<S>(ObjectExpr::tensor(ObjectExpr::zero(), a), ObjectExpr::zero());
}

//============================================================================
// Zero morphisms
//============================================================================

/// 0_A : A -> 0 through the unit of the zero object:
/// A -> I (x) A -> (0* (x) 0) (x) A -> 0.
template <InvolutiveSemiring S>
Morphism<S> zero_to_zero_object(const ObjectExpr& a) {
  const ObjectExpr z = ObjectExpr::zero();
  // (0 (x) 0) (x) A -> 0 (x) A -> 0
  auto collapse = compose(dist0_r<S>(a), tensor(dist0_r<S>(z), identity<S>(a)));
  auto x = compose(tensor(unit<S>(z), identity<S>(a)), lambda<S>(a));
  return compose(collapse, x);
}

/// 0_{A,B} := 0_B^dagger o 0_A.
template <InvolutiveSemiring S>
Morphism<S> zero_morphism(const ObjectExpr& a, const ObjectExpr& b) {
  return compose(dagger(zero_to_zero_object<S>(b)), zero_to_zero_object<S>(a));
}

//============================================================================
// Pseudo-projections and pseudo-injections
//============================================================================

template <InvolutiveSemiring S>
struct PseudoMaps {
  Morphism<S> p;  // whole -> part
  Morphism<S> q;  // part -> whole
};

/// p_{A_,B} = r_A^dagger o (1_A (+) 0_B) and q_{A_,B} = (1_A (+) 0_B^dagger) o r_A.
template <InvolutiveSemiring S>
PseudoMaps<S> pseudo_maps_left(const ObjectExpr& a, const ObjectExpr& b) {
  const ObjectExpr z = ObjectExpr::zero();
  auto r = oplus_right_unitor<S>(a);
  auto zb = zero_morphism<S>(b, z);
  return {compose(dagger(r), oplus(identity<S>(a), zb)),
          compose(oplus(identity<S>(a), dagger(zb)), r)};
}

/// p_{A,B_} = l_B^dagger o (0_A (+) 1_B) and q_{A,B_} = (0_A^dagger (+) 1_B) o l_B.
template <InvolutiveSemiring S>
PseudoMaps<S> pseudo_maps_right(const ObjectExpr& a, const ObjectExpr& b) {
  const ObjectExpr z = ObjectExpr::zero();
  auto l = oplus_left_unitor<S>(b);
  auto za = zero_morphism<S>(a, z);
  return {compose(dagger(l), oplus(za, identity<S>(b))),
          compose(oplus(dagger(za), identity<S>(b)), l)};
}

/// Pseudo-maps of summand i of a left-nested decomposition, built from the
/// binary ones by recursion on the left operand.
template <InvolutiveSemiring S>
PseudoMaps<S> pseudo_maps(const OplusDecomposition& d, std::size_t i) {
  if (i >= d.size()) throw IndexOutOfRange("summand index " + std::to_string(i) + " of " +
                                           std::to_string(d.size()));
  if (d.size() == 1) return {identity<S>(d.whole), identity<S>(d.whole)};
  const std::size_t last = d.size() - 1;
  OplusDecomposition init(std::vector<ObjectExpr>(d.parts.begin(), d.parts.begin() + last));
  if (i == last) return pseudo_maps_right<S>(init.whole, d.parts[last]);
  auto outer = pseudo_maps_left<S>(init.whole, d.parts[last]);
  auto inner = pseudo_maps<S>(init, i);
  return {compose(inner.p, outer.p), compose(outer.q, inner.q)};
}

/// f_ij := p_j o f o q_i : A_i -> B_j.
template <InvolutiveSemiring S>
Morphism<S> pseudo_component(const Morphism<S>& f, const OplusDecomposition& dom_decomp,
                             const OplusDecomposition& cod_decomp, std::size_t i, std::size_t j) {
  if (!obj_equal(f.dom(), dom_decomp.whole) || !obj_equal(f.cod(), cod_decomp.whole))
    throw TypeMismatch("decompositions do not match " + to_string(f.dom()) + " -> " +
                       to_string(f.cod()));
  return compose(pseudo_maps<S>(cod_decomp, j).p, compose(f, pseudo_maps<S>(dom_decomp, i).q));
}

//============================================================================
// The sum of morphisms derived from the sum of objects
//============================================================================

/// A -> 2* (x) (A (+) A) for 2 := I (+) I:
/// lambda, eta_2 (x) 1, alpha^-1, 1 (x) DIST_r, 1 (x) (lambda^dagger (+) lambda^dagger).
template <InvolutiveSemiring S>
Morphism<S> sum_spread(const ObjectExpr& a) {
  const ObjectExpr i = ObjectExpr::unit();
  const ObjectExpr two = ObjectExpr::oplus(i, i);
  const ObjectExpr two_d = dual_of(two);
  auto x = lambda<S>(a);
  x = compose(tensor(unit<S>(two), identity<S>(a)), x);
  x = compose(dagger(alpha<S>(two_d, two, a)), x);
  x = compose(tensor(identity<S>(two_d), dist_r<S>(i, i, a)), x);
  auto unl = dagger(lambda<S>(a));
  return compose(tensor(identity<S>(two_d), oplus(unl, unl)), x);
}

/// f + g : A -> B, computed by running the sum through 2 (+)-copies of A and
/// contracting with the unit of 2.
template <InvolutiveSemiring S>
Morphism<S> derived_sum(const Morphism<S>& f, const Morphism<S>& g) {
  if (!obj_equal(f.dom(), g.dom()) || !obj_equal(f.cod(), g.cod()))
    throw TypeMismatch("derived sum of morphisms with different types");
  const ObjectExpr two_d = dual_of(ObjectExpr::oplus(ObjectExpr::unit(), ObjectExpr::unit()));
  auto forward = sum_spread<S>(f.dom());
  auto middle = tensor(identity<S>(two_d), oplus(f, g.retyped(f.dom(), f.cod())));
  return compose(dagger(sum_spread<S>(f.cod())), compose(middle, forward));
}

//============================================================================
// Sums on phase classes are ill-defined
//============================================================================

struct IllDefinedWitness {
  double theta = 0.0;
  bool classes_agree = false;       // [e^{i theta}] == [1]
  bool sum_classes_agree = false;   // [1 (+) e^{i theta}] == [1 (+) 1]
  bool pair_classes_agree = false;  // [<1, e^{i theta}>] == [<1, 1>]
  double sum_distance = 0.0;        // max entry distance of doubled sums
  double pair_distance = 0.0;       // max entry distance of doubled pairings
  CMorphism sum_doubled_phase;
  CMorphism sum_doubled_plain;
  CMorphism pair_doubled_phase;
  CMorphism pair_doubled_plain;
};

/// 1 and e^{i theta} are phase-equal, but 1 (+) e^{i theta} and 1 (+) 1 (and
/// the pairings <1, e^{i theta}>, <1, 1>) are not unless theta = 0.
IllDefinedWitness oplus_illdefined_witness(double theta = std::numbers::pi / 2);

}  // namespace sccckit
