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

#include <string>

#include "sccckit/sccc.hpp"

namespace sccckit {

/// An arrow of the phase quotient: a representative together with its
/// doubled form f (x) f^dagger. Two arrows are equal when their doubled
/// forms are.
template <InvolutiveSemiring S>
class WMorphism {
 public:
  explicit WMorphism(Morphism<S> rep) : rep_(std::move(rep)), doubled_(sccckit::doubled(rep_)) {}

  const Morphism<S>& rep() const { return rep_; }
  const Morphism<S>& doubled() const { return doubled_; }
  const ObjectExpr& dom() const { return rep_.dom(); }
  const ObjectExpr& cod() const { return rep_.cod(); }

 private:
  Morphism<S> rep_;
  Morphism<S> doubled_;
};

template <InvolutiveSemiring S>
WMorphism<S> lift(Morphism<S> f) {
  return WMorphism<S>(std::move(f));
}

template <InvolutiveSemiring S>
WMorphism<S> wcompose(const WMorphism<S>& g, const WMorphism<S>& f) {
  return lift(compose(g.rep(), f.rep()));
}

template <InvolutiveSemiring S>
WMorphism<S> wtensor(const WMorphism<S>& f, const WMorphism<S>& g) {
  return lift(tensor(f.rep(), g.rep()));
}

template <InvolutiveSemiring S>
WMorphism<S> wdagger(const WMorphism<S>& f) {
  return lift(dagger(f.rep()));
}

/// Outcome of the three equivalent phase-equality tests.
struct WEquality {
  bool equal = false;
  bool by_doubled = false;    // f (x) f^dagger = g (x) g^dagger
  bool by_conjugate = false;  // f (x) f_* = g (x) g_*
  bool by_projector = false;  // P_f = P_g
  double distance = 0.0;      // on the doubled forms
  double threshold = 0.0;
};

/// Evaluates all three criteria. Throws CriterionDisagreement if they
/// disagree and TypeMismatch if the types differ.
template <InvolutiveSemiring S>
WEquality wequal_detail(const WMorphism<S>& a, const WMorphism<S>& b, const Tolerance& tol = {}) {
  if (!obj_equal(a.dom(), b.dom()) || !obj_equal(a.cod(), b.cod()))
    throw TypeMismatch("phase-class comparison of morphisms with different types");
  WEquality w;
  w.distance = max_entry_distance(a.doubled(), b.doubled());
  w.threshold = equality_threshold(a.doubled(), b.doubled(), tol);
  w.by_doubled = w.distance <= w.threshold;
  w.by_conjugate = approx_equal(tensor(a.rep(), lower_star(a.rep())),
                                tensor(b.rep(), lower_star(b.rep())), tol);
  w.by_projector = approx_equal(bipartite_projector(a.rep(), tol),
                                bipartite_projector(b.rep(), tol), tol);
  if (w.by_doubled != w.by_conjugate || w.by_doubled != w.by_projector)
    throw CriterionDisagreement("phase-equality criteria disagree (distance " +
                                std::to_string(w.distance) + ", threshold " +
                                std::to_string(w.threshold) + ")");
  w.equal = w.by_doubled;
  return w;
}

template <InvolutiveSemiring S>
bool wequal(const WMorphism<S>& a, const WMorphism<S>& b, const Tolerance& tol = {}) {
  return obj_equal(a.dom(), b.dom()) && obj_equal(a.cod(), b.cod()) &&
         approx_equal(a.doubled(), b.doubled(), tol);
}

/// Rotates f by the unit phase that makes its largest-modulus entry (the
/// first in row-major order among ties) real and nonnegative. Zero is
/// returned unchanged.
template <ComplexValued S>
Morphism<S> canonical_rep(const Morphism<S>& f) {
  double best = 0.0;
  Complex pivot = 0.0;
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c)
      if (std::abs(f(r, c)) > best) {
        best = std::abs(f(r, c));
        pivot = f(r, c);
      }
  if (best == 0.0) return f;
  return scaled(std::conj(pivot) / best, f);
}

/// The phase quotient of the matrix model over S, as a category.
template <InvolutiveSemiring S>
struct WProjCategory {
  using Arrow = WMorphism<S>;
  using semiring = S;
  MatrixCategory<S> base;

  std::string name() const { return "WProj(" + base.name() + ")"; }

  Arrow identity(const ObjectExpr& a) const { return lift(base.identity(a)); }
  Arrow compose(const Arrow& g, const Arrow& f) const { return wcompose(g, f); }
  Arrow tensor(const Arrow& f, const Arrow& g) const { return wtensor(f, g); }
  Arrow dagger(const Arrow& f) const { return wdagger(f); }
  Arrow star(const Arrow& f) const { return lift(base.star(f.rep())); }
  Arrow lower_star(const Arrow& f) const { return lift(base.lower_star(f.rep())); }
  Arrow unit(const ObjectExpr& a) const { return lift(base.unit(a)); }
  Arrow lambda(const ObjectExpr& a) const { return lift(base.lambda(a)); }
  Arrow rho(const ObjectExpr& a) const { return lift(base.rho(a)); }
  Arrow alpha(const ObjectExpr& a, const ObjectExpr& b, const ObjectExpr& c) const {
    return lift(base.alpha(a, b, c));
  }
  Arrow sigma(const ObjectExpr& a, const ObjectExpr& b) const { return lift(base.sigma(a, b)); }
  Arrow u_unit() const { return lift(base.u_unit()); }

  bool equal(const Arrow& f, const Arrow& g, const Tolerance& tol) const {
    return wequal(f, g, tol);
  }
  const ObjectExpr& dom(const Arrow& f) const { return f.dom(); }
  const ObjectExpr& cod(const Arrow& f) const { return f.cod(); }

  Arrow embed(const Morphism<S>& f) const { return lift(f); }
};

template <InvolutiveSemiring S>
Morphism<S> embed_of(const MatrixCategory<S>&, const Morphism<S>& f) {
  return f;
}

template <InvolutiveSemiring S>
WMorphism<S> embed_of(const WProjCategory<S>& cat, const Morphism<S>& f) {
  return cat.embed(f);
}

static_assert(DaggerCompactCategory<WProjCategory<ComplexField>>);

}  // namespace sccckit
