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

#include "sccckit/suites.hpp"
#include "support.hpp"

using namespace testing;

namespace {
const Tolerance kExact = Tolerance::exact();
}

TEST_CASE("zero morphisms") {
  CHECK(approx_equal(zero_morphism<C>(Q, Q), rows(Q, Q, {{0.0, 0.0}, {0.0, 0.0}}), kExact));
  Rng rng = trial_rng(4, 0);
  for (int t = 0; t < 100; ++t) {
    const ObjectExpr a = random_object(rng, 3), b = random_object(rng, 3), c = random_object(rng, 3);
    auto f = random_morphism<C>(rng, b, c);
    CHECK(approx_equal(compose(f, zero_morphism<C>(a, b)), zero_morphism<C>(a, c), kExact));
    auto g = random_morphism<C>(rng, c, a);
    CHECK(approx_equal(compose(zero_morphism<C>(a, b), g), zero_morphism<C>(c, b), kExact));
  }
}

TEST_CASE("sum of morphisms") {
  const ObjectExpr a = ObjectExpr::gen("A", 2), b = ObjectExpr::gen("B", 3);
  CHECK(approx_equal(oplus(identity<C>(a), identity<C>(b)), identity<C>(ObjectExpr::oplus(a, b)), kExact));
  auto s = oplus(make_scalar<C>(1.0), make_scalar<C>(1i));
  CHECK(approx_equal(s, rows(ObjectExpr::oplus(I, I), ObjectExpr::oplus(I, I), {{1.0, 0.0}, {0.0, 1i}}), kExact));
}

TEST_CASE("distributivity") {
  const ObjectExpr a = ObjectExpr::gen("A", 2), b = ObjectExpr::gen("B", 3), c = ObjectExpr::gen("C", 1);
  auto d = dist_l<C>(a, b, c);
  CHECK(obj_equal(d.dom(), ObjectExpr::tensor(a, ObjectExpr::oplus(b, c))));
  CHECK(obj_equal(d.cod(), ObjectExpr::oplus(ObjectExpr::tensor(a, b), ObjectExpr::tensor(a, c))));
  CHECK(approx_equal(compose(dagger(d), d), identity<C>(d.dom()), kExact));
  // A genuine permutation: every row and column has exactly one 1.
  for (std::size_t r = 0; r < d.rows(); ++r) {
    int ones = 0;
    for (std::size_t col = 0; col < d.cols(); ++col) ones += d(r, col) == 1.0;
    CHECK(ones == 1);
  }
  CHECK_FALSE(approx_equal(d.retyped(d.dom(), d.dom()), identity<C>(d.dom()), kExact));
}

TEST_CASE("pseudo-projections and injections") {
  const ObjectExpr two = ObjectExpr::oplus(I, I);
  OplusDecomposition d({I, I});
  auto m = pseudo_maps<C>(d, 0);
  CHECK(approx_equal(m.p, rows(two, I, {{1.0, 0.0}}), kExact));
  CHECK_THROWS_AS(pseudo_maps<C>(d, 2), IndexOutOfRange);

  Rng rng = trial_rng(4, 1);
  for (int t = 0; t < 200; ++t) {
    auto obj = [&](const char* n) { return object_of_dim(pick(rng, 0, 3), n); };
    const ObjectExpr a = obj("A"), b = obj("B"), c = obj("C"), dd = obj("D");
    auto L = pseudo_maps_left<C>(a, b);
    auto R = pseudo_maps_right<C>(a, b);
    CHECK(approx_equal(compose(L.p, L.q), identity<C>(a), kExact));
    CHECK(approx_equal(compose(L.p, R.q), zero_morphism<C>(b, a), kExact));
    CHECK(approx_equal(dagger(L.q), L.p, kExact));
    CHECK(approx_equal(L.p, compose(pseudo_maps_right<C>(b, a).p, oplus_symmetry<C>(a, b)), kExact));
    auto f = random_morphism<C>(rng, a, b), g = random_morphism<C>(rng, c, dd);
    CHECK(approx_equal(compose(pseudo_maps_left<C>(b, dd).p, oplus(f, g)),
                       compose(f, pseudo_maps_left<C>(a, c).p), kExact));
    const ObjectExpr ab = ObjectExpr::oplus(a, b);
    CHECK(approx_equal(oplus(identity<C>(a), pseudo_maps_left<C>(b, c).p),
                       compose(pseudo_maps_left<C>(ab, c).p, oplus_associator<C>(a, b, c)), kExact));
    CHECK(approx_equal(compose(L.p, pseudo_maps_left<C>(ab, c).p),
                       compose(pseudo_maps_left<C>(a, ObjectExpr::oplus(b, c)).p,
                               dagger(oplus_associator<C>(a, b, c))),
                       kExact));
  }
}

TEST_CASE("block components") {
  Rng rng = trial_rng(4, 2);
  OplusDecomposition dd({ObjectExpr::gen("A", 2), ObjectExpr::gen("B", 1)});
  OplusDecomposition cd({ObjectExpr::gen("C", 3), ObjectExpr::gen("D", 2)});
  auto h = random_morphism<C>(rng, dd.whole, cd.whole);
  CMorphism acc(dd.whole, cd.whole);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      acc = entrywise_sum(acc, compose(pseudo_maps<C>(cd, j).q,
                                       compose(pseudo_component(h, dd, cd, i, j), pseudo_maps<C>(dd, i).p)));
  CHECK(approx_equal(acc, h));

  for (int t = 0; t < 50; ++t) {
    std::vector<std::size_t> dims = {pick(rng, 1, 3), pick(rng, 1, 3), pick(rng, 1, 3)};
    auto u = random_unitary(dims, rng);
    OplusDecomposition d({object_of_dim(dims[0], "A0"), object_of_dim(dims[1], "A1"),
                          object_of_dim(dims[2], "A2")});
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        auto pi_i = compose(pseudo_maps<C>(d, i).p, u);
        auto pi_j = compose(pseudo_maps<C>(d, j).p, u);
        auto want = i == j ? identity<C>(d.parts[i]) : zero_morphism<C>(d.parts[i], d.parts[j]);
        CHECK(approx_equal(compose(pi_j, dagger(pi_i)), want));
      }
  }
}

TEST_CASE("derived sum") {
  Rng rng = trial_rng(4, 3);
  const ObjectExpr two = ObjectExpr::gen("A", 2), three = ObjectExpr::gen("B", 3);
  for (int t = 0; t < 100; ++t) {
    auto f = random_morphism<C>(rng, two, three), g = random_morphism<C>(rng, two, three);
    auto s = derived_sum(f, g);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 2; ++c) CHECK(std::abs(s(r, c) - (f(r, c) + g(r, c))) < 1e-12);
    CHECK(approx_equal(derived_sum(f, zero_morphism<C>(two, three)), f));
  }
  CHECK_THROWS_AS(derived_sum(identity<C>(Q), identity<C>(I)), TypeMismatch);
}

TEST_CASE("sums are not defined on phase classes") {
  auto w = oplus_illdefined_witness(std::numbers::pi / 2);
  CHECK(w.classes_agree);
  CHECK_FALSE(w.sum_classes_agree);
  CHECK_FALSE(w.pair_classes_agree);
  // Every entry where the doubled forms differ, differs by at least 0.5.
  auto differs_enough = [](const CMorphism& a, const CMorphism& b) {
    bool any = false;
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) {
        const double d = std::abs(a(r, c) - b(r, c));
        if (d > 1e-12) {
          any = true;
          if (d < 0.5) return false;
        }
      }
    return any;
  };
  CHECK(differs_enough(w.sum_doubled_phase, w.sum_doubled_plain));
  CHECK(differs_enough(w.pair_doubled_phase, w.pair_doubled_plain));
  // 1 (+) i doubles to diag(1, -i, i, 1).
  CHECK(std::abs(w.sum_doubled_phase(1, 1) - Complex(0.0, -1.0)) < 1e-12);
  CHECK(std::abs(w.sum_doubled_phase(2, 2) - Complex(0.0, 1.0)) < 1e-12);

  auto z = oplus_illdefined_witness(0.0);
  CHECK(z.classes_agree);
  CHECK(z.sum_classes_agree);
  CHECK(z.pair_classes_agree);
}
