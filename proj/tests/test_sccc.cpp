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

TEST_CASE("composition") {
  Rng rng = trial_rng(2, 0);
  auto f = random_morphism<C>(rng, Q, ObjectExpr::gen("B", 3));
  CHECK(approx_equal(compose(f, identity<C>(Q)), f, Tolerance::exact()));
  CHECK(approx_equal(compose(identity<C>(f.cod()), f), f, Tolerance::exact()));

  const double r = 1.0 / std::sqrt(2.0);
  auto psi = rows(I, Q, {{r}, {r}});
  CHECK(std::abs(compose(dagger(psi), psi).value() - 1.0) < 1e-15);

  auto x = rows(Q, Q, {{0.0, 1.0}, {1.0, 0.0}});
  auto e0 = rows(I, Q, {{1.0}, {0.0}});
  CHECK(approx_equal(compose(x, e0), rows(I, Q, {{0.0}, {1.0}}), Tolerance::exact()));
  CHECK_THROWS_AS(compose(x, f), TypeMismatch);
}

TEST_CASE("tensor") {
  CHECK(approx_equal(tensor(identity<C>(Q), identity<C>(Q)), identity<C>(ObjectExpr::tensor(Q, Q)),
                     Tolerance::exact()));
  auto a = make_scalar<C>(2.0 + 1i), b = make_scalar<C>(3.0 - 2i);
  CHECK(tensor(a, b).value() == (2.0 + 1i) * (3.0 - 2i));

  Rng rng = trial_rng(2, 1);
  for (int t = 0; t < 20; ++t) {
    auto f = random_morphism<C>(rng, Q, Q), g = random_morphism<C>(rng, Q, Q);
    auto h = random_morphism<C>(rng, Q, Q), k = random_morphism<C>(rng, Q, Q);
    CHECK(approx_equal(compose(tensor(f, g), tensor(h, k)), tensor(compose(f, h), compose(g, k))));
  }
  // Left factor major.
  auto f = rows(I, Q, {{1.0}, {2.0}});
  auto g = rows(I, Q, {{3.0}, {5.0}});
  auto fg = tensor(f, g);
  CHECK(fg(0, 0) == 3.0);
  CHECK(fg(1, 0) == 5.0);
  CHECK(fg(2, 0) == 6.0);
  CHECK(fg(3, 0) == 10.0);
}

TEST_CASE("adjoint and duals") {
  CHECK(dagger(make_scalar<C>(1i)).value() == -1i);
  Rng rng = trial_rng(2, 2);
  for (int t = 0; t < 20; ++t) {
    auto u = random_unitary({3}, rng);
    CHECK(approx_equal(compose(dagger(u), u), identity<C>(u.dom())));
    auto f = random_morphism<C>(rng, random_object(rng, 4), random_object(rng, 4));
    CHECK(approx_equal(dagger(dagger(f)), f, Tolerance::exact()));
    CHECK(approx_equal(star(star(f)), f, Tolerance::exact()));
    CHECK(obj_equal(star(f).dom(), dual_of(f.cod())));
  }
  auto n = rows(Q, Q, {{0.0, 1.0}, {0.0, 0.0}});
  auto ns = star(n);
  CHECK(obj_equal(ns.dom(), ObjectExpr::dual(Q)));
  CHECK(obj_equal(ns.cod(), ObjectExpr::dual(Q)));
  CHECK(approx_equal(ns, rows(ns.dom(), ns.cod(), {{0.0, 0.0}, {1.0, 0.0}}), Tolerance::exact()));
  // lower star conjugates entrywise.
  auto z = rows(I, Q, {{1i}, {2.0}});
  CHECK(lower_star(z)(0, 0) == -1i);
}

TEST_CASE("unit and names") {
  auto eta = unit<C>(Q);
  CHECK(obj_equal(eta.cod(), ObjectExpr::tensor(ObjectExpr::dual(Q), Q)));
  std::vector<Complex> want = {1.0, 0.0, 0.0, 1.0};
  for (std::size_t i = 0; i < 4; ++i) CHECK(eta(i, 0) == want[i]);
  CHECK(unit<C>(I).value() == 1.0);

  // eta of a dual is the symmetry after eta.
  for (std::size_t d = 1; d <= 4; ++d) {
    const ObjectExpr a = ObjectExpr::gen("A", d);
    CHECK(approx_equal(unit<C>(dual_of(a)), compose(sigma<C>(dual_of(a), a), unit<C>(a))));
  }

  CHECK(approx_equal(name(identity<C>(Q)), eta, Tolerance::exact()));
  auto f = rows(Q, Q, {{1.0, 2.0}, {3.0, 4.0}});
  auto nf = name(f);
  std::vector<Complex> col = {1.0, 3.0, 2.0, 4.0};
  for (std::size_t i = 0; i < 4; ++i) CHECK(nf(i, 0) == col[i]);
  CHECK(name(make_scalar<C>(1.0)).value() == 1.0);

  // Both unfoldings agree on random morphisms.
  Rng rng = trial_rng(2, 3);
  for (int t = 0; t < 50; ++t) {
    auto g = random_morphism<C>(rng, random_object(rng, 4), random_object(rng, 4));
    CHECK(approx_equal(name_by_definition(MatrixCategory<C>{}, g), name_by_absorption(MatrixCategory<C>{}, g)));
  }
}

TEST_CASE("scalar multiplication") {
  Rng rng = trial_rng(2, 4);
  const ObjectExpr a = ObjectExpr::gen("A", 2), b = ObjectExpr::gen("B", 3);
  auto f = random_morphism<C>(rng, a, b);
  CHECK(approx_equal(scalar_mult(make_scalar<C>(1.0), f), f, Tolerance::exact()));
  for (int t = 0; t < 50; ++t) {
    auto s = random_morphism<C>(rng, I, I), u = random_morphism<C>(rng, I, I);
    auto g = random_morphism<C>(rng, b, a), h = random_morphism<C>(rng, a, b);
    CHECK(approx_equal(compose(scalar_mult(s, g), scalar_mult(u, h)),
                       scalar_mult(compose(s, u), compose(g, h))));
    CHECK(approx_equal(tensor(scalar_mult(s, g), scalar_mult(u, h)),
                       scalar_mult(compose(s, u), tensor(g, h))));
  }
}

TEST_CASE("bipartite projectors") {
  auto p1 = bipartite_projector(make_scalar<C>(1.0));
  CHECK(p1.value() == 1.0);
  auto p = bipartite_projector(identity<C>(Q));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const bool corner = (r == 0 || r == 3) && (c == 0 || c == 3);
      CHECK(p(r, c) == (corner ? 1.0 : 0.0));
    }
}

TEST_CASE("trace") {
  const ObjectExpr two = ObjectExpr::oplus(I, I);
  CHECK(trace(identity<C>(two)).value() == 2.0);
  CHECK_THROWS_AS(trace(rows(Q, I, {{1.0, 0.0}})), NotEndomorphism);
  for (std::size_t d = 1; d <= 3; ++d) {
    const ObjectExpr a = ObjectExpr::gen("A", d);
    CHECK(approx_equal(partial_trace(sigma<C>(a, a), a), identity<C>(a)));
  }
  Rng rng = trial_rng(2, 5);
  for (std::size_t d = 1; d <= 3; ++d) {
    const ObjectExpr a = ObjectExpr::gen("A", d);
    auto g = random_morphism<C>(rng, Q, ObjectExpr::gen("B", 3));
    CHECK(approx_equal(partial_trace(tensor(identity<C>(a), g), a),
                       scaled(Complex(static_cast<double>(d)), g)));
  }
  // Index-sum oracle for the full trace.
  auto h = random_morphism<C>(rng, ObjectExpr::gen("A", 4), ObjectExpr::gen("A", 4));
  Complex sum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) sum += h(i, i);
  CHECK(std::abs(trace(h).value() - sum) < 1e-12);
  CHECK(approx_equal(partial_trace(h, h.dom()), trace(h)));
}

TEST_CASE("Hilbert-Schmidt inner product") {
  CHECK(hs_norm_sq(rows(Q, Q, {{1.0, 2.0}, {3.0, 4.0}})).value() == 30.0);
  Rng rng = trial_rng(2, 6);
  for (int t = 0; t < 200; ++t) {
    const ObjectExpr a = random_object(rng, 4), b = random_object(rng, 4);
    auto f = random_integer_morphism<C>(rng, a, b);
    auto g = random_integer_morphism<C>(rng, a, b);
    CHECK(approx_equal(hs_inner(f, g), trace(compose(dagger(f), g)), Tolerance::exact()));
    auto psi = random_morphism<C>(rng, I, a), phi = random_morphism<C>(rng, I, a);
    CHECK(approx_equal(hs_inner(psi, phi), compose(dagger(psi), phi)));
  }
  CHECK_THROWS_AS(hs_inner(identity<C>(Q), identity<C>(I)), TypeMismatch);
}

TEST_CASE("doubled forms and phases") {
  Rng rng = trial_rng(2, 7);
  auto f = random_morphism<C>(rng, ObjectExpr::gen("A", 2), ObjectExpr::gen("B", 3));
  const auto df = doubled(f);
  CHECK(df.rows() == 6);
  CHECK(df.cols() == 6);
  CHECK(obj_equal(df.dom(), ObjectExpr::tensor(f.dom(), f.cod())));
  CHECK(obj_equal(df.cod(), ObjectExpr::tensor(f.cod(), f.dom())));
  for (double th : {std::numbers::pi / 2, std::numbers::pi, 0.7345})
    CHECK(approx_equal(doubled(scaled(std::polar(1.0, th), f)), df));
  const ObjectExpr a = ObjectExpr::gen("A", 2);
  CHECK(approx_equal(doubled(CMorphism(a, a)), CMorphism(ObjectExpr::tensor(a, a), ObjectExpr::tensor(a, a))));
}

TEST_CASE("phase witnesses") {
  Rng rng = trial_rng(2, 8);
  auto f = random_morphism<C>(rng, Q, Q);
  const double n = hs_norm_sq(f).value().real();
  auto w = phase_witnesses(f, scaled(1i, f));
  CHECK(std::abs(w.s.value() - n) < 1e-9 * n);
  CHECK(std::abs(w.t.value() - Complex(0.0, -n)) < 1e-9 * n);
  CHECK(approx_equal(scalar_mult(w.s, f), scalar_mult(w.t, scaled(1i, f))));

  auto same = phase_witnesses(f, f);
  CHECK(approx_equal(same.s, same.t));
  CHECK(std::abs(same.s.value() - n) < 1e-9 * n);

  for (int t = 0; t < 500; ++t) {
    auto g = random_morphism<C>(rng, random_object(rng, 3), random_object(rng, 3));
    auto h = scaled(random_phase(rng), g);
    auto x = phase_witnesses(g, h);
    CHECK(approx_equal(scalar_mult(x.s, g), scalar_mult(x.t, h)));
    CHECK(approx_equal(compose(x.s, dagger(x.s)), compose(x.t, dagger(x.t))));
  }
  CHECK_THROWS_AS(phase_witnesses(f, scaled(Complex(2.0), f)), NotPhaseEquivalent);
}

TEST_CASE("densities and Born probabilities") {
  auto p0 = rows(Q, Q, {{1.0, 0.0}, {0.0, 0.0}});
  CHECK(std::abs(born_prob(rows(I, Q, {{1.0}, {0.0}}), p0).value() - 1.0) < 1e-15);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(born_prob(rows(I, Q, {{r}, {r}}), p0).value() - 0.5) < 1e-15);
  CHECK_THROWS_AS(born_prob(rows(I, Q, {{r}, {r}}), rows(Q, Q, {{1.0, 1.0}, {0.0, 0.0}})), NotProjector);

  Rng rng = trial_rng(2, 9);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::size_t> dims = {pick(rng, 1, 3), pick(rng, 1, 3)};
    auto u = random_unitary(dims, rng);
    OplusDecomposition d({object_of_dim(dims[0], "A0"), object_of_dim(dims[1], "A1")});
    auto pi = compose(biproduct_projection<C>(d, 0), u);
    auto proj = compose(dagger(pi), pi);
    auto psi = random_morphism<C>(rng, I, u.dom());
    auto rho = density(MatrixCategory<C>{}, psi);
    CHECK(approx_equal(rho, density_via_tensor(MatrixCategory<C>{}, psi)));
    CHECK(approx_equal(born_prob(psi, proj), trace(compose(proj, rho))));
  }
}
