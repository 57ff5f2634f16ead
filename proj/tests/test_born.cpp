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
const MatrixCategory<C> kCat;
const Rational kOne{1, 1};
const Rational kHalf{1, 2};
}  // namespace

TEST_CASE("valuation exponents") {
  CHECK(Rational::parse("1") == Rational{1, 1});
  CHECK(Rational::parse("1/2") == Rational{1, 2});
  CHECK(Rational::parse("2").value() == 2.0);
  CHECK(Rational::parse("1/2").to_string() == "1/2");
  CHECK_THROWS_AS(Rational::parse("0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("-1"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
}

TEST_CASE("abstract integers") {
  const auto one = make_scalar<C>(1.0);
  const auto two = scalar_sum(one, one, kOne);
  CHECK(std::abs(two.value() - 2.0) <= 1e-12);
  CHECK(std::abs(two.value() - trace(identity<C>(ObjectExpr::oplus(I, I))).value()) <= 1e-12);
  const auto root_two = scalar_sum(one, one, kHalf);
  CHECK(std::abs(root_two.value() - std::sqrt(2.0)) <= 1e-12);
  CHECK(std::abs(scalar_sum(one, one, Rational{2, 1}).value() - 4.0) <= 1e-12);

  Rng rng = trial_rng(5, 0);
  auto s = valuation(random_morphism<C>(rng, Q, Q), kOne);
  CHECK(approx_equal(scalar_sum(make_scalar<C>(0.0), s, kOne), s));
  CHECK_THROWS_AS(scalar_power(make_scalar<C>(-1.0), 0.5), RootUnavailable);
}

TEST_CASE("branch valuations add up") {
  Rng rng = trial_rng(5, 1);
  OplusDecomposition d({ObjectExpr::gen("B", 2), ObjectExpr::gen("C", 2)});
  const ObjectExpr a = ObjectExpr::gen("A", 3);
  for (int t = 0; t < 100; ++t) {
    auto f = random_morphism<C>(rng, a, d.whole);
    double n1 = 0, n2 = 0;
    for (std::size_t c = 0; c < 3; ++c) {
      for (std::size_t r = 0; r < 2; ++r) n1 += std::norm(f(r, c));
      for (std::size_t r = 2; r < 4; ++r) n2 += std::norm(f(r, c));
    }
    CHECK(std::abs(hs_norm_sq(f).value().real() - (n1 + n2)) < 1e-9 * (n1 + n2));
    CHECK(born_decomposition(kCat, f, d, kOne).holds);
    CHECK(born_decomposition(kCat, f, d, kHalf).holds);
  }
  auto f1 = random_morphism<C>(rng, a, d.parts[0]);
  auto f = pairing<C>({f1, CMorphism(a, d.parts[1])});
  CHECK(approx_equal(valuation(f1, kOne), valuation(f.retyped(a, d.whole), kOne)));
  CHECK(born_decomposition(kCat, f.retyped(a, d.whole), d, kOne).holds);
}

TEST_CASE("positivity") {
  Rng rng = trial_rng(5, 2);
  for (int t = 0; t < 50; ++t) {
    auto f = random_morphism<C>(rng, random_object(rng, 4), random_object(rng, 4));
    auto h = compose(dagger(f), f);
    auto p = is_positive(h);
    CHECK(p.positive);
    REQUIRE(p.witness);
    CHECK(approx_equal(compose(dagger(*p.witness), *p.witness), h));
  }
  CHECK_FALSE(is_positive(rows(Q, Q, {{1.0, 0.0}, {0.0, -1.0}})).positive);
  auto z = is_positive(CMorphism(Q, Q));
  CHECK(z.positive);
  REQUIRE(z.witness);
  CHECK(approx_equal(*z.witness, CMorphism(Q, Q), Tolerance::exact()));

  using W = NonnegativeReals;
  const ObjectExpr a = ObjectExpr::gen("A", 2);
  auto hw = Morphism<W>::from_rows(a, a, {{2.0, 1.0}, {1.0, 1.0}});
  CHECK(is_positive(hw).positive);
  auto bad = Morphism<W>::from_rows(a, a, {{0.0, 1.0}, {1.0, 0.0}});
  CHECK_FALSE(is_positive(bad).positive);

  using B = BooleanSemiring;
  auto hb = Morphism<B>::from_rows(a, a, {{Bit{true}, Bit{true}}, {Bit{true}, Bit{true}}});
  CHECK(is_positive(hb).positive);
  auto nb = Morphism<B>::from_rows(a, a, {{Bit{false}, Bit{true}}, {Bit{true}, Bit{false}}});
  CHECK_FALSE(is_positive(nb).positive);
}

TEST_CASE("pseudo-diagonals") {
  Rng rng = trial_rng(5, 3);
  OplusDecomposition d({ObjectExpr::gen("A", 2), ObjectExpr::gen("B", 3)});
  auto h = random_morphism<C>(rng, d.whole, d.whole);
  CHECK(approx_equal(trace(pseudo_diagonal(h, d)), trace(h)));
  auto block = oplus(random_morphism<C>(rng, d.parts[0], d.parts[0]),
                     random_morphism<C>(rng, d.parts[1], d.parts[1]));
  CHECK(approx_equal(pseudo_diagonal(block, d), block, Tolerance::exact()));
  auto off = h;
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c)
      if ((r < 2) == (c < 2)) off(r, c) = 0.0;
  CHECK(approx_equal(pseudo_diagonal(off, d), CMorphism(d.whole, d.whole), Tolerance::exact()));
}

TEST_CASE("trace axioms") {
  Rng rng = trial_rng(5, 4);
  const auto tr = standard_trace<C>();
  const auto bad = corrupted_trace<C>();
  const ObjectExpr a = ObjectExpr::gen("A", 2);
  OplusDecomposition d({a, a});
  for (int t = 0; t < 50; ++t) {
    auto g = random_morphism<C>(rng, d.whole, ObjectExpr::gen("B", 3));
    auto h = compose(dagger(g), g);
    Complex diag = 0.0;
    for (std::size_t i = 0; i < 4; ++i) diag += h(i, i);
    CHECK(std::abs(trace(h).value() - diag) < 1e-9 * std::abs(diag));
    CHECK(diagonal_axiom(kCat, h, d, tr).holds);
    CHECK(ortho_bornian_positive(kCat, h, d, tr).holds);
    auto h2 = compose(dagger(g), g);
    CHECK(trace_linearity(kCat, h, CMorphism(h.dom(), h.cod()), tr).holds);
    CHECK(trace_linearity(kCat, h, h2, tr).holds);
    CHECK(trace_sum_vs_oplus(kCat, h, h2, tr).holds);
    auto f = random_morphism<C>(rng, a, d.whole);
    CHECK(ortho_bornian_norm(kCat, f, d, tr).holds);

    // The broken trace breaks the axioms tied to the diagonal split but not
    // linearity.
    CHECK_FALSE(diagonal_axiom(kCat, h, d, bad).holds);
    CHECK_FALSE(ortho_bornian_positive(kCat, h, d, bad).holds);
    CHECK(trace_linearity(kCat, h, h2, bad).holds);
  }
}

TEST_CASE("born and equivalence suites") {
  for (const char* model : {"fdhilb", "wproj:fdhilb", "weights", "rel"})
    for (const char* nu : {"1", "1/2", "2"}) {
      SuiteOptions o;
      o.suite = "born";
      o.model = model;
      o.nu = nu;
      o.trials = 50;
      o.seed = 3;
      auto r = run_suite(o);
      for (const auto& c : r.results) {
        INFO(model << " nu=" << nu << " " << c.check << ": " << c.detail);
        CHECK(c.status == Status::Pass);
      }
    }
  for (const char* model : {"fdhilb", "wproj:fdhilb", "weights", "rel"})
    for (bool corrupt : {false, true}) {
      SuiteOptions o;
      o.suite = "equivalence";
      o.model = model;
      o.corrupt_trace = corrupt;
      o.trials = 100;
      o.seed = 3;
      auto r = run_suite(o);
      INFO(model << (corrupt ? " corrupted" : ""));
      CHECK(r.ok());
      REQUIRE(r.results.size() == 4);
      const Status broken = corrupt ? Status::ExpectedFail : Status::Pass;
      CHECK(r.results[0].status == broken);
      CHECK(r.results[1].status == broken);
      CHECK(r.results[2].status == Status::Pass);
      CHECK(r.results[3].status == Status::Pass);
    }
}
