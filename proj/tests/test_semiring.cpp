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

// Addition that is not commutative.
struct LopsidedReals : NonnegativeReals {
  static constexpr std::string_view model_name = "lopsided";
  static double add(double a, double b) { return a + 2.0 * b; }
};

std::vector<std::string> failing_checks(const VerificationReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.results)
    if (c.status == Status::Fail) out.push_back(c.check);
  return out;
}

}  // namespace

TEST_CASE("model selectors") {
  CHECK(model_from_key("fdhilb").key == "fdhilb");
  CHECK(model_from_key("rel").name == "Rel");
  CHECK(model_from_key("weights").name == "WeightModel");
  const auto w = model_from_key("wproj:fdhilb");
  CHECK(w.phase_quotient);
  CHECK(w.base_key() == "fdhilb");
  CHECK_THROWS_AS(model_from_key("hilbert"), UnknownModel);
  CHECK_THROWS_AS(model_from_key("wproj:wproj:fdhilb"), UnknownModel);
}

TEST_CASE("semiring laws are checked") {
  CHECK_NOTHROW(semiring_model<ComplexField>(3));
  CHECK_NOTHROW(semiring_model<BooleanSemiring>(3));
  CHECK_NOTHROW(semiring_model<NonnegativeReals>(3));
  CHECK_THROWS_AS(semiring_model<LopsidedReals>(3), SemiringLawViolation);
}

TEST_CASE("scalar structure of each model") {
  // Boolean scalars are exactly {0, 1}.
  CHECK(BooleanSemiring::add(BooleanSemiring::one(), BooleanSemiring::one()) == BooleanSemiring::one());
  CHECK(BooleanSemiring::from_count(5) == BooleanSemiring::one());
  // The weight model has the identity involution, so the adjoint is the transpose.
  const ObjectExpr a = ObjectExpr::gen("A", 2), b = ObjectExpr::gen("B", 3);
  auto f = Morphism<NonnegativeReals>::from_rows(a, b, {{1, 2}, {3, 4}, {5, 6}});
  auto ft = dagger(f);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(ft(c, r) == f(r, c));
  // Complex scalars have nontrivial negatives: -1 != 1.
  CHECK(ComplexField::add(ComplexField::one(), Complex(-1.0)) == ComplexField::zero());
  CHECK(Complex(-1.0) != ComplexField::one());
}

TEST_CASE("trial generators are deterministic") {
  Rng a = trial_rng(42, 7), b = trial_rng(42, 7), c = trial_rng(42, 8);
  const auto x = a(), y = b(), z = c();
  CHECK(x == y);
  CHECK(x != z);
}

TEST_CASE("random unitaries") {
  const auto u1 = random_unitary({1}, 5);
  CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) < 1e-12);

  const auto u = random_unitary({2, 2}, 42);
  CHECK(u.rows() == 4);
  CHECK(u.cols() == 4);
  CHECK(max_entry_distance(compose(dagger(u), u), identity<C>(u.dom())) < 1e-9);
  CHECK(approx_equal(random_unitary({2, 2}, 42), u, Tolerance::exact()));
  CHECK_THROWS_AS(random_unitary({0}, 1), TypeMismatch);
}

TEST_CASE("pairing into a biproduct") {
  const ObjectExpr two = ObjectExpr::oplus(I, I);
  auto one = make_scalar<C>(1.0);
  auto p = pairing<C>({one, one});
  CHECK(obj_equal(p.cod(), two));
  CHECK(approx_equal(p, rows(I, two, {{1.0}, {1.0}}), Tolerance::exact()));

  Rng rng = trial_rng(1, 1);
  for (int t = 0; t < 50; ++t) {
    const ObjectExpr c = random_object(rng, 3);
    auto f1 = random_morphism<C>(rng, c, random_object(rng, 3));
    auto f2 = random_morphism<C>(rng, c, random_object(rng, 3));
    auto f3 = random_morphism<C>(rng, c, random_object(rng, 3));
    auto pr = pairing<C>({f1, f2, f3});
    OplusDecomposition d({f1.cod(), f2.cod(), f3.cod()});
    CHECK(approx_equal(compose(biproduct_projection<C>(d, 0), pr), f1, Tolerance::exact()));
    CHECK(approx_equal(compose(biproduct_projection<C>(d, 1), pr), f2, Tolerance::exact()));
    CHECK(approx_equal(compose(biproduct_projection<C>(d, 2), pr), f3, Tolerance::exact()));
  }
  CHECK_THROWS_AS(pairing<C>({one, identity<C>(Q)}), TypeMismatch);

  // <1, i> is not a phase multiple of <1, 1>.
  auto pi = pairing<C>({one, make_scalar<C>(1i)});
  for (int k = 0; k < 64; ++k) {
    const Complex u = std::polar(1.0, 2.0 * std::numbers::pi * k / 64.0);
    CHECK(max_entry_distance(pi, scaled(u, p)) > 0.5);
  }
  CHECK_FALSE(wequal(lift(pi), lift(p)));
}

TEST_CASE("model axiom suites") {
  SUBCASE("complex matrices, dims up to 6") {
    auto r = verify_model_axioms<ComplexField>(6, 200, 0);
    CHECK(failing_checks(r).empty());
    CHECK(r.ok());
  }
  SUBCASE("boolean matrices") {
    auto r = verify_model_axioms<BooleanSemiring>(6, 200, 0);
    CHECK(failing_checks(r).empty());
  }
  SUBCASE("weight matrices") {
    auto r = verify_model_axioms<NonnegativeReals>(6, 100, 0);
    CHECK(failing_checks(r).empty());
  }
  SUBCASE("corrupted involution is caught") {
    auto r = verify_model_axioms<UnconjugatedComplex>(4, 50, 0);
    auto fails = failing_checks(r);
    CHECK_FALSE(r.ok());
    CHECK(std::find(fails.begin(), fails.end(), "sampled-unitaries") != fails.end());
    CHECK(std::find(fails.begin(), fails.end(), "hs-norm-positive") != fails.end());
    for (const auto& c : r.results)
      if (c.status == Status::Fail) CHECK_FALSE(c.witness.empty());
  }
}
