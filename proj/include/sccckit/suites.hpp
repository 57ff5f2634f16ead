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

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sccckit/born.hpp"
#include "sccckit/models.hpp"
#include "sccckit/protocols.hpp"
#include "sccckit/report.hpp"
#include "sccckit/wproj.hpp"

namespace sccckit {

/// Parameters of a verification run.
struct SuiteOptions {
  std::string suite = "sccc";
  std::string model = "fdhilb";
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  std::size_t max_dim = 6;
  std::string nu = "1";
  bool corrupt_trace = false;
  std::string state;  // teleport input, empty for random states

  Tolerance tol() const { return {tolerance, 1e-12}; }
};

/// Known suite names.
const std::vector<std::string>& suite_names();

/// Runs a named suite. Throws UnknownSuite / UnknownModel.
VerificationReport run_suite(const SuiteOptions& opts);

//============================================================================
// Sampling harness
//============================================================================

/// Failure of a single sample: what went wrong and the morphisms involved.
struct SampleFailure {
  std::string what;
  std::vector<Witness> witness;
};

using SampleOutcome = std::optional<SampleFailure>;

inline SampleOutcome holds() { return std::nullopt; }

template <InvolutiveSemiring S>
Witness witness_arrow(std::string label, const Morphism<S>& f) {
  return witness_of(std::move(label), f);
}

template <InvolutiveSemiring S>
Witness witness_arrow(std::string label, const WMorphism<S>& f) {
  return witness_of(std::move(label), f.rep());
}

inline SampleOutcome violated(std::string what, std::vector<Witness> w = {}) {
  return SampleFailure{std::move(what), std::move(w)};
}

/// Runs `count` seeded samples of one check. Sample t draws from
/// trial_rng(seed, stream * 2^32 + t), so checks do not share streams.
/// Library errors raised by a sample count as violations.
CheckResult run_samples(const std::string& check, const std::string& statement, std::size_t count,
                        std::uint64_t seed, std::uint64_t stream,
                        const std::function<SampleOutcome(Rng&, std::size_t)>& sample);

/// A single deterministic check.
CheckResult run_once(const std::string& check, const std::string& statement,
                     const std::function<SampleOutcome()>& body);

/// Turns a result whose violation is the expected outcome into
/// expected-fail, and an unexpected success into a failure.
CheckResult expect_violation(CheckResult r);

/// Helper that numbers the checks of a suite so each gets its own stream.
class SuiteBuilder {
 public:
  SuiteBuilder(VerificationReport& report, std::uint64_t seed) : report_(report), seed_(seed) {}

  CheckResult& sampled(const std::string& check, const std::string& statement, std::size_t count,
                       const std::function<SampleOutcome(Rng&, std::size_t)>& sample) {
    return report_.add(run_samples(check, statement, count, seed_, ++stream_, sample));
  }
  CheckResult& once(const std::string& check, const std::string& statement,
                    const std::function<SampleOutcome()>& body) {
    ++stream_;
    return report_.add(run_once(check, statement, body));
  }
  CheckResult& add(CheckResult r) {
    ++stream_;
    return report_.add(std::move(r));
  }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_stream() { return ++stream_; }

 private:
  VerificationReport& report_;
  std::uint64_t seed_;
  std::uint64_t stream_ = 0;
};

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, std::max(lo, hi))(rng);
}

template <class C>
typename C::Arrow random_arrow(const C& cat, Rng& rng, const ObjectExpr& dom,
                               const ObjectExpr& cod) {
  return embed_of(cat, random_morphism<typename C::semiring>(rng, dom, cod));
}

template <class C>
SampleOutcome expect_equal(const C& cat, const std::string& what, const typename C::Arrow& lhs,
                           const typename C::Arrow& rhs, const Tolerance& tol) {
  if (cat.equal(lhs, rhs, tol)) return holds();
  return violated(what, {witness_arrow("lhs", lhs), witness_arrow("rhs", rhs)});
}

//============================================================================
// Strongly compact closed structure (any model, any category)
//============================================================================

/// Every structural law of the compact structure, sampled on random objects
/// of dimension <= max_dim. Products of three dimensions are kept <= 64.
template <DaggerCompactCategory C>
void sccc_axiom_checks(const C& cat, SuiteBuilder& b, std::size_t trials, std::size_t max_dim,
                       const Tolerance& tol) {
  using Arrow = typename C::Arrow;
  const std::size_t md = std::max<std::size_t>(1, max_dim);
  auto obj = [md](Rng& rng) { return random_object(rng, md); };
  auto obj_upto = [](Rng& rng, std::size_t d) { return random_object(rng, std::max<std::size_t>(1, d)); };

  b.sampled("yanking", "snake equation through the unit and its dual holds, dims 1..max-dim",
            md + trials, [&](Rng& rng, std::size_t t) -> SampleOutcome {
              const ObjectExpr a = t < md ? ObjectExpr::gen("A", t + 1) : obj(rng);
              const ObjectExpr ad = dual_of(a);
              Arrow x = cat.rho(a);
              x = cat.compose(cat.tensor(cat.identity(a), cat.unit(a)), x);
              x = cat.compose(cat.alpha(a, ad, a), x);
              x = cat.compose(cat.tensor(cat.dagger(cat.unit(ad)), cat.identity(a)), x);
              x = cat.compose(cat.dagger(cat.lambda(a)), x);
              return expect_equal(cat, "yanking on " + to_string(a), x, cat.identity(a), tol);
            });

  b.sampled("coherence-unitary", "unitors, associator, symmetry and u_I are unitary", trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = obj(rng);
              const ObjectExpr bb = obj_upto(rng, std::min(md, 64 / dim(a)));
              const ObjectExpr c = obj_upto(rng, std::min(md, 64 / (dim(a) * dim(bb))));
              for (const Arrow& iso : {cat.lambda(a), cat.rho(a), cat.alpha(a, bb, c),
                                       cat.sigma(a, bb), cat.u_unit()})
                if (!is_unitary(cat, iso, tol))
                  return violated("coherence isomorphism is not unitary",
                                  {witness_arrow("iso", iso)});
              return holds();
            });

  b.sampled("unit-dual-coherence", "the unit of a dual is the symmetry after the unit", trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = obj(rng);
              return expect_equal(cat, "eta of dual", cat.unit(dual_of(a)),
                                  cat.compose(cat.sigma(dual_of(a), a), cat.unit(a)), tol);
            });

  b.sampled("symmetry-involutive", "swapping twice is the identity", trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = obj(rng);
              const ObjectExpr bb = obj_upto(rng, std::min(md, 64 / dim(a)));
              return expect_equal(cat, "sigma o sigma",
                                  cat.compose(cat.sigma(bb, a), cat.sigma(a, bb)),
                                  cat.identity(ObjectExpr::tensor(a, bb)), tol);
            });

  b.sampled("symmetry-natural", "the symmetry is natural in both arguments", trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = obj(rng), a2 = obj(rng);
              const ObjectExpr c = obj_upto(rng, std::min(md, 64 / std::max(dim(a), dim(a2))));
              const ObjectExpr c2 = obj_upto(rng, std::min(md, 64 / std::max(dim(a), dim(a2))));
              auto f = random_arrow(cat, rng, a, a2);
              auto g = random_arrow(cat, rng, c, c2);
              return expect_equal(cat, "sigma naturality",
                                  cat.compose(cat.sigma(a2, c2), cat.tensor(f, g)),
                                  cat.compose(cat.tensor(g, f), cat.sigma(a, c)), tol);
            });

  b.sampled("interchange", "tensor is a bifunctor: (f@g)(h@k) = fh @ gk", trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const std::size_t d1 = pick(rng, 1, md), d2 = pick(rng, 1, md), d3 = pick(rng, 1, md);
              const std::size_t cap = std::max<std::size_t>(1, std::min(md, 64 / std::max({d1, d2, d3})));
              const ObjectExpr a = ObjectExpr::gen("A", d1), a2 = ObjectExpr::gen("B", d2),
                               a3 = ObjectExpr::gen("C", d3);
              const ObjectExpr e = ObjectExpr::gen("D", pick(rng, 1, cap)),
                               e2 = ObjectExpr::gen("E", pick(rng, 1, cap)),
                               e3 = ObjectExpr::gen("F", pick(rng, 1, cap));
              auto h = random_arrow(cat, rng, a, a2);
              auto f = random_arrow(cat, rng, a2, a3);
              auto k = random_arrow(cat, rng, e, e2);
              auto g = random_arrow(cat, rng, e2, e3);
              return expect_equal(cat, "interchange",
                                  cat.compose(cat.tensor(f, g), cat.tensor(h, k)),
                                  cat.tensor(cat.compose(f, h), cat.compose(g, k)), tol);
            });

  b.sampled("category-laws", "identities are units and composition is associative", trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = obj(rng), a2 = obj(rng), a3 = obj(rng), a4 = obj(rng);
              auto f = random_arrow(cat, rng, a, a2);
              auto g = random_arrow(cat, rng, a2, a3);
              auto h = random_arrow(cat, rng, a3, a4);
              if (auto o = expect_equal(cat, "left identity", cat.compose(cat.identity(a2), f), f, tol)) return o;
              if (auto o = expect_equal(cat, "right identity", cat.compose(f, cat.identity(a)), f, tol)) return o;
              return expect_equal(cat, "associativity", cat.compose(h, cat.compose(g, f)),
                                  cat.compose(cat.compose(h, g), f), tol);
            });

  b.sampled("dagger-functor", "adjoint is involutive, contravariant and monoidal", trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = obj(rng), a2 = obj(rng), a3 = obj(rng);
              auto f = random_arrow(cat, rng, a, a2);
              auto g = random_arrow(cat, rng, a2, a3);
              if (auto o = expect_equal(cat, "dagger involutive", cat.dagger(cat.dagger(f)), f, tol)) return o;
              if (auto o = expect_equal(cat, "dagger contravariant", cat.dagger(cat.compose(g, f)),
                                        cat.compose(cat.dagger(f), cat.dagger(g)), tol))
                return o;
              const ObjectExpr c = obj_upto(rng, std::min(md, 64 / std::max(dim(a), dim(a2))));
              auto k = random_arrow(cat, rng, c, c);
              return expect_equal(cat, "dagger monoidal", cat.dagger(cat.tensor(f, k)),
                                  cat.tensor(cat.dagger(f), cat.dagger(k)), tol);
            });

  b.sampled("dagger-decomposes", "adjoint is the transpose of the conjugate and vice versa",
            trials, [&](Rng& rng, std::size_t) -> SampleOutcome {
              auto f = random_arrow(cat, rng, obj(rng), obj(rng));
              if (auto o = expect_equal(cat, "star of lower star", cat.star(cat.lower_star(f)),
                                        cat.dagger(f), tol))
                return o;
              return expect_equal(cat, "lower star of star", cat.lower_star(cat.star(f)),
                                  cat.dagger(f), tol);
            });

  b.sampled("scalar-composition", "(s.f) o (t.g) = (s o t).(f o g)", trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr i = ObjectExpr::unit();
              auto s = random_arrow(cat, rng, i, i);
              auto t = random_arrow(cat, rng, i, i);
              const ObjectExpr a = obj(rng), a2 = obj(rng), a3 = obj(rng);
              auto g = random_arrow(cat, rng, a, a2);
              auto f = random_arrow(cat, rng, a2, a3);
              return expect_equal(cat, "scalars through composition",
                                  cat.compose(scalar_mult(cat, s, f), scalar_mult(cat, t, g)),
                                  scalar_mult(cat, cat.compose(s, t), cat.compose(f, g)), tol);
            });

  b.sampled("scalar-tensor", "(s.f) @ (t.g) = (s o t).(f @ g)", trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr i = ObjectExpr::unit();
              auto s = random_arrow(cat, rng, i, i);
              auto t = random_arrow(cat, rng, i, i);
              const ObjectExpr a = obj(rng), a2 = obj(rng);
              const std::size_t cap = std::max<std::size_t>(1, std::min(md, 64 / std::max(dim(a), dim(a2))));
              const ObjectExpr c = obj_upto(rng, cap), c2 = obj_upto(rng, cap);
              auto f = random_arrow(cat, rng, a, a2);
              auto g = random_arrow(cat, rng, c, c2);
              return expect_equal(cat, "scalars through tensor",
                                  cat.tensor(scalar_mult(cat, s, f), scalar_mult(cat, t, g)),
                                  scalar_mult(cat, cat.compose(s, t), cat.tensor(f, g)), tol);
            });

  b.sampled("scalar-unit", "1.f = f and scalars commute", trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr i = ObjectExpr::unit();
              auto f = random_arrow(cat, rng, obj(rng), obj(rng));
              if (auto o = expect_equal(cat, "unit scalar", scalar_mult(cat, cat.identity(i), f), f, tol)) return o;
              auto s = random_arrow(cat, rng, i, i);
              auto t = random_arrow(cat, rng, i, i);
              return expect_equal(cat, "scalar commutativity", cat.compose(s, t), cat.compose(t, s), tol);
            });

  b.sampled("name-unfoldings", "both unfoldings of a name agree; name of the identity is the unit",
            trials, [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = obj(rng);
              auto f = random_arrow(cat, rng, a, obj(rng));
              if (auto o = expect_equal(cat, "unfoldings", name_by_definition(cat, f),
                                        name_by_absorption(cat, f), tol))
                return o;
              return expect_equal(cat, "name of identity", name(cat, cat.identity(a), tol),
                                  cat.unit(a), tol);
            });

  b.sampled("trace-of-symmetry", "partial trace of the symmetry is the identity, dims 1..3",
            std::max<std::size_t>(3, trials / 10), [&](Rng&, std::size_t t) -> SampleOutcome {
              const ObjectExpr a = ObjectExpr::gen("A", t % 3 + 1);
              return expect_equal(cat, "yanking for the trace", partial_trace(cat, cat.sigma(a, a), a),
                                  cat.identity(a), tol);
            });

  b.sampled("hs-inner-is-trace", "Hilbert-Schmidt inner product equals Tr(f^dagger g)", trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = obj(rng), a2 = obj(rng);
              auto f = random_arrow(cat, rng, a, a2);
              auto g = random_arrow(cat, rng, a, a2);
              return expect_equal(cat, "inner product vs trace", hs_inner(cat, f, g, tol),
                                  trace(cat, cat.compose(cat.dagger(f), g)), tol);
            });
}

/// Checks that only make sense for complex-valued matrix models: sampled
/// unitaries stay unitary under the model's adjoint and the squared norm is
/// positive definite.
template <ComplexValued S>
void complex_model_checks(SuiteBuilder& b, std::size_t trials, std::size_t max_dim,
                          const Tolerance& tol) {
  MatrixCategory<S> cat;
  const std::size_t md = std::max<std::size_t>(1, max_dim);
  b.sampled("sampled-unitaries", "orthonormalized random matrices are unitary for the adjoint",
            trials, [&](Rng& rng, std::size_t) -> SampleOutcome {
              const std::size_t n = pick(rng, 1, md);
              CMorphism u = random_unitary({n}, rng);
              Morphism<S> us(u.dom(), u.cod(), std::vector<Complex>(u.entries().begin(), u.entries().end()));
              if (is_unitary(cat, us, tol)) return holds();
              return violated("adjoint of a Gram-Schmidt unitary is not its inverse",
                              {witness_of("u", us)});
            });
  b.sampled("hs-norm-positive", "squared norm is real, nonnegative and zero only at zero", trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              auto f = random_morphism<S>(rng, random_object(rng, md), random_object(rng, md));
              const Complex n = hs_norm_sq(cat, f, tol).value();
              const double scale = max_magnitude(f) * max_magnitude(f);
              if (std::abs(n.imag()) <= 1e-9 * scale && n.real() > 0.0) return holds();
              return violated("squared norm " + std::to_string(n.real()) + "+" +
                                  std::to_string(n.imag()) + "i is not positive",
                              {witness_of("f", f)});
            });
  b.once("nontrivial-negatives", "-1 differs from 1 among the scalars", [&]() -> SampleOutcome {
    if (!approx_equal(make_scalar<S>(-1.0), make_scalar<S>(1.0), tol)) return holds();
    return violated("-1 equals 1");
  });
}

template <InvolutiveSemiring S>
void semiring_closure_checks(SuiteBuilder& b, std::size_t trials) {
  b.sampled("semiring-laws", "scalars form a commutative involutive semiring", 1,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              check_semiring_laws<S>(rng, std::max<std::size_t>(trials, 16));
              return holds();
            });
}

/// The full axiom suite of a matrix model.
template <InvolutiveSemiring S>
VerificationReport verify_model_axioms(std::size_t max_dim, std::size_t trials, std::uint64_t seed,
                                       const Tolerance& tol = {}) {
  VerificationReport r;
  r.suite = "sccc";
  r.model = std::string(S::model_name);
  r.seed = seed;
  r.tolerance = tol.relative;
  r.trials = trials;
  r.max_dim = max_dim;
  SuiteBuilder b(r, seed);
  semiring_closure_checks<S>(b, trials);
  sccc_axiom_checks(MatrixCategory<S>{}, b, trials, max_dim, tol);
  if constexpr (ComplexValued<S>) complex_model_checks<S>(b, trials, max_dim, tol);
  return r;
}

}  // namespace sccckit
