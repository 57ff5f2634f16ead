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

#include <cmath>
#include <numbers>

namespace sccckit {

//============================================================================
// Harness
//============================================================================

CheckResult run_samples(const std::string& check, const std::string& statement, std::size_t count,
                        std::uint64_t seed, std::uint64_t stream,
                        const std::function<SampleOutcome(Rng&, std::size_t)>& sample) {
  CheckResult r{check, statement, Status::Pass, "", {}};
  std::size_t failures = 0;
  for (std::size_t t = 0; t < count; ++t) {
    Rng rng = trial_rng(seed, (stream << 32) + t);
    SampleOutcome o;
    try {
      o = sample(rng, t);
    } catch (const SccError& e) {
      o = SampleFailure{e.what(), {}};
    }
    if (!o) continue;
    if (failures++ == 0) {
      r.detail = "first violation at sample " + std::to_string(t) + ": " + o->what;
      r.witness = std::move(o->witness);
    }
  }
  if (failures == 0) {
    r.detail = std::to_string(count) + "/" + std::to_string(count) + " samples hold";
  } else {
    r.status = Status::Fail;
    r.detail = std::to_string(failures) + "/" + std::to_string(count) + " samples violate; " + r.detail;
  }
  return r;
}

CheckResult run_once(const std::string& check, const std::string& statement,
                     const std::function<SampleOutcome()>& body) {
  CheckResult r{check, statement, Status::Pass, "holds", {}};
  SampleOutcome o;
  try {
    o = body();
  } catch (const SccError& e) {
    o = SampleFailure{e.what(), {}};
  }
  if (o) {
    r.status = Status::Fail;
    r.detail = o->what;
    r.witness = std::move(o->witness);
  }
  return r;
}

CheckResult expect_violation(CheckResult r) {
  if (r.status == Status::Fail) {
    r.status = Status::ExpectedFail;
  } else {
    r.status = Status::Fail;
    r.detail = "a violation was expected but none was found (" + r.detail + ")";
  }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"sccc", "wproj",       "prep-state", "ortho",
                                                 "born", "equivalence", "teleport"};
  return names;
}

namespace {

// Quotient arrows carry their doubled form, n^2 x n^2 for an n x n
// representative, so the axiom checks there stay at small dimensions.
constexpr std::size_t kQuotientAxiomDim = 2;

template <InvolutiveSemiring S>
typename S::value_type sample_phase(Rng& rng) {
  if constexpr (ComplexValued<S>) {
    return random_phase(rng);
  } else {
    (void)rng;
    return S::one();
  }
}

template <InvolutiveSemiring S>
constexpr bool is_discrete() {
  return std::same_as<typename S::value_type, Bit>;
}

ObjectExpr small_object(Rng& rng, std::size_t lo, std::size_t hi, const std::string& name) {
  return object_of_dim(pick(rng, lo, hi), name);
}

OplusDecomposition random_decomposition(Rng& rng, std::size_t parts, std::size_t lo,
                                        std::size_t hi, const std::string& stem) {
  std::vector<ObjectExpr> ps;
  for (std::size_t i = 0; i < parts; ++i)
    ps.push_back(object_of_dim(pick(rng, lo, hi), stem + std::to_string(i)));
  return OplusDecomposition(ps);
}

//============================================================================
// Phase quotient
//============================================================================

template <InvolutiveSemiring S>
void wproj_checks(SuiteBuilder& b, const SuiteOptions& o) {
  WProjCategory<S> wc;
  const Tolerance tol = o.tol();
  const std::size_t md = std::max<std::size_t>(1, std::min<std::size_t>(o.max_dim, 4));

  b.sampled("three-way-agreement",
            "equal doubles, equal conjugate doubles and equal bipartite projectors coincide",
            o.trials, [&](Rng& rng, std::size_t t) -> SampleOutcome {
              const ObjectExpr a = random_object(rng, md), c = random_object(rng, md);
              auto f = random_morphism<S>(rng, a, c);
              std::optional<bool> expected;
              Morphism<S> g = f;
              switch (t % 4) {
                case 0:
                  g = scaled(sample_phase<S>(rng), f);
                  expected = true;
                  break;
                case 1:
                  g = random_morphism<S>(rng, a, c);
                  break;
                case 2:
                  if constexpr (!is_discrete<S>()) {
                    g = entrywise_sum(f, scaled(S::from_pair({1e-2, 0.0}), random_morphism<S>(rng, a, c)));
                    expected = false;
                  } else {
                    g = random_morphism<S>(rng, a, c);
                  }
                  break;
                default:
                  if (t % 8 == 3) {
                    f = Morphism<S>(a, c);
                    g = f;
                    expected = true;
                  } else {
                    g = f;
                    expected = true;
                  }
              }
              auto w = wequal_detail(lift(f), lift(g), tol);
              if (expected && *expected != w.equal)
                return violated(std::string("pair expected to be ") +
                                    (*expected ? "phase-equal" : "distinct") + " was judged otherwise",
                                {witness_of("f", f), witness_of("g", g)});
              return holds();
            });

  b.sampled("lift-respects-phase", "lift(u.f) equals lift(f) for unit phases u, not for u = 2",
            o.trials, [&](Rng& rng, std::size_t) -> SampleOutcome {
              auto f = random_morphism<S>(rng, random_object(rng, md), random_object(rng, md));
              auto uf = scaled(sample_phase<S>(rng), f);
              if (!wequal(lift(uf), lift(f), tol))
                return violated("phase-shifted lift differs", {witness_of("f", f), witness_of("uf", uf)});
              if constexpr (!is_discrete<S>()) {
                if (max_magnitude(f) > 0.0 && wequal(lift(scaled(S::from_count(2), f)), lift(f), tol))
                  return violated("amplitude 2 treated as a phase", {witness_of("f", f)});
              }
              return holds();
            });

  b.sampled("functoriality", "lift preserves composition and tensor", o.trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = random_object(rng, md), a2 = random_object(rng, md),
                               a3 = random_object(rng, md);
              auto f = random_morphism<S>(rng, a, a2);
              auto g = random_morphism<S>(rng, a2, a3);
              if (!wequal(lift(compose(g, f)), wcompose(lift(g), lift(f)), tol))
                return violated("composition", {witness_of("f", f), witness_of("g", g)});
              if (!wequal(lift(tensor(f, g)), wtensor(lift(f), lift(g)), tol))
                return violated("tensor", {witness_of("f", f), witness_of("g", g)});
              return holds();
            });

  b.sampled("representative-independence",
            "composition in the quotient does not depend on the representative", o.trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = random_object(rng, md), a2 = random_object(rng, md),
                               a3 = random_object(rng, md);
              auto f = random_morphism<S>(rng, a, a2);
              auto g = random_morphism<S>(rng, a2, a3);
              auto ug = scaled(sample_phase<S>(rng), g);
              auto vf = scaled(sample_phase<S>(rng), f);
              if (wequal(wcompose(lift(ug), lift(vf)), wcompose(lift(g), lift(f)), tol)) return holds();
              return violated("phase-shifted representatives compose differently",
                              {witness_of("f", f), witness_of("g", g)});
            });

  if constexpr (ComplexValued<S>) {
    b.sampled("canonical-representative",
              "canonical representative is idempotent, phase invariant and phase-equal to f",
              o.trials, [&](Rng& rng, std::size_t) -> SampleOutcome {
                auto f = random_morphism<S>(rng, random_object(rng, md), random_object(rng, md));
                auto cf = canonical_rep(f);
                if (!approx_equal(canonical_rep(cf), cf, tol)) return violated("not idempotent", {witness_of("f", f)});
                if (!approx_equal(canonical_rep(scaled(sample_phase<S>(rng), f)), cf, tol))
                  return violated("not phase invariant", {witness_of("f", f)});
                if (!wequal(lift(cf), lift(f), tol)) return violated("changes the class", {witness_of("f", f)});
                return holds();
              });

    b.sampled("canonical-functor-faithful",
              "lifting identifies exactly the phase-related morphisms (sampled)", o.trials,
              [&](Rng& rng, std::size_t t) -> SampleOutcome {
                const ObjectExpr a = random_object(rng, md), c = random_object(rng, md);
                auto f = random_morphism<S>(rng, a, c);
                auto g = t % 2 == 0 ? scaled(sample_phase<S>(rng), f) : random_morphism<S>(rng, a, c);
                const bool same_class = wequal(lift(f), lift(g), tol);
                const bool same_rep = approx_equal(canonical_rep(f), canonical_rep(g), tol);
                if (same_class == same_rep && same_class == (t % 2 == 0)) return holds();
                return violated("class equality and representative equality disagree",
                                {witness_of("f", f), witness_of("g", g)});
              });

    b.sampled("quotient-scalars-nonnegative", "doubled scalars are real and nonnegative",
              o.trials, [&](Rng& rng, std::size_t) -> SampleOutcome {
                auto s = random_morphism<S>(rng, ObjectExpr::unit(), ObjectExpr::unit());
                const Complex d = lift(s).doubled().value();
                if (std::abs(d.imag()) <= 1e-12 * std::abs(d) && d.real() >= 0.0) return holds();
                return violated("doubled scalar is not nonnegative", {witness_of("s", s)});
              });
  }

  sccc_axiom_checks(wc, b, o.trials, std::min<std::size_t>(md, kQuotientAxiomDim), tol);
}

//============================================================================
// Preparation-state agreement
//============================================================================

enum class PrepExpectation { Holds, Violated, None };

template <class C>
bool same_arrow(const C& cat, const typename C::Arrow& f, const typename C::Arrow& g,
                const Tolerance& tol) {
  if constexpr (std::same_as<C, WProjCategory<ComplexField>>) {
    return obj_equal(f.dom(), g.dom()) && obj_equal(f.cod(), g.cod()) &&
           approx_equal(canonical_rep(f.rep()), canonical_rep(g.rep()), tol);
  } else {
    return cat.equal(f, g, tol);
  }
}

template <class C>
void prep_state_checks(const C& cat, SuiteBuilder& b, const SuiteOptions& o, PrepExpectation e) {
  using S = typename C::semiring;
  const Tolerance tol = o.tol();
  const std::size_t md = std::max<std::size_t>(1, std::min<std::size_t>(o.max_dim, 3));

  // Sample 0 is always the pair (f, i.f) in complex models.
  auto sample_pair = [&](Rng& rng, std::size_t t) {
    const ObjectExpr a = random_object(rng, md), c = random_object(rng, md);
    auto f = random_morphism<S>(rng, a, c);
    Morphism<S> g = f;
    if constexpr (ComplexValued<S>) {
      if (t == 0) g = scaled(Complex(0.0, 1.0), f);
      else if (t % 2 == 1) g = scaled(sample_phase<S>(rng), f);
      else g = random_morphism<S>(rng, a, c);
    } else {
      if (t % 2 == 1) g = random_morphism<S>(rng, a, c);
    }
    return std::pair{f, g};
  };
  auto finish = [&](CheckResult& r) {
    if (e == PrepExpectation::Violated) r = expect_violation(r);
    if (e == PrepExpectation::None) r.detail += " (reported without an expectation)";
  };
  auto wit = [](const Morphism<S>& f, const Morphism<S>& g) {
    return std::vector<Witness>{witness_of("f", f), witness_of("g", g)};
  };

  CheckResult& doubles = b.sampled(
      "prep-state-doubles", "equal doubled forms imply equal morphisms", o.trials,
      [&](Rng& rng, std::size_t t) -> SampleOutcome {
        auto [f, g] = sample_pair(rng, t);
        auto F = embed_of(cat, f), G = embed_of(cat, g);
        if (cat.equal(doubled(cat, F), doubled(cat, G), tol) && !same_arrow(cat, F, G, tol))
          return violated("doubles agree but the morphisms differ", wit(f, g));
        return holds();
      });
  finish(doubles);

  CheckResult& projectors = b.sampled(
      "prep-state-projectors", "equal bipartite projectors imply equal names", o.trials,
      [&](Rng& rng, std::size_t t) -> SampleOutcome {
        auto [f, g] = sample_pair(rng, t);
        auto F = embed_of(cat, f), G = embed_of(cat, g);
        if (cat.equal(bipartite_projector(cat, F, tol), bipartite_projector(cat, G, tol), tol) &&
            !same_arrow(cat, name(cat, F, tol), name(cat, G, tol), tol))
          return violated("projectors agree but the names differ", wit(f, g));
        return holds();
      });
  finish(projectors);

  CheckResult& densities = b.sampled(
      "prep-state-densities", "equal density operators imply equal states", o.trials,
      [&](Rng& rng, std::size_t t) -> SampleOutcome {
        auto [f, g] = sample_pair(rng, t);
        auto psi = embed_of(cat, name(f, tol)), phi = embed_of(cat, name(g, tol));
        if (cat.equal(density(cat, psi), density(cat, phi), tol) && !same_arrow(cat, psi, phi, tol))
          return violated("densities agree but the states differ", wit(f, g));
        return holds();
      });
  finish(densities);

  // Exhaustive small grids for the discrete and weight models.
  if constexpr (!ComplexValued<S>) {
    const int levels = is_discrete<S>() ? 2 : 3;
    CheckResult& grid = b.once(
        "prep-state-grid",
        "over all states with entries in a small grid, equal densities imply equal states",
        [&]() -> SampleOutcome {
          std::size_t pairs = 0;
          for (std::size_t d = 1; d <= 3; ++d) {
            const ObjectExpr a = object_of_dim(d, "A");
            std::size_t total = 1;
            for (std::size_t i = 0; i < d; ++i) total *= static_cast<std::size_t>(levels);
            std::vector<Morphism<S>> states;
            for (std::size_t code = 0; code < total; ++code) {
              Morphism<S> psi(ObjectExpr::unit(), a);
              std::size_t c = code;
              for (auto& v : psi.entries()) {
                v = S::from_count(c % levels);
                c /= levels;
              }
              states.push_back(psi);
            }
            for (const auto& psi : states)
              for (const auto& phi : states) {
                ++pairs;
                const bool same_density = approx_equal(density(MatrixCategory<S>{}, psi),
                                                       density(MatrixCategory<S>{}, phi), tol);
                const bool same_double = approx_equal(doubled(psi), doubled(phi), tol);
                if ((same_density || same_double) && !approx_equal(psi, phi, tol))
                  return violated("distinct grid states with equal densities",
                                  {witness_of("psi", psi), witness_of("phi", phi)});
              }
          }
          (void)pairs;
          return holds();
        });
    finish(grid);
  }
}

//============================================================================
// Sums of objects and morphisms
//============================================================================

template <InvolutiveSemiring S>
void ortho_checks(SuiteBuilder& b, const SuiteOptions& o) {
  const Tolerance tol = o.tol();
  const Tolerance exact = Tolerance::exact();
  const std::size_t md = std::max<std::size_t>(1, o.max_dim);
  MatrixCategory<S> cat;
  auto obj03 = [](Rng& rng, const std::string& n) { return small_object(rng, 0, 3, n); };

  b.sampled("zero-morphism", "zero morphisms through the zero object are all-zero and absorbing",
            o.trials, [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = obj03(rng, "A"), bb = obj03(rng, "B"), c = obj03(rng, "C");
              auto z = zero_morphism<S>(a, bb);
              if (!approx_equal(z, Morphism<S>(a, bb), exact))
                return violated("diagram zero is not all-zero", {witness_of("zero", z)});
              auto f = random_morphism<S>(rng, bb, c);
              auto g = random_morphism<S>(rng, c, a);
              if (!approx_equal(compose(f, z), zero_morphism<S>(a, c), exact))
                return violated("f o 0 is not 0", {witness_of("f", f)});
              if (!approx_equal(compose(z, g), zero_morphism<S>(c, bb), exact))
                return violated("0 o g is not 0", {witness_of("g", g)});
              return holds();
            });

  b.sampled("oplus-functor", "sum of morphisms preserves identities, composition and adjoints",
            o.trials, [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = obj03(rng, "A"), a2 = obj03(rng, "B"), a3 = obj03(rng, "C");
              const ObjectExpr c = obj03(rng, "D"), c2 = obj03(rng, "E"), c3 = obj03(rng, "F");
              if (!approx_equal(oplus(identity<S>(a), identity<S>(c)),
                                identity<S>(ObjectExpr::oplus(a, c)), exact))
                return violated("1 (+) 1 is not the identity");
              auto f = random_morphism<S>(rng, a, a2), f2 = random_morphism<S>(rng, a2, a3);
              auto g = random_morphism<S>(rng, c, c2), g2 = random_morphism<S>(rng, c2, c3);
              if (!approx_equal(compose(oplus(f2, g2), oplus(f, g)),
                                oplus(compose(f2, f), compose(g2, g)), tol))
                return violated("composition", {witness_of("f", f), witness_of("g", g)});
              if (!approx_equal(dagger(oplus(f, g)), oplus(dagger(f), dagger(g)), exact))
                return violated("adjoint", {witness_of("f", f), witness_of("g", g)});
              return holds();
            });

  b.sampled("dual-commutes-with-oplus", "0* = 0 and (A (+) B)* = A* (+) B*", o.trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = random_object(rng, md), bb = random_object(rng, md);
              if (!obj_equal(ObjectExpr::dual(ObjectExpr::zero()), ObjectExpr::zero()))
                return violated("0* differs from 0");
              if (!obj_equal(ObjectExpr::dual(ObjectExpr::oplus(a, bb)),
                             ObjectExpr::oplus(ObjectExpr::dual(a), ObjectExpr::dual(bb))))
                return violated("dual of " + to_string(ObjectExpr::oplus(a, bb)));
              return holds();
            });

  b.sampled("distributivity", "distributivity isomorphisms are unitary and natural", o.trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = obj03(rng, "A"), bb = obj03(rng, "B"), c = obj03(rng, "C");
              const ObjectExpr b2 = obj03(rng, "D"), c2 = obj03(rng, "E");
              auto dl = dist_l<S>(a, bb, c);
              auto dr = dist_r<S>(bb, c, a);
              for (const auto& d : {dl, dr})
                if (!is_unitary(cat, d, exact)) return violated("not unitary", {witness_of("dist", d)});
              if (!is_unitary(cat, dist0_l<S>(a), exact) || !is_unitary(cat, dist0_r<S>(a), exact))
                return violated("zero distributivity is not unitary");
              auto f = random_morphism<S>(rng, bb, b2);
              auto g = random_morphism<S>(rng, c, c2);
              auto one = identity<S>(a);
              if (!approx_equal(compose(dist_l<S>(a, b2, c2), tensor(one, oplus(f, g))),
                                compose(oplus(tensor(one, f), tensor(one, g)), dl), tol))
                return violated("left distributivity not natural", {witness_of("f", f), witness_of("g", g)});
              if (!approx_equal(compose(dist_r<S>(b2, c2, a), tensor(oplus(f, g), one)),
                                compose(oplus(tensor(f, one), tensor(g, one)), dr), tol))
                return violated("right distributivity not natural", {witness_of("f", f), witness_of("g", g)});
              return holds();
            });

  b.sampled("pseudo-map-identities",
            "the seven pseudo-projection/injection identities hold exactly", o.trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = obj03(rng, "A"), bb = obj03(rng, "B"), c = obj03(rng, "C"),
                               d = obj03(rng, "D");
              auto L = pseudo_maps_left<S>(a, bb);
              auto R = pseudo_maps_right<S>(a, bb);
              if (!approx_equal(compose(L.p, L.q), identity<S>(a), exact)) return violated("p o q = 1");
              if (!approx_equal(compose(L.p, R.q), zero_morphism<S>(bb, a), exact)) return violated("p o q' = 0");
              if (!approx_equal(dagger(L.q), L.p, exact)) return violated("q^dagger = p");
              if (!approx_equal(L.p, compose(pseudo_maps_right<S>(bb, a).p, oplus_symmetry<S>(a, bb)), exact))
                return violated("p = p' o s");
              auto f = random_morphism<S>(rng, a, bb);
              auto g = random_morphism<S>(rng, c, d);
              if (!approx_equal(compose(pseudo_maps_left<S>(bb, d).p, oplus(f, g)),
                                compose(f, pseudo_maps_left<S>(a, c).p), exact))
                return violated("naturality of p", {witness_of("f", f), witness_of("g", g)});
              const ObjectExpr ab = ObjectExpr::oplus(a, bb);
              if (!approx_equal(oplus(identity<S>(a), pseudo_maps_left<S>(bb, c).p),
                                compose(pseudo_maps_left<S>(ab, c).p, oplus_associator<S>(a, bb, c)), exact))
                return violated("1 (+) p = p o a");
              if (!approx_equal(compose(L.p, pseudo_maps_left<S>(ab, c).p),
                                compose(pseudo_maps_left<S>(a, ObjectExpr::oplus(bb, c)).p,
                                        dagger(oplus_associator<S>(a, bb, c))), exact))
                return violated("p o p = p o a^dagger");
              return holds();
            });

  b.sampled("pseudo-maps-nary",
            "n-ary pseudo-maps are the block selectors: p_i q_i = 1, p_i q_j = 0, q_i^dagger = p_i",
            o.trials, [&](Rng& rng, std::size_t) -> SampleOutcome {
              auto d = random_decomposition(rng, pick(rng, 1, 4), 0, 3, "A");
              for (std::size_t i = 0; i < d.size(); ++i) {
                auto mi = pseudo_maps<S>(d, i);
                if (!approx_equal(mi.p, biproduct_projection<S>(d, i), exact))
                  return violated("p_" + std::to_string(i) + " is not the block selector", {witness_of("p", mi.p)});
                if (!approx_equal(dagger(mi.q), mi.p, exact)) return violated("q_i^dagger differs from p_i");
                for (std::size_t j = 0; j < d.size(); ++j) {
                  auto pq = compose(mi.p, pseudo_maps<S>(d, j).q);
                  auto want = i == j ? identity<S>(d.parts[i]) : zero_morphism<S>(d.parts[j], d.parts[i]);
                  if (!approx_equal(pq, want, exact))
                    return violated("p_" + std::to_string(i) + " o q_" + std::to_string(j));
                }
              }
              return holds();
            });

  b.sampled("pseudo-components", "components of a block sum, and block reassembly", o.trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              auto dd = random_decomposition(rng, 2, 1, 3, "A");
              auto cd = random_decomposition(rng, 2, 1, 3, "B");
              auto f = random_morphism<S>(rng, dd.parts[0], cd.parts[0]);
              auto g = random_morphism<S>(rng, dd.parts[1], cd.parts[1]);
              auto fg = oplus(f, g);
              if (!approx_equal(pseudo_component(fg, dd, cd, 0, 0), f, exact) ||
                  !approx_equal(pseudo_component(fg, dd, cd, 1, 1), g, exact) ||
                  !approx_equal(pseudo_component(fg, dd, cd, 0, 1), Morphism<S>(dd.parts[0], cd.parts[1]), exact) ||
                  !approx_equal(pseudo_component(fg, dd, cd, 1, 0), Morphism<S>(dd.parts[1], cd.parts[0]), exact))
                return violated("block-diagonal components", {witness_of("f", f), witness_of("g", g)});
              auto h = random_morphism<S>(rng, dd.whole, cd.whole);
              Morphism<S> acc(dd.whole, cd.whole);
              for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                  acc = entrywise_sum(acc, compose(pseudo_maps<S>(cd, j).q,
                                                   compose(pseudo_component(h, dd, cd, i, j),
                                                           pseudo_maps<S>(dd, i).p)));
              if (!approx_equal(acc, h, tol)) return violated("reassembly", {witness_of("h", h)});
              return holds();
            });

  b.sampled("derived-sum-entrywise", "the sum built from units and (+) is the entrywise sum",
            o.trials, [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = random_object(rng, md), c = random_object(rng, md);
              auto f = random_morphism<S>(rng, a, c);
              auto g = random_morphism<S>(rng, a, c);
              auto s = derived_sum(f, g);
              if (approx_equal(s, entrywise_sum(f, g), tol)) return holds();
              return violated("derived sum differs", {witness_of("f", f), witness_of("g", g), witness_of("sum", s)});
            });

  b.sampled("derived-sum-monoid", "derived sum is commutative, associative, with zero as unit",
            o.trials, [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = random_object(rng, md), c = random_object(rng, md);
              auto f = random_morphism<S>(rng, a, c);
              auto g = random_morphism<S>(rng, a, c);
              auto h = random_morphism<S>(rng, a, c);
              auto w = std::vector<Witness>{witness_of("f", f), witness_of("g", g), witness_of("h", h)};
              if (!approx_equal(derived_sum(f, zero_morphism<S>(a, c)), f, tol)) return violated("f + 0", w);
              if (!approx_equal(derived_sum(f, g), derived_sum(g, f), tol)) return violated("f + g", w);
              if (!approx_equal(derived_sum(derived_sum(f, g), h), derived_sum(f, derived_sum(g, h)), tol))
                return violated("associativity", w);
              return holds();
            });

  if constexpr (ComplexValued<S>) {
    b.sampled("unitary-components",
              "components of a unitary into a sum are conormalized and coorthogonal, and dually",
              o.trials, [&](Rng& rng, std::size_t) -> SampleOutcome {
                std::vector<std::size_t> dims(pick(rng, 2, 3));
                for (auto& d : dims) d = pick(rng, 1, 3);
                CMorphism u = random_unitary(dims, rng);
                std::vector<ObjectExpr> parts;
                for (std::size_t i = 0; i < dims.size(); ++i)
                  parts.push_back(object_of_dim(dims[i], "A" + std::to_string(i)));
                OplusDecomposition d(parts);
                CMorphism v = dagger(u);
                for (std::size_t i = 0; i < d.size(); ++i)
                  for (std::size_t j = 0; j < d.size(); ++j) {
                    auto pi_i = compose(pseudo_maps<S>(d, i).p, u);
                    auto pi_j = compose(pseudo_maps<S>(d, j).p, u);
                    auto psi_i = compose(v, pseudo_maps<S>(d, i).q);
                    auto psi_j = compose(v, pseudo_maps<S>(d, j).q);
                    auto want = i == j ? identity<S>(parts[i]) : zero_morphism<S>(parts[i], parts[j]);
                    if (!approx_equal(compose(pi_j, dagger(pi_i)), want, tol))
                      return violated("components of U", {witness_of("u", u)});
                    if (!approx_equal(compose(dagger(psi_j), psi_i), want, tol))
                      return violated("components of U^dagger", {witness_of("u", u)});
                  }
                return holds();
              });

    const IllDefinedWitness w = oplus_illdefined_witness(std::numbers::pi / 2);
    b.add(expect_violation(run_once(
        "sum-respects-phase-classes",
        "phase-equal summands give phase-equal sums (theta = pi/2)", [&]() -> SampleOutcome {
          if (!w.classes_agree || w.sum_classes_agree) return holds();
          return violated("1 ~ i but 1 (+) i is not ~ 1 (+) 1; max doubled difference " +
                              std::to_string(w.sum_distance),
                          {witness_of("double(1 (+) i)", w.sum_doubled_phase),
                           witness_of("double(1 (+) 1)", w.sum_doubled_plain)});
        })));
    b.add(expect_violation(run_once(
        "pairing-respects-phase-classes",
        "phase-equal components give phase-equal pairings (theta = pi/2)", [&]() -> SampleOutcome {
          if (!w.classes_agree || w.pair_classes_agree) return holds();
          return violated("<1, i> is not ~ <1, 1>; max doubled difference " +
                              std::to_string(w.pair_distance),
                          {witness_of("double(<1, i>)", w.pair_doubled_phase),
                           witness_of("double(<1, 1>)", w.pair_doubled_plain)});
        })));
    b.once("phase-classes-theta-zero", "at theta = 0 the sums and pairings agree", [&]() -> SampleOutcome {
      const IllDefinedWitness z = oplus_illdefined_witness(0.0);
      if (z.classes_agree && z.sum_classes_agree && z.pair_classes_agree) return holds();
      return violated("degenerate control disagrees");
    });
  }
}

//============================================================================
// Valuations and traces
//============================================================================

template <class C>
void born_checks(const C& cat, SuiteBuilder& b, const SuiteOptions& o) {
  using S = typename C::semiring;
  const Tolerance tol = o.tol();
  const Rational nu = Rational::parse(o.nu);
  const std::size_t md = std::max<std::size_t>(1, std::min<std::size_t>(o.max_dim, 4));
  const TraceFn<S> tr = standard_trace<S>();
  auto vw = [](const Morphism<S>& f) { return std::vector<Witness>{witness_of("f", f)}; };
  auto positive = [&](Rng& rng, const ObjectExpr& a) {
    auto f = random_morphism<S>(rng, a, random_object(rng, md));
    return compose(dagger(f), f);
  };
  auto to_outcome = [](const auto& cmp, const std::string& what) -> SampleOutcome {
    if (cmp.holds) return holds();
    return violated(what, {witness_arrow("lhs", cmp.lhs), witness_arrow("rhs", cmp.rhs)});
  };

  b.sampled("born-decomposition", "branch valuations sum to the total valuation", o.trials,
            [&](Rng& rng, std::size_t t) -> SampleOutcome {
              auto d = random_decomposition(rng, 2 + t % 2, 1, md, "B");
              auto f = random_morphism<S>(rng, random_object(rng, md), d.whole);
              return to_outcome(born_decomposition(cat, f, d, nu, tol), "sum of branch valuations");
            });

  b.sampled("born-decomposition-zero-branch", "a zero branch contributes nothing", o.trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = random_object(rng, md);
              auto f1 = random_morphism<S>(rng, a, random_object(rng, md));
              auto f = pairing<S>({f1, Morphism<S>(a, random_object(rng, md))});
              auto d = OplusDecomposition({f1.cod(), normalize(f.cod()).right()});
              return to_outcome(judge(cat, valuation(f1, nu), valuation(f, nu), tol), "zero branch");
            });

  b.once("one-plus-one", "1 + 1 = Tr(1 (+) 1)^nu", [&]() -> SampleOutcome {
    const auto one = make_scalar<S>(S::one());
    auto lhs = scalar_sum(one, one, nu);
    Scalar<S> want = make_scalar<S>(S::one());
    if constexpr (!is_discrete<S>()) want = make_scalar<S>(S::from_pair({std::pow(2.0, nu.value()), 0.0}));
    auto cmp = judge(cat, lhs, want, Tolerance{1e-12, 1e-12});
    if (cmp.holds) return holds();
    return violated("1 + 1 = " + std::to_string(S::to_pair(lhs.value())[0]),
                    {witness_of("sum", lhs), witness_of("expected", want)});
  });

  b.sampled("scalar-sum-laws", "0 + s = s, associativity and distributivity of scalar sums",
            o.trials, [&](Rng& rng, std::size_t) -> SampleOutcome {
              auto d = random_decomposition(rng, 3, 1, md, "B");
              auto f = random_morphism<S>(rng, random_object(rng, md), d.whole);
              std::vector<Scalar<S>> v;
              for (std::size_t i = 0; i < 3; ++i) v.push_back(valuation(compose(pseudo_maps<S>(d, i).p, f), nu));
              const auto zero = make_scalar<S>(S::zero());
              if (auto x = to_outcome(judge(cat, scalar_sum(zero, v[0], nu), v[0], tol), "0 + s")) return x;
              if (auto x = to_outcome(judge(cat, scalar_sum(scalar_sum(v[0], v[1], nu), v[2], nu),
                                            scalar_sum(v[0], scalar_sum(v[1], v[2], nu), nu), tol),
                                      "associativity"))
                return x;
              const auto& s = v[2];
              return to_outcome(judge(cat, compose(s, scalar_sum(v[0], v[1], nu)),
                                      scalar_sum(compose(s, v[0]), compose(s, v[1]), nu), tol),
                                "distributivity");
            });

  b.sampled("valuation-additive-over-oplus", "|f (+) g| = |f| + |g|", o.trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              auto f = random_morphism<S>(rng, random_object(rng, md), random_object(rng, md));
              auto g = random_morphism<S>(rng, random_object(rng, md), random_object(rng, md));
              return to_outcome(judge(cat, valuation(oplus(f, g), nu),
                                      scalar_sum(valuation(f, nu), valuation(g, nu), nu), tol),
                                "additivity over (+)");
            });

  if constexpr (!is_discrete<S>()) {
    b.sampled("positive-scalar-roots", "valuation scalars have a nonnegative square root x, s = x x^dagger",
              o.trials, [&](Rng& rng, std::size_t) -> SampleOutcome {
                auto f = random_morphism<S>(rng, random_object(rng, md), random_object(rng, md));
                auto s = hs_norm_sq(f);
                auto x = scalar_power(s, 0.5);
                return to_outcome(judge(cat, compose(x, dagger(x)), s, tol), "square root");
              });
  }

  b.sampled("positivity", "f^dagger f is recognized as positive with a valid witness", o.trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = random_object(rng, std::min<std::size_t>(md, 3));
              Morphism<S> h = positive(rng, a);
              if constexpr (std::same_as<S, NonnegativeReals>) {
                // Small integer factors keep the grid search conclusive.
                auto f = random_integer_morphism<S>(rng, a, a);
                h = compose(dagger(f), f);
              }
              if constexpr (std::same_as<S, ComplexField> || std::same_as<S, NonnegativeReals> ||
                            std::same_as<S, BooleanSemiring>) {
                auto p = is_positive(h);
                if (!p.positive || !p.witness) return violated("not recognized as positive", vw(h));
                if (!approx_equal(compose(dagger(*p.witness), *p.witness), h, tol))
                  return violated("witness does not factor h", vw(h));
              }
              return holds();
            });

  b.sampled("pseudo-diagonal-trace", "the pseudo-diagonal has the same trace", o.trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              auto d = random_decomposition(rng, 2 + rng() % 2, 1, md, "A");
              auto h = random_morphism<S>(rng, d.whole, d.whole);
              return to_outcome(judge(cat, trace(pseudo_diagonal(h, d)), trace(h), tol), "pseudo-diagonal");
            });

  b.sampled("diagonal-axiom", "Tr(h) = Tr(h11 + h22) for positive h", o.trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = random_object(rng, md);
              OplusDecomposition d({a, a});
              return to_outcome(diagonal_axiom(cat, positive(rng, d.whole), d, tr, tol), "diagonal axiom");
            });

  b.sampled("trace-linearity", "Tr(h) + Tr(h') = Tr(h + h') for positive h, h'", o.trials,
            [&](Rng& rng, std::size_t t) -> SampleOutcome {
              const ObjectExpr a = random_object(rng, md);
              auto h = positive(rng, a);
              auto h2 = t % 5 == 0 ? Morphism<S>(a, a) : positive(rng, a);
              return to_outcome(trace_linearity(cat, h, h2, tr, tol), "linearity");
            });

  b.sampled("trace-sum-vs-oplus", "Tr(h + h') = Tr(h (+) h') for positive h, h'", o.trials,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              const ObjectExpr a = random_object(rng, md);
              return to_outcome(trace_sum_vs_oplus(cat, positive(rng, a), positive(rng, a), tr, tol),
                                "trace of sum");
            });

  b.sampled("ortho-bornian", "||f|| = Tr(||f1|| (+) ||f2||) and Tr(h) = Tr(Tr(h11) (+) Tr(h22))",
            o.trials, [&](Rng& rng, std::size_t) -> SampleOutcome {
              auto d = random_decomposition(rng, 2, 1, md, "B");
              auto f = random_morphism<S>(rng, random_object(rng, md), d.whole);
              if (auto x = to_outcome(ortho_bornian_norm(cat, f, d, tr, tol), "norm form")) return x;
              return to_outcome(ortho_bornian_positive(cat, positive(rng, d.whole), d, tr, tol),
                                "positive form");
            });

  if constexpr (std::same_as<S, ComplexField>) {
    b.once("positivity-negative", "diag(1,-1) is not positive; 0 is, with witness 0", [&]() -> SampleOutcome {
      const ObjectExpr q = ObjectExpr::gen("Q", 2);
      if (is_positive(CMorphism::from_rows(q, q, {{1.0, 0.0}, {0.0, -1.0}})).positive)
        return violated("diag(1,-1) accepted");
      auto z = is_positive(CMorphism(q, q));
      if (!z.positive || !z.witness || !approx_equal(*z.witness, CMorphism(q, q)))
        return violated("zero rejected");
      return holds();
    });
  }
}

template <class C>
void equivalence_checks(const C& cat, SuiteBuilder& b, const SuiteOptions& o) {
  using S = typename C::semiring;
  const Tolerance tol = o.tol();
  const std::size_t md = std::max<std::size_t>(1, std::min<std::size_t>(o.max_dim, 4));
  const TraceFn<S> tr = o.corrupt_trace ? corrupted_trace<S>() : standard_trace<S>();
  const std::uint64_t stream = b.next_stream();

  CheckResult ob{"ortho-bornian", "Tr(h) = Tr(Tr(h11) (+) Tr(h22)) and ||f|| = Tr(||f1|| (+) ||f2||)",
                 Status::Pass, "", {}};
  CheckResult diag{"diagonal-axiom", "Tr(h) = Tr(h11 + h22)", Status::Pass, "", {}};
  CheckResult lin{"trace-linearity", "Tr(h) + Tr(h') = Tr(h + h')", Status::Pass, "", {}};
  std::size_t fails[3] = {0, 0, 0};
  auto note = [](CheckResult& r, std::size_t& n, std::size_t t, const auto& cmp) {
    if (cmp.holds) return;
    if (n++ == 0) {
      r.detail = "first violation at sample " + std::to_string(t);
      r.witness = {witness_arrow("lhs", cmp.lhs), witness_arrow("rhs", cmp.rhs)};
    }
  };
  for (std::size_t t = 0; t < o.trials; ++t) {
    Rng rng = trial_rng(o.seed, (stream << 32) + t);
    const ObjectExpr a = random_object(rng, md);
    OplusDecomposition d({a, a});
    auto f = random_morphism<S>(rng, random_object(rng, md), d.whole);
    auto g = random_morphism<S>(rng, d.whole, random_object(rng, md));
    auto h = compose(dagger(g), g);
    auto g2 = random_morphism<S>(rng, d.whole, random_object(rng, md));
    auto h2 = compose(dagger(g2), g2);
    auto c_ob1 = ortho_bornian_positive(cat, h, d, tr, tol);
    auto c_ob2 = ortho_bornian_norm(cat, f, d, tr, tol);
    auto c_diag = diagonal_axiom(cat, h, d, tr, tol);
    auto c_lin = trace_linearity(cat, h, h2, tr, tol);
    note(ob, fails[0], t, c_ob1.holds ? c_ob2 : c_ob1);
    note(diag, fails[1], t, c_diag);
    note(lin, fails[2], t, c_lin);
  }
  CheckResult* rs[3] = {&ob, &diag, &lin};
  for (int i = 0; i < 3; ++i) {
    CheckResult& r = *rs[i];
    if (fails[i] == 0) {
      r.detail = std::to_string(o.trials) + "/" + std::to_string(o.trials) + " samples hold";
    } else {
      r.status = Status::Fail;
      r.detail = std::to_string(fails[i]) + "/" + std::to_string(o.trials) + " samples violate; " + r.detail;
    }
  }
  if (o.corrupt_trace) {
    // The corrupted trace must break the ortho-Bornian axiom and the
    // diagonal axiom; linearity survives because the sum is derived.
    ob = expect_violation(ob);
    diag = expect_violation(diag);
  }
  b.add(ob);
  b.add(diag);
  b.add(lin);

  // The three axioms are statements about the trace as a whole, so the
  // verdicts compared are "holds on every sample".
  const bool all_ob = fails[0] == 0, all_diag = fails[1] == 0, all_lin = fails[2] == 0;
  CheckResult agree{"tfae-consistency",
                    "the ortho-Bornian verdict equals the conjunction of linearity and the diagonal axiom",
                    all_ob == (all_diag && all_lin) ? Status::Pass : Status::Fail,
                    std::string("ortho-bornian ") + (all_ob ? "holds" : "fails") + ", diagonal " +
                        (all_diag ? "holds" : "fails") + ", linearity " + (all_lin ? "holds" : "fails"),
                    {}};
  if (agree.status == Status::Fail)
    for (int i = 0; i < 3; ++i)
      for (const auto& w : rs[i]->witness) agree.witness.push_back(w);
  b.add(agree);
}

//============================================================================
// Teleportation
//============================================================================

void teleport_checks(SuiteBuilder& b, const SuiteOptions& o, bool quotient) {
  using C = ComplexField;
  const Tolerance tol = o.tol();

  b.once("bell-setup", "T is unitary, the corrections are unitary, and T^dagger q_i = name(beta_i)/sqrt2",
         [&]() -> SampleOutcome {
           auto s = bell_teleportation_setup();
           MatrixCategory<C> cat;
           if (!is_unitary(cat, s.t, tol)) return violated("T is not unitary", {witness_of("T", s.t)});
           for (std::size_t k = 0; k < 4; ++k) {
             if (!is_unitary(cat, s.betas[k], tol)) return violated("beta not unitary", {witness_of("beta", s.betas[k])});
             auto lhs = compose(dagger(s.t), pseudo_maps<C>(s.outcomes, k).q);
             auto rhs = scaled(Complex(1.0 / std::sqrt(2.0)), name(s.betas[k]));
             if (!approx_equal(lhs, rhs, tol))
               return violated("T^dagger q_" + std::to_string(k), {witness_of("lhs", lhs), witness_of("rhs", rhs)});
           }
           return holds();
         });

  const bool fixed = !o.state.empty();
  const std::size_t count = fixed ? 1 : o.trials;
  auto input = [&](Rng& rng) {
    if (fixed) return parse_state<C>(o.state);
    return random_morphism<C>(rng, ObjectExpr::unit(), ObjectExpr::gen("Q", 2));
  };

  b.sampled("corrected-branches", "every corrected branch equals psi / 2", count,
            [&](Rng& rng, std::size_t) -> SampleOutcome {
              auto psi = input(rng);
              auto run = run_teleportation(psi);
              auto want = scaled(Complex(0.5), psi);
              for (std::size_t k = 0; k < run.branches.size(); ++k) {
                const auto& br = run.branches[k];
                const bool ok = quotient ? wequal(lift(br.corrected), lift(want), tol)
                                         : approx_equal(br.corrected, want, tol);
                if (!ok)
                  return violated("branch " + std::to_string(k),
                                  {witness_of("psi", psi), witness_of("corrected", br.corrected)});
              }
              return holds();
            });

  b.sampled("branch-probabilities", "each branch has weight ||psi||/4 and the weights sum to ||psi||",
            count, [&](Rng& rng, std::size_t) -> SampleOutcome {
              auto psi = input(rng);
              const double n = hs_norm_sq(psi).value().real();
              auto run = run_teleportation(psi);
              double total = 0.0;
              for (std::size_t k = 0; k < run.branches.size(); ++k) {
                const double p = run.branches[k].probability;
                total += p;
                if (std::abs(p - n / 4) > std::max(1e-12, o.tolerance * n))
                  return violated("branch " + std::to_string(k) + " weight " + std::to_string(p),
                                  {witness_of("psi", psi)});
              }
              if (std::abs(total - n) > std::max(1e-12, o.tolerance * n))
                return violated("weights sum to " + std::to_string(total), {witness_of("psi", psi)});
              return holds();
            });

  if (quotient) {
    b.sampled("phase-robust", "i.psi teleports into the same phase classes as psi", count,
              [&](Rng& rng, std::size_t) -> SampleOutcome {
                auto psi = input(rng);
                auto a = run_teleportation(psi);
                auto c = run_teleportation(scaled(Complex(0.0, 1.0), psi));
                for (std::size_t k = 0; k < 4; ++k)
                  if (!wequal(lift(a.branches[k].corrected), lift(c.branches[k].corrected), tol))
                    return violated("branch " + std::to_string(k), {witness_of("psi", psi)});
                return holds();
              });
  }

  if (fixed) {
    auto psi = parse_state<C>(o.state);
    auto run = run_teleportation(psi);
    CheckResult r{"branch-outputs", "per-branch outputs and weights for the given state",
                  Status::Pass, "", {}};
    for (std::size_t k = 0; k < run.branches.size(); ++k) {
      r.detail += (k ? ", " : "") + std::string("p") + std::to_string(k) + "=" +
                  std::to_string(run.branches[k].probability);
      r.witness.push_back(witness_of("branch " + std::to_string(k) + " output", run.branches[k].output));
      r.witness.push_back(witness_of("branch " + std::to_string(k) + " corrected", run.branches[k].corrected));
    }
    b.add(r);
  }

  b.sampled("measurement-invariants",
            "random measurements: projectors are orthogonal idempotents and weights are conserved",
            fixed ? 20 : o.trials, [&](Rng& rng, std::size_t) -> SampleOutcome {
              const std::size_t n = pick(rng, 1, std::min<std::size_t>(6, std::max<std::size_t>(1, o.max_dim)));
              std::vector<std::size_t> dims;
              for (std::size_t left = n; left > 0;) {
                const std::size_t d = pick(rng, 1, left);
                dims.push_back(d);
                left -= d;
              }
              MeasurementSpec spec(random_unitary(dims, rng), OplusDecomposition([&] {
                                     std::vector<ObjectExpr> ps;
                                     for (std::size_t i = 0; i < dims.size(); ++i)
                                       ps.push_back(object_of_dim(dims[i], "A" + std::to_string(i)));
                                     return ps;
                                   }()));
              MatrixCategory<C> cat;
              for (std::size_t i = 0; i < spec.size(); ++i) {
                if (!is_projector(cat, spec.projector(i), tol)) return violated("P_i not a projector");
                for (std::size_t j = 0; j < spec.size(); ++j)
                  if (i != j && !approx_equal(compose(spec.projector(i), spec.projector(j)),
                                              zero_morphism<C>(spec.u.dom(), spec.u.dom()), tol))
                    return violated("P_i P_j != 0");
              }
              auto psi = random_morphism<C>(rng, ObjectExpr::unit(), spec.u.dom());
              auto m = nondestructive_measurement(spec, psi);
              double total = 0.0;
              for (double p : m.probabilities) total += p;
              const double norm = hs_norm_sq(psi).value().real();
              if (std::abs(total - norm) > std::max(1e-12, o.tolerance * norm))
                return violated("weights sum to " + std::to_string(total), {witness_of("psi", psi)});
              if (!approx_equal(measurement_oplus_style(spec), measurement_pairing_style(spec), tol))
                return violated("sum-typed measurement differs from pairing", {witness_of("u", spec.u)});
              return holds();
            });

  b.once("cc-partial-noninvertibility",
         "discarding a classical branch is not injective (partial check of non-invertibility)",
         [&]() -> SampleOutcome {
           const ObjectExpr q = ObjectExpr::gen("Q", 2);
           auto qpart = identity<C>(q);
           auto b1 = make_scalar<C>(1.0);
           auto t1 = branch_pairing<C>({b1, make_scalar<C>(1.0)});
           auto t2 = branch_pairing<C>({b1, make_scalar<C>(2.0)});
           auto c1 = cc_map(qpart, t1);
           auto c2 = cc_map(qpart, t2);
           if (!approx_equal(c1.project(0), tensor(qpart, t1.project(0))))
             return violated("projection after CC is not tensoring with the projection");
           if (approx_equal(c1.project(0), c2.project(0)) && !approx_equal(c1.project(1), c2.project(1)))
             return holds();
           return violated("distinct tuples were separated after discarding a branch");
         });

  b.once("qubit-vs-weighted-bit",
         "(1,1)/sqrt2 and (1,i)/sqrt2 are not phase-equal but give identical branch weights",
         [&]() -> SampleOutcome {
           const ObjectExpr two = ObjectExpr::oplus(ObjectExpr::unit(), ObjectExpr::unit());
           const double r = 1.0 / std::sqrt(2.0);
           auto psi = CMorphism::from_rows(ObjectExpr::unit(), two, {{r}, {r}});
           auto phi = CMorphism::from_rows(ObjectExpr::unit(), two, {{r}, {Complex(0.0, r)}});
           auto a = computational_statistics(psi);
           auto c = computational_statistics(phi);
           if (wequal(lift(psi), lift(phi), tol))
             return violated("states are phase-equal");
           for (std::size_t i = 0; i < a.size(); ++i)
             if (std::abs(a[i] - c[i]) > 1e-12) return violated("branch weights differ");
           return holds();
         });
}

//============================================================================
// Dispatch
//============================================================================

template <InvolutiveSemiring S>
void run_for_base(const std::string& suite, const ModelHandle& m, SuiteBuilder& b,
                  const SuiteOptions& o) {
  const Tolerance tol = o.tol();
  if (suite == "sccc") {
    semiring_closure_checks<S>(b, o.trials);
    if (m.phase_quotient) {
      sccc_axiom_checks(WProjCategory<S>{}, b, o.trials, std::min<std::size_t>(o.max_dim, kQuotientAxiomDim), tol);
    } else {
      sccc_axiom_checks(MatrixCategory<S>{}, b, o.trials, o.max_dim, tol);
      if constexpr (ComplexValued<S>) complex_model_checks<S>(b, o.trials, o.max_dim, tol);
    }
  } else if (suite == "wproj") {
    wproj_checks<S>(b, o);
  } else if (suite == "prep-state") {
    if (m.phase_quotient) {
      prep_state_checks(WProjCategory<S>{}, b, o, PrepExpectation::Holds);
    } else {
      PrepExpectation e = PrepExpectation::Holds;
      if (m.key == "fdhilb") e = PrepExpectation::Violated;
      if (m.key == "rel") e = PrepExpectation::None;
      prep_state_checks(MatrixCategory<S>{}, b, o, e);
    }
  } else if (suite == "ortho") {
    if (m.phase_quotient)
      throw UnknownModel("the ortho suite runs on matrix models; " + m.key +
                         " has no well-defined sum on morphisms");
    ortho_checks<S>(b, o);
  } else if (suite == "born" || suite == "equivalence") {
    auto go = [&](const auto& cat) {
      if (suite == "born") born_checks(cat, b, o);
      else equivalence_checks(cat, b, o);
    };
    if (m.phase_quotient) go(WProjCategory<S>{});
    else go(MatrixCategory<S>{});
  } else if (suite == "teleport") {
    if (!std::same_as<S, ComplexField>)
      throw UnknownModel("teleportation runs on fdhilb or wproj:fdhilb, not " + m.key);
    teleport_checks(b, o, m.phase_quotient);
  } else {
    throw UnknownSuite("unknown suite '" + suite + "'");
  }
}

}  // namespace

VerificationReport run_suite(const SuiteOptions& o) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end())
    throw UnknownSuite("unknown suite '" + o.suite + "'");
  ModelHandle m = model_from_key(o.model);
  if (o.suite == "wproj" && !m.phase_quotient) m = wproj_of(m);

  VerificationReport r;
  r.suite = o.suite;
  r.model = m.key;
  r.seed = o.seed;
  r.tolerance = o.tolerance;
  r.trials = o.trials;
  r.max_dim = o.max_dim;
  if (o.suite == "born") r.parameters.emplace_back("nu", Rational::parse(o.nu).to_string());
  if (o.suite == "equivalence") r.parameters.emplace_back("corrupt_trace", o.corrupt_trace ? "true" : "false");
  if (o.suite == "teleport" && !o.state.empty()) r.parameters.emplace_back("state", o.state);

  SuiteBuilder b(r, o.seed);
  const std::string base = m.base_key();
  if (base == "fdhilb") run_for_base<ComplexField>(o.suite, m, b, o);
  else if (base == "rel") run_for_base<BooleanSemiring>(o.suite, m, b, o);
  else run_for_base<NonnegativeReals>(o.suite, m, b, o);
  return r;
}

}  // namespace sccckit
