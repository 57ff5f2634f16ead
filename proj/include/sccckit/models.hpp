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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "sccckit/sccc.hpp"

namespace sccckit {

//============================================================================
// Model handles
//============================================================================

/// A named matrix model, optionally wrapped in the phase quotient.
struct ModelHandle {
  std::string key;   // CLI selector: fdhilb, rel, weights, wproj:<base>
  std::string name;  // display name
  bool has_biproducts = true;
  bool phase_quotient = false;

  /// Selector of the underlying matrix model.
  std::string base_key() const { return phase_quotient ? key.substr(6) : key; }
};

ModelHandle fdhilb();
ModelHandle rel();
ModelHandle weights();
ModelHandle wproj_of(const ModelHandle& base);

/// Parses `fdhilb`, `rel`, `weights` or `wproj:<one of those>`. Throws
/// UnknownModel.
ModelHandle model_from_key(const std::string& key);

/// Deterministic per-trial generator derived from a run seed and a trial
/// index.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

/// Default seed, overridable through SCCCKIT_SEED.
std::uint64_t default_seed();

//============================================================================
// Semiring law checking
//============================================================================

template <InvolutiveSemiring S>
bool semiring_close(typename S::value_type a, typename S::value_type b) {
  const double scale = std::max(S::magnitude(a), S::magnitude(b));
  return S::distance(a, b) <= std::max(1e-12, 1e-9 * scale);
}

/// Checks the commutative involutive semiring laws on sampled elements.
/// Throws SemiringLawViolation naming the law and the offending sample.
template <InvolutiveSemiring S>
void check_semiring_laws(Rng& rng, std::size_t samples = 64) {
  using V = typename S::value_type;
  auto fail = [](const std::string& law, V a, V b, V c) {
    auto p = [](V v) {
      auto x = S::to_pair(v);
      return "(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + ")";
    };
    throw SemiringLawViolation(std::string(S::model_name) + ": " + law + " fails at a=" + p(a) +
                               " b=" + p(b) + " c=" + p(c));
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const V a = S::sample(rng);
    const V b = S::sample(rng);
    const V c = S::sample(rng);
    auto eq = semiring_close<S>;
    if (!eq(S::add(S::add(a, b), c), S::add(a, S::add(b, c)))) fail("add associativity", a, b, c);
    if (!eq(S::add(a, b), S::add(b, a))) fail("add commutativity", a, b, c);
    if (!eq(S::mul(S::mul(a, b), c), S::mul(a, S::mul(b, c)))) fail("mul associativity", a, b, c);
    if (!eq(S::mul(a, b), S::mul(b, a))) fail("mul commutativity", a, b, c);
    if (!eq(S::mul(a, S::add(b, c)), S::add(S::mul(a, b), S::mul(a, c))))
      fail("distributivity", a, b, c);
    if (!eq(S::add(a, S::zero()), a)) fail("additive unit", a, b, c);
    if (!eq(S::mul(a, S::one()), a)) fail("multiplicative unit", a, b, c);
    if (!S::is_zero(S::mul(a, S::zero()))) fail("zero annihilates", a, b, c);
    if (!eq(S::involution(S::involution(a)), a)) fail("involution is involutive", a, b, c);
    if (!eq(S::involution(S::add(a, b)), S::add(S::involution(a), S::involution(b))))
      fail("involution additive", a, b, c);
    if (!eq(S::involution(S::mul(a, b)), S::mul(S::involution(a), S::involution(b))))
      fail("involution multiplicative", a, b, c);
  }
}

/// A model handle for matrices over S, after checking the semiring laws.
template <InvolutiveSemiring S>
ModelHandle semiring_model(std::uint64_t seed = 0) {
  Rng rng = trial_rng(seed, 0);
  check_semiring_laws<S>(rng);
  return ModelHandle{std::string(S::model_name), std::string(S::model_name), true, false};
}

//============================================================================
// Random inputs
//============================================================================

template <InvolutiveSemiring S>
Morphism<S> random_morphism(Rng& rng, const ObjectExpr& dom, const ObjectExpr& cod) {
  Morphism<S> m(dom, cod);
  for (auto& v : m.entries()) v = S::sample(rng);
  return m;
}

/// Small integer entries, so that sums and products are exact in floating
/// point: Gaussian integers in [-3,3] for complex models, {0..3} for
/// weights, uniform bits for Rel.
template <InvolutiveSemiring S>
typename S::value_type sample_small_integer(Rng& rng) {
  using V = typename S::value_type;
  if constexpr (std::same_as<V, Complex>) {
    std::uniform_int_distribution<int> d(-3, 3);
    const int re = d(rng);
    return Complex(re, d(rng));
  } else if constexpr (std::same_as<V, double>) {
    return static_cast<double>(std::uniform_int_distribution<int>(0, 3)(rng));
  } else {
    return S::sample(rng);
  }
}

template <InvolutiveSemiring S>
Morphism<S> random_integer_morphism(Rng& rng, const ObjectExpr& dom, const ObjectExpr& cod) {
  Morphism<S> m(dom, cod);
  for (auto& v : m.entries()) v = sample_small_integer<S>(rng);
  return m;
}

/// A random object of dimension in [1, max_dim]: a generator, a dual, a
/// tensor of two factors or a sum, chosen so the dimension stays in range.
ObjectExpr random_object(Rng& rng, std::size_t max_dim, int depth = 3);

/// exp(i theta) for a uniform theta.
Complex random_phase(Rng& rng);

/// Unitary A -> (+)_i A_i with dim(A) = sum of dims, by Gram-Schmidt on a
/// seeded Gaussian matrix. Resamples up to 8 times on a near-degenerate
/// column, then throws DegenerateSample. Zero entries of dims give Zero
/// summands.
CMorphism random_unitary(const std::vector<std::size_t>& dims, std::uint64_t seed);
CMorphism random_unitary(const std::vector<std::size_t>& dims, Rng& rng);

//============================================================================
// Sums of objects and the biproduct structure
//============================================================================

/// An ordered list of summands and their left-nested sum.
struct OplusDecomposition {
  std::vector<ObjectExpr> parts;
  ObjectExpr whole;
  std::vector<std::size_t> offsets;  // offsets[i] = first basis index of part i

  explicit OplusDecomposition(std::vector<ObjectExpr> parts);

  std::size_t size() const { return parts.size(); }
  /// Parses `A+B+C` (left-nested) and splits it into its summands.
  static OplusDecomposition parse(std::string_view text);
};

/// <f_1, ..., f_n> : C -> (+)_i A_i, the block-stacked matrix.
template <InvolutiveSemiring S>
Morphism<S> pairing(const std::vector<Morphism<S>>& fs) {
  if (fs.empty()) throw TypeMismatch("pairing of no morphisms");
  std::vector<ObjectExpr> cods;
  for (const auto& f : fs) {
    if (!obj_equal(f.dom(), fs.front().dom())) throw TypeMismatch("pairing needs a common domain");
    cods.push_back(f.cod());
  }
  OplusDecomposition d(cods);
  Morphism<S> out(fs.front().dom(), d.whole);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t c = 0; c < out.cols(); ++c)
      for (std::size_t r = 0; r < fs[i].rows(); ++r) out(d.offsets[i] + r, c) = fs[i](r, c);
  return out;
}

/// The biproduct projection (+)_i A_i -> A_i, as a block selector.
template <InvolutiveSemiring S>
Morphism<S> biproduct_projection(const OplusDecomposition& d, std::size_t i) {
  if (i >= d.size()) throw IndexOutOfRange("summand index out of range");
  Morphism<S> out(d.whole, d.parts[i]);
  for (std::size_t r = 0; r < out.rows(); ++r) out(r, d.offsets[i] + r) = S::one();
  return out;
}

/// The biproduct injection A_i -> (+)_i A_i.
template <InvolutiveSemiring S>
Morphism<S> biproduct_injection(const OplusDecomposition& d, std::size_t i) {
  if (i >= d.size()) throw IndexOutOfRange("summand index out of range");
  Morphism<S> out(d.parts[i], d.whole);
  for (std::size_t c = 0; c < out.cols(); ++c) out(d.offsets[i] + c, c) = S::one();
  return out;
}

}  // namespace sccckit
