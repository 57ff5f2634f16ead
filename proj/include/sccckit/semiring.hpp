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

#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <random>
#include <string_view>

namespace sccckit {

using Complex = std::complex<double>;
using Rng = std::mt19937_64;

/// A commutative semiring with an involution, described by a stateless
/// traits type. Entries of morphisms are `value_type`s combined only through
/// these static functions.
///
/// `distance` and `magnitude` feed the scale-aware equality rule; discrete
/// semirings return 0/1 so that equality degenerates to exact comparison.
/// `to_pair`/`from_pair` map elements onto the `[re, im]` literal format.
template <class S>
concept InvolutiveSemiring = requires(typename S::value_type a, typename S::value_type b,
                                      Rng& rng, std::array<double, 2> p, std::size_t n) {
  { S::zero() } -> std::same_as<typename S::value_type>;
  { S::one() } -> std::same_as<typename S::value_type>;
  { S::add(a, b) } -> std::same_as<typename S::value_type>;
  { S::mul(a, b) } -> std::same_as<typename S::value_type>;
  { S::involution(a) } -> std::same_as<typename S::value_type>;
  { S::is_zero(a) } -> std::same_as<bool>;
  { S::distance(a, b) } -> std::convertible_to<double>;
  { S::magnitude(a) } -> std::convertible_to<double>;
  { S::sample(rng) } -> std::same_as<typename S::value_type>;
  { S::to_pair(a) } -> std::same_as<std::array<double, 2>>;
  { S::from_pair(p) } -> std::same_as<typename S::value_type>;
  { S::from_count(n) } -> std::same_as<typename S::value_type>;
  { S::model_name } -> std::convertible_to<std::string_view>;
};

/// Semirings whose elements are complex numbers; unitaries, phases and
/// canonical representatives are only defined for these.
template <class S>
concept ComplexValued =
    InvolutiveSemiring<S> && std::same_as<typename S::value_type, Complex>;

/// Semirings on which nonnegative rational powers of positive elements are
/// available (needed by valuations other than the squared norm).
template <class S>
concept HasRealPowers = InvolutiveSemiring<S> && requires(typename S::value_type a, double e) {
  { S::nonnegative_power(a, e) } -> std::same_as<typename S::value_type>;
  { S::is_nonnegative(a, e) } -> std::same_as<bool>;
};

/// The complex field with conjugation: matrices over it form FdHilb.
struct ComplexField {
  using value_type = Complex;
  static constexpr std::string_view model_name = "FdHilb";

  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex add(Complex a, Complex b) { return a + b; }
  static Complex mul(Complex a, Complex b) { return a * b; }
  static Complex involution(Complex a) { return std::conj(a); }
  static bool is_zero(Complex a) { return a.real() == 0.0 && a.imag() == 0.0; }
  static double distance(Complex a, Complex b) { return std::abs(a - b); }
  static double magnitude(Complex a) { return std::abs(a); }
  static Complex sample(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    const double re = n(rng);
    return {re, n(rng)};
  }
  static std::array<double, 2> to_pair(Complex a) { return {a.real(), a.imag()}; }
  static Complex from_pair(std::array<double, 2> p) { return {p[0], p[1]}; }
  static Complex from_count(std::size_t n) { return {static_cast<double>(n), 0.0}; }

  // A scalar is nonnegative when it is real and >= 0 up to `slack`.
  static bool is_nonnegative(Complex a, double slack) {
    return std::abs(a.imag()) <= slack && a.real() >= -slack;
  }
  static Complex nonnegative_power(Complex a, double e) {
    const double r = std::max(a.real(), 0.0);
    return {r == 0.0 ? 0.0 : std::pow(r, e), 0.0};
  }
};

/// Complex numbers with the identity as involution. Still a commutative
/// involutive semiring, so matrices over it form an SCCC with transposition
/// as adjoint, but its adjoint is not the Hilbert-space one. Used as a
/// negative control.
struct UnconjugatedComplex : ComplexField {
  static constexpr std::string_view model_name = "FdHilb[identity-involution]";
  static Complex involution(Complex a) { return a; }
};

/// Truth values for the boolean semiring.
struct Bit {
  bool value = false;
  friend bool operator==(Bit, Bit) = default;
};

/// The boolean semiring ({0,1}, or, and) with trivial involution: matrices
/// over it are relations.
struct BooleanSemiring {
  using value_type = Bit;
  static constexpr std::string_view model_name = "Rel";

  static Bit zero() { return {false}; }
  static Bit one() { return {true}; }
  static Bit add(Bit a, Bit b) { return {a.value || b.value}; }
  static Bit mul(Bit a, Bit b) { return {a.value && b.value}; }
  static Bit involution(Bit a) { return a; }
  static bool is_zero(Bit a) { return !a.value; }
  static double distance(Bit a, Bit b) { return a == b ? 0.0 : 1.0; }
  static double magnitude(Bit a) { return a.value ? 1.0 : 0.0; }
  static Bit sample(Rng& rng) { return {std::bernoulli_distribution(0.5)(rng)}; }
  static std::array<double, 2> to_pair(Bit a) { return {a.value ? 1.0 : 0.0, 0.0}; }
  static Bit from_pair(std::array<double, 2> p) { return {p[0] != 0.0 || p[1] != 0.0}; }
  static Bit from_count(std::size_t n) { return {n > 0}; }

  // Both elements are idempotent, so every power is the element itself.
  static bool is_nonnegative(Bit, double) { return true; }
  static Bit nonnegative_power(Bit a, double) { return a; }
};

/// Nonnegative reals with the identity involution: a phase-free weight model.
struct NonnegativeReals {
  using value_type = double;
  static constexpr std::string_view model_name = "WeightModel";

  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double add(double a, double b) { return a + b; }
  static double mul(double a, double b) { return a * b; }
  static double involution(double a) { return a; }
  static bool is_zero(double a) { return a == 0.0; }
  static double distance(double a, double b) { return std::abs(a - b); }
  static double magnitude(double a) { return std::abs(a); }
  static double sample(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 2.0)(rng); }
  static std::array<double, 2> to_pair(double a) { return {a, 0.0}; }
  static double from_pair(std::array<double, 2> p) { return p[0]; }
  static double from_count(std::size_t n) { return static_cast<double>(n); }

  static bool is_nonnegative(double a, double slack) { return a >= -slack; }
  static double nonnegative_power(double a, double e) {
    return a <= 0.0 ? 0.0 : std::pow(a, e);
  }
};

static_assert(InvolutiveSemiring<ComplexField>);
static_assert(InvolutiveSemiring<UnconjugatedComplex>);
static_assert(InvolutiveSemiring<BooleanSemiring>);
static_assert(InvolutiveSemiring<NonnegativeReals>);

}  // namespace sccckit
