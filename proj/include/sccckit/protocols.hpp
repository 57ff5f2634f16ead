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
#include <vector>

#include "sccckit/ortho.hpp"

namespace sccckit {

/// A morphism into a freely added product (A_1, ..., A_n): one branch per
/// outcome, all with a common domain.
template <InvolutiveSemiring S>
struct BranchTuple {
  std::vector<Morphism<S>> branches;

  /// The product projection onto outcome i.
  const Morphism<S>& project(std::size_t i) const {
    if (i >= branches.size()) throw IndexOutOfRange("branch index out of range");
    return branches[i];
  }
  std::size_t size() const { return branches.size(); }
};

/// <f_1, ..., f_n> into the free product. Throws TypeMismatch without a
/// common domain.
template <InvolutiveSemiring S>
BranchTuple<S> branch_pairing(std::vector<Morphism<S>> fs) {
  for (const auto& f : fs)
    if (!obj_equal(f.dom(), fs.front().dom()))
      throw TypeMismatch("branch pairing needs a common domain");
  return {std::move(fs)};
}

/// Classical communication: the quantum part q is tensored onto every
/// classical branch, A (x) (B, C) -> (A (x) B, A (x) C).
template <InvolutiveSemiring S>
BranchTuple<S> cc_map(const Morphism<S>& q, const BranchTuple<S>& classical) {
  BranchTuple<S> out;
  for (const auto& b : classical.branches) out.branches.push_back(tensor(q, b));
  return out;
}

/// Left-nested f_1 (+) ... (+) f_n.
template <InvolutiveSemiring S>
Morphism<S> oplus_all(const std::vector<Morphism<S>>& fs) {
  if (fs.empty()) throw TypeMismatch("sum of no morphisms");
  Morphism<S> acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = oplus(acc, fs[i]);
  return acc;
}

/// A measurement given by a unitary U : A -> (+)_i A_i.
struct MeasurementSpec {
  CMorphism u;
  OplusDecomposition decomp;

  /// Throws NotUnitary or TypeMismatch.
  MeasurementSpec(CMorphism u, OplusDecomposition decomp);

  /// pi_i = p_i o U.
  CMorphism component(std::size_t i) const;
  /// P_i = pi_i^dagger o pi_i.
  CMorphism projector(std::size_t i) const;
  std::size_t size() const { return decomp.size(); }
};

struct MeasurementOutcome {
  BranchTuple<ComplexField> branches;  // P_i o psi
  std::vector<double> probabilities;   // psi^dagger P_i psi
};

MeasurementOutcome nondestructive_measurement(const MeasurementSpec& spec, const CMorphism& psi);

/// ((+)_i U^dagger) o ((+)_i q_i) o U : A -> (+)_i A.
CMorphism measurement_oplus_style(const MeasurementSpec& spec);

/// <P_1, ..., P_n> : A -> (+)_i A, the same measurement through pairing.
CMorphism measurement_pairing_style(const MeasurementSpec& spec);

struct TeleportationSetup {
  ObjectExpr qubit;                // Q
  OplusDecomposition outcomes;     // ((I (+) I) (+) I) (+) I
  CMorphism t;                     // Q (x) Q* -> outcomes
  std::array<CMorphism, 4> betas;  // endomorphisms of Q*
};

/// The Bell measurement T and the four Pauli-type maps beta_i with
/// name(beta_i) / sqrt(2) = T^dagger o q_i.
TeleportationSetup bell_teleportation_setup();

struct TeleportationBranch {
  CMorphism output;     // before correction
  CMorphism corrected;  // after the beta_i^dagger-type correction
  double probability = 0.0;
};

struct TeleportationRun {
  CMorphism input;
  std::vector<TeleportationBranch> branches;
};

/// Teleports psi : I -> Q through the normalized Bell pair and applies the
/// per-branch correction.
TeleportationRun run_teleportation(const CMorphism& psi);

/// Branch probabilities of the destructive computational measurement
/// I (+) I -> (I, I).
std::vector<double> computational_statistics(const CMorphism& psi);

}  // namespace sccckit
