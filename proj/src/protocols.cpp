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

#include "sccckit/protocols.hpp"

#include <cmath>

namespace sccckit {

using C = ComplexField;

MeasurementSpec::MeasurementSpec(CMorphism unitary, OplusDecomposition d)
    : u(std::move(unitary)), decomp(std::move(d)) {
  if (!obj_equal(u.cod(), decomp.whole))
    throw TypeMismatch("measurement codomain " + to_string(u.cod()) + " is not " +
                       to_string(decomp.whole));
  if (!is_unitary(MatrixCategory<C>{}, u)) throw NotUnitary("measurement map is not unitary");
}

CMorphism MeasurementSpec::component(std::size_t i) const {
  return compose(pseudo_maps<C>(decomp, i).p, u);
}

CMorphism MeasurementSpec::projector(std::size_t i) const {
  auto pi = component(i);
  return compose(dagger(pi), pi);
}

MeasurementOutcome nondestructive_measurement(const MeasurementSpec& spec, const CMorphism& psi) {
  MeasurementOutcome out;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    auto p = spec.projector(i);
    out.branches.branches.push_back(compose(p, psi));
    out.probabilities.push_back(born_prob(psi, p).value().real());
  }
  return out;
}

CMorphism measurement_oplus_style(const MeasurementSpec& spec) {
  std::vector<CMorphism> injections;
  std::vector<CMorphism> adjoints;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    injections.push_back(pseudo_maps<C>(spec.decomp, i).q);
    adjoints.push_back(dagger(spec.u));
  }
  return compose(oplus_all(adjoints), compose(oplus_all(injections), spec.u));
}

CMorphism measurement_pairing_style(const MeasurementSpec& spec) {
  std::vector<CMorphism> ps;
  for (std::size_t i = 0; i < spec.size(); ++i) ps.push_back(spec.projector(i));
  return pairing(ps);
}

TeleportationSetup bell_teleportation_setup() {
  const ObjectExpr q = ObjectExpr::gen("Q", 2);
  const ObjectExpr qd = dual_of(q);
  const ObjectExpr i = ObjectExpr::unit();
  OplusDecomposition outcomes({i, i, i, i});
  std::array<CMorphism, 4> betas = {
      CMorphism::from_rows(qd, qd, {{1.0, 0.0}, {0.0, 1.0}}),
      CMorphism::from_rows(qd, qd, {{0.0, 1.0}, {1.0, 0.0}}),
      CMorphism::from_rows(qd, qd, {{1.0, 0.0}, {0.0, -1.0}}),
      CMorphism::from_rows(qd, qd, {{0.0, -1.0}, {1.0, 0.0}}),
  };
  // Row k of T is the conjugated name of beta_k over sqrt(2).
  CMorphism t(ObjectExpr::tensor(q, qd), outcomes.whole);
  for (std::size_t k = 0; k < 4; ++k) {
    auto nk = name(betas[k]);
    for (std::size_t c = 0; c < 4; ++c) t(k, c) = std::conj(nk(c, 0)) / std::sqrt(2.0);
  }
  return {q, outcomes, t, betas};
}

TeleportationRun run_teleportation(const CMorphism& psi) {
  const auto setup = bell_teleportation_setup();
  const ObjectExpr& q = setup.qubit;
  if (!obj_equal(psi.dom(), ObjectExpr::unit()) || !obj_equal(psi.cod(), q))
    throw TypeMismatch("teleportation input must be a state I -> " + to_string(q));
  const ObjectExpr qd = dual_of(q);
  const ObjectExpr i = ObjectExpr::unit();
  auto bell = scalar_mult(make_scalar<C>(1.0 / std::sqrt(2.0)), unit<C>(q));
  auto state = compose(alpha<C>(q, qd, q), compose(tensor(psi, bell), lambda<C>(i)));

  TeleportationRun run{psi, {}};
  for (std::size_t k = 0; k < 4; ++k) {
    auto outcome = compose(pseudo_maps<C>(setup.outcomes, k).p, setup.t);
    auto out = compose(dagger(lambda<C>(q)), compose(tensor(outcome, identity<C>(q)), state));
    auto correction = dagger(lower_star(setup.betas[k]));
    auto corrected = compose(correction.retyped(q, q), out);
    run.branches.push_back({out, corrected, hs_norm_sq(out).value().real()});
  }
  return run;
}

std::vector<double> computational_statistics(const CMorphism& psi) {
  const ObjectExpr i = ObjectExpr::unit();
  auto p0 = pseudo_maps_left<C>(i, i).p;
  auto p1 = pseudo_maps_right<C>(i, i).p;
  auto tuple = branch_pairing<C>({compose(p0, psi), compose(p1, psi)});
  std::vector<double> out;
  for (const auto& b : tuple.branches) out.push_back(hs_norm_sq(b).value().real());
  return out;
}

}  // namespace sccckit
