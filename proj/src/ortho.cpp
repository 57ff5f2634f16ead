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

#include "sccckit/ortho.hpp"

namespace sccckit {

IllDefinedWitness oplus_illdefined_witness(double theta) {
  using C = ComplexField;
  const auto one = make_scalar<C>(1.0);
  const auto phase = make_scalar<C>(std::polar(1.0, theta));

  IllDefinedWitness w{.theta = theta,
                      .sum_doubled_phase = doubled(oplus(one, phase)),
                      .sum_doubled_plain = doubled(oplus(one, one)),
                      .pair_doubled_phase = doubled(pairing<C>({one, phase})),
                      .pair_doubled_plain = doubled(pairing<C>({one, one}))};
  w.classes_agree = wequal(lift(phase), lift(one));
  w.sum_distance = max_entry_distance(w.sum_doubled_phase, w.sum_doubled_plain);
  w.pair_distance = max_entry_distance(w.pair_doubled_phase, w.pair_doubled_plain);
  w.sum_classes_agree = wequal(lift(oplus(one, phase)), lift(oplus(one, one)));
  w.pair_classes_agree = wequal(lift(pairing<C>({one, phase})), lift(pairing<C>({one, one})));
  return w;
}

}  // namespace sccckit
