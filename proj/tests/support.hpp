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

#include <complex>

#include "doctest.h"
#include "sccckit/born.hpp"
#include "sccckit/models.hpp"
#include "sccckit/ortho.hpp"
#include "sccckit/protocols.hpp"
#include "sccckit/sccc.hpp"
#include "sccckit/wproj.hpp"

namespace testing {

using namespace sccckit;
using C = ComplexField;
using namespace std::complex_literals;

inline const ObjectExpr Q = ObjectExpr::gen("Q", 2);
inline const ObjectExpr I = ObjectExpr::unit();

inline CMorphism rows(const ObjectExpr& dom, const ObjectExpr& cod,
                      std::initializer_list<std::initializer_list<Complex>> r) {
  return CMorphism::from_rows(dom, cod, r);
}

inline Complex scalar_of(const CMorphism& s) { return s.value(); }

}  // namespace testing
