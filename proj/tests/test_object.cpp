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

#include "support.hpp"

using namespace testing;

TEST_CASE("object dimensions") {
  CHECK(dim(I) == 1);
  CHECK(dim(ObjectExpr::zero()) == 0);
  CHECK(dim(ObjectExpr::tensor(Q, Q)) == 4);
  CHECK(dim(ObjectExpr::oplus(I, ObjectExpr::oplus(I, I))) == 3);
  CHECK(dim(ObjectExpr::dual(Q)) == 2);
}

TEST_CASE("duals distribute and are involutive") {
  const ObjectExpr a = ObjectExpr::gen("A", 2), b = ObjectExpr::gen("B", 3);
  CHECK(normalize(ObjectExpr::dual(ObjectExpr::tensor(a, b))) ==
        ObjectExpr::tensor(ObjectExpr::dual(a), ObjectExpr::dual(b)));
  CHECK(normalize(ObjectExpr::dual(ObjectExpr::dual(Q))) == Q);
  CHECK(normalize(ObjectExpr::dual(I)) == I);
  CHECK(normalize(ObjectExpr::dual(ObjectExpr::zero())) == ObjectExpr::zero());
}

TEST_CASE("object equality is structural on normal forms") {
  CHECK(obj_equal(ObjectExpr::dual(ObjectExpr::dual(Q)), Q));
  CHECK_FALSE(obj_equal(ObjectExpr::tensor(Q, I), Q));
  CHECK(obj_equal(ObjectExpr::dual(ObjectExpr::oplus(Q, Q)),
                  ObjectExpr::oplus(ObjectExpr::dual(Q), ObjectExpr::dual(Q))));
  CHECK_FALSE(obj_equal(ObjectExpr::gen("A", 2), ObjectExpr::gen("B", 2)));
}

TEST_CASE("textual syntax") {
  CHECK(parse_object("I") == I);
  CHECK(parse_object("0") == ObjectExpr::zero());
  CHECK(parse_object("Q[2]") == Q);
  CHECK(parse_object("Q[2]*") == ObjectExpr::dual(Q));
  CHECK(parse_object("Q[2]@Q[2]") == ObjectExpr::tensor(Q, Q));
  // '*' binds tightest; sums parse left-nested.
  CHECK(parse_object("A[1]+B[2]+C[3]") ==
        ObjectExpr::oplus(ObjectExpr::oplus(ObjectExpr::gen("A", 1), ObjectExpr::gen("B", 2)),
                          ObjectExpr::gen("C", 3)));
  CHECK(parse_object("A[2]@B[2]*") == ObjectExpr::tensor(ObjectExpr::gen("A", 2),
                                                         ObjectExpr::dual(ObjectExpr::gen("B", 2))));
  CHECK_THROWS_AS(parse_object("Q["), ParseError);
  CHECK_THROWS_AS(parse_object("Q[2]@"), ParseError);
  CHECK_THROWS_AS(ObjectExpr::gen("A", 0), std::invalid_argument);
}

TEST_CASE("random objects: normalization and printing invariants") {
  Rng rng = trial_rng(11, 0);
  for (int t = 0; t < 1000; ++t) {
    const ObjectExpr a = random_object(rng, 6, 6);
    const ObjectExpr n = normalize(a);
    REQUIRE(dim(n) == dim(a));
    CHECK(normalize(n) == n);
    CHECK(parse_object(to_string(a)) == a);
    CHECK(obj_equal(ObjectExpr::dual(ObjectExpr::dual(a)), a));
    CHECK(dim(ObjectExpr::dual(a)) == dim(a));
    const ObjectExpr b = random_object(rng, 6, 6);
    if (obj_equal(a, b)) CHECK(dim(a) == dim(b));
  }
}
