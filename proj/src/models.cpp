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

#include "sccckit/models.hpp"

#include <cstdlib>
#include <string>

namespace sccckit {

ModelHandle fdhilb() { return {"fdhilb", "FdHilb", true, false}; }
ModelHandle rel() { return {"rel", "Rel", true, false}; }
ModelHandle weights() { return {"weights", "WeightModel", true, false}; }

ModelHandle wproj_of(const ModelHandle& base) {
  return {"wproj:" + base.key, "WProj(" + base.name + ")", false, true};
}

ModelHandle model_from_key(const std::string& key) {
  if (key == "fdhilb") return fdhilb();
  if (key == "rel") return rel();
  if (key == "weights") return weights();
  if (key.rfind("wproj:", 0) == 0) {
    const std::string base = key.substr(6);
    if (base.rfind("wproj:", 0) != 0) return wproj_of(model_from_key(base));
  }
  throw UnknownModel("unknown model '" + key +
                     "'; expected fdhilb, rel, weights or wproj:<model>");
}

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SCCCKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("SCCCKIT_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

namespace {

ObjectExpr random_object_of(Rng& rng, std::size_t d, int depth) {
  static const char* const names[] = {"A", "B", "C"};
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto gen = [&] { return ObjectExpr::gen(names[pick(3)], d); };
  if (depth <= 0) return d == 1 && pick(2) == 0 ? ObjectExpr::unit() : gen();
  switch (pick(4)) {
    case 0:
      return d == 1 && pick(2) == 0 ? ObjectExpr::unit() : gen();
    case 1:
      return ObjectExpr::dual(random_object_of(rng, d, depth - 1));
    case 2: {
      std::vector<std::size_t> divisors;
      for (std::size_t a = 1; a <= d; ++a)
        if (d % a == 0) divisors.push_back(a);
      const std::size_t a = divisors[pick(divisors.size())];
      return ObjectExpr::tensor(random_object_of(rng, a, depth - 1),
                                random_object_of(rng, d / a, depth - 1));
    }
    default: {
      if (d < 2) return gen();
      const std::size_t a = 1 + pick(d - 1);
      return ObjectExpr::oplus(random_object_of(rng, a, depth - 1),
                               random_object_of(rng, d - a, depth - 1));
    }
  }
}

}  // namespace

ObjectExpr random_object(Rng& rng, std::size_t max_dim, int depth) {
  const std::size_t d = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, max_dim))(rng);
  return random_object_of(rng, d, depth);
}

Complex random_phase(Rng& rng) {
  const double theta = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
  return std::polar(1.0, theta);
}

CMorphism random_unitary(const std::vector<std::size_t>& dims, Rng& rng) {
  std::size_t n = 0;
  std::vector<ObjectExpr> parts;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    n += dims[i];
    parts.push_back(object_of_dim(dims[i], "A" + std::to_string(i)));
  }
  if (n == 0) throw TypeMismatch("random_unitary needs a positive total dimension");
  const ObjectExpr dom = object_of_dim(n, "A");
  const ObjectExpr cod = OplusDecomposition(parts).whole;
  for (int attempt = 0; attempt < 8; ++attempt) {
    CMorphism u = random_morphism<ComplexField>(rng, dom, cod);
    bool degenerate = false;
    // Modified Gram-Schmidt on the columns.
    for (std::size_t c = 0; c < n && !degenerate; ++c) {
      for (std::size_t k = 0; k < c; ++k) {
        Complex dot = 0.0;
        for (std::size_t r = 0; r < n; ++r) dot += std::conj(u(r, k)) * u(r, c);
        for (std::size_t r = 0; r < n; ++r) u(r, c) -= dot * u(r, k);
      }
      double norm = 0.0;
      for (std::size_t r = 0; r < n; ++r) norm += std::norm(u(r, c));
      norm = std::sqrt(norm);
      if (norm < 1e-8) {
        degenerate = true;
        break;
      }
      for (std::size_t r = 0; r < n; ++r) u(r, c) /= norm;
    }
    if (!degenerate) return u;
  }
  throw DegenerateSample("orthonormalization hit a near-zero column 8 times");
}

CMorphism random_unitary(const std::vector<std::size_t>& dims, std::uint64_t seed) {
  Rng rng = trial_rng(seed, 0);
  return random_unitary(dims, rng);
}

OplusDecomposition::OplusDecomposition(std::vector<ObjectExpr> ps) : parts(std::move(ps)) {
  if (parts.empty()) throw TypeMismatch("a decomposition needs at least one summand");
  whole = parts.front();
  std::size_t off = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) whole = ObjectExpr::oplus(whole, parts[i]);
    offsets.push_back(off);
    off += dim(parts[i]);
  }
}

OplusDecomposition OplusDecomposition::parse(std::string_view text) {
  ObjectExpr e = parse_object(text);
  std::vector<ObjectExpr> rev;
  while (e.kind() == ObjectExpr::Kind::Oplus) {
    rev.push_back(e.right());
    e = e.left();
  }
  rev.push_back(e);
  return OplusDecomposition(std::vector<ObjectExpr>(rev.rbegin(), rev.rend()));
}

}  // namespace sccckit
