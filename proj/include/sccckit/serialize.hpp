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

#include <string>

#include "json.hpp"
#include "sccckit/morphism.hpp"

namespace sccckit {

using Json = nlohmann::ordered_json;

/// Matrix literal: {"dom": "...", "cod": "...", "entries": [[re, im], ...]}
/// with entries listed row-major.
template <InvolutiveSemiring S>
Json to_literal(const Morphism<S>& f) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) {
      const auto p = S::to_pair(f(r, c));
      entries.push_back(Json::array({p[0], p[1]}));
    }
  Json j;
  j["dom"] = to_string(f.dom());
  j["cod"] = to_string(f.cod());
  j["entries"] = std::move(entries);
  return j;
}

/// Inverse of to_literal. Throws ParseError on malformed input and
/// TypeMismatch when the entry count does not fit the types.
template <InvolutiveSemiring S>
Morphism<S> from_literal(const Json& j) {
  try {
    const ObjectExpr dom = parse_object(j.at("dom").get<std::string>());
    const ObjectExpr cod = parse_object(j.at("cod").get<std::string>());
    const Json& entries = j.at("entries");
    Morphism<S> m(dom, cod);
    if (entries.size() != m.rows() * m.cols())
      throw TypeMismatch("literal has " + std::to_string(entries.size()) + " entries, expected " +
                         std::to_string(m.rows() * m.cols()));
    std::size_t k = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c, ++k) {
        const Json& e = entries.at(k);
        if (!e.is_array() || e.size() != 2) throw ParseError("entry must be a [re, im] pair");
        m(r, c) = S::from_pair({e.at(0).get<double>(), e.at(1).get<double>()});
      }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed matrix literal: ") + e.what());
  }
}

/// A state I -> cod from a flat list of [re, im] pairs, e.g. "[[1,0],[0,0]]".
/// The codomain defaults to Q[n] for n pairs.
template <InvolutiveSemiring S>
Morphism<S> parse_state(const std::string& text, const std::string& cod_name = "Q") {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("state is not JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw ParseError("state must be a non-empty list of [re, im] pairs");
  Json lit;
  lit["dom"] = "I";
  lit["cod"] = j.size() == 1 ? std::string("I") : cod_name + "[" + std::to_string(j.size()) + "]";
  lit["entries"] = j;
  return from_literal<S>(lit);
}

}  // namespace sccckit
