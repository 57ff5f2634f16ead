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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sccckit/serialize.hpp"

namespace sccckit {

enum class Status { Pass, Fail, ExpectedFail };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

/// One labelled morphism attached to a result.
struct Witness {
  std::string label;
  Json literal;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckResult {
  std::string check;      // short identifier, e.g. "yanking"
  std::string statement;  // what is being claimed, in words
  Status status = Status::Pass;
  std::string detail;     // counts, distances, notes
  std::vector<Witness> witness;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
  int schema = 1;
  std::string suite;
  std::string model;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  std::size_t trials = 0;
  std::size_t max_dim = 0;
  /// Extra run parameters (e.g. nu), as ordered key/value strings.
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<CheckResult> results;

  /// True unless some result failed.
  bool ok() const;
  /// Process exit code: 0 iff ok().
  int exit_code() const { return ok() ? 0 : 1; }

  CheckResult& add(CheckResult r) {
    results.push_back(std::move(r));
    return results.back();
  }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

Json to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);

enum class ReportFormat { Text, Json };

std::string emit_report(const VerificationReport& r, ReportFormat format);

/// Inverse of emit_report(r, ReportFormat::Json). Throws ParseError.
VerificationReport parse_report(const std::string& json_text);

/// Writes the serialized report to a file. Throws IoError.
void write_report(const VerificationReport& r, ReportFormat format, const std::string& path);

template <InvolutiveSemiring S>
Witness witness_of(std::string label, const Morphism<S>& f) {
  return {std::move(label), to_literal(f)};
}

}  // namespace sccckit
