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

#include "sccckit/report.hpp"

#include <fstream>
#include <sstream>

namespace sccckit {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::ExpectedFail:
      return "expected-fail";
  }
  return "fail";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "expected-fail") return Status::ExpectedFail;
  throw ParseError("unknown status '" + s + "'");
}

bool VerificationReport::ok() const {
  for (const auto& r : results)
    if (r.status == Status::Fail) return false;
  return true;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["schema"] = r.schema;
  j["suite"] = r.suite;
  j["model"] = r.model;
  j["seed"] = r.seed;
  j["tolerance"] = r.tolerance;
  j["trials"] = r.trials;
  j["max_dim"] = r.max_dim;
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = std::move(params);
  Json results = Json::array();
  for (const auto& c : r.results) {
    Json e;
    e["check"] = c.check;
    e["statement"] = c.statement;
    e["status"] = to_string(c.status);
    e["detail"] = c.detail;
    Json w = Json::array();
    for (const auto& x : c.witness) w.push_back(Json{{"label", x.label}, {"morphism", x.literal}});
    e["witness"] = std::move(w);
    results.push_back(std::move(e));
  }
  j["results"] = std::move(results);
  j["ok"] = r.ok();
  return j;
}

VerificationReport report_from_json(const Json& j) {
  try {
    VerificationReport r;
    r.schema = j.at("schema").get<int>();
    if (r.schema != 1) throw ParseError("unsupported report schema " + std::to_string(r.schema));
    r.suite = j.at("suite").get<std::string>();
    r.model = j.at("model").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.tolerance = j.at("tolerance").get<double>();
    r.trials = j.at("trials").get<std::size_t>();
    r.max_dim = j.at("max_dim").get<std::size_t>();
    for (const auto& [k, v] : j.at("parameters").items())
      r.parameters.emplace_back(k, v.get<std::string>());
    for (const auto& e : j.at("results")) {
      CheckResult c;
      c.check = e.at("check").get<std::string>();
      c.statement = e.at("statement").get<std::string>();
      c.status = status_from_string(e.at("status").get<std::string>());
      c.detail = e.at("detail").get<std::string>();
      for (const auto& w : e.at("witness"))
        c.witness.push_back({w.at("label").get<std::string>(), w.at("morphism")});
      r.results.push_back(std::move(c));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

namespace {

std::string emit_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "suite " << r.suite << " | model " << r.model << " | seed " << r.seed << " | trials "
      << r.trials << " | max-dim " << r.max_dim << " | tolerance " << r.tolerance;
  for (const auto& [k, v] : r.parameters) out << " | " << k << " " << v;
  out << "\n";
  std::size_t pass = 0, fail = 0, xfail = 0;
  for (const auto& c : r.results) {
    const std::string s = to_string(c.status);
    out << "  [" << s << "]" << std::string(15 - s.size(), ' ') << c.check;
    if (!c.detail.empty()) out << " -- " << c.detail;
    out << "\n";
    if (c.status == Status::Fail) {
      out << "      " << c.statement << "\n";
      for (const auto& w : c.witness) out << "      " << w.label << ": " << w.literal.dump() << "\n";
    }
    (c.status == Status::Pass ? pass : c.status == Status::Fail ? fail : xfail)++;
  }
  out << pass << " passed, " << fail << " failed, " << xfail << " expected failures\n";
  return out.str();
}

}  // namespace

std::string emit_report(const VerificationReport& r, ReportFormat format) {
  if (format == ReportFormat::Text) return emit_text(r);
  return to_json(r).dump(2) + "\n";
}

VerificationReport parse_report(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report is not JSON: ") + e.what());
  }
  return report_from_json(j);
}

void write_report(const VerificationReport& r, ReportFormat format, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << emit_report(r, format);
  if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace sccckit
