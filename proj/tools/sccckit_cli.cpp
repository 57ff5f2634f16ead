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

// sccckit: run verification suites and protocols from the shell.
//
//   sccckit verify sccc --model fdhilb --trials 200 --seed 7
//   sccckit verify prep-state --model wproj:fdhilb --json report.json
//   sccckit wproj check --model fdhilb
//   sccckit protocol teleport --state "[[1,0],[0,0]]" --json

#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "sccckit/born.hpp"
#include "sccckit/suites.hpp"

namespace {

struct Flags {
  sccckit::SuiteOptions opts;
  std::optional<std::string> json;  // "" means stdout
  bool json_given = false;
};

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--model", f.opts.model, "fdhilb, rel, weights or wproj:<base>");
  app->add_option("--trials", f.opts.trials, "samples per check");
  app->add_option("--seed", f.opts.seed, "seed (default: $SCCCKIT_SEED or 0)");
  app->add_option("--tolerance", f.opts.tolerance, "relative tolerance");
  app->add_option("--max-dim", f.opts.max_dim, "largest sampled dimension");
  app->add_option_function<std::vector<std::string>>(
         "--json",
         [&f](const std::vector<std::string>& v) {
           f.json_given = true;
           f.json = v.empty() ? std::string() : v.front();
         },
         "emit JSON, to PATH if given")
      ->expected(0, 1)
      ->type_name("[PATH]");
}

int emit(const sccckit::VerificationReport& r, const Flags& f) {
  using sccckit::ReportFormat;
  if (f.json_given && f.json && !f.json->empty()) {
    sccckit::write_report(r, ReportFormat::Json, *f.json);
    std::cout << sccckit::emit_report(r, ReportFormat::Text);
  } else if (f.json_given) {
    std::cout << sccckit::emit_report(r, ReportFormat::Json);
  } else {
    std::cout << sccckit::emit_report(r, ReportFormat::Text);
  }
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sccckit: executable checks for strongly compact closed categories"};
  app.require_subcommand(1);
  Flags f;
  f.opts.seed = sccckit::default_seed();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "sccc | wproj | prep-state | ortho | born | equivalence | teleport")->required();
  add_common(verify, f);
  verify->add_option("--nu", f.opts.nu, "valuation exponent (1, 1/2 or 2)");
  verify->add_flag("--corrupt-trace", f.opts.corrupt_trace, "equivalence: use a broken trace");

  // Per-module spellings.
  auto* wproj = app.add_subcommand("wproj", "phase-quotient checks");
  wproj->add_subcommand("check", "run the wproj suite")->fallthrough();
  auto* ortho = app.add_subcommand("ortho", "sum and zero-morphism checks");
  ortho->add_subcommand("verify", "run the ortho suite")->fallthrough();
  auto* born = app.add_subcommand("born", "valuation and trace checks");
  born->add_subcommand("verify", "run the born suite")->fallthrough();
  for (auto* a : {wproj, ortho, born}) {
    a->require_subcommand(1);
    add_common(a, f);
  }
  born->add_option("--nu", f.opts.nu, "valuation exponent (1, 1/2 or 2)");

  auto* protocol = app.add_subcommand("protocol", "run a protocol");
  protocol->require_subcommand(1);
  auto* teleport = protocol->add_subcommand("teleport", "qubit teleportation")->fallthrough();
  add_common(protocol, f);
  protocol->add_option("--state", f.opts.state, "input state as [[re,im],...]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (verify->parsed()) f.opts.suite = suite;
  else if (wproj->parsed()) f.opts.suite = "wproj";
  else if (ortho->parsed()) f.opts.suite = "ortho";
  else if (born->parsed()) f.opts.suite = "born";
  else if (teleport->parsed()) f.opts.suite = "teleport";

  try {
    if (f.opts.suite == "born") {
      const auto nu = sccckit::Rational::parse(f.opts.nu).to_string();
      if (nu != "1" && nu != "1/2" && nu != "2")
        throw sccckit::ParseError("--nu must be 1, 1/2 or 2, got " + nu);
    }
    return emit(sccckit::run_suite(f.opts), f);
  } catch (const sccckit::UnknownSuite& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const sccckit::UnknownModel& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const sccckit::SccError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
