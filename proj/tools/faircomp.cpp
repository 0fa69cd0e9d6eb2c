// Copyright 2026 The faircomp Authors
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


// Command-line front end: solve, assign, axioms, table, fuzz.

#include "faircomp/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Fair compensation rules and axiom checks"};
  app.require_subcommand(1, 1);

  faircomp::RunConfig config;
  std::string out_path;
  std::size_t budget = 0;

  auto add_common = [&](CLI::App* sub, bool with_inputs, bool inputs_required) {
    if (with_inputs) {
      auto* opt = sub->add_option("inputs", config.inputs, "Problem JSON files");
      if (inputs_required) opt->required();
    }
    sub->add_option("--rules", config.rules, "Rules: e, sv, ic, pav, pmax, pdelta, edelta, par:<fn>, icprio:<order>, icchoice:<first|last>")
        ->delimiter(',');
    sub->add_option("--axioms", config.axioms, "Axiom slugs, e.g. consistency,balanced-impact")->delimiter(',');
    sub->add_option("--seed", config.seed, "Falsifier seed")->default_val(0);
    sub->add_option("--budget", budget, "Falsifier trials per cell");
    sub->add_option("--format", config.format, "json, csv or text")
        ->default_val("text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", out_path, "Write the report here instead of stdout");
  };

  add_common(app.add_subcommand("solve", "Compensation under each selected rule"), true, true);
  add_common(app.add_subcommand("assign", "Optimal value, all optimal assignments and T*"), true, true);
  add_common(app.add_subcommand("axioms", "Falsify axioms, or check them on given problems"), true, false);
  add_common(app.add_subcommand("table", "Verdict matrix against the published one"), false, false);
  add_common(app.add_subcommand("fuzz", "axioms with a large default budget"), true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? faircomp::kExitOk : faircomp::kExitInputError;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (app.get_subcommands().front()->count("--budget")) {
    if (budget < 1) {
      std::cerr << "error: --budget must be at least 1\n";
      return faircomp::kExitInputError;
    }
    config.budget = budget;
  }

  faircomp::CommandResult result = faircomp::run_command(config);
  if (result.exit_code == faircomp::kExitInputError || result.exit_code == faircomp::kExitResourceCap) {
    std::cerr << result.output;
    return result.exit_code;
  }
  if (out_path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return faircomp::kExitInputError;
    }
    out << result.output;
  }
  return result.exit_code;
}
