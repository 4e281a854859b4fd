// Copyright (c) 2026 The mulsemi authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: runs a scenario file or a built-in and writes CSV or JSON reports.
//
// Exit codes: 0 success, 2 configuration errors, 3 analysis errors.

#include "mulsemi/errors.hpp"
#include "mulsemi/report.hpp"
#include "mulsemi/scenario.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

  constexpr int exit_config = 2;
  constexpr int exit_analysis = 3;

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Multiplication operators and semigroups on sampled C0(Omega, E)", "mulsemi"};
  app.set_version_flag("--version", std::string(mulsemi::tool_version));

  std::string scenario_path, builtin, out_path, format_name;
  bool list = false, timings = false;
  auto *scenario_opt = app.add_option("--scenario", scenario_path, "Scenario file to run");
  auto *builtin_opt = app.add_option("--builtin", builtin, "Run a built-in scenario by name");
  scenario_opt->excludes(builtin_opt);
  app.add_option("--out", out_path, "Output file (json) or directory (csv); default: stdout");
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--list-builtins", list, "List built-in scenarios and exit");
  app.add_flag("--timings", timings, "Print wall-clock time per analysis to stderr");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : exit_config;
  }

  if (list) {
    for (auto const &name : mulsemi::builtin_names()) std::cout << name << '\n';
    return 0;
  }

  mulsemi::Scenario scenario;
  try {
    if (!scenario_path.empty()) scenario = mulsemi::load_scenario(scenario_path);
    else if (!builtin.empty()) scenario = mulsemi::load_builtin(builtin);
    else {
      std::cerr << "error: one of --scenario or --builtin is required\n" << app.help();
      return exit_config;
    }
  } catch (mulsemi::Error const &e) {
    std::cerr << "config error: " << e.what() << '\n';
    return exit_config;
  }

  auto format = scenario.output.format.value_or(mulsemi::OutputFormat::json);
  if (format_name == "csv") format = mulsemi::OutputFormat::csv;
  if (format_name == "json") format = mulsemi::OutputFormat::json;
  if (out_path.empty() && scenario.output.path) out_path = *scenario.output.path;

  mulsemi::RunReport report;
  try {
    report = mulsemi::run(scenario);
  } catch (mulsemi::Error const &e) {
    std::cerr << "analysis error: " << e.what() << '\n';
    return exit_analysis;
  }

  if (timings)
    for (auto const &r : report.results) std::cerr << r.name << ": " << r.wall_seconds << " s\n";

  try {
    if (out_path.empty()) mulsemi::emit(report, format, std::cout);
    else mulsemi::emit(report, format, std::filesystem::path(out_path));
  } catch (std::exception const &e) {
    std::cerr << "output error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
