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

#pragma once

/**
 * @file
 * @brief Running scenarios and serializing their results as CSV or JSON.
 */

#include "mulsemi/scenario.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace mulsemi {

  inline constexpr std::string_view tool_name = "mulsemi";
  inline constexpr std::string_view tool_version = "0.1.0";

  using Cell = std::variant<double, std::int64_t, bool, std::string>;

  /// Column-oriented result table with a fixed header.
  struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
  };

  struct AnalysisResult {
    std::string name;
    /// The first table carries the analysis name; extra tables are suffixed (e.g. continuity_witness).
    std::vector<Table> tables;
    double wall_seconds = 0.0;
  };

  struct RunReport {
    Scenario scenario;
    /// Canonical scenario text, see to_text().
    std::string echo;
    std::string version{tool_version};
    std::vector<AnalysisResult> results;
  };

  /// Runs every analysis in order. Failures are rethrown as AnalysisError naming the analysis.
  [[nodiscard]] RunReport run(Scenario const &sc);

  /// One CSV document (header plus rows, LF line endings).
  void write_csv(Table const &table, std::ostream &os);

  /// Single JSON document: tool, version, scenario echo and one key per analysis.
  void write_json(RunReport const &report, std::ostream &os);

  /**
   * @brief Writes a report.
   *
   * json: a single document at `path`. csv: `path` is a directory receiving one `<table>.csv` per
   * result table and `scenario.ini` holding the echo. Throws std::runtime_error on IO failure.
   */
  void emit(RunReport const &report, OutputFormat format, std::filesystem::path const &path);

  /// Writes to a stream; csv documents are separated by `# <table>` lines.
  void emit(RunReport const &report, OutputFormat format, std::ostream &os);

} // namespace mulsemi
