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

#include "mulsemi/report.hpp"

#include "mulsemi/errors.hpp"
#include "mulsemi/mulop.hpp"
#include "mulsemi/semigroup.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>

namespace mulsemi {

  namespace {

    struct Context {
      Scenario const &sc;
      SemigroupEvaluator const &sg;
      std::optional<Section> const &section;

      MulOperator const &op() const { return sg.op(); }
    };

    std::vector<Table> run_norm(Context const &c) {
      auto const r = is_bounded(c.op());
      return {{"norm", {"operator_norm", "growth_flag"}, {{r.sampled_norm, std::string(to_string(r.growth_flag))}}}};
    }

    std::vector<Table> run_invert(Context const &c, InvertAnalysis const &a) {
      Table t{"invert", {"invertible", "min_modulus", "inverse_norm", "point", "entry"}, {}};
      // entry is 1-based like the diagonal slots of the [phi] section
      try {
        MulOperator const inv = invert(c.op(), a.tol);
        double min_mod = std::numeric_limits<double>::infinity();
        std::size_t min_p = 0, min_i = 0;
        for (std::size_t p = 0; p < c.op().phi().size(); ++p)
          for (std::size_t i = 0; i < c.op().dim(); ++i)
            if (double const m = std::abs(c.op().phi().at(p)[i]); m < min_mod) {
              min_mod = m;
              min_p = p;
              min_i = i;
            }
        t.rows.push_back({true, min_mod, operator_norm(inv), c.op().space().label(min_p), static_cast<std::int64_t>(min_i + 1)});
      } catch (NotInvertible const &e) {
        t.rows.push_back({false, e.modulus(), std::numeric_limits<double>::infinity(), c.op().space().label(e.point().value_or(0)),
                          static_cast<std::int64_t>(e.entry() + 1)});
      }
      return {std::move(t)};
    }

    std::vector<Table> run_spectrum(Context const &c, SpectrumAnalysis const &a) {
      auto const grid = a.lambda_grid();
      auto const report = spectrum_scan(c.op(), grid, a.threshold, a.pole_tol);
      Table t{"spectrum", {"lambda_re", "lambda_im", "min_distance", "resolvent_sup", "class"}, {}};
      for (auto const &e : report.entries)
        t.rows.push_back({e.lambda.real(), e.lambda.imag(), e.min_distance, e.resolvent_sup, std::string(to_string(e.cls))});
      return {std::move(t)};
    }

    std::vector<Table> run_evolve(Context const &c, EvolveAnalysis const &a) {
      Table t{"evolve", {"t", "semigroup_norm", "section_norm", "evolved_norm"}, {}};
      double const s_norm = section_norm(*c.section);
      for (double time : a.t) t.rows.push_back({time, semigroup_norm(c.sg, time), s_norm, section_norm(evolve(c.sg, *c.section, time))});
      return {std::move(t)};
    }

    std::vector<Table> run_continuity(Context const &c, ContinuityAnalysis const &a) {
      auto const r = continuity_profiles(c.sg, *c.section, a.t);
      Table profile{"continuity", {"t", "strong_profile", "uniform_profile"}, {}};
      for (std::size_t k = 0; k < r.t_grid.size(); ++k) profile.rows.push_back({r.t_grid[k], r.strong_profile[k], r.uniform_profile[k]});
      Table witness{"continuity_witness", {"point", "t", "lower_bound", "constant_t"}, {}};
      if (r.witness)
        for (auto const &w : r.witness->points) witness.rows.push_back({c.op().space().label(w.point), w.t, w.lower_bound, r.witness->constant_t});
      return {std::move(profile), std::move(witness)};
    }

    std::vector<Table> run_generator(Context const &c, GeneratorAnalysis const &a) {
      Section s = *c.section;
      if (a.support) s = s.restricted_to({a.support->first - 1, a.support->second});
      Table t{"generator", {"h", "error", "ratio"}, {}};
      double previous = std::numeric_limits<double>::quiet_NaN();
      for (double h : a.h) {
        double const err = generator_diff_quotient(c.sg, s, h).error;
        t.rows.push_back({h, err, previous / err});
        previous = err;
      }
      return {std::move(t)};
    }

    std::vector<Table> run_t0(Context const &c, T0Analysis const &a) {
      auto const r = check_t0_condition(c.sg, a.t0);
      return {{"t0", {"t0", "value", "finite", "growth_flag"}, {{a.t0, r.value, r.finite, std::string(to_string(r.growth_flag))}}}};
    }

    std::vector<Table> run_recover(Context const &c, RecoverAnalysis const &a) {
      std::map<double, PhiField> samples;
      for (double h : a.h) {
        samples.emplace(h, c.sg.multiplier_field(h));
        samples.emplace(2.0 * h, c.sg.multiplier_field(2.0 * h));
      }
      PhiField const recovered = recover_phi_from_semigroup(samples, a.h);
      auto const &phi = c.op().phi();
      double entry_error = 0.0, reproduction = 0.0;
      for (std::size_t p = 0; p < phi.size(); ++p) {
        for (std::size_t i = 0; i < phi.dim(); ++i) entry_error = std::max(entry_error, std::abs(recovered.at(p)[i] - phi.at(p)[i]));
        for (double h : a.h) {
          auto const again = central_exp(Complex{h, 0.0} * recovered.at(p));
          auto const &sampled = samples.at(h).at(p);
          for (std::size_t i = 0; i < phi.dim(); ++i) reproduction = std::max(reproduction, std::abs(again[i] - sampled[i]));
        }
      }
      return {{"recover",
               {"samples", "max_entry_error", "max_reproduction_defect"},
               {{static_cast<std::int64_t>(samples.size()), entry_error, reproduction}}}};
    }

    template <class F>
    auto guarded(std::string const &what, F &&f) {
      try {
        return f();
      } catch (AnalysisError const &) {
        throw;
      } catch (std::exception const &e) {
        throw AnalysisError(what, e.what());
      }
    }

  } // namespace

  RunReport run(Scenario const &sc) {
    RunReport report;
    report.scenario = sc;
    report.echo = to_text(sc);
    if (sc.analyses.empty()) return report;

    PhiField field = guarded("phi", [&] { return build_phi(sc.phi, sc.space); });
    SemigroupEvaluator const sg(MulOperator(std::move(field), sc.domain_tolerance));
    std::optional<Section> section;
    if (sc.section) section = guarded("section", [&] { return build_section(*sc.section, sc.space, sc.norm); });
    Context const ctx{sc, sg, section};

    for (auto const &a : sc.analyses) {
      std::string const name(analysis_name(a));
      auto const start = std::chrono::steady_clock::now();
      auto tables = guarded(name, [&] {
        return std::visit(
           [&](auto const &x) -> std::vector<Table> {
             using T = std::decay_t<decltype(x)>;
             if constexpr (std::is_same_v<T, NormAnalysis>) return run_norm(ctx);
             else if constexpr (std::is_same_v<T, InvertAnalysis>) return run_invert(ctx, x);
             else if constexpr (std::is_same_v<T, SpectrumAnalysis>) return run_spectrum(ctx, x);
             else if constexpr (std::is_same_v<T, EvolveAnalysis>) return run_evolve(ctx, x);
             else if constexpr (std::is_same_v<T, ContinuityAnalysis>) return run_continuity(ctx, x);
             else if constexpr (std::is_same_v<T, GeneratorAnalysis>) return run_generator(ctx, x);
             else if constexpr (std::is_same_v<T, T0Analysis>) return run_t0(ctx, x);
             else return run_recover(ctx, x);
           },
           a);
      });
      std::chrono::duration<double> const elapsed = std::chrono::steady_clock::now() - start;
      report.results.push_back({name, std::move(tables), elapsed.count()});
    }
    return report;
  }

  // ---------------------------------------------------------------------------

  namespace {

    std::string csv_cell(Cell const &cell) {
      return std::visit(
         [](auto const &v) -> std::string {
           using T = std::decay_t<decltype(v)>;
           if constexpr (std::is_same_v<T, double>) return format_double(v);
           else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
           else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
           else {
             if (v.find_first_of(",\"\n") == std::string::npos) return v;
             std::string quoted = "\"";
             for (char ch : v) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
             return quoted + "\"";
           }
         },
         cell);
    }

    nlohmann::ordered_json json_cell(Cell const &cell) {
      return std::visit(
         [](auto const &v) -> nlohmann::ordered_json {
           using T = std::decay_t<decltype(v)>;
           if constexpr (std::is_same_v<T, double>) {
             if (!std::isfinite(v)) return format_double(v);
             return v;
           } else {
             return v;
           }
         },
         cell);
    }

  } // namespace

  void write_csv(Table const &table, std::ostream &os) {
    for (std::size_t k = 0; k < table.columns.size(); ++k) os << (k ? "," : "") << table.columns[k];
    os << '\n';
    for (auto const &row : table.rows) {
      for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_cell(row[k]);
      os << '\n';
    }
  }

  void write_json(RunReport const &report, std::ostream &os) {
    nlohmann::ordered_json doc;
    doc["tool"] = tool_name;
    doc["version"] = report.version;
    doc["scenario"] = report.echo;
    nlohmann::ordered_json analyses = nlohmann::ordered_json::object();
    for (auto const &r : report.results) {
      nlohmann::ordered_json tables = nlohmann::ordered_json::object();
      for (auto const &t : r.tables) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (auto const &row : t.rows) {
          nlohmann::ordered_json obj = nlohmann::ordered_json::object();
          for (std::size_t k = 0; k < t.columns.size(); ++k) obj[t.columns[k]] = json_cell(row[k]);
          rows.push_back(std::move(obj));
        }
        tables[t.name] = std::move(rows);
      }
      analyses[r.name] = std::move(tables);
    }
    doc["analyses"] = std::move(analyses);
    os << doc.dump(2) << '\n';
  }

  void emit(RunReport const &report, OutputFormat format, std::ostream &os) {
    if (format == OutputFormat::json) {
      write_json(report, os);
      return;
    }
    for (auto const &r : report.results)
      for (auto const &t : r.tables) {
        os << "# " << t.name << '\n';
        write_csv(t, os);
      }
  }

  namespace {
    std::ofstream open_output(std::filesystem::path const &path) {
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
      return out;
    }
  } // namespace

  void emit(RunReport const &report, OutputFormat format, std::filesystem::path const &path) {
    if (format == OutputFormat::json) {
      if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
      auto out = open_output(path);
      write_json(report, out);
      if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
      return;
    }
    std::filesystem::create_directories(path);
    {
      auto out = open_output(path / "scenario.ini");
      out << report.echo;
    }
    for (auto const &r : report.results)
      for (auto const &t : r.tables) {
        auto out = open_output(path / (t.name + ".csv"));
        write_csv(t, out);
        if (!out) throw std::runtime_error("failed writing '" + (path / (t.name + ".csv")).string() + "'");
      }
  }

} // namespace mulsemi
