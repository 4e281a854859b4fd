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

#include "mulsemi/scenario.hpp"

#include "mulsemi/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace mulsemi {

  std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
  }

  std::vector<double> LinearRange::values() const {
    std::vector<double> out;
    out.reserve(count);
    if (count == 1) {
      out.push_back(lo);
      return out;
    }
    for (std::size_t k = 0; k < count; ++k) {
      double const frac = static_cast<double>(k) / static_cast<double>(count - 1);
      out.push_back(k + 1 == count ? hi : lo + (hi - lo) * frac);
    }
    return out;
  }

  std::vector<Complex> SpectrumAnalysis::lambda_grid() const {
    std::vector<Complex> out;
    for (auto const &e : points) {
      Complex const z = eval(e, Complex{});
      out.emplace_back(z.real() + 0.0, z.imag() + 0.0); // no negative zeros in reports
    }
    if (grid_re && grid_im) {
      auto const re = grid_re->values();
      auto const im = grid_im->values();
      for (double b : im)
        for (double a : re) out.emplace_back(a, b);
    }
    return out;
  }

  std::string_view analysis_name(Analysis const &a) noexcept {
    static constexpr std::string_view names[] = {"norm", "invert", "spectrum", "evolve", "continuity", "generator", "t0", "recover"};
    return names[a.index()];
  }

  namespace {

    // -------------------------------------------------------------------------
    // Raw syntax: sections of key = value lines

    struct Item {
      std::string text;
      bool quoted = false;
    };

    struct Entry {
      std::string key;
      std::vector<Item> items;
      std::size_t line = 0;
    };

    struct RawSection {
      std::string name;
      std::size_t line = 0;
      std::vector<Entry> entries;
    };

    std::string trim(std::string_view s) {
      auto const b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) return {};
      auto const e = s.find_last_not_of(" \t\r");
      return std::string(s.substr(b, e - b + 1));
    }

    std::vector<Item> split_items(std::string_view value, std::size_t line) {
      std::vector<Item> items;
      std::string_view rest = value;
      while (true) {
        auto const b = rest.find_first_not_of(" \t\r");
        if (b == std::string_view::npos) {
          if (!items.empty()) throw ConfigError("empty list element", line);
          break;
        }
        rest.remove_prefix(b);
        Item item;
        if (rest.front() == '"') {
          auto const close = rest.find('"', 1);
          if (close == std::string_view::npos) throw ConfigError("unterminated quoted value", line);
          item.text = std::string(rest.substr(1, close - 1));
          item.quoted = true;
          rest.remove_prefix(close + 1);
          auto const after = rest.find_first_not_of(" \t\r");
          rest.remove_prefix(after == std::string_view::npos ? rest.size() : after);
          if (!rest.empty() && rest.front() != ',') throw ConfigError("expected ',' after quoted value", line);
        } else {
          auto const comma = rest.find(',');
          item.text = trim(rest.substr(0, comma));
          if (item.text.empty()) throw ConfigError("empty list element", line);
          if (item.text.find('"') != std::string::npos) throw ConfigError("stray quote in value", line);
          rest.remove_prefix(comma == std::string_view::npos ? rest.size() : comma);
        }
        items.push_back(std::move(item));
        if (rest.empty()) break;
        rest.remove_prefix(1); // ','
      }
      return items;
    }

    std::vector<RawSection> lex(std::string_view text) {
      std::vector<RawSection> sections;
      std::set<std::string> seen;
      std::size_t line_no = 0;
      std::size_t start = 0;
      while (start <= text.size()) {
        auto const nl = text.find('\n', start);
        std::string_view raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        // strip a comment that is not inside quotes
        bool in_quotes = false;
        for (std::size_t k = 0; k < raw.size(); ++k) {
          if (raw[k] == '"') in_quotes = !in_quotes;
          if (raw[k] == '#' && !in_quotes) {
            raw = raw.substr(0, k);
            break;
          }
        }
        std::string const line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
          if (line.back() != ']') throw ConfigError("malformed section header", line_no);
          std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
          // collapse internal whitespace of "analysis <name>"
          std::istringstream words(name);
          std::string word, normalized;
          while (words >> word) normalized += (normalized.empty() ? "" : " ") + word;
          if (normalized.empty()) throw ConfigError("empty section header", line_no);
          if (!seen.insert(normalized).second) throw ConfigError("duplicate section [" + normalized + "]", line_no);
          sections.push_back({normalized, line_no, {}});
          continue;
        }
        auto const eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line_no);
        if (sections.empty()) throw ConfigError("key outside of any section", line_no);
        Entry entry;
        entry.key = trim(std::string_view(line).substr(0, eq));
        entry.line = line_no;
        if (entry.key.empty()) throw ConfigError("missing key before '='", line_no);
        for (auto const &e : sections.back().entries)
          if (e.key == entry.key) throw ConfigError("duplicate key", line_no, entry.key);
        entry.items = split_items(std::string_view(line).substr(eq + 1), line_no);
        if (entry.items.empty()) throw ConfigError("missing value", line_no, entry.key);
        sections.back().entries.push_back(std::move(entry));
      }
      return sections;
    }

    // -------------------------------------------------------------------------
    // Typed access

    class SectionReader {
      public:
      explicit SectionReader(RawSection const &s) : s_(s) {}

      [[nodiscard]] Entry const *find(std::string_view key) {
        for (auto const &e : s_.entries)
          if (e.key == key) {
            used_.insert(e.key);
            return &e;
          }
        return nullptr;
      }

      [[nodiscard]] Entry const &require(std::string_view key) {
        Entry const *e = find(key);
        if (e == nullptr) throw ConfigError("missing key '" + std::string(key) + "' in [" + s_.name + "]", s_.line, std::string(key));
        return *e;
      }

      void finish() const {
        for (auto const &e : s_.entries)
          if (!used_.contains(e.key)) throw ConfigError("unknown key '" + e.key + "' in [" + s_.name + "]", e.line, e.key);
      }

      [[nodiscard]] std::size_t line() const noexcept { return s_.line; }

      private:
      RawSection const &s_;
      std::set<std::string> used_;
    };

    Item const &single(Entry const &e) {
      if (e.items.size() != 1) throw ConfigError("expected a single value", e.line, e.key);
      return e.items.front();
    }

    std::string bare(Entry const &e) {
      Item const &it = single(e);
      if (it.quoted) throw ConfigError("value must not be quoted", e.line, e.key);
      return it.text;
    }

    double to_number(Item const &it, Entry const &e) {
      if (it.quoted) throw ConfigError("numbers must not be quoted", e.line, e.key);
      double v = 0.0;
      char const *first = it.text.data();
      char const *last = first + it.text.size();
      if (*first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc{} || ptr != last || !std::isfinite(v)) throw ConfigError("invalid number '" + it.text + "'", e.line, e.key);
      return v;
    }

    double number(Entry const &e) { return to_number(single(e), e); }

    std::vector<double> numbers(Entry const &e) {
      std::vector<double> out;
      for (auto const &it : e.items) out.push_back(to_number(it, e));
      return out;
    }

    std::size_t count(Entry const &e) {
      double const v = number(e);
      if (v < 1.0 || v != std::floor(v) || v > 1e9) throw ConfigError("expected a positive integer", e.line, e.key);
      return static_cast<std::size_t>(v);
    }

    bool boolean(Entry const &e) {
      std::string const v = bare(e);
      if (v == "true") return true;
      if (v == "false") return false;
      throw ConfigError("expected true or false", e.line, e.key);
    }

    double positive(Entry const &e) {
      double const v = number(e);
      if (!(v > 0.0)) throw ConfigError("expected a positive number", e.line, e.key);
      return v;
    }

    std::vector<Expr> expressions(Entry const &e) {
      std::vector<Expr> out;
      for (auto const &it : e.items) {
        if (!it.quoted) throw ConfigError("expressions must be double-quoted", e.line, e.key);
        try {
          out.push_back(parse(it.text));
        } catch (SyntaxError const &err) {
          throw SyntaxError("line " + std::to_string(e.line) + ", " + e.key + " \"" + it.text + "\": " + err.message(), err.position());
        }
      }
      return out;
    }

    LinearRange linear_range(Entry const &e) {
      if (e.items.size() != 3) throw ConfigError("expected 'lo, hi, count'", e.line, e.key);
      LinearRange r;
      r.lo = to_number(e.items[0], e);
      r.hi = to_number(e.items[1], e);
      double const c = to_number(e.items[2], e);
      if (c < 1.0 || c != std::floor(c) || c > 1e7) throw ConfigError("grid count must be a positive integer", e.line, e.key);
      r.count = static_cast<std::size_t>(c);
      if (r.count > 1 && !(r.lo < r.hi)) throw ConfigError("grid needs lo < hi", e.line, e.key);
      return r;
    }

    SpaceModel read_space(SectionReader &r) {
      auto const &kind_entry = r.require("kind");
      std::string const kind = bare(kind_entry);
      try {
        if (kind == "finite") {
          std::size_t const m = count(r.require("points"));
          std::vector<std::string> labels;
          if (auto const *e = r.find("labels")) {
            for (auto const &it : e->items) labels.push_back(it.text);
            if (labels.size() != m) throw ConfigError("expected " + std::to_string(m) + " labels", e->line, e->key);
          }
          return SpaceModel::finite(m, std::move(labels));
        }
        if (kind == "truncated_naturals") return SpaceModel::truncated_naturals(count(r.require("N")));
        if (kind == "interval_grid") {
          double const a = number(r.require("a"));
          double const b = number(r.require("b"));
          double const step = positive(r.require("step"));
          bool unbounded = false;
          if (auto const *e = r.find("unbounded")) unbounded = boolean(*e);
          if (!(a < b)) throw ConfigError("interval grid needs a < b", r.line());
          return SpaceModel::interval_grid(a, b, step, unbounded);
        }
      } catch (std::invalid_argument const &err) {
        throw ConfigError(err.what(), r.line());
      }
      throw ConfigError("unknown space kind '" + kind + "'", kind_entry.line, "kind");
    }

    NormSpec read_norm(SectionReader &r, std::size_t dim) {
      std::string kind = "sup";
      std::size_t kind_line = r.line();
      if (auto const *e = r.find("norm")) {
        kind = bare(*e);
        kind_line = e->line;
      }
      if (kind == "sup") return NormSpec::sup();
      if (kind == "p") {
        auto const &e = r.require("p");
        double const p = number(e);
        if (!(p >= 1.0)) throw ConfigError("p must be >= 1", e.line, "p");
        return NormSpec::p_norm(p);
      }
      if (kind == "weighted_sup") {
        auto const &e = r.require("weights");
        auto w = numbers(e);
        if (w.size() != dim) throw ConfigError("expected " + std::to_string(dim) + " weights", e.line, "weights");
        for (double x : w)
          if (!(x > 0.0)) throw ConfigError("weights must be strictly positive", e.line, "weights");
        return NormSpec::weighted_sup(std::move(w));
      }
      throw ConfigError("unknown norm '" + kind + "'", kind_line, "norm");
    }

    std::vector<double> time_list(Entry const &e, bool allow_zero) {
      auto t = numbers(e);
      for (double v : t)
        if (allow_zero ? !(v >= 0.0) : !(v > 0.0))
          throw ConfigError(allow_zero ? "times must be >= 0" : "values must be positive", e.line, e.key);
      return t;
    }

    bool strictly_increasing(std::vector<double> const &v) {
      for (std::size_t k = 1; k < v.size(); ++k)
        if (!(v[k] > v[k - 1])) return false;
      return true;
    }

    Analysis read_analysis(std::string_view name, SectionReader &r, std::size_t n_points) {
      if (name == "norm") return NormAnalysis{};
      if (name == "invert") {
        InvertAnalysis a;
        if (auto const *e = r.find("tol")) a.tol = positive(*e);
        return a;
      }
      if (name == "spectrum") {
        SpectrumAnalysis a;
        if (auto const *e = r.find("points")) {
          a.points = expressions(*e);
          for (auto const &ex : a.points)
            if (ex.uses_variable()) throw ConfigError("spectrum points must be constant expressions", e->line, e->key);
          try {
            (void)a.lambda_grid();
          } catch (EvalError const &err) {
            throw ConfigError(std::string("spectrum point: ") + err.what(), e->line, e->key);
          }
        }
        auto const *re = r.find("grid_re");
        auto const *im = r.find("grid_im");
        if ((re == nullptr) != (im == nullptr)) throw ConfigError("grid_re and grid_im must be given together", r.line());
        if (re != nullptr) {
          a.grid_re = linear_range(*re);
          a.grid_im = linear_range(*im);
        }
        if (a.points.empty() && !a.grid_re) throw ConfigError("spectrum needs points or grid_re/grid_im", r.line());
        if (auto const *e = r.find("threshold")) a.threshold = positive(*e);
        if (auto const *e = r.find("pole_tol")) a.pole_tol = positive(*e);
        return a;
      }
      if (name == "evolve") return EvolveAnalysis{time_list(r.require("t"), true)};
      if (name == "continuity") {
        auto const &e = r.require("t");
        auto t = time_list(e, false);
        if (!strictly_increasing(t)) throw ConfigError("continuity times must be strictly increasing", e.line, "t");
        return ContinuityAnalysis{std::move(t)};
      }
      if (name == "generator") {
        GeneratorAnalysis a;
        if (auto const *e = r.find("h")) a.h = time_list(*e, false);
        if (auto const *e = r.find("support")) {
          if (e->items.size() != 2) throw ConfigError("support expects 'first, last' (1-based, inclusive)", e->line, e->key);
          double const lo = to_number(e->items[0], *e), hi = to_number(e->items[1], *e);
          if (lo < 1.0 || hi < lo || lo != std::floor(lo) || hi != std::floor(hi) || hi > static_cast<double>(n_points))
            throw ConfigError("support must satisfy 1 <= first <= last <= number of points", e->line, e->key);
          a.support = std::pair{static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
        }
        return a;
      }
      if (name == "t0") {
        T0Analysis a;
        if (auto const *e = r.find("t0")) {
          a.t0 = number(*e);
          if (!(a.t0 > 0.0 && a.t0 <= 1.0)) throw ConfigError("t0 must lie in (0, 1]", e->line, e->key);
        }
        return a;
      }
      if (name == "recover") {
        RecoverAnalysis a;
        if (auto const *e = r.find("h")) {
          a.h = time_list(*e, false);
          auto sorted = a.h;
          std::ranges::sort(sorted);
          if (std::ranges::adjacent_find(sorted) != sorted.end()) throw ConfigError("recovery steps must be distinct", e->line, e->key);
        }
        return a;
      }
      throw ConfigError("unknown analysis '" + std::string(name) + "'", r.line());
    }

    bool needs_section(Analysis const &a) {
      return std::holds_alternative<EvolveAnalysis>(a) || std::holds_alternative<ContinuityAnalysis>(a)
             || std::holds_alternative<GeneratorAnalysis>(a);
    }

  } // namespace

  Scenario parse_scenario(std::string_view text) {
    auto const sections = lex(text);
    Scenario sc;

    RawSection const *space = nullptr, *lattice = nullptr, *phi = nullptr, *section = nullptr, *meta = nullptr, *output = nullptr;
    std::vector<RawSection const *> analyses;
    for (auto const &s : sections) {
      if (s.name == "scenario") meta = &s;
      else if (s.name == "space") space = &s;
      else if (s.name == "lattice") lattice = &s;
      else if (s.name == "phi") phi = &s;
      else if (s.name == "section") section = &s;
      else if (s.name == "output") output = &s;
      else if (s.name.starts_with("analysis ")) analyses.push_back(&s);
      else if (s.name == "analysis") throw ConfigError("analysis section needs a name, e.g. [analysis spectrum]", s.line);
      else throw ConfigError("unknown section [" + s.name + "]", s.line);
    }
    if (space == nullptr) throw ConfigError("missing [space] section", 0);
    if (phi == nullptr) throw ConfigError("missing [phi] section", 0);

    if (meta != nullptr) {
      SectionReader r(*meta);
      if (auto const *e = r.find("name")) sc.name = single(*e).text;
      r.finish();
    }

    {
      SectionReader r(*space);
      sc.space = read_space(r);
      r.finish();
    }

    {
      SectionReader r(*phi);
      auto const &e = r.require("entries");
      sc.phi = PhiSpec(expressions(e));
      if (auto const *t = r.find("domain_tolerance")) sc.domain_tolerance = positive(*t);
      r.finish();
    }

    if (lattice != nullptr) {
      SectionReader r(*lattice);
      if (auto const *e = r.find("dimension")) {
        if (count(*e) != sc.phi.dim())
          throw ConfigError("dimension " + bare(*e) + " does not match the " + std::to_string(sc.phi.dim()) + " phi entries", e->line, e->key);
      }
      sc.norm = read_norm(r, sc.phi.dim());
      r.finish();
    }

    if (section != nullptr) {
      SectionReader r(*section);
      auto const &e = r.require("entries");
      PhiSpec spec(expressions(e));
      if (spec.dim() != sc.phi.dim())
        throw ConfigError("section has " + std::to_string(spec.dim()) + " entries, phi has " + std::to_string(sc.phi.dim()), e.line, e.key);
      sc.section = std::move(spec);
      r.finish();
    }

    for (auto const *s : analyses) {
      SectionReader r(*s);
      Analysis a = read_analysis(std::string_view(s->name).substr(std::string_view("analysis ").size()), r, sc.space.size());
      if (needs_section(a) && !sc.section)
        throw ConfigError("analysis '" + std::string(analysis_name(a)) + "' needs a [section]", s->line);
      r.finish();
      sc.analyses.push_back(std::move(a));
    }

    if (output != nullptr) {
      SectionReader r(*output);
      if (auto const *e = r.find("format")) {
        std::string const f = bare(*e);
        if (f == "csv") sc.output.format = OutputFormat::csv;
        else if (f == "json") sc.output.format = OutputFormat::json;
        else throw ConfigError("format must be csv or json", e->line, e->key);
      }
      if (auto const *e = r.find("path")) sc.output.path = single(*e).text;
      r.finish();
    }
    return sc;
  }

  Scenario load_scenario(std::string const &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open scenario file '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
  }

  // ---------------------------------------------------------------------------
  // Canonical text

  namespace {

    std::string join_numbers(std::vector<double> const &v) {
      std::string out;
      for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + format_double(v[k]);
      return out;
    }

    std::string join_exprs(std::vector<Expr> const &v) {
      std::string out;
      for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", \"" : "\"") + to_string(v[k]) + "\"";
      return out;
    }

    std::string range_text(LinearRange const &r) { return format_double(r.lo) + ", " + format_double(r.hi) + ", " + std::to_string(r.count); }

    void write_analysis(std::ostringstream &os, Analysis const &a) {
      os << "\n[analysis " << analysis_name(a) << "]\n";
      std::visit(
         [&os](auto const &x) {
           using T = std::decay_t<decltype(x)>;
           if constexpr (std::is_same_v<T, InvertAnalysis>) {
             os << "tol = " << format_double(x.tol) << '\n';
           } else if constexpr (std::is_same_v<T, SpectrumAnalysis>) {
             if (!x.points.empty()) os << "points = " << join_exprs(x.points) << '\n';
             if (x.grid_re) os << "grid_re = " << range_text(*x.grid_re) << '\n';
             if (x.grid_im) os << "grid_im = " << range_text(*x.grid_im) << '\n';
             os << "threshold = " << format_double(x.threshold) << '\n';
             os << "pole_tol = " << format_double(x.pole_tol) << '\n';
           } else if constexpr (std::is_same_v<T, EvolveAnalysis> || std::is_same_v<T, ContinuityAnalysis>) {
             os << "t = " << join_numbers(x.t) << '\n';
           } else if constexpr (std::is_same_v<T, GeneratorAnalysis>) {
             os << "h = " << join_numbers(x.h) << '\n';
             if (x.support) os << "support = " << x.support->first << ", " << x.support->second << '\n';
           } else if constexpr (std::is_same_v<T, T0Analysis>) {
             os << "t0 = " << format_double(x.t0) << '\n';
           } else if constexpr (std::is_same_v<T, RecoverAnalysis>) {
             os << "h = " << join_numbers(x.h) << '\n';
           }
         },
         a);
    }

  } // namespace

  std::string to_text(Scenario const &s) {
    std::ostringstream os;
    if (!s.name.empty()) os << "[scenario]\nname = " << s.name << "\n\n";

    os << "[space]\n";
    switch (s.space.kind()) {
      case SpaceModel::Kind::finite: {
        os << "kind = finite\npoints = " << s.space.size() << '\n';
        if (!(SpaceModel::finite(s.space.size()) == s.space)) {
          os << "labels = ";
          for (std::size_t k = 0; k < s.space.size(); ++k) os << (k ? ", \"" : "\"") << s.space.labels()[k] << '"';
          os << '\n';
        }
        break;
      }
      case SpaceModel::Kind::truncated_naturals: os << "kind = truncated_naturals\nN = " << s.space.size() << '\n'; break;
      case SpaceModel::Kind::interval_grid:
        os << "kind = interval_grid\na = " << format_double(s.space.grid_a()) << "\nb = " << format_double(s.space.grid_b())
           << "\nstep = " << format_double(s.space.grid_step()) << "\nunbounded = " << (s.space.has_unbounded_direction() ? "true" : "false")
           << '\n';
        break;
    }

    os << "\n[lattice]\ndimension = " << s.dimension() << '\n';
    switch (s.norm.kind()) {
      case NormSpec::Kind::sup: os << "norm = sup\n"; break;
      case NormSpec::Kind::p: os << "norm = p\np = " << format_double(s.norm.p()) << '\n'; break;
      case NormSpec::Kind::weighted_sup: os << "norm = weighted_sup\nweights = " << join_numbers(s.norm.weights()) << '\n'; break;
    }

    os << "\n[phi]\nentries = " << join_exprs(s.phi.exprs()) << "\ndomain_tolerance = " << format_double(s.domain_tolerance) << '\n';
    if (s.section) os << "\n[section]\nentries = " << join_exprs(s.section->exprs()) << '\n';
    for (auto const &a : s.analyses) write_analysis(os, a);

    if (s.output.format || s.output.path) {
      os << "\n[output]\n";
      if (s.output.format) os << "format = " << (*s.output.format == OutputFormat::csv ? "csv" : "json") << '\n';
      if (s.output.path) os << "path = " << *s.output.path << '\n';
    }
    return os.str();
  }

  // ---------------------------------------------------------------------------
  // Built-in scenarios

  namespace {

    constexpr std::string_view example_5_i = R"ini(# Compact base space: every continuous symbol is bounded, the semigroup is uniformly continuous.
[scenario]
name = example_5_i

[space]
kind = interval_grid
a = 0
b = 1
step = 0.05
unbounded = false

[lattice]
dimension = 2
norm = p
p = 2

[phi]
entries = "i*sin(3*x) - x", "-exp(x)"

[section]
entries = "cos(x)", "x*(1 - x)"

[analysis norm]

[analysis invert]

[analysis spectrum]
points = "0", "-1", "-exp(1)", "1", "i", "-0.5 + i*sin(1.5)"
grid_re = -3, 1, 9
grid_im = -1, 1, 5

[analysis evolve]
t = 0, 0.1, 1, 10

[analysis continuity]
t = 1e-6, 1e-4, 1e-2, 0.1, 1

[analysis generator]
h = 1e-2, 5e-3, 2.5e-3, 1.25e-3

[analysis t0]
t0 = 1

[analysis recover]
h = 1e-2, 5e-3, 2.5e-3
)ini";

    constexpr std::string_view example_5_ii = R"ini(# phi = q I_E with q(x) = i x unbounded on [0, infinity) but Re q <= 0: growth bound w = 0.
[scenario]
name = example_5_ii

[space]
kind = interval_grid
a = 0
b = 20
step = 0.1
unbounded = true

[lattice]
dimension = 2
norm = sup

[phi]
entries = "i*x", "i*x"

[section]
entries = "exp(-x)", "exp(-x^2)"

[analysis norm]

[analysis spectrum]
points = "0", "5*i", "12.5*i", "20*i", "1", "-1 + 3*i", "0.5 + 10*i"

[analysis evolve]
t = 0, 0.5, 1, 2, 5

[analysis continuity]
t = 1e-6, 1e-4, 1e-2, 0.1, 1

[analysis generator]
h = 1e-2, 5e-3, 2.5e-3, 1.25e-3
support = 1, 51

[analysis t0]
t0 = 0.5

[analysis recover]
h = 1e-2, 5e-3, 2.5e-3
)ini";

    constexpr std::string_view example_5_iii = R"ini(# c_0(C^2) with phi(n) = diag(i n, -n^2): strongly but not uniformly continuous.
[scenario]
name = example_5_iii

[space]
kind = truncated_naturals
N = 100

[lattice]
dimension = 2
norm = sup

[phi]
entries = "i*x", "-x^2"

[section]
entries = "1/x^2", "1/x^2"

[analysis norm]

[analysis invert]

[analysis spectrum]
points = "i", "2*i", "3*i", "4*i", "5*i", "6*i", "7*i", "8*i", "9*i", "10*i", "-1", "-4", "-9", "-16", "-25", "-36", "-49", "-64", "-81", "-100", "1", "0.5", "0.5 + 0.5*i"

[analysis evolve]
t = 0, 0.1, 1, 10

[analysis continuity]
t = 1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 0.1, 1

[analysis generator]
h = 1e-2, 5e-3, 2.5e-3, 1.25e-3
support = 1, 5

[analysis t0]
t0 = 1

[analysis recover]
h = 1e-2, 5e-3, 2.5e-3
)ini";

    constexpr std::string_view example_5_iv = R"ini(# K = {1, ..., m}: C(K, E) = E^m and the semigroup is the diagonal operator matrix diag(e^{t phi_1}, ..., e^{t phi_m}).
[scenario]
name = example_5_iv

[space]
kind = finite
points = 4

[lattice]
dimension = 3
norm = weighted_sup
weights = 1, 2, 0.5

[phi]
entries = "-x", "i*x - 1", "-x^2/4 + i*cos(x)"

[section]
entries = "1", "1/(2*x)", "x/2"

[analysis norm]

[analysis invert]

[analysis spectrum]
points = "-1", "-2", "-3", "-4", "-1 + i", "-1 + 2*i", "-1 + 3*i", "-1 + 4*i", "1", "0", "i"
grid_re = -5, 1, 13
grid_im = -1, 5, 13

[analysis evolve]
t = 0, 0.1, 1, 10

[analysis continuity]
t = 1e-6, 1e-4, 1e-2, 0.1, 1

[analysis generator]
h = 1e-2, 5e-3, 2.5e-3, 1.25e-3

[analysis t0]
t0 = 1

[analysis recover]
h = 1e-2, 5e-3, 2.5e-3
)ini";

    constexpr std::pair<std::string_view, std::string_view> builtins[] = {
       {"example_5_i", example_5_i},
       {"example_5_ii", example_5_ii},
       {"example_5_iii", example_5_iii},
       {"example_5_iv", example_5_iv},
    };

  } // namespace

  std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (auto const &[name, text] : builtins) out.emplace_back(name);
    return out;
  }

  std::string_view builtin_text(std::string_view name) {
    for (auto const &[n, text] : builtins)
      if (n == name) return text;
    throw ConfigError("unknown built-in scenario '" + std::string(name) + "'", 0);
  }

  Scenario load_builtin(std::string_view name) { return parse_scenario(builtin_text(name)); }

} // namespace mulsemi
