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

#ifndef FAIRCOMP_TABLE_HPP
#define FAIRCOMP_TABLE_HPP

#include "faircomp/falsify.hpp"
#include "faircomp/json_io.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace faircomp {

// Published verdicts, one string per axiom in row order, one character per
// rule in the column order E, SV, IC, P^Av, P^max, P^Delta, E^Delta.
inline const std::vector<std::string>& table_rule_order() {
  static const std::vector<std::string> order{"E", "SV", "IC", "P^Av", "P^max", "P^Delta", "E^Delta"};
  return order;
}

inline std::optional<bool> expected_verdict(const std::string& rule, AxiomId axiom) {
  static const std::array<const char*, 26> rows{
      "+++++++",  // efficiency
      "++-++++",  // continuity
      "-++----",  // boundedness
      "+++++++",  // symmetry
      "+--++--",  // pi-symmetry
      "++-++++",  // order preservation
      "-+-++++",  // strict order preservation
      "---+---",  // strong order preservation
      "+--++--",  // pi-order preservation
      "+------",  // group productivity monotonicity
      "++-++-+",  // individual productivity monotonicity
      "++-++-+",  // strict individual productivity monotonicity
      "---+---",  // strong individual productivity monotonicity
      "-++----",  // constant productivity
      "-++++++",  // trivialness
      "-+-----",  // balanced impact
      "--+----",  // consistency
      "--+----",  // weak consistency
      "-+++++-",  // independence of null workers
      "-------",  // no harm from hiring
      "++-++--",  // solidarity in hiring
      "++-++++",  // independence of null tasks
      "+++-+++",  // independence of unassigned tasks
      "+--+---",  // additivity
      "+-++---",  // weak additivity
      "+++++++",  // homogeneity
  };
  const auto& order = table_rule_order();
  auto it = std::find(order.begin(), order.end(), rule);
  if (it == order.end()) return std::nullopt;
  std::size_t row = 0;
  while (kAxioms[row].id != axiom) ++row;
  return rows[row][it - order.begin()] == '+';
}

struct TableCell {
  std::string rule;
  AxiomId axiom;
  Verdict verdict;
  std::optional<bool> expected;

  bool observed() const { return !verdict.violated(); }
  bool matches() const { return !expected || *expected == observed(); }
};

struct TableReport {
  std::vector<std::string> rules;
  std::vector<AxiomId> axioms;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  std::vector<TableCell> cells;  // axiom-major

  const TableCell& cell(std::size_t axiom_row, std::size_t rule_col) const {
    return cells[axiom_row * rules.size() + rule_col];
  }
  std::size_t mismatches() const {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const TableCell& c) { return !c.matches(); }));
  }
  bool all_match() const { return mismatches() == 0; }
};

inline TableReport table_report(const std::vector<Rule>& rules, const std::vector<AxiomId>& axioms, std::size_t budget,
                                std::uint64_t seed, const SearchSpace& space = {}) {
  TableReport out;
  out.axioms = axioms;
  out.budget = budget;
  out.seed = seed;
  for (const Rule& r : rules) out.rules.push_back(r.name());
  for (AxiomId a : axioms)
    for (const Rule& r : rules)
      out.cells.push_back(TableCell{r.name(), a, falsify(r, a, budget, seed, space), expected_verdict(r.name(), a)});
  return out;
}

inline std::string render_text(const TableReport& t) {
  std::ostringstream os;
  os << "seed " << t.seed << ", budget " << t.budget << "\n";
  std::size_t w0 = 0;
  for (AxiomId a : t.axioms) w0 = std::max(w0, title(a).size());
  std::vector<std::size_t> widths;
  os << std::string(w0, ' ');
  for (const std::string& r : t.rules) {
    widths.push_back(std::max<std::size_t>(r.size(), 2));
    os << "  " << std::string(widths.back() - r.size(), ' ') << r;
  }
  os << "\n";
  for (std::size_t row = 0; row < t.axioms.size(); ++row) {
    std::string name = title(t.axioms[row]);
    os << name << std::string(w0 - name.size(), ' ');
    for (std::size_t col = 0; col < t.rules.size(); ++col) {
      const TableCell& c = t.cell(row, col);
      std::string mark = c.observed() ? "+" : "-";
      if (!c.matches()) mark += "!";
      os << "  " << std::string(widths[col] - mark.size(), ' ') << mark;
    }
    os << "\n";
  }
  os << "\nevidence:\n";
  for (const TableCell& c : t.cells) {
    os << "  " << c.rule << " / " << slug(c.axiom) << ": " << (c.observed() ? "+" : "-");
    if (c.expected) os << " (expected " << (*c.expected ? "+" : "-") << ")";
    else os << " (informational)";
    os << " " << c.verdict.evidence;
    if (c.verdict.skipped) os << ", " << c.verdict.skipped << " undefined trials skipped";
    if (c.verdict.violated()) os << "; " << c.verdict.witness->describe() << "; " << c.verdict.detail;
    os << "\n";
  }
  os << "mismatches: " << t.mismatches() << "\n";
  return os.str();
}

inline Json to_json(const TableReport& t) {
  Json j;
  j["seed"] = t.seed;
  j["budget"] = t.budget;
  j["rules"] = t.rules;
  j["axioms"] = Json::array();
  for (AxiomId a : t.axioms) j["axioms"].push_back(slug(a));
  j["cells"] = Json::array();
  for (const TableCell& c : t.cells) {
    Json cell;
    cell["rule"] = c.rule;
    cell["axiom"] = slug(c.axiom);
    cell["observed"] = c.observed() ? "+" : "-";
    cell["expected"] = c.expected ? Json(*c.expected ? "+" : "-") : Json(nullptr);
    cell["matches"] = c.matches();
    cell["verdict"] = to_json(c.verdict);
    j["cells"].push_back(std::move(cell));
  }
  j["mismatches"] = t.mismatches();
  return j;
}

inline std::string render_csv(const TableReport& t) {
  std::ostringstream os;
  os << "axiom,rule,observed,expected,matches,evidence,trials,skipped\n";
  for (const TableCell& c : t.cells)
    os << slug(c.axiom) << "," << c.rule << "," << (c.observed() ? "+" : "-") << ","
       << (c.expected ? (*c.expected ? "+" : "-") : "") << "," << (c.matches() ? "yes" : "no") << ","
       << c.verdict.evidence << "," << c.verdict.trials << "," << c.verdict.skipped << "\n";
  return os.str();
}

}  // namespace faircomp

#endif  // FAIRCOMP_TABLE_HPP
