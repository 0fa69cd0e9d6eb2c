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

#ifndef FAIRCOMP_REPORT_HPP
#define FAIRCOMP_REPORT_HPP

#include "faircomp/table.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace faircomp {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitInputError = 2, kExitResourceCap = 3 };

inline constexpr std::size_t kDefaultBudget = 1000;
inline constexpr std::size_t kDefaultFuzzBudget = 20000;

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::vector<std::string> rules;   // empty: the seven table rules
  std::vector<std::string> axioms;  // empty: all axioms
  std::uint64_t seed = 0;
  std::optional<std::size_t> budget;
  std::string format = "text";

  std::size_t effective_budget() const {
    return budget.value_or(command == "fuzz" ? kDefaultFuzzBudget : kDefaultBudget);
  }
};

struct CommandResult {
  std::string output;
  int exit_code = kExitOk;
};

namespace detail {

inline std::vector<Rule> selected_rules(const RunConfig& c) {
  if (c.rules.empty()) return Rule::table_rules();
  std::vector<Rule> out;
  for (const std::string& r : c.rules) out.push_back(parse_rule(r));
  return out;
}

inline std::vector<AxiomId> selected_axioms(const RunConfig& c) {
  if (c.axioms.empty()) return all_axioms();
  std::vector<AxiomId> out;
  for (const std::string& a : c.axioms) out.push_back(parse_axiom(a));
  return out;
}

inline std::string both(const Rational& x) { return x.str() + " (" + x.to_decimal(6) + ")"; }

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

inline void check_format(const std::string& f) {
  if (f != "text" && f != "json" && f != "csv") throw ParseError("unknown format '" + f + "'");
}

inline std::string header(const RunConfig& c) {
  return "faircomp " + c.command + " seed=" + std::to_string(c.seed) + " budget=" + std::to_string(c.effective_budget()) + "\n";
}

inline Json json_header(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["seed"] = c.seed;
  j["budget"] = c.effective_budget();
  return j;
}

inline void require_inputs(const RunConfig& c) {
  if (c.inputs.empty()) throw ParseError(c.command + " needs at least one problem file");
}

}  // namespace detail

// Per-rule solutions for every input, plus y and |A*|.
inline CommandResult cmd_solve(const RunConfig& c) {
  detail::check_format(c.format);
  detail::require_inputs(c);
  std::vector<Rule> rules = detail::selected_rules(c);
  std::ostringstream os;
  Json doc = detail::json_header(c);
  doc["problems"] = Json::array();
  if (c.format == "text") os << detail::header(c);
  if (c.format == "csv") os << "input,rule,worker,pay\n";
  for (const std::string& path : c.inputs) {
    Problem p = load_problem(path);
    OptimalSet opt = enumerate_optimal(p);
    Json jp;
    jp["input"] = path;
    jp["y"] = opt.value.str();
    jp["optimal_assignments"] = opt.assignments.size();
    jp["solutions"] = Json::object();
    if (c.format == "text")
      os << "\n" << path << "\n  y = " << detail::both(opt.value) << "\n  |A*| = " << opt.assignments.size() << "\n";
    for (const Rule& r : rules) {
      std::optional<Solution> s;
      std::string failure;
      try {
        s = compensate(r, p);
      } catch (const RuleUndefined&) {
        failure = "undefined";
      }
      if (c.format == "text") {
        os << "  " << r.name() << ":";
        if (!s) {
          os << " " << failure << "\n";
          continue;
        }
        for (std::size_t k = 0; k < s->workers.size(); ++k)
          os << (k ? "," : "") << " " << s->workers[k].value << ": " << detail::both(s->pay[k]);
        os << (s->approximate ? " [approximate]" : "") << "\n";
      } else if (c.format == "csv") {
        if (!s) {
          os << detail::csv_field(path) << "," << r.name() << ",," << failure << "\n";
          continue;
        }
        for (std::size_t k = 0; k < s->workers.size(); ++k)
          os << detail::csv_field(path) << "," << r.name() << "," << s->workers[k].value << "," << s->pay[k].str() << "\n";
      } else {
        if (!s) {
          jp["solutions"][r.name()] = failure;
          continue;
        }
        Json js = to_json(*s);
        if (s->approximate) js["approximate"] = true;
        jp["solutions"][r.name()] = std::move(js);
      }
    }
    doc["problems"].push_back(std::move(jp));
  }
  if (c.format == "json") os << doc.dump(2) << "\n";
  return {os.str(), kExitOk};
}

// y, the full optimal set and T*.
inline CommandResult cmd_assign(const RunConfig& c) {
  detail::check_format(c.format);
  detail::require_inputs(c);
  std::ostringstream os;
  Json doc = detail::json_header(c);
  doc["problems"] = Json::array();
  if (c.format == "text") os << detail::header(c);
  if (c.format == "csv") os << "input,assignment,worker,task\n";
  for (const std::string& path : c.inputs) {
    Problem p = load_problem(path);
    OptimalSet opt = enumerate_optimal(p);
    std::vector<TaskId> star = assigned_task_set(p);
    if (c.format == "text") {
      os << "\n" << path << "\n  y = " << detail::both(opt.value) << "\n  optimal assignments: " << opt.assignments.size()
         << "\n";
      for (const Assignment& a : opt.assignments) os << "    " << a.str() << "\n";
      os << "  T* = {";
      for (std::size_t k = 0; k < star.size(); ++k) os << (k ? ", " : "") << star[k].value;
      os << "}\n";
    } else if (c.format == "csv") {
      for (std::size_t n = 0; n < opt.assignments.size(); ++n) {
        const Assignment& a = opt.assignments[n];
        for (std::size_t k = 0; k < a.workers.size(); ++k)
          os << detail::csv_field(path) << "," << n + 1 << "," << a.workers[k].value << "," << a.tasks[k].value << "\n";
      }
    } else {
      Json jp;
      jp["input"] = path;
      jp["y"] = opt.value.str();
      jp["assignments"] = Json::array();
      for (const Assignment& a : opt.assignments) jp["assignments"].push_back(to_json(a));
      jp["assigned_tasks"] = Json::array();
      for (TaskId t : star) jp["assigned_tasks"].push_back(t.value);
      doc["problems"].push_back(std::move(jp));
    }
  }
  if (c.format == "json") os << doc.dump(2) << "\n";
  return {os.str(), kExitOk};
}

namespace detail {

struct AxiomRun {
  std::string rule;
  AxiomId axiom;
  std::string input;  // empty for the falsifier
  std::optional<Verdict> verdict;
  std::string note;  // set when the instance lacks the data the axiom needs
};

inline std::vector<AxiomRun> run_axioms(const RunConfig& c) {
  std::vector<Rule> rules = selected_rules(c);
  std::vector<AxiomId> axioms = selected_axioms(c);
  std::vector<AxiomRun> out;
  if (c.inputs.empty()) {
    for (AxiomId a : axioms)
      for (const Rule& r : rules) out.push_back({r.name(), a, "", falsify(r, a, c.effective_budget(), c.seed), ""});
    return out;
  }
  // With problem files, each file is the base of one instance; quantifiers
  // that need a second matrix or a scalar cannot be filled in.
  for (const std::string& path : c.inputs) {
    AxiomInstance in;
    in.base = load_problem(path);
    for (AxiomId a : axioms)
      for (const Rule& r : rules) {
        try {
          out.push_back({r.name(), a, path, check(r, a, in), ""});
        } catch (const InstanceShapeError& e) {
          out.push_back({r.name(), a, path, std::nullopt, e.what()});
        }
      }
  }
  return out;
}

}  // namespace detail

inline CommandResult cmd_axioms(const RunConfig& c) {
  detail::check_format(c.format);
  std::vector<detail::AxiomRun> runs = detail::run_axioms(c);
  std::ostringstream os;
  if (c.format == "text") {
    os << detail::header(c);
    for (const detail::AxiomRun& run : runs) {
      os << "\n" << run.rule << " / " << slug(run.axiom);
      if (!run.input.empty()) os << " on " << run.input;
      os << "\n";
      std::optional<bool> expected = expected_verdict(run.rule, run.axiom);
      if (!run.verdict) {
        os << "  not applicable: " << run.note << "\n";
        continue;
      }
      const Verdict& v = *run.verdict;
      os << "  outcome: " << to_string(v.outcome) << (v.violated() ? " (-)" : v.outcome == Outcome::Undefined ? "" : " (+)");
      if (expected) os << ", published " << (*expected ? "+" : "-");
      os << "\n";
      if (run.input.empty()) {
        os << "  evidence: " << v.evidence << ", trials " << v.trials;
        if (v.skipped) os << ", " << v.skipped << " undefined skipped";
        os << "\n";
      }
      if (!v.detail.empty()) os << "  detail: " << v.detail << "\n";
      if (v.witness) os << "  witness: " << v.witness->describe() << "\n";
      for (const LabelledSolution& s : v.solutions) {
        os << "  " << s.label << " =";
        for (std::size_t k = 0; k < s.solution.workers.size(); ++k)
          os << (k ? "," : "") << " " << s.solution.workers[k].value << ": " << detail::both(s.solution.pay[k]);
        os << "\n";
      }
    }
  } else if (c.format == "csv") {
    os << "rule,axiom,input,outcome,evidence,trials,skipped,witness,detail\n";
    for (const detail::AxiomRun& run : runs) {
      os << run.rule << "," << slug(run.axiom) << "," << detail::csv_field(run.input) << ",";
      if (!run.verdict) {
        os << "not-applicable,,,,," << detail::csv_field(run.note) << "\n";
        continue;
      }
      const Verdict& v = *run.verdict;
      os << to_string(v.outcome) << "," << detail::csv_field(v.evidence) << "," << v.trials << "," << v.skipped << ","
         << detail::csv_field(v.witness ? v.witness->describe() : "") << "," << detail::csv_field(v.detail) << "\n";
    }
  } else {
    Json doc = detail::json_header(c);
    doc["results"] = Json::array();
    for (const detail::AxiomRun& run : runs) {
      Json j;
      j["rule"] = run.rule;
      j["axiom"] = slug(run.axiom);
      if (!run.input.empty()) j["input"] = run.input;
      if (run.verdict) j["verdict"] = to_json(*run.verdict);
      else j["not_applicable"] = run.note;
      doc["results"].push_back(std::move(j));
    }
    os << doc.dump(2) << "\n";
  }
  return {os.str(), kExitOk};
}

// The verdict matrix; exits with kExitMismatch iff a cell disagrees with the
// published one.
inline CommandResult cmd_table(const RunConfig& c) {
  detail::check_format(c.format);
  TableReport t = table_report(detail::selected_rules(c), detail::selected_axioms(c), c.effective_budget(), c.seed);
  std::string body;
  if (c.format == "text") body = detail::header(c) + render_text(t);
  else if (c.format == "csv") body = render_csv(t);
  else body = to_json(t).dump(2) + "\n";
  return {body, t.all_match() ? kExitOk : kExitMismatch};
}

// Dispatch with error mapping onto exit codes.
inline CommandResult run_command(const RunConfig& c) {
  try {
    if (c.command == "solve") return cmd_solve(c);
    if (c.command == "assign") return cmd_assign(c);
    if (c.command == "axioms" || c.command == "fuzz") return cmd_axioms(c);
    if (c.command == "table") return cmd_table(c);
    return {"error: unknown command '" + c.command + "'\n", kExitInputError};
  } catch (const EnumerationCapExceeded& e) {
    return {std::string("error: ") + e.what() + " (raise FAIRCOMP_ENUM_CAP)\n", kExitResourceCap};
  } catch (const TooManyWorkers& e) {
    return {std::string("error: ") + e.what() + "\n", kExitResourceCap};
  } catch (const std::invalid_argument& e) {
    return {std::string("error: ") + e.what() + "\n", kExitInputError};
  } catch (const std::out_of_range& e) {
    return {std::string("error: ") + e.what() + "\n", kExitInputError};
  }
}

}  // namespace faircomp

#endif  // FAIRCOMP_REPORT_HPP
