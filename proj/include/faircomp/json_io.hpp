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

#ifndef FAIRCOMP_JSON_IO_HPP
#define FAIRCOMP_JSON_IO_HPP

#include "faircomp/axioms.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace faircomp {

using Json = nlohmann::ordered_json;

namespace detail {

inline Rational entry_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("productivity entries must be strings or integers, got " + j.dump());
}

template <class Tag>
std::vector<Label<Tag>> labels_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw ParseError(std::string("missing array '") + key + "'");
  std::vector<Label<Tag>> out;
  for (const Json& v : j[key]) {
    if (!v.is_number_unsigned()) throw ParseError(std::string("'") + key + "' must hold nonnegative integers");
    out.push_back(Label<Tag>{v.get<std::uint32_t>()});
  }
  return out;
}

}  // namespace detail

// {"workers":[..], "tasks":[..], "productivity":[[..], ..]}. Rows follow
// workers, columns follow tasks. The result is validated.
inline Problem problem_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("problem must be a JSON object");
  auto workers = detail::labels_from_json<WorkerTag>(j, "workers");
  auto tasks = detail::labels_from_json<TaskTag>(j, "tasks");
  if (!j.contains("productivity") || !j["productivity"].is_array()) throw ParseError("missing array 'productivity'");
  std::vector<Row> rows;
  for (const Json& r : j["productivity"]) {
    if (!r.is_array()) throw ParseError("productivity rows must be arrays");
    Row row;
    for (const Json& e : r) row.push_back(detail::entry_from_json(e));
    rows.push_back(std::move(row));
  }
  Problem p(std::move(workers), std::move(tasks), std::move(rows));
  p.require_valid();
  return p;
}

inline Problem parse_problem(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return problem_from_json(j);
}

inline Problem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

inline Json to_json(const Problem& p) {
  Json j;
  j["workers"] = Json::array();
  for (WorkerId w : p.workers()) j["workers"].push_back(w.value);
  j["tasks"] = Json::array();
  for (TaskId t : p.tasks()) j["tasks"].push_back(t.value);
  j["productivity"] = Json::array();
  for (const Row& r : p.rows()) {
    Json row = Json::array();
    for (const Rational& x : r) row.push_back(x.str());
    j["productivity"].push_back(std::move(row));
  }
  return j;
}

inline Json to_json(const Solution& s) {
  Json j = Json::object();
  for (std::size_t k = 0; k < s.workers.size(); ++k) j[std::to_string(s.workers[k].value)] = s.pay[k].str();
  return j;
}

inline Json to_json(const Assignment& a) {
  Json j = Json::object();
  for (std::size_t k = 0; k < a.workers.size(); ++k) j[std::to_string(a.workers[k].value)] = a.tasks[k].value;
  return j;
}

inline Json to_json(const AxiomInstance& in) {
  Json j;
  j["p"] = to_json(in.base);
  if (in.other) j["p_hat"] = to_json(*in.other);
  if (in.worker) j["worker"] = in.worker->value;
  if (in.pair) j["pair"] = {in.pair->first.value, in.pair->second.value};
  if (in.subgroup) {
    j["subgroup"] = Json::array();
    for (WorkerId w : *in.subgroup) j["subgroup"].push_back(w.value);
  }
  if (in.task_subset) {
    j["task_subset"] = Json::array();
    for (TaskId t : *in.task_subset) j["task_subset"].push_back(t.value);
  }
  if (in.task) j["task"] = in.task->value;
  if (in.permutation) {
    j["permutation"] = Json::array();
    for (TaskId t : *in.permutation) j["permutation"].push_back(t.value);
  }
  if (in.alpha) j["alpha"] = in.alpha->str();
  return j;
}

inline Json to_json(const Verdict& v) {
  Json j;
  j["outcome"] = to_string(v.outcome);
  if (!v.evidence.empty()) j["evidence"] = v.evidence;
  if (!v.detail.empty()) j["detail"] = v.detail;
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (!v.solutions.empty()) {
    j["solutions"] = Json::object();
    for (const LabelledSolution& s : v.solutions) j["solutions"][s.label] = to_json(s.solution);
  }
  j["trials"] = v.trials;
  j["seed"] = v.seed;
  j["skipped"] = v.skipped;
  return j;
}

}  // namespace faircomp

#endif  // FAIRCOMP_JSON_IO_HPP
