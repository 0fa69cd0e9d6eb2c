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

#ifndef FAIRCOMP_PROBLEM_HPP
#define FAIRCOMP_PROBLEM_HPP

#include "faircomp/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace faircomp {

template <class Tag>
struct Label {
  std::uint32_t value = 0;
  friend auto operator<=>(const Label&, const Label&) = default;
};

struct WorkerTag {};
struct TaskTag {};
using WorkerId = Label<WorkerTag>;
using TaskId = Label<TaskTag>;

inline WorkerId worker(std::uint32_t v) { return WorkerId{v}; }
inline TaskId task(std::uint32_t v) { return TaskId{v}; }

template <class Tag>
std::vector<Label<Tag>> labels_1_to(std::size_t n) {
  std::vector<Label<Tag>> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k].value = static_cast<std::uint32_t>(k + 1);
  return out;
}

class InvalidProblem : public std::invalid_argument {
 public:
  InvalidProblem(const std::string& what, std::vector<std::string> violations)
      : std::invalid_argument(what), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class UnknownWorker : public std::out_of_range {
 public:
  explicit UnknownWorker(WorkerId i)
      : std::out_of_range("unknown worker " + std::to_string(i.value)) {}
};

class UnknownTask : public std::out_of_range {
 public:
  explicit UnknownTask(TaskId t) : std::out_of_range("unknown task " + std::to_string(t.value)) {}
};

using Row = std::vector<Rational>;

struct ProfileSummary {
  Rational mean;
  Rational max;
  Rational min;
};

// The tuple (I, T, p). Workers and tasks are kept sorted by label; rows
// follow worker order and columns follow task order. A Problem may be built
// from invalid data so that validate() can diagnose it; every algorithm calls
// require_valid() first.
class Problem {
 public:
  Problem() = default;

  Problem(std::vector<WorkerId> workers, std::vector<TaskId> tasks, std::vector<Row> rows) {
    std::vector<std::size_t> wperm(workers.size());
    std::iota(wperm.begin(), wperm.end(), 0);
    std::stable_sort(wperm.begin(), wperm.end(),
                     [&](std::size_t a, std::size_t b) { return workers[a] < workers[b]; });
    std::vector<std::size_t> tperm(tasks.size());
    std::iota(tperm.begin(), tperm.end(), 0);
    std::stable_sort(tperm.begin(), tperm.end(),
                     [&](std::size_t a, std::size_t b) { return tasks[a] < tasks[b]; });
    for (std::size_t w : wperm) workers_.push_back(workers[w]);
    for (std::size_t t : tperm) tasks_.push_back(tasks[t]);
    for (std::size_t w : wperm) {
      if (w >= rows.size()) {
        rows_.emplace_back();
        continue;
      }
      const Row& src = rows[w];
      if (src.size() != tasks.size()) {
        rows_.push_back(src);  // ragged: reported by validate()
        continue;
      }
      Row r;
      r.reserve(src.size());
      for (std::size_t t : tperm) r.push_back(src[t]);
      rows_.push_back(std::move(r));
    }
    extra_rows_ = rows.size() > workers.size();
  }

  // Workers 1..n and tasks 1..m.
  static Problem from_rows(std::vector<Row> rows) {
    std::size_t m = rows.empty() ? 0 : rows.front().size();
    std::size_t n = rows.size();
    return Problem(labels_1_to<WorkerTag>(n), labels_1_to<TaskTag>(m), std::move(rows));
  }

  static Problem from_ints(const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<Row> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    return from_rows(std::move(r));
  }

  const std::vector<WorkerId>& workers() const { return workers_; }
  const std::vector<TaskId>& tasks() const { return tasks_; }
  std::size_t num_workers() const { return workers_.size(); }
  std::size_t num_tasks() const { return tasks_.size(); }

  // By position in the canonical order.
  const Rational& at(std::size_t wi, std::size_t ti) const { return rows_[wi][ti]; }
  const Row& row(std::size_t wi) const { return rows_[wi]; }
  const std::vector<Row>& rows() const { return rows_; }

  std::optional<std::size_t> worker_index(WorkerId i) const {
    auto it = std::lower_bound(workers_.begin(), workers_.end(), i);
    if (it == workers_.end() || *it != i) return std::nullopt;
    return static_cast<std::size_t>(it - workers_.begin());
  }
  std::optional<std::size_t> task_index(TaskId t) const {
    auto it = std::lower_bound(tasks_.begin(), tasks_.end(), t);
    if (it == tasks_.end() || *it != t) return std::nullopt;
    return static_cast<std::size_t>(it - tasks_.begin());
  }
  std::size_t require_worker(WorkerId i) const {
    auto k = worker_index(i);
    if (!k) throw UnknownWorker(i);
    return *k;
  }
  std::size_t require_task(TaskId t) const {
    auto k = task_index(t);
    if (!k) throw UnknownTask(t);
    return *k;
  }

  const Rational& value(WorkerId i, TaskId t) const { return rows_[require_worker(i)][require_task(t)]; }
  const Row& profile(WorkerId i) const { return rows_[require_worker(i)]; }

  // Every violated invariant, empty iff the problem is well formed.
  std::vector<std::string> validate() const {
    std::vector<std::string> out;
    if (workers_.empty()) out.emplace_back("|I| >= 1 fails: no workers");
    if (tasks_.size() < workers_.size()) out.emplace_back("|T| >= |I| fails");
    if (std::adjacent_find(workers_.begin(), workers_.end()) != workers_.end())
      out.emplace_back("worker labels are not unique");
    if (std::adjacent_find(tasks_.begin(), tasks_.end()) != tasks_.end())
      out.emplace_back("task labels are not unique");
    bool total = !extra_rows_;
    bool nonneg = true;
    for (const Row& r : rows_) {
      if (r.size() != tasks_.size()) total = false;
      for (const Rational& x : r)
        if (x.sign() < 0) nonneg = false;
    }
    if (!total) out.emplace_back("productivity is not total over I x T");
    if (!nonneg) out.emplace_back("nonnegativity fails: negative productivity entry");
    return out;
  }

  bool valid() const { return validate().empty(); }

  void require_valid() const {
    auto v = validate();
    if (v.empty()) return;
    std::string msg = "invalid problem:";
    for (const auto& s : v) msg += " " + s + ";";
    throw InvalidProblem(msg, std::move(v));
  }

  ProfileSummary summarize(WorkerId i) const {
    const Row& r = profile(i);
    if (r.empty()) throw std::invalid_argument("summary of an empty profile");
    ProfileSummary s{0, r.front(), r.front()};
    for (const Rational& x : r) {
      s.mean += x;
      if (x > s.max) s.max = x;
      if (x < s.min) s.min = x;
    }
    s.mean /= Rational(static_cast<std::int64_t>(r.size()));
    return s;
  }

  // Sub-problem on workers' x tasks' (p_{I'}^{T'}). Sets need not be sorted.
  Problem restrict(std::vector<WorkerId> ws, std::vector<TaskId> ts) const {
    std::sort(ws.begin(), ws.end());
    std::sort(ts.begin(), ts.end());
    if (ws.size() > ts.size())
      throw InvalidProblem("restrict: |I'| > |T'|", {"|T| >= |I| fails"});
    std::vector<std::size_t> ti;
    for (TaskId t : ts) ti.push_back(require_task(t));
    std::vector<Row> rows;
    for (WorkerId w : ws) {
      const Row& src = rows_[require_worker(w)];
      Row r;
      for (std::size_t k : ti) r.push_back(src[k]);
      rows.push_back(std::move(r));
    }
    return Problem(std::move(ws), std::move(ts), std::move(rows));
  }

  Problem restrict_workers(std::vector<WorkerId> ws) const { return restrict(std::move(ws), tasks_); }
  Problem restrict_tasks(std::vector<TaskId> ts) const { return restrict(workers_, std::move(ts)); }

  // p_{-i}; the empty worker set is allowed here (y of it is 0).
  Problem without_worker(WorkerId i) const {
    std::size_t k = require_worker(i);
    Problem out = *this;
    out.workers_.erase(out.workers_.begin() + static_cast<std::ptrdiff_t>(k));
    out.rows_.erase(out.rows_.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
  }

  // p^{-t}
  Problem without_task(TaskId t) const {
    std::size_t k = require_task(t);
    Problem out = *this;
    out.tasks_.erase(out.tasks_.begin() + static_cast<std::ptrdiff_t>(k));
    for (Row& r : out.rows_) r.erase(r.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
  }

  // (p_{-i}, q) for a replacement profile q of the same length.
  Problem with_profile(WorkerId i, Row q) const {
    std::size_t k = require_worker(i);
    if (q.size() != tasks_.size()) throw std::invalid_argument("with_profile: length mismatch");
    Problem out = *this;
    out.rows_[k] = std::move(q);
    return out;
  }

  // Adds worker `i` with profile q; used to plant null workers and the like.
  Problem with_worker(WorkerId i, Row q) const {
    if (worker_index(i)) throw std::invalid_argument("with_worker: label already present");
    std::vector<WorkerId> ws = workers_;
    std::vector<Row> rows = rows_;
    ws.push_back(i);
    rows.push_back(std::move(q));
    return Problem(std::move(ws), tasks_, std::move(rows));
  }

  Problem scaled(const Rational& alpha) const {
    Problem out = *this;
    for (Row& r : out.rows_)
      for (Rational& x : r) x *= alpha;
    return out;
  }

  friend Problem operator+(const Problem& a, const Problem& b) {
    if (a.workers_ != b.workers_ || a.tasks_ != b.tasks_)
      throw std::invalid_argument("adding problems of different shape");
    Problem out = a;
    for (std::size_t w = 0; w < out.rows_.size(); ++w)
      for (std::size_t t = 0; t < out.rows_[w].size(); ++t) out.rows_[w][t] += b.rows_[w][t];
    return out;
  }

  bool is_null_worker(std::size_t wi) const {
    return std::all_of(rows_[wi].begin(), rows_[wi].end(), [](const Rational& x) { return x.is_zero(); });
  }
  bool is_null_task(std::size_t ti) const {
    return std::all_of(rows_.begin(), rows_.end(), [&](const Row& r) { return r[ti].is_zero(); });
  }
  bool has_constant_profile(std::size_t wi) const {
    const Row& r = rows_[wi];
    return std::all_of(r.begin(), r.end(), [&](const Rational& x) { return x == r.front(); });
  }
  bool is_trivial() const {
    for (std::size_t w = 0; w < rows_.size(); ++w)
      if (!has_constant_profile(w)) return false;
    return true;
  }

  friend bool operator==(const Problem&, const Problem&) = default;

 private:
  std::vector<WorkerId> workers_;
  std::vector<TaskId> tasks_;
  std::vector<Row> rows_;
  bool extra_rows_ = false;
};

// Vector orders: x ≧ y (every entry), x ≥ y (≧ and x ≠ y), x > y (strict in
// every entry).
inline bool weakly_dominates(std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != y.size()) return false;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] < y[k]) return false;
  return true;
}
inline bool semi_strictly_dominates(std::span<const Rational> x, std::span<const Rational> y) {
  return weakly_dominates(x, y) && !std::equal(x.begin(), x.end(), y.begin(), y.end());
}
inline bool strictly_dominates(std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != y.size()) return false;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!(x[k] > y[k])) return false;
  return true;
}

inline bool weakly_dominates(const Problem& a, const Problem& b) {
  if (a.workers() != b.workers() || a.tasks() != b.tasks()) return false;
  for (std::size_t w = 0; w < a.num_workers(); ++w)
    if (!weakly_dominates(a.row(w), b.row(w))) return false;
  return true;
}

inline Rational max_abs_difference(const Problem& a, const Problem& b) {
  if (a.workers() != b.workers() || a.tasks() != b.tasks())
    throw std::invalid_argument("distance between problems of different shape");
  Rational d = 0;
  for (std::size_t w = 0; w < a.num_workers(); ++w)
    for (std::size_t t = 0; t < a.num_tasks(); ++t) d = std::max(d, abs(a.at(w, t) - b.at(w, t)));
  return d;
}

// A vector x in R_+^I.
struct Solution {
  std::vector<WorkerId> workers;
  std::vector<Rational> pay;
  // Set when a parametric λ came from bisection rather than a closed form.
  bool approximate = false;

  const Rational& operator[](WorkerId i) const {
    auto it = std::lower_bound(workers.begin(), workers.end(), i);
    if (it == workers.end() || *it != i) throw UnknownWorker(i);
    return pay[static_cast<std::size_t>(it - workers.begin())];
  }

  Rational total() const {
    Rational s = 0;
    for (const Rational& x : pay) s += x;
    return s;
  }

  // x_{I'} for a sorted subset of workers.
  Solution project(const std::vector<WorkerId>& subset) const {
    Solution out;
    for (WorkerId w : subset) {
      out.workers.push_back(w);
      out.pay.push_back((*this)[w]);
    }
    out.approximate = approximate;
    return out;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < pay.size(); ++k) s += (k ? ", " : "") + pay[k].str();
    return s + ")";
  }

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.workers == b.workers && a.pay == b.pay;
  }
};

}  // namespace faircomp

#endif  // FAIRCOMP_PROBLEM_HPP
