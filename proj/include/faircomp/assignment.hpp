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

#ifndef FAIRCOMP_ASSIGNMENT_HPP
#define FAIRCOMP_ASSIGNMENT_HPP

#include "faircomp/problem.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace faircomp {

inline constexpr std::size_t kDefaultEnumerationCap = 10000;

// Cap on |A*|; FAIRCOMP_ENUM_CAP overrides the default.
inline std::size_t default_enumeration_cap() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("FAIRCOMP_ENUM_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultEnumerationCap;
  }();
  return cap;
}

class EnumerationCapExceeded : public std::runtime_error {
 public:
  explicit EnumerationCapExceeded(std::size_t cap)
      : std::runtime_error("more than " + std::to_string(cap) + " optimal assignments"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class NotOptimal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An injective map a: I -> T, stored as the task of each worker in the
// problem's canonical worker order.
struct Assignment {
  std::vector<WorkerId> workers;
  std::vector<TaskId> tasks;

  TaskId operator()(WorkerId i) const {
    auto it = std::lower_bound(workers.begin(), workers.end(), i);
    if (it == workers.end() || *it != i) throw UnknownWorker(i);
    return tasks[static_cast<std::size_t>(it - workers.begin())];
  }

  // a(I') for a subset of the domain, sorted.
  std::vector<TaskId> image(const std::vector<WorkerId>& subset) const {
    std::vector<TaskId> out;
    for (WorkerId w : subset) out.push_back((*this)(w));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t k = 0; k < workers.size(); ++k)
      s += (k ? ", " : "") + std::to_string(workers[k].value) + "->" + std::to_string(tasks[k].value);
    return s + "}";
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment& a, const Assignment& b) { return a.tasks <=> b.tasks; }
};

struct OptimalSet {
  Rational value;
  std::vector<Assignment> assignments;  // lexicographic in task labels
};

inline Rational assignment_value(const Problem& p, const Assignment& a) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.workers.size(); ++k) s += p.value(a.workers[k], a.tasks[k]);
  return s;
}

inline bool is_assignment_of(const Problem& p, const Assignment& a) {
  if (a.workers != p.workers() || a.tasks.size() != a.workers.size()) return false;
  std::set<TaskId> seen;
  for (TaskId t : a.tasks)
    if (!p.task_index(t) || !seen.insert(t).second) return false;
  return true;
}

namespace detail {

// Entries of p scaled by the lcm of their denominators, so the search runs on
// integers while staying exact.
template <class Int>
struct ScaledMatrix {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Int> w;
  BigInt scale = 1;

  const Int& at(std::size_t i, std::size_t t) const { return w[i * m + t]; }
};

inline BigInt common_denominator(const Problem& p) {
  BigInt l = 1;
  for (const Row& r : p.rows())
    for (const Rational& x : r) {
      BigInt d = x.denominator();
      if (d != 1) l = boost::multiprecision::lcm(l, d);
    }
  return l;
}

// Depth-first branch and bound over partial assignments in worker order,
// trying tasks in label order. The bound adds, for every unassigned worker,
// its best entry among unused tasks.
template <class Int>
class BranchAndBound {
 public:
  explicit BranchAndBound(const ScaledMatrix<Int>& mat) : mat_(mat), used_(mat.m, 0), pick_(mat.n, 0) {}

  Int maximum() {
    collect_ = false;
    best_ = greedy();
    search(0, Int(0));
    return best_;
  }

  // All assignments reaching `target`, in lexicographic order.
  std::vector<std::vector<std::size_t>> all_reaching(const Int& target, std::size_t cap) {
    collect_ = true;
    best_ = target;
    cap_ = cap;
    found_.clear();
    search(0, Int(0));
    return std::move(found_);
  }

 private:
  Int greedy() {
    std::vector<char> used(mat_.m, 0);
    Int total = 0;
    for (std::size_t i = 0; i < mat_.n; ++i) {
      std::size_t arg = mat_.m;
      for (std::size_t t = 0; t < mat_.m; ++t)
        if (!used[t] && (arg == mat_.m || mat_.at(i, t) > mat_.at(i, arg))) arg = t;
      used[arg] = 1;
      total += mat_.at(i, arg);
    }
    return total;
  }

  Int bound(std::size_t k) const {
    Int b = 0;
    for (std::size_t i = k; i < mat_.n; ++i) {
      bool any = false;
      Int best = 0;
      for (std::size_t t = 0; t < mat_.m; ++t)
        if (!used_[t] && (!any || mat_.at(i, t) > best)) {
          best = mat_.at(i, t);
          any = true;
        }
      b += best;
    }
    return b;
  }

  void search(std::size_t k, const Int& cur) {
    if (k == mat_.n) {
      if (collect_) {
        if (cur == best_) {
          if (found_.size() >= cap_) throw EnumerationCapExceeded(cap_);
          found_.push_back(pick_);
        }
      } else if (cur > best_) {
        best_ = cur;
      }
      return;
    }
    Int b = cur + bound(k);
    if (collect_ ? b < best_ : b <= best_) return;
    for (std::size_t t = 0; t < mat_.m; ++t) {
      if (used_[t]) continue;
      used_[t] = 1;
      pick_[k] = t;
      search(k + 1, cur + mat_.at(k, t));
      used_[t] = 0;
    }
  }

  const ScaledMatrix<Int>& mat_;
  std::vector<char> used_;
  std::vector<std::size_t> pick_;
  Int best_{0};
  bool collect_ = false;
  std::size_t cap_ = 0;
  std::vector<std::vector<std::size_t>> found_;
};

struct RawOptimum {
  Rational value;
  std::vector<std::vector<std::size_t>> picks;
};

template <class Int>
RawOptimum solve_scaled(const ScaledMatrix<Int>& mat, bool enumerate, std::size_t cap) {
  BranchAndBound<Int> bb(mat);
  Int best = bb.maximum();
  RawOptimum out{Rational(BigInt(best), mat.scale), {}};
  if (enumerate) out.picks = bb.all_reaching(best, cap);
  return out;
}

inline RawOptimum solve(const Problem& p, bool enumerate, std::size_t cap) {
  if (p.num_workers() == 0) return {Rational(0), {std::vector<std::size_t>{}}};
  p.require_valid();
  BigInt scale = common_denominator(p);
  std::size_t n = p.num_workers();
  std::size_t m = p.num_tasks();
  // int64 is safe when n * max entry stays below 2^62.
  BigInt limit = (BigInt(1) << 62) / BigInt(n);
  bool small = true;
  std::vector<BigInt> scaled;
  scaled.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < m; ++t) {
      const Rational& x = p.at(i, t);
      BigInt v = x.numerator() * (scale / x.denominator());
      if (v >= limit) small = false;
      scaled.push_back(std::move(v));
    }
  if (small) {
    ScaledMatrix<std::int64_t> mat{n, m, {}, scale};
    mat.w.reserve(scaled.size());
    for (const BigInt& v : scaled) mat.w.push_back(v.convert_to<std::int64_t>());
    return solve_scaled(mat, enumerate, cap);
  }
  ScaledMatrix<BigInt> mat{n, m, std::move(scaled), scale};
  return solve_scaled(mat, enumerate, cap);
}

}  // namespace detail

// y(I,T,p); 0 for the empty worker set.
inline Rational optimal_value(const Problem& p) { return detail::solve(p, false, 0).value; }

// y and the complete A*(I,T,p).
inline OptimalSet enumerate_optimal(const Problem& p, std::size_t cap = default_enumeration_cap()) {
  detail::RawOptimum raw = detail::solve(p, true, cap);
  OptimalSet out{raw.value, {}};
  out.assignments.reserve(raw.picks.size());
  for (const auto& pick : raw.picks) {
    Assignment a{p.workers(), {}};
    for (std::size_t t : pick) a.tasks.push_back(p.tasks()[t]);
    out.assignments.push_back(std::move(a));
  }
  return out;
}

// T*(I,T,p): tasks performed under some optimal assignment.
inline std::vector<TaskId> assigned_task_set(const Problem& p, std::size_t cap = default_enumeration_cap()) {
  std::set<TaskId> used;
  for (const Assignment& a : enumerate_optimal(p, cap).assignments) used.insert(a.tasks.begin(), a.tasks.end());
  return {used.begin(), used.end()};
}

inline bool is_optimal(const Problem& p, const Assignment& a) {
  return is_assignment_of(p, a) && assignment_value(p, a) == optimal_value(p);
}

// (I', a(I'), p_{I'}^{a(I')}) for a in A*.
inline Problem reduced_problem(const Problem& p, std::vector<WorkerId> subgroup, const Assignment& a) {
  std::sort(subgroup.begin(), subgroup.end());
  for (WorkerId w : subgroup)
    if (!p.worker_index(w)) throw UnknownWorker(w);
  if (!is_optimal(p, a)) throw NotOptimal("reduced_problem: assignment " + a.str() + " is not optimal");
  return p.restrict(subgroup, a.image(subgroup));
}

// p(ε): adds ε along a. The result has A* = {a}.
inline Problem perturb_to_unique(const Problem& p, const Assignment& a, const Rational& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("perturb_to_unique: epsilon must be positive");
  if (!is_optimal(p, a)) throw NotOptimal("perturb_to_unique: assignment " + a.str() + " is not optimal");
  Problem out = p;
  for (std::size_t k = 0; k < a.workers.size(); ++k) {
    Row r = out.profile(a.workers[k]);
    r[p.require_task(a.tasks[k])] += eps;
    out = out.with_profile(a.workers[k], std::move(r));
  }
  return out;
}

}  // namespace faircomp

#endif  // FAIRCOMP_ASSIGNMENT_HPP
