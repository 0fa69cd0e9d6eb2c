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

#ifndef FAIRCOMP_AXIOMS_HPP
#define FAIRCOMP_AXIOMS_HPP

#include "faircomp/rules.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace faircomp {

enum class AxiomId {
  Efficiency,
  Continuity,
  Boundedness,
  Symmetry,
  PiSymmetry,
  OrderPreservation,
  StrictOrderPreservation,
  StrongOrderPreservation,
  PiOrderPreservation,
  GroupProdMono,
  IndivProdMono,
  StrictIndivProdMono,
  StrongIndivProdMono,
  ConstantProductivity,
  Trivialness,
  BalancedImpact,
  Consistency,
  WeakConsistency,
  IndepNullWorkers,
  NoHarmFromHiring,
  SolidarityInHiring,
  IndepNullTasks,
  IndepUnassignedTasks,
  Additivity,
  WeakAdditivity,
  Homogeneity,
};

struct AxiomInfo {
  AxiomId id;
  const char* slug;
  const char* title;
};

// Declaration order doubles as the report row order.
inline constexpr std::array<AxiomInfo, 26> kAxioms{{
    {AxiomId::Efficiency, "efficiency", "Efficiency"},
    {AxiomId::Continuity, "continuity", "Continuity"},
    {AxiomId::Boundedness, "boundedness", "Boundedness"},
    {AxiomId::Symmetry, "symmetry", "Symmetry"},
    {AxiomId::PiSymmetry, "pi-symmetry", "pi-Symmetry"},
    {AxiomId::OrderPreservation, "order-preservation", "Order Preservation"},
    {AxiomId::StrictOrderPreservation, "strict-order-preservation", "Strict Order Preservation"},
    {AxiomId::StrongOrderPreservation, "strong-order-preservation", "Strong Order Preservation"},
    {AxiomId::PiOrderPreservation, "pi-order-preservation", "pi-Order Preservation"},
    {AxiomId::GroupProdMono, "group-prod-mono", "Group Prod. Mono."},
    {AxiomId::IndivProdMono, "indiv-prod-mono", "Individual Prod. Mono."},
    {AxiomId::StrictIndivProdMono, "strict-indiv-prod-mono", "Strict Individual Prod. Mono."},
    {AxiomId::StrongIndivProdMono, "strong-indiv-prod-mono", "Strong Individual Prod. Mono."},
    {AxiomId::ConstantProductivity, "constant-productivity", "Constant Productivity"},
    {AxiomId::Trivialness, "trivialness", "Trivialness"},
    {AxiomId::BalancedImpact, "balanced-impact", "Balanced Impact"},
    {AxiomId::Consistency, "consistency", "Consistency"},
    {AxiomId::WeakConsistency, "weak-consistency", "Weak Consistency"},
    {AxiomId::IndepNullWorkers, "indep-null-workers", "Ind. Null Workers"},
    {AxiomId::NoHarmFromHiring, "no-harm-from-hiring", "No Harm from Hiring"},
    {AxiomId::SolidarityInHiring, "solidarity-in-hiring", "Solidarity in Hiring"},
    {AxiomId::IndepNullTasks, "indep-null-tasks", "Ind. Null Tasks"},
    {AxiomId::IndepUnassignedTasks, "indep-unassigned-tasks", "Ind. Unassigned Tasks"},
    {AxiomId::Additivity, "additivity", "Additivity"},
    {AxiomId::WeakAdditivity, "weak-additivity", "Weak Additivity"},
    {AxiomId::Homogeneity, "homogeneity", "Homogeneity"},
}};

inline const AxiomInfo& info(AxiomId a) {
  for (const AxiomInfo& x : kAxioms)
    if (x.id == a) return x;
  throw std::logic_error("unknown axiom");
}
inline std::string slug(AxiomId a) { return info(a).slug; }
inline std::string title(AxiomId a) { return info(a).title; }

inline std::vector<AxiomId> all_axioms() {
  std::vector<AxiomId> out;
  for (const AxiomInfo& x : kAxioms) out.push_back(x.id);
  return out;
}

inline AxiomId parse_axiom(const std::string& text) {
  std::string s;
  for (char c : text) s += (c == '_' || c == ' ') ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const AxiomInfo& x : kAxioms)
    if (s == x.slug) return x.id;
  throw std::invalid_argument("unknown axiom '" + text + "'");
}

// Finite-proxy parameters for Continuity: a neighbour within kContinuityRadius
// (max-norm) whose solution moves by more than kContinuityGap is a violation.
inline Rational continuity_radius() { return Rational(1, 1000000); }
inline Rational continuity_gap() { return Rational(1, 2); }

class InstanceShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The quantified objects of one axiom. Finite quantifiers left unset (pairs,
// subgroups, tasks, task subsets) are exhausted by check().
struct AxiomInstance {
  Problem base;
  std::optional<Problem> other;  // p̂, the perturbed neighbour, or (p_{-i}, p̂_i)
  std::optional<WorkerId> worker;
  std::optional<std::pair<WorkerId, WorkerId>> pair;
  std::optional<std::vector<WorkerId>> subgroup;
  std::optional<std::vector<TaskId>> task_subset;
  std::optional<TaskId> task;
  std::optional<std::vector<TaskId>> permutation;  // π(t) for each task of base, in task order
  std::optional<Rational> alpha;

  std::string describe() const {
    auto matrix = [](const Problem& p) {
      std::string s = "[";
      for (std::size_t w = 0; w < p.num_workers(); ++w) {
        s += w ? ", (" : "(";
        for (std::size_t t = 0; t < p.num_tasks(); ++t) s += (t ? "," : "") + p.at(w, t).str();
        s += ")";
      }
      return s + "]";
    };
    std::string s = "p=" + matrix(base);
    if (other) s += " p^=" + matrix(*other);
    if (worker) s += " i=" + std::to_string(worker->value);
    if (pair) s += " (i,j)=(" + std::to_string(pair->first.value) + "," + std::to_string(pair->second.value) + ")";
    if (subgroup) {
      s += " I'={";
      for (std::size_t k = 0; k < subgroup->size(); ++k) s += (k ? "," : "") + std::to_string((*subgroup)[k].value);
      s += "}";
    }
    if (task_subset) {
      s += " T'={";
      for (std::size_t k = 0; k < task_subset->size(); ++k)
        s += (k ? "," : "") + std::to_string((*task_subset)[k].value);
      s += "}";
    }
    if (task) s += " t=" + std::to_string(task->value);
    if (permutation) {
      s += " pi=(";
      for (std::size_t k = 0; k < permutation->size(); ++k)
        s += (k ? "," : "") + std::to_string((*permutation)[k].value);
      s += ")";
    }
    if (alpha) s += " alpha=" + alpha->str();
    return s;
  }
};

enum class Outcome { Holds, Violated, Survived, Undefined };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds-on-instance";
    case Outcome::Violated: return "violated";
    case Outcome::Survived: return "survived";
    case Outcome::Undefined: return "undefined";
  }
  return "?";
}

struct LabelledSolution {
  std::string label;
  Solution solution;
};

struct Verdict {
  Outcome outcome = Outcome::Holds;
  std::optional<AxiomInstance> witness;  // pinned to the failing quantifiers
  std::vector<LabelledSolution> solutions;
  std::string detail;
  // Falsifier bookkeeping.
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t skipped = 0;
  std::string evidence;

  bool violated() const { return outcome == Outcome::Violated; }
};

namespace detail {

inline bool all_ge(const Solution& x, const Solution& y) {
  for (std::size_t k = 0; k < x.pay.size(); ++k)
    if (x.pay[k] < y.pay[k]) return false;
  return true;
}

inline std::string wid(WorkerId w) { return std::to_string(w.value); }

inline std::vector<std::vector<WorkerId>> nonempty_subsets(const std::vector<WorkerId>& ws, bool include_full) {
  std::vector<std::vector<WorkerId>> out;
  std::size_t n = ws.size();
  std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t s = 1; s <= full; ++s) {
    if (s == full && !include_full) continue;
    std::vector<WorkerId> sub;
    for (std::size_t k = 0; k < n; ++k)
      if (s & (std::uint64_t{1} << k)) sub.push_back(ws[k]);
    out.push_back(std::move(sub));
  }
  return out;
}

inline std::vector<Rational> sorted_desc(const Row& r) {
  std::vector<Rational> v = r;
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

class Checker {
 public:
  Checker(const Rule& rule, AxiomId axiom, const AxiomInstance& inst) : rule_(rule), axiom_(axiom), inst_(inst) {}

  Verdict run() {
    try {
      return dispatch();
    } catch (const RuleUndefined& e) {
      Verdict v;
      v.outcome = Outcome::Undefined;
      v.detail = e.what();
      return v;
    }
  }

 private:
  Solution R(const Problem& p) { return compensate(rule_, p); }

  [[noreturn]] void shape(const std::string& why) const {
    throw InstanceShapeError(slug(axiom_) + ": " + why);
  }

  const Problem& need_other() const {
    if (!inst_.other) shape("instance needs a second matrix");
    const Problem& q = *inst_.other;
    if (q.workers() != inst_.base.workers() || q.tasks() != inst_.base.tasks()) shape("second matrix has a different shape");
    q.require_valid();
    return q;
  }

  Verdict holds(std::string why = {}) const {
    Verdict v;
    v.outcome = Outcome::Holds;
    v.detail = std::move(why);
    return v;
  }

  Verdict violated(AxiomInstance witness, std::vector<LabelledSolution> sols, std::string why) const {
    Verdict v;
    v.outcome = Outcome::Violated;
    v.witness = std::move(witness);
    v.solutions = std::move(sols);
    v.detail = std::move(why);
    return v;
  }

  std::vector<std::pair<WorkerId, WorkerId>> ordered_pairs() const {
    if (inst_.pair) {
      inst_.base.require_worker(inst_.pair->first);
      inst_.base.require_worker(inst_.pair->second);
      if (inst_.pair->first == inst_.pair->second) shape("pair needs two distinct workers");
      return {*inst_.pair};
    }
    std::vector<std::pair<WorkerId, WorkerId>> out;
    for (WorkerId i : inst_.base.workers())
      for (WorkerId j : inst_.base.workers())
        if (i != j) out.emplace_back(i, j);
    return out;
  }

  std::vector<WorkerId> workers_in_scope() const {
    if (inst_.worker) {
      inst_.base.require_worker(*inst_.worker);
      return {*inst_.worker};
    }
    return inst_.base.workers();
  }

  std::vector<std::vector<WorkerId>> subgroups(bool include_full) const {
    if (inst_.subgroup) {
      std::vector<WorkerId> s = *inst_.subgroup;
      std::sort(s.begin(), s.end());
      if (s.empty() || std::adjacent_find(s.begin(), s.end()) != s.end()) shape("subgroup must be a nonempty set");
      for (WorkerId w : s) inst_.base.require_worker(w);
      return {s};
    }
    return nonempty_subsets(inst_.base.workers(), include_full);
  }

  AxiomInstance pinned() const { return inst_; }

  // π as task indices, validated as a bijection of T.
  std::vector<std::size_t> permutation_indices() const {
    const Problem& p = inst_.base;
    if (inst_.permutation->size() != p.num_tasks()) shape("permutation has the wrong length");
    std::vector<std::size_t> out;
    for (TaskId t : *inst_.permutation) out.push_back(p.require_task(t));
    std::vector<std::size_t> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) shape("permutation is not bijective");
    return out;
  }

  Verdict dispatch() {
    const Problem& p = inst_.base;
    p.require_valid();
    switch (axiom_) {
      case AxiomId::Efficiency: return efficiency();
      case AxiomId::Continuity: return continuity();
      case AxiomId::Boundedness: return boundedness(false);
      case AxiomId::ConstantProductivity: return boundedness(true);
      case AxiomId::Symmetry: return symmetry(false);
      case AxiomId::PiSymmetry: return symmetry(true);
      case AxiomId::OrderPreservation:
      case AxiomId::StrictOrderPreservation:
      case AxiomId::StrongOrderPreservation:
      case AxiomId::PiOrderPreservation: return order_preservation();
      case AxiomId::GroupProdMono: return group_monotonicity();
      case AxiomId::IndivProdMono:
      case AxiomId::StrictIndivProdMono:
      case AxiomId::StrongIndivProdMono: return individual_monotonicity();
      case AxiomId::Trivialness: return trivialness();
      case AxiomId::BalancedImpact: return balanced_impact();
      case AxiomId::Consistency: return consistency(false);
      case AxiomId::WeakConsistency: return consistency(true);
      case AxiomId::IndepNullWorkers: return null_workers();
      case AxiomId::NoHarmFromHiring: return hiring(false);
      case AxiomId::SolidarityInHiring: return hiring(true);
      case AxiomId::IndepNullTasks: return null_tasks();
      case AxiomId::IndepUnassignedTasks: return unassigned_tasks();
      case AxiomId::Additivity: return additivity(false);
      case AxiomId::WeakAdditivity: return additivity(true);
      case AxiomId::Homogeneity: return homogeneity();
    }
    throw std::logic_error("unhandled axiom");
  }

  Verdict efficiency() {
    Solution x = R(inst_.base);
    Rational y = optimal_value(inst_.base);
    if (x.total() == y) return holds();
    return violated(pinned(), {{"R(p)", x}}, "sum of pay " + x.total().str() + " != y = " + y.str());
  }

  Verdict continuity() {
    const Problem& q = need_other();
    Rational dist = max_abs_difference(inst_.base, q);
    if (dist > continuity_radius()) shape("neighbour lies outside the probe radius");
    Solution x = R(inst_.base);
    Solution xq = R(q);
    Rational jump = 0;
    for (std::size_t k = 0; k < x.pay.size(); ++k) jump = std::max(jump, abs(x.pay[k] - xq.pay[k]));
    if (jump <= continuity_gap()) return holds();
    return violated(pinned(), {{"R(p)", x}, {"R(p^)", xq}},
                    "|p^ - p| = " + dist.str() + " but the solution moves by " + jump.str());
  }

  // Boundedness, or Constant Productivity when `constant_only`.
  Verdict boundedness(bool constant_only) {
    const Problem& p = inst_.base;
    std::vector<WorkerId> scope = workers_in_scope();
    if (constant_only &&
        std::none_of(scope.begin(), scope.end(), [&](WorkerId w) { return p.has_constant_profile(p.require_worker(w)); }))
      return holds("no worker with constant productivity");
    Solution x = R(p);
    for (WorkerId i : scope) {
      ProfileSummary s = p.summarize(i);
      if (constant_only && !(s.min == s.max)) continue;
      if (s.min <= x[i] && x[i] <= s.max) continue;
      AxiomInstance w = pinned();
      w.worker = i;
      return violated(std::move(w), {{"R(p)", x}},
                      "R_" + wid(i) + " = " + x[i].str() + " outside [" + s.min.str() + ", " + s.max.str() + "]");
    }
    return holds();
  }

  Verdict symmetry(bool permuted) {
    const Problem& p = inst_.base;
    std::optional<Solution> x;
    for (auto [i, j] : ordered_pairs()) {
      if (!inst_.pair && !(i < j)) continue;
      const Row& pi = p.profile(i);
      const Row& pj = p.profile(j);
      bool premise;
      if (!permuted) {
        premise = pi == pj;
      } else if (inst_.permutation) {
        std::vector<std::size_t> perm = permutation_indices();
        premise = true;
        for (std::size_t t = 0; t < perm.size(); ++t)
          if (pi[t] != pj[perm[t]]) premise = false;
      } else {
        premise = sorted_desc(pi) == sorted_desc(pj);
      }
      if (!premise) continue;
      if (!x) x = R(p);
      if ((*x)[i] == (*x)[j]) continue;
      AxiomInstance w = pinned();
      w.pair = {i, j};
      return violated(std::move(w), {{"R(p)", *x}},
                      "R_" + wid(i) + " = " + (*x)[i].str() + " != " + (*x)[j].str() + " = R_" + wid(j));
    }
    return holds();
  }

  Verdict order_preservation() {
    const Problem& p = inst_.base;
    std::optional<Solution> x;
    for (auto [i, j] : ordered_pairs()) {
      const Row& pi = p.profile(i);
      const Row& pj = p.profile(j);
      bool premise = false;
      bool strict_pay = false;
      switch (axiom_) {
        case AxiomId::OrderPreservation: premise = weakly_dominates(pi, pj); break;
        case AxiomId::StrictOrderPreservation:
          premise = strictly_dominates(pi, pj);
          strict_pay = true;
          break;
        case AxiomId::StrongOrderPreservation:
          premise = semi_strictly_dominates(pi, pj);
          strict_pay = true;
          break;
        default:
          if (inst_.permutation) {
            std::vector<std::size_t> perm = permutation_indices();
            premise = true;
            for (std::size_t t = 0; t < perm.size(); ++t)
              if (pi[t] < pj[perm[t]]) premise = false;
          } else {
            premise = weakly_dominates(sorted_desc(pi), sorted_desc(pj));
          }
      }
      if (!premise) continue;
      if (!x) x = R(p);
      bool ok = strict_pay ? (*x)[i] > (*x)[j] : (*x)[i] >= (*x)[j];
      if (ok) continue;
      AxiomInstance w = pinned();
      w.pair = {i, j};
      return violated(std::move(w), {{"R(p)", *x}},
                      "p_" + wid(i) + " dominates p_" + wid(j) + " but R_" + wid(i) + " = " + (*x)[i].str() +
                          (strict_pay ? " <= " : " < ") + (*x)[j].str() + " = R_" + wid(j));
    }
    return holds();
  }

  Verdict group_monotonicity() {
    const Problem& q = need_other();
    if (!weakly_dominates(inst_.base, q)) shape("requires p >= p^ entrywise");
    Solution x = R(inst_.base);
    Solution xq = R(q);
    if (all_ge(x, xq)) return holds();
    return violated(pinned(), {{"R(p)", x}, {"R(p^)", xq}}, "R(p) " + x.str() + " is not >= R(p^) " + xq.str());
  }

  Verdict individual_monotonicity() {
    const Problem& p = inst_.base;
    const Problem& q = need_other();
    if (!inst_.worker) shape("instance needs the worker i");
    WorkerId i = *inst_.worker;
    std::size_t ki = p.require_worker(i);
    for (std::size_t k = 0; k < p.num_workers(); ++k)
      if (k != ki && p.row(k) != q.row(k)) shape("second matrix may differ only in row i");
    const Row& pi = p.row(ki);
    const Row& qi = q.row(ki);
    bool premise = axiom_ == AxiomId::StrictIndivProdMono ? strictly_dominates(pi, qi) : semi_strictly_dominates(pi, qi);
    if (!premise) return holds("premise on p_i vs p^_i not met");
    Solution x = R(p);
    Solution xq = R(q);
    bool strict = axiom_ != AxiomId::IndivProdMono;
    bool ok = strict ? x[i] > xq[i] : x[i] >= xq[i];
    if (ok) return holds();
    return violated(pinned(), {{"R(p)", x}, {"R(p_-i, p^_i)", xq}},
                    "R_" + wid(i) + "(p) = " + x[i].str() + (strict ? " <= " : " < ") + xq[i].str() +
                        " = R_" + wid(i) + "(p_-i, p^_i)");
  }

  Verdict trivialness() {
    const Problem& p = inst_.base;
    if (!p.is_trivial()) return holds("problem is not trivial");
    Solution x = R(p);
    for (std::size_t k = 0; k < p.num_workers(); ++k)
      if (x.pay[k] != p.at(k, 0))
        return violated(pinned(), {{"R(p)", x}},
                        "R_" + wid(p.workers()[k]) + " = " + x.pay[k].str() + " != alpha = " + p.at(k, 0).str());
    return holds();
  }

  Verdict balanced_impact() {
    const Problem& p = inst_.base;
    if (p.num_workers() < 2) return holds("needs two workers");
    Solution x = R(p);
    for (auto [i, j] : ordered_pairs()) {
      if (!inst_.pair && !(i < j)) continue;
      Solution without_j = R(p.without_worker(j));
      Solution without_i = R(p.without_worker(i));
      Rational lhs = x[i] - without_j[i];
      Rational rhs = x[j] - without_i[j];
      if (lhs == rhs) continue;
      AxiomInstance w = pinned();
      w.pair = {i, j};
      return violated(std::move(w), {{"R(p)", x}, {"R(p_-" + wid(j) + ")", without_j}, {"R(p_-" + wid(i) + ")", without_i}},
                      "impact of " + wid(j) + " on " + wid(i) + " is " + lhs.str() + ", impact of " + wid(i) + " on " +
                          wid(j) + " is " + rhs.str());
    }
    return holds();
  }

  // Consistency, or Weak Consistency when `weak`.
  Verdict consistency(bool weak) {
    const Problem& p = inst_.base;
    OptimalSet opt = enumerate_optimal(p);
    if (weak && opt.assignments.size() != 1) return holds("A* is not a singleton");
    Solution x = R(p);
    Rational count(static_cast<std::int64_t>(opt.assignments.size()));
    for (const std::vector<WorkerId>& sub : subgroups(true)) {
      std::vector<Rational> avg(sub.size(), Rational(0));
      for (const Assignment& a : opt.assignments) {
        Solution r = R(p.restrict(sub, a.image(sub)));
        for (std::size_t k = 0; k < sub.size(); ++k) avg[k] += r.pay[k];
      }
      for (Rational& v : avg) v /= count;
      Solution reduced{sub, avg, false};
      Solution mine = x.project(sub);
      if (mine == reduced) continue;
      AxiomInstance w = pinned();
      w.subgroup = sub;
      return violated(std::move(w), {{"R(p)", x}, {"avg R(reduced)", reduced}},
                      "R_I'(p) = " + mine.str() + " but the reduced problems give " + reduced.str());
    }
    return holds();
  }

  Verdict null_workers() {
    const Problem& p = inst_.base;
    if (p.num_workers() < 2) return holds("needs two workers");
    std::optional<Solution> x;
    for (WorkerId i : workers_in_scope()) {
      if (!p.is_null_worker(p.require_worker(i))) continue;
      if (!x) x = R(p);
      Problem rest = p.without_worker(i);
      Solution xr = R(rest);
      Solution mine = x->project(rest.workers());
      if (mine == xr) continue;
      AxiomInstance w = pinned();
      w.worker = i;
      return violated(std::move(w), {{"R(p)", *x}, {"R(p_-" + wid(i) + ")", xr}},
                      "removing null worker " + wid(i) + " moves the others from " + mine.str() + " to " + xr.str());
    }
    return holds();
  }

  // No Harm from Hiring, or Solidarity in Hiring when `solidarity`.
  Verdict hiring(bool solidarity) {
    const Problem& p = inst_.base;
    Solution x = R(p);
    for (const std::vector<WorkerId>& sub : subgroups(false)) {
      Solution small = R(p.restrict_workers(sub));
      Solution mine = x.project(sub);
      bool up = all_ge(mine, small);
      bool down = all_ge(small, mine);
      if (solidarity ? (up || down) : up) continue;
      AxiomInstance w = pinned();
      w.subgroup = sub;
      return violated(std::move(w), {{"R(p)", x}, {"R(I', T, p_I')", small}},
                      "R_I'(p) = " + mine.str() + " vs R(p_I') = " + small.str());
    }
    return holds();
  }

  Verdict null_tasks() {
    const Problem& p = inst_.base;
    if (p.num_tasks() < p.num_workers() + 1) return holds("needs |T| >= |I| + 1");
    std::vector<TaskId> scope = inst_.task ? std::vector<TaskId>{*inst_.task} : p.tasks();
    std::optional<Solution> x;
    for (TaskId t : scope) {
      if (!p.is_null_task(p.require_task(t))) continue;
      if (!x) x = R(p);
      Solution xr = R(p.without_task(t));
      if (*x == xr) continue;
      AxiomInstance w = pinned();
      w.task = t;
      return violated(std::move(w), {{"R(p)", *x}, {"R(p^-" + std::to_string(t.value) + ")", xr}},
                      "removing null task " + std::to_string(t.value) + " changes " + x->str() + " to " + xr.str());
    }
    return holds();
  }

  Verdict unassigned_tasks() {
    const Problem& p = inst_.base;
    std::vector<TaskId> star = assigned_task_set(p);
    std::vector<std::vector<TaskId>> candidates;
    if (inst_.task_subset) {
      std::vector<TaskId> ts = *inst_.task_subset;
      std::sort(ts.begin(), ts.end());
      for (TaskId t : ts) p.require_task(t);
      if (!std::includes(ts.begin(), ts.end(), star.begin(), star.end())) shape("T' must contain T*");
      candidates.push_back(ts);
    } else {
      std::vector<TaskId> spare;
      std::set_difference(p.tasks().begin(), p.tasks().end(), star.begin(), star.end(), std::back_inserter(spare));
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << spare.size()); ++s) {
        std::vector<TaskId> ts = star;
        for (std::size_t k = 0; k < spare.size(); ++k)
          if (s & (std::uint64_t{1} << k)) ts.push_back(spare[k]);
        std::sort(ts.begin(), ts.end());
        if (ts.size() < p.tasks().size()) candidates.push_back(std::move(ts));
      }
    }
    Solution x = R(p);
    for (const std::vector<TaskId>& ts : candidates) {
      Solution xr = R(p.restrict_tasks(ts));
      if (x == xr) continue;
      AxiomInstance w = pinned();
      w.task_subset = ts;
      return violated(std::move(w), {{"R(p)", x}, {"R(p^T')", xr}},
                      "restricting to T' changes " + x.str() + " to " + xr.str());
    }
    return holds();
  }

  Verdict additivity(bool weak) {
    const Problem& p = inst_.base;
    const Problem& q = need_other();
    std::vector<Assignment> a = enumerate_optimal(p).assignments;
    std::vector<Assignment> b = enumerate_optimal(q).assignments;
    bool premise;
    if (weak) {
      premise = a == b;
    } else {
      std::vector<Assignment> both;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
      premise = !both.empty();
    }
    if (!premise) return holds(weak ? "A*(p) != A*(p^)" : "A*(p) and A*(p^) are disjoint");
    Solution x = R(p);
    Solution xq = R(q);
    Solution sum = R(p + q);
    Solution added = x;
    for (std::size_t k = 0; k < added.pay.size(); ++k) added.pay[k] += xq.pay[k];
    if (sum == added) return holds();
    return violated(pinned(), {{"R(p)", x}, {"R(p^)", xq}, {"R(p+p^)", sum}},
                    "R(p+p^) = " + sum.str() + " != " + added.str() + " = R(p) + R(p^)");
  }

  Verdict homogeneity() {
    if (!inst_.alpha) shape("instance needs alpha");
    const Rational& alpha = *inst_.alpha;
    if (alpha.sign() <= 0) shape("alpha must be positive");
    Solution x = R(inst_.base);
    Solution xs = R(inst_.base.scaled(alpha));
    Solution expect = x;
    for (Rational& v : expect.pay) v *= alpha;
    if (xs == expect) return holds();
    return violated(pinned(), {{"R(p)", x}, {"R(alpha p)", xs}},
                    "R(alpha p) = " + xs.str() + " != alpha R(p) = " + expect.str());
  }

  const Rule& rule_;
  AxiomId axiom_;
  const AxiomInstance& inst_;
};

}  // namespace detail

// Exact evaluation of one axiom on one instance.
inline Verdict check(const Rule& rule, AxiomId axiom, const AxiomInstance& instance) {
  return detail::Checker(rule, axiom, instance).run();
}

}  // namespace faircomp

#endif  // FAIRCOMP_AXIOMS_HPP
