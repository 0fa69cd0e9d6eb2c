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

#ifndef FAIRCOMP_RULES_HPP
#define FAIRCOMP_RULES_HPP

#include "faircomp/coalition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace faircomp {

// The rule has no value on this problem (P^Δ with Σ Δp = 0 < y).
class RuleUndefined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidChoice : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// f(p_0, λ) for the parametric family. Built-ins are linear in λ and carry
// their weight so λ can be solved exactly.
struct ParametricFn {
  std::string id;
  std::function<Rational(std::span<const Rational>, const Rational&)> eval;
  std::function<Rational(std::span<const Rational>)> linear_weight;  // f = λ·w(p_0) when set

  Rational operator()(std::span<const Rational> profile, const Rational& lambda) const {
    return eval(profile, lambda);
  }

  static ParametricFn linear(std::string id, std::function<Rational(std::span<const Rational>)> w) {
    ParametricFn f;
    f.id = std::move(id);
    f.linear_weight = w;
    f.eval = [w](std::span<const Rational> p0, const Rational& lambda) { return lambda * w(p0); };
    return f;
  }

  // f = λ; yields E.
  static ParametricFn constant() {
    return linear("lambda", [](std::span<const Rational>) { return Rational(1); });
  }
  // f = λ·p̄; yields P^Av.
  static ParametricFn mean() {
    return linear("lambda-mean", [](std::span<const Rational> p0) {
      Rational s = 0;
      for (const Rational& x : p0) s += x;
      return p0.empty() ? s : s / Rational(static_cast<std::int64_t>(p0.size()));
    });
  }
  // f = λ·p^max; yields P^max.
  static ParametricFn max() {
    return linear("lambda-max", [](std::span<const Rational> p0) {
      Rational m = 0;
      for (const Rational& x : p0) m = std::max(m, x);
      return m;
    });
  }
  // f = λ·Σ_t p_0^t.
  static ParametricFn sum() {
    return linear("lambda-sum", [](std::span<const Rational> p0) {
      Rational s = 0;
      for (const Rational& x : p0) s += x;
      return s;
    });
  }

  static std::vector<ParametricFn> builtins() { return {constant(), mean(), max(), sum()}; }
};

// Picks one assignment out of A*(I,T,p).
struct Chooser {
  std::string id;
  std::function<Assignment(const std::vector<Assignment>&)> pick;

  static Chooser first() {
    return {"first", [](const std::vector<Assignment>& as) { return as.front(); }};
  }
  static Chooser last() {
    return {"last", [](const std::vector<Assignment>& as) { return as.back(); }};
  }
};

enum class RuleKind {
  Egalitarian,
  ShapleyValue,
  IndividualContribution,
  PropAvg,
  PropMax,
  PropMarginal,
  MarginalEgalitarian,
  Parametric,
  ICPriority,
  ICChoice,
};

class Rule {
 public:
  static Rule egalitarian() { return Rule(RuleKind::Egalitarian); }
  static Rule shapley() { return Rule(RuleKind::ShapleyValue); }
  static Rule individual_contribution() { return Rule(RuleKind::IndividualContribution); }
  static Rule prop_avg() { return Rule(RuleKind::PropAvg); }
  static Rule prop_max() { return Rule(RuleKind::PropMax); }
  static Rule prop_marginal() { return Rule(RuleKind::PropMarginal); }
  static Rule marginal_egalitarian() { return Rule(RuleKind::MarginalEgalitarian); }
  static Rule parametric(ParametricFn fn) {
    Rule r(RuleKind::Parametric);
    r.fn_ = std::make_shared<const ParametricFn>(std::move(fn));
    return r;
  }
  // `order` lists workers from highest to lowest priority.
  static Rule ic_priority(std::vector<WorkerId> order) {
    Rule r(RuleKind::ICPriority);
    r.order_ = std::move(order);
    return r;
  }
  static Rule ic_choice(Chooser c) {
    Rule r(RuleKind::ICChoice);
    r.chooser_ = std::make_shared<const Chooser>(std::move(c));
    return r;
  }

  // E, SV, IC, P^Av, P^max, P^Δ, E^Δ in table order.
  static std::vector<Rule> table_rules() {
    return {egalitarian(), shapley(), individual_contribution(), prop_avg(), prop_max(), prop_marginal(),
            marginal_egalitarian()};
  }

  RuleKind kind() const { return kind_; }
  const ParametricFn& fn() const { return *fn_; }
  const std::vector<WorkerId>& order() const { return order_; }
  const Chooser& chooser() const { return *chooser_; }

  // Weak Individual Contribution family.
  bool is_weak_ic() const {
    return kind_ == RuleKind::IndividualContribution || kind_ == RuleKind::ICPriority ||
           kind_ == RuleKind::ICChoice;
  }

  std::string name() const {
    switch (kind_) {
      case RuleKind::Egalitarian: return "E";
      case RuleKind::ShapleyValue: return "SV";
      case RuleKind::IndividualContribution: return "IC";
      case RuleKind::PropAvg: return "P^Av";
      case RuleKind::PropMax: return "P^max";
      case RuleKind::PropMarginal: return "P^Delta";
      case RuleKind::MarginalEgalitarian: return "E^Delta";
      case RuleKind::Parametric: return "Par[" + fn_->id + "]";
      case RuleKind::ICPriority: {
        std::string s = "IC<[";
        for (std::size_t k = 0; k < order_.size(); ++k) s += (k ? "-" : "") + std::to_string(order_[k].value);
        return s + "]";
      }
      case RuleKind::ICChoice: return "ICc[" + chooser_->id + "]";
    }
    return "?";
  }

 private:
  explicit Rule(RuleKind k) : kind_(k) {}

  RuleKind kind_;
  std::shared_ptr<const ParametricFn> fn_;
  std::vector<WorkerId> order_;
  std::shared_ptr<const Chooser> chooser_;
};

// Accepts e, sv, ic, pav, pmax, pdelta, edelta, par:<fn>, icprio:<i-j-k>,
// icchoice:first|last (case-insensitive), plus the display names.
inline Rule parse_rule(const std::string& text) {
  std::string s;
  for (char c : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "e") return Rule::egalitarian();
  if (s == "sv") return Rule::shapley();
  if (s == "ic") return Rule::individual_contribution();
  if (s == "pav" || s == "p^av") return Rule::prop_avg();
  if (s == "pmax" || s == "p^max") return Rule::prop_max();
  if (s == "pdelta" || s == "p^delta") return Rule::prop_marginal();
  if (s == "edelta" || s == "e^delta") return Rule::marginal_egalitarian();
  auto tail = [&](const std::string& prefix) -> std::optional<std::string> {
    if (s.rfind(prefix, 0) == 0) return s.substr(prefix.size());
    return std::nullopt;
  };
  if (auto f = tail("par:")) {
    for (ParametricFn& fn : ParametricFn::builtins())
      if (fn.id == *f) return Rule::parametric(std::move(fn));
    throw std::invalid_argument("unknown parametric function '" + *f + "'");
  }
  if (auto o = tail("icprio:")) {
    std::vector<WorkerId> order;
    std::size_t pos = 0;
    while (pos <= o->size()) {
      std::size_t dash = o->find('-', pos);
      std::string tok = o->substr(pos, dash == std::string::npos ? std::string::npos : dash - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad priority order '" + *o + "'");
      order.push_back(worker(static_cast<std::uint32_t>(std::stoul(tok))));
      if (dash == std::string::npos) break;
      pos = dash + 1;
    }
    return Rule::ic_priority(std::move(order));
  }
  if (auto c = tail("icchoice:")) {
    if (*c == "first") return Rule::ic_choice(Chooser::first());
    if (*c == "last") return Rule::ic_choice(Chooser::last());
    throw std::invalid_argument("unknown chooser '" + *c + "'");
  }
  throw std::invalid_argument("unknown rule '" + text + "'");
}

namespace detail {

inline Solution make_solution(const Problem& p, std::vector<Rational> pay) {
  return Solution{p.workers(), std::move(pay), false};
}

// y·w_i / Σw, all zeros when y = 0.
inline Solution proportional(const Problem& p, const Rational& y, const std::vector<Rational>& w, const char* rule) {
  std::vector<Rational> pay(w.size(), Rational(0));
  if (y.is_zero()) return make_solution(p, std::move(pay));
  Rational total = 0;
  for (const Rational& x : w) total += x;
  if (total.is_zero()) throw RuleUndefined(std::string(rule) + " is undefined: weights sum to 0 while y > 0");
  for (std::size_t k = 0; k < w.size(); ++k) pay[k] = y * w[k] / total;
  return make_solution(p, std::move(pay));
}

}  // namespace detail

// E_i = y / |I|
inline Solution egalitarian(const Problem& p) {
  Rational y = optimal_value(p);
  Rational share = y / Rational(static_cast<std::int64_t>(p.num_workers()));
  return detail::make_solution(p, std::vector<Rational>(p.num_workers(), share));
}

inline Solution shapley(const Problem& p, const CoalitionTable& table) {
  std::vector<Rational> pay;
  for (std::size_t k = 0; k < table.size(); ++k) pay.push_back(table.shapley(k));
  return detail::make_solution(p, std::move(pay));
}

inline Solution shapley(const Problem& p) { return shapley(p, CoalitionTable(p)); }

// IC_i = average of p_i^{a(i)} over A*.
inline Solution individual_contribution(const Problem& p) {
  OptimalSet opt = enumerate_optimal(p);
  std::vector<Rational> pay(p.num_workers(), Rational(0));
  for (const Assignment& a : opt.assignments)
    for (std::size_t k = 0; k < pay.size(); ++k) pay[k] += p.at(k, p.require_task(a.tasks[k]));
  Rational count(static_cast<std::int64_t>(opt.assignments.size()));
  for (Rational& x : pay) x /= count;
  return detail::make_solution(p, std::move(pay));
}

inline Solution prop_avg(const Problem& p) {
  Rational y = optimal_value(p);
  std::vector<Rational> w;
  for (WorkerId i : p.workers()) w.push_back(p.summarize(i).mean);
  return detail::proportional(p, y, w, "P^Av");
}

inline Solution prop_max(const Problem& p) {
  Rational y = optimal_value(p);
  std::vector<Rational> w;
  for (WorkerId i : p.workers()) w.push_back(p.summarize(i).max);
  return detail::proportional(p, y, w, "P^max");
}

inline Solution prop_marginal(const Problem& p) {
  Rational y = optimal_value(p);
  return detail::proportional(p, y, marginal_contributions(p), "P^Delta");
}

// E^Δ_i = Δp_i + (y − Σ_j Δp_j) / |I|
inline Solution marginal_egalitarian(const Problem& p) {
  Rational y = optimal_value(p);
  std::vector<Rational> delta = marginal_contributions(p);
  Rational surplus = y;
  for (const Rational& d : delta) surplus -= d;
  surplus /= Rational(static_cast<std::int64_t>(p.num_workers()));
  for (Rational& d : delta) d += surplus;
  return detail::make_solution(p, std::move(delta));
}

struct LambdaSolution {
  Rational lambda;
  Solution solution;
};

// λ with Σ_j f(p_j, λ) = y. Closed form for linear fns; otherwise bisection on
// [0, hi] with hi found by doubling, stopping once 0 ≤ y − Σ f ≤ y·2^−64 (the
// result is then flagged approximate and never overshoots y).
inline LambdaSolution solve_lambda(const ParametricFn& fn, const Problem& p, int max_iterations = 4096) {
  Rational y = optimal_value(p);
  std::vector<Rational> pay(p.num_workers(), Rational(0));
  if (y.is_zero()) return {Rational(0), detail::make_solution(p, std::move(pay))};
  if (fn.linear_weight) {
    Rational total = 0;
    std::vector<Rational> w;
    for (const Row& r : p.rows()) {
      w.push_back(fn.linear_weight(r));
      total += w.back();
    }
    if (total.sign() <= 0) throw RuleUndefined("Par[" + fn.id + "]: weights sum to 0 while y > 0");
    Rational lambda = y / total;
    for (std::size_t k = 0; k < w.size(); ++k) pay[k] = lambda * w[k];
    return {lambda, detail::make_solution(p, std::move(pay))};
  }
  auto budget_at = [&](const Rational& lambda) {
    Rational s = 0;
    for (const Row& r : p.rows()) s += fn(r, lambda);
    return s;
  };
  Rational tolerance = y / Rational(BigInt(1) << 64, 1);
  Rational lo = 0;
  Rational hi = 1;
  int iterations = 0;
  while (budget_at(hi) < y) {
    lo = hi;
    hi *= 2;
    if (++iterations > max_iterations) throw NonConvergence("Par[" + fn.id + "]: no upper bracket for lambda");
  }
  while (y - budget_at(lo) > tolerance) {
    Rational mid = (lo + hi) / 2;
    if (budget_at(mid) <= y)
      lo = mid;
    else
      hi = mid;
    if (++iterations > max_iterations) throw NonConvergence("Par[" + fn.id + "]: bisection budget exhausted");
  }
  for (std::size_t k = 0; k < pay.size(); ++k) pay[k] = fn(p.row(k), lo);
  Solution s = detail::make_solution(p, std::move(pay));
  s.approximate = true;
  return {lo, std::move(s)};
}

inline Solution parametric(const ParametricFn& fn, const Problem& p) { return solve_lambda(fn, p).solution; }

// Sample check of conditions (i)–(iv) on the given profiles: f(·,0) = 0,
// monotone on a λ grid, and growth past every bound for non-null profiles.
inline std::vector<std::string> check_parametric_conditions(const ParametricFn& fn, const std::vector<Row>& profiles) {
  std::vector<std::string> out;
  std::vector<Rational> grid;
  for (int k = 0; k <= 16; ++k) grid.push_back(Rational(k, 4));
  for (const Row& p0 : profiles) {
    std::string tag = "profile(";
    for (std::size_t k = 0; k < p0.size(); ++k) tag += (k ? "," : "") + p0[k].str();
    tag += ")";
    if (!fn(p0, 0).is_zero()) out.push_back(tag + ": f(p0, 0) != 0");
    for (std::size_t k = 1; k < grid.size(); ++k)
      if (fn(p0, grid[k]) < fn(p0, grid[k - 1])) {
        out.push_back(tag + ": not monotone in lambda");
        break;
      }
    bool null = std::all_of(p0.begin(), p0.end(), [](const Rational& x) { return x.is_zero(); });
    if (!null) {
      Rational far = fn(p0, Rational(BigInt(1) << 40, 1));
      if (far <= fn(p0, 1)) out.push_back(tag + ": does not grow with lambda");
    }
  }
  return out;
}

// Lexicographic refinement of A* by the priority order; all survivors give
// every worker the same output.
inline Solution ic_priority(const std::vector<WorkerId>& order, const Problem& p) {
  std::vector<std::size_t> ranked;
  for (WorkerId w : order)
    if (auto k = p.worker_index(w)) ranked.push_back(*k);
  std::sort(ranked.begin(), ranked.end());
  if (std::adjacent_find(ranked.begin(), ranked.end()) != ranked.end())
    throw std::invalid_argument("priority order repeats a worker");
  if (ranked.size() != p.num_workers()) throw std::invalid_argument("priority order does not cover every worker");
  OptimalSet opt = enumerate_optimal(p);
  std::vector<Assignment> survivors = std::move(opt.assignments);
  auto own = [&](const Assignment& a, WorkerId w) { return p.value(w, a(w)); };
  for (WorkerId w : order) {
    if (!p.worker_index(w)) continue;
    Rational best = own(survivors.front(), w);
    for (const Assignment& a : survivors) best = std::max(best, own(a, w));
    std::erase_if(survivors, [&](const Assignment& a) { return own(a, w) != best; });
  }
  std::vector<Rational> pay;
  for (WorkerId w : p.workers()) pay.push_back(own(survivors.front(), w));
  return detail::make_solution(p, std::move(pay));
}

inline Solution ic_choice(const Chooser& chooser, const Problem& p) {
  OptimalSet opt = enumerate_optimal(p);
  Assignment a = chooser.pick(opt.assignments);
  if (std::find(opt.assignments.begin(), opt.assignments.end(), a) == opt.assignments.end())
    throw InvalidChoice("chooser '" + chooser.id + "' returned " + a.str() + ", which is not in A*");
  std::vector<Rational> pay;
  for (WorkerId w : p.workers()) pay.push_back(p.value(w, a(w)));
  return detail::make_solution(p, std::move(pay));
}

inline Solution compensate(const Rule& rule, const Problem& p) {
  p.require_valid();
  switch (rule.kind()) {
    case RuleKind::Egalitarian: return egalitarian(p);
    case RuleKind::ShapleyValue: return shapley(p);
    case RuleKind::IndividualContribution: return individual_contribution(p);
    case RuleKind::PropAvg: return prop_avg(p);
    case RuleKind::PropMax: return prop_max(p);
    case RuleKind::PropMarginal: return prop_marginal(p);
    case RuleKind::MarginalEgalitarian: return marginal_egalitarian(p);
    case RuleKind::Parametric: return parametric(rule.fn(), p);
    case RuleKind::ICPriority: return ic_priority(rule.order(), p);
    case RuleKind::ICChoice: return ic_choice(rule.chooser(), p);
  }
  throw std::logic_error("unhandled rule kind");
}

}  // namespace faircomp

#endif  // FAIRCOMP_RULES_HPP
