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

#ifndef FAIRCOMP_FALSIFY_HPP
#define FAIRCOMP_FALSIFY_HPP

#include "faircomp/fixtures.hpp"
#include "faircomp/generate.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace faircomp {

// Bounds for generated instances.
struct SearchSpace {
  std::size_t max_workers = 4;
  std::size_t max_tasks = 5;
  ValueGrid grid{};
};

namespace detail {

class InstanceGenerator {
 public:
  InstanceGenerator(AxiomId axiom, const SearchSpace& space, Rng& rng) : axiom_(axiom), space_(space), rng_(rng) {}

  AxiomInstance next() {
    switch (axiom_) {
      case AxiomId::Efficiency:
      case AxiomId::Boundedness:
      case AxiomId::Consistency:
      case AxiomId::IndepUnassignedTasks: return plain(1);
      case AxiomId::BalancedImpact:
      case AxiomId::NoHarmFromHiring:
      case AxiomId::SolidarityInHiring: return plain(2);
      case AxiomId::Continuity: return continuity();
      case AxiomId::Symmetry: return planted_row(RowPlant::Copy);
      case AxiomId::PiSymmetry: return planted_row(RowPlant::Permute);
      case AxiomId::OrderPreservation: return planted_row(RowPlant::Decrease);
      case AxiomId::StrictOrderPreservation: return planted_row(RowPlant::StrictDecrease);
      case AxiomId::StrongOrderPreservation: return planted_row(RowPlant::SemiStrictDecrease);
      case AxiomId::PiOrderPreservation: return planted_row(RowPlant::PermuteDecrease);
      case AxiomId::GroupProdMono: return group_monotonicity();
      case AxiomId::IndivProdMono:
      case AxiomId::StrongIndivProdMono: return individual_monotonicity(false);
      case AxiomId::StrictIndivProdMono: return individual_monotonicity(true);
      case AxiomId::ConstantProductivity: return constant_row();
      case AxiomId::Trivialness: return make_instance(generate_trivial(rng_, shape(1), space_.grid));
      case AxiomId::WeakConsistency: return unique_optimum();
      case AxiomId::IndepNullWorkers: return null_worker();
      case AxiomId::IndepNullTasks: return null_task();
      case AxiomId::Additivity: return additive_pair(false);
      case AxiomId::WeakAdditivity: return additive_pair(true);
      case AxiomId::Homogeneity: return homogeneity();
    }
    throw std::logic_error("no generator for axiom");
  }

 private:
  enum class RowPlant { Copy, Permute, Decrease, StrictDecrease, SemiStrictDecrease, PermuteDecrease };

  Shape shape(std::size_t min_workers, std::size_t extra_tasks = 0) {
    std::size_t max_w = std::max(min_workers, std::min(space_.max_workers, space_.max_tasks - extra_tasks));
    Shape s = random_shape(rng_, max_w, space_.max_tasks, 2, min_workers);
    if (s.tasks < s.workers + extra_tasks) s.tasks = s.workers + extra_tasks;
    return s;
  }

  Problem random_problem(Shape s) { return generate(rng_, s, space_.grid); }

  Rational positive_step() { return Rational(static_cast<std::int64_t>(1 + rng_.below(4)), 2); }

  AxiomInstance plain(std::size_t min_workers) { return make_instance(random_problem(shape(min_workers))); }

  AxiomInstance continuity() {
    Problem p = random_problem(shape(1));
    std::vector<Row> rows = p.rows();
    Rational step = continuity_radius();
    for (Row& r : rows)
      for (Rational& x : r) {
        std::uint64_t k = rng_.below(3);
        if (k == 1) x += step;
        if (k == 2 && x >= step) x -= step;
      }
    return with_other(p, Problem::from_rows(std::move(rows)));
  }

  AxiomInstance planted_row(RowPlant plant) {
    Problem p = random_problem(shape(2));
    std::size_t n = p.num_workers();
    std::size_t i = rng_.below(n);
    std::size_t j = (i + 1 + rng_.below(n - 1)) % n;
    Row src = p.row(i);
    Row dst = src;
    switch (plant) {
      case RowPlant::Copy: break;
      case RowPlant::Permute: rng_.shuffle(dst); break;
      case RowPlant::PermuteDecrease:
        rng_.shuffle(dst);
        decrease(dst, false);
        break;
      case RowPlant::Decrease: decrease(dst, false); break;
      case RowPlant::SemiStrictDecrease: {
        // Build p_i from p_j so the strict entry is never blocked by a zero.
        dst = p.row(j);
        src = dst;
        for (Rational& x : src)
          if (rng_.chance(1, 2)) x += positive_step();
        src[rng_.below(src.size())] += positive_step();
        break;
      }
      case RowPlant::StrictDecrease:
        dst = p.row(j);
        src = dst;
        for (Rational& x : src) x += positive_step();
        break;
    }
    std::vector<Row> rows = p.rows();
    rows[i] = src;
    rows[j] = dst;
    return make_instance(Problem::from_rows(std::move(rows)));
  }

  void decrease(Row& r, bool all) {
    for (Rational& x : r) {
      if (!all && rng_.chance(1, 2)) continue;
      Rational d = positive_step();
      x = d < x ? x - d : Rational(0);
    }
  }

  AxiomInstance group_monotonicity() {
    Problem p = random_problem(shape(1));
    std::uint64_t mode = rng_.below(4);
    if (mode <= 1) {
      std::vector<Row> rows = p.rows();
      for (Row& r : rows) decrease(r, mode == 1);
      return with_other(p, Problem::from_rows(std::move(rows)));
    }
    // Zeroed matrix along an optimal assignment, and its swap matrix.
    Assignment a = enumerate_optimal(p).assignments.front();
    std::vector<Row> zero(p.num_workers(), Row(p.num_tasks(), Rational(0)));
    Row shared(p.num_tasks(), Rational(0));
    for (std::size_t k = 0; k < p.num_workers(); ++k) {
      std::size_t t = p.require_task(a.tasks[k]);
      zero[k][t] = p.at(k, t);
      shared[t] = p.at(k, t);
    }
    Problem zeroed = Problem::from_rows(std::move(zero));
    if (mode == 2) return with_other(p, zeroed);
    return with_other(Problem::from_rows(std::vector<Row>(p.num_workers(), shared)), zeroed);
  }

  AxiomInstance individual_monotonicity(bool strict) {
    Problem low = random_problem(shape(1));
    std::size_t i = rng_.below(low.num_workers());
    Row r = low.row(i);
    if (strict) {
      for (Rational& x : r) x += positive_step();
    } else {
      for (Rational& x : r)
        if (rng_.chance(1, 3)) x += positive_step();
      r[rng_.below(r.size())] += positive_step();
    }
    std::vector<Row> rows = low.rows();
    rows[i] = r;
    AxiomInstance in = with_other(Problem::from_rows(std::move(rows)), low);
    in.worker = low.workers()[i];
    return in;
  }

  AxiomInstance constant_row() {
    Problem p = random_problem(shape(1));
    std::vector<Row> rows = p.rows();
    std::size_t i = rng_.below(rows.size());
    rows[i] = Row(p.num_tasks(), space_.grid.draw(rng_));
    return make_instance(Problem::from_rows(std::move(rows)));
  }

  AxiomInstance unique_optimum() {
    Problem p = random_problem(shape(1));
    OptimalSet opt = enumerate_optimal(p);
    const Assignment& a = opt.assignments[rng_.below(opt.assignments.size())];
    return make_instance(perturb_to_unique(p, a, Rational(1, 2)));
  }

  AxiomInstance null_worker() {
    Problem p = random_problem(shape(2));
    std::vector<Row> rows = p.rows();
    rows[rng_.below(rows.size())] = Row(p.num_tasks(), Rational(0));
    return make_instance(Problem::from_rows(std::move(rows)));
  }

  AxiomInstance null_task() {
    Problem p = random_problem(shape(1, 1));
    std::vector<Row> rows = p.rows();
    std::size_t t = rng_.below(p.num_tasks());
    for (Row& r : rows) r[t] = Rational(0);
    return make_instance(Problem::from_rows(std::move(rows)));
  }

  // Adds M = y(q) + 1 along a: a then beats every other assignment of q.
  Problem boost_along(const Problem& q, const Assignment& a) {
    Rational m = optimal_value(q) + Rational(1);
    std::vector<Row> rows = q.rows();
    for (std::size_t k = 0; k < a.workers.size(); ++k) rows[k][q.require_task(a.tasks[k])] += m;
    return Problem::from_rows(std::move(rows));
  }

  AxiomInstance additive_pair(bool weak) {
    Problem p = random_problem(shape(1));
    std::uint64_t mode = rng_.below(3);
    if (mode == 0) {
      Rational k(static_cast<std::int64_t>(1 + rng_.below(3)), static_cast<std::int64_t>(1 + rng_.below(2)));
      return with_other(p, p.scaled(k));
    }
    if (mode == 1) {
      // Row constants shift every assignment by the same amount.
      std::vector<Row> rows;
      for (std::size_t k = 0; k < p.num_workers(); ++k) rows.emplace_back(p.num_tasks(), space_.grid.draw(rng_));
      return with_other(p, p + Problem::from_rows(std::move(rows)));
    }
    OptimalSet opt = enumerate_optimal(p);
    const Assignment& a = opt.assignments[rng_.below(opt.assignments.size())];
    Problem q = boost_along(random_problem({p.num_workers(), p.num_tasks()}), a);
    if (weak) p = perturb_to_unique(p, a, Rational(1, 2));
    return with_other(p, q);
  }

  AxiomInstance homogeneity() {
    AxiomInstance in = plain(1);
    in.alpha = Rational(static_cast<std::int64_t>(1 + rng_.below(9)), static_cast<std::int64_t>(1 + rng_.below(4)));
    return in;
  }

  AxiomId axiom_;
  const SearchSpace& space_;
  Rng& rng_;
};

}  // namespace detail

inline AxiomInstance generate_instance(AxiomId axiom, Rng& rng, const SearchSpace& space = {}) {
  return detail::InstanceGenerator(axiom, space, rng).next();
}

// Randomized search for a violation. Trial 0 replays the registered fixtures
// for (rule, axiom) when there are any; every other trial k draws from the
// stream derive_seed(seed, k). Trials where the rule is undefined are skipped
// and counted.
inline Verdict falsify(const Rule& rule, AxiomId axiom, std::size_t budget, std::uint64_t seed,
                       const SearchSpace& space = {}) {
  if (budget < 1) throw std::invalid_argument("falsify: budget must be at least 1");
  std::size_t skipped = 0;
  auto finish = [&](Verdict v, std::size_t trials, std::string evidence) {
    v.trials = trials;
    v.seed = seed;
    v.skipped = skipped;
    v.evidence = std::move(evidence);
    return v;
  };
  std::size_t first = 0;
  std::vector<const Fixture*> replay = fixtures_for(rule, axiom);
  if (!replay.empty()) {
    first = 1;
    for (const Fixture* f : replay) {
      Verdict v = check(rule, axiom, f->instance);
      if (v.violated()) return finish(std::move(v), 1, "fixture " + f->name);
      if (v.outcome == Outcome::Undefined) ++skipped;
    }
  }
  for (std::size_t k = first; k < budget; ++k) {
    Rng rng(derive_seed(seed, k));
    AxiomInstance in = generate_instance(axiom, rng, space);
    Verdict v = check(rule, axiom, in);
    if (v.violated()) return finish(std::move(v), k + 1, "falsifier trial " + std::to_string(k));
    if (v.outcome == Outcome::Undefined) ++skipped;
  }
  Verdict v;
  v.outcome = Outcome::Survived;
  return finish(std::move(v), budget, "survived");
}

}  // namespace faircomp

#endif  // FAIRCOMP_FALSIFY_HPP
