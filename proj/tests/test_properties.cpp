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


// Randomised invariants over small seeded problems.

#include "faircomp/coalition.hpp"
#include "faircomp/generate.hpp"
#include "faircomp/rules.hpp"

#include <gtest/gtest.h>

using namespace faircomp;

namespace {

constexpr int kCases = 150;

std::vector<Rule> every_rule() {
  std::vector<Rule> out = Rule::table_rules();
  for (ParametricFn& fn : ParametricFn::builtins()) out.push_back(Rule::parametric(std::move(fn)));
  out.push_back(Rule::ic_choice(Chooser::first()));
  out.push_back(Rule::ic_choice(Chooser::last()));
  return out;
}

Problem sample(std::uint64_t seed, std::size_t max_workers = 4, std::size_t max_tasks = 5) {
  Rng rng(derive_seed(0x5eed, seed));
  return generate(rng, random_shape(rng, max_workers, max_tasks));
}

std::vector<WorkerId> reversed(const Problem& p) { return {p.workers().rbegin(), p.workers().rend()}; }

Rational row_min(const Row& r) { return *std::min_element(r.begin(), r.end()); }
Rational row_max(const Row& r) { return *std::max_element(r.begin(), r.end()); }

}  // namespace

TEST(Properties, EveryRuleIsEfficient) {
  std::vector<Rule> rules = every_rule();
  for (int c = 0; c < kCases; ++c) {
    Problem p = sample(c);
    Rational y = optimal_value(p);
    std::vector<Rule> all = rules;
    all.push_back(Rule::ic_priority(reversed(p)));
    for (const Rule& r : all) {
      Solution s;
      try {
        s = compensate(r, p);
      } catch (const RuleUndefined&) {
        continue;
      }
      if (s.approximate) {
        EXPECT_LT(std::abs((s.total() - y).to_double()), 1e-6) << r.name() << " case " << c;
      } else {
        EXPECT_EQ(s.total(), y) << r.name() << " case " << c;
      }
      for (const Rational& x : s.pay)
        EXPECT_GE(x.sign(), 0) << r.name() << " case " << c;
    }
  }
}

TEST(Properties, WeakIcRulesAgreeOnUniqueOptima) {
  for (int c = 0; c < kCases; ++c) {
    Problem p = sample(c);
    OptimalSet opt = enumerate_optimal(p);
    Problem q = perturb_to_unique(p, opt.assignments.back(), Rational(1, 3));
    Solution ic = compensate(Rule::individual_contribution(), q);
    EXPECT_EQ(compensate(Rule::ic_priority(reversed(q)), q), ic) << c;
    EXPECT_EQ(compensate(Rule::ic_choice(Chooser::first()), q), ic) << c;
    EXPECT_EQ(compensate(Rule::ic_choice(Chooser::last()), q), ic) << c;
  }
}

TEST(Properties, BoundednessOfShapleyAndIc) {
  for (int c = 0; c < kCases; ++c) {
    Problem p = sample(c);
    Solution sv = compensate(Rule::shapley(), p);
    Solution ic = compensate(Rule::individual_contribution(), p);
    for (std::size_t k = 0; k < p.num_workers(); ++k) {
      EXPECT_GE(sv.pay[k], row_min(p.row(k))) << c;
      EXPECT_LE(sv.pay[k], row_max(p.row(k))) << c;
      EXPECT_GE(ic.pay[k], row_min(p.row(k))) << c;
      EXPECT_LE(ic.pay[k], row_max(p.row(k))) << c;
    }
  }
}

TEST(Properties, MarginalsLieBetweenRowMinAndMax) {
  for (int c = 0; c < kCases; ++c) {
    Problem p = sample(c);
    std::vector<Rational> delta = marginal_contributions(p);
    for (std::size_t k = 0; k < p.num_workers(); ++k) {
      EXPECT_GE(delta[k], row_min(p.row(k))) << c;
      EXPECT_LE(delta[k], row_max(p.row(k))) << c;
    }
  }
}

TEST(Properties, CharacteristicFunctionIsMonotoneAndSubmodular) {
  for (int c = 0; c < 60; ++c) {
    Problem p = sample(c);
    std::size_t n = p.num_workers();
    CoalitionTable table(p);
    for (CoalitionMask s = 0; s < (CoalitionMask{1} << n); ++s)
      for (CoalitionMask t = s; t < (CoalitionMask{1} << n); ++t) {
        if ((s & t) != s) continue;
        EXPECT_LE(table[s], table[t]) << c;
        for (std::size_t i = 0; i < n; ++i) {
          CoalitionMask bit = CoalitionMask{1} << i;
          if (t & bit) continue;
          EXPECT_GE(table[s | bit] - table[s], table[t | bit] - table[t]) << c;
        }
      }
  }
}

TEST(Properties, Homogeneity) {
  const Rational alphas[] = {Rational(3), Rational(2, 7)};
  for (int c = 0; c < 60; ++c) {
    Problem p = sample(c);
    for (const Rational& alpha : alphas)
      for (const Rule& r : Rule::table_rules()) {
        try {
          Solution base = compensate(r, p);
          Solution scaled = compensate(r, p.scaled(alpha));
          for (std::size_t k = 0; k < base.pay.size(); ++k) EXPECT_EQ(scaled.pay[k], alpha * base.pay[k]) << r.name();
        } catch (const RuleUndefined&) {
        }
      }
  }
}

TEST(Properties, ShapleyBalancedImpact) {
  for (int c = 0; c < kCases; ++c) {
    Problem p = sample(c);
    if (p.num_workers() < 2) continue;
    Solution sv = compensate(Rule::shapley(), p);
    for (WorkerId i : p.workers())
      for (WorkerId j : p.workers()) {
        if (i == j) continue;
        Solution without_j = compensate(Rule::shapley(), p.without_worker(j));
        Solution without_i = compensate(Rule::shapley(), p.without_worker(i));
        EXPECT_EQ(sv[i] - without_j[i], sv[j] - without_i[j]) << c;
      }
  }
}

TEST(Properties, ShapleySolidarityInHiring) {
  for (int c = 0; c < kCases; ++c) {
    Problem p = sample(c);
    if (p.num_workers() < 2) continue;
    Solution sv = compensate(Rule::shapley(), p);
    WorkerId leaver = p.workers().back();
    Solution smaller = compensate(Rule::shapley(), p.without_worker(leaver));
    for (WorkerId w : smaller.workers) EXPECT_GE(smaller[w], sv[w]) << c;
  }
}

TEST(Properties, NullWorkersChangeNothingForShapleyAndIc) {
  for (int c = 0; c < kCases; ++c) {
    Problem p = sample(c, 3, 5);
    if (p.num_tasks() == p.num_workers()) continue;
    WorkerId fresh = worker(p.workers().back().value + 1);
    Problem q = p.with_worker(fresh, Row(p.num_tasks(), Rational(0)));
    for (const Rule& r : {Rule::shapley(), Rule::individual_contribution()}) {
      Solution before = compensate(r, p);
      Solution after = compensate(r, q);
      EXPECT_EQ(after[fresh], Rational(0)) << r.name();
      for (WorkerId w : p.workers()) EXPECT_EQ(after[w], before[w]) << r.name() << " case " << c;
    }
  }
}

TEST(Properties, IcIsConsistentOnReducedProblems) {
  for (int c = 0; c < kCases; ++c) {
    Problem p = sample(c);
    OptimalSet opt = enumerate_optimal(p);
    Solution ic = compensate(Rule::individual_contribution(), p);
    std::vector<WorkerId> sub(p.workers().begin(), p.workers().begin() + (p.num_workers() + 1) / 2);
    std::vector<Rational> avg(sub.size(), Rational(0));
    for (const Assignment& a : opt.assignments) {
      Solution reduced = compensate(Rule::individual_contribution(), reduced_problem(p, sub, a));
      for (std::size_t k = 0; k < sub.size(); ++k) avg[k] += reduced[sub[k]];
    }
    for (std::size_t k = 0; k < sub.size(); ++k)
      EXPECT_EQ(avg[k] / Rational(static_cast<std::int64_t>(opt.assignments.size())), ic[sub[k]]) << c;
  }
}

TEST(Properties, AdditivityWhenOptimaAreShared) {
  for (int c = 0; c < kCases; ++c) {
    Problem p = sample(c);
    Problem unique = perturb_to_unique(p, enumerate_optimal(p).assignments.front(), Rational(1, 2));
    // Adding a constant to each row keeps the optimum.
    Rng rng(derive_seed(0xadd, c));
    std::vector<Row> shifted;
    for (std::size_t k = 0; k < unique.num_workers(); ++k) shifted.emplace_back(unique.num_tasks(), Rational(rng.between(0, 4)));
    Problem hat(unique.workers(), unique.tasks(), shifted);
    Problem sum = unique + hat;
    for (const Rule& r : {Rule::egalitarian(), Rule::individual_contribution()}) {
      Solution lhs = compensate(r, sum);
      Solution a = compensate(r, unique);
      Solution b = compensate(r, hat);
      for (std::size_t k = 0; k < lhs.pay.size(); ++k) EXPECT_EQ(lhs.pay[k], a.pay[k] + b.pay[k]) << r.name() << " case " << c;
    }
  }
}
