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


#include "faircomp/generate.hpp"
#include "faircomp/rules.hpp"
#include "oracle/brute_force.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace faircomp;

namespace {

using Pay = std::vector<Rational>;
using I = std::vector<std::vector<std::int64_t>>;

const Problem kTies = Problem::from_ints(I{{6, 4}, {3, 1}});
const Problem kCrossing = Problem::from_ints(I{{4, 1}, {5, 3}});
const Problem kNullTask = Problem::from_ints(I{{2, 1, 0}, {1, 0, 0}});
const Problem kTwins = Problem::from_ints(I{{2, 1}, {2, 1}});
const Problem kSvPair = Problem::from_ints(I{{3, 0}, {2, 1}});
const Problem kTriple = Problem::from_ints(I{{1, 1, 1}, {2, 1, 0}, {2, 0, 0}});
const Problem kPermuted = Problem::from_ints(I{{2, 1, 1}, {1, 2, 1}, {3, 1, 1}});
const Problem kDominated = Problem::from_ints(I{{2, 1}, {2, 0}});
const Problem kLarge = Problem::from_ints(I{{186, 110}, {100, 0}});
const Problem kUnassigned = Problem::from_ints(I{{2, 0, 1}, {0, 1, 0}});
const Problem kDegenerate = Problem::from_ints(I{{1, 0}, {1, 0}});

Pay pay(const Rule& r, const Problem& p) { return compensate(r, p).pay; }

}  // namespace

TEST(Rules, Egalitarian) {
  EXPECT_EQ(pay(Rule::egalitarian(), kCrossing), (Pay{Rational(7, 2), Rational(7, 2)}));
  EXPECT_EQ(pay(Rule::egalitarian(), Problem::from_ints(I{{1, 6}})), (Pay{6}));
  EXPECT_EQ(pay(Rule::egalitarian(), Problem::from_ints(I{{1, 1}, {2, 2}})), (Pay{Rational(3, 2), Rational(3, 2)}));
}

TEST(Rules, Shapley) {
  EXPECT_EQ(pay(Rule::shapley(), kSvPair), (Pay{Rational(5, 2), Rational(3, 2)}));
  EXPECT_EQ(pay(Rule::shapley(), kPermuted), (Pay{Rational(3, 2), 2, Rational(5, 2)}));
  EXPECT_EQ(pay(Rule::shapley(), kCrossing), (Pay{3, 4}));
  Pay twins = pay(Rule::shapley(), kTwins);
  EXPECT_EQ(twins[0], twins[1]);
}

TEST(Rules, IndividualContribution) {
  EXPECT_EQ(pay(Rule::individual_contribution(), kTies), (Pay{5, 2}));
  EXPECT_EQ(pay(Rule::individual_contribution(), kNullTask), (Pay{Rational(5, 3), Rational(1, 3)}));
  EXPECT_EQ(pay(Rule::individual_contribution(), kNullTask.without_task(task(3))), (Pay{Rational(3, 2), Rational(1, 2)}));
  EXPECT_EQ(pay(Rule::individual_contribution(), kTwins), (Pay{Rational(3, 2), Rational(3, 2)}));
  EXPECT_EQ(pay(Rule::individual_contribution(), kCrossing), (Pay{4, 3}));
  EXPECT_EQ(pay(Rule::individual_contribution(), kPermuted), (Pay{1, 2, 3}));
  // Near the tie the optimum is unique and pays (4,3).
  Problem near = Problem::from_rows({{Rational(5999999, 1000000), 4}, {3, 1}});
  EXPECT_EQ(pay(Rule::individual_contribution(), near), (Pay{4, 3}));
}

TEST(Rules, ProportionalToMean) {
  EXPECT_EQ(pay(Rule::prop_avg(), kUnassigned), (Pay{Rational(9, 4), Rational(3, 4)}));
  EXPECT_EQ(pay(Rule::prop_avg(), kUnassigned.restrict_tasks({task(1), task(2)})), (Pay{2, 1}));
  EXPECT_EQ(pay(Rule::prop_avg(), kTriple)[0], Rational(3, 2));
  EXPECT_EQ(pay(Rule::prop_avg(), kCrossing), (Pay{Rational(35, 13), Rational(56, 13)}));
  EXPECT_EQ(pay(Rule::prop_avg(), Problem::from_ints(I{{0, 0}, {0, 0}})), (Pay{0, 0}));
}

TEST(Rules, ProportionalToMax) {
  EXPECT_EQ(pay(Rule::prop_max(), kTriple)[0], Rational(4, 5));
  EXPECT_EQ(pay(Rule::prop_max(), kDominated), (Pay{Rational(3, 2), Rational(3, 2)}));
  EXPECT_EQ(pay(Rule::prop_max(), kUnassigned.restrict_tasks({task(1), task(2)})), (Pay{2, 1}));
  EXPECT_EQ(pay(Rule::prop_max(), kSvPair), (Pay{Rational(12, 5), Rational(8, 5)}));
}

TEST(Rules, ProportionalToMarginal) {
  EXPECT_EQ(pay(Rule::prop_marginal(), kTriple)[0], Rational(4, 3));
  Pay big = pay(Rule::prop_marginal(), kLarge);
  EXPECT_EQ(big[0], Rational(11550, 67));
  EXPECT_EQ(big[0].to_decimal(2), "172.39");
  EXPECT_EQ(pay(Rule::prop_marginal(), kLarge.with_profile(worker(1), {185, 100}))[0].to_decimal(2), "173.91");
  EXPECT_EQ(pay(Rule::prop_marginal(), kPermuted), (Pay{Rational(6, 5), Rational(12, 5), Rational(12, 5)}));
  EXPECT_EQ(pay(Rule::prop_marginal(), kCrossing), (Pay{Rational(14, 5), Rational(21, 5)}));
  EXPECT_EQ(pay(Rule::prop_marginal(), kSvPair), (Pay{Rational(8, 3), Rational(4, 3)}));
  EXPECT_THROW(compensate(Rule::prop_marginal(), kDegenerate), RuleUndefined);
  EXPECT_EQ(pay(Rule::prop_marginal(), Problem::from_ints(I{{0, 0}, {0, 0}})), (Pay{0, 0}));
}

TEST(Rules, MarginalEgalitarian) {
  EXPECT_EQ(pay(Rule::marginal_egalitarian(), kPermuted), (Pay{Rational(4, 3), Rational(7, 3), Rational(7, 3)}));
  EXPECT_EQ(pay(Rule::marginal_egalitarian(), kTriple)[0], Rational(4, 3));
  EXPECT_EQ(pay(Rule::marginal_egalitarian(), kDegenerate), (Pay{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(pay(Rule::marginal_egalitarian(), kSvPair), (Pay{Rational(5, 2), Rational(3, 2)}));
  EXPECT_EQ(pay(Rule::marginal_egalitarian(), kCrossing), (Pay{3, 4}));
}

TEST(Rules, SubgroupValuesOfTheTripleProblem) {
  Problem sub = kTriple.restrict_workers({worker(1), worker(2)});
  EXPECT_EQ(pay(Rule::prop_marginal(), kTriple), (Pay{Rational(4, 3), Rational(4, 3), Rational(4, 3)}));
  EXPECT_EQ(pay(Rule::prop_marginal(), sub), (Pay{1, 2}));
  EXPECT_EQ(pay(Rule::marginal_egalitarian(), sub), (Pay{1, 2}));
}

TEST(Rules, ParametricClosedForm) {
  LambdaSolution mean = solve_lambda(ParametricFn::mean(), kUnassigned);
  EXPECT_EQ(mean.lambda, Rational(9, 4));
  EXPECT_EQ(mean.solution.pay, pay(Rule::prop_avg(), kUnassigned));
  EXPECT_FALSE(mean.solution.approximate);

  LambdaSolution flat = solve_lambda(ParametricFn::constant(), kCrossing);
  EXPECT_EQ(flat.lambda, Rational(7, 2));
  EXPECT_EQ(flat.solution.pay, pay(Rule::egalitarian(), kCrossing));

  LambdaSolution zero = solve_lambda(ParametricFn::max(), Problem::from_ints(I{{0, 0}}));
  EXPECT_EQ(zero.lambda, Rational(0));
  EXPECT_EQ(zero.solution.pay, (Pay{0}));

  EXPECT_EQ(pay(Rule::parametric(ParametricFn::max()), kTriple), pay(Rule::prop_max(), kTriple));
  for (const ParametricFn& fn : ParametricFn::builtins())
    EXPECT_TRUE(check_parametric_conditions(fn, kTriple.rows()).empty()) << fn.id;
}

TEST(Rules, ParametricBisection) {
  ParametricFn sq;
  sq.id = "lambda-squared-max";
  sq.eval = [](std::span<const Rational> p0, const Rational& lambda) {
    Rational m = 0;
    for (const Rational& x : p0) m = std::max(m, x);
    return lambda * lambda * m;
  };
  Solution s = parametric(sq, kTriple);
  EXPECT_TRUE(s.approximate);
  Rational y = optimal_value(kTriple);
  EXPECT_LE(s.total(), y);
  EXPECT_LE(y - s.total(), y / Rational(BigInt(1) << 64, 1));
  // Same shape as P^max up to the residual.
  EXPECT_NEAR(s.pay[0].to_double(), Rational(4, 5).to_double(), 1e-12);

  ParametricFn broken;
  broken.id = "offset";
  broken.eval = [](std::span<const Rational>, const Rational& lambda) { return lambda + Rational(1); };
  EXPECT_FALSE(check_parametric_conditions(broken, kTriple.rows()).empty());

  ParametricFn stuck;
  stuck.id = "stuck";
  stuck.eval = [](std::span<const Rational>, const Rational&) { return Rational(0); };
  EXPECT_THROW(parametric(stuck, kTriple), NonConvergence);
}

TEST(Rules, PriorityIC) {
  EXPECT_EQ(pay(Rule::ic_priority({worker(1), worker(2)}), kTies), (Pay{6, 1}));
  EXPECT_EQ(pay(Rule::ic_priority({worker(2), worker(1)}), kTies), (Pay{4, 3}));
  EXPECT_EQ(pay(Rule::ic_priority({worker(2), worker(1)}), kCrossing), pay(Rule::individual_contribution(), kCrossing));
  EXPECT_THROW(compensate(Rule::ic_priority({worker(1)}), kTies), std::invalid_argument);
  EXPECT_THROW(compensate(Rule::ic_priority({worker(1), worker(1), worker(2)}), kTies), std::invalid_argument);
}

TEST(Rules, PriorityICDoesNotDependOnTheSurvivor) {
  // Every assignment left after the lexicographic refinement gives the same pay.
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    Problem p = generate(rng, random_shape(rng, 4, 5), ValueGrid{2, 1, 4});
    std::vector<WorkerId> order = p.workers();
    rng.shuffle(order);
    std::vector<Assignment> survivors = enumerate_optimal(p).assignments;
    for (WorkerId w : order) {
      Rational best = 0;
      for (const Assignment& a : survivors) best = std::max(best, p.value(w, a(w)));
      std::erase_if(survivors, [&](const Assignment& a) { return p.value(w, a(w)) != best; });
    }
    for (const Assignment& a : survivors)
      for (WorkerId w : p.workers()) ASSERT_EQ(p.value(w, a(w)), p.value(w, survivors.front()(w)));
  }
}

TEST(Rules, ChoiceIC) {
  EXPECT_EQ(pay(Rule::ic_choice(Chooser::first()), kTies), (Pay{6, 1}));
  EXPECT_EQ(pay(Rule::ic_choice(Chooser::last()), kTies), (Pay{4, 3}));
  EXPECT_EQ(pay(Rule::ic_choice(Chooser::first()), kCrossing), pay(Rule::individual_contribution(), kCrossing));
  Chooser rogue{"rogue", [](const std::vector<Assignment>& as) {
                  Assignment a = as.front();
                  std::reverse(a.tasks.begin(), a.tasks.end());
                  return a;
                }};
  EXPECT_THROW(compensate(Rule::ic_choice(rogue), kCrossing), InvalidChoice);
}

TEST(Rules, Parsing) {
  EXPECT_EQ(parse_rule("E").name(), "E");
  EXPECT_EQ(parse_rule("pdelta").name(), "P^Delta");
  EXPECT_EQ(parse_rule("par:lambda-mean").name(), "Par[lambda-mean]");
  EXPECT_EQ(parse_rule("icprio:2-1").name(), "IC<[2-1]");
  EXPECT_EQ(parse_rule("icchoice:last").name(), "ICc[last]");
  EXPECT_THROW(parse_rule("nope"), std::invalid_argument);
  EXPECT_THROW(parse_rule("par:unknown"), std::invalid_argument);
  EXPECT_THROW(parse_rule("icprio:1--2"), std::invalid_argument);
  for (const Rule& r : Rule::table_rules()) EXPECT_EQ(parse_rule(r.name()).name(), r.name());
}

TEST(Rules, MatchBruteForce) {
  Rng rng(11);
  for (int k = 0; k < 60; ++k) {
    Problem p = generate(rng, random_shape(rng, 4, 5));
    EXPECT_EQ(pay(Rule::shapley(), p), oracle::shapley(p));
    EXPECT_EQ(pay(Rule::individual_contribution(), p), oracle::individual_contribution(p));
    EXPECT_EQ(marginal_contributions(p), oracle::marginals(p));
  }
}
