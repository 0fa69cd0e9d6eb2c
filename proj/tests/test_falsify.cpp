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


#include "faircomp/falsify.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace faircomp;

namespace {

std::vector<Rule> rules_named(const std::vector<std::string>& names) {
  std::vector<Rule> out;
  for (const std::string& n : names) out.push_back(parse_rule(n));
  return out;
}

}  // namespace

TEST(Fixtures, NamesAreUnique) {
  std::set<std::string> seen;
  for (const Fixture& f : fixtures()) EXPECT_TRUE(seen.insert(f.name).second) << f.name;
  EXPECT_NO_THROW(fixture("null-task"));
  EXPECT_THROW(fixture("nope"), std::out_of_range);
}

TEST(Fixtures, ReplayToTheirExpectedOutcome) {
  for (const Fixture& f : fixtures())
    for (const Rule& r : rules_named(f.rules)) {
      Verdict v = check(r, f.axiom, f.instance);
      EXPECT_EQ(v.outcome, f.expected) << f.name << " under " << r.name() << ": " << v.detail;
    }
}

TEST(Fixtures, NamedCounterexamples) {
  const Fixture& nt = fixture("null-task");
  Verdict v = check(Rule::individual_contribution(), nt.axiom, nt.instance);
  ASSERT_TRUE(v.violated());
  EXPECT_EQ(v.solutions[1].solution.pay, (std::vector<Rational>{Rational(3, 2), Rational(1, 2)}));

  const Fixture& sol = fixture("hiring-solidarity");
  EXPECT_TRUE(check(Rule::individual_contribution(), sol.axiom, sol.instance).violated());

  const Fixture& solidarity = fixture("triple-solidarity");
  EXPECT_TRUE(check(Rule::prop_marginal(), solidarity.axiom, solidarity.instance).violated());
  EXPECT_TRUE(check(Rule::marginal_egalitarian(), solidarity.axiom, solidarity.instance).violated());
}

TEST(Fixtures, SoundnessFromRawSolutions) {
  // Re-derive two violated inequalities from the rule outputs directly.
  const Fixture& ipm = fixture("lowered-row-indiv-prod-mono");
  Rule ic = Rule::individual_contribution();
  Rational before = compensate(ic, ipm.instance.base)[worker(2)];
  Rational after = compensate(ic, *ipm.instance.other)[worker(2)];
  EXPECT_LT(before, after);

  const Fixture& nt = fixture("null-task");
  EXPECT_NE(compensate(ic, nt.instance.base), compensate(ic, nt.instance.base.without_task(task(3))));
}

TEST(Falsify, FixtureIsTrialZero) {
  Verdict v = falsify(Rule::individual_contribution(), AxiomId::IndivProdMono, 1000, 12345);
  ASSERT_TRUE(v.violated());
  EXPECT_EQ(v.trials, 1u);
  EXPECT_EQ(v.evidence, "fixture lowered-row-indiv-prod-mono");
  EXPECT_TRUE(falsify(Rule::individual_contribution(), AxiomId::IndivProdMono, 1, 0).violated());
}

TEST(Falsify, SurvivesTrueAxioms) {
  Verdict v = falsify(Rule::shapley(), AxiomId::BalancedImpact, 300, 0);
  EXPECT_EQ(v.outcome, Outcome::Survived);
  EXPECT_EQ(v.trials, 300u);
  EXPECT_EQ(v.seed, 0u);
  EXPECT_EQ(falsify(Rule::individual_contribution(), AxiomId::Consistency, 300, 0).outcome, Outcome::Survived);
}

TEST(Falsify, FindsGeneratedViolations) {
  Verdict v = falsify(Rule::egalitarian(), AxiomId::Boundedness, 1000, 0);
  ASSERT_TRUE(v.violated());
  EXPECT_NE(v.evidence.find("falsifier trial"), std::string::npos);
  EXPECT_TRUE(check(Rule::egalitarian(), AxiomId::Boundedness, *v.witness).violated());
}

TEST(Falsify, NoHarmFromHiringFailsForEveryEfficientRule) {
  std::vector<Rule> rules = Rule::table_rules();
  rules.push_back(Rule::ic_choice(Chooser::first()));
  for (const ParametricFn& fn : ParametricFn::builtins()) rules.push_back(Rule::parametric(fn));
  for (const Rule& r : rules) EXPECT_TRUE(falsify(r, AxiomId::NoHarmFromHiring, 1000, 0).violated()) << r.name();
}

TEST(Falsify, IsDeterministicPerSeed) {
  for (AxiomId a : {AxiomId::Boundedness, AxiomId::StrongOrderPreservation, AxiomId::Additivity}) {
    Verdict x = falsify(Rule::prop_avg(), a, 200, 7);
    Verdict y = falsify(Rule::prop_avg(), a, 200, 7);
    EXPECT_EQ(x.outcome, y.outcome);
    EXPECT_EQ(x.trials, y.trials);
    EXPECT_EQ(x.evidence, y.evidence);
    if (x.witness) {
      EXPECT_EQ(x.witness->describe(), y.witness->describe());
    }
  }
}

TEST(Falsify, CountsUndefinedTrials) {
  Verdict v = falsify(Rule::prop_marginal(), AxiomId::Symmetry, 300, 0);
  EXPECT_EQ(v.outcome, Outcome::Survived);
  EXPECT_GT(v.skipped, 0u);
}

TEST(Falsify, RejectsEmptyBudget) {
  EXPECT_THROW(falsify(Rule::egalitarian(), AxiomId::Efficiency, 0, 0), std::invalid_argument);
}

TEST(Generators, RespectTheirPremises) {
  Rng rng(21);
  for (int k = 0; k < 200; ++k) {
    AxiomInstance sym = generate_instance(AxiomId::Symmetry, rng);
    bool twin = false;
    for (std::size_t i = 0; i < sym.base.num_workers(); ++i)
      for (std::size_t j = i + 1; j < sym.base.num_workers(); ++j) twin = twin || sym.base.row(i) == sym.base.row(j);
    EXPECT_TRUE(twin);

    AxiomInstance gpm = generate_instance(AxiomId::GroupProdMono, rng);
    EXPECT_TRUE(weakly_dominates(gpm.base, *gpm.other));

    AxiomInstance nt = generate_instance(AxiomId::IndepNullTasks, rng);
    EXPECT_GE(nt.base.num_tasks(), nt.base.num_workers() + 1);

    AxiomInstance wc = generate_instance(AxiomId::WeakConsistency, rng);
    EXPECT_EQ(enumerate_optimal(wc.base).assignments.size(), 1u);

    AxiomInstance wa = generate_instance(AxiomId::WeakAdditivity, rng);
    EXPECT_EQ(enumerate_optimal(wa.base).assignments, enumerate_optimal(*wa.other).assignments);

    AxiomInstance ad = generate_instance(AxiomId::Additivity, rng);
    std::vector<Assignment> a = enumerate_optimal(ad.base).assignments;
    std::vector<Assignment> b = enumerate_optimal(*ad.other).assignments;
    std::vector<Assignment> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    EXPECT_FALSE(both.empty());

    AxiomInstance sipm = generate_instance(AxiomId::StrictIndivProdMono, rng);
    std::size_t i = sipm.base.require_worker(*sipm.worker);
    EXPECT_TRUE(strictly_dominates(sipm.base.row(i), sipm.other->row(i)));
  }
}

TEST(Generators, ZeroedAndSwapMatricesPreserveEqualSplit) {
  // The two constructions keep y, so E pays the same on all three matrices.
  Rng rng(8);
  Rule e = Rule::egalitarian();
  for (int k = 0; k < 100; ++k) {
    Problem p = generate(rng, random_shape(rng, 4, 5));
    Assignment a = enumerate_optimal(p).assignments.front();
    std::vector<Row> zero(p.num_workers(), Row(p.num_tasks(), Rational(0)));
    Row shared(p.num_tasks(), Rational(0));
    for (std::size_t w = 0; w < p.num_workers(); ++w) {
      std::size_t t = p.require_task(a.tasks[w]);
      zero[w][t] = p.at(w, t);
      shared[t] = p.at(w, t);
    }
    Problem zeroed = Problem::from_rows(zero);
    Problem swapped = Problem::from_rows(std::vector<Row>(p.num_workers(), shared));
    ASSERT_EQ(optimal_value(zeroed), optimal_value(p));
    ASSERT_EQ(optimal_value(swapped), optimal_value(p));
    EXPECT_EQ(compensate(e, zeroed), compensate(e, p));
    EXPECT_EQ(compensate(e, swapped), compensate(e, p));
    EXPECT_TRUE(weakly_dominates(swapped, zeroed));
  }
}
