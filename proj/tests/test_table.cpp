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


#include "faircomp/table.hpp"

#include <gtest/gtest.h>

using namespace faircomp;

TEST(Table, ExpectedMatrixSpotChecks) {
  EXPECT_EQ(expected_verdict("IC", AxiomId::Consistency), true);
  EXPECT_EQ(expected_verdict("E", AxiomId::Boundedness), false);
  EXPECT_EQ(expected_verdict("SV", AxiomId::Additivity), false);
  EXPECT_EQ(expected_verdict("E", AxiomId::GroupProdMono), true);
  EXPECT_EQ(expected_verdict("IC", AxiomId::WeakConsistency), true);
  EXPECT_EQ(expected_verdict("SV", AxiomId::WeakConsistency), false);
  EXPECT_FALSE(expected_verdict("Par[lambda]", AxiomId::Efficiency).has_value());
  for (const std::string& r : table_rule_order()) {
    EXPECT_EQ(expected_verdict(r, AxiomId::NoHarmFromHiring), false);
    EXPECT_EQ(expected_verdict(r, AxiomId::Efficiency), true);
    EXPECT_EQ(expected_verdict(r, AxiomId::Homogeneity), true);
  }
}

TEST(Table, CellsCarryEvidence) {
  std::vector<Rule> rules{Rule::egalitarian(), Rule::shapley(), Rule::individual_contribution()};
  std::vector<AxiomId> axioms{AxiomId::Consistency, AxiomId::Boundedness, AxiomId::Additivity};
  TableReport t = table_report(rules, axioms, 200, 0);
  ASSERT_EQ(t.cells.size(), 9u);
  EXPECT_TRUE(t.all_match());
  EXPECT_TRUE(t.cell(0, 2).observed());                            // IC consistency
  EXPECT_FALSE(t.cell(1, 0).observed());                           // E boundedness
  EXPECT_EQ(t.cell(2, 1).verdict.evidence, "fixture sv-pair-additivity");  // SV additivity
  EXPECT_NE(t.cell(1, 0).verdict.evidence.find("falsifier"), std::string::npos);
}

TEST(Table, ParametricColumnsAreInformational) {
  std::vector<Rule> rules;
  for (const ParametricFn& fn : ParametricFn::builtins()) rules.push_back(Rule::parametric(fn));
  TableReport t = table_report(rules, {AxiomId::Efficiency, AxiomId::NoHarmFromHiring}, 50, 0);
  EXPECT_EQ(t.mismatches(), 0u);
  for (const TableCell& c : t.cells) EXPECT_FALSE(c.expected.has_value());
}

TEST(Table, RendersDeterministically) {
  TableReport a = table_report(Rule::table_rules(), {AxiomId::Symmetry, AxiomId::BalancedImpact}, 100, 3);
  TableReport b = table_report(Rule::table_rules(), {AxiomId::Symmetry, AxiomId::BalancedImpact}, 100, 3);
  EXPECT_EQ(render_text(a), render_text(b));
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  EXPECT_EQ(render_csv(a), render_csv(b));
  EXPECT_NE(render_text(a).find("Balanced Impact"), std::string::npos);
}
