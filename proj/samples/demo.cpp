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


// Small tour: a two-worker problem where the more productive worker is paid
// less under IC, and a falsifier run that finds it.

#include "faircomp/faircomp.hpp"

#include <iostream>

int main() {
  using namespace faircomp;

  Problem p = Problem::from_ints({{4, 1}, {5, 3}});
  OptimalSet opt = enumerate_optimal(p);
  std::cout << "y = " << opt.value << ", optimal: " << opt.assignments.front().str() << "\n";

  for (const Rule& r : Rule::table_rules()) std::cout << r.name() << " " << compensate(r, p).str() << "\n";

  Verdict v = falsify(Rule::individual_contribution(), AxiomId::OrderPreservation, 100, 0);
  std::cout << "IC / order preservation: " << to_string(v.outcome) << " (" << v.evidence << ")\n";
  if (v.witness) std::cout << "  " << v.witness->describe() << "\n  " << v.detail << "\n";
  return 0;
}
