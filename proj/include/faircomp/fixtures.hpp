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

#ifndef FAIRCOMP_FIXTURES_HPP
#define FAIRCOMP_FIXTURES_HPP

#include "faircomp/axioms.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace faircomp {

// A replayable counterexample: `instance` is expected to give `expected`
// under `axiom` for every rule named in `rules`.
struct Fixture {
  std::string name;
  AxiomId axiom;
  std::vector<std::string> rules;
  AxiomInstance instance;
  Outcome expected = Outcome::Violated;

  bool applies_to(const Rule& r, AxiomId a) const {
    return a == axiom && std::find(rules.begin(), rules.end(), r.name()) != rules.end();
  }
};

namespace detail {

inline AxiomInstance make_instance(Problem p) {
  AxiomInstance in;
  in.base = std::move(p);
  return in;
}

inline AxiomInstance with_other(Problem p, Problem q) {
  AxiomInstance in = make_instance(std::move(p));
  in.other = std::move(q);
  return in;
}

inline std::vector<Fixture> build_fixtures() {
  using I = std::vector<std::vector<std::int64_t>>;
  const Problem crossing = Problem::from_ints(I{{4, 1}, {5, 3}});
  const Problem triple = Problem::from_ints(I{{1, 1, 1}, {2, 1, 0}, {2, 0, 0}});
  const Problem permuted = Problem::from_ints(I{{2, 1, 1}, {1, 2, 1}, {3, 1, 1}});
  const Problem dominated = Problem::from_ints(I{{2, 1}, {2, 0}});
  const Problem sv_pair = Problem::from_ints(I{{3, 0}, {2, 1}});
  const Problem unit = Problem::from_ints(I{{1, 0}, {0, 1}});

  std::vector<Fixture> out;
  auto add = [&](std::string name, AxiomId axiom, std::vector<std::string> rules, AxiomInstance in,
                 Outcome expected = Outcome::Violated) {
    out.push_back(Fixture{std::move(name), axiom, std::move(rules), std::move(in), expected});
  };

  // p(n) at n = 10^6 against its limit: IC jumps from (4,3) to (5,2).
  add("near-tie-continuity", AxiomId::Continuity, {"IC"},
      with_other(Problem::from_ints(I{{6, 4}, {3, 1}}),
                 Problem::from_rows({{Rational(5999999, 1000000), Rational(4)}, {Rational(3), Rational(1)}})));

  {
    AxiomInstance in = make_instance(crossing);
    in.pair = {worker(2), worker(1)};
    add("crossing-order-preservation", AxiomId::OrderPreservation, {"IC"}, in);
    add("crossing-strict-order-preservation", AxiomId::StrictOrderPreservation, {"E", "IC"}, in);
    add("crossing-strong-order-preservation", AxiomId::StrongOrderPreservation, {"E", "IC"}, in);
    add("crossing-pi-order-preservation", AxiomId::PiOrderPreservation, {"IC"}, in);
  }
  add("crossing-no-harm-from-hiring", AxiomId::NoHarmFromHiring, {"E", "SV", "IC", "P^Av", "P^max", "P^Delta", "E^Delta"},
      make_instance(crossing));
  {
    AxiomInstance in = with_other(crossing, Problem::from_ints(I{{4, 1}, {4, 0}}));
    in.worker = worker(2);
    add("lowered-row-indiv-prod-mono", AxiomId::IndivProdMono, {"IC"}, in);
    add("lowered-row-strict-indiv-prod-mono", AxiomId::StrictIndivProdMono, {"IC"}, in);
    add("lowered-row-strong-indiv-prod-mono", AxiomId::StrongIndivProdMono, {"IC"}, in);
  }
  {
    AxiomInstance in = make_instance(Problem::from_ints(I{{4, 1, 3}, {4, 2, 1}, {1, 1, 4}}));
    in.subgroup = std::vector<WorkerId>{worker(1), worker(2)};
    add("hiring-solidarity", AxiomId::SolidarityInHiring, {"IC"}, in);
  }
  {
    AxiomInstance in = make_instance(Problem::from_ints(I{{2, 1, 0}, {1, 0, 0}}));
    in.task = task(3);
    add("null-task", AxiomId::IndepNullTasks, {"IC"}, in);
  }
  add("twins-additivity", AxiomId::Additivity, {"IC"}, with_other(Problem::from_ints(I{{2, 1}, {2, 1}}), unit));
  add("sv-pair-additivity", AxiomId::Additivity, {"SV"}, with_other(sv_pair, unit));
  add("sv-pair-weak-additivity", AxiomId::WeakAdditivity, {"SV"}, with_other(sv_pair, unit));
  add("unit-sum-additivity", AxiomId::Additivity, {"P^max", "P^Delta", "E^Delta"}, with_other(sv_pair, unit));
  add("unit-sum-weak-additivity", AxiomId::WeakAdditivity, {"P^max", "P^Delta", "E^Delta"}, with_other(sv_pair, unit));

  {
    AxiomInstance in = make_instance(triple);
    in.worker = worker(1);
    add("triple-boundedness", AxiomId::Boundedness, {"P^Av", "P^max", "P^Delta", "E^Delta"}, in);
    add("triple-constant-productivity", AxiomId::ConstantProductivity, {"P^Av", "P^max", "P^Delta", "E^Delta"}, in);
  }
  {
    AxiomInstance in = make_instance(permuted);
    in.pair = {worker(1), worker(2)};
    add("permuted-pi-symmetry", AxiomId::PiSymmetry, {"SV", "IC", "P^Delta", "E^Delta"}, in);
    add("permuted-pi-order-preservation", AxiomId::PiOrderPreservation, {"SV", "IC", "P^Delta", "E^Delta"}, in);
  }
  add("permuted-balanced-impact", AxiomId::BalancedImpact, {"E^Delta"}, make_instance(permuted));
  {
    AxiomInstance in = make_instance(dominated);
    in.pair = {worker(1), worker(2)};
    add("dominated-strong-order-preservation", AxiomId::StrongOrderPreservation, {"SV", "P^max", "P^Delta", "E^Delta"}, in);
  }
  // The zeroed matrix keeps only the optimal entries; the swap matrix gives
  // every worker the assigned entries of all workers.
  const Problem zeroed = Problem::from_ints(I{{4, 0}, {0, 3}});
  add("gpm-zeroed", AxiomId::GroupProdMono, {"SV", "P^Av", "P^max", "P^Delta", "E^Delta"}, with_other(crossing, zeroed));
  add("gpm-swap", AxiomId::GroupProdMono, {"IC"}, with_other(Problem::from_ints(I{{4, 3}, {4, 3}}), zeroed));
  {
    AxiomInstance in = with_other(Problem::from_ints(I{{186, 110}, {100, 0}}), Problem::from_ints(I{{185, 100}, {100, 0}}));
    in.worker = worker(1);
    add("large-indiv-prod-mono", AxiomId::IndivProdMono, {"P^Delta"}, in);
    add("large-strict-indiv-prod-mono", AxiomId::StrictIndivProdMono, {"P^Delta"}, in);
  }
  {
    AxiomInstance in = with_other(Problem::from_ints(I{{2, 1}, {2, 1}}), dominated);
    in.worker = worker(2);
    add("twins-strong-indiv-prod-mono", AxiomId::StrongIndivProdMono, {"E", "SV", "P^max", "P^Delta", "E^Delta"}, in);
  }
  {
    AxiomInstance in = make_instance(crossing);
    in.subgroup = std::vector<WorkerId>{worker(1)};
    add("singleton-consistency", AxiomId::Consistency, {"E", "SV", "P^Av", "P^max", "P^Delta", "E^Delta"}, in);
    add("singleton-weak-consistency", AxiomId::WeakConsistency, {"E", "SV", "P^Av", "P^max", "P^Delta", "E^Delta"}, in);
  }
  add("crossing-balanced-impact", AxiomId::BalancedImpact, {"E", "IC", "P^Av", "P^max", "P^Delta"}, make_instance(crossing));
  {
    AxiomInstance in = make_instance(triple);
    in.subgroup = std::vector<WorkerId>{worker(1), worker(2)};
    add("triple-solidarity", AxiomId::SolidarityInHiring, {"P^Delta", "E^Delta"}, in);
  }
  {
    AxiomInstance in = make_instance(Problem::from_ints(I{{2, 0, 1}, {0, 1, 0}}));
    in.task_subset = std::vector<TaskId>{task(1), task(2)};
    add("unassigned-tasks", AxiomId::IndepUnassignedTasks, {"P^Av"}, in);
  }
  {
    AxiomInstance in = make_instance(Problem::from_ints(I{{4, 1, 0}, {5, 3, 0}, {0, 0, 0}}));
    in.worker = worker(3);
    add("null-worker", AxiomId::IndepNullWorkers, {"E", "E^Delta"}, in);
  }
  add("trivial-unequal", AxiomId::Trivialness, {"E"}, make_instance(Problem::from_ints(I{{1, 1}, {2, 2}})));
  // Two copies of one worker: every marginal contribution is zero while y > 0.
  add("pdelta-degenerate", AxiomId::Efficiency, {"P^Delta"}, make_instance(Problem::from_ints(I{{1, 0}, {1, 0}})),
      Outcome::Undefined);
  return out;
}

}  // namespace detail

inline const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> registry = detail::build_fixtures();
  return registry;
}

inline const Fixture& fixture(const std::string& name) {
  for (const Fixture& f : fixtures())
    if (f.name == name) return f;
  throw std::out_of_range("no fixture named '" + name + "'");
}

inline std::vector<const Fixture*> fixtures_for(const Rule& rule, AxiomId axiom) {
  std::vector<const Fixture*> out;
  for (const Fixture& f : fixtures())
    if (f.applies_to(rule, axiom)) out.push_back(&f);
  return out;
}

}  // namespace faircomp

#endif  // FAIRCOMP_FIXTURES_HPP
