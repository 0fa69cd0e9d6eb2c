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

#ifndef FAIRCOMP_COALITION_HPP
#define FAIRCOMP_COALITION_HPP

#include "faircomp/assignment.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace faircomp {

// Bit k stands for the k-th worker in canonical order.
using CoalitionMask = std::uint32_t;

inline constexpr std::size_t kDefaultCoalitionBound = 16;

class TooManyWorkers : public std::length_error {
 public:
  TooManyWorkers(std::size_t n, std::size_t bound)
      : std::length_error(std::to_string(n) + " workers exceed the coalition bound " + std::to_string(bound)) {}
};

inline std::vector<WorkerId> members(const Problem& p, CoalitionMask s) {
  std::vector<WorkerId> out;
  for (std::size_t k = 0; k < p.num_workers(); ++k)
    if (s & (CoalitionMask{1} << k)) out.push_back(p.workers()[k]);
  return out;
}

inline CoalitionMask mask_of(const Problem& p, const std::vector<WorkerId>& ws) {
  CoalitionMask s = 0;
  for (WorkerId w : ws) s |= CoalitionMask{1} << p.require_worker(w);
  return s;
}

// v(S) = y(S, T, p_S), v(∅) = 0.
inline Rational char_value(const Problem& p, const std::vector<WorkerId>& coalition) {
  for (WorkerId w : coalition) p.require_worker(w);
  return optimal_value(p.restrict_workers(coalition));
}

// The induced TU game over all 2^|I| coalitions.
class CoalitionTable {
 public:
  CoalitionTable() = default;

  explicit CoalitionTable(const Problem& p, std::size_t bound = kDefaultCoalitionBound) : workers_(p.workers()) {
    std::size_t n = p.num_workers();
    if (n > bound || n >= 32) throw TooManyWorkers(n, bound);
    p.require_valid();
    values_.resize(std::size_t{1} << n);
    for (CoalitionMask s = 1; s < values_.size(); ++s) values_[s] = optimal_value(p.restrict_workers(members(p, s)));
  }

  const std::vector<WorkerId>& workers() const { return workers_; }
  std::size_t size() const { return workers_.size(); }
  CoalitionMask grand() const { return static_cast<CoalitionMask>(values_.size() - 1); }
  const Rational& operator[](CoalitionMask s) const { return values_.at(s); }
  const std::vector<Rational>& values() const { return values_; }

  // Δp_k = v(I) − v(I∖{k}), by canonical worker position.
  Rational marginal(std::size_t k) const { return values_[grand()] - values_[grand() & ~(CoalitionMask{1} << k)]; }

  // Σ_{J ⊆ I∖{k}} |J|!(n−|J|−1)!/n! [v(J ∪ {k}) − v(J)].
  Rational shapley(std::size_t k) const {
    std::size_t n = size();
    std::vector<BigInt> fact(n + 1, 1);
    for (std::size_t j = 1; j <= n; ++j) fact[j] = fact[j - 1] * j;
    CoalitionMask bit = CoalitionMask{1} << k;
    Rational total = 0;
    for (CoalitionMask s = 0; s < values_.size(); ++s) {
      if (s & bit) continue;
      std::size_t j = static_cast<std::size_t>(std::popcount(s));
      Rational gain = values_[s | bit] - values_[s];
      if (gain.is_zero()) continue;
      total += gain * Rational(fact[j] * fact[n - j - 1], fact[n]);
    }
    return total;
  }

 private:
  std::vector<WorkerId> workers_;
  std::vector<Rational> values_;
};

inline CoalitionTable all_coalitions(const Problem& p, std::size_t bound = kDefaultCoalitionBound) {
  return CoalitionTable(p, bound);
}

// Δp_i = y(I,T,p) − y(I∖{i},T,p_{−i}). Two solves, no table.
inline Rational marginal_contribution(const Problem& p, WorkerId i) {
  p.require_worker(i);
  return optimal_value(p) - optimal_value(p.without_worker(i));
}

inline std::vector<Rational> marginal_contributions(const Problem& p) {
  Rational y = optimal_value(p);
  std::vector<Rational> out;
  for (WorkerId w : p.workers()) out.push_back(y - optimal_value(p.without_worker(w)));
  return out;
}

}  // namespace faircomp

#endif  // FAIRCOMP_COALITION_HPP
