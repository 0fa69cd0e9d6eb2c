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

#ifndef FAIRCOMP_GENERATE_HPP
#define FAIRCOMP_GENERATE_HPP

#include "faircomp/problem.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace faircomp {

// splitmix64 with its own bounded draws: the standard distributions are
// implementation-defined, and generated problems must match across builds.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, n), by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  // Uniform on [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t k = v.size(); k > 1; --k) std::swap(v[k - 1], v[below(k)]);
  }

 private:
  std::uint64_t state_;
};

// Derives independent stream seeds from a base seed and a stream index.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  Rng r(seed ^ (stream * 0xD1B54A32D192ED03ULL));
  r.next();
  return r.next();
}

// Entries are k/denominator for k in [0, max_value·denominator]; integers are
// drawn with probability integer_weight/4 so ties stay common.
struct ValueGrid {
  std::int64_t max_value = 9;
  std::int64_t denominator = 2;
  std::uint64_t integer_weight = 3;

  Rational draw(Rng& rng) const {
    if (denominator == 1 || rng.chance(integer_weight, 4)) return Rational(rng.between(0, max_value));
    return Rational(BigInt(rng.between(0, max_value * denominator)), BigInt(denominator));
  }
};

struct Shape {
  std::size_t workers;
  std::size_t tasks;
};

inline Problem generate(Rng& rng, Shape shape, const ValueGrid& grid = {}) {
  if (shape.workers > shape.tasks) throw std::invalid_argument("generate: |I| > |T|");
  std::vector<Row> rows(shape.workers);
  for (Row& r : rows)
    for (std::size_t t = 0; t < shape.tasks; ++t) r.push_back(grid.draw(rng));
  return Problem::from_rows(std::move(rows));
}

inline Problem generate(std::uint64_t seed, Shape shape, const ValueGrid& grid = {}) {
  Rng rng(seed);
  return generate(rng, shape, grid);
}

// A trivial problem: worker k has constant productivity alphas[k].
inline Problem generate_trivial(const std::vector<Rational>& alphas, std::size_t tasks) {
  if (alphas.size() > tasks) throw std::invalid_argument("generate_trivial: |I| > |T|");
  std::vector<Row> rows;
  for (const Rational& a : alphas) rows.emplace_back(tasks, a);
  return Problem::from_rows(std::move(rows));
}

inline Problem generate_trivial(Rng& rng, Shape shape, const ValueGrid& grid = {}) {
  std::vector<Rational> alphas;
  for (std::size_t k = 0; k < shape.workers; ++k) alphas.push_back(grid.draw(rng));
  return generate_trivial(alphas, shape.tasks);
}

// Shape with 1 ≤ |I| ≤ max_workers and |I| ≤ |T| ≤ min(|I| + max_extra, max_tasks).
inline Shape random_shape(Rng& rng, std::size_t max_workers, std::size_t max_tasks, std::size_t max_extra = 2,
                          std::size_t min_workers = 1) {
  std::size_t n = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(min_workers),
                                                       static_cast<std::int64_t>(max_workers)));
  std::size_t hi = std::min(n + max_extra, max_tasks);
  if (hi < n) hi = n;
  std::size_t m = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(n), static_cast<std::int64_t>(hi)));
  return {n, m};
}

}  // namespace faircomp

#endif  // FAIRCOMP_GENERATE_HPP
