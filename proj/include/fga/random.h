// Copyright 2026 The FGA Robustness Authors
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

// Seeded randomness with platform-independent output. std::mt19937_64 is
// fully specified by the standard; the distributions here are written out
// instead of using <random>'s implementation-defined ones.

#ifndef FGA_RANDOM_H_
#define FGA_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace fga {

// Mixes a base seed with stream coordinates (cell, sample, ...) into an
// independent seed.
std::uint64_t DeriveSeed(std::uint64_t seed,
                         std::initializer_list<std::uint64_t> stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double UniformUnit();
  double Uniform(double lo, double hi);
  // Uniform on [0, n). Requires n > 0.
  std::uint64_t Below(std::uint64_t n);
  bool Bernoulli(double p) { return UniformUnit() < p; }

  // k distinct values from [0, n) in sampled order.
  std::vector<std::size_t> SampleIndices(std::size_t n, std::size_t k);

  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[Below(i)]);
    }
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fga

#endif  // FGA_RANDOM_H_
