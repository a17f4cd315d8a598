// Copyright 2026 The biodenoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef BIODENOISE_RNG_H_
#define BIODENOISE_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace biodenoise {

uint64_t SplitMix64(uint64_t x);

// A reproducible random stream keyed by (seed, stream_key). The engine is
// std::mt19937_64, seeded with SplitMix64(seed ^ SplitMix64(hash(key))),
// where hash is the FNV-1a StableHash. Bounded draws use rejection sampling
// rather than std::uniform_int_distribution, whose output is not specified
// by the standard, so sequences match across platforms and standard
// libraries.
class RngStream {
 public:
  RngStream(uint64_t seed, std::string_view stream_key);

  uint64_t Next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be positive.
  uint64_t Uniform(uint64_t bound);

  // Fisher-Yates.
  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      using std::swap;
      swap(items[i - 1], items[Uniform(i)]);
    }
  }

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace biodenoise

#endif  // BIODENOISE_RNG_H_
