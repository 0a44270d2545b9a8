// Copyright 2026 The polydec Authors.
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

// Portable counter-based random numbers.
//
// A stream is identified by a 64-bit key; its i-th output (i = 0, 1, ...) is
//
//   Mix64(key + (i + 1) * 0x9E3779B97F4A7C15)
//
// where Mix64 is the SplitMix64 finalizer. Keys are derived from
// (seed, instance, purpose) by StreamKey. All derived quantities (doubles,
// bounded integers, shuffles, samples) are defined below in terms of this
// output sequence only, so results are identical on every platform.

#ifndef POLYDEC_RNG_H_
#define POLYDEC_RNG_H_

#include <cstdint>
#include <span>
#include <vector>

namespace polydec {

uint64_t Mix64(uint64_t z);

// Mix64(Mix64(Mix64(seed) ^ instance) ^ purpose).
uint64_t StreamKey(uint64_t seed, uint64_t instance, uint64_t purpose);

// Stream purposes used by this library.
enum class Purpose : uint64_t {
  kSetDegrees = 1,
  kSetMembers = 2,
  kElementWeights = 3,
  kParetoShape = 4,
  kCoverFixup = 5,
  kGraphEdges = 6,
  kRandomBaseline = 7,
  kRandomPoint = 8,
  kScaleVariation = 9,
  kInitialization = 10,
  kTest = 11,
};

class Rng {
 public:
  explicit Rng(uint64_t key) : key_(key) {}
  Rng(uint64_t seed, uint64_t instance, Purpose purpose)
      : key_(StreamKey(seed, instance, static_cast<uint64_t>(purpose))) {}

  uint64_t NextU64();
  // (NextU64() >> 11) * 2^-53, in [0, 1).
  double UniformDouble();
  // Uniform in [lo, hi).
  double Uniform(double lo, double hi);
  // Uniform integer in [lo, hi] by rejection: draws below 2^64 - (2^64 mod r)
  // are reduced mod r, others are redrawn.
  int64_t UniformInt(int64_t lo, int64_t hi);
  bool Bernoulli(double p);
  // x_m / U^(1/alpha) with U = 1 - UniformDouble() in (0, 1].
  double Pareto(double alpha, double scale = 1.0);

  // Fisher-Yates from the back: for i = n-1 .. 1 swap(v[i], v[UniformInt(0, i)]).
  void Shuffle(std::span<int> values);
  // Floyd's algorithm: k distinct values of [0, n), returned sorted.
  std::vector<int> SampleWithoutReplacement(int n, int k);

  uint64_t counter() const { return counter_; }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace polydec

#endif  // POLYDEC_RNG_H_
