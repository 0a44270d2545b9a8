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

#include "polydec/rng.h"

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <utility>

namespace polydec {
namespace {

constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;

}  // namespace

uint64_t Mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

uint64_t StreamKey(uint64_t seed, uint64_t instance, uint64_t purpose) {
  return Mix64(Mix64(Mix64(seed) ^ instance) ^ purpose);
}

uint64_t Rng::NextU64() {
  ++counter_;
  return Mix64(key_ + counter_ * kGamma);
}

double Rng::UniformDouble() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

double Rng::Uniform(double lo, double hi) {
  return lo + (hi - lo) * UniformDouble();
}

int64_t Rng::UniformInt(int64_t lo, int64_t hi) {
  const uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<int64_t>(NextU64());  // full 64-bit span
  // 2^64 mod range, computed without 128-bit arithmetic.
  const uint64_t excess = (0 - range) % range;
  uint64_t draw;
  do {
    draw = NextU64();
  } while (draw > ~uint64_t{0} - excess);
  return lo + static_cast<int64_t>(draw % range);
}

bool Rng::Bernoulli(double p) { return UniformDouble() < p; }

double Rng::Pareto(double alpha, double scale) {
  const double u = 1.0 - UniformDouble();
  return scale / std::pow(u, 1.0 / alpha);
}

void Rng::Shuffle(std::span<int> values) {
  for (int i = static_cast<int>(values.size()) - 1; i > 0; --i) {
    std::swap(values[i], values[UniformInt(0, i)]);
  }
}

std::vector<int> Rng::SampleWithoutReplacement(int n, int k) {
  std::unordered_set<int> picked;
  std::vector<int> out;
  out.reserve(k);
  for (int j = n - k; j < n; ++j) {
    const int t = static_cast<int>(UniformInt(0, j));
    const int value = picked.count(t) ? j : t;
    picked.insert(value);
    out.push_back(value);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polydec
