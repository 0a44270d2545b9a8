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

#ifndef POLYDEC_ADAM_H_
#define POLYDEC_ADAM_H_

#include <span>
#include <vector>

namespace polydec {

struct AdamConfig {
  double learning_rate = 0.015;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Adam with bias-corrected moment estimates.
class Adam {
 public:
  Adam(int dimension, const AdamConfig& config);

  // Moves `params` against `gradient` (descent).
  void Step(std::span<double> params, std::span<const double> gradient);
  // Moves `params` along `gradient` (ascent).
  void AscentStep(std::span<double> params, std::span<const double> gradient);

  int steps_taken() const { return t_; }

 private:
  AdamConfig config_;
  std::vector<double> m_;
  std::vector<double> v_;
  int t_ = 0;
};

}  // namespace polydec

#endif  // POLYDEC_ADAM_H_
