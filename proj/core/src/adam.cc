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

#include "polydec/adam.h"

#include <cmath>

namespace polydec {

Adam::Adam(int dimension, const AdamConfig& config)
    : config_(config), m_(dimension, 0.0), v_(dimension, 0.0) {}

void Adam::Step(std::span<double> params, std::span<const double> gradient) {
  ++t_;
  const double correction1 = 1.0 - std::pow(config_.beta1, t_);
  const double correction2 = 1.0 - std::pow(config_.beta2, t_);
  for (size_t i = 0; i < params.size(); ++i) {
    m_[i] = config_.beta1 * m_[i] + (1.0 - config_.beta1) * gradient[i];
    v_[i] = config_.beta2 * v_[i] + (1.0 - config_.beta2) * gradient[i] * gradient[i];
    const double m_hat = m_[i] / correction1;
    const double v_hat = v_[i] / correction2;
    params[i] -= config_.learning_rate * m_hat / (std::sqrt(v_hat) + config_.epsilon);
  }
}

void Adam::AscentStep(std::span<double> params,
                      std::span<const double> gradient) {
  std::vector<double> negated(gradient.size());
  for (size_t i = 0; i < gradient.size(); ++i) negated[i] = -gradient[i];
  Step(params, negated);
}

}  // namespace polydec
