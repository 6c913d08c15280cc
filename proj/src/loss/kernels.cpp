// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/loss/kernels.hpp"

#include <cmath>

namespace posterkit::loss {

NoiseSchedule NoiseSchedule::linear() {
  NoiseSchedule s;
  s.alpha = [](double t) { return 1.0 - t; };
  s.sigma = [](double t) { return t; };
  s.alpha_dot = [](double) { return -1.0; };
  s.sigma_dot = [](double) { return 1.0; };
  return s;
}

NoiseSchedule NoiseSchedule::trigonometric() {
  constexpr double half_pi = 1.57079632679489661923;
  NoiseSchedule s;
  s.alpha = [](double t) { return std::cos(half_pi * t); };
  s.sigma = [](double t) { return std::sin(half_pi * t); };
  s.alpha_dot = [](double t) { return -half_pi * std::sin(half_pi * t); };
  s.sigma_dot = [](double t) { return half_pi * std::cos(half_pi * t); };
  return s;
}

double sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double softplus(double x) {
  if (x > 0.0) {
    return x + std::log1p(std::exp(-x));
  }
  return std::log1p(std::exp(x));
}

double dpo_delta(const DPOInputs& inputs) {
  return (inputs.logp_policy_win - inputs.logp_ref_win) -
         (inputs.logp_policy_lose - inputs.logp_ref_lose);
}

double dpo_loss(const DPOInputs& inputs) {
  if (!(inputs.beta > 0.0)) {
    throw std::invalid_argument("dpo_loss: beta must be positive");
  }
  const double values[] = {inputs.logp_policy_win, inputs.logp_ref_win, inputs.logp_policy_lose,
                           inputs.logp_ref_lose, inputs.beta};
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("dpo_loss: inputs must be finite");
    }
  }
  return softplus(-inputs.beta * dpo_delta(inputs));
}

}  // namespace posterkit::loss
