// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace posterkit::loss {

// Forward noising schedule: x_t = alpha(t) * x0 + sigma(t) * eps.
// alpha_dot and sigma_dot are the time derivatives used for velocity targets.
struct NoiseSchedule {
  std::function<double(double)> alpha;
  std::function<double(double)> sigma;
  std::function<double(double)> alpha_dot;
  std::function<double(double)> sigma_dot;

  bool has_derivatives() const {
    return static_cast<bool>(alpha_dot) && static_cast<bool>(sigma_dot);
  }

  // alpha = 1 - t, sigma = t. The default throughout the toolkit.
  static NoiseSchedule linear();

  // alpha = cos(pi t / 2), sigma = sin(pi t / 2). A curved schedule used to
  // exercise derivative handling beyond the constant-slope case.
  static NoiseSchedule trigonometric();
};

}  // namespace posterkit::loss
