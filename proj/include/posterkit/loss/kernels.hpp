// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "posterkit/loss/schedule.hpp"

namespace posterkit::loss {

// Numerically stable logistic function.
double sigmoid(double x);

// Numerically stable log(1 + exp(x)).
double softplus(double x);

enum class WeightMode {
  // mean(((pred - target) * w)^2): the weight multiplies the residual, so the
  // squared error is effectively weighted by w^2.
  Literal,
  // mean(w * (pred - target)^2): the weight multiplies the squared error.
  SquaredErrorWeight,
};

struct DPOInputs {
  double logp_policy_win = 0.0;
  double logp_ref_win = 0.0;
  double logp_policy_lose = 0.0;
  double logp_ref_lose = 0.0;
  double beta = 1.0;
};

// (logp_policy_win - logp_ref_win) - (logp_policy_lose - logp_ref_lose).
double dpo_delta(const DPOInputs& inputs);

// -log sigmoid(beta * delta), computed as softplus(-beta * delta).
double dpo_loss(const DPOInputs& inputs);

namespace detail {

template <typename D1, typename D2>
void require_same_shape(const Eigen::ArrayBase<D1>& a, const Eigen::ArrayBase<D2>& b,
                        const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch (" +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
  }
}

inline void require_unit_time(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("t must lie in [0, 1], got " + std::to_string(t));
  }
}

}  // namespace detail

// x_t = alpha(t) * x0 + sigma(t) * eps.
template <typename D1, typename D2>
typename D1::PlainObject noised_state(const Eigen::ArrayBase<D1>& x0,
                                      const Eigen::ArrayBase<D2>& eps, double t,
                                      const NoiseSchedule& schedule) {
  detail::require_same_shape(x0, eps, "noised_state");
  detail::require_unit_time(t);
  using Scalar = typename D1::Scalar;
  const auto a = static_cast<Scalar>(schedule.alpha(t));
  const auto s = static_cast<Scalar>(schedule.sigma(t));
  return a * x0.derived() + s * eps.derived();
}

// alpha_dot(t) * x0 + sigma_dot(t) * eps. For the linear schedule this is
// eps - x0 at every t.
template <typename D1, typename D2>
typename D1::PlainObject target_velocity(const Eigen::ArrayBase<D1>& x0,
                                         const Eigen::ArrayBase<D2>& eps, double t,
                                         const NoiseSchedule& schedule) {
  detail::require_same_shape(x0, eps, "target_velocity");
  detail::require_unit_time(t);
  if (!schedule.has_derivatives()) {
    throw std::invalid_argument("target_velocity: schedule lacks derivatives");
  }
  using Scalar = typename D1::Scalar;
  const auto da = static_cast<Scalar>(schedule.alpha_dot(t));
  const auto ds = static_cast<Scalar>(schedule.sigma_dot(t));
  return da * x0.derived() + ds * eps.derived();
}

// Mean squared residual between prediction and target.
template <typename D1, typename D2>
double flow_loss(const Eigen::ArrayBase<D1>& v_pred, const Eigen::ArrayBase<D2>& target) {
  detail::require_same_shape(v_pred, target, "flow_loss");
  if (v_pred.size() == 0) {
    throw std::invalid_argument("flow_loss: empty tensors");
  }
  return (v_pred.derived().template cast<double>() - target.derived().template cast<double>())
      .square()
      .mean();
}

// Region-weighted mean squared residual. The weight map may cover the full
// residual or one weight per group of `residual.size() / weight.size()`
// consecutive elements (interleaved channels sharing a per-pixel weight).
template <typename D1, typename D2, typename D3>
double weighted_flow_loss(const Eigen::ArrayBase<D1>& v_pred, const Eigen::ArrayBase<D2>& target,
                          const Eigen::ArrayBase<D3>& weight,
                          WeightMode mode = WeightMode::Literal) {
  detail::require_same_shape(v_pred, target, "weighted_flow_loss");
  const Eigen::Index n = v_pred.size();
  const Eigen::Index wn = weight.size();
  if (n == 0 || wn == 0) {
    throw std::invalid_argument("weighted_flow_loss: empty tensors");
  }
  if (n % wn != 0) {
    throw std::invalid_argument("weighted_flow_loss: weight size " + std::to_string(wn) +
                                " does not divide residual size " + std::to_string(n));
  }
  const Eigen::ArrayXd w = weight.derived().template cast<double>().reshaped();
  if ((w < 0.0).any()) {
    throw std::invalid_argument("weighted_flow_loss: negative weights");
  }
  const Eigen::ArrayXd residual =
      (v_pred.derived().template cast<double>() - target.derived().template cast<double>())
          .reshaped();
  const Eigen::Index ratio = n / wn;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double r = residual[i];
    const double wi = w[i / ratio];
    acc += mode == WeightMode::Literal ? (r * wi) * (r * wi) : wi * r * r;
  }
  return acc / static_cast<double>(n);
}

}  // namespace posterkit::loss
