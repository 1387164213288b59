#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace radezero {

template <typename Scalar>
inline constexpr Scalar kNegInf = -std::numeric_limits<Scalar>::infinity();

using Complex = std::complex<double>;

/// log(sum(exp(x))) over an Eigen array; -inf entries drop out. Returns -inf
/// for an empty or all -inf input.
template <typename Derived>
typename Derived::Scalar log_sum_exp(const Eigen::ArrayBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  if (x.size() == 0) return kNegInf<Scalar>;
  const Scalar top = x.maxCoeff();
  if (top == kNegInf<Scalar>) return top;
  return top + std::log((x - top).exp().sum());
}

/// Softmax of x. Entries equal to -inf get weight 0.
template <typename Derived>
Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1> softmax(
    const Eigen::ArrayBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const Scalar top = x.maxCoeff();
  Eigen::Array<Scalar, Eigen::Dynamic, 1> w = (x - top).exp();
  return w / w.sum();
}

/// Wraps an angle into (-pi, pi].
template <typename Scalar>
Scalar wrap_angle(Scalar theta) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  Scalar t = std::remainder(theta, 2 * pi);
  if (t <= -pi) t += 2 * pi;
  return t;
}

/// Gauss-Legendre rule of order N on [-1, 1], computed once by Newton
/// iteration on P_N.
template <typename Scalar, int N>
struct GaussLegendre {
  std::array<Scalar, N> nodes{};
  std::array<Scalar, N> weights{};

  GaussLegendre() {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    for (int i = 0; i < (N + 1) / 2; ++i) {
      Scalar x = std::cos(pi * (i + Scalar(0.75)) / (N + Scalar(0.5)));
      Scalar dp = 0;
      for (int iter = 0; iter < 100; ++iter) {
        Scalar p0 = 1, p1 = x;
        for (int n = 2; n <= N; ++n) {
          const Scalar p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
          p0 = p1;
          p1 = p2;
        }
        dp = N * (x * p1 - p0) / (x * x - 1);
        const Scalar dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) <= 4 * std::numeric_limits<Scalar>::epsilon()) break;
      }
      nodes[i] = -x;
      nodes[N - 1 - i] = x;
      weights[i] = weights[N - 1 - i] = 2 / ((1 - x * x) * dp * dp);
    }
  }

  static const GaussLegendre& instance() {
    static const GaussLegendre rule;
    return rule;
  }
};

}  // namespace radezero
