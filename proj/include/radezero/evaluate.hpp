#pragma once

#include "radezero/numerics.hpp"
#include "radezero/profile.hpp"
#include "radezero/quadrature.hpp"
#include "radezero/sampling.hpp"

#include <Eigen/Dense>

#include <numbers>

namespace radezero {

/// Default relative tail left out of circle evaluations.
inline constexpr double kDefaultEvalTail = 1e-14;
/// |F_hat| below this is reported as log(kUnderflowFloor) by x_r.
inline constexpr double kUnderflowFloor = 1e-300;

/// F_hat_r(theta) = F(r e^{i theta}) / sigma_F(r) restricted to an index
/// window [lo, hi] of the central group. All coefficients have modulus <= 1.
class CircleSeries {
 public:
  /// Central group for eps_tail, trimmed further while the directly summed
  /// relative mass outside the window stays <= eps_tail.
  CircleSeries(const CoefficientProfile& profile, const SignAssignment& signs, double u,
               double eps_tail = kDefaultEvalTail);

  /// Fixed window [k_lo, k_hi], no trimming.
  static CircleSeries window(const CoefficientProfile& profile, const SignAssignment& signs, double u,
                             int k_lo, int k_hi);

  Complex value(double theta) const;
  /// e^{-i c theta} F_hat(theta) with c = center(); same modulus as value().
  Complex rotated(double theta) const;
  double modulus(double theta) const { return std::abs(horner(theta)); }
  /// log|F_hat|, floored at log(kUnderflowFloor).
  double log_abs(double theta) const;

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  int center() const noexcept { return center_; }
  double u() const noexcept { return u_; }
  double log_sigma() const noexcept { return log_sigma_; }
  /// Directly summed sum of normalized |terms| outside the window.
  double tail() const noexcept { return tail_; }
  /// Bound on |d/dtheta rotated(theta)|: sum |k - c| |c_k|.
  double lipschitz() const noexcept { return lipschitz_; }
  const Eigen::ArrayXcd& coefficients() const noexcept { return coeffs_; }

 private:
  CircleSeries() = default;
  void finish();
  Complex horner(double theta) const;

  double u_ = 0.0;
  double log_sigma_ = 0.0;
  int lo_ = 0;
  int center_ = 0;
  double tail_ = 0.0;
  double lipschitz_ = 0.0;
  Eigen::ArrayXcd coeffs_;
};

Complex f_hat(const CoefficientProfile& profile, const SignAssignment& signs, double u, double theta);

double x_r(const CoefficientProfile& profile, const SignAssignment& signs, double u, double theta);

/// Mean of g over [-pi, pi] with respect to d theta / 2 pi.
template <typename G>
auto angular_mean(G&& g, QuadratureOptions opts = {}) {
  constexpr double pi = std::numbers::pi;
  opts.tol *= 2 * pi;
  auto result = integrate(std::forward<G>(g), -pi, pi, opts);
  result.value /= 2 * pi;
  result.error /= 2 * pi;
  return result;
}

/// Quadrature options suited to a circle series: initial panels scale with
/// the window width so every panel sees a bounded number of oscillations.
QuadratureOptions circle_quadrature(const CircleSeries& series, double tol);

/// <X_r>, the angular mean of log|F_hat_r|.
QuadratureResult<double> mean_log_modulus(const CircleSeries& series, double tol = 1e-10);

/// (<|X_r|^p>)^{1/p}.
double x_norm(const CoefficientProfile& profile, const SignAssignment& signs, double u, double p,
              double tol = 1e-8);

struct MinModulus {
  double margin;       ///< smallest |F_hat| found after refinement
  double theta_min;
  double lower_bound;  ///< grid minimum minus the Lipschitz allowance
};

MinModulus min_modulus_on_circle(const CircleSeries& series);
MinModulus min_modulus_on_circle(const CoefficientProfile& profile, const SignAssignment& signs, double u);

struct WindingScan {
  int winding;          ///< zeros of the window polynomial in the closed disk
  double margin_bound;  ///< certified lower bound on |F_hat window| over the circle
  double min_sample;    ///< smallest sampled |F_hat window|
  double theta_min;
  int evaluations;
};

/// Argument-principle scan of theta -> F_hat over the circle. Segments are
/// bisected until the Lipschitz bound keeps the image inside a disk that
/// excludes the origin with clearance `threshold`, so every accepted phase
/// increment is the principal one (< pi/2). Throws ZeroNearCircle when the
/// clearance cannot be certified.
WindingScan winding_scan(const CircleSeries& series, double threshold);

}  // namespace radezero
