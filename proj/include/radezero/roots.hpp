#pragma once

#include "radezero/numerics.hpp"

#include <Eigen/Dense>

#include <unordered_map>
#include <vector>

namespace radezero {

/// P(z) = e^{log_scale} value, z P'(z) = e^{log_scale} z_derivative and
/// sum_j |c_j| |z|^j = e^{log_scale} abs_sum.
struct PolyEval {
  Complex value;
  Complex z_derivative;
  double log_scale;
  double abs_sum;
};

/// Polynomial sum_j c_j z^j with c_j = exp(log_mag[j]) e^{i phase[j]}.
///
/// Evaluation rescales z into bands |z| ~ e^{b Delta}; each band keeps its own
/// copy of the coefficients divided by the largest term on that band's
/// circle, so neither the coefficients nor the powers of z leave the double
/// range.
class LogPolynomial {
 public:
  LogPolynomial(Eigen::ArrayXd log_mag, Eigen::ArrayXd phase);

  int degree() const noexcept { return static_cast<int>(log_mag_.size()) - 1; }
  const Eigen::ArrayXd& log_mags() const noexcept { return log_mag_; }

  PolyEval evaluate(Complex z);
  /// Newton correction P(z)/P'(z); infinite when P'(z) vanishes.
  Complex newton_step(Complex z);

 private:
  struct Band {
    double log_scale;
    double log_radius;
    Eigen::ArrayXcd coeffs;
    Eigen::ArrayXd moduli;
  };
  const Band& band(long index);

  Eigen::ArrayXd log_mag_;
  Eigen::ArrayXd phase_;
  double delta_;
  std::unordered_map<long, Band> bands_;
};

/// Starting points on the circles given by the upper convex hull of
/// (j, log|c_j|): an edge from i0 to i1 with slope m carries i1 - i0 points
/// of modulus e^{-m}.
std::vector<Complex> newton_polygon_guesses(const Eigen::ArrayXd& log_mag);

struct AberthOptions {
  int max_iterations = 600;
};

struct AberthResult {
  std::vector<Complex> roots;
  int iterations;
  bool converged;
};

/// All roots of p by Aberth-Ehrlich simultaneous iteration (Gauss-Seidel
/// sweeps). Requires c_0 != 0 and c_d != 0.
AberthResult aberth_roots(LogPolynomial& p, const AberthOptions& opts = {});

}  // namespace radezero
