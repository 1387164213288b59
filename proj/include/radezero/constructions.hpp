#pragma once

#include "radezero/profile.hpp"
#include "radezero/sampling.hpp"

#include <vector>

namespace radezero {

/// log|a_k| = k log(Delta) - alpha k log k, phases 0, cut at K_max, then normalized.
CoefficientProfile build_regular(double Delta, double alpha, int K_max);

struct ScheduleEntry {
  double u;  ///< log r_k
  int k;     ///< n_F(r_k) = k for every sign choice
};

struct CentralDominant {
  CoefficientProfile profile;
  std::vector<ScheduleEntry> schedule;
  /// log(|a_k| r_k^k / sum_{l != k} |a_l| r_k^l) per schedule entry; each exceeds log K.
  std::vector<double> log_dominance;
};

/// a_0..a_count with log|a_k| = -(k^2/2) log(growth) and r_k = growth^k, so
/// term k beats term l at r_k by growth^{(k-l)^2/2}. The inequality
/// |a_k| r_k^k > K sum_{l != k} |a_l| r_k^l is checked by direct summation;
/// ConstructionFailed when growth is too small for the requested margin.
CentralDominant build_central_dominant(double K_margin, int count, double growth);

/// Coefficients at exponents lambda_j with log a_0 = 0 and
/// log a_{j+1} = log a_j - (lambda_{j+1} - lambda_j) log rho_j, so consecutive
/// terms balance on |z| = rho_j.
CoefficientProfile build_lacunary(const std::vector<int>& lambda, const std::vector<double>& rho, int K_max);

/// wrap(arg(-(xi_k / xi_{k+1}) a_k / a_{k+1})): the argument of the single zero
/// in the annulus between r_k and r_{k+1} of a central-dominant profile.
double predict_zero_argument(const CoefficientProfile& profile, const SignAssignment& signs, int k);

}  // namespace radezero
