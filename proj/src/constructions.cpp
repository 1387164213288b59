#include "radezero/constructions.hpp"

#include "radezero/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace radezero {

CoefficientProfile build_regular(double Delta, double alpha, int K_max) {
  if (!(Delta > 0) || !(alpha > 0)) throw Error(ErrorCode::InvalidArgument, "Delta and alpha must be positive");
  if (K_max < 8) throw Error(ErrorCode::InvalidArgument, "regular profile needs K_max >= 8");
  Eigen::ArrayXd lm(K_max + 1);
  for (int k = 0; k <= K_max; ++k) {
    lm[k] = k * std::log(Delta) - (k == 0 ? 0.0 : alpha * k * std::log(static_cast<double>(k)));
  }
  CoefficientProfile raw(Family::Regular, std::move(lm), Eigen::ArrayXd::Zero(K_max + 1), true,
                         RegularParams{Delta, alpha});
  return normalize(raw).profile;
}

CentralDominant build_central_dominant(double K_margin, int count, double growth) {
  if (!(K_margin >= 1)) throw Error(ErrorCode::InvalidArgument, "K_margin must be >= 1");
  if (count < 1 || count > 30) throw Error(ErrorCode::InvalidArgument, "count must lie in [1, 30]");
  if (!(growth > 1)) throw Error(ErrorCode::InvalidArgument, "growth must exceed 1");
  const double lg = std::log(growth);
  Eigen::ArrayXd lm(count + 1);
  for (int k = 0; k <= count; ++k) lm[k] = -0.5 * k * k * lg;
  CoefficientProfile profile(Family::CentralDominant, lm, Eigen::ArrayXd::Zero(count + 1), false,
                             CentralDominantParams{K_margin, count, growth});

  CentralDominant out{profile, {}, {}};
  for (int k = 0; k <= count; ++k) {
    const double u = k * lg;
    const Eigen::ArrayXd t = log_terms(profile, u);
    Eigen::ArrayXd others(count);
    for (int l = 0, i = 0; l <= count; ++l) {
      if (l != k) others[i++] = t[l];
    }
    const double dominance = t[k] - log_sum_exp(others);
    if (!(dominance > std::log(K_margin))) {
      throw Error(ErrorCode::ConstructionFailed, "term " + std::to_string(k) + " dominates only by factor " +
                                                     std::to_string(std::exp(dominance)) + " < K=" +
                                                     std::to_string(K_margin) + "; increase growth");
    }
    out.schedule.push_back({u, k});
    out.log_dominance.push_back(dominance);
  }
  return out;
}

CoefficientProfile build_lacunary(const std::vector<int>& lambda, const std::vector<double>& rho, int K_max) {
  if (lambda.size() < 2) throw Error(ErrorCode::InvalidArgument, "lacunary profile needs at least two exponents");
  if (rho.size() + 1 != lambda.size()) throw Error(ErrorCode::InvalidArgument, "need one radius per gap");
  if (lambda[0] < 0) throw Error(ErrorCode::InvalidArgument, "exponents must be non-negative");
  for (std::size_t j = 1; j < lambda.size(); ++j) {
    if (lambda[j] <= lambda[j - 1]) throw Error(ErrorCode::InvalidArgument, "exponents must increase strictly");
  }
  for (std::size_t j = 0; j < rho.size(); ++j) {
    if (!(rho[j] > 0) || (j > 0 && !(rho[j] > rho[j - 1]))) {
      throw Error(ErrorCode::InvalidArgument, "radii must be positive and increasing");
    }
  }
  if (K_max < lambda.back()) throw Error(ErrorCode::InvalidArgument, "K_max below the last exponent");
  Eigen::ArrayXd lm = Eigen::ArrayXd::Constant(K_max + 1, kNegInf<double>);
  double la = 0.0;
  lm[lambda[0]] = la;
  for (std::size_t j = 0; j + 1 < lambda.size(); ++j) {
    la -= (lambda[j + 1] - lambda[j]) * std::log(rho[j]);
    if (std::abs(la) > 700.0 * K_max) {
      throw Error(ErrorCode::Overflow, "log|a| = " + std::to_string(la) + " exceeds the guard");
    }
    lm[lambda[j + 1]] = la;
  }
  return CoefficientProfile(Family::Lacunary, std::move(lm), Eigen::ArrayXd::Zero(K_max + 1), false,
                            LacunaryParams{lambda, rho});
}

double predict_zero_argument(const CoefficientProfile& profile, const SignAssignment& signs, int k) {
  if (profile.family() != Family::CentralDominant) {
    throw Error(ErrorCode::NotCentralDominant, "profile family is " + std::string(family_name(profile.family())));
  }
  if (k < 0 || k + 1 > profile.k_max()) {
    throw Error(ErrorCode::NotCentralDominant, "no annulus after index " + std::to_string(k));
  }
  const Complex ratio = -(signs[k] / signs[k + 1]) * std::polar(1.0, profile.phase(k) - profile.phase(k + 1));
  return wrap_angle(std::arg(ratio));
}

}  // namespace radezero
