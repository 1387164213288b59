#include "radezero/profile.hpp"

#include "radezero/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace radezero {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool check_normalized(const Eigen::ArrayXd& log_mag, const Eigen::ArrayXd& phase) {
  if (log_mag[0] != 0.0 || phase[0] != 0.0) return false;
  const double rest = log_mag.size() > 1 ? log_mag.tail(log_mag.size() - 1).exp().sum() : 0.0;
  return rest <= 0.5 * (1 + 1e-12);
}

}  // namespace

std::string_view family_name(Family family) noexcept {
  switch (family) {
    case Family::Explicit: return "explicit";
    case Family::Regular: return "regular";
    case Family::Factorial: return "factorial";
    case Family::Lacunary: return "lacunary";
    case Family::CentralDominant: return "central-dominant";
  }
  return "explicit";
}

Family family_from_name(std::string_view name) {
  for (Family f : {Family::Explicit, Family::Regular, Family::Factorial, Family::Lacunary,
                   Family::CentralDominant}) {
    if (family_name(f) == name) return f;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown profile family '" + std::string(name) + "'");
}

CoefficientProfile::CoefficientProfile(Family family, Eigen::ArrayXd log_mag, Eigen::ArrayXd phase,
                                       bool truncated, FamilyParams params)
    : family_(family),
      log_mag_(std::move(log_mag)),
      phase_(std::move(phase)),
      truncated_(truncated),
      normalized_(false),
      params_(std::move(params)) {
  if (log_mag_.size() == 0) throw Error(ErrorCode::InvalidArgument, "profile needs at least one coefficient");
  if (phase_.size() == 0) phase_ = Eigen::ArrayXd::Zero(log_mag_.size());
  if (phase_.size() != log_mag_.size()) {
    throw Error(ErrorCode::InvalidArgument, "log_mag and phase lengths differ");
  }
  for (Eigen::Index k = 0; k < log_mag_.size(); ++k) {
    if (std::isnan(log_mag_[k]) || log_mag_[k] == std::numeric_limits<double>::infinity()) {
      throw Error(ErrorCode::InvalidArgument, "log_mag must be finite or -inf");
    }
    if (!std::isfinite(phase_[k])) throw Error(ErrorCode::InvalidArgument, "phase must be finite");
    if (log_mag_[k] == kNegInf<double>) phase_[k] = 0.0;
  }
  if (live_count() == 0) throw Error(ErrorCode::TooFewTerms, "profile has no live coefficient");
  normalized_ = check_normalized(log_mag_, phase_);
}

CoefficientProfile CoefficientProfile::from_log(Eigen::ArrayXd log_mag, Eigen::ArrayXd phase) {
  return CoefficientProfile(Family::Explicit, std::move(log_mag), std::move(phase), false);
}

CoefficientProfile CoefficientProfile::from_moduli(const std::vector<double>& moduli) {
  Eigen::ArrayXd lm(static_cast<Eigen::Index>(moduli.size()));
  for (std::size_t k = 0; k < moduli.size(); ++k) {
    lm[static_cast<Eigen::Index>(k)] = moduli[k] > 0 ? std::log(moduli[k]) : kNegInf<double>;
  }
  return from_log(std::move(lm));
}

CoefficientProfile CoefficientProfile::from_complex(const std::vector<Complex>& coefficients) {
  const auto n = static_cast<Eigen::Index>(coefficients.size());
  Eigen::ArrayXd lm(n), ph(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex a = coefficients[static_cast<std::size_t>(k)];
    lm[k] = std::abs(a) > 0 ? std::log(std::abs(a)) : kNegInf<double>;
    ph[k] = std::abs(a) > 0 ? std::arg(a) : 0.0;
  }
  return from_log(std::move(lm), std::move(ph));
}

CoefficientProfile CoefficientProfile::factorial(int k_max) {
  if (k_max < 1) throw Error(ErrorCode::InvalidArgument, "factorial profile needs K_max >= 1");
  Eigen::ArrayXd lm(k_max + 1);
  for (int k = 0; k <= k_max; ++k) lm[k] = -std::lgamma(k + 1.0);
  return CoefficientProfile(Family::Factorial, std::move(lm), Eigen::ArrayXd::Zero(k_max + 1), true);
}

int CoefficientProfile::live_count() const {
  return static_cast<int>((log_mag_ > kNegInf<double>).count());
}

int CoefficientProfile::leading_index() const {
  for (int k = 0; k <= k_max(); ++k) {
    if (live(k)) return k;
  }
  return k_max();
}

CoefficientProfile CoefficientProfile::with_phases(Eigen::ArrayXd phase) const {
  return CoefficientProfile(family_, log_mag_, std::move(phase), truncated_, params_);
}

Eigen::ArrayXd log_terms(const CoefficientProfile& profile, double u) {
  const Eigen::Index n = profile.log_mags().size();
  Eigen::ArrayXd t = profile.log_mags() + u * Eigen::ArrayXd::LinSpaced(n, 0.0, static_cast<double>(n - 1));
  // -inf + finite stays -inf; guard u = +-inf producing NaN for k = 0.
  for (Eigen::Index k = 0; k < n; ++k) {
    if (std::isnan(t[k])) t[k] = profile.log_mags()[k] == kNegInf<double> ? kNegInf<double> : profile.log_mags()[k];
  }
  return t;
}

double log_sigma(const CoefficientProfile& profile, double u) {
  return 0.5 * log_sum_exp(2.0 * log_terms(profile, u));
}

double s_of_r(const CoefficientProfile& profile, double u) {
  const Eigen::ArrayXd w = softmax(2.0 * log_terms(profile, u));
  const Eigen::Index n = w.size();
  return (w * Eigen::ArrayXd::LinSpaced(n, 0.0, static_cast<double>(n - 1))).sum();
}

CentralIndex central_index(const CoefficientProfile& profile, double u) {
  const Eigen::ArrayXd t = log_terms(profile, u);
  const double top = t.maxCoeff();
  int nu = 0;
  for (int k = profile.k_max(); k >= 0; --k) {
    const double slack = 16 * kEps * (std::abs(profile.log_mag(k)) + k * std::abs(u) + 1.0);
    if (t[k] != kNegInf<double> && t[k] >= top - slack) {
      nu = k;
      break;
    }
  }
  return {nu, top};
}

double central_group_bound(double tau) { return 2.0 / std::expm1(tau); }

double last_term_weight(const CoefficientProfile& profile, double u) {
  const int K = profile.k_max();
  if (!profile.live(K)) return 0.0;
  return std::exp(profile.log_mag(K) + K * u - log_sigma(profile, u));
}

bool saturated(const CoefficientProfile& profile, double u, double eps) {
  return profile.truncated() && last_term_weight(profile, u) > eps;
}

CentralGroup central_group(const CoefficientProfile& profile, double u, double tau) {
  if (!(tau > 0)) throw Error(ErrorCode::InvalidArgument, "tau must be positive");
  const int k_lo = central_index(profile, u - tau).nu;
  const int k_hi = central_index(profile, u + tau).nu;
  const int K = profile.k_max();
  if (profile.truncated() && k_hi == K) {
    const double bound = central_group_bound(tau);
    if (k_lo == K || last_term_weight(profile, u) > bound) {
      throw Error(ErrorCode::DegenerateGroup,
                  "truncation saturated at u=" + std::to_string(u) + "; raise K_max above " + std::to_string(K));
    }
  }
  const Eigen::ArrayXd t = log_terms(profile, u);
  const double ls = 0.5 * log_sum_exp(2.0 * t);
  double tail = 0.0;
  for (int k = 0; k < k_lo; ++k) tail += std::exp(t[k] - ls);
  for (int k = k_hi + 1; k <= K; ++k) tail += std::exp(t[k] - ls);
  return {k_lo, k_hi, tail};
}

Normalization normalize(const CoefficientProfile& profile) {
  if (profile.live_count() < 2) {
    throw Error(ErrorCode::TooFewTerms, "normalization needs at least two live coefficients");
  }
  const int m = profile.leading_index();
  const int n = profile.k_max() - m + 1;
  Eigen::ArrayXd lm = profile.log_mags().segment(m, n) - profile.log_mag(m);
  Eigen::ArrayXd ph = profile.phases().segment(m, n) - profile.phase(m);
  for (Eigen::Index k = 0; k < n; ++k) ph[k] = lm[k] == kNegInf<double> ? 0.0 : wrap_angle(ph[k]);
  lm[0] = 0.0;
  ph[0] = 0.0;

  const double rest = lm.tail(n - 1).exp().sum();
  double log_scale = 0.0;
  if (2 * rest > 1 + 1e-12) {
    log_scale = std::log(2 * rest);
    lm -= log_scale * Eigen::ArrayXd::LinSpaced(n, 0.0, static_cast<double>(n - 1));
    for (Eigen::Index k = 0; k < n; ++k) {
      if (std::isnan(lm[k])) lm[k] = kNegInf<double>;
    }
  }
  CoefficientProfile out(profile.family(), std::move(lm), std::move(ph), profile.truncated(), profile.params());
  return {std::move(out), m, log_scale};
}

double tau_for_tail(double eps_tail) { return std::log1p(2.0 / eps_tail); }

RadialFrame radial_frame(const CoefficientProfile& profile, double u, double eps_tail) {
  if (!(eps_tail > 0 && eps_tail < 1)) throw Error(ErrorCode::InvalidArgument, "eps_tail must lie in (0,1)");
  const double tau = tau_for_tail(eps_tail);
  const CentralGroup group = central_group(profile, u, tau);
  const CentralIndex ci = central_index(profile, u);
  const Eigen::ArrayXd t = log_terms(profile, u);
  const double ls = 0.5 * log_sum_exp(2.0 * t);
  const int width = group.k_hi - group.k_lo + 1;
  Eigen::ArrayXd weights = (2.0 * (t.segment(group.k_lo, width) - ls)).exp();
  return RadialFrame{u, ls, s_of_r(profile, u), ci.log_mu, ci.nu, tau, group.k_lo, group.k_hi,
                     std::move(weights), group.tail_rel};
}

}  // namespace radezero
