#pragma once

#include "radezero/numerics.hpp"

#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace radezero {

enum class Family { Explicit, Regular, Factorial, Lacunary, CentralDominant };

std::string_view family_name(Family family) noexcept;
Family family_from_name(std::string_view name);

struct RegularParams {
  double delta = 1.0;
  double alpha = 1.0;
};

struct LacunaryParams {
  std::vector<int> lambda;
  std::vector<double> rho;
};

struct CentralDominantParams {
  double margin = 2.0;
  int count = 3;
  double growth = 100.0;
};

using FamilyParams = std::variant<std::monostate, RegularParams, LacunaryParams, CentralDominantParams>;

/// Magnitudes and phases of the Taylor coefficients a_0..a_K of a series,
/// stored as log|a_k| (-inf for a_k = 0) and arg a_k.
///
/// `truncated` marks rule-backed families that stand for an infinite series
/// cut at K_max; explicit lists and finite constructions are exact
/// polynomials and never saturate.
class CoefficientProfile {
 public:
  CoefficientProfile(Family family, Eigen::ArrayXd log_mag, Eigen::ArrayXd phase, bool truncated,
                     FamilyParams params = {});

  static CoefficientProfile from_log(Eigen::ArrayXd log_mag, Eigen::ArrayXd phase = {});
  static CoefficientProfile from_moduli(const std::vector<double>& moduli);
  static CoefficientProfile from_complex(const std::vector<Complex>& coefficients);
  /// |a_k| = 1/k!, truncated at k_max.
  static CoefficientProfile factorial(int k_max);

  Family family() const noexcept { return family_; }
  const FamilyParams& params() const noexcept { return params_; }
  int k_max() const noexcept { return static_cast<int>(log_mag_.size()) - 1; }
  bool truncated() const noexcept { return truncated_; }
  bool normalized() const noexcept { return normalized_; }

  double log_mag(int k) const { return log_mag_[k]; }
  double phase(int k) const { return phase_[k]; }
  const Eigen::ArrayXd& log_mags() const noexcept { return log_mag_; }
  const Eigen::ArrayXd& phases() const noexcept { return phase_; }
  bool live(int k) const { return log_mag_[k] != kNegInf<double>; }

  int live_count() const;
  int leading_index() const;
  /// Copy with replaced phases; family and parameters are kept.
  CoefficientProfile with_phases(Eigen::ArrayXd phase) const;

 private:
  Family family_;
  Eigen::ArrayXd log_mag_;
  Eigen::ArrayXd phase_;
  bool truncated_;
  bool normalized_;
  FamilyParams params_;
};

/// log|a_k| + k u for every k.
Eigen::ArrayXd log_terms(const CoefficientProfile& profile, double u);

/// log sigma_F(e^u) for the retained coefficients.
double log_sigma(const CoefficientProfile& profile, double u);

/// d log sigma_F / d log r, evaluated as a softmax-weighted mean index.
double s_of_r(const CoefficientProfile& profile, double u);

struct CentralIndex {
  int nu;
  double log_mu;
};

/// Maximal term and central index; ties go to the largest index.
CentralIndex central_index(const CoefficientProfile& profile, double u);

struct CentralGroup {
  int k_lo;
  int k_hi;
  double tail_rel;
};

/// Central group [nu(r e^-tau), nu(r e^tau)] and the directly summed relative
/// tail outside it. Throws DegenerateGroup when a truncated profile is
/// saturated at this radius.
CentralGroup central_group(const CoefficientProfile& profile, double u, double tau);

/// 2/(e^tau - 1), the bound on the relative tail outside the central group.
double central_group_bound(double tau);

/// Normalized magnitude of the last retained term, |a_K| r^K / sigma_F(r).
double last_term_weight(const CoefficientProfile& profile, double u);

/// True when a truncated profile's last retained term exceeds eps at radius e^u.
bool saturated(const CoefficientProfile& profile, double u, double eps);

struct Normalization {
  CoefficientProfile profile;
  int shift;         ///< index m of the leading live coefficient
  double log_scale;  ///< log A_F
};

/// Divides by the leading monomial a_m z^m and rescales z -> z / A_F so that
/// a_0 = 1 and sum_{k>=1} |a_k| <= 1/2. Counts transform as
/// n_F(r) = n_out(r A_F) + m and s_F(r) = s_out(r A_F) + m.
Normalization normalize(const CoefficientProfile& profile);

struct RadialFrame {
  double u;
  double log_sigma;
  double s;
  double log_mu;
  int nu;
  double tau;
  int k_lo;
  int k_hi;
  Eigen::ArrayXd weights;  ///< |a_k|^2 r^2k / sigma^2 for k_lo..k_hi
  double tail_rel;
};

/// tau chosen so that 2/(e^tau - 1) = eps_tail.
double tau_for_tail(double eps_tail);

RadialFrame radial_frame(const CoefficientProfile& profile, double u, double eps_tail);

}  // namespace radezero
