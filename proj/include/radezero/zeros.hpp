#pragma once

#include "radezero/evaluate.hpp"
#include "radezero/numerics.hpp"
#include "radezero/profile.hpp"
#include "radezero/sampling.hpp"
#include "radezero/weight.hpp"

#include <string_view>
#include <vector>

namespace radezero {

enum class CountMethod { Winding, Roots };

std::string_view count_method_name(CountMethod method) noexcept;

struct RootEntry {
  Complex z;
  int multiplicity;
  double residual;  ///< bound on |F(z)| / sigma_F(|z|) including rounding
};

/// Zeros of the truncated series in the closed disk |z| <= e^u.
struct ZeroReport {
  double u = 0.0;             ///< log-radius actually used
  double perturbation = 0.0;  ///< u - requested log-radius (retry protocol)
  int count = 0;
  double margin = 0.0;        ///< smallest sampled |F_hat| on the circle
  double margin_bound = 0.0;  ///< certified lower bound on |F_hat| over the circle
  CountMethod method = CountMethod::Winding;
  int effective_degree = 0;
  bool has_roots = false;
  std::vector<RootEntry> roots;  ///< origin first (if F(0) = 0), then by modulus
};

struct ZeroOptions {
  double margin_min = 1e-9;
  double eps_tail = kDefaultEvalTail;
  /// On ZeroNearCircle retry at u + step, then u - step.
  bool retry = true;
  double retry_step = 1e-6;
  double residual_max = 1e-8;
  double cluster_tol = 1e-8;
  int max_iterations = 600;
};

/// n_F(e^u) by the certified winding scan; no retry.
int count_zeros_winding(const CoefficientProfile& profile, const SignAssignment& signs, double u,
                        const ZeroOptions& opts = {});

/// Winding count with the retry protocol; the report carries no roots.
ZeroReport count_zeros(const CoefficientProfile& profile, const SignAssignment& signs, double u,
                       const ZeroOptions& opts = {});

/// Roots in the closed disk with multiplicities and residual certificates.
/// The root count is checked against the winding count.
ZeroReport locate_zeros(const CoefficientProfile& profile, const SignAssignment& signs, double u,
                        const ZeroOptions& opts = {});

/// n_F(r, phi): sum of multiplicity * phi(arg z) over nonzero roots in the disk.
template <typename Phi>
double weighted_count(const ZeroReport& report, const Phi& phi) {
  double total = 0.0;
  for (const RootEntry& r : report.roots) {
    if (r.z != Complex(0.0) && std::log(std::abs(r.z)) <= report.u) total += r.multiplicity * phi(std::arg(r.z));
  }
  return total;
}

/// Number of roots (with multiplicity, origin included) in |z| <= e^u.
int count_in_disk(const ZeroReport& report, double u);

/// int_{u1}^{u2} n_F(e^v) dv = sum_roots mult * (u2 - max(u1, log|z|))^+ from
/// a report located at radius >= e^{u2}.
double integrated_count(const ZeroReport& report, double u1, double u2);

double integrated_count(const CoefficientProfile& profile, const SignAssignment& signs, double u1, double u2,
                        const ZeroOptions& opts = {});

}  // namespace radezero
