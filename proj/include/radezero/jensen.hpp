#pragma once

#include "radezero/profile.hpp"
#include "radezero/sampling.hpp"
#include "radezero/weight.hpp"
#include "radezero/zeros.hpp"

#include <vector>

namespace radezero {

struct JensenOptions {
  double inner_tol = 1e-11;  ///< angular means
  double outer_tol = 1e-9;   ///< radial integrals
  ZeroOptions zeros;
};

struct JensenCheck {
  double residual;
  double lhs;     ///< root side
  double rhs;     ///< boundary-value side
  double margin;  ///< smallest sampled |F_hat| on the circle
  int panels;     ///< quadrature panels used
};

/// N_F(R) from located roots against <X_R> + log sigma_F(R) - log|F(0)|.
JensenCheck jensen_check(const CoefficientProfile& profile, const SignAssignment& signs, double u,
                         const JensenOptions& opts = {});
double jensen_residual(const CoefficientProfile& profile, const SignAssignment& signs, double u);

/// sum phi(arg z) (U - log|z|) over roots against
/// <phi X_R> + <phi>(log sigma_F(R) - log|F(0)|) + int_{-inf}^{U} (U - v) <phi'' X_{e^v}> dv.
JensenCheck jensen_weighted_check(const CoefficientProfile& profile, const SignAssignment& signs,
                                  const AngularWeight& phi, double u_R, const JensenOptions& opts = {});
double jensen_weighted_residual(const CoefficientProfile& profile, const SignAssignment& signs,
                                const AngularWeight& phi, double u_R);

/// <phi'' X_{e^v}>.
double curvature_mean(const CoefficientProfile& profile, const SignAssignment& signs, const AngularWeight& phi,
                      double v, double tol, int* panels = nullptr);

struct Lemma41Result {
  double res_mean;
  double res_pathwise;
  double lhs_mean;  ///< ensemble mean of int_{u1}^{u2} n_F(e^v, phi) dv
  int samples;
};

/// Residuals of the averaged and pathwise integral identities for the counting
/// function over [u1, u2], with ensemble averages in place of expectations.
Lemma41Result lemma41_residuals(const CoefficientProfile& profile, const std::vector<SignAssignment>& ensemble,
                                const AngularWeight& phi, double u1, double u2, const JensenOptions& opts = {});

/// int_0^{u_T} <phi'' X_{e^v}> dv.
double q_integral(const CoefficientProfile& profile, const SignAssignment& signs, const AngularWeight& phi,
                  double u_T, double tol = 1e-9);

/// log x clipped to [-Lambda^6, Lambda^6].
double truncated_log(double x, double Lambda);

}  // namespace radezero
