#include "radezero/jensen.hpp"

#include "radezero/error.hpp"
#include "radezero/evaluate.hpp"
#include "radezero/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace radezero {

namespace {

double log_abs_f0(const CoefficientProfile& profile, const SignAssignment& signs) {
  if (!profile.live(0) || signs[0] == Complex(0.0)) throw Error(ErrorCode::InvalidArgument, "F(0) = 0");
  return profile.log_mag(0) + std::log(std::abs(signs[0]));
}

// Below this log-radius every root is far outside and <phi'' X> is negligible:
// all roots have modulus >= (1/2) min_k |c_0/c_k|^{1/k}.
double quiet_limit(const CoefficientProfile& profile, const SignAssignment& signs) {
  const double c0 = log_abs_f0(profile, signs);
  double first = 0.0;
  bool any = false;
  for (int k = 1; k <= profile.k_max(); ++k) {
    if (!profile.live(k) || signs[k] == Complex(0.0)) continue;
    const double v = (c0 - profile.log_mag(k) - std::log(std::abs(signs[k]))) / k;
    first = any ? std::min(first, v) : v;
    any = true;
  }
  return first - std::log(2.0) - 36.0;
}

double weighted_log_mean(const CircleSeries& series, const AngularWeight& phi, double tol, int& panels) {
  const auto r = angular_mean([&](double th) { return phi(th) * series.log_abs(th); },
                              circle_quadrature(series, tol));
  panels += r.panels;
  return r.value;
}

std::vector<double> root_breaks(const ZeroReport& report) {
  std::vector<double> b;
  for (const RootEntry& r : report.roots) {
    if (r.z != Complex(0.0)) b.push_back(std::log(std::abs(r.z)));
  }
  return b;
}

// int_{v_lo}^{hi} w(v) <phi'' X_{e^v}> dv.
template <typename W>
double curvature_integral(const CoefficientProfile& profile, const SignAssignment& signs, const AngularWeight& phi,
                          double v_lo, double hi, std::vector<double> breaks, W&& w, const JensenOptions& opts,
                          int& panels) {
  if (phi.flat() || !(hi > v_lo)) return 0.0;
  QuadratureOptions q;
  q.tol = opts.outer_tol;
  q.initial_panels = 8;
  const auto r = integrate_pieces(
      [&](double v) {
        const double wv = w(v);
        return wv == 0.0 ? 0.0 : wv * curvature_mean(profile, signs, phi, v, opts.inner_tol, &panels);
      },
      v_lo, hi, std::move(breaks), q);
  panels += r.panels;
  return r.value;
}

}  // namespace

double curvature_mean(const CoefficientProfile& profile, const SignAssignment& signs, const AngularWeight& phi,
                      double v, double tol, int* panels) {
  if (phi.flat()) return 0.0;
  const CircleSeries series(profile, signs, v);
  const auto c = phi.second_cos_coeffs();
  const auto s = phi.second_sin_coeffs();
  const auto r = angular_mean(
      [&](double th) {
        double p = 0.0;
        for (std::size_t m = 1; m < c.size(); ++m) {
          p += c[m] * std::cos(static_cast<double>(m) * th) + s[m - 1] * std::sin(static_cast<double>(m) * th);
        }
        return p * series.log_abs(th);
      },
      circle_quadrature(series, tol));
  if (panels) *panels += r.panels;
  return r.value;
}

JensenCheck jensen_weighted_check(const CoefficientProfile& profile, const SignAssignment& signs,
                                  const AngularWeight& phi, double u_R, const JensenOptions& opts) {
  const double lf0 = log_abs_f0(profile, signs);
  ZeroReport report = locate_zeros(profile, signs, u_R, opts.zeros);
  const double U = report.u;

  double lhs = 0.0;
  for (const RootEntry& r : report.roots) {
    lhs += r.multiplicity * phi(std::arg(r.z)) * (U - std::log(std::abs(r.z)));
  }

  int panels = 0;
  const CircleSeries series(profile, signs, U);
  double rhs = weighted_log_mean(series, phi, opts.inner_tol, panels) + phi.mean() * (series.log_sigma() - lf0);
  rhs += curvature_integral(profile, signs, phi, quiet_limit(profile, signs), U, root_breaks(report),
                            [U](double v) { return U - v; }, opts, panels);
  return {std::abs(lhs - rhs), lhs, rhs, report.margin, panels};
}

JensenCheck jensen_check(const CoefficientProfile& profile, const SignAssignment& signs, double u,
                         const JensenOptions& opts) {
  return jensen_weighted_check(profile, signs, AngularWeight::constant(1.0), u, opts);
}

double jensen_residual(const CoefficientProfile& profile, const SignAssignment& signs, double u) {
  return jensen_check(profile, signs, u).residual;
}

double jensen_weighted_residual(const CoefficientProfile& profile, const SignAssignment& signs,
                                const AngularWeight& phi, double u_R) {
  return jensen_weighted_check(profile, signs, phi, u_R).residual;
}

Lemma41Result lemma41_residuals(const CoefficientProfile& profile, const std::vector<SignAssignment>& ensemble,
                                const AngularWeight& phi, double u1, double u2, const JensenOptions& opts) {
  if (!(u1 >= 0 && u1 < u2)) throw Error(ErrorCode::InvalidArgument, "need 0 <= u1 < u2");
  if (ensemble.empty()) throw Error(ErrorCode::InvalidArgument, "empty ensemble");
  const std::size_t n = ensemble.size();
  std::vector<double> lhs(n), a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    const SignAssignment& signs = ensemble[i];
    ZeroOptions zo = opts.zeros;
    zo.retry = false;
    const ZeroReport report = locate_zeros(profile, signs, u2, zo);
    double l = 0.0;
    for (const RootEntry& r : report.roots) {
      if (r.z == Complex(0.0)) continue;
      l += r.multiplicity * phi(std::arg(r.z)) * std::max(0.0, u2 - std::max(u1, std::log(std::abs(r.z))));
    }
    lhs[i] = l;
    int panels = 0;
    a[i] = weighted_log_mean(CircleSeries(profile, signs, u2), phi, opts.inner_tol, panels) -
           weighted_log_mean(CircleSeries(profile, signs, u1), phi, opts.inner_tol, panels);
    std::vector<double> breaks = root_breaks(report);
    breaks.push_back(u1);
    b[i] = curvature_integral(profile, signs, phi, quiet_limit(profile, signs), u2, std::move(breaks),
                              [u1, u2](double v) { return u2 - std::max(v, u1); }, opts, panels);
  }
  QuadratureOptions q;
  q.tol = 1e-13;
  q.relative = true;
  const double S = integrate([&](double v) { return s_of_r(profile, v); }, u1, u2, q).value;

  auto mean = [n](const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(n);
  };
  const double ml = mean(lhs), ma = mean(a), mb = mean(b);
  Lemma41Result out{std::abs(ml - phi.mean() * S - ma - mb), 0.0, ml, static_cast<int>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.res_pathwise = std::max(out.res_pathwise, std::abs((lhs[i] - ml) - (a[i] - ma) - (b[i] - mb)));
  }
  return out;
}

double q_integral(const CoefficientProfile& profile, const SignAssignment& signs, const AngularWeight& phi,
                  double u_T, double tol) {
  if (!(u_T >= 0)) throw Error(ErrorCode::InvalidArgument, "q_integral needs u_T >= 0");
  if (phi.flat() || u_T == 0.0) return 0.0;
  QuadratureOptions q;
  q.tol = tol;
  return integrate([&](double v) { return curvature_mean(profile, signs, phi, v, 0.01 * tol); }, 0.0, u_T, q).value;
}

double truncated_log(double x, double Lambda) {
  if (!(x > 0) || !(Lambda > 0)) throw Error(ErrorCode::InvalidArgument, "truncated_log needs x > 0, Lambda > 0");
  const double cap = std::pow(Lambda, 6);
  return std::clamp(std::log(x), -cap, cap);
}

}  // namespace radezero
