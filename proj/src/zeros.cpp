#include "radezero/zeros.hpp"

#include "radezero/error.hpp"
#include "radezero/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace radezero {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kStripMass = 1e-13;

template <typename Fn>
ZeroReport with_retry(Fn&& fn, double u, const ZeroOptions& opts) {
  try {
    return fn(u);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ZeroNearCircle || !opts.retry) throw;
    // Closed disk: a zero on the circle belongs inside, so look outward first.
    for (double step : {opts.retry_step, -opts.retry_step}) {
      try {
        ZeroReport r = fn(u + step);
        r.perturbation = step;
        return r;
      } catch (const Error& again) {
        if (again.code() != ErrorCode::ZeroNearCircle) throw;
      }
    }
    throw;
  }
}

int leading_nonzero(const CoefficientProfile& profile, const SignAssignment& signs) {
  for (int k = 0; k <= profile.k_max(); ++k) {
    if (profile.live(k) && signs[k] != Complex(0.0)) return k;
  }
  throw Error(ErrorCode::InvalidArgument, "series is identically zero");
}

ZeroReport winding_report(const CoefficientProfile& profile, const SignAssignment& signs, double u,
                          const ZeroOptions& opts) {
  const CircleSeries series(profile, signs, u, opts.eps_tail);
  const WindingScan scan = winding_scan(series, opts.margin_min);
  ZeroReport r;
  r.u = u;
  r.count = scan.winding;
  r.margin = scan.min_sample;
  r.margin_bound = scan.margin_bound;
  r.method = CountMethod::Winding;
  r.effective_degree = series.hi();
  return r;
}

// Sorted by modulus; roots closer than tol * max(1, |z|) are merged.
std::vector<RootEntry> cluster(std::vector<RootEntry> roots, double tol) {
  std::sort(roots.begin(), roots.end(), [](const RootEntry& a, const RootEntry& b) {
    const double ma = std::abs(a.z), mb = std::abs(b.z);
    return ma != mb ? ma < mb : std::arg(a.z) < std::arg(b.z);
  });
  std::vector<char> used(roots.size(), 0);
  std::vector<RootEntry> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    RootEntry merged = roots[i];
    Complex sum = roots[i].z * static_cast<double>(roots[i].multiplicity);
    const double reach = tol * std::max(1.0, std::abs(roots[i].z));
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (std::abs(roots[j].z) - std::abs(roots[i].z) > reach) break;
      if (!used[j] && std::abs(roots[j].z - roots[i].z) <= reach) {
        used[j] = 1;
        merged.multiplicity += roots[j].multiplicity;
        merged.residual = std::max(merged.residual, roots[j].residual);
        sum += roots[j].z * static_cast<double>(roots[j].multiplicity);
      }
    }
    merged.z = sum / static_cast<double>(merged.multiplicity);
    out.push_back(merged);
  }
  return out;
}

ZeroReport roots_report(const CoefficientProfile& profile, const SignAssignment& signs, double u,
                        const ZeroOptions& opts) {
  ZeroReport report = winding_report(profile, signs, u, opts);
  report.method = CountMethod::Roots;
  report.has_roots = true;

  const int K = profile.k_max();
  const int m = leading_nonzero(profile, signs);
  const Eigen::ArrayXd t = log_terms(profile, u);
  const double ls = 0.5 * log_sum_exp(2.0 * t);
  auto mass = [&](int k) {
    return t[k] == kNegInf<double> ? 0.0 : std::abs(signs[k]) * std::exp(t[k] - ls);
  };

  // Strip the top while the removed mass stays below half the certified margin
  // (Rouche keeps the count in the disk unchanged) and small enough that roots
  // near the circle move by no more than the residual budget allows.
  const double budget = std::min(0.5 * report.margin_bound, kStripMass);
  double stripped = 0.0;
  int top = K;
  while (top > m) {
    const double mt = mass(top);
    if (stripped + mt < budget) {
      stripped += mt;
      --top;
    } else {
      break;
    }
  }
  report.effective_degree = top;

  auto signed_coeffs = [&](int from, int to, Eigen::ArrayXd& lm, Eigen::ArrayXd& ph) {
    lm.resize(to - from + 1);
    ph.resize(to - from + 1);
    for (int k = from; k <= to; ++k) {
      const Complex xi = signs[k];
      const bool zero = !profile.live(k) || xi == Complex(0.0);
      lm[k - from] = zero ? kNegInf<double> : profile.log_mag(k) + std::log(std::abs(xi));
      ph[k - from] = zero ? 0.0 : profile.phase(k) + std::arg(xi);
    }
  };

  Eigen::ArrayXd lm, ph;
  signed_coeffs(m, top, lm, ph);
  LogPolynomial poly(lm, ph);
  std::vector<RootEntry> found;
  if (m > 0) found.push_back({Complex(0.0), m, 0.0});

  if (top > m) {
    AberthOptions aopts;
    aopts.max_iterations = opts.max_iterations;
    const AberthResult ab = aberth_roots(poly, aopts);

    Eigen::ArrayXd flm, fph;
    signed_coeffs(m, K, flm, fph);
    LogPolynomial full(flm, fph);
    const int n = K - m;

    std::vector<RootEntry> inside;
    for (Complex z : ab.roots) {
      if (!(std::log(std::abs(z)) <= u + 0.05)) continue;
      for (int it = 0; it < 8; ++it) {
        const Complex step = full.newton_step(z);
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag()) || std::abs(step) > 1e-3 * std::abs(z)) break;
        z -= step;
        if (std::abs(step) <= 2 * kEps * std::abs(z)) break;
      }
      const double lz = std::log(std::abs(z));
      if (!(lz <= u)) continue;
      const PolyEval e = full.evaluate(z);
      const double base = e.log_scale + m * lz - log_sigma(profile, lz);
      const double residual = std::exp(std::log(std::abs(e.value)) + base) +
                              4.0 * (n + 1) * kEps * std::exp(std::log(e.abs_sum) + base);
      if (!(residual <= opts.residual_max)) {
        throw Error(ErrorCode::RootFindingFailure, "root at |z|=" + std::to_string(std::abs(z)) +
                                                       " has residual " + std::to_string(residual));
      }
      inside.push_back({z, 1, residual});
    }
    for (RootEntry& r : cluster(std::move(inside), opts.cluster_tol)) found.push_back(r);
  }

  int count = 0;
  for (const RootEntry& r : found) count += r.multiplicity;
  if (count != report.count) {
    throw Error(ErrorCode::RootFindingFailure, "located " + std::to_string(count) + " roots but winding gives " +
                                                   std::to_string(report.count) + " at u=" + std::to_string(u));
  }
  report.roots = std::move(found);
  return report;
}

}  // namespace

std::string_view count_method_name(CountMethod method) noexcept {
  return method == CountMethod::Winding ? "winding" : "roots";
}

int count_zeros_winding(const CoefficientProfile& profile, const SignAssignment& signs, double u,
                        const ZeroOptions& opts) {
  return winding_report(profile, signs, u, opts).count;
}

ZeroReport count_zeros(const CoefficientProfile& profile, const SignAssignment& signs, double u,
                       const ZeroOptions& opts) {
  return with_retry([&](double v) { return winding_report(profile, signs, v, opts); }, u, opts);
}

ZeroReport locate_zeros(const CoefficientProfile& profile, const SignAssignment& signs, double u,
                        const ZeroOptions& opts) {
  return with_retry([&](double v) { return roots_report(profile, signs, v, opts); }, u, opts);
}

int count_in_disk(const ZeroReport& report, double u) {
  int n = 0;
  for (const RootEntry& r : report.roots) {
    if (r.z == Complex(0.0) || std::log(std::abs(r.z)) <= u) n += r.multiplicity;
  }
  return n;
}

double integrated_count(const ZeroReport& report, double u1, double u2) {
  if (!(u1 < u2)) throw Error(ErrorCode::InvalidArgument, "integrated_count needs u1 < u2");
  if (!report.has_roots) throw Error(ErrorCode::InvalidArgument, "integrated_count needs located roots");
  if (report.u < u2 - 1e-12) throw Error(ErrorCode::InvalidArgument, "roots were located on a smaller disk");
  double total = 0.0;
  for (const RootEntry& r : report.roots) {
    const double lz = r.z == Complex(0.0) ? kNegInf<double> : std::log(std::abs(r.z));
    total += r.multiplicity * std::max(0.0, u2 - std::max(u1, lz));
  }
  return total;
}

double integrated_count(const CoefficientProfile& profile, const SignAssignment& signs, double u1, double u2,
                        const ZeroOptions& opts) {
  ZeroReport report = locate_zeros(profile, signs, u2, opts);
  // A retry may have located at u2 - step; redo on the outer side.
  if (report.u < u2) report = locate_zeros(profile, signs, u2 + 2 * opts.retry_step, opts);
  return integrated_count(report, u1, u2);
}

}  // namespace radezero
