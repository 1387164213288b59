#include "radezero/evaluate.hpp"

#include "radezero/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace radezero {

namespace {

constexpr double kPi = std::numbers::pi;

void check_signs(const CoefficientProfile& profile, const SignAssignment& signs) {
  if (signs.size() < profile.k_max() + 1) {
    throw Error(ErrorCode::InvalidArgument, "sign assignment has " + std::to_string(signs.size()) +
                                                " entries, profile needs " + std::to_string(profile.k_max() + 1));
  }
}

// Normalized coefficient xi_k a_k r^k / sigma(r) for k in [lo, hi].
Eigen::ArrayXcd window_coefficients(const CoefficientProfile& profile, const SignAssignment& signs,
                                    const Eigen::ArrayXd& t, double ls, int lo, int hi) {
  Eigen::ArrayXcd c(hi - lo + 1);
  for (int k = lo; k <= hi; ++k) {
    c[k - lo] = t[k] == kNegInf<double> ? Complex(0.0)
                                        : signs[k] * std::polar(std::exp(t[k] - ls), profile.phase(k));
  }
  return c;
}

double golden_min(const CircleSeries& s, double a, double b, double& at) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = s.modulus(x1), f2 = s.modulus(x2);
  while (b - a > 1e-13) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = s.modulus(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = s.modulus(x2);
    }
  }
  at = f1 < f2 ? x1 : x2;
  return std::min(f1, f2);
}

}  // namespace

CircleSeries::CircleSeries(const CoefficientProfile& profile, const SignAssignment& signs, double u,
                           double eps_tail) {
  check_signs(profile, signs);
  const CentralGroup group = central_group(profile, u, tau_for_tail(eps_tail));
  const Eigen::ArrayXd t = log_terms(profile, u);
  u_ = u;
  log_sigma_ = 0.5 * log_sum_exp(2.0 * t);

  auto mass = [&](int k) { return t[k] == kNegInf<double> ? 0.0 : std::abs(signs[k]) * std::exp(t[k] - log_sigma_); };
  double tail = 0.0;
  for (int k = 0; k < group.k_lo; ++k) tail += mass(k);
  for (int k = group.k_hi + 1; k <= profile.k_max(); ++k) tail += mass(k);

  int lo = group.k_lo, hi = group.k_hi;
  while (lo < hi) {
    const double ml = mass(lo), mh = mass(hi);
    if (ml <= mh) {
      if (tail + ml > eps_tail) break;
      tail += ml;
      ++lo;
    } else {
      if (tail + mh > eps_tail) break;
      tail += mh;
      --hi;
    }
  }
  lo_ = lo;
  tail_ = tail;
  center_ = std::clamp(central_index(profile, u).nu, lo, hi);
  coeffs_ = window_coefficients(profile, signs, t, log_sigma_, lo, hi);
  finish();
}

CircleSeries CircleSeries::window(const CoefficientProfile& profile, const SignAssignment& signs, double u,
                                  int k_lo, int k_hi) {
  check_signs(profile, signs);
  if (k_lo < 0 || k_hi > profile.k_max() || k_lo > k_hi) {
    throw Error(ErrorCode::InvalidArgument, "window outside the coefficient range");
  }
  CircleSeries s;
  const Eigen::ArrayXd t = log_terms(profile, u);
  s.u_ = u;
  s.log_sigma_ = 0.5 * log_sum_exp(2.0 * t);
  double tail = 0.0;
  for (int k = 0; k <= profile.k_max(); ++k) {
    if ((k < k_lo || k > k_hi) && t[k] != kNegInf<double>) tail += std::abs(signs[k]) * std::exp(t[k] - s.log_sigma_);
  }
  s.lo_ = k_lo;
  s.tail_ = tail;
  s.center_ = std::clamp(central_index(profile, u).nu, k_lo, k_hi);
  s.coeffs_ = window_coefficients(profile, signs, t, s.log_sigma_, k_lo, k_hi);
  s.finish();
  return s;
}

void CircleSeries::finish() {
  const int c = center_ - lo_;
  lipschitz_ = 0.0;
  for (Eigen::Index j = 0; j < coeffs_.size(); ++j) {
    lipschitz_ += std::abs(static_cast<double>(j - c)) * std::abs(coeffs_[j]);
  }
}

Complex CircleSeries::horner(double theta) const {
  const Complex w = std::polar(1.0, theta);
  const Eigen::Index n = coeffs_.size();
  Complex acc = coeffs_[n - 1];
  for (Eigen::Index j = n - 2; j >= 0; --j) acc = acc * w + coeffs_[j];
  return acc;
}

Complex CircleSeries::value(double theta) const {
  const Complex q = horner(theta);
  if (lo_ == 0) return q;
  return std::polar(1.0, wrap_angle(lo_ * theta)) * q;
}

Complex CircleSeries::rotated(double theta) const {
  const Complex q = horner(theta);
  const int shift = lo_ - center_;
  if (shift == 0) return q;
  return std::polar(1.0, wrap_angle(shift * theta)) * q;
}

double CircleSeries::log_abs(double theta) const {
  return std::log(std::max(std::abs(horner(theta)), kUnderflowFloor));
}

Complex f_hat(const CoefficientProfile& profile, const SignAssignment& signs, double u, double theta) {
  return CircleSeries(profile, signs, u).value(theta);
}

double x_r(const CoefficientProfile& profile, const SignAssignment& signs, double u, double theta) {
  return CircleSeries(profile, signs, u).log_abs(theta);
}

QuadratureOptions circle_quadrature(const CircleSeries& series, double tol) {
  QuadratureOptions opts;
  const int width = static_cast<int>(series.coefficients().size());
  opts.tol = tol;
  opts.initial_panels = std::max(8, width / 2);
  opts.max_panels = std::max(40000, 64 * width);
  return opts;
}

QuadratureResult<double> mean_log_modulus(const CircleSeries& series, double tol) {
  return angular_mean([&series](double th) { return series.log_abs(th); }, circle_quadrature(series, tol));
}

double x_norm(const CoefficientProfile& profile, const SignAssignment& signs, double u, double p, double tol) {
  if (!(p >= 1)) throw Error(ErrorCode::InvalidArgument, "x_norm needs p >= 1");
  const CircleSeries series(profile, signs, u);
  QuadratureOptions opts = circle_quadrature(series, tol);
  opts.relative = true;
  const auto r = angular_mean([&](double th) { return std::pow(std::abs(series.log_abs(th)), p); }, opts);
  return std::pow(std::max(r.value, 0.0), 1.0 / p);
}

MinModulus min_modulus_on_circle(const CircleSeries& series) {
  const int width = static_cast<int>(series.coefficients().size());
  const int n = std::min(1 << 20, std::max(512, 32 * width));
  const double h = 2 * kPi / n;
  std::vector<double> mod(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) mod[static_cast<std::size_t>(j)] = series.modulus(-kPi + j * h);

  std::vector<int> minima;
  for (int j = 0; j < n; ++j) {
    const double m = mod[static_cast<std::size_t>(j)];
    if (m <= mod[static_cast<std::size_t>((j + n - 1) % n)] && m <= mod[static_cast<std::size_t>((j + 1) % n)]) {
      minima.push_back(j);
    }
  }
  std::sort(minima.begin(), minima.end(), [&mod](int a, int b) {
    return mod[static_cast<std::size_t>(a)] < mod[static_cast<std::size_t>(b)];
  });
  if (minima.size() > 8) minima.resize(8);

  const double grid_min = mod[static_cast<std::size_t>(minima.front())];
  MinModulus best{grid_min, -kPi + minima.front() * h, grid_min - series.lipschitz() * h / 2};
  for (int j : minima) {
    double at = 0.0;
    const double m = golden_min(series, -kPi + (j - 1) * h, -kPi + (j + 1) * h, at);
    if (m < best.margin) {
      best.margin = m;
      best.theta_min = wrap_angle(at);
    }
  }
  best.lower_bound = std::max(0.0, std::min(best.lower_bound, best.margin));
  return best;
}

MinModulus min_modulus_on_circle(const CoefficientProfile& profile, const SignAssignment& signs, double u) {
  return min_modulus_on_circle(CircleSeries(profile, signs, u));
}

WindingScan winding_scan(const CircleSeries& series, double threshold) {
  threshold = std::max(threshold, 2 * series.tail());
  const int width = static_cast<int>(series.coefficients().size());
  const double L = series.lipschitz();
  auto fail = [&](double theta) {
    throw Error(ErrorCode::ZeroNearCircle, "|F_hat| not certified above " + std::to_string(threshold) +
                                               " near theta=" + std::to_string(theta) +
                                               " at u=" + std::to_string(series.u()));
  };

  WindingScan scan{series.center(), std::numeric_limits<double>::infinity(),
                   std::numeric_limits<double>::infinity(), 0.0, 0};
  auto sample = [&](double theta) {
    const Complex g = series.rotated(theta);
    ++scan.evaluations;
    const double m = std::abs(g);
    if (m < scan.min_sample) {
      scan.min_sample = m;
      scan.theta_min = theta;
    }
    return g;
  };

  if (width == 1) {
    const double m = std::abs(sample(0.0));
    if (m <= threshold) fail(0.0);
    scan.margin_bound = m;
    return scan;
  }

  struct Seg {
    double a, b;
    Complex ga, gb;
  };
  constexpr int kMaxEvaluations = 1 << 25;
  const int n0 = std::max(16, 4 * width);
  double total = 0.0;
  std::vector<Seg> stack;
  Complex g_prev = sample(-kPi);
  const Complex g_start = g_prev;
  for (int i = 0; i < n0; ++i) {
    const double a = -kPi + 2 * kPi * i / n0;
    const double b = (i + 1 == n0) ? kPi : -kPi + 2 * kPi * (i + 1) / n0;
    const Complex gb = (i + 1 == n0) ? g_start : sample(b);
    stack.push_back({a, b, g_prev, gb});
    g_prev = gb;
    while (!stack.empty()) {
      const Seg s = stack.back();
      stack.pop_back();
      const double h = s.b - s.a;
      const double clear = std::max(std::abs(s.ga), std::abs(s.gb)) - L * h;
      if (clear >= threshold) {
        total += std::arg(s.gb / s.ga);
        scan.margin_bound = std::min(scan.margin_bound, clear);
        continue;
      }
      if (h < 1e-13) fail(s.a);
      if (scan.evaluations > kMaxEvaluations) {
        throw Error(ErrorCode::NoConvergence, "winding scan exceeded its evaluation budget");
      }
      const double mid = 0.5 * (s.a + s.b);
      const Complex gm = sample(mid);
      stack.push_back({mid, s.b, gm, s.gb});
      stack.push_back({s.a, mid, s.ga, gm});
    }
  }
  const double turns = total / (2 * kPi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 1e-6) {
    throw Error(ErrorCode::NoConvergence, "winding total " + std::to_string(turns) + " is not an integer");
  }
  scan.winding = series.center() + static_cast<int>(rounded);
  return scan;
}

}  // namespace radezero
