#include "radezero/roots.hpp"

#include "radezero/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace radezero {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Successive hull edges are rotated by this so short edges do not line up.
constexpr double kGoldenAngle = 2.399963229728653;

}  // namespace

LogPolynomial::LogPolynomial(Eigen::ArrayXd log_mag, Eigen::ArrayXd phase)
    : log_mag_(std::move(log_mag)), phase_(std::move(phase)) {
  if (log_mag_.size() < 1) throw Error(ErrorCode::InvalidArgument, "empty polynomial");
  if (phase_.size() == 0) phase_ = Eigen::ArrayXd::Zero(log_mag_.size());
  if (phase_.size() != log_mag_.size()) throw Error(ErrorCode::InvalidArgument, "phase length mismatch");
  const int d = degree();
  delta_ = d > 0 ? std::min(0.5, 40.0 / d) : 0.5;
}

const LogPolynomial::Band& LogPolynomial::band(long index) {
  auto it = bands_.find(index);
  if (it != bands_.end()) return it->second;
  const double lr = static_cast<double>(index) * delta_;
  const Eigen::Index n = log_mag_.size();
  Eigen::ArrayXd t = log_mag_ + lr * Eigen::ArrayXd::LinSpaced(n, 0.0, static_cast<double>(n - 1));
  for (Eigen::Index j = 0; j < n; ++j) {
    if (std::isnan(t[j])) t[j] = kNegInf<double>;
  }
  const double top = t.maxCoeff();
  Band b{top, lr, Eigen::ArrayXcd(n), Eigen::ArrayXd(n)};
  for (Eigen::Index j = 0; j < n; ++j) {
    b.moduli[j] = std::exp(t[j] - top);
    b.coeffs[j] = std::polar(b.moduli[j], phase_[j]);
  }
  return bands_.emplace(index, std::move(b)).first->second;
}

PolyEval LogPolynomial::evaluate(Complex z) {
  const double mod = std::abs(z);
  if (mod == 0.0) return {std::polar(1.0, phase_[0]), Complex(0.0), log_mag_[0], 1.0};
  const Band& b = band(std::lround(std::log(mod) / delta_));
  const Complex w = z * std::exp(-b.log_radius);
  const double wm = std::abs(w);
  const Eigen::Index n = b.coeffs.size();
  Complex p = b.coeffs[n - 1];
  Complex dp = 0.0;
  double a = b.moduli[n - 1];
  for (Eigen::Index j = n - 2; j >= 0; --j) {
    dp = dp * w + p;
    p = p * w + b.coeffs[j];
    a = a * wm + b.moduli[j];
  }
  return {p, w * dp, b.log_scale, a};
}

Complex LogPolynomial::newton_step(Complex z) {
  const PolyEval e = evaluate(z);
  if (e.z_derivative == Complex(0.0)) return {std::numeric_limits<double>::infinity(), 0.0};
  return z * (e.value / e.z_derivative);
}

std::vector<Complex> newton_polygon_guesses(const Eigen::ArrayXd& log_mag) {
  const int d = static_cast<int>(log_mag.size()) - 1;
  std::vector<int> hull;
  for (int j = 0; j <= d; ++j) {
    if (log_mag[j] == kNegInf<double>) continue;
    // Upper hull: drop the last point while it lies on or below the chord.
    while (hull.size() >= 2) {
      const int i0 = hull[hull.size() - 2], i1 = hull.back();
      const double cross = (i1 - i0) * (log_mag[j] - log_mag[i0]) - (j - i0) * (log_mag[i1] - log_mag[i0]);
      if (cross >= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(j);
  }
  std::vector<Complex> z;
  z.reserve(static_cast<std::size_t>(d));
  constexpr double two_pi = 2 * std::numbers::pi;
  for (std::size_t e = 1; e < hull.size(); ++e) {
    const int i0 = hull[e - 1], i1 = hull[e];
    const int count = i1 - i0;
    const double log_rho = -(log_mag[i1] - log_mag[i0]) / count;
    const double offset = kGoldenAngle * i0 + 0.7;
    for (int t = 0; t < count; ++t) {
      z.push_back(std::polar(std::exp(log_rho), two_pi * t / count + offset));
    }
  }
  return z;
}

AberthResult aberth_roots(LogPolynomial& p, const AberthOptions& opts) {
  const int d = p.degree();
  const Eigen::ArrayXd& lm = p.log_mags();
  if (d < 1) return {{}, 0, true};
  if (lm[0] == kNegInf<double> || lm[d] == kNegInf<double>) {
    throw Error(ErrorCode::InvalidArgument, "root finder needs nonzero constant and leading coefficients");
  }
  std::vector<Complex> z = newton_polygon_guesses(lm);
  std::vector<char> done(z.size(), 0);
  const double gamma = 4.0 * (d + 1) * kEps;

  int it = 0;
  bool all = false;
  for (; it < opts.max_iterations && !all; ++it) {
    all = true;
    for (int i = 0; i < d; ++i) {
      if (done[static_cast<std::size_t>(i)]) continue;
      const Complex zi = z[static_cast<std::size_t>(i)];
      const PolyEval e = p.evaluate(zi);
      if (std::abs(e.value) <= gamma * e.abs_sum) {
        done[static_cast<std::size_t>(i)] = 1;
        continue;
      }
      all = false;
      if (e.z_derivative == Complex(0.0)) {
        z[static_cast<std::size_t>(i)] = zi * Complex(1.0 + 1e-3, 1e-3);
        continue;
      }
      const Complex ratio = zi * (e.value / e.z_derivative);
      Complex sum = 0.0;
      for (int j = 0; j < d; ++j) {
        if (j != i) sum += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
      }
      const Complex corr = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) {
        z[static_cast<std::size_t>(i)] = zi * Complex(1.0 - 1e-3, 1e-3);
        continue;
      }
      z[static_cast<std::size_t>(i)] = zi - corr;
      if (std::abs(corr) <= 2 * kEps * std::abs(zi)) done[static_cast<std::size_t>(i)] = 1;
    }
  }
  return {std::move(z), it, all};
}

}  // namespace radezero
