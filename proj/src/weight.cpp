#include "radezero/weight.hpp"

#include "radezero/error.hpp"
#include "radezero/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace radezero {

namespace {

constexpr double kPi = std::numbers::pi;

double trig_sum(const std::vector<double>& c, const std::vector<double>& s, double theta) {
  double v = c[0];
  for (std::size_t m = 1; m < c.size(); ++m) {
    v += c[m] * std::cos(static_cast<double>(m) * theta) + s[m - 1] * std::sin(static_cast<double>(m) * theta);
  }
  return v;
}

}  // namespace

AngularWeight::AngularWeight(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs)
    : cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
  if (cos_.empty()) cos_.push_back(0.0);
  const std::size_t d = std::max(cos_.size() - 1, sin_.size());
  cos_.resize(d + 1, 0.0);
  sin_.resize(d, 0.0);
  constexpr int kGrid = 4096;
  for (int i = 0; i < kGrid; ++i) {
    const double v = (*this)(-kPi + 2 * kPi * i / kGrid);
    if (v < -1e-12 || v > 1 + 1e-12) {
      throw Error(ErrorCode::InvalidArgument, "angular weight leaves [0,1]: value " + std::to_string(v));
    }
  }
}

AngularWeight AngularWeight::constant(double c) { return AngularWeight({c}); }

AngularWeight AngularWeight::raised_cosine() { return AngularWeight({0.5, 0.5}); }

AngularWeight AngularWeight::off_axis() { return AngularWeight({0.5, 0.0, -0.5}); }

AngularWeight AngularWeight::fejer(int n, double shift) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "Fejer order must be >= 0");
  const double scale = 1.0 / (n + 1);
  std::vector<double> c(static_cast<std::size_t>(n) + 1), s(static_cast<std::size_t>(n));
  c[0] = scale;
  for (int m = 1; m <= n; ++m) {
    const double w = 2.0 * scale * (1.0 - static_cast<double>(m) / (n + 1));
    c[static_cast<std::size_t>(m)] = w * std::cos(m * shift);
    s[static_cast<std::size_t>(m) - 1] = w * std::sin(m * shift);
  }
  return AngularWeight(std::move(c), std::move(s));
}

double AngularWeight::operator()(double theta) const { return trig_sum(cos_, sin_, theta); }

double AngularWeight::second_derivative(double theta) const {
  return trig_sum(second_cos_coeffs(), second_sin_coeffs(), theta);
}

bool AngularWeight::flat() const noexcept {
  for (std::size_t m = 1; m < cos_.size(); ++m) {
    if (cos_[m] != 0.0 || sin_[m - 1] != 0.0) return false;
  }
  return true;
}

std::vector<double> AngularWeight::second_cos_coeffs() const {
  std::vector<double> c(cos_.size(), 0.0);
  for (std::size_t m = 1; m < c.size(); ++m) c[m] = -static_cast<double>(m * m) * cos_[m];
  return c;
}

std::vector<double> AngularWeight::second_sin_coeffs() const {
  std::vector<double> s(sin_.size(), 0.0);
  for (std::size_t m = 1; m <= s.size(); ++m) s[m - 1] = -static_cast<double>(m * m) * sin_[m - 1];
  return s;
}

double AngularWeight::second_derivative_norm(double q) const {
  if (!(q >= 1)) throw Error(ErrorCode::InvalidArgument, "norm exponent must be >= 1");
  if (flat()) return 0.0;
  const auto c = second_cos_coeffs();
  const auto s = second_sin_coeffs();
  QuadratureOptions opts;
  opts.tol = 1e-12;
  opts.relative = true;
  opts.initial_panels = std::max(8, 2 * degree());
  const auto r = integrate([&](double th) { return std::pow(std::abs(trig_sum(c, s, th)), q); }, -kPi, kPi, opts);
  return std::pow(r.value / (2 * kPi), 1.0 / q);
}

}  // namespace radezero
