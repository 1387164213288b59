#pragma once

#include <vector>

namespace radezero {

/// Trigonometric polynomial phi(theta) = c_0 + sum_m c_m cos(m theta) + s_m sin(m theta)
/// with 0 <= phi <= 1 (checked on a 4096-point grid at construction).
class AngularWeight {
 public:
  /// cos_coeffs = c_0..c_d, sin_coeffs = s_1..s_d (shorter lists are zero padded).
  AngularWeight(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs = {});

  static AngularWeight constant(double c = 1.0);
  /// (1 + cos theta) / 2.
  static AngularWeight raised_cosine();
  /// sin^2 theta; vanishes on the real axis.
  static AngularWeight off_axis();
  /// Fejer kernel of order n centred at `shift`, scaled to peak value 1.
  static AngularWeight fejer(int n, double shift = 0.0);

  double operator()(double theta) const;
  double second_derivative(double theta) const;

  int degree() const noexcept { return static_cast<int>(cos_.size()) - 1; }
  double mean() const noexcept { return cos_[0]; }
  /// True when phi'' vanishes identically.
  bool flat() const noexcept;
  const std::vector<double>& cos_coeffs() const noexcept { return cos_; }
  /// s_1..s_d.
  const std::vector<double>& sin_coeffs() const noexcept { return sin_; }
  /// Coefficients of phi'': (-m^2 c_m, -m^2 s_m), constant term 0.
  std::vector<double> second_cos_coeffs() const;
  std::vector<double> second_sin_coeffs() const;
  /// (<|phi''|^q>)^{1/q}.
  double second_derivative_norm(double q) const;

 private:
  std::vector<double> cos_;
  std::vector<double> sin_;
};

}  // namespace radezero
