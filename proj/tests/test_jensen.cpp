#include "doctest.h"
#include "oracles.hpp"

#include "radezero/corpus.hpp"
#include "radezero/error.hpp"
#include "radezero/evaluate.hpp"
#include "radezero/jensen.hpp"
#include "radezero/weight.hpp"
#include "radezero/zeros.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace radezero;

namespace {

constexpr double kPi = std::numbers::pi;

CoefficientProfile half() { return CoefficientProfile::from_moduli({1.0, 0.5}); }

CorpusCase corpus(int i, std::uint64_t seed, int degree) {
  CorpusOptions o;
  o.min_degree = degree;
  o.max_degree = degree;
  return make_corpus_case(i, seed, o);
}

}  // namespace

TEST_CASE("angular weights") {
  const AngularWeight w({0.5, 0.2, 0.1}, {0.0, 0.15});
  CHECK(w.mean() == 0.5);
  for (double th = -kPi; th < kPi; th += 0.1) {
    const double h = 1e-4;
    const double fd = (w(th + h) - 2 * w(th) + w(th - h)) / (h * h);
    CHECK(w.second_derivative(th) == doctest::Approx(fd).epsilon(1e-5));
  }
  const auto c2 = w.second_cos_coeffs();
  const auto s2 = w.second_sin_coeffs();
  CHECK(c2[0] == 0.0);
  CHECK(c2[1] == -0.2);
  CHECK(c2[2] == -4 * 0.1);
  CHECK(s2[1] == -4 * 0.15);
  CHECK(std::abs(oracle::dense_mean([&](double t) { return w.second_derivative(t); }, 4096)) <= 1e-15);

  const double q = 3.0;
  const double direct =
      std::pow(oracle::dense_mean([&](double t) { return std::pow(std::abs(w.second_derivative(t)), q); }, 1 << 16),
               1 / q);
  CHECK(w.second_derivative_norm(q) == doctest::Approx(direct).epsilon(1e-6));
  CHECK(AngularWeight::constant().second_derivative_norm(2) == 0.0);
  CHECK_THROWS_AS(AngularWeight({0.5, 0.8}), Error);
  for (int n : {1, 4, 8}) {
    const auto f = AngularWeight::fejer(n, 0.4);
    CHECK(f.degree() <= 8);
    for (double th = -kPi; th < kPi; th += 0.01) {
      CHECK(f(th) >= -1e-12);
      CHECK(f(th) <= 1 + 1e-12);
    }
  }
}

TEST_CASE("Jensen on F = 1 + z/2") {
  const auto plus = SignAssignment::all_plus(2);
  const JensenCheck j = jensen_check(half(), plus, std::log(4.0));
  CHECK(j.lhs == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(j.residual <= 1e-8);
  const JensenCheck none = jensen_check(half(), plus, 0.0);
  CHECK(none.lhs == 0.0);
  CHECK(std::abs(none.rhs) <= 1e-9);
}

TEST_CASE("Jensen residual on seeded degree-12 corpus") {
  for (int i = 0; i < 100; ++i) {
    const CorpusCase c = corpus(i, 1212, 12);
    REQUIRE(jensen_residual(c.profile, c.signs, c.u) <= 1e-7);
  }
}

TEST_CASE("Jensen consistency against winding counts") {
  const CorpusCase c = corpus(7, 33, 12);
  const double u_min = -8.0;
  const double n_int = integrated_count(c.profile, c.signs, u_min, c.u);
  const CircleSeries series(c.profile, c.signs, c.u);
  const double mean_log = mean_log_modulus(series, 1e-11).value + series.log_sigma();
  const double log_f0 = c.profile.log_mag(0);
  CHECK(std::abs(n_int + log_f0 - mean_log) <= 1e-8);
}

TEST_CASE("weighted Jensen") {
  const auto plus = SignAssignment::all_plus(2);
  const JensenCheck w = jensen_weighted_check(half(), plus, AngularWeight::raised_cosine(), std::log(4.0));
  CHECK(std::abs(w.lhs) <= 1e-15);
  CHECK(std::abs(w.rhs) <= 1e-6);

  const CorpusCase c = corpus(2, 4242, 10);
  CHECK(jensen_weighted_residual(c.profile, c.signs, AngularWeight::off_axis(), c.u) <= 1e-5);
  CHECK(std::abs(jensen_weighted_residual(c.profile, c.signs, AngularWeight::constant(), c.u) -
                 jensen_residual(c.profile, c.signs, c.u)) <= 1e-12);
}

TEST_CASE("integrated count identities with the constant weight") {
  const auto p = CoefficientProfile::from_moduli({1.0, 0.3, 0.1, 0.05, 0.01});
  std::vector<SignAssignment> ens;
  const auto e = enumerate_signs(5, true);
  for (std::uint64_t i = 0; i < e.size(); ++i) ens.push_back(e[i]);
  const Lemma41Result r = lemma41_residuals(p, ens, AngularWeight::constant(), 0.5, 1.5);
  CHECK(r.res_mean <= 1e-6);
  CHECK(r.res_pathwise <= 1e-6);
  CHECK(r.samples == 16);
  CHECK_THROWS_AS(lemma41_residuals(p, ens, AngularWeight::constant(), 1.5, 0.5), Error);
}

TEST_CASE("q_integral") {
  const CorpusCase c = corpus(5, 55, 8);
  CHECK(q_integral(c.profile, c.signs, AngularWeight::constant(), 1.0) == 0.0);
  const auto one = CoefficientProfile::from_moduli({1.0});
  CHECK(q_integral(one, SignAssignment::all_plus(1), AngularWeight::raised_cosine(), 1.0) == 0.0);

  const AngularWeight phi = AngularWeight::raised_cosine();
  const double uT = 1.0;
  const int n = 1000;
  double trap = 0;
  for (int j = 0; j <= n; ++j) {
    const double v = uT * j / n;
    trap += (j == 0 || j == n ? 0.5 : 1.0) * curvature_mean(c.profile, c.signs, phi, v, 1e-9) * uT / n;
  }
  const double q1 = q_integral(c.profile, c.signs, phi, uT);
  CHECK(std::abs(q1 - trap) <= 1e-3);

  const double qa = q_integral(c.profile, c.signs, phi, 0.4);
  double mid = 0;
  for (int j = 0; j <= n; ++j) {
    const double v = 0.4 + 0.6 * j / n;
    mid += (j == 0 || j == n ? 0.5 : 1.0) * curvature_mean(c.profile, c.signs, phi, v, 1e-9) * 0.6 / n;
  }
  CHECK(std::abs(qa + mid - q1) <= 1e-3);
}

TEST_CASE("truncated logarithm") {
  CHECK(truncated_log(1.0, 0.7) == 0.0);
  const double L = 1.1, cap = std::pow(L, 6);
  CHECK(truncated_log(std::exp(2 * cap), L) == doctest::Approx(cap));
  CHECK(truncated_log(std::exp(-2 * cap), L) == doctest::Approx(-cap));
  std::mt19937_64 gen(3);
  for (int i = 0; i < 1000; ++i) {
    const double a = std::exp((uniform01(gen) - 0.5) * 4 * cap);
    const double b = std::exp((uniform01(gen) - 0.5) * 4 * cap);
    CHECK((truncated_log(a, L) - truncated_log(b, L)) * (a - b) >= 0);
    CHECK(truncated_log(1 / a, L) == doctest::Approx(-truncated_log(a, L)).epsilon(1e-12));
    if (std::abs(std::log(a)) <= cap) CHECK(truncated_log(a, L) == doctest::Approx(std::log(a)).epsilon(1e-14));
    if (a >= std::exp(-cap) && b >= std::exp(-cap)) {
      CHECK(std::abs(truncated_log(a, L) - truncated_log(b, L)) <= std::exp(cap) * std::abs(a - b) * (1 + 1e-12));
    }
  }
}
