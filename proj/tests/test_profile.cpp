#include "doctest.h"
#include "oracles.hpp"

#include "radezero/constructions.hpp"
#include "radezero/error.hpp"
#include "radezero/profile.hpp"
#include "radezero/sampling.hpp"
#include "radezero/zeros.hpp"

#include <cmath>
#include <random>

using namespace radezero;

namespace {

CoefficientProfile two_term() { return CoefficientProfile::from_moduli({1.0, 0.5}); }

CoefficientProfile random_profile(std::uint64_t seed, int K) {
  std::mt19937_64 gen(seed);
  Eigen::ArrayXd lm(K + 1), ph(K + 1);
  for (int k = 0; k <= K; ++k) {
    lm[k] = -0.5 * k * std::log1p(k) + 3.0 * (uniform01(gen) - 0.5);
    ph[k] = 2 * std::numbers::pi * uniform01(gen);
  }
  return CoefficientProfile::from_log(lm, ph);
}

}  // namespace

TEST_CASE("log_sigma small cases") {
  CHECK(log_sigma(two_term(), 0.0) == doctest::Approx(0.1115718).epsilon(1e-7));
  const auto one = CoefficientProfile::from_moduli({1.0});
  for (double u : {-3.0, 0.0, 7.5}) CHECK(log_sigma(one, u) == 0.0);
}

TEST_CASE("log_sigma factorial matches long double sum") {
  const auto f = CoefficientProfile::factorial(60);
  const double want = static_cast<double>(oracle::log_sigma(f, 1.0L));
  CHECK(std::abs(log_sigma(f, 1.0) - want) <= 1e-12);
}

TEST_CASE("s_of_r small cases") {
  CHECK(s_of_r(two_term(), std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s_of_r(two_term(), -60.0) < 1e-50);
}

TEST_CASE("s_of_r equals the derivative of log_sigma") {
  const auto f = CoefficientProfile::factorial(400);
  const double h = 1e-5;
  const double fd = (log_sigma(f, 3 + h) - log_sigma(f, 3 - h)) / (2 * h);
  CHECK(std::abs(s_of_r(f, 3.0) - fd) <= 1e-6 * s_of_r(f, 3.0));
  CHECK(std::abs(s_of_r(f, 3.0) - static_cast<double>(oracle::s_value(f, 3.0L))) <= 1e-12 * 20);
}

TEST_CASE("derivative consistency is second order") {
  const auto p = random_profile(11, 30);
  for (double u : {-1.0, 0.3, 1.7}) {
    for (double h : {1e-3, 1e-4}) {
      const double fd = (log_sigma(p, u + h) - log_sigma(p, u - h)) / (2 * h);
      CHECK(std::abs(s_of_r(p, u) - fd) <= 50 * h * h * (1 + s_of_r(p, u) * s_of_r(p, u)) + 1e-10);
    }
  }
}

TEST_CASE("s is non-decreasing and mu never exceeds sigma") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto p = random_profile(seed, 25);
    double prev = -1;
    for (double u = -4; u <= 4; u += 0.05) {
      const double s = s_of_r(p, u);
      CHECK(s >= prev - 1e-12);
      CHECK(s >= 0);
      CHECK(s <= p.k_max());
      CHECK(central_index(p, u).log_mu <= log_sigma(p, u) + 1e-14);
      prev = s;
    }
  }
}

TEST_CASE("central index ties go to the larger index") {
  CHECK(central_index(two_term(), std::log(2.0) - 0.1).nu == 0);
  CHECK(central_index(two_term(), std::log(2.0) - 0.1).log_mu == 0.0);
  const CentralIndex tie = central_index(two_term(), std::log(2.0));
  CHECK(tie.nu == 1);
  CHECK(std::abs(tie.log_mu) < 1e-15);
}

TEST_CASE("central index matches an exhaustive scan") {
  const auto p = build_regular(1.0, 1.0, 40);
  for (double u : {-1.0, 0.0, 1.0, 2.0, 2.5}) {
    int best = 0;
    double top = -1e300;
    for (int k = 0; k <= p.k_max(); ++k) {
      const double t = p.log_mag(k) + k * u;
      if (t >= top) {
        top = t;
        best = k;
      }
    }
    CHECK(central_index(p, u).nu == best);
  }
}

TEST_CASE("central group") {
  const CentralGroup g = central_group(two_term(), 0.0, 5.0);
  CHECK(g.k_lo == 0);
  CHECK(g.k_hi == 1);
  CHECK(g.tail_rel == 0.0);
  CHECK(central_group_bound(std::log(3.0)) == doctest::Approx(1.0));

  const auto f = CoefficientProfile::factorial(200);
  const CentralGroup h = central_group(f, 2.0, 1.0);
  long double tail = 0;
  for (int k = 0; k <= f.k_max(); ++k) {
    if (k < h.k_lo || k > h.k_hi) tail += std::exp(static_cast<long double>(f.log_mag(k)) + 2 * k);
  }
  tail /= std::sqrt(oracle::sigma2(f, 2.0L));
  CHECK(std::abs(h.tail_rel - static_cast<double>(tail)) <= 1e-12);
  CHECK(h.tail_rel <= central_group_bound(1.0));
}

TEST_CASE("saturated truncation raises DegenerateGroup") {
  const auto f = CoefficientProfile::factorial(20);
  CHECK_THROWS_AS(central_group(f, 4.0, 1.0), Error);
  try {
    central_group(f, 4.0, 1.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateGroup);
  }
}

TEST_CASE("radial frame") {
  CHECK(tau_for_tail(1e-10) == doctest::Approx(23.72).epsilon(1e-3));
  const RadialFrame fr = radial_frame(two_term(), 0.0, 1e-3);
  REQUIRE(fr.weights.size() == 2);
  CHECK(fr.weights[0] == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(fr.weights[1] == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(fr.s == doctest::Approx(0.2).epsilon(1e-14));

  const auto f = CoefficientProfile::factorial(400);
  const RadialFrame g = radial_frame(f, 3.0, 1e-8);
  CHECK(g.weights.sum() >= 1 - 1e-16 - 1e-15);
  CHECK(g.weights.sum() <= 1 + 1e-14);
  CHECK(g.weights.sum() >= 1 - g.tail_rel * g.tail_rel - 1e-15);
  CHECK(g.k_lo <= g.nu);
  CHECK(g.nu <= g.k_hi);
}

TEST_CASE("normalize") {
  const auto p = CoefficientProfile::from_moduli({1.0, 0.25, 0.125});
  REQUIRE(p.normalized());
  const Normalization id = normalize(p);
  CHECK(id.shift == 0);
  CHECK(id.log_scale == 0.0);
  CHECK((id.profile.log_mags() - p.log_mags()).abs().maxCoeff() == 0.0);

  const auto q = CoefficientProfile::from_moduli({0.0, 0.0, 3.0, 3.0});
  const Normalization n = normalize(q);
  CHECK(n.shift == 2);
  CHECK(std::exp(n.log_scale) == doctest::Approx(2.0));
  CHECK(n.profile.k_max() == 1);
  CHECK(n.profile.log_mag(0) == 0.0);
  CHECK(std::exp(n.profile.log_mag(1)) == doctest::Approx(0.5));
  const Normalization again = normalize(n.profile);
  CHECK(again.shift == 0);
  CHECK(again.log_scale == 0.0);

  CHECK_THROWS_AS(normalize(CoefficientProfile::from_moduli({0.0, 2.0})), Error);
}

TEST_CASE("normalize is idempotent and satisfies the normal form") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto p = random_profile(seed, 12);
    const Normalization n = normalize(p);
    CHECK(n.profile.normalized());
    CHECK(n.profile.log_mag(0) == 0.0);
    double rest = 0;
    for (int k = 1; k <= n.profile.k_max(); ++k) rest += std::exp(n.profile.log_mag(k));
    CHECK(rest <= 0.5 + 1e-12);
    const Normalization n2 = normalize(n.profile);
    CHECK(n2.shift == 0);
    CHECK(n2.log_scale == 0.0);
    CHECK((n2.profile.log_mags() - n.profile.log_mags()).abs().maxCoeff() <= 1e-15);
  }
}

TEST_CASE("counts and s transform under normalization") {
  Eigen::ArrayXd lm(9);
  lm << -INFINITY, 0.4, 1.0, 0.2, -0.3, -1.0, -2.0, -3.5, -5.0;
  const auto p = CoefficientProfile::from_log(lm);
  const Normalization n = normalize(p);
  const auto xi = sample_signs(8, 77);
  SignAssignment tail;
  tail.values = xi.values.tail(8 - n.shift + 1);
  for (double u : {-0.3, 0.4, 1.1, 2.0}) {
    const double v = u + n.log_scale;
    CHECK(s_of_r(p, u) == doctest::Approx(s_of_r(n.profile, v) + n.shift).epsilon(1e-12));
    const auto roots = oracle::companion_roots(oracle::coefficients(p, xi));
    const int direct = oracle::count_inside(roots, u) + n.shift;
    CHECK(count_zeros(n.profile, tail, v).count + n.shift == direct);
  }
}

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(CoefficientProfile::from_moduli({0.0, 0.0}), Error);
  CHECK_THROWS_AS(CoefficientProfile::factorial(0), Error);
  CHECK(std::exp(build_regular(1.0, 1.0, 8).log_mag(0)) == doctest::Approx(1.0));
}
