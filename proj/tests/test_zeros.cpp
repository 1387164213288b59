#include "doctest.h"
#include "oracles.hpp"

#include "radezero/corpus.hpp"
#include "radezero/error.hpp"
#include "radezero/evaluate.hpp"
#include "radezero/roots.hpp"
#include "radezero/weight.hpp"
#include "radezero/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace radezero;

namespace {

CoefficientProfile half() { return CoefficientProfile::from_moduli({1.0, 0.5}); }
CoefficientProfile quarter_sq() { return CoefficientProfile::from_moduli({1.0, 0.0, 0.25}); }

}  // namespace

TEST_CASE("explicit small roots") {
  for (int sign : {1, -1}) {
    const auto s = SignAssignment::from_signs({1, sign});
    CHECK(count_zeros_winding(half(), s, std::log(2.0) - 0.01) == 0);
    CHECK(count_zeros_winding(half(), s, std::log(2.0) + 0.01) == 1);
  }
  CHECK(count_zeros_winding(quarter_sq(), SignAssignment::all_plus(3), std::log(3.0)) == 2);

  const ZeroReport r = locate_zeros(half(), SignAssignment::all_plus(2), std::log(3.0));
  REQUIRE(r.roots.size() == 1);
  CHECK(std::abs(r.roots[0].z - Complex(-2.0)) <= 1e-12);
  CHECK(r.roots[0].multiplicity == 1);
  CHECK(r.roots[0].residual <= 1e-8);

  const ZeroReport q = locate_zeros(quarter_sq(), SignAssignment::all_plus(3), std::log(3.0));
  REQUIRE(q.roots.size() == 2);
  std::vector<Complex> z{q.roots[0].z, q.roots[1].z};
  std::sort(z.begin(), z.end(), [](Complex a, Complex b) { return a.imag() < b.imag(); });
  CHECK(std::abs(z[0] - Complex(0, -2)) <= 1e-12);
  CHECK(std::abs(z[1] - Complex(0, 2)) <= 1e-12);
}

TEST_CASE("boundary roots use the retry protocol") {
  const ZeroReport r = count_zeros(half(), SignAssignment::all_plus(2), std::log(2.0));
  CHECK(r.perturbation == doctest::Approx(1e-6));
  CHECK(r.count == 1);
  ZeroOptions strict;
  strict.retry = false;
  CHECK_THROWS_AS(count_zeros(half(), SignAssignment::all_plus(2), std::log(2.0), strict), Error);
}

TEST_CASE("winding equals companion root count on seeded degree-15 cases") {
  CorpusOptions opts;
  opts.min_degree = 15;
  opts.max_degree = 15;
  for (int i = 0; i < 200; ++i) {
    const CorpusCase c = make_corpus_case(i, 515, opts);
    const auto roots = oracle::companion_roots(oracle::coefficients(c.profile, c.signs));
    REQUIRE(count_zeros_winding(c.profile, c.signs, c.u) == oracle::count_inside(roots, c.u));
  }
}

TEST_CASE("located roots match companion eigenvalues") {
  CorpusOptions opts;
  opts.min_degree = 15;
  opts.max_degree = 15;
  opts.u_lo = 1.5;
  opts.u_hi = 2.5;
  for (int i = 0; i < 20; ++i) {
    const CorpusCase c = make_corpus_case(i, 616, opts);
    const auto want = oracle::companion_roots(oracle::coefficients(c.profile, c.signs));
    const ZeroReport rep = locate_zeros(c.profile, c.signs, c.u);
    int total = 0;
    for (const RootEntry& r : rep.roots) {
      total += r.multiplicity;
      CHECK(r.residual <= 1e-8);
      double best = 1e300;
      for (const auto& w : want) best = std::min(best, std::abs(r.z - w));
      CHECK(best <= 1e-7 * std::max(1.0, std::abs(r.z)));
    }
    CHECK(total == oracle::count_inside(want, c.u));
    CHECK(total == rep.count);
  }
}

TEST_CASE("weighted count") {
  const ZeroReport r = locate_zeros(half(), SignAssignment::all_plus(2), std::log(3.0));
  CHECK(weighted_count(r, AngularWeight::constant()) == r.count);
  CHECK(std::abs(weighted_count(r, AngularWeight::raised_cosine())) <= 1e-15);

  CorpusOptions opts;
  opts.min_degree = 15;
  opts.max_degree = 15;
  const CorpusCase c = make_corpus_case(3, 717, opts);
  const ZeroReport rep = locate_zeros(c.profile, c.signs, c.u);
  const auto want = oracle::companion_roots(oracle::coefficients(c.profile, c.signs));
  double direct = 0;
  for (const auto& z : want) {
    if (std::abs(z) <= std::exp(c.u)) direct += 0.5 * (1 + std::cos(std::arg(z)));
  }
  CHECK(std::abs(weighted_count(rep, AngularWeight::raised_cosine()) - direct) <= 1e-12 * std::max(1.0, direct) + 1e-9);
}

TEST_CASE("origin roots are excluded from the weighted count") {
  const auto p = CoefficientProfile::from_moduli({0.0, 0.0, 1.0, 0.5});
  const ZeroReport r = locate_zeros(p, SignAssignment::all_plus(4), std::log(3.0));
  CHECK(r.count == 3);
  CHECK(r.roots.front().z == Complex(0.0));
  CHECK(r.roots.front().multiplicity == 2);
  CHECK(weighted_count(r, AngularWeight::constant()) == doctest::Approx(1.0));
}

TEST_CASE("integrated count") {
  const double eps = 1e-3;
  const auto plus = SignAssignment::all_plus(2);
  CHECK(integrated_count(half(), plus, std::log(2.0) + eps, std::log(4.0)) ==
        doctest::Approx(std::log(2.0) - eps).epsilon(1e-12));
  CHECK(integrated_count(half(), plus, std::log(2.5), std::log(3.5)) ==
        doctest::Approx(std::log(3.5 / 2.5)).epsilon(1e-12));
  CHECK(integrated_count(half(), plus, 0.0, 0.5) == 0.0);

  CorpusOptions opts;
  opts.min_degree = 10;
  opts.max_degree = 10;
  const CorpusCase c = make_corpus_case(1, 818, opts);
  const double u1 = c.u - 1.0, u2 = c.u;
  const int n = 10000;
  double trap = 0;
  int prev = count_zeros(c.profile, c.signs, u1).count;
  for (int j = 1; j <= n; ++j) {
    const int cur = count_zeros(c.profile, c.signs, u1 + (u2 - u1) * j / n).count;
    trap += 0.5 * (prev + cur) * (u2 - u1) / n;
    prev = cur;
  }
  CHECK(std::abs(integrated_count(c.profile, c.signs, u1, u2) - trap) <= 1e-3);
}

TEST_CASE("count invariants") {
  CorpusOptions opts;
  opts.min_degree = 12;
  opts.max_degree = 12;
  for (int i = 0; i < 10; ++i) {
    const CorpusCase c = make_corpus_case(i, 919, opts);
    int prev = 0;
    for (double u = -1.0; u <= 3.0; u += 0.1) {
      const ZeroReport r = count_zeros(c.profile, c.signs, u);
      CHECK(r.count >= prev);
      CHECK(r.count >= 0);
      CHECK(r.count <= r.effective_degree);
      CHECK(count_zeros(c.profile, c.signs.negated(), u).count == r.count);
      prev = r.count;
    }
  }
}

TEST_CASE("Aberth on a large banded polynomial") {
  const auto f = CoefficientProfile::factorial(600);
  const auto xi = sample_signs(600, 21);
  const ZeroReport r = locate_zeros(f, xi, 5.0);
  CHECK(r.count == count_zeros(f, xi, 5.0).count);
  for (const RootEntry& e : r.roots) CHECK(e.residual <= 1e-8);
}

TEST_CASE("Newton polygon guesses follow the hull") {
  Eigen::ArrayXd lm(4);
  lm << 0.0, -std::log(2.0), -2 * std::log(2.0) - 10, -3 * std::log(2.0);
  const auto g = newton_polygon_guesses(lm);
  REQUIRE(g.size() == 3);
  for (const Complex& z : g) CHECK(std::abs(z) == doctest::Approx(2.0));
}
