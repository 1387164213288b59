#include "doctest.h"

#include "radezero/error.hpp"
#include "radezero/sampling.hpp"
#include "radezero/serialize.hpp"

#include <cmath>
#include <set>
#include <vector>

using namespace radezero;

TEST_CASE("sample_signs is deterministic") {
  for (SignFamily f : {SignFamily::Rademacher, SignFamily::Steinhaus, SignFamily::Gaussian}) {
    const auto a = sample_signs(5, 0xdeadbeef, f);
    const auto b = sample_signs(5, 0xdeadbeef, f);
    CHECK(a.size() == 6);
    CHECK((a.values == b.values).all());
  }
  CHECK(!(sample_signs(40, 1).values == sample_signs(40, 2).values).all());
}

TEST_CASE("rademacher entries are exactly +-1 and balanced") {
  const int n = 100000, K = 7;
  std::vector<double> mean(K + 1, 0.0);
  for (int i = 0; i < n; ++i) {
    const auto s = sample_signs(K, derive_seed(99, static_cast<std::uint64_t>(i)));
    for (int k = 0; k <= K; ++k) {
      REQUIRE(s[k].imag() == 0.0);
      REQUIRE(std::abs(s[k].real()) == 1.0);
      mean[static_cast<std::size_t>(k)] += s[k].real() / n;
    }
  }
  for (double m : mean) CHECK(std::abs(m) <= 4 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("steinhaus has unit modulus, gaussian unit second moment") {
  const auto s = sample_signs(200, 5, SignFamily::Steinhaus);
  for (int k = 0; k < s.size(); ++k) CHECK(std::abs(s[k]) == doctest::Approx(1.0).epsilon(1e-15));
  const auto g = sample_signs(20000, 6, SignFamily::Gaussian);
  CHECK(g.values.abs2().mean() == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("enumeration order and size") {
  const auto e = enumerate_signs(2);
  REQUIRE(e.size() == 4);
  const std::vector<std::vector<double>> want{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  for (std::uint64_t i = 0; i < 4; ++i) {
    CHECK(e[i][0].real() == want[i][0]);
    CHECK(e[i][1].real() == want[i][1]);
  }
  CHECK(enumerate_signs(12).size() == 4096);
  CHECK(enumerate_signs(12, true).size() == 2048);
  CHECK_THROWS_AS(enumerate_signs(25), Error);
}

TEST_CASE("enumeration is complete without duplicates") {
  for (int K = 1; K <= 12; ++K) {
    const auto e = enumerate_signs(K);
    std::set<std::vector<int>> seen;
    for (std::uint64_t i = 0; i < e.size(); ++i) {
      std::vector<int> v;
      for (int k = 0; k < K; ++k) v.push_back(e[i][k].real() > 0 ? 1 : -1);
      seen.insert(v);
    }
    CHECK(seen.size() == (std::size_t{1} << K));
  }
  const auto pinned = enumerate_signs(6, true);
  for (std::uint64_t i = 0; i < pinned.size(); ++i) CHECK(pinned[i][0].real() == 1.0);
}

TEST_CASE("seed parsing") {
  CHECK(parse_seed("42") == 42u);
  CHECK(parse_seed("0x2a") == 42u);
  CHECK(parse_seed("0XFF") == 255u);
  CHECK_THROWS_AS(parse_seed("forty"), Error);
}

TEST_CASE("substreams differ and are order independent") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 5) == derive_seed(1, 5));
  CHECK(derive_seed(1, 5) != derive_seed(2, 5));
}
