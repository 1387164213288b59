#pragma once

#include "radezero/profile.hpp"
#include "radezero/sampling.hpp"

#include <cstdint>
#include <vector>

namespace radezero {

struct CorpusCase {
  int id;
  std::uint64_t seed;
  CoefficientProfile profile;
  SignAssignment signs;
  double u;
  /// min over all roots of | log|z| - u |.
  double log_gap;
};

struct CorpusOptions {
  int min_degree = 5;
  int max_degree = 15;
  double u_lo = -0.5;
  double u_hi = 1.0;
  /// Required relative distance between the circle and every root.
  double min_gap = 1e-3;
};

/// Seeded explicit polynomials with a_0 = 1, |a_k| uniform in [0.1, 1], random
/// phases, Rademacher signs, and a radius drawn until no root lies within
/// min_gap of the circle. Case i depends only on (seed, i).
std::vector<CorpusCase> make_corpus(int count, std::uint64_t seed, const CorpusOptions& opts = {});

CorpusCase make_corpus_case(int id, std::uint64_t seed, const CorpusOptions& opts = {});

}  // namespace radezero
