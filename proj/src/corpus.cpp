#include "radezero/corpus.hpp"

#include "radezero/error.hpp"
#include "radezero/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace radezero {

CorpusCase make_corpus_case(int id, std::uint64_t seed, const CorpusOptions& opts) {
  if (opts.min_degree < 1 || opts.max_degree < opts.min_degree) {
    throw Error(ErrorCode::InvalidArgument, "bad corpus degree range");
  }
  const std::uint64_t case_seed = derive_seed(seed, static_cast<std::uint64_t>(id));
  std::mt19937_64 gen(case_seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    const int span = opts.max_degree - opts.min_degree + 1;
    const int d = opts.min_degree + static_cast<int>(uniform01(gen) * span);
    Eigen::ArrayXd lm(d + 1), ph(d + 1);
    lm[0] = 0.0;
    ph[0] = 0.0;
    for (int k = 1; k <= d; ++k) {
      lm[k] = std::log(0.1 + 0.9 * uniform01(gen));
      ph[k] = std::numbers::pi * (2 * uniform01(gen) - 1);
    }
    CoefficientProfile profile = CoefficientProfile::from_log(lm, ph);
    SignAssignment signs = sample_signs(d, derive_seed(case_seed, 1));

    Eigen::ArrayXd slm(d + 1), sph(d + 1);
    for (int k = 0; k <= d; ++k) {
      slm[k] = lm[k];
      sph[k] = ph[k] + std::arg(signs[k]);
    }
    LogPolynomial poly(slm, sph);
    const AberthResult roots = aberth_roots(poly);
    if (!roots.converged) continue;
    for (int draw = 0; draw < 20; ++draw) {
      const double u = opts.u_lo + (opts.u_hi - opts.u_lo) * uniform01(gen);
      double gap = std::numeric_limits<double>::infinity();
      for (Complex z : roots.roots) gap = std::min(gap, std::abs(std::log(std::abs(z)) - u));
      if (gap >= 1.5 * opts.min_gap) return {id, case_seed, std::move(profile), std::move(signs), u, gap};
    }
  }
  throw Error(ErrorCode::NoConvergence, "could not draw corpus case " + std::to_string(id));
}

std::vector<CorpusCase> make_corpus(int count, std::uint64_t seed, const CorpusOptions& opts) {
  std::vector<CorpusCase> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) out.push_back(make_corpus_case(i, seed, opts));
  return out;
}

}  // namespace radezero
