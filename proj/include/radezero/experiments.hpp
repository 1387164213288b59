#pragma once

#include "radezero/profile.hpp"
#include "radezero/sampling.hpp"
#include "radezero/serialize.hpp"
#include "radezero/weight.hpp"
#include "radezero/zeros.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace radezero {

/// Runs fn(i) for i in [0, n) on up to `jobs` threads (jobs <= 0: one per
/// logical core) and returns the results in index order. If any call throws,
/// the exception of the lowest failing index is rethrown after all workers
/// finish, so failures do not depend on scheduling either.
template <typename Fn>
auto parallel_map(std::size_t n, int jobs, Fn&& fn) {
  using R = std::decay_t<std::invoke_result_t<Fn&, std::size_t>>;
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t threads = jobs > 0 ? static_cast<std::size_t>(jobs) : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(n, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct EnsembleSpec {
  std::uint64_t seed = 1;
  int samples = 100;
  SignFamily family = SignFamily::Rademacher;
  /// Every Rademacher pattern with xi_0 = +1 instead of seeded draws.
  bool exhaustive = false;
};

std::size_t ensemble_size(const EnsembleSpec& spec, int K);
/// Seeded member i uses sample_signs(K, derive_seed(seed, i)); exhaustive
/// member i is enumeration index i.
SignAssignment ensemble_member(const EnsembleSpec& spec, int K, std::size_t i);

struct RunOptions {
  int jobs = 1;
  /// Counts are cross-checked against located roots when the effective degree
  /// is at most this.
  int root_degree_cap = 64;
  ZeroOptions zeros;
};

struct ExperimentReport {
  std::string kind;
  std::string config_hash;
  Json config;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  Json statistics;
  std::vector<ExperimentReport> parts;
  double runtime_seconds = 0.0;

  /// Everything except the runtime, which would break byte-identical reruns.
  Json to_json() const;
  std::string csv() const;
};

ExperimentReport run_theorem1_check(const CoefficientProfile& profile, double gamma, const std::vector<double>& u_grid,
                                    const EnsembleSpec& ensemble, const RunOptions& opts = {});

ExperimentReport run_theorem2_check(const CoefficientProfile& profile, const AngularWeight& phi, double gamma,
                                    double q, const std::vector<double>& u_grid, const EnsembleSpec& ensemble,
                                    const RunOptions& opts = {});

struct MomentOptions {
  std::vector<double> p_list{1, 2, 4, 6, 8};
  std::vector<double> lambda_grid{0.5, 1, 2, 3, 5, 7.5, 10};
  int theta_grid = 4096;
  /// Also average over every sign pattern (needs K <= 20).
  bool exhaustive_check = false;
  double tol = 1e-7;
};

ExperimentReport run_moment_study(const CoefficientProfile& profile, const std::vector<double>& u_list,
                                  const EnsembleSpec& ensemble, const MomentOptions& moments,
                                  const RunOptions& opts = {});

/// Exact averages over all 2^K sign patterns with xi_0 = +1 (K = K_max <= 20).
ExperimentReport run_expectation_bruteforce(const CoefficientProfile& profile, const std::vector<double>& u_grid,
                                            const AngularWeight* phi, const RunOptions& opts = {});

/// {"start", "stop", "step"} or an explicit array.
std::vector<double> parse_grid(const Json& j);

/// Dispatches on config["kind"]: theorem1, theorem2, moments, bruteforce or
/// campaign (a list of configs under "parts"). Relative profile and part paths
/// are resolved against base_dir. seed_override replaces every ensemble seed.
ExperimentReport run_config(const Json& config, const RunOptions& opts, const std::string& base_dir = ".",
                            std::optional<std::uint64_t> seed_override = std::nullopt);

}  // namespace radezero
