// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "oracles.hpp"

#include "radezero/constructions.hpp"
#include "radezero/corpus.hpp"
#include "radezero/error.hpp"
#include "radezero/experiments.hpp"
#include "radezero/jensen.hpp"
#include "radezero/profile.hpp"
#include "radezero/serialize.hpp"
#include "radezero/zeros.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace radezero;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::string kConfigs = RADEZERO_CONFIG_DIR;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& check) {
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("threw ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("criterion %2d %s  %s: %s\n", id, o.pass ? "PASS" : "FAIL", title.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

const ExperimentReport& part(const ExperimentReport& campaign, const std::string& name) {
  for (const ExperimentReport& p : campaign.parts) {
    if (p.statistics.value("name", std::string()) == name) return p;
  }
  throw Error(ErrorCode::InvalidArgument, "campaign has no part '" + name + "'");
}

std::string campaign_bytes(const ExperimentReport& c) {
  std::string s = c.to_json().dump(2);
  for (const ExperimentReport& p : c.parts) s += p.csv();
  return s;
}

}  // namespace

int main() {
  report(1, "Jensen identity", [] {
    const auto t0 = Clock::now();
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      const CorpusCase c = make_corpus_case(i, 0x5EED0001);
      worst = std::max(worst, jensen_residual(c.profile, c.signs, c.u));
    }
    const double t = seconds_since(t0);
    return Outcome{worst <= 1e-7 && t < 60, fmt("max residual %.3g (<= 1e-7), %.1f s (< 60 s)", worst, t)};
  });

  report(2, "weighted Jensen", [] {
    const std::vector<AngularWeight> weights{
        AngularWeight::raised_cosine(), AngularWeight::off_axis(), AngularWeight::fejer(4, 0.3),
        AngularWeight::fejer(8, 1.1),
        AngularWeight({0.5, 0.1, -0.05, 0.04, 0.03, -0.02, 0.02, 0.01, 0.01},
                      {0.08, 0.05, -0.03, 0.02, 0.02, -0.01, 0.01, 0.005})};
    CorpusOptions opts;
    opts.max_degree = 8;
    double worst = 0, collapse = 0;
    for (int i = 0; i < 50; ++i) {
      const CorpusCase c = make_corpus_case(i, 0x5EED0002, opts);
      for (const AngularWeight& w : weights) {
        if (w.degree() > 8) throw Error(ErrorCode::InvalidArgument, "weight degree above 8");
        worst = std::max(worst, jensen_weighted_residual(c.profile, c.signs, w, c.u));
      }
      collapse = std::max(collapse, std::abs(jensen_weighted_residual(c.profile, c.signs, AngularWeight::constant(), c.u) -
                                             jensen_residual(c.profile, c.signs, c.u)));
    }
    return Outcome{worst <= 1e-5 && collapse <= 1e-12,
                   fmt("max residual %.3g (<= 1e-5), constant-weight gap %.3g (<= 1e-12)", worst, collapse)};
  });

  report(3, "integrated-count identities, exhaustive K=10", [] {
    const CoefficientProfile p = load_profile(kConfigs + "/poly10.json");
    std::vector<SignAssignment> ens;
    const SignEnumeration e = enumerate_signs(p.k_max() + 1, true);
    for (std::uint64_t i = 0; i < e.size(); ++i) ens.push_back(e[i]);
    double worst_mean = 0, worst_path = 0;
    for (const AngularWeight& w : {AngularWeight::constant(), AngularWeight::raised_cosine()}) {
      const Lemma41Result r = lemma41_residuals(p, ens, w, 0.5, 2.0);
      worst_mean = std::max(worst_mean, r.res_mean);
      worst_path = std::max(worst_path, r.res_pathwise);
    }
    return Outcome{worst_mean <= 1e-5 && worst_path <= 1e-5,
                   fmt("%.0f patterns, mean residual %.3g, pathwise residual %.3g (<= 1e-5)",
                       static_cast<double>(ens.size()), worst_mean, worst_path)};
  });

  report(4, "winding and located-root counts agree", [] {
    int mismatches = 0, companion = 0;
    for (int i = 0; i < 200; ++i) {
      const CorpusCase c = make_corpus_case(i, 0x5EED0004);
      const int w = count_zeros_winding(c.profile, c.signs, c.u);
      const ZeroReport r = locate_zeros(c.profile, c.signs, c.u);
      int located = 0;
      for (const RootEntry& z : r.roots) located += z.multiplicity;
      if (w != located || w != r.count) ++mismatches;
      if (w != oracle::count_inside(oracle::companion_roots(oracle::coefficients(c.profile, c.signs)), c.u)) ++companion;
    }
    return Outcome{mismatches == 0 && companion == 0,
                   fmt("%.0f mismatches, %.0f disagreements with companion eigenvalues (200 cases)",
                       static_cast<double>(mismatches), static_cast<double>(companion))};
  });

  report(5, "central-group tail bound", [] {
    std::mt19937_64 gen(0x5EED0005);
    int violations = 0;
    double worst_diff = 0;
    for (int i = 0; i < 100; ++i) {
      CoefficientProfile p = CoefficientProfile::factorial(10);
      double u = 0;
      switch (i % 3) {
        case 0: {
          const int K = 200 + static_cast<int>(1800 * uniform01(gen));
          p = CoefficientProfile::factorial(K);
          u = -2 + (std::log(K / 4.0) + 2) * uniform01(gen);
          break;
        }
        case 1: {
          p = build_regular(0.5 + 2 * uniform01(gen), 0.5 + uniform01(gen), 400);
          u = -1 + 4 * uniform01(gen);
          break;
        }
        default: {
          std::vector<double> m(41);
          for (int k = 0; k <= 40; ++k) m[static_cast<std::size_t>(k)] = std::exp(-0.5 * k * std::log(k + 1.0) * (0.5 + uniform01(gen)));
          p = CoefficientProfile::from_moduli(m);
          u = -1 + 3 * uniform01(gen);
        }
      }
      const double tau = 0.3 + 4.7 * uniform01(gen);
      const CentralGroup g = central_group(p, u, tau);
      if (g.tail_rel > central_group_bound(tau)) ++violations;

      // Direct long double summation with a brute-force central index.
      auto argmax = [&](double v) {
        int best = 0;
        for (int k = 1; k <= p.k_max(); ++k) {
          if (p.log_mag(k) + k * v >= p.log_mag(best) + best * v) best = k;
        }
        return best;
      };
      const int lo = argmax(u - tau), hi = argmax(u + tau);
      long double tail = 0;
      const long double ls = oracle::log_sigma(p, u);
      for (int k = 0; k <= p.k_max(); ++k) {
        if (k >= lo && k <= hi) continue;
        tail += std::exp(static_cast<long double>(p.log_mag(k)) + k * static_cast<long double>(u) - ls);
      }
      worst_diff = std::max(worst_diff, static_cast<double>(std::abs(tail - g.tail_rel)));
    }
    return Outcome{violations == 0 && worst_diff <= 1e-12,
                   fmt("%.0f violations of 2/(e^tau-1), max |tail - direct| %.3g (<= 1e-12)",
                       static_cast<double>(violations), worst_diff)};
  });

  report(6, "central-dominant schedule", [] {
    const auto t0 = Clock::now();
    const CentralDominant cd = build_central_dominant(10.0, 10, 800.0);
    const SignEnumeration e = enumerate_signs(11);
    int wrong = 0;
    for (std::uint64_t i = 0; i < e.size(); ++i) {
      const SignAssignment s = e[i];
      for (const ScheduleEntry& se : cd.schedule) {
        if (count_zeros_winding(cd.profile, s, se.u) != se.k) ++wrong;
      }
    }
    const double t = seconds_since(t0);
    return Outcome{wrong == 0 && t < 300,
                   fmt("%.0f wrong counts over 2048 patterns x 11 radii, %.1f s (< 300 s)", static_cast<double>(wrong), t)};
  });

  std::printf("running the reference campaign with 1 and 8 jobs\n");
  std::fflush(stdout);
  const Json campaign_cfg = read_json_file(kConfigs + "/campaign.json");
  ExperimentReport serial, parallel;
  std::string campaign_error;
  try {
    RunOptions one, eight;
    eight.jobs = 8;
    serial = run_config(campaign_cfg, one, kConfigs);
    parallel = run_config(campaign_cfg, eight, kConfigs);
  } catch (const std::exception& e) {
    campaign_error = e.what();
  }
  auto need_campaign = [&] {
    if (!campaign_error.empty()) throw Error(ErrorCode::InvalidArgument, "campaign failed: " + campaign_error);
  };

  report(7, "lacunary contrast", [&] {
    need_campaign();
    const ExperimentReport& r = part(serial, "lacunary contrast");
    double in_e = 0, out_e = 0;
    for (const Json& g : r.statistics["grid"]) {
      double& slot = g["in_E"].get<int>() != 0 ? in_e : out_e;
      slot = std::max(slot, g["max_ratio"].get<double>());
    }
    return Outcome{in_e > 2 * out_e, fmt("max ratio in E %.3f, outside E %.3f, contrast %.2f (> 2)", in_e, out_e, in_e / out_e)};
  });

  report(8, "exact-expectation closure, K=12", [&] {
    need_campaign();
    const Json cfg = read_json_file(kConfigs + "/bruteforce_k12.json");
    const ExperimentReport a = run_config(cfg, {}, kConfigs);
    const ExperimentReport b = run_config(cfg, {}, kConfigs);
    const bool identical = a.to_json().dump() == b.to_json().dump() && a.csv() == b.csv();
    const ExperimentReport& mc = part(serial, "degree 12 Monte Carlo");
    const Json& exact = a.statistics["grid"];
    const Json& est = mc.statistics["grid"];
    if (exact.size() != est.size()) throw Error(ErrorCode::InvalidArgument, "grids differ");
    double worst = 0;
    for (std::size_t g = 0; g < exact.size(); ++g) {
      if (exact[g]["u"] != est[g]["u"]) throw Error(ErrorCode::InvalidArgument, "grids differ");
      const double z = std::abs(est[g]["mean_abs_deviation"].get<double>() - exact[g]["mean_abs_deviation"].get<double>()) /
                       est[g]["se_abs_deviation"].get<double>();
      worst = std::max(worst, z);
    }
    return Outcome{identical && worst <= 3,
                   std::string(identical ? "repeats byte-identical" : "repeats DIFFER") +
                       fmt(", max |MC - exact| / SE %.2f (<= 3)", worst)};
  });

  report(9, "equidistribution trend", [&] {
    need_campaign();
    const ExperimentReport& r = part(serial, "factorial equidistribution");
    std::vector<double> v;
    std::string detail = "mean |n(phi)/n - 1/2| at u=";
    for (const Json& g : r.statistics["grid"]) {
      v.push_back(g["equidistribution"].get<double>());
      detail += fmt("%g: %.4f ", g["u"].get<double>(), v.back());
    }
    bool decreasing = v.size() == 3;
    for (std::size_t i = 1; i < v.size(); ++i) decreasing = decreasing && v[i] < v[i - 1];
    return Outcome{decreasing && v.back() < 0.1, detail + "(decreasing, final < 0.1)"};
  });

  report(10, "moment sanity", [&] {
    need_campaign();
    const ExperimentReport& r = part(serial, "log-integrability moments");
    const Json& st = r.statistics;
    const bool finite = st["all_finite"].get<bool>();
    const bool tails = st["tails_non_increasing"].get<bool>();
    const double z = st["max_z_score"].get<double>();
    const double samples = st["ensemble"]["size"].get<double>();
    const double exhaustive = st["exhaustive_size"].get<double>();
    double max_p = 0;
    for (const Json& m : st["moments"]) max_p = std::max(max_p, m["p"].get<double>());
    const bool pass = finite && tails && z <= 3 && samples == 2000 && exhaustive == 1024 && max_p == 8;
    return Outcome{pass, std::string(finite ? "finite" : "NOT finite") + ", tails " +
                             (tails ? "non-increasing" : "INCREASE") +
                             fmt(", max z %.2f (<= 3) over %.0f samples vs %.0f exhaustive", z, samples, exhaustive)};
  });

  report(11, "determinism, 1 vs 8 jobs", [&] {
    need_campaign();
    const bool same = campaign_bytes(serial) == campaign_bytes(parallel);
    return Outcome{same, same ? "campaign JSON and CSVs byte-identical" : "campaign outputs differ"};
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
