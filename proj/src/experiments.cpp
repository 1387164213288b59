#include "radezero/experiments.hpp"

#include "radezero/error.hpp"
#include "radezero/evaluate.hpp"
#include "radezero/ladders.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <limits>
#include <numbers>
#include <sstream>

namespace radezero {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double mean_of(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return x.empty() ? kNaN : s / static_cast<double>(x.size());
}

// Standard error of the mean.
double std_error(const std::vector<double>& x) {
  if (x.size() < 2) return 0.0;
  const double m = mean_of(x);
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(x.size() - 1) / static_cast<double>(x.size()));
}

Json ensemble_json(const EnsembleSpec& spec, int K) {
  Json j;
  j["family"] = std::string(sign_family_name(spec.family));
  j["exhaustive"] = spec.exhaustive;
  j["size"] = ensemble_size(spec, K);
  if (!spec.exhaustive) {
    j["seed"] = spec.seed;
    Json seeds = Json::array();
    for (std::size_t i = 0; i < ensemble_size(spec, K); ++i) seeds.push_back(derive_seed(spec.seed, i));
    j["sample_seeds"] = std::move(seeds);
  }
  return j;
}

std::optional<ExceptionalLadder> covering_ladder(const CoefficientProfile& profile, LadderMode mode, double u_max) {
  const int first = mode == LadderMode::Thm1 ? 2 : 3;
  int last = first - 1;
  for (int k = first; k < 100000; ++k) {
    try {
      const double u = solve_level(profile, mode, static_cast<double>(k) * k);
      last = k;
      if (u > u_max) break;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Saturated || e.code() == ErrorCode::OutOfRange) break;
      throw;
    }
  }
  if (last < first) return std::nullopt;
  return build_ladder(profile, mode, first, last);
}

struct LadderFlag {
  int in_e;
  int covered;
};

LadderFlag ladder_flag(const std::optional<ExceptionalLadder>& ladder, double u) {
  if (!ladder || u < 0 || u > ladder->u_end()) return {0, 0};
  return {in_exceptional(*ladder, u).in_set ? 1 : 0, 1};
}

struct Cell {
  int n;
  double n_phi;
  double margin;
  int agree;
};

ZeroOptions no_retry(ZeroOptions z) {
  z.retry = false;
  return z;
}

// Winding counts on the grid, cross-checked against located roots when the
// effective degree allows it.
std::vector<Cell> winding_cells(const CoefficientProfile& profile, const SignAssignment& signs,
                                const std::vector<double>& grid, const RunOptions& opts) {
  std::vector<Cell> cells;
  cells.reserve(grid.size());
  for (double u : grid) {
    const ZeroReport r = count_zeros(profile, signs, u, opts.zeros);
    int agree = 0;
    if (r.effective_degree <= opts.root_degree_cap) {
      const ZeroReport loc = locate_zeros(profile, signs, r.u, no_retry(opts.zeros));
      if (loc.count != r.count) throw Error(ErrorCode::RootFindingFailure, "winding and root counts differ");
      agree = 1;
    }
    cells.push_back({r.count, kNaN, r.margin, agree});
  }
  return cells;
}

// Roots located once on the largest disk; every grid radius also gets a
// winding count that must match the roots inside it.
std::vector<Cell> root_cells(const CoefficientProfile& profile, const SignAssignment& signs,
                             const std::vector<double>& grid, const AngularWeight& phi, const RunOptions& opts) {
  const double u_top = *std::max_element(grid.begin(), grid.end());
  ZeroReport loc = locate_zeros(profile, signs, u_top, opts.zeros);
  std::vector<Cell> cells;
  cells.reserve(grid.size());
  for (double u : grid) {
    const ZeroReport r = count_zeros(profile, signs, u, opts.zeros);
    if (r.u > loc.u) loc = locate_zeros(profile, signs, r.u, no_retry(opts.zeros));
    const int n_roots = count_in_disk(loc, r.u);
    if (n_roots != r.count) {
      throw Error(ErrorCode::RootFindingFailure, "winding count " + std::to_string(r.count) + " but " +
                                                     std::to_string(n_roots) + " located roots at u=" +
                                                     std::to_string(r.u));
    }
    ZeroReport view = loc;
    view.u = r.u;
    cells.push_back({r.count, weighted_count(view, phi), r.margin, 1});
  }
  return cells;
}

}  // namespace

std::size_t ensemble_size(const EnsembleSpec& spec, int K) {
  if (spec.exhaustive) return enumerate_signs(K + 1, true).size();
  if (spec.samples < 1) throw Error(ErrorCode::InvalidArgument, "ensemble needs at least one sample");
  return static_cast<std::size_t>(spec.samples);
}

SignAssignment ensemble_member(const EnsembleSpec& spec, int K, std::size_t i) {
  if (spec.exhaustive) return enumerate_signs(K + 1, true)[i];
  return sample_signs(K, derive_seed(spec.seed, i), spec.family);
}

Json ExperimentReport::to_json() const {
  Json j;
  j["kind"] = kind;
  j["config_hash"] = config_hash;
  j["config"] = config;
  j["columns"] = columns;
  j["row_count"] = rows.size();
  j["statistics"] = statistics;
  if (!parts.empty()) {
    Json p = Json::array();
    for (const ExperimentReport& r : parts) p.push_back(r.to_json());
    j["parts"] = std::move(p);
  }
  return j;
}

std::string ExperimentReport::csv() const {
  std::ostringstream out;
  write_csv(out, columns, rows);
  return out.str();
}

ExperimentReport run_theorem1_check(const CoefficientProfile& profile, double gamma, const std::vector<double>& u_grid,
                                    const EnsembleSpec& ensemble, const RunOptions& opts) {
  if (!(gamma > 0.5)) throw Error(ErrorCode::InvalidArgument, "gamma must exceed 1/2");
  if (u_grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty radius grid");
  const auto t0 = Clock::now();
  const int K = profile.k_max();
  const std::size_t n = ensemble_size(ensemble, K);
  const double u_max = *std::max_element(u_grid.begin(), u_grid.end());
  const auto ladder = covering_ladder(profile, LadderMode::Thm1, u_max);

  const auto cells = parallel_map(n, opts.jobs, [&](std::size_t i) {
    return winding_cells(profile, ensemble_member(ensemble, K, i), u_grid, opts);
  });

  ExperimentReport rep;
  rep.kind = "theorem1";
  rep.columns = {"sample", "u", "in_E", "n_F", "s_F", "deviation", "ratio", "margin", "roots_checked"};
  Json grid = Json::array();
  double c_out = 0.0, c_in = 0.0, c_mean = 0.0;
  long confirmed = 0, winding_only = 0;
  for (std::size_t g = 0; g < u_grid.size(); ++g) {
    const double u = u_grid[g];
    const double s = s_of_r(profile, u);
    const double scale = std::pow(s, gamma);
    const LadderFlag flag = ladder_flag(ladder, u);
    std::vector<double> dev(n), ratio(n), counts(n);
    double min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const Cell& c = cells[i][g];
      counts[i] = c.n;
      dev[i] = std::abs(c.n - s);
      ratio[i] = dev[i] / scale;
      min_margin = std::min(min_margin, c.margin);
      (c.agree ? confirmed : winding_only)++;
      rep.rows.push_back({static_cast<double>(i), u, static_cast<double>(flag.in_e), static_cast<double>(c.n), s, dev[i],
                          ratio[i], c.margin, static_cast<double>(c.agree)});
    }
    const double max_ratio = *std::max_element(ratio.begin(), ratio.end());
    const double mean_ratio = mean_of(dev) / scale;
    if (flag.in_e) {
      c_in = std::max(c_in, max_ratio);
    } else {
      c_out = std::max(c_out, max_ratio);
      c_mean = std::max(c_mean, mean_ratio);
    }
    grid.push_back({{"u", u},
                    {"in_E", flag.in_e},
                    {"ladder_covered", flag.covered},
                    {"s_F", s},
                    {"mean_n_F", mean_of(counts)},
                    {"mean_abs_deviation", mean_of(dev)},
                    {"se_abs_deviation", std_error(dev)},
                    {"max_abs_deviation", *std::max_element(dev.begin(), dev.end())},
                    {"mean_ratio", mean_ratio},
                    {"max_ratio", max_ratio},
                    {"min_margin", min_margin}});
  }
  Json& st = rep.statistics;
  st["gamma"] = gamma;
  st["ensemble"] = ensemble_json(ensemble, K);
  st["grid"] = std::move(grid);
  st["C_hat"] = c_out;
  st["C_hat_in_E"] = c_in;
  st["C_hat_mean"] = c_mean;
  st["contrast"] = c_out > 0 ? c_in / c_out : kNaN;
  st["ladder"] = ladder ? ladder_to_json(*ladder) : Json(nullptr);
  st["method_agreement"] = {{"roots_checked", confirmed}, {"winding_only", winding_only}};
  rep.runtime_seconds = seconds_since(t0);
  return rep;
}

ExperimentReport run_theorem2_check(const CoefficientProfile& profile, const AngularWeight& phi, double gamma,
                                    double q, const std::vector<double>& u_grid, const EnsembleSpec& ensemble,
                                    const RunOptions& opts) {
  if (!(gamma > 0.5)) throw Error(ErrorCode::InvalidArgument, "gamma must exceed 1/2");
  if (!(q > 1)) throw Error(ErrorCode::InvalidArgument, "q must exceed 1");
  if (u_grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty radius grid");
  const auto t0 = Clock::now();
  const int K = profile.k_max();
  const std::size_t n = ensemble_size(ensemble, K);
  const double u_max = *std::max_element(u_grid.begin(), u_grid.end());
  const auto ladder = covering_ladder(profile, LadderMode::Thm2, u_max);
  const double phi_norm = phi.second_derivative_norm(q);
  const double avg = phi.mean();

  const auto cells = parallel_map(n, opts.jobs, [&](std::size_t i) {
    return root_cells(profile, ensemble_member(ensemble, K, i), u_grid, phi, opts);
  });

  ExperimentReport rep;
  rep.kind = "theorem2";
  rep.columns = {"sample", "u", "in_E", "n_F", "n_F_phi", "s_F", "phi_mean_s_F", "margin"};
  Json grid = Json::array();
  double c_ii = 0.0, c_i = 0.0;
  for (std::size_t g = 0; g < u_grid.size(); ++g) {
    const double u = u_grid[g];
    const double s = s_of_r(profile, u);
    const double denom = (1 + phi_norm) * (std::pow(s, gamma) + std::max(u, 0.0));
    const LadderFlag flag = ladder_flag(ladder, u);
    std::vector<double> nphi(n), dev(n), equi;
    for (std::size_t i = 0; i < n; ++i) {
      const Cell& c = cells[i][g];
      nphi[i] = c.n_phi;
      dev[i] = std::abs(c.n_phi - avg * s);
      if (c.n > 0) equi.push_back(std::abs(c.n_phi / c.n - avg));
      rep.rows.push_back({static_cast<double>(i), u, static_cast<double>(flag.in_e), static_cast<double>(c.n), c.n_phi,
                          s, avg * s, c.margin});
    }
    const double mean_nphi = mean_of(nphi);
    double max_pathwise = 0.0;
    for (double v : nphi) max_pathwise = std::max(max_pathwise, std::abs(v - mean_nphi) / denom);
    const double ratio_ii = mean_of(dev) / denom;
    if (!flag.in_e) {
      c_ii = std::max(c_ii, ratio_ii);
      c_i = std::max(c_i, max_pathwise);
    }
    grid.push_back({{"u", u},
                    {"in_E", flag.in_e},
                    {"ladder_covered", flag.covered},
                    {"s_F", s},
                    {"mean_n_F_phi", mean_nphi},
                    {"mean_abs_deviation", mean_of(dev)},
                    {"ratio_mean", ratio_ii},
                    {"ratio_pathwise_max", max_pathwise},
                    {"equidistribution", equi.empty() ? kNaN : mean_of(equi)},
                    {"samples_with_zeros", equi.size()}});
  }
  Json& st = rep.statistics;
  st["gamma"] = gamma;
  st["q"] = q;
  st["phi"] = weight_to_json(phi);
  st["phi_second_derivative_norm"] = phi_norm;
  st["ensemble"] = ensemble_json(ensemble, K);
  st["grid"] = std::move(grid);
  st["C_hat_mean"] = c_ii;
  st["C_hat_pathwise"] = c_i;
  st["ladder"] = ladder ? ladder_to_json(*ladder) : Json(nullptr);
  st["method_agreement"] = {{"roots_checked", n * u_grid.size()}, {"winding_only", 0}};
  rep.runtime_seconds = seconds_since(t0);
  return rep;
}

ExperimentReport run_moment_study(const CoefficientProfile& profile, const std::vector<double>& u_list,
                                  const EnsembleSpec& ensemble, const MomentOptions& moments, const RunOptions& opts) {
  for (double p : moments.p_list) {
    if (!(p >= 1 && p <= 8)) throw Error(ErrorCode::InvalidArgument, "moment orders must lie in [1, 8]");
  }
  if (u_list.empty() || moments.p_list.empty()) throw Error(ErrorCode::InvalidArgument, "empty moment study");
  const auto t0 = Clock::now();
  const int K = profile.k_max();
  const auto P = static_cast<Eigen::Index>(moments.p_list.size());
  const std::size_t L = moments.lambda_grid.size();
  const int G = moments.theta_grid;

  struct SampleMoments {
    std::vector<Eigen::ArrayXd> moment;      // per u: E_theta |X|^p for each p
    std::vector<std::vector<double>> tail;   // per u: fraction of theta with |X| > lambda
  };
  auto one = [&](const SignAssignment& signs) {
    SampleMoments out;
    for (double u : u_list) {
      const CircleSeries series(profile, signs, u);
      QuadratureOptions qo = circle_quadrature(series, moments.tol);
      qo.relative = true;
      const auto r = angular_mean(
          [&](double th) {
            const double x = std::abs(series.log_abs(th));
            Eigen::ArrayXd v(P);
            for (Eigen::Index j = 0; j < P; ++j) v[j] = std::pow(x, moments.p_list[static_cast<std::size_t>(j)]);
            return v;
          },
          qo);
      out.moment.push_back(r.value);
      std::vector<double> tail(L, 0.0);
      for (int t = 0; t < G; ++t) {
        const double x = std::abs(series.log_abs(-std::numbers::pi + 2 * std::numbers::pi * (t + 0.5) / G));
        for (std::size_t l = 0; l < L; ++l) {
          if (x > moments.lambda_grid[l]) tail[l] += 1.0 / G;
        }
      }
      out.tail.push_back(std::move(tail));
    }
    return out;
  };

  const std::size_t n = ensemble_size(ensemble, K);
  const auto mc = parallel_map(n, opts.jobs, [&](std::size_t i) { return one(ensemble_member(ensemble, K, i)); });
  std::vector<SampleMoments> exact;
  if (moments.exhaustive_check) {
    EnsembleSpec all = ensemble;
    all.exhaustive = true;
    exact = parallel_map(ensemble_size(all, K), opts.jobs, [&](std::size_t i) { return one(ensemble_member(all, K, i)); });
  }

  ExperimentReport rep;
  rep.kind = "moments";
  rep.columns = {"u", "p", "mc_mean", "mc_se", "exact_mean", "z_score", "C_fit"};
  Json table = Json::array();
  double c_fit = 0.0, max_z = 0.0;
  bool finite = true;
  bool tails_monotone = true;
  Json tails = Json::array();
  for (std::size_t g = 0; g < u_list.size(); ++g) {
    for (Eigen::Index j = 0; j < P; ++j) {
      const double p = moments.p_list[static_cast<std::size_t>(j)];
      std::vector<double> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = mc[i].moment[g][j];
      const double m = mean_of(v), se = std_error(v);
      double ex = kNaN, z = kNaN;
      if (!exact.empty()) {
        std::vector<double> w(exact.size());
        for (std::size_t i = 0; i < exact.size(); ++i) w[i] = exact[i].moment[g][j];
        ex = mean_of(w);
        z = se > 0 ? std::abs(m - ex) / se : (m == ex ? 0.0 : std::numeric_limits<double>::infinity());
        max_z = std::max(max_z, z);
      }
      const double fit = std::pow(m, 1.0 / (6 * p)) / p;
      finite = finite && std::isfinite(m);
      c_fit = std::max(c_fit, fit);
      rep.rows.push_back({u_list[g], p, m, se, ex, z, fit});
      table.push_back({{"u", u_list[g]}, {"p", p}, {"mc_mean", m}, {"mc_se", se}, {"exact_mean", ex}, {"z_score", z}});
    }
    std::vector<double> frac(L, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < L; ++l) frac[l] += mc[i].tail[g][l] / static_cast<double>(n);
    }
    for (std::size_t l = 1; l < L; ++l) {
      if (moments.lambda_grid[l] > moments.lambda_grid[l - 1] && frac[l] > frac[l - 1]) tails_monotone = false;
    }
    tails.push_back({{"u", u_list[g]}, {"lambda", moments.lambda_grid}, {"tail", frac}});
  }
  Json& st = rep.statistics;
  st["ensemble"] = ensemble_json(ensemble, K);
  st["moments"] = std::move(table);
  st["tails"] = std::move(tails);
  st["C_fit"] = c_fit;
  st["all_finite"] = finite;
  st["tails_non_increasing"] = tails_monotone;
  st["max_z_score"] = exact.empty() ? Json(nullptr) : Json(max_z);
  st["exhaustive_size"] = exact.size();
  rep.runtime_seconds = seconds_since(t0);
  return rep;
}

ExperimentReport run_expectation_bruteforce(const CoefficientProfile& profile, const std::vector<double>& u_grid,
                                            const AngularWeight* phi, const RunOptions& opts) {
  const int K = profile.k_max();
  if (K > 20) throw Error(ErrorCode::TooLarge, "exhaustive expectation needs K <= 20, got " + std::to_string(K));
  if (u_grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty radius grid");
  const auto t0 = Clock::now();
  EnsembleSpec all;
  all.exhaustive = true;
  const std::size_t n = ensemble_size(all, K);
  const auto cells = parallel_map(n, opts.jobs, [&](std::size_t i) {
    const SignAssignment signs = ensemble_member(all, K, i);
    return phi ? root_cells(profile, signs, u_grid, *phi, opts) : winding_cells(profile, signs, u_grid, opts);
  });

  ExperimentReport rep;
  rep.kind = "bruteforce";
  rep.columns = {"u", "s_F", "mean_n_F", "mean_abs_deviation", "mean_n_F_phi", "mean_abs_deviation_phi"};
  Json grid = Json::array();
  const double avg = phi ? phi->mean() : kNaN;
  for (std::size_t g = 0; g < u_grid.size(); ++g) {
    const double u = u_grid[g];
    const double s = s_of_r(profile, u);
    std::vector<double> cnt(n), dev(n), nphi(n), devphi(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Cell& c = cells[i][g];
      cnt[i] = c.n;
      dev[i] = std::abs(c.n - s);
      nphi[i] = c.n_phi;
      devphi[i] = std::abs(c.n_phi - avg * s);
    }
    const double en = mean_of(cnt), ed = mean_of(dev);
    const double ep = phi ? mean_of(nphi) : kNaN, edp = phi ? mean_of(devphi) : kNaN;
    rep.rows.push_back({u, s, en, ed, ep, edp});
    grid.push_back({{"u", u},
                    {"s_F", s},
                    {"mean_n_F", en},
                    {"mean_abs_deviation", ed},
                    {"mean_n_F_phi", ep},
                    {"mean_abs_deviation_phi", edp}});
  }
  rep.statistics["grid"] = std::move(grid);
  rep.statistics["cases"] = n;
  rep.statistics["K"] = K;
  rep.statistics["phi"] = phi ? weight_to_json(*phi) : Json(nullptr);
  rep.runtime_seconds = seconds_since(t0);
  return rep;
}

std::vector<double> parse_grid(const Json& j) {
  std::vector<double> out;
  if (j.is_array()) {
    for (const Json& v : j) out.push_back(v.get<double>());
  } else if (j.is_number()) {
    out.push_back(j.get<double>());
  } else {
    const double a = j.at("start").get<double>(), b = j.at("stop").get<double>(), h = j.at("step").get<double>();
    if (!(h > 0) || b < a) throw Error(ErrorCode::InvalidArgument, "grid needs step > 0 and stop >= start");
    for (long i = 0;; ++i) {
      const double x = a + static_cast<double>(i) * h;
      if (x > b + 1e-9 * h) break;
      out.push_back(x);
    }
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty grid");
  return out;
}

ExperimentReport run_config(const Json& config, const RunOptions& opts, const std::string& base_dir,
                            std::optional<std::uint64_t> seed_override) {
  namespace fs = std::filesystem;
  auto resolve = [&](const std::string& p) { return fs::path(p).is_absolute() ? p : (fs::path(base_dir) / p).string(); };
  try {
    const std::string kind = config.at("kind").get<std::string>();
    RunOptions run = opts;
    run.root_degree_cap = config.value("root_degree_cap", opts.root_degree_cap);

    if (kind == "campaign") {
      ExperimentReport rep;
      rep.kind = kind;
      rep.config = config;
      rep.config_hash = json_hash(config);
      const auto t0 = Clock::now();
      for (const Json& part : config.at("parts")) {
        if (part.is_string()) {
          const std::string path = resolve(part.get<std::string>());
          rep.parts.push_back(run_config(read_json_file(path), opts, fs::path(path).parent_path().string(), seed_override));
        } else {
          rep.parts.push_back(run_config(part, opts, base_dir, seed_override));
        }
      }
      rep.runtime_seconds = seconds_since(t0);
      return rep;
    }

    const Json& pj = config.at("profile");
    const CoefficientProfile profile = pj.is_string() ? load_profile(resolve(pj.get<std::string>())) : profile_from_json(pj);
    EnsembleSpec ens;
    if (config.contains("ensemble")) {
      const Json& e = config.at("ensemble");
      if (e.contains("seed")) ens.seed = e.at("seed").is_string() ? parse_seed(e.at("seed").get<std::string>()) : e.at("seed").get<std::uint64_t>();
      ens.samples = e.value("samples", ens.samples);
      ens.family = sign_family_from_name(e.value("family", std::string("rademacher")));
      ens.exhaustive = e.value("exhaustive", false);
    }
    if (seed_override) ens.seed = *seed_override;

    ExperimentReport rep;
    if (kind == "theorem1") {
      rep = run_theorem1_check(profile, config.value("gamma", 0.6), parse_grid(config.at("u_grid")), ens, run);
    } else if (kind == "theorem2") {
      const AngularWeight phi = weight_from_json(config.value("weight", Json("raised_cosine")));
      rep = run_theorem2_check(profile, phi, config.value("gamma", 0.6), config.value("q", 2.0),
                               parse_grid(config.at("u_grid")), ens, run);
    } else if (kind == "moments") {
      MomentOptions mo;
      if (config.contains("p_list")) mo.p_list = config.at("p_list").get<std::vector<double>>();
      if (config.contains("lambda_grid")) mo.lambda_grid = config.at("lambda_grid").get<std::vector<double>>();
      mo.theta_grid = config.value("theta_grid", mo.theta_grid);
      mo.exhaustive_check = config.value("exhaustive_check", mo.exhaustive_check);
      mo.tol = config.value("tol", mo.tol);
      rep = run_moment_study(profile, parse_grid(config.at("u_grid")), ens, mo, run);
    } else if (kind == "bruteforce") {
      std::optional<AngularWeight> phi;
      if (config.contains("weight")) phi = weight_from_json(config.at("weight"));
      rep = run_expectation_bruteforce(profile, parse_grid(config.at("u_grid")), phi ? &*phi : nullptr, run);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown experiment kind '" + kind + "'");
    }
    rep.config = config;
    rep.config_hash = json_hash(config);
    if (!config.value("name", std::string()).empty()) rep.statistics["name"] = config.at("name");
    return rep;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed experiment config: ") + e.what());
  }
}

}  // namespace radezero
