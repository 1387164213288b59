#include "radezero/constructions.hpp"
#include "radezero/corpus.hpp"
#include "radezero/error.hpp"
#include "radezero/evaluate.hpp"
#include "radezero/experiments.hpp"
#include "radezero/jensen.hpp"
#include "radezero/ladders.hpp"
#include "radezero/profile.hpp"
#include "radezero/sampling.hpp"
#include "radezero/serialize.hpp"
#include "radezero/weight.hpp"
#include "radezero/zeros.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace rz = radezero;

namespace {

std::string error_names() {
  std::string s = "Numerical failures exit with status 2 and print one of:\n ";
  for (rz::ErrorCode c :
       {rz::ErrorCode::DegenerateGroup, rz::ErrorCode::TooFewTerms, rz::ErrorCode::TooLarge, rz::ErrorCode::NoConvergence,
        rz::ErrorCode::ZeroNearCircle, rz::ErrorCode::RootFindingFailure, rz::ErrorCode::Saturated,
        rz::ErrorCode::OutOfRange, rz::ErrorCode::NotConvex, rz::ErrorCode::ConstructionFailed,
        rz::ErrorCode::NotCentralDominant, rz::ErrorCode::Overflow, rz::ErrorCode::InvalidArgument}) {
    s += " ";
    s += rz::error_name(c);
  }
  s += "\nEnvironment: RADEZERO_SEED overrides every configured or default seed.";
  return s;
}

std::optional<std::uint64_t> env_seed() {
  const char* v = std::getenv("RADEZERO_SEED");
  if (!v || !*v) return std::nullopt;
  return rz::parse_seed(v);
}

// "a:b:h", "x" or "x,y,z".
std::vector<double> parse_range(const std::string& text) {
  std::vector<std::string> parts;
  const char sep = text.find(':') != std::string::npos ? ':' : ',';
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
  std::vector<double> v;
  try {
    for (const std::string& p : parts) v.push_back(std::stod(p));
  } catch (const std::exception&) {
    throw rz::Error(rz::ErrorCode::InvalidArgument, "cannot parse range '" + text + "'");
  }
  if (sep == ':') {
    if (v.size() != 3) throw rz::Error(rz::ErrorCode::InvalidArgument, "range needs start:stop:step");
    return rz::parse_grid(rz::Json{{"start", v[0]}, {"stop", v[1]}, {"step", v[2]}});
  }
  if (v.empty()) throw rz::Error(rz::ErrorCode::InvalidArgument, "empty range");
  return v;
}

rz::AngularWeight parse_weight(const std::string& text) {
  if (text.empty()) return rz::AngularWeight::constant();
  if (text.front() == '{') return rz::weight_from_json(rz::Json::parse(text));
  return rz::weight_from_json(rz::Json(text));
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    rz::write_text_file(path, text);
  }
}

std::string dump(const rz::Json& j) { return j.dump(2) + "\n"; }

struct Common {
  std::string profile;
  std::string out;
  std::string seed_text;
  int jobs = 0;

  rz::CoefficientProfile load() const {
    if (profile.empty()) throw rz::Error(rz::ErrorCode::InvalidArgument, "--profile is required");
    return rz::load_profile(profile);
  }
  std::uint64_t seed(std::uint64_t fallback = 1) const {
    if (auto e = env_seed()) return *e;
    return seed_text.empty() ? fallback : rz::parse_seed(seed_text);
  }
  rz::SignAssignment signs(const rz::CoefficientProfile& p, const std::string& family) const {
    if (seed_text.empty() && !env_seed()) return rz::SignAssignment::all_plus(p.k_max() + 1);
    return rz::sample_signs(p.k_max(), seed(), rz::sign_family_from_name(family));
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radezero: zero counting and radial statistics of random Taylor series"};
  app.footer(error_names());
  app.require_subcommand(1);
  Common c;
  std::string family = "rademacher";
  std::string u_text;
  std::string weight_text;
  std::string method = "winding";
  std::function<void()> action;

  auto add_out = [&](CLI::App* s) { s->add_option("-o,--out", c.out, "Output file (default: stdout)"); };
  auto add_profile = [&](CLI::App* s) { s->add_option("-p,--profile", c.profile, "Profile JSON file"); };
  auto add_seed = [&](CLI::App* s) {
    s->add_option("--seed", c.seed_text, "Sign seed, decimal or 0x hex (omitted: all signs +1)");
    s->add_option("--family", family, "Sign family: rademacher, steinhaus or gaussian");
  };

  // profile
  bool do_normalize = false, dump_signs = false;
  auto* s_profile = app.add_subcommand("profile", "Load, normalize and dump a coefficient profile");
  add_profile(s_profile);
  add_out(s_profile);
  add_seed(s_profile);
  s_profile->add_flag("--normalize", do_normalize, "Shift and rescale so a_0 = 1 and sum_{k>=1} |a_k| <= 1/2");
  s_profile->add_flag("--signs", dump_signs, "Dump the sign assignment for --seed instead");
  s_profile->callback([&] {
    action = [&] {
      const rz::CoefficientProfile p = c.load();
      if (dump_signs) {
        const rz::SignAssignment s = c.signs(p, family);
        rz::Json arr = rz::Json::array();
        for (int k = 0; k < s.size(); ++k) arr.push_back(std::real(s[k]) >= 0 ? 1 : -1);
        if (rz::sign_family_from_name(family) != rz::SignFamily::Rademacher) {
          arr = rz::Json::array();
          for (int k = 0; k < s.size(); ++k) arr.push_back({std::real(s[k]), std::imag(s[k])});
        }
        emit(c.out, dump({{"seed", c.seed()}, {"family", family}, {"signs", arr}}));
        return;
      }
      if (do_normalize) {
        const rz::Normalization n = rz::normalize(p);
        emit(c.out, dump({{"profile", rz::profile_to_json(n.profile)}, {"shift", n.shift}, {"log_scale", n.log_scale}}));
      } else {
        emit(c.out, dump(rz::profile_to_json(p)));
      }
    };
  });

  // radial
  auto* s_radial = app.add_subcommand("radial", "Radial statistics on a grid of u = log r");
  add_profile(s_radial);
  add_out(s_radial);
  s_radial->add_option("--u", u_text, "start:stop:step or comma list")->required();
  s_radial->callback([&] {
    action = [&] {
      const rz::CoefficientProfile p = c.load();
      std::vector<std::vector<double>> rows;
      for (double u : parse_range(u_text)) {
        const rz::CentralIndex ci = rz::central_index(p, u);
        rows.push_back({u, rz::log_sigma(p, u), rz::s_of_r(p, u), ci.log_mu, static_cast<double>(ci.nu)});
      }
      std::ostringstream os;
      rz::write_csv(os, {"u", "log_sigma", "s", "log_mu", "nu"}, rows);
      emit(c.out, os.str());
    };
  });

  // trace
  int points = 1024;
  auto* s_trace = app.add_subcommand("trace", "Dump theta, Re F_hat, Im F_hat, X on one circle");
  add_profile(s_trace);
  add_out(s_trace);
  add_seed(s_trace);
  s_trace->add_option("--u", u_text, "log-radius")->required();
  s_trace->add_option("--points", points, "Number of angles")->check(CLI::Range(1, 1 << 24));
  s_trace->callback([&] {
    action = [&] {
      const rz::CoefficientProfile p = c.load();
      const rz::CircleSeries series(p, c.signs(p, family), parse_range(u_text).front());
      std::vector<std::vector<double>> rows;
      for (int j = 0; j < points; ++j) {
        const double th = -std::numbers::pi + 2 * std::numbers::pi * j / points;
        const rz::Complex v = series.value(th);
        rows.push_back({th, v.real(), v.imag(), series.log_abs(th)});
      }
      std::ostringstream os;
      rz::write_csv(os, {"theta", "re", "im", "X"}, rows);
      emit(c.out, os.str());
    };
  });

  // zeros
  auto* s_zeros = app.add_subcommand("zeros", "Count or locate zeros in a closed disk");
  add_profile(s_zeros);
  add_out(s_zeros);
  add_seed(s_zeros);
  s_zeros->add_option("--u", u_text, "log-radius")->required();
  s_zeros->add_option("--method", method, "winding or roots")->check(CLI::IsMember({"winding", "roots"}));
  s_zeros->callback([&] {
    action = [&] {
      const rz::CoefficientProfile p = c.load();
      const rz::SignAssignment s = c.signs(p, family);
      const double u = parse_range(u_text).front();
      const rz::ZeroReport r = method == "roots" ? rz::locate_zeros(p, s, u) : rz::count_zeros(p, s, u);
      emit(c.out, dump(rz::zero_report_to_json(r)));
    };
  });

  // jensen
  int corpus = 100;
  auto* s_jensen = app.add_subcommand("jensen", "Jensen residual table over a seeded corpus or one profile");
  add_profile(s_jensen);
  add_out(s_jensen);
  add_seed(s_jensen);
  s_jensen->add_option("--corpus", corpus, "Number of seeded corpus cases (ignored with --profile)");
  s_jensen->add_option("--u", u_text, "log-radius (with --profile)");
  s_jensen->add_option("--weight", weight_text, "constant, raised_cosine, off_axis or a JSON weight");
  s_jensen->add_option("-j,--jobs", c.jobs, "Worker threads (0: all cores)");
  s_jensen->callback([&] {
    action = [&] {
      const rz::AngularWeight phi = parse_weight(weight_text);
      std::vector<std::vector<double>> rows;
      auto one = [&](const rz::CoefficientProfile& p, const rz::SignAssignment& s, double u) {
        const rz::JensenCheck j = rz::jensen_weighted_check(p, s, phi, u);
        return std::vector<double>{j.residual, j.margin, static_cast<double>(j.panels)};
      };
      if (!c.profile.empty()) {
        if (u_text.empty()) throw rz::Error(rz::ErrorCode::InvalidArgument, "--u is required with --profile");
        const rz::CoefficientProfile p = c.load();
        const auto r = one(p, c.signs(p, family), parse_range(u_text).front());
        rows.push_back({0, r[0], r[1], r[2]});
      } else {
        const std::uint64_t seed = c.seed(1);
        const auto res = rz::parallel_map(static_cast<std::size_t>(std::max(corpus, 0)), c.jobs, [&](std::size_t i) {
          const rz::CorpusCase cc = rz::make_corpus_case(static_cast<int>(i), seed);
          return one(cc.profile, cc.signs, cc.u);
        });
        for (std::size_t i = 0; i < res.size(); ++i) rows.push_back({static_cast<double>(i), res[i][0], res[i][1], res[i][2]});
      }
      std::ostringstream os;
      rz::write_csv(os, {"case", "residual", "margin", "panels"}, rows);
      emit(c.out, os.str());
    };
  });

  // ladder
  std::string mode = "thm1";
  int k_min = 2, k_max = 10;
  std::vector<double> lambda;
  auto* s_ladder = app.add_subcommand("ladder", "Exceptional-set ladder of a profile");
  add_profile(s_ladder);
  add_out(s_ladder);
  s_ladder->add_option("--mode", mode, "thm1, thm2 or general")->check(CLI::IsMember({"thm1", "thm2", "general"}));
  s_ladder->add_option("--kmin", k_min, "First rung (k_start in general mode)");
  s_ladder->add_option("--kmax", k_max, "Last rung");
  s_ladder->add_option("--lambda", lambda, "Levels lambda_k for general mode")->delimiter(',');
  s_ladder->callback([&] {
    action = [&] {
      const rz::CoefficientProfile p = c.load();
      const rz::LadderMode m = rz::ladder_mode_from_name(mode);
      const rz::ExceptionalLadder l =
          m == rz::LadderMode::General ? rz::generalized_ladder(p, k_min, lambda) : rz::build_ladder(p, m, k_min, k_max);
      emit(c.out, dump(rz::ladder_to_json(l)));
    };
  });

  // construct
  std::string kind;
  double margin = 2, growth = 0, delta = 1, alpha = 1;
  int count = 3, kmax_c = 0;
  std::vector<int> exps;
  std::vector<double> rho;
  auto* s_construct = app.add_subcommand("construct", "Build a regular, central-dominant or lacunary profile");
  add_out(s_construct);
  s_construct->add_option("kind", kind, "regular, central-dominant or lacunary")
      ->required()
      ->check(CLI::IsMember({"regular", "central-dominant", "lacunary"}));
  s_construct->add_option("--margin", margin, "Dominance factor K (central-dominant)");
  s_construct->add_option("--count", count, "Number of dominant terms (central-dominant)");
  s_construct->add_option("--growth", growth, "Radius ratio (central-dominant; default 8 K^2)");
  s_construct->add_option("--Delta", delta, "Base of the regular decay");
  s_construct->add_option("--alpha", alpha, "Exponent of the regular decay");
  s_construct->add_option("--lambda", exps, "Exponents (lacunary)")->delimiter(',');
  s_construct->add_option("--rho", rho, "Balance radii (lacunary)")->delimiter(',');
  s_construct->add_option("--kmax", kmax_c, "Truncation index (regular, lacunary)");
  s_construct->callback([&] {
    action = [&] {
      if (kind == "regular") {
        emit(c.out, dump(rz::profile_to_json(rz::build_regular(delta, alpha, kmax_c > 0 ? kmax_c : 64))));
      } else if (kind == "lacunary") {
        const int K = kmax_c > 0 ? kmax_c : (exps.empty() ? 0 : exps.back());
        emit(c.out, dump(rz::profile_to_json(rz::build_lacunary(exps, rho, K))));
      } else {
        const double g = growth > 0 ? growth : 8 * margin * margin;
        const rz::CentralDominant cd = rz::build_central_dominant(margin, count, g);
        rz::Json sched = rz::Json::array();
        for (std::size_t i = 0; i < cd.schedule.size(); ++i) {
          sched.push_back({{"u", cd.schedule[i].u}, {"k", cd.schedule[i].k}, {"log_dominance", cd.log_dominance[i]}});
        }
        emit(c.out, dump({{"profile", rz::profile_to_json(cd.profile)}, {"schedule", sched}}));
      }
    };
  });

  // experiment
  std::string config;
  auto* s_exp = app.add_subcommand("experiment", "Run a campaign config; writes <out>.json and <out>.csv");
  s_exp->add_option("--config", config, "Experiment config JSON")->required();
  s_exp->add_option("-o,--out", c.out, "Output prefix (default: JSON on stdout, no CSV)");
  s_exp->add_option("-j,--jobs", c.jobs, "Worker threads (0: all cores)");
  s_exp->callback([&] {
    action = [&] {
      const auto t0 = std::chrono::steady_clock::now();
      const rz::Json cfg = rz::read_json_file(config);
      rz::RunOptions opts;
      opts.jobs = c.jobs;
      const rz::ExperimentReport rep =
          rz::run_config(cfg, opts, std::filesystem::path(config).parent_path().string(), env_seed());
      if (c.out.empty()) {
        std::cout << dump(rep.to_json());
      } else {
        rz::write_text_file(c.out + ".json", dump(rep.to_json()));
        if (rep.parts.empty()) {
          rz::write_text_file(c.out + ".csv", rep.csv());
        } else {
          for (std::size_t i = 0; i < rep.parts.size(); ++i) {
            rz::write_text_file(c.out + ".part" + std::to_string(i) + "." + rep.parts[i].kind + ".csv",
                                rep.parts[i].csv());
          }
        }
      }
      std::cerr << "runtime_seconds "
                << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << "\n";
    };
  });

  // oracle
  auto* s_oracle = app.add_subcommand("oracle", "Exact expectations by enumerating all sign patterns (K <= 20)");
  add_profile(s_oracle);
  add_out(s_oracle);
  s_oracle->add_option("--u", u_text, "start:stop:step or comma list")->required();
  s_oracle->add_option("--weight", weight_text, "Optional angular weight");
  s_oracle->add_option("-j,--jobs", c.jobs, "Worker threads (0: all cores)");
  s_oracle->callback([&] {
    action = [&] {
      const rz::CoefficientProfile p = c.load();
      rz::RunOptions opts;
      opts.jobs = c.jobs;
      std::optional<rz::AngularWeight> phi;
      if (!weight_text.empty()) phi = parse_weight(weight_text);
      const rz::ExperimentReport rep = rz::run_expectation_bruteforce(p, parse_range(u_text), phi ? &*phi : nullptr, opts);
      emit(c.out, dump(rep.to_json()));
    };
  });

  for (CLI::App* s : app.get_subcommands({})) s->footer(error_names());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? 0 : (code == 0 ? 0 : 1);
  } catch (const rz::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  try {
    if (action) action();
  } catch (const rz::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == rz::ErrorCode::InvalidArgument ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
