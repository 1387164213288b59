#include "radezero/serialize.hpp"

#include "radezero/constructions.hpp"
#include "radezero/error.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace radezero {

namespace {

Json log_value(double x) { return x == kNegInf<double> ? Json(nullptr) : Json(x); }

double log_value_from(const Json& j) { return j.is_null() ? kNegInf<double> : j.get<double>(); }

bool has_phases(const CoefficientProfile& p) { return (p.phases() != 0.0).any(); }

Json family_params(const CoefficientProfile& p) {
  Json params = Json::object();
  if (const auto* r = std::get_if<RegularParams>(&p.params())) {
    params["Delta"] = r->delta;
    params["alpha"] = r->alpha;
  } else if (const auto* l = std::get_if<LacunaryParams>(&p.params())) {
    params["lambda"] = l->lambda;
    params["rho"] = l->rho;
  } else if (const auto* c = std::get_if<CentralDominantParams>(&p.params())) {
    params["margin"] = c->margin;
    params["count"] = c->count;
    params["growth"] = c->growth;
  }
  return params;
}

}  // namespace

Json profile_to_json(const CoefficientProfile& profile) {
  Json j;
  j["family"] = std::string(family_name(profile.family()));
  j["K_max"] = profile.k_max();
  j["params"] = family_params(profile);
  j["normalized"] = profile.normalized();
  const bool rule = profile.family() != Family::Explicit;
  if (!rule) {
    Json coeffs = Json::array();
    for (int k = 0; k <= profile.k_max(); ++k) coeffs.push_back(Json::array({log_value(profile.log_mag(k)), profile.phase(k)}));
    j["coefficients"] = std::move(coeffs);
  } else if (has_phases(profile)) {
    j["phases"] = std::vector<double>(profile.phases().begin(), profile.phases().end());
  }
  return j;
}

CoefficientProfile profile_from_json(const Json& j) {
  try {
    const Family family = family_from_name(j.value("family", std::string("explicit")));
    const Json params = j.value("params", Json::object());
    const int K = j.value("K_max", -1);
    auto need_k = [K]() {
      if (K < 0) throw Error(ErrorCode::InvalidArgument, "profile needs K_max");
      return K;
    };
    CoefficientProfile profile = [&]() -> CoefficientProfile {
      switch (family) {
        case Family::Factorial:
          return CoefficientProfile::factorial(need_k());
        case Family::Regular:
          return build_regular(params.at("Delta").get<double>(), params.at("alpha").get<double>(), need_k());
        case Family::Lacunary:
          return build_lacunary(params.at("lambda").get<std::vector<int>>(), params.at("rho").get<std::vector<double>>(),
                                need_k());
        case Family::CentralDominant:
          return build_central_dominant(params.at("margin").get<double>(), params.at("count").get<int>(),
                                        params.at("growth").get<double>())
              .profile;
        case Family::Explicit:
          break;
      }
      if (j.contains("moduli")) return CoefficientProfile::from_moduli(j.at("moduli").get<std::vector<double>>());
      const Json& c = j.at("coefficients");
      Eigen::ArrayXd lm(static_cast<Eigen::Index>(c.size())), ph(static_cast<Eigen::Index>(c.size()));
      for (std::size_t k = 0; k < c.size(); ++k) {
        const Json& e = c[k];
        if (e.is_array()) {
          lm[static_cast<Eigen::Index>(k)] = log_value_from(e.at(0));
          ph[static_cast<Eigen::Index>(k)] = e.size() > 1 ? e.at(1).get<double>() : 0.0;
        } else {
          lm[static_cast<Eigen::Index>(k)] = log_value_from(e);
          ph[static_cast<Eigen::Index>(k)] = 0.0;
        }
      }
      return CoefficientProfile::from_log(std::move(lm), std::move(ph));
    }();
    if (j.contains("phases")) {
      const auto ph = j.at("phases").get<std::vector<double>>();
      profile = profile.with_phases(Eigen::Map<const Eigen::ArrayXd>(ph.data(), static_cast<Eigen::Index>(ph.size())));
    }
    if (j.value("normalize", false) && !profile.normalized()) profile = normalize(profile).profile;
    return profile;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed profile JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, path + ": " + e.what());
  }
}

CoefficientProfile load_profile(const std::string& path) { return profile_from_json(read_json_file(path)); }

void write_text_file(const std::string& path, const std::string& text) {
  const std::filesystem::path parent = std::filesystem::path(path).parent_path();
  std::error_code ec;
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

Json zero_report_to_json(const ZeroReport& report) {
  Json j;
  j["u"] = report.u;
  j["perturbation"] = report.perturbation;
  j["count"] = report.count;
  j["margin"] = report.margin;
  j["margin_bound"] = report.margin_bound;
  j["method"] = std::string(count_method_name(report.method));
  j["effective_degree"] = report.effective_degree;
  if (report.has_roots) {
    Json roots = Json::array();
    for (const RootEntry& r : report.roots) {
      roots.push_back(Json::array({r.z.real(), r.z.imag(), r.multiplicity, r.residual}));
    }
    j["roots"] = std::move(roots);
  }
  return j;
}

Json ladder_to_json(const ExceptionalLadder& ladder) {
  Json j;
  j["mode"] = std::string(ladder_mode_name(ladder.mode));
  Json rungs = Json::array();
  for (const Rung& r : ladder.rungs) {
    rungs.push_back({{"k", r.k}, {"target", r.target}, {"u_k", r.u}, {"delta_k", r.delta}, {"certificate", r.certificate}});
  }
  j["rungs"] = std::move(rungs);
  Json iv = Json::array();
  for (const LogInterval& i : ladder.intervals) iv.push_back(Json::array({i.lo, i.hi}));
  j["intervals"] = std::move(iv);
  j["total_log_length"] = ladder.total_log_length;
  j["delta_sum"] = ladder.delta_sum;
  j["decay_exponent"] = ladder.decay_exponent;
  j["summable"] = ladder.summable;
  return j;
}

AngularWeight weight_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "constant") return AngularWeight::constant(1.0);
    if (name == "raised_cosine") return AngularWeight::raised_cosine();
    if (name == "off_axis") return AngularWeight::off_axis();
    throw Error(ErrorCode::InvalidArgument, "unknown weight '" + name + "'");
  }
  if (j.contains("fejer")) return AngularWeight::fejer(j.at("fejer").get<int>(), j.value("shift", 0.0));
  return AngularWeight(j.at("cos").get<std::vector<double>>(), j.value("sin", std::vector<double>{}));
}

Json weight_to_json(const AngularWeight& phi) { return {{"cos", phi.cos_coeffs()}, {"sin", phi.sin_coeffs()}}; }

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
}

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    const bool hex = text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X');
    const std::uint64_t v = std::stoull(hex ? text.substr(2) : text, &used, hex ? 16 : 10);
    if (used != text.size() - (hex ? 2 : 0)) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "bad seed '" + text + "'");
  }
}

std::string json_hash(const Json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace radezero
