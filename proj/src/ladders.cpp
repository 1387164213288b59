#include "radezero/ladders.hpp"

#include "radezero/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace radezero {

namespace {

int top_live(const CoefficientProfile& profile) {
  for (int k = profile.k_max(); k >= 0; --k) {
    if (profile.live(k)) return k;
  }
  return 0;
}

double level(const CoefficientProfile& profile, LadderMode mode, double u) {
  const double s = s_of_r(profile, u);
  return mode == LadderMode::Thm2 ? s + u : s;
}

void assemble(ExceptionalLadder& ladder, bool thm2_start) {
  std::vector<LogInterval> raw;
  const auto& r = ladder.rungs;
  raw.push_back({0.0, thm2_start ? r[0].u : r[0].u + r[0].delta});
  if (thm2_start) raw.push_back({r[0].u, r[0].u + r[0].delta});
  for (std::size_t i = 1; i < r.size(); ++i) raw.push_back({r[i].u - r[i - 1].delta, r[i].u + r[i].delta});
  ladder.intervals.clear();
  for (const LogInterval& iv : raw) {
    if (!ladder.intervals.empty() && iv.lo <= ladder.intervals.back().hi) {
      ladder.intervals.back().hi = std::max(ladder.intervals.back().hi, iv.hi);
    } else {
      ladder.intervals.push_back(iv);
    }
  }
  ladder.total_log_length = 0.0;
  for (const LogInterval& iv : ladder.intervals) ladder.total_log_length += iv.hi - iv.lo;

  ladder.delta_partial_sums.clear();
  double sum = 0.0;
  for (const Rung& g : r) {
    sum += g.delta;
    ladder.delta_partial_sums.push_back(sum);
  }
  ladder.delta_sum = sum;

  // Least-squares slope of log delta against log k over the upper half.
  const std::size_t first = r.size() / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = first; i < r.size(); ++i) {
    const double x = std::log(static_cast<double>(r[i].k)), y = std::log(r[i].delta);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  const double den = n * sxx - sx * sx;
  ladder.decay_exponent = (n >= 2 && den > 0) ? -(n * sxy - sx * sy) / den : 0.0;
  ladder.summable = ladder.decay_exponent > 1.0;
}

Rung make_rung(const CoefficientProfile& profile, LadderMode mode, int k, double target, double delta) {
  const double u = solve_level(profile, mode, target);
  return {k, target, u, delta, std::abs(level(profile, mode, u) - target)};
}

}  // namespace

std::string_view ladder_mode_name(LadderMode mode) noexcept {
  switch (mode) {
    case LadderMode::Thm1: return "thm1";
    case LadderMode::Thm2: return "thm2";
    case LadderMode::General: return "general";
  }
  return "thm1";
}

LadderMode ladder_mode_from_name(std::string_view name) {
  for (LadderMode m : {LadderMode::Thm1, LadderMode::Thm2, LadderMode::General}) {
    if (ladder_mode_name(m) == name) return m;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown ladder mode '" + std::string(name) + "'");
}

double default_delta(int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "delta_k needs k >= 2");
  const double l = std::log(static_cast<double>(k));
  return 1.0 / (k * l * l);
}

double solve_level(const CoefficientProfile& profile, LadderMode mode, double target) {
  const double cap = 0.99 * top_live(profile);
  auto saturated_at = [&](double u) {
    if (s_of_r(profile, u) > cap) return true;
    if (!profile.truncated()) return false;
    try {
      central_group(profile, u, tau_for_tail(1e-14));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DegenerateGroup) return true;
      throw;
    }
    return false;
  };
  auto refuse = [&]() {
    throw Error(ErrorCode::Saturated, "level " + std::to_string(target) + " is beyond the certified range of K_max=" +
                                          std::to_string(profile.k_max()));
  };
  if (mode != LadderMode::Thm2 && target > cap) refuse();

  double lo = 0.0;
  if (level(profile, mode, lo) >= target) {
    lo = -1.0;
    while (level(profile, mode, lo) >= target) {
      lo *= 2;
      if (lo < -1e6) throw Error(ErrorCode::OutOfRange, "level reached only as u -> -inf");
    }
  }
  double hi = std::max(1.0, lo + 1.0);
  while (level(profile, mode, hi) < target) {
    if (saturated_at(hi)) refuse();
    lo = hi;
    hi *= 2;
  }
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (level(profile, mode, mid) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  if (saturated_at(hi)) refuse();
  return hi;
}

ExceptionalLadder build_ladder(const CoefficientProfile& profile, LadderMode mode, int k_min, int k_max) {
  if (mode == LadderMode::General) throw Error(ErrorCode::InvalidArgument, "use generalized_ladder for general mode");
  const int floor_k = mode == LadderMode::Thm1 ? 2 : 3;
  if (k_min < floor_k || k_max < k_min) {
    throw Error(ErrorCode::InvalidArgument, "ladder needs " + std::to_string(floor_k) + " <= k_min <= k_max");
  }
  ExceptionalLadder ladder;
  ladder.mode = mode;
  for (int k = k_min; k <= k_max; ++k) {
    ladder.rungs.push_back(make_rung(profile, mode, k, static_cast<double>(k) * k, default_delta(k)));
  }
  assemble(ladder, mode == LadderMode::Thm2);
  return ladder;
}

ExceptionalLadder generalized_ladder(const CoefficientProfile& profile, int k_start, const std::vector<double>& lambda) {
  if (lambda.size() < 3) throw Error(ErrorCode::InvalidArgument, "generalized ladder needs at least 3 levels");
  if (k_start < 1) throw Error(ErrorCode::InvalidArgument, "k_start must be >= 1");
  if (!(lambda[0] > 1)) throw Error(ErrorCode::InvalidArgument, "first level must exceed 1");
  for (std::size_t i = 1; i < lambda.size(); ++i) {
    if (!(lambda[i] > lambda[i - 1])) throw Error(ErrorCode::NotConvex, "levels must be strictly increasing");
  }
  for (std::size_t i = 2; i < lambda.size(); ++i) {
    const double d2 = lambda[i] - 2 * lambda[i - 1] + lambda[i - 2];
    if (d2 < -1e-12 * std::abs(lambda[i])) {
      throw Error(ErrorCode::NotConvex, "second difference " + std::to_string(d2) + " at index " + std::to_string(i));
    }
  }
  ExceptionalLadder ladder;
  ladder.mode = LadderMode::General;
  const std::size_t n = lambda.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int k = k_start + static_cast<int>(i);
    const double next = i + 1 < n ? lambda[i + 1] : 2 * lambda[n - 1] - lambda[n - 2];
    const double l = std::log(k + 1.0);
    ladder.rungs.push_back(make_rung(profile, LadderMode::Thm1, k, lambda[i], std::pow(l, 6) / (next - lambda[i])));
  }
  assemble(ladder, false);
  return ladder;
}

Membership in_exceptional(const ExceptionalLadder& ladder, double u) {
  if (ladder.rungs.empty()) throw Error(ErrorCode::InvalidArgument, "empty ladder");
  if (!(u >= 0) || u > ladder.u_end()) {
    throw Error(ErrorCode::OutOfRange, "u=" + std::to_string(u) + " outside [0, " + std::to_string(ladder.u_end()) + "]");
  }
  for (std::size_t i = 0; i < ladder.intervals.size(); ++i) {
    if (u >= ladder.intervals[i].lo && u <= ladder.intervals[i].hi) return {true, static_cast<int>(i), -1};
  }
  int bracket = -1;
  for (const Rung& r : ladder.rungs) {
    if (r.u <= u) bracket = r.k;
  }
  return {false, -1, bracket};
}

IntervalClassification classify_intervals(const CoefficientProfile& profile, double tau, double u_max) {
  if (!(tau > 0)) throw Error(ErrorCode::InvalidArgument, "tau must be positive");
  if (!(u_max >= 0) || u_max / tau > 1e6) throw Error(ErrorCode::InvalidArgument, "need 0 <= u_max <= 1e6 tau");
  const int count = static_cast<int>(std::floor(u_max / tau + 1e-12));
  IntervalClassification out;
  // Colour classes keep the right end of their last range.
  std::vector<int> ends;
  for (int j = 0; j < count; ++j) {
    IntervalLabel lab{j, tau, false, central_index(profile, (j - 1) * tau).nu,
                      central_index(profile, (j + 2) * tau).nu, -1};
    lab.fast = lab.nu_left != lab.nu_right;
    if (lab.fast) {
      // Ranges arrive sorted by left end (nu is monotone), so first fit is optimal.
      int g = 0;
      while (g < static_cast<int>(ends.size()) && ends[static_cast<std::size_t>(g)] >= lab.nu_left) ++g;
      if (g == static_cast<int>(ends.size())) ends.push_back(lab.nu_right);
      ends[static_cast<std::size_t>(g)] = lab.nu_right;
      lab.group = g;
    }
    out.labels.push_back(lab);
  }
  out.groups = static_cast<int>(ends.size());
  return out;
}

}  // namespace radezero
