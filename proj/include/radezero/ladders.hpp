#pragma once

#include "radezero/profile.hpp"

#include <string_view>
#include <vector>

namespace radezero {

enum class LadderMode { Thm1, Thm2, General };

std::string_view ladder_mode_name(LadderMode mode) noexcept;
LadderMode ladder_mode_from_name(std::string_view name);

struct Rung {
  int k;
  double target;       ///< k^2 or lambda_k
  double u;            ///< leftmost solution of the defining equation
  double delta;
  double certificate;  ///< |f(u) - target|
};

struct LogInterval {
  double lo;
  double hi;
};

struct ExceptionalLadder {
  LadderMode mode = LadderMode::Thm1;
  std::vector<Rung> rungs;
  std::vector<LogInterval> intervals;  ///< merged, increasing
  double total_log_length = 0.0;
  double delta_sum = 0.0;
  std::vector<double> delta_partial_sums;
  /// Local decay exponent beta of delta_k ~ k^-beta fitted on the upper half.
  double decay_exponent = 0.0;
  bool summable = true;

  double u_end() const { return intervals.empty() ? 0.0 : std::max(intervals.back().hi, rungs.back().u + rungs.back().delta); }
};

/// 1 / (k log^2 k), k >= 2.
double default_delta(int k);

/// Leftmost u with s_F(e^u) (+ u in Thm2 mode) >= target, by bisection down to
/// adjacent doubles. Throws Saturated when s_F would have to come within 1% of
/// the top retained index, or the truncation is saturated at the solution.
double solve_level(const CoefficientProfile& profile, LadderMode mode, double target);

/// Rungs k_min..k_max with delta_k = 1/(k log^2 k).
/// Thm1: E = [0, u_kmin + d_kmin] U [u_k - d_{k-1}, u_k + d_k];
/// Thm2: E = [0, u_kmin] U [u_k - d_{k-1}, u_k + d_k] for k >= k_min.
ExceptionalLadder build_ladder(const CoefficientProfile& profile, LadderMode mode, int k_min, int k_max);

/// Rungs s_F(e^{u_k}) = lambda_k for k = k_start, k_start+1, ... with
/// delta_k = log^6(k+1) / (lambda_{k+1} - lambda_k). The last delta uses
/// lambda_{n+1} = 2 lambda_n - lambda_{n-1}.
ExceptionalLadder generalized_ladder(const CoefficientProfile& profile, int k_start,
                                     const std::vector<double>& lambda);

struct Membership {
  bool in_set;
  int interval;  ///< index into intervals, -1 when outside
  int bracket;   ///< k with u_k + d_k <= u <= u_{k+1} - d_k, -1 when inside
};

/// Throws OutOfRange for u < 0 or u beyond the last rung's interval.
Membership in_exceptional(const ExceptionalLadder& ladder, double u);

struct IntervalLabel {
  int j;
  double tau;
  bool fast;
  int nu_left;   ///< nu_F(e^{(j-1) tau})
  int nu_right;  ///< nu_F(e^{(j+2) tau})
  int group;     ///< colour class of the fast range, -1 for slow intervals
};

struct IntervalClassification {
  std::vector<IntervalLabel> labels;
  int groups = 0;
};

/// Labels J_j = [j tau, (j+1) tau], j = 0..floor(u_max / tau) - 1, and colours
/// the index ranges [nu_left, nu_right] of fast intervals so that ranges in
/// one colour class are pairwise disjoint.
IntervalClassification classify_intervals(const CoefficientProfile& profile, double tau, double u_max);

}  // namespace radezero
