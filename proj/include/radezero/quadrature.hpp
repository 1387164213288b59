#pragma once

#include "radezero/error.hpp"
#include "radezero/numerics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace radezero {

struct QuadratureOptions {
  double tol = 1e-10;
  int initial_panels = 8;
  int max_panels = 40000;
  /// Measure error relative to max(1, |estimate|) per component.
  bool relative = false;
  bool throw_on_failure = true;
};

template <typename Value>
struct QuadratureResult {
  Value value;
  double error = 0.0;
  int panels = 0;
  bool converged = true;
};

namespace detail {

inline double max_abs(double x) { return std::abs(x); }

template <typename Derived>
double max_abs(const Eigen::ArrayBase<Derived>& x) {
  return x.size() == 0 ? 0.0 : x.abs().maxCoeff();
}

inline double scaled_error(double diff, double scale) { return std::abs(diff) / scale; }

inline double scaled_error(const Eigen::ArrayXd& diff, const Eigen::ArrayXd& scale) {
  return diff.size() == 0 ? 0.0 : (diff.abs() / scale).maxCoeff();
}

inline double make_scale(double estimate, bool relative) {
  return relative ? std::max(1.0, std::abs(estimate)) : 1.0;
}

inline Eigen::ArrayXd make_scale(const Eigen::ArrayXd& estimate, bool relative) {
  if (!relative) return Eigen::ArrayXd::Ones(estimate.size());
  return estimate.abs().max(1.0);
}

}  // namespace detail

/// Globally adaptive composite Gauss-Legendre (order 16) integration of f over
/// [a, b]. Each panel is compared against the sum of its two halves; the panel
/// with the largest disagreement is bisected until the summed disagreement
/// drops below opts.tol. Works for scalar or Eigen::ArrayXd valued integrands.
template <typename F>
auto integrate(F&& f, double a, double b, const QuadratureOptions& opts = {}) {
  using Value = std::decay_t<decltype(f(a))>;
  constexpr int kOrder = 16;
  const auto& rule = GaussLegendre<double, kOrder>::instance();

  auto gl = [&](double lo, double hi) -> Value {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    Value acc = rule.weights[0] * f(mid + half * rule.nodes[0]);
    for (int i = 1; i < kOrder; ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return Value(acc * half);
  };

  struct Panel {
    double lo, hi;
    Value whole, left, right;
    double err;
  };

  std::vector<Panel> panels;
  auto make_panel = [&](double lo, double hi, Value whole) {
    const double mid = 0.5 * (lo + hi);
    Value left = gl(lo, mid);
    Value right = gl(mid, hi);
    return Panel{lo, hi, std::move(whole), std::move(left), std::move(right), 0.0};
  };

  const int n0 = std::max(1, opts.initial_panels);
  panels.reserve(static_cast<std::size_t>(4 * n0));
  for (int i = 0; i < n0; ++i) {
    const double lo = a + (b - a) * i / n0;
    const double hi = (i + 1 == n0) ? b : a + (b - a) * (i + 1) / n0;
    panels.push_back(make_panel(lo, hi, gl(lo, hi)));
  }

  Value estimate = Value(panels[0].left + panels[0].right);
  for (std::size_t i = 1; i < panels.size(); ++i) estimate += panels[i].left + panels[i].right;
  const auto scale = detail::make_scale(estimate, opts.relative);

  auto cmp = [&panels](std::size_t x, std::size_t y) { return panels[x].err < panels[y].err; };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> heap(cmp);
  double total_err = 0.0;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    panels[i].err = detail::scaled_error(Value(panels[i].whole - panels[i].left - panels[i].right), scale);
    total_err += panels[i].err;
    heap.push(i);
  }

  bool converged = true;
  int leaves = static_cast<int>(panels.size());
  while (total_err > opts.tol) {
    if (leaves >= opts.max_panels) {
      converged = false;
      break;
    }
    const std::size_t worst = heap.top();
    heap.pop();
    Panel parent = std::move(panels[worst]);
    const double mid = 0.5 * (parent.lo + parent.hi);
    total_err -= parent.err;
    panels[worst] = make_panel(parent.lo, mid, std::move(parent.left));
    panels.push_back(make_panel(mid, parent.hi, std::move(parent.right)));
    for (std::size_t idx : {worst, panels.size() - 1}) {
      Panel& p = panels[idx];
      p.err = detail::scaled_error(Value(p.whole - p.left - p.right), scale);
      total_err += p.err;
      heap.push(idx);
    }
    ++leaves;
    // Guard against drift of the running sum.
    if (total_err < 0) total_err = 0;
  }

  if (!converged && opts.throw_on_failure) {
    throw Error(ErrorCode::NoConvergence,
                "adaptive quadrature exceeded " + std::to_string(opts.max_panels) + " panels");
  }

  std::vector<std::size_t> order(panels.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&panels](std::size_t x, std::size_t y) { return panels[x].lo < panels[y].lo; });
  Value value = Value(panels[order[0]].left + panels[order[0]].right);
  double err = panels[order[0]].err;
  for (std::size_t i = 1; i < order.size(); ++i) {
    value += panels[order[i]].left + panels[order[i]].right;
    err += panels[order[i]].err;
  }
  return QuadratureResult<Value>{std::move(value), err, leaves, converged};
}

/// Integrates over consecutive pieces split at the given breakpoints (sorted,
/// inside (a, b)); the tolerance is shared evenly between pieces.
template <typename F>
auto integrate_pieces(F&& f, double a, double b, std::vector<double> breaks,
                      const QuadratureOptions& opts = {}) {
  std::sort(breaks.begin(), breaks.end());
  std::vector<double> knots{a};
  for (double x : breaks) {
    if (x > knots.back() + 1e-12 * (1 + std::abs(x)) && x < b - 1e-12 * (1 + std::abs(b))) knots.push_back(x);
  }
  knots.push_back(b);
  QuadratureOptions piece = opts;
  const int pieces = static_cast<int>(knots.size()) - 1;
  piece.tol = opts.tol / pieces;
  piece.initial_panels = std::max(1, opts.initial_panels / pieces);
  auto first = integrate(f, knots[0], knots[1], piece);
  for (int i = 1; i < pieces; ++i) {
    auto r = integrate(f, knots[i], knots[i + 1], piece);
    first.value += r.value;
    first.error += r.error;
    first.panels += r.panels;
    first.converged = first.converged && r.converged;
  }
  return first;
}

}  // namespace radezero
