#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "betweenness.hpp"
#include "chain.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "path.hpp"
#include "squeeze.hpp"

namespace skorodist {

enum class PathVariant { part, tot, hausdorff };

inline std::string_view to_string(PathVariant v) {
  switch (v) {
    case PathVariant::part: return "part";
    case PathVariant::tot: return "tot";
    case PathVariant::hausdorff: return "hausdorff";
  }
  return "?";
}

inline PathVariant parse_path_variant(std::string_view s) {
  if (s == "part") return PathVariant::part;
  if (s == "tot") return PathVariant::tot;
  if (s == "hausdorff") return PathVariant::hausdorff;
  throw InputError("unknown variant: " + std::string(s));
}

struct PathDistance {
  double value = 0.0;
  double error_bar = 0.0;   // sampling error, both graphs combined
  double truncation = 0.0;  // extra error from clipping unbounded domains
  std::size_t witness_size = 0;  // pairs in the optimal correspondence (tot only)
};

/// d_sqz between the nodes of two graphs, evaluated on demand from cached
/// per-node time weights.
template <class P, MetricFor<P> M>
class GraphCost {
 public:
  GraphCost(const Graph<P>& a, const Graph<P>& b, const M& base, const SqueezeConfig& cfg)
      : a_(a), b_(b), base_(base), pa_(weights(a, cfg, true)), ca_(weights(a, cfg, false)),
        pb_(weights(b, cfg, true)), cb_(weights(b, cfg, false)) {}

  std::size_t rows() const { return a_.nodes.size(); }
  std::size_t cols() const { return b_.nodes.size(); }

  double operator()(std::size_t i, std::size_t j) const {
    const auto& x = a_.nodes[i].point;
    const auto& y = b_.nodes[j].point;
    double spatial = 0.0;
    if (!x.is_star() && !y.is_star()) spatial = std::min(pa_[i], pb_[j]) * std::min(static_cast<double>(base_(*x.x, *y.x)), 1.0);
    return spatial + std::abs(pa_[i] - pb_[j]) + std::abs(ca_[i] - cb_[j]);
  }

 private:
  static std::vector<double> weights(const Graph<P>& g, const SqueezeConfig& cfg, bool phi) {
    std::vector<double> out;
    out.reserve(g.nodes.size());
    for (const auto& n : g.nodes) out.push_back(phi ? cfg.phi(n.point.t) : cfg.dbar_coord(n.point.t));
    return out;
  }

  const Graph<P>& a_;
  const Graph<P>& b_;
  const M& base_;
  std::vector<double> pa_, ca_, pb_, cb_;
};

template <class P, MetricFor<P> M = default_metric_t<P>>
PathDistance graph_dist(const Graph<P>& g1, const Graph<P>& g2, PathVariant variant, const SqueezeConfig& cfg = {},
                        const M& dist = M{}) {
  const GraphCost<P, M> cost(g1, g2, dist, cfg);
  PathDistance out;
  switch (variant) {
    case PathVariant::hausdorff: out.value = chain_hausdorff(cost); break;
    case PathVariant::part: out.value = chain_d_part(cost); break;
    case PathVariant::tot: {
      const auto match = chain_d_tot(cost);
      out.value = match.value;
      out.witness_size = match.pairs.size();
      break;
    }
  }
  const double eta = std::max(g1.eta, g2.eta);
  out.error_bar = g1.exact && g2.exact ? 0.0 : 2.0 * eta * (1.0 + cfg.phi_sup());
  out.truncation = std::max(g1.truncation, g2.truncation);
  return out;
}

/// Distance between the filled graphs of two paths in squeezed space.
template <class P, MetricFor<P> M = default_metric_t<P>>
PathDistance path_dist(const Path<P>& p1, const Path<P>& p2, const Betweenness<P>& b, const SqueezeConfig& cfg = {},
                       double eta = 0.01, PathVariant variant = PathVariant::tot, double horizon = kDefaultHorizon,
                       const M& dist = M{}) {
  const Graph<P> g1 = filled_graph(p1, b, cfg, eta, horizon, dist);
  const Graph<P> g2 = filled_graph(p2, b, cfg, eta, horizon, dist);
  return graph_dist(g1, g2, variant, cfg, dist);
}

/// A cadlag step curve on [0, 1]: values[0] on [0, times[0]), values[k] on
/// [times[k-1], times[k]), the last value up to and including 1.
template <class P>
struct StepCurve {
  std::vector<double> times;
  std::vector<P> values;

  StepCurve(std::vector<double> t, std::vector<P> v) : times(std::move(t)), values(std::move(v)) {
    if (values.size() != times.size() + 1) throw InputError("a step curve needs one more value than breakpoints");
    for (std::size_t k = 0; k < times.size(); ++k) {
      if (!(times[k] > 0.0 && times[k] < 1.0)) throw InputError("step curve breakpoints must lie in (0, 1)");
      if (k > 0 && !(times[k - 1] < times[k])) throw InputError("step curve breakpoints must increase");
    }
  }

  const P& operator()(double t) const {
    const auto k = static_cast<std::size_t>(std::upper_bound(times.begin(), times.end(), t) - times.begin());
    return values[k];
  }
};

enum class ReparamMode { bijection, increasing };

/// A piecewise linear time change through the points (u_k, v_k).
struct PiecewiseLinear {
  std::vector<double> u;
  std::vector<double> v;

  double operator()(double t) const {
    auto it = std::upper_bound(u.begin(), u.end(), t);
    if (it == u.begin()) return v.front();
    if (it == u.end()) return v.back();
    const std::size_t k = static_cast<std::size_t>(it - u.begin());
    const double p = (t - u[k - 1]) / (u[k] - u[k - 1]);
    return v[k - 1] + p * (v[k] - v[k - 1]);
  }
};

struct ReparamResult {
  double value = 0.0;
  PiecewiseLinear lambda;  // the time change attaining `value` (increasing mode)
};

namespace detail {

inline std::vector<double> curve_knots(const std::vector<double>& breaks, std::size_t grid) {
  std::vector<double> k;
  for (std::size_t i = 0; i <= grid; ++i) k.push_back(static_cast<double>(i) / static_cast<double>(grid));
  k.insert(k.end(), breaks.begin(), breaks.end());
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  return k;
}

}  // namespace detail

/// inf over time changes lambda of sup_t d(g1(t), g2(lambda(t))). Both curves
/// are cut into cells at the grid and their breakpoints. In increasing mode a
/// monotone cell matching is optimised and realised by an explicit strictly
/// increasing piecewise linear lambda, whose sup is then evaluated exactly.
/// In bijection mode any cell matching is realisable, which leaves the
/// Hausdorff distance of the value sets.
template <class P, MetricFor<P> M = default_metric_t<P>>
ReparamResult reparam_dist(const StepCurve<P>& g1, const StepCurve<P>& g2, ReparamMode mode, std::size_t grid = 256,
                           const M& dist = M{}) {
  if (grid == 0) throw InputError("grid must be positive");
  const auto k1 = detail::curve_knots(g1.times, grid);
  const auto k2 = detail::curve_knots(g2.times, grid);
  std::vector<P> c1, c2;
  for (std::size_t i = 0; i + 1 < k1.size(); ++i) c1.push_back(g1(k1[i]));
  for (std::size_t j = 0; j + 1 < k2.size(); ++j) c2.push_back(g2(k2[j]));
  // g(1) belongs to the last cell already: the last value holds through t = 1.
  const auto cost = DistanceMatrix::build<P>(c1, c2, dist);

  ReparamResult out;
  if (mode == ReparamMode::bijection) {
    out.value = chain_hausdorff(cost);
    return out;
  }
  const auto match = chain_d_tot(cost);

  // Give each matched pair an equal share of both of its cells.
  std::vector<std::size_t> uses1(c1.size(), 0), uses2(c2.size(), 0);
  for (const auto& [i, j] : match.pairs) ++uses1[i], ++uses2[j];
  std::vector<std::size_t> seen1(c1.size(), 0), seen2(c2.size(), 0);
  auto share = [](const std::vector<double>& k, std::size_t cell, std::size_t part, std::size_t parts) {
    if (part == parts) return k[cell + 1];
    return k[cell] + (k[cell + 1] - k[cell]) * static_cast<double>(part) / static_cast<double>(parts);
  };
  out.lambda.u.push_back(0.0);
  out.lambda.v.push_back(0.0);
  for (const auto& [i, j] : match.pairs) {
    const std::size_t a = ++seen1[i];
    const std::size_t b = ++seen2[j];
    out.lambda.u.push_back(share(k1, i, a, uses1[i]));
    out.lambda.v.push_back(share(k2, j, b, uses2[j]));
  }

  // lambda maps each [u_k, u_k+1) onto [v_k, v_k+1); both curves are constant there.
  double sup = 0.0;
  for (std::size_t k = 0; k + 1 < out.lambda.u.size(); ++k) {
    const double s = out.lambda.u[k];
    sup = std::max(sup, static_cast<double>(dist(g1(s), g2(out.lambda(s)))));
  }
  sup = std::max(sup, static_cast<double>(dist(g1(1.0), g2(out.lambda(1.0)))));
  out.value = sup;
  return out;
}

}  // namespace skorodist
