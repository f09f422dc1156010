#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "betweenness.hpp"
#include "errors.hpp"
#include "path.hpp"
#include "squeeze.hpp"

namespace skorodist {

/// A graph sample. `linked` marks a node reached from its predecessor without
/// leaving a domain interval, so the path is continuous between them.
template <class P>
struct GraphNode {
  SqueezedPoint<P> point;
  bool linked = false;
};

/// A finite sample of a (filled-in) graph, listed in its total order.
template <class P>
struct Graph {
  std::vector<GraphNode<P>> nodes;
  double eta = 0.0;         // sampling mesh
  bool exact = true;        // the sample is the whole graph
  double truncation = 0.0;  // Hausdorff error from clipping unbounded pieces

  std::vector<SqueezedPoint<P>> points() const {
    std::vector<SqueezedPoint<P>> out;
    out.reserve(nodes.size());
    for (const auto& n : nodes) out.push_back(n.point);
    return out;
  }
  std::size_t size() const { return nodes.size(); }
};

template <class P, MetricFor<P> M = default_metric_t<P>>
Graph<P> filled_graph(const Path<P>& path, const Betweenness<P>& b, const SqueezeConfig& cfg = {},
                      double eta = 0.01, double horizon = kDefaultHorizon, const M& dist = M{}) {
  if (!(eta > 0.0)) throw InputError("graph mesh must be positive");
  if (!(horizon > 0.0)) throw InputError("horizon must be positive");
  Graph<P> g;
  g.eta = eta;
  g.nodes.push_back({SqueezedPoint<P>::minus_infinity(), false});
  bool clipped = false;

  for (const auto& piece : path.domain().pieces()) {
    const double a = std::max(piece.lo, -horizon);
    const double bnd = std::min(piece.hi, horizon);
    if (piece.lo < -horizon || piece.hi > horizon) clipped = true;
    if (a > bnd) continue;

    std::vector<double> ts = {a, bnd};
    if (!piece.isolated()) {
      g.exact = false;
      const double len = bnd - a;
      const auto steps = static_cast<std::size_t>(std::ceil(len / eta));
      for (std::size_t k = 1; k < steps; ++k) ts.push_back(a + len * static_cast<double>(k) / static_cast<double>(steps));
    }
    for (const auto& j : path.jumps())
      if (a <= j.t && j.t <= bnd) ts.push_back(j.t);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    bool first = true;
    for (double t : ts) {
      const P& l = path.left(t);
      const P& r = path.right(t);
      if (l == r) {
        g.nodes.push_back({SqueezedPoint<P>::at(l, t), !first});
      } else {
        const Segment<P> seg = b.segment_for_mesh(l, r, eta, dist);
        if (seg.shape != SegmentShape::finite) g.exact = false;
        bool head = true;
        for (const auto& x : seg.samples) {
          g.nodes.push_back({SqueezedPoint<P>::at(x, t), head ? !first : true});
          head = false;
        }
      }
      first = false;
    }
  }
  g.nodes.push_back({SqueezedPoint<P>::plus_infinity(), false});
  if (clipped) g.truncation = cfg.phi(horizon) + cfg.dbar(horizon, kInf);
  return g;
}

/// The closed graph: both one-sided values at each time, no filling.
template <class P, MetricFor<P> M = default_metric_t<P>>
Graph<P> closed_graph(const Path<P>& path, const SqueezeConfig& cfg = {}, double eta = 0.01,
                      double horizon = kDefaultHorizon, const M& dist = M{}) {
  return filled_graph(path, Betweenness<P>::trivial(), cfg, eta, horizon, dist);
}

enum class GraphCondition { endpoints, time_order, segment, continuity };

inline std::string to_string(GraphCondition c) {
  switch (c) {
    case GraphCondition::endpoints: return "star points must open and close the order";
    case GraphCondition::time_order: return "time decreases along the order";
    case GraphCondition::segment: return "equal-time points leave the segment of their extremes";
    case GraphCondition::continuity: return "linked points are spatially apart";
  }
  return "?";
}

struct GraphViolation {
  GraphCondition condition;
  std::size_t index;  // offending node
};

struct GraphReport {
  std::vector<GraphViolation> violations;
  bool ok() const { return violations.empty(); }
  bool has(GraphCondition c) const {
    return std::any_of(violations.begin(), violations.end(), [c](const auto& v) { return v.condition == c; });
  }
};

/// Checks that an ordered sample can be the filled graph of a path: stars at the
/// ends, weakly increasing time, at each time every point lies in the segment
/// spanned by the first and last point there, consistently with the segment
/// order, and linked nodes at distinct times agree spatially up to `tol`.
template <class P, MetricFor<P> M = default_metric_t<P>>
GraphReport check_graph(const Graph<P>& g, const Betweenness<P>& b, const M& dist = M{}, double tol = 1e-9) {
  GraphReport report;
  const auto& n = g.nodes;
  auto fail = [&](GraphCondition c, std::size_t i) { report.violations.push_back({c, i}); };
  if (n.size() < 2 || !(n.front().point == SqueezedPoint<P>::minus_infinity()) ||
      !(n.back().point == SqueezedPoint<P>::plus_infinity()))
    fail(GraphCondition::endpoints, 0);
  for (std::size_t i = 1; i + 1 < n.size(); ++i)
    if (n[i].point.is_star()) fail(GraphCondition::endpoints, i);
  if (!report.ok()) return report;

  for (std::size_t i = 1; i < n.size(); ++i)
    if (n[i].point.t < n[i - 1].point.t) fail(GraphCondition::time_order, i);

  const double seg_tol = b.is_exact_kind() ? 0.0 : tol;
  std::size_t i = 1;
  while (i + 1 < n.size()) {
    std::size_t j = i;
    while (j + 1 < n.size() - 1 && n[j + 1].point.t == n[i].point.t) ++j;
    if (j - i >= 2) {
      const P& first = *n[i].point.x;
      const P& last = *n[j].point.x;
      const Segment<P> span = b.probe(first, last);
      for (std::size_t k = i + 1; k < j; ++k) {
        const P& x = *n[k].point.x;
        if (!span.contains(x, dist, seg_tol) || !b.probe(first, *n[k + 1].point.x).contains(x, dist, seg_tol))
          fail(GraphCondition::segment, k);
      }
    }
    i = j + 1;
  }

  for (std::size_t k = 2; k + 1 < n.size(); ++k) {
    const auto& cur = n[k].point;
    const auto& prev = n[k - 1].point;
    if (n[k].linked && cur.t > prev.t && dist(*prev.x, *cur.x) > tol) fail(GraphCondition::continuity, k);
  }
  return report;
}

}  // namespace skorodist
