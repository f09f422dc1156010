#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "betweenness.hpp"
#include "errors.hpp"
#include "path.hpp"

namespace skorodist {

/// Classic modulus of continuity: sup d(pi(t1), pi(t2)) over domain times in
/// [-T, T] with 0 < t2 - t1 <= delta. Jump-free step paths are constant on each
/// domain piece, so only the nearest times of two pieces matter.
template <class P, MetricFor<P> M = default_metric_t<P>>
double modulus(const Path<P>& path, double T, double delta, const M& dist = M{}) {
  if (!path.is_continuous()) throw InputError("the classic modulus needs a path without jumps");
  struct Atom {
    double lo, hi;
    P value;
  };
  std::vector<Atom> atoms;
  for (const auto& p : path.domain().pieces()) {
    const double lo = std::max(p.lo, -T);
    const double hi = std::min(p.hi, T);
    if (lo > hi) continue;
    atoms.push_back({lo, hi, path.right(std::isinf(lo) ? hi : lo)});
  }
  double best = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size() && atoms[j].lo - atoms[i].hi <= delta; ++j)
      best = std::max(best, static_cast<double>(dist(atoms[i].value, atoms[j].value)));
  return best;
}

namespace detail {

/// Maximal stretches of equal value along the split samples.
template <class P>
struct ValueRun {
  double start;
  double end;
  P value;
};

template <class P>
std::vector<ValueRun<P>> value_runs(const Path<P>& path, double lo, double hi) {
  std::vector<ValueRun<P>> runs;
  for (const auto& s : split_samples(path, lo, hi)) {
    const double t = s.time.real();
    if (!runs.empty() && runs.back().value == s.value)
      runs.back().end = t;
    else
      runs.push_back({t, t, s.value});
  }
  return runs;
}

}  // namespace detail

/// Skorohod modulus: sup over split times tau1 <= tau2 <= tau3 in the domain
/// within [-T, T], tau3 - tau1 <= delta, of the distance from pi(tau2) to the
/// segment <pi(tau1), pi(tau3)>. The outer times may be pushed to the inner ends
/// of their value runs, so triples of runs suffice.
template <class P, MetricFor<P> M = default_metric_t<P>>
double skorohod_modulus(const Path<P>& path, const Betweenness<P>& b, double T, double delta, const M& dist = M{}) {
  const auto runs = detail::value_runs(path, -T, T);
  double best = 0.0;
  for (std::size_t a = 0; a < runs.size(); ++a) {
    for (std::size_t c = a + 2; c < runs.size() && runs[c].start - runs[a].end <= delta; ++c) {
      const Segment<P> seg = b.probe(runs[a].value, runs[c].value);
      for (std::size_t m = a + 1; m < c; ++m) best = std::max(best, seg.distance(runs[m].value, dist));
    }
  }
  return best;
}

/// sup d(pi(s), pi(t)) over domain times s with |s - t| <= delta, using the value
/// just after t; measures how fast the path leaves its value at a boundary time.
template <class P, MetricFor<P> M = default_metric_t<P>>
double boundary_oscillation(const Path<P>& path, double t, double delta, const M& dist = M{}) {
  const P& anchor = path.right(t);
  double best = 0.0;
  for (const auto& s : split_samples(path, t - delta, t + delta))
    best = std::max(best, static_cast<double>(dist(anchor, s.value)));
  return best;
}

}  // namespace skorodist
