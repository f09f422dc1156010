#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betweenness.hpp"
#include "errors.hpp"
#include "modulus.hpp"
#include "path.hpp"

namespace skorodist {

enum class ModulusKind { classic, skorohod };
enum class Verdict { consistent_with_precompact, not_precompact, inconclusive };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent_with_precompact: return "consistent-with-precompact";
    case Verdict::not_precompact: return "not-precompact";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

inline std::string_view to_string(ModulusKind k) { return k == ModulusKind::classic ? "classic" : "skorohod"; }

inline std::vector<double> default_deltas() {
  std::vector<double> d;
  for (double x = 0.5; x >= 1.0 / 256.0; x /= 2.0) d.push_back(x);
  return d;
}

inline std::vector<double> default_horizons(double horizon = kDefaultHorizon) { return {1.0, 2.0, 5.0, horizon}; }

struct CurvePoint {
  double delta;
  double value;
  std::size_t argmax;  // family member attaining the value
};

/// delta -> sup over the family of a modulus, delta ascending.
using Curve = std::vector<CurvePoint>;

struct Containment {
  double T;
  bool pass = true;
  std::vector<double> box_lo;  // per coordinate, empty when nothing is observed
  std::vector<double> box_hi;
  std::vector<double> norms;   // sup norm of each member on [-T, T]
};

namespace detail {

template <class P>
Vec coords(const P& x) {
  if constexpr (std::is_same_v<P, double>)
    return {x};
  else if constexpr (std::is_same_v<P, Vec>)
    return x;
  else
    return {};
}

inline std::vector<double> sorted_deltas(std::vector<double> deltas) {
  if (deltas.empty()) throw InputError("need at least one delta");
  for (double d : deltas)
    if (!(d > 0.0)) throw InputError("deltas must be positive");
  std::sort(deltas.begin(), deltas.end());
  deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
  return deltas;
}

}  // namespace detail

/// Bounding box of all values on [-T, T]. Finite data is always bounded, so a
/// family fails when its sup norms never shrink and end at least four times
/// above where they started (or above `radius`, when one is given).
template <class P>
std::vector<Containment> compact_containment(const std::vector<Path<P>>& family, const std::vector<double>& T_list,
                                             std::optional<double> radius = std::nullopt) {
  std::vector<Containment> out;
  for (double T : T_list) {
    Containment c{T};
    for (const auto& path : family) {
      double norm = 0.0;
      for (const auto& s : split_samples(path, -T, T)) {
        const Vec x = detail::coords(s.value);
        if (c.box_lo.empty()) c.box_lo = c.box_hi = x;
        double sq = 0.0;
        for (std::size_t i = 0; i < x.size() && i < c.box_lo.size(); ++i) {
          c.box_lo[i] = std::min(c.box_lo[i], x[i]);
          c.box_hi[i] = std::max(c.box_hi[i], x[i]);
          sq += x[i] * x[i];
        }
        norm = std::max(norm, std::sqrt(sq));
      }
      c.norms.push_back(norm);
    }
    if (radius) {
      c.pass = std::all_of(c.norms.begin(), c.norms.end(), [&](double n) { return n <= *radius; });
    } else if (c.norms.size() >= 2) {
      const bool growing = std::is_sorted(c.norms.begin(), c.norms.end());
      c.pass = !(growing && c.norms.back() >= 4.0 * std::max(c.norms.front(), 1.0));
    }
    out.push_back(std::move(c));
  }
  return out;
}

template <class P, MetricFor<P> M = default_metric_t<P>>
double path_modulus(const Path<P>& path, const Betweenness<P>& b, double T, double delta, ModulusKind kind,
                    const M& dist = M{}) {
  return kind == ModulusKind::classic ? modulus(path, T, delta, dist) : skorohod_modulus(path, b, T, delta, dist);
}

template <class P, MetricFor<P> M = default_metric_t<P>>
Curve equicontinuity_curve(const std::vector<Path<P>>& family, const Betweenness<P>& b, double T,
                           const std::vector<double>& deltas, ModulusKind kind, const M& dist = M{}) {
  if (kind == ModulusKind::classic)
    for (const auto& p : family)
      if (!p.is_continuous()) throw InputError("the classic modulus needs a family without jumps");
  Curve curve;
  for (double d : detail::sorted_deltas(deltas)) {
    CurvePoint pt{d, 0.0, 0};
    for (std::size_t k = 0; k < family.size(); ++k) {
      const double v = path_modulus(family[k], b, T, d, kind, dist);
      if (v > pt.value) pt = {d, v, k};
    }
    curve.push_back(pt);
  }
  return curve;
}

/// delta -> sup over the family of the oscillation at boundary time t.
template <class P, MetricFor<P> M = default_metric_t<P>>
Curve boundary_curve(const std::vector<Path<P>>& family, double t, const std::vector<double>& deltas,
                     const M& dist = M{}) {
  Curve curve;
  for (double d : detail::sorted_deltas(deltas)) {
    CurvePoint pt{d, 0.0, 0};
    for (std::size_t k = 0; k < family.size(); ++k) {
      const double v = boundary_oscillation(family[k], t, d, dist);
      if (v > pt.value) pt = {d, v, k};
    }
    curve.push_back(pt);
  }
  return curve;
}

struct CurveReport {
  std::string label;  // "T=2", "boundary t=0", ...
  Curve curve;
  Verdict verdict = Verdict::consistent_with_precompact;
  double floor = 0.0;  // the level the modulus fails to go below
  std::optional<std::size_t> witness;
};

struct FamilyReport {
  std::vector<Containment> containment;
  std::vector<CurveReport> curves;
  Verdict verdict = Verdict::consistent_with_precompact;
  std::string reason;

  bool containment_ok() const {
    return std::all_of(containment.begin(), containment.end(), [](const auto& c) { return c.pass; });
  }
};

namespace detail {

// Largest tested delta keeping the prefix's modulus below eps; 0 if none does.
inline double delta_star(const Curve& c, double eps) {
  double best = 0.0;
  for (const auto& p : c)
    if (p.value < eps) best = std::max(best, p.delta);
  return best;
}

// The modulus must vanish uniformly. Take eps as half its value at the largest
// delta and watch the delta needed to reach it as the family grows: if it keeps
// shrinking, no delta serves the whole family.
template <class F>
CurveReport judge_curve(std::string label, std::size_t family_size, const F& curve_of_prefix) {
  CurveReport r;
  r.label = std::move(label);
  r.curve = curve_of_prefix(family_size);
  if (r.curve.empty() || family_size == 0) return r;
  const double eps = 0.5 * r.curve.back().value;
  if (eps <= 0.0) return r;
  const std::size_t n1 = (family_size + 3) / 4;
  const std::size_t n2 = (family_size + 1) / 2;
  const double d1 = delta_star(curve_of_prefix(n1), eps);
  const double d2 = delta_star(curve_of_prefix(n2), eps);
  const double d3 = delta_star(r.curve, eps);
  if (n1 < n2 && n2 < family_size && d1 > d2 && d2 > d3) {
    r.verdict = Verdict::not_precompact;
    r.floor = eps;
    // The witness is the member that holds the smallest tested delta above eps.
    for (const auto& p : r.curve)
      if (p.value >= eps) {
        r.witness = p.argmax;
        break;
      }
  } else if (r.curve.front().value >= eps) {
    r.verdict = Verdict::inconclusive;
    r.floor = r.curve.front().value;
  }
  return r;
}

inline void combine(FamilyReport& rep) {
  if (!rep.containment_ok()) {
    rep.verdict = Verdict::not_precompact;
    for (const auto& c : rep.containment)
      if (!c.pass) {
        rep.reason = "sup norms grow without bound on [-T, T], T = " + std::to_string(c.T);
        break;
      }
    return;
  }
  for (const auto& c : rep.curves)
    if (c.verdict == Verdict::not_precompact) {
      rep.verdict = Verdict::not_precompact;
      rep.reason = "modulus floor " + std::to_string(c.floor) + " persists at " + c.label + " (member " +
                   std::to_string(*c.witness) + ")";
      return;
    }
  for (const auto& c : rep.curves)
    if (c.verdict == Verdict::inconclusive) {
      rep.verdict = Verdict::inconclusive;
      rep.reason = "modulus at the smallest delta is still large at " + c.label;
      return;
    }
  rep.verdict = Verdict::consistent_with_precompact;
  rep.reason = "moduli shrink at the tested resolutions; precompactness cannot be certified from finitely many deltas";
}

template <class P>
std::vector<Path<P>> prefix(const std::vector<Path<P>>& family, std::size_t n) {
  return {family.begin(), family.begin() + static_cast<std::ptrdiff_t>(n)};
}

}  // namespace detail

template <class P, MetricFor<P> M = default_metric_t<P>>
FamilyReport diagnose(const std::vector<Path<P>>& family, const Betweenness<P>& b, const std::vector<double>& T_list,
                      const std::vector<double>& deltas, ModulusKind kind, const M& dist = M{}) {
  FamilyReport rep;
  rep.containment = compact_containment(family, T_list);
  for (double T : T_list) {
    auto curve_of = [&](std::size_t n) { return equicontinuity_curve(detail::prefix(family, n), b, T, deltas, kind, dist); };
    char label[64];
    std::snprintf(label, sizeof label, "T=%g", T);
    rep.curves.push_back(detail::judge_curve(label, family.size(), curve_of));
  }
  detail::combine(rep);
  return rep;
}

/// diagnose for a family sharing one compact interval domain, adding the
/// oscillation at both end points.
template <class P, MetricFor<P> M = default_metric_t<P>>
FamilyReport diagnose_fixed_domain(const std::vector<Path<P>>& family, const Betweenness<P>& b,
                                   const std::vector<double>& deltas, ModulusKind kind = ModulusKind::skorohod,
                                   const M& dist = M{}) {
  if (family.empty()) return {};
  const Domain& dom = family.front().domain();
  if (!dom.is_single_interval() || !dom.bounded()) throw InputError("fixed-domain diagnosis needs one bounded interval");
  for (const auto& p : family)
    if (!(p.domain() == dom)) throw InputError("family members have different domains");
  const double T = std::max(std::abs(dom.start()), std::abs(dom.final()));
  FamilyReport rep = diagnose(family, b, {T}, deltas, kind, dist);
  for (double t : {dom.start(), dom.final()}) {
    auto curve_of = [&](std::size_t n) { return boundary_curve(detail::prefix(family, n), t, deltas, dist); };
    char label[64];
    std::snprintf(label, sizeof label, "boundary t=%g", t);
    rep.curves.push_back(detail::judge_curve(label, family.size(), curve_of));
  }
  detail::combine(rep);
  return rep;
}

}  // namespace skorodist
