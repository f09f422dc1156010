#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "metric.hpp"

namespace skorodist {

// Linear structure for the two supported point types.

inline double blend(double x, double z, double p) { return (1.0 - p) * x + p * z; }

inline Vec blend(const Vec& x, const Vec& z, double p) {
  if (x.size() != z.size()) throw InputError("dimension mismatch in linear segment");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (1.0 - p) * x[i] + p * z[i];
  return out;
}

/// Euclidean distance from y to the straight segment [x, z].
inline double segment_distance(double y, double x, double z) {
  const double lo = std::min(x, z);
  const double hi = std::max(x, z);
  if (y < lo) return lo - y;
  if (y > hi) return y - hi;
  return 0.0;
}

inline double segment_distance(const Vec& y, const Vec& x, const Vec& z) {
  if (y.size() != x.size() || x.size() != z.size()) throw InputError("dimension mismatch in segment distance");
  double len2 = 0.0;
  double dot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = z[i] - x[i];
    len2 += d * d;
    dot += (y[i] - x[i]) * d;
  }
  const double p = len2 > 0.0 ? std::clamp(dot / len2, 0.0, 1.0) : 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double q = x[i] + p * (z[i] - x[i]);
    s += (y[i] - q) * (y[i] - q);
  }
  return std::sqrt(s);
}

enum class BetweennessKind { trivial, linear, order, interpolation, custom };

inline std::string to_string(BetweennessKind k) {
  switch (k) {
    case BetweennessKind::trivial: return "trivial";
    case BetweennessKind::linear: return "linear";
    case BetweennessKind::order: return "order";
    case BetweennessKind::interpolation: return "interpolation";
    case BetweennessKind::custom: return "custom";
  }
  return "?";
}

/// How distance-to-segment queries are answered.
enum class SegmentShape {
  finite,   // the samples are the whole segment
  linear,   // the segment is the straight line between the endpoints
  sampled,  // the samples approximate a continuum
};

/// A segment <x,z> together with an ordered sample. The sample order is the
/// internal order <=_{x,z}: it starts at x and ends at z.
template <class P>
struct Segment {
  P x;
  P z;
  std::vector<P> samples;
  SegmentShape shape = SegmentShape::finite;

  bool exact() const { return shape != SegmentShape::sampled; }

  template <MetricFor<P> M>
  double distance(const P& y, const M& dist) const {
    if (shape == SegmentShape::linear) {
      if constexpr (requires { segment_distance(y, x, z); }) return segment_distance(y, x, z);
    }
    double best = kSegmentInf;
    for (const auto& s : samples) best = std::min(best, static_cast<double>(dist(y, s)));
    return best;
  }

  template <MetricFor<P> M>
  bool contains(const P& y, const M& dist, double tol = 0.0) const {
    return distance(y, dist) <= tol;
  }

  static constexpr double kSegmentInf = 1e300;
};

/// The segment operation <x,z>. Instances are cheap to copy and immutable.
template <class P>
class Betweenness {
 public:
  using Maker = std::function<Segment<P>(const P&, const P&, std::size_t)>;

  Betweenness(BetweennessKind kind, std::string name, Maker make, std::size_t n_seg = 33)
      : kind_(kind), name_(std::move(name)), make_(std::move(make)), n_seg_(n_seg) {
    if (n_seg_ < 2) throw InputError("segment resolution must be at least 2");
  }

  static Betweenness trivial() {
    return {BetweennessKind::trivial, "trivial", [](const P& x, const P& z, std::size_t) {
              Segment<P> s{x, z, {x}, SegmentShape::finite};
              if (!(x == z)) s.samples.push_back(z);
              return s;
            }};
  }

  static Betweenness linear(std::size_t n_seg = 33) {
    return {BetweennessKind::linear, "linear",
            [](const P& x, const P& z, std::size_t n) {
              Segment<P> s{x, z, {}, SegmentShape::linear};
              if (x == z) {
                s.samples = {x};
                return s;
              }
              s.samples.reserve(n);
              for (std::size_t k = 0; k < n; ++k) {
                const double p = static_cast<double>(k) / static_cast<double>(n - 1);
                s.samples.push_back(k + 1 == n ? z : blend(x, z, p));
              }
              return s;
            },
            n_seg};
  }

  /// Order betweenness on a finite totally ordered set `universe` (sorted by operator<).
  static Betweenness order(std::vector<P> universe) {
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    auto X = std::make_shared<const std::vector<P>>(std::move(universe));
    return {BetweennessKind::order, "order", [X](const P& x, const P& z, std::size_t) {
              auto ix = std::lower_bound(X->begin(), X->end(), x);
              auto iz = std::lower_bound(X->begin(), X->end(), z);
              if (ix == X->end() || !(*ix == x) || iz == X->end() || !(*iz == z))
                throw InputError("order segment endpoints must belong to the ordered set");
              Segment<P> s{x, z, {}, SegmentShape::finite};
              if (ix <= iz) {
                s.samples.assign(ix, iz + 1);
              } else {
                s.samples.assign(iz, ix + 1);
                std::reverse(s.samples.begin(), s.samples.end());
              }
              return s;
            }};
  }

  /// Segment generated by an interpolation function phi(x, z, p), p in [0,1].
  /// The endpoint conditions phi(x,z,0)=x and phi(x,z,1)=z are checked on every call.
  static Betweenness interpolation(std::function<P(const P&, const P&, double)> phi, std::string name,
                                   std::size_t n_seg = 33, double tol = 1e-9) {
    return {BetweennessKind::interpolation, std::move(name),
            [phi = std::move(phi), tol](const P& x, const P& z, std::size_t n) {
              const default_metric_t<P> dist;
              Segment<P> s{x, z, {}, SegmentShape::sampled};
              s.samples.reserve(n);
              for (std::size_t k = 0; k < n; ++k) {
                const double p = static_cast<double>(k) / static_cast<double>(n - 1);
                s.samples.push_back(phi(x, z, p));
              }
              if (dist(s.samples.front(), x) > tol || dist(s.samples.back(), z) > tol)
                throw InputError("interpolation function does not fix the endpoints");
              s.samples.front() = x;
              s.samples.back() = z;
              return s;
            },
            n_seg};
  }

  /// Arbitrary user segment operation; used to probe the axiom checker.
  static Betweenness custom(std::string name, Maker make, std::size_t n_seg = 33) {
    return {BetweennessKind::custom, std::move(name), std::move(make), n_seg};
  }

  Segment<P> segment(const P& x, const P& z) const { return make_(x, z, n_seg_); }

  /// Segment for membership queries only; linear segments need no interior samples.
  Segment<P> probe(const P& x, const P& z) const {
    return make_(x, z, kind_ == BetweennessKind::linear ? 2 : n_seg_);
  }

  /// Segment sampled finely enough that consecutive samples are at most `eta` apart.
  template <MetricFor<P> M>
  Segment<P> segment_for_mesh(const P& x, const P& z, double eta, const M& dist) const {
    std::size_t n = n_seg_;
    if (eta > 0.0) {
      const double len = dist(x, z);
      n = std::max(n, static_cast<std::size_t>(std::ceil(len / eta)) + 1);
    }
    return make_(x, z, n);
  }

  BetweennessKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::size_t resolution() const { return n_seg_; }

  /// Trivial and order segments are finite sets, so set checks need no tolerance.
  bool is_exact_kind() const {
    return kind_ == BetweennessKind::trivial || kind_ == BetweennessKind::order;
  }

 private:
  BetweennessKind kind_;
  std::string name_;
  Maker make_;
  std::size_t n_seg_;
};

template <class P>
Segment<P> trivial_segment(const P& x, const P& z) {
  return Betweenness<P>::trivial().segment(x, z);
}

template <class P>
Segment<P> linear_segment(const P& x, const P& z, std::size_t n_seg = 33) {
  return Betweenness<P>::linear(n_seg).segment(x, z);
}

template <class P>
Segment<P> order_segment(const P& x, const P& z, std::vector<P> universe) {
  return Betweenness<P>::order(std::move(universe)).segment(x, z);
}

template <class P>
Segment<P> interpolation_segment(const P& x, const P& z, std::function<P(const P&, const P&, double)> phi,
                                 std::size_t n_seg = 33) {
  return Betweenness<P>::interpolation(std::move(phi), "user", n_seg).segment(x, z);
}

// Named interpolation functions for vector-valued paths.
using VecInterpolation = std::function<Vec(const Vec&, const Vec&, double)>;

inline const std::map<std::string, VecInterpolation>& interpolation_registry() {
  static const std::map<std::string, VecInterpolation> registry = {
      {"linear", [](const Vec& x, const Vec& z, double p) { return blend(x, z, p); }},
      {"smoothstep",
       [](const Vec& x, const Vec& z, double p) { return blend(x, z, p * p * (3.0 - 2.0 * p)); }},
      {"geometric",
       [](const Vec& x, const Vec& z, double p) {
         if (x.size() != z.size()) throw InputError("dimension mismatch in geometric interpolation");
         Vec out(x.size());
         for (std::size_t i = 0; i < x.size(); ++i) {
           if (!(x[i] > 0.0) || !(z[i] > 0.0)) throw InputError("geometric interpolation needs positive values");
           out[i] = std::pow(x[i], 1.0 - p) * std::pow(z[i], p);
         }
         return out;
       }},
  };
  return registry;
}

inline Betweenness<Vec> registered_interpolation(const std::string& name, std::size_t n_seg = 33) {
  const auto& reg = interpolation_registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw InputError("no interpolation function registered as '" + name + "'");
  return Betweenness<Vec>::interpolation(it->second, name, n_seg);
}

// Axiom checking.

enum class BetweennessAxiom { symmetric, contains_endpoint, meet, join, point, nested, antisymmetric, exchange, order };

inline std::string to_string(BetweennessAxiom a) {
  switch (a) {
    case BetweennessAxiom::symmetric: return "<x,z> = <z,x>";
    case BetweennessAxiom::contains_endpoint: return "x in <x,z>";
    case BetweennessAxiom::meet: return "<x,y> meets <y,z> only in y";
    case BetweennessAxiom::join: return "<x,y> u <y,z> = <x,z>";
    case BetweennessAxiom::point: return "<x,x> = {x}";
    case BetweennessAxiom::nested: return "<x,y> inside <x,z>";
    case BetweennessAxiom::antisymmetric: return "mutual betweenness forces x = y";
    case BetweennessAxiom::exchange: return "y' in <x,y> implies y in <y',z>";
    case BetweennessAxiom::order: return "segment order is not a total order";
  }
  return "?";
}

template <class P>
struct AxiomViolation {
  BetweennessAxiom axiom;
  P x, y, z;
};

template <class P>
struct AxiomReport {
  std::vector<AxiomViolation<P>> violations;
  std::size_t triples_checked = 0;
  bool ok() const { return violations.empty(); }
  bool has(BetweennessAxiom a) const {
    return std::any_of(violations.begin(), violations.end(), [a](const auto& v) { return v.axiom == a; });
  }
};

namespace detail {

template <class P, class M>
bool subset_of(const Segment<P>& a, const Segment<P>& b, const M& dist, double tol) {
  return std::all_of(a.samples.begin(), a.samples.end(), [&](const P& s) { return b.contains(s, dist, tol); });
}

}  // namespace detail

/// Checks the four betweenness axioms, the derived meet/join/nesting/exchange properties and totality of the
/// segment order on every triple. Exact kinds are checked with zero tolerance;
/// other kinds use `eta_set`.
template <class P, MetricFor<P> M = default_metric_t<P>>
AxiomReport<P> check_axioms(const Betweenness<P>& b, std::span<const std::tuple<P, P, P>> triples,
                            double eta_set = 1e-9, const M& dist = M{}, std::size_t max_reported = 64) {
  AxiomReport<P> report;
  const double tol = b.is_exact_kind() ? 0.0 : eta_set;
  auto fail = [&](BetweennessAxiom a, const P& x, const P& y, const P& z) {
    if (report.violations.size() < max_reported) report.violations.push_back({a, x, y, z});
  };
  auto same = [&](const P& u, const P& v) { return dist(u, v) <= tol; };

  for (const auto& [x, y, z] : triples) {
    ++report.triples_checked;
    const Segment<P> xz = b.segment(x, z);
    const Segment<P> zx = b.segment(z, x);
    if (!detail::subset_of(xz, zx, dist, tol) || !detail::subset_of(zx, xz, dist, tol))
      fail(BetweennessAxiom::symmetric, x, y, z);
    if (!xz.contains(x, dist, tol)) fail(BetweennessAxiom::contains_endpoint, x, y, z);

    for (const P* p : {&x, &y, &z}) {
      const Segment<P> pp = b.segment(*p, *p);
      if (!std::all_of(pp.samples.begin(), pp.samples.end(), [&](const P& s) { return same(s, *p); }))
        fail(BetweennessAxiom::point, *p, *p, *p);
    }

    if (xz.contains(y, dist, tol)) {
      const Segment<P> xy = b.segment(x, y);
      const Segment<P> yz = b.segment(y, z);
      bool meet_ok = xy.contains(y, dist, tol) && yz.contains(y, dist, tol);
      for (const auto& s : xy.samples)
        if (yz.contains(s, dist, tol) && !same(s, y)) meet_ok = false;
      for (const auto& s : yz.samples)
        if (xy.contains(s, dist, tol) && !same(s, y)) meet_ok = false;
      if (!meet_ok) fail(BetweennessAxiom::meet, x, y, z);

      bool join_ok = detail::subset_of(xy, xz, dist, tol) && detail::subset_of(yz, xz, dist, tol);
      for (const auto& s : xz.samples)
        if (!xy.contains(s, dist, tol) && !yz.contains(s, dist, tol)) join_ok = false;
      if (!join_ok) fail(BetweennessAxiom::join, x, y, z);

      if (!detail::subset_of(xy, xz, dist, tol)) fail(BetweennessAxiom::nested, x, y, z);

      if (b.probe(y, z).contains(x, dist, tol) && !same(x, y)) fail(BetweennessAxiom::antisymmetric, x, y, z);

      // Exchange, with y' ranging over the sample of <x,z>.
      for (const auto& yp : xz.samples) {
        if (xy.contains(yp, dist, tol) && !b.probe(yp, z).contains(y, dist, tol)) {
          fail(BetweennessAxiom::exchange, x, y, z);
          break;
        }
      }
    }

    // <=_{x,z}: u <= v iff u in <x,v>. Must agree with the sample order and be antisymmetric.
    bool order_ok = true;
    const auto& S = xz.samples;
    for (std::size_t i = 0; i < S.size() && order_ok; ++i) {
      for (std::size_t j = i + 1; j < S.size(); ++j) {
        const bool fwd = b.probe(x, S[j]).contains(S[i], dist, tol);
        const bool bwd = b.probe(x, S[i]).contains(S[j], dist, tol);
        if (!fwd || (bwd && !same(S[i], S[j]))) {
          order_ok = false;
          break;
        }
      }
    }
    if (!order_ok) fail(BetweennessAxiom::order, x, y, z);
  }
  return report;
}

template <class P, MetricFor<P> M = default_metric_t<P>>
AxiomReport<P> check_axioms(const Betweenness<P>& b, const std::vector<std::tuple<P, P, P>>& triples,
                            double eta_set = 1e-9, const M& dist = M{}) {
  return check_axioms<P, M>(b, std::span<const std::tuple<P, P, P>>(triples), eta_set, dist);
}

}  // namespace skorodist
