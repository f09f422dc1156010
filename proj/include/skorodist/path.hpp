#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "metric.hpp"
#include "split_time.hpp"
#include "squeeze.hpp"

namespace skorodist {

inline constexpr double kDefaultHorizon = 20.0;

struct TimeInterval {
  double lo;
  double hi;
};

/// One connected component of a domain: a closed interval or an isolated point (lo == hi).
struct DomainPiece {
  double lo;
  double hi;
  bool isolated() const { return lo == hi; }
};

/// A closed subset of the real line: finitely many closed intervals (ends may be
/// infinite) plus finitely many isolated points.
class Domain {
 public:
  Domain() = default;

  Domain(std::vector<TimeInterval> intervals, std::vector<double> points) {
    for (const auto& iv : intervals) {
      if (std::isnan(iv.lo) || std::isnan(iv.hi)) throw InputError("domain interval end is NaN");
      if (iv.lo > iv.hi) throw InputError("domain interval with lo > hi");
      if (iv.lo == iv.hi) {
        points.push_back(iv.lo);
        continue;
      }
      if (iv.lo == kInf || iv.hi == -kInf) throw InputError("domain interval lies at infinity");
    }
    std::erase_if(intervals, [](const TimeInterval& iv) { return iv.lo == iv.hi; });
    std::sort(intervals.begin(), intervals.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    for (const auto& iv : intervals) {
      if (!pieces_.empty() && !pieces_.back().isolated() && iv.lo <= pieces_.back().hi)
        pieces_.back().hi = std::max(pieces_.back().hi, iv.hi);
      else
        pieces_.push_back({iv.lo, iv.hi});
    }
    for (double p : points)
      if (!std::isfinite(p)) throw InputError("isolated domain points must be finite");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (double p : points)
      if (!contains(p)) pieces_.push_back({p, p});
    std::sort(pieces_.begin(), pieces_.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  }

  static Domain interval(double lo, double hi) { return Domain({{lo, hi}}, {}); }
  static Domain finite(std::vector<double> points) { return Domain({}, std::move(points)); }

  const std::vector<DomainPiece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  double start() const { return empty() ? kInf : pieces_.front().lo; }
  double final() const { return empty() ? -kInf : pieces_.back().hi; }

  /// Index of the piece containing t, if any.
  std::optional<std::size_t> piece_of(double t) const {
    for (std::size_t i = 0; i < pieces_.size(); ++i)
      if (pieces_[i].lo <= t && t <= pieces_[i].hi) return i;
    return std::nullopt;
  }
  bool contains(double t) const { return piece_of(t).has_value(); }

  /// t is reached from the left without leaving the domain.
  bool approached_from_left(double t) const {
    const auto i = piece_of(t);
    return i && pieces_[*i].lo < t;
  }

  bool bounded() const { return empty() || (std::isfinite(start()) && std::isfinite(final())); }
  bool is_single_interval() const { return pieces_.size() == 1 && !pieces_.front().isolated(); }

  /// Open gaps between consecutive pieces, in time order.
  std::vector<TimeInterval> gaps() const {
    std::vector<TimeInterval> out;
    for (std::size_t i = 1; i < pieces_.size(); ++i) out.push_back({pieces_[i - 1].hi, pieces_[i].lo});
    return out;
  }

  std::vector<TimeInterval> intervals() const {
    std::vector<TimeInterval> out;
    for (const auto& p : pieces_)
      if (!p.isolated()) out.push_back({p.lo, p.hi});
    return out;
  }
  std::vector<double> points() const {
    std::vector<double> out;
    for (const auto& p : pieces_)
      if (p.isolated()) out.push_back(p.lo);
    return out;
  }

  friend bool operator==(const Domain& a, const Domain& b) {
    return a.pieces_.size() == b.pieces_.size() &&
           std::equal(a.pieces_.begin(), a.pieces_.end(), b.pieces_.begin(),
                      [](const auto& x, const auto& y) { return x.lo == y.lo && x.hi == y.hi; });
  }

 private:
  std::vector<DomainPiece> pieces_;
};

/// The path takes value `left` at t- and `right` at t+.
template <class P>
struct Jump {
  double t;
  P left;
  P right;
};

namespace detail {

template <class P>
void check_value(const P& v, std::size_t& dim) {
  if constexpr (std::is_same_v<P, Vec>) {
    if (dim == 0) dim = v.size();
    if (v.size() != dim || v.empty()) throw InputError("path values must all have the same positive dimension");
    for (double c : v)
      if (!std::isfinite(c)) throw InputError("path values must be finite");
  } else if constexpr (std::is_same_v<P, double>) {
    if (!std::isfinite(v)) throw InputError("path values must be finite");
  }
}

}  // namespace detail

/// A cadlag path in step representation: a closed domain, a starting value and
/// a list of jump records. Between records the value is constant; inside an
/// interval a record's left value must equal the value just before it.
template <class P>
class Path {
 public:
  Path() = default;

  Path(Domain domain, P initial, std::vector<Jump<P>> jumps)
      : domain_(std::move(domain)), initial_(std::move(initial)), jumps_(std::move(jumps)) {
    std::sort(jumps_.begin(), jumps_.end(), [](const auto& a, const auto& b) { return a.t < b.t; });
    std::size_t dim = 0;
    if (!domain_.empty()) detail::check_value(initial_, dim);
    const P* running = &initial_;
    for (std::size_t k = 0; k < jumps_.size(); ++k) {
      const auto& j = jumps_[k];
      if (!std::isfinite(j.t)) throw InputError("jump time must be finite");
      if (k > 0 && jumps_[k - 1].t == j.t) throw InputError("two jump records at t = " + std::to_string(j.t));
      if (!domain_.contains(j.t)) throw InputError("jump at t = " + std::to_string(j.t) + " lies outside the domain");
      detail::check_value(j.left, dim);
      detail::check_value(j.right, dim);
      if (domain_.approached_from_left(j.t) && !(j.left == *running))
        throw InputError("left value at t = " + std::to_string(j.t) + " differs from the value just before it");
      running = &j.right;
    }
  }

  /// The path with empty domain.
  static Path trivial() { return Path(); }

  /// Constant value on a domain.
  static Path constant(Domain domain, P value) { return Path(std::move(domain), std::move(value), {}); }

  /// Step function on [lo, hi] starting at `initial`, switching to value v_k at time t_k.
  static Path step(double lo, double hi, P initial, const std::vector<std::pair<double, P>>& switches) {
    std::vector<Jump<P>> jumps;
    P running = initial;
    for (const auto& [t, v] : switches) {
      jumps.push_back({t, running, v});
      running = v;
    }
    return Path(Domain::interval(lo, hi), std::move(initial), std::move(jumps));
  }

  /// Finite domain with explicit (t, left, right) records.
  static Path finite(const std::vector<Jump<P>>& records) {
    if (records.empty()) return trivial();
    std::vector<double> ts;
    for (const auto& r : records) ts.push_back(r.t);
    return Path(Domain::finite(ts), records.front().left, records);
  }

  const Domain& domain() const { return domain_; }
  const P& initial() const { return initial_; }
  const std::vector<Jump<P>>& jumps() const { return jumps_; }
  bool is_trivial() const { return domain_.empty(); }

  double start_time() const { return domain_.start(); }
  double final_time() const { return domain_.final(); }

  /// pi(t-) for t in the domain.
  const P& left(double t) const {
    require_in_domain(t);
    auto it = record_at(t);
    if (it != jumps_.end() && it->t == t) return it->left;
    return before(it);
  }

  /// pi(t+) for t in the domain.
  const P& right(double t) const {
    require_in_domain(t);
    auto it = record_at(t);
    if (it != jumps_.end() && it->t == t) return it->right;
    return before(it);
  }

  const P& value(const SplitTime& tau) const { return tau.sign() == Sign::minus ? left(tau.real()) : right(tau.real()); }

  /// No jumps: pi(t-) = pi(t+) everywhere.
  bool is_continuous() const {
    return std::all_of(jumps_.begin(), jumps_.end(), [](const auto& j) { return j.left == j.right; });
  }

  /// Every value the path takes.
  std::vector<P> values() const {
    std::vector<P> out;
    if (is_trivial()) return out;
    out.push_back(initial_);
    for (const auto& j : jumps_) {
      out.push_back(j.left);
      out.push_back(j.right);
    }
    return out;
  }

 private:
  void require_in_domain(double t) const {
    if (!domain_.contains(t)) throw InputError("time " + std::to_string(t) + " is outside the path domain");
  }
  typename std::vector<Jump<P>>::const_iterator record_at(double t) const {
    return std::lower_bound(jumps_.begin(), jumps_.end(), t, [](const auto& j, double x) { return j.t < x; });
  }
  const P& before(typename std::vector<Jump<P>>::const_iterator it) const {
    return it == jumps_.begin() ? initial_ : std::prev(it)->right;
  }

  Domain domain_;
  P initial_{};
  std::vector<Jump<P>> jumps_;
};

/// Value of the path at one split time, with the domain piece it belongs to.
template <class P>
struct SplitSample {
  SplitTime time;
  P value;
  std::size_t piece;
};

/// The path's values over I_s intersected with [lo, hi], in split-time order.
/// Interval pieces contribute their (clipped) endpoints and every jump time; the
/// value is constant between consecutive samples of the same piece.
template <class P>
std::vector<SplitSample<P>> split_samples(const Path<P>& path, double lo = -kInf, double hi = kInf) {
  std::vector<SplitSample<P>> out;
  const auto& pieces = path.domain().pieces();
  auto jumps_in = [&](double a, double b) {
    std::vector<double> ts;
    for (const auto& j : path.jumps())
      if (a <= j.t && j.t <= b) ts.push_back(j.t);
    return ts;
  };
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const double a = std::max(pieces[k].lo, lo);
    const double b = std::min(pieces[k].hi, hi);
    if (a > b) continue;
    std::vector<double> ts = jumps_in(a, b);
    ts.push_back(a);
    ts.push_back(b);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (double t : ts) {
      if (std::isinf(t)) continue;
      out.push_back({SplitTime::minus(t), path.left(t), k});
      out.push_back({SplitTime::plus(t), path.right(t), k});
    }
  }
  return out;
}

/// Restriction to domain intersected with [lo, hi].
template <class P>
Path<P> restrict(const Path<P>& path, double lo, double hi) {
  if (lo > hi) throw InputError("restriction window with lo > hi");
  std::vector<TimeInterval> ivs;
  std::vector<double> pts;
  for (const auto& p : path.domain().pieces()) {
    const double a = std::max(p.lo, lo);
    const double b = std::min(p.hi, hi);
    if (a > b) continue;
    if (a == b)
      pts.push_back(a);
    else
      ivs.push_back({a, b});
  }
  const Domain dom(ivs, pts);
  if (dom.empty()) return Path<P>::trivial();
  std::vector<Jump<P>> jumps;
  for (const auto& j : path.jumps())
    if (dom.contains(j.t)) jumps.push_back(j);
  // The new first time may sit inside an old interval; its left value is free now.
  return Path<P>(dom, path.left(dom.start()), std::move(jumps));
}

/// Restriction to times <= t; t must belong to the domain.
template <class P>
Path<P> restrict(const Path<P>& path, double t) {
  if (!path.domain().contains(t)) throw InputError("restriction time " + std::to_string(t) + " is outside the domain");
  return restrict(path, -kInf, t);
}

enum class InterpolationMode { left, right, continuous };

/// Fills the gaps of a jump-free path inside the convex hull of its domain.
/// left: hold the value from the left end of each gap (jump at the right end);
/// right: take the value of the right end (jump at the left end);
/// continuous: follow phi(pi(t_l), pi(t_r), p) through the gap, sampled at spacing <= eta.
template <class P>
Path<P> interpolate(const Path<P>& path, InterpolationMode mode,
                    const std::function<P(const P&, const P&, double)>& phi = {}, double eta = 0.01) {
  if (!path.is_continuous()) throw InputError("interpolation needs a path without jumps");
  if (mode == InterpolationMode::continuous && !phi)
    throw InputError("continuous interpolation needs an interpolation function");
  const Domain& dom = path.domain();
  const auto gaps = dom.gaps();
  if (gaps.empty()) return path;

  if (mode == InterpolationMode::continuous) {
    if (!(eta > 0.0)) throw InputError("interpolation mesh must be positive");
    std::vector<double> pts = dom.points();
    std::vector<Jump<P>> records;
    for (const auto& g : gaps) {
      const P& a = path.right(g.lo);
      const P& b = path.left(g.hi);
      const auto steps = static_cast<std::size_t>(std::ceil((g.hi - g.lo) / eta));
      for (std::size_t k = 1; k < steps; ++k) {
        const double p = static_cast<double>(k) / static_cast<double>(steps);
        const double t = g.lo + p * (g.hi - g.lo);
        const P v = phi(a, b, p);
        pts.push_back(t);
        records.push_back({t, v, v});
      }
    }
    // Level changes at piece starts are carried by the records of the original path.
    for (const auto& p : dom.pieces()) records.push_back({p.lo, path.left(p.lo), path.right(p.lo)});
    for (const auto& j : path.jumps())
      if (std::none_of(records.begin(), records.end(), [&](const auto& r) { return r.t == j.t; }))
        records.push_back(j);
    return Path<P>(Domain(dom.intervals(), pts), path.left(dom.start()), std::move(records));
  }

  std::vector<Jump<P>> jumps;
  for (const auto& g : gaps) {
    const P& a = path.right(g.lo);
    const P& b = path.left(g.hi);
    if (a == b) continue;
    if (mode == InterpolationMode::left)
      jumps.push_back({g.hi, a, b});
    else
      jumps.push_back({g.lo, a, b});
  }
  return Path<P>(Domain::interval(dom.start(), dom.final()), path.left(dom.start()), std::move(jumps));
}

struct Distortion {
  double left = 0.0;
  double right = 0.0;
};

/// Worst time displacement (in squeezed-time terms) caused by filling each gap
/// from its left end (`left`) or right end (`right`).
inline Distortion interpolation_distortion(const Domain& dom, const SqueezeConfig& cfg = {}) {
  Distortion out;
  auto cost = [&](double t, double anchor) { return cfg.dbar(t, anchor) + std::abs(cfg.phi(t) - cfg.phi(anchor)); };
  for (const auto& g : dom.gaps()) {
    // Away from 0 both terms grow with the distance to the anchor, so the far end
    // of the gap is the supremum. A gap around 0 is scanned on a mesh.
    std::vector<double> probe = {g.lo, g.hi};
    if (g.lo < 0.0 && 0.0 < g.hi) {
      probe.push_back(0.0);
      constexpr int kMesh = 4096;
      for (int k = 1; k < kMesh; ++k) probe.push_back(g.lo + (g.hi - g.lo) * k / kMesh);
    }
    for (double t : probe) {
      out.left = std::max(out.left, cost(t, g.lo));
      out.right = std::max(out.right, cost(t, g.hi));
    }
  }
  return out;
}

template <class P>
Distortion interpolation_distortion(const Path<P>& path, const SqueezeConfig& cfg = {}) {
  return interpolation_distortion(path.domain(), cfg);
}

}  // namespace skorodist
