#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "metric.hpp"

namespace skorodist {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class PhiKind { exp_neg_abs, inv_one_plus_sq };
enum class DbarKind { tanh };

/// Space-time weighting for the squeezed space. phi vanishes at +-inf and is
/// positive on finite times; dbar metrizes the extended real line.
struct SqueezeConfig {
  PhiKind phi_kind = PhiKind::exp_neg_abs;
  DbarKind dbar_kind = DbarKind::tanh;

  double phi(double t) const {
    if (std::isinf(t)) return 0.0;
    switch (phi_kind) {
      case PhiKind::exp_neg_abs: return std::exp(-std::abs(t));
      case PhiKind::inv_one_plus_sq: return 1.0 / (1.0 + t * t);
    }
    return 0.0;
  }

  /// Both supported phi kinds peak at t = 0 with value 1.
  double phi_sup() const { return 1.0; }

  /// dbar(s,t) = |coord(s) - coord(t)|: the extended line embedded in a bounded interval.
  double dbar_coord(double t) const {
    switch (dbar_kind) {
      case DbarKind::tanh: return std::tanh(t);
    }
    return 0.0;
  }

  double dbar(double s, double t) const { return std::abs(dbar_coord(s) - dbar_coord(t)); }
};

inline std::string_view to_string(PhiKind k) {
  return k == PhiKind::exp_neg_abs ? "exp_neg_abs" : "inv_one_plus_sq";
}
inline std::string_view to_string(DbarKind) { return "tanh"; }

inline PhiKind parse_phi_kind(std::string_view s) {
  if (s == "exp_neg_abs") return PhiKind::exp_neg_abs;
  if (s == "inv_one_plus_sq") return PhiKind::inv_one_plus_sq;
  throw InputError("unknown phi: " + std::string(s));
}
inline DbarKind parse_dbar_kind(std::string_view s) {
  if (s == "tanh") return DbarKind::tanh;
  throw InputError("unknown dbar: " + std::string(s));
}

/// A point (x, t) of space-time, or one of the two star points (*, -inf), (*, +inf).
template <class P>
struct SqueezedPoint {
  std::optional<P> x;
  double t = 0.0;

  static SqueezedPoint at(P x, double t) {
    if (!std::isfinite(t)) throw InputError("spatial squeezed points need a finite time");
    return {std::move(x), t};
  }
  static SqueezedPoint minus_infinity() { return {std::nullopt, -kInf}; }
  static SqueezedPoint plus_infinity() { return {std::nullopt, kInf}; }

  bool is_star() const { return !x.has_value(); }
  friend bool operator==(const SqueezedPoint&, const SqueezedPoint&) = default;
};

template <class P, MetricFor<P> M>
double d_sqz(const SqueezedPoint<P>& a, const SqueezedPoint<P>& b, const M& base,
             const SqueezeConfig& cfg = {}) {
  const double pa = cfg.phi(a.t);
  const double pb = cfg.phi(b.t);
  double spatial = 0.0;
  if (!a.is_star() && !b.is_star()) spatial = std::min(pa, pb) * std::min(base(*a.x, *b.x), 1.0);
  return spatial + std::abs(pa - pb) + cfg.dbar(a.t, b.t);
}

/// d_sqz as a metric functor over squeezed points.
template <class P, MetricFor<P> M>
struct SqueezedMetric {
  M base;
  SqueezeConfig cfg;
  double operator()(const SqueezedPoint<P>& a, const SqueezedPoint<P>& b) const {
    return d_sqz(a, b, base, cfg);
  }
};

}  // namespace skorodist
