#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace skorodist {

/// Points of R^d. R itself is represented by one-dimensional vectors.
using Vec = std::vector<double>;

template <class M, class P>
concept MetricFor = requires(const M& m, const P& a, const P& b) {
  { m(a, b) } -> std::convertible_to<double>;
};

struct AbsMetric {
  double operator()(double a, double b) const { return std::abs(a - b); }
};

struct EuclideanMetric {
  double operator()(const Vec& a, const Vec& b) const {
    if (a.size() != b.size()) throw InputError("dimension mismatch in Euclidean distance");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double d = a[i] - b[i];
      s += d * d;
    }
    return std::sqrt(s);
  }
};

/// A user-registered finite metric space; points are indices into the table.
class FiniteMetric {
 public:
  explicit FiniteMetric(std::vector<std::vector<double>> table) : table_(std::move(table)) {
    for (const auto& row : table_) {
      if (row.size() != table_.size()) throw InputError("finite metric table must be square");
    }
  }
  double operator()(std::size_t a, std::size_t b) const { return table_.at(a).at(b); }
  std::size_t size() const { return table_.size(); }

 private:
  std::vector<std::vector<double>> table_;
};

/// The metric each point type uses unless told otherwise.
template <class P>
struct DefaultMetric;
template <>
struct DefaultMetric<double> {
  using type = AbsMetric;
};
template <>
struct DefaultMetric<Vec> {
  using type = EuclideanMetric;
};
template <class P>
using default_metric_t = typename DefaultMetric<P>::type;

enum class MetricAxiom { nonnegativity, identity, symmetry, triangle };

inline std::string to_string(MetricAxiom a) {
  switch (a) {
    case MetricAxiom::nonnegativity: return "nonnegativity";
    case MetricAxiom::identity: return "identity";
    case MetricAxiom::symmetry: return "symmetry";
    case MetricAxiom::triangle: return "triangle";
  }
  return "?";
}

template <class P>
struct MetricViolation {
  MetricAxiom axiom;
  P x, y, z;  // for triangle: d(x,z) > d(x,y) + d(y,z)
  double excess;
};

template <class P>
struct MetricReport {
  std::vector<MetricViolation<P>> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the metric axioms on every sampled pair and triple. `tol` absorbs
/// rounding, scaled by the magnitudes involved.
template <class P, MetricFor<P> M>
MetricReport<P> validate_metric(const M& dist, std::span<const P> samples, double tol = 1e-12,
                                std::size_t max_reported = 64) {
  MetricReport<P> report;
  const std::size_t n = samples.size();
  if (n < 2) return report;
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = dist(samples[i], samples[j]);
  auto push = [&](MetricAxiom a, std::size_t i, std::size_t j, std::size_t k, double ex) {
    if (report.violations.size() < max_reported)
      report.violations.push_back({a, samples[i], samples[j], samples[k], ex});
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(d[i * n + i]) > tol) push(MetricAxiom::identity, i, i, i, std::abs(d[i * n + i]));
    for (std::size_t j = 0; j < n; ++j) {
      const double dij = d[i * n + j];
      if (dij < -tol) push(MetricAxiom::nonnegativity, i, j, j, -dij);
      const double asym = std::abs(dij - d[j * n + i]);
      if (i < j && asym > tol * std::max(1.0, std::abs(dij))) push(MetricAxiom::symmetry, i, j, j, asym);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const double lhs = d[i * n + k];
        const double rhs = d[i * n + j] + d[j * n + k];
        if (lhs - rhs > tol * std::max(1.0, lhs)) push(MetricAxiom::triangle, i, j, k, lhs - rhs);
      }
  return report;
}

}  // namespace skorodist
