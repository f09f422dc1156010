#pragma once

// Constructive instances on X = [0,1] that separate the ordered Hausdorff metrics.

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ordered_set.hpp"

namespace skorodist {

using RealOrderedSet = OrderedPointSet<double>;

/// Two chains of length m+1 alternating between [0,eps] and [1-eps,1] in
/// opposite phase: d^<m> <= eps while d^<m+1> >= 1/2.
inline std::pair<RealOrderedSet, RealOrderedSet> gen_noop(std::size_t m, double eps) {
  if (m < 1) throw InputError("gen_noop needs m >= 1");
  if (!(eps > 0.0 && eps <= 0.25)) throw InputError("gen_noop needs 0 < eps <= 1/4");
  const double step = eps / static_cast<double>(m + 1);
  std::vector<double> x, y;
  for (std::size_t k = 1; k <= m + 1; ++k) {
    if (k % 2 == 1) {
      x.push_back(1.0 - step * static_cast<double>(k - 1));
      y.push_back(step * static_cast<double>(k - 1));
    } else {
      x.push_back(step * static_cast<double>(k - 2));
      y.push_back(1.0 - step * static_cast<double>(k - 2));
    }
  }
  return {RealOrderedSet::chain(std::move(x)), RealOrderedSet::chain(std::move(y))};
}

/// The total chain x_1 < ... < x_{m+1} and its partially ordered perturbation
/// K_n = {x_k^l : k != l}, where x_k^l <= x_k'^l' iff k <= k' and l = l'.
/// The perturbation is of size O(1/n), so d^<m>(K_n, K) -> 0 while d^<m+1> stays >= 1/2.
inline std::pair<RealOrderedSet, RealOrderedSet> gen_diftop(std::size_t m, std::size_t n) {
  if (m < 1) throw InputError("gen_diftop needs m >= 1");
  if (n < 1) throw InputError("gen_diftop needs n >= 1");
  const double spacing = 1.0 / (4.0 * static_cast<double>(m + 1));
  std::vector<double> base;
  for (std::size_t k = 1; k <= m + 1; ++k)
    base.push_back(k % 2 == 1 ? 1.0 - spacing * static_cast<double>(k - 1) : spacing * static_cast<double>(k - 2));
  const double h = 1.0 / (8.0 * static_cast<double>(m + 1) * static_cast<double>(m + 2) * static_cast<double>(n));

  std::vector<double> pts;
  std::vector<std::pair<std::size_t, std::size_t>> label;  // (k, l), zero based
  for (std::size_t k = 0; k <= m; ++k)
    for (std::size_t l = 0; l <= m; ++l) {
      if (k == l) continue;
      const double shift = static_cast<double>(l + 1) * h;
      pts.push_back(k % 2 == 0 ? base[k] - shift : base[k] + shift);
      label.emplace_back(k, l);
    }
  IndexPairs order;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = 0; b < pts.size(); ++b)
      if (label[a].second == label[b].second && label[a].first <= label[b].first) order.emplace_back(a, b);
  return {RealOrderedSet(std::move(pts), order, false), RealOrderedSet::chain(std::move(base))};
}

/// K_n = {0, 1, eps_n} ordered 0 < 1 < eps_n. Cauchy in d_tot without a limit.
inline std::vector<RealOrderedSet> gen_noncompl(const std::vector<double>& eps) {
  std::vector<RealOrderedSet> out;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0.0 && eps[i] < 1.0)) throw InputError("gen_noncompl needs every eps in (0,1)");
    if (i > 0 && !(eps[i] < eps[i - 1])) throw InputError("gen_noncompl needs a decreasing sequence");
    out.push_back(RealOrderedSet::chain({0.0, 1.0, eps[i]}));
  }
  return out;
}

/// eps_n = 1/n for n = first..last.
inline std::vector<double> harmonic_sequence(std::size_t first, std::size_t last) {
  std::vector<double> out;
  for (std::size_t n = first; n <= last; ++n) out.push_back(1.0 / static_cast<double>(n));
  return out;
}

}  // namespace skorodist
