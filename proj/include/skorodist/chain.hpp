#pragma once

// Distance computations between two finite chains (totally ordered sequences
// listed in increasing order), driven by their cross-distance grid. A grid is
// anything with rows(), cols() and a (i, j) -> distance call operator, so large
// inputs can be evaluated lazily.

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "metric.hpp"

namespace skorodist {

template <class C>
concept CostGrid = requires(const C& c, std::size_t i, std::size_t j) {
  { c.rows() } -> std::convertible_to<std::size_t>;
  { c.cols() } -> std::convertible_to<std::size_t>;
  { c(i, j) } -> std::convertible_to<double>;
};

class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  template <class P, MetricFor<P> M>
  static DistanceMatrix build(std::span<const P> a, std::span<const P> b, const M& dist) {
    DistanceMatrix d(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) d(i, j) = dist(a[i], b[j]);
    return d;
  }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<double>& values() const { return data_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

/// Swaps the roles of rows and columns without copying.
template <CostGrid C>
struct Transposed {
  const C& grid;
  std::size_t rows() const { return grid.cols(); }
  std::size_t cols() const { return grid.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return grid(j, i); }
};

using IndexPairs = std::vector<std::pair<std::size_t, std::size_t>>;

template <CostGrid C>
void require_nonempty(const C& d) {
  if (d.rows() == 0 || d.cols() == 0) throw InputError("distance between empty sets is undefined");
}

/// Plain Hausdorff distance between the row set and the column set.
template <CostGrid C>
double chain_hausdorff(const C& d) {
  require_nonempty(d);
  double h = 0.0;
  std::vector<double> col_min(d.cols(), std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < d.rows(); ++i) {
    double row_min = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < d.cols(); ++j) {
      const double v = d(i, j);
      row_min = std::min(row_min, v);
      col_min[j] = std::min(col_min[j], v);
    }
    h = std::max(h, row_min);
  }
  for (double c : col_min) h = std::max(h, c);
  return h;
}

namespace detail {

// Every ordered pair i <= j of rows has a column pair k <= l with both
// distances within r.
template <CostGrid C>
bool pairs_covered(const C& d, double r) {
  std::size_t running_first = 0;
  for (std::size_t j = 0; j < d.rows(); ++j) {
    std::size_t first = d.cols();
    for (std::size_t k = 0; k < d.cols(); ++k)
      if (d(j, k) <= r) {
        first = k;
        break;
      }
    if (first == d.cols()) return false;
    running_first = std::max(running_first, first);
    std::size_t last = first;
    for (std::size_t l = d.cols(); l-- > first;)
      if (d(j, l) <= r) {
        last = l;
        break;
      }
    if (running_first > last) return false;
  }
  return true;
}

inline std::uint64_t bits_of(double x) { return std::bit_cast<std::uint64_t>(x); }
inline double from_bits(std::uint64_t b) { return std::bit_cast<double>(b); }

}  // namespace detail

/// Hausdorff distance between the sets of ordered pairs of two chains, under the
/// max metric on pairs. Feasibility of a radius depends only on which entries
/// lie within it, so bisecting over the bit patterns of nonnegative doubles
/// lands exactly on the smallest feasible entry.
template <CostGrid C>
double chain_d_part(const C& d) {
  require_nonempty(d);
  double top = 0.0;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) top = std::max(top, static_cast<double>(d(i, j)));
  const Transposed<C> t{d};
  auto feasible = [&](double r) { return detail::pairs_covered(d, r) && detail::pairs_covered(t, r); };
  std::uint64_t lo = 0;
  std::uint64_t hi = detail::bits_of(top);  // the largest entry always covers everything
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (feasible(detail::from_bits(mid)))
      hi = mid;
    else
      lo = mid + 1;
  }
  return detail::from_bits(lo);
}

struct ChainMatch {
  double value = 0.0;
  IndexPairs pairs;  // a monotone correspondence attaining `value`
};

/// Minimax over monotone correspondences: a coupled traversal where each step
/// advances the row index, the column index, or both. Ties prefer the diagonal.
template <CostGrid C>
ChainMatch chain_d_tot(const C& d) {
  require_nonempty(d);
  const std::size_t n = d.rows();
  const std::size_t m = d.cols();
  enum : std::uint8_t { start, diag, up, left };
  std::vector<std::uint8_t> from(n * m, start);
  std::vector<double> prev(m), cur(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      double best = 0.0;
      std::uint8_t dir = start;
      if (i == 0 && j > 0) {
        best = cur[j - 1];
        dir = left;
      } else if (j == 0 && i > 0) {
        best = prev[0];
        dir = up;
      } else if (i > 0) {
        best = prev[j - 1];
        dir = diag;
        if (prev[j] < best) {
          best = prev[j];
          dir = up;
        }
        if (cur[j - 1] < best) {
          best = cur[j - 1];
          dir = left;
        }
      }
      cur[j] = std::max(static_cast<double>(d(i, j)), best);
      from[i * m + j] = dir;
    }
    std::swap(prev, cur);
  }
  ChainMatch out;
  out.value = prev[m - 1];
  std::size_t i = n - 1;
  std::size_t j = m - 1;
  out.pairs.emplace_back(i, j);
  while (from[i * m + j] != start) {
    switch (from[i * m + j]) {
      case diag: --i, --j; break;
      case up: --i; break;
      default: --j; break;
    }
    out.pairs.emplace_back(i, j);
  }
  std::reverse(out.pairs.begin(), out.pairs.end());
  return out;
}

}  // namespace skorodist
