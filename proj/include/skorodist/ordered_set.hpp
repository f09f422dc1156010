#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chain.hpp"
#include "errors.hpp"
#include "metric.hpp"

namespace skorodist {

struct OrderCheck {
  bool reflexive = true;
  bool antisymmetric = true;
  bool transitive = true;
  bool total = true;
  std::vector<std::string> witnesses;
  bool is_partial_order() const { return reflexive && antisymmetric && transitive; }
};

/// Checks a relation on {0..n-1}, given as the pairs (i, j) meaning i <= j,
/// against the partial order axioms. Totality is reported separately.
inline OrderCheck check_order_relation(std::size_t n, const IndexPairs& pairs) {
  std::vector<char> r(n * n, 0);
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) throw InputError("order pair index out of range");
    r[i * n + j] = 1;
  }
  OrderCheck c;
  auto note = [&](const std::string& s) {
    if (c.witnesses.size() < 16) c.witnesses.push_back(s);
  };
  for (std::size_t i = 0; i < n; ++i)
    if (!r[i * n + i]) {
      c.reflexive = false;
      note("not reflexive at " + std::to_string(i));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && r[i * n + j] && r[j * n + i]) {
        c.antisymmetric = false;
        note("cycle " + std::to_string(i) + " <-> " + std::to_string(j));
      }
      if (i != j && !r[i * n + j] && !r[j * n + i]) c.total = false;
      for (std::size_t k = 0; k < n; ++k)
        if (r[i * n + j] && r[j * n + k] && !r[i * n + k]) {
          c.transitive = false;
          note("not transitive: " + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k));
        }
    }
  return c;
}

/// A finite point set with an explicit partial order. The order is stored as
/// its full relation, independent of where the points sit in space.
template <class P>
class OrderedPointSet {
 public:
  /// `pairs` (i, j) state i <= j; the reflexive-transitive closure is taken and
  /// the result must be antisymmetric (and total, if `total` is set).
  OrderedPointSet(std::vector<P> points, const IndexPairs& pairs, bool total)
      : points_(std::move(points)), leq_(points_.size() * points_.size(), 0) {
    const std::size_t n = points_.size();
    for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
    for (auto [i, j] : pairs) {
      if (i >= n || j >= n) throw InputError("order pair index out of range");
      leq_[i * n + j] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq_[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq_[k * n + j]) leq_[i * n + j] = 1;
    const OrderCheck c = check_order_relation(n, relation_pairs());
    if (!c.antisymmetric) throw InputError("order relation has a cycle: " + c.witnesses.front());
    total_ = c.total;
    if (total && !total_) throw InputError("order declared total but some points are incomparable");
  }

  /// Points listed in increasing order.
  static OrderedPointSet chain(std::vector<P> points) {
    IndexPairs pairs;
    for (std::size_t i = 1; i < points.size(); ++i) pairs.emplace_back(i - 1, i);
    return OrderedPointSet(std::move(points), pairs, true);
  }

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const P& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<P>& points() const { return points_; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j] != 0; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  bool is_total() const { return total_; }

  /// All pairs (i, j) with i <= j, including the diagonal.
  IndexPairs relation_pairs() const {
    IndexPairs out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (leq(i, j)) out.emplace_back(i, j);
    return out;
  }

  /// Indices sorted so that i <= j in the order implies i comes first.
  std::vector<std::size_t> linear_extension() const {
    std::vector<std::size_t> idx(size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::size_t> below(size(), 0);
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (less(j, i)) ++below[i];
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    return idx;
  }

  /// Points in increasing order (total orders only).
  std::vector<P> sorted_points() const {
    if (!total_) throw InputError("sorted_points needs a total order");
    std::vector<P> out;
    for (std::size_t i : linear_extension()) out.push_back(points_[i]);
    return out;
  }

 private:
  std::vector<P> points_;
  std::vector<char> leq_;
  bool total_ = true;
};

struct Correspondence {
  IndexPairs pairs;
  bool monotone = false;
};

/// Every index on either side occurs in some pair.
inline bool covers(const Correspondence& r, std::size_t n1, std::size_t n2) {
  std::vector<char> a(n1, 0), b(n2, 0);
  for (auto [i, j] : r.pairs) {
    if (i >= n1 || j >= n2) return false;
    a[i] = b[j] = 1;
  }
  return std::all_of(a.begin(), a.end(), [](char c) { return c; }) &&
         std::all_of(b.begin(), b.end(), [](char c) { return c; });
}

/// No two pairs cross: never x1 < y1 together with y2 < x2.
template <class P>
bool is_monotone(const Correspondence& r, const OrderedPointSet<P>& k1, const OrderedPointSet<P>& k2) {
  for (auto [x1, x2] : r.pairs)
    for (auto [y1, y2] : r.pairs)
      if (k1.less(x1, y1) && k2.less(y2, x2)) return false;
  return true;
}

template <class P, MetricFor<P> M>
double correspondence_cost(const Correspondence& r, std::span<const P> a, std::span<const P> b, const M& dist) {
  double c = 0.0;
  for (auto [i, j] : r.pairs) c = std::max(c, static_cast<double>(dist(a[i], b[j])));
  return c;
}

// Plain Hausdorff distance.

template <class P, MetricFor<P> M = default_metric_t<P>>
double hausdorff(std::span<const P> a, std::span<const P> b, const M& dist = M{}) {
  return chain_hausdorff(DistanceMatrix::build(a, b, dist));
}

template <class P, MetricFor<P> M = default_metric_t<P>>
double hausdorff(const std::vector<P>& a, const std::vector<P>& b, const M& dist = M{}) {
  return hausdorff(std::span<const P>(a), std::span<const P>(b), dist);
}

struct HausdorffWitness {
  double value = 0.0;
  Correspondence witness;
};

/// Hausdorff distance as the cost of the nearest-point correspondence.
template <class P, MetricFor<P> M = default_metric_t<P>>
HausdorffWitness hausdorff_via_correspondence(const std::vector<P>& a, const std::vector<P>& b, const M& dist = M{}) {
  if (a.empty() || b.empty()) throw InputError("distance between empty sets is undefined");
  const auto d = DistanceMatrix::build(std::span<const P>(a), std::span<const P>(b), dist);
  HausdorffWitness out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < b.size(); ++j)
      if (d(i, j) < d(i, best)) best = j;
    out.witness.pairs.emplace_back(i, best);
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < a.size(); ++i)
      if (d(i, j) < d(best, j)) best = i;
    out.witness.pairs.emplace_back(best, j);
  }
  std::sort(out.witness.pairs.begin(), out.witness.pairs.end());
  out.witness.pairs.erase(std::unique(out.witness.pairs.begin(), out.witness.pairs.end()), out.witness.pairs.end());
  for (auto [i, j] : out.witness.pairs) out.value = std::max(out.value, d(i, j));
  return out;
}

// Chains of length m and the metrics d^<m>.

using Tuple = std::vector<std::size_t>;

/// All weakly increasing m-tuples x_1 <= ... <= x_m of K, as index tuples.
template <class P>
std::vector<Tuple> k_m(const OrderedPointSet<P>& k, std::size_t m, const Budget& budget = Budget::from_env()) {
  if (m == 0) throw InputError("k_m needs m >= 1");
  std::vector<Tuple> out;
  Tuple cur;
  cur.reserve(m);
  std::function<void()> rec = [&]() {
    if (cur.size() == m) {
      if (out.size() >= budget.max_tuples)
        throw BudgetError("chain enumeration exceeds the budget of " + std::to_string(budget.max_tuples) + " tuples");
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (!cur.empty() && !k.leq(cur.back(), i)) continue;
      cur.push_back(i);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

/// Hausdorff distance between K1^<m> and K2^<m> under the coordinatewise max metric.
template <class P, MetricFor<P> M = default_metric_t<P>>
double d_m(const OrderedPointSet<P>& k1, const OrderedPointSet<P>& k2, std::size_t m, const M& dist = M{},
           const Budget& budget = Budget::from_env()) {
  if (k1.empty() || k2.empty()) throw InputError("distance between empty sets is undefined");
  const auto t1 = k_m(k1, m, budget);
  const auto t2 = k_m(k2, m, budget);
  const auto d = DistanceMatrix::build(std::span<const P>(k1.points()), std::span<const P>(k2.points()), dist);
  DistanceMatrix tuple_d(t1.size(), t2.size());
  for (std::size_t a = 0; a < t1.size(); ++a)
    for (std::size_t b = 0; b < t2.size(); ++b) {
      double v = 0.0;
      for (std::size_t c = 0; c < m; ++c) v = std::max(v, d(t1[a][c], t2[b][c]));
      tuple_d(a, b) = v;
    }
  return chain_hausdorff(tuple_d);
}

/// d_part = d^<2>. Total orders use the exact matrix search; partial orders enumerate pairs.
template <class P, MetricFor<P> M = default_metric_t<P>>
double d_part(const OrderedPointSet<P>& k1, const OrderedPointSet<P>& k2, const M& dist = M{},
              const Budget& budget = Budget::from_env()) {
  if (k1.empty() || k2.empty()) throw InputError("distance between empty sets is undefined");
  if (k1.is_total() && k2.is_total()) {
    const auto a = k1.sorted_points();
    const auto b = k2.sorted_points();
    return chain_d_part(DistanceMatrix::build(std::span<const P>(a), std::span<const P>(b), dist));
  }
  return d_m(k1, k2, 2, dist, budget);
}

struct TotResult {
  double value = 0.0;
  Correspondence witness;  // indices refer to the original point lists
};

/// Minimax cost over monotone correspondences between two totally ordered sets.
template <class P, MetricFor<P> M = default_metric_t<P>>
TotResult d_tot(const OrderedPointSet<P>& k1, const OrderedPointSet<P>& k2, const M& dist = M{}) {
  if (k1.empty() || k2.empty()) throw InputError("distance between empty sets is undefined");
  if (!k1.is_total() || !k2.is_total()) throw InputError("d_tot needs totally ordered sets");
  const auto e1 = k1.linear_extension();
  const auto e2 = k2.linear_extension();
  DistanceMatrix d(e1.size(), e2.size());
  for (std::size_t i = 0; i < e1.size(); ++i)
    for (std::size_t j = 0; j < e2.size(); ++j) d(i, j) = dist(k1[e1[i]], k2[e2[j]]);
  const ChainMatch match = chain_d_tot(d);
  TotResult out{match.value, {{}, true}};
  for (auto [i, j] : match.pairs) out.witness.pairs.emplace_back(e1[i], e2[j]);
  return out;
}

/// Reference value for d_tot by enumerating every non-crossing relation between
/// the two sets and keeping the cheapest one that covers both sides.
template <class P, MetricFor<P> M = default_metric_t<P>>
double d_tot_bruteforce(const OrderedPointSet<P>& k1, const OrderedPointSet<P>& k2, const M& dist = M{},
                        const Budget& budget = Budget::from_env()) {
  if (k1.empty() || k2.empty()) throw InputError("distance between empty sets is undefined");
  if (!k1.is_total() || !k2.is_total()) throw InputError("d_tot needs totally ordered sets");
  if (k1.size() > budget.max_bruteforce_points || k2.size() > budget.max_bruteforce_points)
    throw BudgetError("brute-force d_tot is limited to " + std::to_string(budget.max_bruteforce_points) +
                      " points per side");
  IndexPairs all;
  for (std::size_t i = 0; i < k1.size(); ++i)
    for (std::size_t j = 0; j < k2.size(); ++j) all.emplace_back(i, j);
  double best = std::numeric_limits<double>::infinity();
  IndexPairs chosen;
  std::vector<int> cover1(k1.size(), 0), cover2(k2.size(), 0);
  std::size_t covered1 = 0, covered2 = 0;
  std::function<void(std::size_t, double)> rec = [&](std::size_t next, double cost) {
    if (cost >= best) return;
    if (covered1 == k1.size() && covered2 == k2.size()) best = cost;
    for (std::size_t p = next; p < all.size(); ++p) {
      const auto [a1, a2] = all[p];
      bool crosses = false;
      for (auto [b1, b2] : chosen)
        if ((k1.less(a1, b1) && k2.less(b2, a2)) || (k1.less(b1, a1) && k2.less(a2, b2))) {
          crosses = true;
          break;
        }
      if (crosses) continue;
      chosen.push_back(all[p]);
      covered1 += cover1[a1]++ == 0;
      covered2 += cover2[a2]++ == 0;
      rec(p + 1, std::max(cost, static_cast<double>(dist(k1[a1], k2[a2]))));
      covered1 -= --cover1[a1] == 0;
      covered2 -= --cover2[a2] == 0;
      chosen.pop_back();
    }
  };
  rec(0, 0.0);
  return best;
}

// Mismatch moduli.

/// sup of d(x1,y1) v d(x2,y2) over x1 <= y1 in K1 and y2 <= x2 in K2 with
/// d(x1,x2) v d(y1,y2) <= eps; zero when no quadruple qualifies.
template <class P, MetricFor<P> M = default_metric_t<P>>
double mismatch_modulus_pair(const OrderedPointSet<P>& k1, const OrderedPointSet<P>& k2, double eps,
                             const M& dist = M{}) {
  const std::span<const P> a(k1.points()), b(k2.points());
  const auto d12 = DistanceMatrix::build(a, b, dist);
  const auto d11 = DistanceMatrix::build(a, a, dist);
  const auto d22 = DistanceMatrix::build(b, b, dist);
  IndexPairs close;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (d12(i, j) <= eps) close.emplace_back(i, j);
  double sup = 0.0;
  for (auto [x1, x2] : close)
    for (auto [y1, y2] : close)
      if (k1.leq(x1, y1) && k2.leq(y2, x2)) sup = std::max({sup, d11(x1, y1), d22(x2, y2)});
  return sup;
}

template <class P, MetricFor<P> M = default_metric_t<P>>
double mismatch_modulus(const OrderedPointSet<P>& k, double eps, const M& dist = M{}) {
  return mismatch_modulus_pair(k, k, eps, dist);
}

}  // namespace skorodist
