// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include <skorodist/skorodist.hpp>

#include "oracles.hpp"

using namespace skorodist;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& what, double seconds) {
  std::printf("%s [%d] %s (%.2fs)\n", pass ? "PASS" : "FAIL", id, what.c_str(), seconds);
  if (!pass) ++failures;
}

void criterion(int id, const std::function<bool(std::string&)>& body, double limit_s = 0.0) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string what;
  bool pass = false;
  try {
    pass = body(what);
  } catch (const std::exception& e) {
    what += std::string(" threw: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && s >= limit_s) {
    pass = false;
    what += " over time limit";
  }
  report(id, pass, what, s);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

using RSet = OrderedPointSet<double>;

Path<double> indicator(double jump) { return Path<double>::step(0, 2, 0.0, {{jump, 1.0}}); }
Path<double> staircase(double second) { return Path<double>::step(0, 2, 0.0, {{1.0, 0.5}, {second, 1.0}}); }

/// Distance from the squeezed point (t0, x0) to the sampled closed graph of the
/// unit indicator of [1, 2] on [0, 2], written out without the library metric.
double distance_to_limit_graph(double t0, double x0) {
  auto d = [&](double s, double v) {
    const double p0 = std::exp(-std::abs(t0)), p1 = std::exp(-std::abs(s));
    return std::min(p0, p1) * std::min(std::abs(x0 - v), 1.0) + std::abs(p0 - p1) +
           std::abs(std::tanh(t0) - std::tanh(s));
  };
  double best = std::min(d(1.0, 0.0), d(1.0, 1.0));
  const int steps = 200000;
  for (int k = 0; k <= steps; ++k) {
    const double s = 2.0 * k / steps;
    best = std::min(best, d(s, s < 1.0 ? 0.0 : 1.0));
  }
  return best;
}

StepCurve<double> random_step_curve(std::mt19937_64& rng) {
  const std::size_t n = oracle::random_size(rng, 0, 5);
  std::vector<double> ts;
  for (std::size_t k = 0; k < n; ++k) ts.push_back(oracle::random_real(rng, 0.01, 0.99));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<double> vs;
  for (std::size_t k = 0; k <= ts.size(); ++k) vs.push_back(oracle::random_real(rng, 0, 1));
  return {ts, vs};
}

}  // namespace

int main() {
  criterion(1, [](std::string& w) {
    std::mt19937_64 rng(101);
    int bad = 0;
    for (int it = 0; it < 1000; ++it) {
      const auto a = oracle::random_chain(rng, oracle::random_size(rng, 1, 8), 2);
      const auto b = oracle::random_chain(rng, oracle::random_size(rng, 1, 8), 2);
      const double h = hausdorff(a.points(), b.points());
      const double p = d_part(a, b);
      const double t = d_tot(a, b).value;
      if (!(h <= p && p <= t)) ++bad;
    }
    w = "hausdorff <= d_part <= d_tot on 1000 random chains in R^2: " + std::to_string(bad) + " violations";
    return bad == 0;
  }, 10.0);

  criterion(2, [](std::string& w) {
    std::mt19937_64 rng(102);
    int bad = 0;
    for (int it = 0; it < 500; ++it) {
      const bool grid = it % 2 == 0;
      const std::size_t n1 = oracle::random_size(rng, 1, 6), n2 = oracle::random_size(rng, 1, 6);
      if (grid) {
        const auto a = oracle::random_grid_chain(rng, n1), b = oracle::random_grid_chain(rng, n2);
        if (d_tot(a, b).value != d_tot_bruteforce(a, b)) ++bad;
      } else {
        const auto a = oracle::random_chain(rng, n1, 2), b = oracle::random_chain(rng, n2, 2);
        if (d_tot(a, b).value != d_tot_bruteforce(a, b)) ++bad;
      }
    }
    w = "d_tot equals brute force on 500 pairs: " + std::to_string(bad) + " mismatches";
    return bad == 0;
  }, 30.0);

  criterion(3, [](std::string& w) {
    bool ok = true;
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto [a, b] = gen_noop(m, 0.25);
      const double lo = d_m(a, b, m), hi = d_m(a, b, m + 1);
      w += "m=" + std::to_string(m) + ": " + num(lo) + "/" + num(hi) + " ";
      ok = ok && lo <= 0.25 && hi >= 0.5;
    }
    const auto [a, b] = gen_noop(2, 0.25);
    const double part = d_part(a, b), tot = d_tot(a, b).value;
    w += "d_part=" + num(part) + " d_tot=" + num(tot);
    return ok && part <= 2 * 0.25 * tot;
  });

  criterion(4, [](std::string& w) {
    const auto [kn, k] = gen_diftop(1, 100);
    const double d1 = d_m(kn, k, 1), d2 = d_m(kn, k, 2);
    w = "diftop(1,100): d1=" + num(d1) + " d2=" + num(d2);
    return d1 <= 0.02 && d2 >= 0.5;
  });

  criterion(5, [](std::string& w) {
    const auto ks = gen_noncompl(harmonic_sequence(2, 16));
    int bad = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const double ei = 1.0 / static_cast<double>(i + 2);
      if (mismatch_modulus(ks[i], ei) < 1.0 - ei) ++bad;
      for (std::size_t j = 0; j < ks.size(); ++j) {
        const double ej = 1.0 / static_cast<double>(j + 2);
        if (d_tot(ks[i], ks[j]).value > std::abs(ei - ej) + 1e-12) ++bad;
      }
    }
    w = "noncompl n=2..16 Cauchy bound and mismatch: " + std::to_string(bad) + " violations";
    return bad == 0;
  });

  criterion(6, [](std::string& w) {
    std::mt19937_64 rng(106);
    int bad = 0;
    for (int it = 0; it < 500; ++it) {
      const auto a = oracle::random_grid_chain(rng, oracle::random_size(rng, 1, 5));
      const auto b = oracle::random_grid_chain(rng, oracle::random_size(rng, 1, 5));
      double prev = d_m(a, b, 1);
      for (std::size_t m = 2; m <= 4; ++m) {
        const double cur = d_m(a, b, m);
        if (prev > cur) ++bad;
        prev = cur;
      }
    }
    w = "d^<m> <= d^<m+1>, m=1..3, 500 pairs: " + std::to_string(bad) + " violations";
    return bad == 0;
  });

  criterion(7, [](std::string& w) {
    std::mt19937_64 rng(107);
    int bad = 0, checked = 0;
    for (int it = 0; it < 500; ++it) {
      const auto a = oracle::random_grid_chain(rng, oracle::random_size(rng, 1, 5));
      const auto b = oracle::random_grid_chain(rng, oracle::random_size(rng, 1, 5));
      const double d1 = d_m(a, b, 1);
      for (double eps : {d1, d1 + 0.05, oracle::random_real(rng, 0, 1)}) {
        if (d1 > eps) continue;
        ++checked;
        const double bound = mismatch_modulus_pair(a, b, eps) + eps + 1e-12;
        for (std::size_t m = 1; m <= 4; ++m)
          if (d_m(a, b, m) > bound) ++bad;
      }
    }
    w = "d^<m> <= m_eps + eps for m<=4 on " + std::to_string(checked) + " cases: " + std::to_string(bad) +
        " violations";
    return bad == 0 && checked > 0;
  });

  criterion(8, [](std::string& w) {
    std::mt19937_64 rng(108);
    std::vector<double> pool;
    for (int i = 0; i < 12; ++i) pool.push_back(oracle::random_real(rng, -1, 1));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<std::tuple<double, double, double>> exact;
    for (int i = 0; i < 1000; ++i) exact.emplace_back(pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]);
    const auto trivial = check_axioms(Betweenness<double>::trivial(), exact);
    const auto order = check_axioms(Betweenness<double>::order(pool), exact);

    std::vector<std::tuple<double, double, double>> line;
    std::vector<std::tuple<Vec, Vec, Vec>> space;
    for (int i = 0; i < 1000; ++i) {
      const double x = oracle::random_real(rng, -1, 1), z = oracle::random_real(rng, -1, 1);
      line.emplace_back(x, i % 2 ? blend(x, z, oracle::random_real(rng, 0, 1)) : oracle::random_real(rng, -1, 1), z);
      const Vec u = oracle::random_vec(rng, 3), v = oracle::random_vec(rng, 3);
      space.emplace_back(u, i % 2 ? blend(u, v, oracle::random_real(rng, 0, 1)) : oracle::random_vec(rng, 3), v);
    }
    const auto lin1 = check_axioms(Betweenness<double>::linear(), line, 1e-9);
    const auto lin3 = check_axioms(Betweenness<Vec>::linear(), space, 1e-9);
    w = "axiom violations: trivial " + std::to_string(trivial.violations.size()) + ", order " +
        std::to_string(order.violations.size()) + ", linear R " + std::to_string(lin1.violations.size()) +
        ", linear R^3 " + std::to_string(lin3.violations.size());
    return trivial.ok() && order.ok() && lin1.ok() && lin3.ok();
  });

  criterion(9, [](std::string& w) {
    std::vector<Path<double>> fam;
    for (int n = 2; n <= 64; ++n) fam.push_back(staircase(1.0 + 1.0 / n));
    const auto deltas = default_deltas();
    const auto j1 = equicontinuity_curve(fam, Betweenness<double>::trivial(), 2, deltas, ModulusKind::skorohod);
    const auto m1 = equicontinuity_curve(fam, Betweenness<double>::linear(), 2, deltas, ModulusKind::skorohod);
    bool ok = true;
    for (const auto& p : j1)
      if (p.delta >= 0.5 && p.value != 0.5) ok = false;
    for (const auto& p : m1)
      if (p.value != 0.0) ok = false;
    const auto vj = diagnose(fam, Betweenness<double>::trivial(), default_horizons(), deltas, ModulusKind::skorohod);
    const auto vm = diagnose(fam, Betweenness<double>::linear(), default_horizons(), deltas, ModulusKind::skorohod);
    w = "staircase curves J1 " + num(j1.back().value) + " / M1 " + num(m1.back().value) + " at delta=1/2; " +
        std::string(to_string(vj.verdict)) + " / " + std::string(to_string(vm.verdict));
    return ok && vj.verdict == Verdict::not_precompact && vm.verdict == Verdict::consistent_with_precompact;
  }, 5.0);

  criterion(10, [](std::string& w) {
    const auto J1 = Betweenness<double>::trivial();
    const auto M1 = Betweenness<double>::linear();
    const auto limit = indicator(1.0);
    bool ok = true;
    double prev = 1e9, last = 0;
    for (int n : {4, 16, 64}) {
      last = path_dist(indicator(1.0 + 1.0 / n), limit, J1, {}, 0.005).value;
      ok = ok && last < prev;
      prev = last;
    }
    ok = ok && last < 0.1;
    w = "indicators J1 n=64 " + num(last);

    double floor = 1e9;
    for (int n = 2; n <= 64; ++n) floor = std::min(floor, distance_to_limit_graph(1.0 + 1.0 / n, 0.5));
    prev = 1e9;
    double j1_min = 1e9;
    for (int n : {2, 4, 8, 16, 32, 64}) {
      const double m = path_dist(staircase(1.0 + 1.0 / n), limit, M1, {}, 0.005).value;
      const double j = path_dist(staircase(1.0 + 1.0 / n), limit, J1, {}, 0.005).value;
      ok = ok && m < prev && j > 0.1 && j >= floor;
      prev = m;
      j1_min = std::min(j1_min, j);
    }
    w += "; staircases M1 n=64 " + num(prev) + ", J1 min " + num(j1_min) + ", Hausdorff floor " + num(floor);
    return ok && floor >= 0.1;
  });

  criterion(11, [](std::string& w) {
    std::mt19937_64 rng(111);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto a = oracle::random_step_path(rng, oracle::random_size(rng, 0, 4));
      const auto b = oracle::random_step_path(rng, oracle::random_size(rng, 0, 4));
      for (const auto& bw : {Betweenness<double>::trivial(), Betweenness<double>::linear()}) {
        const double coarse = path_dist(a, b, bw, {}, 0.01).value;
        const double fine = path_dist(a, b, bw, {}, 0.005).value;
        worst = std::max(worst, std::abs(coarse - fine));
      }
    }
    w = "max |d(eta=0.01) - d(eta=0.005)| over 50 pairs: " + num(worst);
    return worst <= 2 * 0.01 * (1 + 1);
  });

  criterion(12, [](std::string& w) {
    const auto J1 = Betweenness<double>::trivial();
    const auto limit = indicator(1.0);
    bool ok = true;
    for (double t : {0.5, 1.7}) {
      double prev = 1e9, full = 0, restricted = 0;
      for (int n : {4, 16, 64}) {
        const auto f = indicator(1.0 + 1.0 / n);
        full = path_dist(f, limit, J1, {}, 0.005).value;
        restricted = path_dist(restrict(f, t), restrict(limit, t), J1, {}, 0.005).value;
        ok = ok && restricted <= prev;
        prev = restricted;
      }
      ok = ok && full < 0.1 && restricted < 0.1;
      w += "t=" + num(t) + ": " + num(restricted) + " (full " + num(full) + ") ";
    }
    return ok;
  });

  criterion(13, [](std::string& w) {
    std::mt19937_64 rng(113);
    const std::size_t grid = 256;
    const double eta = 1.0 / grid;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const auto a = random_step_curve(rng), b = random_step_curve(rng);
      const double r = reparam_dist(a, b, ReparamMode::increasing, grid).value;
      const double chain = d_tot(RSet::chain(a.values), RSet::chain(b.values)).value;
      const double brute = oracle::monotone_correspondence_min(a.values, b.values, AbsMetric{});
      worst = std::max({worst, std::abs(r - chain), std::abs(r - brute)});
    }
    w = "reparam vs chain d_tot on 20 curve pairs: max gap " + num(worst);
    return worst <= 3 * eta;
  });

  std::printf("%s\n", failures == 0 ? "ALL PASS" : "SOME FAILED");
  return failures == 0 ? 0 : 1;
}
