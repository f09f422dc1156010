// Quickstart: J1 versus M1 on a staircase that merges into a single jump.

#include <cstdio>

#include <skorodist/skorodist.hpp>

using namespace skorodist;

int main() {
  const auto limit = Path<double>::step(0, 2, 0.0, {{1.0, 1.0}});
  const auto j1 = Betweenness<double>::trivial();
  const auto m1 = Betweenness<double>::linear();

  std::printf("%4s %10s %10s\n", "n", "J1", "M1");
  for (int n : {2, 4, 8, 16, 32, 64}) {
    const auto g = Path<double>::step(0, 2, 0.0, {{1.0, 0.5}, {1.0 + 1.0 / n, 1.0}});
    const double dj = path_dist(g, limit, j1).value;
    const double dm = path_dist(g, limit, m1).value;
    std::printf("%4d %10.6f %10.6f\n", n, dj, dm);
  }

  std::vector<Path<double>> family;
  for (int n = 2; n <= 64; ++n) family.push_back(Path<double>::step(0, 2, 0.0, {{1.0, 0.5}, {1.0 + 1.0 / n, 1.0}}));
  for (const auto& [name, b] : {std::pair{"J1", j1}, std::pair{"M1", m1}}) {
    const auto rep = diagnose(family, b, default_horizons(), default_deltas(), ModulusKind::skorohod);
    std::printf("%s: %s\n", name, std::string(to_string(rep.verdict)).c_str());
  }
}
