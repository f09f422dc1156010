// skorodist: Skorohod-type distances, moduli and compactness diagnostics for
// cadlag paths stored as JSON.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <exception>
#include <iostream>
#include <limits>
#include <mutex>
#include <random>
#include <regex>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include <skorodist/io.hpp>
#include <skorodist/skorodist.hpp>

namespace fs = std::filesystem;
using namespace skorodist;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitViolations = 1;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Common {
  std::string mode = "j1";
  std::string interp = "linear";
  std::string squeeze_file;
  std::string phi = "exp_neg_abs";
  double eta = 0.01;
  double horizon = kDefaultHorizon;
  std::size_t n_seg = 33;

  void add_to(CLI::App* app, bool sampling = true) {
    app->add_option("--mode", mode, "betweenness: j1 (trivial), m1 (linear), order, custom")
        ->check(CLI::IsMember({"j1", "m1", "order", "custom"}));
    app->add_option("--interp", interp, "registered interpolation for --mode custom");
    app->add_option("--n-seg", n_seg, "segment resolution")->check(CLI::Range(2, 1 << 20));
    if (sampling) {
      app->add_option("--eta", eta, "graph sampling mesh")->check(CLI::PositiveNumber);
      app->add_option("--horizon", horizon, "truncation horizon for unbounded domains")->check(CLI::PositiveNumber);
      app->add_option("--squeeze", squeeze_file, "squeeze config JSON file");
      app->add_option("--phi", phi, "time weight")->check(CLI::IsMember({"exp_neg_abs", "inv_one_plus_sq"}));
    }
  }

  SqueezeConfig squeeze() const {
    if (!squeeze_file.empty()) return io::squeeze_from_json(io::read_file(squeeze_file));
    SqueezeConfig cfg;
    cfg.phi_kind = parse_phi_kind(phi);
    return cfg;
  }

  /// Order betweenness needs the value universe of all paths involved.
  Betweenness<Vec> betweenness(const std::vector<Path<Vec>>& paths = {}) const {
    if (mode == "j1") return Betweenness<Vec>::trivial();
    if (mode == "m1") return Betweenness<Vec>::linear(n_seg);
    if (mode == "custom") return registered_interpolation(interp, n_seg);
    std::vector<Vec> universe;
    for (const auto& p : paths) {
      const auto v = p.values();
      universe.insert(universe.end(), v.begin(), v.end());
    }
    return Betweenness<Vec>::order(std::move(universe));
  }
};

std::vector<std::string> json_files(const std::string& dir) {
  if (!fs::is_directory(dir)) throw InputError(dir + " is not a directory");
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path().string());
  // Natural order on the trailing integer of the stem, then by name.
  static const std::regex tail(R"((\d+)$)");
  auto key = [](const std::string& f) {
    std::smatch m;
    const std::string stem = fs::path(f).stem().string();
    long long n = -1;
    if (std::regex_search(stem, m, tail)) n = std::stoll(m[1]);
    return std::make_tuple(n, f);
  };
  std::sort(files.begin(), files.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return files;
}

long long trailing_index(const std::string& file) {
  static const std::regex tail(R"((\d+)$)");
  std::smatch m;
  const std::string stem = fs::path(file).stem().string();
  return std::regex_search(stem, m, tail) ? std::stoll(m[1]) : -1;
}

std::vector<Path<Vec>> read_family(const std::string& dir) {
  std::vector<Path<Vec>> fam;
  for (const auto& f : json_files(dir)) fam.push_back(io::read_path(f));
  return fam;
}

// dist

struct DistArgs {
  Common c;
  std::string variant = "tot";
  std::vector<std::string> files;
};

int run_dist(const DistArgs& a) {
  const auto p1 = io::read_path(a.files.at(0));
  const auto p2 = io::read_path(a.files.at(1));
  const auto b = a.c.betweenness({p1, p2});
  const auto r = path_dist(p1, p2, b, a.c.squeeze(), a.c.eta, parse_path_variant(a.variant), a.c.horizon);
  std::cout << "value " << fmt(r.value) << "\n";
  std::cout << "error_bar " << fmt(r.error_bar) << "\n";
  if (r.truncation > 0) std::cout << "truncation " << fmt(r.truncation) << "\n";
  if (a.variant == "tot") std::cout << "correspondence_pairs " << r.witness_size << "\n";
  return 0;
}

// modulus

struct ModulusArgs {
  Common c;
  std::string kind = "skorohod";
  double T = kDefaultHorizon;
  std::vector<double> deltas;
  std::string file;
};

int run_modulus(const ModulusArgs& a) {
  const auto p = io::read_path(a.file);
  const auto b = a.c.betweenness({p});
  const auto kind = a.kind == "classic" ? ModulusKind::classic : ModulusKind::skorohod;
  const auto curve = equicontinuity_curve<Vec>({p}, b, a.T, a.deltas.empty() ? default_deltas() : a.deltas, kind);
  std::cout << "delta,modulus\n";
  for (const auto& pt : curve) std::cout << fmt(pt.delta) << "," << fmt(pt.value) << "\n";
  return 0;
}

// diagnose

struct DiagnoseArgs {
  Common c;
  std::string kind = "skorohod";
  std::vector<double> Ts;
  std::vector<double> deltas;
  bool fixed_domain = false;
  std::string dir;
  std::string out;
};

int run_diagnose(const DiagnoseArgs& a) {
  const auto fam = read_family(a.dir);
  const auto b = a.c.betweenness(fam);
  const auto kind = a.kind == "classic" ? ModulusKind::classic : ModulusKind::skorohod;
  const auto deltas = a.deltas.empty() ? default_deltas() : a.deltas;
  const FamilyReport rep = a.fixed_domain ? diagnose_fixed_domain(fam, b, deltas, kind)
                                          : diagnose(fam, b, a.Ts.empty() ? default_horizons(a.c.horizon) : a.Ts,
                                                     deltas, kind);
  std::cout << "members " << fam.size() << "\n";
  std::cout << "verdict " << to_string(rep.verdict) << "\n";
  std::cout << "reason " << rep.reason << "\n";
  for (const auto& c : rep.curves) {
    std::cout << c.label << ":";
    for (const auto& p : c.curve) std::cout << " " << fmt(p.delta) << "=" << fmt(p.value);
    std::cout << "\n";
  }
  if (!a.out.empty()) {
    auto j = io::report_to_json(rep);
    j["mode"] = a.c.mode;
    j["kind"] = a.kind;
    io::write_file(a.out, j);
  }
  return 0;
}

// axioms

struct AxiomArgs {
  Common c;
  std::size_t dim = 1;
  std::size_t triples = 1000;
  std::uint64_t seed = 1;
  double eta_set = 1e-9;
};

int run_axioms(const AxiomArgs& a) {
  std::mt19937_64 rng(a.seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::uniform_int_distribution<int> grid(0, 8);
  const bool discrete = a.c.mode == "order" || a.c.mode == "j1";
  auto point = [&]() {
    Vec v(a.dim);
    for (auto& x : v) x = discrete ? grid(rng) / 8.0 : U(rng);
    if (a.c.mode == "custom" && a.c.interp == "geometric")
      for (auto& x : v) x += 0.1;
    return v;
  };
  std::vector<Vec> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(point());
  std::vector<std::tuple<Vec, Vec, Vec>> triples;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t i = 0; i < a.triples; ++i) {
    Vec x = pool[pick(rng)], z = pool[pick(rng)];
    Vec y = pool[pick(rng)];
    // Half the middles on the segment so the conditional axioms are exercised.
    if (i % 2 && !discrete) y = blend(x, z, U(rng));
    triples.emplace_back(std::move(x), std::move(y), std::move(z));
  }
  std::vector<Path<Vec>> holder;
  if (a.c.mode == "order") {
    if (a.dim != 1) throw InputError("order betweenness needs --dim 1");
    std::vector<Jump<Vec>> recs;
    for (std::size_t i = 0; i < pool.size(); ++i) recs.push_back({static_cast<double>(i), pool[i], pool[i]});
    holder.push_back(Path<Vec>::finite(recs));
  }
  const auto b = a.c.betweenness(holder);
  const auto rep = check_axioms(b, triples, a.eta_set);
  std::cout << "betweenness " << b.name() << "\n";
  std::cout << "triples " << rep.triples_checked << "\n";
  std::cout << "violations " << rep.violations.size() << "\n";
  for (const auto& v : rep.violations) std::cout << "  " << to_string(v.axiom) << "\n";
  return rep.ok() ? 0 : kExitViolations;
}

// gen

struct GenArgs {
  std::string kind;
  std::size_t m = 1;
  double eps = 0.25;
  std::size_t n = 8;
  std::string out;
};

void write_sets(const std::string& dir, const std::vector<std::pair<std::string, RealOrderedSet>>& sets) {
  if (dir.empty()) return;
  fs::create_directories(dir);
  for (const auto& [name, k] : sets) io::write_file((fs::path(dir) / (name + ".json")).string(), io::ordered_set_to_json(k));
}

int run_gen(const GenArgs& a) {
  const AbsMetric d;
  if (a.kind == "noop") {
    const auto [k1, k2] = gen_noop(a.m, a.eps);
    const double dm = d_m(k1, k2, a.m, d);
    const double dm1 = d_m(k1, k2, a.m + 1, d);
    const double part = d_part(k1, k2, d);
    const double tot = d_tot(k1, k2, d).value;
    std::cout << "d_m(m=" << a.m << ") " << fmt(dm) << " <= " << fmt(a.eps) << (dm <= a.eps ? " ok" : " VIOLATED") << "\n";
    std::cout << "d_m(m=" << a.m + 1 << ") " << fmt(dm1) << " >= 0.5" << (dm1 >= 0.5 ? " ok" : " VIOLATED") << "\n";
    std::cout << "d_part " << fmt(part) << "\nd_tot " << fmt(tot) << "\n";
    std::cout << "d_part <= 2*eps*d_tot " << fmt(part) << " <= " << fmt(2 * a.eps * tot)
              << (part <= 2 * a.eps * tot ? " ok" : " VIOLATED") << "\n";
    write_sets(a.out, {{"K1", k1}, {"K2", k2}});
  } else if (a.kind == "diftop") {
    const auto [kn, k] = gen_diftop(a.m, a.n);
    const double dm = d_m(kn, k, a.m, d);
    const double dm1 = d_m(kn, k, a.m + 1, d);
    std::cout << "points " << kn.size() << "\n";
    std::cout << "d_m(m=" << a.m << ") " << fmt(dm) << "\n";
    std::cout << "d_m(m=" << a.m + 1 << ") " << fmt(dm1) << " >= 0.5" << (dm1 >= 0.5 ? " ok" : " VIOLATED") << "\n";
    write_sets(a.out, {{"Kn", kn}, {"K", k}});
  } else if (a.kind == "noncompl") {
    if (a.n < 2) throw InputError("noncompl needs --n >= 2");
    const auto eps = harmonic_sequence(2, a.n);
    const auto sets = gen_noncompl(eps);
    std::cout << "n,m,d_tot,bound\n";
    bool ok = true;
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        const double v = d_tot(sets[i], sets[j], d).value;
        const double bound = std::abs(eps[i] - eps[j]);
        ok = ok && v <= bound + 1e-12;
        std::cout << i + 2 << "," << j + 2 << "," << fmt(v) << "," << fmt(bound) << "\n";
      }
    std::cout << "cauchy_bound " << (ok ? "ok" : "VIOLATED") << "\n";
    std::vector<std::pair<std::string, RealOrderedSet>> named;
    for (std::size_t i = 0; i < sets.size(); ++i) named.emplace_back("K" + std::to_string(i + 2), sets[i]);
    write_sets(a.out, named);
  }
  return 0;
}

// converge

struct ConvergeArgs {
  Common c;
  std::string variant = "tot";
  std::vector<long long> n_list;
  double restrict_at = std::numeric_limits<double>::quiet_NaN();
  std::string dir;
  std::string limit;
};

int run_converge(const ConvergeArgs& a) {
  auto limit = io::read_path(a.limit);
  const bool restricted = !std::isnan(a.restrict_at);
  if (restricted) limit = restrict(limit, a.restrict_at);
  std::cout << "n,distance,error_bar\n";
  for (const auto& f : json_files(a.dir)) {
    const long long n = trailing_index(f);
    if (!a.n_list.empty() && std::find(a.n_list.begin(), a.n_list.end(), n) == a.n_list.end()) continue;
    auto p = io::read_path(f);
    if (restricted) p = restrict(p, a.restrict_at);
    const auto b = a.c.betweenness({p, limit});
    const auto r = path_dist(p, limit, b, a.c.squeeze(), a.c.eta, parse_path_variant(a.variant), a.c.horizon);
    std::cout << n << "," << fmt(r.value) << "," << fmt(r.error_bar) << "\n";
  }
  return 0;
}

// matrix

struct MatrixArgs {
  Common c;
  std::string variant = "tot";
  unsigned threads = 0;
  std::vector<std::string> files;
};

int run_matrix(const MatrixArgs& a) {
  std::vector<Path<Vec>> paths;
  for (const auto& f : a.files) paths.push_back(io::read_path(f));
  const auto b = a.c.betweenness(paths);
  const auto cfg = a.c.squeeze();
  const auto variant = parse_path_variant(a.variant);
  const std::size_t n = paths.size();
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) jobs.emplace_back(i, j);
  std::vector<double> d(n * n, 0.0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (std::size_t k; (k = next++) < jobs.size();) {
      try {
        const auto [i, j] = jobs[k];
        d[i * n + j] = d[j * n + i] = path_dist(paths[i], paths[j], b, cfg, a.c.eta, variant, a.c.horizon).value;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned t = std::min<std::size_t>(a.threads ? a.threads : hw, std::max<std::size_t>(jobs.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < t; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  std::cout << "file";
  for (const auto& f : a.files) std::cout << "," << fs::path(f).filename().string();
  std::cout << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    std::cout << fs::path(a.files[i]).filename().string();
    for (std::size_t j = 0; j < n; ++j) std::cout << "," << fmt(d[i * n + j]);
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skorohod-type distances between cadlag paths"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "skorodist 0.1.0");

  DistArgs dist;
  auto* c_dist = app.add_subcommand("dist", "distance between two path files");
  dist.c.add_to(c_dist);
  c_dist->add_option("--variant", dist.variant)->check(CLI::IsMember({"part", "tot", "hausdorff"}));
  c_dist->add_option("files", dist.files)->required()->expected(2);

  ModulusArgs mod;
  auto* c_mod = app.add_subcommand("modulus", "modulus of continuity curve of one path (CSV)");
  mod.c.add_to(c_mod, false);
  c_mod->add_option("--kind", mod.kind)->check(CLI::IsMember({"classic", "skorohod"}));
  c_mod->add_option("--T", mod.T, "time window [-T, T]")->check(CLI::PositiveNumber);
  c_mod->add_option("--delta", mod.deltas, "deltas (default 1/2 ... 1/256)")->delimiter(',');
  c_mod->add_option("file", mod.file)->required();

  DiagnoseArgs diag;
  auto* c_diag = app.add_subcommand("diagnose", "compactness diagnosis of a directory of paths");
  diag.c.add_to(c_diag);
  c_diag->add_option("--kind", diag.kind)->check(CLI::IsMember({"classic", "skorohod"}));
  c_diag->add_option("--T", diag.Ts, "time windows (default 1,2,5,horizon)")->delimiter(',');
  c_diag->add_option("--delta", diag.deltas, "deltas (default 1/2 ... 1/256)")->delimiter(',');
  c_diag->add_flag("--fixed-domain", diag.fixed_domain, "common interval domain; adds boundary checks");
  c_diag->add_option("--out", diag.out, "report JSON");
  c_diag->add_option("dir", diag.dir)->required();

  AxiomArgs ax;
  auto* c_ax = app.add_subcommand("axioms", "betweenness axiom check on random triples");
  ax.c.add_to(c_ax, false);
  c_ax->add_option("--dim", ax.dim)->check(CLI::Range(1, 64));
  c_ax->add_option("--triples", ax.triples);
  c_ax->add_option("--seed", ax.seed);
  c_ax->add_option("--eta-set", ax.eta_set)->check(CLI::NonNegativeNumber);

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen", "counterexample generators");
  c_gen->add_option("kind", gen.kind)->required()->check(CLI::IsMember({"noop", "diftop", "noncompl"}));
  c_gen->add_option("--m", gen.m);
  c_gen->add_option("--eps", gen.eps);
  c_gen->add_option("--n", gen.n);
  c_gen->add_option("--out", gen.out, "directory for the generated sets");

  ConvergeArgs conv;
  auto* c_conv = app.add_subcommand("converge", "distances from a sequence directory to a limit (CSV)");
  conv.c.add_to(c_conv);
  c_conv->add_option("--variant", conv.variant)->check(CLI::IsMember({"part", "tot", "hausdorff"}));
  c_conv->add_option("--n", conv.n_list, "only these indices")->delimiter(',');
  c_conv->add_option("--restrict", conv.restrict_at, "restrict every path to times <= t");
  c_conv->add_option("dir", conv.dir)->required();
  c_conv->add_option("limit", conv.limit)->required();

  MatrixArgs mat;
  auto* c_mat = app.add_subcommand("matrix", "pairwise distance matrix (CSV)");
  mat.c.add_to(c_mat);
  c_mat->add_option("--variant", mat.variant)->check(CLI::IsMember({"part", "tot", "hausdorff"}));
  c_mat->add_option("--threads", mat.threads);
  c_mat->add_option("files", mat.files)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*c_dist) return run_dist(dist);
    if (*c_mod) return run_modulus(mod);
    if (*c_diag) return run_diagnose(diag);
    if (*c_ax) return run_axioms(ax);
    if (*c_gen) return run_gen(gen);
    if (*c_conv) return run_converge(conv);
    if (*c_mat) return run_matrix(mat);
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
