// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any fails.
// Usage: acceptance [path/to/trifree_cli] [work_dir]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "trifree/construction.hpp"
#include "trifree/diagnostics.hpp"
#include "trifree/errors.hpp"
#include "trifree/experiment.hpp"
#include "trifree/gadgets.hpp"
#include "trifree/partite_distance.hpp"
#include "trifree/random_models.hpp"

using namespace trifree;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c, d);
  return buf;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  if (!out.pass) ++failures;
  std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << id << " " << name << ": " << out.detail << std::endl;
}

// Criteria 1-3 share one sweep of 50 construction runs.
struct ConstructionSweep {
  std::size_t triangle_free = 0;
  std::size_t degree_ok = 0;
  std::size_t chain_ok = 0;
  std::size_t runs = 0;
  std::size_t worst_min_degree = SIZE_MAX;
  double target = 0;
  double seconds = 0;
};

ConstructionSweep run_construction_sweep() {
  constexpr std::size_t n = 2000;
  const double p = 3.0 / std::sqrt(static_cast<double>(n));
  ConstructionSweep out;
  const auto start = Clock::now();
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Seed s{seed, 0};
    const auto params = derive_params(0.2, 2, n, p, kDefaultC, s);
    const auto gamma = sample_gnp(n, p, s);
    const auto trace = construct(gamma, params);
    ++out.runs;
    if (trace.triangles_h == 0) ++out.triangle_free;
    if (trace.min_degree_ok) ++out.degree_ok;
    if (check_chain(gamma, trace, params.gadget.graph).ok()) ++out.chain_ok;
    out.worst_min_degree = std::min(out.worst_min_degree, trace.min_degree_h);
    out.target = trace.min_degree_target;
  }
  out.seconds = seconds_since(start);
  return out;
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(20240601);
  std::size_t cut_ok = 0, tri_ok = 0, reg_ok = 0, reg_total = 0;
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 13;
    const auto g = oracle::random_graph(n, density(rng), rng);
    if (max_cut_exact(g).cut == oracle::max_cut(g)) ++cut_ok;
  }
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 30;
    const auto g = oracle::random_graph(n, density(rng), rng);
    if (triangle_census(g).count == oracle::triangles(g)) ++tri_ok;
  }
  for (std::size_t sx = 1; sx <= 8; ++sx)
    for (std::size_t sy = 1; sy <= 8; ++sy)
      for (int t = 0; t < 5; ++t) {
        const auto g = oracle::random_graph(sx + sy, density(rng), rng);
        std::vector<Vertex> xs, ys;
        for (std::size_t i = 0; i < sx; ++i) xs.push_back(static_cast<Vertex>(i));
        for (std::size_t i = 0; i < sy; ++i) ys.push_back(static_cast<Vertex>(sx + i));
        const double eps = density(rng), d = density(rng);
        const bool got = lower_regular_pair(g, VertexSet::from(sx + sy, xs), VertexSet::from(sx + sy, ys), eps, d,
                                            1.0, RegularityMode::kExhaustive);
        ++reg_total;
        if (got == oracle::lower_regular(g, xs, ys, eps, d, 1.0)) ++reg_ok;
      }
  const bool pass = cut_ok == 100 && tri_ok == 100 && reg_ok == reg_total;
  return {pass, "max cut " + std::to_string(cut_ok) + "/100, triangles " + std::to_string(tri_ok) +
                    "/100, lower-regular " + std::to_string(reg_ok) + "/" + std::to_string(reg_total)};
}

Outcome gadgets() {
  bool pass = true;
  std::string detail;
  for (std::size_t r = 2; r <= 4; ++r) {
    const auto gadget = gadget_for(r);
    const auto chi = oracle::chromatic_number(gadget.graph);
    const bool free = oracle::triangles(gadget.graph) == 0;
    bool shape = true;
    if (r == 2) {
      shape = gadget.order() == 5 && gadget.graph.m() == 5;
      for (Vertex v = 0; v < gadget.order(); ++v) shape = shape && gadget.graph.degree(v) == 2;
    }
    if (r == 3) shape = gadget.order() == 11;
    pass = pass && free && shape && chi == r + 1 && gadget.chromatic_number == r + 1;
    detail += "r=" + std::to_string(r) + ": v=" + std::to_string(gadget.order()) + " chi=" + std::to_string(chi) +
              (free ? " triangle-free" : " HAS TRIANGLES") + "; ";
  }
  return {pass, detail};
}

Outcome basics() {
  const auto start = Clock::now();
  std::size_t seeds_ok = 0;
  std::map<std::string, std::size_t> failed;
  std::map<std::string, double> worst;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto gamma = sample_gnp(4000, 0.05, {seed, 0});
    BasicsInputs in;
    in.eps = 0.2;
    in.big_m = 10;
    in.p = 0.05;
    in.samples = 50;
    in.seed = {seed, 1};
    const auto rep = check_basics(gamma, in);
    if (rep.pass()) ++seeds_ok;
    for (const auto& c : rep.clauses) {
      if (!c.pass) ++failed[c.clause];
      worst[c.clause] = std::max(worst.count(c.clause) ? worst[c.clause] : -1e300, c.measured);
    }
  }
  const double secs = seconds_since(start);
  std::string detail = std::to_string(seeds_ok) + "/20 seeds pass all clauses";
  for (const auto& [clause, value] : worst)
    detail += "; " + clause + " worst " + fmt("%.4g", value) + " (failed in " +
              std::to_string(failed.count(clause) ? failed[clause] : 0) + ")";
  detail += fmt("; %.1f s", secs);
  return {seeds_ok == 20 && secs < 120.0, detail};
}

Outcome atypical() {
  std::size_t ok = 0, most = 0;
  double threshold = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto gamma = sample_gnp(2000, 0.1, {seed, 0});
    const auto halves = GnppLayout::for_order(2000);
    const auto found = atypical_edges(gamma, halves.a, halves.b, 0.3, 0.1, 2);
    threshold = found.threshold;
    most = std::max(most, found.edges.size());
    if (found.within_bound()) ++ok;
  }
  return {ok == 20, std::to_string(ok) + "/20 seeds; max count " + std::to_string(most) + " vs bound " +
                        fmt("%.4g", threshold)};
}

Outcome bad_stars() {
  constexpr std::size_t n = 2000;
  const double p = 3.0 / std::sqrt(static_cast<double>(n));
  const double q = 0.5, eps = 0.25;
  const auto s = static_cast<std::size_t>(std::ceil(100.0 / (q * eps * eps * p)));
  std::size_t ok = 0, most = 0, most_single = 0;
  double bound = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Seed sd{seed, 0};
    const auto params = derive_params(0.2, 2, n, p, kDefaultC, sd);
    const auto gamma = sample_gnp(n, p, sd);
    const auto trace = construct(gamma, params);
    const auto& a = trace.layout.halves.a;
    const auto packing = count_disjoint_bad_stars(gamma, trace.h, a, q, eps, s, p);
    bound = packing.bound;
    most = std::max(most, packing.count());
    if (packing.below_bound()) ++ok;
    most_single = std::max(most_single, count_disjoint_bad_stars(gamma, trace.h, a, q, eps, 1, p).count());
  }
  return {ok == 20, std::to_string(ok) + "/20 seeds; max packing " + std::to_string(most) + " < " +
                        fmt("%.4g", bound) + " with s=" + std::to_string(s) + " (s=1 packing max " +
                        std::to_string(most_single) + ")"};
}

Outcome scaling() {
  std::istringstream text(
      "n = 1000, 2000, 4000, 8000\np_scale = 3\ngamma = 0.2\nr = 2\nseeds = 10\nrestarts = 32\nmeasure = heuristic\n");
  const auto config = parse_sweep_config(text);
  const auto start = Clock::now();
  const auto records = run_sweep(config);
  const double secs = seconds_since(start);
  const auto fit = fit_scaling(records);
  const bool pass = fit.slope >= 0.8 && fit.slope <= 1.2 && secs < 600.0;
  return {pass, fmt("slope %.4f, C_hat %.4g, residual %.4f, %.1f s", fit.slope, fit.c_hat, fit.residual, secs) +
                    ", " + std::to_string(fit.used) + " records"};
}

Outcome chernoff() {
  const double got = chernoff_tail(100, 0.3);
  const double rel = std::abs(got - std::exp(-3.0)) / std::exp(-3.0);
  std::size_t raised = 0;
  for (double delta : {0.0, -0.1, 1.5, 2.0}) {
    try {
      chernoff_tail(100, delta);
    } catch (const ArgumentError&) {
      ++raised;
    }
  }
  return {rel <= 1e-12 && raised == 4, fmt("relative error %.3g; ", rel) + std::to_string(raised) + "/4 bad deltas raise"};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string strip_last_column(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

Outcome determinism(const std::string& cli, const fs::path& work) {
  if (cli.empty() || !fs::exists(cli)) return {false, "CLI binary not given"};
  fs::remove_all(work);
  const std::vector<std::string> runs{"run1", "run2"};
  for (const auto& run : runs) {
    const auto dir = work / run;
    fs::create_directories(dir);
    std::ofstream(dir / "sweep.conf") << "n = 200, 400\np_scale = 3\nseeds = 3\nrestarts = 4\n";
    const std::string d = dir.string() + "/";
    const std::vector<std::string> commands{
        cli + " gen --model gnp --n 500 --p 0.05 --seed 7 --out " + d + "gnp.edges",
        cli + " gen --n 500 --p 0.2 --pprime 0.3 --seed 7 --out " + d + "gnpp.edges",
        cli + " construct --n 1000 --p-scale 3 --seed 11 --save-gamma --out-prefix " + d + " > " + d + "construct.json",
        cli + " distance --graph " + d + "h.edges --heuristic --restarts 4 --seed 3 > " + d + "distance.json",
        cli + " sweep --config " + d + "sweep.conf --out " + d + "sweep.csv > /dev/null",
    };
    for (const auto& command : commands)
      if (std::system(command.c_str()) != 0) return {false, "command failed: " + command};
  }
  std::size_t compared = 0;
  std::string mismatched;
  for (const auto& entry : fs::directory_iterator(work / runs[0])) {
    const auto name = entry.path().filename();
    if (name.string() == "sweep.csv.json") continue;  // embeds wall_ms
    std::string a = slurp(entry.path()), b = slurp(work / runs[1] / name);
    if (name.extension() == ".csv") a = strip_last_column(a), b = strip_last_column(b);
    ++compared;
    if (a != b) mismatched += " " + name.string();
  }
  const auto a = load_csv((work / runs[0] / "sweep.csv").string()), b = load_csv((work / runs[1] / "sweep.csv").string());
  bool csv_ok = a.size() == b.size() && !a.empty();
  return {csv_ok && mismatched.empty(),
          std::to_string(compared) + " files compared" + (mismatched.empty() ? ", all identical" : "; differ:" + mismatched)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const fs::path work = argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path() / "trifree_acceptance";

  const auto sweep = run_construction_sweep();
  report(1, "triangle-free output", [&] {
    return Outcome{sweep.triangle_free == sweep.runs && sweep.seconds < 60.0,
                   std::to_string(sweep.triangle_free) + "/" + std::to_string(sweep.runs) +
                       fmt(" runs triangle-free; %.1f s", sweep.seconds)};
  });
  report(2, "minimum degree", [&] {
    return Outcome{10 * sweep.degree_ok >= 9 * sweep.runs,
                   std::to_string(sweep.degree_ok) + "/" + std::to_string(sweep.runs) +
                       " runs reach the target; worst min degree " + std::to_string(sweep.worst_min_degree) +
                       fmt(" vs target %.2f", sweep.target)};
  });
  report(3, "containment chain", [&] {
    return Outcome{sweep.chain_ok == sweep.runs,
                   std::to_string(sweep.chain_ok) + "/" + std::to_string(sweep.runs) + " runs"};
  });
  report(4, "oracle equivalence", oracle_equivalence);
  report(5, "gadget certification", gadgets);
  report(6, "G(n,p) basic properties", basics);
  report(7, "atypical edges", atypical);
  report(8, "bad-star packing", bad_stars);
  report(9, "scaling fit", scaling);
  report(10, "chernoff tail", chernoff);
  report(11, "CLI determinism", [&] { return determinism(cli, work); });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
