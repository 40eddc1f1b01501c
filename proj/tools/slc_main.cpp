// Command-line front end: color / verify / oracle / gen / fuzz / bench.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slc/battery.hpp"
#include "slc/driver.hpp"
#include "slc/gen.hpp"
#include "slc/io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace slc;

uint64_t mix(uint64_t a, uint64_t b) {
  a ^= b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2);
  a *= 0xff51afd7ed558ccdull;
  a ^= a >> 33;
  return a;
}

int cmd_color(const std::string& instance_path, const std::string& out_path,
              bool report, bool parallel, bool trace) {
  Instance in = read_instance_file(instance_path);
  RunOptions opts;
  opts.parallel_components = parallel;
  TraceWriter tracer(&std::cerr);
  if (trace) opts.observer = &tracer;
  auto res = color_graph(in.graph, in.lists, opts);
  if (report) std::cerr << res.report.serialize();
  if (!res.success) {
    for (const auto& c : res.report.components)
      if (!c.colored)
        std::cout << "infeasible component rep=" << c.rep
                  << " size=" << c.size << " certificate: " << c.certificate
                  << "\n";
    return 2;
  }
  if (out_path.empty()) {
    write_coloring(std::cout, res.coloring);
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open " + out_path);
    write_coloring(out, res.coloring);
  }
  return 0;
}

int cmd_verify(const std::string& instance_path,
               const std::string& coloring_path) {
  Instance in = read_instance_file(instance_path);
  Coloring f = read_coloring_file(coloring_path, in.graph.n(),
                                  in.lists.universe);
  auto v = check_superlinear(in.graph, in.lists, f);
  if (v.kind == Violation::kNone) {
    std::cout << "ok\n";
    return 0;
  }
  std::cout << v.describe() << "\n";
  return 3;
}

int cmd_oracle(const std::string& instance_path, bool count_all,
               int max_vertices) {
  Instance in = read_instance_file(instance_path);
  SearchBudget budget;
  budget.max_vertices = max_vertices;
  if (count_all) {
    std::cout << enumerate_all(in.graph, in.lists, budget) << "\n";
    return 0;
  }
  auto res = solve_superlinear(in.graph, in.lists, budget);
  if (res.status == OracleStatus::kBudget) {
    std::cerr << "oracle: node budget exhausted\n";
    return 1;
  }
  if (res.none()) {
    std::cout << "none (nodes=" << res.nodes << ")\n";
    return 2;
  }
  write_coloring(std::cout, res.coloring);
  return 0;
}

int cmd_gen(const std::string& family, int n, uint64_t seed,
            const std::string& lists_kind, const std::string& lists_file,
            int universe) {
  Rng rng(seed);
  Graph g;
  if (family == "petersen") {
    g = petersen_graph();
  } else if (family == "c5") {
    g = gen_c5();
  } else if (family == "k33") {
    g = gen_k33();
  } else if (family == "k23") {
    g = gen_k23();
  } else if (family == "prism") {
    g = gen_prism();
  } else if (family == "cycle") {
    g = gen_cycle(n);
  } else if (family == "random-subcubic") {
    g = gen_random_subcubic(n, rng);
  } else if (family == "random-cubic") {
    g = gen_random_cubic(n, rng);
  } else if (family == "two-c5-bridge") {
    g = gen_two_c5_bridge(std::max(1, n));
  } else if (family == "planted-eyeglass") {
    g = gen_planted_eyeglass(rng);
  } else if (family == "planted-c4-bridge") {
    g = gen_planted_c4_bridge(rng);
  } else if (family == "planted-k23") {
    g = gen_planted_k23(rng);
  } else if (family == "planted-triangle") {
    g = gen_planted_triangle(rng);
  } else if (family == "planted-c5-anchor") {
    g = gen_planted_c5_anchor(rng);
  } else {
    std::cerr << "unknown family: " << family << "\n";
    return 1;
  }
  ListAssignment L;
  if (!lists_file.empty()) {
    Instance src = read_instance_file(lists_file);
    if (src.lists.n() < g.n()) {
      std::cerr << "lists file too small\n";
      return 1;
    }
    L.universe = src.lists.universe;
    L.lists.assign(src.lists.lists.begin(), src.lists.lists.begin() + g.n());
  } else if (lists_kind == "identical") {
    L = gen_lists_identical(g.n(), universe);
  } else if (lists_kind == "random") {
    L = gen_lists_random(g.n(), rng, universe);
  } else {
    std::cerr << "unknown lists kind: " << lists_kind << "\n";
    return 1;
  }
  if (family == "random-cubic")
    std::cout << "# connected: " << (is_connected(g) ? "yes" : "no") << "\n";
  write_instance(std::cout, g, L);
  return 0;
}

struct FuzzOutcome {
  uint64_t digest = 0;
  uint64_t discrepancies = 0;
  uint64_t colored = 0;
  uint64_t infeasible_components = 0;
  BranchCoverage coverage;
};

Instance fuzz_instance(uint64_t seed, int max_n) {
  Rng rng(seed);
  int pick = (int)rng.below(100);
  Graph g;
  if (pick < 40) {
    g = gen_random_subcubic(2 + (int)rng.below(std::max(1, max_n - 1)), rng);
  } else if (pick < 60) {
    int n = 4 + (int)rng.below(std::max(1, max_n - 3));
    if (n % 2) ++n;
    g = gen_random_cubic(std::min(n, max_n % 2 ? max_n - 1 : max_n), rng);
  } else if (pick < 68) {
    g = gen_planted_eyeglass(rng);
  } else if (pick < 76) {
    g = gen_planted_c4_bridge(rng);
  } else if (pick < 84) {
    g = gen_planted_k23(rng);
  } else if (pick < 90) {
    g = gen_planted_triangle(rng);
  } else if (pick < 96) {
    g = gen_planted_c5_anchor(rng);
  } else {
    g = gen_two_c5_bridge(1 + (int)rng.below(6));
  }
  Instance out;
  out.lists = rng.below(10) == 0 ? gen_lists_identical(g.n())
                                 : gen_lists_random(g.n(), rng);
  out.graph = std::move(g);
  return out;
}

// One fuzz iteration: color, verify, differentially check small components.
// Returns a human-readable failure description, empty on success.
std::string fuzz_one(Instance& in, FuzzOutcome& out) {
  RunOptions opts;
  opts.observer = &out.coverage;
  ColorGraphResult res;
  try {
    res = color_graph(in.graph, in.lists, opts);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
  if (res.report.fallback_used) return "defensive fallback triggered";
  for (const auto& comp : res.report.components) {
    if (comp.colored) ++out.colored;
    if (comp.infeasible) ++out.infeasible_components;
  }
  if (res.success) {
    auto v = check_superlinear(in.graph, in.lists, res.coloring);
    if (v.kind != Violation::kNone)
      return "output failed verification: " + v.describe();
  }
  // Differential check: feasibility of components of order <= 10 must agree
  // with the exhaustive search.
  for (const auto& comps = in.graph.components(); const auto& c : comps) {
    if (c.size() > 10) continue;
    auto oracle = solve_superlinear(in.graph, in.lists,
                                    SearchBudget{10, 400'000'000}, &c);
    bool driver_colored = true;
    for (const auto& rep : res.report.components)
      if (rep.rep == c.v.front()) driver_colored = rep.colored;
    if (oracle.found() != driver_colored)
      return "oracle feasibility disagreement on component of size " +
             std::to_string(c.size());
  }
  uint64_t h = res.success ? 2 : 1;
  for (Vertex v = 0; v < in.graph.n(); ++v)
    h = mix(h, (uint64_t)(res.coloring.at(v) + 2));
  out.digest ^= h;
  return "";
}

int cmd_fuzz(int max_n, long iters, uint64_t seed, int jobs,
             const std::string& repro_dir) {
  FuzzOutcome total;
  try {
    run_planted_battery(&total.coverage);
  } catch (const std::exception& e) {
    std::cerr << "planted battery failed: " << e.what() << "\n";
    return 1;
  }
  std::vector<std::string> failures;
#ifdef _OPENMP
  omp_set_num_threads(jobs > 0 ? jobs : omp_get_max_threads());
#else
  (void)jobs;
#endif
#pragma omp parallel
  {
    FuzzOutcome local;
    std::vector<std::string> local_failures;
#pragma omp for schedule(dynamic, 16)
    for (long i = 0; i < iters; ++i) {
      uint64_t iter_seed = mix(seed, (uint64_t)i + 1);
      Instance in = fuzz_instance(iter_seed, max_n);
      std::string err = fuzz_one(in, local);
      if (!err.empty()) {
        ++local.discrepancies;
        std::ostringstream name;
        name << repro_dir << "/fuzz-" << iter_seed << ".instance";
        std::ofstream repro(name.str());
        if (repro) write_instance(repro, in.graph, in.lists);
        local_failures.push_back("iter " + std::to_string(i) + " seed " +
                                 std::to_string(iter_seed) + ": " + err +
                                 " (reproducer: " + name.str() + ")");
      }
    }
#pragma omp critical
    {
      total.digest ^= local.digest;
      total.discrepancies += local.discrepancies;
      total.colored += local.colored;
      total.infeasible_components += local.infeasible_components;
      total.coverage.merge(local.coverage);
      for (auto& f : local_failures) failures.push_back(std::move(f));
    }
  }
  std::cout << "iterations=" << iters << "\n";
  std::cout << "colored_components=" << total.colored << "\n";
  std::cout << "infeasible_components=" << total.infeasible_components
            << "\n";
  std::cout << "discrepancies=" << total.discrepancies << "\n";
  std::cout << "digest=" << total.digest << "\n";
  std::cout << "branch coverage:\n";
  for (const auto& [k, v] : total.coverage.hits)
    std::cout << "  " << k << " " << v << "\n";
  for (const auto& f : failures) std::cerr << "FAIL " << f << "\n";
  return total.discrepancies == 0 ? 0 : 1;
}

int cmd_bench(const std::string& sizes_arg, uint64_t seed, int runs,
              bool compare_parallel) {
  std::vector<int> sizes;
  std::stringstream ss(sizes_arg);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) sizes.push_back(std::stoi(tok));
  if (sizes.empty()) {
    std::cerr << "bench: empty size list\n";
    return 1;
  }
  std::cout << "n median_ms ms_per_n steps steps_per_n";
  if (compare_parallel) std::cout << " parallel_ms";
  std::cout << "\n";
  for (int n : sizes) {
    Rng rng(mix(seed, (uint64_t)n));
    Graph g;
    for (int att = 0;; ++att) {
      g = gen_random_cubic(n % 2 ? n + 1 : n, rng);
      if (is_connected(g)) break;
      if (att > 200) {
        std::cerr << "bench: could not generate a connected instance\n";
        return 1;
      }
    }
    ListAssignment L = gen_lists_random(g.n(), rng);
    std::vector<double> wall;
    uint64_t steps = 0;
    for (int r = 0; r < runs; ++r) {
      auto res = color_graph(g, L);
      if (!res.success) {
        std::cerr << "bench: coloring failed\n";
        return 1;
      }
      wall.push_back(res.report.wall_ms);
      steps = res.report.steps;
    }
    std::sort(wall.begin(), wall.end());
    double med = wall[wall.size() / 2];
    std::cout << g.n() << " " << med << " " << med / g.n() << " " << steps
              << " " << (double)steps / g.n();
    if (compare_parallel) {
      // Disjoint blobs expose component-level parallelism.
      int blob = std::max(4, (n / 8) % 2 ? n / 8 + 1 : n / 8);
      std::vector<std::pair<Vertex, Vertex>> edges;
      int total = 0;
      for (int b = 0; b < 8; ++b) {
        Graph piece = gen_random_cubic(blob, rng);
        for (Vertex v = 0; v < piece.n(); ++v)
          for (int i = 0; i < piece.full_degree(v); ++i)
            if (piece.nbr(v)[i] > v)
              edges.push_back({total + v, total + piece.nbr(v)[i]});
        total += piece.n();
      }
      Graph big(total, edges);
      ListAssignment bl = gen_lists_random(total, rng);
      RunOptions popts;
      popts.parallel_components = true;
      std::vector<double> pw;
      for (int r = 0; r < runs; ++r) {
        auto res = color_graph(big, bl, popts);
        pw.push_back(res.report.wall_ms);
      }
      std::sort(pw.begin(), pw.end());
      std::cout << " " << pw[pw.size() / 2];
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superlinear 4-list colorings of subcubic graphs"};
  app.require_subcommand(1);

  std::string instance_path, coloring_path, out_path;
  bool report = false, parallel = false, trace = false;
  auto* color = app.add_subcommand("color", "color an instance file");
  color->add_option("instance", instance_path)->required();
  color->add_option("--out", out_path, "write the coloring here");
  color->add_flag("--report", report, "print the run report to stderr");
  color->add_flag("--parallel", parallel, "color components in parallel");
  color->add_flag("--trace", trace, "print extension choices to stderr");

  auto* verify = app.add_subcommand("verify", "verify a coloring file");
  verify->add_option("instance", instance_path)->required();
  verify->add_option("coloring", coloring_path)->required();

  bool count_all = false;
  int max_vertices = 12;
  auto* oracle = app.add_subcommand("oracle", "exhaustive search");
  oracle->add_option("instance", instance_path)->required();
  oracle->add_flag("--count", count_all, "count all colorings");
  oracle->add_option("--max-vertices", max_vertices);

  std::string family, lists_kind = "identical", lists_file;
  int gen_n = 0, universe = 8;
  uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "emit an instance file");
  gen->add_option("family", family,
                  "petersen|c5|k33|k23|prism|cycle|random-subcubic|"
                  "random-cubic|two-c5-bridge|planted-*")
      ->required();
  gen->add_option("n", gen_n, "order for sized families");
  gen->add_option("--seed", seed);
  gen->add_option("--lists", lists_kind, "identical|random");
  gen->add_option("--lists-file", lists_file, "take lists from a file");
  gen->add_option("--universe", universe);

  int fuzz_n = 200, jobs = 0;
  long iters = 1000;
  std::string repro_dir = ".";
  auto* fuzz = app.add_subcommand("fuzz", "differential fuzzing");
  fuzz->add_option("--n", fuzz_n, "max vertices per instance");
  fuzz->add_option("--iters", iters);
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--jobs", jobs, "OpenMP threads (0 = default)");
  fuzz->add_option("--repro-dir", repro_dir);

  std::string sizes;
  int runs = 5;
  bool compare_parallel = false;
  auto* bench = app.add_subcommand("bench", "timing on random cubic graphs");
  bench->add_option("--sizes", sizes, "comma-separated orders")->required();
  bench->add_option("--seed", seed);
  bench->add_option("--runs", runs);
  bench->add_flag("--compare-parallel", compare_parallel);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*color) return cmd_color(instance_path, out_path, report, parallel,
                                 trace);
    if (*verify) return cmd_verify(instance_path, coloring_path);
    if (*oracle) return cmd_oracle(instance_path, count_all, max_vertices);
    if (*gen)
      return cmd_gen(family, gen_n, seed, lists_kind, lists_file, universe);
    if (*fuzz) return cmd_fuzz(fuzz_n, iters, seed, jobs, repro_dir);
    if (*bench) return cmd_bench(sizes, seed, runs, compare_parallel);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ContractError& e) {
    std::cerr << "contract error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
