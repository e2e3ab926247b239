// optseg: solve, count, and analyze optimal sequence segmentation instances.
//
// Subcommands: segment, count, growth, graph, bench, selfcheck.
// Exit codes: 0 ok, 1 internal/IO error, 2 bad usage or unparseable input,
// 3 infeasible instance, 4 size guard tripped (--force overrides),
// 5 root bracketing failed, 6 unsupported solver/bounds combination.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "optseg/graph_export.hpp"
#include "optseg/instance.hpp"
#include "optseg/optseg.hpp"

namespace {

namespace exit_code {
constexpr int ok = 0;
constexpr int internal = 1;
constexpr int parse = 2;
constexpr int infeasible = 3;
constexpr int guard = 4;
constexpr int analysis = 5;
constexpr int unsupported = 6;
}  // namespace exit_code

constexpr std::uint64_t kDefaultSeed = 1729;
constexpr int kBruteGuard = 20;   // solve_bruteforce / bench
constexpr int kCountGuard = 25;   // count --method brute
constexpr int kGraphGuard = 60;   // segment graph construction (N(N+1)/2 vertices)

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return exit_code::ok;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write to " << out_path << "\n";
    return exit_code::internal;
  }
  out << text;
  return exit_code::ok;
}

std::string render_result(const optseg::OptimalResult& result, bool as_json) {
  if (as_json) return optseg::result_to_json(result).dump() + "\n";
  std::string text = "segments:";
  for (const auto& seg : result.segmentation.segments) text += " " + optseg::to_string(seg);
  text += "\nvalue: " + result.value.get_str() + "\n";
  return text;
}

std::vector<optseg::SegmentBounds> standard_matrix() {
  using B = optseg::SegmentBounds;
  return {B::unconstrained(), B::at_least(2), B::at_least(3), B::at_least(4),
          B::of(1, 2),        B::of(1, 3),    B::of(1, 5),    B::of(2, 3),
          B::of(2, 5),        B::of(3, 7)};
}

// --- segment ---

struct SegmentOptions {
  std::string file;
  std::string solver = "dp";
  bool as_json = false;
  bool force = false;
  std::string out;
};

int run_segment(const SegmentOptions& opt) {
  const auto instance = optseg::load_instance(opt.file);
  const int n = instance.sequence.size();
  optseg::OptimalResult result;
  if (opt.solver == "dp") {
    result = optseg::solve_dp(instance.sequence, instance.scoring, instance.bounds);
  } else if (opt.solver == "brute") {
    if (n > kBruteGuard && !opt.force) {
      std::cerr << "error: brute-force solver is guarded at N <= " << kBruteGuard
                << " (N = " << n << "); pass --force to override\n";
      return exit_code::guard;
    }
    result = optseg::solve_bruteforce(instance.sequence, instance.scoring, instance.bounds);
  } else {  // graph
    if (!instance.bounds.unconstrained_for(n)) {
      std::cerr << "error: the graph solver reduces unconstrained instances only; "
                   "drop \"bounds\" or use --solver dp\n";
      return exit_code::unsupported;
    }
    if (n > kGraphGuard && !opt.force) {
      std::cerr << "error: the graph solver is guarded at N <= " << kGraphGuard << " (N = " << n
                << ", " << n * (n + 1) / 2 << " vertices); pass --force to override\n";
      return exit_code::guard;
    }
    const auto graph = optseg::build_segment_graph(instance.sequence, instance.scoring);
    const auto best = optseg::mwids_interval(graph);
    result.segmentation = optseg::solution_to_segmentation(graph, best);
    result.value = -best.total_weight;
  }
  return emit(render_result(result, opt.as_json), opt.out);
}

// --- count ---

struct CountOptions {
  int n = 0;
  int min_len = 1;
  int max_len = 0;  // 0: unbounded
  std::string method = "gf";
  bool force = false;
};

optseg::SegmentBounds bounds_from(int min_len, int max_len) {
  optseg::SegmentBounds b;
  b.min_len = min_len;
  if (max_len > 0) b.max_len = max_len;
  optseg::check_bounds(b);
  return b;
}

int run_count(const CountOptions& opt) {
  const auto bounds = bounds_from(opt.min_len, opt.max_len);
  optseg::BigInt count;
  if (opt.method == "brute") {
    if (opt.n > kCountGuard && !opt.force) {
      std::cerr << "error: brute-force counting is guarded at N <= " << kCountGuard
                << " (N = " << opt.n << "); pass --force to override\n";
      return exit_code::guard;
    }
    count = optseg::count_segmentations_bruteforce(opt.n, bounds);
  } else {
    try {
      const auto gf = optseg::gf_for_bounds(bounds);
      count = optseg::coefficients(gf, opt.n).back();
    } catch (const optseg::DomainError& e) {
      std::cerr << "error: no closed form for these bounds (" << e.what()
                << "); use --method brute\n";
      return exit_code::unsupported;
    }
  }
  std::cout << count.get_str() << "\n";
  return exit_code::ok;
}

// --- growth ---

int run_growth(int min_len, int max_len) {
  const auto bounds = bounds_from(min_len, max_len);
  optseg::RationalGF gf;
  try {
    gf = optseg::gf_for_bounds(bounds);
  } catch (const optseg::DomainError& e) {
    std::cerr << "error: no closed form for these bounds (" << e.what() << ")\n";
    return exit_code::unsupported;
  }
  const auto est = optseg::growth_factor(gf);
  const double ratio = optseg::empirical_growth(optseg::coefficients(gf, 200));
  std::ostringstream out;
  out << std::setprecision(15);
  out << "alpha: " << est.alpha << "\n"
      << "A: " << est.growth << "\n"
      << "residual: " << est.residual << "\n"
      << "empirical_ratio_N200: " << ratio << "\n";
  std::cout << out.str();
  if (std::fabs(est.growth - ratio) > 1e-6)
    std::cerr << "warning: analytic growth and empirical ratio differ by "
              << std::fabs(est.growth - ratio) << " (> 1e-6)\n";
  return exit_code::ok;
}

// --- graph ---

struct GraphOptions {
  std::string file;
  std::string format = "dot";
  bool force = false;
  std::string out;
};

int run_graph(const GraphOptions& opt) {
  const auto instance = optseg::load_instance(opt.file);
  const int n = instance.sequence.size();
  if (n > kGraphGuard && !opt.force) {
    std::cerr << "error: graph export is guarded at N <= " << kGraphGuard << " (N = " << n
              << " gives " << n * (n + 1) / 2 << " vertices); pass --force to override\n";
    return exit_code::guard;
  }
  const auto graph = optseg::build_segment_graph(instance.sequence, instance.scoring);
  const std::string text =
      opt.format == "dot" ? optseg::to_dot(graph) : optseg::graph_to_json(graph).dump(2) + "\n";
  return emit(text, opt.out);
}

// --- bench ---

struct BenchOptions {
  std::vector<int> sizes;
  std::vector<std::string> solvers = {"brute", "dp"};
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

int run_bench(const BenchOptions& opt) {
  auto sizes = opt.sizes;
  std::sort(sizes.begin(), sizes.end());
  auto solvers = opt.solvers;
  std::sort(solvers.begin(), solvers.end());

  std::ostringstream csv;
  csv << "N,solver,millis,scoring_calls\n";
  for (int n : sizes) {
    optseg::Rng rng(opt.seed ^ static_cast<std::uint64_t>(n));
    const optseg::Sequence seq = optseg::random_sequence(rng, n);
    std::map<std::string, optseg::BigInt> values;
    for (const auto& solver : solvers) {
      if (solver == "brute" && n > kBruteGuard) {
        std::cerr << "bench: skipping brute for N=" << n << " (guard N <= " << kBruteGuard
                  << ")\n";
        continue;
      }
      if (solver == "graph" && n > kGraphGuard) {
        std::cerr << "bench: skipping graph for N=" << n << " (guard N <= " << kGraphGuard
                  << ")\n";
        continue;
      }
      auto counter = std::make_shared<optseg::ScoreCallCounter>();
      const auto scoring = optseg::counted(optseg::hashed_scoring(opt.seed), counter);
      const auto start = std::chrono::steady_clock::now();
      optseg::OptimalResult result;
      if (solver == "dp") {
        result = optseg::solve_dp(seq, scoring);
      } else if (solver == "brute") {
        result = optseg::solve_bruteforce(seq, scoring);
      } else {
        const auto graph = optseg::build_segment_graph(seq, scoring);
        const auto best = optseg::mwids_interval(graph);
        result.segmentation = optseg::solution_to_segmentation(graph, best);
        result.value = -best.total_weight;
      }
      const auto stop = std::chrono::steady_clock::now();
      const double millis = std::chrono::duration<double, std::milli>(stop - start).count();
      values.emplace(solver, result.value);
      csv << n << "," << solver << "," << std::fixed << std::setprecision(3) << millis << ","
          << counter->calls.load() << "\n";
    }
    if (values.size() > 1) {
      bool agree = true;
      for (const auto& [solver, value] : values) agree = agree && value == values.begin()->second;
      if (agree)
        std::cerr << "bench: N=" << n << " values agree across solvers (value = "
                  << values.begin()->second.get_str() << ")\n";
      else
        std::cerr << "bench: N=" << n << " VALUE MISMATCH across solvers\n";
    }
  }
  return emit(csv.str(), opt.out);
}

// --- selfcheck ---

struct CheckReport {
  int failures = 0;

  void report(const std::string& name, bool pass, const std::string& detail = "") {
    if (pass) {
      std::cout << "ok - " << name << "\n";
    } else {
      ++failures;
      std::cout << "FAIL - " << name << (detail.empty() ? "" : ": " + detail) << "\n";
    }
  }
};

int run_selfcheck(std::uint64_t seed, int trials) {
  using namespace optseg;
  CheckReport report;

  {
    Rng rng(seed);
    bool pass = true;
    std::string detail;
    for (int t = 0; t < trials && pass; ++t) {
      const int n = rng.uniform(1, 10);
      const Sequence s = random_sequence(rng, n);
      const Scoring f = random_table_scoring(rng, n);
      const SegmentBounds bounds = random_feasible_bounds(rng, n);
      if (solve_dp(s, f, bounds).value != solve_bruteforce(s, f, bounds).value) {
        pass = false;
        detail = "trial " + std::to_string(t);
      }
    }
    report.report("dp value matches brute force", pass, detail);
  }
  {
    Rng rng(seed + 1);
    bool pass = true;
    std::string detail;
    for (int t = 0; t < trials && pass; ++t) {
      const int n = rng.uniform(1, 8);
      const Sequence s = random_sequence(rng, n);
      const Scoring f = random_table_scoring(rng, n);
      const auto graph = build_segment_graph(s, f);
      const auto best = mwids_interval(graph);
      const auto direct = solve_bruteforce(s, f);
      const auto mapped = solution_to_segmentation(graph, best);
      if (-best.total_weight != direct.value || !validate_segmentation(s, mapped).ok()) {
        pass = false;
        detail = "trial " + std::to_string(t);
      }
    }
    report.report("segment-graph reduction solves segmentation", pass, detail);
  }
  {
    Rng rng(seed + 2);
    bool pass = true;
    std::string detail;
    for (int t = 0; t < trials && pass; ++t) {
      const auto family = random_interval_family(rng, 12);
      const auto graph = build_interval_graph(family);
      if (mwids_interval(graph).total_weight != mwids_bruteforce(graph).total_weight) {
        pass = false;
        detail = "trial " + std::to_string(t);
      }
    }
    report.report("interval MWIDS matches brute force", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (const auto& bounds : standard_matrix()) {
      const auto counts = coefficients(gf_for_bounds(bounds), 14);
      for (int n = 1; n <= 14; ++n) {
        if (counts[n] != count_segmentations_bruteforce(n, bounds)) {
          pass = false;
          detail = "N=" + std::to_string(n);
        }
      }
    }
    report.report("generating functions count exactly", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (const auto& bounds : standard_matrix()) {
      const auto gf = gf_for_bounds(bounds);
      const double gap =
          std::fabs(growth_factor(gf).growth - empirical_growth(coefficients(gf, 200)));
      if (gap > 1e-6) {
        pass = false;
        detail = "gap " + std::to_string(gap);
      }
    }
    report.report("growth factors match empirical ratios", pass, detail);
  }

  if (report.failures == 0) {
    std::cout << "selfcheck passed\n";
    return exit_code::ok;
  }
  std::cerr << "selfcheck: " << report.failures << " check(s) failed\n";
  return exit_code::internal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal sequence segmentation toolkit"};
  app.require_subcommand(1);

  SegmentOptions seg_opt;
  auto* segment = app.add_subcommand("segment", "solve an instance file");
  segment->add_option("file", seg_opt.file, "instance JSON file")->required();
  segment->add_option("--solver", seg_opt.solver, "solver to use")
      ->check(CLI::IsMember({"brute", "dp", "graph"}))
      ->capture_default_str();
  segment->add_flag("--json", seg_opt.as_json, "emit machine-readable JSON");
  segment->add_flag("--force", seg_opt.force, "override size guards");
  segment->add_option("--out", seg_opt.out, "write output to a file");

  CountOptions count_opt;
  auto* count = app.add_subcommand("count", "count admissible segmentations");
  count->add_option("N", count_opt.n, "sequence length")->required()->check(CLI::PositiveNumber);
  count->add_option("--min", count_opt.min_len, "minimum segment length")
      ->capture_default_str();
  count->add_option("--max", count_opt.max_len, "maximum segment length (0 = unbounded)")
      ->capture_default_str();
  count->add_option("--method", count_opt.method, "counting method")
      ->check(CLI::IsMember({"brute", "gf"}))
      ->capture_default_str();
  count->add_flag("--force", count_opt.force, "override the brute-force size guard");

  int growth_min = 1, growth_max = 0;
  auto* growth = app.add_subcommand("growth", "exponential growth factor of the search space");
  growth->add_option("--min", growth_min, "minimum segment length")->capture_default_str();
  growth->add_option("--max", growth_max, "maximum segment length (0 = unbounded)")
      ->capture_default_str();

  GraphOptions graph_opt;
  auto* graph = app.add_subcommand("graph", "export the segment graph of an instance");
  graph->add_option("file", graph_opt.file, "instance JSON file")->required();
  graph->add_option("--format", graph_opt.format, "output format")
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();
  graph->add_flag("--force", graph_opt.force, "override the size guard");
  graph->add_option("--out", graph_opt.out, "write output to a file");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "time solvers on pseudorandom instances");
  bench->add_option("--sizes", bench_opt.sizes, "sequence lengths")->required()->delimiter(',');
  bench->add_option("--solvers", bench_opt.solvers, "solvers to run")
      ->delimiter(',')
      ->check(CLI::IsMember({"brute", "dp", "graph"}))
      ->capture_default_str();
  bench->add_option("--seed", bench_opt.seed, "random seed")->capture_default_str();
  bench->add_option("--out", bench_opt.out, "write the CSV to a file");

  std::uint64_t check_seed = kDefaultSeed;
  int check_trials = 200;
  auto* selfcheck = app.add_subcommand("selfcheck", "run the cross-solver oracle suite");
  selfcheck->add_option("--seed", check_seed, "random seed")->capture_default_str();
  selfcheck->add_option("--trials", check_trials, "trials per check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return exit_code::parse;
  }

  try {
    if (*segment) return run_segment(seg_opt);
    if (*count) return run_count(count_opt);
    if (*growth) return run_growth(growth_min, growth_max);
    if (*graph) return run_graph(graph_opt);
    if (*bench) return run_bench(bench_opt);
    if (*selfcheck) return run_selfcheck(check_seed, check_trials);
  } catch (const optseg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::parse;
  } catch (const optseg::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::infeasible;
  } catch (const optseg::BracketError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::analysis;
  } catch (const optseg::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::parse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_code::internal;
  }
  return exit_code::ok;
}
