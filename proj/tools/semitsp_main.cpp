// Command-line front end: generate, analyze, solve, exact, compare, bench.
// Results go to stdout as JSON (or CSV/table where supported); diagnostics
// to stderr. Exit codes: 0 success, 1 usage error, 2 domain error.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "semitsp/approx.hpp"
#include "semitsp/exact.hpp"
#include "semitsp/experiments.hpp"
#include "semitsp/graph_io.hpp"
#include "semitsp/metrics.hpp"

namespace {

using nlohmann::json;
using namespace semitsp;

json cycle_json(const std::vector<VertexId>& order) { return json(order); }

json solution_json(const ApproxSolution& s) {
  return json{{"algo", algorithm_name(s.algorithm)},
              {"order", cycle_json(s.cycle.order)},
              {"weight", s.weight},
              {"bound_factor", s.bound_factor},
              {"time_ms", s.time_ms}};
}

std::string join_order(const std::vector<VertexId>& order) {
  std::string out;
  for (size_t i = 0; i < order.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(order[i]);
  }
  return out;
}

uint64_t effective_seed(uint64_t flag_seed) {
  if (const char* env = std::getenv("SEMITSP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      raise(Errc::BadConfig, std::string("SEMITSP_SEED is not an integer: ") + env);
    }
  }
  return flag_seed;
}

struct CompareRow {
  std::string name;
  std::vector<VertexId> order;
  double weight = 0.0;
  double bound_factor = 1.0;
};

int run_compare(const std::string& file, const std::string& format) {
  const CompleteGraph g = read_graph_file(file);
  const MetricReport report = classify(g);

  std::vector<CompareRow> rows;
  for (const ApproxSolution& s : solve_all(g))
    rows.push_back({algorithm_name(s.algorithm), s.cycle.order, s.weight, s.bound_factor});
  if (g.size() <= kHeldKarpCap) {
    const ExactSolution ex = held_karp(g);
    rows.push_back({"exact", ex.cycle.order, ex.weight, 1.0});
  }

  if (format == "json") {
    json out = json::array();
    for (const CompareRow& r : rows)
      out.push_back(json{{"algo", r.name},
                         {"order", cycle_json(r.order)},
                         {"weight", r.weight},
                         {"bound_factor", r.bound_factor}});
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "algorithm,cycle,weight,bound_factor\n";
    for (const CompareRow& r : rows)
      std::cout << r.name << ',' << join_order(r.order) << ',' << format_double(r.weight) << ','
                << format_double(r.bound_factor) << "\n";
  } else {
    std::printf("%-10s %-30s %-14s %s\n", "algorithm", "cycle", "weight", "bound_factor");
    for (const CompareRow& r : rows)
      std::printf("%-10s %-30s %-14s %s\n", r.name.c_str(), join_order(r.order).c_str(),
                  format_double(r.weight).c_str(), format_double(r.bound_factor).c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximation algorithms for the TSP on complete weighted semimetric graphs"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a random instance");
  int gen_n = 10;
  uint64_t gen_seed = 0;
  std::string gen_model = "uniform";
  std::string gen_out;
  double gen_wmin = 0.01, gen_wmax = 1.0, gen_target = 3.0;
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--model", gen_model, "uniform | euclidean | gamma");
  gen->add_option("--out", gen_out, "output file (.txt matrix or .json); stdout when omitted");
  gen->add_option("--w-min", gen_wmin, "uniform model lower bound");
  gen->add_option("--w-max", gen_wmax, "uniform model upper bound");
  gen->add_option("--target-gamma", gen_target, "gamma model target");

  // analyze
  auto* ana = app.add_subcommand("analyze", "Print beta, gamma and metricity as JSON");
  std::string ana_file;
  ana->add_option("file", ana_file, "graph file")->required();

  // solve
  auto* sol = app.add_subcommand("solve", "Run one approximation algorithm (or all)");
  std::string sol_algo = "pch";
  int sol_root = 0;
  std::string sol_file;
  sol->add_option("--algo", sol_algo, "dmst | ab | rab | pmch | pch | all");
  sol->add_option("--root", sol_root, "DMST root vertex");
  sol->add_option("file", sol_file, "graph file")->required();

  // exact
  auto* exa = app.add_subcommand("exact", "Run an exact solver");
  std::string exa_method = "heldkarp";
  std::string exa_file;
  exa->add_option("--method", exa_method, "brute | heldkarp");
  exa->add_option("file", exa_file, "graph file")->required();

  // compare
  auto* cmp = app.add_subcommand("compare", "All five algorithms plus the exact row");
  std::string cmp_file;
  std::string cmp_format = "json";
  cmp->add_option("file", cmp_file, "graph file")->required();
  cmp->add_option("--format", cmp_format, "json | csv | table");

  // bench
  auto* ben = app.add_subcommand("bench", "Quality or timing experiment harness");
  bool ben_quality = false, ben_timing = false;
  int ben_n = 20, ben_instances = 10, ben_nmin = 5, ben_nmax = 50;
  uint64_t ben_seed = 0;
  std::string ben_model = "uniform";
  std::string ben_outdir;
  ben->add_flag("--quality", ben_quality, "run the solution-quality experiment");
  ben->add_flag("--timing", ben_timing, "run the timing experiment");
  ben->add_option("--n", ben_n, "instance size (quality)");
  ben->add_option("--instances", ben_instances, "instances per experiment (or per size)");
  ben->add_option("--n-min", ben_nmin, "smallest size (timing)");
  ben->add_option("--n-max", ben_nmax, "largest size (timing)");
  ben->add_option("--seed", ben_seed, "base seed (SEMITSP_SEED overrides)");
  ben->add_option("--model", ben_model, "uniform | euclidean | gamma");
  ben->add_option("--out-dir", ben_outdir, "directory for CSV output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gen) {
      GeneratorConfig cfg;
      cfg.n = gen_n;
      cfg.seed = effective_seed(gen_seed);
      cfg.model = weight_model_from_name(gen_model);
      cfg.w_min = gen_wmin;
      cfg.w_max = gen_wmax;
      cfg.target_gamma = gen_target;
      const CompleteGraph g = generate_random_graph(cfg);
      if (gen_out.empty())
        std::cout << graph_to_text(g);
      else
        write_graph_file(gen_out, g);
    } else if (*ana) {
      const MetricReport r = classify(read_graph_file(ana_file));
      std::cout << json{{"beta", r.beta}, {"gamma", r.gamma}, {"is_metric", r.is_metric}}.dump()
                << "\n";
    } else if (*sol) {
      const CompleteGraph g = read_graph_file(sol_file);
      if (sol_algo == "all") {
        json out = json::array();
        for (const ApproxSolution& s : solve_all(g, sol_root)) out.push_back(solution_json(s));
        std::cout << out.dump() << "\n";
      } else {
        const MetricReport report = classify(g);
        ApproxSolution s;
        if (sol_algo == "dmst")
          s = solve_dmst(g, sol_root, &report);
        else if (sol_algo == "ab")
          s = solve_ab(g, &report);
        else if (sol_algo == "rab")
          s = solve_rab(g, &report);
        else if (sol_algo == "pmch")
          s = solve_pmch(g, &report);
        else if (sol_algo == "pch")
          s = solve_pch(g, &report);
        else
          raise(Errc::BadConfig, "unknown algorithm \"" + sol_algo + "\"");
        std::cout << solution_json(s).dump() << "\n";
      }
    } else if (*exa) {
      const CompleteGraph g = read_graph_file(exa_file);
      ExactSolution s;
      if (exa_method == "brute")
        s = brute_force(g);
      else if (exa_method == "heldkarp")
        s = held_karp(g);
      else
        raise(Errc::BadConfig, "unknown method \"" + exa_method + "\"");
      std::cout << json{{"order", cycle_json(s.cycle.order)},
                        {"weight", s.weight},
                        {"method", s.method == ExactMethod::BruteForce ? "brute" : "heldkarp"}}
                       .dump()
                << "\n";
    } else if (*cmp) {
      if (cmp_format != "json" && cmp_format != "csv" && cmp_format != "table")
        raise(Errc::BadConfig, "unknown format \"" + cmp_format + "\"");
      return run_compare(cmp_file, cmp_format);
    } else if (*ben) {
      if (ben_quality == ben_timing)
        raise(Errc::BadConfig, "pass exactly one of --quality / --timing");
      if (ben_quality) {
        QualityConfig cfg;
        cfg.n = ben_n;
        cfg.instances = ben_instances;
        cfg.base_seed = effective_seed(ben_seed);
        cfg.model = weight_model_from_name(ben_model);
        const auto records = run_quality_experiment(cfg);
        emit_plot_data(records, ben_outdir);
        json out;
        out["records"] = records.size();
        out["out_dir"] = ben_outdir;
        json sums = json::array();
        for (const WeightSummary& s : summarize_weights(records))
          sums.push_back(json{{"algorithm", s.algorithm},
                              {"mean", s.mean},
                              {"median", s.median},
                              {"min", s.min},
                              {"max", s.max}});
        out["summary"] = std::move(sums);
        std::cout << out.dump() << "\n";
      } else {
        TimingConfig cfg;
        cfg.n_min = ben_nmin;
        cfg.n_max = ben_nmax;
        cfg.instances_per_n = ben_instances;
        cfg.base_seed = effective_seed(ben_seed);
        cfg.model = weight_model_from_name(ben_model);
        const auto rows = run_timing_experiment(cfg);
        emit_timing_plot_data(rows, ben_outdir);
        std::cout << json{{"rows", rows.size()}, {"out_dir", ben_outdir}}.dump() << "\n";
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
