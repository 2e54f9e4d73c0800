#include "ncg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "ncg/best_response.hpp"
#include "ncg/constructions.hpp"
#include "ncg/dynamics.hpp"
#include "ncg/errors.hpp"
#include "ncg/generators.hpp"
#include "ncg/graph_io.hpp"
#include "ncg/sweep.hpp"

namespace ncg {

namespace {

struct Globals {
  std::uint64_t seed = 1;
  double alpha = 1.0;
  std::uint32_t k = 2;
  std::string variant = "max";
  std::string output;
  std::size_t round_cap = 1000;
  std::size_t sum_cap = 16;
  bool sum_heuristic = false;

  GameConfig config() const {
    GameConfig cfg{parse_variant(variant), alpha, k};
    cfg.validate();
    return cfg;
  }
  SolverOptions solver() const { return {sum_cap, sum_heuristic}; }
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw Error("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

OwnedGraph load(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_graph(in);
  return read_graph_file(path);
}

nlohmann::json endpoints_json(const Strategy& s) {
  return nlohmann::json(std::vector<Vertex>(s.endpoints().begin(), s.endpoints().end()));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Local-knowledge network creation games: best responses, equilibria, dynamics",
               "ncg"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--alpha", g.alpha, "Edge price");
  app.add_option("--k", g.k, "View radius");
  app.add_option("--variant", g.variant, "max | sum");
  app.add_option("-o,--output,--out", g.output, "Output file (default stdout)");
  app.add_option("--round-cap", g.round_cap, "Maximum number of dynamics rounds");
  app.add_option("--sum-cap", g.sum_cap, "Largest view for the exact Sum solver");
  app.add_flag("--sum-heuristic", g.sum_heuristic,
               "Use single-edge moves for Sum views above the cap");

  // generate
  auto* generate = app.add_subcommand("generate", "Random starting network");
  std::string gen_kind;
  std::size_t gen_n = 0;
  double gen_p = 0.0;
  std::size_t gen_attempts = 1000;
  generate->add_option("kind", gen_kind, "tree | gnp")
      ->required()
      ->check(CLI::IsMember({"tree", "gnp"}));
  generate->add_option("--n", gen_n, "Vertex count")->required();
  generate->add_option("--p", gen_p, "Edge probability (gnp)");
  generate->add_option("--max-attempts", gen_attempts, "Rejection attempts (gnp)");

  // construct
  auto* construct = app.add_subcommand("construct", "Deterministic lower-bound instance");
  std::string con_kind;
  std::size_t con_n = 10;
  std::uint32_t con_d = 2;
  std::uint32_t con_ell = 2;
  std::vector<std::uint32_t> con_delta;
  std::uint32_t con_delta_d = 0;
  bool con_labels = false;
  construct->add_option("kind", con_kind, "cycle | torus | open-torus | heawood")
      ->required()
      ->check(CLI::IsMember({"cycle", "torus", "open-torus", "heawood"}));
  construct->add_option("--n", con_n, "Cycle length");
  construct->add_option("--d", con_d, "Torus dimensions");
  construct->add_option("--ell", con_ell, "Torus path length");
  construct->add_option("--delta", con_delta, "Torus side lengths, comma separated")
      ->delimiter(',');
  construct->add_option("--delta-d", con_delta_d,
                        "Last side length when deriving parameters from --alpha/--k");
  construct->add_flag("--labels", con_labels, "Print torus coordinate labels to stderr");

  // best-response
  auto* best = app.add_subcommand("best-response", "Best response of one player on her view");
  std::string br_file;
  Vertex br_player = 0;
  best->add_option("graph", br_file, "Graph file ('-' for stdin)");
  best->add_option("--player", br_player, "Player id")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Check whether a network is an LKE");
  std::string verify_file;
  verify->add_option("graph", verify_file, "Graph file ('-' for stdin)");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Run best-response dynamics");
  std::string sim_file;
  std::string sim_trace;
  simulate->add_option("graph", sim_file, "Starting graph file ('-' for stdin)");
  simulate->add_option("--trace", sim_trace, "Write per-round statistics as JSON lines");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run a parameter grid of dynamics");
  std::string sweep_config;
  std::size_t sweep_jobs = 1;
  sweep->add_option("--config", sweep_config, "JSON grid description")->required();
  sweep->add_option("--jobs", sweep_jobs, "Parallel runs");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    Output sink(g.output, out);
    std::ostream& os = sink.get();

    if (*generate) {
      OwnedGraph graph = gen_kind == "tree" ? random_tree(gen_n, g.seed)
                                            : gnp_connected(gen_n, gen_p, g.seed, gen_attempts);
      write_graph(os, graph);
    } else if (*construct) {
      if (con_kind == "cycle") {
        write_graph(os, build_cycle(con_n));
      } else if (con_kind == "heawood") {
        write_graph(os, heawood());
      } else {
        TorusParams p;
        if (con_delta.empty()) {
          p = torus_params_for(g.alpha, g.k,
                               con_delta_d ? std::optional<std::uint32_t>(con_delta_d)
                                           : std::nullopt);
        } else {
          p = {con_d, con_ell, con_delta};
        }
        const TorusGraph t = con_kind == "torus" ? build_torus(p) : build_open_torus(p);
        write_graph(os, t.graph);
        if (con_labels) {
          for (Vertex v = 0; v < t.labels.size(); ++v) {
            err << v;
            for (auto x : t.labels[v]) err << ' ' << x;
            err << (t.intersection[v] ? " I" : " P") << '\n';
          }
        }
      }
    } else if (*best) {
      const OwnedGraph graph = load(br_file, in);
      if (br_player >= graph.order()) throw PreconditionError("player id out of range");
      const GameConfig cfg = g.config();
      const BestResponse br = best_response(make_view(graph, br_player, cfg.k), cfg, g.solver());
      nlohmann::json j = {{"player", br_player},
                          {"endpoints", endpoints_json(br.strategy)},
                          {"cost", br.cost},
                          {"delta", br.delta_vs_current},
                          {"improving", br.delta_vs_current < -kCostTolerance},
                          {"heuristic", br.heuristic}};
      os << j.dump() << '\n';
    } else if (*verify) {
      const OwnedGraph graph = load(verify_file, in);
      const LkeVerdict verdict = verify_lke(graph, g.config(), g.solver());
      if (verdict.is_equilibrium()) {
        os << "EQUILIBRIUM\n";
      } else {
        const Witness& w = *verdict.witness;
        os << "NOT_EQUILIBRIUM\n";
        nlohmann::json j = {
            {"player", w.player}, {"endpoints", endpoints_json(w.strategy)}, {"delta", w.delta}};
        os << j.dump() << '\n';
      }
    } else if (*simulate) {
      const GameConfig cfg = g.config();
      DynamicsTrace trace = run_dynamics(load(sim_file, in), cfg, g.seed,
                                         DynamicsOptions{g.round_cap, g.solver()});
      if (!sim_trace.empty()) {
        std::ofstream jsonl(sim_trace);
        if (!jsonl) throw Error("cannot write " + sim_trace);
        write_rounds_jsonl(jsonl, trace);
      }
      const RoundStats& last = trace.rounds.empty() ? trace.initial : trace.rounds.back();
      nlohmann::json j = {{"status", to_string(trace.status)},
                          {"rounds", trace.rounds.size()},
                          {"changes", trace.total_changes},
                          {"social_cost", last.social_cost},
                          {"quality", last.social_cost / star_cost(trace.final_graph.order(), cfg)},
                          {"diameter", last.diameter},
                          {"unfairness", last.unfairness}};
      if (trace.cycle_round) {
        j["cycle_round"] = *trace.cycle_round;
        j["cycle_first_seen"] = *trace.cycle_first_seen;
      }
      err << j.dump() << '\n';
      write_graph(os, trace.final_graph);
    } else if (*sweep) {
      const SweepGrid grid = load_sweep_config(sweep_config);
      write_sweep_csv(os, run_sweep(grid, sweep_jobs));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ncg
