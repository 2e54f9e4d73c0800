#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ncg/dynamics.hpp"

namespace ncg {

/// Starting-network family: uniform random trees or connected G(n, p).
struct GraphClass {
  std::string type;  // "tree" | "gnp"
  std::size_t n = 0;
  double p = 0.0;  // gnp only
};

struct SweepGrid {
  std::vector<GraphClass> classes;
  std::vector<double> alphas;
  std::vector<std::uint32_t> ks;
  std::size_t repetitions = 20;
  std::uint64_t seed = 1;
  Variant variant = Variant::Max;
  std::size_t round_cap = 1000;
  std::size_t max_attempts = 1000;
  SolverOptions solver;
};

/// Parses the JSON sweep document:
///
///   {"classes": [{"type": "tree", "n": [20, 30]},
///                {"type": "gnp", "n": 100, "p": [0.06, 0.1]}],
///    "alpha": [1, 2], "k": [2, 1000], "repetitions": 20, "seed": 7,
///    "variant": "max", "round_cap": 1000, "sum_exact_cap": 16}
///
/// "n" and "p" accept a number or a list. Throws ParseError.
SweepGrid parse_sweep_config(const std::string& json_text);
SweepGrid load_sweep_config(const std::filesystem::path& path);

struct RunSpec {
  GraphClass graph;
  double alpha = 0.0;
  std::uint32_t k = 0;
  std::size_t rep = 0;
  std::uint64_t seed = 0;  // seeds the starting network; shared across (alpha, k)
};

/// One spec per (class, n, p, alpha, k, repetition) in that nesting order.
std::vector<RunSpec> expand_grid(const SweepGrid& grid);

/// Seed of the starting network for a class member and repetition.
std::uint64_t start_seed(std::uint64_t base, const GraphClass& cls, std::size_t rep);

/// Builds the starting network of a run.
OwnedGraph start_graph(const RunSpec& spec, std::size_t max_attempts);

struct RunResult {
  RunSpec spec;
  std::optional<DynamicsTrace> trace;
  std::string error;  // set when the run failed
};

/// Runs every grid point on `jobs` worker threads. Results come back in
/// expand_grid order regardless of completion order; failures become error
/// rows.
std::vector<RunResult> run_sweep(const SweepGrid& grid, std::size_t jobs = 1);

void write_sweep_csv_header(std::ostream& out);
void write_sweep_csv_row(std::ostream& out, const RunResult& result);
void write_sweep_csv(std::ostream& out, const std::vector<RunResult>& results);

}  // namespace ncg
