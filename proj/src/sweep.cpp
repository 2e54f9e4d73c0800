#include "ncg/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "ncg/errors.hpp"
#include "ncg/generators.hpp"
#include "ncg/rng.hpp"

namespace ncg {

namespace {

using nlohmann::json;

template <typename T>
std::vector<T> scalar_or_list(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("sweep config: missing '") + key + "'");
  const json& v = j.at(key);
  if (v.is_array()) {
    if (v.empty()) throw ParseError(std::string("sweep config: '") + key + "' is empty");
    return v.get<std::vector<T>>();
  }
  return {v.get<T>()};
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

SweepGrid parse_sweep_config(const std::string& json_text) {
  SweepGrid grid;
  try {
    const json j = json::parse(json_text);
    if (!j.contains("classes") || !j.at("classes").is_array() || j.at("classes").empty()) {
      throw ParseError("sweep config: 'classes' must be a non-empty list");
    }
    for (const json& c : j.at("classes")) {
      const std::string type = c.at("type").get<std::string>();
      if (type != "tree" && type != "gnp") {
        throw ParseError("sweep config: unknown class type '" + type + "'");
      }
      const auto ns = scalar_or_list<std::size_t>(c, "n");
      const auto ps = type == "gnp" ? scalar_or_list<double>(c, "p") : std::vector<double>{0.0};
      for (std::size_t n : ns) {
        for (double p : ps) grid.classes.push_back({type, n, p});
      }
    }
    grid.alphas = scalar_or_list<double>(j, "alpha");
    grid.ks = scalar_or_list<std::uint32_t>(j, "k");
    grid.repetitions = j.value("repetitions", grid.repetitions);
    grid.seed = j.value("seed", grid.seed);
    grid.variant = parse_variant(j.value("variant", std::string("max")));
    grid.round_cap = j.value("round_cap", grid.round_cap);
    grid.max_attempts = j.value("max_attempts", grid.max_attempts);
    grid.solver.sum_exact_cap = j.value("sum_exact_cap", grid.solver.sum_exact_cap);
    grid.solver.sum_heuristic_fallback =
        j.value("sum_heuristic_fallback", grid.solver.sum_heuristic_fallback);
  } catch (const json::exception& e) {
    throw ParseError(std::string("sweep config: ") + e.what());
  }
  if (grid.repetitions < 1) throw ParseError("sweep config: repetitions must be >= 1");
  for (double a : grid.alphas) {
    if (!(a > 0.0)) throw ParseError("sweep config: alpha values must be positive");
  }
  for (std::uint32_t k : grid.ks) {
    if (k < 1) throw ParseError("sweep config: k values must be >= 1");
  }
  return grid;
}

SweepGrid load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_sweep_config(buffer.str());
}

std::uint64_t start_seed(std::uint64_t base, const GraphClass& cls, std::size_t rep) {
  std::uint64_t h = mix64(base);
  for (unsigned char ch : cls.type) h = mix64(h ^ ch);
  h = mix64(h ^ cls.n);
  h = mix64(h ^ static_cast<std::uint64_t>(cls.p * 1e9 + 0.5));
  return mix64(h ^ rep);
}

std::vector<RunSpec> expand_grid(const SweepGrid& grid) {
  std::vector<RunSpec> specs;
  for (const GraphClass& cls : grid.classes) {
    for (double alpha : grid.alphas) {
      for (std::uint32_t k : grid.ks) {
        for (std::size_t rep = 0; rep < grid.repetitions; ++rep) {
          specs.push_back({cls, alpha, k, rep, start_seed(grid.seed, cls, rep)});
        }
      }
    }
  }
  return specs;
}

OwnedGraph start_graph(const RunSpec& spec, std::size_t max_attempts) {
  if (spec.graph.type == "tree") return random_tree(spec.graph.n, spec.seed);
  if (spec.graph.type == "gnp") {
    return gnp_connected(spec.graph.n, spec.graph.p, spec.seed, max_attempts);
  }
  throw PreconditionError("unknown graph class '" + spec.graph.type + "'");
}

std::vector<RunResult> run_sweep(const SweepGrid& grid, std::size_t jobs) {
  const std::vector<RunSpec> specs = expand_grid(grid);
  std::vector<RunResult> results(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      RunResult& r = results[i];
      r.spec = specs[i];
      try {
        GameConfig cfg{grid.variant, r.spec.alpha, r.spec.k};
        DynamicsOptions options{grid.round_cap, grid.solver};
        r.trace = run_dynamics(start_graph(r.spec, grid.max_attempts), cfg, r.spec.seed, options);
      } catch (const std::exception& e) {
        r.error = e.what();
      }
    }
  };
  jobs = std::max<std::size_t>(1, jobs);
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return results;
}

void write_sweep_csv_header(std::ostream& out) {
  out << "class,n,p,alpha,k,rep,seed,status,rounds,changes,social_cost,star_cost,quality,"
         "diameter,max_degree,avg_degree,max_bought,min_view,avg_view,unfairness\n";
}

void write_sweep_csv_row(std::ostream& out, const RunResult& r) {
  const RunSpec& s = r.spec;
  out << s.graph.type << ',' << s.graph.n << ',' << format_number(s.graph.p) << ','
      << format_number(s.alpha) << ',' << s.k << ',' << s.rep << ',' << s.seed << ',';
  if (!r.trace) {
    std::string message = r.error;
    for (char& ch : message) {
      if (ch == ',' || ch == '\n' || ch == '"') ch = ' ';
    }
    out << "error: " << message << ",,,,,,,,,,,,\n";
    return;
  }
  const DynamicsTrace& t = *r.trace;
  const RoundStats& last = t.rounds.empty() ? t.initial : t.rounds.back();
  const double star = star_cost(s.graph.n, t.config);
  out << to_string(t.status) << ',' << t.rounds.size() << ',' << t.total_changes << ','
      << format_number(last.social_cost) << ',' << format_number(star) << ','
      << format_number(last.social_cost / star) << ',' << last.diameter << ','
      << last.max_degree << ',' << format_number(last.avg_degree) << ',' << last.max_bought
      << ',' << last.min_view << ',' << format_number(last.avg_view) << ','
      << format_number(last.unfairness) << '\n';
}

void write_sweep_csv(std::ostream& out, const std::vector<RunResult>& results) {
  write_sweep_csv_header(out);
  for (const RunResult& r : results) write_sweep_csv_row(out, r);
}

}  // namespace ncg
