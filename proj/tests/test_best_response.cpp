#include <random>

#include "doctest.h"
#include "ncg/best_response.hpp"
#include "ncg/constructions.hpp"
#include "ncg/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ncg;

namespace {

std::vector<Vertex> ids(const Strategy& s) { return {s.endpoints().begin(), s.endpoints().end()}; }

// u=0 owns (0,1); leaves 2,3,4 bought their edge to c=1.
OwnedGraph broom() {
  OwnedGraph g(5);
  g.add_edge(0, 1);
  for (Vertex leaf = 2; leaf < 5; ++leaf) g.add_edge(leaf, 1);
  return g;
}

double view_cost(const View& v, const GameConfig& cfg) {
  double usage = 0.0;
  for (std::uint32_t d : v.dist)
    usage = cfg.variant == Variant::Max ? std::max(usage, double(d)) : usage + d;
  return cfg.alpha * v.graph.bought(v.center_local) + usage;
}

}  // namespace

TEST_CASE("max best response on a broom") {
  const View v = make_view(broom(), 0, 3);
  const BestResponse cheap = best_response_max(v, {Variant::Max, 0.1, 3});
  CHECK(ids(cheap.strategy) == std::vector<Vertex>{1, 2, 3, 4});
  CHECK(cheap.cost == doctest::Approx(1.4));
  CHECK(cheap.delta_vs_current == doctest::Approx(1.4 - 2.1));

  const BestResponse pricey = best_response_max(v, {Variant::Max, 2, 3});
  CHECK(ids(pricey.strategy) == std::vector<Vertex>{1});
  CHECK(pricey.cost == doctest::Approx(4.0));
  CHECK(pricey.delta_vs_current == doctest::Approx(0.0));
  CHECK_FALSE(pricey.heuristic);
}

TEST_CASE("single neighbor keeps its edge") {
  for (double alpha : {0.1, 1.0, 50.0}) {
    const View v = make_view(testing::path(2), 0, 1);
    const BestResponse br = best_response(v, {Variant::Max, alpha, 1});
    CHECK(ids(br.strategy) == std::vector<Vertex>{1});
    CHECK(br.cost == doctest::Approx(alpha + 1));
    const BestResponse s = best_response(v, {Variant::Sum, alpha, 1});
    CHECK(s.cost == doctest::Approx(alpha + 1));
  }
}

TEST_CASE("sum best response examples") {
  const View star_view = make_view(testing::star(6), 1, 2);
  const BestResponse keep = best_response_sum(star_view, {Variant::Sum, 3, 2});
  CHECK(ids(keep.strategy) == std::vector<Vertex>{0});
  CHECK(keep.delta_vs_current == doctest::Approx(0.0));

  const View path_view = make_view(testing::path(3), 0, 2);
  const BestResponse both = best_response_sum(path_view, {Variant::Sum, 0.5, 2});
  CHECK(ids(both.strategy) == std::vector<Vertex>{1, 2});
  CHECK(both.cost == doctest::Approx(3.0));
  CHECK(both.delta_vs_current == doctest::Approx(-0.5));
}

TEST_CASE("sum never picks a frontier-rejected switch") {
  // On C5 with k=2 dropping the owned edge would be cheapest for tiny gains
  // in edge cost, but it pushes frontier vertex 2 to distance 3.
  const View v = make_view(build_cycle(5), 0, 2);
  const BestResponse br = best_response_sum(v, {Variant::Sum, 100, 2});
  CHECK(ids(br.strategy) == std::vector<Vertex>{1});
  CHECK(br.delta_vs_current == doctest::Approx(0.0));
}

TEST_CASE("sum cap") {
  const View v = make_view(testing::star(20), 1, 2);
  CHECK_THROWS_AS(best_response_sum(v, {Variant::Sum, 1, 2}), ViewTooLarge);
  CHECK_NOTHROW(best_response_sum(v, {Variant::Sum, 1, 2}, 20));
  CHECK_THROWS_AS(best_response(v, {Variant::Sum, 1, 2}), ViewTooLarge);
  const BestResponse h = best_response(v, {Variant::Sum, 1, 2}, {16, true});
  CHECK(h.heuristic);
}

TEST_CASE("local moves never beat the exact optimum") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const OwnedGraph g = oracle::random_connected(5 + trial % 8, 0.15, rng);
    const Vertex u = static_cast<Vertex>(rng() % g.order());
    const GameConfig cfg{Variant::Sum, 0.3 + 0.4 * (trial % 5), 1 + static_cast<std::uint32_t>(trial % 3)};
    const View v = make_view(g, u, cfg.k);
    const BestResponse exact = best_response_sum(v, cfg);
    const BestResponse local = sum_local_move(v, cfg);
    CHECK(local.heuristic);
    CHECK(exact.cost <= local.cost + kCostTolerance);
    CHECK(local.delta_vs_current <= kCostTolerance);
    const DeltaOutcome d = delta(v, local.strategy, cfg);
    REQUIRE(d.is_finite());
    CHECK(d.value() == doctest::Approx(local.delta_vs_current));
  }
}

TEST_CASE("solvers agree with brute force and with delta") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const OwnedGraph g = oracle::random_connected(4 + trial % 9, 0.05 + 0.05 * (trial % 4), rng);
    const Vertex u = static_cast<Vertex>(rng() % g.order());
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 4);
    const View v = make_view(g, u, k);
    if (v.size() < 2 || v.size() > 12) continue;
    ++checked;
    for (Variant var : {Variant::Max, Variant::Sum}) {
      const GameConfig cfg{var, std::vector<double>{0.2, 0.5, 1.0, 1.5, 3.0}[trial % 5], k};
      const BestResponse br = best_response(v, cfg);
      const auto brute = oracle::brute_best_response(v, cfg);
      CHECK(std::abs(br.cost - brute.cost) <= kCostTolerance);
      const DeltaOutcome d = delta(v, br.strategy, cfg);
      REQUIRE(d.is_finite());
      CHECK(std::abs(d.value() - br.delta_vs_current) <= kCostTolerance);
      CHECK(std::abs(view_cost(v, cfg) + br.delta_vs_current - br.cost) <= kCostTolerance);
      CHECK(br.delta_vs_current <= kCostTolerance);
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("sum ties resolve to the smallest then lexicographically first set") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const OwnedGraph g = oracle::random_connected(4 + trial % 5, 0.3, rng);
    const Vertex u = static_cast<Vertex>(trial % g.order());
    const GameConfig cfg{Variant::Sum, 1.0, 2};
    const View v = make_view(g, u, 2);
    const BestResponse br = best_response_sum(v, cfg);
    const Vertex c = v.center_local;
    const auto in = v.graph.in_neighbors(c);
    std::vector<Vertex> cand;
    for (Vertex l = 0; l < v.size(); ++l)
      if (l != c && !std::binary_search(in.begin(), in.end(), l)) cand.push_back(v.vertices[l]);
    std::vector<std::vector<Vertex>> optimal;
    for (std::uint64_t mask = 0; mask < (1ULL << cand.size()); ++mask) {
      std::vector<Vertex> s;
      for (std::size_t i = 0; i < cand.size(); ++i)
        if (mask >> i & 1U) s.push_back(cand[i]);
      const DeltaOutcome d = delta(v, Strategy(s), cfg);
      if (d.is_finite() && std::abs(d.value() - br.delta_vs_current) <= kCostTolerance)
        optimal.push_back(s);
    }
    REQUIRE_FALSE(optimal.empty());
    std::sort(optimal.begin(), optimal.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    CHECK(ids(br.strategy) == optimal.front());
  }
}

TEST_CASE("max ties prefer fewer edges") {
  std::mt19937_64 rng(70);
  for (int trial = 0; trial < 60; ++trial) {
    const OwnedGraph g = oracle::random_connected(4 + trial % 8, 0.2, rng);
    const Vertex u = static_cast<Vertex>(trial % g.order());
    const GameConfig cfg{Variant::Max, 1.0, 3};
    const View v = make_view(g, u, 3);
    const BestResponse br = best_response_max(v, cfg);
    const Vertex c = v.center_local;
    const auto in = v.graph.in_neighbors(c);
    std::vector<Vertex> cand;
    for (Vertex l = 0; l < v.size(); ++l)
      if (l != c && !std::binary_search(in.begin(), in.end(), l)) cand.push_back(v.vertices[l]);
    std::size_t fewest = cand.size() + 1;
    for (std::uint64_t mask = 0; mask < (1ULL << cand.size()); ++mask) {
      std::vector<Vertex> s;
      for (std::size_t i = 0; i < cand.size(); ++i)
        if (mask >> i & 1U) s.push_back(cand[i]);
      const DeltaOutcome d = delta(v, Strategy(s), cfg);
      if (d.is_finite() && std::abs(d.value() - br.delta_vs_current) <= kCostTolerance)
        fewest = std::min(fewest, s.size());
    }
    CHECK(br.strategy.size() == fewest);
  }
}

TEST_CASE("verify on cycles and stars") {
  const OwnedGraph c10 = build_cycle(10);
  CHECK(verify_lke(c10, {Variant::Max, 2, 2}).is_equilibrium());

  const LkeVerdict cheap = verify_lke(c10, {Variant::Max, 0.5, 3});
  REQUIRE_FALSE(cheap.is_equilibrium());
  const Witness& w = *cheap.witness;
  CHECK(w.player == 0);
  CHECK(w.delta < 0);
  CHECK(w.strategy.size() >= 2);  // keeps its edge and adds a chord

  for (double alpha : {1.01, 2.0, 7.5}) {
    for (std::size_t n : {3u, 6u, 10u})
      CHECK(verify_lke(testing::star(n), {Variant::Max, alpha, 2}).is_equilibrium());
  }
  OwnedGraph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK_THROWS_AS(verify_lke(split, {Variant::Max, 1, 2}), PreconditionError);
}
