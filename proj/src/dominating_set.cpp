#include "ncg/dominating_set.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "ncg/errors.hpp"

namespace ncg {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Branch and bound over "which vertex dominates v". At every node the
// undominated vertex with the fewest remaining candidate dominators is
// branched on; the i-th branch picks its i-th candidate and bans the
// earlier ones, so the branches partition the solution space.
//
// Lower bound: a greedy packing of undominated vertices with pairwise
// disjoint candidate sets. Each of them needs its own dominator.
class Solver {
 public:
  explicit Solver(const DominatingInstance& inst) : n_(inst.graph.size()) {
    closed_.assign(n_, Bits(n_));
    for (Vertex v = 0; v < n_; ++v) {
      closed_[v].set(v);
      for (Vertex w : inst.graph[v]) {
        if (w >= n_) throw PreconditionError("dominating instance: neighbour out of range");
        closed_[v].set(w);
        closed_[w].set(v);
      }
    }
    candidates_ = Bits(n_);
    candidates_.set();
    chosen_ = Bits(n_);
    dominated_ = Bits(n_);
    current_ = Bits(n_);
    for (Vertex f : inst.forced) {
      if (f >= n_) throw PreconditionError("dominating instance: forced vertex out of range");
      if (chosen_.test(f)) continue;
      chosen_.set(f);
      candidates_.reset(f);
      dominated_ |= closed_[f];
    }
  }

  std::optional<Bits> solve(std::size_t budget) {
    limit_ = budget + 1;
    best_.reset();
    if (auto greedy = greedy_extra(); greedy && greedy->count() < limit_) {
      limit_ = greedy->count();
      best_ = *greedy;
    }
    if (limit_ > 0) search(0);
    if (!best_) return std::nullopt;
    return chosen_ | *best_;
  }

 private:
  std::optional<Bits> greedy_extra() const {
    Bits dominated = dominated_;
    Bits extra(n_);
    while (!dominated.all()) {
      const Bits undominated = ~dominated;
      std::size_t best_gain = 0;
      Vertex best = 0;
      for (auto w = candidates_.find_first(); w != Bits::npos; w = candidates_.find_next(w)) {
        const std::size_t gain = (closed_[w] & undominated).count();
        if (gain > best_gain) {
          best_gain = gain;
          best = static_cast<Vertex>(w);
        }
      }
      if (best_gain == 0) return std::nullopt;
      extra.set(best);
      dominated |= closed_[best];
    }
    return extra;
  }

  std::size_t packing_bound(const Bits& undominated) const {
    std::vector<std::pair<std::size_t, Vertex>> order;
    for (auto v = undominated.find_first(); v != Bits::npos; v = undominated.find_next(v)) {
      order.emplace_back((closed_[v] & candidates_).count(), static_cast<Vertex>(v));
    }
    std::sort(order.begin(), order.end());
    Bits used(n_);
    std::size_t bound = 0;
    for (const auto& [count, v] : order) {
      Bits cand = closed_[v] & candidates_;
      if (!cand.intersects(used)) {
        ++bound;
        used |= cand;
      }
    }
    return bound;
  }

  void search(std::size_t taken) {
    if (dominated_.all()) {
      if (taken < limit_) {
        limit_ = taken;
        best_ = current_;
      }
      return;
    }
    const Bits undominated = ~dominated_;
    if (taken + packing_bound(undominated) >= limit_) return;

    Vertex pivot = 0;
    std::size_t fewest = n_ + 1;
    for (auto v = undominated.find_first(); v != Bits::npos; v = undominated.find_next(v)) {
      const std::size_t c = (closed_[v] & candidates_).count();
      if (c < fewest) {
        fewest = c;
        pivot = static_cast<Vertex>(v);
        if (c <= 1) break;
      }
    }
    if (fewest == 0) return;

    std::vector<std::pair<std::size_t, Vertex>> options;
    const Bits cand = closed_[pivot] & candidates_;
    for (auto w = cand.find_first(); w != Bits::npos; w = cand.find_next(w)) {
      const std::size_t gain = (closed_[w] & undominated).count();
      options.emplace_back(n_ - gain, static_cast<Vertex>(w));
    }
    std::sort(options.begin(), options.end());

    const Bits saved_dominated = dominated_;
    std::vector<Vertex> banned;
    for (const auto& [unused, w] : options) {
      if (taken + 1 >= limit_) break;
      current_.set(w);
      candidates_.reset(w);
      dominated_ |= closed_[w];
      search(taken + 1);
      dominated_ = saved_dominated;
      current_.reset(w);
      banned.push_back(w);  // later branches: pivot not dominated by w
    }
    for (Vertex w : banned) candidates_.set(w);
  }

  std::size_t n_;
  std::vector<Bits> closed_;
  Bits candidates_;
  Bits chosen_;  // forced vertices
  Bits dominated_;
  Bits current_;
  std::size_t limit_ = 0;
  std::optional<Bits> best_;
};

std::vector<Vertex> to_vertices(const Bits& bits) {
  std::vector<Vertex> result;
  for (auto v = bits.find_first(); v != Bits::npos; v = bits.find_next(v)) {
    result.push_back(static_cast<Vertex>(v));
  }
  return result;
}

}  // namespace

std::optional<std::vector<Vertex>> min_dominating_set_within(const DominatingInstance& inst,
                                                             std::size_t budget) {
  Solver solver(inst);
  auto best = solver.solve(budget);
  if (!best) return std::nullopt;
  return to_vertices(*best);
}

std::vector<Vertex> min_dominating_set(const DominatingInstance& inst) {
  // Every vertex choosing itself always works, so the full budget is feasible.
  return *min_dominating_set_within(inst, inst.graph.size());
}

}  // namespace ncg
