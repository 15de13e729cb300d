#include "dcjmedian/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dcjmedian/errors.hpp"

namespace dcjmedian {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent_[find(x)] = find(y); }

 private:
  std::vector<std::size_t> parent_;
};

struct Search {
  const ColoredGraph& g;
  std::vector<VertexId> verts;
  std::vector<char> used;
  std::vector<VertexPair> current;
  bool may_skip = false;  // one vertex may stay unmatched
  OracleMedian best;
  bool have_best = false;

  void run(std::size_t first) {
    while (first < verts.size() && used[first]) ++first;
    if (first == verts.size()) {
      ++best.matchings_enumerated;
      const int value = union_find_cycle_count(g, current);
      if (!have_best || value > best.cyc) {
        best.cyc = value;
        best.matching = current;
        have_best = true;
      }
      return;
    }
    used[first] = 1;
    for (std::size_t j = first + 1; j < verts.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      current.emplace_back(verts[first], verts[j]);
      run(first + 1);
      current.pop_back();
      used[j] = 0;
    }
    if (may_skip) {
      may_skip = false;
      run(first + 1);
      may_skip = true;
    }
    used[first] = 0;
  }
};

OracleMedian search(const ColoredGraph& g, OracleBudget budget, bool allow_unmatched) {
  if (g.vertex_count() > budget.max_vertices)
    throw BudgetExceeded("exhaustive search over " + std::to_string(g.vertex_count()) +
                         " vertices exceeds the budget of " + std::to_string(budget.max_vertices));
  Search s{g, g.vertices(), {}, {}, false, {}, false};
  s.used.assign(s.verts.size(), 0);
  s.may_skip = allow_unmatched && s.verts.size() % 2 == 1;
  s.run(0);
  std::sort(s.best.matching.begin(), s.best.matching.end());
  return s.best;
}

}  // namespace

int union_find_cycle_count(const ColoredGraph& g, std::span<const VertexPair> matching) {
  const auto n = static_cast<std::size_t>(g.universe_size());
  std::vector<char> matched(n, 0);
  for (const auto& p : matching) matched[static_cast<std::size_t>(p.a)] = matched[static_cast<std::size_t>(p.b)] = 1;
  const auto verts = g.vertices();
  int total = 0;
  for (Color c = 0; c < g.color_count(); ++c) {
    DisjointSets sets(n);
    for (const auto& p : matching) sets.unite(static_cast<std::size_t>(p.a), static_cast<std::size_t>(p.b));
    std::vector<char> open(n, 0);  // component contains a vertex missing an edge
    for (VertexId v : verts) {
      const VertexId w = g.neighbor(v, c);
      if (w != kNoVertex) sets.unite(static_cast<std::size_t>(v), static_cast<std::size_t>(w));
    }
    for (VertexId v : verts)
      if (g.neighbor(v, c) == kNoVertex || !matched[static_cast<std::size_t>(v)])
        open[sets.find(static_cast<std::size_t>(v))] = 1;
    for (VertexId v : verts) {
      const auto r = sets.find(static_cast<std::size_t>(v));
      if (r == static_cast<std::size_t>(v) && !open[r]) ++total;
    }
  }
  return total;
}

OracleMedian exhaustive_median(const ColoredGraph& g, OracleBudget budget) {
  if (g.vertex_count() % 2 != 0) throw std::invalid_argument("exhaustive_median needs an even vertex count");
  return search(g, budget, false);
}

int exhaustive_cyc(const ColoredGraph& g, OracleBudget budget) { return search(g, budget, true).cyc; }

int exhaustive_component_cyc(const ComponentView& c, OracleBudget budget) {
  const std::array<const ComponentView*, 1> parts{&c};
  VertexId hi = 0;
  for (VertexId v : c.vertices) hi = std::max(hi, v);
  Color colors = 0;
  for (Color col : c.edge_colors) colors = std::max(colors, col + 1);
  return exhaustive_cyc(component_subgraph(hi + 1, std::max(colors, 1), parts), budget);
}

std::uint64_t perfect_matching_count(int t) {
  std::uint64_t r = 1;
  for (int i = 2 * t - 1; i > 1; i -= 2) r *= static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace dcjmedian
