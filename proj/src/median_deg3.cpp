#include "dcjmedian/median_deg3.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

#include "dcjmedian/errors.hpp"
#include "dcjmedian/median_deg2.hpp"

namespace dcjmedian {

namespace {

using DecisionKey = std::vector<int>;

void require_max_degree3(const ColoredGraph& g) {
  if (g.max_degree() > 3) throw std::invalid_argument("configurations need max degree <= 3");
}

int default_pairs(const std::vector<VertexId>& d) { return static_cast<int>(d.size() / 2); }

int checked_pairs(const std::vector<VertexId>& d, std::optional<int> requested) {
  const int full = default_pairs(d);
  if (!requested) return full;
  if (*requested < 0 || *requested > full)
    throw std::invalid_argument("max pairs must lie in [0, " + std::to_string(full) + "], got " +
                                std::to_string(*requested));
  return *requested;
}

// Pairings of the degree-3 vertices: each vertex in ascending order is left
// alone (decision 0) or paired with the j-th later vertex (decision j).
template <class Visit>
void enumerate_pairings(const std::vector<VertexId>& d, int max_pairs, Visit&& visit) {
  std::vector<char> used(d.size(), 0);
  std::vector<VertexPair> pairs;
  DecisionKey key;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    while (i < d.size() && used[i]) ++i;
    if (i == d.size()) {
      visit(pairs, key);
      return;
    }
    key.push_back(0);
    self(self, i + 1);
    key.pop_back();
    if (static_cast<int>(pairs.size()) >= max_pairs) return;
    used[i] = 1;
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      pairs.emplace_back(d[i], d[j]);
      key.push_back(static_cast<int>(j - i));
      self(self, i + 1);
      key.pop_back();
      pairs.pop_back();
      used[j] = 0;
    }
    used[i] = 0;
  };
  rec(rec, 0);
}

int shrink_all(ColoredGraph& h, std::span<const VertexPair> pairs) {
  int gain = 0;
  for (const auto& p : pairs) {
    if (!h.contains(p.a) || !h.contains(p.b)) throw std::logic_error("configuration pairs overlap");
    gain += h.shrink_in_place(p.a, p.b);
  }
  return gain;
}

std::uint64_t saturating_pow3(std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / 3) return std::numeric_limits<std::uint64_t>::max();
    r *= 3;
  }
  return r;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

// DCJ distance, in halves, between two color classes regarded as adjacency
// sets on the present vertices.
int color_pair_distance_halves(const ColoredGraph& g, Color x, Color y, std::vector<int>& mark, int stamp) {
  const auto verts = g.vertices();
  auto deg = [&](VertexId v) { return (g.neighbor(v, x) != kNoVertex) + (g.neighbor(v, y) != kNoVertex); };
  int cycles = 0, odd_paths = 0;
  auto walk = [&](VertexId start) {
    int count = 1;
    mark[static_cast<std::size_t>(start)] = stamp;
    VertexId cur = start;
    Color next = g.neighbor(start, x) != kNoVertex ? x : y;
    while (true) {
      const VertexId nb = g.neighbor(cur, next);
      if (nb == kNoVertex || nb == start) break;
      cur = nb;
      mark[static_cast<std::size_t>(cur)] = stamp;
      ++count;
      next = next == x ? y : x;
    }
    return count;
  };
  for (VertexId v : verts)
    if (mark[static_cast<std::size_t>(v)] != stamp && deg(v) <= 1) {
      if (walk(v) % 2 == 1) ++odd_paths;
    }
  for (VertexId v : verts)
    if (mark[static_cast<std::size_t>(v)] != stamp) {
      walk(v);
      ++cycles;
    }
  const int n = g.vertex_count() / 2;
  return 2 * n - 2 * cycles - odd_paths;
}

struct Incumbent {
  std::mutex mutex;
  std::atomic<int> value{-1};
  bool has_key = false;
  DecisionKey key;
  std::vector<VertexPair> pairs;
  std::vector<ColoredEdge> removed;

  // True when no configuration under `prefix` can beat the incumbent given
  // the upper bound `bound` on its value.
  bool dominates(int bound, const DecisionKey& prefix) {
    const int v = value.load(std::memory_order_relaxed);
    if (bound < v) return true;
    if (bound > v) return false;
    std::lock_guard lock(mutex);
    return bound == value.load(std::memory_order_relaxed) && has_key && key < prefix;
  }

  void offer(int v, const DecisionKey& k, std::span<const VertexPair> p, std::span<const ColoredEdge> r) {
    std::lock_guard lock(mutex);
    const int cur = value.load(std::memory_order_relaxed);
    if (v > cur || (v == cur && (!has_key || k < key))) {
      value.store(v, std::memory_order_relaxed);
      has_key = true;
      key = k;
      pairs.assign(p.begin(), p.end());
      removed.assign(r.begin(), r.end());
    }
  }
};

struct PairingTask {
  std::vector<VertexPair> pairs;
  DecisionKey key;
};

class RemovalSearch {
 public:
  // With `lift`, a leaf scores the recount of its lifted matching instead of
  // the configuration value; the two agree on optimal leaves of a full search.
  RemovalSearch(const ColoredGraph& g, const PairingTask& task, bool lift, Incumbent& best,
                std::atomic<std::uint64_t>& explored)
      : h_(g), task_(task), best_(best), explored_(explored), key_(task.key), lift_(lift) {
    gain_ = shrink_all(h_, task.pairs);
    if (lift_) {
      shrunk_ = h_;
      lift_bound_ = gain_ + triangle_upper_bound(shrunk_);
    }
    d3_ = degree3_vertices(h_);
    incident_.reserve(d3_.size());
    for (VertexId w : d3_) incident_.push_back(h_.incident_edges(w));
  }

  void run() { visit(0); }

 private:
  void visit(std::size_t idx) {
    if (best_.dominates(lift_ ? lift_bound_ : gain_ + triangle_upper_bound(h_), key_)) return;
    if (idx == d3_.size()) {
      explored_.fetch_add(1, std::memory_order_relaxed);
      const int value = lift_ ? gain_ + count_alternating_cycles(
                                            shrunk_, std::span<const VertexPair>(solve_deg2(h_).matching)).total
                              : gain_ + solve_deg2_value(h_);
      best_.offer(value, key_, task_.pairs, removed_);
      return;
    }
    const VertexId w = d3_[idx];
    const auto& inc = incident_[idx];
    if (h_.degree(w) < 3) {
      // a neighbor already dropped the shared edge; dropping another one
      // could only lose cycles
      for (std::size_t e = 0; e < inc.size(); ++e)
        if (!h_.has_edge(inc[e].u, inc[e].v, inc[e].color)) {
          key_.push_back(static_cast<int>(e));
          visit(idx + 1);
          key_.pop_back();
          return;
        }
      throw std::logic_error("degree dropped without a removed incident edge");
    }
    for (std::size_t e = 0; e < inc.size(); ++e) {
      const auto& edge = inc[e];
      h_.remove_edge_in_place(edge.u, edge.v, edge.color);
      removed_.push_back(edge);
      key_.push_back(static_cast<int>(e));
      visit(idx + 1);
      key_.pop_back();
      removed_.pop_back();
      h_.add_edge(edge.u, edge.v, edge.color);
    }
  }

  ColoredGraph h_;
  const PairingTask& task_;
  Incumbent& best_;
  std::atomic<std::uint64_t>& explored_;
  DecisionKey key_;
  bool lift_ = false;
  ColoredGraph shrunk_;
  int lift_bound_ = 0;
  int gain_ = 0;
  std::vector<VertexId> d3_;
  std::vector<std::vector<ColoredEdge>> incident_;
  std::vector<ColoredEdge> removed_;
};

ColoredGraph without_edges(ColoredGraph h, std::span<const ColoredEdge> edges) {
  for (const auto& e : edges) h.remove_edge_in_place(e.u, e.v, e.color);
  return h;
}

// Lower bound for seeding the search: drop edges until no degree-3 vertex
// is left, solve exactly, and score that matching on the full graph.
int greedy_lower_bound(const ColoredGraph& g) {
  const auto reduced = without_edges(g, heuristic_removals(g, 0));
  const auto med = solve_deg2(reduced);
  return count_alternating_cycles(g, std::span<const VertexPair>(med.matching)).total;
}

void validate_genomes(std::span<const Genome> genomes) {
  if (genomes.size() != 3)
    throw InvalidInstance("a median needs exactly 3 genomes, got " + std::to_string(genomes.size()));
  for (const auto& g : genomes)
    if (g.gene_count() != genomes[0].gene_count())
      throw InvalidInstance("genomes have different gene counts (" + std::to_string(genomes[0].gene_count()) +
                            " and " + std::to_string(g.gene_count()) + ")");
}

MedianResult finish(const ColoredGraph& b, int n, std::vector<VertexPair> matching) {
  MedianResult r;
  const auto counts = count_alternating_cycles(b, std::span<const VertexPair>(matching));
  r.cyc_total = counts.total;
  r.cyc_per_color = counts.per_color;
  r.cost = 3 * n - r.cyc_total;
  r.genome = matching_to_circular_genome(matching, n, "median");
  r.matching = std::move(matching);
  return r;
}

}  // namespace

std::vector<VertexId> degree3_vertices(const ColoredGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices())
    if (g.degree(v) == 3) out.push_back(v);
  return out;
}

void enumerate_configurations(const ColoredGraph& g, int max_pairs,
                              const std::function<void(const Configuration&)>& visit) {
  require_max_degree3(g);
  const auto d = degree3_vertices(g);
  const int pairs_cap = checked_pairs(d, max_pairs);
  enumerate_pairings(d, pairs_cap, [&](const std::vector<VertexPair>& pairs, const DecisionKey&) {
    ColoredGraph h = g;
    Configuration c;
    c.pairs = pairs;
    c.gain = shrink_all(h, pairs);
    const auto d3 = degree3_vertices(h);
    std::vector<std::vector<ColoredEdge>> inc;
    for (VertexId w : d3) inc.push_back(h.incident_edges(w));
    std::vector<int> choice(d3.size(), 0);
    while (true) {
      c.removals.clear();
      for (std::size_t i = 0; i < d3.size(); ++i)
        c.removals.push_back({d3[i], inc[i][static_cast<std::size_t>(choice[i])]});
      visit(c);
      std::size_t i = d3.size();
      while (i > 0 && choice[i - 1] == 2) choice[--i] = 0;
      if (i == 0) break;
      ++choice[i - 1];
    }
  });
}

std::uint64_t configuration_count(const ColoredGraph& g, int max_pairs) {
  require_max_degree3(g);
  const auto d = degree3_vertices(g);
  std::uint64_t total = 0;
  enumerate_pairings(d, checked_pairs(d, max_pairs), [&](const std::vector<VertexPair>& pairs, const DecisionKey&) {
    ColoredGraph h = g;
    shrink_all(h, pairs);
    total = saturating_add(total, saturating_pow3(degree3_vertices(h).size()));
  });
  return total;
}

Reduction apply_configuration(const ColoredGraph& g, const Configuration& c) {
  Reduction r{g, 0};
  r.gain = shrink_all(r.reduced, c.pairs);
  if (r.gain != c.gain)
    throw std::logic_error("configuration gain " + std::to_string(c.gain) + " but shrinks consumed " +
                           std::to_string(r.gain) + " edges");
  std::vector<ColoredEdge> done;
  for (const auto& rem : c.removals) {
    const auto& e = rem.edge;
    if (r.reduced.has_edge(e.u, e.v, e.color)) {
      r.reduced.remove_edge_in_place(e.u, e.v, e.color);
      done.push_back(e);
    } else if (std::find(done.begin(), done.end(), e) == done.end()) {
      throw std::logic_error("configuration removes an edge that is not present");
    }
  }
  if (r.reduced.max_degree() > 2) throw std::logic_error("configuration leaves a degree-3 vertex");
  if (r.reduced.vertex_count() % 2 != 0) throw std::logic_error("configuration leaves an odd vertex count");
  return r;
}

int triangle_upper_bound(const ColoredGraph& g) {
  const int colors = g.color_count();
  const int n = g.vertex_count() / 2;
  if (colors <= 1) return colors * n;
  std::vector<int> mark(static_cast<std::size_t>(g.universe_size()), 0);
  int stamp = 0;
  long long halves = 0;
  for (Color x = 0; x < colors; ++x)
    for (Color y = x + 1; y < colors; ++y) halves += color_pair_distance_halves(g, x, y, mark, ++stamp);
  // sum_i d(M, G_i) >= sum_{i<j} d(G_i, G_j) / (colors - 1)
  const long long den = 2LL * (colors - 1);
  return static_cast<int>((den * colors * n - halves) / den);
}

GraphMedian solve_graph_median(const ColoredGraph& g, SolveOptions options) {
  require_max_degree3(g);
  if (g.vertex_count() % 2 != 0) throw std::invalid_argument("median needs an even vertex count");
  const auto d = degree3_vertices(g);
  GraphMedian out;
  out.degree3 = static_cast<int>(d.size());
  out.max_pairs = checked_pairs(d, options.max_pairs);

  // A pair joined in every color and nothing else is always matched: moving
  // its outside partners onto each other only shortens their cycles.
  ColoredGraph base = g;
  std::vector<VertexPair> forced;
  int forced_gain = 0;
  for (VertexId v : d) {
    const VertexId u = g.neighbor(v, 0);
    if (u < v || g.multiplicity(u, v) != g.color_count()) continue;
    forced.emplace_back(v, u);
    forced_gain += base.shrink_in_place(v, u);
  }
  const auto rest = degree3_vertices(base);
  const int pairs_cap = std::min(out.max_pairs, default_pairs(rest));
  out.pairs_complete = pairs_cap == default_pairs(rest);

  std::vector<PairingTask> tasks;
  enumerate_pairings(rest, pairs_cap, [&](const std::vector<VertexPair>& pairs, const DecisionKey& key) {
    tasks.push_back({pairs, key});
    ColoredGraph h = base;
    shrink_all(h, pairs);
    out.configurations = saturating_add(out.configurations, saturating_pow3(degree3_vertices(h).size()));
  });

  Incumbent best;
  if (out.pairs_complete && !rest.empty()) best.value = greedy_lower_bound(base);
  std::atomic<std::uint64_t> explored{0};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) RemovalSearch(base, tasks[i], !out.pairs_complete, best, explored).run();
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(tasks.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (!best.has_key) throw std::logic_error("configuration search found no candidate");

  ColoredGraph h = base;
  const int gain = forced_gain + shrink_all(h, best.pairs);
  h = without_edges(std::move(h), best.removed);
  auto reduced = solve_deg2(h);
  out.matching = forced;
  out.matching.insert(out.matching.end(), best.pairs.begin(), best.pairs.end());
  out.matching.insert(out.matching.end(), reduced.matching.begin(), reduced.matching.end());
  std::sort(out.matching.begin(), out.matching.end());
  out.cyc = count_alternating_cycles(g, std::span<const VertexPair>(out.matching)).total;
  if (out.cyc < gain + reduced.cyc || out.cyc != forced_gain + best.value)
    throw std::logic_error("lifted median scores " + std::to_string(out.cyc) + ", expected " +
                           std::to_string(forced_gain + best.value.load()));
  out.explored = explored.load();
  return out;
}

MedianResult solve_median(std::span<const Genome> genomes, SolveOptions options) {
  validate_genomes(genomes);
  const int n = genomes[0].gene_count();
  const auto b = build_breakpoint_graph(genomes);
  auto gm = solve_graph_median(b, options);
  auto r = finish(b, n, std::move(gm.matching));
  if (r.cyc_total != gm.cyc) throw std::logic_error("median recount disagrees with the solver");
  r.degree3 = gm.degree3;
  r.max_pairs = gm.max_pairs;
  r.configurations = gm.configurations;
  r.explored = gm.explored;
  r.exact = gm.pairs_complete || options.assume_pair_bound;
  r.lower_bound = r.cyc_total;
  r.upper_bound = r.exact ? r.cyc_total : 3 * n;
  return r;
}

std::vector<ColoredEdge> heuristic_removals(const ColoredGraph& g, int max_deg3) {
  require_max_degree3(g);
  ColoredGraph h = g;
  std::vector<ColoredEdge> out;
  std::vector<int> seen(static_cast<std::size_t>(h.universe_size()), 0);
  int stamp = 0;
  while (true) {
    const auto d = degree3_vertices(h);
    if (static_cast<int>(d.size()) <= max_deg3) break;
    const VertexId w = d.front();
    // color frequencies in w's component
    std::vector<int> freq(static_cast<std::size_t>(h.color_count()), 0);
    std::vector<VertexId> queue{w};
    seen[static_cast<std::size_t>(w)] = ++stamp;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& e : h.incident_edges(queue[q])) {
        const VertexId other = e.u == queue[q] ? e.v : e.u;
        if (queue[q] < other) ++freq[static_cast<std::size_t>(e.color)];
        if (seen[static_cast<std::size_t>(other)] != stamp) {
          seen[static_cast<std::size_t>(other)] = stamp;
          queue.push_back(other);
        }
      }
    const auto inc = h.incident_edges(w);
    auto rank = [&](const ColoredEdge& e) {
      const VertexId other = e.u == w ? e.v : e.u;
      return std::make_tuple(freq[static_cast<std::size_t>(e.color)], h.degree(other) == 3 ? 0 : 1, e);
    };
    const auto pick = *std::min_element(inc.begin(), inc.end(),
                                        [&](const ColoredEdge& x, const ColoredEdge& y) { return rank(x) < rank(y); });
    h.remove_edge_in_place(pick.u, pick.v, pick.color);
    out.push_back(pick);
  }
  return out;
}

MedianResult median_with_bounds(std::span<const Genome> genomes, int max_deg3, SolveOptions options) {
  validate_genomes(genomes);
  if (max_deg3 < 0) throw std::invalid_argument("max_deg3 must be non-negative");
  const int n = genomes[0].gene_count();
  const auto b = build_breakpoint_graph(genomes);
  const auto removals = heuristic_removals(b, max_deg3);
  const auto reduced = without_edges(b, removals);
  const auto reduced_d3 = degree3_vertices(reduced);
  if (options.max_pairs) options.max_pairs = std::min(*options.max_pairs, default_pairs(reduced_d3));
  auto gm = solve_graph_median(reduced, options);
  auto r = finish(b, n, std::move(gm.matching));
  r.degree3 = static_cast<int>(degree3_vertices(b).size());
  r.max_pairs = gm.max_pairs;
  r.edges_removed = static_cast<int>(removals.size());
  r.configurations = gm.configurations;
  r.explored = gm.explored;
  r.lower_bound = r.cyc_total;
  const bool reduced_exact = gm.pairs_complete || options.assume_pair_bound;
  r.upper_bound = reduced_exact ? std::min(3 * n, gm.cyc + r.edges_removed) : 3 * n;
  r.exact = r.lower_bound == r.upper_bound;
  return r;
}

}  // namespace dcjmedian
