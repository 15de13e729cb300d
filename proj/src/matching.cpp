#include "dcjmedian/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace dcjmedian {

WeightedCompleteGraph::WeightedCompleteGraph(int size) : size_(size) {
  if (size < 0 || size % 2 != 0)
    throw std::invalid_argument("complete graph for perfect matching needs an even node count");
  w_.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0);
}

std::size_t WeightedCompleteGraph::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= size_ || j >= size_ || i == j)
    throw std::out_of_range("node index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(j);
}

void WeightedCompleteGraph::set_weight(int i, int j, std::int64_t w) {
  if (w < 0) throw std::invalid_argument("weights must be non-negative");
  if (i == j) throw std::invalid_argument("no weight on a node with itself");
  w_[index(i, j)] = w;
  w_[index(j, i)] = w;
}

namespace {

// Weighted blossom algorithm on a general graph, maximising total weight.
// Nodes are 1..n; ids n+1..2n name blossoms; 0 is "none". Edges of weight 0
// are treated as absent, so callers pass strictly positive weights.
class Blossom {
 public:
  explicit Blossom(int n)
      : n_(n),
        size_(2 * n + 1),
        g_(static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_)),
        lab_(static_cast<std::size_t>(size_)),
        match_(static_cast<std::size_t>(size_)),
        slack_(static_cast<std::size_t>(size_)),
        st_(static_cast<std::size_t>(size_)),
        pa_(static_cast<std::size_t>(size_)),
        S_(static_cast<std::size_t>(size_)),
        vis_(static_cast<std::size_t>(size_)),
        flower_from_(static_cast<std::size_t>(size_) * static_cast<std::size_t>(n + 1)),
        flower_(static_cast<std::size_t>(size_)) {
    for (int u = 1; u < size_; ++u)
      for (int v = 1; v < size_; ++v) edge(u, v) = Edge{u, v, 0};
  }

  void set_weight(int u, int v, std::int64_t w) {
    edge(u, v).w = w;
    edge(v, u).w = w;
  }

  // Returns mate[1..n] (0 for unmatched).
  std::vector<int> solve() {
    std::fill(match_.begin(), match_.end(), 0);
    n_x_ = n_;
    for (int u = 0; u < size_; ++u) {
      st_[u] = u;
      flower_[u].clear();
    }
    std::int64_t w_max = 0;
    for (int u = 1; u <= n_; ++u)
      for (int v = 1; v <= n_; ++v) {
        from(u, v) = (u == v ? u : 0);
        w_max = std::max(w_max, edge(u, v).w);
      }
    for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
    while (augment_once()) {
    }
    return {match_.begin(), match_.begin() + n_ + 1};
  }

 private:
  struct Edge {
    int u = 0, v = 0;
    std::int64_t w = 0;
  };

  Edge& edge(int u, int v) {
    return g_[static_cast<std::size_t>(u) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(v)];
  }
  int& from(int b, int x) {
    return flower_from_[static_cast<std::size_t>(b) * static_cast<std::size_t>(n_ + 1) +
                        static_cast<std::size_t>(x)];
  }

  std::int64_t delta(const Edge& e) const { return lab_[e.u] + lab_[e.v] - e.w * 2; }

  void update_slack(int u, int x) {
    if (!slack_[x] || delta(edge(u, x)) < delta(edge(slack_[x], x))) slack_[x] = u;
  }
  void set_slack(int x) {
    slack_[x] = 0;
    for (int u = 1; u <= n_; ++u)
      if (edge(u, x).w > 0 && st_[u] != x && S_[st_[u]] == 0) update_slack(u, x);
  }
  void q_push(int x) {
    if (x <= n_) {
      queue_.push_back(x);
    } else {
      for (int y : flower_[x]) q_push(y);
    }
  }
  void set_st(int x, int b) {
    st_[x] = b;
    if (x > n_)
      for (int y : flower_[x]) set_st(y, b);
  }
  int get_pr(int b, int xr) {
    auto& f = flower_[b];
    const int pr = static_cast<int>(std::find(f.begin(), f.end(), xr) - f.begin());
    if (pr % 2 == 1) {
      std::reverse(f.begin() + 1, f.end());
      return static_cast<int>(f.size()) - pr;
    }
    return pr;
  }
  void set_match(int u, int v) {
    match_[u] = edge(u, v).v;
    if (u <= n_) return;
    const Edge e = edge(u, v);
    const int xr = from(u, e.u);
    const int pr = get_pr(u, xr);
    for (int i = 0; i < pr; ++i) set_match(flower_[u][i], flower_[u][i ^ 1]);
    set_match(xr, v);
    std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
  }
  void augment(int u, int v) {
    for (;;) {
      const int xnv = st_[match_[u]];
      set_match(u, v);
      if (!xnv) return;
      set_match(xnv, st_[pa_[xnv]]);
      u = st_[pa_[xnv]];
      v = xnv;
    }
  }
  int get_lca(int u, int v) {
    for (++stamp_; u || v; std::swap(u, v)) {
      if (u == 0) continue;
      if (vis_[u] == stamp_) return u;
      vis_[u] = stamp_;
      u = st_[match_[u]];
      if (u) u = st_[pa_[u]];
    }
    return 0;
  }
  void add_blossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_x_ && st_[b]) ++b;
    if (b > n_x_) ++n_x_;
    lab_[b] = 0;
    S_[b] = 0;
    match_[b] = match_[lca];
    auto& f = flower_[b];
    f.clear();
    f.push_back(lca);
    for (int x = u, y; x != lca; x = st_[pa_[y]]) {
      f.push_back(x);
      f.push_back(y = st_[match_[x]]);
      q_push(y);
    }
    std::reverse(f.begin() + 1, f.end());
    for (int x = v, y; x != lca; x = st_[pa_[y]]) {
      f.push_back(x);
      f.push_back(y = st_[match_[x]]);
      q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x_; ++x) {
      edge(b, x).w = 0;
      edge(x, b).w = 0;
    }
    for (int x = 1; x <= n_; ++x) from(b, x) = 0;
    for (int xs : f) {
      for (int x = 1; x <= n_x_; ++x)
        if (edge(b, x).w == 0 || delta(edge(xs, x)) < delta(edge(b, x))) {
          edge(b, x) = edge(xs, x);
          edge(x, b) = edge(x, xs);
        }
      for (int x = 1; x <= n_; ++x)
        if (from(xs, x)) from(b, x) = xs;
    }
    set_slack(b);
  }
  void expand_blossom(int b) {
    for (int x : flower_[b]) set_st(x, x);
    const int xr = from(b, edge(b, pa_[b]).u);
    const int pr = get_pr(b, xr);
    for (int i = 0; i < pr; i += 2) {
      const int xs = flower_[b][i];
      const int xns = flower_[b][i + 1];
      pa_[xs] = edge(xns, xs).u;
      S_[xs] = 1;
      S_[xns] = 0;
      slack_[xs] = 0;
      set_slack(xns);
      q_push(xns);
    }
    S_[xr] = 1;
    pa_[xr] = pa_[b];
    for (std::size_t i = static_cast<std::size_t>(pr) + 1; i < flower_[b].size(); ++i) {
      const int xs = flower_[b][i];
      S_[xs] = -1;
      set_slack(xs);
    }
    st_[b] = 0;
  }
  bool on_found_edge(const Edge& e) {
    const int u = st_[e.u];
    const int v = st_[e.v];
    if (S_[v] == -1) {
      pa_[v] = e.u;
      S_[v] = 1;
      const int nu = st_[match_[v]];
      slack_[v] = slack_[nu] = 0;
      S_[nu] = 0;
      q_push(nu);
    } else if (S_[v] == 0) {
      const int lca = get_lca(u, v);
      if (!lca) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, lca, v);
    }
    return false;
  }
  bool augment_once() {
    std::fill(S_.begin() + 1, S_.begin() + n_x_ + 1, -1);
    std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
    queue_.clear();
    for (int x = 1; x <= n_x_; ++x)
      if (st_[x] == x && !match_[x]) {
        pa_[x] = 0;
        S_[x] = 0;
        q_push(x);
      }
    if (queue_.empty()) return false;
    for (;;) {
      while (!queue_.empty()) {
        const int u = queue_.front();
        queue_.pop_front();
        if (S_[st_[u]] == 1) continue;
        for (int v = 1; v <= n_; ++v)
          if (edge(u, v).w > 0 && st_[u] != st_[v]) {
            if (delta(edge(u, v)) == 0) {
              if (on_found_edge(edge(u, v))) return true;
            } else {
              update_slack(u, st_[v]);
            }
          }
      }
      std::int64_t d = std::numeric_limits<std::int64_t>::max();
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && S_[b] == 1) d = std::min(d, lab_[b] / 2);
      for (int x = 1; x <= n_x_; ++x)
        if (st_[x] == x && slack_[x]) {
          if (S_[x] == -1)
            d = std::min(d, delta(edge(slack_[x], x)));
          else if (S_[x] == 0)
            d = std::min(d, delta(edge(slack_[x], x)) / 2);
        }
      for (int u = 1; u <= n_; ++u) {
        if (S_[st_[u]] == 0) {
          if (lab_[u] <= d) return false;
          lab_[u] -= d;
        } else if (S_[st_[u]] == 1) {
          lab_[u] += d;
        }
      }
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b) {
          if (S_[st_[b]] == 0)
            lab_[b] += d * 2;
          else if (S_[st_[b]] == 1)
            lab_[b] -= d * 2;
        }
      queue_.clear();
      for (int x = 1; x <= n_x_; ++x)
        if (st_[x] == x && slack_[x] && st_[slack_[x]] != x && delta(edge(slack_[x], x)) == 0)
          if (on_found_edge(edge(slack_[x], x))) return true;
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && S_[b] == 1 && lab_[b] == 0) expand_blossom(b);
    }
  }

  int n_;
  int size_;
  int n_x_ = 0;
  int stamp_ = 0;
  std::vector<Edge> g_;
  std::vector<std::int64_t> lab_;
  std::vector<int> match_, slack_, st_, pa_, S_, vis_;
  std::vector<int> flower_from_;
  std::vector<std::vector<int>> flower_;
  std::deque<int> queue_;
};

// Optimal perfect matching restricted to `nodes` (an even-sized subset).
PairingResult blossom_pairing(const WeightedCompleteGraph& g, const std::vector<int>& nodes) {
  const int t = static_cast<int>(nodes.size());
  PairingResult out;
  if (t == 0) return out;
  std::int64_t w_max = 0;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) w_max = std::max(w_max, g.weight(nodes[i], nodes[j]));
  // Any matching with fewer pairs loses at least `offset - (t/2 - 1) * w_max`
  // against a perfect one, so a maximum matching under these weights is perfect.
  const std::int64_t offset = static_cast<std::int64_t>(t / 2) * w_max + 1;
  Blossom b(t);
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) b.set_weight(i + 1, j + 1, g.weight(nodes[i], nodes[j]) + offset);
  const auto mate = b.solve();
  for (int i = 1; i <= t; ++i) {
    if (mate[i] == 0) throw std::logic_error("blossom matching is not perfect");
    if (mate[i] > i) {
      const int x = nodes[i - 1];
      const int y = nodes[mate[i] - 1];
      out.pairs.emplace_back(std::min(x, y), std::max(x, y));
      out.total += g.weight(x, y);
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

void brute_force(const WeightedCompleteGraph& g, std::vector<char>& used, std::vector<NodePair>& cur,
                 std::int64_t acc, PairingResult& best, bool& found) {
  int first = -1;
  for (int i = 0; i < g.size(); ++i)
    if (!used[i]) {
      first = i;
      break;
    }
  if (first < 0) {
    if (!found || acc > best.total) {
      best.pairs = cur;
      best.total = acc;
      found = true;
    }
    return;
  }
  used[first] = 1;
  for (int j = first + 1; j < g.size(); ++j) {
    if (used[j]) continue;
    used[j] = 1;
    cur.emplace_back(first, j);
    brute_force(g, used, cur, acc + g.weight(first, j), best, found);
    cur.pop_back();
    used[j] = 0;
  }
  used[first] = 0;
}

}  // namespace

PairingResult max_weight_perfect_matching(const WeightedCompleteGraph& g) {
  const int t = g.size();
  std::vector<int> all(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) all[i] = i;
  PairingResult best = blossom_pairing(g, all);
  if (t > kLexicographicRefinementLimit || t <= 2) return best;

  // Fix partners smallest-node-first, taking the smallest partner that still
  // admits an optimal completion.
  PairingResult out;
  std::vector<int> remaining = all;
  std::int64_t budget = best.total;
  while (!remaining.empty()) {
    const int first = remaining.front();
    bool fixed = false;
    for (std::size_t k = 1; k < remaining.size() && !fixed; ++k) {
      const int partner = remaining[k];
      std::vector<int> rest;
      for (int x : remaining)
        if (x != first && x != partner) rest.push_back(x);
      const std::int64_t w = g.weight(first, partner);
      const std::int64_t tail = blossom_pairing(g, rest).total;
      if (w + tail == budget) {
        out.pairs.emplace_back(first, partner);
        out.total += w;
        budget -= w;
        remaining = std::move(rest);
        fixed = true;
      }
    }
    if (!fixed) throw std::logic_error("lexicographic refinement lost the optimum");
  }
  return out;
}

PairingResult brute_force_pairing(const WeightedCompleteGraph& g) {
  if (g.size() > kBruteForcePairingLimit)
    throw std::invalid_argument("brute-force pairing is limited to 12 nodes");
  PairingResult best;
  std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
  std::vector<NodePair> cur;
  bool found = false;
  brute_force(g, used, cur, 0, best, found);
  return best;
}

}  // namespace dcjmedian
