#include "dcjmedian/median_deg2.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "dcjmedian/matching.hpp"

namespace dcjmedian {

ComponentMedian path_median(const ComponentView& c) {
  if (c.is_cycle()) throw std::invalid_argument("path_median called on a cycle");
  ComponentMedian out;
  for (std::size_t i = 0; i + 1 < c.size(); i += 2) out.matching.emplace_back(c.vertices[i], c.vertices[i + 1]);
  out.cyc = static_cast<int>(c.size() / 2);
  return out;
}

std::optional<std::vector<VertexPair>> cross_free_diagonal(const ComponentView& c) {
  if (!c.is_cycle() || c.odd()) throw std::invalid_argument("cross_free_diagonal needs an even cycle");
  const auto sig = signatures(c);
  std::vector<std::size_t> stack;
  std::vector<VertexPair> out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (!stack.empty() && sig[stack.back()].diagonal_to(sig[j])) {
      out.emplace_back(c.vertices[stack.back()], c.vertices[j]);
      stack.pop_back();
    } else {
      stack.push_back(j);
    }
  }
  if (!stack.empty()) return std::nullopt;
  std::sort(out.begin(), out.end());
  return out;
}

ComponentMedian cycle_median(const ComponentView& c) {
  if (!c.is_cycle() || c.odd()) throw std::invalid_argument("cycle_median needs an even cycle");
  const int k = static_cast<int>(c.size() / 2);
  if (auto m = cross_free_diagonal(c)) return {std::move(*m), k + 1};
  ComponentMedian out;
  for (std::size_t i = 0; i + 1 < c.size(); i += 2) out.matching.emplace_back(c.vertices[i], c.vertices[i + 1]);
  out.cyc = k;
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Free-group hashing of cycle words.
//
// A vertex signature (a, b) is a letter; (b, a) is its inverse. An even cycle
// is of the second kind exactly when its signature word reduces to the empty
// word, which is what the stack scan decides. Letters are mapped to random
// matrices in SL2(F_p), p = 2^61 - 1, so equal group elements get equal
// matrices and distinct ones collide with negligible probability. Every hit
// is re-checked with the exact scan.

constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y) {
  const unsigned __int128 p = static_cast<unsigned __int128>(x) * y;
  std::uint64_t r = static_cast<std::uint64_t>(p & kMod) + static_cast<std::uint64_t>(p >> 61);
  if (r >= kMod) r -= kMod;
  return r;
}
std::uint64_t addmod(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r = x + y;
  if (r >= kMod) r -= kMod;
  return r;
}
std::uint64_t submod(std::uint64_t x, std::uint64_t y) { return x >= y ? x - y : x + kMod - y; }
std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, b = mulmod(b, b))
    if (e & 1) r = mulmod(r, b);
  return r;
}

struct Mat {
  std::uint64_t a = 1, b = 0, c = 0, d = 1;

  friend Mat operator*(const Mat& x, const Mat& y) {
    return {addmod(mulmod(x.a, y.a), mulmod(x.b, y.c)), addmod(mulmod(x.a, y.b), mulmod(x.b, y.d)),
            addmod(mulmod(x.c, y.a), mulmod(x.d, y.c)), addmod(mulmod(x.c, y.b), mulmod(x.d, y.d))};
  }
  Mat inverse() const { return {d, submod(0, b), submod(0, c), a}; }  // det = 1
  std::uint64_t hash() const {
    std::uint64_t h = a;
    for (std::uint64_t x : {b, c, d}) h = (h ^ x) * 0x9E3779B97F4A7C15ULL + (h >> 29);
    return h;
  }
};

std::uint64_t splitmix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Mat generator_matrix(Color lo, Color hi) {
  std::uint64_t s = 0x5DEECE66DULL + static_cast<std::uint64_t>(lo) * 1000003ULL +
                    static_cast<std::uint64_t>(hi) * 7919ULL;
  Mat m;
  do {
    m.a = splitmix(s) % kMod;
  } while (m.a == 0);
  m.b = splitmix(s) % kMod;
  m.c = splitmix(s) % kMod;
  m.d = mulmod(addmod(1, mulmod(m.b, m.c)), powmod(m.a, kMod - 2));
  return m;
}

Mat letter_matrix(const Signature& s) {
  constexpr int kCached = 8;
  static const auto table = [] {
    std::array<Mat, kCached * kCached> t{};
    for (Color x = 0; x < kCached; ++x)
      for (Color y = 0; y < kCached; ++y)
        if (x != y) {
          const Mat g = generator_matrix(std::min(x, y), std::max(x, y));
          t[static_cast<std::size_t>(x * kCached + y)] = x < y ? g : g.inverse();
        }
    return t;
  }();
  if (s.incoming < kCached && s.outgoing < kCached)
    return table[static_cast<std::size_t>(s.incoming * kCached + s.outgoing)];
  const Mat g = generator_matrix(std::min(s.incoming, s.outgoing), std::max(s.incoming, s.outgoing));
  return s.incoming < s.outgoing ? g : g.inverse();
}

// For every vertex i of an odd cycle: its signature and the hash of the word
// read around the cycle from i+1 to i-1 (and of that word's inverse).
struct CycleWords {
  const ComponentView* comp = nullptr;
  std::vector<Signature> sig;
  std::vector<std::uint64_t> word;
  std::vector<std::uint64_t> inverse_word;
};

CycleWords cycle_words(const ComponentView& c) {
  CycleWords out;
  out.comp = &c;
  out.sig = signatures(c);
  const std::size_t k = c.size();
  std::vector<Mat> pre(k + 1), pre_inv(k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    const Mat l = letter_matrix(out.sig[i]);
    pre[i + 1] = pre[i] * l;
    pre_inv[i + 1] = l.inverse() * pre_inv[i];
  }
  out.word.resize(k);
  out.inverse_word.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Mat w = pre_inv[i + 1] * pre[k] * pre[i];
    out.word[i] = w.hash();
    out.inverse_word[i] = w.inverse().hash();
  }
  return out;
}

std::uint64_t word_key(const Signature& s, std::uint64_t h) {
  return h * 0x100000001B3ULL ^ (static_cast<std::uint64_t>(s.incoming) << 8 | static_cast<std::uint64_t>(s.outgoing));
}

// Exact check that deleting a[i] and b[j] and splicing the loose ends
// leaves a second-kind cycle.
bool merged_cycle_balanced(const CycleWords& a, std::size_t i, const CycleWords& b, std::size_t j) {
  const std::size_t ka = a.sig.size();
  const std::size_t kb = b.sig.size();
  const bool forward = b.sig[j] == a.sig[i].swapped();
  std::vector<Signature> stack;
  stack.reserve(ka + kb);
  auto feed = [&](const Signature& s) {
    if (!stack.empty() && stack.back().diagonal_to(s))
      stack.pop_back();
    else
      stack.push_back(s);
  };
  for (std::size_t t = 1; t < ka; ++t) feed(a.sig[(i + t) % ka]);
  for (std::size_t t = 1; t < kb; ++t)
    feed(forward ? b.sig[(j + t) % kb] : b.sig[(j + kb - t) % kb].swapped());
  return stack.empty();
}

struct BonusPair {
  bool found = false;
  VertexId u = kNoVertex;  // in the first cycle
  VertexId v = kNoVertex;  // in the second cycle
};

using WordIndex = std::unordered_multimap<std::uint64_t, std::size_t>;

WordIndex index_words(const CycleWords& w) {
  WordIndex idx;
  idx.reserve(w.sig.size());
  for (std::size_t j = 0; j < w.sig.size(); ++j) idx.emplace(word_key(w.sig[j], w.word[j]), j);
  return idx;
}

BonusPair find_bonus(const CycleWords& a, const CycleWords& b, const WordIndex& b_index) {
  const auto& av = a.comp->vertices;
  const auto& bv = b.comp->vertices;
  std::vector<std::size_t> order(av.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return av[x] < av[y]; });
  std::vector<std::size_t> cands;
  for (std::size_t i : order) {
    cands.clear();
    for (auto key : {word_key(a.sig[i].swapped(), a.inverse_word[i]), word_key(a.sig[i], a.word[i])}) {
      auto [lo, hi] = b_index.equal_range(key);
      for (auto it = lo; it != hi; ++it) cands.push_back(it->second);
    }
    std::sort(cands.begin(), cands.end(), [&](std::size_t x, std::size_t y) { return bv[x] < bv[y]; });
    for (std::size_t j : cands) {
      const bool colors_join = b.sig[j] == a.sig[i] || b.sig[j] == a.sig[i].swapped();
      if (colors_join && merged_cycle_balanced(a, i, b, j)) return {true, av[i], bv[j]};
    }
  }
  return {};
}

int color_bound(std::span<const ComponentView* const> parts) {
  Color hi = 0;
  for (const auto* p : parts)
    for (Color c : p->edge_colors) hi = std::max(hi, c);
  return hi + 1;
}

int universe_bound(std::span<const ComponentView* const> parts) {
  VertexId hi = 0;
  for (const auto* p : parts)
    for (VertexId v : p->vertices) hi = std::max(hi, v);
  return hi + 1;
}

// Vertex removed from an odd component when its crossing edge carries no
// cycle, and the consecutive pairing of what remains.
VertexId dead_end_vertex(const ComponentView& c) {
  return c.is_cycle() ? c.vertices.front() : c.vertices.back();
}

void pair_rest(const ComponentView& c, std::vector<VertexPair>& out) {
  // cycles skip their first vertex, paths their last
  const std::size_t start = c.is_cycle() ? 1 : 0;
  for (std::size_t i = start; i + 1 < c.size(); i += 2) out.emplace_back(c.vertices[i], c.vertices[i + 1]);
}

PairWeight plain_pair(const ComponentView& a, const ComponentView& b) {
  PairWeight out;
  out.weight = static_cast<int>(a.size() / 2 + b.size() / 2);
  out.crossing = VertexPair(dead_end_vertex(a), dead_end_vertex(b));
  pair_rest(a, out.sub_matching);
  pair_rest(b, out.sub_matching);
  std::sort(out.sub_matching.begin(), out.sub_matching.end());
  return out;
}

PairWeight bonus_pair(const ComponentView& a, const ComponentView& b, VertexId u, VertexId v) {
  const std::array<const ComponentView*, 2> parts{&a, &b};
  auto g = component_subgraph(universe_bound(parts), color_bound(parts), parts);
  g.shrink_in_place(u, v);
  const auto rest = components(g);
  if (rest.size() != 1 || !rest.front().is_cycle())
    throw std::logic_error("shrinking a bonus pair must leave a single cycle");
  auto med = cycle_median(rest.front());
  const int expected = static_cast<int>(a.size() / 2 + b.size() / 2) + 1;
  if (med.cyc != expected) throw std::logic_error("bonus pair did not yield a second-kind cycle");
  return {expected, VertexPair(u, v), std::move(med.matching)};
}

void require_odd_pair(const ComponentView& a, const ComponentView& b) {
  if (!a.odd() || !b.odd()) throw std::invalid_argument("pair weights are defined for odd components");
  if (!a.vertices.empty() && !b.vertices.empty() &&
      std::find_first_of(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end()) !=
          a.vertices.end())
    throw std::invalid_argument("pair weight needs two distinct components");
}

// ---------------------------------------------------------------------------
// Exhaustive evaluation, memoized on canonical component keys.

class ValueMemo {
 public:
  std::optional<int> find(const std::string& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void store(const std::string& key, int value) {
    std::unique_lock lock(mutex_);
    table_.emplace(key, value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, int> table_;
};

ValueMemo& pair_memo() {
  static ValueMemo memo;
  return memo;
}

int exhaustive_value(const ColoredGraph& g);

int exhaustive_pair_value(const ComponentView& a, const ComponentView& b) {
  std::string ka = canonical_key(a), kb = canonical_key(b);
  if (kb < ka) std::swap(ka, kb);
  const std::string key = std::to_string(a.size()) + ":" + std::to_string(b.size()) + ":" + ka + "|" + kb;
  if (auto hit = pair_memo().find(key)) return *hit;
  const std::array<const ComponentView*, 2> parts{&a, &b};
  const auto g = component_subgraph(universe_bound(parts), color_bound(parts), parts);
  int best = -1;
  for (VertexId u : a.vertices)
    for (VertexId v : b.vertices) {
      auto r = shrink(g, u, v);
      best = std::max(best, r.k + exhaustive_value(r.graph));
    }
  pair_memo().store(key, best);
  return best;
}

int exhaustive_value(const ColoredGraph& g) {
  const auto comps = components(g);
  int total = 0;
  std::vector<const ComponentView*> odd;
  for (const auto& c : comps) {
    if (c.odd())
      odd.push_back(&c);
    else
      total += c.is_cycle() ? cycle_median(c).cyc : path_median(c).cyc;
  }
  if (odd.empty()) return total;
  WeightedCompleteGraph k(static_cast<int>(odd.size()));
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i + 1; j < odd.size(); ++j)
      k.set_weight(static_cast<int>(i), static_cast<int>(j), exhaustive_pair_value(*odd[i], *odd[j]));
  return total + static_cast<int>(max_weight_perfect_matching(k).total);
}

void check_deg2_input(const ColoredGraph& g) {
  if (g.max_degree() > 2) throw std::invalid_argument("degree-2 solver got a vertex of degree 3");
  if (g.vertex_count() % 2 != 0) throw std::invalid_argument("degree-2 solver needs an even vertex count");
}

// Pairing of odd components under the closed-form weights. Only the bonus
// term differs between perfect pairings, so the matching engine runs on the
// odd cycles that have a bonus partner; everything else is paired in order.
struct OddPairing {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // indices into odd list
  std::vector<BonusPair> bonus;                              // per pair
  int bonus_total = 0;
};

OddPairing pair_odd_components(const std::vector<const ComponentView*>& odd) {
  OddPairing out;
  std::vector<std::size_t> cyc_idx;
  for (std::size_t i = 0; i < odd.size(); ++i)
    if (odd[i]->is_cycle()) cyc_idx.push_back(i);

  std::vector<CycleWords> words;
  std::vector<WordIndex> indices;
  words.reserve(cyc_idx.size());
  for (std::size_t i : cyc_idx) {
    words.push_back(cycle_words(*odd[i]));
    indices.push_back(index_words(words.back()));
  }
  std::unordered_map<std::uint64_t, BonusPair> bonus;  // key: x * |odd| + y, x < y
  std::vector<char> has_bonus(odd.size(), 0);
  for (std::size_t x = 0; x < cyc_idx.size(); ++x)
    for (std::size_t y = x + 1; y < cyc_idx.size(); ++y) {
      BonusPair b = find_bonus(words[x], words[y], indices[y]);
      if (!b.found) continue;
      bonus[cyc_idx[x] * odd.size() + cyc_idx[y]] = b;
      has_bonus[cyc_idx[x]] = has_bonus[cyc_idx[y]] = 1;
    }

  std::vector<std::size_t> nodes;
  for (std::size_t i = 0; i < odd.size(); ++i)
    if (has_bonus[i]) nodes.push_back(i);
  if (nodes.size() % 2 == 1) {
    for (std::size_t i = 0; i < odd.size(); ++i)
      if (!has_bonus[i]) {
        nodes.push_back(i);
        std::sort(nodes.begin(), nodes.end());
        break;
      }
  }
  std::vector<char> used(odd.size(), 0);
  if (!nodes.empty()) {
    WeightedCompleteGraph k(static_cast<int>(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = i + 1; j < nodes.size(); ++j)
        k.set_weight(static_cast<int>(i), static_cast<int>(j),
                     bonus.count(nodes[i] * odd.size() + nodes[j]) ? 1 : 0);
    for (const auto& [i, j] : max_weight_perfect_matching(k).pairs) {
      const std::size_t x = nodes[static_cast<std::size_t>(i)], y = nodes[static_cast<std::size_t>(j)];
      auto it = bonus.find(x * odd.size() + y);
      out.pairs.emplace_back(x, y);
      out.bonus.push_back(it != bonus.end() ? it->second : BonusPair{});
      out.bonus_total += it != bonus.end();
      used[x] = used[y] = 1;
    }
  }
  std::size_t pending = odd.size();
  for (std::size_t i = 0; i < odd.size(); ++i) {
    if (used[i]) continue;
    if (pending == odd.size()) {
      pending = i;
    } else {
      out.pairs.emplace_back(pending, i);
      out.bonus.push_back({});
      pending = odd.size();
    }
  }
  return out;
}

}  // namespace

PairWeight pair_weight(const ComponentView& a, const ComponentView& b) {
  require_odd_pair(a, b);
  if (a.is_cycle() && b.is_cycle()) {
    const auto wa = cycle_words(a);
    const auto wb = cycle_words(b);
    const auto found = find_bonus(wa, wb, index_words(wb));
    if (found.found) return bonus_pair(a, b, found.u, found.v);
  }
  return plain_pair(a, b);
}

PairWeight pair_weight_exhaustive(const ComponentView& a, const ComponentView& b) {
  require_odd_pair(a, b);
  const std::array<const ComponentView*, 2> parts{&a, &b};
  const auto g = component_subgraph(universe_bound(parts), color_bound(parts), parts);
  std::vector<VertexId> av = a.vertices, bv = b.vertices;
  std::sort(av.begin(), av.end());
  std::sort(bv.begin(), bv.end());
  PairWeight out;
  out.weight = -1;
  for (VertexId u : av)
    for (VertexId v : bv) {
      auto r = shrink(g, u, v);
      const int value = r.k + exhaustive_value(r.graph);
      if (value > out.weight) {
        out.weight = value;
        out.crossing = VertexPair(u, v);
      }
    }
  auto r = shrink(g, out.crossing.a, out.crossing.b);
  out.sub_matching = solve_deg2(r.graph, {PairStrategy::exhaustive}).matching;
  return out;
}

ComponentMedian solve_deg2(const ColoredGraph& g, Deg2Options options) {
  check_deg2_input(g);
  const auto comps = components(g);
  ComponentMedian out;
  std::vector<const ComponentView*> odd;
  for (const auto& c : comps) {
    if (c.odd()) {
      odd.push_back(&c);
      continue;
    }
    auto part = c.is_cycle() ? cycle_median(c) : path_median(c);
    out.cyc += part.cyc;
    out.matching.insert(out.matching.end(), part.matching.begin(), part.matching.end());
  }

  auto take = [&out](PairWeight pw) {
    out.cyc += pw.weight;
    out.matching.push_back(pw.crossing);
    out.matching.insert(out.matching.end(), pw.sub_matching.begin(), pw.sub_matching.end());
  };

  if (!odd.empty()) {
    if (options.strategy == PairStrategy::exhaustive) {
      const int t = static_cast<int>(odd.size());
      std::vector<PairWeight> weights(static_cast<std::size_t>(t * t));
      WeightedCompleteGraph k(t);
      for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
          weights[static_cast<std::size_t>(i * t + j)] = pair_weight_exhaustive(*odd[i], *odd[j]);
          k.set_weight(i, j, weights[static_cast<std::size_t>(i * t + j)].weight);
        }
      for (const auto& [i, j] : max_weight_perfect_matching(k).pairs)
        take(std::move(weights[static_cast<std::size_t>(i * t + j)]));
    } else {
      const auto pairing = pair_odd_components(odd);
      for (std::size_t p = 0; p < pairing.pairs.size(); ++p) {
        const auto& a = *odd[pairing.pairs[p].first];
        const auto& b = *odd[pairing.pairs[p].second];
        const auto& bonus = pairing.bonus[p];
        take(bonus.found ? bonus_pair(a, b, bonus.u, bonus.v) : plain_pair(a, b));
      }
    }
  }

  std::sort(out.matching.begin(), out.matching.end());
  const auto recount = count_alternating_cycles(g, std::span<const VertexPair>(out.matching));
  if (recount.total != out.cyc)
    throw std::logic_error("degree-2 median recount (" + std::to_string(recount.total) +
                           ") disagrees with its value (" + std::to_string(out.cyc) + ")");
  return out;
}

int solve_deg2_value(const ColoredGraph& g) {
  check_deg2_input(g);
  const auto comps = components(g);
  int total = 0;
  std::vector<const ComponentView*> odd;
  for (const auto& c : comps) {
    if (c.odd()) {
      odd.push_back(&c);
      total += static_cast<int>(c.size() / 2);
    } else if (c.is_cycle()) {
      total += static_cast<int>(c.size() / 2) + (cross_free_diagonal(c) ? 1 : 0);
    } else {
      total += static_cast<int>(c.size() / 2);
    }
  }
  std::size_t odd_cycles = 0;
  for (const auto* c : odd) odd_cycles += c->is_cycle();
  if (odd_cycles >= 2) total += pair_odd_components(odd).bonus_total;
  return total;
}

int deg2_upper_bound(std::span<const ComponentView> comps) {
  int total = 0;
  int odd_cycles = 0;
  for (const auto& c : comps) {
    total += static_cast<int>(c.size() / 2);
    if (c.is_cycle()) {
      if (c.odd())
        ++odd_cycles;
      else
        total += 1;
    }
  }
  return total + odd_cycles / 2;
}

}  // namespace dcjmedian
