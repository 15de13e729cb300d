#include "dcjmedian/colored_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcjmedian {

ColoredGraph::ColoredGraph(int universe, int colors)
    : universe_(universe),
      colors_(colors),
      vertex_count_(universe),
      slots_(static_cast<std::size_t>(universe) * static_cast<std::size_t>(colors), kNoVertex),
      present_(static_cast<std::size_t>(universe), 1) {
  if (universe < 0 || colors < 0) throw std::invalid_argument("negative graph dimensions");
}

ColoredGraph::ColoredGraph(int universe, int colors, std::span<const VertexId> vertices)
    : ColoredGraph(universe, colors) {
  std::fill(present_.begin(), present_.end(), 0);
  vertex_count_ = 0;
  for (VertexId v : vertices) {
    if (v < 0 || v >= universe) throw std::invalid_argument("vertex outside the universe");
    if (!present_[v]) ++vertex_count_;
    present_[v] = 1;
  }
}

std::vector<VertexId> ColoredGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(vertex_count_));
  for (VertexId v = 0; v < universe_; ++v)
    if (present_[v]) out.push_back(v);
  return out;
}

int ColoredGraph::degree(VertexId v) const noexcept {
  int d = 0;
  for (Color c = 0; c < colors_; ++c) d += neighbor(v, c) != kNoVertex;
  return d;
}

int ColoredGraph::max_degree() const noexcept {
  int d = 0;
  for (VertexId v = 0; v < universe_; ++v)
    if (present_[v]) d = std::max(d, degree(v));
  return d;
}

int ColoredGraph::multiplicity(VertexId u, VertexId v) const noexcept {
  if (!contains(u)) return 0;
  int k = 0;
  for (Color c = 0; c < colors_; ++c) k += neighbor(u, c) == v;
  return k;
}

std::size_t ColoredGraph::edge_count(Color c) const noexcept {
  std::size_t k = 0;
  for (VertexId v = 0; v < universe_; ++v)
    if (present_[v] && neighbor(v, c) > v) ++k;
  return k;
}

std::vector<ColoredEdge> ColoredGraph::edges() const {
  std::vector<ColoredEdge> out;
  out.reserve(edge_count_);
  for (VertexId v = 0; v < universe_; ++v) {
    if (!present_[v]) continue;
    for (Color c = 0; c < colors_; ++c)
      if (neighbor(v, c) > v) out.emplace_back(v, neighbor(v, c), c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ColoredEdge> ColoredGraph::incident_edges(VertexId v) const {
  std::vector<ColoredEdge> out;
  for (Color c = 0; c < colors_; ++c)
    if (neighbor(v, c) != kNoVertex) out.emplace_back(v, neighbor(v, c), c);
  return out;
}

void ColoredGraph::add_edge(VertexId u, VertexId v, Color c) {
  if (u == v) throw std::invalid_argument("self-loop");
  if (!contains(u) || !contains(v)) throw std::invalid_argument("edge endpoint not in graph");
  if (c < 0 || c >= colors_) throw std::invalid_argument("color out of range");
  if (neighbor(u, c) != kNoVertex || neighbor(v, c) != kNoVertex)
    throw std::invalid_argument("color class would stop being a matching");
  slot(u, c) = v;
  slot(v, c) = u;
  ++edge_count_;
}

int ColoredGraph::shrink_in_place(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("shrink needs two distinct vertices");
  if (!contains(u) || !contains(v)) throw std::invalid_argument("shrink vertex not in graph");
  int k = 0;
  for (Color c = 0; c < colors_; ++c) {
    const VertexId a = neighbor(u, c);
    const VertexId b = neighbor(v, c);
    if (a == v) {
      ++k;
      --edge_count_;
    } else {
      if (a != kNoVertex) {
        slot(a, c) = kNoVertex;
        --edge_count_;
      }
      if (b != kNoVertex) {
        slot(b, c) = kNoVertex;
        --edge_count_;
      }
      if (a != kNoVertex && b != kNoVertex) {
        slot(a, c) = b;
        slot(b, c) = a;
        ++edge_count_;
      }
    }
    slot(u, c) = kNoVertex;
    slot(v, c) = kNoVertex;
  }
  present_[u] = 0;
  present_[v] = 0;
  vertex_count_ -= 2;
  return k;
}

void ColoredGraph::remove_edge_in_place(VertexId u, VertexId v, Color c) {
  if (!has_edge(u, v, c)) throw std::invalid_argument("edge to remove is absent");
  slot(u, c) = kNoVertex;
  slot(v, c) = kNoVertex;
  --edge_count_;
}

ColoredGraph build_breakpoint_graph(std::span<const Genome> genomes) {
  if (genomes.empty()) return ColoredGraph(0, 0);
  const int n = genomes.front().gene_count();
  for (const auto& g : genomes)
    if (g.gene_count() != n) throw std::invalid_argument("genomes have different gene counts");
  ColoredGraph out(2 * n, static_cast<int>(genomes.size()));
  for (Color c = 0; c < static_cast<Color>(genomes.size()); ++c)
    for (const auto& adj : genomes[static_cast<std::size_t>(c)].adjacencies())
      out.add_edge(adj.a, adj.b, c);
  return out;
}

std::vector<ComponentView> components(const ColoredGraph& g) {
  const int colors = g.color_count();
  std::vector<std::uint8_t> visited(static_cast<std::size_t>(g.universe_size()), 0);
  std::vector<ComponentView> out;
  std::vector<VertexId> min_id;

  // Follows the edge at `cur` whose color differs from `in`; kNoColor means
  // "take the smallest-colored edge".
  auto step = [&](VertexId cur, Color in, Color& out_color) {
    for (Color c = 0; c < colors; ++c) {
      if (c == in) continue;
      const VertexId w = g.neighbor(cur, c);
      if (w != kNoVertex) {
        out_color = c;
        return w;
      }
    }
    return kNoVertex;
  };

  const auto all = g.vertices();
  for (VertexId v : all)
    if (g.degree(v) > 2) throw std::invalid_argument("components() needs maximum degree 2");

  for (VertexId v : all) {
    if (visited[v] || g.degree(v) > 1) continue;
    ComponentView comp;
    comp.kind = ComponentKind::path;
    VertexId lo = v;
    Color in = kNoColor;
    for (VertexId cur = v; cur != kNoVertex;) {
      visited[cur] = 1;
      comp.vertices.push_back(cur);
      lo = std::min(lo, cur);
      Color c = kNoColor;
      const VertexId next = step(cur, in, c);
      if (next == kNoVertex) break;
      comp.edge_colors.push_back(c);
      in = c;
      cur = next;
    }
    out.push_back(std::move(comp));
    min_id.push_back(lo);
  }

  for (VertexId v : all) {
    if (visited[v]) continue;
    ComponentView comp;
    comp.kind = ComponentKind::cycle;
    // Leave v toward the smaller neighbor, or by the smaller color on a 2-cycle.
    Color first = kNoColor;
    VertexId best = kNoVertex;
    for (Color c = 0; c < colors; ++c) {
      const VertexId w = g.neighbor(v, c);
      if (w != kNoVertex && (best == kNoVertex || w < best)) {
        best = w;
        first = c;
      }
    }
    comp.vertices.push_back(v);
    visited[v] = 1;
    comp.edge_colors.push_back(first);
    Color in = first;
    for (VertexId cur = best; cur != v;) {
      visited[cur] = 1;
      comp.vertices.push_back(cur);
      Color c = kNoColor;
      const VertexId next = step(cur, in, c);
      comp.edge_colors.push_back(c);
      in = c;
      cur = next;
    }
    out.push_back(std::move(comp));
    min_id.push_back(v);
  }

  std::vector<std::size_t> order(out.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return min_id[x] < min_id[y]; });
  std::vector<ComponentView> sorted;
  sorted.reserve(out.size());
  for (std::size_t i : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

ShrinkResult shrink(const ColoredGraph& g, VertexId u, VertexId v) {
  ShrinkResult r{g, 0};
  r.k = r.graph.shrink_in_place(u, v);
  return r;
}

ColoredGraph remove_edge(const ColoredGraph& g, VertexId u, VertexId v, Color c) {
  ColoredGraph out = g;
  out.remove_edge_in_place(u, v, c);
  return out;
}

std::vector<Signature> signatures(const ComponentView& c) {
  if (!c.is_cycle()) throw std::invalid_argument("signatures are defined on cycles only");
  const std::size_t k = c.size();
  std::vector<Signature> out(k);
  for (std::size_t i = 0; i < k; ++i)
    out[i] = Signature{c.edge_colors[(i + k - 1) % k], c.edge_colors[i]};
  return out;
}

CycleCount count_alternating_cycles(const ColoredGraph& g, std::span<const VertexId> mate) {
  CycleCount out;
  out.per_color.assign(static_cast<std::size_t>(g.color_count()), 0);
  if (mate.size() < static_cast<std::size_t>(g.universe_size()))
    throw std::invalid_argument("mate array smaller than the vertex universe");
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.universe_size()));
  const auto all = g.vertices();
  for (Color c = 0; c < g.color_count(); ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (VertexId s : all) {
      if (seen[s]) continue;
      for (VertexId cur = s;;) {
        seen[cur] = 1;
        const VertexId w = g.neighbor(cur, c);
        if (w == kNoVertex) break;
        seen[w] = 1;
        const VertexId x = mate[w];
        if (x == kNoVertex) break;
        if (x == s) {
          ++out.per_color[c];
          break;
        }
        if (seen[x]) break;
        cur = x;
      }
    }
    out.total += out.per_color[c];
  }
  return out;
}

CycleCount count_alternating_cycles(const ColoredGraph& g, std::span<const VertexPair> matching) {
  MateArray mate(static_cast<std::size_t>(g.universe_size()), kNoVertex);
  for (const auto& p : matching) {
    if (!g.contains(p.a) || !g.contains(p.b) || p.a == p.b)
      throw std::invalid_argument("matching pair outside the graph");
    if (mate[p.a] != kNoVertex || mate[p.b] != kNoVertex)
      throw std::invalid_argument("matching pairs are not disjoint");
    mate[p.a] = p.b;
    mate[p.b] = p.a;
  }
  if (matching.size() * 2 != static_cast<std::size_t>(g.vertex_count()))
    throw std::invalid_argument("matching is not perfect on the graph's vertices");
  return count_alternating_cycles(g, std::span<const VertexId>(mate));
}

ColoredGraph component_subgraph(int universe, int colors,
                                std::span<const ComponentView* const> parts) {
  std::vector<VertexId> vs;
  for (const auto* p : parts) vs.insert(vs.end(), p->vertices.begin(), p->vertices.end());
  ColoredGraph out(universe, colors, vs);
  for (const auto* p : parts) {
    const std::size_t k = p->size();
    for (std::size_t i = 0; i < p->edge_colors.size(); ++i)
      out.add_edge(p->vertices[i], p->vertices[(i + 1) % k], p->edge_colors[i]);
  }
  return out;
}

std::string canonical_key(const ComponentView& c) {
  std::string seq;
  seq.reserve(c.edge_colors.size());
  for (Color col : c.edge_colors) seq.push_back(static_cast<char>('a' + col));
  std::string rev(seq.rbegin(), seq.rend());
  if (!c.is_cycle()) {
    // An isolated vertex and a 1-vertex path coincide; the length is implied.
    return "P" + std::min(seq, rev);
  }
  std::string best = seq;
  for (const std::string* s : {&seq, &rev}) {
    std::string doubled = *s + *s;
    for (std::size_t i = 0; i < s->size(); ++i) {
      std::string_view view(doubled.data() + i, s->size());
      if (view < best) best.assign(view);
    }
  }
  return "C" + best;
}

}  // namespace dcjmedian
