#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dcjmedian/genome.hpp"

namespace dcjmedian {

/// Genome index of an edge in a breakpoint graph (0-based).
using Color = int;
inline constexpr Color kNoColor = -1;

struct ColoredEdge {
  VertexId u = kNoVertex;  // u < v
  VertexId v = kNoVertex;
  Color color = kNoColor;

  constexpr ColoredEdge() = default;
  constexpr ColoredEdge(VertexId x, VertexId y, Color c) noexcept
      : u(x < y ? x : y), v(x < y ? y : x), color(c) {}

  friend constexpr auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Edge-colored multigraph in which every color class is a matching.
///
/// Each vertex holds one neighbor slot per color, so the per-color matching
/// invariant holds by construction. Vertex ids index a fixed universe
/// (usually the 2n extremities); reductions delete vertices without
/// renumbering the survivors.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  /// All `universe` vertices present, no edges.
  ColoredGraph(int universe, int colors);
  /// Only `vertices` present, no edges.
  ColoredGraph(int universe, int colors, std::span<const VertexId> vertices);

  int universe_size() const noexcept { return universe_; }
  int color_count() const noexcept { return colors_; }

  bool contains(VertexId v) const noexcept {
    return v >= 0 && v < universe_ && present_[static_cast<std::size_t>(v)];
  }
  int vertex_count() const noexcept { return vertex_count_; }
  /// Present vertices in ascending order.
  std::vector<VertexId> vertices() const;

  VertexId neighbor(VertexId v, Color c) const noexcept {
    return slots_[static_cast<std::size_t>(v) * static_cast<std::size_t>(colors_) +
                  static_cast<std::size_t>(c)];
  }
  int degree(VertexId v) const noexcept;
  int max_degree() const noexcept;
  bool has_edge(VertexId u, VertexId v, Color c) const noexcept {
    return contains(u) && c >= 0 && c < colors_ && neighbor(u, c) == v && v != kNoVertex;
  }
  /// Number of parallel edges (any color) between u and v.
  int multiplicity(VertexId u, VertexId v) const noexcept;

  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t edge_count(Color c) const noexcept;
  /// All edges, sorted.
  std::vector<ColoredEdge> edges() const;
  /// Edges incident to v in color order.
  std::vector<ColoredEdge> incident_edges(VertexId v) const;

  /// Throws std::invalid_argument on a self-loop, an absent endpoint, or a
  /// second edge of the same color at either endpoint.
  void add_edge(VertexId u, VertexId v, Color c);

  /// In-place shrink of {u, v}: removes the edges between u and v, splices
  /// same-colored edges leaving u and v into one edge, deletes both vertices.
  /// Returns the number of edges that joined u and v.
  int shrink_in_place(VertexId u, VertexId v);
  /// In-place removal of one edge; throws std::invalid_argument if absent.
  void remove_edge_in_place(VertexId u, VertexId v, Color c);

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  VertexId& slot(VertexId v, Color c) noexcept {
    return slots_[static_cast<std::size_t>(v) * static_cast<std::size_t>(colors_) +
                  static_cast<std::size_t>(c)];
  }

  int universe_ = 0;
  int colors_ = 0;
  int vertex_count_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<VertexId> slots_;
  std::vector<std::uint8_t> present_;
};

/// Superimposes the adjacency matchings, one color per genome.
ColoredGraph build_breakpoint_graph(std::span<const Genome> genomes);

enum class ComponentKind : std::uint8_t { path, cycle };

/// A path or cycle component of a graph with maximum degree 2.
///
/// Paths start at the end with the smaller id; an isolated vertex is a
/// one-vertex path. Cycles start at their minimal vertex and head toward
/// the smaller neighbor (for a 2-cycle, along the smaller color first).
/// edge_colors[i] is the color of the edge vertices[i] -> vertices[i + 1],
/// cyclically for cycles.
struct ComponentView {
  ComponentKind kind = ComponentKind::path;
  std::vector<VertexId> vertices;
  std::vector<Color> edge_colors;

  std::size_t size() const noexcept { return vertices.size(); }
  bool odd() const noexcept { return vertices.size() % 2 == 1; }
  bool is_cycle() const noexcept { return kind == ComponentKind::cycle; }

  friend bool operator==(const ComponentView&, const ComponentView&) = default;
};

/// Throws std::invalid_argument if some vertex has degree > 2.
std::vector<ComponentView> components(const ColoredGraph& g);

struct ShrinkResult {
  ColoredGraph graph;
  int k = 0;  // edges that joined the shrunk pair
};

ShrinkResult shrink(const ColoredGraph& g, VertexId u, VertexId v);
ColoredGraph remove_edge(const ColoredGraph& g, VertexId u, VertexId v, Color c);

struct Signature {
  Color incoming = kNoColor;
  Color outgoing = kNoColor;

  constexpr Signature swapped() const noexcept { return {outgoing, incoming}; }
  constexpr bool diagonal_to(const Signature& o) const noexcept {
    return incoming == o.outgoing && outgoing == o.incoming;
  }
  friend constexpr auto operator<=>(const Signature&, const Signature&) = default;
};

/// Per-vertex (incoming, outgoing) colors along the traversal of a cycle.
std::vector<Signature> signatures(const ComponentView& c);

struct CycleCount {
  int total = 0;
  std::vector<int> per_color;
};

/// Alternating cycles between a perfect matching and each color class.
/// Throws std::invalid_argument unless `matching` is perfect on g's vertices.
CycleCount count_alternating_cycles(const ColoredGraph& g, std::span<const VertexPair> matching);
/// Same, from a mate array; unmatched vertices are allowed here and simply
/// lie on no cycle.
CycleCount count_alternating_cycles(const ColoredGraph& g, std::span<const VertexId> mate);

/// Subgraph spanned by the given components (vertices and edges).
ColoredGraph component_subgraph(int universe, int colors,
                                std::span<const ComponentView* const> parts);

/// Rotation/reflection invariant text key of a component's shape and colors.
std::string canonical_key(const ComponentView& c);

}  // namespace dcjmedian
