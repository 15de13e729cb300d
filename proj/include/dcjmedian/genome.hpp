#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dcjmedian {

/// Dense vertex index of a gene extremity: 2*gene - 2 for the tail,
/// 2*gene - 1 for the head.
using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

enum class Side : std::uint8_t { tail = 0, head = 1 };

struct Extremity {
  int gene = 1;  // 1-based
  Side side = Side::tail;

  constexpr VertexId id() const noexcept {
    return 2 * gene - 2 + (side == Side::head ? 1 : 0);
  }
  static constexpr Extremity from_id(VertexId v) noexcept {
    return Extremity{v / 2 + 1, (v % 2) ? Side::head : Side::tail};
  }

  friend constexpr auto operator<=>(const Extremity&, const Extremity&) = default;
};

/// Unordered vertex pair, stored with a < b.
struct VertexPair {
  VertexId a = kNoVertex;
  VertexId b = kNoVertex;

  constexpr VertexPair() = default;
  constexpr VertexPair(VertexId x, VertexId y) noexcept
      : a(x < y ? x : y), b(x < y ? y : x) {}

  friend constexpr auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Partner array indexed by vertex id; kNoVertex marks an unmatched vertex.
using MateArray = std::vector<VertexId>;

MateArray mate_array(std::span<const VertexPair> pairs, int universe);
std::vector<VertexPair> pairs_of(std::span<const VertexId> mate);

enum class ChromosomeShape : std::uint8_t { linear, circular };

struct Chromosome {
  std::vector<int> genes;  // signed gene ids; the sign is the orientation
  ChromosomeShape shape = ChromosomeShape::linear;

  friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

/// Rotation/reflection (circular) or reversal (linear) normal form.
Chromosome canonical_chromosome(Chromosome c);

enum class GenomeShape : std::uint8_t { circular, linear, mixed };

std::string_view to_string(GenomeShape s) noexcept;

/// A genome on genes 1..n stored as an adjacency matching on its 2n
/// extremities. Immutable after construction.
class Genome {
 public:
  Genome() = default;

  /// Throws InvalidInstance unless `mate` is a symmetric partial matching on
  /// 2n vertices without self-pairs.
  Genome(int n, MateArray mate, std::string name = {});

  static Genome from_adjacencies(int n, std::span<const VertexPair> adjacencies,
                                 std::string name = {});

  int gene_count() const noexcept { return n_; }
  int vertex_count() const noexcept { return 2 * n_; }
  const std::string& name() const noexcept { return name_; }

  VertexId mate(VertexId v) const { return mate_.at(static_cast<std::size_t>(v)); }
  std::span<const VertexId> mates() const noexcept { return mate_; }
  bool is_telomere(VertexId v) const { return mate(v) == kNoVertex; }

  /// Sorted adjacency list.
  std::vector<VertexPair> adjacencies() const;
  std::size_t adjacency_count() const noexcept;

  GenomeShape shape() const;

  /// Canonical chromosome decomposition.
  std::vector<Chromosome> chromosomes() const;

  Genome renamed(std::string name) const;

  friend bool operator==(const Genome& x, const Genome& y) {
    return x.n_ == y.n_ && x.mate_ == y.mate_;
  }

 private:
  int n_ = 0;
  MateArray mate_;
  std::string name_;
};

/// Genes 1..n must each occur exactly once across `chroms`.
Genome chromosomes_to_adjacencies(std::span<const Chromosome> chroms, int n,
                                  std::string name = {});

std::vector<Chromosome> adjacencies_to_chromosomes(const Genome& g);

/// Throws InvalidInstance unless `matching` is perfect on the 2n extremities.
Genome matching_to_circular_genome(std::span<const VertexPair> matching, int n,
                                   std::string name = {});

// Instance text format:
//   # comment
//   >name
//   C g1 g2 ...   (circular chromosome)
//   L g1 g2 ...   (linear chromosome)
std::vector<Genome> parse_instance(std::string_view text);
std::vector<Genome> parse_instance(std::istream& in);

std::string format_chromosome(const Chromosome& c);
std::string serialize_genome(const Genome& g);
std::string serialize_instance(std::span<const Genome> genomes,
                               std::string_view header_comment = {});

}  // namespace dcjmedian
