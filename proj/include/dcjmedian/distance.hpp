#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "dcjmedian/genome.hpp"

namespace dcjmedian {

/// Exact non-negative half-integer, stored as a count of halves.
class DistanceValue {
 public:
  constexpr DistanceValue() = default;
  static constexpr DistanceValue from_halves(std::int64_t halves) noexcept {
    DistanceValue d;
    d.halves_ = halves;
    return d;
  }
  static constexpr DistanceValue from_integer(std::int64_t v) noexcept { return from_halves(2 * v); }

  constexpr std::int64_t halves() const noexcept { return halves_; }
  constexpr bool is_integer() const noexcept { return halves_ % 2 == 0; }
  constexpr double as_double() const noexcept { return static_cast<double>(halves_) / 2.0; }

  /// "3" or "7/2".
  std::string to_string() const;

  friend constexpr auto operator<=>(const DistanceValue&, const DistanceValue&) = default;
  friend constexpr DistanceValue operator+(DistanceValue x, DistanceValue y) noexcept {
    return from_halves(x.halves_ + y.halves_);
  }

 private:
  std::int64_t halves_ = 0;
};

/// Size threshold for the interpolated distance: a positive count or infinity.
class SizeLimit {
 public:
  static constexpr SizeLimit infinite() noexcept { return SizeLimit(0, true); }
  /// Throws std::invalid_argument for limits < 1.
  static SizeLimit of(int limit);

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr int value() const noexcept { return value_; }
  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  constexpr SizeLimit(int v, bool inf) : value_(v), infinite_(inf) {}
  int value_;
  bool infinite_;
};

/// Components of the two-genome breakpoint graph.
struct PairCensus {
  int n = 0;
  int cycles = 0;             // all (necessarily even) cycles
  int odd_paths = 0;
  int two_cycles = 0;         // common adjacencies
  int one_paths = 0;          // common telomeres
  std::vector<int> cycle_sizes;     // vertex counts
  std::vector<int> odd_path_sizes;  // vertex counts
};

/// Throws std::invalid_argument when the gene counts differ.
PairCensus pair_census(const Genome& g1, const Genome& g2);

/// n - c - p/2.
DistanceValue dcj_distance(const Genome& g1, const Genome& g2);
/// n - a - e/2.
DistanceValue bp_distance(const Genome& g1, const Genome& g2);
/// n - c_i - p_j/2, counting cycles with at most 2i vertices and odd paths
/// with at most 2j - 1 vertices.
DistanceValue dij_distance(const Genome& g1, const Genome& g2, SizeLimit i, SizeLimit j);

}  // namespace dcjmedian
