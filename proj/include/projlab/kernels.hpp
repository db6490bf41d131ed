#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "projlab/matching.hpp"
#include "projlab/projspace.hpp"

// Data-parallel inner loops. Each kernel has an OpenMP version and a serial
// reference with the same contract; results are identical, including which
// witness is reported (always the lexicographically first one).
namespace projlab::kernels {

/// Number of OpenMP threads used by the parallel kernels (<= 0: runtime default).
void set_threads(int threads);
int max_threads();

/// Symmetric matrix of subspace distances over a set.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t size) : size_(size), d_(size * size, 0) {}

  std::size_t size() const { return size_; }
  int operator()(std::size_t i, std::size_t j) const { return d_[i * size_ + j]; }
  void set(std::size_t i, std::size_t j, int v) { d_[i * size_ + j] = static_cast<std::uint8_t>(v); }
  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint8_t> d_;
};

DistanceMatrix distance_matrix(const SubspaceSet& set);
DistanceMatrix distance_matrix_serial(const SubspaceSet& set);

/// Per-dimension counts over all of P_q(n): total subspaces and those with trivial hull.
struct HullCounts {
  std::vector<std::uint64_t> total;
  std::vector<std::uint64_t> trivial;
  friend bool operator==(const HullCounts&, const HullCounts&) = default;
};

/// Streams P_q(n) partitioned by pivot-column combination.
HullCounts trivial_hull_counts(const Ambient& ambient);
HullCounts trivial_hull_counts_serial(const Ambient& ambient);

/// Edges where left[i] meets right[j] only in {0}.
BipartiteGraph disjointness_adjacency(const SubspaceSet& left, const SubspaceSet& right);
BipartiteGraph disjointness_adjacency_serial(const SubspaceSet& left, const SubspaceSet& right);

/// Row-major m x m operation table on indices.
using Triple = std::array<std::size_t, 3>;

/// First (x, y, z) with (x*y)*z != x*(y*z).
std::optional<Triple> first_associativity_violation(std::span<const std::uint32_t> table, std::size_t m);
std::optional<Triple> first_associativity_violation_serial(std::span<const std::uint32_t> table,
                                                           std::size_t m);

/// First (x, y1, y2) with d(x*y1, x*y2) != d(y1, y2).
std::optional<Triple> first_translation_violation(std::span<const std::uint32_t> table, std::size_t m,
                                                  const DistanceMatrix& d);
std::optional<Triple> first_translation_violation_serial(std::span<const std::uint32_t> table,
                                                         std::size_t m, const DistanceMatrix& d);

/// First pair (x, y) with d(f x, f y) != d(x, y); `image` is a map table.
std::optional<std::array<std::size_t, 2>> first_isometry_violation(std::span<const std::size_t> image,
                                                                   const DistanceMatrix& d);
std::optional<std::array<std::size_t, 2>> first_isometry_violation_serial(
    std::span<const std::size_t> image, const DistanceMatrix& d);

}  // namespace projlab::kernels
