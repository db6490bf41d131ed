#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "projlab/matching.hpp"
#include "projlab/subspace.hpp"

namespace projlab {

using BigInt = boost::multiprecision::cpp_int;

/// Enumerations larger than this are refused.
inline constexpr std::uint64_t kEnumerationLimit = 100'000'000;

/// Ordered, duplicate-free collection of subspaces of one ambient space.
class SubspaceSet {
 public:
  explicit SubspaceSet(const Ambient& ambient) : ambient_(ambient) {}
  /// Sorts `members`; throws on duplicates or foreign ambients.
  SubspaceSet(const Ambient& ambient, std::vector<Subspace> members);

  const Ambient& ambient() const { return ambient_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const Subspace& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Subspace>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::optional<std::size_t> index_of(const Subspace& x) const;
  /// Throws std::out_of_range when x is not a member.
  std::size_t require_index(const Subspace& x) const;
  bool contains(const Subspace& x) const { return index_of(x).has_value(); }
  /// Indices of the k-dimensional members.
  std::vector<std::size_t> level(int k) const;

  friend bool operator==(const SubspaceSet& a, const SubspaceSet& b) {
    return a.ambient_ == b.ambient_ && a.members_ == b.members_;
  }

 private:
  Ambient ambient_;
  std::vector<Subspace> members_;
};

/// Counts D_0..D_n of members per dimension.
struct DimensionDistribution {
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  friend bool operator==(const DimensionDistribution&, const DimensionDistribution&) = default;
};

/// Bipartite graph G(k): Grassmannian k on the left, n-k on the right, an
/// edge wherever the two subspaces meet only in {0}.
struct DisjointnessGraph {
  SubspaceSet left;
  SubspaceSet right;
  BipartiteGraph graph;
};

/// q-ary Gaussian coefficient [n choose k]_q, exact.
BigInt gaussian(int n, int k, long long q);
/// |P_q(n)| = sum_k [n choose k]_q.
BigInt projective_size(int n, long long q);

/// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> pivot_combinations(int n, int k);

/// Streams every RREF matrix with the given pivot columns (free entries
/// advanced as an odometer). No ordering guarantee across pivot sets.
void for_each_with_pivots(const Ambient& ambient, const std::vector<int>& pivots,
                          const std::function<void(const Subspace&)>& visit);
/// Streams all of G_q(n, k) without materializing it.
void for_each_in_grassmannian(const Ambient& ambient, int k,
                              const std::function<void(const Subspace&)>& visit);

SubspaceSet enum_grassmannian(const Ambient& ambient, int k);
SubspaceSet enum_projective(const Ambient& ambient);
DimensionDistribution dimension_distribution(const SubspaceSet& set);
SubspaceSet dualize_set(const SubspaceSet& set);
DisjointnessGraph disjointness_graph(const Ambient& ambient, int k);

/// Convolution of two dimension distributions.
DimensionDistribution convolve(const DimensionDistribution& a, const DimensionDistribution& b);

}  // namespace projlab
