#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "projlab/complement.hpp"
#include "projlab/kernels.hpp"
#include "projlab/projspace.hpp"
#include "projlab/report.hpp"

// Binary codes in projective space carrying a group operation on codewords.
namespace projlab {

/// m x m operation table on the members of a code, row-major, entries index the code.
class AdditionTable {
 public:
  /// Throws std::invalid_argument on a wrong table size and std::out_of_range
  /// on an entry outside the code.
  AdditionTable(SubspaceSet code, std::vector<std::uint32_t> table);

  const SubspaceSet& code() const { return code_; }
  std::size_t size() const { return code_.size(); }
  std::size_t operator()(std::size_t x, std::size_t y) const { return table_[x * code_.size() + y]; }
  const Subspace& add(const Subspace& x, const Subspace& y) const {
    return code_[(*this)(code_.require_index(x), code_.require_index(y))];
  }
  std::span<const std::uint32_t> table() const { return table_; }

  friend bool operator==(const AdditionTable&, const AdditionTable&) = default;

 private:
  SubspaceSet code_;
  std::vector<std::uint32_t> table_;
};

enum class Linearity {
  linear,             // isometric, self-inverse abelian group with identity {0}
  quasi_linear,       // as above without isometry
  offset_identity,    // isometric self-inverse abelian group, identity other than {0}
  none,
};
std::string to_string(Linearity l);

struct LinearityReport {
  PropertyReport verdicts;  // closure, associativity, commutativity, identity, self-inverse, isometry
  std::optional<std::size_t> identity;
  bool null_identity = false;
  Linearity classification = Linearity::none;
};

/// Checks the group axioms, the identity convention, self-inverse and
/// translation invariance of distances. With `require_null_identity` the
/// identity must be {0}, which must then be a codeword (std::invalid_argument otherwise).
LinearityReport check_addition(const AdditionTable& t, bool require_null_identity = true);

/// All spans of subsets of an F_2 basis; addition is symmetric difference
/// of the spanning subsets. Throws std::invalid_argument on a dependent or
/// short basis.
AdditionTable build_basis_code(const Ambient& ambient, std::span<const Vector> basis);
/// Standard basis e_1..e_n of F_2^n.
AdditionTable build_basis_code(int n);

/// {0, a^i, a^(i+1), a^(i+3)} in F_8 with a^3 = a + 1, written over F_2^3 in the basis {1, a, a^2}.
Subspace psi_member(int i);
/// {0} and the seven planes psi_member(0..6); psi_i + psi_j adds the
/// three generators pointwise.
AdditionTable build_psi_code();

/// Row spaces of [I_k | A] over F_2 with the columns optionally permuted
/// (permutation[j] is the new position of column j). Addition adds the A parts;
/// the identity is [I_k | 0].
AdditionTable build_lifted_code(const Ambient& ambient, int k, std::span<const int> permutation = {});
/// Codeword with A-part `a` (k x (n-k), row-major) in a lifted code.
Subspace lifted_member(const Ambient& ambient, int k, std::span<const Elem> a, std::span<const int> permutation = {});

/// Block-diagonal X1 + X2 in F_2^(n1+n2) with componentwise addition.
/// Throws std::invalid_argument unless both inputs are linear.
AdditionTable build_product_code(const AdditionTable& a, const AdditionTable& b);

/// f(X) = F_2^n + X under the code's addition; checked for P1-P4.
SubspaceMap derive_complement_from_linear(const AdditionTable& t);

/// For a linear code: dim(X+Y) = d(X,Y), cancellation Z = X+Y => Y = X+Z,
/// X+Y equals the subspace sum for disjoint X and Y, at most n one-dimensional codewords.
PropertyReport verify_linear_lemmas(const AdditionTable& t);

/// {0}, the 2^(n-1) - 1 planes through <e_1>, and the 2^(n-1) hyperplanes
/// missing <e_1>. Size 2^n; the addition is left to search_linear_additions.
SubspaceSet build_pencil_set(int n);

enum class LinearSearchMode { find_one, count_all, prove_none };

struct LinearSearchResult {
  /// Filter that decided the instance before any search, if one fired.
  std::optional<std::string> prefilter;
  /// Found tables: at most one in find/prove-none mode; in count mode the
  /// first 4096, and orbits are computed only when all of them were kept.
  std::vector<AdditionTable> tables;
  std::uint64_t count = 0;
  /// Orbits of the found tables under relabelings of the code that
  /// preserve all distances (count mode, when the group is small enough).
  std::optional<std::uint64_t> isometry_orbits;
  std::optional<std::uint64_t> isometry_group_order;
  /// Orbits under the invertible linear maps of F_2^n that fix the code (n <= 4).
  std::optional<std::uint64_t> collineation_orbits;
  std::optional<std::uint64_t> collineation_group_order;
  ExhaustionCertificate certificate;
};

/// Largest code accepted by the search.
inline constexpr std::size_t kLinearSearchLimit = 16;

/// Enumerates isometric self-inverse additions with identity {0} on `code`.
/// Each addition is an elementary abelian 2-group, so it is tabulated through
/// a bijection phi : F_2^r -> code with phi(0) = {0}; the images of the unit
/// vectors are forced to the smallest unused codeword, which visits every
/// distinct table exactly once. Non-power-of-two sizes and codes with more
/// than n one-dimensional members are rejected before searching.
LinearSearchResult search_linear_additions(const SubspaceSet& code, LinearSearchMode mode);

struct SizeVerdict {
  std::uint64_t size = 0;
  bool eliminated = false;
  std::string reason;
};

struct LinearSizeBound {
  int n = 0;
  std::vector<SizeVerdict> sizes;  // every size above 2^n up to |P_2(n)|
  bool established = false;        // every size above 2^n eliminated
};

/// Rules out linear codes larger than 2^n in P_2(n) by size parity and the
/// one-dimensional count: a code of size s holds at least s - (|P_2(n)| - (2^n - 1))
/// one-dimensional members.
LinearSizeBound linear_size_bound(int n);

}  // namespace projlab
