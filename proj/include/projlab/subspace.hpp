#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "projlab/field.hpp"

namespace projlab {

using Vector = std::vector<Elem>;

/// F_q^n with enumeration-feasible bounds: n <= 16 when q = 2, n <= 8 otherwise.
class Ambient {
 public:
  Ambient(int q, int n);

  int q() const { return field_->q(); }
  int n() const { return n_; }
  const Field& field() const { return *field_; }

  static int max_dimension(int q) { return q == 2 ? 16 : 8; }

  friend bool operator==(const Ambient& a, const Ambient& b) {
    return a.q() == b.q() && a.n_ == b.n_;
  }
  std::string describe() const;

 private:
  const Field* field_;
  int n_;
};

/// A subspace of F_q^n held as its unique reduced row echelon basis.
///
/// Rows are stored row-major in `entries()` (k * n elements). Two subspaces
/// are equal iff their RREF matrices are equal. The total order is
/// (q, n, k, entries lexicographically), which fixes the order of every set,
/// map table and search transcript.
class Subspace {
 public:
  /// The null space {0}.
  explicit Subspace(const Ambient& ambient);

  static Subspace full(const Ambient& ambient);
  /// Validates RREF; throws std::invalid_argument "not in canonical form".
  static Subspace from_rref(const Ambient& ambient, int k, std::vector<Elem> entries);
  /// No validation; for generators that emit RREF by construction.
  static Subspace trusted(const Ambient& ambient, int k, std::vector<Elem> entries) {
    return Subspace(ambient, k, std::move(entries));
  }

  const Ambient& ambient() const { return ambient_; }
  int dim() const { return k_; }
  int n() const { return ambient_.n(); }
  bool is_null() const { return k_ == 0; }
  bool is_full() const { return k_ == ambient_.n(); }

  Elem at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * n() + c]; }
  std::span<const Elem> row(int r) const {
    return {entries_.data() + static_cast<std::size_t>(r) * n(), static_cast<std::size_t>(n())};
  }
  const std::vector<Elem>& entries() const { return entries_; }
  std::vector<int> pivots() const;
  std::vector<Vector> basis() const;
  /// All q^k vectors of the subspace, in odometer order over the basis.
  std::vector<Vector> vectors() const;
  bool contains(std::span<const Elem> v) const;

  std::string to_string() const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  Subspace(const Ambient& ambient, int k, std::vector<Elem> entries);
  friend Subspace canonicalize(std::span<const Vector> vectors, const Ambient& ambient);
  friend Subspace canonicalize_rows(const Ambient& ambient, std::vector<Elem> rows, int count);

  Ambient ambient_;
  int k_;
  std::vector<Elem> entries_;
};

/// RREF basis of the span of `vectors`.
Subspace canonicalize(std::span<const Vector> vectors, const Ambient& ambient);
/// Same, for `count` rows stored row-major in `rows`.
Subspace canonicalize_rows(const Ambient& ambient, std::vector<Elem> rows, int count);

/// In-place reduction to RREF; returns the rank. Nonzero rows come first.
int reduce_rows(const Field& field, std::vector<Elem>& rows, int count, int n);

Subspace sum(const Subspace& x, const Subspace& y);
/// Meet computed through duality: (x^perp + y^perp)^perp.
Subspace intersect(const Subspace& x, const Subspace& y);
/// Orthogonal complement under the standard inner product.
Subspace dual(const Subspace& x);
/// dim X + dim Y - 2 dim(X meet Y).
int distance(const Subspace& x, const Subspace& y);
int sum_dim(const Subspace& x, const Subspace& y);
int intersection_dim(const Subspace& x, const Subspace& y);
Subspace hull(const Subspace& x);
/// X meet X^perp = {0}, decided by nonsingularity of the Gram matrix G G^T.
bool has_trivial_hull(const Subspace& x);

/// Image of x under v -> v M for an n x n matrix M (row-major).
Subspace transform(const Subspace& x, std::span<const Elem> matrix);
/// Block embedding of x (F^n1) and y (F^n2) as x (+) y in F^(n1+n2).
Subspace direct_sum(const Subspace& x, const Subspace& y);

Elem inner_product(const Field& field, std::span<const Elem> a, std::span<const Elem> b);
int weight(std::span<const Elem> v);

}  // namespace projlab
