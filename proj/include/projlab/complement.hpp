#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "projlab/kernels.hpp"
#include "projlab/projspace.hpp"
#include "projlab/report.hpp"

namespace projlab {

/// Subset of the complement properties P1 (direct sum), P2 (level
/// bijection), P3 (involution), P4 (isometry).
class PropertySet {
 public:
  static constexpr unsigned P1 = 1, P2 = 2, P3 = 4, P4 = 8;

  constexpr PropertySet() = default;
  constexpr explicit PropertySet(unsigned bits) : bits_(bits & 15u) {}
  /// Parses "P1,P3"; throws std::invalid_argument on unknown names.
  static PropertySet parse(const std::string& text);
  static PropertySet all() { return PropertySet(15); }

  bool has(unsigned p) const { return (bits_ & p) != 0; }
  unsigned bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  std::string to_string() const;
  friend bool operator==(PropertySet, PropertySet) = default;

 private:
  unsigned bits_ = 0;
};

/// Total function table f : U -> U on a subspace set.
class SubspaceMap {
 public:
  /// Throws std::invalid_argument if the table is not total or leaves U.
  SubspaceMap(SubspaceSet domain, std::vector<std::size_t> image);
  /// Tabulates `f`; every image must be a member of `domain`.
  static SubspaceMap tabulate(SubspaceSet domain, const std::function<Subspace(const Subspace&)>& f);

  const SubspaceSet& domain() const { return domain_; }
  std::span<const std::size_t> image() const { return image_; }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const Subspace& apply(const Subspace& x) const { return domain_[image_[domain_.require_index(x)]]; }
  std::size_t size() const { return image_.size(); }

  friend bool operator==(const SubspaceMap&, const SubspaceMap&) = default;

 private:
  SubspaceSet domain_;
  std::vector<std::size_t> image_;
};

/// Verdicts for the requested subset of P1..P4 with first witnesses.
PropertyReport check_properties(const SubspaceMap& f, PropertySet props = PropertySet::all());
/// Same, reusing a precomputed distance matrix of f's domain for P4.
PropertyReport check_properties(const SubspaceMap& f, PropertySet props, const kernels::DistanceMatrix& d);

/// f(X) = X^perp on all of P_q(n).
SubspaceMap build_orthogonal_map(const Ambient& ambient);

/// Pairs level k with level n-k through perfect matchings of the
/// disjointness graphs; the middle level of even n is matched against a
/// second copy of itself. Satisfies P1 and P2. A nonzero seed relabels the
/// graphs before matching.
SubspaceMap build_matching_map(const Ambient& ambient, std::uint64_t seed = 0);

/// Parity obstruction to an involutive complement map: the middle Gaussian
/// coefficient is odd, so some middle-level subspace would be its own image.
struct Nonexistence {
  int n = 0;
  int q = 0;
  BigInt middle_gaussian;
  std::string statement;
};

/// P1+P2+P3 map when n is odd or q is odd, otherwise the parity certificate.
std::variant<SubspaceMap, Nonexistence> build_involutive_map(const Ambient& ambient, std::uint64_t seed = 0);

struct VSetComplement {
  SubspaceSet vset;
  SubspaceMap map;
};

/// V_q(n) = {X : X meet X^perp = {0}} with f = dual restricted to it.
VSetComplement build_vset_complement(const Ambient& ambient);

struct HullRatio {
  int q = 0;
  int n = 0;
  std::uint64_t trivial = 0;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> trivial_by_dim;
  std::vector<std::uint64_t> total_by_dim;
  /// Reduced fraction trivial / total.
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

/// |V_q(n)| / |P_q(n)| by streaming enumeration (never materialized).
HullRatio hull_ratio(const Ambient& ambient, bool parallel = true);

/// prod_{i>=1} 1/(1 + q^-i), truncated once q^-i < tolerance.
double limit_product(double q, double tolerance = 1e-15);

enum class SearchMode { find_one, prove_none };

struct ComplementSearchResult {
  std::optional<SubspaceMap> map;
  ExhaustionCertificate certificate;
};

/// Constraint set for the backtracking map search over all of P_q(n).
struct MapSearchOptions {
  PropertySet props;
  /// Require x <= y => f(x) >= f(y).
  bool antitone = false;
  /// Require f to be injective (bijective on the finite domain).
  bool bijective = false;
};

/// Backtracking over assignments, 1-dimensional subspaces first, then
/// (n-1)-dimensional, then the rest by dimension. Candidates honour P1
/// and P2 up front; P2 injectivity, P3 consistency, P4 distances and
/// antitonicity are checked after each assignment against everything
/// assigned before. Stops at the first complete map.
ComplementSearchResult search_maps(const Ambient& ambient, const MapSearchOptions& options);

/// True for q = 2, n <= 3 and q = 3, n <= 2.
bool search_feasible(const Ambient& ambient);

/// Throws std::invalid_argument outside search_feasible.
ComplementSearchResult exhaustive_complement_search(const Ambient& ambient, PropertySet props,
                                                    SearchMode mode);

/// Every triple of distinct (n-1)-dimensional members
/// meets in dimension n-3. Witness is the first failing triple.
Verdict hyperplane_triple_check(const SubspaceSet& set);
/// Over F_2 with f passing P1-P4: one-dimensional count <= 2^(n-1) and the
/// triple condition. Throws std::invalid_argument if f is not a complement.
PropertyReport verify_prop1_lemma5(const SubspaceSet& set, const SubspaceMap& f);

enum class Existence { constructed, nonexistent, out_of_scope };
std::string to_string(Existence e);

struct Table2Row {
  PropertySet props;
  Existence verdict = Existence::out_of_scope;
  std::string method;
  std::optional<SubspaceMap> map;
  std::optional<ExhaustionCertificate> certificate;
  std::optional<Nonexistence> parity;
  /// Published existence answer for the row and the argument behind it.
  std::string expected_existence;
  std::string expected_basis;
  bool expected = false;
  bool agrees = false;
  std::string note;
};

struct Table2Report {
  int q = 0;
  int n = 0;
  std::vector<Table2Row> rows;
  /// P1 with P3 or P4 forces P2, checked on every constructed map.
  Verdict forced_p2;
};

/// The fifteen nonempty property subsets, in the order of the existence table.
std::vector<PropertySet> table2_property_order();
Table2Report table2_report(int q, int n);

}  // namespace projlab
