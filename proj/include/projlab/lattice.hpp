#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "projlab/complement.hpp"
#include "projlab/projspace.hpp"
#include "projlab/report.hpp"

namespace projlab {

/// Finite bounded lattice with a rank function, held as operation tables
/// over element indices 0..size-1.
class Lattice {
 public:
  enum class Kind { boolean, powerset, linear, custom };

  /// Validates the lattice and rank laws; throws std::invalid_argument with
  /// the failing law otherwise.
  Lattice(std::string name, std::vector<std::uint32_t> join, std::vector<std::uint32_t> meet,
          std::vector<int> rank, std::size_t bottom, std::size_t top, std::vector<std::string> labels);

  /// {0,1}^n with | and &; element index = bit mask, coordinate i in bit i.
  static Lattice boolean(int n);
  /// Subsets of {1..n} with union and intersection, computed on explicit
  /// element lists; element index = mask of the characteristic vector.
  static Lattice powerset(int n);
  /// P_q(n) with subspace sum and intersection, indexed in canonical order.
  static Lattice linear(int q, int n);

  /// Largest carrier accepted.
  static constexpr std::size_t kMaxSize = 1024;

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return rank_.size(); }
  std::size_t join(std::size_t x, std::size_t y) const { return join_[x * size() + y]; }
  std::size_t meet(std::size_t x, std::size_t y) const { return meet_[x * size() + y]; }
  int rank(std::size_t x) const { return rank_[x]; }
  bool leq(std::size_t x, std::size_t y) const { return meet(x, y) == x; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  const std::string& label(std::size_t x) const { return labels_[x]; }
  /// Members of a power-set element, 1-based.
  const std::vector<int>& members(std::size_t x) const { return sets_.at(x); }
  /// Subspace behind an element of a linear lattice.
  /// Throws std::logic_error on other lattice kinds.
  const SubspaceSet& subspaces() const;

 private:
  Kind kind_ = Kind::custom;
  std::string name_;
  std::vector<std::uint32_t> join_;
  std::vector<std::uint32_t> meet_;
  std::vector<int> rank_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> sets_;
  std::optional<SubspaceSet> subspaces_;

  friend PropertyReport verify_lattice_laws(const Lattice& lat);
};

/// r(x v y) - r(x ^ y) and r(x) + r(y) - 2 r(x ^ y).
struct DistanceForms {
  int join_form = 0;
  int rank_form = 0;
};
DistanceForms lattice_distance_forms(const Lattice& lat, std::size_t x, std::size_t y);
/// Throws std::logic_error if the two forms disagree.
int lattice_distance(const Lattice& lat, std::size_t x, std::size_t y);

/// Lattice axioms (commutativity, associativity, idempotence, absorption,
/// bounds), the rank laws (modularity, covers add one, bottom has rank 0),
/// and agreement of both distance forms, exhaustively.
PropertyReport verify_lattice_laws(const Lattice& lat);

/// Characteristic-vector correspondence between PowerSet(n) and Boolean(n):
/// chi(X u Y) = chi X | chi Y, chi(X n Y) = chi X & chi Y, |X| = wt(chi X),
/// d(X, Y) = Hamming distance of chi X and chi Y.
PropertyReport verify_chi_identities(int n);

/// Bijection table on a lattice's element indices.
using LatticeMap = std::vector<std::size_t>;

class QSet {
 public:
  static constexpr unsigned Q1 = 1, Q2 = 2, Q3 = 4, Q4 = 8, Q5 = 16;
  constexpr QSet() = default;
  constexpr explicit QSet(unsigned bits) : bits_(bits & 31u) {}
  /// Parses "Q1,Q5"; throws std::invalid_argument on unknown names.
  static QSet parse(const std::string& text);
  static QSet all() { return QSet(31); }
  bool has(unsigned q) const { return (bits_ & q) != 0; }
  unsigned bits() const { return bits_; }
  std::string to_string() const;

 private:
  unsigned bits_ = 0;
};

/// Q1 antitone, Q2 join to meet, Q3 meet to join, Q4 rank complement,
/// Q5 isometry; witnesses are element indices. Throws std::invalid_argument
/// unless f is a bijection of the carrier.
PropertyReport check_Q(const Lattice& lat, const LatticeMap& f, QSet props = QSet::all());

/// Bit complement, set complement, or orthogonal complement, by lattice kind.
LatticeMap complement_map(const Lattice& lat);
LatticeMap identity_map(const Lattice& lat);
/// f with the images of i and j exchanged.
LatticeMap swap_images(LatticeMap f, std::size_t i, std::size_t j);

/// Known antitone maps, every single swap of the complement map, and
/// `random_maps` uniformly random bijections from a 64-bit Mersenne Twister seeded with `seed`.
std::vector<LatticeMap> lemma_corpus(const Lattice& lat, std::size_t random_maps, std::uint64_t seed);

struct LemmaRun {
  /// Q1..Q5 verdicts per map.
  std::vector<std::array<bool, 5>> vectors;
  /// Implications: Q1, Q2, Q3 equivalent; Q1 => Q4; Q4 and Q5 together equivalent to Q1.
  /// Witness is the index of the first offending map.
  PropertyReport report;
  std::size_t antitone_maps = 0;
};
LemmaRun lemma_equivalence_tests(const Lattice& lat, std::span<const LatticeMap> maps);

struct BoxplusResult {
  /// x + y = (x ^ f y) v (y ^ f x), row-major.
  std::vector<std::uint32_t> table;
  /// associativity, commutativity, identity (bottom), self-inverse, isometry.
  PropertyReport report;
};
BoxplusResult boxplus_from_complement(const Lattice& lat, const LatticeMap& f);

/// Searches P_q(n) for a bijection with P1 that reverses inclusion.
/// Refused outside q = 2, n <= 3 and q = 3, n <= 2.
ComplementSearchResult theorem9_search(const Ambient& ambient);

}  // namespace projlab
