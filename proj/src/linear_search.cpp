#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "projlab/linear.hpp"

namespace projlab {

namespace {

constexpr std::size_t kFree = static_cast<std::size_t>(-1);
constexpr std::size_t kGroupLimit = 200'000;
constexpr std::size_t kStoredTables = 4096;

// Labels codewords by F_2^r so that phi(a) + phi(b) = phi(a xor b) is isometric.
class AdditionSearch {
 public:
  AdditionSearch(const SubspaceSet& code, LinearSearchMode mode)
      : code_(code), mode_(mode), m_(code.size()), d_(kernels::distance_matrix(code)),
        phi_(m_, kFree), used_(m_, false) {
    phi_[0] = code.require_index(Subspace(code.ambient()));
    used_[phi_[0]] = true;
  }

  void run() { descend(1); }

  std::vector<AdditionTable> tables;
  std::uint64_t count = 0;
  ExhaustionCertificate cert;

 private:
  bool stop() const { return mode_ != LinearSearchMode::count_all && count > 0; }

  bool fits(std::size_t x, std::size_t c) {
    for (std::size_t a = 1; a < x; ++a) {
      const std::size_t b = a ^ x;
      if (b > x) continue;
      // pair (x, a) lands on b; pair (a, b) lands on x
      if (d_(c, phi_[a]) != code_[phi_[b]].dim()) return false;
      if (d_(phi_[a], phi_[b]) != code_[c].dim()) return false;
    }
    return true;
  }

  void record() {
    ++cert.leaves;
    ++count;
    if (tables.size() >= kStoredTables) return;
    std::vector<std::uint32_t> table(m_ * m_);
    for (std::size_t a = 0; a < m_; ++a)
      for (std::size_t b = 0; b < m_; ++b) table[phi_[a] * m_ + phi_[b]] = static_cast<std::uint32_t>(phi_[a ^ b]);
    tables.emplace_back(code_, std::move(table));
  }

  void descend(std::size_t x) {
    if (x == m_) {
      record();
      return;
    }
    const bool unit = std::has_single_bit(x);
    for (std::size_t c = 0; c < m_ && !stop(); ++c) {
      if (used_[c]) continue;
      if (!fits(x, c)) {
        ++cert.prunes["distance"];
      } else {
        ++cert.nodes;
        phi_[x] = c;
        used_[c] = true;
        descend(x + 1);
        used_[c] = false;
        phi_[x] = kFree;
      }
      // a unit vector takes the smallest unused codeword only
      if (unit) break;
    }
  }

  const SubspaceSet& code_;
  LinearSearchMode mode_;
  std::size_t m_;
  kernels::DistanceMatrix d_;
  std::vector<std::size_t> phi_;
  std::vector<bool> used_;
};

using Perm = std::vector<std::size_t>;

// Distance-preserving permutations of the code fixing {0}; nullopt past the limit.
std::optional<std::vector<Perm>> isometry_group(const SubspaceSet& code) {
  const std::size_t m = code.size();
  const auto d = kernels::distance_matrix(code);
  const std::size_t zero = code.require_index(Subspace(code.ambient()));
  std::vector<Perm> group;
  Perm p(m, kFree);
  std::vector<bool> used(m, false);
  bool overflow = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (overflow) return;
    if (i == m) {
      group.push_back(p);
      overflow = group.size() > kGroupLimit;
      return;
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (used[c] || (i == zero) != (c == zero)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = d(i, j) == d(c, p[j]);
      if (!ok) continue;
      p[i] = c;
      used[c] = true;
      rec(i + 1);
      used[c] = false;
      p[i] = kFree;
    }
  };
  rec(0);
  if (overflow) return std::nullopt;
  return group;
}

// Permutations induced by invertible matrices over F_2 that map the code onto itself.
std::vector<Perm> collineation_group(const SubspaceSet& code) {
  const Ambient& a = code.ambient();
  const int n = a.n();
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::vector<Perm> group;
  std::vector<Elem> matrix(cells);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
    for (std::size_t c = 0; c < cells; ++c) matrix[c] = static_cast<Elem>(bits >> c & 1);
    std::vector<Elem> rows = matrix;
    if (reduce_rows(a.field(), rows, n, n) != n) continue;
    Perm p(code.size());
    bool stable = true;
    for (std::size_t i = 0; i < code.size() && stable; ++i) {
      auto idx = code.index_of(transform(code[i], matrix));
      if (!idx) stable = false;
      else p[i] = *idx;
    }
    if (stable) group.push_back(std::move(p));
  }
  return group;
}

std::uint64_t count_orbits(const std::vector<AdditionTable>& tables, const std::vector<Perm>& group) {
  if (tables.empty()) return 0;
  const std::size_t m = tables.front().size();
  std::set<std::vector<std::uint32_t>> canon;
  std::vector<std::uint32_t> image(m * m);
  for (const auto& t : tables) {
    std::vector<std::uint32_t> best;
    for (const auto& p : group) {
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) image[p[x] * m + p[y]] = static_cast<std::uint32_t>(p[t(x, y)]);
      if (best.empty() || image < best) best = image;
    }
    canon.insert(std::move(best));
  }
  return canon.size();
}

}  // namespace

LinearSearchResult search_linear_additions(const SubspaceSet& code, LinearSearchMode mode) {
  const Ambient& a = code.ambient();
  if (a.q() != 2) throw std::invalid_argument("linear additions are searched over F_2 only");
  if (!code.contains(Subspace(a))) throw std::invalid_argument("the null space must be a codeword");
  if (code.size() > kLinearSearchLimit)
    throw std::length_error("linear search refused: " + std::to_string(code.size()) + " codewords, limit " +
                            std::to_string(kLinearSearchLimit));

  LinearSearchResult r;
  const std::size_t m = code.size();
  const std::size_t ones = code.level(1).size();
  if (!std::has_single_bit(m)) {
    r.prefilter = std::to_string(m) + " codewords is not a power of two, so no self-inverse group exists";
  } else if (ones > static_cast<std::size_t>(a.n())) {
    r.prefilter = std::to_string(ones) + " one-dimensional codewords exceed n = " + std::to_string(a.n()) +
                  ", so no isometric addition exists";
  }
  if (r.prefilter) {
    r.certificate.statement = "no isometric addition: " + *r.prefilter;
    r.certificate.exhausted = true;
    ++r.certificate.prunes["prefilter"];
    return r;
  }

  AdditionSearch search(code, mode);
  search.run();
  r.count = search.count;
  r.tables = std::move(search.tables);
  r.certificate = search.cert;
  r.certificate.exhausted = mode == LinearSearchMode::count_all || r.count == 0;
  if (mode == LinearSearchMode::count_all) {
    r.certificate.statement = std::to_string(r.count) + " distinct isometric additions with identity {0}";
    if (r.count > r.tables.size()) {
      r.certificate.statement += "; first " + std::to_string(r.tables.size()) + " kept, orbits not computed";
    } else if (auto g = isometry_group(code)) {
      r.isometry_group_order = g->size();
      r.isometry_orbits = count_orbits(r.tables, *g);
    }
    if (r.count == r.tables.size() && a.n() <= 4) {
      const auto g = collineation_group(code);
      r.collineation_group_order = g.size();
      r.collineation_orbits = count_orbits(r.tables, g);
    }
  } else if (r.count == 0) {
    r.certificate.statement = "no isometric addition with identity {0}; search tree exhausted";
  } else {
    r.certificate.statement = "found an isometric addition with identity {0}";
    if (mode == LinearSearchMode::prove_none) r.certificate.statement += "; the nonexistence claim is refuted";
  }
  for (const auto& t : r.tables) {
    const auto check = check_addition(t, true);
    if (check.classification != Linearity::linear)
      throw std::logic_error("search produced a non-linear table:\n" + check.verdicts.summary());
  }
  return r;
}

}  // namespace projlab
