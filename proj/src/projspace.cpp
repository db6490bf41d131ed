#include "projlab/projspace.hpp"

#include <algorithm>
#include <stdexcept>

#include "projlab/kernels.hpp"

namespace projlab {

SubspaceSet::SubspaceSet(const Ambient& ambient, std::vector<Subspace> members)
    : ambient_(ambient), members_(std::move(members)) {
  for (const auto& m : members_)
    if (!(m.ambient() == ambient_)) throw std::invalid_argument("subspace set member from a different ambient");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw std::invalid_argument("subspace set contains duplicates");
}

std::optional<std::size_t> SubspaceSet::index_of(const Subspace& x) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || !(*it == x)) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

std::size_t SubspaceSet::require_index(const Subspace& x) const {
  if (auto i = index_of(x)) return *i;
  throw std::out_of_range("subspace " + x.to_string() + " is not a member of the set");
}

std::vector<std::size_t> SubspaceSet::level(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].dim() == k) out.push_back(i);
  return out;
}

std::uint64_t DimensionDistribution::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

BigInt gaussian(int n, int k, long long q) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("gaussian coefficient needs 0 <= k <= n");
  if (!is_prime_power(q)) throw std::invalid_argument("gaussian coefficient needs a prime power q");
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= BigInt(boost::multiprecision::pow(BigInt(q), n - i)) - 1;
    den *= BigInt(boost::multiprecision::pow(BigInt(q), i + 1)) - 1;
  }
  return num / den;
}

BigInt projective_size(int n, long long q) {
  BigInt total = 0;
  for (int k = 0; k <= n; ++k) total += gaussian(n, k, q);
  return total;
}

std::vector<std::vector<int>> pivot_combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

void for_each_with_pivots(const Ambient& ambient, const std::vector<int>& pivots,
                          const std::function<void(const Subspace&)>& visit) {
  const int n = ambient.n(), k = static_cast<int>(pivots.size()), q = ambient.q();
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  std::vector<Elem> entries(static_cast<std::size_t>(k) * n, 0);
  for (int r = 0; r < k; ++r) {
    entries[r * n + pivots[r]] = 1;
    for (int c = pivots[r] + 1; c < n; ++c)
      if (!is_pivot[c]) free.push_back(static_cast<std::size_t>(r) * n + c);
  }
  while (true) {
    visit(Subspace::trusted(ambient, k, entries));
    std::size_t i = 0;
    while (i < free.size() && ++entries[free[i]] == q) entries[free[i++]] = 0;
    if (i == free.size()) break;
  }
}

void for_each_in_grassmannian(const Ambient& ambient, int k,
                              const std::function<void(const Subspace&)>& visit) {
  if (k < 0 || k > ambient.n()) throw std::invalid_argument("dimension k out of range");
  for (const auto& piv : pivot_combinations(ambient.n(), k)) for_each_with_pivots(ambient, piv, visit);
}

namespace {

void guard(const BigInt& count) {
  if (count > BigInt(kEnumerationLimit))
    throw std::length_error("enumeration of " + count.str() + " subspaces exceeds the limit of " +
                            std::to_string(kEnumerationLimit));
}

}  // namespace

SubspaceSet enum_grassmannian(const Ambient& ambient, int k) {
  if (k < 0 || k > ambient.n()) throw std::invalid_argument("dimension k out of range");
  const BigInt expected = gaussian(ambient.n(), k, ambient.q());
  guard(expected);
  std::vector<Subspace> members;
  members.reserve(expected.convert_to<std::size_t>());
  for_each_in_grassmannian(ambient, k, [&](const Subspace& x) { members.push_back(x); });
  return SubspaceSet(ambient, std::move(members));
}

SubspaceSet enum_projective(const Ambient& ambient) {
  guard(projective_size(ambient.n(), ambient.q()));
  std::vector<Subspace> members;
  for (int k = 0; k <= ambient.n(); ++k)
    for_each_in_grassmannian(ambient, k, [&](const Subspace& x) { members.push_back(x); });
  return SubspaceSet(ambient, std::move(members));
}

DimensionDistribution dimension_distribution(const SubspaceSet& set) {
  DimensionDistribution d;
  d.counts.assign(set.ambient().n() + 1, 0);
  for (const auto& x : set) ++d.counts[x.dim()];
  return d;
}

SubspaceSet dualize_set(const SubspaceSet& set) {
  std::vector<Subspace> out;
  out.reserve(set.size());
  for (const auto& x : set) out.push_back(dual(x));
  return SubspaceSet(set.ambient(), std::move(out));
}

DisjointnessGraph disjointness_graph(const Ambient& ambient, int k) {
  auto left = enum_grassmannian(ambient, k);
  auto right = enum_grassmannian(ambient, ambient.n() - k);
  auto graph = kernels::disjointness_adjacency(left, right);
  return {std::move(left), std::move(right), std::move(graph)};
}

DimensionDistribution convolve(const DimensionDistribution& a, const DimensionDistribution& b) {
  DimensionDistribution c;
  if (a.counts.empty() || b.counts.empty()) return c;
  c.counts.assign(a.counts.size() + b.counts.size() - 1, 0);
  for (std::size_t i = 0; i < a.counts.size(); ++i)
    for (std::size_t j = 0; j < b.counts.size(); ++j) c.counts[i + j] += a.counts[i] * b.counts[j];
  return c;
}

}  // namespace projlab
