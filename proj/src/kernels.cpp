#include "projlab/kernels.hpp"

#include <atomic>
#include <limits>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace projlab::kernels {

void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

DistanceMatrix distance_matrix_serial(const SubspaceSet& set) {
  const std::size_t m = set.size();
  DistanceMatrix d(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const int v = distance(set[i], set[j]);
      d.set(i, j, v);
      d.set(j, i, v);
    }
  return d;
}

DistanceMatrix distance_matrix(const SubspaceSet& set) {
  const auto m = static_cast<std::int64_t>(set.size());
  DistanceMatrix d(set.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = i + 1; j < m; ++j) {
      const int v = distance(set[i], set[j]);
      d.set(i, j, v);
      d.set(j, i, v);
    }
  return d;
}

namespace {

struct HullTask {
  int k;
  std::vector<int> pivots;
};

std::vector<HullTask> hull_tasks(const Ambient& a) {
  std::vector<HullTask> tasks;
  for (int k = 0; k <= a.n(); ++k)
    for (auto& p : pivot_combinations(a.n(), k)) tasks.push_back({k, std::move(p)});
  return tasks;
}

std::pair<std::uint64_t, std::uint64_t> count_task(const Ambient& a, const HullTask& t) {
  std::uint64_t total = 0, trivial = 0;
  for_each_with_pivots(a, t.pivots, [&](const Subspace& x) {
    ++total;
    if (has_trivial_hull(x)) ++trivial;
  });
  return {total, trivial};
}

HullCounts fold(const Ambient& a, const std::vector<HullTask>& tasks,
                const std::vector<std::pair<std::uint64_t, std::uint64_t>>& parts) {
  HullCounts c;
  c.total.assign(a.n() + 1, 0);
  c.trivial.assign(a.n() + 1, 0);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    c.total[tasks[i].k] += parts[i].first;
    c.trivial[tasks[i].k] += parts[i].second;
  }
  return c;
}

}  // namespace

HullCounts trivial_hull_counts_serial(const Ambient& a) {
  const auto tasks = hull_tasks(a);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;
  for (const auto& t : tasks) parts.push_back(count_task(a, t));
  return fold(a, tasks, parts);
}

HullCounts trivial_hull_counts(const Ambient& a) {
  const auto tasks = hull_tasks(a);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> parts(tasks.size());
  const auto count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) parts[i] = count_task(a, tasks[i]);
  return fold(a, tasks, parts);
}

BipartiteGraph disjointness_adjacency_serial(const SubspaceSet& left, const SubspaceSet& right) {
  BipartiteGraph g(static_cast<int>(left.size()), static_cast<int>(right.size()));
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      if (intersection_dim(left[i], right[j]) == 0) g.adj[i].push_back(static_cast<int>(j));
  return g;
}

BipartiteGraph disjointness_adjacency(const SubspaceSet& left, const SubspaceSet& right) {
  BipartiteGraph g(static_cast<int>(left.size()), static_cast<int>(right.size()));
  const auto l = static_cast<std::int64_t>(left.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      if (intersection_dim(left[i], right[j]) == 0) g.adj[i].push_back(static_cast<int>(j));
  return g;
}

namespace {

// Scans rows x in parallel; rows beyond the best violating row found so far
// are skipped, and the smallest violating row wins.
template <class RowScan>
std::optional<Triple> first_violation_parallel(std::size_t m, RowScan scan) {
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{none};
  std::vector<std::optional<Triple>> hits(m);
  const auto rows = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t x = 0; x < rows; ++x) {
    if (static_cast<std::size_t>(x) > best.load(std::memory_order_relaxed)) continue;
    hits[x] = scan(static_cast<std::size_t>(x));
    if (hits[x]) {
      std::size_t cur = best.load();
      while (static_cast<std::size_t>(x) < cur && !best.compare_exchange_weak(cur, x)) {
      }
    }
  }
  const std::size_t b = best.load();
  if (b == none) return std::nullopt;
  return hits[b];
}

std::optional<Triple> assoc_row(std::span<const std::uint32_t> t, std::size_t m, std::size_t x) {
  for (std::size_t y = 0; y < m; ++y) {
    const std::size_t xy = t[x * m + y];
    for (std::size_t z = 0; z < m; ++z)
      if (t[xy * m + z] != t[x * m + t[y * m + z]]) return Triple{x, y, z};
  }
  return std::nullopt;
}

std::optional<Triple> translation_row(std::span<const std::uint32_t> t, std::size_t m,
                                      const DistanceMatrix& d, std::size_t x) {
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (d(t[x * m + a], t[x * m + b]) != d(a, b)) return Triple{x, a, b};
  return std::nullopt;
}

}  // namespace

std::optional<Triple> first_associativity_violation_serial(std::span<const std::uint32_t> t,
                                                           std::size_t m) {
  for (std::size_t x = 0; x < m; ++x)
    if (auto w = assoc_row(t, m, x)) return w;
  return std::nullopt;
}

std::optional<Triple> first_associativity_violation(std::span<const std::uint32_t> t, std::size_t m) {
  return first_violation_parallel(m, [&](std::size_t x) { return assoc_row(t, m, x); });
}

std::optional<Triple> first_translation_violation_serial(std::span<const std::uint32_t> t,
                                                         std::size_t m, const DistanceMatrix& d) {
  for (std::size_t x = 0; x < m; ++x)
    if (auto w = translation_row(t, m, d, x)) return w;
  return std::nullopt;
}

std::optional<Triple> first_translation_violation(std::span<const std::uint32_t> t, std::size_t m,
                                                  const DistanceMatrix& d) {
  return first_violation_parallel(m, [&](std::size_t x) { return translation_row(t, m, d, x); });
}

std::optional<std::array<std::size_t, 2>> first_isometry_violation_serial(
    std::span<const std::size_t> image, const DistanceMatrix& d) {
  const std::size_t m = image.size();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (d(image[x], image[y]) != d(x, y)) return std::array{x, y};
  return std::nullopt;
}

std::optional<std::array<std::size_t, 2>> first_isometry_violation(std::span<const std::size_t> image,
                                                                   const DistanceMatrix& d) {
  const std::size_t m = image.size();
  auto w = first_violation_parallel(m, [&](std::size_t x) -> std::optional<Triple> {
    for (std::size_t y = 0; y < m; ++y)
      if (d(image[x], image[y]) != d(x, y)) return Triple{x, y, 0};
    return std::nullopt;
  });
  if (!w) return std::nullopt;
  return std::array{(*w)[0], (*w)[1]};
}

}  // namespace projlab::kernels
