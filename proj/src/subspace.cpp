#include "projlab/subspace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace projlab {

Ambient::Ambient(int q, int n) : field_(&Field::get(q)), n_(n) {
  if (n < 1 || n > max_dimension(q))
    throw std::invalid_argument("ambient dimension n=" + std::to_string(n) +
                                " outside [1, " + std::to_string(max_dimension(q)) +
                                "] for q=" + std::to_string(q));
}

std::string Ambient::describe() const {
  return "F_" + std::to_string(q()) + "^" + std::to_string(n_);
}

int reduce_rows(const Field& f, std::vector<Elem>& rows, int count, int n) {
  int rank = 0;
  for (int col = 0; col < n && rank < count; ++col) {
    int piv = -1;
    for (int r = rank; r < count; ++r)
      if (rows[r * n + col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      std::swap_ranges(rows.begin() + piv * n, rows.begin() + (piv + 1) * n,
                       rows.begin() + rank * n);
    Elem* prow = rows.data() + rank * n;
    const Elem s = f.inv_u(prow[col]);
    if (s != 1)
      for (int c = col; c < n; ++c) prow[c] = f.mul_u(prow[c], s);
    for (int r = 0; r < count; ++r) {
      if (r == rank) continue;
      Elem* row = rows.data() + r * n;
      const Elem factor = row[col];
      if (factor == 0) continue;
      const Elem nf = f.neg_u(factor);
      for (int c = col; c < n; ++c) row[c] = f.add_u(row[c], f.mul_u(nf, prow[c]));
    }
    ++rank;
  }
  return rank;
}

Subspace::Subspace(const Ambient& ambient) : ambient_(ambient), k_(0) {}

Subspace::Subspace(const Ambient& ambient, int k, std::vector<Elem> entries)
    : ambient_(ambient), k_(k), entries_(std::move(entries)) {}

Subspace Subspace::full(const Ambient& ambient) {
  const int n = ambient.n();
  std::vector<Elem> e(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) e[i * n + i] = 1;
  return Subspace(ambient, n, std::move(e));
}

Subspace Subspace::from_rref(const Ambient& ambient, int k, std::vector<Elem> entries) {
  const int n = ambient.n();
  if (k < 0 || k > n || entries.size() != static_cast<std::size_t>(k) * n)
    throw std::invalid_argument("subspace literal has wrong shape");
  for (Elem e : entries)
    if (e >= ambient.q()) throw std::invalid_argument("entry out of range for field");
  int last = -1;
  for (int r = 0; r < k; ++r) {
    int piv = -1;
    for (int c = 0; c < n; ++c)
      if (entries[r * n + c] != 0) {
        piv = c;
        break;
      }
    if (piv < 0 || piv <= last || entries[r * n + piv] != 1)
      throw std::invalid_argument("not in canonical form");
    for (int o = 0; o < k; ++o)
      if (o != r && entries[o * n + piv] != 0) throw std::invalid_argument("not in canonical form");
    last = piv;
  }
  return Subspace(ambient, k, std::move(entries));
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> p;
  p.reserve(k_);
  const int n = this->n();
  for (int r = 0; r < k_; ++r) {
    int c = 0;
    while (entries_[r * n + c] == 0) ++c;
    p.push_back(c);
  }
  return p;
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> b;
  for (int r = 0; r < k_; ++r) b.emplace_back(row(r).begin(), row(r).end());
  return b;
}

std::vector<Vector> Subspace::vectors() const {
  const Field& f = ambient_.field();
  const int n = this->n(), q = f.q();
  std::vector<Vector> out;
  std::vector<int> coef(k_, 0);
  while (true) {
    Vector v(n, 0);
    for (int r = 0; r < k_; ++r) {
      if (coef[r] == 0) continue;
      for (int c = 0; c < n; ++c)
        v[c] = f.add_u(v[c], f.mul_u(static_cast<Elem>(coef[r]), at(r, c)));
    }
    out.push_back(std::move(v));
    int i = 0;
    while (i < k_ && ++coef[i] == q) coef[i++] = 0;
    if (i == k_) break;
  }
  return out;
}

bool Subspace::contains(std::span<const Elem> v) const {
  if (static_cast<int>(v.size()) != n()) throw std::invalid_argument("vector length mismatch");
  // Subtract the pivot combination; v is inside iff nothing remains.
  const Field& f = ambient_.field();
  Vector rest(v.begin(), v.end());
  const auto piv = pivots();
  for (int r = 0; r < k_; ++r) {
    const Elem c = rest[piv[r]];
    if (c == 0) continue;
    const Elem nc = f.neg_u(c);
    for (int j = 0; j < n(); ++j) rest[j] = f.add_u(rest[j], f.mul_u(nc, at(r, j)));
  }
  return std::all_of(rest.begin(), rest.end(), [](Elem e) { return e == 0; });
}

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << "<";
  for (int r = 0; r < k_; ++r) {
    if (r) os << ",";
    os << "(";
    for (int c = 0; c < n(); ++c) {
      if (c) os << (ambient_.q() > 9 ? "," : "");
      os << static_cast<int>(at(r, c));
    }
    os << ")";
  }
  os << ">";
  return os.str();
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.k_ == b.k_ && a.entries_ == b.entries_;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_.q() <=> b.ambient_.q(); c != 0) return c;
  if (auto c = a.n() <=> b.n(); c != 0) return c;
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                b.entries_.begin(), b.entries_.end());
}

Subspace canonicalize_rows(const Ambient& ambient, std::vector<Elem> rows, int count) {
  const int n = ambient.n();
  if (rows.size() != static_cast<std::size_t>(count) * n)
    throw std::invalid_argument("dimension mismatch: row length differs from ambient n");
  const int rank = reduce_rows(ambient.field(), rows, count, n);
  rows.resize(static_cast<std::size_t>(rank) * n);
  return Subspace(ambient, rank, std::move(rows));
}

Subspace canonicalize(std::span<const Vector> vectors, const Ambient& ambient) {
  const int n = ambient.n();
  std::vector<Elem> rows;
  rows.reserve(vectors.size() * n);
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("dimension mismatch: vector length " + std::to_string(v.size()) +
                                  " in ambient n=" + std::to_string(n));
    for (Elem e : v)
      if (e >= ambient.q()) throw std::out_of_range("vector entry out of range for field");
    rows.insert(rows.end(), v.begin(), v.end());
  }
  return canonicalize_rows(ambient, std::move(rows), static_cast<int>(vectors.size()));
}

namespace {

void require_same(const Subspace& x, const Subspace& y) {
  if (!(x.ambient() == y.ambient()))
    throw std::invalid_argument("ambient mismatch: " + x.ambient().describe() + " vs " +
                                y.ambient().describe());
}

std::vector<Elem> stacked(const Subspace& x, const Subspace& y) {
  std::vector<Elem> rows(x.entries());
  rows.insert(rows.end(), y.entries().begin(), y.entries().end());
  return rows;
}

}  // namespace

Subspace sum(const Subspace& x, const Subspace& y) {
  require_same(x, y);
  return canonicalize_rows(x.ambient(), stacked(x, y), x.dim() + y.dim());
}

int sum_dim(const Subspace& x, const Subspace& y) {
  require_same(x, y);
  auto rows = stacked(x, y);
  return reduce_rows(x.ambient().field(), rows, x.dim() + y.dim(), x.n());
}

int intersection_dim(const Subspace& x, const Subspace& y) {
  return x.dim() + y.dim() - sum_dim(x, y);
}

Subspace dual(const Subspace& x) {
  const Ambient& a = x.ambient();
  const Field& f = a.field();
  const int n = a.n(), k = x.dim();
  const auto piv = x.pivots();
  std::vector<bool> is_pivot(n, false);
  for (int p : piv) is_pivot[p] = true;
  std::vector<Elem> rows;
  rows.reserve(static_cast<std::size_t>(n - k) * n);
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vector v(n, 0);
    v[j] = 1;
    for (int r = 0; r < k; ++r) v[piv[r]] = f.neg_u(x.at(r, j));
    rows.insert(rows.end(), v.begin(), v.end());
  }
  return canonicalize_rows(a, std::move(rows), n - k);
}

Subspace intersect(const Subspace& x, const Subspace& y) {
  require_same(x, y);
  return dual(sum(dual(x), dual(y)));
}

int distance(const Subspace& x, const Subspace& y) {
  return 2 * sum_dim(x, y) - x.dim() - y.dim();
}

Subspace hull(const Subspace& x) { return intersect(x, dual(x)); }

Elem inner_product(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  Elem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add_u(s, f.mul_u(a[i], b[i]));
  return s;
}

bool has_trivial_hull(const Subspace& x) {
  const int k = x.dim();
  if (k == 0) return true;
  const Field& f = x.ambient().field();
  std::vector<Elem> gram(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) gram[i * k + j] = gram[j * k + i] = inner_product(f, x.row(i), x.row(j));
  return reduce_rows(f, gram, k, k) == k;
}

Subspace transform(const Subspace& x, std::span<const Elem> m) {
  const Ambient& a = x.ambient();
  const Field& f = a.field();
  const int n = a.n();
  if (m.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("matrix shape mismatch");
  std::vector<Elem> rows(static_cast<std::size_t>(x.dim()) * n, 0);
  for (int r = 0; r < x.dim(); ++r)
    for (int i = 0; i < n; ++i) {
      const Elem c = x.at(r, i);
      if (c == 0) continue;
      for (int j = 0; j < n; ++j) rows[r * n + j] = f.add_u(rows[r * n + j], f.mul_u(c, m[i * n + j]));
    }
  return canonicalize_rows(a, std::move(rows), x.dim());
}

Subspace direct_sum(const Subspace& x, const Subspace& y) {
  if (x.ambient().q() != y.ambient().q()) throw std::invalid_argument("field mismatch in direct sum");
  const Ambient a(x.ambient().q(), x.n() + y.n());
  const int n = a.n();
  std::vector<Elem> rows(static_cast<std::size_t>(x.dim() + y.dim()) * n, 0);
  for (int r = 0; r < x.dim(); ++r)
    for (int c = 0; c < x.n(); ++c) rows[r * n + c] = x.at(r, c);
  for (int r = 0; r < y.dim(); ++r)
    for (int c = 0; c < y.n(); ++c) rows[(x.dim() + r) * n + x.n() + c] = y.at(r, c);
  return canonicalize_rows(a, std::move(rows), x.dim() + y.dim());
}

int weight(std::span<const Elem> v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

}  // namespace projlab
