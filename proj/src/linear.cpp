#include "projlab/linear.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace projlab {

AdditionTable::AdditionTable(SubspaceSet code, std::vector<std::uint32_t> table)
    : code_(std::move(code)), table_(std::move(table)) {
  const std::size_t m = code_.size();
  if (table_.size() != m * m)
    throw std::invalid_argument("addition table has " + std::to_string(table_.size()) + " entries, expected " +
                                std::to_string(m * m));
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] >= m)
      throw std::out_of_range("addition table entry (" + std::to_string(i / m) + "," + std::to_string(i % m) +
                              ") = " + std::to_string(table_[i]) + " is not a codeword index");
}

std::string to_string(Linearity l) {
  switch (l) {
    case Linearity::linear: return "linear";
    case Linearity::quasi_linear: return "quasi-linear";
    case Linearity::offset_identity: return "isometric group with non-null identity";
    case Linearity::none: return "not a self-inverse abelian group";
  }
  return "?";
}

LinearityReport check_addition(const AdditionTable& t, bool require_null_identity) {
  const SubspaceSet& code = t.code();
  const std::size_t m = code.size();
  const auto null_index = code.index_of(Subspace(code.ambient()));
  if (require_null_identity && !null_index)
    throw std::invalid_argument("the null space is not a codeword, so it cannot be the identity");

  LinearityReport r;
  Verdict closure("closure");
  closure.detail = "every entry indexes a codeword";
  r.verdicts.add(closure);

  Verdict assoc("associativity");
  if (auto w = kernels::first_associativity_violation(t.table(), m)) {
    assoc.pass = false;
    assoc.witness = {(*w)[0], (*w)[1], (*w)[2]};
    assoc.detail = "(X+Y)+Z != X+(Y+Z)";
  }
  r.verdicts.add(assoc);

  Verdict comm("commutativity");
  for (std::size_t x = 0; x < m && comm.pass; ++x)
    for (std::size_t y = x + 1; y < m && comm.pass; ++y)
      if (t(x, y) != t(y, x)) {
        comm.pass = false;
        comm.witness = {x, y};
        comm.detail = "X+Y != Y+X";
      }
  r.verdicts.add(comm);

  auto is_identity = [&](std::size_t e) {
    for (std::size_t x = 0; x < m; ++x)
      if (t(e, x) != x || t(x, e) != x) return false;
    return true;
  };
  Verdict ident("identity");
  if (null_index && is_identity(*null_index)) {
    r.identity = null_index;
    r.null_identity = true;
  } else {
    for (std::size_t e = 0; e < m && !r.identity; ++e)
      if (is_identity(e)) r.identity = e;
  }
  if (require_null_identity && !r.null_identity) {
    ident.pass = false;
    ident.witness = {*null_index};
    ident.detail = "{0} is not an identity";
  } else if (!r.identity) {
    ident.pass = false;
    ident.detail = "no codeword is an identity";
  } else {
    ident.detail = "identity " + code[*r.identity].to_string();
  }
  r.verdicts.add(ident);

  Verdict inverse("self-inverse");
  if (!r.identity) {
    inverse.pass = false;
    inverse.detail = "no identity to invert to";
  } else {
    for (std::size_t x = 0; x < m && inverse.pass; ++x)
      if (t(x, x) != *r.identity) {
        inverse.pass = false;
        inverse.witness = {x};
        inverse.detail = "X+X is not the identity";
      }
  }
  r.verdicts.add(inverse);

  Verdict iso("isometry");
  const auto d = kernels::distance_matrix(code);
  if (auto w = kernels::first_translation_violation(t.table(), m, d)) {
    iso.pass = false;
    iso.witness = {(*w)[0], (*w)[1], (*w)[2]};
    iso.detail = "d(X+Y1, X+Y2) = " + std::to_string(d(t((*w)[0], (*w)[1]), t((*w)[0], (*w)[2]))) +
                 " but d(Y1, Y2) = " + std::to_string(d((*w)[1], (*w)[2]));
  }
  r.verdicts.add(iso);

  const bool group = assoc.pass && comm.pass && r.identity && inverse.pass;
  if (group && r.null_identity)
    r.classification = iso.pass ? Linearity::linear : Linearity::quasi_linear;
  else if (group && iso.pass)
    r.classification = Linearity::offset_identity;
  return r;
}

namespace {

void require_binary(const Ambient& a, const char* who) {
  if (a.q() != 2) throw std::invalid_argument(std::string(who) + " works over F_2 only");
}

void require_linear(const AdditionTable& t, const char* who) {
  const auto r = check_addition(t, true);
  if (r.classification != Linearity::linear)
    throw std::invalid_argument(std::string(who) + ": code is not linear:\n" + r.verdicts.summary());
}

void require_own_check(const AdditionTable& t, Linearity expected, bool null_identity, const char* who) {
  const auto r = check_addition(t, null_identity);
  if (r.classification != expected)
    throw std::logic_error(std::string(who) + " produced a table that fails its checker:\n" + r.verdicts.summary());
}

// Builds the table from a labelling of the code by group elements.
AdditionTable tabulate(const Ambient& ambient, const std::vector<Subspace>& by_label,
                       const std::function<std::size_t(std::size_t, std::size_t)>& op) {
  SubspaceSet code(ambient, by_label);
  const std::size_t m = by_label.size();
  std::vector<std::size_t> index(m);
  for (std::size_t l = 0; l < m; ++l) index[l] = code.require_index(by_label[l]);
  std::vector<std::uint32_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[index[a] * m + index[b]] = static_cast<std::uint32_t>(index[op(a, b)]);
  return AdditionTable(std::move(code), std::move(table));
}

}  // namespace

AdditionTable build_basis_code(const Ambient& ambient, std::span<const Vector> basis) {
  require_binary(ambient, "build_basis_code");
  const int n = ambient.n();
  if (static_cast<int>(basis.size()) != n)
    throw std::invalid_argument("basis needs " + std::to_string(n) + " vectors, got " + std::to_string(basis.size()));
  if (canonicalize(basis, ambient).dim() != n) throw std::invalid_argument("basis vectors are dependent");
  const std::size_t m = std::size_t{1} << n;
  std::vector<Subspace> by_mask;
  by_mask.reserve(m);
  for (std::size_t mask = 0; mask < m; ++mask) {
    std::vector<Vector> chosen;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) chosen.push_back(basis[i]);
    by_mask.push_back(canonicalize(chosen, ambient));
  }
  auto t = tabulate(ambient, by_mask, [](std::size_t a, std::size_t b) { return a ^ b; });
  require_own_check(t, Linearity::linear, true, "build_basis_code");
  return t;
}

AdditionTable build_basis_code(int n) {
  const Ambient a(2, n);
  std::vector<Vector> basis(n, Vector(n, 0));
  for (int i = 0; i < n; ++i) basis[i][i] = 1;
  return build_basis_code(a, basis);
}

namespace {

Vector f8_coordinates(Elem e) { return {static_cast<Elem>(e & 1), static_cast<Elem>(e >> 1 & 1), static_cast<Elem>(e >> 2 & 1)}; }

Elem alpha_power(int i) {
  const Field& f = Field::get(8);
  Elem v = 1;
  for (int s = 0; s < ((i % 7) + 7) % 7; ++s) v = f.mul_u(v, 2);
  return v;
}

}  // namespace

Subspace psi_member(int i) {
  const Ambient a(2, 3);
  const std::vector<Vector> gens{f8_coordinates(alpha_power(i)), f8_coordinates(alpha_power(i + 1)),
                                 f8_coordinates(alpha_power(i + 3))};
  return canonicalize(gens, a);
}

AdditionTable build_psi_code() {
  const Ambient a(2, 3);
  const Field& f = Field::get(8);
  // label 0 is {0}, label i+1 is psi_i
  std::vector<Subspace> by_label{Subspace(a)};
  for (int i = 0; i < 7; ++i) by_label.push_back(psi_member(i));
  SubspaceSet code(a, by_label);
  std::vector<std::size_t> index(8);
  for (std::size_t l = 0; l < 8; ++l) index[l] = code.require_index(by_label[l]);
  std::vector<std::uint32_t> table(64);
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      std::size_t label;
      if (x == 0) label = y;
      else if (y == 0) label = x;
      else if (x == y) label = 0;
      else {
        const int i = static_cast<int>(x) - 1, j = static_cast<int>(y) - 1;
        std::vector<Vector> gens;
        for (int s : {0, 1, 3}) gens.push_back(f8_coordinates(f.add_u(alpha_power(i + s), alpha_power(j + s))));
        label = std::find(by_label.begin(), by_label.end(), canonicalize(gens, a)) - by_label.begin();
        if (label == by_label.size()) throw std::logic_error("psi sum left the code");
      }
      table[index[x] * 8 + index[y]] = static_cast<std::uint32_t>(index[label]);
    }
  AdditionTable t(std::move(code), std::move(table));
  require_own_check(t, Linearity::linear, true, "build_psi_code");
  return t;
}

namespace {

void check_lifted_args(const Ambient& ambient, int k, std::span<const int> permutation) {
  require_binary(ambient, "lifted code");
  const int n = ambient.n();
  if (k <= 0 || k >= n) throw std::invalid_argument("lifted code needs 0 < k < n, got k = " + std::to_string(k));
  if (k * (n - k) > 12) throw std::length_error("lifted code with 2^" + std::to_string(k * (n - k)) + " codewords refused");
  if (!permutation.empty()) {
    std::vector<int> p(permutation.begin(), permutation.end());
    std::sort(p.begin(), p.end());
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    if (p != id) throw std::invalid_argument("column permutation is not a permutation of 0..n-1");
  }
}

}  // namespace

Subspace lifted_member(const Ambient& ambient, int k, std::span<const Elem> a, std::span<const int> permutation) {
  const int n = ambient.n();
  if (static_cast<int>(a.size()) != k * (n - k)) throw std::invalid_argument("A-part has the wrong size");
  std::vector<Elem> rows(static_cast<std::size_t>(k) * n, 0);
  for (int r = 0; r < k; ++r) {
    std::vector<Elem> row(n, 0);
    row[r] = 1;
    for (int c = 0; c < n - k; ++c) row[k + c] = a[r * (n - k) + c];
    for (int c = 0; c < n; ++c) rows[r * n + (permutation.empty() ? c : permutation[c])] = row[c];
  }
  return canonicalize_rows(ambient, std::move(rows), k);
}

AdditionTable build_lifted_code(const Ambient& ambient, int k, std::span<const int> permutation) {
  check_lifted_args(ambient, k, permutation);
  const int bits = k * (ambient.n() - k);
  const std::size_t m = std::size_t{1} << bits;
  std::vector<Subspace> by_label;
  by_label.reserve(m);
  for (std::size_t mask = 0; mask < m; ++mask) {
    std::vector<Elem> a(bits);
    for (int b = 0; b < bits; ++b) a[b] = static_cast<Elem>(mask >> b & 1);
    by_label.push_back(lifted_member(ambient, k, a, permutation));
  }
  auto t = tabulate(ambient, by_label, [](std::size_t a, std::size_t b) { return a ^ b; });
  require_own_check(t, Linearity::offset_identity, false, "build_lifted_code");
  return t;
}

AdditionTable build_product_code(const AdditionTable& a, const AdditionTable& b) {
  require_linear(a, "build_product_code");
  require_linear(b, "build_product_code");
  const Ambient amb(2, a.code().ambient().n() + b.code().ambient().n());
  const std::size_t ma = a.size(), mb = b.size();
  std::vector<Subspace> by_label;
  by_label.reserve(ma * mb);
  for (std::size_t i = 0; i < ma; ++i)
    for (std::size_t j = 0; j < mb; ++j) by_label.push_back(direct_sum(a.code()[i], b.code()[j]));
  auto t = tabulate(amb, by_label, [&](std::size_t x, std::size_t y) {
    return a(x / mb, y / mb) * mb + b(x % mb, y % mb);
  });
  require_own_check(t, Linearity::linear, true, "build_product_code");
  return t;
}

SubspaceMap derive_complement_from_linear(const AdditionTable& t) {
  require_linear(t, "derive_complement_from_linear");
  const auto full = t.code().index_of(Subspace::full(t.code().ambient()));
  if (!full) throw std::invalid_argument("the full space is not a codeword");
  std::vector<std::size_t> image(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) image[x] = t(*full, x);
  SubspaceMap f(t.code(), std::move(image));
  const auto report = check_properties(f);
  if (!report.all_pass()) throw std::logic_error("derived complement fails:\n" + report.summary());
  return f;
}

PropertyReport verify_linear_lemmas(const AdditionTable& t) {
  require_linear(t, "verify_linear_lemmas");
  const SubspaceSet& code = t.code();
  const std::size_t m = code.size();
  PropertyReport report;

  Verdict dims("sum-dimension");
  Verdict cancel("cancellation");
  Verdict disjoint("disjoint-sum");
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const Subspace& X = code[x];
      const Subspace& Y = code[y];
      const std::size_t z = t(x, y);
      const int meet = intersection_dim(X, Y);
      if (dims.pass && code[z].dim() != X.dim() + Y.dim() - 2 * meet) {
        dims.pass = false;
        dims.witness = {x, y};
        dims.detail = "dim(X+Y) = " + std::to_string(code[z].dim());
      }
      if (cancel.pass && t(x, z) != y) {
        cancel.pass = false;
        cancel.witness = {x, y, z};
        cancel.detail = "Z = X+Y but X+Z != Y";
      }
      if (disjoint.pass && meet == 0 && !(code[z] == sum(X, Y))) {
        disjoint.pass = false;
        disjoint.witness = {x, y};
        disjoint.detail = "X and Y meet trivially but X+Y differs from their span";
      }
    }
  report.add(dims);
  report.add(cancel);
  report.add(disjoint);

  Verdict ones("one-dim-bound");
  const auto level = code.level(1);
  const int n = code.ambient().n();
  ones.detail = std::to_string(level.size()) + " one-dimensional codewords, bound " + std::to_string(n);
  if (static_cast<int>(level.size()) > n) {
    ones.pass = false;
    ones.witness = level;
  }
  report.add(ones);
  return report;
}

SubspaceSet build_pencil_set(int n) {
  if (n < 3) throw std::invalid_argument("pencil set needs n >= 3");
  const Ambient a(2, n);
  Vector e1(n, 0);
  e1[0] = 1;
  std::vector<Subspace> members{Subspace(a)};
  for (const auto& x : enum_grassmannian(a, 2))
    if (x.contains(e1)) members.push_back(x);
  for (const auto& x : enum_grassmannian(a, n - 1))
    if (!x.contains(e1)) members.push_back(x);
  return SubspaceSet(a, std::move(members));
}

LinearSizeBound linear_size_bound(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("linear size bound supports 1 <= n <= 8");
  LinearSizeBound b;
  b.n = n;
  const auto total = static_cast<std::uint64_t>(projective_size(n, 2));
  const std::uint64_t ones = (std::uint64_t{1} << n) - 1;
  const std::uint64_t others = total - ones;
  b.established = true;
  for (std::uint64_t s = (std::uint64_t{1} << n) + 1; s <= total; ++s) {
    SizeVerdict v;
    v.size = s;
    if (!std::has_single_bit(s)) {
      v.eliminated = true;
      v.reason = "size " + std::to_string(s) + " is not a power of two";
    } else {
      const std::uint64_t forced = s > others ? s - others : 0;
      if (forced > static_cast<std::uint64_t>(n)) {
        v.eliminated = true;
        v.reason = "size " + std::to_string(s) + " forces at least " + std::to_string(forced) +
                   " one-dimensional codewords, more than n = " + std::to_string(n);
      } else {
        v.reason = "size " + std::to_string(s) + " is not excluded by size or one-dimensional count";
      }
    }
    b.established = b.established && v.eliminated;
    b.sizes.push_back(std::move(v));
  }
  return b;
}

}  // namespace projlab
