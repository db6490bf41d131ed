#include "projlab/field.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace projlab {

bool is_prime(int v) {
  if (v < 2) return false;
  for (int d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

bool is_prime_power(long long v) {
  if (v < 2) return false;
  long long p = 2;
  while (v % p != 0) ++p;
  while (v % p == 0) v /= p;
  return v == 1;
}

namespace {

FieldSpec spec_for(int q) {
  if (q >= 2 && q <= 251 && is_prime(q)) return {q, 1, q, {}};
  switch (q) {
    case 4: return {2, 2, 4, {1, 1, 1}};
    case 8: return {2, 3, 8, {1, 1, 0, 1}};
    case 9: return {3, 2, 9, {1, 0, 1}};
    default:
      throw std::invalid_argument("unsupported field order q=" + std::to_string(q));
  }
}

std::vector<int> digits(int index, int p, int m) {
  std::vector<int> c(m);
  for (int i = 0; i < m; ++i) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

int undigits(const std::vector<int>& c, int p) {
  int v = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * p + c[i];
  return v;
}

// Polynomial product reduced by the monic modulus, coefficients mod p.
int poly_mulmod(int a, int b, const FieldSpec& s) {
  const int p = s.p, m = s.m;
  auto x = digits(a, p, m), y = digits(b, p, m);
  std::vector<int> r(2 * m - 1, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
  for (int d = 2 * m - 2; d >= m; --d) {
    const int lead = r[d];
    if (lead == 0) continue;
    for (int i = 0; i <= m; ++i)
      r[d - m + i] = ((r[d - m + i] - lead * s.modulus[i]) % p + p) % p;
  }
  r.resize(m);
  return undigits(r, p);
}

bool modulus_irreducible(const FieldSpec& s) {
  // Degree <= 3: irreducible iff no root in F_p.
  for (int x = 0; x < s.p; ++x) {
    int v = 0;
    for (int i = s.m; i >= 0; --i) v = (v * x + s.modulus[i]) % s.p;
    if (v == 0) return false;
  }
  return true;
}

}  // namespace

Field::Field(FieldSpec spec) : spec_(std::move(spec)), q_(spec_.q) {
  if (spec_.m > 1 && !modulus_irreducible(spec_))
    throw std::logic_error("field modulus is reducible");
  const int q = q_, p = spec_.p, m = spec_.m;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p, m);
    std::vector<int> n(m);
    for (int i = 0; i < m; ++i) n[i] = (p - da[i]) % p;
    neg_[a] = static_cast<Elem>(undigits(n, p));
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p, m);
      std::vector<int> s(m);
      for (int i = 0; i < m; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = static_cast<Elem>(undigits(s, p));
      mul_[a * q + b] = static_cast<Elem>(m == 1 ? (a * b) % p : poly_mulmod(a, b, spec_));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) {
        inv_[a] = static_cast<Elem>(b);
        break;
      }
}

bool Field::supported(int q) {
  return (q >= 2 && q <= 251 && is_prime(q)) || q == 4 || q == 8 || q == 9;
}

const Field& Field::get(int q) {
  static std::array<std::unique_ptr<Field>, 252> registry;
  static std::mutex lock;
  if (!supported(q))
    throw std::invalid_argument("unsupported field order q=" + std::to_string(q));
  std::lock_guard guard(lock);
  auto& slot = registry[q];
  if (!slot) slot.reset(new Field(spec_for(q)));
  return *slot;
}

void Field::check(Elem a) const {
  if (a >= q_)
    throw std::out_of_range("field element " + std::to_string(a) + " out of range for q=" +
                            std::to_string(q_));
}

Elem Field::add(Elem a, Elem b) const {
  check(a);
  check(b);
  return add_u(a, b);
}

Elem Field::sub(Elem a, Elem b) const {
  check(a);
  check(b);
  return add_u(a, neg_u(b));
}

Elem Field::mul(Elem a, Elem b) const {
  check(a);
  check(b);
  return mul_u(a, b);
}

Elem Field::neg(Elem a) const {
  check(a);
  return neg_u(a);
}

Elem Field::inv(Elem a) const {
  check(a);
  if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(q_));
  return inv_u(a);
}

Elem fe_add(Elem a, Elem b, const FieldSpec& s) { return Field::get(s.q).add(a, b); }
Elem fe_mul(Elem a, Elem b, const FieldSpec& s) { return Field::get(s.q).mul(a, b); }
Elem fe_inv(Elem a, const FieldSpec& s) { return Field::get(s.q).inv(a); }

}  // namespace projlab
