#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace projlab {

/// Field elements are indices in [0, q). For prime fields the index is the
/// residue; for extension fields it is the base-p encoding of the coefficient
/// vector (c0 + c1 p + c2 p^2 ...) of a polynomial reduced by the modulus.
using Elem = std::uint8_t;

struct FieldSpec {
  int p = 2;
  int m = 1;
  int q = 2;
  /// Coefficients c0..cm of the monic modulus, empty for prime fields.
  std::vector<int> modulus;
};

/// Immutable arithmetic tables for one supported field F_q.
///
/// Supported orders: every prime p <= 251, plus 4 (x^2+x+1), 8 (x^3+x+1)
/// and 9 (x^2+1). Instances live for the whole program; obtain them with
/// Field::get(q).
class Field {
 public:
  static const Field& get(int q);
  static bool supported(int q);

  const FieldSpec& spec() const { return spec_; }
  int q() const { return spec_.q; }
  int characteristic() const { return spec_.p; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;

  // Unchecked table access for inner loops; callers guarantee a, b < q.
  Elem add_u(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem mul_u(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg_u(Elem a) const { return neg_[a]; }
  Elem inv_u(Elem a) const { return inv_[a]; }

 private:
  explicit Field(FieldSpec spec);
  void check(Elem a) const;

  FieldSpec spec_;
  int q_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
};

// Free-function forms taking the spec explicitly.
Elem fe_add(Elem a, Elem b, const FieldSpec& s);
Elem fe_mul(Elem a, Elem b, const FieldSpec& s);
Elem fe_inv(Elem a, const FieldSpec& s);

bool is_prime(int v);
/// True when v = p^m for a prime p and m >= 1.
bool is_prime_power(long long v);

}  // namespace projlab
