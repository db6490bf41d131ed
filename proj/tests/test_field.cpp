#include <doctest.h>

#include <stdexcept>

#include "projlab/field.hpp"

using namespace projlab;

namespace {

// Polynomial product over F_p reduced by a monic modulus, coefficients base p.
int poly_mul(int a, int b, int p, const std::vector<int>& modulus) {
  const int m = static_cast<int>(modulus.size()) - 1;
  std::vector<int> x(m), y(m), prod(2 * m, 0);
  for (int i = 0; i < m; ++i) {
    x[i] = a % p;
    a /= p;
    y[i] = b % p;
    b /= p;
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  for (int d = 2 * m - 1; d >= m; --d) {
    const int c = prod[d];
    for (int i = 0; i <= m; ++i) prod[d - m + i] = ((prod[d - m + i] - c * modulus[i]) % p + p) % p;
  }
  int out = 0;
  for (int i = m - 1; i >= 0; --i) out = out * p + prod[i];
  return out;
}

void check_axioms(const Field& f) {
  const int q = f.q();
  for (int a = 0; a < q; ++a) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.add(a, f.neg(a)) == 0);
    if (a) CHECK(f.mul(a, f.inv(a)) == 1);
    for (int b = 0; b < q; ++b) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.sub(f.add(a, b), b) == a);
      for (int c = 0; c < q; ++c) {
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

}  // namespace

TEST_CASE("field axioms hold for every small supported order") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    CAPTURE(q);
    REQUIRE(Field::supported(q));
    check_axioms(Field::get(q));
  }
}

TEST_CASE("prime fields agree with modular arithmetic") {
  for (int p : {2, 3, 5, 7, 31, 251}) {
    const auto& f = Field::get(p);
    for (int a = 0; a < p; a += (p > 40 ? 7 : 1))
      for (int b = 0; b < p; b += (p > 40 ? 5 : 1)) {
        CHECK(f.add(a, b) == (a + b) % p);
        CHECK(f.mul(a, b) == (a * b) % p);
      }
  }
}

TEST_CASE("extension fields agree with polynomial arithmetic") {
  struct Case {
    int q, p;
    std::vector<int> modulus;
  };
  for (const auto& c : {Case{4, 2, {1, 1, 1}}, Case{8, 2, {1, 1, 0, 1}}, Case{9, 3, {1, 0, 1}}}) {
    const auto& f = Field::get(c.q);
    CHECK(f.characteristic() == c.p);
    for (int a = 0; a < c.q; ++a)
      for (int b = 0; b < c.q; ++b) CHECK(f.mul(a, b) == poly_mul(a, b, c.p, c.modulus));
  }
}

TEST_CASE("alpha generates the multiplicative group of F_8 with alpha^3 = alpha + 1") {
  const auto& f = Field::get(8);
  const Elem alpha = 2;
  CHECK(f.mul(alpha, f.mul(alpha, alpha)) == f.add(alpha, 1));
  Elem x = 1;
  std::vector<bool> seen(8, false);
  for (int i = 0; i < 7; ++i) {
    CHECK_FALSE(seen[x]);
    seen[x] = true;
    x = f.mul(x, alpha);
  }
  CHECK(x == 1);
}

TEST_CASE("unsupported orders and zero inverses are rejected") {
  CHECK_FALSE(Field::supported(6));
  CHECK_FALSE(Field::supported(1));
  CHECK_THROWS(Field::get(6));
  CHECK_THROWS_AS(Field::get(5).inv(0), std::domain_error);
  CHECK(is_prime_power(16));
  CHECK_FALSE(is_prime_power(12));
}
