#include <doctest.h>

#include <bit>
#include <random>

#include "oracles.hpp"
#include "projlab/linear.hpp"

using namespace projlab;

namespace {

struct GroupVerdicts {
  bool assoc = true, comm = true, identity = true, inverse = true, isometry = true;
};

// Group axioms with identity {0} and translation invariance, by direct loops.
GroupVerdicts brute_group(const AdditionTable& t) {
  const auto& code = t.code();
  const std::size_t m = t.size();
  const auto zero = code.index_of(Subspace(code.ambient()));
  GroupVerdicts g;
  for (std::size_t x = 0; x < m; ++x) {
    if (!zero || t(*zero, x) != x || t(x, *zero) != x) g.identity = false;
    if (!zero || t(x, x) != *zero) g.inverse = false;
    for (std::size_t y = 0; y < m; ++y) {
      if (t(x, y) != t(y, x)) g.comm = false;
      if (distance(code[t(x, y)], code[t(x, (y + 1) % m)]) != distance(code[y], code[(y + 1) % m])) g.isometry = false;
      for (std::size_t z = 0; z < m; ++z) {
        if (t(t(x, y), z) != t(x, t(y, z))) g.assoc = false;
        if (distance(code[t(x, y)], code[t(x, z)]) != distance(code[y], code[z])) g.isometry = false;
      }
    }
  }
  if (!g.identity) g.inverse = false;
  return g;
}

AdditionTable perturbed(const AdditionTable& t, std::size_t a, std::size_t b) {
  std::vector<std::uint32_t> v(t.table().begin(), t.table().end());
  std::swap(v[a], v[b]);
  return AdditionTable(t.code(), v);
}

std::vector<std::uint64_t> binomial_row(int n) {
  std::vector<std::uint64_t> r(n + 1, 1);
  for (int k = 1; k <= n; ++k) r[k] = r[k - 1] * (n - k + 1) / k;
  return r;
}

}  // namespace

TEST_CASE("checker agrees with direct loops on perturbed tables") {
  std::mt19937_64 rng(4);
  for (const auto& base : {build_psi_code(), build_basis_code(3)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto t = trial ? perturbed(base, rng() % base.table().size(), rng() % base.table().size()) : base;
      const auto rep = check_addition(t);
      const auto g = brute_group(t);
      CHECK(rep.verdicts.passes("associativity") == g.assoc);
      CHECK(rep.verdicts.passes("commutativity") == g.comm);
      CHECK(rep.verdicts.passes("self-inverse") == g.inverse);
      CHECK(rep.verdicts.passes("isometry") == g.isometry);
      CHECK((rep.classification == Linearity::linear) ==
            (g.assoc && g.comm && g.identity && g.inverse && g.isometry));
    }
  }
}

TEST_CASE("a swapped pair in the basis code is caught") {
  const auto t = build_basis_code(3);
  const auto bad = perturbed(t, 1 * 8 + 2, 1 * 8 + 3);
  const auto rep = check_addition(bad);
  CHECK(rep.classification != Linearity::linear);
  CHECK((!rep.verdicts.passes("associativity") || !rep.verdicts.passes("isometry") ||
         !rep.verdicts.passes("commutativity")));
}

TEST_CASE("psi code is linear with distribution (1,0,7,0)") {
  const auto t = build_psi_code();
  CHECK(t.size() == 8);
  CHECK(dimension_distribution(t.code()).counts == std::vector<std::uint64_t>{1, 0, 7, 0});
  CHECK(check_addition(t).classification == Linearity::linear);
  CHECK(verify_linear_lemmas(t).all_pass());
  CHECK(t.add(psi_member(0), psi_member(1)) == psi_member(3));
  CHECK(build_pencil_set(3) == t.code());
}

TEST_CASE("psi members follow powers of alpha in F_8") {
  const auto& f = Field::get(8);
  auto power = [&](int e) {
    Elem x = 1;
    for (int i = 0; i < ((e % 7) + 7) % 7; ++i) x = f.mul(x, 2);
    return Vector{static_cast<Elem>(x & 1), static_cast<Elem>(x >> 1 & 1), static_cast<Elem>(x >> 2 & 1)};
  };
  for (int i = 0; i < 7; ++i) {
    const auto x = psi_member(i);
    CHECK(x.dim() == 2);
    for (int e : {i, i + 1, i + 3}) CHECK(x.contains(power(e)));
  }
}

TEST_CASE("basis codes are linear with binomial distributions") {
  for (int n = 1; n <= 8; ++n) {
    const auto t = build_basis_code(n);
    CHECK(t.size() == (std::size_t{1} << n));
    CHECK(dimension_distribution(t.code()).counts == binomial_row(n));
    CHECK(check_addition(t).classification == Linearity::linear);
    CHECK(verify_linear_lemmas(t).all_pass());
    if (n <= 6) CHECK(check_properties(derive_complement_from_linear(t)).all_pass());
  }
}

TEST_CASE("basis code addition is symmetric difference of supports") {
  const int n = 6;
  const Ambient a(2, n);
  const auto t = build_basis_code(n);
  auto span_of = [&](unsigned mask) {
    std::vector<Vector> gens;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) {
        Vector e(n, 0);
        e[i] = 1;
        gens.push_back(e);
      }
    return canonicalize(gens, a);
  };
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned s = rng() % 64, u = rng() % 64;
    CHECK(distance(span_of(s), span_of(u)) == std::popcount(s ^ u));
    CHECK(t.add(span_of(s), span_of(u)) == span_of(s ^ u));
  }
}

TEST_CASE("lifted codes form isometric groups with identity [I_k | 0]") {
  for (int n : {3, 4, 5})
    for (int k : {1, 2}) {
      const Ambient a(2, n);
      const auto t = build_lifted_code(a, k);
      CHECK(t.size() == (std::size_t{1} << (k * (n - k))));
      for (const auto& x : t.code()) CHECK(x.dim() == k);
      const auto rep = check_addition(t, false);
      CHECK(rep.classification == Linearity::offset_identity);
      REQUIRE(rep.identity);
      std::vector<Elem> zero(static_cast<std::size_t>(k * (n - k)), 0);
      CHECK(t.code()[*rep.identity] == lifted_member(a, k, zero));
    }
  CHECK_THROWS_AS(check_addition(build_lifted_code(Ambient(2, 3), 1)), std::invalid_argument);
}

TEST_CASE("product code distribution is the convolution of its factors") {
  const auto psi = build_psi_code();
  const auto l3 = build_basis_code(3);
  const auto p = build_product_code(psi, l3);
  CHECK(p.size() == 64);
  CHECK(check_addition(p).classification == Linearity::linear);
  CHECK(verify_linear_lemmas(p).all_pass());
  const auto conv = convolve(dimension_distribution(psi.code()), dimension_distribution(l3.code()));
  CHECK(dimension_distribution(p.code()) == conv);
  CHECK(conv.counts == std::vector<std::uint64_t>{1, 3, 10, 22, 21, 7, 0});
}

TEST_CASE("search finds the additions of known codes") {
  const auto psi = search_linear_additions(build_psi_code().code(), LinearSearchMode::count_all);
  CHECK(psi.count == 30);
  CHECK(psi.isometry_orbits == 1u);
  CHECK(psi.collineation_orbits == 4u);
  for (const auto& t : psi.tables) CHECK(check_addition(t).classification == Linearity::linear);
  for (int n : {3, 4}) {
    const auto r = search_linear_additions(build_basis_code(n).code(), LinearSearchMode::count_all);
    CHECK(r.count == 1);
    CHECK(r.tables.front() == build_basis_code(n));
  }
}

TEST_CASE("search prefilters reject impossible sizes and one-dimensional surpluses") {
  const Ambient a(2, 3);
  const auto all = enum_projective(a);
  std::vector<Subspace> six(all.begin(), all.begin() + 6);
  const auto r = search_linear_additions(SubspaceSet(a, six), LinearSearchMode::prove_none);
  REQUIRE(r.prefilter);
  CHECK(r.prefilter->find("power of two") != std::string::npos);
  const auto full = search_linear_additions(all, LinearSearchMode::prove_none);
  REQUIRE(full.prefilter);
  CHECK(full.count == 0);
  CHECK_THROWS_AS(search_linear_additions(SubspaceSet(a, {psi_member(0)}), LinearSearchMode::find_one),
                  std::invalid_argument);
}

TEST_CASE("no linear code in P_2(3) exceeds eight codewords") {
  const auto b = linear_size_bound(3);
  CHECK(b.established);
  for (const auto& s : b.sizes) CHECK(s.eliminated);
  CHECK(b.sizes.size() == 8);
}

TEST_CASE("addition tables validate their shape") {
  const auto code = build_psi_code().code();
  CHECK_THROWS_AS(AdditionTable(code, std::vector<std::uint32_t>(10, 0)), std::invalid_argument);
  CHECK_THROWS_AS(AdditionTable(code, std::vector<std::uint32_t>(64, 8)), std::out_of_range);
}
