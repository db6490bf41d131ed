#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "projlab/lattice.hpp"

using namespace projlab;

namespace {

bool brute_antitone(const Lattice& lat, const LatticeMap& f) {
  for (std::size_t x = 0; x < lat.size(); ++x)
    for (std::size_t y = 0; y < lat.size(); ++y)
      if (lat.leq(x, y) != lat.leq(f[y], f[x])) return false;
  return true;
}

bool brute_rank_complement(const Lattice& lat, const LatticeMap& f) {
  const int top = lat.rank(lat.top());
  for (std::size_t x = 0; x < lat.size(); ++x)
    if (lat.rank(f[x]) != top - lat.rank(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("lattice laws hold on the standard lattices") {
  for (const auto& lat : {Lattice::boolean(4), Lattice::powerset(4), Lattice::linear(2, 3), Lattice::linear(3, 2)}) {
    CAPTURE(lat.name());
    CHECK(verify_lattice_laws(lat).all_pass());
    for (std::size_t x = 0; x < lat.size(); ++x)
      for (std::size_t y = 0; y < lat.size(); ++y) {
        const auto f = lattice_distance_forms(lat, x, y);
        CHECK(f.join_form == f.rank_form);
      }
  }
}

TEST_CASE("linear lattice order is inclusion of vector sets") {
  const auto lat = Lattice::linear(2, 3);
  const auto& s = lat.subspaces();
  for (std::size_t x = 0; x < lat.size(); ++x)
    for (std::size_t y = 0; y < lat.size(); ++y) {
      const auto a = oracle::vecset(s[x]), b = oracle::vecset(s[y]);
      CHECK(lat.leq(x, y) == std::includes(b.begin(), b.end(), a.begin(), a.end()));
      CHECK(oracle::vecset(s[lat.meet(x, y)]) == oracle::intersect(a, b));
      CHECK(lattice_distance(lat, x, y) == distance(s[x], s[y]));
    }
}

TEST_CASE("characteristic vectors turn set operations into bit operations") {
  for (int n = 1; n <= 5; ++n) CHECK(verify_chi_identities(n).all_pass());
  const auto p = Lattice::powerset(3), b = Lattice::boolean(3);
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      CHECK(p.join(x, y) == b.join(x, y));
      CHECK(lattice_distance(p, x, y) == std::popcount(x ^ y));
    }
  CHECK(p.members(5) == std::vector<int>{1, 3});
}

TEST_CASE("complement maps pass Q1 to Q5 and single swaps fail Q1") {
  for (const auto& lat : {Lattice::boolean(3), Lattice::powerset(3), Lattice::linear(2, 3)}) {
    CAPTURE(lat.name());
    const auto f = complement_map(lat);
    CHECK(check_Q(lat, f).all_pass());
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (std::size_t j = i + 1; j < lat.size(); ++j) {
        const auto g = swap_images(f, i, j);
        const auto rep = check_Q(lat, g, QSet(QSet::Q1));
        REQUIRE_FALSE(rep.passes("Q1"));
        const auto& w = rep.at("Q1").witness;
        REQUIRE(w.size() == 2);
        CHECK(lat.leq(w[0], w[1]) != lat.leq(g[w[1]], g[w[0]]));
      }
  }
  const auto lin = Lattice::linear(2, 3);
  const auto f = complement_map(lin);
  for (std::size_t x = 0; x < lin.size(); ++x) CHECK(lin.subspaces()[f[x]] == dual(lin.subspaces()[x]));
}

TEST_CASE("Q1 and Q4 agree with direct checks and the implications hold on random bijections") {
  std::mt19937_64 rng(8);
  for (const auto& lat : {Lattice::boolean(3), Lattice::linear(2, 2)}) {
    LatticeMap f(lat.size());
    std::iota(f.begin(), f.end(), 0);
    for (int t = 0; t < 300; ++t) {
      std::shuffle(f.begin(), f.end(), rng);
      const auto rep = check_Q(lat, f);
      CHECK(rep.passes("Q1") == brute_antitone(lat, f));
      CHECK(rep.passes("Q4") == brute_rank_complement(lat, f));
      CHECK(rep.passes("Q1") == rep.passes("Q2"));
      CHECK(rep.passes("Q1") == rep.passes("Q3"));
      if (rep.passes("Q1")) CHECK(rep.passes("Q4"));
      CHECK((rep.passes("Q4") && rep.passes("Q5")) == rep.passes("Q1"));
    }
  }
}

TEST_CASE("identity map fails the order-reversing properties") {
  const auto lat = Lattice::boolean(3);
  const auto rep = check_Q(lat, identity_map(lat));
  CHECK_FALSE(rep.passes("Q1"));
  CHECK_FALSE(rep.passes("Q4"));
  CHECK(rep.passes("Q5"));
  CHECK_THROWS_AS(check_Q(lat, LatticeMap(8, 0)), std::invalid_argument);
}

TEST_CASE("lemma corpus finds no violations") {
  for (const auto& lat : {Lattice::boolean(4), Lattice::powerset(4), Lattice::linear(2, 3)}) {
    const auto corpus = lemma_corpus(lat, 200, 0);
    const auto run = lemma_equivalence_tests(lat, corpus);
    CHECK(run.report.all_pass());
    CHECK(run.antitone_maps >= 1);
    CHECK(run.vectors.size() == corpus.size());
  }
  const auto a = lemma_corpus(Lattice::boolean(3), 20, 42), b = lemma_corpus(Lattice::boolean(3), 20, 42);
  CHECK(a == b);
}

TEST_CASE("complement-derived addition on the Boolean lattice is exclusive or") {
  const auto lat = Lattice::boolean(3);
  const auto r = boxplus_from_complement(lat, complement_map(lat));
  CHECK(r.report.all_pass());
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) CHECK(r.table[x * 8 + y] == (x ^ y));
  const auto lin = Lattice::linear(2, 2);
  CHECK_FALSE(boxplus_from_complement(lin, complement_map(lin)).report.all_pass());
}

TEST_CASE("antitone bijections with P1 exist only below dimension three") {
  const auto r3 = theorem9_search(Ambient(2, 3));
  CHECK_FALSE(r3.map);
  CHECK(r3.certificate.exhausted);
  for (int n : {1, 2}) {
    const auto r = theorem9_search(Ambient(2, n));
    REQUIRE(r.map);
    CHECK(check_properties(*r.map, PropertySet(PropertySet::P1)).all_pass());
    const auto& d = r.map->domain();
    for (std::size_t x = 0; x < d.size(); ++x)
      for (std::size_t y = 0; y < d.size(); ++y)
        if (intersect(d[x], d[y]) == d[x]) CHECK(intersect(d[(*r.map)(y)], d[(*r.map)(x)]) == d[(*r.map)(y)]);
  }
}

TEST_CASE("invalid lattices and oversized carriers are rejected") {
  std::vector<std::uint32_t> join{0, 1, 0, 1}, meet{0, 0, 0, 1};
  CHECK_THROWS_AS(Lattice("broken", join, meet, {0, 1}, 0, 1, {"a", "b"}), std::invalid_argument);
  CHECK_THROWS(Lattice::linear(2, 6));
  CHECK_THROWS_AS(Lattice::boolean(3).subspaces(), std::logic_error);
  CHECK(QSet::parse("Q5,Q1").to_string() == "Q1,Q5");
}
