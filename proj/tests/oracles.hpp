#pragma once

// Brute-force reference implementations. Subspaces are modelled as the
// sorted list of all their vectors, each vector encoded base q with the
// first coordinate most significant. Only prime q is modelled, so field
// arithmetic is plain modular arithmetic.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "projlab/complement.hpp"
#include "projlab/subspace.hpp"

namespace oracle {

using VecSet = std::vector<std::uint32_t>;

inline std::uint32_t ipow(std::uint32_t q, int e) {
  std::uint32_t r = 1;
  while (e-- > 0) r *= q;
  return r;
}

inline std::vector<int> digits(std::uint32_t code, int q, int n) {
  std::vector<int> v(n);
  for (int i = n - 1; i >= 0; --i) {
    v[i] = static_cast<int>(code % q);
    code /= q;
  }
  return v;
}

inline std::uint32_t code_of(const std::vector<int>& v, int q) {
  std::uint32_t c = 0;
  for (int x : v) c = c * q + static_cast<std::uint32_t>(x);
  return c;
}

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, int q, int n) {
  auto x = digits(a, q, n), y = digits(b, q, n);
  for (int i = 0; i < n; ++i) x[i] = (x[i] + y[i]) % q;
  return code_of(x, q);
}

inline std::uint32_t scale(std::uint32_t a, int c, int q, int n) {
  auto x = digits(a, q, n);
  for (int& e : x) e = (e * c) % q;
  return code_of(x, q);
}

inline int dot(std::uint32_t a, std::uint32_t b, int q, int n) {
  auto x = digits(a, q, n), y = digits(b, q, n);
  int s = 0;
  for (int i = 0; i < n; ++i) s = (s + x[i] * y[i]) % q;
  return s;
}

/// Closure of a vector list under addition and scaling.
inline VecSet span(const std::vector<std::uint32_t>& gens, int q, int n) {
  std::set<std::uint32_t> s{0};
  for (auto g : gens) {
    std::set<std::uint32_t> next = s;
    for (auto v : s)
      for (int c = 1; c < q; ++c) next.insert(add(v, scale(g, c, q, n), q, n));
    s = std::move(next);
  }
  return {s.begin(), s.end()};
}

inline int dim(const VecSet& s, int q) {
  int d = 0;
  std::size_t size = 1;
  while (size < s.size()) {
    size *= q;
    ++d;
  }
  return d;
}

/// Every subspace of F_q^n, grown one generator at a time.
inline std::set<VecSet> all_subspaces(int q, int n) {
  std::set<VecSet> seen{VecSet{0}};
  std::vector<VecSet> frontier{VecSet{0}};
  const std::uint32_t total = ipow(q, n);
  while (!frontier.empty()) {
    std::vector<VecSet> next;
    for (const auto& s : frontier)
      for (std::uint32_t v = 1; v < total; ++v) {
        if (std::binary_search(s.begin(), s.end(), v)) continue;
        std::vector<std::uint32_t> gens(s.begin(), s.end());
        gens.push_back(v);
        auto t = span(gens, q, n);
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    frontier = std::move(next);
  }
  return seen;
}

inline VecSet vecset(const projlab::Subspace& x) {
  const int q = x.ambient().q();
  VecSet out;
  for (const auto& v : x.vectors()) {
    std::vector<int> d(v.begin(), v.end());
    out.push_back(code_of(d, q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline VecSet intersect(const VecSet& a, const VecSet& b) {
  VecSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VecSet sum(const VecSet& a, const VecSet& b, int q, int n) {
  std::set<std::uint32_t> s;
  for (auto x : a)
    for (auto y : b) s.insert(add(x, y, q, n));
  return {s.begin(), s.end()};
}

inline VecSet dual(const VecSet& a, int q, int n) {
  VecSet out;
  for (std::uint32_t v = 0; v < ipow(q, n); ++v)
    if (std::all_of(a.begin(), a.end(), [&](std::uint32_t x) { return dot(v, x, q, n) == 0; })) out.push_back(v);
  return out;
}

inline int distance(const VecSet& a, const VecSet& b, int q) {
  return dim(a, q) + dim(b, q) - 2 * dim(intersect(a, b), q);
}

/// Number of ordered k-frames divided by |GL_k(q)|.
inline boost::multiprecision::cpp_int gaussian(int n, int k, int q) {
  using boost::multiprecision::cpp_int;
  if (k < 0 || k > n) return 0;
  cpp_int frames = 1, gl = 1, qn = 1, qk = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  for (int i = 0; i < k; ++i) qk *= q;
  cpp_int qi = 1;
  for (int i = 0; i < k; ++i) {
    frames *= qn - qi;
    gl *= qk - qi;
    qi *= q;
  }
  return frames / gl;
}

/// Definitions of P1..P4 evaluated on vector sets of a map's domain.
struct MapVerdicts {
  bool p1 = true, p2 = true, p3 = true, p4 = true;
};

inline MapVerdicts check_map(const projlab::SubspaceMap& f) {
  const auto& u = f.domain();
  const int q = u.ambient().q(), n = u.ambient().n();
  std::vector<VecSet> vs;
  for (const auto& x : u) vs.push_back(vecset(x));
  const std::size_t m = u.size();
  MapVerdicts r;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& x = vs[i];
    const auto& y = vs[f(i)];
    if (intersect(x, y).size() != 1 || sum(x, y, q, n).size() != ipow(q, n)) r.p1 = false;
    if (f(f(i)) != i) r.p3 = false;
    for (std::size_t j = 0; j < m; ++j)
      if (distance(vs[i], vs[j], q) != distance(vs[f(i)], vs[f(j)], q)) r.p4 = false;
  }
  std::map<std::size_t, int> hits;
  for (std::size_t i = 0; i < m; ++i) {
    if (dim(vs[f(i)], q) != n - dim(vs[i], q)) r.p2 = false;
    ++hits[f(i)];
  }
  if (hits.size() != m) r.p2 = false;
  return r;
}

}  // namespace oracle
