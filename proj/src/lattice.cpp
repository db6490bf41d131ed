#include "projlab/lattice.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "projlab/kernels.hpp"

namespace projlab {

Lattice::Lattice(std::string name, std::vector<std::uint32_t> join, std::vector<std::uint32_t> meet,
                 std::vector<int> rank, std::size_t bottom, std::size_t top, std::vector<std::string> labels)
    : name_(std::move(name)), join_(std::move(join)), meet_(std::move(meet)), rank_(std::move(rank)),
      bottom_(bottom), top_(top), labels_(std::move(labels)) {
  const std::size_t m = rank_.size();
  if (m == 0 || m > kMaxSize) throw std::invalid_argument("lattice carrier size must be in 1.." + std::to_string(kMaxSize));
  if (join_.size() != m * m || meet_.size() != m * m || labels_.size() != m)
    throw std::invalid_argument("lattice tables do not match the carrier size");
  if (bottom_ >= m || top_ >= m) throw std::invalid_argument("lattice bounds outside the carrier");
  for (std::size_t i = 0; i < m * m; ++i)
    if (join_[i] >= m || meet_[i] >= m) throw std::invalid_argument("lattice table entry outside the carrier");
  const auto laws = verify_lattice_laws(*this);
  if (!laws.all_pass()) throw std::invalid_argument("not a ranked bounded lattice:\n" + laws.summary());
}

Lattice Lattice::boolean(int n) {
  if (n < 0 || (std::size_t{1} << n) > kMaxSize) throw std::invalid_argument("Boolean lattice size out of range");
  const std::size_t m = std::size_t{1} << n;
  std::vector<std::uint32_t> join(m * m), meet(m * m);
  std::vector<int> rank(m);
  std::vector<std::string> labels(m);
  for (std::size_t x = 0; x < m; ++x) {
    rank[x] = std::popcount(x);
    for (int i = 0; i < n; ++i) labels[x] += (x >> i & 1) ? '1' : '0';
    for (std::size_t y = 0; y < m; ++y) {
      join[x * m + y] = static_cast<std::uint32_t>(x | y);
      meet[x * m + y] = static_cast<std::uint32_t>(x & y);
    }
  }
  Lattice lat("Boolean(" + std::to_string(n) + ")", std::move(join), std::move(meet), std::move(rank), 0, m - 1,
              std::move(labels));
  lat.kind_ = Kind::boolean;
  return lat;
}

Lattice Lattice::powerset(int n) {
  if (n < 0 || (std::size_t{1} << n) > kMaxSize) throw std::invalid_argument("power-set lattice size out of range");
  const std::size_t m = std::size_t{1} << n;
  std::vector<std::vector<int>> sets(m);
  for (std::size_t mask = 0; mask < m; ++mask)
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) sets[mask].push_back(i + 1);
  std::map<std::vector<int>, std::uint32_t> index;
  for (std::size_t x = 0; x < m; ++x) index[sets[x]] = static_cast<std::uint32_t>(x);
  std::vector<std::uint32_t> join(m * m), meet(m * m);
  std::vector<int> rank(m);
  std::vector<std::string> labels(m);
  for (std::size_t x = 0; x < m; ++x) {
    rank[x] = static_cast<int>(sets[x].size());
    labels[x] = "{";
    for (std::size_t i = 0; i < sets[x].size(); ++i) labels[x] += (i ? "," : "") + std::to_string(sets[x][i]);
    labels[x] += "}";
    for (std::size_t y = 0; y < m; ++y) {
      std::vector<int> u, v;
      std::set_union(sets[x].begin(), sets[x].end(), sets[y].begin(), sets[y].end(), std::back_inserter(u));
      std::set_intersection(sets[x].begin(), sets[x].end(), sets[y].begin(), sets[y].end(), std::back_inserter(v));
      join[x * m + y] = index.at(u);
      meet[x * m + y] = index.at(v);
    }
  }
  Lattice lat("PowerSet(" + std::to_string(n) + ")", std::move(join), std::move(meet), std::move(rank), 0, m - 1,
              std::move(labels));
  lat.kind_ = Kind::powerset;
  lat.sets_ = std::move(sets);
  return lat;
}

Lattice Lattice::linear(int q, int n) {
  const Ambient a(q, n);
  if (projective_size(n, q) > BigInt(kMaxSize)) throw std::invalid_argument("linear lattice too large to tabulate");
  SubspaceSet all = enum_projective(a);
  const std::size_t m = all.size();
  std::vector<std::uint32_t> join(m * m), meet(m * m);
  std::vector<int> rank(m);
  std::vector<std::string> labels(m);
  for (std::size_t x = 0; x < m; ++x) {
    rank[x] = all[x].dim();
    labels[x] = all[x].to_string();
    for (std::size_t y = 0; y < m; ++y) {
      join[x * m + y] = static_cast<std::uint32_t>(all.require_index(sum(all[x], all[y])));
      meet[x * m + y] = static_cast<std::uint32_t>(all.require_index(intersect(all[x], all[y])));
    }
  }
  Lattice lat("Linear(" + std::to_string(q) + "," + std::to_string(n) + ")", std::move(join), std::move(meet),
              std::move(rank), 0, m - 1, std::move(labels));
  lat.kind_ = Kind::linear;
  lat.subspaces_ = std::move(all);
  return lat;
}

const SubspaceSet& Lattice::subspaces() const {
  if (!subspaces_) throw std::logic_error(name_ + " is not a linear lattice");
  return *subspaces_;
}

DistanceForms lattice_distance_forms(const Lattice& lat, std::size_t x, std::size_t y) {
  const int meet = lat.rank(lat.meet(x, y));
  return {lat.rank(lat.join(x, y)) - meet, lat.rank(x) + lat.rank(y) - 2 * meet};
}

int lattice_distance(const Lattice& lat, std::size_t x, std::size_t y) {
  const auto d = lattice_distance_forms(lat, x, y);
  if (d.join_form != d.rank_form) throw std::logic_error("distance forms disagree");
  return d.join_form;
}

PropertyReport verify_lattice_laws(const Lattice& lat) {
  const std::size_t m = lat.size();
  PropertyReport r;
  auto first_pair = [&](const char* name, auto bad) {
    Verdict v(name);
    for (std::size_t x = 0; x < m && v.pass; ++x)
      for (std::size_t y = 0; y < m && v.pass; ++y)
        if (bad(x, y)) {
          v.pass = false;
          v.witness = {x, y};
        }
    r.add(v);
  };

  first_pair("commutativity", [&](auto x, auto y) { return lat.join(x, y) != lat.join(y, x) || lat.meet(x, y) != lat.meet(y, x); });
  {
    Verdict v("associativity");
    if (auto w = kernels::first_associativity_violation(lat.join_, m)) {
      v.pass = false;
      v.witness = {(*w)[0], (*w)[1], (*w)[2]};
      v.detail = "join";
    } else if (auto w2 = kernels::first_associativity_violation(lat.meet_, m)) {
      v.pass = false;
      v.witness = {(*w2)[0], (*w2)[1], (*w2)[2]};
      v.detail = "meet";
    }
    r.add(v);
  }
  first_pair("idempotence", [&](auto x, auto) { return lat.join(x, x) != x || lat.meet(x, x) != x; });
  first_pair("absorption", [&](auto x, auto y) { return lat.join(x, lat.meet(x, y)) != x || lat.meet(x, lat.join(x, y)) != x; });
  first_pair("bounds", [&](auto x, auto) { return lat.meet(lat.bottom(), x) != lat.bottom() || lat.join(lat.top(), x) != lat.top(); });
  first_pair("rank-modularity", [&](auto x, auto y) {
    return lat.rank(x) + lat.rank(y) != lat.rank(lat.join(x, y)) + lat.rank(lat.meet(x, y));
  });
  {
    Verdict v("rank-cover");
    for (std::size_t x = 0; x < m && v.pass; ++x)
      for (std::size_t y = 0; y < m && v.pass; ++y) {
        if (x == y || !lat.leq(x, y)) continue;
        bool covers = true;
        for (std::size_t z = 0; z < m && covers; ++z)
          if (z != x && z != y && lat.leq(x, z) && lat.leq(z, y)) covers = false;
        if (covers && lat.rank(y) != lat.rank(x) + 1) {
          v.pass = false;
          v.witness = {x, y};
          v.detail = "y covers x but ranks differ by " + std::to_string(lat.rank(y) - lat.rank(x));
        }
      }
    r.add(v);
  }
  {
    Verdict v("rank-bottom");
    if (lat.rank(lat.bottom()) != 0) {
      v.pass = false;
      v.witness = {lat.bottom()};
    }
    r.add(v);
  }
  first_pair("distance-forms", [&](auto x, auto y) {
    const auto d = lattice_distance_forms(lat, x, y);
    return d.join_form != d.rank_form;
  });
  return r;
}

PropertyReport verify_chi_identities(int n) {
  const Lattice p = Lattice::powerset(n);
  const Lattice b = Lattice::boolean(n);
  auto chi = [&](std::size_t x) {
    std::size_t v = 0;
    for (int i : p.members(x)) v |= std::size_t{1} << (i - 1);
    return v;
  };
  const std::size_t m = p.size();
  Verdict uni("chi-union"), inter("chi-intersection"), weight("chi-rank"), dist("chi-distance");
  for (std::size_t x = 0; x < m; ++x) {
    if (weight.pass && static_cast<int>(p.members(x).size()) != std::popcount(chi(x))) {
      weight.pass = false;
      weight.witness = {x};
    }
    for (std::size_t y = 0; y < m; ++y) {
      if (uni.pass && chi(p.join(x, y)) != b.join(chi(x), chi(y))) {
        uni.pass = false;
        uni.witness = {x, y};
      }
      if (inter.pass && chi(p.meet(x, y)) != b.meet(chi(x), chi(y))) {
        inter.pass = false;
        inter.witness = {x, y};
      }
      if (dist.pass && lattice_distance(p, x, y) != std::popcount(chi(x) ^ chi(y))) {
        dist.pass = false;
        dist.witness = {x, y};
      }
    }
  }
  PropertyReport r;
  r.add(uni);
  r.add(inter);
  r.add(weight);
  r.add(dist);
  return r;
}

QSet QSet::parse(const std::string& text) {
  unsigned bits = 0;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    if (tok.size() == 2 && (tok[0] == 'Q' || tok[0] == 'q') && tok[1] >= '1' && tok[1] <= '5')
      bits |= 1u << (tok[1] - '1');
    else
      throw std::invalid_argument("unknown property '" + tok + "' (expected Q1..Q5)");
  }
  return QSet(bits);
}

std::string QSet::to_string() const {
  std::string out;
  for (unsigned i = 0; i < 5; ++i)
    if (bits_ & (1u << i)) out += (out.empty() ? "Q" : ",Q") + std::to_string(i + 1);
  return out;
}

namespace {

void require_bijection(const Lattice& lat, const LatticeMap& f) {
  if (f.size() != lat.size())
    throw std::invalid_argument("map has " + std::to_string(f.size()) + " entries for " + std::to_string(lat.size()) +
                                " lattice elements");
  std::vector<bool> hit(lat.size(), false);
  for (std::size_t y : f) {
    if (y >= lat.size() || hit[y]) throw std::invalid_argument("map is not a bijection of the carrier");
    hit[y] = true;
  }
}

}  // namespace

PropertyReport check_Q(const Lattice& lat, const LatticeMap& f, QSet props) {
  require_bijection(lat, f);
  const std::size_t m = lat.size();
  PropertyReport r;
  auto pairs = [&](const char* name, auto bad) {
    Verdict v(name);
    for (std::size_t x = 0; x < m && v.pass; ++x)
      for (std::size_t y = 0; y < m && v.pass; ++y)
        if (bad(x, y)) {
          v.pass = false;
          v.witness = {x, y};
          v.detail = "x = " + lat.label(x) + ", y = " + lat.label(y);
        }
    r.add(v);
  };
  if (props.has(QSet::Q1)) pairs("Q1", [&](auto x, auto y) { return lat.leq(x, y) && !lat.leq(f[y], f[x]); });
  if (props.has(QSet::Q2)) pairs("Q2", [&](auto x, auto y) { return f[lat.join(x, y)] != lat.meet(f[x], f[y]); });
  if (props.has(QSet::Q3)) pairs("Q3", [&](auto x, auto y) { return f[lat.meet(x, y)] != lat.join(f[x], f[y]); });
  if (props.has(QSet::Q4)) {
    Verdict v("Q4");
    const int top = lat.rank(lat.top());
    for (std::size_t x = 0; x < m && v.pass; ++x)
      if (lat.rank(f[x]) != top - lat.rank(x)) {
        v.pass = false;
        v.witness = {x};
        v.detail = "x = " + lat.label(x);
      }
    r.add(v);
  }
  if (props.has(QSet::Q5))
    pairs("Q5", [&](auto x, auto y) { return lattice_distance(lat, f[x], f[y]) != lattice_distance(lat, x, y); });
  return r;
}

LatticeMap complement_map(const Lattice& lat) {
  const std::size_t m = lat.size();
  LatticeMap f(m);
  switch (lat.kind()) {
    case Lattice::Kind::boolean:
    case Lattice::Kind::powerset:
      for (std::size_t x = 0; x < m; ++x) f[x] = (m - 1) ^ x;
      return f;
    case Lattice::Kind::linear: {
      const SubspaceSet& all = lat.subspaces();
      for (std::size_t x = 0; x < m; ++x) f[x] = all.require_index(dual(all[x]));
      return f;
    }
    case Lattice::Kind::custom: break;
  }
  throw std::invalid_argument("no standard complement on a custom lattice");
}

LatticeMap identity_map(const Lattice& lat) {
  LatticeMap f(lat.size());
  std::iota(f.begin(), f.end(), std::size_t{0});
  return f;
}

LatticeMap swap_images(LatticeMap f, std::size_t i, std::size_t j) {
  std::swap(f.at(i), f.at(j));
  return f;
}

std::vector<LatticeMap> lemma_corpus(const Lattice& lat, std::size_t random_maps, std::uint64_t seed) {
  std::vector<LatticeMap> corpus;
  const LatticeMap c = complement_map(lat);
  corpus.push_back(c);
  corpus.push_back(identity_map(lat));
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = i + 1; j < lat.size(); ++j) corpus.push_back(swap_images(c, i, j));
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < random_maps; ++t) {
    LatticeMap f = identity_map(lat);
    std::shuffle(f.begin(), f.end(), rng);
    corpus.push_back(std::move(f));
  }
  return corpus;
}

LemmaRun lemma_equivalence_tests(const Lattice& lat, std::span<const LatticeMap> maps) {
  LemmaRun run;
  Verdict equiv("Q1<=>Q2<=>Q3"), rank("Q1=>Q4"), pair("Q4&Q5<=>Q1");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto report = check_Q(lat, maps[i]);
    std::array<bool, 5> v{};
    for (int k = 0; k < 5; ++k) v[k] = report.passes("Q" + std::to_string(k + 1));
    run.vectors.push_back(v);
    if (v[0]) ++run.antitone_maps;
    if (equiv.pass && !(v[0] == v[1] && v[1] == v[2])) {
      equiv.pass = false;
      equiv.witness = {i};
    }
    if (rank.pass && v[0] && !v[3]) {
      rank.pass = false;
      rank.witness = {i};
    }
    if (pair.pass && (v[3] && v[4]) != v[0]) {
      pair.pass = false;
      pair.witness = {i};
    }
  }
  const std::string detail = std::to_string(maps.size()) + " maps, " + std::to_string(run.antitone_maps) + " antitone";
  for (Verdict* v : {&equiv, &rank, &pair}) {
    v->detail = detail;
    run.report.add(*v);
  }
  return run;
}

BoxplusResult boxplus_from_complement(const Lattice& lat, const LatticeMap& f) {
  require_bijection(lat, f);
  const std::size_t m = lat.size();
  BoxplusResult out;
  out.table.resize(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      out.table[x * m + y] = static_cast<std::uint32_t>(lat.join(lat.meet(x, f[y]), lat.meet(y, f[x])));
  auto at = [&](std::size_t x, std::size_t y) { return static_cast<std::size_t>(out.table[x * m + y]); };

  Verdict assoc("associativity");
  if (auto w = kernels::first_associativity_violation(out.table, m)) {
    assoc.pass = false;
    assoc.witness = {(*w)[0], (*w)[1], (*w)[2]};
  }
  out.report.add(assoc);

  Verdict comm("commutativity"), ident("identity"), inverse("self-inverse");
  const std::size_t e = lat.bottom();
  for (std::size_t x = 0; x < m; ++x) {
    if (ident.pass && (at(e, x) != x || at(x, e) != x)) {
      ident.pass = false;
      ident.witness = {x};
    }
    if (inverse.pass && at(x, x) != e) {
      inverse.pass = false;
      inverse.witness = {x};
    }
    for (std::size_t y = x + 1; y < m && comm.pass; ++y)
      if (at(x, y) != at(y, x)) {
        comm.pass = false;
        comm.witness = {x, y};
      }
  }
  out.report.add(comm);
  out.report.add(ident);
  out.report.add(inverse);

  kernels::DistanceMatrix d(m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) d.set(x, y, lattice_distance(lat, x, y));
  Verdict iso("isometry");
  if (auto w = kernels::first_translation_violation(out.table, m, d)) {
    iso.pass = false;
    iso.witness = {(*w)[0], (*w)[1], (*w)[2]};
  }
  out.report.add(iso);
  return out;
}

ComplementSearchResult theorem9_search(const Ambient& ambient) {
  if (!search_feasible(ambient))
    throw std::invalid_argument("antitone search refused for " + ambient.describe() +
                                ": supported only for q = 2 with n <= 3 and q = 3 with n <= 2");
  return search_maps(ambient, MapSearchOptions{PropertySet(PropertySet::P1), true, true});
}

}  // namespace projlab
