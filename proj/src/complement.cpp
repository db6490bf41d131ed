#include "projlab/complement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace projlab {

PropertySet PropertySet::parse(const std::string& text) {
  unsigned bits = 0;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    if (tok == "P1" || tok == "p1") bits |= P1;
    else if (tok == "P2" || tok == "p2") bits |= P2;
    else if (tok == "P3" || tok == "p3") bits |= P3;
    else if (tok == "P4" || tok == "p4") bits |= P4;
    else throw std::invalid_argument("unknown property '" + tok + "' (expected P1..P4)");
  }
  return PropertySet(bits);
}

std::string PropertySet::to_string() const {
  std::string out;
  for (unsigned i = 0; i < 4; ++i)
    if (bits_ & (1u << i)) {
      if (!out.empty()) out += ",";
      out += "P" + std::to_string(i + 1);
    }
  return out;
}

SubspaceMap::SubspaceMap(SubspaceSet domain, std::vector<std::size_t> image)
    : domain_(std::move(domain)), image_(std::move(image)) {
  if (image_.size() != domain_.size())
    throw std::invalid_argument("map is not total: " + std::to_string(image_.size()) + " images for " +
                                std::to_string(domain_.size()) + " domain elements");
  for (std::size_t i : image_)
    if (i >= domain_.size()) throw std::invalid_argument("map image index outside the domain");
}

SubspaceMap SubspaceMap::tabulate(SubspaceSet domain, const std::function<Subspace(const Subspace&)>& f) {
  std::vector<std::size_t> image;
  image.reserve(domain.size());
  for (const auto& x : domain) {
    auto idx = domain.index_of(f(x));
    if (!idx) throw std::invalid_argument("map image of " + x.to_string() + " is outside the domain");
    image.push_back(*idx);
  }
  return SubspaceMap(std::move(domain), std::move(image));
}

PropertyReport check_properties(const SubspaceMap& f, PropertySet props) {
  if (!props.has(PropertySet::P4)) return check_properties(f, props, kernels::DistanceMatrix{});
  return check_properties(f, props, kernels::distance_matrix(f.domain()));
}

PropertyReport check_properties(const SubspaceMap& f, PropertySet props, const kernels::DistanceMatrix& d) {
  const SubspaceSet& u = f.domain();
  const int n = u.ambient().n();
  const std::size_t m = u.size();
  PropertyReport report;

  if (props.has(PropertySet::P1)) {
    Verdict v{"P1"};
    for (std::size_t i = 0; i < m && v.pass; ++i) {
      const Subspace& x = u[i];
      const Subspace& y = u[f(i)];
      if (x.dim() + y.dim() != n || sum_dim(x, y) != n) {
        v.pass = false;
        v.witness = {i};
        v.detail = "X = " + x.to_string() + " and f(X) = " + y.to_string() + " do not form a direct sum";
      }
    }
    report.add(v);
  }

  if (props.has(PropertySet::P2)) {
    Verdict v{"P2"};
    std::vector<std::optional<std::size_t>> preimage(m);
    for (std::size_t i = 0; i < m && v.pass; ++i) {
      const std::size_t j = f(i);
      if (u[j].dim() != n - u[i].dim()) {
        v.pass = false;
        v.witness = {i};
        v.detail = "f(X) has dimension " + std::to_string(u[j].dim()) + ", expected " +
                   std::to_string(n - u[i].dim());
      } else if (preimage[j]) {
        v.pass = false;
        v.witness = {*preimage[j], i};
        v.detail = "two subspaces share the image " + u[j].to_string();
      } else {
        preimage[j] = i;
      }
    }
    for (std::size_t j = 0; j < m && v.pass; ++j)
      if (!preimage[j]) {
        v.pass = false;
        v.witness = {j};
        v.detail = u[j].to_string() + " is not hit from its complementary level";
      }
    report.add(v);
  }

  if (props.has(PropertySet::P3)) {
    Verdict v{"P3"};
    for (std::size_t i = 0; i < m && v.pass; ++i)
      if (f(f(i)) != i) {
        v.pass = false;
        v.witness = {i};
        v.detail = "f(f(X)) != X for X = " + u[i].to_string();
      }
    report.add(v);
  }

  if (props.has(PropertySet::P4)) {
    if (d.size() != m) throw std::invalid_argument("distance matrix does not match the map domain");
    Verdict v{"P4"};
    if (auto w = kernels::first_isometry_violation(f.image(), d)) {
      v.pass = false;
      v.witness = {(*w)[0], (*w)[1]};
      v.detail = "d(X,Y) = " + std::to_string(d((*w)[0], (*w)[1])) + " but d(fX,fY) = " +
                 std::to_string(d(f((*w)[0]), f((*w)[1])));
    }
    report.add(v);
  }
  return report;
}

namespace {

void require_properties(const SubspaceMap& f, PropertySet props, const char* who) {
  const auto report = check_properties(f, props);
  if (!report.all_pass())
    throw std::logic_error(std::string(who) + " produced a map failing its properties:\n" + report.summary());
}

std::vector<int> shuffled_labels(int size, std::mt19937_64& rng) {
  std::vector<int> p(size);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Perfect matching of g; a nonzero seed relabels both sides first.
std::vector<int> perfect_bipartite(const BipartiteGraph& g, std::uint64_t seed) {
  if (seed == 0) {
    auto m = bipartite_perfect_matching(g);
    if (!m.perfect) throw std::logic_error("regular bipartite graph without a one-factor");
    return m.mate_left;
  }
  std::mt19937_64 rng(seed);
  const auto pl = shuffled_labels(g.left, rng);
  const auto pr = shuffled_labels(g.right, rng);
  BipartiteGraph h(g.left, g.right);
  for (int u = 0; u < g.left; ++u)
    for (int v : g.adj[u]) h.add_edge(pl[u], pr[v]);
  auto m = bipartite_perfect_matching(h);
  if (!m.perfect) throw std::logic_error("regular bipartite graph without a one-factor");
  std::vector<int> inv_r(g.right);
  for (int v = 0; v < g.right; ++v) inv_r[pr[v]] = v;
  std::vector<int> mate(g.left);
  for (int u = 0; u < g.left; ++u) mate[u] = inv_r[m.mate_left[pl[u]]];
  return mate;
}

std::vector<int> perfect_general(const Graph& g, std::uint64_t seed) {
  std::vector<int> label(g.order);
  std::iota(label.begin(), label.end(), 0);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    label = shuffled_labels(g.order, rng);
  }
  Graph h(g.order);
  for (int u = 0; u < g.order; ++u)
    for (int v : g.adj[u])
      if (u < v) h.add_edge(label[u], label[v]);
  auto m = general_perfect_matching(h);
  if (!m.perfect) throw std::logic_error("middle-level disjointness graph has no one-factor");
  std::vector<int> inv(g.order);
  for (int v = 0; v < g.order; ++v) inv[label[v]] = v;
  std::vector<int> mate(g.order);
  for (int u = 0; u < g.order; ++u) mate[u] = inv[m.mate[label[u]]];
  return mate;
}

// Assigns levels k < n/2 and their partners n-k through one-factors of G(k).
void pair_outer_levels(const Ambient& a, const SubspaceSet& all, std::vector<std::size_t>& image,
                       std::uint64_t seed) {
  const int n = a.n();
  for (int k = 0; 2 * k < n; ++k) {
    const auto g = disjointness_graph(a, k);
    const auto mate = perfect_bipartite(g.graph, seed);
    for (std::size_t i = 0; i < g.left.size(); ++i) {
      const std::size_t x = all.require_index(g.left[i]);
      const std::size_t y = all.require_index(g.right[mate[i]]);
      image[x] = y;
      image[y] = x;
    }
  }
}

}  // namespace

SubspaceMap build_orthogonal_map(const Ambient& ambient) {
  auto f = SubspaceMap::tabulate(enum_projective(ambient), [](const Subspace& x) { return dual(x); });
  require_properties(f, PropertySet(PropertySet::P2 | PropertySet::P3 | PropertySet::P4),
                     "build_orthogonal_map");
  return f;
}

SubspaceMap build_matching_map(const Ambient& ambient, std::uint64_t seed) {
  auto all = enum_projective(ambient);
  std::vector<std::size_t> image(all.size(), 0);
  pair_outer_levels(ambient, all, image, seed);
  if (ambient.n() % 2 == 0) {
    const auto mid = enum_grassmannian(ambient, ambient.n() / 2);
    const auto g = kernels::disjointness_adjacency(mid, mid);
    const auto mate = perfect_bipartite(g, seed);
    for (std::size_t i = 0; i < mid.size(); ++i)
      image[all.require_index(mid[i])] = all.require_index(mid[mate[i]]);
  }
  SubspaceMap f(std::move(all), std::move(image));
  require_properties(f, PropertySet(PropertySet::P1 | PropertySet::P2), "build_matching_map");
  return f;
}

std::variant<SubspaceMap, Nonexistence> build_involutive_map(const Ambient& ambient, std::uint64_t seed) {
  const int n = ambient.n(), q = ambient.q();
  if (n % 2 == 0 && q % 2 == 0) {
    Nonexistence cert{n, q, gaussian(n, n / 2, q), {}};
    if (cert.middle_gaussian % 2 != 1)
      throw std::logic_error("parity certificate failed: middle Gaussian coefficient is even");
    cert.statement = "gaussian(" + std::to_string(n) + "," + std::to_string(n / 2) + "," + std::to_string(q) +
                     ") = " + cert.middle_gaussian.str() +
                     " is odd, so any involution of the middle level fixes some X, and X meet X != {0}";
    return cert;
  }
  auto all = enum_projective(ambient);
  std::vector<std::size_t> image(all.size(), 0);
  pair_outer_levels(ambient, all, image, seed);
  if (n % 2 == 0) {
    const auto mid = enum_grassmannian(ambient, n / 2);
    const auto bip = kernels::disjointness_adjacency(mid, mid);
    Graph g(static_cast<int>(mid.size()));
    for (int u = 0; u < bip.left; ++u)
      for (int v : bip.adj[u])
        if (u < v) g.add_edge(u, v);
    const auto mate = perfect_general(g, seed);
    for (std::size_t i = 0; i < mid.size(); ++i)
      image[all.require_index(mid[i])] = all.require_index(mid[mate[i]]);
  }
  SubspaceMap f(std::move(all), std::move(image));
  require_properties(f, PropertySet(PropertySet::P1 | PropertySet::P2 | PropertySet::P3), "build_involutive_map");
  return f;
}

VSetComplement build_vset_complement(const Ambient& ambient) {
  std::vector<Subspace> members;
  for (int k = 0; k <= ambient.n(); ++k)
    for_each_in_grassmannian(ambient, k, [&](const Subspace& x) {
      if (has_trivial_hull(x)) members.push_back(x);
    });
  SubspaceSet v(ambient, std::move(members));
  auto f = SubspaceMap::tabulate(v, [](const Subspace& x) { return dual(x); });
  require_properties(f, PropertySet::all(), "build_vset_complement");
  return {std::move(v), std::move(f)};
}

HullRatio hull_ratio(const Ambient& ambient, bool parallel) {
  const BigInt size = projective_size(ambient.n(), ambient.q());
  if (size > BigInt(kEnumerationLimit))
    throw std::length_error("hull ratio enumeration of " + size.str() + " subspaces exceeds the limit");
  const auto counts = parallel ? kernels::trivial_hull_counts(ambient) : kernels::trivial_hull_counts_serial(ambient);
  HullRatio r;
  r.q = ambient.q();
  r.n = ambient.n();
  r.trivial_by_dim = counts.trivial;
  r.total_by_dim = counts.total;
  for (auto c : counts.trivial) r.trivial += c;
  for (auto c : counts.total) r.total += c;
  const std::uint64_t g = std::gcd(r.trivial, r.total);
  r.numerator = r.trivial / g;
  r.denominator = r.total / g;
  return r;
}

double limit_product(double q, double tolerance) {
  if (q < 2) throw std::invalid_argument("limit product needs q >= 2");
  double product = 1.0;
  double term = 1.0 / q;
  while (term >= tolerance) {
    product /= 1.0 + term;
    term /= q;
  }
  return product;
}

}  // namespace projlab
