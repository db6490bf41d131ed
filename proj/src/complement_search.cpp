#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "projlab/complement.hpp"

namespace projlab {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

// Depth-first assignment of f over a fixed visiting order.
class MapSearch {
 public:
  MapSearch(const Ambient& a, const MapSearchOptions& opt)
      : opt_(opt), all_(enum_projective(a)), m_(all_.size()), f_(m_, kUnset), used_(m_, false) {
    const int n = a.n();
    if (opt_.props.has(PropertySet::P4)) d_ = kernels::distance_matrix(all_);
    if (opt_.antitone) {
      le_.assign(m_ * m_, false);
      for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < m_; ++j) le_[i * m_ + j] = sum_dim(all_[i], all_[j]) == all_[j].dim();
    }
    candidates_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j) {
        const int k = all_[i].dim();
        if (opt_.props.has(PropertySet::P1)) {
          if (all_[j].dim() == n - k && intersection_dim(all_[i], all_[j]) == 0) candidates_[i].push_back(j);
        } else if (opt_.props.has(PropertySet::P2)) {
          if (all_[j].dim() == n - k) candidates_[i].push_back(j);
        } else {
          candidates_[i].push_back(j);
        }
      }
    std::vector<int> levels{1};
    if (n - 1 != 1 && n - 1 >= 0) levels.push_back(n - 1);
    for (int k = 0; k <= n; ++k)
      if (std::find(levels.begin(), levels.end(), k) == levels.end()) levels.push_back(k);
    for (int k : levels)
      if (k <= n)
        for (std::size_t i : all_.level(k)) order_.push_back(i);
  }

  ComplementSearchResult run() {
    ComplementSearchResult r;
    const bool found = descend(0);
    cert_.exhausted = !found;
    if (found) {
      r.map.emplace(all_, f_);
      const auto report = check_properties(*r.map, opt_.props);
      if (!report.all_pass()) throw std::logic_error("search produced a map failing its properties");
    }
    r.certificate = cert_;
    return r;
  }

 private:
  bool injective() const {
    return opt_.bijective || opt_.props.has(PropertySet::P2) || opt_.props.has(PropertySet::P4);
  }

  void prune(const char* rule) { ++cert_.prunes[rule]; }

  // Checks x -> y against every earlier assignment; records the rule that fails.
  bool consistent(std::size_t x, std::size_t y) {
    if (injective() && used_[y]) {
      prune("injectivity");
      return false;
    }
    for (std::size_t z : assigned_) {
      if (opt_.props.has(PropertySet::P4) && d_(y, f_[z]) != d_(x, z)) {
        prune("P4-distance");
        return false;
      }
      if (opt_.antitone) {
        if ((le_[z * m_ + x] && !le_[y * m_ + f_[z]]) || (le_[x * m_ + z] && !le_[f_[z] * m_ + y])) {
          prune("antitone");
          return false;
        }
      }
    }
    return true;
  }

  void assign(std::size_t x, std::size_t y) {
    f_[x] = y;
    used_[y] = true;
    assigned_.push_back(x);
  }

  void unassign(std::size_t x) {
    used_[f_[x]] = false;
    f_[x] = kUnset;
    assigned_.pop_back();
  }

  bool descend(std::size_t depth) {
    while (depth < order_.size() && f_[order_[depth]] != kUnset) ++depth;
    if (depth == order_.size()) {
      ++cert_.leaves;
      return true;
    }
    const std::size_t x = order_[depth];
    if (candidates_[x].empty()) prune("P1-no-candidate");
    for (std::size_t y : candidates_[x]) {
      if (opt_.props.has(PropertySet::P3) && y != x && f_[y] != kUnset) {
        prune("P3-consistency");
        continue;
      }
      if (!consistent(x, y)) continue;
      assign(x, y);
      bool paired = false;
      if (opt_.props.has(PropertySet::P3) && y != x) {
        if (!consistent(y, x)) {
          unassign(x);
          continue;
        }
        assign(y, x);
        paired = true;
      }
      ++cert_.nodes;
      if (descend(depth + 1)) return true;
      if (paired) unassign(y);
      unassign(x);
    }
    return false;
  }

  MapSearchOptions opt_;
  SubspaceSet all_;
  std::size_t m_;
  std::vector<std::size_t> f_;
  std::vector<bool> used_;
  std::vector<std::size_t> assigned_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<bool> le_;
  kernels::DistanceMatrix d_;
  ExhaustionCertificate cert_;
};

std::string describe_search(const Ambient& a, const MapSearchOptions& o) {
  std::string s = "maps on P_" + std::to_string(a.q()) + "(" + std::to_string(a.n()) + ")";
  std::string c = o.props.to_string();
  if (o.antitone) c += c.empty() ? "antitone" : ",antitone";
  if (o.bijective) c += c.empty() ? "bijective" : ",bijective";
  return s + " satisfying {" + c + "}";
}

}  // namespace

ComplementSearchResult search_maps(const Ambient& ambient, const MapSearchOptions& options) {
  MapSearch search(ambient, options);
  auto r = search.run();
  r.certificate.statement = r.map ? "found one of the " + describe_search(ambient, options)
                                  : "no " + describe_search(ambient, options) + " exist; search tree exhausted";
  return r;
}

bool search_feasible(const Ambient& a) { return (a.q() == 2 && a.n() <= 3) || (a.q() == 3 && a.n() <= 2); }

ComplementSearchResult exhaustive_complement_search(const Ambient& ambient, PropertySet props, SearchMode mode) {
  if (!search_feasible(ambient))
    throw std::invalid_argument("exhaustive search refused for " + ambient.describe() +
                                ": supported only for q = 2 with n <= 3 and q = 3 with n <= 2");
  if (props.empty()) throw std::invalid_argument("exhaustive search needs at least one property");
  auto r = search_maps(ambient, MapSearchOptions{props, false, false});
  if (mode == SearchMode::prove_none && r.map)
    r.certificate.statement += "; the nonexistence claim is refuted by this map";
  return r;
}

Verdict hyperplane_triple_check(const SubspaceSet& set) {
  const int n = set.ambient().n();
  Verdict v{"triple-intersection"};
  if (n < 3) {
    v.detail = "vacuous below n = 3";
    return v;
  }
  const auto hyper = set.level(n - 1);
  for (std::size_t a = 0; a < hyper.size() && v.pass; ++a)
    for (std::size_t b = a + 1; b < hyper.size() && v.pass; ++b) {
      const Subspace xy = intersect(set[hyper[a]], set[hyper[b]]);
      for (std::size_t c = b + 1; c < hyper.size() && v.pass; ++c) {
        const int dim = intersection_dim(xy, set[hyper[c]]);
        if (dim != n - 3) {
          v.pass = false;
          v.witness = {hyper[a], hyper[b], hyper[c]};
          v.detail = "three hyperplanes meet in dimension " + std::to_string(dim) + ", expected " +
                     std::to_string(n - 3);
        }
      }
    }
  return v;
}

PropertyReport verify_prop1_lemma5(const SubspaceSet& set, const SubspaceMap& f) {
  if (set.ambient().q() != 2) throw std::invalid_argument("one-dimensional bound applies to q = 2 only");
  if (!(f.domain() == set)) throw std::invalid_argument("map domain differs from the set");
  const auto props = check_properties(f);
  if (!props.all_pass()) throw std::invalid_argument("map is not a complement on the set:\n" + props.summary());
  const int n = set.ambient().n();
  PropertyReport report;
  Verdict bound{"one-dim-bound"};
  const auto ones = set.level(1);
  const std::size_t limit = std::size_t{1} << (n - 1);
  bound.detail = std::to_string(ones.size()) + " one-dimensional members, bound " + std::to_string(limit);
  if (ones.size() > limit) {
    bound.pass = false;
    bound.witness = ones;
  }
  report.add(bound);
  report.add(hyperplane_triple_check(set));
  return report;
}

std::string to_string(Existence e) {
  switch (e) {
    case Existence::constructed: return "constructed";
    case Existence::nonexistent: return "nonexistent";
    case Existence::out_of_scope: return "out-of-search-scope";
  }
  return "?";
}

std::vector<PropertySet> table2_property_order() {
  using P = PropertySet;
  return {P(P::P1),          P(P::P2),          P(P::P3),          P(P::P4),
          P(P::P1 | P::P2),  P(P::P1 | P::P3),  P(P::P1 | P::P4),  P(P::P2 | P::P3),
          P(P::P2 | P::P4),  P(P::P3 | P::P4),  P(P::P1 | P::P2 | P::P3),
          P(P::P1 | P::P2 | P::P4),             P(P::P1 | P::P3 | P::P4),
          P(P::P2 | P::P3 | P::P4),             P(15)};
}

namespace {

struct Expectation {
  std::string existence;
  std::string basis;
  bool exists;
};

Expectation expected_existence(PropertySet p, int q, int n) {
  const bool p1 = p.has(PropertySet::P1), p3 = p.has(PropertySet::P3), p4 = p.has(PropertySet::P4);
  if (!p1) return {"Yes", "orthogonal complement", true};
  if (p4) {
    if (p3) return {"No", "no complement on the whole space", false};
    return {"No", "no isometric direct-sum map on the whole space", false};
  }
  if (p3) return {"Yes (iff n odd or q odd)", "involutive level matching", n % 2 == 1 || q % 2 == 1};
  return {"Yes", "level matching", true};
}

}  // namespace

Table2Report table2_report(int q, int n) {
  const Ambient ambient(q, n);
  Table2Report report;
  report.q = q;
  report.n = n;
  report.forced_p2 = Verdict{"P1&(P3|P4)=>P2"};
  const bool feasible = search_feasible(ambient);

  auto record_forced_p2 = [&](const SubspaceMap& f, PropertySet props) {
    if (!report.forced_p2.pass) return;
    const auto all = check_properties(f);
    const bool premise = all.passes("P1") && (all.passes("P3") || all.passes("P4"));
    if (premise && !all.passes("P2")) {
      report.forced_p2.pass = false;
      report.forced_p2.detail = "map constructed for {" + props.to_string() + "} fails P2";
    }
  };

  std::optional<SubspaceMap> orth, matching;
  std::optional<std::variant<SubspaceMap, Nonexistence>> involutive;

  for (PropertySet props : table2_property_order()) {
    Table2Row row;
    row.props = props;
    const auto exp = expected_existence(props, q, n);
    row.expected_existence = exp.existence;
    row.expected_basis = exp.basis;
    row.expected = exp.exists;

    const bool p1 = props.has(PropertySet::P1), p3 = props.has(PropertySet::P3), p4 = props.has(PropertySet::P4);
    if (!p1) {
      if (!orth) orth = build_orthogonal_map(ambient);
      row.map = orth;
      row.method = "orthogonal";
    } else if (!p4 && !p3) {
      if (!matching) matching = build_matching_map(ambient);
      row.map = matching;
      row.method = "matching";
    } else if (!p4) {
      if (!involutive) involutive = build_involutive_map(ambient);
      if (auto* f = std::get_if<SubspaceMap>(&*involutive)) {
        row.map = *f;
        row.method = "involutive";
      } else {
        row.parity = std::get<Nonexistence>(*involutive);
        row.method = "parity";
        if (feasible) {
          auto s = exhaustive_complement_search(ambient, props, SearchMode::prove_none);
          row.certificate = s.certificate;
          if (s.map) row.map = std::move(s.map);
          row.method = "parity+exhaustion";
        }
      }
    } else if (feasible) {
      auto s = exhaustive_complement_search(ambient, props, SearchMode::prove_none);
      row.certificate = s.certificate;
      row.map = std::move(s.map);
      row.method = "exhaustion";
    } else {
      row.method = "none";
    }

    if (row.map) {
      const auto check = check_properties(*row.map, props);
      if (!check.all_pass()) throw std::logic_error("table row map fails its properties:\n" + check.summary());
      record_forced_p2(*row.map, props);
      row.verdict = Existence::constructed;
    } else if (row.parity || (row.certificate && row.certificate->exhausted)) {
      row.verdict = Existence::nonexistent;
    } else {
      row.verdict = Existence::out_of_scope;
    }

    if (row.verdict == Existence::out_of_scope) {
      row.agrees = false;
      row.note = "not decided at this size";
    } else {
      row.agrees = (row.verdict == Existence::constructed) == row.expected;
      if (!row.agrees)
        row.note = row.verdict == Existence::constructed
                       ? "a map exists here although the expected answer is no"
                       : "no map exists here although the expected answer is yes";
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace projlab
