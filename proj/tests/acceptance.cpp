// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "projlab/cli.hpp"
#include "projlab/complement.hpp"
#include "projlab/io.hpp"
#include "projlab/lattice.hpp"
#include "projlab/linear.hpp"

using namespace projlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checks {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      out_.pass = false;
      if (!out_.detail.empty()) out_.detail += "; ";
      out_.detail += "failed: " + what;
    }
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }
  Outcome finish() {
    if (out_.pass) out_.detail = notes_;
    else if (!notes_.empty()) out_.detail += "; " + notes_;
    return out_;
  }

 private:
  Outcome out_;
  std::string notes_;
};

std::vector<std::uint64_t> convolve_counts(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::vector<std::uint64_t> binomial_row(int n) {
  std::vector<std::uint64_t> r(n + 1, 1);
  for (int k = 1; k <= n; ++k) r[k] = r[k - 1] * (n - k + 1) / k;
  return r;
}

Subspace span_mask(const Ambient& a, unsigned mask) {
  std::vector<Vector> gens;
  for (int i = 0; i < a.n(); ++i)
    if (mask >> i & 1) {
      Vector e(a.n(), 0);
      e[i] = 1;
      gens.push_back(e);
    }
  return canonicalize(gens, a);
}

Outcome counting() {
  Checks c;
  const Ambient a4(2, 4);
  const auto g = enum_grassmannian(a4, 2);
  c.require(g.size() == 35 && gaussian(4, 2, 2) == 35, "|G_2(4,2)| = 35");
  c.require(enum_projective(Ambient(2, 3)).size() == 16, "|P_2(3)| = 16");
  c.require(enum_projective(a4).size() == 67, "|P_2(4)| = 67");
  c.note("35, 16, 67");
  return c.finish();
}

Outcome metric_duality() {
  Checks c;
  const auto set = enum_projective(Ambient(2, 4));
  const std::size_t m = set.size();
  const auto d = kernels::distance_matrix(set);
  std::vector<Subspace> duals;
  for (const auto& x : set) duals.push_back(dual(x));
  bool ident = true, sym = true, tri = true, iso = true;
  std::uint64_t triples = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      ident = ident && ((d(i, j) == 0) == (i == j));
      sym = sym && d(i, j) == d(j, i);
      iso = iso && distance(duals[i], duals[j]) == d(i, j);
      for (std::size_t k = 0; k < m; ++k, ++triples) tri = tri && d(i, k) <= d(i, j) + d(j, k);
    }
  c.require(ident, "identity of indiscernibles");
  c.require(sym, "symmetry");
  c.require(tri, "triangle inequality");
  c.require(iso, "duality preserves distance");
  c.note(std::to_string(triples) + " triples, " + std::to_string(m * m) + " pairs");
  return c.finish();
}

Outcome dual_map() {
  Checks c;
  for (int n : {3, 4, 5}) {
    const auto f = build_orthogonal_map(Ambient(2, n));
    const auto rep = check_properties(f);
    const std::string tag = "n=" + std::to_string(n);
    c.require(rep.passes("P2") && rep.passes("P3") && rep.passes("P4"), tag + " P2,P3,P4");
    c.require(!rep.passes("P1"), tag + " P1 fails");
    if (!rep.passes("P1")) {
      const auto& x = f.domain()[rep.at("P1").witness.at(0)];
      c.require(intersection_dim(x, dual(x)) > 0, tag + " witness meets its dual");
      if (n == 3) c.note("P1 witness " + x.to_string());
    }
  }
  return c.finish();
}

Outcome matching_maps() {
  Checks c;
  for (auto [q, n] : {std::pair{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}}) {
    const auto f = build_matching_map(Ambient(q, n));
    c.require(check_properties(f, PropertySet::parse("P1,P2")).all_pass(),
              "q=" + std::to_string(q) + " n=" + std::to_string(n));
  }
  return c.finish();
}

Outcome parity_boundary() {
  Checks c;
  for (auto [q, n] : {std::pair{2, 3}, {3, 2}, {3, 4}}) {
    auto r = build_involutive_map(Ambient(q, n));
    const std::string tag = "q=" + std::to_string(q) + " n=" + std::to_string(n);
    c.require(std::holds_alternative<SubspaceMap>(r), tag + " constructed");
    if (auto* f = std::get_if<SubspaceMap>(&r))
      c.require(check_properties(*f, PropertySet::parse("P1,P2,P3")).all_pass(), tag + " P1,P2,P3");
  }
  for (int n : {2, 4}) {
    auto r = build_involutive_map(Ambient(2, n));
    const auto* none = std::get_if<Nonexistence>(&r);
    c.require(none && none->middle_gaussian == gaussian(n, n / 2, 2) && none->middle_gaussian % 2 == 1,
              "n=" + std::to_string(n) + " parity certificate");
  }
  const auto s = exhaustive_complement_search(Ambient(2, 2), PropertySet::parse("P1,P3"), SearchMode::prove_none);
  c.require(!s.map && s.certificate.exhausted, "exhaustive search at q=2 n=2");
  c.note("search at q=2 n=2: " + std::to_string(s.certificate.nodes) + " nodes");
  return c.finish();
}

Outcome vset() {
  Checks c;
  for (int n = 1; n <= 6; ++n) {
    const auto v = build_vset_complement(Ambient(2, n));
    const std::string tag = "n=" + std::to_string(n);
    c.require(check_properties(v.map).all_pass(), tag + " P1-P4");
    c.require(v.vset.level(1).size() == (std::size_t{1} << (n - 1)), tag + " one-dimensional count");
    if (n == 4 || n == 5) c.require(verify_prop1_lemma5(v.vset, v.map).all_pass(), tag + " triple intersections");
  }
  return c.finish();
}

Outcome hull_limits() {
  Checks c;
  const std::vector<std::pair<double, double>> limits{{2, 0.4194}, {3, 0.639}, {4, 0.7375}, {256, 0.9961}};
  std::ostringstream note;
  note.precision(4);
  for (auto [q, expect] : limits) {
    const double v = limit_product(q);
    c.require(std::abs(v - expect) < 5e-4, "limit for q=" + std::to_string(static_cast<int>(q)));
  }
  const double limit = limit_product(2);
  std::vector<double> ratios;
  for (int n = 4; n <= 8; ++n) ratios.push_back(hull_ratio(Ambient(2, n)).value());
  c.require(std::abs(ratios.back() - limit) < std::abs(ratios.front() - limit), "net convergence from n=4 to n=8");
  note << "ratio(4)=" << ratios.front() << " ratio(8)=" << ratios.back() << " limit=" << limit;
  c.note(note.str());
  return c.finish();
}

Outcome basis_codes() {
  Checks c;
  for (int n = 1; n <= 8; ++n) {
    const auto t = build_basis_code(n);
    const std::string tag = "n=" + std::to_string(n);
    c.require(t.size() == (std::size_t{1} << n), tag + " size");
    c.require(dimension_distribution(t.code()).counts == binomial_row(n), tag + " distribution");
    c.require(check_addition(t).classification == Linearity::linear, tag + " linear");
  }
  const Ambient a(2, 6);
  const auto t = build_basis_code(6);
  std::mt19937_64 rng(0);
  bool ok = true;
  for (int i = 0; i < 100; ++i) {
    const unsigned s = rng() % 64, u = rng() % 64;
    const auto x = span_mask(a, s), y = span_mask(a, u);
    ok = ok && distance(x, y) == __builtin_popcount(s ^ u) && t.add(x, y) == span_mask(a, s ^ u);
  }
  c.require(ok, "Hamming correspondence on 100 random subsets");
  return c.finish();
}

Outcome psi() {
  Checks c;
  const auto t = build_psi_code();
  c.require(t.size() == 8, "size 8");
  c.require(dimension_distribution(t.code()).counts == std::vector<std::uint64_t>{1, 0, 7, 0}, "distribution");
  c.require(check_addition(t).classification == Linearity::linear, "linear");
  c.require(t.add(psi_member(0), psi_member(1)) == psi_member(3), "psi_0 + psi_1 = psi_3");
  const auto s = search_linear_additions(t.code(), LinearSearchMode::count_all);
  c.require(s.certificate.exhausted && s.count >= 1, "count-all search");
  std::string n = "raw tables " + std::to_string(s.count);
  if (s.collineation_orbits) n += ", " + std::to_string(*s.collineation_orbits) + " orbits under linear maps";
  if (s.isometry_orbits) n += ", " + std::to_string(*s.isometry_orbits) + " under isometries";
  n += "; published: the given addition and three more";
  c.note(n);
  return c.finish();
}

Outcome lifted() {
  Checks c;
  for (int n : {3, 4, 5})
    for (int k : {1, 2}) {
      const Ambient a(2, n);
      const auto t = build_lifted_code(a, k);
      const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      c.require(t.size() == (std::size_t{1} << (k * (n - k))), tag + " size");
      bool constant = true;
      for (const auto& x : t.code()) constant = constant && x.dim() == k;
      c.require(constant, tag + " constant dimension");
      const auto rep = check_addition(t, false);
      c.require(rep.classification == Linearity::offset_identity, tag + " non-null identity classification");
      std::vector<Elem> zero(static_cast<std::size_t>(k * (n - k)), 0);
      c.require(rep.identity && t.code()[*rep.identity] == lifted_member(a, k, zero), tag + " identity [I|0]");
      for (const char* p : {"associativity", "commutativity", "identity", "self-inverse", "isometry"})
        c.require(rep.verdicts.passes(p), tag + " " + p);
    }
  return c.finish();
}

Outcome product() {
  Checks c;
  const auto psi = build_psi_code();
  const auto l3 = build_basis_code(3);
  const auto p = build_product_code(psi, l3);
  c.require(p.code().ambient().n() == 6, "ambient F_2^6");
  c.require(check_addition(p).classification == Linearity::linear, "linear");
  const auto conv = convolve_counts({1, 0, 7, 0}, {1, 3, 3, 1});
  const auto dist = dimension_distribution(p.code()).counts;
  c.require(dist == conv, "distribution equals convolution");
  std::string s;
  for (auto v : dist) s += (s.empty() ? "" : ",") + std::to_string(v);
  c.note("distribution (" + s + ")");
  return c.finish();
}

Outcome derived_complement() {
  Checks c;
  for (int n = 1; n <= 6; ++n)
    c.require(check_properties(derive_complement_from_linear(build_basis_code(n))).all_pass(),
              "n=" + std::to_string(n));
  return c.finish();
}

Outcome size_bounds() {
  Checks c;
  const Ambient a(2, 3);
  const auto all = enum_projective(a);
  std::vector<Subspace> some(all.begin(), all.begin() + 6);
  const auto r = search_linear_additions(SubspaceSet(a, some), LinearSearchMode::prove_none);
  c.require(r.prefilter && r.prefilter->find("power of two") != std::string::npos, "non-power-of-two rejected");
  std::vector<AdditionTable> codes{build_psi_code(), build_product_code(build_psi_code(), build_basis_code(3))};
  for (int n = 1; n <= 8; ++n) codes.push_back(build_basis_code(n));
  for (const auto& t : codes) c.require(verify_linear_lemmas(t).all_pass(), "lemmas on a constructed code");
  const auto b = linear_size_bound(3);
  c.require(b.established, "no linear code in P_2(3) above size 8");
  for (const auto& s : b.sizes) {
    const bool pow2 = (s.size & (s.size - 1)) == 0;
    c.require(s.eliminated, "size " + std::to_string(s.size) + " eliminated");
    if (pow2) c.require(s.reason.find("one-dimensional") != std::string::npos, "size 16 by the one-dimensional count");
    else c.require(s.reason.find("power of two") != std::string::npos, "size " + std::to_string(s.size) + " by parity");
  }
  return c.finish();
}

Outcome existence_table() {
  Checks c;
  const auto rep = table2_report(2, 3);
  c.require(rep.rows.size() == 15, "fifteen rows");
  std::uint64_t nodes = 0;
  for (const auto& row : rep.rows) {
    c.require(row.agrees, row.props.to_string() + " agrees");
    if (row.certificate) nodes += row.certificate->nodes;
  }
  for (const char* p : {"P1,P2,P4", "P1,P3,P4", "P1,P2,P3,P4"})
    for (const auto& row : rep.rows)
      if (row.props == PropertySet::parse(p))
        c.require(row.verdict == Existence::nonexistent && row.certificate && row.certificate->exhausted,
                  std::string(p) + " nonexistent by exhaustion");
  c.require(rep.forced_p2.pass, "P1 with P3 or P4 implies P2");
  std::ostringstream out, err;
  const int code = cli::dispatch({"table2", "--q", "2", "--n", "3", "--json"}, out, err);
  const auto j = nlohmann::json::parse(out.str());
  c.require(code == 0 && j["data"]["rows"].size() == 15 && j["result"] == "agrees", "ps table2 --q 2 --n 3");
  c.note(std::to_string(nodes) + " search nodes");
  return c.finish();
}

Outcome lattices() {
  Checks c;
  for (const auto& lat : {Lattice::boolean(4), Lattice::powerset(4), Lattice::linear(2, 3)}) {
    c.require(verify_lattice_laws(lat).all_pass(), lat.name() + " laws");
    const auto f = complement_map(lat);
    c.require(check_Q(lat, f).all_pass(), lat.name() + " complement Q1-Q5");
    bool swaps = true;
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (std::size_t j = i + 1; j < lat.size(); ++j) {
        const auto g = swap_images(f, i, j);
        const auto r = check_Q(lat, g, QSet(QSet::Q1));
        const auto& w = r.at("Q1").witness;
        swaps = swaps && !r.passes("Q1") && w.size() == 2 && lat.leq(w[0], w[1]) != lat.leq(g[w[1]], g[w[0]]);
      }
    c.require(swaps, lat.name() + " single swaps fail Q1 with witnesses");
    const auto run = lemma_equivalence_tests(lat, lemma_corpus(lat, 200, 0));
    c.require(run.report.all_pass(), lat.name() + " implications over random bijections");
  }
  c.require(verify_chi_identities(4).all_pass(), "characteristic vector identities");
  const auto t9 = theorem9_search(Ambient(2, 3));
  c.require(!t9.map && t9.certificate.exhausted, "antitone P1 search at q=2 n=3 exhausted");
  c.note("antitone search " + std::to_string(t9.certificate.nodes) + " nodes");
  return c.finish();
}

Outcome round_trip() {
  Checks c;
  std::size_t objects = 0;
  auto set_rt = [&](const SubspaceSet& s) {
    const auto text = io::encode_set(s);
    c.require(io::decode_set(text) == s && io::encode_set(io::decode_set(text)) == text, "set text");
    c.require(io::set_from_json(nlohmann::json::parse(io::set_to_json(s).dump())) == s, "set JSON");
    ++objects;
  };
  auto map_rt = [&](const SubspaceMap& f) {
    set_rt(f.domain());
    const auto text = io::encode_map(f);
    c.require(io::decode_map(text, f.domain()) == f && io::encode_map(io::decode_map(text, f.domain())) == text,
              "map text");
    c.require(io::map_from_json(nlohmann::json::parse(io::map_to_json(f).dump()), f.domain()) == f, "map JSON");
    ++objects;
  };
  auto table_rt = [&](const AdditionTable& t) {
    set_rt(t.code());
    const auto text = io::encode_table(t);
    c.require(io::decode_table(text, t.code()) == t && io::encode_table(io::decode_table(text, t.code())) == text,
              "table text");
    c.require(io::table_from_json(nlohmann::json::parse(io::table_to_json(t).dump()), t.code()) == t, "table JSON");
    ++objects;
  };
  set_rt(enum_projective(Ambient(2, 4)));
  for (auto [q, n] : {std::pair{2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    const Ambient a(q, n);
    map_rt(build_orthogonal_map(a));
    map_rt(build_matching_map(a));
    if (auto r = build_involutive_map(a); std::holds_alternative<SubspaceMap>(r)) map_rt(std::get<SubspaceMap>(r));
    map_rt(build_vset_complement(a).map);
  }
  for (const auto& row : table2_report(2, 3).rows)
    if (row.map) map_rt(*row.map);
  for (int n = 1; n <= 6; ++n) {
    table_rt(build_basis_code(n));
    map_rt(derive_complement_from_linear(build_basis_code(n)));
  }
  table_rt(build_psi_code());
  table_rt(build_product_code(build_psi_code(), build_basis_code(3)));
  for (int n : {3, 4, 5})
    for (int k : {1, 2}) table_rt(build_lifted_code(Ambient(2, n), k));
  c.note(std::to_string(objects) + " objects");
  return c.finish();
}

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "counting", 1, counting},
      {2, "metric axioms and duality isometry on P_2(4)", 10, metric_duality},
      {3, "dual map: P2, P3, P4 pass and P1 fails", 10, dual_map},
      {4, "matching maps satisfy P1 and P2", 30, matching_maps},
      {5, "involutive maps and the parity boundary", 120, parity_boundary},
      {6, "dual on the V-set is a complement", 60, vset},
      {7, "hull-ratio limits", 120, hull_limits},
      {8, "basis codes are linear", 60, basis_codes},
      {9, "psi code", 120, psi},
      {10, "lifted codes", 60, lifted},
      {11, "product code", 30, product},
      {12, "complements derived from basis codes", 30, derived_complement},
      {13, "size filters and linear-code lemmas", 60, size_bounds},
      {14, "existence table at q=2 n=3", 600, existence_table},
      {15, "lattice layer", 300, lattices},
      {16, "format round-trips", 10, round_trip},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      o.pass = false;
      o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    failed += !o.pass;
    std::printf("criterion %2d %s  %s (%.2f s of %.0f s)%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.name.c_str(), secs,
                c.budget_s, o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
