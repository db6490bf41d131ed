#include "projlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "projlab/complement.hpp"
#include "projlab/io.hpp"
#include "projlab/kernels.hpp"
#include "projlab/lattice.hpp"
#include "projlab/linear.hpp"
#include "projlab/projspace.hpp"

namespace projlab::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string big(const BigInt& v) { return v.str(); }

std::string distribution_string(const DimensionDistribution& d) {
  std::vector<std::string> parts;
  for (auto c : d.counts) parts.push_back(std::to_string(c));
  return "(" + join(parts, ",") + ")";
}

// Inline literal "q:n:row,row", e.g. "2:3:110,001"; the null space is "2:3:".
Subspace parse_inline(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw UsageError("subspace literal '" + text + "' must look like q:n:row,row");
  int q = 0, n = 0;
  try {
    q = std::stoi(text.substr(0, c1));
    n = std::stoi(text.substr(c1 + 1, c2 - c1 - 1));
  } catch (const std::exception&) {
    throw UsageError("subspace literal '" + text + "' has a malformed q or n");
  }
  const Ambient a(q, n);
  std::string body = "k=";
  const std::string rows = text.substr(c2 + 1);
  std::vector<std::string> lines;
  std::stringstream ss(rows);
  for (std::string row; std::getline(ss, row, ',');) lines.push_back(row);
  body += std::to_string(lines.size()) + "\n";
  for (const auto& row : lines) body += row + "\n";
  return io::decode_subspace(body, a);
}

std::string inline_literal(const Subspace& x) {
  std::vector<std::string> rows;
  for (int r = 0; r < x.dim(); ++r) {
    std::string s;
    for (Elem e : x.row(r)) s += static_cast<char>('0' + e);
    rows.push_back(s);
  }
  return std::to_string(x.ambient().q()) + ":" + std::to_string(x.n()) + ":" + join(rows, ",");
}

bool looks_like_json(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

nlohmann::json parse_json(const std::string& text, const std::string& path) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

SubspaceSet read_set(const std::string& path) {
  const auto text = io::read_file(path);
  return looks_like_json(text) ? io::set_from_json(parse_json(text, path)) : io::decode_set(text);
}

SubspaceMap read_map(const std::string& path, const SubspaceSet& set) {
  const auto text = io::read_file(path);
  return looks_like_json(text) ? io::map_from_json(parse_json(text, path), set) : io::decode_map(text, set);
}

AdditionTable read_table(const std::string& path, const SubspaceSet& set) {
  const auto text = io::read_file(path);
  return looks_like_json(text) ? io::table_from_json(parse_json(text, path), set) : io::decode_table(text, set);
}

LatticeMap read_lattice_map(const std::string& path, std::size_t size) {
  const auto text = io::read_file(path);
  return looks_like_json(text) ? io::lattice_map_from_json(parse_json(text, path), size)
                               : io::decode_lattice_map(text, size);
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") out << content;
  else io::write_file(path, content);
}

struct Options {
  // global
  std::uint64_t seed = 0;
  int jobs = 0;
  std::string json;
  std::string expect;
  // shared
  int q = 2;
  int n = 0;
  int k = -1;
  std::string props;
  std::string mode;
  std::string set;
  std::string map;
  std::string table;
  std::string out_set;
  std::string out_map;
  std::string out_table;
  std::string format = "text";
  bool list = false;
  // dist / dual
  std::string x;
  std::string y;
  // hull-ratio
  int n_min = 1;
  int n_max = 0;
  // complement build
  std::string method;
  // linear
  std::string construction;
  std::string perm;
  std::string left = "psi";
  std::string right = "basis";
  int n_left = 3;
  int n_right = 3;
  bool allow_offset = false;
  // lattice
  std::string lattice;
  std::string builtin;
  std::string swap;
  std::size_t trials = 200;
  // fmt
  std::string kind;
  std::string in;
  std::string out = "-";
  std::size_t size = 0;
};

class Command {
 public:
  Command(const Options& o, RunReport& r, std::ostream& out) : o_(o), r_(r), out_(out) {}

  void verdicts(const PropertyReport& report, const std::function<std::string(std::size_t)>& label,
                const std::string& prefix = "") {
    r_.add(report, prefix);
    for (const auto& v : report.verdicts()) {
      out_ << "  " << prefix << v.property << ": " << (v.pass ? "pass" : "FAIL");
      if (!v.pass && !v.witness.empty()) {
        std::vector<std::string> w;
        for (auto i : v.witness) w.push_back(label ? label(i) : std::to_string(i));
        out_ << "  witness " << join(w, " ");
      }
      if (!v.detail.empty()) out_ << "  (" << v.detail << ")";
      out_ << "\n";
    }
  }

  void certificate(const ExhaustionCertificate& c, const std::string& key = "search") {
    r_.nodes[key] = c.nodes;
    nlohmann::json prunes = nlohmann::json::object();
    for (const auto& [rule, count] : c.prunes) prunes[rule] = count;
    r_.data[key] = {{"statement", c.statement}, {"nodes", c.nodes}, {"leaves", c.leaves},
                    {"exhausted", c.exhausted}, {"prunes", prunes}};
    out_ << "  " << c.statement << "\n  nodes " << c.nodes << ", leaves " << c.leaves
         << (c.exhausted ? ", exhausted" : "") << "\n";
    for (const auto& [rule, count] : c.prunes) out_ << "  pruned by " << rule << ": " << count << "\n";
  }

  void write_set(const std::string& path, const SubspaceSet& set) {
    if (path.empty()) return;
    write_output(path, o_.format == "json" ? io::set_to_json(set).dump(2) + "\n" : io::encode_set(set), out_);
  }
  void write_map(const std::string& path, const SubspaceMap& f) {
    if (path.empty()) return;
    write_output(path, o_.format == "json" ? io::map_to_json(f).dump(2) + "\n" : io::encode_map(f), out_);
  }
  void write_table(const std::string& path, const AdditionTable& t) {
    if (path.empty()) return;
    write_output(path, o_.format == "json" ? io::table_to_json(t).dump(2) + "\n" : io::encode_table(t), out_);
  }

  // ---- projective space ----

  void enumerate() {
    const Ambient a(o_.q, o_.n);
    const auto set = o_.k >= 0 ? enum_grassmannian(a, o_.k) : enum_projective(a);
    const BigInt expected = o_.k >= 0 ? gaussian(o_.n, o_.k, o_.q) : projective_size(o_.n, o_.q);
    const auto dist = dimension_distribution(set);
    Verdict v("count-formula");
    v.pass = BigInt(set.size()) == expected;
    if (!v.pass) v.detail = "enumerated " + std::to_string(set.size()) + ", formula " + big(expected);
    PropertyReport rep;
    rep.add(v);
    out_ << a.describe() << (o_.k >= 0 ? " dimension " + std::to_string(o_.k) : "") << "\n";
    out_ << "  count " << set.size() << "\n  distribution " << distribution_string(dist) << "\n";
    verdicts(rep, nullptr);
    if (o_.list)
      for (const auto& x : set) out_ << "  " << inline_literal(x) << "\n";
    r_.result = std::to_string(set.size());
    r_.ok = rep.all_pass();
    r_.data = {{"count", set.size()}, {"distribution", dist.counts}};
    write_set(o_.out_set, set);
  }

  void gauss() {
    if (o_.q < 2 || o_.n < 0 || o_.k < 0) throw UsageError("gauss needs --q >= 2, --n >= 0 and --k >= 0");
    const auto g = big(gaussian(o_.n, o_.k, o_.q));
    out_ << g << "\n";
    r_.result = g;
    r_.data = {{"gaussian", g}};
  }

  void dist() {
    const auto x = parse_inline(o_.x), y = parse_inline(o_.y);
    if (!(x.ambient() == y.ambient()))
      throw UsageError("ambient spaces differ: " + x.ambient().describe() + " vs " + y.ambient().describe());
    const int d = distance(x, y);
    out_ << d << "\n";
    r_.result = std::to_string(d);
    r_.data = {{"distance", d}, {"dim_x", x.dim()}, {"dim_y", y.dim()}, {"dim_intersection", intersection_dim(x, y)}};
  }

  void dual_cmd() {
    const auto x = parse_inline(o_.x);
    const auto d = dual(x);
    out_ << inline_literal(d) << "\n";
    r_.result = inline_literal(d);
    r_.data = {{"dual", inline_literal(d)}, {"dim", d.dim()}};
  }

  void hull() {
    if (o_.n_max < o_.n_min) throw UsageError("--n-max must be at least --n-min");
    const double limit = limit_product(o_.q);
    nlohmann::json rows = nlohmann::json::array();
    out_ << "n  trivial-hull  total  ratio\n";
    std::string last;
    for (int n = o_.n_min; n <= o_.n_max; ++n) {
      const auto h = hull_ratio(Ambient(o_.q, n));
      std::ostringstream ratio;
      ratio.precision(6);
      ratio << std::fixed << h.value();
      out_ << n << "  " << h.trivial << "  " << h.total << "  " << h.numerator << "/" << h.denominator << " = "
           << ratio.str() << "\n";
      last = std::to_string(h.numerator) + "/" + std::to_string(h.denominator);
      rows.push_back({{"n", n}, {"trivial", h.trivial}, {"total", h.total}, {"numerator", h.numerator},
                      {"denominator", h.denominator}, {"ratio", h.value()}});
    }
    out_ << "limit " << limit << "\n";
    r_.result = last;
    r_.data = {{"rows", rows}, {"limit", limit}};
  }

  // ---- complement maps ----

  void complement_build() {
    const Ambient a(o_.q, o_.n);
    std::optional<SubspaceMap> f;
    PropertySet expected;
    if (o_.method == "orth") {
      f = build_orthogonal_map(a);
      expected = PropertySet::parse("P2,P3,P4");
    } else if (o_.method == "matching") {
      f = build_matching_map(a, o_.seed);
      expected = PropertySet::parse("P1,P2");
    } else if (o_.method == "involutive") {
      auto res = build_involutive_map(a, o_.seed);
      if (auto* none = std::get_if<Nonexistence>(&res)) {
        out_ << a.describe() << ": " << none->statement << "\n";
        r_.result = "nonexistent";
        r_.ok = false;
        r_.data = {{"middle_gaussian", big(none->middle_gaussian)}, {"statement", none->statement}};
        return;
      }
      f = std::get<SubspaceMap>(std::move(res));
      expected = PropertySet::parse("P1,P2,P3");
    } else if (o_.method == "vset") {
      f = build_vset_complement(a).map;
      expected = PropertySet::all();
    } else {
      throw UsageError("unknown method '" + o_.method + "'");
    }
    const auto rep = check_properties(*f, PropertySet::all());
    const auto& dom = f->domain();
    out_ << o_.method << " map on " << dom.size() << " subspaces of " << a.describe() << "\n";
    verdicts(rep, [&](std::size_t i) { return dom[i].to_string(); });
    bool ok = true;
    for (const auto& v : rep.verdicts())
      if (expected.has(PropertySet::parse(v.property).bits()) && !v.pass) ok = false;
    r_.ok = ok;
    r_.result = ok ? "constructed" : "fail";
    r_.data = {{"size", dom.size()}, {"expected", expected.to_string()}};
    write_set(o_.out_set, dom);
    write_map(o_.out_map, *f);
  }

  void complement_check() {
    const auto set = read_set(o_.set);
    const auto f = read_map(o_.map, set);
    const auto props = o_.props.empty() ? PropertySet::all() : PropertySet::parse(o_.props);
    const auto rep = check_properties(f, props);
    out_ << "map on " << set.size() << " subspaces of " << set.ambient().describe() << "\n";
    verdicts(rep, [&](std::size_t i) { return set[i].to_string(); });
    r_.ok = rep.all_pass();
    r_.result = r_.ok ? "pass" : "fail";
  }

  void complement_search() {
    const Ambient a(o_.q, o_.n);
    const auto props = PropertySet::parse(o_.props);
    SearchMode mode;
    if (o_.mode == "find") mode = SearchMode::find_one;
    else if (o_.mode == "prove-none") mode = SearchMode::prove_none;
    else throw UsageError("unknown mode '" + o_.mode + "'");
    const auto res = exhaustive_complement_search(a, props, mode);
    out_ << "search for " << props.to_string() << " on " << a.describe() << "\n";
    certificate(res.certificate);
    r_.result = res.map ? "found" : "none";
    r_.ok = mode == SearchMode::find_one ? res.map.has_value() : !res.map.has_value();
    if (res.map) {
      const auto& dom = res.map->domain();
      for (std::size_t i = 0; i < res.map->size(); ++i) {
        out_ << "  " << dom[i].to_string() << " -> " << dom[(*res.map)(i)].to_string() << "\n";
      }
      write_set(o_.out_set, dom);
      write_map(o_.out_map, *res.map);
    }
  }

  void table2() {
    const auto rep = table2_report(o_.q, o_.n);
    nlohmann::json rows = nlohmann::json::array();
    bool all = true;
    out_ << "existence of maps with each property subset on P_" << o_.q << "(" << o_.n << ")\n";
    for (const auto& row : rep.rows) {
      const auto p = row.props.to_string();
      out_ << "  " << p << std::string(p.size() < 12 ? 12 - p.size() : 1, ' ') << to_string(row.verdict) << "  by "
           << row.method << "  expected " << row.expected_existence << " (" << row.expected_basis << ")  "
           << (row.agrees ? "agrees" : "DIFFERS");
      if (row.certificate) out_ << "  nodes " << row.certificate->nodes;
      if (row.parity) out_ << "  middle gaussian " << big(row.parity->middle_gaussian);
      if (!row.note.empty()) out_ << "  [" << row.note << "]";
      out_ << "\n";
      all = all && row.agrees;
      nlohmann::json j = {{"props", p},
                          {"verdict", to_string(row.verdict)},
                          {"method", row.method},
                          {"expected", row.expected_existence},
                          {"expected_basis", row.expected_basis},
                          {"agrees", row.agrees},
                          {"note", row.note}};
      if (row.certificate) {
        j["nodes"] = row.certificate->nodes;
        j["exhausted"] = row.certificate->exhausted;
        r_.nodes[p] = row.certificate->nodes;
      }
      if (row.parity) j["middle_gaussian"] = big(row.parity->middle_gaussian);
      if (row.map) j["map"] = io::map_to_json(*row.map)["image"];
      rows.push_back(std::move(j));
    }
    PropertyReport lemma;
    lemma.add(rep.forced_p2);
    verdicts(lemma, nullptr);
    r_.ok = all && rep.forced_p2.pass;
    r_.result = all ? "agrees" : "differs";
    r_.data = {{"q", o_.q}, {"n", o_.n}, {"rows", rows}};
  }

  // ---- linear codes ----

  AdditionTable named_code(const std::string& name, int n) {
    if (name == "psi") return build_psi_code();
    if (name == "basis") return build_basis_code(n);
    throw UsageError("unknown product factor '" + name + "' (psi or basis)");
  }

  void linear_report(const AdditionTable& t, bool allow_offset) {
    const auto& code = t.code();
    const auto lin = check_addition(t, !allow_offset);
    out_ << "code of " << code.size() << " subspaces of " << code.ambient().describe() << ", distribution "
         << distribution_string(dimension_distribution(code)) << "\n";
    auto label = [&](std::size_t i) { return code[i].to_string(); };
    verdicts(lin.verdicts, label);
    out_ << "  classification: " << to_string(lin.classification) << "\n";
    if (lin.classification == Linearity::linear) verdicts(verify_linear_lemmas(t), label);
    r_.result = to_string(lin.classification);
    r_.ok = lin.classification == Linearity::linear || (allow_offset && lin.classification == Linearity::offset_identity);
    r_.data = {{"size", code.size()},
               {"distribution", dimension_distribution(code).counts},
               {"classification", to_string(lin.classification)},
               {"null_identity", lin.null_identity}};
    for (const auto& v : r_.verdicts) r_.ok = r_.ok && v.pass;
  }

  void linear_build() {
    std::optional<AdditionTable> t;
    bool offset = false;
    if (o_.construction == "basis") {
      t = build_basis_code(o_.n);
    } else if (o_.construction == "psi") {
      t = build_psi_code();
    } else if (o_.construction == "lifted") {
      std::vector<int> perm;
      std::stringstream ss(o_.perm);
      for (std::string tok; std::getline(ss, tok, ',');) perm.push_back(std::stoi(tok));
      t = build_lifted_code(Ambient(2, o_.n), o_.k, perm);
      offset = true;
    } else if (o_.construction == "product") {
      t = build_product_code(named_code(o_.left, o_.n_left), named_code(o_.right, o_.n_right));
    } else {
      throw UsageError("unknown construction '" + o_.construction + "'");
    }
    out_ << o_.construction << " ";
    linear_report(*t, offset);
    write_set(o_.out_set, t->code());
    write_table(o_.out_table, *t);
  }

  void linear_check() {
    const auto set = read_set(o_.set);
    const auto t = read_table(o_.table, set);
    linear_report(t, o_.allow_offset);
  }

  void linear_search() {
    const auto set = read_set(o_.set);
    LinearSearchMode mode;
    if (o_.mode == "find") mode = LinearSearchMode::find_one;
    else if (o_.mode == "count") mode = LinearSearchMode::count_all;
    else if (o_.mode == "prove-none") mode = LinearSearchMode::prove_none;
    else throw UsageError("unknown mode '" + o_.mode + "'");
    const auto res = search_linear_additions(set, mode);
    out_ << "isometric additions on " << set.size() << " subspaces of " << set.ambient().describe() << "\n";
    if (res.prefilter) out_ << "  rejected before search: " << *res.prefilter << "\n";
    certificate(res.certificate);
    out_ << "  additions found: " << res.count << "\n";
    r_.data["count"] = res.count;
    if (res.prefilter) r_.data["prefilter"] = *res.prefilter;
    auto orbit = [&](const char* key, const char* text, const std::optional<std::uint64_t>& orbits,
                     const std::optional<std::uint64_t>& order) {
      if (!orbits) return;
      out_ << "  " << text << ": " << *orbits << " (group order " << order.value_or(0) << ")\n";
      r_.data[key] = {{"orbits", *orbits}, {"group_order", order.value_or(0)}};
    };
    orbit("isometry", "orbits under distance-preserving relabelings", res.isometry_orbits, res.isometry_group_order);
    orbit("collineation", "orbits under invertible linear maps", res.collineation_orbits,
          res.collineation_group_order);
    r_.result = std::to_string(res.count);
    r_.ok = mode == LinearSearchMode::prove_none ? res.count == 0 : res.count > 0;
    if (!res.tables.empty()) write_table(o_.out_table, res.tables.front());
  }

  // ---- lattices ----

  Lattice make_lattice() {
    if (o_.lattice == "boolean") return Lattice::boolean(o_.n);
    if (o_.lattice == "powerset") return Lattice::powerset(o_.n);
    if (o_.lattice == "linear") return Lattice::linear(o_.q, o_.n);
    throw UsageError("unknown lattice '" + o_.lattice + "'");
  }

  void lattice_laws() {
    const auto lat = make_lattice();
    auto label = [&](std::size_t i) { return lat.label(i); };
    out_ << lat.name() << " with " << lat.size() << " elements\n";
    verdicts(verify_lattice_laws(lat), label);
    if (lat.kind() != Lattice::Kind::linear) verdicts(verify_chi_identities(o_.n), nullptr);
    out_ << "  complement map:\n";
    verdicts(check_Q(lat, complement_map(lat)), label, "complement.");
    r_.ok = std::all_of(r_.verdicts.begin(), r_.verdicts.end(), [](const Verdict& v) { return v.pass; });
    r_.result = r_.ok ? "pass" : "fail";
    r_.data = {{"lattice", lat.name()}, {"size", lat.size()}};
  }

  void lattice_check() {
    const auto lat = make_lattice();
    LatticeMap f;
    if (!o_.map.empty()) f = read_lattice_map(o_.map, lat.size());
    else if (o_.builtin == "complement" || o_.builtin.empty()) f = complement_map(lat);
    else if (o_.builtin == "identity") f = identity_map(lat);
    else throw UsageError("unknown builtin map '" + o_.builtin + "'");
    if (!o_.swap.empty()) {
      const auto comma = o_.swap.find(',');
      if (comma == std::string::npos) throw UsageError("--swap expects i,j");
      const std::size_t i = std::stoul(o_.swap.substr(0, comma)), j = std::stoul(o_.swap.substr(comma + 1));
      if (i >= f.size() || j >= f.size()) throw UsageError("--swap index out of range");
      f = swap_images(std::move(f), i, j);
    }
    const auto props = o_.props.empty() ? QSet::all() : QSet::parse(o_.props);
    out_ << lat.name() << "\n";
    verdicts(check_Q(lat, f, props), [&](std::size_t i) { return lat.label(i); });
    r_.ok = std::all_of(r_.verdicts.begin(), r_.verdicts.end(), [](const Verdict& v) { return v.pass; });
    r_.result = r_.ok ? "pass" : "fail";
  }

  void lattice_lemmas() {
    std::vector<Lattice> lats;
    if (o_.lattice.empty()) {
      lats.push_back(Lattice::boolean(4));
      lats.push_back(Lattice::powerset(4));
      lats.push_back(Lattice::linear(2, 3));
    } else {
      lats.push_back(make_lattice());
    }
    for (const auto& lat : lats) {
      const auto corpus = lemma_corpus(lat, o_.trials, o_.seed);
      const auto run = lemma_equivalence_tests(lat, corpus);
      out_ << lat.name() << ": " << corpus.size() << " maps, " << run.antitone_maps << " antitone\n";
      verdicts(run.report, nullptr, lat.name() + ".");
      r_.data[lat.name()] = {{"maps", corpus.size()}, {"antitone", run.antitone_maps}};
    }
    r_.ok = std::all_of(r_.verdicts.begin(), r_.verdicts.end(), [](const Verdict& v) { return v.pass; });
    r_.result = r_.ok ? "pass" : "fail";
  }

  void lattice_theorem9() {
    const Ambient a(o_.q, o_.n);
    const auto res = theorem9_search(a);
    out_ << "antitone bijections with P1 on " << a.describe() << "\n";
    certificate(res.certificate);
    if (res.map) {
      const auto& dom = res.map->domain();
      for (std::size_t i = 0; i < res.map->size(); ++i)
        out_ << "  " << dom[i].to_string() << " -> " << dom[(*res.map)(i)].to_string() << "\n";
      write_set(o_.out_set, dom);
      write_map(o_.out_map, *res.map);
    }
    r_.result = res.map ? "found" : "none";
    r_.ok = !res.map && res.certificate.exhausted;
  }

  // ---- formats ----

  void fmt(bool encode) {
    const auto text = io::read_file(o_.in);
    std::string output;
    bool round_trip = false;
    auto need_set = [&]() {
      if (o_.set.empty()) throw UsageError("--set is required for --kind " + o_.kind);
      return read_set(o_.set);
    };
    // encode: JSON -> text; decode: text -> JSON. Both re-read their output.
    if (o_.kind == "set") {
      if (encode) {
        const auto s = io::set_from_json(parse_json(text, o_.in));
        output = io::encode_set(s);
        round_trip = io::decode_set(output) == s;
      } else {
        const auto s = io::decode_set(text);
        output = io::set_to_json(s).dump(2) + "\n";
        round_trip = io::encode_set(s) == text && io::set_from_json(nlohmann::json::parse(output)) == s;
      }
    } else if (o_.kind == "map") {
      const auto set = need_set();
      if (encode) {
        const auto f = io::map_from_json(parse_json(text, o_.in), set);
        output = io::encode_map(f);
        round_trip = io::decode_map(output, set) == f;
      } else {
        const auto f = io::decode_map(text, set);
        output = io::map_to_json(f).dump(2) + "\n";
        round_trip = io::encode_map(f) == text && io::map_from_json(nlohmann::json::parse(output), set) == f;
      }
    } else if (o_.kind == "table") {
      const auto set = need_set();
      if (encode) {
        const auto t = io::table_from_json(parse_json(text, o_.in), set);
        output = io::encode_table(t);
        round_trip = io::decode_table(output, set) == t;
      } else {
        const auto t = io::decode_table(text, set);
        output = io::table_to_json(t).dump(2) + "\n";
        round_trip = io::encode_table(t) == text && io::table_from_json(nlohmann::json::parse(output), set) == t;
      }
    } else if (o_.kind == "latticemap") {
      if (encode) {
        const auto j = parse_json(text, o_.in);
        const auto f = io::lattice_map_from_json(j, j.value("count", std::size_t{0}));
        output = io::encode_lattice_map(f);
        round_trip = io::decode_lattice_map(output, f.size()) == f;
      } else {
        const auto f = io::decode_lattice_map(text, o_.size);
        output = io::lattice_map_to_json(f).dump(2) + "\n";
        round_trip = io::encode_lattice_map(f) == text;
      }
    } else {
      throw UsageError("unknown kind '" + o_.kind + "' (set, map, table or latticemap)");
    }
    write_output(o_.out, output, out_);
    Verdict v("round-trip");
    v.pass = round_trip;
    if (!round_trip) v.detail = encode ? "re-decoding the output differs" : "input is valid but not in canonical layout";
    r_.verdicts.push_back(v);
    r_.ok = round_trip;
    r_.result = round_trip ? "pass" : "fail";
    if (o_.out != "-") out_ << "round-trip: " << r_.result << "\n";
  }

 private:
  const Options& o_;
  RunReport& r_;
  std::ostream& out_;
};

void record_parameters(const CLI::App* app, nlohmann::json& params) {
  for (const auto* opt : app->get_options()) {
    if (opt->count() == 0) continue;
    const auto& names = opt->get_lnames();
    if (names.empty()) continue;
    const auto& name = names.front();
    if (name == "json" || name == "help" || name == "seed") continue;
    const auto& res = opt->results();
    params[name] = res.empty() ? "true" : join(res, ",");
  }
}

}  // namespace

void RunReport::add(const PropertyReport& report, const std::string& prefix) {
  for (auto v : report.verdicts()) {
    v.property = prefix + v.property;
    verdicts.push_back(std::move(v));
  }
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json vs = nlohmann::json::array();
  nlohmann::json witnesses = nlohmann::json::object();
  for (const auto& v : verdicts) {
    vs.push_back({{"property", v.property}, {"pass", v.pass}, {"witness", v.witness}, {"detail", v.detail}});
    if (!v.pass) witnesses[v.property] = v.witness;
  }
  return {{"command", command}, {"parameters", parameters}, {"seed", seed},          {"verdicts", vs},
          {"witnesses", witnesses}, {"nodes", nodes},        {"result", result},      {"ok", ok},
          {"data", data},           {"wall_time_ms", wall_time_ms}};
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Subspaces of F_q^n: enumeration, complement maps, linear codes and lattices", "ps"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "Seed for randomized procedures")->capture_default_str();
  app.add_option("--jobs", o.jobs, "Worker threads for parallel kernels (0 = all)")->capture_default_str();
  auto* json_opt = app.add_option("--json", o.json, "Write the JSON run report to PATH, or to stdout without PATH")
                       ->expected(0, 1);
  app.add_option("--expect", o.expect, "Expected outcome: pass, fail, or the exact result value");

  std::string command;
  std::function<void(Command&)> action;
  auto leaf = [&](CLI::App* sub, const std::string& name, std::function<void(Command&)> fn) {
    sub->fallthrough();
    sub->callback([&command, &action, name, fn] {
      command = name;
      action = fn;
    });
    return sub;
  };
  auto ambient = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "Field size")->capture_default_str();
    sub->add_option("--n", o.n, "Ambient dimension")->required();
  };
  auto outputs = [&](CLI::App* sub, bool table) {
    sub->add_option("--out-set", o.out_set, "Write the subspace set ('-' for stdout)");
    if (table) sub->add_option("--out-table", o.out_table, "Write the addition table ('-' for stdout)");
    else sub->add_option("--out-map", o.out_map, "Write the map ('-' for stdout)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  };

  auto* en = leaf(app.add_subcommand("enum", "Enumerate P_q(n) or one Grassmannian"), "enum", &Command::enumerate);
  ambient(en);
  en->add_option("--k", o.k, "Restrict to dimension k");
  en->add_flag("--list", o.list, "Print every member");
  en->add_option("--out-set", o.out_set, "Write the set ('-' for stdout)");
  en->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* ga = leaf(app.add_subcommand("gauss", "Gaussian coefficient"), "gauss", &Command::gauss);
  ga->add_option("--q", o.q)->required();
  ga->add_option("--n", o.n)->required();
  ga->add_option("--k", o.k)->required();

  auto* di = leaf(app.add_subcommand("dist", "Subspace distance of two literals q:n:row,row"), "dist", &Command::dist);
  di->add_option("--x", o.x)->required();
  di->add_option("--y", o.y)->required();

  auto* du = leaf(app.add_subcommand("dual", "Orthogonal complement of a literal q:n:row,row"), "dual",
                  &Command::dual_cmd);
  du->add_option("--x", o.x)->required();

  auto* hr = leaf(app.add_subcommand("hull-ratio", "Fraction of subspaces with trivial hull"), "hull-ratio",
                  &Command::hull);
  hr->add_option("--q", o.q)->capture_default_str();
  hr->add_option("--n-min", o.n_min)->capture_default_str();
  hr->add_option("--n-max", o.n_max)->required();

  auto* co = app.add_subcommand("complement", "Complement maps on P_q(n)");
  co->require_subcommand(1);
  co->fallthrough();
  auto* cb = leaf(co->add_subcommand("build", "Construct a map"), "complement build", &Command::complement_build);
  cb->add_option("--method", o.method)->required()->check(CLI::IsMember({"orth", "matching", "involutive", "vset"}));
  ambient(cb);
  outputs(cb, false);
  auto* cc = leaf(co->add_subcommand("check", "Check P1-P4 on a map file"), "complement check",
                  &Command::complement_check);
  cc->add_option("--props", o.props, "Properties, e.g. P1,P2 (default all)");
  cc->add_option("--set", o.set)->required();
  cc->add_option("--map", o.map)->required();
  auto* cs = leaf(co->add_subcommand("search", "Exhaustive search for a map"), "complement search",
                  &Command::complement_search);
  cs->add_option("--props", o.props)->required();
  ambient(cs);
  cs->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"find", "prove-none"}));
  outputs(cs, false);

  auto* t2 = leaf(app.add_subcommand("table2", "Existence of maps for every property subset"), "table2",
                  &Command::table2);
  ambient(t2);

  auto* li = app.add_subcommand("linear", "Codes with isometric addition");
  li->require_subcommand(1);
  li->fallthrough();
  auto* lb = leaf(li->add_subcommand("build", "Construct a code with its addition"), "linear build",
                  &Command::linear_build);
  lb->add_option("--construction", o.construction)
      ->required()
      ->check(CLI::IsMember({"basis", "psi", "lifted", "product"}));
  lb->add_option("--n", o.n, "Ambient dimension (basis, lifted)");
  lb->add_option("--k", o.k, "Row count (lifted)");
  lb->add_option("--perm", o.perm, "Column permutation, comma separated (lifted)");
  lb->add_option("--left", o.left, "Left factor: psi or basis (product)")->capture_default_str();
  lb->add_option("--right", o.right, "Right factor: psi or basis (product)")->capture_default_str();
  lb->add_option("--n-left", o.n_left, "Dimension of a basis left factor")->capture_default_str();
  lb->add_option("--n-right", o.n_right, "Dimension of a basis right factor")->capture_default_str();
  outputs(lb, true);
  auto* lc = leaf(li->add_subcommand("check", "Check an addition table"), "linear check", &Command::linear_check);
  lc->add_option("--set", o.set)->required();
  lc->add_option("--table", o.table)->required();
  lc->add_flag("--allow-non-null-identity", o.allow_offset, "Accept an identity other than {0}");
  auto* ls = leaf(li->add_subcommand("search", "Search for isometric additions on a set"), "linear search",
                  &Command::linear_search);
  ls->add_option("--set", o.set)->required();
  ls->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"find", "count", "prove-none"}));
  ls->add_option("--out-table", o.out_table, "Write the first table found");
  ls->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* la = app.add_subcommand("lattice", "Bounded lattices and antitone maps");
  la->require_subcommand(1);
  la->fallthrough();
  auto lattice_opts = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--lattice", o.lattice)->check(CLI::IsMember({"boolean", "powerset", "linear"}));
    auto* n = sub->add_option("--n", o.n);
    if (required) {
      opt->required();
      n->required();
    }
    sub->add_option("--q", o.q, "Field size (linear)")->capture_default_str();
  };
  auto* ll = leaf(la->add_subcommand("laws", "Lattice, rank and distance laws"), "lattice laws",
                  &Command::lattice_laws);
  lattice_opts(ll, true);
  auto* lk = leaf(la->add_subcommand("check", "Check Q1-Q5 on a map"), "lattice check", &Command::lattice_check);
  lattice_opts(lk, true);
  lk->add_option("--props", o.props, "Properties, e.g. Q1,Q5 (default all)");
  lk->add_option("--map", o.map, "Lattice map file");
  lk->add_option("--builtin", o.builtin, "complement or identity (default complement)");
  lk->add_option("--swap", o.swap, "Exchange the images of elements i,j");
  auto* lm = leaf(la->add_subcommand("lemmas", "Q1-Q5 implications over a corpus of maps"), "lattice lemmas",
                  &Command::lattice_lemmas);
  lattice_opts(lm, false);
  lm->add_option("--trials", o.trials, "Random bijections per lattice")->capture_default_str();
  auto* l9 = leaf(la->add_subcommand("theorem9", "Search for an antitone bijection with P1"), "lattice theorem9",
                  &Command::lattice_theorem9);
  ambient(l9);
  outputs(l9, false);

  auto* fm = app.add_subcommand("fmt", "Convert between text and JSON formats");
  fm->require_subcommand(1);
  fm->fallthrough();
  auto fmt_opts = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"set", "map", "table", "latticemap"}));
    sub->add_option("--in", o.in)->required();
    sub->add_option("--out", o.out, "Output path ('-' for stdout)")->capture_default_str();
    sub->add_option("--set", o.set, "Companion set file (map, table)");
  };
  auto* fe = leaf(fm->add_subcommand("encode", "JSON to text"), "fmt encode", [](Command& c) { c.fmt(true); });
  fmt_opts(fe);
  auto* fd = leaf(fm->add_subcommand("decode", "Text to JSON"), "fmt decode", [](Command& c) { c.fmt(false); });
  fmt_opts(fd);
  fd->add_option("--size", o.size, "Lattice size (latticemap)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  RunReport report;
  report.command = command;
  report.seed = o.seed;
  for (const auto* a = &app; a;) {
    record_parameters(a, report.parameters);
    const CLI::App* next = nullptr;
    for (const auto* s : a->get_subcommands()) next = s;
    a = next;
  }
  if (o.jobs > 0) kernels::set_threads(o.jobs);

  const bool json_stdout = json_opt->count() > 0 && o.json.empty();
  std::ostringstream sink;
  std::ostream& text = json_stdout ? static_cast<std::ostream&>(sink) : out;
  const auto start = std::chrono::steady_clock::now();
  try {
    Command cmd(o, report, text);
    action(cmd);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  int code = report.ok ? kExitOk : kExitFailure;
  if (!o.expect.empty()) {
    const bool match = o.expect == "pass" ? report.ok : o.expect == "fail" ? !report.ok : report.result == o.expect;
    if (!match) err << "expectation '" << o.expect << "' not met: result " << report.result << "\n";
    code = match ? kExitOk : kExitFailure;
  }
  if (json_opt->count() > 0) {
    const auto dumped = report.to_json().dump(2) + "\n";
    try {
      write_output(json_stdout ? "-" : o.json, dumped, out);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace projlab::cli
