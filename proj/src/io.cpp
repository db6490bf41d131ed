#include "projlab/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace projlab::io {

namespace {

void require_digits(const Ambient& a) {
  if (a.q() > 9) throw std::invalid_argument("text format needs q <= 9, got q = " + std::to_string(a.q()));
}

class Lines {
 public:
  explicit Lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      lines_.push_back({number, line});
    }
    last_ = number;
  }

  bool done() const { return pos_ == lines_.size(); }
  int line() const { return done() ? last_ + 1 : lines_[pos_].first; }
  const std::string& next(const std::string& expecting) {
    if (done()) throw ParseError(line(), "unexpected end of input, expected " + expecting);
    return lines_[pos_++].second;
  }
  void finish() const {
    if (!done()) throw ParseError(line(), "trailing content");
  }

 private:
  std::vector<std::pair<int, std::string>> lines_;
  std::size_t pos_ = 0;
  int last_ = 0;
};

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long long parse_int(const std::string& s, int line, const std::string& what) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ParseError(line, "expected an integer for " + what + ", got '" + s + "'");
  return v;
}

// Parses "keyword a=1 b=2" and returns the values in the order of `keys`.
std::vector<long long> parse_header(const std::string& text, int line, const std::string& keyword,
                                    const std::vector<std::string>& keys) {
  const auto toks = split(text);
  if (toks.empty() || toks[0] != keyword) throw ParseError(line, "expected header '" + keyword + "'");
  if (toks.size() != keys.size() + 1) throw ParseError(line, "header needs exactly " + std::to_string(keys.size()) + " fields");
  std::vector<long long> values;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const std::string prefix = keys[i] + "=";
    if (toks[i + 1].rfind(prefix, 0) != 0) throw ParseError(line, "expected field '" + prefix + "'");
    values.push_back(parse_int(toks[i + 1].substr(prefix.size()), line, keys[i]));
  }
  return values;
}

Subspace read_subspace(Lines& in, const Ambient& a) {
  const int head = in.line();
  const std::string k_line = in.next("subspace literal 'k=<k>'");
  if (k_line.rfind("k=", 0) != 0) throw ParseError(head, "expected 'k=<k>'");
  const long long k = parse_int(k_line.substr(2), head, "k");
  if (k < 0 || k > a.n()) throw ParseError(head, "dimension " + std::to_string(k) + " outside 0.." + std::to_string(a.n()));
  std::vector<Elem> entries;
  for (long long r = 0; r < k; ++r) {
    const int line = in.line();
    const std::string row = in.next("subspace row");
    if (static_cast<int>(row.size()) != a.n()) throw ParseError(line, "row must have " + std::to_string(a.n()) + " digits");
    for (char c : row) {
      if (c < '0' || c - '0' >= a.q()) throw ParseError(line, std::string("invalid field digit '") + c + "'");
      entries.push_back(static_cast<Elem>(c - '0'));
    }
  }
  try {
    return Subspace::from_rref(a, static_cast<int>(k), std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(head, e.what());
  }
}

std::string literal(const Subspace& x) {
  std::string out = "k=" + std::to_string(x.dim()) + "\n";
  for (int r = 0; r < x.dim(); ++r) {
    for (Elem e : x.row(r)) out += static_cast<char>('0' + e);
    out += '\n';
  }
  return out;
}

std::string digits(std::span<const Elem> row) {
  std::string s;
  for (Elem e : row) s += static_cast<char>('0' + e);
  return s;
}

std::vector<std::size_t> read_index_lines(Lines& in, std::size_t m) {
  std::vector<std::size_t> image(m);
  std::vector<bool> seen(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const int line = in.line();
    const auto toks = split(in.next("map line"));
    if (toks.size() != 2) throw ParseError(line, "expected '<index> <image>'");
    const long long x = parse_int(toks[0], line, "index"), y = parse_int(toks[1], line, "image");
    if (x < 0 || x >= static_cast<long long>(m)) throw ParseError(line, "index " + toks[0] + " out of range");
    if (y < 0 || y >= static_cast<long long>(m)) throw ParseError(line, "image " + toks[1] + " out of range");
    if (seen[x]) throw ParseError(line, "index " + toks[0] + " assigned twice");
    seen[x] = true;
    image[x] = static_cast<std::size_t>(y);
  }
  return image;
}

std::string index_lines(std::span<const std::size_t> image) {
  std::string out;
  for (std::size_t i = 0; i < image.size(); ++i) out += std::to_string(i) + " " + std::to_string(image[i]) + "\n";
  return out;
}

void require_bijection(const LatticeMap& f) {
  std::vector<bool> hit(f.size(), false);
  for (std::size_t y : f) {
    if (y >= f.size() || hit[y]) throw std::invalid_argument("lattice map is not a bijection");
    hit[y] = true;
  }
}

}  // namespace

std::string encode_subspace(const Subspace& x) {
  require_digits(x.ambient());
  return literal(x);
}

Subspace decode_subspace(const std::string& text, const Ambient& ambient) {
  require_digits(ambient);
  Lines in(text);
  auto x = read_subspace(in, ambient);
  in.finish();
  return x;
}

std::string encode_set(const SubspaceSet& set) {
  const Ambient& a = set.ambient();
  require_digits(a);
  std::string out = "subspaceset q=" + std::to_string(a.q()) + " n=" + std::to_string(a.n()) +
                    " count=" + std::to_string(set.size()) + "\n";
  for (const auto& x : set) out += literal(x);
  return out;
}

SubspaceSet decode_set(const std::string& text) {
  Lines in(text);
  const int head = in.line();
  const auto h = parse_header(in.next("subspaceset header"), head, "subspaceset", {"q", "n", "count"});
  std::optional<Ambient> a;
  try {
    if (h[0] < 2 || h[0] > 9 || h[1] < 1 || h[1] > 16) throw std::invalid_argument("q or n out of range");
    a.emplace(static_cast<int>(h[0]), static_cast<int>(h[1]));
  } catch (const std::exception& e) {
    throw ParseError(head, std::string("unsupported ambient: ") + e.what());
  }
  if (h[2] < 0) throw ParseError(head, "negative count");
  std::vector<Subspace> members;
  for (long long i = 0; i < h[2]; ++i) {
    const int line = in.line();
    members.push_back(read_subspace(in, *a));
    if (members.size() > 1 && !(members[members.size() - 2] < members.back()))
      throw ParseError(line, "members must be strictly increasing in canonical order");
  }
  in.finish();
  return SubspaceSet(*a, std::move(members));
}

std::string encode_map(const SubspaceMap& f) {
  const Ambient& a = f.domain().ambient();
  std::string out = "subspacemap q=" + std::to_string(a.q()) + " n=" + std::to_string(a.n()) +
                    " count=" + std::to_string(f.size()) + "\n";
  return out + index_lines(f.image());
}

SubspaceMap decode_map(const std::string& text, const SubspaceSet& domain) {
  Lines in(text);
  const int head = in.line();
  const auto h = parse_header(in.next("subspacemap header"), head, "subspacemap", {"q", "n", "count"});
  const Ambient& a = domain.ambient();
  if (h[0] != a.q() || h[1] != a.n()) throw ParseError(head, "map ambient differs from the companion set");
  if (h[2] != static_cast<long long>(domain.size()))
    throw ParseError(head, "map count " + std::to_string(h[2]) + " differs from set size " + std::to_string(domain.size()));
  auto image = read_index_lines(in, domain.size());
  in.finish();
  return SubspaceMap(domain, std::move(image));
}

std::string encode_table(const AdditionTable& t) {
  const std::size_t m = t.size();
  std::string out = "addtable count=" + std::to_string(m) + "\n";
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) out += (y ? " " : "") + std::to_string(t(x, y));
    out += "\n";
  }
  return out;
}

AdditionTable decode_table(const std::string& text, const SubspaceSet& code) {
  Lines in(text);
  const int head = in.line();
  const auto h = parse_header(in.next("addtable header"), head, "addtable", {"count"});
  const std::size_t m = code.size();
  if (h[0] != static_cast<long long>(m))
    throw ParseError(head, "table count " + std::to_string(h[0]) + " differs from set size " + std::to_string(m));
  std::vector<std::uint32_t> table;
  table.reserve(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    const int line = in.line();
    const auto toks = split(in.next("table row"));
    if (toks.size() != m) throw ParseError(line, "row needs " + std::to_string(m) + " entries");
    for (const auto& tok : toks) {
      const long long v = parse_int(tok, line, "entry");
      if (v < 0 || v >= static_cast<long long>(m)) throw ParseError(line, "entry " + tok + " out of range");
      table.push_back(static_cast<std::uint32_t>(v));
    }
  }
  in.finish();
  return AdditionTable(code, std::move(table));
}

std::string encode_lattice_map(const LatticeMap& f) {
  return "latticemap count=" + std::to_string(f.size()) + "\n" + index_lines(f);
}

LatticeMap decode_lattice_map(const std::string& text, std::size_t size) {
  Lines in(text);
  const int head = in.line();
  const auto h = parse_header(in.next("latticemap header"), head, "latticemap", {"count"});
  if (h[0] != static_cast<long long>(size))
    throw ParseError(head, "map count " + std::to_string(h[0]) + " differs from lattice size " + std::to_string(size));
  auto image = read_index_lines(in, size);
  in.finish();
  try {
    require_bijection(image);
  } catch (const std::invalid_argument& e) {
    throw ParseError(head, e.what());
  }
  return image;
}

nlohmann::json set_to_json(const SubspaceSet& set) {
  require_digits(set.ambient());
  nlohmann::json members = nlohmann::json::array();
  for (const auto& x : set) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < x.dim(); ++r) rows.push_back(digits(x.row(r)));
    members.push_back(std::move(rows));
  }
  return {{"q", set.ambient().q()}, {"n", set.ambient().n()}, {"members", std::move(members)}};
}

SubspaceSet set_from_json(const nlohmann::json& j) {
  try {
    const Ambient a(j.at("q").get<int>(), j.at("n").get<int>());
    require_digits(a);
    std::vector<Subspace> members;
    for (const auto& rows : j.at("members")) {
      std::vector<Elem> entries;
      for (const auto& row : rows) {
        const auto s = row.get<std::string>();
        if (static_cast<int>(s.size()) != a.n()) throw std::invalid_argument("row '" + s + "' has the wrong length");
        for (char c : s) {
          if (c < '0' || c - '0' >= a.q()) throw std::invalid_argument(std::string("invalid field digit '") + c + "'");
          entries.push_back(static_cast<Elem>(c - '0'));
        }
      }
      members.push_back(Subspace::from_rref(a, static_cast<int>(rows.size()), std::move(entries)));
      if (members.size() > 1 && !(members[members.size() - 2] < members.back()))
        throw std::invalid_argument("members must be strictly increasing in canonical order");
    }
    return SubspaceSet(a, std::move(members));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed subspace set JSON: ") + e.what());
  }
}

nlohmann::json map_to_json(const SubspaceMap& f) {
  const auto img = f.image();
  return {{"q", f.domain().ambient().q()},
          {"n", f.domain().ambient().n()},
          {"count", f.size()},
          {"image", std::vector<std::size_t>(img.begin(), img.end())}};
}

SubspaceMap map_from_json(const nlohmann::json& j, const SubspaceSet& domain) {
  try {
    if (j.at("q").get<int>() != domain.ambient().q() || j.at("n").get<int>() != domain.ambient().n())
      throw std::invalid_argument("map ambient differs from the companion set");
    if (j.at("count").get<std::size_t>() != domain.size()) throw std::invalid_argument("map count differs from set size");
    return SubspaceMap(domain, j.at("image").get<std::vector<std::size_t>>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed map JSON: ") + e.what());
  }
}

nlohmann::json table_to_json(const AdditionTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t x = 0; x < t.size(); ++x) {
    std::vector<std::uint32_t> row(t.table().begin() + x * t.size(), t.table().begin() + (x + 1) * t.size());
    rows.push_back(std::move(row));
  }
  return {{"count", t.size()}, {"table", std::move(rows)}};
}

AdditionTable table_from_json(const nlohmann::json& j, const SubspaceSet& code) {
  try {
    const std::size_t m = code.size();
    if (j.at("count").get<std::size_t>() != m) throw std::invalid_argument("table count differs from set size");
    std::vector<std::uint32_t> flat;
    for (const auto& row : j.at("table")) {
      auto r = row.get<std::vector<std::uint32_t>>();
      if (r.size() != m) throw std::invalid_argument("table row has the wrong length");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return AdditionTable(code, std::move(flat));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed table JSON: ") + e.what());
  }
}

nlohmann::json lattice_map_to_json(const LatticeMap& f) { return {{"count", f.size()}, {"image", f}}; }

LatticeMap lattice_map_from_json(const nlohmann::json& j, std::size_t size) {
  try {
    if (j.at("count").get<std::size_t>() != size) throw std::invalid_argument("map count differs from lattice size");
    auto f = j.at("image").get<LatticeMap>();
    if (f.size() != size) throw std::invalid_argument("image has the wrong length");
    require_bijection(f);
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed lattice map JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace projlab::io
