#include "idealis/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace idealis {

namespace {

using nlohmann::json;
using PathItem = std::variant<std::string, std::size_t>;
using Path = std::vector<PathItem>;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Byte offset of the value at path, following the raw text. Only called on
// text nlohmann already accepted, so the scanner can be lenient.
class Locator {
 public:
  explicit Locator(std::string_view text) : s_(text) {}

  std::size_t find(const Path& path) {
    ws();
    for (const PathItem& item : path) {
      if (pos_ >= s_.size()) break;
      if (s_[pos_] == '{' && std::holds_alternative<std::string>(item)) {
        ++pos_;
        bool found = false;
        while (!found && pos_ < s_.size()) {
          ws();
          if (s_[pos_] == '}') break;
          const std::string key = string_token();
          ws();
          ++pos_;  // ':'
          ws();
          if (key == std::get<std::string>(item)) {
            found = true;
          } else {
            skip_value();
            ws();
            if (pos_ < s_.size() && s_[pos_] == ',') ++pos_;
          }
        }
        if (!found) break;
      } else if (s_[pos_] == '[' && std::holds_alternative<std::size_t>(item)) {
        ++pos_;
        ws();
        for (std::size_t i = 0; i < std::get<std::size_t>(item) && pos_ < s_.size(); ++i) {
          skip_value();
          ws();
          if (pos_ < s_.size() && s_[pos_] == ',') ++pos_;
          ws();
        }
      } else {
        break;
      }
    }
    return pos_;
  }

 private:
  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string string_token() {
    std::string out;
    if (pos_ >= s_.size() || s_[pos_] != '"') return out;
    ++pos_;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      if (s_[pos_] == '\\') ++pos_;
      if (pos_ < s_.size()) out += s_[pos_++];
    }
    ++pos_;
    return out;
  }

  void skip_value() {
    ws();
    if (pos_ >= s_.size()) return;
    const char c = s_[pos_];
    if (c == '"') {
      string_token();
    } else if (c == '{' || c == '[') {
      int depth = 0;
      while (pos_ < s_.size()) {
        const char d = s_[pos_];
        if (d == '"') {
          string_token();
          continue;
        }
        if (d == '{' || d == '[') ++depth;
        if (d == '}' || d == ']') --depth;
        ++pos_;
        if (depth == 0) return;
      }
    } else {
      while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != '}' && s_[pos_] != ']' &&
             !std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      }
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const Path& path, const std::string& message) const {
    const auto [line, col] = line_column(text_, Locator(text_).find(path));
    throw ParseError(message, line, col);
  }

  std::int64_t integer(const json& v, const Path& path, std::int64_t lo, std::int64_t hi,
                       const char* what) const {
    if (!v.is_number_integer()) fail(path, std::string(what) + " must be an integer");
    std::int64_t x;
    if (v.is_number_unsigned()) {
      const auto u = v.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(hi)) fail(path, std::string(what) + " out of range");
      x = static_cast<std::int64_t>(u);
    } else {
      x = v.get<std::int64_t>();
    }
    if (x < lo || x > hi) {
      fail(path, std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return x;
  }

  const json& array(const json& obj, const Path& path, const char* key) const {
    if (!obj.contains(key)) fail(path, std::string("missing key \"") + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_array()) fail(with(path, key), std::string("\"") + key + "\" must be an array");
    return v;
  }

  // 1-based vertex list -> mask.
  VarSet vertex_set(const json& v, const Path& path, std::size_t n, const char* what) const {
    if (!v.is_array()) fail(path, std::string(what) + " must be an array of vertices");
    VarSet s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto x = static_cast<std::size_t>(
          integer(v[i], with(path, i), 1, static_cast<std::int64_t>(n), "vertex"));
      if (contains_var(s, x - 1)) fail(with(path, i), "repeated vertex " + std::to_string(x));
      s |= VarSet{1} << (x - 1);
    }
    return s;
  }

  static Path with(Path p, PathItem item) {
    p.push_back(std::move(item));
    return p;
  }

 private:
  std::string_view text_;
};

void check_keys(const Reader& rd, const json& obj, std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok |= it.key() == k;
    if (!ok) rd.fail({it.key()}, "unknown key \"" + it.key() + "\"");
  }
}

InputObject read_ideal(const Reader& rd, const json& obj) {
  check_keys(rd, obj, {"ring", "ideal"});
  const auto r = static_cast<std::size_t>(rd.integer(obj["ring"], {"ring"}, 1, 64, "ring arity"));
  const json& gens = rd.array(obj, {}, "ideal");
  std::vector<Monomial> monomials;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Path path{std::string("ideal"), i};
    const json& g = gens[i];
    if (g.is_string()) {
      try {
        monomials.push_back(parse_monomial(g.get<std::string>(), r));
      } catch (const InvalidArgument& e) {
        rd.fail(path, e.what());
      }
      continue;
    }
    if (!g.is_array()) rd.fail(path, "generator must be an exponent vector or a monomial string");
    if (g.size() != r) {
      rd.fail(path, "arity mismatch: exponent vector has length " + std::to_string(g.size()) +
                        ", ring has " + std::to_string(r) + " variables");
    }
    std::vector<Exponent> e(r);
    for (std::size_t j = 0; j < r; ++j) {
      e[j] = static_cast<Exponent>(rd.integer(g[j], Reader::with(path, j), 0,
                                              std::numeric_limits<Exponent>::max(), "exponent"));
    }
    monomials.emplace_back(std::move(e));
  }
  return MonomialIdeal(r, std::move(monomials));
}

InputObject read_graph(const Reader& rd, const json& obj) {
  check_keys(rd, obj, {"graph", "edges"});
  const auto n = static_cast<std::size_t>(rd.integer(obj["graph"], {"graph"}, 1, 30, "vertex count"));
  const json& edges = rd.array(obj, {}, "edges");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  VarSet seen_pairs[32] = {};
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Path path{std::string("edges"), i};
    if (!edges[i].is_array() || edges[i].size() != 2) rd.fail(path, "graph edge must have two vertices");
    const auto u = static_cast<std::size_t>(rd.integer(edges[i][0], Reader::with(path, std::size_t{0}), 1, n, "vertex"));
    const auto v = static_cast<std::size_t>(rd.integer(edges[i][1], Reader::with(path, std::size_t{1}), 1, n, "vertex"));
    if (u == v) rd.fail(path, "loop at vertex " + std::to_string(u));
    if (contains_var(seen_pairs[u - 1], v - 1)) rd.fail(path, "duplicate edge");
    seen_pairs[u - 1] |= VarSet{1} << (v - 1);
    seen_pairs[v - 1] |= VarSet{1} << (u - 1);
    out.emplace_back(u - 1, v - 1);
  }
  return Graph(n, std::move(out));
}

InputObject read_hypergraph(const Reader& rd, const json& obj) {
  check_keys(rd, obj, {"hypergraph", "edges"});
  const auto n = static_cast<std::size_t>(rd.integer(obj["hypergraph"], {"hypergraph"}, 1, 30, "vertex count"));
  const json& edges = rd.array(obj, {}, "edges");
  std::vector<VarSet> sets;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Path path{std::string("edges"), i};
    const VarSet e = rd.vertex_set(edges[i], path, n, "edge");
    if (std::popcount(e) < 2) rd.fail(path, "hypergraph edge needs at least two vertices");
    for (std::size_t k = 0; k < sets.size(); ++k) {
      if ((e & ~sets[k]) == 0 || (sets[k] & ~e) == 0) {
        rd.fail(path, "edges must form an antichain (clashes with edge " + std::to_string(k + 1) + ")");
      }
    }
    sets.push_back(e);
  }
  return Hypergraph(n, std::move(sets));
}

InputObject read_complex(const Reader& rd, const json& obj) {
  check_keys(rd, obj, {"complex", "facets"});
  const auto n = static_cast<std::size_t>(
      rd.integer(obj["complex"], {"complex"}, 1, static_cast<std::int64_t>(kMaxComplexGround), "ground set size"));
  const json& facets = rd.array(obj, {}, "facets");
  std::vector<VarSet> sets;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const Path path{std::string("facets"), i};
    const VarSet f = rd.vertex_set(facets[i], path, n, "facet");
    for (std::size_t k = 0; k < sets.size(); ++k) {
      if ((f & ~sets[k]) == 0 || (sets[k] & ~f) == 0) {
        rd.fail(path, "facets must form an antichain (clashes with facet " + std::to_string(k + 1) + ")");
      }
    }
    sets.push_back(f);
  }
  return SimplicialComplex(n, std::move(sets));
}

std::vector<std::size_t> vertex_list(VarSet s) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < 32; ++j) {
    if (contains_var(s, j)) out.push_back(j + 1);
  }
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Monomial parse_monomial(std::string_view text, std::size_t arity) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto number = [](std::string_view s, const char* what) -> std::int64_t {
    if (s.empty() || s.size() > 9) throw InvalidArgument(std::string("bad ") + what + " in monomial");
    std::int64_t v = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidArgument(std::string("bad ") + what + " in monomial");
      v = v * 10 + (c - '0');
    }
    return v;
  };
  text = trim(text);
  std::vector<Exponent> e(arity, 0);
  if (text == "1") return Monomial(std::move(e));
  while (true) {
    const std::size_t star = text.find('*');
    std::string_view factor = trim(text.substr(0, star));
    if (factor.empty() || factor[0] != 'x') throw InvalidArgument("monomial factors look like x3 or x3^2");
    factor.remove_prefix(1);
    const std::size_t caret = factor.find('^');
    const std::int64_t var = number(trim(factor.substr(0, caret)), "variable index");
    const std::int64_t exp = caret == std::string_view::npos ? 1 : number(trim(factor.substr(caret + 1)), "exponent");
    if (var < 1 || static_cast<std::size_t>(var) > arity) {
      throw InvalidArgument("variable x" + std::to_string(var) + " outside the ring");
    }
    const std::int64_t total = e[static_cast<std::size_t>(var - 1)] + exp;
    if (total > std::numeric_limits<Exponent>::max()) throw InvalidArgument("exponent too large");
    e[static_cast<std::size_t>(var - 1)] = static_cast<Exponent>(total);
    if (star == std::string_view::npos) break;
    text = text.substr(star + 1);
  }
  return Monomial(std::move(e));
}

InputObject parse_input(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, col] = line_column(text, offset);
    std::string what = e.what();
    if (const auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw ParseError(what, line, col);
  }
  const Reader rd(text);
  if (!doc.is_object()) rd.fail({}, "input must be a JSON object");
  if (doc.contains("ring")) return read_ideal(rd, doc);
  if (doc.contains("graph")) return read_graph(rd, doc);
  if (doc.contains("hypergraph")) return read_hypergraph(rd, doc);
  if (doc.contains("complex")) return read_complex(rd, doc);
  rd.fail({}, "expected one of the keys \"ring\", \"graph\", \"hypergraph\", \"complex\"");
}

InputObject parse_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

std::string emit(const InputObject& object) {
  nlohmann::ordered_json out;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MonomialIdeal>) {
          out["ring"] = x.arity();
          out["ideal"] = json::array();
          for (const Monomial& g : x.generators()) {
            out["ideal"].push_back(std::vector<Exponent>(g.exponents().begin(), g.exponents().end()));
          }
        } else if constexpr (std::is_same_v<T, Graph>) {
          out["graph"] = x.vertex_count();
          out["edges"] = json::array();
          for (auto [u, v] : x.edges()) out["edges"].push_back({u + 1, v + 1});
        } else if constexpr (std::is_same_v<T, Hypergraph>) {
          out["hypergraph"] = x.vertex_count();
          out["edges"] = json::array();
          for (VarSet e : x.edges()) out["edges"].push_back(vertex_list(e));
        } else {
          out["complex"] = x.ground();
          out["facets"] = json::array();
          for (VarSet f : x.facets()) out["facets"].push_back(vertex_list(f));
        }
      },
      object);
  return out.dump();
}

const char* kind_name(const InputObject& object) {
  switch (object.index()) {
    case 0: return "ideal";
    case 1: return "graph";
    case 2: return "hypergraph";
    default: return "complex";
  }
}

}  // namespace idealis
