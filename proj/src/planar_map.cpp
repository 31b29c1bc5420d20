#include "coarse/planar_map.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace coarse {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string join_path(const std::vector<std::string>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '_';
    out += path[i];
  }
  return out;
}

std::vector<std::string> extend(const std::vector<std::string>& path, std::string segment) {
  std::vector<std::string> out = path;
  out.push_back(std::move(segment));
  return out;
}

}  // namespace

std::string format_label(const EdgeLabel& label) {
  return std::visit(
      [](const auto& l) -> std::string {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, IntegerLabel>) {
          return "[" + l.value.str() + "]";
        } else if constexpr (std::is_same_v<T, InverseLabel>) {
          return "[1/" + std::string(l.sign < 0 ? "-" : "") + l.m.str() + "]";
        } else if constexpr (std::is_same_v<T, TangleLabel>) {
          return format_tangle(l.expr);
        } else {
          return "";
        }
      },
      label);
}

std::string MapEdge::name() const { return join_path(path); }

// ---------------------------------------------------------------------------
// Construction and validation

PlanarMap PlanarMap::build(MapParts parts) {
  PlanarMap m;
  const std::size_t n_vertices = parts.vertices.size();
  const std::size_t n_darts = 2 * parts.edges.size();
  if (parts.edges.empty()) throw map_error("map has no edges");

  std::set<std::string> edge_names;
  for (const auto& e : parts.edges) {
    if (e.tail >= n_vertices || e.head >= n_vertices) throw map_error("edge " + e.name() + " has an unknown endpoint");
    if (e.tail == e.head) throw map_error("edge " + e.name() + " is a loop");
    if (!edge_names.insert(e.name()).second) throw map_error("duplicate edge name " + e.name());
  }
  if (parts.rotation.size() != n_vertices) throw map_error("rotation count does not match vertex count");

  m.dart_vertex_.assign(n_darts, kNone);
  m.dart_pos_.assign(n_darts, kNone);
  for (std::size_t v = 0; v < n_vertices; ++v) {
    const auto& rot = parts.rotation[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      DartId d = rot[i];
      if (d >= n_darts) throw map_error("rotation of " + parts.vertices[v] + " names an unknown dart");
      if (m.dart_vertex_[d] != kNone) {
        throw map_error("dart " + parts.edges[edge_of(d)].name() + (is_head(d) ? ".h" : ".t") +
                        " appears twice in the rotation system");
      }
      const MapEdge& e = parts.edges[edge_of(d)];
      if ((is_head(d) ? e.head : e.tail) != v) {
        throw map_error("dart " + e.name() + (is_head(d) ? ".h" : ".t") + " is listed at the wrong vertex " +
                        parts.vertices[v]);
      }
      m.dart_vertex_[d] = v;
      m.dart_pos_[d] = i;
    }
  }
  for (DartId d = 0; d < n_darts; ++d) {
    if (m.dart_vertex_[d] == kNone) {
      throw map_error("rotation omits dart " + parts.edges[edge_of(d)].name() + (is_head(d) ? ".h" : ".t"));
    }
  }
  m.parts_ = std::move(parts);

  // Faces in order of their smallest dart.
  m.face_of_dart_.assign(n_darts, kNone);
  for (DartId start = 0; start < n_darts; ++start) {
    if (m.face_of_dart_[start] != kNone) continue;
    Face f;
    f.id = m.faces_.size();
    DartId d = start;
    do {
      m.face_of_dart_[d] = f.id;
      f.darts.push_back(d);
      d = m.next_in_face(d);
    } while (d != start);
    m.faces_.push_back(std::move(f));
  }
  if (m.euler_characteristic() != 2) {
    throw map_error("Euler check failed: V - E + F = " + std::to_string(m.euler_characteristic()) +
                    " (expected 2; data is not a connected planar map)");
  }

  if (m.parts_.outer_dart >= n_darts) throw map_error("outer dart not found");
  m.outer_face_ = m.face_of_dart_[m.parts_.outer_dart];

  // Face names: declared ones first, the outer face defaults to R0, the rest
  // become R1, R2, ... by smallest dart.
  std::set<std::string> used;
  std::vector<std::string> names(m.faces_.size());
  std::vector<std::pair<std::string, DartId>> normalized;
  for (const auto& [name, dart] : m.parts_.face_names) {
    if (!is_identifier(name)) throw map_error("bad region name '" + name + "'");
    if (dart >= n_darts) throw map_error("region " + name + " names an unknown dart");
    std::size_t f = m.face_of_dart_[dart];
    if (!names[f].empty()) throw map_error("face named twice: " + names[f] + " and " + name);
    if (!used.insert(name).second) throw map_error("duplicate region name " + name);
    names[f] = name;
    normalized.emplace_back(name, dart);
    m.declared_order_.push_back(f);
  }
  auto fresh_name = [&](std::size_t& counter) {
    std::string n;
    do {
      n = "R" + std::to_string(counter++);
    } while (used.count(n));
    used.insert(n);
    return n;
  };
  std::size_t counter = 0;
  if (names[m.outer_face_].empty()) {
    names[m.outer_face_] = fresh_name(counter);
    normalized.emplace_back(names[m.outer_face_], m.parts_.outer_dart);
    m.declared_order_.push_back(m.outer_face_);
  }
  counter = std::max<std::size_t>(counter, 1);
  for (auto& f : m.faces_) {
    if (names[f.id].empty()) {
      names[f.id] = fresh_name(counter);
      normalized.emplace_back(names[f.id], f.darts.front());
      m.declared_order_.push_back(f.id);
    }
    f.name = names[f.id];
  }
  m.parts_.face_names = std::move(normalized);
  return m;
}

std::size_t PlanarMap::dart_vertex(DartId d) const { return dart_vertex_[d]; }

DartId PlanarMap::next_in_face(DartId d) const {
  DartId t = twin(d);
  const auto& rot = parts_.rotation[dart_vertex_[t]];
  std::size_t pos = dart_pos_[t];
  return rot[(pos + rot.size() - 1) % rot.size()];
}

std::optional<std::size_t> PlanarMap::find_face(std::string_view name) const {
  for (const auto& f : faces_) {
    if (f.name == name) return f.id;
  }
  return std::nullopt;
}

std::optional<std::size_t> PlanarMap::find_edge(std::string_view name) const {
  for (std::size_t e = 0; e < parts_.edges.size(); ++e) {
    if (parts_.edges[e].name() == name) return e;
  }
  return std::nullopt;
}

PlanarMap PlanarMap::with_flipped_edge(std::size_t e) const {
  MapParts p = parts_;
  std::swap(p.edges[e].tail, p.edges[e].head);
  auto swap_dart = [e](DartId d) { return edge_of(d) == e ? twin(d) : d; };
  for (auto& rot : p.rotation) {
    for (auto& d : rot) d = swap_dart(d);
  }
  for (auto& [name, d] : p.face_names) d = swap_dart(d);
  p.outer_dart = swap_dart(p.outer_dart);
  return build(std::move(p));
}

std::vector<Face> trace_faces(const PlanarMap& m) { return m.faces(); }

// ---------------------------------------------------------------------------
// Text format

namespace {

class LineReader {
 public:
  LineReader(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw map_error("line " + std::to_string(line_no_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= line_.size();
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    if (start == pos_) fail("unexpected end of line");
    return std::string(line_.substr(start, pos_ - start));
  }

  std::string quoted() {
    skip_ws();
    if (pos_ >= line_.size() || line_[pos_] != '"') fail("expected quoted tangle expression");
    std::size_t close = line_.find('"', pos_ + 1);
    if (close == std::string_view::npos) fail("unterminated quoted string");
    std::string s(line_.substr(pos_ + 1, close - pos_ - 1));
    pos_ = close + 1;
    return s;
  }

  void expect(std::string_view token) {
    std::string w = word();
    if (w != token) fail("expected '" + std::string(token) + "', got '" + w + "'");
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

PlanarMap parse_map(std::string_view text) {
  MapParts parts;
  std::map<std::string, std::size_t> vertex_index;
  std::map<std::string, std::size_t> edge_index;
  struct PendingDart {
    std::string token;
    std::size_t line;
  };
  std::vector<std::pair<std::size_t, std::vector<PendingDart>>> rot_lines;
  std::vector<std::pair<std::string, PendingDart>> region_lines;
  std::optional<PendingDart> outer;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    // '#' starts a comment unless it sits inside a quoted label.
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line = line.substr(0, i);
        break;
      }
    }
    LineReader r(line, line_no);
    if (r.at_end()) continue;
    std::string kw = r.word();
    if (kw == "vertex") {
      std::string v = r.word();
      if (vertex_index.count(v)) r.fail("duplicate vertex " + v);
      vertex_index[v] = parts.vertices.size();
      parts.vertices.push_back(v);
      parts.rotation.emplace_back();
    } else if (kw == "edge") {
      std::string id = r.word();
      if (!is_identifier(id)) r.fail("edge id must be alphanumeric/underscore: '" + id + "'");
      if (edge_index.count(id)) r.fail("duplicate edge " + id);
      std::string tail = r.word(), head = r.word();
      if (!vertex_index.count(tail)) r.fail("unknown vertex " + tail);
      if (!vertex_index.count(head)) r.fail("unknown vertex " + head);
      std::string label = r.quoted();
      TangleExpr expr = TangleExpr::rational(1);
      try {
        expr = parse_tangle(label);
      } catch (const parse_error& e) {
        r.fail("edge " + id + ": " + e.what());
      }
      edge_index[id] = parts.edges.size();
      parts.edges.push_back(MapEdge{{id}, vertex_index[tail], vertex_index[head], TangleLabel{expr}});
    } else if (kw == "rot") {
      std::string v = r.word();
      if (!vertex_index.count(v)) r.fail("unknown vertex " + v);
      r.expect(":");
      std::vector<PendingDart> darts;
      while (!r.at_end()) darts.push_back({r.word(), line_no});
      rot_lines.emplace_back(vertex_index[v], std::move(darts));
    } else if (kw == "outer") {
      r.expect(":");
      if (outer) r.fail("outer given twice");
      outer = PendingDart{r.word(), line_no};
    } else if (kw == "region") {
      std::string name = r.word();
      r.expect(":");
      region_lines.emplace_back(name, PendingDart{r.word(), line_no});
    } else {
      r.fail("unknown directive '" + kw + "'");
    }
    if (!r.at_end() && kw != "rot") r.fail("trailing text");
  }

  auto resolve = [&](const PendingDart& p) -> DartId {
    auto dot = p.token.rfind('.');
    if (dot == std::string::npos) {
      throw map_error("line " + std::to_string(p.line) + ": dart must be <edge>.t or <edge>.h: '" + p.token + "'");
    }
    std::string eid = p.token.substr(0, dot), end = p.token.substr(dot + 1);
    auto it = edge_index.find(eid);
    if (it == edge_index.end() || (end != "t" && end != "h")) {
      throw map_error("line " + std::to_string(p.line) + ": unknown dart '" + p.token + "'");
    }
    return end == "t" ? tail_dart(it->second) : head_dart(it->second);
  };

  std::set<std::size_t> rot_seen;
  for (const auto& [v, darts] : rot_lines) {
    if (!rot_seen.insert(v).second) throw map_error("rotation of " + parts.vertices[v] + " given twice");
    for (const auto& p : darts) parts.rotation[v].push_back(resolve(p));
  }
  if (!outer) throw map_error("missing 'outer : <dart>' line");
  parts.outer_dart = resolve(*outer);
  for (const auto& [name, p] : region_lines) parts.face_names.emplace_back(name, resolve(p));
  return PlanarMap::build(std::move(parts));
}

std::string format_map(const PlanarMap& m) {
  std::ostringstream out;
  auto dart_name = [&](DartId d) { return m.edge(edge_of(d)).name() + (is_head(d) ? ".h" : ".t"); };
  for (std::size_t v = 0; v < m.vertex_count(); ++v) out << "vertex " << m.vertex_name(v) << "\n";
  for (const auto& e : m.edges()) {
    out << "edge " << e.name() << " " << m.vertex_name(e.tail) << " " << m.vertex_name(e.head) << " \""
        << format_label(e.label) << "\"\n";
  }
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    if (m.rotation(v).empty()) continue;
    out << "rot " << m.vertex_name(v) << " :";
    for (DartId d : m.rotation(v)) out << " " << dart_name(d);
    out << "\n";
  }
  out << "outer : " << dart_name(m.parts().outer_dart) << "\n";
  for (const auto& [name, d] : m.parts().face_names) {
    if (m.face_of(d) == m.outer_face() && name.size() >= 2 && name == "R0") continue;
    out << "region " << name << " : " << dart_name(d) << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Expansion

namespace {

// Replacement of one edge by a subgraph between the same two vertices.
// `tail_seq` replaces the tail dart in the tail vertex rotation and ends with
// the dart whose left face is the old left face; `head_seq` replaces the head
// dart and ends with the dart whose left face is the old right face.
struct Gadget {
  std::vector<DartId> tail_seq;
  std::vector<DartId> head_seq;
  DartId left_rep = 0;
  DartId right_rep = 0;
};

class Expander {
 public:
  explicit Expander(const PlanarMap& src) : src_(src) {
    out_.vertices = src.parts().vertices;
    out_.rotation.assign(src.vertex_count(), {});
  }

  Gadget single(std::vector<std::string> path, std::size_t tail, std::size_t head, EdgeLabel label) {
    std::size_t e = out_.edges.size();
    out_.edges.push_back(MapEdge{std::move(path), tail, head, std::move(label)});
    return Gadget{{tail_dart(e)}, {head_dart(e)}, tail_dart(e), head_dart(e)};
  }

  // m parallel copies of an edge labelled `sign`.
  Gadget bundle(const std::vector<std::string>& path, std::size_t tail, std::size_t head, int sign,
                const Integer& m) {
    const std::size_t count = static_cast<std::size_t>(m);
    std::vector<Gadget> copies;
    for (std::size_t k = 1; k <= count; ++k) {
      copies.push_back(single(extend(path, "c" + std::to_string(k)), tail, head, IntegerLabel{Integer(sign)}));
    }
    Gadget g;
    for (std::size_t k = count; k-- > 0;) g.tail_seq.push_back(copies[k].tail_seq.front());
    for (std::size_t k = 0; k < count; ++k) g.head_seq.push_back(copies[k].head_seq.front());
    for (std::size_t k = 1; k < count; ++k) {
      fresh_faces_.emplace_back("R_" + join_path(path) + "_" + std::to_string(k), copies[k].left_rep);
    }
    g.left_rep = copies.front().left_rep;
    g.right_rep = copies.back().right_rep;
    return g;
  }

  Gadget tangle(const std::vector<std::string>& path, std::size_t tail, std::size_t head, const TangleExpr& t) {
    switch (t.kind()) {
      case TangleExpr::Kind::Rational: {
        const Rational& f = t.fraction();
        if (f.is_integer()) return single(path, tail, head, IntegerLabel{f.num()});
        if (f.num() == f.sign()) return single(path, tail, head, InverseLabel{f.sign(), f.den()});
        return tangle(path, tail, head, rational_tangle_expr(f));
      }
      case TangleExpr::Kind::Sum: {
        std::size_t mid = out_.vertices.size();
        out_.vertices.push_back("v_" + join_path(path));
        out_.rotation.emplace_back();
        Gadget g1 = tangle(extend(path, "1"), tail, mid, t.left());
        Gadget g2 = tangle(extend(path, "2"), mid, head, t.right());
        auto& rot = out_.rotation[mid];
        rot.insert(rot.end(), g2.tail_seq.begin(), g2.tail_seq.end());
        rot.insert(rot.end(), g1.head_seq.begin(), g1.head_seq.end());
        return Gadget{g1.tail_seq, g2.head_seq, g1.left_rep, g2.right_rep};
      }
      case TangleExpr::Kind::Product: {
        Gadget g1 = tangle(extend(path, "1"), tail, head, t.left());
        Gadget g2 = tangle(extend(path, "2"), tail, head, t.right());
        fresh_faces_.emplace_back("R_" + join_path(path), g2.left_rep);
        Gadget g;
        g.tail_seq = g2.tail_seq;
        g.tail_seq.insert(g.tail_seq.end(), g1.tail_seq.begin(), g1.tail_seq.end());
        g.head_seq = g1.head_seq;
        g.head_seq.insert(g.head_seq.end(), g2.head_seq.begin(), g2.head_seq.end());
        g.left_rep = g1.left_rep;
        g.right_rep = g2.right_rep;
        return g;
      }
    }
    throw std::logic_error("unreachable");
  }

  PlanarMap finish(const std::vector<Gadget>& gadgets) {
    for (std::size_t v = 0; v < src_.vertex_count(); ++v) {
      for (DartId d : src_.rotation(v)) {
        const Gadget& g = gadgets[edge_of(d)];
        const auto& seq = is_head(d) ? g.head_seq : g.tail_seq;
        out_.rotation[v].insert(out_.rotation[v].end(), seq.begin(), seq.end());
      }
    }
    auto map_dart = [&](DartId d) {
      const Gadget& g = gadgets[edge_of(d)];
      return is_head(d) ? g.right_rep : g.left_rep;
    };
    for (const auto& [name, d] : src_.parts().face_names) out_.face_names.emplace_back(name, map_dart(d));
    for (auto& f : fresh_faces_) out_.face_names.push_back(std::move(f));
    out_.outer_dart = map_dart(src_.parts().outer_dart);
    return PlanarMap::build(std::move(out_));
  }

 private:
  const PlanarMap& src_;
  MapParts out_;
  std::vector<std::pair<std::string, DartId>> fresh_faces_;
};

}  // namespace

PlanarMap expand_to_reduced(const PlanarMap& m) {
  Expander x(m);
  std::vector<Gadget> gadgets;
  for (const auto& e : m.edges()) {
    if (const auto* t = std::get_if<TangleLabel>(&e.label)) {
      gadgets.push_back(x.tangle(e.path, e.tail, e.head, t->expr));
    } else if (std::holds_alternative<NoLabel>(e.label)) {
      throw map_error("edge " + e.name() + " has no label to expand");
    } else {
      gadgets.push_back(x.single(e.path, e.tail, e.head, e.label));
    }
  }
  return x.finish(gadgets);
}

PlanarMap expand_to_full(const PlanarMap& m) {
  Expander x(m);
  std::vector<Gadget> gadgets;
  for (const auto& e : m.edges()) {
    if (const auto* inv = std::get_if<InverseLabel>(&e.label)) {
      gadgets.push_back(x.bundle(e.path, e.tail, e.head, inv->sign, inv->m));
    } else if (std::holds_alternative<IntegerLabel>(e.label)) {
      gadgets.push_back(x.single(e.path, e.tail, e.head, e.label));
    } else {
      throw map_error("edge " + e.name() + " is not reduced; expand_to_reduced first");
    }
  }
  return x.finish(gadgets);
}

// ---------------------------------------------------------------------------
// Connectivity graph

ConnectivityMap collapse_connectivity(const PlanarMap& m) {
  const std::size_t n_edges = m.edge_count();
  std::vector<std::size_t> parent(n_edges);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> merged_face(m.face_count(), false);
  for (const auto& f : m.faces()) {
    if (f.id == m.outer_face() || f.darts.size() != 2) continue;
    std::size_t a = edge_of(f.darts[0]), b = edge_of(f.darts[1]);
    if (a == b) continue;
    merged_face[f.id] = true;
    parent[find(a)] = find(b);
  }

  struct {
    std::vector<std::size_t> bundle_of;
    std::vector<bool> reversed;
    std::vector<std::vector<std::size_t>> members;
  } out;
  out.bundle_of.assign(n_edges, kNone);
  out.reversed.assign(n_edges, false);
  for (std::size_t e = 0; e < n_edges; ++e) {
    std::size_t root = find(e);
    if (out.bundle_of[root] == kNone) {
      out.bundle_of[root] = out.members.size();
      out.members.emplace_back();
    }
    out.bundle_of[e] = out.bundle_of[root];
    out.members[out.bundle_of[e]].push_back(e);
  }

  MapParts parts;
  parts.vertices = m.parts().vertices;
  for (const auto& members : out.members) {
    const MapEdge& first = m.edge(members.front());
    std::vector<std::string> path = first.path;
    if (members.size() > 1) {
      std::vector<std::string> prefix = first.path;
      for (std::size_t i = 1; i < members.size(); ++i) {
        const auto& p = m.edge(members[i]).path;
        std::size_t k = 0;
        while (k < prefix.size() && k < p.size() && prefix[k] == p[k]) ++k;
        prefix.resize(k);
      }
      if (!prefix.empty()) path = prefix;
    }
    parts.edges.push_back(MapEdge{path, first.tail, first.head, NoLabel{}});
    for (std::size_t e : members) out.reversed[e] = m.edge(e).tail != first.tail;
  }

  auto map_dart = [&](DartId d) {
    std::size_t e = edge_of(d);
    bool head = is_head(d) != out.reversed[e];
    return head ? head_dart(out.bundle_of[e]) : tail_dart(out.bundle_of[e]);
  };
  parts.rotation.resize(m.vertex_count());
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    std::vector<DartId> mapped;
    for (DartId d : m.rotation(v)) mapped.push_back(map_dart(d));
    std::vector<DartId> rot;
    for (std::size_t i = 0; i < mapped.size(); ++i) {
      if (i > 0 && mapped[i] == mapped[i - 1]) continue;
      rot.push_back(mapped[i]);
    }
    while (rot.size() > 1 && rot.front() == rot.back()) rot.pop_back();
    parts.rotation[v] = std::move(rot);
  }
  for (const auto& [name, d] : m.parts().face_names) {
    if (merged_face[m.face_of(d)]) continue;
    parts.face_names.emplace_back(name, map_dart(d));
  }
  parts.outer_dart = map_dart(m.parts().outer_dart);
  return ConnectivityMap{PlanarMap::build(std::move(parts)), std::move(out.bundle_of), std::move(out.reversed),
                         std::move(out.members)};
}

std::pair<std::size_t, std::size_t> adjacent_regions(const PlanarMap& m, std::size_t e) {
  return {m.face_of(tail_dart(e)), m.face_of(head_dart(e))};
}

std::vector<OrientedEdge> boundary_word(const PlanarMap& m, std::size_t face) {
  const auto& darts = m.faces()[face].darts;
  std::vector<OrientedEdge> word;
  word.reserve(darts.size());
  for (DartId d : darts) word.push_back(OrientedEdge{edge_of(d), is_head(d) ? 1 : -1});

  std::size_t best = kNone;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i].exponent < 0) continue;
    if (best == kNone || word[i].edge < word[best].edge) best = i;
  }
  if (best == kNone) {
    best = 0;
    for (std::size_t i = 1; i < word.size(); ++i) {
      if (word[i].edge < word[best].edge) best = i;
    }
  }
  // Rotate so that `best` is the last letter.
  std::rotate(word.begin(), word.begin() + static_cast<std::ptrdiff_t>((best + 1) % word.size()), word.end());
  return word;
}

}  // namespace coarse
