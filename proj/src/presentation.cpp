#include "coarse/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coarse {

// ---------------------------------------------------------------------------
// Words

Word::Word(std::vector<Syllable> syllables) {
  for (auto& s : syllables) {
    if (s.exp == 0) continue;
    if (!syl_.empty() && syl_.back().gen == s.gen) {
      syl_.back().exp += s.exp;
      if (syl_.back().exp == 0) syl_.pop_back();
    } else {
      syl_.push_back(std::move(s));
    }
  }
}

Word Word::letter(std::string gen, std::int64_t exp) { return Word({Syllable{std::move(gen), exp}}); }

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& s : syl_) n += s.exp < 0 ? -s.exp : s.exp;
  return n;
}

Word Word::inverse() const {
  std::vector<Syllable> out(syl_.rbegin(), syl_.rend());
  for (auto& s : out) s.exp = -s.exp;
  return Word(std::move(out));
}

Word Word::power(std::int64_t n) const {
  if (n < 0) return inverse().power(-n);
  if (syl_.size() == 1) return Word::letter(syl_[0].gen, syl_[0].exp * n);
  Word out;
  for (std::int64_t i = 0; i < n; ++i) out = out * *this;
  return out;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Syllable> all = a.syl_;
  all.insert(all.end(), b.syl_.begin(), b.syl_.end());
  return Word(std::move(all));
}

std::string Word::to_string() const {
  if (syl_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < syl_.size(); ++i) {
    if (i) out += ' ';
    out += syl_[i].gen;
    if (syl_[i].exp != 1) out += "^" + std::to_string(syl_[i].exp);
  }
  return out;
}

Word Word::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Syllable> syl;
  std::string tok;
  std::vector<std::string> toks;
  while (in >> tok) toks.push_back(tok);
  if (toks.size() == 1 && toks[0] == "1") return Word();
  for (const auto& t : toks) {
    auto caret = t.find('^');
    std::string gen = t.substr(0, caret);
    if (gen.empty() || !std::all_of(gen.begin(), gen.end(), [](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        })) {
      throw std::invalid_argument("bad generator in word: '" + t + "'");
    }
    std::int64_t exp = 1;
    if (caret != std::string::npos) {
      std::string e = t.substr(caret + 1);
      std::size_t used = 0;
      try {
        exp = std::stoll(e, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (e.empty() || used != e.size() || exp == 0) throw std::invalid_argument("bad exponent in word: '" + t + "'");
    }
    syl.push_back(Syllable{gen, exp});
  }
  return Word(std::move(syl));
}

std::vector<std::string> Presentation::generator_names() const {
  std::vector<std::string> out;
  for (const auto& g : generators) out.push_back(g.name);
  return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

const char* kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Edge: return "edge";
    case GeneratorKind::Region: return "region";
    case GeneratorKind::Tangle: return "tangle";
  }
  return "edge";
}

}  // namespace

std::string format_presentation(const Presentation& p) {
  std::string out;
  for (const auto& g : p.generators) out += std::string("gen ") + kind_name(g.kind) + " " + g.name + "\n";
  for (const auto& r : p.relators) {
    out += (r.kind == RelatorKind::GlobalCycle ? "cycle " : "rel ") + r.word.to_string() + "\n";
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::set<std::string> names;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    std::string rest;
    std::getline(ls, rest);
    if (kw == "gen") {
      std::istringstream rs(rest);
      std::string kind, name, extra;
      if (!(rs >> kind >> name) || (rs >> extra)) fail("expected 'gen <kind> <name>'");
      GeneratorKind k;
      if (kind == "edge") k = GeneratorKind::Edge;
      else if (kind == "region") k = GeneratorKind::Region;
      else if (kind == "tangle") k = GeneratorKind::Tangle;
      else fail("unknown generator kind '" + kind + "'");
      if (!names.insert(name).second) fail("duplicate generator " + name);
      p.generators.push_back(Generator{name, k});
    } else if (kw == "rel" || kw == "cycle") {
      Word w;
      try {
        w = Word::parse(rest);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      for (const auto& s : w.syllables()) {
        if (!names.count(s.gen)) fail("undeclared generator " + s.gen);
      }
      p.relators.push_back(Relator{w, kw == "cycle" ? RelatorKind::GlobalCycle : RelatorKind::LocalEdge});
    } else if (kw == "range") {
      continue;
    } else {
      fail("unknown directive '" + kw + "'");
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Brunner presentations

namespace {

std::string region_name(const PlanarMap& m, std::size_t face) {
  return face == m.outer_face() ? std::string() : m.faces()[face].name;
}

Word region_word(const std::string& name) { return name.empty() ? Word() : Word::letter(name); }

Word base_word(const std::string& left, const std::string& right) {
  return region_word(left).inverse() * region_word(right);
}

std::int64_t small_int(const Integer& v, const std::string& what) {
  if (v > Integer(1000000) || v < Integer(-1000000)) throw std::invalid_argument(what + " is too large");
  return static_cast<std::int64_t>(v);
}

void add_edge_generators(Presentation& p, const PlanarMap& connectivity) {
  for (const auto& e : connectivity.edges()) p.generators.push_back(Generator{e.name(), GeneratorKind::Edge});
}

void add_region_generators(Presentation& p, const PlanarMap& m) {
  for (std::size_t f : m.faces_in_declaration_order()) {
    if (f != m.outer_face()) p.generators.push_back(Generator{m.faces()[f].name, GeneratorKind::Region});
  }
}

Word cycle_word(const PlanarMap& m, std::size_t face) {
  std::vector<Syllable> syl;
  for (const auto& oe : boundary_word(m, face)) syl.push_back(Syllable{m.edge(oe.edge).name(), oe.exponent});
  return Word(std::move(syl));
}

void add_cycles(Presentation& p, const PlanarMap& connectivity) {
  for (std::size_t f : connectivity.faces_in_declaration_order()) {
    if (f == connectivity.outer_face()) continue;
    p.relators.push_back(Relator{cycle_word(connectivity, f), RelatorKind::GlobalCycle});
  }
}

// Regions of `e` in `m`, swapped when the edge runs against its bundle.
std::pair<std::string, std::string> oriented_regions(const PlanarMap& m, std::size_t e, bool reversed) {
  auto [l, r] = adjacent_regions(m, e);
  std::string ln = region_name(m, l), rn = region_name(m, r);
  if (reversed) std::swap(ln, rn);
  return {ln, rn};
}

}  // namespace

Presentation brunner(const PlanarMap& m) {
  PlanarMap full = expand_to_full(expand_to_reduced(m));
  ConnectivityMap cm = collapse_connectivity(full);
  Presentation p;
  add_edge_generators(p, cm.map);
  add_region_generators(p, full);
  for (std::size_t e = 0; e < full.edge_count(); ++e) {
    const auto& label = std::get<IntegerLabel>(full.edge(e).label);
    auto [l, r] = oriented_regions(full, e, cm.reversed[e]);
    Word w = Word::letter(cm.map.edge(cm.bundle_of[e]).name());
    Word rhs = base_word(l, r).power(small_int(label.value, "label"));
    p.relators.push_back(Relator{w * rhs.inverse(), RelatorKind::LocalEdge});
  }
  add_cycles(p, cm.map);
  return p;
}

Presentation reduced_brunner(const PlanarMap& m) {
  PlanarMap red = expand_to_reduced(m);
  PlanarMap full = expand_to_full(red);
  ConnectivityMap cm = collapse_connectivity(full);
  Presentation p;
  add_edge_generators(p, cm.map);
  add_region_generators(p, red);
  // expand_to_full keeps edge order, turning each +-1/m edge into m
  // consecutive copies.
  std::size_t first_full = 0;
  for (std::size_t e = 0; e < red.edge_count(); ++e) {
    const EdgeLabel& label = red.edge(e).label;
    Word w = Word::letter(cm.map.edge(cm.bundle_of[first_full]).name());
    auto [l, r] = oriented_regions(red, e, cm.reversed[first_full]);
    Word base = base_word(l, r);
    if (const auto* inv = std::get_if<InverseLabel>(&label)) {
      std::int64_t mult = small_int(inv->m, "bundle size");
      p.relators.push_back(Relator{w.power(mult) * base.power(inv->sign).inverse(), RelatorKind::ReducedLocalEdge});
      first_full += static_cast<std::size_t>(mult);
    } else {
      const auto& n = std::get<IntegerLabel>(label);
      p.relators.push_back(
          Relator{w * base.power(small_int(n.value, "label")).inverse(), RelatorKind::LocalEdge});
      first_full += 1;
    }
  }
  add_cycles(p, cm.map);
  return p;
}

Word TangleGenerator::base() const { return base_word(base_left, base_right); }

namespace {

TangleExpr label_expr(const MapEdge& e) {
  return std::visit(
      [&](const auto& l) -> TangleExpr {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, TangleLabel>) {
          return l.expr;
        } else if constexpr (std::is_same_v<T, IntegerLabel>) {
          return TangleExpr::rational(Rational(l.value));
        } else if constexpr (std::is_same_v<T, InverseLabel>) {
          return TangleExpr::rational(Rational(Integer(l.sign), l.m));
        } else {
          throw std::invalid_argument("edge " + e.name() + " has no tangle label");
        }
      },
      e.label);
}

}  // namespace

CoarsePresentation coarse_brunner(const PlanarMap& m, bool refine) {
  CoarsePresentation cp;
  for (std::size_t e = 0; e < m.edge_count(); ++e) {
    const MapEdge& edge = m.edge(e);
    TangleExpr expr = label_expr(edge);
    auto [l, r] = oriented_regions(m, e, false);
    cp.tangles.push_back(TangleGenerator{edge.name(), expr, range_of_expr(expr, refine), l, r});
  }
  for (std::size_t f : m.faces_in_declaration_order()) {
    if (f != m.outer_face()) cp.regions.push_back(m.faces()[f].name);
  }
  for (std::size_t f : m.faces_in_declaration_order()) {
    if (f != m.outer_face()) cp.cycles.push_back(cycle_word(m, f));
  }
  return cp;
}

std::string format_coarse(const CoarsePresentation& cp) {
  std::string out;
  for (const auto& t : cp.tangles) out += "gen tangle " + t.name + "\n";
  for (const auto& r : cp.regions) out += "gen region " + r + "\n";
  for (const auto& t : cp.tangles) {
    out += "range " + t.name + " in " + t.range.to_string() + " base " + t.base().to_string() + "\n";
  }
  for (const auto& c : cp.cycles) out += "cycle " + c.to_string() + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Abelian invariants

IntMatrix abelianize(const Presentation& p) {
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < p.generators.size(); ++i) col[p.generators[i].name] = i;
  IntMatrix out;
  for (const auto& r : p.relators) {
    std::vector<Integer> row(p.generators.size(), Integer(0));
    for (const auto& s : r.word.syllables()) {
      auto it = col.find(s.gen);
      if (it == col.end()) throw std::invalid_argument("relator uses undeclared generator " + s.gen);
      row[it->second] += s.exp;
    }
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix id(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Floor-free quotient toward zero is enough: we only need the remainder to be
// strictly smaller in absolute value than the pivot.
struct Smith {
  IntMatrix a, u, v;
  std::size_t rows, cols;

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  }
  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t c = 0; c < cols; ++c) a[i][c] += k * a[j][c];
    for (std::size_t c = 0; c < rows; ++c) u[i][c] += k * u[j][c];
  }
  // col_i += k * col_j
  void add_col(std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t r = 0; r < rows; ++r) a[r][i] += k * a[r][j];
    for (std::size_t r = 0; r < cols; ++r) v[r][i] += k * v[r][j];
  }
  void negate_row(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }

  bool move_min_to(std::size_t t) {
    bool found = false;
    std::size_t bi = t, bj = t;
    Integer best;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        Integer v_abs = abs_int(a[i][j]);
        if (!found || v_abs < best) {
          found = true;
          best = v_abs;
          bi = i;
          bj = j;
        }
      }
    }
    if (!found) return false;
    if (bi != t) swap_rows(bi, t);
    if (bj != t) swap_cols(bj, t);
    return true;
  }

  void run() {
    const std::size_t k = std::min(rows, cols);
    for (std::size_t t = 0; t < k; ++t) {
      if (!move_min_to(t)) break;
      while (true) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a[i][t] == 0) continue;
          add_row(i, t, -(a[i][t] / a[t][t]));
          if (a[i][t] != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[t][j] == 0) continue;
          add_col(j, t, -(a[t][j] / a[t][t]));
          if (a[t][j] != 0) dirty = true;
        }
        if (dirty) {
          move_min_to(t);
          continue;
        }
        // Pivot must divide the remaining block.
        bool fixed = false;
        for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[i][j] % a[t][t] != 0) {
              add_row(t, i, 1);
              fixed = true;
              break;
            }
          }
        }
        if (!fixed) break;
      }
      if (a[t][t] < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, std::size_t cols) {
  Smith s{m, identity(m.size()), identity(cols), m.size(), cols};
  for (const auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  }
  s.run();
  SmithForm out;
  for (std::size_t i = 0; i < std::min(s.rows, cols); ++i) out.diagonal.push_back(s.a[i][i]);
  out.u = std::move(s.u);
  out.v = std::move(s.v);
  return out;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix out(n, std::vector<Integer>(m, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("dimension mismatch in matrix product");
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t c = 0; c < m; ++c) out[i][c] += a[i][j] * b[j][c];
    }
  }
  return out;
}

Integer determinant(const IntMatrix& in) {
  const std::size_t n = in.size();
  if (n == 0) return 1;
  IntMatrix a = in;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<Integer> h1_invariants(const Presentation& p) {
  SmithForm s = smith_normal_form(abelianize(p), p.generators.size());
  std::vector<Integer> diag = s.diagonal;
  diag.resize(p.generators.size(), Integer(0));
  std::vector<Integer> out;
  for (const auto& d : diag) {
    if (d != 1) out.push_back(d);
  }
  return out;
}

Integer h1_order(const Presentation& p) {
  Integer order = 1;
  for (const auto& d : h1_invariants(p)) {
    if (d == 0) return 0;
    order *= d;
  }
  return order;
}

}  // namespace coarse
