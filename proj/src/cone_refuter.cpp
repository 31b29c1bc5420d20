#include "coarse/cone_refuter.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>

namespace coarse {

LetterWord free_reduce(const LetterWord& w) {
  LetterWord out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

LetterWord invert(const LetterWord& w) {
  LetterWord out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

std::size_t LetterWordHash::operator()(const LetterWord& w) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (int x : w) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

LetterWord cyclic_reduce(LetterWord w) {
  w = free_reduce(w);
  std::size_t a = 0, b = w.size();
  while (b - a >= 2 && w[a] == -w[b - 1]) {
    ++a;
    --b;
  }
  return LetterWord(w.begin() + static_cast<std::ptrdiff_t>(a), w.begin() + static_cast<std::ptrdiff_t>(b));
}

struct Rule {
  LetterWord removed;
  LetterWord inserted;
  friend auto operator<=>(const Rule&, const Rule&) = default;
};

// u -> v^-1 for every split u v of every cyclic conjugate of r and r^-1.
std::vector<Rule> rewrite_rules(const std::vector<LetterWord>& relators) {
  std::set<Rule> rules;
  for (const auto& r : relators) {
    for (const LetterWord& base : {r, invert(r)}) {
      for (std::size_t rot = 0; rot < base.size(); ++rot) {
        LetterWord c(base.begin() + static_cast<std::ptrdiff_t>(rot), base.end());
        c.insert(c.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(rot));
        for (std::size_t split = 0; split <= c.size(); ++split) {
          LetterWord u(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(split));
          LetterWord v(c.begin() + static_cast<std::ptrdiff_t>(split), c.end());
          rules.insert(Rule{u, invert(v)});
        }
      }
    }
  }
  return {rules.begin(), rules.end()};
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Keeps the smaller root so that roots are stable.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::size_t GroupBall::word_index(const LetterWord& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw std::out_of_range("word outside the enumerated range");
  return it->second;
}

std::size_t GroupBall::element_of_word(std::size_t i) const { return class_element_[word_class_[i]]; }

std::string GroupBall::format_word(const LetterWord& w) const {
  std::vector<Syllable> syl;
  for (int x : w) syl.push_back(Syllable{gens_[static_cast<std::size_t>(x < 0 ? -x : x) - 1], x < 0 ? -1 : 1});
  return Word(std::move(syl)).to_string();
}

GroupBall GroupBall::build(const Presentation& p, const BallOptions& options) {
  if (options.radius < 1) throw std::invalid_argument("radius must be at least 1");
  GroupBall b;
  b.radius_ = options.radius;
  std::map<std::string, int> gen_index;
  for (const auto& g : p.generators) {
    b.gens_.push_back(g.name);
    gen_index[g.name] = static_cast<int>(b.gens_.size());
  }
  std::size_t max_rel = 0;
  for (const auto& r : p.relators) {
    LetterWord w;
    for (const auto& s : r.word.syllables()) {
      auto it = gen_index.find(s.gen);
      if (it == gen_index.end()) throw std::invalid_argument("relator uses undeclared generator " + s.gen);
      int unit = s.exp > 0 ? it->second : -it->second;
      for (std::int64_t k = 0; k < (s.exp > 0 ? s.exp : -s.exp); ++k) w.push_back(unit);
    }
    w = cyclic_reduce(w);
    if (w.empty()) continue;
    max_rel = std::max(max_rel, w.size());
    b.relators_.push_back(std::move(w));
  }
  b.cap_ = options.radius + max_rel + options.slack;

  // Shortlex enumeration with letter order 1, -1, 2, -2, ...
  std::vector<int> alphabet;
  for (int g = 1; g <= static_cast<int>(b.gens_.size()); ++g) {
    alphabet.push_back(g);
    alphabet.push_back(-g);
  }
  b.words_.push_back({});
  std::size_t level_start = 0;
  for (std::size_t len = 1; len <= b.cap_; ++len) {
    std::size_t level_end = b.words_.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (int x : alphabet) {
        if (!b.words_[i].empty() && b.words_[i].back() == -x) continue;
        if (b.words_.size() >= options.max_words) {
          throw budget_error("ball enumeration exceeds --max-words " + std::to_string(options.max_words) +
                             " (radius " + std::to_string(options.radius) + ", word length cap " +
                             std::to_string(b.cap_) + ")");
        }
        LetterWord w = b.words_[i];
        w.push_back(x);
        b.words_.push_back(std::move(w));
      }
    }
    level_start = level_end;
  }
  b.index_.reserve(b.words_.size());
  for (std::size_t i = 0; i < b.words_.size(); ++i) b.index_.emplace(b.words_[i], i);

  UnionFind uf(b.words_.size());
  const auto rules = rewrite_rules(b.relators_);
  for (std::size_t i = 0; i < b.words_.size(); ++i) {
    const LetterWord& w = b.words_[i];
    for (const auto& rule : rules) {
      if (rule.removed.size() > w.size()) continue;
      for (std::size_t pos = 0; pos + rule.removed.size() <= w.size(); ++pos) {
        if (!std::equal(rule.removed.begin(), rule.removed.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) {
          continue;
        }
        LetterWord next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        next.insert(next.end(), rule.inserted.begin(), rule.inserted.end());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + rule.removed.size()), w.end());
        next = free_reduce(next);
        if (next.size() > b.cap_) continue;
        std::size_t j = b.index_.at(next);
        if (uf.unite(i, j)) b.witnesses_.push_back(Witness{i, j, pos, rule.removed, rule.inserted});
      }
    }
  }

  b.word_class_.resize(b.words_.size());
  for (std::size_t i = 0; i < b.words_.size(); ++i) b.word_class_[i] = uf.find(i);
  b.class_element_.assign(b.words_.size(), npos);
  for (std::size_t i = 0; i < b.words_.size() && b.words_[i].size() <= b.radius_; ++i) {
    std::size_t c = b.word_class_[i];
    if (b.class_element_[c] == npos) {
      b.class_element_[c] = b.reps_.size();
      b.reps_.push_back(i);
    }
  }
  for (std::size_t e = 0; e < b.reps_.size(); ++e) {
    b.inverse_.push_back(b.element_of_word(b.word_index(invert(b.words_[b.reps_[e]]))));
  }

  std::vector<std::size_t> ball_words;
  for (std::size_t i = 0; i < b.words_.size() && b.words_[i].size() <= b.radius_; ++i) ball_words.push_back(i);
  std::set<Product> products;
  for (std::size_t i : ball_words) {
    for (std::size_t j : ball_words) {
      LetterWord w = b.words_[i];
      w.insert(w.end(), b.words_[j].begin(), b.words_[j].end());
      w = free_reduce(w);
      if (w.size() > b.cap_) continue;
      std::size_t k = b.element_of_word(b.word_index(w));
      if (k == npos) continue;
      products.insert(Product{b.element_of_word(i), b.element_of_word(j), k});
      if (products.size() > options.max_products) {
        throw budget_error("product table exceeds " + std::to_string(options.max_products) + " entries");
      }
    }
  }
  b.products_.assign(products.begin(), products.end());
  return b;
}

// ---------------------------------------------------------------------------
// Search

namespace {

// DPLL with two watched literals and chronological backtracking. Literals are
// +-(var + 1).
class Solver {
 public:
  Solver(std::size_t vars, std::vector<std::vector<int>> clauses)
      : clauses_(std::move(clauses)), value_(vars + 1, 0), watches_(2 * (vars + 1)) {}

  bool solve() {
    for (std::size_t c = 0; c < clauses_.size(); ++c) {
      const auto& cl = clauses_[c];
      if (cl.empty()) return false;
      if (cl.size() == 1) {
        if (value(cl[0]) < 0) return false;
        if (value(cl[0]) == 0) assign(cl[0]);
        continue;
      }
      watches_[code(cl[0])].push_back(c);
      watches_[code(cl[1])].push_back(c);
    }
    if (!propagate()) return false;
    std::size_t next_var = 1;
    while (true) {
      while (next_var < value_.size() && value_[next_var] != 0) ++next_var;
      if (next_var == value_.size()) return true;
      ++nodes;
      event(static_cast<std::uint64_t>(next_var));
      levels_.push_back(Level{trail_.size(), static_cast<int>(next_var), false});
      assign(static_cast<int>(next_var));
      while (!propagate()) {
        ++conflicts;
        event(0);
        while (!levels_.empty() && levels_.back().flipped) {
          undo_to(levels_.back().trail_size);
          levels_.pop_back();
        }
        if (levels_.empty()) return false;
        Level& top = levels_.back();
        undo_to(top.trail_size);
        top.flipped = true;
        assign(-top.decision);
      }
      next_var = 1;
    }
  }

  int value(int lit) const {
    int v = value_[static_cast<std::size_t>(lit < 0 ? -lit : lit)];
    return lit < 0 ? -v : v;
  }

  std::uint64_t nodes = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t digest = 1469598103934665603ULL;

 private:
  struct Level {
    std::size_t trail_size;
    int decision;
    bool flipped;
  };

  static std::size_t code(int lit) {
    return 2 * static_cast<std::size_t>(lit < 0 ? -lit : lit) + (lit < 0 ? 1 : 0);
  }

  void event(std::uint64_t x) {
    digest ^= x + 0x9e3779b97f4a7c15ULL;
    digest *= 1099511628211ULL;
  }

  void assign(int lit) {
    value_[static_cast<std::size_t>(lit < 0 ? -lit : lit)] = lit < 0 ? -1 : 1;
    trail_.push_back(lit);
  }

  void undo_to(std::size_t size) {
    while (trail_.size() > size) {
      int lit = trail_.back();
      trail_.pop_back();
      value_[static_cast<std::size_t>(lit < 0 ? -lit : lit)] = 0;
    }
    head_ = std::min(head_, size);
  }

  bool propagate() {
    while (head_ < trail_.size()) {
      int false_lit = -trail_[head_++];
      auto& ws = watches_[code(false_lit)];
      std::size_t keep = 0;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        std::size_t c = ws[i];
        auto& cl = clauses_[c];
        if (cl[0] == false_lit) std::swap(cl[0], cl[1]);
        if (value(cl[0]) > 0) {
          ws[keep++] = c;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < cl.size(); ++k) {
          if (value(cl[k]) >= 0) {
            std::swap(cl[1], cl[k]);
            watches_[code(cl[1])].push_back(c);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[keep++] = c;
        if (value(cl[0]) < 0) {
          for (++i; i < ws.size(); ++i) ws[keep++] = ws[i];
          ws.resize(keep);
          return false;
        }
        if (value(cl[0]) == 0) assign(cl[0]);
      }
      ws.resize(keep);
    }
    return true;
  }

  std::vector<std::vector<int>> clauses_;
  std::vector<int> value_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<int> trail_;
  std::vector<Level> levels_;
  std::size_t head_ = 0;
};

class ClauseBuilder {
 public:
  explicit ClauseBuilder(const GroupBall& ball) : ball_(ball) {}

  // Literal "element e is positive"; 0 stands for constant false.
  int pos(std::size_t e) const { return e == 0 ? 0 : static_cast<int>(e); }
  int neg(std::size_t e) const { return pos(ball_.inverse(e)); }

  // `lits` entries of 0 are false constants and are dropped.
  void add(std::vector<int> lits) {
    std::vector<int> cl;
    for (int l : lits) {
      if (l != 0) cl.push_back(l);
    }
    std::sort(cl.begin(), cl.end());
    cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
    for (std::size_t i = 0; i + 1 < cl.size(); ++i) {
      if (std::binary_search(cl.begin() + static_cast<std::ptrdiff_t>(i) + 1, cl.end(), -cl[i])) return;
    }
    clauses_.insert(std::move(cl));
  }

  // sign(a) = sign(b) whenever `zero` is trivial.
  void same_sign_if_trivial(std::size_t zero, std::size_t a, std::size_t b) {
    if (a == b) return;
    int pz = pos(zero), nz = neg(zero);
    add({pz, nz, -pos(a), pos(b)});
    add({pz, nz, pos(a), -pos(b)});
    add({pz, nz, -neg(a), neg(b)});
    add({pz, nz, neg(a), -neg(b)});
  }

  std::vector<std::vector<int>> take() { return {clauses_.begin(), clauses_.end()}; }

 private:
  const GroupBall& ball_;
  std::set<std::vector<int>> clauses_;
};

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

}  // namespace

RefuteResult refute(const GroupBall& ball) {
  RefuteResult out;
  Certificate& c = out.certificate;
  c.method = Method::ConeSearch;
  c.evidence.push_back("radius " + std::to_string(ball.radius()));
  c.evidence.push_back("word length cap " + std::to_string(ball.length_cap()));
  c.evidence.push_back("words " + std::to_string(ball.words().size()));
  c.evidence.push_back("identifications " + std::to_string(ball.witnesses().size()));
  c.evidence.push_back("elements " + std::to_string(ball.element_count()));
  c.evidence.push_back("products " + std::to_string(ball.products().size()));

  std::vector<std::size_t> gen_elements;
  for (std::size_t g = 0; g < ball.generators().size(); ++g) {
    gen_elements.push_back(ball.element_of_word(ball.word_index(LetterWord{static_cast<int>(g) + 1})));
  }
  if (std::all_of(gen_elements.begin(), gen_elements.end(), [](std::size_t e) { return e == 0; })) {
    c.verdict = Verdict::NotLeftOrderable;
    c.evidence.push_back("every generator is trivial; the trivial group is not left-orderable");
    out.digest = hex64(0);
    c.evidence.push_back("digest " + out.digest);
    return out;
  }

  ClauseBuilder cb(ball);
  for (std::size_t e = 1; e < ball.element_count(); ++e) {
    if (e <= ball.inverse(e)) cb.add({-cb.pos(e), -cb.neg(e)});
  }
  std::vector<int> nontrivial;
  for (std::size_t g : gen_elements) {
    nontrivial.push_back(cb.pos(g));
    nontrivial.push_back(cb.neg(g));
  }
  cb.add(nontrivial);
  for (const auto& p : ball.products()) {
    if (p.left == 0 || p.right == 0) continue;
    cb.add({-cb.pos(p.left), -cb.pos(p.right), cb.pos(p.result)});
    cb.add({-cb.neg(p.left), -cb.neg(p.right), cb.neg(p.result)});
    cb.same_sign_if_trivial(p.left, p.right, p.result);
    cb.same_sign_if_trivial(p.right, p.left, p.result);
  }
  auto clauses = cb.take();
  c.evidence.push_back("clauses " + std::to_string(clauses.size()));

  Solver s(ball.element_count() - 1, std::move(clauses));
  bool sat = s.solve();
  out.nodes = s.nodes;
  out.conflicts = s.conflicts;
  out.digest = hex64(s.digest);
  c.evidence.push_back("search nodes " + std::to_string(s.nodes) + " conflicts " + std::to_string(s.conflicts));
  c.evidence.push_back("digest " + out.digest);
  if (!sat) {
    c.verdict = Verdict::NotLeftOrderable;
    return out;
  }
  c.verdict = Verdict::Inconclusive;
  out.signs.assign(ball.element_count(), Sign::Zero);
  for (std::size_t e = 1; e < ball.element_count(); ++e) {
    if (s.value(cb.pos(e)) > 0) out.signs[e] = Sign::Positive;
    else if (s.value(cb.neg(e)) > 0) out.signs[e] = Sign::Negative;
  }
  for (std::size_t g = 0; g < gen_elements.size(); ++g) {
    Sign sg = out.signs[gen_elements[g]];
    c.evidence.push_back("witness sign " + ball.generators()[g] + " " +
                         (sg == Sign::Positive ? "+" : sg == Sign::Negative ? "-" : "0"));
  }
  return out;
}

RefuteResult refute(const Presentation& p, const BallOptions& options) {
  return refute(GroupBall::build(p, options));
}

}  // namespace coarse
