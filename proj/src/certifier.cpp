#include "coarse/certifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coarse {

std::string verdict_name(Verdict v) {
  return v == Verdict::NotLeftOrderable ? "not-left-orderable" : "inconclusive";
}

std::string method_name(Method m) {
  switch (m) {
    case Method::None: return "none";
    case Method::UniformSign: return "uniform-sign";
    case Method::Theta1: return "theta-1";
    case Method::Theta2: return "theta-2";
    case Method::Pentagon: return "pentagon";
    case Method::ConeSearch: return "cone-search";
  }
  return "none";
}

namespace {

Method parse_method(const std::string& s) {
  for (Method m : {Method::None, Method::UniformSign, Method::Theta1, Method::Theta2, Method::Pentagon,
                   Method::ConeSearch}) {
    if (method_name(m) == s) return m;
  }
  throw std::invalid_argument("unknown method '" + s + "'");
}

Word relation(std::string_view lhs, std::string_view rhs) {
  return Word::parse(lhs) * Word::parse(rhs).inverse();
}

}  // namespace

Template theta_template() {
  Template t;
  t.kind = Template::Kind::Theta;
  t.name = "theta";
  t.regions = {"A", "B", "C"};
  t.slots = {{"W1", "", "A"}, {"W2", "", "B"}, {"W3", "C", ""},
             {"W4", "B", "A"}, {"W5", "B", "C"}, {"W6", "C", "A"}};
  t.cycles = {Word::parse("W6 W4 W1"), Word::parse("W4^-1 W5^-1 W2"), Word::parse("W6^-1 W3^-1 W5")};
  return t;
}

Template pentagon_template() {
  Template t;
  t.kind = Template::Kind::Pentagon;
  t.name = "pentagon";
  t.regions = {"A", "B", "C", "D", "E"};
  t.slots = {{"W1", "", "A"}, {"W2", "B", ""},  {"W3", "E", ""},  {"W4", "A", "C"}, {"W5", "C", "D"},
             {"W6", "D", "E"}, {"W7", "C", "B"}, {"W8", "D", "B"}, {"W9", "E", "B"}, {"W10", "A", "B"}};
  t.cycles = {relation("W1", "W4 W10"), relation("W9 W8 W7 W10", "W2"), relation("W4", "W5 W7"),
              relation("W5", "W6 W8"), relation("W6", "W3 W9")};
  return t;
}

CoarsePresentation template_presentation(const Template& t) {
  CoarsePresentation cp;
  for (const auto& s : t.slots) {
    cp.tangles.push_back(TangleGenerator{s.name, TangleExpr::rational(1), Range::point(Rational(0)), s.left, s.right});
  }
  cp.regions = t.regions;
  cp.cycles = t.cycles;
  return cp;
}

// ---------------------------------------------------------------------------
// Matching

namespace {

using Letter = std::pair<std::string, int>;

std::vector<Letter> letters(const Word& w) {
  std::vector<Letter> out;
  for (const auto& s : w.syllables()) {
    int unit = s.exp > 0 ? 1 : -1;
    for (std::int64_t i = 0; i < (s.exp > 0 ? s.exp : -s.exp); ++i) out.emplace_back(s.gen, unit);
  }
  return out;
}

// Least rotation of the cyclically reduced word or of its inverse.
std::vector<Letter> canonical_cycle(const Word& w) {
  std::vector<Letter> l = letters(w);
  while (l.size() >= 2 && l.front().first == l.back().first && l.front().second == -l.back().second) {
    l.erase(l.begin());
    l.pop_back();
  }
  std::vector<Letter> inv(l.rbegin(), l.rend());
  for (auto& x : inv) x.second = -x.second;
  std::vector<Letter> best = l;
  for (const auto* seq : {&l, &inv}) {
    std::vector<Letter> rot = *seq;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
  }
  return best;
}

std::vector<std::vector<Letter>> cycle_multiset(const std::vector<Word>& cycles) {
  std::vector<std::vector<Letter>> out;
  for (const auto& c : cycles) out.push_back(canonical_cycle(c));
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::string, std::string> region_map(const Template& t, const std::vector<std::string>& assigned) {
  std::map<std::string, std::string> m{{"", ""}};
  for (std::size_t i = 0; i < t.regions.size(); ++i) m[t.regions[i]] = assigned[i];
  return m;
}

std::vector<Word> mapped_cycles(const Assignment& a, const CoarsePresentation& cp, const Template& t) {
  std::map<std::string, std::size_t> slot_index;
  for (std::size_t i = 0; i < t.slots.size(); ++i) slot_index[t.slots[i].name] = i;
  std::vector<Word> out;
  for (const auto& c : t.cycles) {
    std::vector<Syllable> syl;
    for (const auto& s : c.syllables()) {
      std::size_t i = slot_index.at(s.gen);
      syl.push_back(Syllable{cp.tangles[a.tangle[i]].name, a.flipped[i] ? -s.exp : s.exp});
    }
    out.push_back(Word(std::move(syl)));
  }
  return out;
}

class Matcher {
 public:
  Matcher(const CoarsePresentation& cp, const Template& t)
      : cp_(cp), t_(t), target_(cycle_multiset(cp.cycles)) {}

  std::vector<Assignment> run() {
    if (cp_.tangles.size() != t_.slots.size() || cp_.regions.size() != t_.regions.size() ||
        cp_.cycles.size() != t_.cycles.size()) {
      return {};
    }
    std::vector<std::size_t> perm(cp_.regions.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      current_.region.clear();
      for (std::size_t i : perm) current_.region.push_back(cp_.regions[i]);
      regions_ = region_map(t_, current_.region);
      current_.tangle.assign(t_.slots.size(), 0);
      current_.flipped.assign(t_.slots.size(), false);
      used_.assign(cp_.tangles.size(), false);
      assign_slot(0);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::move(found_);
  }

 private:
  void assign_slot(std::size_t i) {
    if (i == t_.slots.size()) {
      if (cycle_multiset(mapped_cycles(current_, cp_, t_)) == target_) found_.push_back(current_);
      return;
    }
    const std::string& l = regions_.at(t_.slots[i].left);
    const std::string& r = regions_.at(t_.slots[i].right);
    for (std::size_t j = 0; j < cp_.tangles.size(); ++j) {
      if (used_[j]) continue;
      const auto& tg = cp_.tangles[j];
      for (bool flip : {false, true}) {
        const std::string& tl = flip ? tg.base_right : tg.base_left;
        const std::string& tr = flip ? tg.base_left : tg.base_right;
        if (tl != l || tr != r) continue;
        used_[j] = true;
        current_.tangle[i] = j;
        current_.flipped[i] = flip;
        assign_slot(i + 1);
        used_[j] = false;
      }
    }
  }

  const CoarsePresentation& cp_;
  const Template& t_;
  std::vector<std::vector<Letter>> target_;
  std::map<std::string, std::string> regions_;
  Assignment current_;
  std::vector<bool> used_;
  std::vector<Assignment> found_;
};

}  // namespace

std::vector<Assignment> match_template(const CoarsePresentation& cp, const Template& t) {
  return Matcher(cp, t).run();
}

bool assignment_is_valid(const Assignment& a, const CoarsePresentation& cp, const Template& t) {
  if (a.tangle.size() != t.slots.size() || a.flipped.size() != t.slots.size() ||
      a.region.size() != t.regions.size() || cp.tangles.size() != t.slots.size() ||
      cp.regions.size() != t.regions.size() || cp.cycles.size() != t.cycles.size()) {
    return false;
  }
  std::vector<std::string> sorted_regions = a.region, cp_regions = cp.regions;
  std::sort(sorted_regions.begin(), sorted_regions.end());
  std::sort(cp_regions.begin(), cp_regions.end());
  if (sorted_regions != cp_regions) return false;
  std::vector<std::size_t> tangles = a.tangle;
  std::sort(tangles.begin(), tangles.end());
  for (std::size_t i = 0; i < tangles.size(); ++i) {
    if (tangles[i] != i) return false;
  }
  auto regions = region_map(t, a.region);
  for (std::size_t i = 0; i < t.slots.size(); ++i) {
    const auto& tg = cp.tangles[a.tangle[i]];
    const std::string& tl = a.flipped[i] ? tg.base_right : tg.base_left;
    const std::string& tr = a.flipped[i] ? tg.base_left : tg.base_right;
    if (tl != regions.at(t.slots[i].left) || tr != regions.at(t.slots[i].right)) return false;
  }
  return cycle_multiset(mapped_cycles(a, cp, t)) == cycle_multiset(cp.cycles);
}

// ---------------------------------------------------------------------------
// Conditions

namespace {

class ConditionLog {
 public:
  void require(bool holds, std::string text) {
    lines_.push_back(std::move(text) + (holds ? " ok" : " FAILS"));
    ok_ = ok_ && holds;
  }
  bool ok() const { return ok_; }
  const std::vector<std::string>& lines() const { return lines_; }

 private:
  bool ok_ = true;
  std::vector<std::string> lines_;
};

bool value_ge(const ExtendedRational& x, const Rational& c) {
  return extq_value_compare(x, ExtendedRational(c)) != std::weak_ordering::less;
}

bool value_lt(const ExtendedRational& x, const Rational& c) {
  return extq_value_compare(x, ExtendedRational(c)) == std::weak_ordering::less;
}

struct SlotView {
  const Assignment& a;
  const CoarsePresentation& cp;
  const TangleGenerator& operator[](std::size_t one_based) const { return cp.tangles[a.tangle[one_based - 1]]; }
};

std::string slot_desc(const SlotView& s, std::size_t i) {
  return "(A" + std::to_string(i) + " = " + s[i].name + " in " + s[i].range.to_string() + ")";
}

void lower_at_least(ConditionLog& log, const SlotView& s, std::size_t i, const Rational& c) {
  log.require(value_ge(s[i].range.lower, c),
              "m" + std::to_string(i) + " = " + s[i].range.lower.to_string() + " >= " + c.to_string() + " " +
                  slot_desc(s, i));
}

void upper_negative(ConditionLog& log, const SlotView& s, std::size_t i) {
  log.require(value_lt(s[i].range.upper, Rational(0)),
              "M" + std::to_string(i) + " = " + s[i].range.upper.to_string() + " < 0 " + slot_desc(s, i));
}

void rational_in(ConditionLog& log, const SlotView& s, std::size_t i, const std::string& what,
                 bool (*pred)(const Rational&)) {
  const TangleExpr& e = s[i].expr;
  bool holds = e.is_rational() && pred(e.fraction());
  log.require(holds, "A" + std::to_string(i) + " = " + format_tangle(e) + " is Q(r) with " + what + " (" +
                         s[i].name + ")");
}

ConditionLog theta_condition_1(const SlotView& s) {
  ConditionLog log;
  for (std::size_t i : {1, 2, 4}) lower_at_least(log, s, i, Rational(1));
  for (std::size_t i : {3, 5, 6}) lower_at_least(log, s, i, Rational(-1));
  for (std::size_t i : {3, 5, 6}) upper_negative(log, s, i);
  return log;
}

ConditionLog theta_condition_2(const SlotView& s) {
  ConditionLog log;
  for (std::size_t i = 1; i <= 5; ++i) lower_at_least(log, s, i, Rational(1));
  rational_in(log, s, 6, "-1 <= r < 0",
              [](const Rational& r) { return r >= Rational(-1) && r < Rational(0); });
  return log;
}

ConditionLog pentagon_conditions(const SlotView& s) {
  ConditionLog log;
  rational_in(log, s, 1, "r >= 1", [](const Rational& r) { return r >= Rational(1); });
  for (std::size_t i : {4, 10}) rational_in(log, s, i, "r = -1", [](const Rational& r) { return r == Rational(-1); });
  for (std::size_t i : {2, 3}) lower_at_least(log, s, i, Rational(-1));
  for (std::size_t i : {2, 3, 5, 6, 7, 8, 9}) upper_negative(log, s, i);
  return log;
}

std::vector<std::string> assignment_lines(const Assignment& a, const CoarsePresentation& cp, const Template& t) {
  std::vector<std::string> out;
  out.push_back("template " + t.name);
  for (std::size_t i = 0; i < t.slots.size(); ++i) {
    out.push_back("tangle " + t.slots[i].name + " -> " + cp.tangles[a.tangle[i]].name +
                  (a.flipped[i] ? " flipped" : ""));
  }
  for (std::size_t i = 0; i < t.regions.size(); ++i) out.push_back("region " + t.regions[i] + " -> " + a.region[i]);
  return out;
}

}  // namespace

Certificate check_uniform_sign(const CoarsePresentation& cp) {
  Certificate c;
  bool nonneg = !cp.tangles.empty(), nonpos = !cp.tangles.empty();
  for (const auto& t : cp.tangles) {
    nonneg = nonneg && value_ge(t.range.lower, Rational(0));
    nonpos = nonpos && extq_value_compare(t.range.upper, ExtendedRational(Rational(0))) != std::weak_ordering::greater;
  }
  std::vector<std::string> ranges;
  for (const auto& t : cp.tangles) ranges.push_back(t.name + " in " + t.range.to_string());
  if (nonneg || nonpos) {
    c.verdict = Verdict::NotLeftOrderable;
    c.method = Method::UniformSign;
    c.evidence.push_back(nonneg ? "every lower endpoint >= 0" : "every upper endpoint <= 0");
    c.evidence.insert(c.evidence.end(), ranges.begin(), ranges.end());
  } else {
    c.trace.push_back("uniform-sign: ranges have mixed signs");
    for (const auto& r : ranges) c.trace.push_back("uniform-sign: " + r);
  }
  return c;
}

Certificate check_conditions(const Assignment& a, const CoarsePresentation& cp, const Template& t) {
  Certificate c;
  c.assignment = assignment_lines(a, cp, t);
  SlotView s{a, cp};
  std::vector<std::pair<Method, ConditionLog>> attempts;
  if (t.kind == Template::Kind::Theta) {
    attempts.emplace_back(Method::Theta1, theta_condition_1(s));
    attempts.emplace_back(Method::Theta2, theta_condition_2(s));
  } else {
    attempts.emplace_back(Method::Pentagon, pentagon_conditions(s));
  }
  for (const auto& [method, log] : attempts) {
    if (log.ok()) {
      c.verdict = Verdict::NotLeftOrderable;
      c.method = method;
      c.evidence = log.lines();
      return c;
    }
  }
  for (const auto& [method, log] : attempts) {
    for (const auto& line : log.lines()) c.trace.push_back(method_name(method) + ": " + line);
  }
  return c;
}

Certificate certify(const CoarsePresentation& cp) {
  Certificate uniform = check_uniform_sign(cp);
  if (uniform.verdict == Verdict::NotLeftOrderable) return uniform;
  Certificate out;
  out.trace = uniform.trace;
  for (const Template& t : {theta_template(), pentagon_template()}) {
    auto matches = match_template(cp, t);
    out.trace.push_back(t.name + ": " + std::to_string(matches.size()) + " match(es)");
    for (std::size_t k = 0; k < matches.size(); ++k) {
      Certificate c = check_conditions(matches[k], cp, t);
      if (c.verdict == Verdict::NotLeftOrderable) return c;
      for (const auto& line : c.trace) out.trace.push_back(t.name + " match " + std::to_string(k + 1) + ": " + line);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form

std::string format_certificate(const Certificate& c) {
  std::string out = "verdict: " + verdict_name(c.verdict) + "\n";
  out += "method: " + method_name(c.method) + "\n";
  for (const auto& l : c.assignment) out += "assignment: " + l + "\n";
  for (const auto& l : c.evidence) out += "evidence: " + l + "\n";
  for (const auto& l : c.trace) out += "trace: " + l + "\n";
  return out;
}

Certificate parse_certificate(std::string_view text) {
  Certificate c;
  bool have_verdict = false, have_method = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto colon = line.find(": ");
    if (colon == std::string::npos) {
      throw std::invalid_argument("certificate line " + std::to_string(line_no) + ": expected '<key>: <value>'");
    }
    std::string key = line.substr(0, colon), value = line.substr(colon + 2);
    if (key == "verdict") {
      if (value == "not-left-orderable") c.verdict = Verdict::NotLeftOrderable;
      else if (value == "inconclusive") c.verdict = Verdict::Inconclusive;
      else throw std::invalid_argument("certificate line " + std::to_string(line_no) + ": unknown verdict");
      have_verdict = true;
    } else if (key == "method") {
      c.method = parse_method(value);
      have_method = true;
    } else if (key == "assignment") {
      c.assignment.push_back(value);
    } else if (key == "evidence") {
      c.evidence.push_back(value);
    } else if (key == "trace") {
      c.trace.push_back(value);
    } else {
      throw std::invalid_argument("certificate line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (!have_verdict || !have_method) throw std::invalid_argument("certificate lacks verdict or method");
  return c;
}

namespace {

// Rebuilds the assignment recorded in `c`; on failure returns false and sets `message`.
bool rebuild_assignment(const Certificate& c, const CoarsePresentation& cp, Template& t, Assignment& a,
                        std::string& message) {
  if (c.assignment.empty() || c.assignment.front().rfind("template ", 0) != 0) {
    message = "certificate does not name a template";
    return false;
  }
  std::string name = c.assignment.front().substr(9);
  if (name == "theta") t = theta_template();
  else if (name == "pentagon") t = pentagon_template();
  else {
    message = "unknown template '" + name + "'";
    return false;
  }
  a.tangle.assign(t.slots.size(), cp.tangles.size());
  a.flipped.assign(t.slots.size(), false);
  a.region.assign(t.regions.size(), "");
  std::vector<bool> seen_slot(t.slots.size(), false), seen_region(t.regions.size(), false);
  for (std::size_t k = 1; k < c.assignment.size(); ++k) {
    std::istringstream ls(c.assignment[k]);
    std::string kind, slot, arrow, target, flag, extra;
    ls >> kind >> slot >> arrow >> target;
    if (!(ls >> flag)) flag.clear();
    if (arrow != "->" || target.empty() || (ls >> extra)) {
      message = "malformed assignment '" + c.assignment[k] + "'";
      return false;
    }
    if (kind == "tangle") {
      auto it = std::find_if(t.slots.begin(), t.slots.end(), [&](const auto& s) { return s.name == slot; });
      auto jt = std::find_if(cp.tangles.begin(), cp.tangles.end(), [&](const auto& g) { return g.name == target; });
      if (it == t.slots.end() || jt == cp.tangles.end() || (!flag.empty() && flag != "flipped")) {
        message = "unknown tangle in assignment '" + c.assignment[k] + "'";
        return false;
      }
      std::size_t i = static_cast<std::size_t>(it - t.slots.begin());
      a.tangle[i] = static_cast<std::size_t>(jt - cp.tangles.begin());
      a.flipped[i] = flag == "flipped";
      seen_slot[i] = true;
    } else if (kind == "region") {
      auto it = std::find(t.regions.begin(), t.regions.end(), slot);
      if (it == t.regions.end() || !flag.empty()) {
        message = "unknown region in assignment '" + c.assignment[k] + "'";
        return false;
      }
      std::size_t i = static_cast<std::size_t>(it - t.regions.begin());
      a.region[i] = target;
      seen_region[i] = true;
    } else {
      message = "malformed assignment '" + c.assignment[k] + "'";
      return false;
    }
  }
  if (std::find(seen_slot.begin(), seen_slot.end(), false) != seen_slot.end() ||
      std::find(seen_region.begin(), seen_region.end(), false) != seen_region.end()) {
    message = "assignment is incomplete";
    return false;
  }
  if (!assignment_is_valid(a, cp, t)) {
    message = "assignment does not match the input structure";
    return false;
  }
  return true;
}

}  // namespace

ReplayResult replay_certificate(const Certificate& c, const CoarsePresentation& cp) {
  ReplayResult r;
  switch (c.method) {
    case Method::None:
      r.recomputed = certify(cp);
      break;
    case Method::UniformSign:
      r.recomputed = check_uniform_sign(cp);
      break;
    case Method::Theta1:
    case Method::Theta2:
    case Method::Pentagon: {
      Template t;
      Assignment a;
      if (!rebuild_assignment(c, cp, t, a, r.message)) return r;
      r.recomputed = check_conditions(a, cp, t);
      break;
    }
    case Method::ConeSearch:
      r.message = "cone-search certificates are replayed by rerunning refute";
      return r;
  }
  r.ok = r.recomputed.verdict == c.verdict && r.recomputed.method == c.method;
  if (r.ok && c.verdict == Verdict::NotLeftOrderable) r.ok = r.recomputed.evidence == c.evidence;
  r.message = r.ok ? "replay: ok" : "replay: verdict not reproduced";
  return r;
}

}  // namespace coarse
