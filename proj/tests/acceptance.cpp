// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "coarse/certifier.hpp"
#include "coarse/cone_refuter.hpp"
#include "coarse/planar_map.hpp"
#include "coarse/presentation.hpp"
#include "coarse/range.hpp"
#include "test_support.hpp"

using namespace coarse;
using testsupport::load_fixture;

namespace {

// Collects failed checks for one criterion.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  void note(const std::string& s) { notes_.push_back(s); }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

bool smith_verified(const IntMatrix& m, std::size_t cols) {
  SmithForm s = smith_normal_form(m, cols);
  if (!m.empty()) {
    IntMatrix d = mat_mul(mat_mul(s.u, m), s.v);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        Integer want = (i == j && i < s.diagonal.size()) ? s.diagonal[i] : Integer(0);
        if (d[i][j] != want) return false;
      }
    }
    if (abs_int(determinant(s.u)) != 1) return false;
  }
  if (abs_int(determinant(s.v)) != 1) return false;
  for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
    if (s.diagonal[i] == 0 ? s.diagonal[i + 1] != 0 : s.diagonal[i + 1] % s.diagonal[i] != 0) return false;
  }
  return true;
}

std::string certify_text(const PlanarMap& m) { return format_certificate(certify(coarse_brunner(m, false))); }

void golden_presentation(Check& c) {
  PlanarMap m = load_fixture("k4_integer.map");
  Presentation p = brunner(m);
  auto w = [](const char* s) { return Word::parse(s); };
  // lhs = rhs as relators lhs * rhs^-1, then the three region cycles.
  std::vector<Word> expected = {
      w("W1") * w("A^2").inverse(),          w("W2") * w("B^2").inverse(),
      w("W3") * w("C").inverse(),            w("W4") * w("B^-1 A").power(2).inverse(),
      w("W5") * w("B^-1 C").power(-1).inverse(), w("W6") * w("C^-1 A").power(-1).inverse(),
      w("W6 W4 W1"),                         w("W4^-1 W5^-1 W2"),
      w("W6^-1 W3^-1 W5")};
  c.require(p.relators.size() == expected.size(), "nine relators");
  for (std::size_t i = 0; i < std::min(expected.size(), p.relators.size()); ++i) {
    c.require(p.relators[i].word == expected[i], "relator " + std::to_string(i + 1) + ": " +
                                                     p.relators[i].word.to_string() + " vs " + expected[i].to_string());
  }
  std::vector<std::string> gens = p.generator_names();
  c.require(gens == std::vector<std::string>{"W1", "W2", "W3", "W4", "W5", "W6", "A", "B", "C"}, "generators");
  std::string text = format_presentation(p);
  c.require(text == testsupport::read_file(testsupport::fixture_path("golden/k4_integer.brunner.txt")), "golden file");
  c.require(text == format_presentation(brunner(load_fixture("k4_integer.map"))), "byte-stable");
  c.require(format_presentation(reduced_brunner(m)) == text, "reduced level agrees");
}

void range_exactness(Check& c) {
  auto of = [](const char* e, bool refine) { return range_of_expr(parse_tangle(e), refine); };
  Range plain = of("Q(1/3)+Q(1/4)", false);
  Range refined = of("Q(1/3)+Q(1/4)", true);
  Range nested = of("(Q(1/3)+Q(1/4))*Q(-1)+Q(2)", true);
  c.require(plain == Range(Rational(0), Rational(2)), "plain sum " + plain.to_string());
  c.require(refined == Range(Rational(1, 3), Rational(5, 4)), "refined sum " + refined.to_string());
  c.require(nested == Range(Rational(1), Rational(5, 2)), "nested " + nested.to_string());
  c.note(plain.to_string() + " " + refined.to_string() + " " + nested.to_string());
}

void uniform_sign(Check& c) {
  std::vector<std::pair<std::string, PlanarMap>> positive = {{"trefoil_theta", load_fixture("trefoil_theta.map")},
                                                             {"figure_eight", load_fixture("figure_eight.map")}};
  std::mt19937 rng(101);
  for (int i = 0; i < 10; ++i) {
    positive.emplace_back("random " + std::to_string(i), testsupport::random_map(rng, 4 + i, {"Q(1)"}));
  }
  for (const auto& [name, m] : positive) {
    Certificate cert = certify(coarse_brunner(m, false));
    c.require(cert.verdict == Verdict::NotLeftOrderable && cert.method == Method::UniformSign, name);
  }
  std::vector<std::pair<std::string, PlanarMap>> mixed;
  for (const char* f : {"k4_integer.map", "theta_cond1.map", "theta_cond2.map", "theta_violating.map", "pentagon.map",
                        "pentagon_swap_1_2.map", "pentagon_swap_1_4.map", "pentagon_swap_1_7.map",
                        "pentagon_swap_1_10.map"}) {
    mixed.emplace_back(f, load_fixture(f));
  }
  int random_mixed = 0;
  while (random_mixed < 10) {
    PlanarMap m = testsupport::random_map(rng, 5, {"Q(1)", "Q(-1)"});
    bool pos = false, neg = false;
    for (const auto& e : m.edges()) {
      (std::get<TangleLabel>(e.label).expr.fraction().sign() > 0 ? pos : neg) = true;
    }
    if (!(pos && neg)) continue;
    mixed.emplace_back("random mixed " + std::to_string(random_mixed++), m);
  }
  for (const auto& [name, m] : mixed) {
    Certificate u = check_uniform_sign(coarse_brunner(m, false));
    Certificate all = certify(coarse_brunner(m, false));
    c.require(u.verdict == Verdict::Inconclusive && all.method != Method::UniformSign, name + " is mixed");
  }
  c.note(std::to_string(positive.size()) + " positive maps certified, " + std::to_string(mixed.size()) +
         " mixed maps rejected");
}

void theta_conditions(Check& c) {
  Certificate c1 = certify(coarse_brunner(load_fixture("theta_cond1.map"), false));
  Certificate c2 = certify(coarse_brunner(load_fixture("theta_cond2.map"), false));
  Certificate bad = certify(coarse_brunner(load_fixture("theta_violating.map"), false));
  c.require(c1.verdict == Verdict::NotLeftOrderable && c1.method == Method::Theta1, "condition (1) fixture");
  c.require(c2.verdict == Verdict::NotLeftOrderable && c2.method == Method::Theta2, "condition (2) fixture");
  c.require(bad.method != Method::Theta1 && bad.method != Method::Theta2, "violating fixture not certified by theta");
  c.require(!match_template(coarse_brunner(load_fixture("theta_violating.map"), false), theta_template()).empty(),
            "violating fixture still matches the theta structure");
  CoarsePresentation cp = coarse_brunner(load_fixture("theta_cond1.map"), false);
  c.require(replay_certificate(parse_certificate(format_certificate(c1)), cp).ok, "condition (1) replays");
}

void pentagon(Check& c) {
  CoarsePresentation cp = coarse_brunner(load_fixture("pentagon.map"), false);
  auto matches = match_template(cp, pentagon_template());
  Assignment id;
  for (std::size_t i = 0; i < 10; ++i) {
    id.tangle.push_back(i);
    id.flipped.push_back(false);
  }
  id.region = {"A", "B", "C", "D", "E"};
  c.require(std::find(matches.begin(), matches.end(), id) != matches.end(), "identity match");
  Certificate cert = certify(cp);
  c.require(cert.verdict == Verdict::NotLeftOrderable && cert.method == Method::Pentagon, "pentagon certified");
  c.require(replay_certificate(parse_certificate(format_certificate(cert)), cp).ok, "pentagon replays");
  for (const char* f : {"pentagon_swap_1_2.map", "pentagon_swap_1_4.map", "pentagon_swap_1_7.map",
                        "pentagon_swap_1_10.map"}) {
    c.require(certify(coarse_brunner(load_fixture(f), false)).verdict == Verdict::Inconclusive,
              std::string(f) + " rejected");
  }
}

void homology(Check& c) {
  struct Case {
    const char* file;
    int p;
  };
  std::string orders;
  for (auto [file, p] : {Case{"numerator_q1_2.map", 2}, Case{"numerator_q1_3.map", 3}, Case{"numerator_q2_5.map", 5},
                         Case{"numerator_q3_7.map", 7}}) {
    PlanarMap m = load_fixture(file);
    for (const Presentation& pr : {brunner(m), reduced_brunner(m)}) {
      Integer order = h1_order(pr);
      c.require(order == p, std::string(file) + " order " + order.str());
      c.require(smith_verified(abelianize(pr), pr.generators.size()), std::string(file) + " SNF transforms");
    }
    c.require(testsupport::determinant_oracle(m) == p, std::string(file) + " Laplacian oracle");
    orders += (orders.empty() ? "" : " ") + h1_order(reduced_brunner(m)).str();
  }
  c.note("orders " + orders);
}

void cone_refuter(Check& c) {
  auto refuted = [](const Presentation& p, std::size_t r) {
    BallOptions o;
    o.radius = r;
    return refute(p, o).certificate.verdict == Verdict::NotLeftOrderable;
  };
  std::string radii;
  for (int n = 2; n <= 6; ++n) {
    Presentation p = parse_presentation("gen edge a\nrel a^" + std::to_string(n) + "\n");
    std::size_t found = 0;
    for (std::size_t r = 1; r <= static_cast<std::size_t>(n) && !found; ++r) {
      if (refuted(p, r)) found = r;
    }
    c.require(found != 0, "a^" + std::to_string(n) + " refuted");
    radii += " n=" + std::to_string(n) + ":r" + std::to_string(found);
  }
  for (const char* text : {"gen edge a\n", "gen edge a\ngen edge b\n"}) {
    for (std::size_t r = 1; r <= 4; ++r) {
      c.require(!refuted(parse_presentation(text), r), "free group refuted at radius " + std::to_string(r));
    }
  }
  const std::size_t kLensRadius = 1;
  c.require(refuted(reduced_brunner(load_fixture("numerator_q1_3.map")), kLensRadius), "Q(1/3) closure refuted");
  c.note("radii" + radii + "; Q(1/3) closure at r" + std::to_string(kLensRadius));
}

void structural(Check& c) {
  std::mt19937 rng(103);
  const std::vector<std::string> labels = {"Q(1)",          "Q(-1)",      "[2]",          "Q(-1/3)", "Q(2/5)",
                                           "Q(1/2)+Q(1/3)", "Q(1)*Q(-2)", "Q(-3/4)+Q(2)", "[1/2]"};
  for (int i = 0; i < 100; ++i) {
    PlanarMap m = testsupport::random_map(rng, 3 + i % 9, labels);
    PlanarMap r = expand_to_reduced(m);
    PlanarMap f = expand_to_full(r);
    PlanarMap g = collapse_connectivity(f).map;
    for (const PlanarMap* x : {&m, &r, &f, &g}) {
      c.require(x->euler_characteristic() == 2, "Euler on random map " + std::to_string(i));
      std::vector<int> total(x->edge_count(), 0);
      for (std::size_t face = 0; face < x->face_count(); ++face) {
        for (const auto& oe : boundary_word(*x, face)) total[oe.edge] += oe.exponent;
      }
      for (int t : total) c.require(t == 0, "boundary words cancel on random map " + std::to_string(i));
    }
  }

  std::vector<PlanarMap> maps;
  for (const char* f : {"theta_cond1.map", "theta_cond2.map", "theta_violating.map", "pentagon.map",
                        "pentagon_swap_1_7.map", "figure_eight.map", "k4_integer.map"}) {
    maps.push_back(load_fixture(f));
  }
  for (int i = 0; i < 10; ++i) maps.push_back(testsupport::random_map(rng, 4, {"Q(1)", "Q(-1)", "Q(1/2)", "[2]"}));
  std::bernoulli_distribution coin(0.5);
  for (const auto& m : maps) {
    Certificate base = certify(coarse_brunner(m, false));
    for (int trial = 0; trial < 5; ++trial) {
      PlanarMap g = m;
      for (std::size_t e = 0; e < m.edge_count(); ++e) {
        if (coin(rng)) g = g.with_flipped_edge(e);
      }
      Certificate flipped = certify(coarse_brunner(g, false));
      c.require(flipped.verdict == base.verdict && flipped.method == base.method, "certify under flips");
    }
  }

  for (int i = 0; i < 1000; ++i) {
    TangleExpr t = testsupport::random_tangle(rng, 6);
    c.require(parse_tangle(format_tangle(t)) == t, "tangle round-trip " + format_tangle(t));
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"golden Brunner presentation of the four-region map", golden_presentation},
      {"exact universal ranges", range_exactness},
      {"uniform-sign certification", uniform_sign},
      {"theta template conditions", theta_conditions},
      {"pentagon template conditions", pentagon},
      {"first homology of numerator closures", homology},
      {"cone refuter", cone_refuter},
      {"structural invariants", structural},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].name;
    for (const auto& n : c.notes()) std::cout << " (" << n << ")";
    std::cout << "\n";
    for (std::size_t k = 0; k < c.failures().size() && k < 10; ++k) std::cout << "    " << c.failures()[k] << "\n";
    if (!c.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
