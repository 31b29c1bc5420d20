#include <doctest.h>

#include <functional>
#include <random>

#include "coarse/range.hpp"
#include "test_support.hpp"

using namespace coarse;

namespace {

using K = ExtendedRational;

Range R(const char* text) { return Range::parse(text); }

Range of(const char* expr, bool refine = false) { return range_of_expr(parse_tangle(expr), refine); }

bool lower_nonneg(const Range& r) { return extq_value_compare(r.lower, Rational(0)) >= 0; }
bool upper_nonpos(const Range& r) { return extq_value_compare(r.upper, Rational(0)) <= 0; }

// Random tree whose leaves all have sign `sign`; sums only unless `products`.
TangleExpr random_tree(std::mt19937& rng, int depth, bool products, int sign) {
  std::uniform_int_distribution<int> coin(0, 2);
  if (depth == 0 || coin(rng) == 0) {
    Rational x = testsupport::random_fraction(rng, 6).abs();
    return TangleExpr::rational(sign < 0 ? -x : x);
  }
  auto l = random_tree(rng, depth - 1, products, sign);
  auto r = random_tree(rng, depth - 1, products, sign);
  if (products && coin(rng) == 1) return TangleExpr::product(l, r);
  return TangleExpr::sum(l, r);
}

std::vector<Range> sample_ranges() {
  std::vector<Range> out;
  std::vector<K> ends = {K::neg_inf(), Rational(-5, 2), Rational(-1), Rational(-2, 5), K::neg_zero(), Rational(0),
                         K::pos_zero(), Rational(1, 3), Rational(3, 4), Rational(1), Rational(5, 4), Rational(7),
                         K::pos_inf()};
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i; j < ends.size(); ++j) out.emplace_back(ends[i], ends[j]);
  }
  return out;
}

}  // namespace

TEST_CASE("range literals") {
  CHECK(R("[[1/3, 5/4]]") == Range(Rational(1, 3), Rational(5, 4)));
  CHECK(R("[[-inf,+0]]") == Range(K::neg_inf(), K::pos_zero()));
  CHECK(Range(Rational(-1), K::pos_inf()).to_string() == "[[-1, +inf]]");
  CHECK_THROWS(R("[[2, 1]]"));
  CHECK_THROWS(R("[1, 2]"));
  for (const auto& r : sample_ranges()) CHECK(Range::parse(r.to_string()) == r);
}

TEST_CASE("worked range expressions") {
  CHECK(of("Q(1/3)+Q(1/4)") == R("[[0, 2]]"));
  CHECK(of("Q(1/3)+Q(1/4)", true) == R("[[1/3, 5/4]]"));
  CHECK(of("((Q(1/3)+Q(1/4))*Q(-1))+Q(2)", true) == R("[[1, 5/2]]"));
  CHECK(of("(Q(1/3)+Q(1/4))*Q(-1)", true) == R("[[-1, 1/2]]"));
}

TEST_CASE("sum rule") {
  auto q = [](const char* e) { return parse_tangle(e); };
  CHECK(range_sum(R("[[0,1]]"), R("[[0,1]]"), q("Q(1/2)"), q("Q(1/2)")) == R("[[0, 2]]"));
  CHECK(range_sum(R("[[-1, 1/2]]"), R("[[2,2]]"), q("Q(1/2)*Q(-1)"), q("Q(2)")) == R("[[1, 5/2]]"));
  CHECK(range_sum(R("[[1/3, 5/4]]"), R("[[1/3, 5/4]]"), q("Q(1/3)+Q(1/4)"), q("Q(1/3)+Q(1/4)")) == R("[[0, 4]]"));
  CHECK(range_sum(R("[[1, +inf]]"), R("[[1/2, 1/2]]"), q("Q(1)*Q(1)"), q("Q(1/2)")) == R("[[1, +inf]]"));
  CHECK(range_sum(R("[[-inf, +inf]]"), R("[[3, 3]]"), q("Q(1/2)*Q(-1/2)"), q("Q(3)")) == R("[[-inf, +inf]]"));
}

TEST_CASE("product rule") {
  CHECK(range_product(R("[[1/3, +inf]]"), R("[[-1, -1]]")) == R("[[-1, 1/2]]"));
  CHECK(range_product(R("[[1/3, 1/3]]"), R("[[1/4, 1/4]]")) == R("[[1/7, 1/7]]"));
  CHECK(range_product(R("[[1/2, 1/2]]"), R("[[-1/2, -1/2]]")) == Range::unbounded());
  // Agrees with the harmonic combination of rational tangle fractions.
  CHECK(of("Q(1/3)*Q(1/4)") == R("[[1/7, 1/7]]"));
  CHECK(of("Q(1)*Q(1)") == R("[[1/2, 1/2]]"));
}

TEST_CASE("integer lattice widening") {
  CHECK(widen_to_integer_lattice(R("[[1/3, 5/4]]")) == R("[[0, 2]]"));
  CHECK(widen_to_integer_lattice(R("[[2, 2]]")) == R("[[2, 2]]"));
  CHECK(widen_to_integer_lattice(R("[[-5/4, -1/3]]")) == R("[[-2, 0]]"));
  CHECK(widen_to_integer_lattice(R("[[+0, +inf]]")) == R("[[0, +inf]]"));
  CHECK(widen_to_integer_lattice(R("[[-inf, -0]]")) == R("[[-inf, 0]]"));
}

TEST_CASE("inverse lattice widening") {
  CHECK(widen_to_inverse_lattice(R("[[1/3, 5/4]]")) == R("[[1/3, +inf]]"));
  CHECK(widen_to_inverse_lattice(R("[[-1, -1]]")) == R("[[-1, -1]]"));
  CHECK(widen_to_inverse_lattice(R("[[2/5, 3/4]]")) == R("[[1/3, 1]]"));
  CHECK(widen_to_inverse_lattice(R("[[0, 0]]")) == R("[[-0, +0]]"));
  CHECK(widen_to_inverse_lattice(R("[[3, 7]]")) == R("[[1, +inf]]"));
  CHECK(widen_to_inverse_lattice(R("[[-5/4, -1/3]]")) == R("[[-inf, -1/3]]"));
  CHECK(widen_to_inverse_lattice(R("[[-3/4, -2/5]]")) == R("[[-1, -1/3]]"));
}

TEST_CASE("widenings are extensive, idempotent and monotone") {
  auto ranges = sample_ranges();
  for (auto widen : {&widen_to_integer_lattice, &widen_to_inverse_lattice}) {
    for (const auto& r : ranges) {
      INFO(r.to_string());
      Range w = widen(r);
      CHECK(w.contains(r));
      CHECK(widen(w) == w);
      for (const auto& s : ranges) {
        if (s.contains(r)) CHECK(widen(s).contains(w));
      }
    }
  }
}

TEST_CASE("refined inverse sums") {
  CHECK(refine_inverse_sum(3, 4, 1) == R("[[1/3, 5/4]]"));
  CHECK(refine_inverse_sum(2, 2, 1) == R("[[1/2, 3/2]]"));
  CHECK(refine_inverse_sum(3, 4, -1) == R("[[-5/4, -1/3]]"));
  CHECK(refine_inverse_sum(4, 3, 1) == refine_inverse_sum(3, 4, 1));
  CHECK_THROWS_AS(refine_inverse_sum(1, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(refine_inverse_sum(2, 4, 0), std::invalid_argument);
  // Only same-sign inverse tangles qualify.
  CHECK(of("Q(1/3)+Q(-1/4)", true) == of("Q(1/3)+Q(-1/4)", false));
  CHECK(of("Q(1/3)+Q(2/5)", true) == of("Q(1/3)+Q(2/5)", false));
  CHECK(of("Q(-1/3)+Q(-1/4)", true) == R("[[-5/4, -1/3]]"));
}

TEST_CASE("rational tangles have point ranges") {
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    Rational x = testsupport::random_fraction(rng, 50);
    CHECK(range_of_expr(TangleExpr::rational(x), false) == Range::point(x));
    CHECK(range_of_expr(TangleExpr::rational(x), true) == Range::point(x));
    INFO(x.to_string());
    CHECK(range_of_expr(rational_tangle_expr(x), false).contains(x));
  }
}

TEST_CASE("refinement narrows product-free expressions") {
  std::mt19937 rng(23);
  for (int i = 0; i < 500; ++i) {
    int sign = (i % 2) ? 1 : -1;
    TangleExpr t = random_tree(rng, 5, false, sign);
    INFO(format_tangle(t));
    CHECK(range_of_expr(t, false).contains(range_of_expr(t, true)));
  }
  CHECK(of("Q(1/2)+Q(1/3)+Q(1/5)", false).contains(of("Q(1/2)+Q(1/3)+Q(1/5)", true)));
}

TEST_CASE("refinement is not monotone through products") {
  // Inverse-lattice widening of [[0, 2]] reaches -0, whose reciprocal pole
  // collapses the product; the refined operand stays away from it.
  CHECK(of("(Q(1/3)+Q(1/4))*Q(-1)") == R("[[-1, -0]]"));
  CHECK(of("(Q(1/3)+Q(1/4))*Q(-1)+Q(2)") == R("[[1, 2]]"));
  CHECK_FALSE(of("(Q(1/3)+Q(1/4))*Q(-1)+Q(2)").contains(of("(Q(1/3)+Q(1/4))*Q(-1)+Q(2)", true)));
}

TEST_CASE("uniform signs propagate") {
  std::mt19937 rng(29);
  for (int i = 0; i < 500; ++i) {
    TangleExpr pos = random_tree(rng, 5, true, 1);
    TangleExpr neg = random_tree(rng, 5, true, -1);
    for (bool refine : {false, true}) {
      INFO(format_tangle(pos), " / ", format_tangle(neg));
      CHECK(lower_nonneg(range_of_expr(pos, refine)));
      CHECK(upper_nonpos(range_of_expr(neg, refine)));
    }
  }
}

TEST_CASE("ranges are ordered and symmetric under mirroring") {
  std::mt19937 rng(31);
  std::function<TangleExpr(const TangleExpr&)> mirror = [&](const TangleExpr& t) -> TangleExpr {
    switch (t.kind()) {
      case TangleExpr::Kind::Rational:
        return TangleExpr::rational(-t.fraction());
      case TangleExpr::Kind::Sum:
        return TangleExpr::sum(mirror(t.left()), mirror(t.right()));
      case TangleExpr::Kind::Product:
        return TangleExpr::product(mirror(t.left()), mirror(t.right()));
    }
    return t;
  };
  for (int i = 0; i < 500; ++i) {
    TangleExpr t = testsupport::random_tangle(rng, 5);
    for (bool refine : {false, true}) {
      Range r = range_of_expr(t, refine);
      Range m = range_of_expr(mirror(t), refine);
      INFO(format_tangle(t));
      CHECK(extq_compare(r.lower, r.upper) <= 0);
      CHECK(m == Range(-r.upper, -r.lower));
    }
  }
}
