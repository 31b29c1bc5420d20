#include "coarse/tangle.hpp"

#include <cctype>

namespace coarse {

TangleExpr TangleExpr::rational(Rational fraction) {
  if (fraction.is_zero()) throw std::invalid_argument("rational tangle with zero fraction");
  return TangleExpr(std::make_shared<const Node>(Node{Kind::Rational, std::move(fraction), nullptr, nullptr}));
}

TangleExpr TangleExpr::sum(TangleExpr left, TangleExpr right) {
  return TangleExpr(std::make_shared<const Node>(
      Node{Kind::Sum, Rational(), std::make_shared<const TangleExpr>(std::move(left)),
           std::make_shared<const TangleExpr>(std::move(right))}));
}

TangleExpr TangleExpr::product(TangleExpr left, TangleExpr right) {
  return TangleExpr(std::make_shared<const Node>(
      Node{Kind::Product, Rational(), std::make_shared<const TangleExpr>(std::move(left)),
           std::make_shared<const TangleExpr>(std::move(right))}));
}

std::size_t TangleExpr::leaf_count() const {
  if (is_rational()) return 1;
  return left().leaf_count() + right().leaf_count();
}

bool operator==(const TangleExpr& a, const TangleExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.is_rational()) return a.fraction() == b.fraction();
  return a.left() == b.left() && a.right() == b.right();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TangleExpr parse() {
    TangleExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    skip_ws();
    std::size_t digits = pos_;
    Integer v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == digits) {
      pos_ = start;
      fail("expected integer");
    }
    return neg ? Integer(-v) : v;
  }

  TangleExpr expr() {
    TangleExpr e = term();
    while (accept('+')) e = TangleExpr::sum(std::move(e), term());
    return e;
  }

  TangleExpr term() {
    TangleExpr e = factor();
    while (accept('*')) e = TangleExpr::product(std::move(e), factor());
    return e;
  }

  TangleExpr factor() {
    skip_ws();
    std::size_t start = pos_;
    if (accept('(')) {
      TangleExpr e = expr();
      expect(')');
      return e;
    }
    if (accept('Q')) {
      expect('(');
      std::size_t at = pos_;
      Integer num = integer();
      Integer den = 1;
      if (accept('/')) {
        std::size_t den_at = pos_;
        den = integer();
        if (den <= 0) {
          pos_ = den_at;
          fail("denominator must be positive");
        }
      }
      if (num == 0) {
        pos_ = at;
        fail("zero fraction in Q(...)");
      }
      expect(')');
      return TangleExpr::rational(Rational(num, den));
    }
    if (accept('[')) {
      std::size_t at = pos_;
      Integer first = integer();
      Rational value(first);
      if (accept('/')) {
        if (first != 1) {
          pos_ = at;
          fail("expected '[1/m]'");
        }
        std::size_t den_at = pos_;
        Integer den = integer();
        if (den == 0) {
          pos_ = den_at;
          fail("zero in elementary tangle");
        }
        value = Rational(1, den);
      } else if (first == 0) {
        pos_ = at;
        fail("zero in elementary tangle");
      }
      expect(']');
      return TangleExpr::rational(std::move(value));
    }
    pos_ = start;
    fail("expected 'Q(', '[' or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Precedence: 0 for sums, 1 for products, 2 for leaves.
int precedence(const TangleExpr& t) {
  switch (t.kind()) {
    case TangleExpr::Kind::Sum: return 0;
    case TangleExpr::Kind::Product: return 1;
    default: return 2;
  }
}

void format_into(const TangleExpr& t, std::string& out) {
  if (t.is_rational()) {
    out += "Q(" + t.fraction().to_string() + ")";
    return;
  }
  int p = precedence(t);
  // Left-associative: the left operand needs parentheses only when it binds
  // looser; the right operand also when it binds equally.
  bool paren_left = precedence(t.left()) < p;
  bool paren_right = precedence(t.right()) <= p;
  if (paren_left) out += "(";
  format_into(t.left(), out);
  if (paren_left) out += ")";
  out += t.kind() == TangleExpr::Kind::Sum ? " + " : " * ";
  if (paren_right) out += "(";
  format_into(t.right(), out);
  if (paren_right) out += ")";
}

}  // namespace

TangleExpr parse_tangle(std::string_view text) { return Parser(text).parse(); }

std::string format_tangle(const TangleExpr& t) {
  std::string out;
  format_into(t, out);
  return out;
}

std::string format_tangle_ast(const TangleExpr& t) {
  switch (t.kind()) {
    case TangleExpr::Kind::Rational:
      return "Q(" + t.fraction().to_string() + ")";
    case TangleExpr::Kind::Sum:
      return "Sum(" + format_tangle_ast(t.left()) + ", " + format_tangle_ast(t.right()) + ")";
    case TangleExpr::Kind::Product:
      return "Product(" + format_tangle_ast(t.left()) + ", " + format_tangle_ast(t.right()) + ")";
  }
  return {};
}

std::vector<Integer> continued_fraction(const Rational& x) {
  if (x.is_zero()) throw std::invalid_argument("continued fraction of zero");
  int sign = x.sign();
  Rational rest = x.abs();
  std::vector<Integer> coeffs;
  while (true) {
    Integer a = rest.floor();
    coeffs.push_back(sign * a);
    Rational frac = rest - Rational(a);
    if (frac.is_zero()) break;
    rest = frac.reciprocal();
  }
  return coeffs;
}

TangleExpr rational_tangle_expr(const Rational& x) {
  std::vector<Integer> a = continued_fraction(x);
  const std::size_t n = a.size();
  if (n == 1) return TangleExpr::rational(Rational(a[0]));
  if (n == 2 && a[0] == 0) return TangleExpr::rational(Rational(1, a[1]));
  // Coefficient i (1-based) enters as the integer tangle [a_i] through a sum
  // when i is odd and as [1/a_i] through a product when i is even; the
  // innermost coefficient a_n starts the chain in the same role.
  auto elementary = [&](std::size_t i) {
    return (i % 2 == 1) ? TangleExpr::rational(Rational(a[i - 1]))
                        : TangleExpr::rational(Rational(1, a[i - 1]));
  };
  TangleExpr e = elementary(n);
  for (std::size_t i = n - 1; i >= 1; --i) {
    if (i % 2 == 1) {
      if (i == 1 && a[0] == 0) break;
      e = TangleExpr::sum(std::move(e), elementary(i));
    } else {
      e = TangleExpr::product(std::move(e), elementary(i));
    }
  }
  return e;
}

namespace {

Rational eval_fraction(const TangleExpr& t) {
  switch (t.kind()) {
    case TangleExpr::Kind::Rational:
      return t.fraction();
    case TangleExpr::Kind::Sum:
      return eval_fraction(t.left()) + eval_fraction(t.right());
    case TangleExpr::Kind::Product: {
      Rational l = eval_fraction(t.left());
      Rational r = eval_fraction(t.right());
      Rational inv = l.reciprocal() + r.reciprocal();
      if (inv.is_zero()) throw arith_error("product of tangles with opposite reciprocal fractions");
      return inv.reciprocal();
    }
  }
  return {};
}

}  // namespace

Rational fraction_eval(const TangleExpr& t) {
  if (!is_rational_shape(t)) throw std::invalid_argument("fraction is only defined for rational tangle expressions");
  return eval_fraction(t);
}

bool is_rational_shape(const TangleExpr& t) {
  switch (t.kind()) {
    case TangleExpr::Kind::Rational:
      return true;
    case TangleExpr::Kind::Sum:
      return t.right().is_integer_tangle() && is_rational_shape(t.left());
    case TangleExpr::Kind::Product:
      return t.right().is_rational() && t.right().fraction().num() == (t.right().fraction().sign()) &&
             is_rational_shape(t.left());
  }
  return false;
}

}  // namespace coarse
