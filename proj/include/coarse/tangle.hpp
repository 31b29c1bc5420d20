#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coarse/exact_arith.hpp"

namespace coarse {

/// Syntax error in tangle or map text; `position` is a 0-based offset.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Immutable algebraic tangle: rational tangles combined by sum and product.
class TangleExpr {
 public:
  enum class Kind { Rational, Sum, Product };

  static TangleExpr rational(Rational fraction);
  static TangleExpr sum(TangleExpr left, TangleExpr right);
  static TangleExpr product(TangleExpr left, TangleExpr right);

  Kind kind() const { return node_->kind; }
  bool is_rational() const { return kind() == Kind::Rational; }
  /// RationalTangle(n/1).
  bool is_integer_tangle() const { return is_rational() && fraction().is_integer(); }
  const Rational& fraction() const { return node_->fraction; }
  const TangleExpr& left() const { return *node_->left; }
  const TangleExpr& right() const { return *node_->right; }

  /// Number of RationalTangle leaves.
  std::size_t leaf_count() const;

  friend bool operator==(const TangleExpr& a, const TangleExpr& b);

 private:
  struct Node {
    Kind kind;
    Rational fraction;
    std::shared_ptr<const TangleExpr> left, right;
  };
  explicit TangleExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// expr := term ('+' term)*; term := factor ('*' factor)*;
/// factor := 'Q(' rat ')' | '[' int ']' | '[1/' int ']' | '(' expr ')'.
TangleExpr parse_tangle(std::string_view text);

/// Inverse of parse_tangle with minimal parentheses.
std::string format_tangle(const TangleExpr& t);

/// Constructor-style dump, e.g. `Sum(Q(1/3), Q(1/4))`.
std::string format_tangle_ast(const TangleExpr& t);

/// Greedy uniform-sign expansion x = a1 + 1/(a2 + 1/(a3 + ...)).
std::vector<Integer> continued_fraction(const Rational& x);

/// Canonical expression of Q(x) over elementary tangles [m] and [1/m].
TangleExpr rational_tangle_expr(const Rational& x);

/// Fraction of a rational-tangle expression: sum adds, product combines
/// harmonically. Throws std::invalid_argument unless is_rational_shape(t)
/// and arith_error on a zero intermediate.
Rational fraction_eval(const TangleExpr& t);

/// True when `t` has the shape produced by rational_tangle_expr: a left spine
/// whose sums add integer tangles and whose products take [1/m] tangles.
bool is_rational_shape(const TangleExpr& t);

}  // namespace coarse
