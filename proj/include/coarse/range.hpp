#pragma once

#include <string>
#include <string_view>

#include "coarse/exact_arith.hpp"
#include "coarse/tangle.hpp"

namespace coarse {

/// A universal range [[lower, upper]].
struct Range {
  ExtendedRational lower;
  ExtendedRational upper;

  Range() = default;
  Range(ExtendedRational lo, ExtendedRational hi);

  static Range point(const Rational& x) { return Range(x, x); }
  static Range unbounded() {
    return Range(ExtendedRational::neg_inf(), ExtendedRational::pos_inf());
  }

  /// Numeric containment (signed zeros count as zero).
  bool contains(const Range& inner) const;
  bool contains(const Rational& x) const;

  friend bool operator==(const Range&, const Range&) = default;

  /// `[[lower, upper]]`.
  std::string to_string() const;
  static Range parse(std::string_view text);
};

/// lower -> floor, upper -> ceiling; signed zeros become 0, infinities stay.
Range widen_to_integer_lattice(const Range& r);

/// Move each endpoint outward onto {+-1/n : n >= 1} and {+-0, +-inf}. An
/// unsigned 0 becomes -0 as a lower endpoint and +0 as an upper endpoint.
Range widen_to_inverse_lattice(const Range& r);

/// Sum rule. Endpoints add directly when either summand is an integer tangle;
/// otherwise both ranges are first widened to the integer lattice.
Range range_sum(const Range& r1, const Range& r2, const TangleExpr& t1, const TangleExpr& t2);

/// Product rule: min and max of (x^-1 + y^-1)^-1 over the endpoints of the
/// inverse-lattice widenings. An indeterminate corner yields [[-inf, +inf]].
Range range_product(const Range& r1, const Range& r2);

/// Sharper range for Q(s/p) + Q(s/q), p, q >= 2, s = sign:
/// [[1/min(p,q), (max(p,q)+1)/max(p,q)]] for s = +1, mirrored for s = -1.
/// Throws std::invalid_argument when p or q is below 2 or sign is not +-1.
Range refine_inverse_sum(const Integer& p, const Integer& q, int sign);

/// Recursive universal range of an algebraic tangle. With `refine`, sums of
/// two same-sign inverse tangles use refine_inverse_sum.
Range range_of_expr(const TangleExpr& t, bool refine);

}  // namespace coarse
