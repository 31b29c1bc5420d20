#include "coarse/range.hpp"

#include <array>
#include <cctype>
#include <optional>

namespace coarse {

namespace {

bool leq(const ExtendedRational& a, const ExtendedRational& b) {
  return extq_compare(a, b) != std::strong_ordering::greater;
}

bool value_leq(const ExtendedRational& a, const ExtendedRational& b) {
  return extq_value_compare(a, b) != std::weak_ordering::greater;
}

ExtendedRational add_or(const ExtendedRational& a, const ExtendedRational& b,
                        const ExtendedRational& fallback) {
  auto s = extq_try_add(a, b);
  return s ? *s : fallback;
}

ExtendedRational inverse_lattice_lower(const ExtendedRational& x) {
  if (!x.is_finite()) return x;
  const Rational& v = x.value();
  if (v.is_zero()) return ExtendedRational::neg_zero();
  if (v.sign() > 0) {
    if (v >= Rational(1)) return Rational(1);
    return Rational(1, v.reciprocal().ceil());
  }
  if (v < Rational(-1)) return ExtendedRational::neg_inf();
  return Rational(-1, (-v).reciprocal().floor());
}

ExtendedRational inverse_lattice_upper(const ExtendedRational& x) {
  if (!x.is_finite()) return x;
  const Rational& v = x.value();
  if (v.is_zero()) return ExtendedRational::pos_zero();
  if (v.sign() > 0) {
    if (v > Rational(1)) return ExtendedRational::pos_inf();
    return Rational(1, v.reciprocal().floor());
  }
  if (v <= Rational(-1)) return Rational(-1);
  return Rational(-1, (-v).reciprocal().ceil());
}

// (x^-1 + y^-1)^-1, or nullopt when the reciprocal sum is indeterminate or an
// unsigned zero.
std::optional<ExtendedRational> harmonic(const ExtendedRational& x, const ExtendedRational& y) {
  if (x.is_finite() && x.value().is_zero()) return std::nullopt;
  if (y.is_finite() && y.value().is_zero()) return std::nullopt;
  auto s = extq_try_add(extq_recip(x), extq_recip(y));
  if (!s) return std::nullopt;
  if (s->is_finite() && s->value().is_zero()) return std::nullopt;
  return extq_recip(*s);
}

bool is_unit_fraction_tangle(const TangleExpr& t) {
  if (!t.is_rational()) return false;
  const Rational& f = t.fraction();
  return f.num() == f.sign() && f.den() >= 2;
}

}  // namespace

Range::Range(ExtendedRational lo, ExtendedRational hi) : lower(std::move(lo)), upper(std::move(hi)) {
  if (!leq(lower, upper)) {
    throw std::invalid_argument("range lower endpoint " + lower.to_string() +
                                " exceeds upper endpoint " + upper.to_string());
  }
}

bool Range::contains(const Range& inner) const {
  return value_leq(lower, inner.lower) && value_leq(inner.upper, upper);
}

bool Range::contains(const Rational& x) const { return contains(Range::point(x)); }

std::string Range::to_string() const {
  return "[[" + lower.to_string() + ", " + upper.to_string() + "]]";
}

Range Range::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.size() < 4 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]") {
    throw std::invalid_argument("range must look like [[a, b]]: '" + std::string(text) + "'");
  }
  s = s.substr(2, s.size() - 4);
  auto comma = s.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("range is missing ',': '" + std::string(text) + "'");
  }
  return Range(ExtendedRational::parse(s.substr(0, comma)), ExtendedRational::parse(s.substr(comma + 1)));
}

Range widen_to_integer_lattice(const Range& r) {
  auto lo = [](const ExtendedRational& x) -> ExtendedRational {
    if (x.is_infinite()) return x;
    if (x.is_signed_zero()) return Rational(0);
    return Rational(x.value().floor());
  };
  auto hi = [](const ExtendedRational& x) -> ExtendedRational {
    if (x.is_infinite()) return x;
    if (x.is_signed_zero()) return Rational(0);
    return Rational(x.value().ceil());
  };
  return Range(lo(r.lower), hi(r.upper));
}

Range widen_to_inverse_lattice(const Range& r) {
  return Range(inverse_lattice_lower(r.lower), inverse_lattice_upper(r.upper));
}

Range range_sum(const Range& r1, const Range& r2, const TangleExpr& t1, const TangleExpr& t2) {
  Range a = r1, b = r2;
  if (!t1.is_integer_tangle() && !t2.is_integer_tangle()) {
    a = widen_to_integer_lattice(r1);
    b = widen_to_integer_lattice(r2);
  }
  return Range(add_or(a.lower, b.lower, ExtendedRational::neg_inf()),
               add_or(a.upper, b.upper, ExtendedRational::pos_inf()));
}

Range range_product(const Range& r1, const Range& r2) {
  Range a = widen_to_inverse_lattice(r1);
  Range b = widen_to_inverse_lattice(r2);
  const std::array<std::pair<const ExtendedRational*, const ExtendedRational*>, 4> corners{{
      {&a.lower, &b.lower}, {&a.lower, &b.upper}, {&a.upper, &b.lower}, {&a.upper, &b.upper}}};
  std::optional<ExtendedRational> lo, hi;
  for (const auto& [x, y] : corners) {
    auto v = harmonic(*x, *y);
    if (!v) return Range::unbounded();
    if (!lo || extq_compare(*v, *lo) == std::strong_ordering::less) lo = *v;
    if (!hi || extq_compare(*v, *hi) == std::strong_ordering::greater) hi = *v;
  }
  return Range(*lo, *hi);
}

Range refine_inverse_sum(const Integer& p, const Integer& q, int sign) {
  if (p < 2 || q < 2) throw std::invalid_argument("refine_inverse_sum needs p, q >= 2");
  if (sign != 1 && sign != -1) throw std::invalid_argument("refine_inverse_sum sign must be +-1");
  const Integer& small = p < q ? p : q;
  const Integer& large = p < q ? q : p;
  Rational lo(1, small);
  Rational hi(large + 1, large);
  if (sign > 0) return Range(lo, hi);
  return Range(-hi, -lo);
}

Range range_of_expr(const TangleExpr& t, bool refine) {
  switch (t.kind()) {
    case TangleExpr::Kind::Rational:
      return Range::point(t.fraction());
    case TangleExpr::Kind::Sum: {
      const TangleExpr& l = t.left();
      const TangleExpr& r = t.right();
      if (refine && is_unit_fraction_tangle(l) && is_unit_fraction_tangle(r) &&
          l.fraction().sign() == r.fraction().sign()) {
        return refine_inverse_sum(l.fraction().den(), r.fraction().den(), l.fraction().sign());
      }
      return range_sum(range_of_expr(l, refine), range_of_expr(r, refine), l, r);
    }
    case TangleExpr::Kind::Product:
      return range_product(range_of_expr(t.left(), refine), range_of_expr(t.right(), refine));
  }
  return Range::unbounded();
}

}  // namespace coarse
