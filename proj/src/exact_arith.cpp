#include "coarse/exact_arith.hpp"

#include <cctype>

namespace coarse {

namespace {

Integer gcd_of(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

// Rank in the total order; finite values share rank 2 and are refined by
// value, with Finite(0) sitting between the signed zeros.
int rank(const ExtendedRational& x) {
  switch (x.kind()) {
    case ExtendedRational::Kind::NegInf: return 0;
    case ExtendedRational::Kind::PosInf: return 4;
    default: return 2;
  }
}

// Position of a finite-or-zero value on a fine scale: -1 negative, 0 zero
// band, +1 positive.
int zero_band_rank(const ExtendedRational& x) {
  switch (x.kind()) {
    case ExtendedRational::Kind::NegZero: return -1;
    case ExtendedRational::Kind::PosZero: return 1;
    default: return 0;
  }
}

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  Integer v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
  }
  out = neg ? Integer(-v) : v;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(Integer num) : num_(std::move(num)), den_(1) {}

Rational::Rational(Integer num, Integer den) {
  if (den == 0) throw arith_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Integer g = gcd_of(num < 0 ? Integer(-num) : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Integer Rational::floor() const {
  Integer q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) q -= 1;
  return q;
}

Integer Rational::ceil() const {
  Integer q = num_ / den_;
  if (num_ > 0 && q * den_ != num_) q += 1;
  return q;
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw arith_error("reciprocal of zero");
  return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Integer lhs = a.num_ * b.den_;
  Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  Integer num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    return Rational(num);
  }
  if (!parse_integer(trim(text.substr(0, slash)), num) ||
      !parse_integer(trim(text.substr(slash + 1)), den)) {
    throw std::invalid_argument("bad rational '" + std::string(text) + "'");
  }
  if (den <= 0) throw std::invalid_argument("rational denominator must be positive in '" + std::string(text) + "'");
  return Rational(num, den);
}

ExtendedRational ExtendedRational::operator-() const {
  switch (kind_) {
    case Kind::Finite: return ExtendedRational(-value_);
    case Kind::PosZero: return neg_zero();
    case Kind::NegZero: return pos_zero();
    case Kind::PosInf: return neg_inf();
    case Kind::NegInf: return pos_inf();
  }
  return *this;
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != ExtendedRational::Kind::Finite || a.value_ == b.value_;
}

std::string ExtendedRational::to_string() const {
  switch (kind_) {
    case Kind::Finite: return value_.to_string();
    case Kind::PosZero: return "+0";
    case Kind::NegZero: return "-0";
    case Kind::PosInf: return "+inf";
    case Kind::NegInf: return "-inf";
  }
  return {};
}

ExtendedRational ExtendedRational::parse(std::string_view text) {
  text = trim(text);
  if (text == "+0") return pos_zero();
  if (text == "-0") return neg_zero();
  if (text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return ExtendedRational(Rational::parse(text));
}

ExtendedRational extq_recip(const ExtendedRational& x) {
  using K = ExtendedRational::Kind;
  switch (x.kind()) {
    case K::PosInf: return ExtendedRational::pos_zero();
    case K::NegInf: return ExtendedRational::neg_zero();
    case K::PosZero: return ExtendedRational::pos_inf();
    case K::NegZero: return ExtendedRational::neg_inf();
    case K::Finite:
      if (x.value().is_zero()) throw arith_error("reciprocal of unsigned zero");
      return ExtendedRational(x.value().reciprocal());
  }
  return x;
}

std::optional<ExtendedRational> extq_try_add(const ExtendedRational& x,
                                             const ExtendedRational& y) {
  if (x.is_infinite() || y.is_infinite()) {
    if (x.is_infinite() && y.is_infinite() && x.kind() != y.kind()) return std::nullopt;
    return x.is_infinite() ? x : y;
  }
  if (x.is_signed_zero() && y.is_signed_zero()) {
    if (x.kind() != y.kind()) return std::nullopt;
    return x;
  }
  if (x.is_signed_zero()) return y;
  if (y.is_signed_zero()) return x;
  return ExtendedRational(x.value() + y.value());
}

ExtendedRational extq_add(const ExtendedRational& x, const ExtendedRational& y) {
  auto sum = extq_try_add(x, y);
  if (!sum) throw arith_error("indeterminate sum " + x.to_string() + " + " + y.to_string());
  return *sum;
}

std::strong_ordering extq_compare(const ExtendedRational& x, const ExtendedRational& y) {
  int rx = rank(x), ry = rank(y);
  if (rx != ry) return rx <=> ry;
  if (rx != 2) return std::strong_ordering::equal;
  // Both finite or signed zero. Compare sign bands first.
  auto band = [](const ExtendedRational& v) -> int {
    if (v.is_finite()) return v.value().sign() * 2;  // -2, 0, +2
    return zero_band_rank(v);                        // -1, +1
  };
  int bx = band(x), by = band(y);
  if (bx != by) return bx <=> by;
  if (x.is_finite()) return x.value() <=> y.value();
  return std::strong_ordering::equal;
}

std::weak_ordering extq_value_compare(const ExtendedRational& x, const ExtendedRational& y) {
  if (x.is_numeric_zero() && y.is_numeric_zero()) return std::weak_ordering::equivalent;
  auto as_zero = [](const ExtendedRational& v) {
    return v.is_signed_zero() ? ExtendedRational(0) : v;
  };
  auto c = extq_compare(as_zero(x), as_zero(y));
  if (c == std::strong_ordering::less) return std::weak_ordering::less;
  if (c == std::strong_ordering::greater) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

}  // namespace coarse
