#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace coarse {

using Integer = boost::multiprecision::cpp_int;

/// Raised on undefined arithmetic (zero denominators, indeterminate forms).
class arith_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(Integer num);  // NOLINT(google-explicit-constructor)
  Rational(long long num) : Rational(Integer(num)) {}  // NOLINT
  Rational(Integer num, Integer den);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  Integer floor() const;
  Integer ceil() const;

  Rational operator-() const { return Rational(-num_, den_); }
  Rational reciprocal() const;
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// `p/q` or `n`.
  std::string to_string() const;
  static Rational parse(std::string_view text);

 private:
  Integer num_ = 0;
  Integer den_ = 1;
};

/// Rationals extended by signed zeros and signed infinities.
///
/// Total order: -inf < negatives < -0 < 0 < +0 < positives < +inf. The signed
/// zeros are numerically zero; they exist so that reciprocals of the infinities
/// are defined (1/+0 = +inf, 1/-0 = -inf).
class ExtendedRational {
 public:
  enum class Kind { Finite, PosZero, NegZero, PosInf, NegInf };

  ExtendedRational() = default;
  ExtendedRational(Rational value)  // NOLINT(google-explicit-constructor)
      : kind_(Kind::Finite), value_(std::move(value)) {}
  ExtendedRational(long long value) : ExtendedRational(Rational(value)) {}  // NOLINT

  static ExtendedRational pos_zero() { return ExtendedRational(Kind::PosZero); }
  static ExtendedRational neg_zero() { return ExtendedRational(Kind::NegZero); }
  static ExtendedRational pos_inf() { return ExtendedRational(Kind::PosInf); }
  static ExtendedRational neg_inf() { return ExtendedRational(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinite() const { return kind_ == Kind::PosInf || kind_ == Kind::NegInf; }
  bool is_signed_zero() const { return kind_ == Kind::PosZero || kind_ == Kind::NegZero; }
  /// Finite(0), +0 or -0.
  bool is_numeric_zero() const { return is_signed_zero() || (is_finite() && value_.is_zero()); }
  /// Only meaningful for Finite values.
  const Rational& value() const { return value_; }

  ExtendedRational operator-() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);

  std::string to_string() const;
  static ExtendedRational parse(std::string_view text);

 private:
  explicit ExtendedRational(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Finite;
  Rational value_;
};

/// Reciprocal; throws arith_error on the unsigned zero.
ExtendedRational extq_recip(const ExtendedRational& x);

/// Sum, or nullopt for the indeterminate pairs {+inf,-inf} and {+0,-0}.
std::optional<ExtendedRational> extq_try_add(const ExtendedRational& x,
                                             const ExtendedRational& y);

/// Sum; throws arith_error where extq_try_add returns nullopt.
ExtendedRational extq_add(const ExtendedRational& x, const ExtendedRational& y);

/// The total order documented on ExtendedRational.
std::strong_ordering extq_compare(const ExtendedRational& x, const ExtendedRational& y);

/// Numeric order: like extq_compare but all three zeros compare equal.
std::weak_ordering extq_value_compare(const ExtendedRational& x, const ExtendedRational& y);

}  // namespace coarse
