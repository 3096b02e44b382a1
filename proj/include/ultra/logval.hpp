#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ultra/rational.hpp"

namespace ultra {

/// An element a + b*sqrt(2) of the ordered group Q + Q*sqrt(2), or +infinity.
///
/// Values are -log2 of norms: the norm of x is 2^(-v(x)). Infinity is the
/// value of 0; it is absorbing under addition and greater than everything.
class LogValue {
 public:
  LogValue() = default;
  LogValue(Rational a, Rational b = 0);  // NOLINT(google-explicit-constructor)
  LogValue(long a) : LogValue(Rational(a)) {}  // NOLINT(google-explicit-constructor)

  static LogValue infinity();
  static LogValue sqrt2();

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && a_ == 0 && b_ == 0; }
  bool is_rational() const { return !infinite_ && b_ == 0; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  /// Sign of the represented real number (+1 for infinity).
  int sign() const;

  LogValue& operator+=(const LogValue& other);
  LogValue& operator-=(const LogValue& other);

  friend LogValue operator+(LogValue lhs, const LogValue& rhs) { return lhs += rhs; }
  friend LogValue operator-(LogValue lhs, const LogValue& rhs) { return lhs -= rhs; }
  LogValue operator-() const;

  /// Multiplication by a rational. Infinity times a positive rational stays
  /// infinite, times zero is zero; negative multiples of infinity throw.
  LogValue scaled(const Rational& q) const;

  friend bool operator==(const LogValue& u, const LogValue& v);
  friend std::strong_ordering operator<=>(const LogValue& u, const LogValue& v);

  /// "inf", "3/2", "sqrt2", "1/2*sqrt2", "1-3*sqrt2".
  std::string to_string() const;
  static LogValue parse(std::string_view text);

  /// Non-authoritative decimal approximation, for plotting only.
  double approx() const;

 private:
  Rational a_{0};
  Rational b_{0};
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const LogValue& v);

enum class Order { LT, EQ, GT };

Order lv_compare(const LogValue& u, const LogValue& v);

enum class LogOp { Add, Sub, Scale };
LogValue lv_arith(const LogValue& u, const LogValue& v, LogOp op, const Rational& q = 1);

inline const LogValue& min(const LogValue& u, const LogValue& v) { return v < u ? v : u; }
inline const LogValue& max(const LogValue& u, const LogValue& v) { return u < v ? v : u; }

/// Subgroups of Q + Q*sqrt(2) used as value groups. The uniformizer always has
/// value 1.
class ValueGroup {
 public:
  enum class Kind { Integers, PAdicFractions, IntegersPlusSqrt2 };

  static ValueGroup integers() { return ValueGroup(Kind::Integers, 0); }
  static ValueGroup padic_fractions(std::uint32_t p);
  static ValueGroup integers_plus_sqrt2() { return ValueGroup(Kind::IntegersPlusSqrt2, 0); }

  Kind kind() const { return kind_; }
  std::uint32_t prime() const { return p_; }
  bool dense() const { return kind_ != Kind::Integers; }

  bool contains(const LogValue& v) const;
  bool divisible_closure_contains(const LogValue& v) const;

  bool operator==(const ValueGroup&) const = default;

 private:
  ValueGroup(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

bool divisible_closure_member(const LogValue& v, const ValueGroup& group);

}  // namespace ultra
