#include "ultra/logval.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "ultra/error.hpp"

namespace ultra {

namespace {

int rational_sign(const Rational& q) { return sgn(q); }

// Sign of a + b*sqrt(2).
int sign_of(const Rational& a, const Rational& b) {
  int sa = rational_sign(a);
  int sb = rational_sign(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 2 b^2.
  Rational lhs = a * a;
  Rational rhs = 2 * b * b;
  int c = cmp(lhs, rhs);
  return c == 0 ? 0 : (c > 0 ? sa : sb);
}

}  // namespace

LogValue::LogValue(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

LogValue LogValue::infinity() {
  LogValue v;
  v.infinite_ = true;
  return v;
}

LogValue LogValue::sqrt2() { return LogValue(0, 1); }

int LogValue::sign() const { return infinite_ ? 1 : sign_of(a_, b_); }

LogValue& LogValue::operator+=(const LogValue& other) {
  if (infinite_) return *this;
  if (other.infinite_) {
    *this = infinity();
    return *this;
  }
  a_ += other.a_;
  b_ += other.b_;
  return *this;
}

LogValue& LogValue::operator-=(const LogValue& other) {
  if (other.infinite_)
    throw Error(ErrorKind::SubFromFinite,
                infinite_ ? "inf - inf is undefined" : "cannot subtract inf from a finite value");
  if (infinite_) return *this;
  a_ -= other.a_;
  b_ -= other.b_;
  return *this;
}

LogValue LogValue::operator-() const {
  if (infinite_) throw Error(ErrorKind::SubFromFinite, "negation of inf");
  return LogValue(-a_, -b_);
}

LogValue LogValue::scaled(const Rational& q) const {
  if (infinite_) {
    if (q > 0) return infinity();
    if (q == 0) return LogValue();
    throw Error(ErrorKind::SubFromFinite, "negative multiple of inf");
  }
  return LogValue(a_ * q, b_ * q);
}

bool operator==(const LogValue& u, const LogValue& v) {
  if (u.infinite_ || v.infinite_) return u.infinite_ == v.infinite_;
  return u.a_ == v.a_ && u.b_ == v.b_;
}

std::strong_ordering operator<=>(const LogValue& u, const LogValue& v) {
  if (u.infinite_ || v.infinite_) {
    if (u.infinite_ && v.infinite_) return std::strong_ordering::equal;
    return u.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  int s = sign_of(u.a_ - v.a_, u.b_ - v.b_);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string LogValue::to_string() const {
  if (infinite_) return "inf";
  if (b_ == 0) return ultra::to_string(a_);
  std::string sqrt_part;
  Rational mag = abs(b_);
  sqrt_part = (mag == 1) ? "sqrt2" : ultra::to_string(mag) + "*sqrt2";
  if (a_ == 0) return (b_ < 0 ? "-" : "") + sqrt_part;
  return ultra::to_string(a_) + (b_ < 0 ? "-" : "+") + sqrt_part;
}

LogValue LogValue::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "inf") return infinity();
  if (s.empty()) throw Error(ErrorKind::Parse, "empty log value");

  auto parse_sqrt_term = [&](std::string_view term) -> Rational {
    // term ends with "sqrt2"; coefficient precedes an optional '*'.
    std::string_view coef = term.substr(0, term.size() - 5);
    if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
    if (coef.empty() || coef == "+") return 1;
    if (coef == "-") return -1;
    return parse_rational(coef);
  };

  auto pos = s.find("sqrt2");
  if (pos == std::string::npos) return LogValue(parse_rational(s));
  if (pos + 5 != s.size()) throw Error(ErrorKind::Parse, "malformed log value '" + s + "'");
  // Split at the last '+' or '-' that separates the rational part.
  std::size_t split = std::string::npos;
  for (std::size_t i = pos; i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '*') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return LogValue(0, parse_sqrt_term(s));
  Rational a = parse_rational(std::string_view(s).substr(0, split));
  Rational b = parse_sqrt_term(std::string_view(s).substr(split));
  return LogValue(a, b);
}

double LogValue::approx() const {
  if (infinite_) return HUGE_VAL;
  return a_.get_d() + b_.get_d() * std::sqrt(2.0);
}

std::ostream& operator<<(std::ostream& os, const LogValue& v) { return os << v.to_string(); }

Order lv_compare(const LogValue& u, const LogValue& v) {
  auto c = u <=> v;
  if (c < 0) return Order::LT;
  if (c > 0) return Order::GT;
  return Order::EQ;
}

LogValue lv_arith(const LogValue& u, const LogValue& v, LogOp op, const Rational& q) {
  switch (op) {
    case LogOp::Add: return u + v;
    case LogOp::Sub: return u - v;
    case LogOp::Scale: return u.scaled(q);
  }
  return u;
}

ValueGroup ValueGroup::padic_fractions(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "Z[1/p] needs a prime p");
  return ValueGroup(Kind::PAdicFractions, p);
}

bool ValueGroup::contains(const LogValue& v) const {
  if (v.is_infinite()) return false;
  switch (kind_) {
    case Kind::Integers: return v.sqrt2_part() == 0 && is_integer(v.rational_part());
    case Kind::PAdicFractions:
      return v.sqrt2_part() == 0 && denominator_is_power_of(v.rational_part(), p_);
    case Kind::IntegersPlusSqrt2:
      return is_integer(v.rational_part()) && is_integer(v.sqrt2_part());
  }
  return false;
}

bool ValueGroup::divisible_closure_contains(const LogValue& v) const {
  if (v.is_infinite()) return false;
  // Divisible closures: Q for Z and Z[1/p], Q + Q*sqrt(2) for Z + Z*sqrt(2).
  if (kind_ == Kind::IntegersPlusSqrt2) return true;
  return v.sqrt2_part() == 0;
}

bool divisible_closure_member(const LogValue& v, const ValueGroup& group) {
  return group.divisible_closure_contains(v);
}

}  // namespace ultra
