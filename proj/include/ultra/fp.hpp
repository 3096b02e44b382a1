#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ultra {

/// Polynomial over F_p in the variable u; coefficients low degree first, no
/// trailing zeros.
class FpPoly {
 public:
  FpPoly() = default;
  explicit FpPoly(std::uint32_t p) : p_(p) {}
  FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static FpPoly constant(std::uint32_t p, std::int64_t c);
  static FpPoly monomial(std::uint32_t p, std::uint32_t c, std::size_t degree);

  std::uint32_t prime() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly operator-() const;
  FpPoly scaled(std::uint32_t c) const;

  /// Euclidean division; divisor must be nonzero.
  void divmod(const FpPoly& divisor, FpPoly& quotient, FpPoly& remainder) const;
  FpPoly monic() const;

  bool operator==(const FpPoly& o) const { return c_ == o.c_; }

  /// Text in the variable u, e.g. "u^2 + 2*u + 1".
  std::string to_string() const;

 private:
  void trim();
  std::uint32_t p_ = 0;
  std::vector<std::uint32_t> c_;
};

FpPoly gcd(FpPoly a, FpPoly b);

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p);

/// Element of F_p(u) kept reduced: gcd(num, den) = 1 and den monic. Elements of
/// F_p itself are the constant ratios.
class FpRatio {
 public:
  FpRatio() = default;
  explicit FpRatio(std::uint32_t p) : num_(p), den_(FpPoly::constant(p, 1)) {}
  FpRatio(FpPoly num, FpPoly den);

  static FpRatio constant(std::uint32_t p, std::int64_t c);
  static FpRatio u_power(std::uint32_t p, std::size_t k);

  std::uint32_t prime() const { return num_.prime() ? num_.prime() : den_.prime(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_.coeff(0) == 1; }
  bool is_constant() const { return num_.is_constant() && den_.degree() == 0; }
  const FpPoly& num() const { return num_; }
  const FpPoly& den() const { return den_; }

  FpRatio operator+(const FpRatio& o) const;
  FpRatio operator-(const FpRatio& o) const;
  FpRatio operator*(const FpRatio& o) const;
  FpRatio operator/(const FpRatio& o) const;
  FpRatio operator-() const;
  FpRatio inverse() const;

  bool operator==(const FpRatio& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// "2", "u^2 + 1", "(u + 1)/(u^2 + 2)".
  std::string to_string() const;
  /// Like to_string but parenthesized unless a bare constant.
  std::string to_factor_string() const;

 private:
  void normalize();
  FpPoly num_;
  FpPoly den_;
};

}  // namespace ultra
