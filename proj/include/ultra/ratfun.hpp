#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ultra/fields.hpp"
#include "ultra/logval.hpp"

namespace ultra {

/// Polynomial in t over a coefficient field, a_0 first; the leading
/// coefficient is nonzero unless the polynomial is zero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldDescriptor field) : field_(field) {}
  Poly(FieldDescriptor field, std::vector<FieldElement> coeffs);

  static Poly constant(const FieldElement& c);
  /// t
  static Poly variable(const FieldDescriptor& field);
  /// t - root
  static Poly linear(const FieldElement& root);

  const FieldDescriptor& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  FieldElement coeff(std::size_t i) const;
  const FieldElement& leading() const { return coeffs_.back(); }
  /// Number of leading zero coefficients a_0 = ... = 0 (order of vanishing at 0).
  long low_order() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const FieldElement& c) const;
  Poly pow(unsigned k) const;

  /// Sum of the terms a_j t^j with lo <= j < hi.
  Poly slice(long lo, long hi) const;

  bool operator==(const Poly& o) const;

  std::string to_string() const;

 private:
  void trim();
  FieldDescriptor field_{};
  std::vector<FieldElement> coeffs_;
};

/// Formal quotient num/den. Never reduced: equality is cross-multiplication.
class RatFun {
 public:
  RatFun() = default;
  RatFun(Poly num, Poly den);
  explicit RatFun(Poly num);

  static RatFun constant(const FieldElement& c) { return RatFun(Poly::constant(c)); }
  static RatFun variable(const FieldDescriptor& field) { return RatFun(Poly::variable(field)); }

  const FieldDescriptor& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator-() const;
  RatFun inverse() const;
  RatFun pow(long k) const;

  bool operator==(const RatFun& o) const;

  std::string to_string() const;
  /// Parses expressions in t with coefficients in the field, e.g. "(t - z)/t".
  static RatFun parse(const FieldDescriptor& field, std::string_view text);

 private:
  Poly num_;
  Poly den_;
};

enum class RatFunOp { Add, Mul, Invert, Neg };
RatFun ratfun_combine(const RatFun& f, const RatFun& g, RatFunOp op);

/// Q(t) = P(t + shift), by Horner's rule over exact coefficients.
Poly recenter(const Poly& p, const FieldElement& shift);

struct NewtonSlope {
  LogValue slope;  // valuation of the roots on this edge
  long multiplicity;
  bool operator==(const NewtonSlope&) const = default;
};

/// Root valuations from the lower convex hull of (i, v(a_i)), increasing.
struct NewtonPolygon {
  std::vector<NewtonSlope> slopes;
  /// Hull vertices (i, v(a_i)) from the lowest nonzero index to the degree.
  std::vector<std::pair<long, LogValue>> vertices;
};

NewtonPolygon newton_polygon(const Poly& p);

}  // namespace ultra
