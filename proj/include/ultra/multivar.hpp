#pragma once

#include <map>
#include <string>
#include <vector>

#include "ultra/fields.hpp"
#include "ultra/logval.hpp"

namespace ultra {

/// Exponent vector of T_1^e_1 ... T_k^e_k, stored without trailing zeros.
using Monomial = std::vector<long>;

/// Laurent polynomial in T_1, T_2, ... with finite support.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(FieldDescriptor field) : field_(field) {}
  LaurentPoly(FieldDescriptor field, std::map<Monomial, FieldElement> terms);

  static LaurentPoly constant(const FieldElement& c);
  /// T_k (k >= 1).
  static LaurentPoly variable(const FieldDescriptor& field, long k);
  static LaurentPoly term(const FieldElement& c, Monomial m);

  const FieldDescriptor& field() const { return field_; }
  const std::map<Monomial, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return field_ == o.field_ && terms_ == o.terms_; }

  /// Gauss valuation with unit weights: min over coefficients of v(c).
  LogValue alpha() const;
  /// Largest index carrying a nonzero exponent (0 for constants).
  long depth() const;
  /// Monomials with zero exponent in every T_j, j > k.
  LaurentPoly project(long k) const;
  /// Monomials with alpha-valuation at most `bound`.
  LaurentPoly truncated(const LogValue& bound) const;

  std::string to_string() const;

 private:
  FieldDescriptor field_{};
  std::map<Monomial, FieldElement> terms_;
};

Monomial monomial_product(const Monomial& a, const Monomial& b);

/// Formal quotient num/den of Laurent polynomials; equality by cross-multiplication.
class MultiVarElement {
 public:
  MultiVarElement() = default;
  MultiVarElement(LaurentPoly num);  // NOLINT(google-explicit-constructor)
  MultiVarElement(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  const FieldDescriptor& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  /// Denominator is a single term, so this is a Laurent polynomial.
  bool is_laurent() const { return den_.terms().size() == 1; }
  LaurentPoly as_laurent() const;

  MultiVarElement operator+(const MultiVarElement& o) const;
  MultiVarElement operator*(const MultiVarElement& o) const;
  bool operator==(const MultiVarElement& o) const;

  std::string to_string() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

struct MultiVarNormData {
  LogValue alpha;  // spectral norm is 2^(-alpha)
  long depth;
};

/// Throws ZeroElement.
MultiVarNormData multivar_norm_data(const MultiVarElement& x);

struct Projection {
  LaurentPoly value;
  /// Lower bound for the alpha-valuation of (true projection - value);
  /// infinity when the projection is exact.
  LogValue error;
};

/// Projection onto F(T_1..T_k). Laurent inputs project exactly; ratios need a
/// unique alpha-dominant denominator monomial and are expanded as a geometric
/// series up to `prec`. Throws UnsupportedDenominator otherwise.
Projection project(long k, const MultiVarElement& x, const LogValue& prec = LogValue(40));

/// Upper bound for the norm from a decomposition x = x_1 + ... + x_n, in
/// valuation scale: min_i (alpha(x_i) - depth(x_i)). Throws DecompositionMismatch.
LogValue multivar_norm_upper(const MultiVarElement& x, const std::vector<MultiVarElement>& decomposition);

}  // namespace ultra
