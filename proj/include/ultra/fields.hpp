#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ultra/fp.hpp"
#include "ultra/logval.hpp"
#include "ultra/rational.hpp"

namespace ultra {

enum class FieldFlavor { PAdicQ, GenLaurent };

/// Which valued coefficient field elements live in.
///
///   PAdicQ(p):          Q with the p-adic valuation; value group Z, residue F_p.
///   GenLaurent(p):      finite sums c*z^e, e in Z[1/p], c in F_p; a dense subring
///                       of the completion of F_p((z))^perf. Value group Z[1/p].
///   GenLaurent(p, u):   same with c in F_p(u); residue field F_p(u) is infinite.
struct FieldDescriptor {
  FieldFlavor flavor = FieldFlavor::PAdicQ;
  std::uint32_t p = 2;
  bool rational_function_coefficients = false;

  static FieldDescriptor padic(std::uint32_t p);
  static FieldDescriptor genlaurent(std::uint32_t p, bool with_u = false);

  ValueGroup value_group() const;
  bool dense() const { return flavor == FieldFlavor::GenLaurent; }
  bool residue_field_infinite() const { return rational_function_coefficients; }

  /// "padic:2", "genlaurent:3", "genlaurent:3:u".
  std::string to_string() const;
  static FieldDescriptor parse(std::string_view text);

  bool operator==(const FieldDescriptor&) const = default;
};

struct LaurentTerm {
  Rational exponent;
  FpRatio coeff;
};

class FieldElement {
 public:
  /// Zero of PAdicQ(2); use the static constructors for anything meaningful.
  FieldElement() = default;

  static FieldElement zero(const FieldDescriptor& field);
  static FieldElement one(const FieldDescriptor& field);
  static FieldElement from_rational(const FieldDescriptor& field, const Rational& q);
  static FieldElement monomial(const FieldDescriptor& field, const FpRatio& coeff,
                               const Rational& exponent);
  /// Uniformizer: p for PAdicQ, z for GenLaurent.
  static FieldElement uniformizer(const FieldDescriptor& field);
  /// GenLaurent over F_p(u) only.
  static FieldElement u(const FieldDescriptor& field);

  const FieldDescriptor& field() const { return field_; }
  bool is_zero() const;
  /// Single-term element (every nonzero PAdicQ element counts).
  bool is_monomial() const;

  /// PAdicQ payload.
  const Rational& rational() const { return value_; }
  /// GenLaurent payload, sorted by strictly increasing exponent.
  const std::vector<LaurentTerm>& terms() const { return terms_; }

  LogValue valuation() const;
  /// Image of x / (uniformizer^valuation) in the residue field; x must be nonzero.
  /// For PAdicQ the uniformizer power is p^v.
  FpRatio leading_coefficient() const;
  /// Image in the residue field; requires valuation 0.
  FpRatio residue() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  /// Exact inverse; GenLaurent requires a monomial.
  FieldElement inverse() const;
  FieldElement pow(long k) const;

  bool operator==(const FieldElement& o) const;

  /// Canonical text, e.g. "z^(1/3) + 2*z^(5/9)" or "3/8".
  std::string to_string() const;
  /// Parses text such as "u^2 + z", "z^(1/3)", "3/8". Division is allowed by
  /// monomials only.
  static FieldElement parse(const FieldDescriptor& field, std::string_view text);

 private:
  void require_same_field(const FieldElement& o) const;

  FieldDescriptor field_{};
  Rational value_{0};
  std::vector<LaurentTerm> terms_;
};

enum class FieldOp { Add, Mul, Neg, Invert };
FieldElement field_arith(const FieldElement& x, const FieldElement& y, FieldOp op);

inline LogValue valuation(const FieldElement& x) { return x.valuation(); }
inline FpRatio residue(const FieldElement& x) { return x.residue(); }

/// An element of the requested valuation; `tag` selects the leading
/// coefficient (residue of x / uniformizer^v). Throws ValueNotInGroup.
FieldElement monomial_with_valuation(const FieldDescriptor& field, const LogValue& v,
                                     const std::optional<FpRatio>& tag = std::nullopt);

}  // namespace ultra
