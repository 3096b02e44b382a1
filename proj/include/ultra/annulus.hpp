#pragma once

#include <map>
#include <string>

#include "ultra/fields.hpp"
#include "ultra/logval.hpp"

namespace ultra {

/// Truncated Laurent series sum c_n T^n over a coefficient field, normed by
/// v_s(c T^n) = v(c) + n s at a log-radius s outside the divisible closure of
/// the value group. Terms of valuation above `precision` are not tracked.
class AnnulusElement {
 public:
  AnnulusElement(FieldDescriptor field, LogValue s, std::map<long, FieldElement> terms = {},
                 LogValue precision = LogValue::infinity());

  static AnnulusElement monomial(const FieldDescriptor& field, const LogValue& s, const FieldElement& c, long n);

  const FieldDescriptor& field() const { return field_; }
  const LogValue& radius() const { return s_; }
  const LogValue& precision() const { return precision_; }
  const std::map<long, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LogValue term_valuation(long n, const FieldElement& c) const;
  /// Minimum term valuation; the minimizer is unique.
  LogValue valuation() const;
  long dominant_index() const;

  AnnulusElement operator+(const AnnulusElement& o) const;
  AnnulusElement operator-(const AnnulusElement& o) const;
  AnnulusElement operator*(const AnnulusElement& o) const;
  AnnulusElement operator-() const;
  /// Drops terms with valuation above `bound`; the result is exact as stored.
  AnnulusElement truncated(const LogValue& bound) const;
  bool operator==(const AnnulusElement& o) const;

  std::string to_string() const;

 private:
  void check_compatible(const AnnulusElement& o) const;

  FieldDescriptor field_;
  LogValue s_;
  std::map<long, FieldElement> terms_;
  LogValue precision_;
};

struct AnnulusInverse {
  AnnulusElement inverse;
  long series_terms;  // powers of the normalized remainder that were summed
  LogValue residual;  // v_s(x * inverse - 1), computed exactly
};

/// y with v_s(x y - 1) > prec, via the dominant term and a geometric series.
/// Throws ZeroDivisorAtPrecision if x is indistinguishable from 0.
AnnulusInverse annulus_invert(const AnnulusElement& x, const LogValue& prec);

}  // namespace ultra
