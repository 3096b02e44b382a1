#pragma once

#include <random>
#include <string>
#include <vector>

#include "ultra/fields.hpp"
#include "ultra/logval.hpp"
#include "ultra/ratfun.hpp"

namespace ultra::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long span = 20, long den_max = 9) {
    return make_rational(integer(-span, span), integer(1, den_max));
  }

  LogValue logvalue(bool allow_inf = false) {
    if (allow_inf && integer(0, 15) == 0) return LogValue::infinity();
    return LogValue(rational(), coin() ? rational() : Rational(0));
  }

  FpRatio residue(const FieldDescriptor& F, bool nonzero) {
    for (;;) {
      FpRatio c = FpRatio::constant(F.p, integer(0, F.p - 1));
      if (F.rational_function_coefficients && coin()) {
        std::vector<std::uint32_t> num(static_cast<std::size_t>(integer(1, 3)));
        for (auto& x : num) x = static_cast<std::uint32_t>(integer(0, F.p - 1));
        std::vector<std::uint32_t> den(static_cast<std::size_t>(integer(1, 2)));
        for (auto& x : den) x = static_cast<std::uint32_t>(integer(0, F.p - 1));
        den.back() = 1;
        c = FpRatio(FpPoly(F.p, num), FpPoly(F.p, den));
      }
      if (!nonzero || !c.is_zero()) return c;
    }
  }

  /// Nonzero field element with a few terms.
  FieldElement element(const FieldDescriptor& F, long max_terms = 3) {
    for (;;) {
      FieldElement x = FieldElement::zero(F);
      if (F.flavor == FieldFlavor::PAdicQ) {
        long num = 0;
        while (num == 0) num = integer(-60, 60);
        Rational q = make_rational(num, integer(1, 24));
        x = FieldElement::from_rational(F, q);
      } else {
        long k = integer(1, max_terms);
        for (long i = 0; i < k; ++i) {
          Rational e = make_rational(integer(-12, 12), static_cast<long>(F.p) * (coin() ? 1 : static_cast<long>(F.p)));
          x += FieldElement::monomial(F, residue(F, true), e);
        }
      }
      if (!x.is_zero()) return x;
    }
  }

  Poly poly(const FieldDescriptor& F, long max_degree = 4) {
    long d = integer(0, max_degree);
    std::vector<FieldElement> c;
    for (long i = 0; i <= d; ++i) c.push_back(i < d && integer(0, 3) == 0 ? FieldElement::zero(F) : element(F, 2));
    return Poly(F, c);
  }

  RatFun ratfun(const FieldDescriptor& F, long max_degree = 3) {
    return RatFun(poly(F, max_degree), poly(F, max_degree));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline const std::vector<FieldDescriptor>& all_fields() {
  static const std::vector<FieldDescriptor> fields{FieldDescriptor::padic(2), FieldDescriptor::padic(3),
                                                   FieldDescriptor::genlaurent(3), FieldDescriptor::genlaurent(2, true)};
  return fields;
}

}  // namespace ultra::testing
