#include "ultra/annulus.hpp"

#include "ultra/error.hpp"

namespace ultra {

AnnulusElement::AnnulusElement(FieldDescriptor field, LogValue s, std::map<long, FieldElement> terms,
                               LogValue precision)
    : field_(field), s_(std::move(s)), terms_(std::move(terms)), precision_(std::move(precision)) {
  if (s_.is_infinite() || divisible_closure_member(s_, field_.value_group()))
    throw Error(ErrorKind::InvalidArgument, "annulus radius must avoid the divisible closure of the value group");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (!(it->second.field() == field_)) throw Error(ErrorKind::FieldMismatch, "annulus coefficient field");
    if (it->second.is_zero() || precision_ < term_valuation(it->first, it->second))
      it = terms_.erase(it);
    else
      ++it;
  }
}

AnnulusElement AnnulusElement::monomial(const FieldDescriptor& field, const LogValue& s, const FieldElement& c,
                                        long n) {
  return AnnulusElement(field, s, {{n, c}});
}

LogValue AnnulusElement::term_valuation(long n, const FieldElement& c) const {
  return c.valuation() + s_.scaled(n);
}

LogValue AnnulusElement::valuation() const {
  if (terms_.empty()) return LogValue::infinity();
  return term_valuation(dominant_index(), terms_.at(dominant_index()));
}

long AnnulusElement::dominant_index() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroElement, "zero annulus element has no dominant term");
  long best = terms_.begin()->first;
  LogValue best_v = term_valuation(best, terms_.begin()->second);
  for (const auto& [n, c] : terms_) {
    LogValue v = term_valuation(n, c);
    if (v < best_v) {
      best = n;
      best_v = v;
    }
  }
  return best;
}

void AnnulusElement::check_compatible(const AnnulusElement& o) const {
  if (!(field_ == o.field_) || s_ != o.s_) throw Error(ErrorKind::FieldMismatch, "annulus elements on different annuli");
}

AnnulusElement AnnulusElement::operator+(const AnnulusElement& o) const {
  check_compatible(o);
  auto r = terms_;
  for (const auto& [n, c] : o.terms_) {
    auto [it, inserted] = r.emplace(n, c);
    if (!inserted) it->second += c;
  }
  return AnnulusElement(field_, s_, std::move(r), min(precision_, o.precision_));
}

AnnulusElement AnnulusElement::operator-() const {
  auto r = terms_;
  for (auto& [n, c] : r) c = -c;
  return AnnulusElement(field_, s_, std::move(r), precision_);
}

AnnulusElement AnnulusElement::operator-(const AnnulusElement& o) const { return *this + (-o); }

AnnulusElement AnnulusElement::operator*(const AnnulusElement& o) const {
  check_compatible(o);
  std::map<long, FieldElement> r;
  for (const auto& [n, a] : terms_)
    for (const auto& [m, b] : o.terms_) {
      auto [it, inserted] = r.emplace(n + m, a * b);
      if (!inserted) it->second += a * b;
    }
  LogValue prec = LogValue::infinity();
  if (precision_.is_finite() && !o.is_zero()) prec = min(prec, precision_ + o.valuation());
  if (o.precision_.is_finite() && !is_zero()) prec = min(prec, o.precision_ + valuation());
  return AnnulusElement(field_, s_, std::move(r), prec);
}

AnnulusElement AnnulusElement::truncated(const LogValue& bound) const {
  std::map<long, FieldElement> r;
  for (const auto& [n, c] : terms_)
    if (term_valuation(n, c) <= bound) r.emplace(n, c);
  return AnnulusElement(field_, s_, std::move(r), precision_);
}

bool AnnulusElement::operator==(const AnnulusElement& o) const {
  return field_ == o.field_ && s_ == o.s_ && terms_ == o.terms_;
}

std::string AnnulusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [n, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (n != 0) out += "*T^" + (n < 0 ? "(" + std::to_string(n) + ")" : std::to_string(n));
  }
  return out;
}

AnnulusInverse annulus_invert(const AnnulusElement& x, const LogValue& prec) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroDivisorAtPrecision, "element vanishes at its precision");
  if (prec.is_infinite()) throw Error(ErrorKind::InvalidArgument, "inversion precision must be finite");
  const auto& F = x.field();
  const auto& s = x.radius();
  long k = x.dominant_index();
  FieldElement c = x.terms().at(k);

  // x = d (1 + r) with d = c T^k and v_s(r) > 0.
  AnnulusElement d_inv = AnnulusElement::monomial(F, s, c.inverse(), -k);
  AnnulusElement one = AnnulusElement::monomial(F, s, FieldElement::one(F), 0);
  AnnulusElement minus_r = one - d_inv * x;

  // Powers of -r with v_s above prec only contribute to the residual beyond prec.
  AnnulusElement sum = one;
  AnnulusElement power = one;
  long count = 1;
  for (;;) {
    power = (power * minus_r).truncated(prec);
    if (power.is_zero()) break;
    sum = sum + power;
    ++count;
  }
  AnnulusElement y = d_inv * sum;
  AnnulusElement residual = x * y - one;
  return {y, count, residual.valuation()};
}

}  // namespace ultra
