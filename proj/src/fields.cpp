#include "ultra/fields.hpp"

#include <algorithm>
#include <map>

#include "ultra/error.hpp"
#include "ultra/expr.hpp"

namespace ultra {

FieldDescriptor FieldDescriptor::padic(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be prime");
  return FieldDescriptor{FieldFlavor::PAdicQ, p, false};
}

FieldDescriptor FieldDescriptor::genlaurent(std::uint32_t p, bool with_u) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be prime");
  return FieldDescriptor{FieldFlavor::GenLaurent, p, with_u};
}

ValueGroup FieldDescriptor::value_group() const {
  return flavor == FieldFlavor::PAdicQ ? ValueGroup::integers() : ValueGroup::padic_fractions(p);
}

std::string FieldDescriptor::to_string() const {
  if (flavor == FieldFlavor::PAdicQ) return "padic:" + std::to_string(p);
  return "genlaurent:" + std::to_string(p) + (rational_function_coefficients ? ":u" : "");
}

FieldDescriptor FieldDescriptor::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::Parse, "field must look like padic:P or genlaurent:P[:u]");
  std::string_view kind = text.substr(0, colon);
  std::string rest(text.substr(colon + 1));
  bool with_u = false;
  if (auto c2 = rest.find(':'); c2 != std::string::npos) {
    if (rest.substr(c2 + 1) != "u") throw Error(ErrorKind::Parse, "unknown field suffix");
    with_u = true;
    rest = rest.substr(0, c2);
  }
  if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      rest.size() > 9)
    throw Error(ErrorKind::Parse, "bad prime in field descriptor");
  auto p = static_cast<std::uint32_t>(std::stoul(rest));
  if (!is_prime(p)) throw Error(ErrorKind::Parse, "field characteristic must be prime");
  if (kind == "padic") {
    if (with_u) throw Error(ErrorKind::Parse, "padic fields take no :u suffix");
    return padic(p);
  }
  if (kind == "genlaurent") return genlaurent(p, with_u);
  throw Error(ErrorKind::Parse, "unknown field kind '" + std::string(kind) + "'");
}

// ---------------------------------------------------------------------------

FieldElement FieldElement::zero(const FieldDescriptor& field) {
  FieldElement x;
  x.field_ = field;
  return x;
}

FieldElement FieldElement::one(const FieldDescriptor& field) { return from_rational(field, 1); }

FieldElement FieldElement::from_rational(const FieldDescriptor& field, const Rational& q) {
  FieldElement x = zero(field);
  if (field.flavor == FieldFlavor::PAdicQ) {
    x.value_ = q;
    return x;
  }
  if (q == 0) return x;
  Integer p(field.p);
  Integer num(q.get_num()), den(q.get_den());
  Integer num_mod, den_mod;
  mpz_fdiv_r(num_mod.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  mpz_fdiv_r(den_mod.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  if (den_mod == 0) throw Error(ErrorKind::DivisionByZero, "denominator divisible by the characteristic");
  std::uint32_t c = static_cast<std::uint32_t>(num_mod.get_ui());
  if (c == 0) return x;
  c = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) *
                                  fp_inverse(static_cast<std::uint32_t>(den_mod.get_ui()), field.p)) %
                                 field.p);
  x.terms_.push_back({Rational(0), FpRatio::constant(field.p, c)});
  return x;
}

FieldElement FieldElement::monomial(const FieldDescriptor& field, const FpRatio& coeff,
                                    const Rational& exponent) {
  if (coeff.prime() != field.p) throw Error(ErrorKind::FieldMismatch, "coefficient prime mismatch");
  if (!field.rational_function_coefficients && !coeff.is_constant())
    throw Error(ErrorKind::FieldMismatch, "coefficient involves u but field has F_p coefficients");
  if (field.flavor == FieldFlavor::PAdicQ) {
    if (!is_integer(exponent)) throw Error(ErrorKind::ValueNotInGroup, "p-adic exponent must be an integer");
    Rational c(Integer(coeff.num().coeff(0)));
    return from_rational(field, c * rational_pow(field.p, exponent.get_num().get_si()));
  }
  if (!denominator_is_power_of(exponent, field.p))
    throw Error(ErrorKind::ValueNotInGroup, "exponent " + ultra::to_string(exponent) + " not in Z[1/p]");
  FieldElement x = zero(field);
  if (!coeff.is_zero()) x.terms_.push_back({exponent, coeff});
  return x;
}

FieldElement FieldElement::uniformizer(const FieldDescriptor& field) {
  if (field.flavor == FieldFlavor::PAdicQ) return from_rational(field, Rational(field.p));
  return monomial(field, FpRatio::constant(field.p, 1), 1);
}

FieldElement FieldElement::u(const FieldDescriptor& field) {
  if (!field.rational_function_coefficients)
    throw Error(ErrorKind::FieldMismatch, "field " + field.to_string() + " has no variable u");
  return monomial(field, FpRatio::u_power(field.p, 1), 0);
}

bool FieldElement::is_zero() const {
  return field_.flavor == FieldFlavor::PAdicQ ? value_ == 0 : terms_.empty();
}

bool FieldElement::is_monomial() const {
  return field_.flavor == FieldFlavor::PAdicQ ? value_ != 0 : terms_.size() == 1;
}

LogValue FieldElement::valuation() const {
  if (is_zero()) return LogValue::infinity();
  if (field_.flavor == FieldFlavor::PAdicQ) return LogValue(padic_valuation(value_, field_.p));
  return LogValue(terms_.front().exponent);
}

FpRatio FieldElement::leading_coefficient() const {
  if (is_zero()) throw Error(ErrorKind::ZeroElement, "leading coefficient of zero");
  if (field_.flavor == FieldFlavor::GenLaurent) return terms_.front().coeff;
  long v = padic_valuation(value_, field_.p);
  Rational unit = value_ * rational_pow(field_.p, -v);
  Integer p(field_.p), num(unit.get_num()), den(unit.get_den());
  Integer nm, dm;
  mpz_fdiv_r(nm.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  mpz_fdiv_r(dm.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  auto c = (static_cast<std::uint64_t>(nm.get_ui()) *
            fp_inverse(static_cast<std::uint32_t>(dm.get_ui()), field_.p)) %
           field_.p;
  return FpRatio::constant(field_.p, static_cast<std::int64_t>(c));
}

FpRatio FieldElement::residue() const {
  if (valuation() != LogValue(0))
    throw Error(ErrorKind::NotAUnit, "residue needs valuation 0, got " + valuation().to_string());
  return leading_coefficient();
}

void FieldElement::require_same_field(const FieldElement& o) const {
  if (!(field_ == o.field_))
    throw Error(ErrorKind::FieldMismatch, field_.to_string() + " vs " + o.field_.to_string());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(o);
  FieldElement r = zero(field_);
  if (field_.flavor == FieldFlavor::PAdicQ) {
    r.value_ = value_ + o.value_;
    return r;
  }
  // Merge of two sorted term lists.
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].exponent < o.terms_[j].exponent)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].exponent < terms_[i].exponent) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      FpRatio c = terms_[i].coeff + o.terms_[j].coeff;
      if (!c.is_zero()) r.terms_.push_back({terms_[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (field_.flavor == FieldFlavor::PAdicQ) {
    r.value_ = -value_;
  } else {
    for (auto& t : r.terms_) t.coeff = -t.coeff;
  }
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(o);
  FieldElement r = zero(field_);
  if (field_.flavor == FieldFlavor::PAdicQ) {
    r.value_ = value_ * o.value_;
    return r;
  }
  if (terms_.empty() || o.terms_.empty()) return r;
  if (terms_.size() == 1 || o.terms_.size() == 1) {
    // Monomial times a sum keeps the order; no merging required.
    const auto& mono = terms_.size() == 1 ? terms_.front() : o.terms_.front();
    const auto& other = terms_.size() == 1 ? o.terms_ : terms_;
    r.terms_.reserve(other.size());
    for (const auto& t : other) r.terms_.push_back({t.exponent + mono.exponent, t.coeff * mono.coeff});
    return r;
  }
  std::map<Rational, FpRatio> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Rational e = a.exponent + b.exponent;
      auto it = acc.find(e);
      if (it == acc.end()) acc.emplace(e, a.coeff * b.coeff);
      else it->second = it->second + a.coeff * b.coeff;
    }
  for (auto& [e, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({e, std::move(c)});
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  FieldElement r = zero(field_);
  if (field_.flavor == FieldFlavor::PAdicQ) {
    r.value_ = 1 / value_;
    return r;
  }
  if (terms_.size() != 1)
    throw Error(ErrorKind::NonMonomialInverse, "inverse of the sum " + to_string() + " is an infinite series");
  r.terms_.push_back({-terms_.front().exponent, terms_.front().coeff.inverse()});
  return r;
}

FieldElement FieldElement::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  FieldElement result = one(field_);
  FieldElement base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!(field_ == o.field_)) return false;
  if (field_.flavor == FieldFlavor::PAdicQ) return value_ == o.value_;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exponent != o.terms_[i].exponent || !(terms_[i].coeff == o.terms_[i].coeff))
      return false;
  return true;
}

std::string FieldElement::to_string() const {
  if (field_.flavor == FieldFlavor::PAdicQ) return ultra::to_string(value_);
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string zpart;
    if (t.exponent != 0) {
      zpart = "z";
      if (t.exponent != 1) {
        if (is_integer(t.exponent) && t.exponent > 0) zpart += "^" + ultra::to_string(t.exponent);
        else zpart += "^(" + ultra::to_string(t.exponent) + ")";
      }
    }
    std::string c = t.coeff.to_string();
    if (zpart.empty()) {
      out += c;
    } else if (t.coeff.is_one()) {
      out += zpart;
    } else {
      bool bare = c.find_first_of(" /") == std::string::npos;
      out += (bare ? c : "(" + c + ")") + "*" + zpart;
    }
  }
  return out;
}

namespace {

struct FieldAlgebra {
  FieldDescriptor field;

  FieldElement number(const Rational& q) { return FieldElement::from_rational(field, q); }
  FieldElement variable(const std::string& name) {
    if (name == "z" && field.flavor == FieldFlavor::GenLaurent) return FieldElement::uniformizer(field);
    if (name == "u") return FieldElement::u(field);
    throw Error(ErrorKind::Parse, "unknown variable '" + name + "' for field " + field.to_string());
  }
  FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
  FieldElement sub(const FieldElement& a, const FieldElement& b) { return a - b; }
  FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
  FieldElement div(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
  FieldElement neg(const FieldElement& a) { return -a; }
  FieldElement pow(const FieldElement& a, const Rational& e) {
    if (is_integer(e)) return a.pow(e.get_num().get_si());
    if (field.flavor != FieldFlavor::GenLaurent || !a.is_monomial() || !a.terms().front().coeff.is_one())
      throw Error(ErrorKind::Parse, "fractional powers apply to z-monomials only");
    return FieldElement::monomial(field, a.terms().front().coeff, a.terms().front().exponent * e);
  }
};

}  // namespace

FieldElement FieldElement::parse(const FieldDescriptor& field, std::string_view text) {
  auto tree = expr::parse(text);
  FieldAlgebra alg{field};
  return expr::evaluate(*tree, alg);
}

FieldElement field_arith(const FieldElement& x, const FieldElement& y, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return x + y;
    case FieldOp::Mul: return x * y;
    case FieldOp::Neg: return -x;
    case FieldOp::Invert: return x.inverse();
  }
  return x;
}

FieldElement monomial_with_valuation(const FieldDescriptor& field, const LogValue& v,
                                     const std::optional<FpRatio>& tag) {
  if (!field.value_group().contains(v))
    throw Error(ErrorKind::ValueNotInGroup, v.to_string() + " is not in the value group of " + field.to_string());
  FpRatio coeff = tag.value_or(FpRatio::constant(field.p, 1));
  if (coeff.is_zero()) throw Error(ErrorKind::InvalidArgument, "leading coefficient must be nonzero");
  return FieldElement::monomial(field, coeff, v.rational_part());
}

}  // namespace ultra
