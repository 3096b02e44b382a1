#include "ultra/ratfun.hpp"

#include <algorithm>

#include "ultra/error.hpp"
#include "ultra/expr.hpp"

namespace ultra {

Poly::Poly(FieldDescriptor field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.field() == field_)) throw Error(ErrorKind::FieldMismatch, "coefficient field differs from polynomial field");
  trim();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.field(), {c}); }

Poly Poly::variable(const FieldDescriptor& field) {
  return Poly(field, {FieldElement::zero(field), FieldElement::one(field)});
}

Poly Poly::linear(const FieldElement& root) {
  return Poly(root.field(), {-root, FieldElement::one(root.field())});
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : FieldElement::zero(field_);
}

long Poly::low_order() const {
  long k = 0;
  while (k < static_cast<long>(coeffs_.size()) && coeffs_[k].is_zero()) ++k;
  return k;
}

Poly Poly::operator+(const Poly& o) const {
  if (!(field_ == o.field_)) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  std::vector<FieldElement> r(std::max(coeffs_.size(), o.coeffs_.size()), FieldElement::zero(field_));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < coeffs_.size()) r[i] = r[i] + coeffs_[i];
    if (i < o.coeffs_.size()) r[i] = r[i] + o.coeffs_[i];
  }
  return Poly(field_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<FieldElement> r;
  r.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.push_back(-c);
  return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (!(field_ == o.field_)) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<FieldElement> r(coeffs_.size() + o.coeffs_.size() - 1, FieldElement::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Poly(field_, std::move(r));
}

Poly Poly::scaled(const FieldElement& c) const {
  std::vector<FieldElement> r;
  r.reserve(coeffs_.size());
  for (const auto& a : coeffs_) r.push_back(a * c);
  return Poly(field_, std::move(r));
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(FieldElement::one(field_));
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

Poly Poly::slice(long lo, long hi) const {
  std::vector<FieldElement> r;
  for (long j = 0; j < hi && j < static_cast<long>(coeffs_.size()); ++j)
    r.push_back(j >= lo ? coeffs_[j] : FieldElement::zero(field_));
  return Poly(field_, std::move(r));
}

bool Poly::operator==(const Poly& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (long j = degree(); j >= 0; --j) {
    const auto& c = coeffs_[j];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string tpart = j == 0 ? "" : (j == 1 ? "t" : "t^" + std::to_string(j));
    if (tpart.empty()) {
      out += "(" + c.to_string() + ")";
    } else if (c == FieldElement::one(field_)) {
      out += tpart;
    } else {
      out += "(" + c.to_string() + ")*" + tpart;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) num_ = Poly(den_.field());
  if (!(num_.field() == den_.field())) throw Error(ErrorKind::FieldMismatch, "numerator and denominator fields differ");
}

RatFun::RatFun(Poly num)
    : num_(std::move(num)), den_(Poly::constant(FieldElement::one(num_.field()))) {}

RatFun RatFun::operator+(const RatFun& o) const {
  if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }

RatFun RatFun::inverse() const {
  if (num_.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of the zero rational function");
  return RatFun(den_, num_);
}

RatFun RatFun::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  return RatFun(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
}

bool RatFun::operator==(const RatFun& o) const { return num_ * o.den_ == o.num_ * den_; }

std::string RatFun::to_string() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

struct RatFunAlgebra {
  FieldDescriptor field;

  RatFun number(const Rational& q) { return RatFun::constant(FieldElement::from_rational(field, q)); }
  RatFun variable(const std::string& name) {
    if (name == "t") return RatFun::variable(field);
    if (name == "z" && field.flavor == FieldFlavor::GenLaurent)
      return RatFun::constant(FieldElement::uniformizer(field));
    if (name == "u") return RatFun::constant(FieldElement::u(field));
    throw Error(ErrorKind::Parse, "unknown variable '" + name + "'");
  }
  RatFun add(const RatFun& a, const RatFun& b) { return a + b; }
  RatFun sub(const RatFun& a, const RatFun& b) { return a - b; }
  RatFun mul(const RatFun& a, const RatFun& b) { return a * b; }
  RatFun div(const RatFun& a, const RatFun& b) { return a * b.inverse(); }
  RatFun neg(const RatFun& a) { return -a; }
  RatFun pow(const RatFun& a, const Rational& e) {
    if (is_integer(e)) return a.pow(e.get_num().get_si());
    // Fractional powers only make sense for constant z-monomials.
    if (a.num().degree() == 0 && a.den().degree() == 0) {
      FieldElement c = a.num().coeff(0) * a.den().coeff(0).inverse();
      if (c.is_monomial() && field.flavor == FieldFlavor::GenLaurent && c.terms().front().coeff.is_one())
        return RatFun::constant(FieldElement::monomial(field, c.terms().front().coeff, c.terms().front().exponent * e));
    }
    throw Error(ErrorKind::Parse, "fractional powers apply to z-monomials only");
  }
};

}  // namespace

RatFun RatFun::parse(const FieldDescriptor& field, std::string_view text) {
  auto tree = expr::parse(text);
  RatFunAlgebra alg{field};
  return expr::evaluate(*tree, alg);
}

RatFun ratfun_combine(const RatFun& f, const RatFun& g, RatFunOp op) {
  switch (op) {
    case RatFunOp::Add: return f + g;
    case RatFunOp::Mul: return f * g;
    case RatFunOp::Invert: return f.inverse();
    case RatFunOp::Neg: return -f;
  }
  return f;
}

Poly recenter(const Poly& p, const FieldElement& shift) {
  if (p.is_zero()) return p;
  // Horner: Q = (...(a_d (t+c) + a_{d-1})(t+c) + ...) + a_0.
  Poly lin(p.field(), {shift, FieldElement::one(p.field())});
  Poly q = Poly::constant(p.leading());
  for (long j = p.degree() - 1; j >= 0; --j) q = q * lin + Poly::constant(p.coeffs()[j]);
  return q;
}

NewtonPolygon newton_polygon(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Newton polygon of the zero polynomial");
  std::vector<std::pair<long, LogValue>> pts;
  for (long i = 0; i <= p.degree(); ++i)
    if (!p.coeffs()[i].is_zero()) pts.emplace_back(i, p.coeffs()[i].valuation());

  // Lower hull, left to right; collinear interior points are dropped.
  std::vector<std::pair<long, LogValue>> hull;
  for (const auto& c : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      LogValue lhs = (b.second - a.second).scaled(c.first - a.first);
      LogValue rhs = (c.second - a.second).scaled(b.first - a.first);
      if (lhs >= rhs) hull.pop_back();
      else break;
    }
    hull.push_back(c);
  }

  NewtonPolygon np;
  np.vertices = hull;
  for (std::size_t k = hull.size(); k-- > 1;) {
    const auto& a = hull[k - 1];
    const auto& b = hull[k];
    long width = b.first - a.first;
    LogValue root_val = (a.second - b.second).scaled(Rational(1, width));
    np.slopes.push_back({root_val, width});
  }
  return np;
}

}  // namespace ultra
