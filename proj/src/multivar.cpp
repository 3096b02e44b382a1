#include "ultra/multivar.hpp"

#include <algorithm>

#include "ultra/error.hpp"

namespace ultra {

namespace {

Monomial trimmed(Monomial m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

Monomial monomial_inverse(const Monomial& m) {
  Monomial r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = -m[i];
  return r;
}

}  // namespace

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trimmed(std::move(r));
}

LaurentPoly::LaurentPoly(FieldDescriptor field, std::map<Monomial, FieldElement> terms) : field_(field) {
  for (auto& [m, c] : terms) {
    if (!(c.field() == field_)) throw Error(ErrorKind::FieldMismatch, "coefficient field differs");
    if (c.is_zero()) continue;
    auto [it, inserted] = terms_.emplace(trimmed(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
}

LaurentPoly LaurentPoly::constant(const FieldElement& c) { return LaurentPoly(c.field(), {{Monomial{}, c}}); }

LaurentPoly LaurentPoly::variable(const FieldDescriptor& field, long k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "variables are T_1, T_2, ...");
  Monomial m(static_cast<std::size_t>(k), 0);
  m.back() = 1;
  return LaurentPoly(field, {{m, FieldElement::one(field)}});
}

LaurentPoly LaurentPoly::term(const FieldElement& c, Monomial m) { return LaurentPoly(c.field(), {{std::move(m), c}}); }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (!(field_ == o.field_)) throw Error(ErrorKind::FieldMismatch, "Laurent polynomials over different fields");
  auto r = terms_;
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = r.emplace(m, c);
    if (!inserted) it->second += c;
  }
  return LaurentPoly(field_, std::move(r));
}

LaurentPoly LaurentPoly::operator-() const {
  auto r = terms_;
  for (auto& [m, c] : r) c = -c;
  return LaurentPoly(field_, std::move(r));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (!(field_ == o.field_)) throw Error(ErrorKind::FieldMismatch, "Laurent polynomials over different fields");
  std::map<Monomial, FieldElement> r;
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_) {
      auto [it, inserted] = r.emplace(monomial_product(a, b), x * y);
      if (!inserted) it->second += x * y;
    }
  return LaurentPoly(field_, std::move(r));
}

LogValue LaurentPoly::alpha() const {
  LogValue v = LogValue::infinity();
  for (const auto& [m, c] : terms_) v = min(v, c.valuation());
  return v;
}

long LaurentPoly::depth() const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.size()));
  return d;
}

LaurentPoly LaurentPoly::project(long k) const {
  std::map<Monomial, FieldElement> r;
  for (const auto& [m, c] : terms_)
    if (static_cast<long>(m.size()) <= k) r.emplace(m, c);
  return LaurentPoly(field_, std::move(r));
}

LaurentPoly LaurentPoly::truncated(const LogValue& bound) const {
  std::map<Monomial, FieldElement> r;
  for (const auto& [m, c] : terms_)
    if (c.valuation() <= bound) r.emplace(m, c);
  return LaurentPoly(field_, std::move(r));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      out += "*T" + std::to_string(i + 1);
      if (m[i] != 1) out += "^" + (m[i] < 0 ? "(" + std::to_string(m[i]) + ")" : std::to_string(m[i]));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

MultiVarElement::MultiVarElement(LaurentPoly num)
    : num_(std::move(num)), den_(LaurentPoly::constant(FieldElement::one(num_.field()))) {}

MultiVarElement::MultiVarElement(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (!(num_.field() == den_.field())) throw Error(ErrorKind::FieldMismatch, "numerator and denominator fields differ");
  if (num_.is_zero()) num_ = LaurentPoly(den_.field());
}

LaurentPoly MultiVarElement::as_laurent() const {
  if (!is_laurent()) throw Error(ErrorKind::UnsupportedDenominator, "denominator is not a single term");
  const auto& [m, c] = *den_.terms().begin();
  return num_ * LaurentPoly::term(c.inverse(), monomial_inverse(m));
}

MultiVarElement MultiVarElement::operator+(const MultiVarElement& o) const {
  if (den_ == o.den_) return MultiVarElement(num_ + o.num_, den_);
  return MultiVarElement(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

MultiVarElement MultiVarElement::operator*(const MultiVarElement& o) const {
  return MultiVarElement(num_ * o.num_, den_ * o.den_);
}

bool MultiVarElement::operator==(const MultiVarElement& o) const { return num_ * o.den_ == o.num_ * den_; }

std::string MultiVarElement::to_string() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

MultiVarNormData multivar_norm_data(const MultiVarElement& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroElement, "norm data of 0");
  // Cancel the largest monomial dividing every term of num and den.
  Monomial common;
  bool first = true;
  for (const auto* p : {&x.num(), &x.den()})
    for (const auto& [m, c] : p->terms()) {
      if (first) {
        common = m;
        first = false;
        continue;
      }
      if (common.size() < m.size()) common.resize(m.size(), 0);
      for (std::size_t i = 0; i < common.size(); ++i) common[i] = std::min(common[i], i < m.size() ? m[i] : 0L);
    }
  LaurentPoly shift = LaurentPoly::term(FieldElement::one(x.field()), monomial_inverse(trimmed(common)));
  long depth = std::max((x.num() * shift).depth(), (x.den() * shift).depth());
  return {x.num().alpha() - x.den().alpha(), depth};
}

Projection project(long k, const MultiVarElement& x, const LogValue& prec) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "projection index must be nonnegative");
  if (x.is_laurent()) return {x.as_laurent().project(k), LogValue::infinity()};

  const auto& den = x.den();
  LogValue a = den.alpha();
  const std::pair<const Monomial, FieldElement>* dominant = nullptr;
  for (const auto& t : den.terms()) {
    if (t.second.valuation() != a) continue;
    if (dominant) throw Error(ErrorKind::UnsupportedDenominator, "denominator has no unique dominant monomial");
    dominant = &t;
  }
  // den = D (1 + r) with alpha(r) > 0; x = num D^-1 sum (-r)^i.
  LaurentPoly d_inv = LaurentPoly::term(dominant->second.inverse(), monomial_inverse(dominant->first));
  LaurentPoly one = LaurentPoly::constant(FieldElement::one(x.field()));
  LaurentPoly minus_r = one - den * d_inv;
  LaurentPoly head = x.num() * d_inv;
  LaurentPoly sum = head.truncated(prec);
  LaurentPoly power = sum;
  while (!power.is_zero()) {
    power = (power * minus_r).truncated(prec);
    sum = sum + power;
  }
  return {sum.project(k), prec};
}

LogValue multivar_norm_upper(const MultiVarElement& x, const std::vector<MultiVarElement>& decomposition) {
  MultiVarElement total(LaurentPoly(x.field()));
  for (const auto& xi : decomposition) total = total + xi;
  if (!(total == x)) throw Error(ErrorKind::DecompositionMismatch, "decomposition does not sum to x");
  LogValue best = LogValue::infinity();
  for (const auto& xi : decomposition) {
    if (xi.is_zero()) continue;
    auto nd = multivar_norm_data(xi);
    best = min(best, nd.alpha - LogValue(nd.depth));
  }
  return best;
}

}  // namespace ultra
