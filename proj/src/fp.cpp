#include "ultra/fp.hpp"

#include <utility>

#include "ultra/error.hpp"

namespace ultra {

namespace {

std::uint32_t reduce(std::int64_t c, std::uint32_t p) {
  std::int64_t r = c % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

void require_same(std::uint32_t p, std::uint32_t q) {
  if (p != q && p != 0 && q != 0)
    throw Error(ErrorKind::FieldMismatch, "F_p elements with different primes");
}

}  // namespace

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in F_p");
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t, p);
}

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

FpPoly FpPoly::constant(std::uint32_t p, std::int64_t c) { return FpPoly(p, {reduce(c, p)}); }

FpPoly FpPoly::monomial(std::uint32_t p, std::uint32_t c, std::size_t degree) {
  std::vector<std::uint32_t> v(degree + 1, 0);
  v[degree] = c % p;
  return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  require_same(p_, o.p_);
  std::uint32_t p = p_ ? p_ : o.p_;
  std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (coeff(i) + o.coeff(i)) % p;
  return FpPoly(p, std::move(r));
}

FpPoly FpPoly::operator-() const {
  std::vector<std::uint32_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] ? p_ - c_[i] : 0;
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const { return *this + (-o); }

FpPoly FpPoly::operator*(const FpPoly& o) const {
  require_same(p_, o.p_);
  std::uint32_t p = p_ ? p_ : o.p_;
  if (is_zero() || o.is_zero()) return FpPoly(p);
  std::vector<std::uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(c_[i]) * o.c_[j]) % p;
  std::vector<std::uint32_t> r(acc.begin(), acc.end());
  return FpPoly(p, std::move(r));
}

FpPoly FpPoly::scaled(std::uint32_t c) const {
  std::vector<std::uint32_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = mulmod(c_[i], c, p_);
  return FpPoly(p_, std::move(r));
}

void FpPoly::divmod(const FpPoly& divisor, FpPoly& quotient, FpPoly& remainder) const {
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::uint32_t p = p_ ? p_ : divisor.p_;
  std::vector<std::uint32_t> rem = c_;
  long dd = divisor.degree();
  std::uint32_t inv_lead = fp_inverse(divisor.leading(), p);
  std::vector<std::uint32_t> quo(rem.size() >= divisor.c_.size() ? rem.size() - divisor.c_.size() + 1 : 0, 0);
  for (long k = static_cast<long>(rem.size()) - 1; k >= dd; --k) {
    std::uint32_t coef = mulmod(rem[k], inv_lead, p);
    if (coef == 0) continue;
    quo[k - dd] = coef;
    for (long i = 0; i <= dd; ++i) {
      std::uint32_t sub = mulmod(coef, divisor.c_[i], p);
      rem[k - dd + i] = (rem[k - dd + i] + p - sub) % p;
    }
  }
  quotient = FpPoly(p, std::move(quo));
  remainder = FpPoly(p, std::move(rem));
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(fp_inverse(leading(), p_));
}

std::string FpPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (long k = degree(); k >= 0; --k) {
    std::uint32_t c = c_[k];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "u";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpRatio::FpRatio(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

FpRatio FpRatio::constant(std::uint32_t p, std::int64_t c) {
  return FpRatio(FpPoly::constant(p, c), FpPoly::constant(p, 1));
}

FpRatio FpRatio::u_power(std::uint32_t p, std::size_t k) {
  return FpRatio(FpPoly::monomial(p, 1, k), FpPoly::constant(p, 1));
}

void FpRatio::normalize() {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator in F_p(u)");
  std::uint32_t p = prime();
  if (num_.is_zero()) {
    num_ = FpPoly(p);
    den_ = FpPoly::constant(p, 1);
    return;
  }
  if (den_.degree() > 0) {
    FpPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      FpPoly q, r;
      num_.divmod(g, q, r);
      num_ = q;
      den_.divmod(g, q, r);
      den_ = q;
    }
  }
  std::uint32_t inv = fp_inverse(den_.leading(), p);
  num_ = num_.scaled(inv);
  den_ = den_.scaled(inv);
}

FpRatio FpRatio::operator+(const FpRatio& o) const {
  if (den_ == o.den_) return FpRatio(num_ + o.num_, den_);
  return FpRatio(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FpRatio FpRatio::operator-() const { return FpRatio(-num_, den_); }

FpRatio FpRatio::operator-(const FpRatio& o) const { return *this + (-o); }

FpRatio FpRatio::operator*(const FpRatio& o) const {
  return FpRatio(num_ * o.num_, den_ * o.den_);
}

FpRatio FpRatio::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in F_p(u)");
  return FpRatio(den_, num_);
}

FpRatio FpRatio::operator/(const FpRatio& o) const { return *this * o.inverse(); }

std::string FpRatio::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  auto wrap = [](const FpPoly& f) {
    std::string s = f.to_string();
    return f.is_constant() || (f.coeffs().size() >= 2 && s.find(' ') == std::string::npos)
               ? s
               : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

std::string FpRatio::to_factor_string() const {
  if (is_constant()) return num_.to_string();
  return "(" + to_string() + ")";
}

}  // namespace ultra
