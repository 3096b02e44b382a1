#include "ultra/rational.hpp"

#include <cctype>
#include <string>

#include "ultra/error.hpp"

namespace ultra {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SubFromFinite: return "SubFromFinite";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonMonomialInverse: return "NonMonomialInverse";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::ValueNotInGroup: return "ValueNotInGroup";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::ZeroDivisorAtPrecision: return "ZeroDivisorAtPrecision";
    case ErrorKind::UnsupportedDenominator: return "UnsupportedDenominator";
    case ErrorKind::DecompositionMismatch: return "DecompositionMismatch";
    case ErrorKind::InfeasibleSchedule: return "InfeasibleSchedule";
    case ErrorKind::ValueGroupTooSparse: return "ValueGroupTooSparse";
    case ErrorKind::ResidueFieldTooSmall: return "ResidueFieldTooSmall";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::PreconditionFlat: return "PreconditionFlat";
    case ErrorKind::UnsupportedModel: return "UnsupportedModel";
    case ErrorKind::NotBoundedBelow: return "NotBoundedBelow";
    case ErrorKind::ZeroTerm: return "ZeroTerm";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty rational");
  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorKind::Parse, "malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

long padic_valuation(const Integer& n, std::uint32_t p) {
  if (n == 0) throw Error(ErrorKind::ZeroElement, "valuation of zero integer");
  Integer rest;
  Integer prime(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

long padic_valuation(const Rational& q, std::uint32_t p) {
  if (q == 0) throw Error(ErrorKind::ZeroElement, "valuation of zero rational");
  return padic_valuation(Integer(q.get_num()), p) - padic_valuation(Integer(q.get_den()), p);
}

bool denominator_is_power_of(const Rational& q, std::uint32_t p) {
  Integer rest;
  Integer prime(p);
  Integer den(q.get_den());
  mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t());
  return rest == 1;
}

Rational rational_pow(std::uint32_t p, long k) {
  Integer base;
  mpz_ui_pow_ui(base.get_mpz_t(), p, static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0) return Rational(base);
  Rational r(Integer(1), base);
  r.canonicalize();
  return r;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace ultra
