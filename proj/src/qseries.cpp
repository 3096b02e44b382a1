#include "ultra/qseries.hpp"

#include <bit>

#include "ultra/error.hpp"

namespace ultra {

QSeriesElement::QSeriesElement(std::map<long, Rational> terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

QSeriesElement QSeriesElement::operator+(const QSeriesElement& o) const {
  auto r = terms_;
  for (const auto& [n, a] : o.terms_) r[n] += a;
  return QSeriesElement(std::move(r));
}

QSeriesElement QSeriesElement::operator*(const QSeriesElement& o) const {
  std::map<long, Rational> r;
  for (const auto& [n, a] : terms_)
    for (const auto& [m, b] : o.terms_) r[n + m] += a * b;
  return QSeriesElement(std::move(r));
}

QSeriesElement QSeriesElement::shifted(long k) const {
  std::map<long, Rational> r;
  for (const auto& [n, a] : terms_) r.emplace(n + k, a);
  return QSeriesElement(std::move(r));
}

std::string QSeriesElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [n, a] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + ultra::to_string(a) + ")";
    if (n != 0) out += "*T^" + (n < 0 ? "(" + std::to_string(n) + ")" : std::to_string(n));
  }
  return out;
}

namespace {

Integer factorial_power(long j) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j));
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(j));
  return out;
}

}  // namespace

bool in_unit_lattice(const QSeriesElement& x) {
  for (const auto& [j, a] : x.terms()) {
    if (j < 0) return false;
    Rational scaled = a * Rational(factorial_power(j));
    scaled.canonicalize();
    if (!is_integer(scaled)) return false;
  }
  return true;
}

long qseries_norm(const QSeriesElement& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroElement, "norm of 0 is not an integer exponent");
  // T^(-n) x shifts degree j to j - n; lowering n only loosens every constraint.
  for (long n = x.min_degree();; --n)
    if (in_unit_lattice(x.shifted(-n))) return n;
}

bool qseries_spectral_ball(const QSeriesElement& x) {
  return x.is_zero() || x.min_degree() >= 0;
}

long binary_digit_sum(unsigned long j) { return std::popcount(j); }

long factorial_power_valuation(long j) { return j * (j - binary_digit_sum(static_cast<unsigned long>(j))); }

std::vector<WitnessRow> qseries_unbounded_witness(long kmax) {
  if (kmax < 1) throw Error(ErrorKind::InvalidArgument, "kmax must be at least 1");
  std::vector<WitnessRow> rows;
  rows.reserve(static_cast<std::size_t>(kmax));
  long j = 0;
  for (long k = 1; k <= kmax; ++k) {
    while (factorial_power_valuation(j) < k) ++j;
    rows.push_back({k, j});
  }
  return rows;
}

}  // namespace ultra
