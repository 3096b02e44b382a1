#pragma once

#include <map>
#include <string>
#include <vector>

#include "ultra/rational.hpp"

namespace ultra {

/// Finite Laurent polynomial sum a_n T^n over Q, no zero coefficients stored.
class QSeriesElement {
 public:
  QSeriesElement() = default;
  explicit QSeriesElement(std::map<long, Rational> terms);

  static QSeriesElement constant(const Rational& a) { return QSeriesElement({{0, a}}); }
  static QSeriesElement monomial(const Rational& a, long n) { return QSeriesElement({{n, a}}); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<long, Rational>& terms() const { return terms_; }
  long min_degree() const { return terms_.begin()->first; }

  QSeriesElement operator+(const QSeriesElement& o) const;
  QSeriesElement operator*(const QSeriesElement& o) const;
  QSeriesElement shifted(long k) const;  // T^k * x
  bool operator==(const QSeriesElement&) const = default;

  std::string to_string() const;

 private:
  std::map<long, Rational> terms_;
};

/// Membership in A_0: no negative degrees and a_j * (j!)^j integral for all j.
bool in_unit_lattice(const QSeriesElement& x);

/// The largest n with T^(-n) x in A_0; the norm of x is 2^(-n). Throws ZeroElement.
long qseries_norm(const QSeriesElement& x);

/// True iff x has no negative-degree terms (unit ball of the spectral seminorm).
bool qseries_spectral_ball(const QSeriesElement& x);

/// Binary digit sum.
long binary_digit_sum(unsigned long j);

/// 2-adic valuation of (j!)^j, i.e. j*(j - s_2(j)).
long factorial_power_valuation(long j);

struct WitnessRow {
  long k;
  long j;  // |2^(-k)| = 2^j
};

/// j(k) = min{ j >= 0 : j (j - s_2(j)) >= k } for k = 1..kmax.
std::vector<WitnessRow> qseries_unbounded_witness(long kmax);

}  // namespace ultra
