#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ultra/fields.hpp"
#include "ultra/gauss.hpp"
#include "ultra/logval.hpp"
#include "ultra/ratfun.hpp"

namespace ultra {

// Log scale throughout: a radius rho is stored as s = -log2(rho), so the
// increasing radii rho_1 < rho_2 < ... -> delta become s_1 > s_2 > ... -> s_lo.

enum class ForgeMode { Theorem, Example };

std::string to_string(ForgeMode mode);
ForgeMode parse_forge_mode(std::string_view text);

struct ScheduleLevel {
  LogValue s;       // s_n
  long m = 1;       // m_n
  LogValue window;  // w_n; zero in Example mode

  LogValue s_plus() const { return s - window; }   // log-radius of rho_n^+
  LogValue s_minus() const { return s + window; }  // log-radius of rho_n^-
  bool operator==(const ScheduleLevel&) const = default;
};

struct ForgeSchedule {
  FieldDescriptor field;
  RadiusInterval interval{0, 0};
  LogValue c_log;
  ForgeMode mode = ForgeMode::Theorem;
  /// Small-instance flag: gap conditions are not enforced.
  bool relaxed = false;
  std::vector<ScheduleLevel> levels;  // levels[n - 1]

  long depth() const { return static_cast<long>(levels.size()); }
  const ScheduleLevel& level(long n) const { return levels.at(static_cast<std::size_t>(n - 1)); }
};

/// Builds a schedule with constant m_n (the smallest feasible one, or m_hint).
/// s_n lie on a grid p^-r Z fine enough that the windows w_n = p^-r satisfy
/// w_n <= 1/(4 m_n). With `relaxed`, levels are spread evenly instead.
/// Throws InfeasibleSchedule, ValueGroupTooSparse, InvalidArgument.
ForgeSchedule make_schedule(const FieldDescriptor& field, const RadiusInterval& interval, const LogValue& c_log,
                            ForgeMode mode, long depth, std::optional<long> m_hint = std::nullopt,
                            bool relaxed = false);

/// Independent constraint checker; returns one message per violated invariant.
std::vector<std::string> schedule_violations(const ForgeSchedule& sch);

struct CenterSet {
  std::vector<std::vector<FieldElement>> centers;  // centers[n - 1][i], 2 m_n - 1 each
};

/// Theorem mode: lambda_{n,i} = z^(e_i), e_i = s(rho_n^+) + w_n p^(i - d - 1).
/// Example mode: lambda_{n,i} = u^i z^(s_n), or i z^(s_n) over F_p.
/// Throws ResidueFieldTooSmall.
CenterSet choose_centers(const ForgeSchedule& sch);

enum class Tag { Exact, Bound };

/// A valuation that is either exact or a certified lower bound.
struct LazyValue {
  LogValue v;
  Tag tag = Tag::Exact;
  DominanceCertificate cert;

  std::string cert_string() const;
};

struct FactorValues {
  LogValue p;  // v_s(P_n), always exact
  LazyValue n_lo;
  LazyValue n_hi;
  LazyValue x;           // v_s(x_n)
  LazyValue one_minus_x; // v_s(1 - x_n)
};

/// Factored form of x_n and y_n: only center valuations and the valuations
/// of the coefficients P_{n,j} are stored; nothing is expanded.
class ForgeFactors {
 public:
  ForgeFactors(const ForgeSchedule& sch, const CenterSet& centers);

  long depth() const { return static_cast<long>(levels_.size()); }
  long m(long n) const { return level(n).m; }
  long degree(long n) const { return 2 * m(n) - 1; }
  const std::vector<LogValue>& center_valuations(long n) const { return level(n).center_vals; }
  /// v(P_{n,j}) (exact or lower bound), j = 0..2m_n - 1.
  const LazyValue& coefficient(long n, long j) const { return level(n).coeffs.at(static_cast<std::size_t>(j)); }
  /// Exact coefficient P_{n,j} when all centers share one valuation (Example mode).
  std::optional<FieldElement> exact_coefficient(long n, long j) const;

  /// Uncentered Gauss point of log-radius s.
  FactorValues eval_factor(long n, const LogValue& s) const;
  LazyValue eval_y(long n, const LogValue& s) const;
  /// v_s(y_n - y_{n-1}) via y_n - y_{n-1} = y_{n-1} (x_n - 1), with y_0 = 1.
  LazyValue eval_gap(long n, const LogValue& s) const;

 private:
  struct Level {
    long m;
    std::vector<LogValue> center_vals;
    std::vector<LazyValue> coeffs;
    std::vector<std::optional<FieldElement>> exact;
  };
  const Level& level(long n) const { return levels_.at(static_cast<std::size_t>(n - 1)); }
  std::vector<Level> levels_;
};

/// Fully expanded x_n, 1 - x_n and y_n over the coefficient field; the
/// reference oracle for small instances.
struct ExpandedFactors {
  std::vector<RatFun> x;
  std::vector<RatFun> one_minus_x;
  std::vector<RatFun> y;
};
ExpandedFactors expand_factors(const ForgeSchedule& sch, const CenterSet& centers);

enum class Relation { GE, EQ, LE };
std::string to_string(Relation rel);
Relation parse_relation(std::string_view text);
bool holds(const LogValue& lhs, Relation rel, const LogValue& rhs);

struct CertRecord {
  long n = 0;
  std::string zone;
  std::string claim;
  LogValue s;
  LogValue lhs;
  LogValue rhs;
  Relation rel = Relation::GE;
  std::string cert;
  bool pass = false;

  bool operator==(const CertRecord&) const = default;
};

struct ForgeCertificate {
  std::vector<CertRecord> records;

  bool passed() const;
  const CertRecord* first_failure() const;
};

/// Checks every bullet of the relevant proof at every breakpoint of every zone.
/// Parallel mode distributes levels over OpenMP threads; records are merged
/// in index order, so both modes produce identical certificates.
ForgeCertificate verify_certificate(const ForgeSchedule& sch, const CenterSet& centers,
                                    Execution exec = Execution::Parallel);

/// Throws CertificateFailure describing the first failing record.
void verify_or_throw(const ForgeCertificate& cert);

struct LimitTable {
  std::vector<LogValue> samples;
  std::vector<std::vector<LazyValue>> v_y;  // [sample][n - 1]
  std::vector<long> predicted_index;        // first n whose window lies above the sample
  std::vector<long> observed_index;         // first n from which the row is exactly constant
  std::vector<bool> stabilized;             // rows equal and Exact from the predicted index on
  std::vector<LazyValue> delta_row;         // v(y_n) at s_lo
  bool delta_ok = false;                    // v(y_n) >= n - 1 there, strictly increasing
};

LimitTable limit_table(const ForgeSchedule& sch, const CenterSet& centers, const std::vector<LogValue>& samples);

/// Sample log-radii strictly between consecutive windows (k = 1..count).
std::vector<LogValue> interior_samples(const ForgeSchedule& sch, long count);

}  // namespace ultra
