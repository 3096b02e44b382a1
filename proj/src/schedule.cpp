#include <sstream>

#include "ultra/error.hpp"
#include "ultra/forge.hpp"

namespace ultra {

std::string to_string(ForgeMode mode) { return mode == ForgeMode::Theorem ? "theorem" : "example"; }

ForgeMode parse_forge_mode(std::string_view text) {
  if (text == "theorem") return ForgeMode::Theorem;
  if (text == "example") return ForgeMode::Example;
  throw Error(ErrorKind::Parse, "mode must be 'theorem' or 'example'");
}

namespace {

constexpr long kMaxM = 4096;

Rational ceil_to_grid(const Rational& q, const Rational& h) {
  Rational k(ultra::ceil(Rational(q / h)));
  return k * h;
}

/// Largest p^-r (r >= 0) not exceeding bound.
Rational grid_step(std::uint32_t p, const Rational& bound) {
  Rational h(1);
  while (h > bound) h /= p;
  return h;
}

std::optional<std::vector<ScheduleLevel>> try_build(ForgeMode mode, std::uint32_t p, const Rational& lo,
                                                    const Rational& hi, long depth, long m) {
  Rational h = grid_step(p, make_rational(1, 4 * m));
  Rational w = mode == ForgeMode::Theorem ? h : Rational(0);
  std::vector<Rational> s(static_cast<std::size_t>(depth + 1));
  s[static_cast<std::size_t>(depth)] = lo;  // virtual s_{N+1}
  for (long k = depth; k >= 1; --k) {
    long need = k < depth ? k + 1 : k;
    s[static_cast<std::size_t>(k - 1)] = ceil_to_grid(s[static_cast<std::size_t>(k)] + make_rational(need, m), h);
  }
  if (s[0] + w > hi) return std::nullopt;
  std::vector<ScheduleLevel> levels;
  for (long k = 0; k < depth; ++k) levels.push_back({LogValue(s[static_cast<std::size_t>(k)]), m, LogValue(w)});
  return levels;
}

std::vector<ScheduleLevel> build_relaxed(ForgeMode mode, std::uint32_t p, const Rational& lo, const Rational& hi,
                                         long depth, long m) {
  Rational len = hi - lo;
  Rational h = grid_step(p, std::min(make_rational(1, 4 * m), Rational(len / (4 * (depth + 1)))));
  Rational w = mode == ForgeMode::Theorem ? h : Rational(0);
  std::vector<ScheduleLevel> levels;
  for (long n = 1; n <= depth; ++n) {
    Rational target = lo + len * (depth + 1 - n) / (depth + 1);
    levels.push_back({LogValue(ceil_to_grid(target, h)), m, LogValue(w)});
  }
  return levels;
}

}  // namespace

ForgeSchedule make_schedule(const FieldDescriptor& field, const RadiusInterval& interval, const LogValue& c_log,
                            ForgeMode mode, long depth, std::optional<long> m_hint, bool relaxed) {
  if (depth < 1) throw Error(ErrorKind::InvalidArgument, "depth must be at least 1");
  if (!(LogValue(0) < c_log) || c_log.is_infinite()) throw Error(ErrorKind::InvalidArgument, "c_log must be positive");
  if (m_hint && *m_hint < 1) throw Error(ErrorKind::InvalidArgument, "m must be positive");
  if (interval.is_point()) throw Error(ErrorKind::InfeasibleSchedule, "interval has zero length");
  if (!interval.s_lo.is_rational() || !interval.s_hi.is_rational())
    throw Error(ErrorKind::InvalidArgument, "schedule endpoints must be rational");
  if (!field.dense()) throw Error(ErrorKind::ValueGroupTooSparse, "the value group of " + field.to_string() + " is discrete");

  ForgeSchedule sch{field, interval, c_log, mode, relaxed, {}};
  const Rational& lo = interval.s_lo.rational_part();
  const Rational& hi = interval.s_hi.rational_part();
  if (relaxed) {
    sch.levels = build_relaxed(mode, field.p, lo, hi, depth, m_hint.value_or(1));
  } else if (m_hint) {
    auto levels = try_build(mode, field.p, lo, hi, depth, *m_hint);
    if (!levels) throw Error(ErrorKind::InfeasibleSchedule, "m = " + std::to_string(*m_hint) + " does not fit the interval");
    sch.levels = std::move(*levels);
  } else {
    for (long m = 1; m <= kMaxM && sch.levels.empty(); ++m)
      if (auto levels = try_build(mode, field.p, lo, hi, depth, m)) sch.levels = std::move(*levels);
    if (sch.levels.empty()) throw Error(ErrorKind::InfeasibleSchedule, "no m up to 4096 fits the requested depth");
  }
  auto bad = schedule_violations(sch);
  if (!bad.empty()) throw Error(ErrorKind::InfeasibleSchedule, bad.front());
  return sch;
}

std::vector<std::string> schedule_violations(const ForgeSchedule& sch) {
  std::vector<std::string> out;
  auto fail = [&](long n, const std::string& what) { out.push_back("n=" + std::to_string(n) + ": " + what); };
  const long N = sch.depth();
  if (N < 1) {
    out.push_back("empty schedule");
    return out;
  }
  const bool theorem = sch.mode == ForgeMode::Theorem;
  const auto& I = sch.interval;
  auto group = sch.field.value_group();
  for (long n = 1; n <= N; ++n) {
    const auto& L = sch.level(n);
    if (L.m < 1) fail(n, "m_n must be positive");
    if (!group.contains(L.s)) fail(n, "s_n outside the value group");
    if (theorem) {
      if (!(LogValue(0) < L.window)) fail(n, "window must be positive");
      if (LogValue(make_rational(1, L.m)) < L.window) fail(n, "pinch: w_n > 1/m_n");
      if (!(I.s_lo < L.s_plus()) || I.s_hi < L.s_minus()) fail(n, "window leaves the interval");
    } else {
      if (!L.window.is_zero()) fail(n, "example schedules carry no window");
      if (!(I.s_lo < L.s) || I.s_hi < L.s) fail(n, "s_n outside (s_lo, s_hi]");
    }
    if (n < N) {
      const auto& next = sch.level(n + 1);
      if (!(next.s < L.s)) fail(n, "s_n not strictly decreasing");
      if (!(next.s_minus() < L.s_plus())) fail(n, "windows overlap");
      if (theorem && next.m < L.m) fail(n, "m_n not nondecreasing");
    }
  }
  if (sch.relaxed) return out;
  // Gap conditions, with the virtual s_{N+1} = s_lo for the last level.
  auto m_at = [&](long k) { return sch.level(std::max(1L, std::min(k, N))).m; };
  for (long n = 1; n <= N; ++n) {
    long mm = theorem ? m_at(n - 1) : m_at(n);
    LogValue need(make_rational(n, mm));
    LogValue below = n < N ? sch.level(n + 1).s : I.s_lo;
    if (n > 1 && sch.level(n - 1).s - sch.level(n).s < need) fail(n, "gap s_{n-1} - s_n below n/m");
    if ((n > 1 || n == N) && sch.level(n).s - below < need) fail(n, "gap s_n - s_{n+1} below n/m");
  }
  return out;
}

CenterSet choose_centers(const ForgeSchedule& sch) {
  CenterSet cs;
  const auto& F = sch.field;
  for (long n = 1; n <= sch.depth(); ++n) {
    const auto& L = sch.level(n);
    const long d = 2 * L.m - 1;
    std::vector<FieldElement> row;
    row.reserve(static_cast<std::size_t>(d));
    if (sch.mode == ForgeMode::Theorem) {
      // Distinct valuations strictly inside (s^+, s^+ + w]; their offsets are
      // distinct powers of p, so no two subsets of centers share a valuation sum.
      for (long i = 1; i <= d; ++i) {
        LogValue e = L.s_plus() + L.window.scaled(rational_pow(F.p, i - d - 1));
        row.push_back(monomial_with_valuation(F, e));
      }
    } else if (F.residue_field_infinite()) {
      for (long i = 1; i <= d; ++i)
        row.push_back(monomial_with_valuation(F, L.s, FpRatio::u_power(F.p, static_cast<std::size_t>(i))));
    } else {
      if (d > static_cast<long>(F.p) - 1)
        throw Error(ErrorKind::ResidueFieldTooSmall, std::to_string(d) + " distinct nonzero residues needed in F_" +
                                                         std::to_string(F.p));
      for (long i = 1; i <= d; ++i) row.push_back(monomial_with_valuation(F, L.s, FpRatio::constant(F.p, i)));
    }
    cs.centers.push_back(std::move(row));
  }
  return cs;
}

}  // namespace ultra
