#include <algorithm>
#include <exception>
#include <set>

#include "ultra/error.hpp"
#include "ultra/forge.hpp"

namespace ultra {

std::string to_string(Relation rel) {
  switch (rel) {
    case Relation::GE: return ">=";
    case Relation::EQ: return "=";
    case Relation::LE: return "<=";
  }
  return "?";
}

Relation parse_relation(std::string_view text) {
  if (text == ">=") return Relation::GE;
  if (text == "=") return Relation::EQ;
  if (text == "<=") return Relation::LE;
  throw Error(ErrorKind::Parse, "unknown relation '" + std::string(text) + "'");
}

bool holds(const LogValue& lhs, Relation rel, const LogValue& rhs) {
  switch (rel) {
    case Relation::GE: return rhs <= lhs;
    case Relation::EQ: return lhs == rhs;
    case Relation::LE: return lhs <= rhs;
  }
  return false;
}

bool ForgeCertificate::passed() const {
  return std::all_of(records.begin(), records.end(), [](const CertRecord& r) { return r.pass; });
}

const CertRecord* ForgeCertificate::first_failure() const {
  for (const auto& r : records)
    if (!r.pass) return &r;
  return nullptr;
}

void verify_or_throw(const ForgeCertificate& cert) {
  if (const auto* r = cert.first_failure())
    throw Error(ErrorKind::CertificateFailure, "n=" + std::to_string(r->n) + " zone=" + r->zone + " claim '" +
                                                   r->claim + "' at s=" + r->s.to_string() + ": " +
                                                   r->lhs.to_string() + " " + to_string(r->rel) + " " +
                                                   r->rhs.to_string() + " fails");
}

namespace {

/// Zone endpoints, center valuations and the midpoints between them: every
/// quantity checked is affine between consecutive points of this set.
std::vector<LogValue> check_points(const ForgeSchedule& sch, const ForgeFactors& ff) {
  const auto& I = sch.interval;
  std::set<LogValue> pts{I.s_lo, I.s_hi};
  auto add = [&](const LogValue& v) {
    if (I.contains(v)) pts.insert(v);
  };
  for (long n = 1; n <= sch.depth(); ++n) {
    const auto& L = sch.level(n);
    add(L.s);
    add(L.s_plus());
    add(L.s_minus());
    for (const auto& v : ff.center_valuations(n)) add(v);
  }
  std::vector<LogValue> sorted(pts.begin(), pts.end());
  std::vector<LogValue> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0) out.push_back((sorted[i - 1] + sorted[i]).scaled(Rational(1, 2)));
    out.push_back(sorted[i]);
  }
  return out;
}

struct Tables {
  std::vector<LogValue> pts;
  std::vector<std::vector<FactorValues>> f;  // [n-1][q]
  std::vector<std::vector<LazyValue>> y;     // [n-1][q]
  std::vector<std::vector<LazyValue>> gap;   // [n-1][q]
};

LazyValue sum(const LazyValue& a, const LazyValue& b) {
  return {a.v + b.v, a.tag == Tag::Exact && b.tag == Tag::Exact ? Tag::Exact : Tag::Bound, {}};
}

void fill_factor_row(const ForgeFactors& ff, Tables& t, long n) {
  auto& row = t.f[static_cast<std::size_t>(n - 1)];
  row.resize(t.pts.size());
  for (std::size_t q = 0; q < t.pts.size(); ++q) row[q] = ff.eval_factor(n, t.pts[q]);
}

void fill_chains(Tables& t, long N) {
  const std::size_t Q = t.pts.size();
  t.y.assign(static_cast<std::size_t>(N), std::vector<LazyValue>(Q));
  t.gap.assign(static_cast<std::size_t>(N), std::vector<LazyValue>(Q));
  for (std::size_t q = 0; q < Q; ++q) {
    LazyValue prev{LogValue(0), Tag::Exact, {}};
    for (long n = 1; n <= N; ++n) {
      const auto& fv = t.f[static_cast<std::size_t>(n - 1)][q];
      t.gap[static_cast<std::size_t>(n - 1)][q] = sum(prev, fv.one_minus_x);
      prev = sum(prev, fv.x);
      t.y[static_cast<std::size_t>(n - 1)][q] = prev;
    }
  }
}

class Recorder {
 public:
  explicit Recorder(long n) : n_(n) {}

  void add(const std::string& zone, const std::string& claim, const LogValue& s, const LogValue& lhs,
           Relation rel, const LogValue& rhs, const std::string& cert) {
    CertRecord r{n_, zone, claim, s, lhs, rhs, rel, cert, false};
    r.pass = holds(lhs, rel, rhs) && (rel != Relation::EQ || cert.rfind("exact", 0) == 0);
    out.push_back(std::move(r));
  }
  void add(const std::string& zone, const std::string& claim, const LogValue& s, const LazyValue& lhs,
           Relation rel, const LogValue& rhs) {
    add(zone, claim, s, lhs.v, rel, rhs, lhs.cert_string());
  }

  std::vector<CertRecord> out;

 private:
  long n_;
};

template <class Fn>
void for_points(const Tables& t, const LogValue& a, const LogValue& b, bool open_a, bool open_b, Fn fn) {
  for (std::size_t q = 0; q < t.pts.size(); ++q) {
    const auto& s = t.pts[q];
    if (s < a || b < s) continue;
    if ((open_a && s == a) || (open_b && s == b)) continue;
    fn(q, s);
  }
}

/// Minimum of a table row over all points, with its location.
std::pair<LazyValue, LogValue> row_min(const Tables& t, const std::vector<LazyValue>& row) {
  std::size_t best = 0;
  for (std::size_t q = 1; q < row.size(); ++q)
    if (row[q].v < row[best].v) best = q;
  return {row[best], t.pts[best]};
}

std::vector<LazyValue> column(const Tables& t, long n, LazyValue FactorValues::*field) {
  std::vector<LazyValue> out;
  for (const auto& fv : t.f[static_cast<std::size_t>(n - 1)]) out.push_back(fv.*field);
  return out;
}

std::vector<CertRecord> theorem_level(const ForgeSchedule& sch, const Tables& t, const ForgeFactors& ff, long n) {
  const auto& I = sch.interval;
  const auto& L = sch.level(n);
  const LogValue c2 = sch.c_log.scaled(2);
  const LogValue c6 = sch.c_log.scaled(6);
  const auto& F = t.f[static_cast<std::size_t>(n - 1)];
  Recorder r(n);

  for_points(t, L.s_minus(), I.s_hi, false, false, [&](std::size_t q, const LogValue& s) {
    r.add("below", "v(x_n) = 0", s, F[q].x, Relation::EQ, LogValue(0));
    r.add("below", "v(1-x_n) >= m_n (s - s_n^-)", s, F[q].one_minus_x, Relation::GE,
          (s - L.s_minus()).scaled(L.m));
  });
  for_points(t, I.s_lo, L.s_plus(), false, false, [&](std::size_t q, const LogValue& s) {
    r.add("above", "v(1-x_n) = 0", s, F[q].one_minus_x, Relation::EQ, LogValue(0));
    r.add("above", "v(x_n) >= m_n (s_n^+ - s)", s, F[q].x, Relation::GE, (L.s_plus() - s).scaled(L.m));
  });

  LogValue floor16 = -(LogValue(4) + c2);
  r.add("middle", "(2m_n - 1)(s_n^+ - s_n^-) - 2 c_log >= -(4 + 2 c_log)", L.s,
        (L.s_plus() - L.s_minus()).scaled(2 * L.m - 1) - c2, Relation::GE, floor16, "exact");
  const auto& vals = ff.center_valuations(n);
  for_points(t, L.s_plus(), L.s_minus(), false, false, [&](std::size_t q, const LogValue& s) {
    LogValue top = L.s_plus().scaled(2 * L.m - 1);
    r.add("middle", "v(N_lo) >= (2m_n - 1) s_n^+", s, F[q].n_lo, Relation::GE, top);
    r.add("middle", "v(N_hi) >= (2m_n - 1) s_n^+", s, F[q].n_hi, Relation::GE, top);
    r.add("middle", "v(x_n) >= -(4 + 2 c_log)", s, F[q].x, Relation::GE, floor16);
    r.add("middle", "v(1-x_n) >= -(4 + 2 c_log)", s, F[q].one_minus_x, Relation::GE, floor16);
    long hits = std::count(vals.begin(), vals.end(), s);
    r.add("middle", "#{i : v(lambda_i) = s} <= 1", s, LogValue(hits), Relation::LE, LogValue(1), "exact");
  });

  r.add("delta", "v(x_n) >= n - 1 at s_lo", I.s_lo, F.front().x, Relation::GE, LogValue(n - 1));

  const auto& G = t.gap[static_cast<std::size_t>(n - 1)];
  if (n > 1) {
    const auto& prev = sch.level(n - 1);
    for_points(t, prev.s, I.s_hi, false, false, [&](std::size_t q, const LogValue& s) {
      r.add("chain_low", "v(y_n - y_{n-1}) >= n - 5 - 2 c_log", s, G[q], Relation::GE, LogValue(n - 5) - c2);
    });
  }
  if (n > 3) {
    const auto& prev = sch.level(n - 1);
    LogValue bound = LogValue(n - 14) - c6;
    for_points(t, I.s_lo, prev.s, false, false, [&](std::size_t q, const LogValue& s) {
      r.add("chain_high", "v(y_n - y_{n-1}) >= n - 14 - 6 c_log", s, G[q], Relation::GE, bound);
    });
    auto [gmin, where] = row_min(t, G);
    r.add("gap", "min_s v(y_n - y_{n-1}) >= n - 14 - 6 c_log", where, gmin, Relation::GE, bound);
  }
  return r.out;
}

std::vector<CertRecord> centered_records(const ForgeSchedule& sch, const CenterSet& centers, const ForgeFactors& ff,
                                         long n) {
  Recorder r(n);
  const auto& L = sch.level(n);
  const auto& row = centers.centers[static_cast<std::size_t>(n - 1)];
  const FieldElement& lam = row.front();
  std::vector<FieldElement> coeffs;
  for (long j = 0; j < L.m; ++j) {
    auto c = ff.exact_coefficient(n, j);
    if (!c) return r.out;
    coeffs.push_back(*c);
  }
  Poly lo = recenter(Poly(sch.field, coeffs), lam);
  std::vector<LogValue> gaps;
  for (std::size_t i = 1; i < row.size(); ++i) gaps.push_back((lam - row[i]).valuation());

  RadiusInterval J(L.s, L.s + LogValue(1));
  std::set<LogValue> bp{J.s_lo, J.s_hi};
  auto lo_profile = poly_profile(lo, J);
  bp.insert(lo_profile.breakpoints().begin(), lo_profile.breakpoints().end());
  for (const auto& g : gaps)
    if (J.contains(g)) bp.insert(g);
  std::vector<LogValue> sorted(bp.begin(), bp.end());
  std::vector<LogValue> pts;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0) pts.push_back((sorted[i - 1] + sorted[i]).scaled(Rational(1, 2)));
    pts.push_back(sorted[i]);
  }
  for (const auto& s : pts) {
    GaussValue num = gauss_valuation(lo, GaussPoint(s));
    LogValue den = s;
    for (const auto& g : gaps) den += min(s, g);
    LazyValue x{num.value - den, Tag::Exact, num.cert};
    r.add("centered", "v(x_n) >= -1 around lambda_{n,1}", s, x, Relation::GE, LogValue(-1));
  }
  return r.out;
}

std::vector<CertRecord> example_level(const ForgeSchedule& sch, const CenterSet& centers, const Tables& t,
                                      const ForgeFactors& ff, long n) {
  const auto& I = sch.interval;
  const auto& L = sch.level(n);
  const auto& F = t.f[static_cast<std::size_t>(n - 1)];
  Recorder r(n);

  for_points(t, L.s, I.s_hi, true, false, [&](std::size_t q, const LogValue& s) {
    r.add("below", "v(x_n) = 0", s, F[q].x, Relation::EQ, LogValue(0));
    r.add("below", "v(1-x_n) >= m_n (s - s_n)", s, F[q].one_minus_x, Relation::GE, (s - L.s).scaled(L.m));
  });
  for_points(t, I.s_lo, L.s, false, true, [&](std::size_t q, const LogValue& s) {
    r.add("above", "v(1-x_n) = 0", s, F[q].one_minus_x, Relation::EQ, LogValue(0));
    r.add("above", "v(x_n) >= m_n (s_n - s)", s, F[q].x, Relation::GE, (L.s - s).scaled(L.m));
  });
  for_points(t, L.s, L.s, false, false, [&](std::size_t q, const LogValue& s) {
    r.add("middle", "v(x_n) >= 0", s, F[q].x, Relation::GE, LogValue(0));
    r.add("middle", "v(1-x_n) >= 0", s, F[q].one_minus_x, Relation::GE, LogValue(0));
  });
  {
    auto [xm, xs] = row_min(t, column(t, n, &FactorValues::x));
    r.add("spect", "min_s v(x_n) >= 0", xs, xm, Relation::GE, LogValue(0));
    auto [om, os] = row_min(t, column(t, n, &FactorValues::one_minus_x));
    r.add("spect", "min_s v(1-x_n) >= 0", os, om, Relation::GE, LogValue(0));
    auto [ym, ys] = row_min(t, t.y[static_cast<std::size_t>(n - 1)]);
    r.add("spect", "min_s v(y_n) >= 0", ys, ym, Relation::GE, LogValue(0));
  }

  r.add("delta", "v(x_n) >= n at s_lo", I.s_lo, F.front().x, Relation::GE, LogValue(n));

  const auto& G = t.gap[static_cast<std::size_t>(n - 1)];
  if (n > 1) {
    const auto& prev = sch.level(n - 1);
    for_points(t, prev.s, I.s_hi, false, false, [&](std::size_t q, const LogValue& s) {
      r.add("chain_low", "v(y_n - y_{n-1}) >= n", s, G[q], Relation::GE, LogValue(n));
    });
  }
  if (n > 3) {
    const auto& prev = sch.level(n - 1);
    for_points(t, I.s_lo, prev.s, false, false, [&](std::size_t q, const LogValue& s) {
      r.add("chain_high", "v(y_n - y_{n-1}) >= n - 2", s, G[q], Relation::GE, LogValue(n - 2));
    });
    auto [gmin, where] = row_min(t, G);
    r.add("gap", "min_s v(y_n - y_{n-1}) >= n - 2", where, gmin, Relation::GE, LogValue(n - 2));
  }
  if (sch.field.residue_field_infinite()) {
    auto extra = centered_records(sch, centers, ff, n);
    r.out.insert(r.out.end(), extra.begin(), extra.end());
  }
  return r.out;
}

/// Geometric tail: y_N - y_{n-1} is a sum of the later gaps, so its valuation
/// is at least their minimum, which must still meet the level-n bound.
void append_tail(const ForgeSchedule& sch, const Tables& t, std::vector<std::vector<CertRecord>>& per_level) {
  const long N = sch.depth();
  const bool theorem = sch.mode == ForgeMode::Theorem;
  std::optional<std::pair<LazyValue, LogValue>> running;
  std::vector<std::optional<std::pair<LazyValue, LogValue>>> tail(static_cast<std::size_t>(N + 1));
  for (long n = N; n >= 4; --n) {
    auto cur = row_min(t, t.gap[static_cast<std::size_t>(n - 1)]);
    if (!running || cur.first.v < running->first.v) running = cur;
    tail[static_cast<std::size_t>(n)] = running;
  }
  for (long n = 4; n <= N; ++n) {
    const auto& [v, where] = *tail[static_cast<std::size_t>(n)];
    LogValue bound = theorem ? LogValue(n - 14) - sch.c_log.scaled(6) : LogValue(n - 2);
    Recorder r(n);
    r.add("tail", theorem ? "min_{k>=n} min_s v(y_k - y_{k-1}) >= n - 14 - 6 c_log"
                          : "min_{k>=n} min_s v(y_k - y_{k-1}) >= n - 2",
          where, v, Relation::GE, bound);
    auto& dst = per_level[static_cast<std::size_t>(n - 1)];
    dst.insert(dst.end(), r.out.begin(), r.out.end());
  }
}

}  // namespace

ForgeCertificate verify_certificate(const ForgeSchedule& sch, const CenterSet& centers, Execution exec) {
  ForgeFactors ff(sch, centers);
  const long N = sch.depth();
  Tables t;
  t.pts = check_points(sch, ff);
  t.f.resize(static_cast<std::size_t>(N));

  std::vector<std::vector<CertRecord>> per_level(static_cast<std::size_t>(N));
  auto level_records = [&](long n) {
    return sch.mode == ForgeMode::Theorem ? theorem_level(sch, t, ff, n) : example_level(sch, centers, t, ff, n);
  };

  if (exec == Execution::Serial) {
    for (long n = 1; n <= N; ++n) fill_factor_row(ff, t, n);
    fill_chains(t, N);
    for (long n = 1; n <= N; ++n) per_level[static_cast<std::size_t>(n - 1)] = level_records(n);
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (long n = 1; n <= N; ++n) {
      try {
        fill_factor_row(ff, t, n);
      } catch (...) {
#pragma omp critical(ultra_cert_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    fill_chains(t, N);
#pragma omp parallel for schedule(dynamic, 1)
    for (long n = 1; n <= N; ++n) {
      try {
        per_level[static_cast<std::size_t>(n - 1)] = level_records(n);
      } catch (...) {
#pragma omp critical(ultra_cert_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  append_tail(sch, t, per_level);

  ForgeCertificate cert;
  for (auto& v : per_level) cert.records.insert(cert.records.end(), v.begin(), v.end());
  return cert;
}

}  // namespace ultra
