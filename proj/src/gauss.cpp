#include "ultra/gauss.hpp"

#include <algorithm>
#include <exception>

#include "ultra/error.hpp"

namespace ultra {

RadiusInterval::RadiusInterval(LogValue lo, LogValue hi) : s_lo(std::move(lo)), s_hi(std::move(hi)) {
  if (s_lo.is_infinite() || s_hi.is_infinite())
    throw Error(ErrorKind::InvalidArgument, "interval endpoints must be finite");
  if (s_hi < s_lo) throw Error(ErrorKind::InvalidArgument, "interval needs s_lo <= s_hi");
}

std::string DominanceCertificate::to_string() const {
  std::string out = unique ? "unique:" : "tied:";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(indices[i]);
  }
  return out;
}

namespace {

const Poly& centered(const Poly& p, const std::optional<FieldElement>& center, Poly& storage) {
  if (!center || center->is_zero()) return p;
  storage = recenter(p, *center);
  return storage;
}

}  // namespace

GaussValue gauss_valuation(const Poly& p, const GaussPoint& pt) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Gauss valuation of zero");
  if (pt.s.is_infinite()) throw Error(ErrorKind::InvalidArgument, "Gauss point needs finite s");
  Poly storage;
  const Poly& q = centered(p, pt.center, storage);
  GaussValue out{LogValue::infinity(), {}};
  for (long i = 0; i <= q.degree(); ++i) {
    const auto& a = q.coeffs()[i];
    if (a.is_zero()) continue;
    LogValue v = a.valuation() + pt.s.scaled(i);
    if (v < out.value) {
      out.value = v;
      out.cert.indices = {i};
    } else if (v == out.value) {
      out.cert.indices.push_back(i);
    }
  }
  out.cert.unique = out.cert.indices.size() == 1;
  return out;
}

LogValue ratfun_gauss(const RatFun& f, const GaussPoint& pt) {
  if (f.den().is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (f.is_zero()) return LogValue::infinity();
  return gauss_valuation(f.num(), pt).value - gauss_valuation(f.den(), pt).value;
}

// ---------------------------------------------------------------------------

NormProfile::NormProfile(std::vector<LogValue> breakpoints, std::vector<Piece> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.empty()) throw Error(ErrorKind::InvalidArgument, "profile without breakpoints");
  std::size_t want = std::max<std::size_t>(1, breakpoints_.size() - 1);
  if (pieces_.size() != want) throw Error(ErrorKind::InvalidArgument, "profile piece count mismatch");
}

LogValue NormProfile::at(const LogValue& s) const {
  if (s < lo() || hi() < s) throw Error(ErrorKind::InvalidArgument, "profile evaluated outside its interval");
  std::size_t k = 0;
  while (k + 1 < pieces_.size() && breakpoints_[k + 1] < s) ++k;
  return pieces_[k].alpha + s.scaled(pieces_[k].slope);
}

bool NormProfile::is_concave() const {
  for (std::size_t k = 1; k < pieces_.size(); ++k)
    if (pieces_[k].slope > pieces_[k - 1].slope) return false;
  return true;
}

NormProfile NormProfile::combine(const NormProfile& o, int sign) const {
  if (lo() != o.lo() || hi() != o.hi()) throw Error(ErrorKind::InvalidArgument, "profiles on different intervals");
  std::vector<LogValue> bps;
  std::merge(breakpoints_.begin(), breakpoints_.end(), o.breakpoints_.begin(), o.breakpoints_.end(),
             std::back_inserter(bps));
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  auto piece_for = [](const NormProfile& pr, const LogValue& left) -> const Piece& {
    std::size_t k = 0;
    while (k + 1 < pr.pieces_.size() && pr.breakpoints_[k + 1] <= left) ++k;
    return pr.pieces_[k];
  };

  std::vector<LogValue> out_bps{bps.front()};
  std::vector<Piece> out_pieces;
  std::size_t segments = std::max<std::size_t>(1, bps.size() - 1);
  for (std::size_t k = 0; k < segments; ++k) {
    const Piece& a = piece_for(*this, bps[k]);
    const Piece& b = piece_for(o, bps[k]);
    Piece c{sign > 0 ? a.alpha + b.alpha : a.alpha - b.alpha, sign > 0 ? a.slope + b.slope : a.slope - b.slope};
    if (!out_pieces.empty() && out_pieces.back() == c) {
      out_bps.back() = bps[k + 1];
      continue;
    }
    out_pieces.push_back(std::move(c));
    if (bps.size() > 1) out_bps.push_back(bps[k + 1]);
  }
  return NormProfile(std::move(out_bps), std::move(out_pieces));
}

NormProfile NormProfile::operator-(const NormProfile& o) const { return combine(o, -1); }
NormProfile NormProfile::operator+(const NormProfile& o) const { return combine(o, +1); }

NormProfile poly_profile(const Poly& p, const RadiusInterval& interval,
                         const std::optional<FieldElement>& center) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "profile of the zero polynomial");
  Poly storage;
  const Poly& q = centered(p, center, storage);

  struct Line {
    LogValue alpha;
    long slope;
  };
  std::vector<Line> lines;
  for (long i = 0; i <= q.degree(); ++i)
    if (!q.coeffs()[i].is_zero()) lines.push_back({q.coeffs()[i].valuation(), i});

  auto value = [](const Line& l, const LogValue& s) { return l.alpha + s.scaled(l.slope); };

  // Minimizer at s_lo; on ties the smallest slope stays minimal to the right.
  LogValue s = interval.s_lo;
  std::size_t cur = 0;
  for (std::size_t j = 1; j < lines.size(); ++j) {
    auto c = value(lines[j], s) <=> value(lines[cur], s);
    if (c < 0 || (c == 0 && lines[j].slope < lines[cur].slope)) cur = j;
  }

  std::vector<LogValue> bps{s};
  std::vector<NormProfile::Piece> pieces{{lines[cur].alpha, lines[cur].slope}};
  for (;;) {
    std::optional<LogValue> next;
    std::size_t next_line = cur;
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (lines[j].slope >= lines[cur].slope) continue;
      LogValue cross = (lines[j].alpha - lines[cur].alpha).scaled(Rational(1, lines[cur].slope - lines[j].slope));
      if (cross <= s) continue;
      if (!next || cross < *next || (cross == *next && lines[j].slope < lines[next_line].slope)) {
        next = cross;
        next_line = j;
      }
    }
    if (!next || *next >= interval.s_hi) break;
    s = *next;
    cur = next_line;
    bps.push_back(s);
    pieces.push_back({lines[cur].alpha, lines[cur].slope});
  }
  if (!interval.is_point()) bps.push_back(interval.s_hi);
  return NormProfile(std::move(bps), std::move(pieces));
}

NormProfile norm_profile(const RatFun& f, const RadiusInterval& interval,
                         const std::optional<FieldElement>& center) {
  if (f.is_zero()) throw Error(ErrorKind::DivisionByZero, "profile of 0 (its inverse is undefined)");
  return poly_profile(f.num(), interval, center) - poly_profile(f.den(), interval, center);
}

ProfileExtrema profile_extrema(const NormProfile& profile) {
  const auto& bps = profile.breakpoints();
  ProfileExtrema ex{profile.at(bps.front()), profile.at(bps.front()), bps.front(), bps.front()};
  for (const auto& b : bps) {
    LogValue v = profile.at(b);
    if (v < ex.v_min) {
      ex.v_min = v;
      ex.argmin = b;
    }
    if (ex.v_max < v) {
      ex.v_max = v;
      ex.argmax = b;
    }
  }
  return ex;
}

LogValue unit_obstruction(const RatFun& f, const RadiusInterval& interval) {
  auto ex = profile_extrema(norm_profile(f, interval));
  return ex.v_max - ex.v_min;
}

std::vector<LogValue> evaluate_grid(const RatFun& f, const std::vector<GaussPoint>& points, Execution exec) {
  std::vector<LogValue> out(points.size());
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = ratfun_gauss(f, points[i]);
    return out;
  }
  std::exception_ptr failure;
  const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = ratfun_gauss(f, points[i]);
    } catch (...) {
#pragma omp critical(ultra_grid_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace ultra
