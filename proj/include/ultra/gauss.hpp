#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ultra/logval.hpp"
#include "ultra/ratfun.hpp"

namespace ultra {

/// Gauss point of log-radius s (radius 2^(-s)) around `center` (0 if unset).
struct GaussPoint {
  LogValue s;
  std::optional<FieldElement> center;

  GaussPoint() = default;
  explicit GaussPoint(LogValue s_, std::optional<FieldElement> c = std::nullopt)
      : s(std::move(s_)), center(std::move(c)) {}
};

/// Log-radius interval [s_lo, s_hi]; norm radii run from gamma = 2^(-s_hi) up to
/// delta = 2^(-s_lo).
struct RadiusInterval {
  LogValue s_lo;
  LogValue s_hi;

  RadiusInterval(LogValue lo, LogValue hi);
  bool contains(const LogValue& s) const { return s_lo <= s && s <= s_hi; }
  bool is_point() const { return s_lo == s_hi; }
};

/// Whether a Gauss minimum is attained by one monomial or several.
struct DominanceCertificate {
  bool unique = true;
  std::vector<long> indices;  // minimizing monomial indices, increasing

  std::string to_string() const;  // "unique:3" or "tied:0,1"
};

struct GaussValue {
  LogValue value;
  DominanceCertificate cert;
};

GaussValue gauss_valuation(const Poly& p, const GaussPoint& pt);
LogValue ratfun_gauss(const RatFun& f, const GaussPoint& pt);

/// Piecewise-affine function s -> alpha + slope*s on consecutive breakpoints.
class NormProfile {
 public:
  struct Piece {
    LogValue alpha;
    long slope;
    bool operator==(const Piece&) const = default;
  };

  NormProfile(std::vector<LogValue> breakpoints, std::vector<Piece> pieces);

  /// b_0 = s_lo < ... < b_k = s_hi (a single entry for point intervals).
  const std::vector<LogValue>& breakpoints() const { return breakpoints_; }
  /// pieces()[i] is valid on [b_i, b_{i+1}]; size max(1, k).
  const std::vector<Piece>& pieces() const { return pieces_; }

  LogValue at(const LogValue& s) const;
  const LogValue& lo() const { return breakpoints_.front(); }
  const LogValue& hi() const { return breakpoints_.back(); }
  bool is_concave() const;

  NormProfile operator-(const NormProfile& o) const;
  NormProfile operator+(const NormProfile& o) const;

 private:
  NormProfile combine(const NormProfile& o, int sign) const;
  std::vector<LogValue> breakpoints_;
  std::vector<Piece> pieces_;
};

NormProfile poly_profile(const Poly& p, const RadiusInterval& interval,
                         const std::optional<FieldElement>& center = std::nullopt);
NormProfile norm_profile(const RatFun& f, const RadiusInterval& interval,
                         const std::optional<FieldElement>& center = std::nullopt);

struct ProfileExtrema {
  LogValue v_min;  // sup-norm is 2^(-v_min)
  LogValue v_max;  // inf-norm is 2^(-v_max)
  LogValue argmin;
  LogValue argmax;
};

ProfileExtrema profile_extrema(const NormProfile& profile);

/// v_max - v_min: the log of |f|_spect * |1/f|_spect over the interval.
LogValue unit_obstruction(const RatFun& f, const RadiusInterval& interval);

enum class Execution { Serial, Parallel };

/// v_s(f) at each point. Serial evaluates the min-formula point by point; the
/// parallel kernel distributes points with OpenMP. Results are identical.
std::vector<LogValue> evaluate_grid(const RatFun& f, const std::vector<GaussPoint>& points,
                                    Execution exec = Execution::Parallel);

}  // namespace ultra
