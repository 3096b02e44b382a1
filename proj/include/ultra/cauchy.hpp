#pragma once

#include <vector>

#include "ultra/gauss.hpp"
#include "ultra/logval.hpp"
#include "ultra/ratfun.hpp"

namespace ultra {

struct CauchyRow {
  long n;            // compares terms n and n + 1 (1-based)
  LogValue direct;   // v(x_n^-1 - x_{n+1}^-1), from the inverses themselves
  LogValue identity; // v(x_{n+1} - x_n) - v(x_n) - v(x_{n+1})
};

struct CauchyInverse {
  std::vector<RatFun> inverses;
  std::vector<CauchyRow> modulus;
  bool consistent() const;  // direct == identity on every row
};

/// Inverts a sequence whose norms at `pt` stay bounded away from 0
/// (v(x_n) <= lower). Throws ZeroTerm, NotBoundedBelow.
CauchyInverse cauchy_invert(const std::vector<RatFun>& seq, const GaussPoint& pt, const LogValue& lower);

}  // namespace ultra
