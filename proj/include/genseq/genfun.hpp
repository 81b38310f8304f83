#pragma once

#include <vector>

#include "genseq/int.hpp"
#include "genseq/params.hpp"

namespace genseq {

// Rational generating function as dense coefficient lists (index = power of
// x). The numerator keeps any zero coefficients produced by construction;
// the denominator has constant term 1 and degree max(i,k).
struct RationalSeries {
    std::vector<Int> numerator;
    std::vector<Int> denominator;
};

// Generating function of (F(p, n)), the series F(-1) + F(0) x + F(1) x^2 + ...
// For k > i:
//   (1 + sum_{m=1}^{k-1} r^floor(m/i) x^m
//      - r (x^i + sum_{m=i+1}^{k-1} r^floor((m-i)/i) x^m)) / (1 - r x^i - s x^k)
// For k = i:
//   (1 + sum_{m=1}^{k-1} r^floor(m/i) x^m) / (1 - (r+s) x^k)
// Rejects k < i.
RationalSeries rational_genfun(const Params& p);

// First `count` power-series coefficients of numerator/denominator via the
// linear recurrence induced by the denominator:
//   c_m = numerator[m] - sum_{j>=1} denominator[j] c_{m-j}
// Requires count >= 1. The coefficient of x^m equals F(p, m-1).
std::vector<Int> series_coeffs(const RationalSeries& rs, long count);

}  // namespace genseq
