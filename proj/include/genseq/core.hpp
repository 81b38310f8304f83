#pragma once

#include <vector>

#include "genseq/int.hpp"
#include "genseq/params.hpp"

namespace genseq {

// Sequences are indexed from n = -1.
inline constexpr long kMinIndex = -1;

// F(p, n) by the defining recurrence with exact initial conditions:
//   F(n) = r^floor((n+1)/i)            for i <= k and -1 <= n <= k-2
//   F(n) = s^floor((n+1)/k)            for k <  i and -1 <= n <= i-2
//   F(n) = r F(n-i) + s F(n-k)         for n >= max(i,k) - 1
// Computed iteratively with a window of max(i,k) prior values.
Int eval_f(const Params& p, long n);

// F(p, n) for n = lo..hi, computed in one ascending pass. Requires
// -1 <= lo <= hi.
std::vector<Int> eval_f_range(const Params& p, long lo, long hi);

// L(p, n). Defined only for k > i:
//   L(n) = F(n)                              for -1 <= n <= k-2
//   L(n) = F(n) - r^floor((n+1)/i)           for k-1 <= n <= k+(k-1)i-2
//   L(n) = r^(k-1) ((k-1) s F(n-k-(k-1)i)
//                   + F(n-(k-1)i))           for n >= k+(k-1)i-1
// The middle branch is asserted nonnegative; a violation is reported
// rather than clamped.
Int eval_l(const Params& p, long n);

// L(p, n) computed through the step recurrence L(n) = r L(n-i) + s L(n-k)
// for n >= 2k+(k-1)i-1, seeded by eval_l on smaller indices. Delegates to
// eval_l below that threshold. Must agree with eval_l everywhere; the
// redundancy is deliberate and is exercised by the tests.
Int eval_l_by_recurrence(const Params& p, long n);

}  // namespace genseq
