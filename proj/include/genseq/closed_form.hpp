#pragma once

#include "genseq/int.hpp"
#include "genseq/params.hpp"

namespace genseq {

// C(a, b) from a grow-on-demand Pascal cache (confined per thread).
// Returns 0 when b > a; rejects negative arguments.
Int binomial(long a, long b);

// The explicit binomial sum
//   F(p, n) = sum_{j=0}^{floor((n+1)/k)} r^floor((n+1-jk)/i) s^j
//             C(j + floor((n+1-jk)/i), j)
// valid for k >= i, n >= -1. Must equal eval_f(p, n).
Int closed_f(const Params& p, long n);

// Narayana numbers as sum_{j=0}^{floor(n/3)} C(n-2j, j), n >= 1.
Int narayana_closed(long n);

// Central-square double sum for F with i = 1 and even long step 2t:
//   F((1,2t,r,s), 2n) = sum_{j,l>=0} r^(2n+1-2t(j+l)) s^(j+l)
//                       C(n-t(j+l)+j, j) C(n-t(j+l)+l, l)
// with terms included only while n - t(j+l) >= 0 (beyond that no pieces fit
// on either side of the central square). Requires t >= 1, n >= 2t-1,
// r, s >= 1.
Int central_f(long r, long s, long t, long n);

}  // namespace genseq
