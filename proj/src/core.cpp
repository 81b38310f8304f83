#include "genseq/core.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace genseq {

namespace {

void require_index(long n) {
    if (n < kMinIndex) {
        throw std::domain_error("sequence index must be >= -1, got " + std::to_string(n));
    }
}

void require_l_params(const Params& p) {
    if (p.k <= p.i) {
        throw std::domain_error("L is defined only for k > i (got i=" + std::to_string(p.i) +
                                ", k=" + std::to_string(p.k) + ")");
    }
}

// Initial value for -1 <= n <= max(i,k) - 2. The two branches tile that
// range exactly: i <= k covers -1..k-2, k < i covers -1..i-2.
Int initial_f(const Params& p, long n) {
    if (p.i <= p.k) return ipow(p.r, (n + 1) / p.i);
    return ipow(p.s, (n + 1) / p.k);
}

}  // namespace

Int eval_f(const Params& p, long n) {
    require_index(n);
    const long w = std::max(p.i, p.k);
    // The initial range -1..w-2 has exactly w entries, one per window slot.
    assert((w - 2) - kMinIndex + 1 == w);
    if (n <= w - 2) return initial_f(p, n);

    // Ring of the last w values; index m lives in slot (m+1) mod w, so the
    // seed n = -1 maps to slot 0.
    std::vector<Int> ring(static_cast<std::size_t>(w));
    auto slot = [w](long m) { return static_cast<std::size_t>((m + 1) % w); };
    for (long m = kMinIndex; m <= w - 2; ++m) ring[slot(m)] = initial_f(p, m);
    for (long m = w - 1; m <= n; ++m) {
        Int next = p.r * ring[slot(m - p.i)] + p.s * ring[slot(m - p.k)];
        ring[slot(m)] = std::move(next);
    }
    return ring[slot(n)];
}

std::vector<Int> eval_f_range(const Params& p, long lo, long hi) {
    require_index(lo);
    if (lo > hi) {
        throw std::invalid_argument("bad range: lo=" + std::to_string(lo) +
                                    " > hi=" + std::to_string(hi));
    }
    const long w = std::max(p.i, p.k);
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    std::vector<Int> ring(static_cast<std::size_t>(w));
    auto slot = [w](long m) { return static_cast<std::size_t>((m + 1) % w); };
    for (long m = kMinIndex; m <= hi; ++m) {
        if (m <= w - 2) {
            ring[slot(m)] = initial_f(p, m);
        } else {
            Int next = p.r * ring[slot(m - p.i)] + p.s * ring[slot(m - p.k)];
            ring[slot(m)] = std::move(next);
        }
        if (m >= lo) out.push_back(ring[slot(m)]);
    }
    return out;
}

Int eval_l(const Params& p, long n) {
    require_l_params(p);
    require_index(n);
    const long tail_start = p.k + (p.k - 1) * p.i - 1;  // first index of the closed form
    if (n <= p.k - 2) return eval_f(p, n);
    if (n <= tail_start - 1) {
        Int f = eval_f(p, n);
        Int drop = ipow(p.r, (n + 1) / p.i);
        if (f < drop) {
            throw std::logic_error("L initial condition F(n) - r^floor((n+1)/i) is negative at n=" +
                                   std::to_string(n));
        }
        return f - drop;
    }
    Int with_k = eval_f(p, n - p.k - (p.k - 1) * p.i);
    Int all_i = eval_f(p, n - (p.k - 1) * p.i);
    return ipow(p.r, p.k - 1) * (Int(p.k - 1) * p.s * with_k + all_i);
}

Int eval_l_by_recurrence(const Params& p, long n) {
    require_l_params(p);
    require_index(n);
    const long start = 2 * p.k + (p.k - 1) * p.i - 1;
    if (n < start) return eval_l(p, n);

    std::vector<Int> table(static_cast<std::size_t>(n + 2));
    for (long m = kMinIndex; m < start; ++m) {
        table[static_cast<std::size_t>(m + 1)] = eval_l(p, m);
    }
    for (long m = start; m <= n; ++m) {
        table[static_cast<std::size_t>(m + 1)] =
            p.r * table[static_cast<std::size_t>(m - p.i + 1)] +
            p.s * table[static_cast<std::size_t>(m - p.k + 1)];
    }
    return table[static_cast<std::size_t>(n + 1)];
}

}  // namespace genseq
