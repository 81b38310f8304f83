#include "genseq/matrixgen.hpp"

#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

#include "genseq/core.hpp"

namespace genseq {

namespace {

void require_generator_params(const Params& p) {
    if (p.k < p.i) {
        throw std::domain_error("generator matrices require k >= i (got i=" +
                                std::to_string(p.i) + ", k=" + std::to_string(p.k) + ")");
    }
    if (p.k < 2) throw std::domain_error("generator matrices require k >= 2");
}

Int sign_pow(long exponent) { return exponent % 2 == 0 ? Int(1) : Int(-1); }

}  // namespace

IntMatrix IntMatrix::identity(long dim) {
    IntMatrix m(dim);
    for (long d = 0; d < dim; ++d) m.at(d, d) = 1;
    return m;
}

IntMatrix build_q(const Params& p) {
    require_generator_params(p);
    IntMatrix q(p.k);
    for (long t = 0; t + 1 < p.k; ++t) q.at(t, t + 1) = 1;
    if (p.i < p.k) {
        q.at(p.i - 1, 0) = p.r;
        q.at(p.k - 1, 0) = p.s;
    } else {
        q.at(p.k - 1, 0) = p.r + p.s;
    }
    return q;
}

IntMatrix build_a(const Params& p) {
    require_generator_params(p);
    // Row t needs F(2k-2-t) .. F(k-1-t); one range pass covers everything.
    std::vector<Int> f = eval_f_range(p, -1, 2 * p.k - 3);
    auto value = [&](long n) { return f[static_cast<std::size_t>(n + 1)]; };
    IntMatrix a(p.k);
    for (long t = 1; t <= p.k; ++t) {
        for (long j = 1; j <= p.k; ++j) {
            a.at(t - 1, j - 1) = value(2 * p.k - 1 - t - j);
        }
    }
    // Corner anchors of the displayed layout.
    assert(a.at(0, 0) == value(2 * p.k - 3));
    assert(a.at(0, p.k - 1) == value(p.k - 2));
    assert(a.at(p.k - 1, 0) == value(p.k - 2));
    assert(a.at(p.k - 1, p.k - 1) == value(-1));
    return a;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()));
    }
    IntMatrix out(a.dim());
    for (long row = 0; row < a.dim(); ++row) {
        for (long col = 0; col < a.dim(); ++col) {
            Int sum = 0;
            for (long mid = 0; mid < a.dim(); ++mid) {
                sum += a.at(row, mid) * b.at(mid, col);
            }
            out.at(row, col) = std::move(sum);
        }
    }
    return out;
}

IntMatrix mat_pow(const IntMatrix& m, unsigned long e) {
    IntMatrix result = IntMatrix::identity(m.dim());
    IntMatrix base = m;
    while (e > 0) {
        if (e & 1UL) result = mat_mul(result, base);
        base = mat_mul(base, base);
        e >>= 1UL;
    }
    return result;
}

IntMatrix f_matrix(const Params& p, long n) {
    require_generator_params(p);
    if (n < -1) throw std::domain_error("sequence index must be >= -1");
    return mat_mul(build_a(p), mat_pow(build_q(p), static_cast<unsigned long>(n + 1)));
}

Int det(const IntMatrix& m) {
    // Bareiss fraction-free elimination; every division is exact.
    IntMatrix w = m;
    const long dim = w.dim();
    if (dim == 0) return 1;
    Int prev = 1;
    bool negate = false;
    for (long col = 0; col < dim - 1; ++col) {
        if (w.at(col, col) == 0) {
            long swap_row = col + 1;
            while (swap_row < dim && w.at(swap_row, col) == 0) ++swap_row;
            if (swap_row == dim) return 0;
            for (long j = 0; j < dim; ++j) std::swap(w.at(col, j), w.at(swap_row, j));
            negate = !negate;
        }
        for (long row = col + 1; row < dim; ++row) {
            for (long j = col + 1; j < dim; ++j) {
                Int num = w.at(row, j) * w.at(col, col) - w.at(row, col) * w.at(col, j);
                mpz_divexact(w.at(row, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(row, col) = 0;
        }
        prev = w.at(col, col);
    }
    Int result = w.at(dim - 1, dim - 1);
    return negate ? Int(-result) : result;
}

Int det_q_formula(const Params& p) {
    require_generator_params(p);
    Int base = p.i < p.k ? Int(p.s) : Int(p.s + p.r);
    return base * sign_pow(p.k + 1);
}

Int det_a_formula(const Params& p) {
    require_generator_params(p);
    if (p.i != 1) throw std::domain_error("det A closed form is stated for i = 1 only");
    return ipow(p.s, p.k - 1) * sign_pow((p.k - 1) * (p.k + 6) / 2);
}

Int cassini(const Params& p, long n) {
    require_generator_params(p);
    if (p.i != 1) throw std::domain_error("the Cassini formula requires i = 1");
    if (n < 0) throw std::domain_error("the Cassini formula requires n >= 0");
    long exponent = (p.k - 1) * (p.k + 6) + 2 * (p.k + 1) * (n + 1);
    assert(exponent % 2 == 0);  // (k-1)(k+6) is even for every k
    return ipow(p.s, n + p.k) * sign_pow(exponent / 2);
}

}  // namespace genseq
