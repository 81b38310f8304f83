#include "genseq/genfun.hpp"

#include <stdexcept>
#include <string>

namespace genseq {

RationalSeries rational_genfun(const Params& p) {
    if (p.k < p.i) {
        throw std::domain_error("generating function requires k >= i (got i=" +
                                std::to_string(p.i) + ", k=" + std::to_string(p.k) + ")");
    }
    RationalSeries rs;
    rs.numerator.assign(static_cast<std::size_t>(p.k), Int(0));
    for (long m = 0; m < p.k; ++m) {
        rs.numerator[static_cast<std::size_t>(m)] = ipow(p.r, m / p.i);
    }
    rs.denominator.assign(static_cast<std::size_t>(p.k) + 1, Int(0));
    rs.denominator[0] = 1;
    if (p.k > p.i) {
        // Subtract r * x^i * (initial-segment polynomial), term by term;
        // zero coefficients are kept so the emitted polynomial matches the
        // construction exactly.
        for (long m = p.i; m < p.k; ++m) {
            rs.numerator[static_cast<std::size_t>(m)] -= ipow(p.r, (m - p.i) / p.i + 1);
        }
        rs.denominator[static_cast<std::size_t>(p.i)] -= p.r;
        rs.denominator[static_cast<std::size_t>(p.k)] -= p.s;
    } else {
        rs.denominator[static_cast<std::size_t>(p.k)] = -Int(p.r + p.s);
    }
    return rs;
}

std::vector<Int> series_coeffs(const RationalSeries& rs, long count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    if (rs.denominator.empty() || rs.denominator[0] != 1) {
        throw std::invalid_argument("denominator must have constant term 1");
    }
    std::vector<Int> coeffs;
    coeffs.reserve(static_cast<std::size_t>(count));
    const long dendeg = static_cast<long>(rs.denominator.size()) - 1;
    for (long m = 0; m < count; ++m) {
        Int c = m < static_cast<long>(rs.numerator.size())
                    ? rs.numerator[static_cast<std::size_t>(m)]
                    : Int(0);
        for (long j = 1; j <= dendeg && j <= m; ++j) {
            c -= rs.denominator[static_cast<std::size_t>(j)] * coeffs[static_cast<std::size_t>(m - j)];
        }
        coeffs.push_back(std::move(c));
    }
    return coeffs;
}

}  // namespace genseq
