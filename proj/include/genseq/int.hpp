#pragma once

#include <gmpxx.h>

#include <cassert>
#include <string>

namespace genseq {

// Exact arbitrary-precision integer. All sequence arithmetic is exact; no
// floating point appears anywhere in the library.
using Int = mpz_class;

inline Int ipow(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline Int ipow(long base, long exp) {
    assert(exp >= 0);
    return ipow(Int(base), static_cast<unsigned long>(exp));
}

inline bool is_even(const Int& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace genseq
