#pragma once

namespace genseq {

// The four sequence parameters: i and k are the two step lengths, r and s
// the color counts attached to i-steps and k-steps. All four are >= 1.
// Ordering constraints between i and k are imposed per operation, not here.
struct Params {
    long i = 1;
    long k = 1;
    long r = 1;
    long s = 1;

    friend bool operator==(const Params&, const Params&) = default;
};

// Validates raw integers into Params. Throws std::invalid_argument naming
// the offending parameter if any of them is < 1.
Params validate_params(long i, long k, long r, long s);

}  // namespace genseq
