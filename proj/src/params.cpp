#include "genseq/params.hpp"

#include <stdexcept>
#include <string>

namespace genseq {

Params validate_params(long i, long k, long r, long s) {
    auto reject = [](const char* name, long value) {
        throw std::invalid_argument(std::string(name) + " must be >= 1, got " +
                                    std::to_string(value));
    };
    if (i < 1) reject("i", i);
    if (k < 1) reject("k", k);
    if (r < 1) reject("r", r);
    if (s < 1) reject("s", s);
    return Params{i, k, r, s};
}

}  // namespace genseq
