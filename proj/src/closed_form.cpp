#include "genseq/closed_form.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace genseq {

namespace {

// Pascal triangle rows, extended on demand. One instance per thread so
// readers never observe a partially filled row.
class BinomialTable {
  public:
    const Int& at(long a, long b) {
        while (static_cast<long>(rows_.size()) <= a) {
            std::size_t next = rows_.size();
            std::vector<Int> row(next + 1, Int(1));
            for (std::size_t j = 1; j < next; ++j) {
                row[j] = rows_[next - 1][j - 1] + rows_[next - 1][j];
            }
            rows_.push_back(std::move(row));
        }
        return rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

  private:
    std::vector<std::vector<Int>> rows_;
};

BinomialTable& local_table() {
    thread_local BinomialTable table;
    return table;
}

}  // namespace

Int binomial(long a, long b) {
    if (a < 0 || b < 0) {
        throw std::domain_error("binomial arguments must be nonnegative");
    }
    if (b > a) return 0;
    return local_table().at(a, b);
}

Int closed_f(const Params& p, long n) {
    if (p.k < p.i) {
        throw std::domain_error("closed form requires k >= i (got i=" + std::to_string(p.i) +
                                ", k=" + std::to_string(p.k) + ")");
    }
    if (n < -1) throw std::domain_error("sequence index must be >= -1");
    Int total = 0;
    const long jmax = (n + 1) / p.k;
    for (long j = 0; j <= jmax; ++j) {
        long icount = (n + 1 - j * p.k) / p.i;  // n+1-jk >= 0 by the loop bound
        total += ipow(p.r, icount) * ipow(p.s, j) * binomial(j + icount, j);
    }
    return total;
}

Int narayana_closed(long n) {
    if (n < 1) throw std::domain_error("narayana_closed requires n >= 1");
    Int total = 0;
    for (long j = 0; j <= n / 3; ++j) total += binomial(n - 2 * j, j);
    return total;
}

Int central_f(long r, long s, long t, long n) {
    if (r < 1 || s < 1) throw std::domain_error("central_f requires r, s >= 1");
    if (t < 1) throw std::domain_error("central_f requires t >= 1");
    if (n < 2 * t - 1) throw std::domain_error("central_f requires n >= 2t-1");
    Int total = 0;
    for (long j = 0; n - t * j >= 0; ++j) {
        for (long l = 0; n - t * (j + l) >= 0; ++l) {
            long side = n - t * (j + l);  // 1-cells on each side of the central square
            total += ipow(r, 2 * n + 1 - 2 * t * (j + l)) * ipow(s, j + l) *
                     binomial(side + j, j) * binomial(side + l, l);
        }
    }
    return total;
}

}  // namespace genseq
