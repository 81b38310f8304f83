#pragma once

#include <vector>

#include "genseq/int.hpp"
#include "genseq/params.hpp"

namespace genseq {

// Dense square matrix of exact integers.
class IntMatrix {
  public:
    explicit IntMatrix(long dim) : dim_(dim), entries_(static_cast<std::size_t>(dim * dim)) {}

    static IntMatrix identity(long dim);

    long dim() const { return dim_; }

    Int& at(long row, long col) { return entries_[index(row, col)]; }
    const Int& at(long row, long col) const { return entries_[index(row, col)]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  private:
    std::size_t index(long row, long col) const {
        return static_cast<std::size_t>(row * dim_ + col);
    }

    long dim_;
    std::vector<Int> entries_;
};

// k x k step-generator matrix: superdiagonal ones; first column carries the
// recurrence coefficients (r at row i and s at row k for i < k, r+s at row
// k for i = k). Requires k >= i and k >= 2.
IntMatrix build_q(const Params& p);

// k x k matrix of initial values, entry (t, j) = F(2k-1-t-j) with 1-based
// indices: top-left F(2k-3), bottom-right F(-1). Requires k >= i, k >= 2.
IntMatrix build_a(const Params& p);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

// Power by repeated squaring; mat_pow(m, 0) is the identity.
IntMatrix mat_pow(const IntMatrix& m, unsigned long e);

// build_a(p) * build_q(p)^(n+1); entry (t, j) equals F(n + 2k - t - j)
// (1-based), so the bottom-right entry is F(n). Requires k >= i, k >= 2,
// n >= -1.
IntMatrix f_matrix(const Params& p, long n);

// Exact determinant (fraction-free elimination).
Int det(const IntMatrix& m);

// Closed form for det(build_q(p)): s (-1)^(k+1) when i < k and
// (s+r) (-1)^(k+1) when i = k.
Int det_q_formula(const Params& p);

// Closed form for det(build_a(p)), stated for i = 1 only:
// s^(k-1) (-1)^((k-1)(k+6)/2). Rejects i != 1; for larger i the library
// computes determinants numerically and makes no closed-form claim.
Int det_a_formula(const Params& p);

// det(f_matrix(p, n)) in closed form:
//   s^(n+k) (-1)^(((k-1)(k+6) + 2(k+1)(n+1)) / 2)
// Requires i = 1, k >= 2, n >= 0.
Int cassini(const Params& p, long n);

}  // namespace genseq
