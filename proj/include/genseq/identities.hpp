#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "genseq/int.hpp"
#include "genseq/params.hpp"

namespace genseq {

// Lazily extended F/L tables for one parameter tuple. Values come from the
// core evaluators; the cache only avoids recomputation while a grid of
// bindings is swept. Confined to one worker at a time.
class SeqCache {
  public:
    explicit SeqCache(const Params& p) : params_(p) {}

    const Params& params() const { return params_; }

    // Values are returned by copy: the backing tables grow while a grid is
    // swept, so references into them would not stay valid across calls.
    Int f(long n);
    Int l(long n);  // requires k > i

    // F with indices below -1 read as 0 (boards of negative length do not
    // exist). Only identity evaluators use this convention.
    Int f_or_zero(long n) { return n < -1 ? Int(0) : f(n); }

  private:
    Params params_;
    std::vector<Int> f_;  // f_[m] = F(m-1)
    std::vector<Int> l_;  // l_[m] = L(m-1)
};

struct IdentityBinding {
    Params p;
    long n = 0;
    std::map<std::string, long> aux;

    long aux_value(const std::string& name) const;
};

struct IdentityCheck {
    std::string id;
    IdentityBinding binding;
    Int lhs;
    Int rhs;
    bool pass = false;
};

// Raised when a binding violates an identity's stated hypotheses; distinct
// from a failing check.
class InapplicableBinding : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Grid of bindings swept by the verifier. The default is the full
// regression grid; aux_cap bounds the aux parameters whose stated range is
// unbounded (the repetition counts of ID-SHIFT-MK).
struct IdentityGrid {
    long i_max = 4;
    long k_max = 4;
    long r_max = 3;
    long s_max = 3;
    long n_max = 24;
    long aux_cap = 8;
};

struct IdentityReport {
    std::string id;
    long checked = 0;
    long passed = 0;
    long failed = 0;
    std::vector<IdentityCheck> counterexamples;  // capped at 16
};

struct VerificationReport {
    std::vector<IdentityReport> identities;

    long checked() const;
    long passed() const;
    long failed() const;
};

struct IdentitySpec {
    std::string id;
    std::string summary;
    std::vector<std::string> aux_names;
    // Exactly the hypotheses stated by the identity's source; bindings
    // outside them are skipped, not failed.
    std::function<bool(const IdentityBinding&)> applicable;
    // Aux combinations to sweep for a given parameter tuple (stated ranges,
    // capped by the grid where unbounded).
    std::function<std::vector<std::map<std::string, long>>(const Params&, const IdentityGrid&)>
        aux_values;
    std::function<Int(SeqCache&, const IdentityBinding&)> lhs;
    std::function<Int(SeqCache&, const IdentityBinding&)> rhs;
};

// All built-in identities, fixed order.
const std::vector<IdentitySpec>& identity_registry();

// Nullptr when the id is unknown.
const IdentitySpec* find_identity(std::string_view id);

// Evaluates one binding. Throws InapplicableBinding when the hypotheses do
// not hold and std::invalid_argument for an unknown id.
IdentityCheck check_identity(const std::string& id, const Params& p,
                             const std::map<std::string, long>& aux, long n);

// Sweeps the grid for one identity / for the whole registry, skipping
// inapplicable bindings. Work may fan out across threads (bounded by the
// GENSEQ_THREADS environment variable); reports are merged deterministically.
VerificationReport verify_identity_grid(const std::string& id, const IdentityGrid& grid);
VerificationReport verify_all(const IdentityGrid& grid);

// Diagnostic only: the ni+k+1 sum with its correction term read from the
// u-case table instead of the v-case table. Not part of the registry; kept
// to document why the v-reading is the one that verifies.
IdentityReport diagnose_sum_k1_u_reading(const IdentityGrid& grid);

// Diagnostics only: ID-L-MOD / ID-L-I1 with their correction terms exactly
// as displayed, without the tail colorings. They fail as soon as r or s
// exceeds 1, which documents why the registry carries the corrected forms.
IdentityReport diagnose_l_mod_literal_reading(const IdentityGrid& grid);
IdentityReport diagnose_l_i1_literal_reading(const IdentityGrid& grid);

// Specialized consequences that are not instances of a single registry
// identity: partial sums, the Jacobsthal product rule, Lucas/Fibonacci
// parity facts, the even/odd Lucas expansion, and the Padovan mod-2 period.
struct CorollaryReport {
    std::string name;
    long checked = 0;
    long failed = 0;
};

std::vector<CorollaryReport> verify_corollaries(long n_max, long m_max);

}  // namespace genseq
