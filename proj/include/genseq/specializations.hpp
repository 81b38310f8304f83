#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genseq/int.hpp"
#include "genseq/params.hpp"

namespace genseq {

enum class SeqKind { F, L };

// A named integer sequence realized as a parameter tuple plus an index
// offset: external index m maps to internal index n = m + offset. The
// anchors are small (m, value) pairs that pin the offset; they are asserted
// when the table is first built.
struct NamedSequence {
    std::string name;
    std::string oeis_id;
    Params params;
    SeqKind kind = SeqKind::F;
    long offset = 0;
    long min_index = 0;  // smallest external index the mapping covers
    std::vector<std::pair<long, long>> anchors;
};

// The built-in table: Fibonacci, Lucas, Pell, Jacobsthal, Padovan, Narayana,
// A003269.
const std::vector<NamedSequence>& named_sequences();

// Lookup by name (case-insensitive) or OEIS id; nullptr when unknown.
const NamedSequence* find_sequence(std::string_view name);

// Value of the named sequence at external index m. Throws
// std::invalid_argument for unknown names and std::out_of_range for m below
// the sequence's minimum index.
Int named_value(const std::string& name, long m);

// Parameter presets for the parametric families; each asserts its stated
// initial values on construction.
Params preset_two_color_pair(long a, long b);       // (1,2,a,b): F(-1)=1, F(0)=a
Params preset_one_long_step(long k, long t);        // (1,k,1,t): F(n)=1 for n=-1..k-2
Params preset_k_fibonacci(long k);                  // (1,2,k,1): F(-1)=1, F(0)=k
Params preset_distance_one(long k);                 // (1,k,1,1): all-ones head
Params preset_distance_two(long k);                 // (2,k,1,1), k >= 2
Params preset_distance_k_minus_one(long k);         // (k-1,k,1,1), k >= 2
Params preset_k_fibonacci_r(long k, long r);        // (r,2,k,1): F(n)=1 for n=-1..r-2
Params preset_k_jacobsthal(long k);                 // (1,2,k,2): F(-1)=1, F(0)=k
Params preset_k_pell(long k);                       // (1,2,2,k): F(-1)=1, F(0)=2
Params preset_one_gap(long c);                      // (1,c,1,1): all-ones head

// Plain-text reference data: one "index value" pair per line, '#' comments
// and blank lines ignored, indices strictly increasing.
struct BFile {
    std::vector<std::pair<long, Int>> entries;

    bool covers(long index) const;
    const Int& at(long index) const;
};

// Throws std::invalid_argument with the 1-based line number on malformed
// input.
BFile parse_bfile(std::string_view text);

// Reads and parses a b-file from disk.
BFile load_bfile(const std::string& path);

struct CompareMismatch {
    long index = 0;
    Int expected;
    Int actual;
};

struct CompareResult {
    long checked = 0;
    long failed = 0;
    std::vector<CompareMismatch> mismatches;  // capped at 16
};

// Compares named_value(name, m) against the reference for m = lo..hi.
// Throws std::out_of_range if the reference does not cover the range or the
// range starts below the sequence's minimum index.
CompareResult compare_reference(const std::string& name, const BFile& ref, long lo, long hi);

}  // namespace genseq
