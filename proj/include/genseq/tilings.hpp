#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "genseq/int.hpp"
#include "genseq/params.hpp"

namespace genseq {

// Exhaustive enumeration of board tilings. This module is the ground-truth
// oracle for the rest of the library: nothing here uses the recurrence.
//
// A board of length n+1 is tiled left to right with 1x1 black squares
// (confined to the first min(i,k)-1 positions, so they form a prefix),
// 1xi rectangles in one of r colors, and 1xk rectangles in one of s colors.

enum class PieceKind { BlackSquare, IRect, KRect };

struct Piece {
    PieceKind kind = PieceKind::BlackSquare;
    long color = 0;  // 1..r for IRect, 1..s for KRect, 0 for black squares
};

struct Tiling {
    std::vector<Piece> pieces;  // left to right
    long board_len = 0;         // n + 1
};

long piece_length(const Params& p, PieceKind kind);

// True iff t is a well-formed tiling of an (n+1)-board for p: lengths sum to
// the board, black squares only in the first min(i,k)-1 cells, colors within
// bounds.
bool tiling_is_valid(const Params& p, long n, const Tiling& t);

// Visits every tiling exactly once, in deterministic order: black-prefix
// length ascending, then piece-kind sequences lexicographically with IRect
// before KRect, then color vectors ascending. Return false from the visitor
// to stop early. n = -1 yields exactly the empty tiling.
void for_each_f_tiling(const Params& p, long n,
                       const std::function<bool(const Tiling&)>& visit);

// Materializes at most `limit` tilings in enumeration order.
std::vector<Tiling> enumerate_f_tilings(const Params& p, long n,
                                        std::size_t limit = static_cast<std::size_t>(-1));

// Number of tilings, computed by walking the uncolored piece structures and
// weighting each with r^(#i-rects) * s^(#k-rects). Never materializes the
// colored stream.
Int count_f_tilings(const Params& p, long n);

// Tail classification distinguishing the L-counted tilings (k > i):
//   n <= k-2:               every tiling qualifies
//   k-1 <= n <= k+(k-1)i-2: the tiling contains at least one k-rectangle
//   n >= k+(k-1)i-1:        the last k-1 pieces are all i-rectangles, or the
//                           last k pieces are one k-rectangle among k-1
//                           i-rectangles with the k-rectangle not the
//                           earliest of them (between two or after all).
// Throws std::invalid_argument on a malformed tiling.
bool is_type_l(const Params& p, long n, const Tiling& t);

// Weighted count of the tilings selected by is_type_l.
Int count_l_tilings(const Params& p, long n);

// True iff some prefix of pieces covers exactly cells 1..m. Requires
// 1 <= m <= board_len.
bool is_breakable_at(const Params& p, const Tiling& t, long m);

// Counts the color decompositions of {1..n+1} with trailing remainder of
// size at most i-1: ordered blocks of consecutive integers, sizes i (one of
// r colors) or k (one of s colors), built from element 1 upward. A second
// independent oracle; requires k > i >= 1 and n >= i-1.
Int count_color_decompositions(const Params& p, long n);

// One-line ASCII rendering: '#' per black square, then "[i:c]" / "[k:c]"
// per rectangle of color c. Empty tiling renders as "".
std::string render_tiling(const Tiling& t);

}  // namespace genseq
