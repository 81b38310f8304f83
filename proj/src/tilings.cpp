#include "genseq/tilings.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace genseq {

namespace {

long max_black_prefix(const Params& p) { return std::min(p.i, p.k) - 1; }

// Walks every sequence of rectangle kinds covering `cells`, IRect tried
// before KRect at each position. `kinds` is the shared DFS stack; `leaf`
// fires once per complete structure and may return false to stop the walk.
bool walk_kind_structures(const Params& p, long cells, std::vector<PieceKind>& kinds,
                          const std::function<bool(const std::vector<PieceKind>&)>& leaf) {
    if (cells == 0) return leaf(kinds);
    if (cells >= p.i) {
        kinds.push_back(PieceKind::IRect);
        bool keep = walk_kind_structures(p, cells - p.i, kinds, leaf);
        kinds.pop_back();
        if (!keep) return false;
    }
    if (cells >= p.k) {
        kinds.push_back(PieceKind::KRect);
        bool keep = walk_kind_structures(p, cells - p.k, kinds, leaf);
        kinds.pop_back();
        if (!keep) return false;
    }
    return true;
}

// Runs `leaf` for each (black prefix, kind structure) pair in enumeration
// order. The structure passed to `leaf` excludes the black squares.
bool walk_structures(const Params& p, long n,
                     const std::function<bool(long, const std::vector<PieceKind>&)>& leaf) {
    const long board = n + 1;
    std::vector<PieceKind> kinds;
    for (long b = 0; b <= max_black_prefix(p) && b <= board; ++b) {
        bool keep = walk_kind_structures(p, board - b, kinds,
                                         [&](const std::vector<PieceKind>& ks) { return leaf(b, ks); });
        if (!keep) return false;
    }
    return true;
}

Int structure_weight(const Params& p, const std::vector<PieceKind>& kinds) {
    unsigned long icount = 0, kcount = 0;
    for (PieceKind kind : kinds) (kind == PieceKind::IRect ? icount : kcount)++;
    return ipow(Int(p.r), icount) * ipow(Int(p.s), kcount);
}

void require_index(long n) {
    if (n < -1) throw std::domain_error("board index must be >= -1, got " + std::to_string(n));
}

}  // namespace

long piece_length(const Params& p, PieceKind kind) {
    switch (kind) {
        case PieceKind::BlackSquare: return 1;
        case PieceKind::IRect: return p.i;
        case PieceKind::KRect: return p.k;
    }
    return 0;
}

bool tiling_is_valid(const Params& p, long n, const Tiling& t) {
    if (t.board_len != n + 1) return false;
    long pos = 0;  // cells covered so far
    bool seen_rect = false;
    for (const Piece& piece : t.pieces) {
        switch (piece.kind) {
            case PieceKind::BlackSquare:
                // Occupies cell pos+1; allowed only in the first min(i,k)-1
                // cells, hence only before any rectangle.
                if (seen_rect || pos + 1 > max_black_prefix(p)) return false;
                if (piece.color != 0) return false;
                break;
            case PieceKind::IRect:
                if (piece.color < 1 || piece.color > p.r) return false;
                seen_rect = true;
                break;
            case PieceKind::KRect:
                if (piece.color < 1 || piece.color > p.s) return false;
                seen_rect = true;
                break;
        }
        pos += piece_length(p, piece.kind);
    }
    return pos == t.board_len;
}

void for_each_f_tiling(const Params& p, long n,
                       const std::function<bool(const Tiling&)>& visit) {
    require_index(n);
    walk_structures(p, n, [&](long blacks, const std::vector<PieceKind>& kinds) {
        Tiling t;
        t.board_len = n + 1;
        t.pieces.reserve(static_cast<std::size_t>(blacks) + kinds.size());
        for (long b = 0; b < blacks; ++b) t.pieces.push_back({PieceKind::BlackSquare, 0});
        for (PieceKind kind : kinds) t.pieces.push_back({kind, 1});

        // Odometer over the color vector, last piece fastest, so colors come
        // out in ascending lexicographic order.
        const std::size_t first_rect = static_cast<std::size_t>(blacks);
        while (true) {
            if (!visit(t)) return false;
            std::size_t at = t.pieces.size();
            while (at > first_rect) {
                --at;
                Piece& piece = t.pieces[at];
                long limit = piece.kind == PieceKind::IRect ? p.r : p.s;
                if (piece.color < limit) {
                    ++piece.color;
                    break;
                }
                piece.color = 1;
            }
            if (at == first_rect && (t.pieces.size() == first_rect ||
                                     t.pieces[first_rect].color == 1))
                break;  // wrapped around
        }
        return true;
    });
}

std::vector<Tiling> enumerate_f_tilings(const Params& p, long n, std::size_t limit) {
    std::vector<Tiling> out;
    for_each_f_tiling(p, n, [&](const Tiling& t) {
        out.push_back(t);
        return out.size() < limit;
    });
    return out;
}

Int count_f_tilings(const Params& p, long n) {
    require_index(n);
    Int total = 0;
    walk_structures(p, n, [&](long, const std::vector<PieceKind>& kinds) {
        total += structure_weight(p, kinds);
        return true;
    });
    return total;
}

bool is_type_l(const Params& p, long n, const Tiling& t) {
    if (p.k <= p.i) throw std::domain_error("type-L tilings require k > i");
    if (!tiling_is_valid(p, n, t)) throw std::invalid_argument("malformed tiling");
    if (n <= p.k - 2) return true;

    const long tail_start = p.k + (p.k - 1) * p.i - 1;
    if (n <= tail_start - 1) {
        return std::any_of(t.pieces.begin(), t.pieces.end(),
                           [](const Piece& pc) { return pc.kind == PieceKind::KRect; });
    }

    const auto& pieces = t.pieces;
    const long np = static_cast<long>(pieces.size());
    // Tail of k-1 i-rectangles.
    if (np >= p.k - 1) {
        bool all_i = true;
        for (long j = np - (p.k - 1); j < np; ++j) {
            if (pieces[static_cast<std::size_t>(j)].kind != PieceKind::IRect) all_i = false;
        }
        if (all_i) return true;
    }
    // Tail of k pieces: one k-rectangle among k-1 i-rectangles, the
    // k-rectangle not the earliest of them. (If it were earliest, the last
    // k-1 pieces would all be i-rectangles and the previous case applies.)
    if (np >= p.k) {
        long krects = 0, irects = 0;
        for (long j = np - p.k; j < np; ++j) {
            PieceKind kind = pieces[static_cast<std::size_t>(j)].kind;
            if (kind == PieceKind::KRect) ++krects;
            if (kind == PieceKind::IRect) ++irects;
        }
        if (krects == 1 && irects == p.k - 1 &&
            pieces[static_cast<std::size_t>(np - p.k)].kind != PieceKind::KRect)
            return true;
    }
    return false;
}

Int count_l_tilings(const Params& p, long n) {
    if (p.k <= p.i) throw std::domain_error("type-L tilings require k > i");
    require_index(n);
    Int total = 0;
    walk_structures(p, n, [&](long blacks, const std::vector<PieceKind>& kinds) {
        // The tail rules only look at piece kinds, so classify the structure
        // once (colors set to 1) and weight by the color choices.
        Tiling t;
        t.board_len = n + 1;
        for (long b = 0; b < blacks; ++b) t.pieces.push_back({PieceKind::BlackSquare, 0});
        for (PieceKind kind : kinds) t.pieces.push_back({kind, 1});
        if (is_type_l(p, n, t)) total += structure_weight(p, kinds);
        return true;
    });
    return total;
}

bool is_breakable_at(const Params& p, const Tiling& t, long m) {
    if (m < 1 || m > t.board_len) {
        throw std::invalid_argument("break cell out of range: " + std::to_string(m));
    }
    long covered = 0;
    for (const Piece& piece : t.pieces) {
        if (covered == m) return true;
        covered += piece_length(p, piece.kind);
        if (covered > m) return false;
    }
    return covered == m;
}

Int count_color_decompositions(const Params& p, long n) {
    if (p.k <= p.i) throw std::domain_error("color decompositions require k > i");
    if (n < p.i - 1) {
        throw std::domain_error("color decompositions require n >= i-1, got n=" +
                                std::to_string(n));
    }
    // DFS from element 1 upward. At each point either stop (the uncovered
    // suffix is the remainder, allowed when its size is at most i-1) or
    // place an i-block or a k-block of consecutive elements.
    Int total = 0;
    std::function<void(long, unsigned long, unsigned long)> rec =
        [&](long remaining, unsigned long iblocks, unsigned long kblocks) {
            if (remaining <= p.i - 1) {
                total += ipow(Int(p.r), iblocks) * ipow(Int(p.s), kblocks);
            }
            if (remaining >= p.i) rec(remaining - p.i, iblocks + 1, kblocks);
            if (remaining >= p.k) rec(remaining - p.k, iblocks, kblocks + 1);
        };
    rec(n + 1, 0, 0);
    return total;
}

std::string render_tiling(const Tiling& t) {
    std::string out;
    for (const Piece& piece : t.pieces) {
        switch (piece.kind) {
            case PieceKind::BlackSquare: out += '#'; break;
            case PieceKind::IRect: out += "[i:" + std::to_string(piece.color) + "]"; break;
            case PieceKind::KRect: out += "[k:" + std::to_string(piece.color) + "]"; break;
        }
    }
    return out;
}

}  // namespace genseq
