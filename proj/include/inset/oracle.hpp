#pragma once

#include <inset/block_profile.hpp>
#include <inset/count.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace inset::oracle {

// Brute-force enumerators. Each one recounts a configuration directly from
// its definition, with no shared code path into the formula modules, and
// serves as ground truth for them. Budgets are hard preconditions: exceeding
// one raises budget_error instead of returning a truncated count.

inline constexpr long long kInsetUniverseBudget = 24;   // enumerate_insets
inline constexpr long long kMatrixCellBudget = 20;      // enumerate_matrices
inline constexpr long long kDiophantineDimBudget = 6;   // enumerate_diophantine
inline constexpr long long kDiophantineRadiusBudget = 8;
inline constexpr long long kLatticePathBudget = 10;     // enumerate_lattice_paths
inline constexpr long long kWeakCompSumBudget = 8;      // enumerate_weak_compositions
inline constexpr long long kWeakCompZeroBudget = 6;
inline constexpr long long kChessBoardBudget = 12;      // enumerate_chess_moves

namespace detail {

// Applies fn to every `size`-element subset of a `universe`-bit ground set,
// as a bitmask, in increasing mask order (Gosper's hack).
template <typename Fn>
void for_each_subset_mask(int universe, int size, Fn&& fn) {
    if (size < 0 || size > universe) return;
    if (size == 0) {
        fn(0ull);
        return;
    }
    const std::uint64_t limit = universe < 64 ? (1ull << universe) : ~0ull;
    std::uint64_t mask = (1ull << size) - 1;
    while (mask < limit) {
        fn(mask);
        const std::uint64_t lowest = mask & (~mask + 1);
        const std::uint64_t ripple = mask + lowest;
        if (ripple >= limit) break;
        mask = ripple | (((mask ^ ripple) >> 2) / lowest);
    }
}

}  // namespace detail

// Counts (n+k)-subsets of the blocked universe that intersect every main
// block, by generating each subset. Budget: |X| <= 24.
inline Count enumerate_insets(const InsetProblem& p) {
    const long long universe = p.universe_size();
    if (universe > kInsetUniverseBudget) {
        throw budget_error("enumerate_insets: universe size " + std::to_string(universe) +
                           " exceeds budget " + std::to_string(kInsetUniverseBudget) +
                           "; use the formula route");
    }
    const long long r = p.subset_size();
    if (r < 0 || r > universe) return 0;

    // Universe layout: block elements first (in canonical profile order),
    // then the additional block.
    std::vector<std::uint64_t> block_masks;
    int offset = 0;
    for (long long q : p.profile) {
        std::uint64_t mask = ((1ull << q) - 1) << offset;
        block_masks.push_back(mask);
        offset += static_cast<int>(q);
    }

    Count count = 0;
    detail::for_each_subset_mask(static_cast<int>(universe), static_cast<int>(r),
                                 [&](std::uint64_t subset) {
        for (std::uint64_t bm : block_masks) {
            if ((subset & bm) == 0) return;
        }
        ++count;
    });
    return count;
}

inline Count enumerate_insets(long long m, const BlockProfile& profile, long long k) {
    return enumerate_insets(InsetProblem(m, profile, k));
}

// Counts (0,1)-matrices of order q x n with n+k ones and no zero columns;
// with forbid_zero_rows also no zero rows (the M(n,k,q) objects).
// Budget: q*n <= 20 cells.
inline Count enumerate_matrices(long long n, long long k, long long q,
                                bool forbid_zero_rows) {
    if (n < 1 || q < 1) {
        throw std::domain_error("enumerate_matrices: need n >= 1 and q >= 1");
    }
    const long long cells = q * n;
    if (cells > kMatrixCellBudget) {
        throw budget_error("enumerate_matrices: " + std::to_string(cells) +
                           " cells exceed budget " + std::to_string(kMatrixCellBudget));
    }
    const long long ones = n + k;
    if (ones < 0 || ones > cells) return 0;

    // Cell (row r, column c) is bit c*q + r, so column masks are contiguous.
    std::vector<std::uint64_t> col_masks, row_masks;
    for (long long c = 0; c < n; ++c) {
        col_masks.push_back(((1ull << q) - 1) << (c * q));
    }
    for (long long r = 0; r < q; ++r) {
        std::uint64_t mask = 0;
        for (long long c = 0; c < n; ++c) mask |= 1ull << (c * q + r);
        row_masks.push_back(mask);
    }

    Count count = 0;
    detail::for_each_subset_mask(static_cast<int>(cells), static_cast<int>(ones),
                                 [&](std::uint64_t placement) {
        for (std::uint64_t cm : col_masks) {
            if ((placement & cm) == 0) return;
        }
        if (forbid_zero_rows) {
            for (std::uint64_t rm : row_masks) {
                if ((placement & rm) == 0) return;
            }
        }
        ++count;
    });
    return count;
}

enum class DiophantineMode { ball, sphere };

// Counts integer vectors with |x_1| + ... + |x_n| <= m (ball) or = m
// (sphere), by recursive generation. Budget: n <= 6, m <= 8.
inline Count enumerate_diophantine(long long m, long long n, DiophantineMode mode) {
    if (m < 0 || n < 1) {
        throw std::domain_error("enumerate_diophantine: need m >= 0 and n >= 1");
    }
    if (n > kDiophantineDimBudget || m > kDiophantineRadiusBudget) {
        throw budget_error("enumerate_diophantine: n <= " +
                           std::to_string(kDiophantineDimBudget) + " and m <= " +
                           std::to_string(kDiophantineRadiusBudget) + " required");
    }
    Count count = 0;
    auto rec = [&](auto&& self, long long dim, long long used) -> void {
        if (dim == n) {
            if (mode == DiophantineMode::ball || used == m) ++count;
            return;
        }
        const long long room = m - used;
        for (long long v = -room; v <= room; ++v) {
            self(self, dim + 1, used + (v < 0 ? -v : v));
        }
    };
    rec(rec, 0, 0);
    return count;
}

// Counts monotone lattice paths (0,0) -> (n,n) with steps E=(1,0), N=(0,1)
// that touch or cross the line x - y = i. Steps change x - y by +-1, so
// crossing implies touching; a prefix check suffices.
// Budget: n <= 10. The i = 0 instance is excluded: every path meets the
// diagonal at the origin, which degenerates the count to all C(2n, n) paths.
inline Count enumerate_lattice_paths(long long n, long long i) {
    if (n < 1 || n > kLatticePathBudget) {
        throw budget_error("enumerate_lattice_paths: need 1 <= n <= " +
                           std::to_string(kLatticePathBudget));
    }
    if (i < 1 || i > n) {
        throw std::domain_error(
            "enumerate_lattice_paths: need 1 <= i <= n (i = 0 is excluded: every "
            "path touches x - y = 0 at the origin)");
    }
    Count count = 0;
    // Bit set in the mask = step is E; exactly n of 2n steps are E.
    detail::for_each_subset_mask(static_cast<int>(2 * n), static_cast<int>(n),
                                 [&](std::uint64_t steps) {
        long long diff = 0;  // x - y after each step
        for (long long s = 0; s < 2 * n; ++s) {
            diff += (steps >> s & 1ull) ? 1 : -1;
            if (diff == i) {
                ++count;
                return;
            }
        }
    });
    return count;
}

// Counts weak compositions of r with exactly s zero parts, by generating all
// nonnegative tuples of each feasible length. A composition of r >= 1 with s
// zeros has between s+1 and r+s parts. Budget: r <= 8, s <= 6.
inline Count enumerate_weak_compositions(long long r, long long s) {
    if (r < 1 || s < 0) {
        throw std::domain_error("enumerate_weak_compositions: need r >= 1 and s >= 0");
    }
    if (r > kWeakCompSumBudget || s > kWeakCompZeroBudget) {
        throw budget_error("enumerate_weak_compositions: r <= " +
                           std::to_string(kWeakCompSumBudget) + " and s <= " +
                           std::to_string(kWeakCompZeroBudget) + " required");
    }
    Count count = 0;
    auto rec = [&](auto&& self, long long parts_left, long long sum_left,
                   long long zeros_left) -> void {
        if (parts_left == 0) {
            if (sum_left == 0 && zeros_left == 0) ++count;
            return;
        }
        for (long long part = 0; part <= sum_left; ++part) {
            const long long z = zeros_left - (part == 0 ? 1 : 0);
            if (z < 0) continue;
            self(self, parts_left - 1, sum_left - part, z);
        }
    };
    for (long long len = s + 1; len <= r + s; ++len) {
        rec(rec, len, r, s);
    }
    return count;
}

enum class ChessPiece { rook, bishop, queen };

// Counts legal single moves of a piece on an empty n x n board, square by
// square. Moves are ordered (from, to) pairs: a move and its reverse count
// separately. Budget: 2 <= n <= 12.
inline Count enumerate_chess_moves(ChessPiece piece, long long n) {
    if (n < 2 || n > kChessBoardBudget) {
        throw budget_error("enumerate_chess_moves: need 2 <= n <= " +
                           std::to_string(kChessBoardBudget));
    }
    Count count = 0;
    for (long long r1 = 0; r1 < n; ++r1)
        for (long long c1 = 0; c1 < n; ++c1)
            for (long long r2 = 0; r2 < n; ++r2)
                for (long long c2 = 0; c2 < n; ++c2) {
                    if (r1 == r2 && c1 == c2) continue;
                    const bool rook_move = (r1 == r2) || (c1 == c2);
                    const long long dr = r1 < r2 ? r2 - r1 : r1 - r2;
                    const long long dc = c1 < c2 ? c2 - c1 : c1 - c2;
                    const bool bishop_move = dr == dc;
                    switch (piece) {
                        case ChessPiece::rook:
                            if (rook_move) ++count;
                            break;
                        case ChessPiece::bishop:
                            if (bishop_move) ++count;
                            break;
                        case ChessPiece::queen:
                            if (rook_move || bishop_move) ++count;
                            break;
                    }
                }
    return count;
}

// ---------------------------------------------------------------------------
// Umbrella dispatcher over every enumerable configuration family.

enum class OracleFamily {
    insets,
    zero_one_matrices,
    diophantine_ball,
    diophantine_sphere,
    lattice_paths_touching,
    weak_compositions,
    chess_moves,
    subset_chain_sum,
    squares_in_square,
    colorings_3,
    composition_parts,
    square_submatrices,
    divisor_count,
};

inline const char* to_string(OracleFamily f) {
    switch (f) {
        case OracleFamily::insets: return "insets";
        case OracleFamily::zero_one_matrices: return "zero-one-matrices";
        case OracleFamily::diophantine_ball: return "diophantine-ball";
        case OracleFamily::diophantine_sphere: return "diophantine-sphere";
        case OracleFamily::lattice_paths_touching: return "lattice-paths-touching";
        case OracleFamily::weak_compositions: return "weak-compositions";
        case OracleFamily::chess_moves: return "chess-moves";
        case OracleFamily::subset_chain_sum: return "subset-chain-sum";
        case OracleFamily::squares_in_square: return "squares-in-square";
        case OracleFamily::colorings_3: return "colorings-3";
        case OracleFamily::composition_parts: return "composition-parts";
        case OracleFamily::square_submatrices: return "square-submatrices";
        case OracleFamily::divisor_count: return "divisor-count";
    }
    return "?";
}

// One enumeration request. Parameter layout per family:
//   insets                  {m, k, q_1, ..., q_n}
//   zero-one-matrices       {n, k, q, forbid_zero_rows in {0,1}}
//   diophantine-ball/sphere {m, n}
//   lattice-paths-touching  {n, i}
//   weak-compositions       {r, s}
//   chess-moves             {piece: 0 rook, 1 bishop, 2 queen; n}
//   squares-in-square       {m, q}
//   subset-chain-sum, colorings-3, composition-parts,
//   square-submatrices, divisor-count                  {n}
struct ConfigInstance {
    OracleFamily family;
    std::vector<long long> params;
};

namespace detail {

inline void need_params(const ConfigInstance& c, std::size_t arity) {
    if (c.params.size() != arity) {
        throw std::domain_error(std::string("enumerate_config: family ") +
                                to_string(c.family) + " takes " +
                                std::to_string(arity) + " parameter(s), got " +
                                std::to_string(c.params.size()));
    }
}

// Sum of |Y| - |X| over all chains X subset of Y subset of [n].
inline Count chain_sum_direct(long long n) {
    if (n < 2 || n > 12) {
        throw budget_error("subset-chain-sum: need 2 <= n <= 12");
    }
    Count total = 0;
    for (std::uint64_t y = 0; y < (1ull << n); ++y) {
        // Walk all subsets x of y.
        std::uint64_t x = y;
        while (true) {
            total += __builtin_popcountll(y) - __builtin_popcountll(x);
            if (x == 0) break;
            x = (x - 1) & y;
        }
    }
    return total;
}

// Colorings of exactly n-1 of n points on a line with three colors: every
// assignment point -> {uncolored, 1, 2, 3} with exactly one uncolored point.
inline Count colorings3_direct(long long n) {
    if (n < 2 || n > 10) {
        throw budget_error("colorings-3: need 2 <= n <= 10");
    }
    Count total = 0;
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, long long point, long long uncolored) -> void {
        if (uncolored > 1) return;
        if (point == n) {
            if (uncolored == 1) ++total;
            return;
        }
        for (int c = 0; c <= 3; ++c) {
            color[static_cast<std::size_t>(point)] = c;
            self(self, point + 1, uncolored + (c == 0 ? 1 : 0));
        }
    };
    rec(rec, 0, 0);
    return total;
}

// Total number of parts over all compositions of n+1.
inline Count composition_parts_direct(long long n) {
    if (n < 0 || n > 16) {
        throw budget_error("composition-parts: need 0 <= n <= 16");
    }
    const long long target = n + 1;
    Count total = 0;
    auto rec = [&](auto&& self, long long left, long long parts) -> void {
        if (left == 0) {
            total += parts;
            return;
        }
        for (long long part = 1; part <= left; ++part) {
            self(self, left - part, parts + 1);
        }
    };
    rec(rec, target, 0);
    return total;
}

// Square submatrices of an n x n matrix: pairs of equal-size nonempty row and
// column subsets.
inline Count square_submatrices_direct(long long n) {
    if (n < 2 || n > 10) {
        throw budget_error("square-submatrices: need 2 <= n <= 10");
    }
    Count total = 0;
    for (std::uint64_t rows = 1; rows < (1ull << n); ++rows) {
        const int size = __builtin_popcountll(rows);
        for (std::uint64_t cols = 1; cols < (1ull << n); ++cols) {
            if (__builtin_popcountll(cols) == size) ++total;
        }
    }
    return total;
}

// Axis-aligned lattice squares of side w, 1 <= w <= q, with corners inside
// the square [1, m+q]^2.
inline Count squares_in_square_direct(long long m, long long q) {
    if (m < 0 || q < 1 || m + q > 64) {
        throw budget_error("squares-in-square: need m >= 0, q >= 1, m+q <= 64");
    }
    const long long bound = m + q;
    Count total = 0;
    for (long long w = 1; w <= q; ++w)
        for (long long u = 1; u + w <= bound; ++u)
            for (long long v = 1; v + w <= bound; ++v) ++total;
    return total;
}

// Divisors of s^(n-1) for s = p1 * p2 * p3^2: walk the exponent box
// (n-1, n-1, 2n-2). The count does not depend on the primes themselves.
inline Count divisor_count_direct(long long n) {
    if (n < 1 || n > 64) {
        throw budget_error("divisor-count: need 1 <= n <= 64");
    }
    Count total = 0;
    for (long long e1 = 0; e1 <= n - 1; ++e1)
        for (long long e2 = 0; e2 <= n - 1; ++e2)
            for (long long e3 = 0; e3 <= 2 * (n - 1); ++e3) ++total;
    return total;
}

}  // namespace detail

// Counts one configuration directly from its definition.
inline Count enumerate_config(const ConfigInstance& c) {
    using detail::need_params;
    switch (c.family) {
        case OracleFamily::insets: {
            if (c.params.size() < 2) {
                throw std::domain_error("enumerate_config: insets needs {m, k, q...}");
            }
            std::vector<long long> sizes(c.params.begin() + 2, c.params.end());
            return enumerate_insets(
                InsetProblem(c.params[0], BlockProfile(sizes), c.params[1]));
        }
        case OracleFamily::zero_one_matrices:
            need_params(c, 4);
            return enumerate_matrices(c.params[0], c.params[1], c.params[2],
                                      c.params[3] != 0);
        case OracleFamily::diophantine_ball:
            need_params(c, 2);
            return enumerate_diophantine(c.params[0], c.params[1], DiophantineMode::ball);
        case OracleFamily::diophantine_sphere:
            need_params(c, 2);
            return enumerate_diophantine(c.params[0], c.params[1], DiophantineMode::sphere);
        case OracleFamily::lattice_paths_touching:
            need_params(c, 2);
            return enumerate_lattice_paths(c.params[0], c.params[1]);
        case OracleFamily::weak_compositions:
            need_params(c, 2);
            return enumerate_weak_compositions(c.params[0], c.params[1]);
        case OracleFamily::chess_moves: {
            need_params(c, 2);
            if (c.params[0] < 0 || c.params[0] > 2) {
                throw std::domain_error("enumerate_config: chess piece must be 0, 1 or 2");
            }
            return enumerate_chess_moves(static_cast<ChessPiece>(c.params[0]), c.params[1]);
        }
        case OracleFamily::subset_chain_sum:
            need_params(c, 1);
            return detail::chain_sum_direct(c.params[0]);
        case OracleFamily::squares_in_square:
            need_params(c, 2);
            return detail::squares_in_square_direct(c.params[0], c.params[1]);
        case OracleFamily::colorings_3:
            need_params(c, 1);
            return detail::colorings3_direct(c.params[0]);
        case OracleFamily::composition_parts:
            need_params(c, 1);
            return detail::composition_parts_direct(c.params[0]);
        case OracleFamily::square_submatrices:
            need_params(c, 1);
            return detail::square_submatrices_direct(c.params[0]);
        case OracleFamily::divisor_count:
            need_params(c, 1);
            return detail::divisor_count_direct(c.params[0]);
    }
    throw std::domain_error("enumerate_config: unknown family");
}

// ---------------------------------------------------------------------------
// Reference generators for the named-sequence bridges. Like the enumerators
// above, these recount objects from their definitions and never touch the
// inset formulas.

// Lattice paths (0,0) -> (m,n) with steps (1,0), (0,1), (1,1), walked one by
// one (no memoization). Budget: m, n <= 8.
inline Count delannoy_paths(long long m, long long n) {
    if (m < 0 || n < 0) {
        throw std::domain_error("delannoy_paths: need m, n >= 0");
    }
    if (m > 8 || n > 8) {
        throw budget_error("delannoy_paths: m, n <= 8 required");
    }
    auto rec = [](auto&& self, long long x, long long y) -> Count {
        if (x == 0 && y == 0) return 1;
        Count total = 0;
        if (x > 0) total += self(self, x - 1, y);
        if (y > 0) total += self(self, x, y - 1);
        if (x > 0 && y > 0) total += self(self, x - 1, y - 1);
        return total;
    };
    return rec(rec, m, n);
}

// Ballot sequences of length 2n: +-1 steps, all prefix sums >= 0, total 0.
// Budget: n <= 12.
inline Count catalan_ballot(long long n) {
    if (n < 0) {
        throw std::domain_error("catalan_ballot: need n >= 0");
    }
    if (n > 12) {
        throw budget_error("catalan_ballot: n <= 12 required");
    }
    auto rec = [n](auto&& self, long long step, long long height) -> Count {
        if (height < 0) return 0;
        if (step == 2 * n) return height == 0 ? 1 : 0;
        if (height > 2 * n - step) return 0;  // cannot return to 0
        return self(self, step + 1, height + 1) + self(self, step + 1, height - 1);
    };
    return rec(rec, 0, 0);
}

// Coefficient vector of the Chebyshev polynomial of the second kind U_n, by
// the three-term recurrence U_0 = 1, U_1 = 2x, U_{n+1} = 2x U_n - U_{n-1}.
// Entry [k] is the coefficient of x^k.
inline std::vector<Integer> chebyshev_u_coefficients(long long n) {
    if (n < 0) {
        throw std::domain_error("chebyshev_u_coefficients: need n >= 0");
    }
    std::vector<Integer> prev = {1};      // U_0
    if (n == 0) return prev;
    std::vector<Integer> cur = {0, 2};    // U_1
    for (long long i = 2; i <= n; ++i) {
        std::vector<Integer> next(static_cast<std::size_t>(i) + 1, 0);
        for (std::size_t k = 0; k < cur.size(); ++k) {
            next[k + 1] += 2 * cur[k];
        }
        for (std::size_t k = 0; k < prev.size(); ++k) {
            next[k] -= prev[k];
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Sulanke numbers straight from their defining recurrence:
// s(0,0) = 1, s(n,k) = 0 for n < 0 or k < 0,
// s(n,k) = s(n,k-1) + s(n-1,k)   if n+k even,
// s(n,k) = s(n,k-1) + 2 s(n-1,k) if n+k odd.
inline Count sulanke_by_recurrence(long long n, long long k) {
    if (n < 0 || k < 0) return 0;
    const std::size_t rows = static_cast<std::size_t>(n) + 1;
    const std::size_t cols = static_cast<std::size_t>(k) + 1;
    std::vector<std::vector<Count>> s(rows, std::vector<Count>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (i == 0 && j == 0) {
                s[i][j] = 1;
                continue;
            }
            Count left = j > 0 ? s[i][j - 1] : Count(0);
            Count up = i > 0 ? s[i - 1][j] : Count(0);
            if ((i + j) % 2 == 0) {
                s[i][j] = left + up;
            } else {
                s[i][j] = left + 2 * up;
            }
        }
    }
    return s[rows - 1][cols - 1];
}

// Fibonomial coefficient C(q+2, 3)_F = F_{q+2} F_{q+1} F_q / (F_1 F_2 F_3),
// from a local Fibonacci loop.
inline Count fibonomial_column3(long long q) {
    if (q < 1) {
        throw std::domain_error("fibonomial_column3: need q >= 1");
    }
    auto fib = [](long long i) {
        Count a = 0, b = 1;
        for (long long j = 0; j < i; ++j) {
            Count next = a + b;
            a = b;
            b = next;
        }
        return a;  // F_i with F_0 = 0, F_1 = 1
    };
    Count numerator = fib(q + 2) * fib(q + 1) * fib(q);
    if (numerator % 2 != 0) {
        throw std::logic_error("fibonomial_column3: odd numerator");
    }
    return numerator / 2;  // F_1 F_2 F_3 = 2
}

}  // namespace inset::oracle
