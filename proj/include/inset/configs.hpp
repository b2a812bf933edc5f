#pragma once

#include <inset/core.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace inset::configs {

// Formula-side counters for the counted configurations. Each family reduces
// to one inset evaluation and is mirrored by a dedicated enumeration in the
// oracle module.

enum class ConfigFamily {
    square_submatrices,
    paths_touching,
    squares_in_square,
    divisor_count,
    composition_parts,
    colorings_3,
    chain_sum,
    weak_compositions,
    rook_moves,
    bishop_moves,
    queen_moves,
};

inline const char* to_string(ConfigFamily f) {
    switch (f) {
        case ConfigFamily::square_submatrices: return "square-submatrices";
        case ConfigFamily::paths_touching: return "paths-touching";
        case ConfigFamily::squares_in_square: return "squares-in-square";
        case ConfigFamily::divisor_count: return "divisor-count";
        case ConfigFamily::composition_parts: return "composition-parts";
        case ConfigFamily::colorings_3: return "colorings-3";
        case ConfigFamily::chain_sum: return "chain-sum";
        case ConfigFamily::weak_compositions: return "weak-compositions";
        case ConfigFamily::rook_moves: return "rook-moves";
        case ConfigFamily::bishop_moves: return "bishop-moves";
        case ConfigFamily::queen_moves: return "queen-moves";
    }
    return "?";
}

inline std::optional<ConfigFamily> parse_config_family(std::string_view name) {
    for (int i = 0; i <= static_cast<int>(ConfigFamily::queen_moves); ++i) {
        auto f = static_cast<ConfigFamily>(i);
        if (name == to_string(f)) return f;
    }
    return std::nullopt;
}

namespace detail {

inline void need_arity(ConfigFamily f, const std::vector<long long>& params,
                       std::size_t arity) {
    if (params.size() != arity) {
        throw std::domain_error(std::string("config_count: family ") + to_string(f) +
                                " takes " + std::to_string(arity) +
                                " parameter(s), got " + std::to_string(params.size()));
    }
}

inline void need(bool condition, ConfigFamily f, const char* what) {
    if (!condition) {
        throw std::domain_error(std::string("config_count: ") + to_string(f) + ": " + what);
    }
}

}  // namespace detail

// Number of weak compositions of r with exactly s zero parts, cw(r, s), as
// the (s+1)-fold convolution of the composition counts c(0) = 1,
// c(j) = 2^(j-1). This is an independent route to the same numbers as
// config_count(weak-compositions); the suites compare the two.
inline Count weak_composition_convolution(long long r, long long s) {
    if (r < 1 || s < 1) {
        throw std::domain_error("weak_composition_convolution: need r >= 1 and s >= 1");
    }
    auto c = [](long long j) { return j == 0 ? Count(1) : pow2(j - 1); };
    // cw(r, 0) = c(r); build upward via cw(r, t) = sum_j c(j) cw(r-j, t-1).
    std::vector<Count> prev(static_cast<std::size_t>(r) + 1);
    for (long long v = 0; v <= r; ++v) prev[static_cast<std::size_t>(v)] = c(v);
    for (long long t = 1; t <= s; ++t) {
        std::vector<Count> cur(static_cast<std::size_t>(r) + 1, 0);
        for (long long v = 0; v <= r; ++v) {
            for (long long j = 0; j <= v; ++j) {
                cur[static_cast<std::size_t>(v)] +=
                    c(j) * prev[static_cast<std::size_t>(v - j)];
            }
        }
        prev = std::move(cur);
    }
    return prev[static_cast<std::size_t>(r)];
}

// One configuration count. Parameter layout (and inset reduction):
//   square-submatrices {n}:   {n,1 | n-1,{n}}, n >= 2
//   paths-touching {n,i}:     {n,1 | n+i-1,{n}}, n >= 1, i >= 1
//   squares-in-square {m,q}:  {m,2 | 2,{2,q}}, m >= 0, q >= 1
//   divisor-count {n}:        {n,2 | 1,{n,n}}, n >= 1
//   composition-parts {n}:    {1,n | 1,2}, n >= 0
//   colorings-3 {n}:          {1,n-1 | 1,3}, n >= 2
//   chain-sum {n}:            {1,n-1 | 1,3}, n >= 2
//   weak-compositions {r,s}:  {s+1,r-1 | s,2}, r >= 1, s >= 0
//   rook-moves {n}:           {n-1,2 | 1,{n,n}}, n >= 2
//   bishop-moves {n}:         {1,n | n-2,2}, n >= 2
//   queen-moves {n}:          rook-moves + bishop-moves, n >= 2
// chain-sum and colorings-3 are distinct claims with distinct oracles even
// though they share one reduction.
inline Count config_count(ConfigFamily f, const std::vector<long long>& params) {
    using detail::need;
    using detail::need_arity;
    switch (f) {
        case ConfigFamily::square_submatrices: {
            need_arity(f, params, 1);
            const long long n = params[0];
            need(n >= 2, f, "need n >= 2");
            return inset_count(n, BlockProfile{n}, n - 1);
        }
        case ConfigFamily::paths_touching: {
            need_arity(f, params, 2);
            const long long n = params[0], i = params[1];
            need(n >= 1, f, "need n >= 1");
            need(i >= 1, f,
                 "need i >= 1 (i = 0 is excluded: every path touches x - y = 0 at the "
                 "origin)");
            return inset_count(n, BlockProfile{n}, n + i - 1);
        }
        case ConfigFamily::squares_in_square: {
            need_arity(f, params, 2);
            const long long m = params[0], q = params[1];
            need(m >= 0 && q >= 1, f, "need m >= 0 and q >= 1");
            return inset_count(m, BlockProfile{2, q}, 2);
        }
        case ConfigFamily::divisor_count: {
            need_arity(f, params, 1);
            const long long n = params[0];
            need(n >= 1, f, "need n >= 1");
            return inset_count(n, BlockProfile{n, n}, 1);
        }
        case ConfigFamily::composition_parts: {
            need_arity(f, params, 1);
            const long long n = params[0];
            need(n >= 0, f, "need n >= 0");
            return inset_count(1, BlockProfile::uniform(n, 2), 1);
        }
        case ConfigFamily::colorings_3: {
            need_arity(f, params, 1);
            const long long n = params[0];
            need(n >= 2, f, "need n >= 2");
            return inset_count(1, BlockProfile::uniform(n - 1, 3), 1);
        }
        case ConfigFamily::chain_sum: {
            need_arity(f, params, 1);
            const long long n = params[0];
            need(n >= 2, f, "need n >= 2");
            return inset_count(1, BlockProfile::uniform(n - 1, 3), 1);
        }
        case ConfigFamily::weak_compositions: {
            need_arity(f, params, 2);
            const long long r = params[0], s = params[1];
            need(r >= 1 && s >= 0, f, "need r >= 1 and s >= 0");
            return inset_count(s + 1, BlockProfile::uniform(r - 1, 2), s);
        }
        case ConfigFamily::rook_moves: {
            need_arity(f, params, 1);
            const long long n = params[0];
            need(n >= 2, f, "need n >= 2");
            return inset_count(n - 1, BlockProfile{n, n}, 1);
        }
        case ConfigFamily::bishop_moves: {
            need_arity(f, params, 1);
            const long long n = params[0];
            need(n >= 2, f, "need n >= 2");
            return inset_count(1, BlockProfile::uniform(n, 2), n - 2);
        }
        case ConfigFamily::queen_moves: {
            need_arity(f, params, 1);
            const long long n = params[0];
            need(n >= 2, f, "need n >= 2");
            return config_count(ConfigFamily::rook_moves, params) +
                   config_count(ConfigFamily::bishop_moves, params);
        }
    }
    throw std::domain_error("config_count: unknown family");
}

}  // namespace inset::configs
