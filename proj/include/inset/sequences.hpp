#pragma once

#include <inset/core.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace inset::sequences {

// Named integer-sequence families, each reduced to one inset evaluation (or a
// signed/quotient variant). Indexing follows the reductions themselves, not
// catalogue offsets: e.g. triangular(n) is the (n+5)th triangular number.

enum class SequenceFamily {
    triangular,
    matchstick,
    pentagonal,
    hexagonal_prism,
    pyramid_surface,
    square_pyramidal,
    centered_triangular,
    centered_tetrahedral,
    magic_constant,
    truncated_square_pyramidal,
    chebyshev_coefficient,
    catalan,
    fibonomial_3,
    delannoy,
    sulanke,
    coordination,
    crystal_ball,
};

inline const char* to_string(SequenceFamily f) {
    switch (f) {
        case SequenceFamily::triangular: return "triangular";
        case SequenceFamily::matchstick: return "matchstick";
        case SequenceFamily::pentagonal: return "pentagonal";
        case SequenceFamily::hexagonal_prism: return "hexagonal-prism";
        case SequenceFamily::pyramid_surface: return "pyramid-surface";
        case SequenceFamily::square_pyramidal: return "square-pyramidal";
        case SequenceFamily::centered_triangular: return "centered-triangular";
        case SequenceFamily::centered_tetrahedral: return "centered-tetrahedral";
        case SequenceFamily::magic_constant: return "magic-constant";
        case SequenceFamily::truncated_square_pyramidal: return "truncated-square-pyramidal";
        case SequenceFamily::chebyshev_coefficient: return "chebyshev-coefficient";
        case SequenceFamily::catalan: return "catalan";
        case SequenceFamily::fibonomial_3: return "fibonomial-3";
        case SequenceFamily::delannoy: return "delannoy";
        case SequenceFamily::sulanke: return "sulanke";
        case SequenceFamily::coordination: return "coordination";
        case SequenceFamily::crystal_ball: return "crystal-ball";
    }
    return "?";
}

inline std::optional<SequenceFamily> parse_sequence_family(std::string_view name) {
    for (int i = 0; i <= static_cast<int>(SequenceFamily::crystal_ball); ++i) {
        auto f = static_cast<SequenceFamily>(i);
        if (name == to_string(f)) return f;
    }
    return std::nullopt;
}

// A possibly signed term. Only Chebyshev coefficients carry a sign; every
// other family is a plain count with sign +1. Zero is always +1.
struct SignedCount {
    Count magnitude = 0;
    int sign = +1;

    Integer value() const { return sign < 0 ? Integer(-magnitude) : Integer(magnitude); }

    bool operator==(const SignedCount& o) const {
        return magnitude == o.magnitude && sign == o.sign;
    }
};

inline SignedCount make_signed(Integer v) {
    if (v < 0) return SignedCount{Count(-v), -1};
    return SignedCount{Count(v), +1};
}

// Fibonacci numbers with F_0 = 0, F_1 = F_2 = 1.
inline Count fibonacci(long long q) {
    if (q < 0) {
        throw std::domain_error("fibonacci: need q >= 0");
    }
    Count a = 0, b = 1;
    for (long long i = 0; i < q; ++i) {
        Count next = a + b;
        a = b;
        b = next;
    }
    return a;
}

// Sulanke numbers through the explicit parity-split sums:
//   n+k even: s(n,k) = sum_i 2^((n-k+2i)/2) C((n+k)/2, i)   C((n+k)/2, k-i)
//   n+k odd:  s(n,k) = sum_i 2^((n+1-k+2i)/2) C((n+k-1)/2, i) C((n+k+1)/2, k-i)
// Terms with a vanishing binomial are skipped; whenever both binomials are
// nonzero the exponent is nonnegative.
inline Count sulanke_explicit(long long n, long long k) {
    if (n < 0 || k < 0) {
        throw std::domain_error("sulanke_explicit: need n, k >= 0");
    }
    Count total = 0;
    if ((n + k) % 2 == 0) {
        const long long h = (n + k) / 2;
        for (long long i = 0; i <= h; ++i) {
            Count b1 = binomial_ext(h, i);
            Count b2 = binomial_ext(h, k - i);
            if (b1 == 0 || b2 == 0) continue;
            total += pow2((n - k + 2 * i) / 2) * b1 * b2;
        }
    } else {
        const long long h = (n + k - 1) / 2;
        for (long long i = 0; i <= h; ++i) {
            Count b1 = binomial_ext(h, i);
            Count b2 = binomial_ext(h + 1, k - i);
            if (b1 == 0 || b2 == 0) continue;
            total += pow2((n + 1 - k + 2 * i) / 2) * b1 * b2;
        }
    }
    return total;
}

namespace detail {

inline void need_arity(SequenceFamily f, const std::vector<long long>& params,
                       std::size_t arity) {
    if (params.size() != arity) {
        throw std::domain_error(std::string("sequence_term: family ") + to_string(f) +
                                " takes " + std::to_string(arity) +
                                " parameter(s), got " + std::to_string(params.size()));
    }
}

inline void need(bool condition, SequenceFamily f, const char* what) {
    if (!condition) {
        throw std::domain_error(std::string("sequence_term: ") + to_string(f) + ": " + what);
    }
}

}  // namespace detail

// One term of a family. Parameter layout (and the inset reduction behind it):
//   triangular {n}:                  {n,2 | n+2,{3,3}}, n >= 0
//   matchstick {n}:                  {n-1,1 | 1,{n}}, n >= 1
//   pentagonal {n}:                  {n,1 | 1,{n}}, n >= 1
//   hexagonal-prism {n}:             {n,2 | 1,{n,n}}, n >= 1
//   pyramid-surface {m}:             {m,2 | 2,{2,3}}, m >= 0
//   square-pyramidal {m,k}:          {m,1 | k,{2}}, m,k >= 0
//   centered-triangular {m,k}:       {m,1 | k,{3}}
//   centered-tetrahedral {m,k}:      {m,1 | k,{4}}
//   magic-constant {m}:              {m,1 | 3,{3}}, m >= 0
//   truncated-square-pyramidal {m,q}: {m,2 | 2,{2,q}}, m >= 0, q >= 1
//   chebyshev-coefficient {n,k}:     (-1)^((n-k)/2) {0,(n+k)/2 | (n-k)/2,2}
//                                    when n, k have equal parity, else 0
//   catalan {n}:                     {2n,1 | n,{2}} / (3n+2), n >= 0
//   fibonomial-3 {q}:                {1,2 | 1,{F_q,F_{q+1}}}, q >= 2
//   delannoy {m,n}:                  {m,n | n,2}, m,n >= 0
//   sulanke {n,k}:                   parity split over {.,. | k,2}, n,k >= 0
//   coordination {m,n}:              {m-1,n | n-1,2}, m >= 1, n >= 1
//   crystal-ball {m,n}:              {m,n | n,2}, m,n >= 0
inline SignedCount sequence_term(SequenceFamily f, const std::vector<long long>& params) {
    using detail::need;
    using detail::need_arity;
    switch (f) {
        case SequenceFamily::triangular: {
            need_arity(f, params, 1);
            const long long n = params[0];
            need(n >= 0, f, "need n >= 0");
            return {inset_count(n, BlockProfile{3, 3}, n + 2)};
        }
        case SequenceFamily::matchstick: {
            need_arity(f, params, 1);
            const long long n = params[0];
            need(n >= 1, f, "need n >= 1");
            return {inset_count(n - 1, BlockProfile{n}, 1)};
        }
        case SequenceFamily::pentagonal: {
            need_arity(f, params, 1);
            const long long n = params[0];
            need(n >= 1, f, "need n >= 1");
            return {inset_count(n, BlockProfile{n}, 1)};
        }
        case SequenceFamily::hexagonal_prism: {
            need_arity(f, params, 1);
            const long long n = params[0];
            need(n >= 1, f, "need n >= 1");
            return {inset_count(n, BlockProfile{n, n}, 1)};
        }
        case SequenceFamily::pyramid_surface: {
            need_arity(f, params, 1);
            const long long m = params[0];
            need(m >= 0, f, "need m >= 0");
            return {inset_count(m, BlockProfile{2, 3}, 2)};
        }
        case SequenceFamily::square_pyramidal: {
            need_arity(f, params, 2);
            need(params[0] >= 0 && params[1] >= 0, f, "need m, k >= 0");
            return {inset_count(params[0], BlockProfile{2}, params[1])};
        }
        case SequenceFamily::centered_triangular: {
            need_arity(f, params, 2);
            need(params[0] >= 0 && params[1] >= 0, f, "need m, k >= 0");
            return {inset_count(params[0], BlockProfile{3}, params[1])};
        }
        case SequenceFamily::centered_tetrahedral: {
            need_arity(f, params, 2);
            need(params[0] >= 0 && params[1] >= 0, f, "need m, k >= 0");
            return {inset_count(params[0], BlockProfile{4}, params[1])};
        }
        case SequenceFamily::magic_constant: {
            need_arity(f, params, 1);
            need(params[0] >= 0, f, "need m >= 0");
            return {inset_count(params[0], BlockProfile{3}, 3)};
        }
        case SequenceFamily::truncated_square_pyramidal: {
            need_arity(f, params, 2);
            const long long m = params[0], q = params[1];
            need(m >= 0 && q >= 1, f, "need m >= 0 and q >= 1");
            return {inset_count(m, BlockProfile{2, q}, 2)};
        }
        case SequenceFamily::chebyshev_coefficient: {
            need_arity(f, params, 2);
            const long long n = params[0], k = params[1];
            need(n >= 0 && k >= 0, f, "need n, k >= 0");
            if ((n - k) % 2 != 0) return {0, +1};
            const long long half_diff = (n - k) / 2;
            Count magnitude =
                equal_blocks_count(0, (n + k) / 2, half_diff, 2);
            if (magnitude == 0) return {0, +1};
            return {magnitude, half_diff % 2 == 0 ? +1 : -1};
        }
        case SequenceFamily::catalan: {
            need_arity(f, params, 1);
            const long long n = params[0];
            need(n >= 0, f, "need n >= 0");
            Count numerator = inset_count(2 * n, BlockProfile{2}, n);
            const long long divisor = 3 * n + 2;
            if (numerator % divisor != 0) {
                throw std::logic_error("sequence_term: catalan quotient not exact");
            }
            return {numerator / divisor};
        }
        case SequenceFamily::fibonomial_3: {
            need_arity(f, params, 1);
            const long long q = params[0];
            need(q >= 2, f, "need q >= 2");
            need(q <= 80, f, "need q <= 80 (block sizes must fit 64 bits)");
            const long long fq = static_cast<long long>(fibonacci(q));
            const long long fq1 = static_cast<long long>(fibonacci(q + 1));
            return {inset_count(1, BlockProfile{fq, fq1}, 1)};
        }
        case SequenceFamily::delannoy: {
            need_arity(f, params, 2);
            const long long m = params[0], n = params[1];
            need(m >= 0 && n >= 0, f, "need m, n >= 0");
            return {inset_count(m, BlockProfile::uniform(n, 2), n)};
        }
        case SequenceFamily::sulanke: {
            need_arity(f, params, 2);
            const long long n = params[0], k = params[1];
            need(n >= 0 && k >= 0, f, "need n, k >= 0");
            if ((n + k) % 2 == 0) {
                const long long h = (n + k) / 2;
                return {inset_count(h, BlockProfile::uniform(h, 2), k)};
            }
            const long long h = (n + k - 1) / 2;
            return {inset_count(h, BlockProfile::uniform(h + 1, 2), k)};
        }
        case SequenceFamily::coordination: {
            need_arity(f, params, 2);
            const long long m = params[0], n = params[1];
            need(m >= 1 && n >= 1, f, "need m >= 1 and n >= 1");
            return {inset_count(m - 1, BlockProfile::uniform(n, 2), n - 1)};
        }
        case SequenceFamily::crystal_ball: {
            need_arity(f, params, 2);
            const long long m = params[0], n = params[1];
            need(m >= 0 && n >= 0, f, "need m, n >= 0");
            return {inset_count(m, BlockProfile::uniform(n, 2), n)};
        }
    }
    throw std::domain_error("sequence_term: unknown family");
}

// Terms at params[vary_pos] = from .. to, everything else fixed.
inline std::vector<SignedCount> sequence_range(SequenceFamily f,
                                               std::vector<long long> params,
                                               std::size_t vary_pos, long long from,
                                               long long to) {
    if (vary_pos >= params.size()) {
        throw std::domain_error("sequence_range: vary_pos out of range");
    }
    if (from > to) {
        throw std::domain_error("sequence_range: need from <= to");
    }
    std::vector<SignedCount> terms;
    terms.reserve(static_cast<std::size_t>(to - from + 1));
    for (long long i = from; i <= to; ++i) {
        params[vary_pos] = i;
        terms.push_back(sequence_term(f, params));
    }
    return terms;
}

}  // namespace inset::sequences
