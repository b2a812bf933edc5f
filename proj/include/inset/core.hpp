#pragma once

#include <inset/block_profile.hpp>
#include <inset/count.hpp>

#include <stdexcept>

namespace inset {

// Exact evaluation of the inset counting function {m,n | k,Q}: the number of
// (n+k)-subsets of a universe with main blocks of sizes Q and an m-element
// additional block, such that the subset intersects every main block.
//
// The function generalizes the binomial coefficients: with no main blocks, or
// with all blocks of size 1, it reduces to C(m, k). With k = 0 it is the
// product q_1 q_2 ... q_n. All values are exact; k out of range yields 0
// rather than an error.

// Inclusion-exclusion over the set of missed blocks:
//
//   {m,n | k,Q} = sum over I subset of [n] of (-1)^|I| C(|X| - sum_{i in I} q_i, n+k)
//
// Cost is 2^n binomial evaluations; callers bound n.
inline Count pie_count(const InsetProblem& p) {
    const auto& q = p.profile.sizes();
    const auto n = q.size();
    const long long universe = p.universe_size();
    const long long r = p.subset_size();
    Count total = 0;
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        long long missed = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1ull) missed += q[i];
        }
        Count term = binomial_ext(universe - missed, r);
        if (__builtin_popcountll(mask) & 1) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

// n = 1 closed form: {m,1 | k,q} = C(q+m, k+1) - C(m, k+1).
inline Count single_block_count(long long m, long long k, long long q) {
    if (m < 0 || q < 1) {
        throw std::domain_error("single_block_count: need m >= 0 and q >= 1");
    }
    return binomial_ext(q + m, k + 1) - binomial_ext(m, k + 1);
}

// n = 2 closed form, the four-term alternating sum:
// {m,2 | k,{q1,q2}} = C(q1+q2+m, k+2) - C(q1+m, k+2) - C(q2+m, k+2) + C(m, k+2).
inline Count two_block_count(long long m, long long k, long long q1, long long q2) {
    if (m < 0 || q1 < 1 || q2 < 1) {
        throw std::domain_error("two_block_count: need m >= 0 and q1, q2 >= 1");
    }
    return binomial_ext(q1 + q2 + m, k + 2) - binomial_ext(q1 + m, k + 2)
         - binomial_ext(q2 + m, k + 2) + binomial_ext(m, k + 2);
}

// All blocks the same size q:
//
//   {m,n | k,q} = sum_{i=0}^{n} (-1)^i C(n,i) C(nq + m - iq, n+k)
//
// n+1 terms instead of 2^n. The domain is extended to q = 0 (n empty blocks):
// no subset can intersect an empty block, so the count is 0 for n >= 1 and
// C(m, k) for n = 0. Identity suites and the zero-row inversion rely on the
// q = 0 value.
inline Count equal_blocks_count(long long m, long long n, long long k, long long q) {
    if (m < 0 || n < 0 || q < 0) {
        throw std::domain_error("equal_blocks_count: need m, n, q >= 0");
    }
    if (n == 0) {
        return binomial_ext(m, k);
    }
    if (q == 0) {
        return 0;
    }
    Count total = 0;
    for (long long i = 0; i <= n; ++i) {
        Count term = binomial_ext(n, i) * binomial_ext(n * q + m - i * q, n + k);
        if (i & 1) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

// Blocks of size 2, the binomial double-sum form:
//
//   {m,n | k,2} = 2^(n-k) sum_i 2^i C(m,i) C(n,k-i)
//
// The prefactor may have a negative exponent (k > n); the sum is then exactly
// divisible by 2^(k-n).
inline Count q2_count(long long m, long long n, long long k) {
    if (m < 0 || n < 0) {
        throw std::domain_error("q2_count: need m >= 0 and n >= 0");
    }
    Count sum = 0;
    for (long long i = 0; i <= m; ++i) {
        Count c2 = binomial_ext(n, k - i);
        if (c2 == 0) continue;
        sum += pow2(i) * binomial_ext(m, i) * c2;
    }
    if (n >= k) {
        return sum << static_cast<unsigned>(n - k);
    }
    const unsigned shift = static_cast<unsigned>(k - n);
    if (sum != 0 && (sum & ((Count(1) << shift) - 1)) != 0) {
        throw std::logic_error("q2_count: sum not divisible by 2^(k-n)");
    }
    return sum >> shift;
}

// m = k = 1 product form: {1,n | 1,Q} = q_1...q_n * (sum q_i - n + 2) / 2.
// The numerator is always even, which the tests assert as a property.
inline Count first_row_count(const BlockProfile& profile) {
    if (profile.empty()) {
        throw std::domain_error("first_row_count: profile must be nonempty");
    }
    const long long n = static_cast<long long>(profile.size());
    Count numerator = profile.product() * (profile.total() - n + 2);
    if ((numerator & 1) != 0) {
        throw std::logic_error("first_row_count: odd numerator");
    }
    return numerator >> 1;
}

// Evaluation strategy picked by inset_count for a given problem.
enum class EvalRoute {
    binomial,            // no main blocks: C(m, k)
    single_block,        // n = 1 closed form
    two_block,           // n = 2 closed form
    equal_blocks,        // uniform profile, n+1 term sum
    inclusion_exclusion  // general 2^n sum
};

inline const char* to_string(EvalRoute route) {
    switch (route) {
        case EvalRoute::binomial: return "binomial";
        case EvalRoute::single_block: return "single-block";
        case EvalRoute::two_block: return "two-block";
        case EvalRoute::equal_blocks: return "equal-blocks";
        case EvalRoute::inclusion_exclusion: return "inclusion-exclusion";
    }
    return "?";
}

inline EvalRoute eval_route(const InsetProblem& p) {
    switch (p.profile.size()) {
        case 0: return EvalRoute::binomial;
        case 1: return EvalRoute::single_block;
        case 2: return EvalRoute::two_block;
        default:
            return p.profile.all_equal() ? EvalRoute::equal_blocks
                                         : EvalRoute::inclusion_exclusion;
    }
}

// Canonical entry point: dispatches to the cheapest applicable formula.
// Agrees with pie_count on every input.
inline Count inset_count(const InsetProblem& p) {
    switch (eval_route(p)) {
        case EvalRoute::binomial:
            return binomial_ext(p.m, p.k);
        case EvalRoute::single_block:
            return single_block_count(p.m, p.k, p.profile[0]);
        case EvalRoute::two_block:
            return two_block_count(p.m, p.k, p.profile[0], p.profile[1]);
        case EvalRoute::equal_blocks:
            return equal_blocks_count(p.m, p.block_count(), p.k, p.profile[0]);
        case EvalRoute::inclusion_exclusion:
            return pie_count(p);
    }
    return 0;  // unreachable
}

inline Count inset_count(long long m, const BlockProfile& profile, long long k) {
    return inset_count(InsetProblem(m, profile, k));
}

inline Count pie_count(long long m, const BlockProfile& profile, long long k) {
    return pie_count(InsetProblem(m, profile, k));
}

}  // namespace inset
