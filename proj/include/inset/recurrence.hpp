#pragma once

#include <inset/core.hpp>

#include <cstddef>
#include <vector>

namespace inset::recurrence {

// Recurrence-based evaluation routes. Each one recomputes the inset function
// from a different identity, so the suites in verify can cross-check them
// against the closed forms in core.

// The Pascal-like array of {m,n | k,Q}: rows indexed by m from 0, columns by
// k from 0. Row 0 comes from core; the k = 0 column is the m-independent
// product of the block sizes; every other cell is filled by the addition law
//   {m+1,n | k+1,Q} = {m,n | k+1,Q} + {m,n | k,Q}.
struct PascalArray {
    BlockProfile profile;
    long long m_max = 0;
    long long k_max = 0;
    std::vector<std::vector<Count>> rows;  // rows[m][k]

    const Count& at(long long m, long long k) const {
        return rows.at(static_cast<std::size_t>(m)).at(static_cast<std::size_t>(k));
    }
};

inline PascalArray build_pascal_array(const BlockProfile& profile, long long m_max,
                                      long long k_max) {
    if (m_max < 0 || k_max < 0) {
        throw std::domain_error("build_pascal_array: need m_max, k_max >= 0");
    }
    PascalArray a;
    a.profile = profile;
    a.m_max = m_max;
    a.k_max = k_max;
    a.rows.assign(static_cast<std::size_t>(m_max) + 1,
                  std::vector<Count>(static_cast<std::size_t>(k_max) + 1));

    for (long long k = 0; k <= k_max; ++k) {
        a.rows[0][static_cast<std::size_t>(k)] = pie_count(0, profile, k);
    }
    const Count column0 = profile.product();
    for (long long m = 1; m <= m_max; ++m) {
        auto& row = a.rows[static_cast<std::size_t>(m)];
        const auto& prev = a.rows[static_cast<std::size_t>(m - 1)];
        row[0] = column0;
        for (long long k = 1; k <= k_max; ++k) {
            row[static_cast<std::size_t>(k)] =
                prev[static_cast<std::size_t>(k)] + prev[static_cast<std::size_t>(k - 1)];
        }
    }
    return a;
}

// Reduction of arbitrary m to the m = 0 row:
//   {m,n | k,Q} = sum_{i=0}^{m} C(m,i) {0,n | k-i,Q}.
inline Count reduce_to_m0(const InsetProblem& p) {
    Count total = 0;
    for (long long i = 0; i <= p.m; ++i) {
        total += binomial_ext(p.m, i) * inset_count(0, p.profile, p.k - i);
    }
    return total;
}

// Block recurrence that moves block j into the additional block one leading
// element at a time:
//   {m,n | k,Q} = sum_{i=0}^{q_j - 1} {m+i, n-1 | k, Q \ {q_j}}.
// The result does not depend on j; the suites test that.
inline Count block_expand_additional(const InsetProblem& p, std::size_t j) {
    if (p.profile.empty()) {
        throw std::domain_error("block_expand_additional: need at least one block");
    }
    const long long qj = p.profile[j];  // throws std::out_of_range for bad j
    const BlockProfile rest = p.profile.without(j);
    Count total = 0;
    for (long long i = 0; i < qj; ++i) {
        total += inset_count(p.m + i, rest, p.k);
    }
    return total;
}

// Block recurrence over the i-subsets taken from block j:
//   {m,n | k,Q} = sum_{i=1}^{q_j} C(q_j, i) {m, n-1 | k-i+1, Q \ {q_j}}.
inline Count block_expand_subsets(const InsetProblem& p, std::size_t j) {
    if (p.profile.empty()) {
        throw std::domain_error("block_expand_subsets: need at least one block");
    }
    const long long qj = p.profile[j];
    const BlockProfile rest = p.profile.without(j);
    Count total = 0;
    for (long long i = 1; i <= qj; ++i) {
        total += binomial_ext(qj, i) * inset_count(p.m, rest, p.k - i + 1);
    }
    return total;
}

}  // namespace inset::recurrence
