#pragma once

#include <inset/core.hpp>

namespace inset::matrices {

// Counting (0,1)-matrices with a fixed number of ones and no zero rows or
// zero columns, plus the spanning-subgraph reading of the same numbers.

// M(n, k, q): matrices of order q x n with n+k ones, no zero rows and no
// zero columns.
struct MatrixCountQuery {
    long long columns = 0;  // n
    long long k = 0;
    long long rows = 0;     // q
};

// Zero-row inversion over the no-zero-column count:
//   M(n,k,q) = sum_{i=0}^{q} (-1)^(q+i) C(q,i) {0,n | k,i}
// The i = 0 term is 0 (empty blocks admit no insets). q = 1 is handled
// directly: a single row must cover every column, so the row is all ones and
// the count is 1 exactly when k = 0. q = 0 means every column is zero: 0.
// Infeasible or negative k yields 0 throughout.
inline Count matrix_count(long long n, long long k, long long q) {
    if (n < 1) {
        throw std::domain_error("matrix_count: need n >= 1");
    }
    if (q < 0) {
        throw std::domain_error("matrix_count: need q >= 0");
    }
    if (q == 0) return 0;
    if (q == 1) return k == 0 ? 1 : 0;
    Count total = 0;
    for (long long i = 0; i <= q; ++i) {
        Count term = binomial_ext(q, i) * equal_blocks_count(0, n, k, i);
        if ((q + i) & 1) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

inline Count matrix_count(const MatrixCountQuery& query) {
    return matrix_count(query.columns, query.k, query.rows);
}

// Spanning subgraphs of the complete bipartite graph K(q, n) with n+q-1
// edges and no isolated vertices; equals M(n, q-1, q) via the biadjacency
// matrix.
inline Count spanning_subgraph_count(long long q, long long n) {
    if (q < 1 || n < 1) {
        throw std::domain_error("spanning_subgraph_count: need q, n >= 1");
    }
    return matrix_count(n, q - 1, q);
}

}  // namespace inset::matrices
