#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ahlab/arith.hpp"
#include "ahlab/field.hpp"

namespace ahlab {

// Exponent vector (a_0, ..., a_n); index j is the exponent of x_j.
using MultiIndex = std::vector<int>;

inline int degree_of(const MultiIndex& a) {
    int d = 0;
    for (int e : a) d += e;
    return d;
}

// All degree-d monomials in x_0..x_n in graded-lex order with x_0 largest:
// x_0^d first, x_n^d last. Size C(n+d, n). The order is fixed; every matrix
// column layout and certificate serialization depends on it.
inline std::vector<MultiIndex> enumerate_basis(int n, int d) {
    std::vector<MultiIndex> out;
    MultiIndex cur(n + 1, 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == n) {
            cur[var] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, remaining - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, d);
    return out;
}

// Position of a multi-index within enumerate_basis(n, degree_of(alpha)).
inline std::size_t basis_index(int n, const MultiIndex& alpha) {
    int remaining = degree_of(alpha);
    std::size_t idx = 0;
    for (int var = 0; var < n; ++var) {
        // monomials preceding alpha have a larger exponent at this variable
        for (int e = remaining; e > alpha[var]; --e)
            idx += static_cast<std::size_t>(binomial_i64(n - var - 1 + remaining - e,
                                                         n - var - 1));
        remaining -= alpha[var];
    }
    return idx;
}

// d_beta x^alpha = coeff * x^(alpha-beta); coeff = prod_j alpha_j!/(alpha_j-beta_j)!.
// Coefficient 0 (and an empty residual) when some beta_j > alpha_j.
inline std::pair<std::int64_t, MultiIndex> derivative_coefficient(
    const MultiIndex& alpha, const MultiIndex& beta) {
    std::int64_t coeff = 1;
    MultiIndex residual(alpha.size());
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (beta[j] > alpha[j]) return {0, {}};
        coeff *= falling_factorial(alpha[j], beta[j]);
        residual[j] = alpha[j] - beta[j];
    }
    return {coeff, residual};
}

// prod_j point_j^(alpha_j) with the 0^0 = 1 convention.
template <class K>
K evaluate_monomial(const MultiIndex& alpha, const std::vector<K>& point, K one) {
    K out = one;
    for (std::size_t j = 0; j < alpha.size(); ++j)
        for (int e = 0; e < alpha[j]; ++e) out = out * point[j];
    return out;
}

}  // namespace ahlab
