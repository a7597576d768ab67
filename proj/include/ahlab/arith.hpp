#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ahlab/errors.hpp"

namespace ahlab {

using BigInt = boost::multiprecision::cpp_int;

// C(n,k), exact in arbitrary precision. Pascal recurrence with memoized rows.
// Locked because sweep workers share the table; returned references stay
// valid across growth (inner buffers are moved, not copied).
inline const BigInt& binomial(unsigned n, unsigned k) {
    static const BigInt zero = 0;
    if (k > n) return zero;
    static std::mutex mu;
    static std::vector<std::vector<BigInt>> rows{{1}};
    std::scoped_lock lock(mu);
    while (rows.size() <= n) {
        const auto& prev = rows.back();
        std::vector<BigInt> row(prev.size() + 1);
        row.front() = 1;
        row.back() = 1;
        for (std::size_t i = 1; i + 1 < row.size(); ++i)
            row[i] = prev[i - 1] + prev[i];
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

// Binomial known to fit machine range (matrix dimensions and the like).
inline std::int64_t binomial_i64(unsigned n, unsigned k) {
    const BigInt& b = binomial(n, k);
    if (b > BigInt(INT64_MAX))
        throw RangeError("binomial too large for machine index arithmetic");
    return static_cast<std::int64_t>(b);
}

// a * (a-1) * ... * (a-b+1); zero once the product runs past zero.
inline std::int64_t falling_factorial(std::int64_t a, std::int64_t b) {
    if (b > a) return 0;
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < b; ++i) out *= a - i;
    return out;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    return (a + b - 1) / b;
}

}  // namespace ahlab
