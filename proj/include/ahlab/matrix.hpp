#pragma once

#include <cstddef>
#include <vector>

#include "ahlab/field.hpp"

namespace ahlab {

// Dense row-major matrix over an exact field scalar K (Fp or Rat).
// Elimination uses the first nonzero entry in column order as pivot; the
// result is deterministic for a given row order.
template <class K>
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols, K zero)
        : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    K& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rank() const {
        DenseMatrix m = *this;
        return m.echelonize().size();
    }

    // Reduced-echelon basis of the right kernel {v : M v = 0}, one vector per
    // free column, in column order. Free coordinate is set to 1.
    std::vector<std::vector<K>> kernel_basis() const {
        DenseMatrix m = *this;
        std::vector<std::size_t> pivots = m.echelonize();
        m.back_substitute(pivots);

        std::vector<char> is_pivot(cols_, 0);
        for (std::size_t c : pivots) is_pivot[c] = 1;

        std::vector<std::vector<K>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<K> v(cols_, zero_);
            v[free] = one();
            for (std::size_t i = 0; i < pivots.size(); ++i)
                v[pivots[i]] = -m.at(i, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // M v for a coefficient vector v.
    std::vector<K> apply(const std::vector<K>& v) const {
        std::vector<K> out(rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i) {
            K acc = zero_;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!is_zero(at(i, j)) && !is_zero(v[j])) acc = acc + at(i, j) * v[j];
            }
            out[i] = acc;
        }
        return out;
    }

private:
    K one() const {
        if constexpr (std::is_same_v<K, Fp>)
            return Fp(1, zero_.modulus());
        else
            return K(1);
    }

    // Forward elimination; returns pivot columns. Pivot rows end up in rows
    // 0..rank-1 with unit pivots.
    std::vector<std::size_t> echelonize() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t pr = row;
            while (pr < rows_ && is_zero(at(pr, col))) ++pr;
            if (pr == rows_) continue;
            if (pr != row) swap_rows(pr, row);
            K inv = inverse(at(row, col));
            for (std::size_t j = col; j < cols_; ++j) at(row, j) = at(row, j) * inv;
            for (std::size_t i = row + 1; i < rows_; ++i) {
                if (is_zero(at(i, col))) continue;
                K f = at(i, col);
                for (std::size_t j = col; j < cols_; ++j)
                    at(i, j) = at(i, j) - f * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    void back_substitute(const std::vector<std::size_t>& pivots) {
        for (std::size_t i = pivots.size(); i-- > 0;) {
            for (std::size_t k = 0; k < i; ++k) {
                if (is_zero(at(k, pivots[i]))) continue;
                K f = at(k, pivots[i]);
                for (std::size_t j = pivots[i]; j < cols_; ++j)
                    at(k, j) = at(k, j) - f * at(i, j);
            }
        }
    }

    static K inverse(const K& x) {
        if constexpr (std::is_same_v<K, Fp>)
            return x.inv();
        else
            return K(1) / x;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

    std::size_t rows_, cols_;
    K zero_;
    std::vector<K> data_;
};

}  // namespace ahlab
