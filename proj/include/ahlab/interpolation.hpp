#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ahlab/config.hpp"
#include "ahlab/errors.hpp"
#include "ahlab/matrix.hpp"
#include "ahlab/monomial.hpp"

namespace ahlab {

template <class K>
struct FieldOps;

template <>
struct FieldOps<Fp> {
    static Fp make(const BigInt& z, const FieldSpec& f) {
        return Fp::from_integer(z, f.prime);
    }
    static Fp zero(const FieldSpec& f) { return Fp(0, f.prime); }
    static Fp one(const FieldSpec& f) { return Fp(1, f.prime); }
};

template <>
struct FieldOps<Rat> {
    static Rat make(const BigInt& z, const FieldSpec&) { return Rat(z); }
    static Rat zero(const FieldSpec&) { return Rat(0); }
    static Rat one(const FieldSpec&) { return Rat(1); }
};

// Row labels of the interpolation matrix: point index plus the derivative
// multi-index applied to that point.
struct RowLabel {
    int point = 0;
    MultiIndex beta;
};

inline std::vector<RowLabel> matrix_row_labels(const FatPointConfig& config) {
    std::vector<RowLabel> labels;
    for (int i = 0; i < config.r(); ++i)
        for (int b = 0; b < config.points[i].multiplicity; ++b)
            for (auto& beta : enumerate_basis(config.n, b))
                labels.push_back({i, beta});
    return labels;
}

// Derivative-evaluation matrix: rows are the vanishing conditions "the
// beta-derivative vanishes at P_i" for |beta| <= m_i - 1, columns the
// degree-d monomials. Entry (row (i,beta), col alpha) is
// falling-factorial coefficient of d_beta x^alpha times x^(alpha-beta)(P_i).
template <class K>
DenseMatrix<K> build_matrix(const FatPointConfig& config, int d) {
    if (d < 1) throw RangeError("need degree d >= 1");
    if (config.field.is_prime() && config.field.prime <= static_cast<std::uint64_t>(d))
        throw CharacteristicTooSmall("field prime must exceed the degree");

    const auto labels = matrix_row_labels(config);
    const auto basis = enumerate_basis(config.n, d);
    DenseMatrix<K> m(labels.size(), basis.size(), FieldOps<K>::zero(config.field));

    for (std::size_t row = 0; row < labels.size(); ++row) {
        const auto& [i, beta] = labels[row];
        std::vector<K> coords;
        coords.reserve(config.n + 1);
        for (const auto& c : config.points[i].coords)
            coords.push_back(FieldOps<K>::make(c, config.field));
        for (std::size_t col = 0; col < basis.size(); ++col) {
            auto [coeff, residual] = derivative_coefficient(basis[col], beta);
            if (coeff == 0) continue;
            K value = FieldOps<K>::make(BigInt(coeff), config.field) *
                      evaluate_monomial(residual, coords, FieldOps<K>::one(config.field));
            m.at(row, col) = value;
        }
    }
    return m;
}

// e(R/I_X) = sum_i C(n + m_i - 1, n).
inline std::int64_t multiplicity(const FatPointConfig& config) {
    std::int64_t e = 0;
    for (const auto& pt : config.points)
        e += binomial_i64(config.n + pt.multiplicity - 1, config.n);
    return e;
}

struct HilbertReport {
    int n = 0;
    int d = 0;
    int r = 0;
    std::vector<int> multiplicities;
    std::int64_t hilbert_value = 0;   // H_{R/I_X}(d) = matrix rank
    std::int64_t ideal_dim = 0;       // dim [I_X]_d
    std::int64_t multiplicity_e = 0;  // e(R/I_X)
    std::int64_t expected = 0;        // min{C(n+d,n), e}
    std::int64_t defect = 0;
    bool is_AH = false;
    bool is_multiplicity_d_independent = false;
    FieldSpec field;
    std::uint64_t seed = 0;
};

std::int64_t matrix_rank(const FatPointConfig& config, int d);
HilbertReport hilbert_function(const FatPointConfig& config, int d);
std::string report_to_json(const HilbertReport& rep);

// Reduced-echelon basis of [I_X]_d, i.e. of the matrix kernel.
template <class K>
struct DegreeSlice {
    int n = 0;
    int d = 0;
    std::vector<std::vector<K>> basis_vectors;
};

template <class K>
DegreeSlice<K> ideal_slice(const FatPointConfig& config, int d) {
    auto m = build_matrix<K>(config, d);
    return DegreeSlice<K>{config.n, d, m.kernel_basis()};
}

struct CastelnuovoReport {
    std::int64_t lhs = 0;              // H of the full configuration at d
    std::int64_t residue_value = 0;    // H of the residue at d-1
    std::int64_t restriction_value = 0;  // H of the trace in L = P^{n-1} at d
    std::int64_t rhs = 0;
    bool holds = false;
};

// LHS >= RHS check for a configuration splitting into points on the
// hyperplane (multiplicity 1 or 2) and points off it. The residue replaces
// each double point on L by its simple point and drops simple points on L;
// the restriction is the on-L scheme viewed inside L = P^{n-1}.
CastelnuovoReport castelnuovo_check(const FatPointConfig& config,
                                    const HyperplaneData& hyperplane, int d);

// Numeric test for adding u simple points on a hyperplane:
// H(t) + u <= H(t-1) + C(n+t-1, t).
inline bool hyperplane_condition(std::int64_t hilbert_t, std::int64_t hilbert_t_minus_1,
                                 int n, int t, std::int64_t u) {
    return hilbert_t + u <= hilbert_t_minus_1 + binomial_i64(n + t - 1, t);
}

}  // namespace ahlab
