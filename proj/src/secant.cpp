#include "ahlab/secant.hpp"

#include <algorithm>

#include <json.hpp>

#include "ahlab/classifier.hpp"
#include "ahlab/rng.hpp"

namespace ahlab {

VeroneseVector veronese_embed(const std::vector<BigInt>& point, int d,
                              FieldSpec field) {
    const int n = static_cast<int>(point.size()) - 1;
    if (n < 1 || d < 1) throw RangeError("need a point in P^n, n >= 1, and d >= 1");
    VeroneseVector v;
    v.n = n;
    v.d = d;
    for (const auto& alpha : enumerate_basis(n, d)) {
        BigInt value = 1;
        for (int k = 0; k <= n; ++k)
            for (int e = 0; e < alpha[k]; ++e) value *= point[k];
        if (field.is_prime()) {
            value %= BigInt(field.prime);
            if (value < 0) value += BigInt(field.prime);
        }
        v.coords.push_back(std::move(value));
    }
    bool all_zero = std::all_of(v.coords.begin(), v.coords.end(),
                                [](const BigInt& c) { return c == 0; });
    if (all_zero) throw RangeError("point maps to zero: not projective");
    return v;
}

namespace {

BigInt multinomial(int total, const MultiIndex& gamma) {
    BigInt result = 1;
    int used = 0;
    for (int g : gamma) {
        used += g;
        result *= binomial(used, g);
    }
    if (used != total) throw RangeError("multi-index degree mismatch");
    return result;
}

// Rows of the tangent matrix: coefficient of x^alpha in l_P^{d-1} x_j is
// multinomial(d-1; alpha - e_j) * P^(alpha - e_j).
template <class K>
std::int64_t span_rank(const FatPointConfig& points, int d) {
    const int n = points.n;
    const auto basis = enumerate_basis(n, d);
    DenseMatrix<K> m(static_cast<std::size_t>(points.r()) * (n + 1), basis.size(),
                     FieldOps<K>::zero(points.field));
    std::size_t row = 0;
    for (const auto& pt : points.points) {
        std::vector<K> coords;
        for (const auto& c : pt.coords)
            coords.push_back(FieldOps<K>::make(c, points.field));
        for (int j = 0; j <= n; ++j, ++row) {
            for (std::size_t col = 0; col < basis.size(); ++col) {
                MultiIndex gamma = basis[col];
                if (gamma[j] == 0) continue;
                --gamma[j];
                K value = FieldOps<K>::make(multinomial(d - 1, gamma), points.field) *
                          evaluate_monomial(gamma, coords, FieldOps<K>::one(points.field));
                m.at(row, col) = value;
            }
        }
    }
    return static_cast<std::int64_t>(m.rank());
}

}  // namespace

std::int64_t terracini_span_rank(const FatPointConfig& points, int d) {
    if (d < 2) throw RangeError("tangent spans need d >= 2");
    for (const auto& pt : points.points)
        if (pt.multiplicity != 1)
            throw RangeError("tangent spans are taken at simple points");
    if (points.field.is_prime()) {
        if (points.field.prime <= static_cast<std::uint64_t>(d))
            throw CharacteristicTooSmall("field prime must exceed the degree");
        return span_rank<Fp>(points, d);
    }
    return span_rank<Rat>(points, d);
}

SecantReport secant_dimension(int n, int d, int r, int trials, std::uint64_t seed,
                              std::uint64_t prime) {
    if (d < 2 || r < 1) throw RangeError("need d >= 2 and r >= 1");
    const FieldSpec field = FieldSpec::prime_field(prime);
    SecantReport rep;
    rep.n = n;
    rep.d = d;
    rep.r = r;
    rep.ambient_dim = binomial_i64(n + d, n) - 1;
    rep.expected_dim =
        std::min<std::int64_t>(static_cast<std::int64_t>(n + 1) * r - 1, rep.ambient_dim);

    std::int64_t best = -1;
    for (int t = 1; t <= std::max(trials, 1); ++t) {
        const std::uint64_t trial_seed = derive_seed(seed, n, d, r, t);
        auto simple = random_general(n, r, 1, trial_seed, field);
        const std::int64_t tangent = terracini_span_rank(simple, d);
        auto doubles = simple;
        for (auto& pt : doubles.points) pt.multiplicity = 2;
        const std::int64_t hilbert = matrix_rank(doubles, d);
        if (tangent != hilbert)
            throw CrossCheckMismatch("tangent-span rank disagrees with the Hilbert function");
        if (tangent > best) {
            best = tangent;
            rep.seed = trial_seed;
        }
    }
    rep.actual_dim = best - 1;
    rep.defect = rep.expected_dim - rep.actual_dim;
    rep.fills_ambient = rep.actual_dim == rep.ambient_dim;
    return rep;
}

WaringReport waring_G(int n, int d, int trials, std::uint64_t base_seed,
                      std::uint64_t prime) {
    if (n < 1 || d < 1) throw RangeError("need n >= 1 and d >= 1");
    WaringReport rep;
    rep.n = n;
    rep.d = d;
    const BigInt ambient = binomial(n + d, n);
    rep.naive = static_cast<std::int64_t>(ceil_div(ambient, BigInt(n + 1)));
    if (d == 1) {
        rep.G = 1;
        rep.exceptional_bump = rep.G - rep.naive;
        return rep;
    }
    for (std::int64_t r = rep.naive;; ++r) {
        if (predicted_classification(n, d, static_cast<int>(r)).exceptional) continue;
        if (BigInt(r) * (n + 1) < ambient) continue;
        auto verdict = verify_ah(n, d, static_cast<int>(r), trials, base_seed, prime);
        if (verdict.observed.kind == ObservedVerdict::Kind::AH) {
            rep.G = r;
            break;
        }
        if (r > rep.naive + 4)
            throw RetryExhausted("no filling r found near the naive bound");
    }
    rep.exceptional_bump = rep.G - rep.naive;
    return rep;
}

std::string secant_report_to_json(const SecantReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["r"] = rep.r;
    j["ambientDim"] = rep.ambient_dim;
    j["expectedDim"] = rep.expected_dim;
    j["actualDim"] = rep.actual_dim;
    j["defect"] = rep.defect;
    j["fillsAmbient"] = rep.fills_ambient;
    j["seed"] = rep.seed;
    return j.dump(2);
}

std::string waring_report_to_json(const WaringReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["G"] = rep.G;
    j["naive"] = rep.naive;
    j["exceptionalBump"] = rep.exceptional_bump;
    return j.dump(2);
}

}  // namespace ahlab
