#include "ahlab/classifier.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ahlab/rng.hpp"

namespace ahlab {

namespace {

template <class K>
bool annihilates(const FatPointConfig& config, int d,
                 const std::vector<std::vector<BigInt>>& forms) {
    auto m = build_matrix<K>(config, d);
    for (const auto& form : forms) {
        std::vector<K> v;
        v.reserve(form.size());
        for (const auto& c : form) v.push_back(FieldOps<K>::make(c, config.field));
        for (const auto& entry : m.apply(v))
            if (!is_zero(entry)) return false;
    }
    return true;
}

}  // namespace

std::string family_name(ExceptionalFamily f) {
    switch (f) {
        case ExceptionalFamily::D2Star: return "D2Star";
        case ExceptionalFamily::D4QuadricSquare: return "D4QuadricSquare";
        case ExceptionalFamily::D3N4Cubic: return "D3N4Cubic";
    }
    return "?";
}

PredictedVerdict predicted_classification(int n, int d, int r) {
    if (n < 1 || d < 1 || r < 1) throw RangeError("need n, d, r >= 1");
    if (d == 2 && 2 <= r && r <= n)
        return {true, ExceptionalFamily::D2Star};
    if (d == 3 && n == 4 && r == 7)
        return {true, ExceptionalFamily::D3N4Cubic};
    if (d == 4 && 2 <= n && n <= 4 && r == binomial_i64(n + 2, 2) - 1)
        return {true, ExceptionalFamily::D4QuadricSquare};
    return {false, std::nullopt};
}

bool verify_certificate(const Certificate& cert) {
    if (cert.count_lower_bound <= cert.expected_ideal_dim) return false;
    if (cert.config.field.is_prime())
        return annihilates<Fp>(cert.config, cert.d, cert.exhibited_forms);
    return annihilates<Rat>(cert.config, cert.d, cert.exhibited_forms);
}

Certificate certificate_d2(int n, int r) {
    if (r < 2 || r > n) throw RangeError("degree-2 certificate requires 2 <= r <= n");
    Certificate cert{ExceptionalFamily::D2Star, coordinate_points(n, r, 2), 2, {}, 0, 0};
    // quadric monomials supported on the unused variables x_r..x_n
    const auto basis = enumerate_basis(n, 2);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        bool supported = true;
        for (int j = 0; j < r; ++j)
            if (basis[col][j] != 0) supported = false;
        if (!supported) continue;
        std::vector<BigInt> form(basis.size(), BigInt(0));
        form[col] = 1;
        cert.exhibited_forms.push_back(std::move(form));
    }
    cert.count_lower_bound = static_cast<std::int64_t>(cert.exhibited_forms.size());
    cert.expected_ideal_dim =
        std::max<std::int64_t>(0, binomial_i64(n + 2, 2) - std::int64_t(r) * (n + 1));
    if (cert.count_lower_bound != binomial_i64(n - r + 2, 2))
        throw Error("internal: wrong quadric count");
    if (!verify_certificate(cert)) throw Error("internal: degree-2 certificate failed");
    return cert;
}

Certificate certificate_d4(int n, std::uint64_t seed, std::uint64_t prime) {
    if (n < 2 || n > 4) throw RangeError("degree-4 certificate requires 2 <= n <= 4");
    const int r = static_cast<int>(binomial_i64(n + 2, 2)) - 1;
    const FieldSpec field = FieldSpec::prime_field(prime);

    for (int attempt = 0; attempt < 10; ++attempt) {
        auto simple = random_general(n, r, 1, mix64(seed) + attempt, field);
        auto slice = ideal_slice<Fp>(simple, 2);
        if (slice.basis_vectors.size() != 1) continue;
        const auto& quadric = slice.basis_vectors.front();

        // square the quadric: convolution over the degree-2 basis
        const auto basis2 = enumerate_basis(n, 2);
        const auto basis4 = enumerate_basis(n, 4);
        std::vector<Fp> square(basis4.size(), Fp(0, prime));
        for (std::size_t a = 0; a < basis2.size(); ++a) {
            if (is_zero(quadric[a])) continue;
            for (std::size_t b = 0; b < basis2.size(); ++b) {
                if (is_zero(quadric[b])) continue;
                MultiIndex sum(n + 1);
                for (int j = 0; j <= n; ++j) sum[j] = basis2[a][j] + basis2[b][j];
                square[basis_index(n, sum)] =
                    square[basis_index(n, sum)] + quadric[a] * quadric[b];
            }
        }

        Certificate cert{ExceptionalFamily::D4QuadricSquare, simple, 4, {}, 1, 0};
        for (auto& pt : cert.config.points) pt.multiplicity = 2;
        std::vector<BigInt> form;
        form.reserve(square.size());
        for (const auto& c : square) form.emplace_back(c.value());
        cert.exhibited_forms.push_back(std::move(form));
        cert.expected_ideal_dim = std::max<std::int64_t>(
            0, binomial_i64(n + 4, 4) - std::int64_t(r) * (n + 1));
        if (!verify_certificate(cert))
            throw Error("internal: squared quadric not annihilated");
        return cert;
    }
    throw RetryExhausted("no seed produced a one-dimensional quadric kernel");
}

namespace {

// det of the 3x3 matrix with entries x_{i+j}, expanded as a degree-3
// coefficient vector over the monomial basis of P^4.
std::vector<BigInt> hankel_3x3_determinant() {
    const int n = 4;
    const auto basis = enumerate_basis(n, 3);
    std::vector<BigInt> det(basis.size(), BigInt(0));
    const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2},
                                                   {0, 2, 1},
                                                   {1, 0, 2},
                                                   {1, 2, 0},
                                                   {2, 0, 1},
                                                   {2, 1, 0}}};
    const std::array<int, 6> signs{1, -1, -1, 1, 1, -1};
    for (int k = 0; k < 6; ++k) {
        MultiIndex mono(n + 1, 0);
        for (int row = 0; row < 3; ++row) mono[row + perms[k][row]] += 1;
        det[basis_index(n, mono)] += signs[k];
    }
    return det;
}

}  // namespace

Certificate certificate_d3n4(std::uint64_t seed) {
    const int n = 4;
    Certificate cert{ExceptionalFamily::D3N4Cubic,
                     rational_normal_curve_points(n, 7, 2, seed, FieldSpec::rational()),
                     3,
                     {},
                     1,
                     0};

    // x2^3 - 2 x1 x2 x3 + x0 x3^2 + x1^2 x4 - x0 x2 x4
    const auto basis = enumerate_basis(n, 3);
    std::vector<BigInt> cubic(basis.size(), BigInt(0));
    auto set = [&](std::initializer_list<int> exps, int c) {
        MultiIndex alpha(exps);
        cubic[basis_index(n, alpha)] = c;
    };
    set({0, 0, 3, 0, 0}, 1);
    set({0, 1, 1, 1, 0}, -2);
    set({1, 0, 0, 2, 0}, 1);
    set({0, 2, 0, 0, 1}, 1);
    set({1, 0, 1, 0, 1}, -1);

    // the cubic is (up to sign) the determinant of the catalecticant matrix
    // whose 2x2 minors cut out the curve
    auto det = hankel_3x3_determinant();
    bool plus = true, minus = true;
    for (std::size_t i = 0; i < det.size(); ++i) {
        if (det[i] != cubic[i]) plus = false;
        if (det[i] != -cubic[i]) minus = false;
    }
    if (!plus && !minus) throw Error("internal: determinant identity failed");

    cert.exhibited_forms.push_back(std::move(cubic));
    cert.expected_ideal_dim =
        std::max<std::int64_t>(0, binomial_i64(7, 3) - 7 * 5);
    if (!verify_certificate(cert))
        throw Error("internal: cubic not annihilated on the curve");
    return cert;
}

AHVerdict verify_ah(int n, int d, int r, int trials, std::uint64_t base_seed,
                    std::uint64_t prime) {
    if (trials < 1) throw RangeError("need trials >= 1");
    AHVerdict verdict;
    verdict.n = n;
    verdict.d = d;
    verdict.r = r;
    verdict.predicted = predicted_classification(n, d, r);

    const FieldSpec field = FieldSpec::prime_field(prime);
    std::int64_t max_rank = 0;
    for (int t = 1; t <= trials; ++t) {
        const std::uint64_t seed = derive_seed(base_seed, n, d, r, t);
        auto config = random_general(n, r, 2, seed, field);
        auto rep = hilbert_function(config, d);
        max_rank = std::max(max_rank, rep.hilbert_value);
        if (rep.defect == 0) {
            verdict.observed.kind = ObservedVerdict::Kind::AH;
            verdict.observed.witness_seed = seed;
            verdict.observed.trials_used = t;
            verdict.observed.max_rank_seen = max_rank;
            verdict.agreement = !verdict.predicted.exceptional;
            return verdict;
        }
    }
    verdict.observed.trials_used = trials;
    verdict.observed.max_rank_seen = max_rank;

    if (verdict.predicted.exceptional) {
        // deficiency requires exact evidence, never just a rank shortfall
        switch (*verdict.predicted.family) {
            case ExceptionalFamily::D2Star:
                verdict.observed.certificate = certificate_d2(n, r);
                break;
            case ExceptionalFamily::D4QuadricSquare:
                verdict.observed.certificate = certificate_d4(n, base_seed, prime);
                break;
            case ExceptionalFamily::D3N4Cubic:
                verdict.observed.certificate = certificate_d3n4(base_seed);
                break;
        }
        verdict.observed.kind = ObservedVerdict::Kind::Deficient;
        verdict.agreement = true;
        return verdict;
    }
    verdict.observed.kind = ObservedVerdict::Kind::Inconclusive;
    verdict.agreement = false;
    return verdict;
}

std::int64_t sweep_r_limit(int n, int d) {
    const BigInt limit = ceil_div(binomial(n + d, n), BigInt(n + 1)) + 2;
    return static_cast<std::int64_t>(limit);
}

std::vector<AHVerdict> sweep(const SweepOptions& opts) {
    struct Cell {
        int n, d;
        std::int64_t r;
    };
    std::vector<Cell> cells;
    for (int n = opts.nmin; n <= opts.nmax; ++n)
        for (int d = opts.dmin; d <= opts.dmax; ++d) {
            if (opts.all_r) {
                for (std::int64_t r = 1; r <= sweep_r_limit(n, d); ++r)
                    cells.push_back({n, d, r});
            } else {
                const BigInt c = binomial(n + d, n);
                const std::int64_t lo = static_cast<std::int64_t>(c / (n + 1));
                const std::int64_t hi =
                    static_cast<std::int64_t>(ceil_div(c, BigInt(n + 1)));
                cells.push_back({n, d, lo});
                if (hi != lo) cells.push_back({n, d, hi});
            }
        }

    std::vector<AHVerdict> out(cells.size());
    const int jobs = std::max(1, opts.jobs);
    auto worker = [&](std::size_t start) {
        for (std::size_t i = start; i < cells.size(); i += jobs)
            out[i] = verify_ah(cells[i].n, cells[i].d, static_cast<int>(cells[i].r),
                               opts.trials, opts.base_seed, opts.prime);
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
        for (auto& t : pool) t.join();
    }
    return out;  // cells were generated sorted by (n, d, r)
}

std::string sweep_to_csv(const std::vector<AHVerdict>& rows,
                         const SweepOptions& opts) {
    std::ostringstream csv;
    csv << "n,d,r,predicted,observed,defect,expected,H,witness_seed,trials,field_prime\n";
    for (const auto& v : rows) {
        const std::int64_t expected =
            std::min(binomial_i64(v.n + v.d, v.n), std::int64_t(v.r) * (v.n + 1));
        std::string predicted = v.predicted.exceptional
                                    ? "Exceptional(" + family_name(*v.predicted.family) + ")"
                                    : "AH";
        std::string observed;
        switch (v.observed.kind) {
            case ObservedVerdict::Kind::AH: observed = "AH"; break;
            case ObservedVerdict::Kind::Deficient: observed = "Deficient"; break;
            case ObservedVerdict::Kind::Inconclusive: observed = "Inconclusive"; break;
        }
        csv << v.n << ',' << v.d << ',' << v.r << ',' << predicted << ',' << observed
            << ',' << (expected - v.observed.max_rank_seen) << ',' << expected << ','
            << v.observed.max_rank_seen << ',' << v.observed.witness_seed << ','
            << v.observed.trials_used << ',' << opts.prime << '\n';
    }
    return csv.str();
}

std::string certificate_to_json(const Certificate& cert) {
    nlohmann::json j;
    j["schema"] = 1;
    j["family"] = family_name(cert.family);
    j["n"] = cert.config.n;
    j["d"] = cert.d;
    j["r"] = cert.config.r();
    j["field"] = cert.config.field.describe();
    j["countLowerBound"] = cert.count_lower_bound;
    j["expectedIdealDim"] = cert.expected_ideal_dim;
    j["forms"] = nlohmann::json::array();
    for (const auto& form : cert.exhibited_forms) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : form) coeffs.push_back(c.str());
        j["forms"].push_back(coeffs);
    }
    j["points"] = nlohmann::json::parse(config_to_json(cert.config))["points"];
    return j.dump(2);
}

}  // namespace ahlab
