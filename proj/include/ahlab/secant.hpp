#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ahlab/config.hpp"
#include "ahlab/interpolation.hpp"

namespace ahlab {

// nu_d(P): the monomial evaluation vector of P over MonomialBasis(n, d).
struct VeroneseVector {
    int n = 0, d = 0;
    std::vector<BigInt> coords;
};

VeroneseVector veronese_embed(const std::vector<BigInt>& point, int d,
                              FieldSpec field = FieldSpec::rational());

// Rank of the span of the tangent spaces of the Veronese at the given simple
// points: rows are the coefficient vectors of l_P^{d-1} x_j, all j, all P.
// Affine (cone) rank; the projective dimension is rank - 1.
std::int64_t terracini_span_rank(const FatPointConfig& points, int d);

struct SecantReport {
    int n = 0, d = 0, r = 0;
    std::int64_t ambient_dim = 0;   // N = C(n+d,n) - 1
    std::int64_t expected_dim = 0;  // min{(n+1)r - 1, N}
    std::int64_t actual_dim = 0;
    std::int64_t defect = 0;
    bool fills_ambient = false;
    std::uint64_t seed = 0;
};

// dim sigma_r(V^n_d) via max-over-trials tangent-span rank, cross-checked
// against the Hilbert function of the double points on the same support.
SecantReport secant_dimension(int n, int d, int r, int trials, std::uint64_t seed,
                              std::uint64_t prime = kDefaultPrime);

struct WaringReport {
    int n = 0, d = 0;
    std::int64_t G = 0;
    std::int64_t naive = 0;  // ceil(C(n+d,n) / (n+1))
    std::int64_t exceptional_bump = 0;
};

WaringReport waring_G(int n, int d, int trials = 4,
                      std::uint64_t base_seed = 0xA11CE,
                      std::uint64_t prime = kDefaultPrime);

std::string secant_report_to_json(const SecantReport& rep);
std::string waring_report_to_json(const WaringReport& rep);

}  // namespace ahlab
