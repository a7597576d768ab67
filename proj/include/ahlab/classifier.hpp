#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ahlab/config.hpp"
#include "ahlab/interpolation.hpp"

namespace ahlab {

// The three deficient families of general double points.
enum class ExceptionalFamily {
    D2Star,           // d=2, 2 <= r <= n: quadrics in the unused variables
    D4QuadricSquare,  // d=4, 2 <= n <= 4, r = C(n+2,2)-1: square of a quadric
    D3N4Cubic,        // d=3, n=4, r=7: the cubic singular along the quartic curve
};

std::string family_name(ExceptionalFamily f);

struct PredictedVerdict {
    bool exceptional = false;
    std::optional<ExceptionalFamily> family;
};

// Exact deficiency evidence: forms in [I_X]_d exhibited for a concrete
// configuration, with the count argument that beats the expected dimension.
struct Certificate {
    ExceptionalFamily family;
    FatPointConfig config;
    int d = 0;
    // coefficient vectors over the fixed monomial basis; exact integers
    // (residues in prime mode)
    std::vector<std::vector<BigInt>> exhibited_forms;
    std::int64_t count_lower_bound = 0;
    std::int64_t expected_ideal_dim = 0;
};

// Every exhibited form must be annihilated by every interpolation row.
bool verify_certificate(const Certificate& cert);
std::string certificate_to_json(const Certificate& cert);

struct ObservedVerdict {
    enum class Kind { AH, Deficient, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::uint64_t witness_seed = 0;  // for AH: reproduces defect 0
    int trials_used = 0;
    std::int64_t max_rank_seen = 0;
    std::optional<Certificate> certificate;  // for Deficient
};

struct AHVerdict {
    int n = 0, d = 0, r = 0;
    PredictedVerdict predicted;
    ObservedVerdict observed;
    bool agreement = false;
};

// Exception list: (d=2, 2<=r<=n), (d=3, n=4, r=7), (d=4, 2<=n<=4,
// r=C(n+2,2)-1); everything else is predicted to have maximal Hilbert
// function.
PredictedVerdict predicted_classification(int n, int d, int r);

// Randomized verification: random witnesses until one achieves defect 0;
// deficiency is only ever claimed with an exact certificate.
AHVerdict verify_ah(int n, int d, int r, int trials, std::uint64_t base_seed,
                    std::uint64_t prime = kDefaultPrime);

Certificate certificate_d2(int n, int r);
Certificate certificate_d4(int n, std::uint64_t seed,
                           std::uint64_t prime = kDefaultPrime);
Certificate certificate_d3n4(std::uint64_t seed);

struct SweepOptions {
    int nmin = 2, nmax = 4;
    int dmin = 1, dmax = 6;
    bool all_r = true;  // otherwise just the two pivotal values
    int trials = 3;
    std::uint64_t base_seed = 0xA11CE;
    std::uint64_t prime = kDefaultPrime;
    int jobs = 1;
};

std::vector<AHVerdict> sweep(const SweepOptions& opts);
std::string sweep_to_csv(const std::vector<AHVerdict>& rows,
                         const SweepOptions& opts);

// Largest r a sweep visits for one (n, d) cell.
std::int64_t sweep_r_limit(int n, int d);

}  // namespace ahlab
