#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ahlab/arith.hpp"
#include "ahlab/field.hpp"

namespace ahlab {

// Coefficient vector of a linear form l = sum c_j x_j; L is the hyperplane
// l = 0.
struct HyperplaneData {
    std::vector<BigInt> coefficients;
};

struct FatPoint {
    std::vector<BigInt> coords;  // exact; residues in [0,p) for prime mode
    int multiplicity = 1;
};

// r points in P^n with multiplicities and exact coordinates. Immutable after
// construction; generators below are pure functions of (params, seed).
struct FatPointConfig {
    int n = 0;
    FieldSpec field;
    std::vector<FatPoint> points;
    std::string provenance;
    std::uint64_t seed = 0;

    int r() const { return static_cast<int>(points.size()); }
};

// True when the coordinate vectors are scalar multiples of each other as
// projective points (all 2x2 minors vanish over the configured field).
bool projectively_equal(const FieldSpec& field, const std::vector<BigInt>& a,
                        const std::vector<BigInt>& b);

FatPointConfig random_general(int n, int r, int multiplicity, std::uint64_t seed,
                              FieldSpec field = FieldSpec::prime_field());

FatPointConfig coordinate_points(int n, int r, int multiplicity,
                                 FieldSpec field = FieldSpec::prime_field());

FatPointConfig random_on_hyperplane(int n, int r, int multiplicity,
                                    const HyperplaneData& hyperplane,
                                    std::uint64_t seed,
                                    FieldSpec field = FieldSpec::prime_field());

FatPointConfig rational_normal_curve_points(int n, int r, int multiplicity,
                                            std::uint64_t seed,
                                            FieldSpec field = FieldSpec::prime_field());

FatPointConfig config_union(const std::vector<FatPointConfig>& configs);

// Value of the linear form at a point, reduced over the configured field.
BigInt evaluate_linear_form(const FieldSpec& field, const HyperplaneData& h,
                            const std::vector<BigInt>& coords);

std::string config_to_json(const FatPointConfig& config);
FatPointConfig config_from_json(const std::string& text);

}  // namespace ahlab
