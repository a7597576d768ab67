#include "ahlab/interpolation.hpp"

#include <algorithm>

#include <json.hpp>

namespace ahlab {

std::int64_t matrix_rank(const FatPointConfig& config, int d) {
    if (config.field.is_prime())
        return static_cast<std::int64_t>(build_matrix<Fp>(config, d).rank());
    return static_cast<std::int64_t>(build_matrix<Rat>(config, d).rank());
}

HilbertReport hilbert_function(const FatPointConfig& config, int d) {
    HilbertReport rep;
    rep.n = config.n;
    rep.d = d;
    rep.r = config.r();
    for (const auto& pt : config.points) rep.multiplicities.push_back(pt.multiplicity);
    rep.field = config.field;
    rep.seed = config.seed;

    const std::int64_t ambient = binomial_i64(config.n + d, config.n);
    rep.multiplicity_e = multiplicity(config);
    rep.expected = std::min(ambient, rep.multiplicity_e);
    rep.hilbert_value = matrix_rank(config, d);
    rep.ideal_dim = ambient - rep.hilbert_value;
    rep.defect = rep.expected - rep.hilbert_value;
    rep.is_AH = rep.defect == 0;
    rep.is_multiplicity_d_independent = rep.hilbert_value == rep.multiplicity_e;
    return rep;
}

std::string report_to_json(const HilbertReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["r"] = rep.r;
    j["mults"] = rep.multiplicities;
    j["H"] = rep.hilbert_value;
    j["idealDim"] = rep.ideal_dim;
    j["e"] = rep.multiplicity_e;
    j["expected"] = rep.expected;
    j["defect"] = rep.defect;
    j["isAH"] = rep.is_AH;
    j["dIndependent"] = rep.is_multiplicity_d_independent;
    j["field"] = rep.field.describe();
    j["seed"] = rep.seed;
    return j.dump(2);
}

CastelnuovoReport castelnuovo_check(const FatPointConfig& config,
                                    const HyperplaneData& hyperplane, int d) {
    // Split the configuration across the hyperplane. Restriction coordinates:
    // with pivot j (first nonzero hyperplane coefficient), a point on L is
    // determined by its other coordinates, so the trace in L = P^{n-1} is the
    // point with coordinate j dropped.
    int pivot = -1;
    for (int j = 0; j <= config.n; ++j) {
        BigInt c = hyperplane.coefficients[j];
        if (config.field.is_prime()) c %= BigInt(config.field.prime);
        if (c != 0) {
            pivot = j;
            break;
        }
    }
    if (pivot < 0) throw RangeError("hyperplane coefficient vector is zero");

    FatPointConfig residue{config.n, config.field, {}, "residue", config.seed};
    FatPointConfig restriction{config.n - 1, config.field, {}, "restriction", config.seed};

    for (const auto& pt : config.points) {
        if (pt.multiplicity > 2)
            throw DecompositionError("only multiplicities 1 and 2 are supported");
        const bool on_l =
            evaluate_linear_form(config.field, hyperplane, pt.coords) == 0;
        if (on_l) {
            if (pt.multiplicity == 2) {
                FatPoint simple = pt;
                simple.multiplicity = 1;
                residue.points.push_back(std::move(simple));
            }
            FatPoint traced;
            traced.multiplicity = pt.multiplicity;
            for (int j = 0; j <= config.n; ++j)
                if (j != pivot) traced.coords.push_back(pt.coords[j]);
            restriction.points.push_back(std::move(traced));
        } else {
            residue.points.push_back(pt);
        }
    }

    CastelnuovoReport rep;
    rep.lhs = matrix_rank(config, d);
    if (residue.points.empty())
        rep.residue_value = 0;
    else if (d - 1 >= 1)
        rep.residue_value = matrix_rank(residue, d - 1);
    else
        rep.residue_value = 1;  // degree 0: a nonempty scheme has H = 1
    rep.restriction_value =
        restriction.points.empty() ? 0 : matrix_rank(restriction, d);
    rep.rhs = rep.residue_value + rep.restriction_value;
    rep.holds = rep.lhs >= rep.rhs;
    return rep;
}

}  // namespace ahlab
