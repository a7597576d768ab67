#include "ahlab/config.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "ahlab/errors.hpp"
#include "ahlab/rng.hpp"

namespace ahlab {

namespace {

BigInt reduce(const FieldSpec& field, const BigInt& z) {
    if (!field.is_prime()) return z;
    BigInt r = z % BigInt(field.prime);
    if (r < 0) r += field.prime;
    return r;
}

BigInt draw_scalar(const FieldSpec& field, std::uint64_t seed, std::uint64_t a,
                   std::uint64_t b, std::uint64_t c) {
    std::uint64_t raw = counter_draw(seed, a, b, c);
    if (field.is_prime()) return BigInt(raw % field.prime);
    // rational mode: small nonneg integers keep certificate arithmetic light
    return BigInt(raw % 10007ULL);
}

void check_distinct(const FatPointConfig& config) {
    for (std::size_t i = 0; i < config.points.size(); ++i)
        for (std::size_t j = i + 1; j < config.points.size(); ++j)
            if (projectively_equal(config.field, config.points[i].coords,
                                   config.points[j].coords))
                throw DuplicatePoint("points " + std::to_string(i) + " and " +
                                     std::to_string(j) + " coincide in P^n");
}

}  // namespace

bool projectively_equal(const FieldSpec& field, const std::vector<BigInt>& a,
                        const std::vector<BigInt>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (reduce(field, a[i] * b[j] - a[j] * b[i]) != 0) return false;
    return true;
}

BigInt evaluate_linear_form(const FieldSpec& field, const HyperplaneData& h,
                            const std::vector<BigInt>& coords) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < coords.size(); ++j)
        acc += h.coefficients[j] * coords[j];
    return reduce(field, acc);
}

FatPointConfig random_general(int n, int r, int multiplicity, std::uint64_t seed,
                              FieldSpec field) {
    if (r < 1) throw RangeError("need r >= 1");
    FatPointConfig config{n, field, {}, "random-general", seed};
    for (int i = 0; i < r; ++i) {
        bool placed = false;
        for (std::uint64_t attempt = 0; attempt < 100 && !placed; ++attempt) {
            FatPoint pt;
            pt.multiplicity = multiplicity;
            pt.coords.assign(n + 1, BigInt(0));
            pt.coords[0] = 1;  // affine chart, guarantees a valid point
            for (int j = 1; j <= n; ++j)
                pt.coords[j] = draw_scalar(field, seed, i, j, attempt);
            bool clash = false;
            for (const auto& other : config.points)
                if (projectively_equal(field, pt.coords, other.coords)) clash = true;
            if (!clash) {
                config.points.push_back(std::move(pt));
                placed = true;
            }
        }
        if (!placed)
            throw FieldTooSmall("could not place " + std::to_string(r) +
                                " distinct points after 100 rejections");
    }
    return config;
}

FatPointConfig coordinate_points(int n, int r, int multiplicity, FieldSpec field) {
    if (r < 1 || r > n + 1)
        throw RangeError("coordinate points require 1 <= r <= n+1");
    FatPointConfig config{n, field, {}, "coordinate-points", 0};
    for (int i = 0; i < r; ++i) {
        FatPoint pt;
        pt.multiplicity = multiplicity;
        pt.coords.assign(n + 1, BigInt(0));
        pt.coords[i] = 1;
        config.points.push_back(std::move(pt));
    }
    return config;
}

FatPointConfig random_on_hyperplane(int n, int r, int multiplicity,
                                    const HyperplaneData& hyperplane,
                                    std::uint64_t seed, FieldSpec field) {
    if (r < 1) throw RangeError("need r >= 1");
    int pivot = -1;
    for (int j = 0; j <= n; ++j)
        if (reduce(field, hyperplane.coefficients[j]) != 0) {
            pivot = j;
            break;
        }
    if (pivot < 0) throw RangeError("hyperplane coefficient vector is zero");

    FatPointConfig config{n, field, {}, "random-on-hyperplane", seed};
    const BigInt lp = hyperplane.coefficients[pivot];
    for (int i = 0; i < r; ++i) {
        bool placed = false;
        for (std::uint64_t attempt = 0; attempt < 100 && !placed; ++attempt) {
            // Free coordinates random (first one pinned to 1), then scale the
            // whole point by l_pivot so the pivot coordinate stays integral:
            //   x_k = l_pivot * q_k (k != pivot),  x_pivot = -sum l_k q_k.
            std::vector<BigInt> q(n + 1, BigInt(0));
            bool first_free = true;
            for (int j = 0; j <= n; ++j) {
                if (j == pivot) continue;
                if (first_free) {
                    q[j] = 1;
                    first_free = false;
                } else {
                    q[j] = draw_scalar(field, seed, i, j, attempt);
                }
            }
            FatPoint pt;
            pt.multiplicity = multiplicity;
            pt.coords.assign(n + 1, BigInt(0));
            BigInt acc = 0;
            for (int j = 0; j <= n; ++j) {
                if (j == pivot) continue;
                pt.coords[j] = reduce(field, lp * q[j]);
                acc += hyperplane.coefficients[j] * q[j];
            }
            pt.coords[pivot] = reduce(field, -acc);
            bool clash = false;
            for (const auto& other : config.points)
                if (projectively_equal(field, pt.coords, other.coords)) clash = true;
            if (!clash) {
                config.points.push_back(std::move(pt));
                placed = true;
            }
        }
        if (!placed)
            throw FieldTooSmall("could not place distinct points on hyperplane");
    }
    return config;
}

FatPointConfig rational_normal_curve_points(int n, int r, int multiplicity,
                                            std::uint64_t seed, FieldSpec field) {
    if (r < 1) throw RangeError("need r >= 1");
    FatPointConfig config{n, field, {}, "rational-normal-curve", seed};
    std::set<BigInt> used;
    for (int i = 0; i < r; ++i) {
        bool placed = false;
        for (std::uint64_t attempt = 0; attempt < 100 && !placed; ++attempt) {
            BigInt t = draw_scalar(field, seed, i, 0, attempt);
            if (used.count(t)) continue;
            used.insert(t);
            FatPoint pt;
            pt.multiplicity = multiplicity;
            pt.coords.assign(n + 1, BigInt(0));
            BigInt power = 1;
            for (int j = 0; j <= n; ++j) {
                pt.coords[j] = reduce(field, power);
                power *= t;
            }
            config.points.push_back(std::move(pt));
            placed = true;
        }
        if (!placed)
            throw FieldTooSmall("could not draw distinct curve parameters");
    }
    // distinct parameters give distinct points, but keep the invariant checked
    check_distinct(config);
    return config;
}

FatPointConfig config_union(const std::vector<FatPointConfig>& configs) {
    if (configs.empty()) throw RangeError("union of zero configurations");
    FatPointConfig out = configs.front();
    out.provenance = "union";
    for (std::size_t i = 1; i < configs.size(); ++i) {
        if (configs[i].n != out.n || !(configs[i].field == out.field))
            throw RangeError("union requires matching ambient space and field");
        for (const auto& pt : configs[i].points) out.points.push_back(pt);
    }
    check_distinct(out);
    return out;
}

std::string config_to_json(const FatPointConfig& config) {
    nlohmann::json j;
    j["n"] = config.n;
    if (config.field.is_prime())
        j["field"] = {{"prime", config.field.prime}};
    else
        j["field"] = "rational";
    j["points"] = nlohmann::json::array();
    for (const auto& pt : config.points) {
        nlohmann::json coords = nlohmann::json::array();
        for (const auto& c : pt.coords) coords.push_back(c.str());
        j["points"].push_back({{"coords", coords}, {"mult", pt.multiplicity}});
    }
    return j.dump(2);
}

FatPointConfig config_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    FatPointConfig config;
    config.n = j.at("n").get<int>();
    if (j.at("field").is_string())
        config.field = FieldSpec::rational();
    else
        config.field = FieldSpec::prime_field(j.at("field").at("prime").get<std::uint64_t>());
    config.provenance = "file";
    for (const auto& p : j.at("points")) {
        FatPoint pt;
        pt.multiplicity = p.at("mult").get<int>();
        if (pt.multiplicity < 1) throw RangeError("multiplicities must be >= 1");
        for (const auto& c : p.at("coords"))
            pt.coords.emplace_back(c.get<std::string>());
        if (static_cast<int>(pt.coords.size()) != config.n + 1)
            throw RangeError("coordinate vector length must be n+1");
        bool nonzero = false;
        for (const auto& c : pt.coords)
            if (c != 0) nonzero = true;
        if (!nonzero) throw RangeError("zero coordinate vector is not a point");
        config.points.push_back(std::move(pt));
    }
    check_distinct(config);
    return config;
}

}  // namespace ahlab
