#include <doctest.h>

#include "ahlab/config.hpp"

using namespace ahlab;

TEST_CASE("random configurations are deterministic in the seed") {
    auto a = random_general(3, 8, 2, 42);
    auto b = random_general(3, 8, 2, 42);
    auto c = random_general(3, 8, 2, 43);
    REQUIRE(a.r() == 8);
    CHECK(a.points.size() == b.points.size());
    bool same = true, diff = false;
    for (int i = 0; i < a.r(); ++i) {
        if (a.points[i].coords != b.points[i].coords) same = false;
        if (a.points[i].coords != c.points[i].coords) diff = true;
    }
    CHECK(same);
    CHECK(diff);
}

TEST_CASE("random points are pairwise projectively distinct and chart-normalized") {
    auto cfg = random_general(4, 12, 2, 7);
    for (const auto& pt : cfg.points) CHECK(pt.coords[0] == 1);
    for (int i = 0; i < cfg.r(); ++i)
        for (int j = i + 1; j < cfg.r(); ++j)
            CHECK(!projectively_equal(cfg.field, cfg.points[i].coords,
                                      cfg.points[j].coords));
}

TEST_CASE("projective equality sees scalar multiples") {
    auto field = FieldSpec::rational();
    std::vector<BigInt> p{1, 2, 3};
    std::vector<BigInt> q{2, 4, 6};
    std::vector<BigInt> s{1, 2, 4};
    CHECK(projectively_equal(field, p, q));
    CHECK(!projectively_equal(field, p, s));
}

TEST_CASE("coordinate points") {
    auto cfg = coordinate_points(3, 2, 2);
    REQUIRE(cfg.r() == 2);
    CHECK(cfg.points[0].coords == std::vector<BigInt>{1, 0, 0, 0});
    CHECK(cfg.points[1].coords == std::vector<BigInt>{0, 1, 0, 0});
    CHECK_THROWS_AS(coordinate_points(3, 5, 2), RangeError);
    CHECK_THROWS_AS(coordinate_points(3, 0, 2), RangeError);
}

TEST_CASE("points drawn on a hyperplane satisfy its equation") {
    HyperplaneData h;
    h.coefficients = {BigInt(2), BigInt(0), BigInt(5), BigInt(1)};
    auto cfg = random_on_hyperplane(3, 6, 2, h, 99);
    for (const auto& pt : cfg.points)
        CHECK(evaluate_linear_form(cfg.field, h, pt.coords) == 0);
}

TEST_CASE("rational normal curve points have the moment shape") {
    auto cfg = rational_normal_curve_points(4, 5, 2, 3, FieldSpec::rational());
    for (const auto& pt : cfg.points) {
        CHECK(pt.coords[0] == 1);
        const BigInt t = pt.coords[1];
        BigInt power = 1;
        for (int k = 0; k <= 4; ++k) {
            CHECK(pt.coords[k] == power);
            power *= t;
        }
    }
}

TEST_CASE("config union rejects duplicates and mismatched spaces") {
    auto a = random_general(2, 3, 2, 1);
    auto b = random_general(2, 3, 1, 2);
    auto u = config_union({a, b});
    CHECK(u.r() == 6);
    CHECK_THROWS_AS(config_union({a, a}), DuplicatePoint);
    auto other = random_general(3, 2, 1, 1);
    CHECK_THROWS_AS(config_union({a, other}), Error);
}

TEST_CASE("config JSON round trip") {
    auto cfg = rational_normal_curve_points(3, 4, 2, 11, FieldSpec::rational());
    auto back = config_from_json(config_to_json(cfg));
    CHECK(back.n == cfg.n);
    CHECK(back.field == cfg.field);
    REQUIRE(back.r() == cfg.r());
    for (int i = 0; i < cfg.r(); ++i) {
        CHECK(back.points[i].coords == cfg.points[i].coords);
        CHECK(back.points[i].multiplicity == cfg.points[i].multiplicity);
    }

    auto prime_cfg = random_general(2, 3, 2, 5);
    auto prime_back = config_from_json(config_to_json(prime_cfg));
    CHECK(prime_back.field == prime_cfg.field);
    CHECK(prime_back.points[2].coords == prime_cfg.points[2].coords);
}
