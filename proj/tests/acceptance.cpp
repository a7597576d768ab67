// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each check recomputes from scratch with the default seed.
#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "ahlab/classifier.hpp"
#include "ahlab/induction.hpp"
#include "ahlab/interpolation.hpp"
#include "ahlab/rng.hpp"
#include "ahlab/secant.hpp"

using namespace ahlab;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool ok,
            const std::string& detail = "") {
    std::cout << "criterion " << number << " [" << label << "]: "
              << (ok ? "PASS" : "FAIL");
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!ok) ++failures;
}

bool criterion1(std::string& detail) {
    SweepOptions opts;  // n 2..4, d 1..6, all r, 3 trials, default seed
    opts.jobs = 4;
    auto rows = sweep(opts);
    for (const auto& v : rows)
        if (!v.agreement) {
            detail = "disagreement at (" + std::to_string(v.n) + "," +
                     std::to_string(v.d) + "," + std::to_string(v.r) + ")";
            return false;
        }
    return !rows.empty();
}

bool criterion2(std::string& detail) {
    for (auto [n, d, r] : {std::tuple{5, 4, 21}, {6, 4, 30}, {7, 4, 41},
                           {7, 4, 42}, {7, 3, 15}}) {
        auto v = verify_ah(n, d, r, 3, 0xA11CE);
        if (v.observed.kind != ObservedVerdict::Kind::AH) {
            detail = "(" + std::to_string(n) + "," + std::to_string(d) + "," +
                     std::to_string(r) + ") did not reach the expected rank";
            return false;
        }
    }
    return true;
}

std::int64_t generic_h(int n, int d, int r) {
    std::int64_t best = 0;
    for (int t = 1; t <= 3; ++t) {
        auto cfg = random_general(n, r, 2, derive_seed(0xA11CE, n, d, r, t));
        best = std::max(best, matrix_rank(cfg, d));
    }
    return best;
}

bool criterion3(std::string& detail) {
    for (int n = 2; n <= 6; ++n)
        for (int r = 2; r <= n; ++r) {
            const std::int64_t want =
                binomial_i64(n + 2, 2) - binomial_i64(n - r + 2, 2);
            if (generic_h(n, 2, r) != want) {
                detail = "d=2 family at n=" + std::to_string(n) +
                         ", r=" + std::to_string(r);
                return false;
            }
            auto v = verify_ah(n, 2, r, 3, 0xA11CE);
            if (!v.observed.certificate ||
                !verify_certificate(*v.observed.certificate)) {
                detail = "missing certificate in the d=2 family";
                return false;
            }
        }
    const std::tuple<int, int, int, std::int64_t> pinned[] = {
        {2, 4, 5, 14}, {3, 4, 9, 34}, {4, 4, 14, 69}, {4, 3, 7, 34}};
    for (auto [n, d, r, want] : pinned) {
        if (generic_h(n, d, r) != want) {
            detail = "pinned value at (" + std::to_string(n) + "," +
                     std::to_string(d) + "," + std::to_string(r) + ")";
            return false;
        }
        auto v = verify_ah(n, d, r, 3, 0xA11CE);
        if (v.observed.kind != ObservedVerdict::Kind::Deficient ||
            !v.observed.certificate || !verify_certificate(*v.observed.certificate)) {
            detail = "missing certificate at (" + std::to_string(n) + "," +
                     std::to_string(d) + "," + std::to_string(r) + ")";
            return false;
        }
    }
    return true;
}

bool criterion4(std::string& detail) {
    for (int d : {4, 5}) {
        if (reproduce_tables(d) != embedded_table(d)) {
            detail = "table d=" + std::to_string(d);
            return false;
        }
        if (table_to_text(reproduce_tables(d), d) !=
            table_to_text(embedded_table(d), d)) {
            detail = "text rendering d=" + std::to_string(d);
            return false;
        }
    }
    return true;
}

bool criterion5(std::string& detail) {
    for (int n = 2; n <= 50; ++n)
        for (int d = 4; d <= 50; ++d) {
            auto [lo, hi] = pivotal_r(n, d);
            for (const BigInt& r : {lo, hi}) {
                auto s = horace_split(n, d, r);
                if (r * (n + 1) !=
                    binomial(n + d - 1, n) + BigInt(n) * s.q + s.epsilon) {
                    detail = "reconstruction at n=" + std::to_string(n) +
                             ", d=" + std::to_string(d);
                    return false;
                }
                auto rep = lemma_numeric_check(n, d, r, s.q, s.epsilon);
                const bool need3 = d == 4 && n >= 8;
                if (!rep.c1 || !rep.c2 || !rep.c4 || (need3 && !rep.c3)) {
                    detail = "inequality at n=" + std::to_string(n) +
                             ", d=" + std::to_string(d);
                    return false;
                }
            }
        }
    return true;
}

bool criterion6(std::string& detail) {
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(counter_draw(99, trial, 0) % 4);
        const int d = 2 + static_cast<int>(counter_draw(99, trial, 1) % 4);
        const std::int64_t rmax =
            static_cast<std::int64_t>(ceil_div(binomial(n + d, n), BigInt(n + 1))) + 2;
        const int r = 1 + static_cast<int>(counter_draw(99, trial, 2) %
                                           static_cast<std::uint64_t>(rmax));
        auto simple = random_general(n, r, 1, 40'000 + trial);
        auto doubles = simple;
        for (auto& pt : doubles.points) pt.multiplicity = 2;
        if (terracini_span_rank(simple, d) != matrix_rank(doubles, d)) {
            detail = "mismatch at (" + std::to_string(n) + "," + std::to_string(d) +
                     "," + std::to_string(r) + ")";
            return false;
        }
    }
    return true;
}

bool criterion7(std::string& detail) {
    const std::tuple<int, int, std::int64_t> pinned[] = {
        {2, 4, 6}, {3, 4, 10}, {4, 4, 15}, {4, 3, 8}};
    for (auto [n, d, want] : pinned) {
        if (waring_G(n, d).G != want) {
            detail = "G(" + std::to_string(n) + "," + std::to_string(d) + ")";
            return false;
        }
    }
    for (int d = 1; d <= 12; ++d)
        if (waring_G(1, d).G != (d + 2) / 2) {
            detail = "G(1," + std::to_string(d) + ")";
            return false;
        }
    return true;
}

bool criterion8(std::string& detail) {
    for (int n = 2; n <= 6; ++n)
        for (int r = 2; r <= n; ++r)
            if (!verify_certificate(certificate_d2(n, r))) {
                detail = "degree-2 certificate n=" + std::to_string(n);
                return false;
            }
    for (int n = 2; n <= 4; ++n)
        if (!verify_certificate(certificate_d4(n, 0xA11CE))) {
            detail = "quartic certificate n=" + std::to_string(n);
            return false;
        }
    // exact rational check, including the determinant identity enforced inside
    auto cubic = certificate_d3n4(0xA11CE);
    if (cubic.config.field != FieldSpec::rational() || !verify_certificate(cubic)) {
        detail = "cubic certificate over the rationals";
        return false;
    }
    return true;
}

bool criterion9(std::string& detail) {
    struct Want {
        int n, d;
        std::vector<std::pair<std::int64_t, std::vector<std::tuple<int, int, std::int64_t>>>> roots;
    };
    const std::vector<Want> wants = {
        {3, 5, {{14, {{2, 5, 7}, {3, 4, 7}, {3, 3, 7}}}}},
        {3, 6, {{21, {{2, 6, 9}, {3, 5, 12}, {3, 4, 11}}}}},
        {4, 5,
         {{25, {{3, 5, 13}, {4, 4, 12}, {4, 3, 9}}},
          {26, {{3, 5, 15}, {4, 4, 11}, {4, 3, 11}}}}},
        {4, 6, {{42, {{3, 6, 21}, {4, 5, 21}, {4, 4, 21}}}}},
    };
    for (const auto& want : wants) {
        InductionTree tree;
        try {
            tree = build_tree(want.n, want.d);
        } catch (const ExpansionStuck&) {
            detail = "expansion stuck at (" + std::to_string(want.n) + "," +
                     std::to_string(want.d) + ")";
            return false;
        }
        if (tree.roots.size() != want.roots.size()) {
            detail = "root count at (" + std::to_string(want.n) + "," +
                     std::to_string(want.d) + ")";
            return false;
        }
        for (std::size_t i = 0; i < want.roots.size(); ++i) {
            const auto& root = tree.roots[i];
            const auto& [r, children] = want.roots[i];
            bool ok = root.kind == NodeKind::Core && root.r == r &&
                      root.children.size() == children.size();
            for (std::size_t c = 0; ok && c < children.size(); ++c) {
                const auto& node = root.children[c].second;
                ok = node.n == std::get<0>(children[c]) &&
                     node.d == std::get<1>(children[c]) &&
                     node.r == std::get<2>(children[c]);
            }
            if (!ok) {
                detail = "child triple at (" + std::to_string(want.n) + "," +
                         std::to_string(want.d) + "), r=" + std::to_string(r);
                return false;
            }
        }
        auto rep = check_tree(tree, 3, 0xA11CE);
        if (!rep.ok()) {
            detail = "check_tree: " + rep.failures.front();
            return false;
        }
    }
    return true;
}

bool criterion10(std::string& detail) {
    // equality on the monomial control case
    FatPointConfig control{2, FieldSpec::prime_field(), {{{0, 1, 1}, 2}}, "control", 0};
    HyperplaneData ell{{BigInt(1), BigInt(0), BigInt(0)}};
    auto ctrl = castelnuovo_check(control, ell, 2);
    if (!(ctrl.lhs == 3 && ctrl.lhs == ctrl.rhs)) {
        detail = "control case not an equality";
        return false;
    }
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(counter_draw(55, trial, 0) % 2);
        const int d = 2 + static_cast<int>(counter_draw(55, trial, 1) % 4);
        const int on = 1 + static_cast<int>(counter_draw(55, trial, 2) % 3);
        const int off = 1 + static_cast<int>(counter_draw(55, trial, 3) % 3);
        HyperplaneData h;
        h.coefficients.assign(n + 1, BigInt(0));
        h.coefficients[n] = 1;
        auto cfg = config_union({random_on_hyperplane(n, on, 2, h, 600 + trial),
                                 random_general(n, off, 2, 9600 + trial)});
        auto rep = castelnuovo_check(cfg, h, d);
        if (!rep.holds) {
            detail = "violated at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    struct Entry {
        int number;
        const char* label;
        bool (*fn)(std::string&);
    };
    const Entry entries[] = {
        {1, "full classification sweep", criterion1},
        {2, "large reference cells", criterion2},
        {3, "exact exceptional defects", criterion3},
        {4, "table reproduction", criterion4},
        {5, "integer property suite", criterion5},
        {6, "terracini equivalence oracle", criterion6},
        {7, "waring values", criterion7},
        {8, "certificate self-verification", criterion8},
        {9, "induction trees", criterion9},
        {10, "castelnuovo inequality", criterion10},
    };
    for (const auto& e : entries) {
        std::string detail;
        bool ok = false;
        try {
            ok = e.fn(detail);
        } catch (const std::exception& ex) {
            detail = std::string("exception: ") + ex.what();
        }
        report(e.number, e.label, ok, detail);
    }
    return failures == 0 ? 0 : 1;
}
