#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dissect/numeric.hpp"
#include "dissect/reduction.hpp"
#include "test_util.hpp"

#include <random>

using namespace dissect;
using testutil::rat;

TEST_CASE("build_path: straight when clear, detour when blocked") {
    CPath s = build_path({0, 0}, {1, 0}, {Cx{5, 5}}, 0.1);
    CHECK(s.points.size() == 2);

    CPath d = build_path({0, 0}, {2, 0}, {Cx{1, 0}}, 0.2);
    CHECK(d.points.size() > 2);
    CHECK(path_distance(d, {Cx{1, 0}}) >= 0.2 * 0.999);
    CHECK(std::abs(d.points.front() - Cx{0, 0}) == 0);
    CHECK(std::abs(d.points.back() - Cx{2, 0}) == 0);

    CHECK_THROWS_AS(build_path({0, 0}, {1, 0}, {Cx{0.01, 0}}, 0.1), std::invalid_argument);
}

TEST_CASE("build_path: clearance property on random instances") {
    std::mt19937_64 rng(11);
    auto U = [&](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() >> 11) / 9007199254740992.0);
    };
    int built = 0;
    for (int t = 0; t < 200; ++t) {
        std::vector<Cx> sing;
        int k = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < k; ++i) sing.push_back({U(-1, 1), U(-1, 1)});
        double delta = U(0.02, 0.08);
        Cx z0{U(-1.5, 1.5), U(-1.5, 1.5)}, z1{U(-1.5, 1.5), U(-1.5, 1.5)};
        bool ok = std::abs(z1 - z0) > 4 * delta;
        for (const auto& z : sing)
            ok = ok && std::abs(z0 - z) > 2 * delta && std::abs(z1 - z) > 2 * delta;
        if (!ok) continue;
        try {
            CPath p = build_path(z0, z1, sing, delta);
            ++built;
            CHECK(path_distance(p, sing) >= delta * 0.999);
        } catch (const std::exception&) {
        }
    }
    CHECK(built > 100);
}

TEST_CASE("empty word evaluates to 1") {
    QuadratureConfig cfg;
    CPath p = build_path({0, 0}, {1, 1}, {}, 0.1);
    CHECK(std::abs(eval_word({}, p, cfg) - Cx{1, 0}) < 1e-15);
}

TEST_CASE("degree 1: quadrature matches the closed form") {
    QuadratureConfig cfg;
    // I(-b0; a1; b1) with b0 = 0, a1 = 2, b1 = 1: (1/2pi i) log(1/2)
    CPath p = build_path({0, 0}, {1, 0}, {Cx{2, 0}}, 0.3);
    Cx quad = eval_word({Cx{2, 0}}, p, cfg);
    Cx closed = eval_degree1_closed(Cx{2, 0}, Cx{0, 0}, Cx{1, 0}, 0);
    CHECK(std::abs(quad - closed) < 1e-12);
    CHECK(std::abs(closed - Cx{0, std::log(0.5) / (2 * 3.14159265358979323846) * -1.0}) < 1e-12);
}

TEST_CASE("winding shifts by integers; degenerate arguments rejected") {
    Cx v0 = eval_degree1_closed(rat(2), rat(0), rat(1), 0);
    Cx v1 = eval_degree1_closed(rat(2), rat(0), rat(1), 1);
    CHECK(std::abs(v1 - v0 - 1.0) < 1e-15);
    CHECK_THROWS_AS(eval_degree1_closed(rat(1), rat(-1), rat(2), 0), std::domain_error);
    CHECK_THROWS_AS(eval_degree1_closed(rat(1), rat(0), rat(1), 0), std::domain_error);
    // b1 = -b0: trivial loop evaluates to 0
    CHECK(std::abs(eval_degree1_closed(rat(5), rat(-1), rat(-1), 0)) < 1e-15);
}

TEST_CASE("shuffle identity to 1e-8") {
    QuadratureConfig cfg;
    CPath p = build_path({0, 0}, {1, 1}, {Cx{2, 0}, Cx{-1, -1}}, 0.3);
    Cx A{2, 0}, B{-1, -1};
    Cx lhs = eval_word({A}, p, cfg) * eval_word({B}, p, cfg);
    Cx rhs = eval_word({A, B}, p, cfg) + eval_word({B, A}, p, cfg);
    CHECK(std::abs(lhs - rhs) < 1e-8);
}

TEST_CASE("path composition identity to 1e-8") {
    QuadratureConfig cfg;
    Cx A{2, 0}, B{-1, -1};
    CPath p1 = build_path({0, 0}, {1, 1}, {A, B}, 0.3);
    CPath p2 = build_path({1, 1}, {0, 2}, {A, B}, 0.3);
    CPath whole;
    whole.points = p1.points;
    whole.points.insert(whole.points.end(), p2.points.begin() + 1, p2.points.end());
    Cx full = eval_word({A, B}, whole, cfg);
    Cx conv = eval_word({A, B}, p1, cfg) + eval_word({A}, p1, cfg) * eval_word({B}, p2, cfg) +
              eval_word({A, B}, p2, cfg);
    CHECK(std::abs(full - conv) < 1e-8);
}

TEST_CASE("eval_dissection: degree-1 corolla matches the closed form") {
    QuadratureConfig cfg;
    DecoratedDiagram d(DissectionDiagram({0}),
                       {Scalar::gaussian(Rational(2), Rational(0))},
                       {Scalar::gaussian(Rational(0), Rational(0)),
                        Scalar::gaussian(Rational(1), Rational(0))});
    EvalRecord r = eval_dissection(d, cfg);
    REQUIRE(r.terms.size() == 1);
    REQUIRE(r.paths.size() == 1);
    Cx closed = eval_degree1_closed(Cx{2, 0}, Cx{0, 0}, Cx{1, 0}, 0);
    CHECK(std::abs(r.value - closed) < 1e-10);
}

TEST_CASE("eval_iterint checks path endpoints against the symbol") {
    QuadratureConfig cfg;
    ItIntSymbol s;
    s.a0 = rat(0);
    s.word = {rat(2)};
    s.a_end = rat(1);
    CPath wrong{{Cx{0, 0}, Cx{2, 2}}, 0.1};
    CHECK_THROWS_AS(eval_iterint(s, wrong, cfg), std::invalid_argument);
}

TEST_CASE("quadrature refinement is monotone") {
    CPath p = build_path({0, 0}, {2, 0}, {Cx{1.0, 0.4}}, 0.2);
    double tol = 1e-6;
    Cx prev = eval_word({Cx{1.0, 0.4}}, p, {12, 4, tol, 10});
    for (int step = 0; step < 3; ++step) {
        double tol2 = tol / 2;
        Cx next = eval_word({Cx{1.0, 0.4}}, p, {12, 4, tol2, 10});
        CHECK(std::abs(next - prev) <= tol);
        prev = next;
        tol = tol2;
    }
}
