#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dissect/arrangement.hpp"
#include "test_util.hpp"

using namespace dissect;
using testutil::rat;
using testutil::sym;
using testutil::sym_diagram;

namespace {
AffineForm form(std::vector<long> coeff, Scalar c0) {
    AffineForm f;
    for (long c : coeff) f.coeff.push_back(Scalar::rational(Rational(c)));
    f.c0 = std::move(c0);
    return f;
}
} // namespace

TEST_CASE("from_diagram: the degree-3 equations") {
    DecoratedDiagram d = sym_diagram(DissectionDiagram({0, 1, 1}));
    BiArrangement a = from_diagram(d);
    REQUIRE(a.n == 3);
    REQUIRE(a.L.size() == 3);
    REQUIRE(a.M.size() == 4);
    CHECK(a.L[0] == form({1, 0, 0}, -sym("a1")));          // t1 - a1
    CHECK(a.L[1] == form({-1, 1, 0}, -sym("a2")));         // t2 - t1 - a2
    CHECK(a.L[2] == form({-1, 0, 1}, -sym("a3")));         // t3 - t1 - a3
    CHECK(a.M[0] == form({-1, 0, 0}, -sym("b0")));         // -t1 - b0
    CHECK(a.M[1] == form({1, -1, 0}, -sym("b1")));         // t1 - t2 - b1
    CHECK(a.M[2] == form({0, 1, -1}, -sym("b2")));         // t2 - t3 - b2
    CHECK(a.M[3] == form({0, 0, 1}, -sym("b3")));          // t3 - b3
}

TEST_CASE("from_diagram: degree 1 and corollas") {
    DecoratedDiagram d1 = sym_diagram(DissectionDiagram({0}));
    BiArrangement a1 = from_diagram(d1);
    CHECK(a1.L[0] == form({1}, -sym("a1")));
    CHECK(a1.M[0] == form({-1}, -sym("b0")));
    CHECK(a1.M[1] == form({1}, -sym("b1")));

    BiArrangement ac = from_diagram(sym_diagram(corolla(4).base()));
    for (int i = 0; i < 4; ++i) {
        std::vector<long> e(4, 0);
        e[i] = 1;
        CHECK(ac.L[i] == form(e, -sym("a" + std::to_string(i + 1))));
    }

    DecoratedDiagram f(DissectionDiagram({0}),
                       {Scalar::complex_float({1, 0})},
                       {Scalar::complex_float({0, 0}), Scalar::complex_float({1, 0})});
    CHECK_THROWS_AS(from_diagram(f), std::invalid_argument);
}

TEST_CASE("stratum: trivial, parallel, full rank") {
    DecoratedDiagram d = sym_diagram(DissectionDiagram({0, 1, 1}));
    BiArrangement a = from_diagram(d);
    Stratum s0 = stratum(a, {}, {});
    CHECK_FALSE(s0.empty);
    CHECK(s0.codim == 0);

    BiArrangement par;
    par.n = 2;
    par.L = {form({1, 0}, rat(0)), form({1, 0}, rat(1))};
    CHECK(stratum(par, {0, 1}, {}).empty);

    Stratum sfull = stratum(a, {0, 1, 2}, {});
    CHECK_FALSE(sfull.empty);
    CHECK(sfull.codim == 3);
}

TEST_CASE("affinely generic: the two remark examples") {
    BiArrangement par;
    par.n = 2;
    par.L = {form({1, 0}, rat(0)), form({1, 0}, rat(1))};
    CHECK(is_affinely_generic(par)); // two parallel lines

    BiArrangement tri;
    tri.n = 2;
    tri.L = {form({1, 0}, rat(0)), form({0, 1}, rat(0)), form({1, 1}, rat(0))};
    CHECK_FALSE(is_affinely_generic(tri)); // three concurrent lines
}

TEST_CASE("graph cycle criterion agrees with exact rank (degree 3, symbolic)") {
    DecoratedDiagram d = sym_diagram(DissectionDiagram({0, 1, 1}));
    BiArrangement a = from_diagram(d);
    std::vector<int> chords{1, 2, 3}, sides{0, 1, 2, 3};
    for (const auto& I : subsets_of(chords))
        for (const auto& J : subsets_of(sides)) {
            std::vector<int> Ipos;
            for (int i : I) Ipos.push_back(i - 1);
            CHECK(stratum(a, Ipos, J) == graph_cycle_criterion(d, I, J));
        }
    // degree-1 triangle: chords {1}, sides {0,1} close a cycle
    DecoratedDiagram d1 = sym_diagram(DissectionDiagram({0}));
    CHECK(graph_cycle_criterion(d1, {1}, {0, 1}).empty);
    CHECK(stratum(from_diagram(d1), {0}, {0, 1}).empty);

    DecoratedDiagram bad(DissectionDiagram({0}), {Scalar::formal({})},
                         {sym("b0"), sym("b1")});
    CHECK_THROWS_AS(graph_cycle_criterion(bad, {1}, {}), std::invalid_argument);
}

TEST_CASE("delete, contract, product basics") {
    DecoratedDiagram d = sym_diagram(DissectionDiagram({0, 1, 1}));
    BiArrangement a = from_diagram(d);

    BiArrangement gone = delete_forms(delete_forms(a, FormSide::L, {}), FormSide::M, {});
    CHECK(gone.L.empty());
    CHECK(gone.M.empty());

    // Contract onto L_1 (t1 = a1): M_0 becomes the constant -a1 - b0.
    ContractionResult ctr = contract(a, FormSide::L, {0}, {1});
    CHECK(ctr.free_vars == std::vector<int>{2, 3});
    CHECK(ctr.arr.M[0].coeffs_zero());
    CHECK(ctr.arr.M[0].c0 == -sym("a1") - sym("b0"));
    REQUIRE(ctr.solved[0].has_value());
    CHECK(ctr.solved[0]->c0 == sym("a1"));

    CHECK_THROWS_AS(contract(a, FormSide::L, {0}, {2}), std::invalid_argument);

    BiArrangement p = product(a, a);
    CHECK(p.n == 6);
    CHECK(p.L.size() == 6);
    CHECK(p.M.size() == 8);
    CHECK(p.L[3].coeff[0].is_zero());
    CHECK(p.L[3].coeff[3] == Scalar::rational(Rational(1)));
}

TEST_CASE("forms_equal_up_to_scale") {
    AffineForm f = form({2, -2}, sym("x").scaled(Rational(2)));
    AffineForm g = form({-1, 1}, -sym("x"));
    CHECK(forms_equal_up_to_scale(f, g));
    AffineForm h = form({2, -2}, sym("y"));
    CHECK_FALSE(forms_equal_up_to_scale(f, h));
}

TEST_CASE("contraction matches q_C and r_C arrangements (degree <= 3)") {
    for (int n = 0; n <= 3; ++n)
        for (const auto& base : enumerate_diagrams(n)) {
            DecoratedDiagram d = sym_diagram(base);
            std::vector<int> chords;
            for (int i = 1; i <= n; ++i) chords.push_back(i);
            for (const auto& C : subsets_of(chords)) {
                CHECK(check_lem_rq_q(d, C));
                CHECK(check_lem_rq_r(d, C));
            }
        }
}
