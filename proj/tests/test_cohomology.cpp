#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dissect/presentation.hpp"
#include "test_util.hpp"

using namespace dissect;
using testutil::sym_diagram;

namespace {
const DissectionDiagram kDeg3({0, 1, 1});
}

TEST_CASE("presentation: extreme weights are one-dimensional") {
    DecoratedDiagram d = sym_diagram(kDeg3);
    BiArrangement a = from_diagram(d);

    PresentationK top(a, 3);
    CHECK(top.dim() == 1);
    std::vector<int> full{0, 1, 2};
    // the class of e_{123} (x) f_() spans
    QVec v = top.gen_vector(full, {});
    bool nonzero = false;
    for (const auto& x : top.coords(v))
        if (x != 0) nonzero = true;
    CHECK(nonzero);

    PresentationK bot(a, 0);
    CHECK(bot.dim() == 1);
    // f-relations (-1)^i f_{...i-hat...} = (-1)^j f_{...j-hat...}: omitting
    // index 0 and index 1 gives classes differing by a sign.
    QVec f123 = bot.gen_vector({}, {1, 2, 3});
    QVec f023 = bot.gen_vector({}, {0, 2, 3}, Rational(-1));
    CHECK(bot.classes_equal(f123, f023));

    PresentationK out(a, 5);
    CHECK(out.dim() == 0);
}

TEST_CASE("presentation dimensions are binomial (degree <= 3, symbolic)") {
    for (int n = 0; n <= 3; ++n)
        for (const auto& base : enumerate_diagrams(n)) {
            DecoratedDiagram d = sym_diagram(base);
            BiArrangement a = from_diagram(d);
            for (int k = 0; k <= n; ++k) {
                PresentationK p(a, k);
                CHECK(Integer(p.dim()) == binomial(n, k));
                CHECK(b_c_invertible(d, p));
            }
        }
}

TEST_CASE("b_C basis: the extreme classes") {
    DecoratedDiagram d = sym_diagram(kDeg3);
    BiArrangement a = from_diagram(d);
    PresentationK top(a, 3), bot(a, 0);
    QMat mt = b_c_matrix(d, top);
    REQUIRE(mt.size() == 1);
    CHECK(mt[0].size() == 1);
    CHECK(mt[0][0] != 0);
    QMat mb = b_c_matrix(d, bot);
    REQUIRE(mb.size() == 1);
    CHECK(mb[0][0] != 0);
}

TEST_CASE("functorial maps: identities and annihilations") {
    DecoratedDiagram d = sym_diagram(kDeg3);
    BiArrangement a = from_diagram(d);

    SUBCASE("L-deletion with everything kept is the identity") {
        PresentationK p(a, 1);
        PresMap m = l_deletion_map(p, p, {0, 1, 2});
        CHECK(m.well_defined);
        for (size_t g = 0; g < p.gens().size(); ++g) {
            REQUIRE(m.img[g].size() == 1);
            CHECK(m.img[g][0].first == static_cast<int>(g));
            CHECK(m.img[g][0].second == 1);
        }
    }

    SUBCASE("L-contraction kills generators missing I_0") {
        ContractionResult ctr = contract(a, FormSide::L, {2}, {3});
        PresentationK src(a, 1), tgt(ctr.arr, 0);
        PresMap m = l_contraction_map(src, tgt, {2});
        CHECK(m.well_defined);
        for (size_t g = 0; g < src.gens().size(); ++g) {
            bool has = std::binary_search(src.gens()[g].I.begin(), src.gens()[g].I.end(), 2);
            CHECK(m.img[g].empty() == !has);
        }
    }

    SUBCASE("M-deletion keeps only inside generators") {
        BiArrangement del = delete_forms(a, FormSide::M, {0, 1, 2});
        PresentationK src(a, 1), tgt(del, 1);
        PresMap m = m_deletion_map(src, tgt, {0, 1, 2});
        CHECK(m.well_defined);
    }
}

TEST_CASE("kunneth on two degree-1 presentations") {
    DecoratedDiagram d1 = sym_diagram(DissectionDiagram({0}));
    std::vector<Scalar> a2{testutil::sym("c1")}, b2{testutil::sym("d0"), testutil::sym("d1")};
    DecoratedDiagram d2(DissectionDiagram({0}), a2, b2);
    BiArrangement A1 = from_diagram(d1), A2 = from_diagram(d2);
    BiArrangement P = product(A1, A2);
    PresentationK p1(A1, 1), p2(A2, 0), pt(P, 1);
    KunnethMap km = kunneth_map(p1, p2, pt, 1, 2);
    CHECK(km.well_defined);
    CHECK(pt.dim() == 2);
}

TEST_CASE("sign lemmas on the worked diagram") {
    DecoratedDiagram d = sym_diagram(kDeg3);
    std::vector<int> chords{1, 2, 3};
    for (const auto& C : subsets_of(chords)) {
        CHECK(sign_graph_check(kDeg3, C));
        CHECK(product_signs_check(d, C));
    }
}

TEST_CASE("geometric coproduct equals the combinatorial one (degree <= 2)") {
    for (int n = 0; n <= 2; ++n)
        for (const auto& base : enumerate_diagrams(n)) {
            DecoratedDiagram d = sym_diagram(base);
            for (int k = 0; k <= n; ++k) {
                TensorElement geo = motivic_coproduct_geometric(d, k, true);
                CHECK(geo == coproduct_component(Rational(-1), d, k));
            }
        }
    // extreme components are the unit identifications
    DecoratedDiagram d = sym_diagram(kDeg3);
    TensorElement t0 = motivic_coproduct_geometric(d, 0, true);
    REQUIRE(t0.size() == 1);
    CHECK(t0.terms().begin()->first.second.is_unit());
    TensorElement tn = motivic_coproduct_geometric(d, 3, true);
    REQUIRE(tn.size() == 1);
    CHECK(tn.terms().begin()->first.first.is_unit());
    // degree-3 worked example: C = {3} has coefficient (-1)^1
    TensorElement t1 = motivic_coproduct_geometric(d, 1, true);
    auto r3 = r_c(d, {3});
    auto q3 = q_c(d, {3});
    CHECK(t1.coeff({q3.monomial(), Monomial::single(r3.r.diagram)}) == Rational(-1));
}

TEST_CASE("non-generic diagrams are rejected by the geometric pipeline") {
    int n = 1;
    std::vector<Scalar> a(n, Scalar::formal({})), b(n + 1, Scalar::formal({}));
    DecoratedDiagram d(DissectionDiagram({0}), a, b);
    CHECK_THROWS_AS(motivic_coproduct_geometric(d, 0, true), std::invalid_argument);
}
