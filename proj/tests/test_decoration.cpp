#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dissect/decorated.hpp"
#include "test_util.hpp"

#include <random>
#include <set>

using namespace dissect;
using testutil::rat;
using testutil::sym;
using testutil::sym_diagram;

TEST_CASE("scalar modes: arithmetic and zero tests") {
    Scalar q = rat(3, 4);
    CHECK((q + rat(1, 4)) == rat(1));
    CHECK((-q).rat() == Rational(-3, 4));
    Scalar g = Scalar::gaussian(Rational(1), Rational(2));
    CHECK((g * g) == Scalar::gaussian(Rational(-3), Rational(4)));
    CHECK((g * g.inverse()) == Scalar::gaussian(Rational(1), Rational(0)));
    Scalar f = sym("x") + sym("y").scaled(Rational(2));
    CHECK_FALSE(f.is_zero());
    CHECK((f - f).is_zero());
    CHECK_THROWS_AS(f * f, std::invalid_argument);
    CHECK((q + Scalar::gaussian(Rational(0), Rational(1))) ==
          Scalar::gaussian(Rational(3, 4), Rational(1)));
    CHECK_THROWS_AS(q + f, std::invalid_argument);
}

TEST_CASE("flip_edge: reversal, negation, involution") {
    DecoratedDiagram d(DissectionDiagram({0}), {sym("a1")}, {sym("b0"), sym("b1")});
    DecoratedGraph g = gamma(d);
    DecoratedGraph g2 = flip_edge(g, 0);
    CHECK(g2.edges[0].tail == 0);
    CHECK(g2.edges[0].head == 1);
    CHECK(g2.edges[0].dec == -sym("a1"));
    CHECK(flip_edge(g2, 0).edges[0].dec == sym("a1"));
    CHECK_THROWS_AS(flip_edge(g, 99), std::invalid_argument);

    DecoratedGraph gz = g;
    gz.edges[0].dec = Scalar::formal({});
    CHECK(flip_edge(gz, 0).edges[0].dec.is_zero());
}

TEST_CASE("contract_edges: the worked degree-3 contraction") {
    // Contracting chord 3 (decorated a3) updates the incident sides to
    // b2+a3 and b3-a3.
    DecoratedDiagram d(DissectionDiagram({0, 1, 1}),
                       {sym("a1"), sym("a2"), sym("a3")},
                       {sym("b0"), sym("b1"), sym("b2"), sym("b3")});
    DecoratedGraph g = gamma(d);
    auto res = contract_edges(g, {2}); // chord 3 sits at index 2
    Scalar side2, side3;
    for (const auto& e : res.graph.edges) {
        if (!e.is_chord && e.label == 2) side2 = e.dec;
        if (!e.is_chord && e.label == 3) side3 = e.dec;
    }
    CHECK(side2 == sym("b2") + sym("a3"));
    CHECK(side3 == sym("b3") - sym("a3"));
    CHECK(res.vertex_class[3] == res.vertex_class[1]);
}

TEST_CASE("contract_edges: rejects cycles, order-independent") {
    DecoratedDiagram d = sym_diagram(DissectionDiagram({0, 1, 1}));
    DecoratedGraph g = gamma(d);
    // chord 1 (index 0) and side 0 (index 3) form a 2-cycle
    CHECK_THROWS_AS(contract_edges(g, {0, 3}), std::invalid_argument);

    for (int n = 2; n <= 4; ++n)
        for (const auto& base : enumerate_diagrams(n)) {
            DecoratedGraph gg = gamma(sym_diagram(base));
            int m = static_cast<int>(gg.edges.size());
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) {
                    ContractedGraph r1, r2;
                    try {
                        r1 = contract_edges(gg, {i, j});
                        r2 = contract_edges(gg, {j, i});
                    } catch (const std::invalid_argument&) {
                        continue; // cycle in the pair
                    }
                    CHECK(r1.vertex_class == r2.vertex_class);
                    REQUIRE(r1.graph.edges.size() == r2.graph.edges.size());
                    for (size_t e = 0; e < r1.graph.edges.size(); ++e) {
                        CHECK(r1.graph.edges[e].dec == r2.graph.edges[e].dec);
                        CHECK(r1.graph.edges[e].tail == r2.graph.edges[e].tail);
                        CHECK(r1.graph.edges[e].head == r2.graph.edges[e].head);
                    }
                }
        }
}

TEST_CASE("simple cycles: degree-1 diagram has the three genericity totals") {
    DecoratedDiagram d(DissectionDiagram({0}), {sym("a1")}, {sym("b0"), sym("b1")});
    DecoratedGraph g = gamma(d);
    auto cycles = simple_cycles(g);
    REQUIRE(cycles.size() == 3);
    std::set<std::string> totals; // both orientations of each total
    for (const auto& c : cycles) {
        Scalar t = total_decoration(g, c);
        totals.insert(t.str());
        totals.insert((-t).str());
    }
    CHECK(totals.count("a1+b0"));
    CHECK(totals.count("a1-b1"));
    CHECK(totals.count("b0+b1"));
}

TEST_CASE("cycle space: at least n+1 simple cycles, tree has none") {
    DecoratedGraph tree;
    tree.num_vertices = 4;
    tree.edges = {{1, 0, sym("x"), true, 1}, {2, 0, sym("y"), true, 2},
                  {3, 2, sym("z"), true, 3}};
    CHECK(simple_cycles(tree).empty());

    for (int n = 1; n <= 4; ++n)
        for (const auto& base : enumerate_diagrams(n)) {
            auto cycles = simple_cycles(gamma(sym_diagram(base)));
            CHECK(static_cast<int>(cycles.size()) >= n + 1);
        }
}

TEST_CASE("genericity: the degree-2 figure's six conditions") {
    // D with chords 1->2, 2->0: generic iff b0+b1+b2, b1+b2-a1, b0-a2+b2,
    // b0+a1, b1+a2, b2-a1-a2 are all nonzero.
    auto make = [](Scalar a1, Scalar a2, Scalar b0, Scalar b1, Scalar b2) {
        return DecoratedDiagram(DissectionDiagram({2, 0}), {a1, a2}, {b0, b1, b2});
    };
    DecoratedDiagram d = make(sym("a1"), sym("a2"), sym("b0"), sym("b1"), sym("b2"));
    auto cycles = simple_cycles(gamma(d));
    CHECK(cycles.size() == 6);
    CHECK(is_generic(d));

    // violate b2 - a1 - a2 = 0
    CHECK_FALSE(is_generic(make(sym("a1"), sym("a2"), sym("b0"), sym("b1"),
                                sym("a1") + sym("a2"))));
    // violate b0 + a1 = 0
    CHECK_FALSE(is_generic(make(sym("a1"), sym("a2"), -sym("a1"), sym("b1"), sym("b2"))));
    // rational instance violating b1 + a2 = 0
    CHECK_FALSE(is_generic(make(rat(1), rat(-5), rat(2), rat(5), rat(9))));
}

TEST_CASE("genericity: zero decorations fail, distinct symbols pass, floats rejected") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& base : enumerate_diagrams(n)) {
            CHECK(is_generic(sym_diagram(base)));
            int nn = base.degree();
            std::vector<Scalar> a(nn, Scalar::formal({})), b(nn + 1, Scalar::formal({}));
            CHECK_FALSE(is_generic(DecoratedDiagram(base, a, b)));
        }
    DecoratedDiagram f(DissectionDiagram({0}),
                       {Scalar::complex_float({1.0, 0.0})},
                       {Scalar::complex_float({0.0, 0.0}), Scalar::complex_float({2.0, 0.0})});
    CHECK_THROWS_AS(is_generic(f), std::invalid_argument);
}

TEST_CASE("flip and contraction preserve genericity") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 4; ++n)
        for (const auto& base : enumerate_diagrams(n)) {
            DecoratedDiagram d = sym_diagram(base);
            DecoratedGraph g = gamma(d);
            REQUIRE(is_generic_graph(g));
            for (size_t e = 0; e < g.edges.size(); ++e)
                CHECK(is_generic_graph(flip_edge(g, static_cast<int>(e))));
            // contract a random acyclic pair of chords
            if (n >= 2) {
                auto res = contract_edges(g, {0, 1});
                CHECK(is_generic_graph(res.graph));
            }
        }
}

TEST_CASE("total decoration negates when the cycle is traversed backward") {
    DecoratedDiagram d = sym_diagram(DissectionDiagram({0, 0}));
    DecoratedGraph g = gamma(d);
    for (const auto& c : simple_cycles(g)) {
        SimpleCycle rev;
        for (size_t i = c.edges.size(); i-- > 0;) {
            rev.edges.push_back(c.edges[i]);
            rev.dirs.push_back(-c.dirs[i]);
        }
        CHECK(total_decoration(g, rev) == -total_decoration(g, c));
    }
}
