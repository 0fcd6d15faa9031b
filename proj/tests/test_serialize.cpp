#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dissect/serialize.hpp"
#include "dissect/reduction.hpp"
#include "test_util.hpp"

using namespace dissect;
using testutil::rat;
using testutil::sym;
using testutil::sym_diagram;

TEST_CASE("scalar round trips, all modes") {
    std::vector<Scalar> cases{
        Scalar::none(),
        rat(-22, 7),
        Scalar::gaussian(Rational(1, 3), Rational(-5)),
        Scalar::complex_float({1.5, -0.25}),
        sym("a1") + sym("b0").scaled(Rational(-3, 2)),
        Scalar::formal({}),
    };
    for (const auto& s : cases) CHECK(scalar_from_json(to_json(s)) == s);
}

TEST_CASE("diagram round trips and validation on input") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& d : enumerate_diagrams(n))
            CHECK(diagram_from_json(to_json(d)) == d);

    Json bad = {{"degree", 2}, {"parent", {{"1", 2}, {"2", 1}}}};
    CHECK_THROWS_AS(diagram_from_json(bad), std::invalid_argument);
}

TEST_CASE("decorated diagram, algebra and tensor elements round trip") {
    DecoratedDiagram d = sym_diagram(DissectionDiagram({0, 1, 1}));
    CHECK(decorated_from_json(to_json(d)) == d);

    DecoratedDiagram plain(DissectionDiagram({0, 0}));
    CHECK(decorated_from_json(to_json(plain)) == plain);

    AlgebraElement e;
    e.add(Monomial::single(d), Rational(3, 7));
    e.add(Monomial({corolla(1), corolla(2)}), Rational(-2));
    CHECK(algebra_from_json(to_json(e)) == e);

    TensorElement t = coproduct(Rational(-1), e);
    CHECK(tensor_from_json(to_json(t)) == t);
}

TEST_CASE("arrangement and formal sum round trips") {
    BiArrangement a = from_diagram(sym_diagram(DissectionDiagram({0, 1, 1})));
    BiArrangement b = arrangement_from_json(to_json(a));
    CHECK(b.n == a.n);
    CHECK(b.L == a.L);
    CHECK(b.M == a.M);

    FormalSum s = reduce(sym_diagram(path_tree(3).base()));
    CHECK(formal_sum_from_json(to_json(s)) == s);
}

TEST_CASE("presentation and eval records serialize") {
    DecoratedDiagram d = sym_diagram(DissectionDiagram({0, 0}));
    PresentationK p(from_diagram(d), 1);
    Json j = to_json(p);
    CHECK(j.at("dim").get<int>() == 2);
    CHECK(j.at("generators").size() == p.gens().size());

    QuadratureConfig cfg;
    DecoratedDiagram num(DissectionDiagram({0}),
                         {Scalar::gaussian(Rational(2), Rational(0))},
                         {Scalar::gaussian(Rational(0), Rational(0)),
                          Scalar::gaussian(Rational(1), Rational(0))});
    EvalRecord r = eval_dissection(num, cfg);
    Json jr = to_json(r);
    CHECK(jr.at("paths").size() == 1);
    CHECK(jr.at("value").size() == 2);
}

TEST_CASE("deterministic output bytes") {
    DecoratedDiagram d = sym_diagram(DissectionDiagram({0, 1, 1}));
    CHECK(to_json(d).dump() == to_json(d).dump());
    CHECK(to_dot(d) == to_dot(d));
    CHECK(to_tikz(d) == to_tikz(d));
}

TEST_CASE("dot and tikz exports carry the structure") {
    DecoratedDiagram d = sym_diagram(DissectionDiagram({0, 1, 1}));
    std::string dot = to_dot(d);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("chord 3") != std::string::npos);
    CHECK(dot.find("side 0") != std::string::npos);
    std::string tikz = to_tikz(d);
    CHECK(tikz.find("tikzpicture") != std::string::npos);
    CHECK(tikz.find("fill=white") != std::string::npos); // hollow root
}
