#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dissect/diagram.hpp"

#include <set>

using namespace dissect;

TEST_CASE("validate: base cases from the definition") {
    CHECK(validate(DissectionDiagram()).ok);                  // degree 0
    CHECK(validate(DissectionDiagram({0, 0})).ok);            // corolla X_2
    auto cyc = validate(DissectionDiagram({2, 1}));           // 1->2, 2->1
    CHECK_FALSE(cyc.ok);
    CHECK(cyc.reason == "cycle");
    auto range = validate(DissectionDiagram({5}));
    CHECK_FALSE(range.ok);
    CHECK(range.reason == "target-range");
}

TEST_CASE("validate: crossing chords rejected") {
    // 1->3 and 2->4 cross on the pentagon.
    auto rep = validate(DissectionDiagram({3, 4, 0, 0}));
    CHECK_FALSE(rep.ok);
    CHECK(rep.reason == "crossing");
}

TEST_CASE("counts match the closed formula and the recurrence") {
    const long expect[] = {1, 1, 3, 12, 55, 273, 1428, 7752, 43263};
    for (int n = 0; n <= 8; ++n) {
        CHECK(count_closed(n) == expect[n]);
        CHECK(count_recurrence(n) == expect[n]);
        CHECK(count(n) == expect[n]);
    }
}

TEST_CASE("enumerate: counts, validity, distinctness") {
    for (int n = 0; n <= 5; ++n) {
        auto list = enumerate_diagrams(n);
        CHECK(Integer(static_cast<long>(list.size())) == count_closed(n));
        std::set<DissectionDiagram> uniq(list.begin(), list.end());
        CHECK(uniq.size() == list.size());
        for (const auto& d : list) CHECK(validate(d).ok);
    }
    CHECK_THROWS_AS(enumerate_diagrams(9), std::out_of_range);
}

TEST_CASE("triple decomposition: X_1 splits into empties and round-trips") {
    DissectionDiagram x1({0});
    auto t = decompose_triple(x1);
    CHECK(t.d1.degree() == 0);
    CHECK(t.d2.degree() == 0);
    CHECK(t.d3.degree() == 0);
    CHECK(compose_triple(t.d1, t.d2, t.d3) == x1);
    CHECK_THROWS_AS(decompose_triple(DissectionDiagram()), std::invalid_argument);

    for (int n = 1; n <= 4; ++n)
        for (const auto& d : enumerate_diagrams(n)) {
            auto tr = decompose_triple(d);
            CHECK(tr.d1.degree() + tr.d2.degree() + tr.d3.degree() == n - 1);
            CHECK(compose_triple(tr.d1, tr.d2, tr.d3) == d);
        }
}

TEST_CASE("faces: the degree-3 worked example") {
    // D = (1->0, 2->1, 3->1); C = {3} gives side partition {1,2} | {0,3}
    // and chord partition {2} | {1}.
    DissectionDiagram d({0, 1, 1});
    auto fp = faces(d, {3});
    REQUIRE(fp.blocks.size() == 2);
    CHECK(fp.blocks[0].sides == std::vector<int>{0, 3});
    CHECK(fp.blocks[0].chords == std::vector<int>{1});
    CHECK(fp.blocks[1].sides == std::vector<int>{1, 2});
    CHECK(fp.blocks[1].chords == std::vector<int>{2});

    CHECK(s_c_plus(d, {3}) == std::vector<int>{2, 3});
    CHECK(s_c_plus(d, {}) == std::vector<int>{1, 2, 3});
    CHECK(s_c_plus(d, {1, 2, 3}).empty());
}

TEST_CASE("faces: C = empty and C = all") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& d : enumerate_diagrams(n)) {
            auto f0 = faces(d, {});
            REQUIRE(f0.blocks.size() == 1);
            CHECK(static_cast<int>(f0.blocks[0].sides.size()) == n + 1);
            CHECK(static_cast<int>(f0.blocks[0].chords.size()) == n);

            std::vector<int> all;
            for (int i = 1; i <= n; ++i) all.push_back(i);
            auto fa = faces(d, all);
            CHECK(static_cast<int>(fa.blocks.size()) == n + 1);
            for (const auto& blk : fa.blocks) {
                CHECK(blk.sides.size() == 1);
                CHECK(blk.chords.empty());
            }
        }
}

TEST_CASE("face block sizes: |S_C(a)| = |Cbar(a)| + 1") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& d : enumerate_diagrams(n)) {
            std::vector<int> chords;
            for (int i = 1; i <= n; ++i) chords.push_back(i);
            for (const auto& C : subsets_of(chords)) {
                int total_sides = 0;
                for (const auto& blk : faces(d, C).blocks) {
                    CHECK(blk.sides.size() == blk.chords.size() + 1);
                    total_sides += static_cast<int>(blk.sides.size());
                }
                CHECK(total_sides == n + 1);
                CHECK(static_cast<int>(s_c_plus(d, C).size()) ==
                      n - static_cast<int>(C.size()));
            }
        }
}

TEST_CASE("forest_with_sides: path cases and the u_alpha characterization") {
    DissectionDiagram d({0, 0, 0});
    CHECK(forest_with_sides(d, {}, {1, 2, 3}));
    CHECK(forest_with_sides(d, {}, {0, 1, 2}));
    CHECK_THROWS_AS(forest_with_sides(d, {}, {1}), std::invalid_argument);

    // Exhaustive agreement with J = union of S_C(a) minus one choice.
    for (int n = 1; n <= 4; ++n)
        for (const auto& dd : enumerate_diagrams(n)) {
            std::vector<int> chords, sides;
            for (int i = 1; i <= n; ++i) chords.push_back(i);
            for (int j = 0; j <= n; ++j) sides.push_back(j);
            for (const auto& C : subsets_of(chords)) {
                auto fp = faces(dd, C);
                for (const auto& J : subsets_of(sides)) {
                    if (C.size() + J.size() != static_cast<size_t>(n)) continue;
                    // characterization: per face, J misses exactly one side
                    bool expect = true;
                    for (const auto& blk : fp.blocks) {
                        int missing = 0;
                        for (int s : blk.sides)
                            if (!std::binary_search(J.begin(), J.end(), s)) ++missing;
                        if (missing != 1) expect = false;
                    }
                    CHECK(forest_with_sides(dd, C, J) == expect);
                }
            }
        }
}

TEST_CASE("sgn: examples and associativity") {
    CHECK(sgn_shuffle({}, {1, 2, 3}) == 1);
    CHECK(sgn_shuffle({2}, {1, 3}) == -1);
    // sgn({i_r}, I \ {i_r}) = (-1)^{r-1}
    std::vector<int> I{2, 5, 7, 8};
    for (size_t r = 0; r < I.size(); ++r) {
        std::vector<int> rest;
        for (size_t j = 0; j < I.size(); ++j)
            if (j != r) rest.push_back(I[j]);
        CHECK(sgn_shuffle({I[r]}, rest) == (r % 2 == 0 ? 1 : -1));
    }
    CHECK_THROWS_AS(sgn_shuffle({1}, {1, 2}), std::invalid_argument);
}
