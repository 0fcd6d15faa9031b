// Acceptance suite: one criterion per verification suite, each printed as a
// single pass/fail line with its runtime; fails the process on any red line.

#include "dissect/verify.hpp"

#include <cstdio>
#include <string>
#include <vector>

int main() {
    using dissect::SuiteResult;
    struct Criterion {
        int number;
        std::string suite;
        std::string label;
        double time_limit; // seconds; <= 0 means no stated limit
    };
    const std::vector<Criterion> criteria{
        {1, "enumeration", "counts 1,1,3,12,55,273,1428 via formula and recurrence", 5.0},
        {2, "hopf-axioms", "coassociativity of Delta^(x) and the antipode identity", 60.0},
        {3, "closed-formulas", "Delta(X_n) and Delta(Y_n) closed formulas, n<=5", 0.0},
        {4, "kc-oracles", "k_C oracle triangle and K_C path structure, deg<=5", 120.0},
        {5, "hopf-lemmas", "q/r compatibility lemmas and partition identities, deg<=4", 0.0},
        {6, "signs", "sign pipeline: product signs, sigma_C, tuple graphs", 0.0},
        {7, "arrangements", "stratum vs graph-cycle criterion; genericity equivalence", 0.0},
        {8, "cohomology", "dim gr^W_2k = C(n,k), b_C basis, functorial maps", 0.0},
        {9, "main-theorem", "geometric coproduct = Delta; Goncharov and J formulas", 0.0},
        {10, "reduction", "corolla/path-tree bounds; generic integer outputs", 0.0},
        {11, "numerics", "quadrature vs closed forms, shuffle, 2D oracle, R1", 120.0},
    };

    dissect::VerifyOptions opts;
    int failures = 0;
    for (const auto& c : criteria) {
        SuiteResult res = dissect::run_suite(c.suite, opts);
        bool ok = res.passed();
        if (c.time_limit > 0 && res.seconds > c.time_limit) ok = false;
        std::printf("[%s] criterion %2d: %s (%.2fs, %zu checks)\n", ok ? "PASS" : "FAIL",
                    c.number, c.label.c_str(), res.seconds, res.checks.size());
        if (!ok) {
            ++failures;
            for (const auto& chk : res.checks)
                if (!chk.passed)
                    std::printf("       failed: %s %s\n", chk.name.c_str(), chk.detail.c_str());
            if (c.time_limit > 0 && res.seconds > c.time_limit)
                std::printf("       over time limit: %.2fs > %.2fs\n", res.seconds, c.time_limit);
        }
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
