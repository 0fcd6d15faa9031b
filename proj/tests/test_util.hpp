#pragma once

#include "dissect/decorated.hpp"

#include <string>
#include <vector>

namespace testutil {

inline dissect::DecoratedDiagram sym_diagram(const dissect::DissectionDiagram& b) {
    using namespace dissect;
    int n = b.degree();
    std::vector<Scalar> a, bb;
    for (int i = 1; i <= n; ++i) a.push_back(Scalar::symbol("a" + std::to_string(i)));
    for (int j = 0; j <= n; ++j) bb.push_back(Scalar::symbol("b" + std::to_string(j)));
    return DecoratedDiagram(b, std::move(a), std::move(bb));
}

inline dissect::Scalar sym(const std::string& s) { return dissect::Scalar::symbol(s); }

inline dissect::Scalar rat(long p, long q = 1) {
    return dissect::Scalar::rational(dissect::Rational(p, q));
}

} // namespace testutil
