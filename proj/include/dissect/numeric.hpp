#pragma once

#include "dissect/itint.hpp"
#include "dissect/decorated.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace dissect {

using Cx = std::complex<double>;

// A piecewise-linear integration path with a declared clearance from the
// singularity set it was built against.
struct CPath {
    std::vector<Cx> points;
    double clearance = 0.0;
};

// Minimum distance from any path segment to any of the given points.
double path_distance(const CPath& p, const std::vector<Cx>& sing);

// Straight path from z0 to z1 with polyline detours of radius 2δ around
// singularities closer than δ to the segment (overlapping detour disks are
// merged). Deterministic: the detour side is the sign of the cross product,
// ties to the left. Throws when an endpoint is within δ of a singularity or
// no admissible path is found.
CPath build_path(Cx z0, Cx z1, const std::vector<Cx>& sing, double delta);

// δ = half the distance from the straight segment to the singularity set,
// floored at 1e-3.
double default_clearance(Cx z0, Cx z1, const std::vector<Cx>& sing);

struct QuadratureConfig {
    int nodes = 12;        // Gauss-Legendre nodes per subinterval
    int base_subdiv = 4;   // initial subintervals per path segment
    double rel_tol = 1e-11;
    int max_depth = 10;    // grid doublings
};

// Iterated integral of the word (t-a_1),...,(t-a_n) along the path,
// normalized by (2πi)^-n: the recursive pullback formulation with composite
// Gauss-Legendre quadrature on a shared refined grid.
Cx eval_word(const std::vector<Cx>& poles, const CPath& path, const QuadratureConfig& cfg);

// eval_word with the symbol's endpoints checked against the path.
Cx eval_iterint(const ItIntSymbol& s, const CPath& path, const QuadratureConfig& cfg);

// Degree 1 closed form: (1/2πi) log((a1-b1)/(a1+b0)) + winding.
Cx eval_degree1_closed(const Scalar& a1, const Scalar& b0, const Scalar& b1, int winding);
Cx eval_degree1_closed(Cx a1, Cx b0, Cx b1, int winding);

struct EvalRecord {
    Cx value{0.0, 0.0};
    std::vector<std::pair<ItIntSymbol, long long>> terms;
    std::vector<CPath> paths; // one per term, the homology-class witness
    double clearance = 0.0;
};

// Reduce D to iterated integrals and evaluate each along build_path with a
// shared clearance. The waypoints in the record pin down which homology
// class the value belongs to.
EvalRecord eval_dissection(const DecoratedDiagram& d, const QuadratureConfig& cfg,
                           std::optional<double> clearance = std::nullopt);

} // namespace dissect
