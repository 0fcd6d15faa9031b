#pragma once

#include "dissect/decorated.hpp"
#include "dissect/hopf.hpp"
#include "dissect/itint.hpp"

#include <utility>
#include <vector>

namespace dissect {

// A polygon with an explicit, linearly ordered list of directed decorated
// chords. Covers dissection diagrams (chords = vertices-1), the Stokes
// diagrams of (R3) (one extra polygon vertex) and the Orlik-Solomon
// diagrams of (R4) (one extra chord closing a cycle).
struct PolygonGraph {
    struct Chord {
        int tail = 0, head = 0;
        Scalar dec;
    };
    int vertices = 0;           // vertex 0 is the root
    std::vector<Chord> chords;  // list order fixes the sign conventions
    std::vector<Scalar> sides;  // sides[j] runs clockwise from j to j+1 (mod)
};

PolygonGraph to_polygon(const DecoratedDiagram& d);

// Spanning, acyclic, noncrossing chords -> dissection diagram; chords are
// re-oriented toward the root (decorations negated on flips). sign is the
// signature of the permutation from list positions to canonical labels.
struct Canonicalized {
    DecoratedDiagram diagram;
    int sign = 1;
};
Canonicalized canonicalize(const PolygonGraph& g);

// Contract side s per the decoration rules, renumbering the polygon.
PolygonGraph contract_side(const PolygonGraph& g, int s);

// (R1) The translation action τ_i(λ).
DecoratedDiagram translate(const DecoratedDiagram& d, int i, const Scalar& lambda);

// (R2) Rotate the vertex labels one step clockwise; the returned sign σ
// satisfies I(D) = σ · I(D⁺).
std::pair<DecoratedDiagram, int> rotate(const DecoratedDiagram& d);

// (R3) The two sides of an augmented diagram whose contraction is a
// dissection diagram, with the signature relating the chord orders:
//   (-1)^i ε_i I(∂_i W) + (-1)^j ε_j I(∂_j W) = 0.
struct StokesBoundary {
    int side = 0;
    int eps = 1;
    DecoratedDiagram diagram;
};
std::pair<StokesBoundary, StokesBoundary> stokes_boundaries(const PolygonGraph& w);

// (R4) One term per chord of the unique chord cycle C:
//   Σ_c ε(c) I(Ŵ \ {c}) = 0.
// Requires C to be the only zero-total simple cycle of the total graph.
struct OSTerm {
    int chord_index = 0; // position in w.chords
    int eps = 1;
    DecoratedDiagram diagram;
};
std::vector<OSTerm> orlik_solomon_family(const PolygonGraph& w);

// The exact content of the Orlik-Solomon relation: the signed affine forms
// around the cycle sum to zero, and clearing denominators in
// Σ_c sgn({c},C\{c}) ω_{C\{c}} = 0 gives a polynomial identity that holds
// coefficientwise.
bool orlik_solomon_relation_check(const PolygonGraph& w);

struct ReduceOptions {
    bool collect_trace = false;
};

// Theorem: I(D) as an integer combination of generic iterated integrals.
// Exact concrete decorations go through a formal twin and substitution.
FormalSum reduce(const DecoratedDiagram& d);
FormalSum reduce(const DecoratedDiagram& d, const ReduceOptions& opts,
                 std::vector<DecoratedDiagram>* trace);

// Substitute concrete values for the symbols of a symbolic reduction,
// checking every output symbol stays generic.
FormalSum substitute_sum(const FormalSum& s,
                         const std::vector<std::pair<std::string, Scalar>>& values);

} // namespace dissect
