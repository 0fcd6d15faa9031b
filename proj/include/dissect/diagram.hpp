#pragma once

#include "dissect/rational.hpp"

#include <string>
#include <vector>

namespace dissect {

// A dissection diagram of degree n: the rooted oriented (n+1)-gon with
// vertices root=0,1,...,n clockwise and n noncrossing chords forming a
// spanning tree oriented toward the root. The chord leaving vertex i is
// chord i; its target is parent(i). Sides are labeled 0..n, side j running
// clockwise from vertex j to vertex j+1 (side n closes back to the root).
class DissectionDiagram {
public:
    DissectionDiagram() = default; // degree 0
    explicit DissectionDiagram(std::vector<int> parent) : parent_(std::move(parent)) {}

    int degree() const { return static_cast<int>(parent_.size()); }
    int parent(int i) const { return parent_.at(i - 1); }
    const std::vector<int>& parents() const { return parent_; }

    bool is_corolla() const;
    bool is_path_tree() const;

    bool operator==(const DissectionDiagram& o) const { return parent_ == o.parent_; }
    bool operator!=(const DissectionDiagram& o) const { return !(*this == o); }
    bool operator<(const DissectionDiagram& o) const {
        if (degree() != o.degree()) return degree() < o.degree();
        return parent_ < o.parent_;
    }

private:
    std::vector<int> parent_;
};

struct ValidationReport {
    bool ok = true;
    std::string reason; // "target-range" | "cycle" | "crossing" when !ok
};

ValidationReport validate(const DissectionDiagram& d);

// True iff the chords {a,b} and {c,d} of the (n+1)-gon cross, i.e. separate
// each other on the cycle 0,1,...,n. Shared endpoints never cross.
bool chords_cross(int a, int b, int c, int d);

// Enumeration -----------------------------------------------------------

Integer count_closed(int n);     // C(3n,n)/(2n+1)
Integer count_recurrence(int n); // d_n = sum d_{i1} d_{i2} d_{i3}
Integer count(int n);            // both, cross-checked

// All diagrams of degree n in a fixed deterministic order (recursive
// triple composition). Throws std::out_of_range beyond the bound.
std::vector<DissectionDiagram> enumerate_diagrams(int n, int bound = 8);

struct DiagramTriple {
    DissectionDiagram d1, d2, d3;
};

DiagramTriple decompose_triple(const DissectionDiagram& d); // degree >= 1
DissectionDiagram compose_triple(const DissectionDiagram& d1,
                                 const DissectionDiagram& d2,
                                 const DissectionDiagram& d3);

// Faces -----------------------------------------------------------------

// The planar graph C ∪ {sides} has |C|+1 faces; each face carries the sides
// of the polygon on its boundary and the non-C chords in its interior.
struct FaceBlock {
    std::vector<int> sides;  // sorted ascending
    std::vector<int> chords; // sorted ascending, subset of complement of C
};

struct FacePartition {
    std::vector<FaceBlock> blocks; // ordered by min side
};

FacePartition faces(const DissectionDiagram& d, const std::vector<int>& C);

std::vector<int> s_c_plus(const DissectionDiagram& d, const std::vector<int>& C);

// True iff the chord set C together with the side set J is acyclic
// (pre: |C| + |J| = degree).
bool forest_with_sides(const DissectionDiagram& d, const std::vector<int>& C,
                       const std::vector<int>& J);

// Exterior-algebra sign: x_{I ⊔ J} = sgn(I,J) x_I ∧ x_J for disjoint I, J.
int sgn_shuffle(const std::vector<int>& I, const std::vector<int>& J);

// Signature of a bijection between two linearly ordered index sets, given
// as parallel vectors (dom[i] maps to img[i]).
int sgn_bijection(const std::vector<int>& dom, const std::vector<int>& img);

// All subsets of {1..n} (or of an arbitrary sorted universe), bitmask order.
std::vector<std::vector<int>> subsets_of(const std::vector<int>& universe);

} // namespace dissect
