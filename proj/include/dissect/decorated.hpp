#pragma once

#include "dissect/diagram.hpp"
#include "dissect/scalar.hpp"

#include <vector>

namespace dissect {

// A directed multigraph with one decoration per edge. Vertex ids are
// 0..num_vertices-1; edges keep a (kind, label) tag so diagram edges stay
// identifiable through flips and contractions.
struct DecoratedGraph {
    struct Edge {
        int tail = 0;
        int head = 0;
        Scalar dec;
        bool is_chord = false;
        int label = 0;
    };
    int num_vertices = 0;
    std::vector<Edge> edges;

    ScalarMode mode() const {
        return edges.empty() ? ScalarMode::None : edges.front().dec.mode();
    }
};

// A dissection diagram with one scalar per chord (a_1..a_n) and per side
// (b_0..b_n), uniform mode. Undecorated diagrams are the None-mode case.
class DecoratedDiagram {
public:
    DecoratedDiagram() = default;
    explicit DecoratedDiagram(DissectionDiagram base);
    DecoratedDiagram(DissectionDiagram base, std::vector<Scalar> chord_dec,
                     std::vector<Scalar> side_dec);

    const DissectionDiagram& base() const { return base_; }
    int degree() const { return base_.degree(); }
    int parent(int i) const { return base_.parent(i); }
    ScalarMode mode() const;

    const Scalar& chord_dec(int i) const { return a_.at(i - 1); }
    const Scalar& side_dec(int j) const { return b_.at(j); }
    const std::vector<Scalar>& chord_decs() const { return a_; }
    const std::vector<Scalar>& side_decs() const { return b_; }
    Scalar& chord_dec_mut(int i) { return a_.at(i - 1); }
    Scalar& side_dec_mut(int j) { return b_.at(j); }

    bool operator==(const DecoratedDiagram& o) const;
    bool operator!=(const DecoratedDiagram& o) const { return !(*this == o); }
    bool operator<(const DecoratedDiagram& o) const;

private:
    DissectionDiagram base_;
    std::vector<Scalar> a_; // size n
    std::vector<Scalar> b_; // size n+1
};

// The total directed graph Γ(D): n chords plus n+1 clockwise sides.
// Edge order: chords 1..n, then sides 0..n.
DecoratedGraph gamma(const DecoratedDiagram& d);

DecoratedGraph flip_edge(const DecoratedGraph& g, int edge_index);

struct ContractedGraph {
    DecoratedGraph graph;           // contracted edges removed
    std::vector<int> vertex_class;  // old vertex -> new vertex id
};

// Contract a set of edges (must be acyclic). The §-rule: contracting
// v- --α--> v+ merges v- into v+, adds α to decorations of edges into v-
// and subtracts α from decorations of edges leaving v-. Result does not
// depend on the contraction order.
ContractedGraph contract_edges(const DecoratedGraph& g, const std::vector<int>& edge_indices);

// A simple cycle: edge indices in traversal order, with dir[i] = +1 when the
// edge direction agrees with the traversal.
struct SimpleCycle {
    std::vector<int> edges;
    std::vector<int> dirs;
};

// Every undirected cycle visiting no vertex twice, once up to
// rotation/reflection. Includes 2-cycles from parallel edges.
std::vector<SimpleCycle> simple_cycles(const DecoratedGraph& g);

Scalar total_decoration(const DecoratedGraph& g, const SimpleCycle& c);

// Generic <=> every simple cycle of the graph has nonzero total decoration.
// Exact predicate: float mode is rejected.
bool is_generic_graph(const DecoratedGraph& g);
bool is_generic(const DecoratedDiagram& d);

} // namespace dissect
