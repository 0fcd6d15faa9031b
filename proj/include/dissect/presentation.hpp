#pragma once

#include "dissect/arrangement.hpp"
#include "dissect/linalg.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dissect {

// One generator e_I ⊗ f_J of Λ^k(e) ⊗ Λ^{n-k}(f); I, J are sorted 0-based
// positions into the L and M lists.
struct GenIndex {
    std::vector<int> I, J;
    bool operator==(const GenIndex& o) const { return I == o.I && J == o.J; }
};

// The presentation of gr^W_{2k} H(L;M): generators e_I⊗f_J, relations
//   e_I⊗f_J               when L_I ∩ M_J = ∅,
//   e_I⊗Σ_{j∉J'} sgn({j},J') f_{J'∪{j}}   for |J'| = n-k-1.
class PresentationK {
public:
    PresentationK(const BiArrangement& a, int k);

    int k() const { return k_; }
    int ambient() const { return n_; }
    int lsize() const { return l_; }
    int msize() const { return m_; }
    const std::vector<GenIndex>& gens() const { return gens_; }
    int gen_pos(const std::vector<int>& I, const std::vector<int>& J) const; // -1 if absent
    int dim() const { return static_cast<int>(gens_.size()) - rel_.rank(); }
    const QMat& relation_rows() const { return raw_rel_; }
    const Rref& relations() const { return rel_; }
    const std::vector<int>& basis() const { return basis_; } // free generator indices

    QVec zero_vector() const { return QVec(gens_.size(), Rational(0)); }
    QVec gen_vector(const std::vector<int>& I, const std::vector<int>& J,
                    const Rational& c = Rational(1)) const;
    QVec reduce(const QVec& v) const { return rel_.reduce(v); }
    QVec coords(const QVec& v) const; // quotient coordinates, length dim()
    bool in_relation_span(const QVec& v) const { return rel_.in_span(v); }
    bool classes_equal(const QVec& v, const QVec& w) const;

private:
    int n_ = 0, k_ = 0, l_ = 0, m_ = 0;
    std::vector<GenIndex> gens_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> index_;
    QMat raw_rel_;
    Rref rel_;
    std::vector<int> basis_;
};

// A map between presentations, given on generators, with a well-definedness
// certificate (every source relation lands in the target relation span).
struct PresMap {
    const PresentationK* src = nullptr;
    const PresentationK* tgt = nullptr;
    std::vector<std::vector<std::pair<int, Rational>>> img; // per source generator
    bool well_defined = false;

    QVec apply(const QVec& v) const;
};

// The five morphisms of the functoriality theorem. Position arguments are
// 0-based and sorted; presentations must be built on the matching
// arrangements (source/target as in each comment).
PresMap m_deletion_map(const PresentationK& src, const PresentationK& tgt,
                       const std::vector<int>& J0); // H(L;M) -> H(L;M(J0))
PresMap m_contraction_map(const PresentationK& src, const PresentationK& tgt,
                          const std::vector<int>& J0); // H(M_J0|L;M(~J0)) -> H(L;M)
PresMap l_deletion_map(const PresentationK& src, const PresentationK& tgt,
                       const std::vector<int>& I0); // H(L(I0);M) -> H(L;M)
PresMap l_contraction_map(const PresentationK& src, const PresentationK& tgt,
                          const std::vector<int>& I0); // H(L;M)(k0) -> H(L_I0|L(~I0);M)
PresMap compose(const PresMap& second, const PresMap& first);

// Künneth morphism H(A1)⊗H(A2) -> H(A1×A2); source generators are pairs.
struct KunnethMap {
    const PresentationK* src1 = nullptr;
    const PresentationK* src2 = nullptr;
    const PresentationK* tgt = nullptr;
    std::vector<std::vector<int>> img; // [g1][g2] -> target generator
    bool well_defined = false;
};
KunnethMap kunneth_map(const PresentationK& src1, const PresentationK& src2,
                       const PresentationK& tgt, int l1, int m1);

// b_C = e_C ⊗ f_{S_C^+}: quotient coordinates of all |C| = k classes,
// rows in lex order of C. Throws if the matrix is singular.
QMat b_c_matrix(const DecoratedDiagram& d, const PresentationK& p);
bool b_c_invertible(const DecoratedDiagram& d, const PresentationK& p);

// Appendix sign lemmas.
bool sign_graph_check(const DissectionDiagram& d, const std::vector<int>& C);
bool product_signs_check(const DecoratedDiagram& d, const std::vector<int>& C);

// The geometric computation of Δ_{n-k,k}(I^H(D)): residue/face maps on the
// presentations, with framing transport. verify=true runs the full
// certificate chain (well-definedness, 1-dimensionality, framing images)
// and throws on any failure.
TensorElement motivic_coproduct_geometric(const DecoratedDiagram& d, int k, bool verify = true);

// The vanishing class behind relation (R3): e_{1..n} ⊗ (f_i + f_j) lies in
// the relation span of gr^W_{2n} of the ambient augmented arrangement.
bool r3_class_vanishes(int nonroot_vertices,
                       const std::vector<std::tuple<int, int, Scalar>>& chords,
                       const std::vector<Scalar>& sides, int side_i, int side_j);

} // namespace dissect
