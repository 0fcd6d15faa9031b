#pragma once

#include "dissect/decorated.hpp"
#include "dissect/itint.hpp"
#include "dissect/lincomb.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dissect {

// A monomial of the free commutative algebra D(Λ): a sorted multiset of
// decorated dissection diagrams of positive degree. Empty = unit.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<DecoratedDiagram> factors);
    static Monomial unit() { return Monomial(); }
    static Monomial single(DecoratedDiagram d);

    const std::vector<DecoratedDiagram>& factors() const { return f_; }
    int degree() const;
    bool is_unit() const { return f_.empty(); }
    Monomial operator*(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return f_ == o.f_; }
    bool operator<(const Monomial& o) const;

private:
    std::vector<DecoratedDiagram> f_; // sorted, no degree-0 factors
};

using MonomialPair = std::pair<Monomial, Monomial>;
using MonomialTriple = std::tuple<Monomial, Monomial, Monomial>;

using AlgebraElement = LinearCombination<Monomial, Rational>;
using TensorElement = LinearCombination<MonomialPair, Rational>;
using AlgebraElementX = LinearCombination<Monomial, XPoly>;
using TensorElementX = LinearCombination<MonomialPair, XPoly>;
template <class C> using Tensor3 = LinearCombination<MonomialTriple, C>;

// Construction helpers ---------------------------------------------------

DecoratedDiagram corolla(int n);
DecoratedDiagram corolla(int n, std::vector<Scalar> chord_dec, std::vector<Scalar> side_dec);
DecoratedDiagram path_tree(int n);
DecoratedDiagram path_tree(int n, std::vector<Scalar> chord_dec, std::vector<Scalar> side_dec);

// q_C / r_C ---------------------------------------------------------------

// A diagram produced by q_C or r_C, with the correspondence between its
// intrinsic labels and the labels of the ambient diagram: intrinsic chord i
// was chord chord_orig[i-1], intrinsic side j was side side_orig[j].
struct BuiltDiagram {
    DecoratedDiagram diagram;
    std::vector<int> chord_orig;
    std::vector<int> side_orig;
};

struct QResult {
    std::vector<BuiltDiagram> factors; // face order (min side ascending), units kept
    Monomial monomial() const;
    // ν_C: a chord outside C -> the side of S_C^+ at the same intrinsic label.
    std::vector<std::pair<int, int>> nu() const;
};

struct FlipReport {
    BuiltDiagram r;
    std::vector<int> flipped; // K_C(D), original chord labels, sorted
    int k() const { return static_cast<int>(flipped.size()); }
    // η_C: a chord of C -> the non-root side outside S_C^+ at the same label.
    std::vector<std::pair<int, int>> eta() const;
};

QResult q_c(const DecoratedDiagram& d, const std::vector<int>& C);
FlipReport r_c(const DecoratedDiagram& d, const std::vector<int>& C);

// K_C(D) three ways: the contraction process itself, the (K1)-(K3)
// characterization, and the backward-path criterion.
std::vector<int> k_c_direct(const DissectionDiagram& d, const std::vector<int>& C);
std::vector<int> k_c_k123(const DissectionDiagram& d, const std::vector<int>& C);
std::vector<int> k_c_path(const DissectionDiagram& d, const std::vector<int>& C);

// σ_C, the block permutation of {1..n} built from ν_C and η_C.
std::vector<int> sigma_c(const DecoratedDiagram& d, const std::vector<int>& C);
int sgn_permutation(const std::vector<int>& perm); // perm[i-1] = image of i

// Coproduct ---------------------------------------------------------------

struct CoproductTerm {
    std::vector<int> C;
    int k;            // k_C(D)
    Monomial left;    // q_C(D)
    Monomial right;   // r_C(D) (unit when C = ∅)
};

std::vector<CoproductTerm> coproduct_terms(const DecoratedDiagram& d);

TensorElement coproduct(const Rational& x, const AlgebraElement& e);
TensorElementX coproduct_formal(const AlgebraElementX& e);

// One graded component: terms of Δ^{(x)}(e) with right degree k.
TensorElement coproduct_component(const Rational& x, const DecoratedDiagram& d, int k);

// Coassociativity probes.
Tensor3<Rational> coassoc_left(const Rational& x, const AlgebraElement& e);   // (Δ⊗id)Δ
Tensor3<Rational> coassoc_right(const Rational& x, const AlgebraElement& e);  // (id⊗Δ)Δ
Tensor3<XPoly> coassoc_left_formal(const AlgebraElementX& e);
Tensor3<XPoly> coassoc_right_formal(const AlgebraElementX& e);

// Antipode of the Hopf algebra D^{(x)} (default x = -1), and the convolution
// S * id for the defining identity.
AlgebraElement antipode(const AlgebraElement& e, const Rational& x = Rational(-1));
AlgebraElement convolution_s_id(const DecoratedDiagram& d, const Rational& x = Rational(-1));

// Closed-formula coproducts (independent implementations) -----------------

using SymMonomial = std::vector<ItIntSymbol>; // sorted, no empty-word units
using SymTensor = LinearCombination<std::pair<SymMonomial, SymMonomial>, Rational>;

SymTensor goncharov_coproduct(const ItIntSymbol& s);

using JMonomial = std::vector<JSymbol>;
using JTensor = LinearCombination<std::pair<JMonomial, JMonomial>, Rational>;

JTensor j_coproduct(const Scalar& b, const std::vector<Scalar>& a);

// Normalizations (relation R1): translate a corolla to its symbol, a path
// tree to its J-symbol.
ItIntSymbol corolla_to_symbol(const DecoratedDiagram& d);
JSymbol path_tree_to_jsymbol(const DecoratedDiagram& d);

// The full translation normal form of a symbol: subtract a_0 from every
// entry. Two symbols agree here iff they differ by the simultaneous
// translation of all coordinates (a composite of τ_i moves).
ItIntSymbol translate_symbol_to_zero(const ItIntSymbol& s);

// Pretty printing in the X_n / Y_n notation.
std::string pretty(const DecoratedDiagram& d);
std::string pretty(const Monomial& m);
std::string pretty(const AlgebraElement& e);
std::string pretty(const TensorElement& e);
std::string pretty(const TensorElementX& e);

} // namespace dissect
