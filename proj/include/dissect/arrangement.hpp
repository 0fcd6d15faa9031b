#pragma once

#include "dissect/decorated.hpp"
#include "dissect/hopf.hpp"

#include <optional>
#include <vector>

namespace dissect {

// The hyperplane { coeff_1 t_1 + ... + coeff_n t_n + c0 = 0 } in C^n.
struct AffineForm {
    std::vector<Scalar> coeff; // size = ambient dimension
    Scalar c0;

    int dim() const { return static_cast<int>(coeff.size()); }
    bool coeffs_zero() const {
        for (const auto& c : coeff)
            if (!c.is_zero()) return false;
        return true;
    }
    bool operator==(const AffineForm& o) const { return coeff == o.coeff && c0 == o.c0; }
};

// True iff g = λ·f for some nonzero scalar λ (hyperplane equality).
bool forms_equal_up_to_scale(const AffineForm& f, const AffineForm& g);

enum class FormSide { L, M };

struct BiArrangement {
    int n = 0;
    std::vector<AffineForm> L, M;

    const std::vector<AffineForm>& side(FormSide s) const { return s == FormSide::L ? L : M; }
    std::vector<AffineForm>& side(FormSide s) { return s == FormSide::L ? L : M; }
};

// Build (L;M) from directed decorated polygon edges: vertex i is the
// coordinate t_i, the root is 0. Chords give L (in list order), sides give
// M_0..M_{v-1}. Exact or formal decorations only.
BiArrangement from_edges(int nonroot_vertices,
                         const std::vector<std::tuple<int, int, Scalar>>& chords,
                         const std::vector<Scalar>& sides);
BiArrangement from_diagram(const DecoratedDiagram& d);

struct Stratum {
    bool empty = false;
    int codim = 0; // meaningful when !empty
    bool operator==(const Stratum& o) const {
        return empty == o.empty && (empty || codim == o.codim);
    }
};

// Exact rank/consistency of the stacked system. I and J are 0-based
// positions into the L and M lists.
Stratum stratum(const BiArrangement& a, const std::vector<int>& I, const std::vector<int>& J);

bool is_affinely_generic(const BiArrangement& a);

// Lemma characterization: the stratum of a diagram arrangement is empty iff
// the subgraph I ∪ J of Γ(D) contains an undirected cycle. I holds chord
// labels (1..n), J side labels (0..n). Requires generic decorations.
Stratum graph_cycle_criterion(const DecoratedDiagram& d, const std::vector<int>& I,
                              const std::vector<int>& J);

BiArrangement delete_forms(const BiArrangement& a, FormSide side, const std::vector<int>& keep);

struct ContractionResult {
    BiArrangement arr;
    std::vector<int> free_vars;  // surviving original variables (1-based), ascending
    // solved[v-1] for an eliminated variable v: the affine expression of t_v
    // in the surviving coordinates of `arr`.
    std::vector<std::optional<AffineForm>> solved;
};

// Contract onto the stratum of the given forms by variable elimination.
// pivot_vars, when supplied, names the variable each contracted form is
// solved for (the diagram pipelines pass the paper's choice); otherwise the
// lowest-index available variable is used.
ContractionResult contract(const BiArrangement& a, FormSide side, const std::vector<int>& onto,
                           const std::vector<int>& pivot_vars = {});

BiArrangement product(const BiArrangement& a1, const BiArrangement& a2);

// Lemma checks: the contracted arrangement of a diagram agrees with the
// arrangements of q_C(D) / r_C(D) form-by-form after the stated change of
// variables, up to nonzero per-form scale.
bool check_lem_rq_q(const DecoratedDiagram& d, const std::vector<int>& C);
bool check_lem_rq_r(const DecoratedDiagram& d, const std::vector<int>& C);

} // namespace dissect
