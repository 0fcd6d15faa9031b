#include "dissect/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace dissect {

namespace {

bool exact_mode(ScalarMode m) {
    return m == ScalarMode::Rational || m == ScalarMode::Gaussian || m == ScalarMode::Formal;
}

void require_exact(const Scalar& s, const char* where) {
    if (!exact_mode(s.mode()))
        throw std::invalid_argument(std::string(where) + ": exact or formal scalars required (got " +
                                    mode_name(s.mode()) + ")");
}

bool invertible_mode(const Scalar& s) {
    return s.mode() == ScalarMode::Rational || s.mode() == ScalarMode::Gaussian;
}

AffineForm sub_scaled(const AffineForm& f, const Scalar& c, const AffineForm& g) {
    // f - c*g
    AffineForm r = f;
    if (c.is_zero()) return r;
    for (int i = 0; i < f.dim(); ++i)
        if (!g.coeff[i].is_zero()) r.coeff[i] = r.coeff[i] - c * g.coeff[i];
    if (!g.c0.is_zero()) r.c0 = r.c0 - c * g.c0;
    return r;
}

AffineForm scale_form(const AffineForm& f, const Scalar& c) {
    AffineForm r = f;
    for (auto& x : r.coeff) x = c * x;
    r.c0 = c * r.c0;
    return r;
}

} // namespace

bool forms_equal_up_to_scale(const AffineForm& f, const AffineForm& g) {
    if (f.dim() != g.dim()) return false;
    int i0 = -1;
    for (int i = 0; i < f.dim(); ++i)
        if (!f.coeff[i].is_zero()) { i0 = i; break; }
    if (i0 < 0) {
        // No hyperplane: compare degenerate forms directly.
        return g.coeffs_zero() && (f.c0.is_zero() == g.c0.is_zero());
    }
    if (g.coeff[i0].is_zero() || !invertible_mode(f.coeff[i0])) return false;
    Scalar lambda = g.coeff[i0] * f.coeff[i0].inverse();
    for (int i = 0; i < f.dim(); ++i)
        if (!(g.coeff[i] == lambda * f.coeff[i])) return false;
    return g.c0 == lambda * f.c0;
}

BiArrangement from_edges(int nonroot_vertices,
                         const std::vector<std::tuple<int, int, Scalar>>& chords,
                         const std::vector<Scalar>& sides) {
    int n = nonroot_vertices;
    BiArrangement a;
    a.n = n;
    auto edge_form = [&](int tail, int head, const Scalar& dec) {
        require_exact(dec, "from_edges");
        AffineForm f;
        f.coeff.assign(n, Scalar::rational(Rational(0)));
        if (tail != 0) f.coeff[tail - 1] = f.coeff[tail - 1] + Scalar::rational(Rational(1));
        if (head != 0) f.coeff[head - 1] = f.coeff[head - 1] - Scalar::rational(Rational(1));
        f.c0 = -dec;
        return f; // t_tail - t_head - dec, with the root read as 0
    };
    for (const auto& [t, h, dec] : chords) a.L.push_back(edge_form(t, h, dec));
    int v = static_cast<int>(sides.size());
    for (int j = 0; j < v; ++j) a.M.push_back(edge_form(j, (j + 1) % v, sides[j]));
    return a;
}

BiArrangement from_diagram(const DecoratedDiagram& d) {
    int n = d.degree();
    std::vector<std::tuple<int, int, Scalar>> ch;
    for (int i = 1; i <= n; ++i) ch.emplace_back(i, d.parent(i), d.chord_dec(i));
    return from_edges(n, ch, d.side_decs());
}

Stratum stratum(const BiArrangement& a, const std::vector<int>& I, const std::vector<int>& J) {
    std::vector<AffineForm> rows;
    for (int i : I) rows.push_back(a.L.at(i));
    for (int j : J) rows.push_back(a.M.at(j));
    for (const auto& r : rows) {
        for (const auto& c : r.coeff) require_exact(c, "stratum");
        require_exact(r.c0, "stratum");
    }
    int n = a.n;
    std::vector<char> used(rows.size(), 0);
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (size_t r = 0; r < rows.size(); ++r)
            if (!used[r] && !rows[r].coeff[col].is_zero()) {
                if (!invertible_mode(rows[r].coeff[col]))
                    throw std::invalid_argument("stratum: formal pivot unsupported");
                sel = static_cast<int>(r);
                break;
            }
        if (sel < 0) continue;
        Scalar inv = rows[sel].coeff[col].inverse();
        rows[sel] = scale_form(rows[sel], inv);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == sel) continue;
            rows[r] = sub_scaled(rows[r], rows[r].coeff[col], rows[sel]);
        }
        used[sel] = 1;
        ++rank;
    }
    for (size_t r = 0; r < rows.size(); ++r) {
        if (used[r]) continue;
        if (!rows[r].coeffs_zero())
            throw std::logic_error("stratum: elimination left a nonzero row");
        if (!rows[r].c0.is_zero()) return {true, 0};
    }
    return {false, rank};
}

bool is_affinely_generic(const BiArrangement& a) {
    int l = static_cast<int>(a.L.size()), m = static_cast<int>(a.M.size());
    int total = l + m;
    int maxk = std::min(total, a.n + 1);
    std::vector<int> pick;
    // Every stratum of cardinality <= n must be empty or of codimension the
    // cardinality; every stratum of cardinality n+1 must be empty.
    std::function<bool(int, int)> go = [&](int from, int need) -> bool {
        if (need == 0) {
            std::vector<int> I, J;
            for (int p : pick)
                (p < l ? I : J).push_back(p < l ? p : p - l);
            Stratum s = stratum(a, I, J);
            int k = static_cast<int>(pick.size());
            if (k <= a.n) return s.empty || s.codim == k;
            return s.empty;
        }
        for (int p = from; p <= total - need; ++p) {
            pick.push_back(p);
            bool ok = go(p + 1, need - 1);
            pick.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    for (int k = 1; k <= maxk; ++k)
        if (!go(0, k)) return false;
    return true;
}

Stratum graph_cycle_criterion(const DecoratedDiagram& d, const std::vector<int>& I,
                              const std::vector<int>& J) {
    if (!is_generic(d))
        throw std::invalid_argument("graph_cycle_criterion: non-generic decorations");
    int n = d.degree();
    std::vector<int> uf(n + 1);
    for (int i = 0; i <= n; ++i) uf[i] = i;
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    bool cycle = false;
    auto join = [&](int a, int b) {
        a = find(a); b = find(b);
        if (a == b) { cycle = true; return; }
        uf[a] = b;
    };
    for (int i : I) {
        if (i < 1 || i > n) throw std::invalid_argument("graph_cycle_criterion: bad chord");
        join(i, d.parent(i));
    }
    for (int j : J) {
        if (j < 0 || j > n) throw std::invalid_argument("graph_cycle_criterion: bad side");
        join(j, (j + 1) % (n + 1));
    }
    if (cycle) return {true, 0};
    return {false, static_cast<int>(I.size() + J.size())};
}

BiArrangement delete_forms(const BiArrangement& a, FormSide side, const std::vector<int>& keep) {
    BiArrangement out = a;
    std::vector<AffineForm> kept;
    for (int p : keep) kept.push_back(a.side(side).at(p));
    out.side(side) = std::move(kept);
    return out;
}

ContractionResult contract(const BiArrangement& a, FormSide side, const std::vector<int>& onto,
                           const std::vector<int>& pivot_vars) {
    std::vector<int> onto_sorted(onto);
    std::sort(onto_sorted.begin(), onto_sorted.end());
    int m = static_cast<int>(onto_sorted.size());
    int n = a.n;
    if (!pivot_vars.empty() && static_cast<int>(pivot_vars.size()) != m)
        throw std::invalid_argument("contract: pivot list size mismatch");

    std::vector<AffineForm> R;
    for (int p : onto_sorted) R.push_back(a.side(side).at(p));

    std::vector<int> piv_col(m, -1);
    std::vector<char> col_used(n, 0);
    for (int s = 0; s < m; ++s) {
        int col = -1;
        if (!pivot_vars.empty()) {
            col = pivot_vars[s] - 1;
            if (col < 0 || col >= n || col_used[col])
                throw std::invalid_argument("contract: bad pivot variable");
        } else {
            for (int c = 0; c < n; ++c)
                if (!col_used[c] && !R[s].coeff[c].is_zero()) { col = c; break; }
            if (col < 0) {
                if (R[s].coeffs_zero() && !R[s].c0.is_zero())
                    throw std::invalid_argument("contract: empty contraction stratum");
                throw std::invalid_argument("contract: non-eliminable variable set");
            }
        }
        const Scalar& pc = R[s].coeff[col];
        if (pc.is_zero())
            throw std::invalid_argument("contract: non-eliminable variable set");
        if (!invertible_mode(pc))
            throw std::invalid_argument("contract: formal pivot unsupported");
        R[s] = scale_form(R[s], pc.inverse());
        for (int t = 0; t < m; ++t) {
            if (t == s) continue;
            R[t] = sub_scaled(R[t], R[t].coeff[col], R[s]);
        }
        piv_col[s] = col;
        col_used[col] = 1;
    }

    ContractionResult out;
    for (int c = 0; c < n; ++c)
        if (!col_used[c]) out.free_vars.push_back(c + 1);
    std::map<int, int> newpos; // free column -> new column
    for (size_t i = 0; i < out.free_vars.size(); ++i) newpos[out.free_vars[i] - 1] = static_cast<int>(i);
    int nn = static_cast<int>(out.free_vars.size());

    auto project = [&](const AffineForm& f) {
        AffineForm g;
        g.coeff.assign(nn, Scalar::rational(Rational(0)));
        for (int c = 0; c < n; ++c) {
            if (col_used[c]) {
                if (!f.coeff[c].is_zero())
                    throw std::logic_error("contract: unresolved pivot coordinate");
                continue;
            }
            g.coeff[newpos[c]] = f.coeff[c];
        }
        g.c0 = f.c0;
        return g;
    };

    out.solved.assign(n, std::nullopt);
    for (int s = 0; s < m; ++s) {
        // Row: t_piv + sum c_free t_free + c0 = 0  =>  t_piv = -(...)
        AffineForm expr;
        expr.coeff.assign(nn, Scalar::rational(Rational(0)));
        for (int c = 0; c < n; ++c)
            if (!col_used[c]) expr.coeff[newpos[c]] = -R[s].coeff[c];
        expr.c0 = -R[s].c0;
        out.solved[piv_col[s]] = std::move(expr);
    }

    auto substitute = [&](AffineForm f) {
        for (int s = 0; s < m; ++s) f = sub_scaled(f, f.coeff[piv_col[s]], R[s]);
        return project(f);
    };

    out.arr.n = nn;
    const auto& keep_side = a.side(side);
    for (int p = 0; p < static_cast<int>(keep_side.size()); ++p)
        if (!std::binary_search(onto_sorted.begin(), onto_sorted.end(), p))
            out.arr.side(side).push_back(substitute(keep_side[p]));
    FormSide other = (side == FormSide::L) ? FormSide::M : FormSide::L;
    for (const auto& f : a.side(other)) out.arr.side(other).push_back(substitute(f));
    return out;
}

BiArrangement product(const BiArrangement& a1, const BiArrangement& a2) {
    BiArrangement out;
    out.n = a1.n + a2.n;
    auto lift = [&](const AffineForm& f, bool first) {
        AffineForm g;
        g.coeff.assign(out.n, Scalar::rational(Rational(0)));
        for (int i = 0; i < f.dim(); ++i) g.coeff[first ? i : a1.n + i] = f.coeff[i];
        g.c0 = f.c0;
        return g;
    };
    for (const auto& f : a1.L) out.L.push_back(lift(f, true));
    for (const auto& f : a2.L) out.L.push_back(lift(f, false));
    for (const auto& f : a1.M) out.M.push_back(lift(f, true));
    for (const auto& f : a2.M) out.M.push_back(lift(f, false));
    return out;
}

// Lemma lembiarrangementsRQ ----------------------------------------------------

namespace {

int rank_in(const std::vector<int>& sorted, int v) {
    return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

} // namespace

bool check_lem_rq_q(const DecoratedDiagram& d, const std::vector<int>& C) {
    int n = d.degree();
    BiArrangement A = from_diagram(d);
    std::vector<int> onto;
    for (int c : C) onto.push_back(c - 1);
    ContractionResult ctr = contract(A, FormSide::L, onto, C);
    int nn = static_cast<int>(ctr.free_vars.size());

    QResult q = q_c(d, C);
    FacePartition fp = faces(d.base(), C);
    std::vector<int> cbar;
    for (int i = 1; i <= n; ++i)
        if (!std::binary_search(C.begin(), C.end(), i)) cbar.push_back(i);

    // The coordinate of an original vertex on the stratum L_C, as an affine
    // expression over the surviving variables.
    auto coord_expr = [&](int v) {
        AffineForm e;
        e.coeff.assign(nn, Scalar::rational(Rational(0)));
        e.c0 = Scalar::zero(d.mode() == ScalarMode::None ? ScalarMode::Rational : d.mode());
        if (v == 0) return e;
        if (ctr.solved[v - 1]) return *ctr.solved[v - 1];
        e.coeff[rank_in(ctr.free_vars, v)] = Scalar::rational(Rational(1));
        return e;
    };

    for (size_t fi = 0; fi < fp.blocks.size(); ++fi) {
        const auto& blk = fp.blocks[fi];
        const auto& fac = q.factors[fi];
        // Every petal corner sits at the tail vertex of the side leaving it;
        // the face root is corner 0.
        AffineForm root_expr = coord_expr(blk.sides[0]);

        BiArrangement Afac = from_diagram(fac.diagram);
        // Factor coordinate j reads (corner j position) - (face root position).
        auto expected = [&](const AffineForm& f) {
            AffineForm g;
            g.coeff.assign(nn, Scalar::rational(Rational(0)));
            g.c0 = f.c0;
            for (int j = 1; j <= fac.diagram.degree(); ++j) {
                const Scalar& cf = f.coeff[j - 1];
                if (cf.is_zero()) continue;
                AffineForm vexpr = coord_expr(blk.sides[j]);
                for (int x = 0; x < nn; ++x) {
                    if (!vexpr.coeff[x].is_zero()) g.coeff[x] = g.coeff[x] + cf * vexpr.coeff[x];
                    if (!root_expr.coeff[x].is_zero())
                        g.coeff[x] = g.coeff[x] - cf * root_expr.coeff[x];
                }
                if (!vexpr.c0.is_zero()) g.c0 = g.c0 + cf * vexpr.c0;
                if (!root_expr.c0.is_zero()) g.c0 = g.c0 - cf * root_expr.c0;
            }
            return g;
        };

        for (int j = 1; j <= fac.diagram.degree(); ++j) {
            int orig = fac.chord_orig[j - 1];
            int pos = rank_in(cbar, orig);
            if (!forms_equal_up_to_scale(expected(Afac.L[j - 1]), ctr.arr.L.at(pos))) return false;
        }
        for (size_t t = 0; t < fac.side_orig.size(); ++t) {
            int orig = fac.side_orig[t];
            if (!forms_equal_up_to_scale(expected(Afac.M[t]), ctr.arr.M.at(orig))) return false;
        }
    }
    return true;
}

bool check_lem_rq_r(const DecoratedDiagram& d, const std::vector<int>& C) {
    int n = d.degree();
    BiArrangement A = from_diagram(d);
    std::vector<int> cpos;
    for (int c : C) cpos.push_back(c - 1);
    BiArrangement A1 = delete_forms(A, FormSide::L, cpos);
    std::vector<int> scp = s_c_plus(d.base(), C);
    ContractionResult ctr = contract(A1, FormSide::M, scp, scp); // M_j solved for t_j

    FlipReport fr = r_c(d, C);
    const auto& R = fr.r;
    int k = R.diagram.degree();

    // Contracted vertex classes: intrinsic vertex j of r_C(D) corresponds to
    // the unique member of its class whose coordinate survived.
    DecoratedGraph g0;
    g0.num_vertices = n + 1;
    for (int j = 0; j <= n; ++j)
        g0.edges.push_back({j, (j + 1) % (n + 1), Scalar::none(), false, j});
    std::vector<int> idx;
    for (size_t e = 0; e < g0.edges.size(); ++e)
        if (std::binary_search(scp.begin(), scp.end(), g0.edges[e].label))
            idx.push_back(static_cast<int>(e));
    ContractedGraph cg = contract_edges(g0, idx);

    auto free_var_of_vertex = [&](int orig_vertex) {
        int cls = cg.vertex_class[orig_vertex];
        int var = -1;
        for (int v = 1; v <= n; ++v)
            if (cg.vertex_class[v] == cls && !std::binary_search(scp.begin(), scp.end(), v)) {
                if (var != -1) throw std::logic_error("check_lem_rq_r: two free vars in class");
                var = v;
            }
        if (var == -1) throw std::logic_error("check_lem_rq_r: no free var in class");
        return var;
    };

    // r_C(D)'s intrinsic vertex j sits at original side rs[j]'s tail.
    std::vector<int> rs{0};
    for (int s = 1; s <= n; ++s)
        if (!std::binary_search(scp.begin(), scp.end(), s)) rs.push_back(s);

    auto expected = [&](const AffineForm& f) {
        AffineForm g3;
        g3.coeff.assign(ctr.free_vars.size(), Scalar::rational(Rational(0)));
        for (int j = 1; j <= k; ++j) {
            if (f.coeff[j - 1].is_zero()) continue;
            int var = free_var_of_vertex(rs[j]);
            int pos = rank_in(ctr.free_vars, var);
            g3.coeff[pos] = g3.coeff[pos] + f.coeff[j - 1];
        }
        g3.c0 = f.c0;
        return g3;
    };

    BiArrangement Ar = from_diagram(R.diagram);
    for (int j = 1; j <= k; ++j) {
        int orig = R.chord_orig[j - 1];
        int pos = rank_in(C, orig);
        if (!forms_equal_up_to_scale(expected(Ar.L[j - 1]), ctr.arr.L.at(pos))) return false;
    }
    for (size_t t = 0; t < R.side_orig.size(); ++t) {
        // ctr keeps M positions outside scp in order: position = rank of the
        // original side among the survivors.
        int orig = R.side_orig[t];
        int pos = rank_in(rs, orig);
        if (!forms_equal_up_to_scale(expected(Ar.M[t]), ctr.arr.M.at(pos))) return false;
    }
    return true;
}

} // namespace dissect
