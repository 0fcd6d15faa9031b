#include "dissect/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace dissect {

namespace {

std::vector<std::vector<int>> k_subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > m) return out;
    std::vector<int> cur;
    std::function<void(int)> go = [&](int from) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = from; i <= m - (k - static_cast<int>(cur.size())); ++i) {
            cur.push_back(i);
            go(i + 1);
            cur.pop_back();
        }
    };
    go(0);
    return out;
}

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

std::vector<int> reindex_into(const std::vector<int>& subset, const std::vector<int>& universe) {
    // positions of subset elements within the sorted universe
    std::vector<int> out;
    for (int v : subset) {
        auto it = std::lower_bound(universe.begin(), universe.end(), v);
        if (it == universe.end() || *it != v)
            throw std::invalid_argument("reindex: element not in universe");
        out.push_back(static_cast<int>(it - universe.begin()));
    }
    return out;
}

std::vector<int> map_through(const std::vector<int>& subset, const std::vector<int>& universe) {
    // universe[p] for each position p
    std::vector<int> out;
    for (int p : subset) out.push_back(universe.at(p));
    return out;
}

bool certify(const PresentationK& src, const PresentationK& tgt,
             const std::vector<std::vector<std::pair<int, Rational>>>& img) {
    for (const auto& row : src.relation_rows()) {
        QVec v = tgt.zero_vector();
        for (size_t g = 0; g < row.size(); ++g) {
            if (row[g] == 0) continue;
            for (const auto& [tg, c] : img[g]) v[tg] += row[g] * c;
        }
        if (!tgt.in_relation_span(v)) return false;
    }
    return true;
}

} // namespace

PresentationK::PresentationK(const BiArrangement& a, int k)
    : n_(a.n), k_(k), l_(static_cast<int>(a.L.size())), m_(static_cast<int>(a.M.size())) {
    if (k < 0 || k > n_) return; // zero presentation
    auto Is = k_subsets(l_, k);
    auto Js = k_subsets(m_, n_ - k);
    for (const auto& I : Is)
        for (const auto& J : Js) {
            index_[{I, J}] = static_cast<int>(gens_.size());
            gens_.push_back({I, J});
        }

    int g = static_cast<int>(gens_.size());
    for (int p = 0; p < g; ++p) {
        Stratum s = stratum(a, gens_[p].I, gens_[p].J);
        if (s.empty) {
            QVec row(g, Rational(0));
            row[p] = 1;
            raw_rel_.push_back(std::move(row));
        }
    }
    auto Jps = k_subsets(m_, n_ - k - 1);
    for (const auto& I : Is)
        for (const auto& Jp : Jps) {
            QVec row(g, Rational(0));
            bool nonzero = false;
            for (int j = 0; j < m_; ++j) {
                if (std::binary_search(Jp.begin(), Jp.end(), j)) continue;
                int pos = gen_pos(I, sorted_union(Jp, {j}));
                if (pos < 0) continue;
                row[pos] = Rational(sgn_shuffle({j}, Jp));
                nonzero = true;
            }
            if (nonzero) raw_rel_.push_back(std::move(row));
        }
    rel_ = Rref(raw_rel_, g);
    basis_ = rel_.free_columns();
}

int PresentationK::gen_pos(const std::vector<int>& I, const std::vector<int>& J) const {
    auto it = index_.find({I, J});
    return it == index_.end() ? -1 : it->second;
}

QVec PresentationK::gen_vector(const std::vector<int>& I, const std::vector<int>& J,
                               const Rational& c) const {
    int p = gen_pos(I, J);
    if (p < 0) throw std::invalid_argument("gen_vector: no such generator");
    QVec v = zero_vector();
    v[p] = c;
    return v;
}

QVec PresentationK::coords(const QVec& v) const {
    QVec red = rel_.reduce(v);
    QVec out;
    out.reserve(basis_.size());
    for (int b : basis_) out.push_back(red[b]);
    return out;
}

bool PresentationK::classes_equal(const QVec& v, const QVec& w) const {
    QVec diff(v);
    for (size_t i = 0; i < diff.size(); ++i) diff[i] -= w[i];
    return in_relation_span(diff);
}

QVec PresMap::apply(const QVec& v) const {
    QVec out = tgt->zero_vector();
    for (size_t g = 0; g < v.size(); ++g) {
        if (v[g] == 0) continue;
        for (const auto& [tg, c] : img[g]) out[tg] += v[g] * c;
    }
    return out;
}

PresMap m_deletion_map(const PresentationK& src, const PresentationK& tgt,
                       const std::vector<int>& J0) {
    PresMap m{&src, &tgt, {}, false};
    for (const auto& gen : src.gens()) {
        std::vector<std::pair<int, Rational>> row;
        bool inside = std::includes(J0.begin(), J0.end(), gen.J.begin(), gen.J.end());
        if (inside) {
            int p = tgt.gen_pos(gen.I, reindex_into(gen.J, J0));
            if (p >= 0) row.push_back({p, Rational(1)});
        }
        m.img.push_back(std::move(row));
    }
    m.well_defined = certify(src, tgt, m.img);
    return m;
}

PresMap m_contraction_map(const PresentationK& src, const PresentationK& tgt,
                          const std::vector<int>& J0) {
    // Source M positions are the complement of J0 in the target M list.
    std::vector<int> comp;
    for (int j = 0; j < tgt.msize(); ++j)
        if (!std::binary_search(J0.begin(), J0.end(), j)) comp.push_back(j);

    PresMap m{&src, &tgt, {}, false};
    for (const auto& gen : src.gens()) {
        std::vector<int> Jt = map_through(gen.J, comp);
        int sign = sgn_shuffle(J0, Jt);
        int p = tgt.gen_pos(gen.I, sorted_union(Jt, J0));
        std::vector<std::pair<int, Rational>> row;
        if (p >= 0) row.push_back({p, Rational(sign)});
        m.img.push_back(std::move(row));
    }
    m.well_defined = certify(src, tgt, m.img);
    return m;
}

PresMap l_deletion_map(const PresentationK& src, const PresentationK& tgt,
                       const std::vector<int>& I0) {
    PresMap m{&src, &tgt, {}, false};
    for (const auto& gen : src.gens()) {
        int p = tgt.gen_pos(map_through(gen.I, I0), gen.J);
        std::vector<std::pair<int, Rational>> row;
        if (p >= 0) row.push_back({p, Rational(1)});
        m.img.push_back(std::move(row));
    }
    m.well_defined = certify(src, tgt, m.img);
    return m;
}

PresMap l_contraction_map(const PresentationK& src, const PresentationK& tgt,
                          const std::vector<int>& I0) {
    // Source L universe: 0..l-1; target L universe: complement of I0.
    std::vector<int> comp;
    for (int i = 0; i < src.lsize(); ++i)
        if (!std::binary_search(I0.begin(), I0.end(), i)) comp.push_back(i);

    PresMap m{&src, &tgt, {}, false};
    for (const auto& gen : src.gens()) {
        std::vector<std::pair<int, Rational>> row;
        if (std::includes(gen.I.begin(), gen.I.end(), I0.begin(), I0.end())) {
            std::vector<int> rest;
            std::set_difference(gen.I.begin(), gen.I.end(), I0.begin(), I0.end(),
                                std::back_inserter(rest));
            int sign = sgn_shuffle(rest, I0);
            int p = tgt.gen_pos(reindex_into(rest, comp), gen.J);
            if (p >= 0) row.push_back({p, Rational(sign)});
        }
        m.img.push_back(std::move(row));
    }
    m.well_defined = certify(src, tgt, m.img);
    return m;
}

PresMap compose(const PresMap& second, const PresMap& first) {
    if (first.tgt != second.src)
        throw std::invalid_argument("compose: mismatched presentations");
    PresMap m{first.src, second.tgt, {}, first.well_defined && second.well_defined};
    for (const auto& row : first.img) {
        std::map<int, Rational> acc;
        for (const auto& [mid, c] : row)
            for (const auto& [tg, c2] : second.img[mid]) acc[tg] += c * c2;
        std::vector<std::pair<int, Rational>> out;
        for (const auto& [tg, c] : acc)
            if (c != 0) out.push_back({tg, c});
        m.img.push_back(std::move(out));
    }
    return m;
}

KunnethMap kunneth_map(const PresentationK& src1, const PresentationK& src2,
                       const PresentationK& tgt, int l1, int m1) {
    KunnethMap km{&src1, &src2, &tgt, {}, false};
    km.img.assign(src1.gens().size(), std::vector<int>(src2.gens().size(), -1));
    for (size_t g1 = 0; g1 < src1.gens().size(); ++g1)
        for (size_t g2 = 0; g2 < src2.gens().size(); ++g2) {
            std::vector<int> I = src1.gens()[g1].I;
            for (int i : src2.gens()[g2].I) I.push_back(l1 + i);
            std::vector<int> J = src1.gens()[g1].J;
            for (int j : src2.gens()[g2].J) J.push_back(m1 + j);
            km.img[g1][g2] = tgt.gen_pos(I, J);
        }
    // Relations of the tensor product: r1 ⊗ gen2 and gen1 ⊗ r2.
    auto check_rows = [&](bool first_side) {
        const auto& rel = first_side ? src1.relation_rows() : src2.relation_rows();
        const auto& other = first_side ? src2.gens() : src1.gens();
        for (const auto& row : rel)
            for (size_t og = 0; og < other.size(); ++og) {
                QVec v = tgt.zero_vector();
                for (size_t g = 0; g < row.size(); ++g) {
                    if (row[g] == 0) continue;
                    int t = first_side ? km.img[g][og] : km.img[og][g];
                    if (t >= 0) v[t] += row[g];
                }
                if (!tgt.in_relation_span(v)) return false;
            }
        return true;
    };
    km.well_defined = check_rows(true) && check_rows(false);
    return km;
}

QMat b_c_matrix(const DecoratedDiagram& d, const PresentationK& p) {
    int n = d.degree(), k = p.k();
    QMat out;
    for (const auto& C : k_subsets(n, k)) {
        std::vector<int> labels;
        for (int c : C) labels.push_back(c + 1);
        std::vector<int> scp = s_c_plus(d.base(), labels);
        // chord label c -> L position c-1; side label s -> M position s.
        QVec v = p.gen_vector(C, scp);
        out.push_back(p.coords(v));
    }
    return out;
}

bool b_c_invertible(const DecoratedDiagram& d, const PresentationK& p) {
    QMat m = b_c_matrix(d, p);
    int dim = p.dim();
    if (static_cast<int>(m.size()) != dim) return false;
    return rank_of(m, dim) == dim;
}

// Appendix B ------------------------------------------------------------------

bool sign_graph_check(const DissectionDiagram& d, const std::vector<int>& C) {
    FacePartition fp = faces(d, C);
    int nb = static_cast<int>(fp.blocks.size());

    // Edge sign between tuples differing in block i at entries a != b, the
    // other entries fixed at u.
    auto edge_sign = [&](const std::vector<int>& u, int i, int a, int b) {
        std::vector<int> Jp;
        for (int al = 0; al < nb; ++al) {
            for (int s : fp.blocks[al].sides) {
                if (al == i) {
                    if (s != a && s != b) Jp.push_back(s);
                } else if (s != u[al]) {
                    Jp.push_back(s);
                }
            }
        }
        std::sort(Jp.begin(), Jp.end());
        return -sgn_shuffle({a}, Jp) * sgn_shuffle({b}, Jp);
    };

    // Enumerate assignments u of the blocks other than those in `skip`.
    auto for_each_tuple = [&](const std::vector<int>& skip, auto&& fn) {
        std::vector<int> u(nb, -1);
        std::function<bool(int)> go = [&](int i) -> bool {
            if (i == nb) return fn(u);
            if (std::find(skip.begin(), skip.end(), i) != skip.end()) return go(i + 1);
            for (int s : fp.blocks[i].sides) {
                u[i] = s;
                if (!go(i + 1)) return false;
            }
            return true;
        };
        return go(0);
    };

    // Trivial loops: the edge sign is symmetric in (a,b).
    for (int i = 0; i < nb; ++i) {
        const auto& S = fp.blocks[i].sides;
        bool ok = for_each_tuple({i}, [&](const std::vector<int>& u) {
            for (size_t x = 0; x < S.size(); ++x)
                for (size_t y = x + 1; y < S.size(); ++y)
                    if (edge_sign(u, i, S[x], S[y]) != edge_sign(u, i, S[y], S[x])) return false;
            return true;
        });
        if (!ok) return false;
    }

    // Triangles within one block.
    for (int i = 0; i < nb; ++i) {
        const auto& S = fp.blocks[i].sides;
        if (S.size() < 3) continue;
        bool ok = for_each_tuple({i}, [&](const std::vector<int>& u) {
            for (size_t x = 0; x < S.size(); ++x)
                for (size_t y = x + 1; y < S.size(); ++y)
                    for (size_t z = y + 1; z < S.size(); ++z) {
                        int p = edge_sign(u, i, S[x], S[y]) * edge_sign(u, i, S[y], S[z]) *
                                edge_sign(u, i, S[z], S[x]);
                        if (p != 1) return false;
                    }
            return true;
        });
        if (!ok) return false;
    }

    // Squares across two blocks.
    for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j) {
            const auto& Si = fp.blocks[i].sides;
            const auto& Sj = fp.blocks[j].sides;
            if (Si.size() < 2 || Sj.size() < 2) continue;
            bool ok = for_each_tuple({i, j}, [&](const std::vector<int>& u) {
                for (size_t x = 0; x < Si.size(); ++x)
                    for (size_t y = x + 1; y < Si.size(); ++y)
                        for (size_t z = 0; z < Sj.size(); ++z)
                            for (size_t w = z + 1; w < Sj.size(); ++w) {
                                std::vector<int> uc = u;
                                uc[j] = Sj[z];
                                int s1 = edge_sign(uc, i, Si[x], Si[y]);
                                uc[j] = Sj[w];
                                int s2 = edge_sign(uc, i, Si[x], Si[y]);
                                uc[i] = Si[x];
                                int s3 = edge_sign(uc, j, Sj[z], Sj[w]);
                                uc[i] = Si[y];
                                int s4 = edge_sign(uc, j, Sj[z], Sj[w]);
                                if (s1 * s2 * s3 * s4 != 1) return false;
                            }
                return true;
            });
            if (!ok) return false;
        }
    return true;
}

bool product_signs_check(const DecoratedDiagram& d, const std::vector<int>& C_in) {
    std::vector<int> C(C_in);
    std::sort(C.begin(), C.end());
    int n = d.degree();
    std::vector<int> cbar, comp;
    for (int i = 1; i <= n; ++i)
        if (!std::binary_search(C.begin(), C.end(), i)) cbar.push_back(i);
    QResult q = q_c(d, C);
    FlipReport r = r_c(d, C);
    std::vector<int> scp = s_c_plus(d.base(), C);
    for (int s = 1; s <= n; ++s)
        if (!std::binary_search(scp.begin(), scp.end(), s)) comp.push_back(s);

    std::vector<int> nd, ni, ed, ei;
    for (auto [c, s] : q.nu()) { nd.push_back(c); ni.push_back(s); }
    for (auto [c, s] : r.eta()) { ed.push_back(c); ei.push_back(s); }

    int prod = sgn_shuffle(cbar, C) * sgn_bijection(nd, ni) * sgn_shuffle(scp, comp) *
               sgn_bijection(ed, ei);
    int expect = (r.k() % 2 == 0) ? 1 : -1;
    return prod == expect;
}

// Theorem maintheorem, geometrically -------------------------------------------

TensorElement motivic_coproduct_geometric(const DecoratedDiagram& d, int k, bool verify) {
    int n = d.degree();
    if (d.mode() == ScalarMode::Float)
        throw std::invalid_argument("motivic_coproduct_geometric: exact/formal scalars required");
    if (verify && !is_generic(d))
        throw std::invalid_argument("motivic_coproduct_geometric: non-generic diagram");

    BiArrangement A = from_diagram(d);
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);

    PresentationK P_top(A, n), P_k(A, k), P_0(A, 0);

    TensorElement out;
    for (const auto& C : subsets_of(all)) {
        if (static_cast<int>(C.size()) != k) continue;
        std::vector<int> cbar, cpos, scp, comp;
        for (int i = 1; i <= n; ++i)
            if (!std::binary_search(C.begin(), C.end(), i)) cbar.push_back(i);
        for (int c : C) cpos.push_back(c - 1);
        scp = s_c_plus(d.base(), C);
        for (int s = 1; s <= n; ++s)
            if (!std::binary_search(scp.begin(), scp.end(), s)) comp.push_back(s);

        QResult q = q_c(d, C);
        FlipReport r = r_c(d, C);

        std::vector<int> nd, ni, ed, ei;
        for (auto [c, s] : q.nu()) { nd.push_back(c); ni.push_back(s); }
        for (auto [c, s] : r.eta()) { ed.push_back(c); ei.push_back(s); }
        int sign = sgn_shuffle(cbar, C) * sgn_bijection(nd, ni) * sgn_shuffle(scp, comp) *
                   sgn_bijection(ed, ei);

        if (verify) {
            // q side: the residue H(D)(k) -> H(L_C | L(~C); M).
            BiArrangement Aq = contract(A, FormSide::L, cpos, C).arr;
            PresentationK Pq_top(Aq, n - k), Pq_bot(Aq, 0);
            if (Pq_top.dim() != 1 || Pq_bot.dim() != 1)
                throw std::logic_error("motivic: q-side graded piece not one-dimensional");

            PresMap res_top = l_contraction_map(P_top, Pq_top, cpos);
            PresMap res_bot = l_contraction_map(P_k, Pq_bot, cpos);
            if (!res_top.well_defined || !res_bot.well_defined)
                throw std::logic_error("motivic: residue map not well-defined");

            std::vector<int> full_pos, cbar_reidx;
            for (int i = 0; i < n; ++i) full_pos.push_back(i);
            for (int i = 0; i < n - k; ++i) cbar_reidx.push_back(i);
            QVec v_img = res_top.apply(P_top.gen_vector(full_pos, {}));
            QVec v_expect = Pq_top.gen_vector(cbar_reidx, {},
                                              Rational(sgn_shuffle(cbar, C)));
            if (Pq_top.coords(v_img) != Pq_top.coords(v_expect))
                throw std::logic_error("motivic: v(D) residue image mismatch");

            QVec bC = P_k.gen_vector(cpos, scp);
            QVec bC_img = res_bot.apply(bC);
            QVec f_scp = Pq_bot.gen_vector({}, scp);
            if (Pq_bot.coords(bC_img) != Pq_bot.coords(f_scp))
                throw std::logic_error("motivic: b_C residue image mismatch");
            bool nonzero = false;
            for (const auto& x : Pq_bot.coords(bC_img))
                if (x != 0) nonzero = true;
            if (!nonzero) throw std::logic_error("motivic: b_C image vanishes in gr_0");

            // r side: H(r_C(D)) = H(M_{S_C^+} | L(C); M_0, M(~S_C^+)) -> H(D).
            BiArrangement A1 = delete_forms(A, FormSide::L, cpos);
            BiArrangement Ar = contract(A1, FormSide::M, scp, scp).arr;
            BiArrangement Amid = contract(A, FormSide::M, scp, scp).arr;
            PresentationK Pr_k(Ar, k), Pr_0(Ar, 0);
            PresentationK Pm_k(Amid, k), Pm_0(Amid, 0);
            if (Pr_k.dim() != 1 || Pr_0.dim() != 1)
                throw std::logic_error("motivic: r-side graded piece not one-dimensional");

            PresMap del_k = l_deletion_map(Pr_k, Pm_k, cpos);
            PresMap del_0 = l_deletion_map(Pr_0, Pm_0, cpos);
            PresMap con_k = m_contraction_map(Pm_k, P_k, scp);
            PresMap con_0 = m_contraction_map(Pm_0, P_0, scp);
            if (!del_k.well_defined || !del_0.well_defined || !con_k.well_defined ||
                !con_0.well_defined)
                throw std::logic_error("motivic: face map not well-defined");

            std::vector<int> allk;
            for (int i = 0; i < k; ++i) allk.push_back(i);
            QVec top_img = con_k.apply(del_k.apply(Pr_k.gen_vector(allk, {})));
            if (P_k.coords(top_img) != P_k.coords(bC))
                throw std::logic_error("motivic: e_C face image is not b_C");

            std::vector<int> r_nonroot;
            for (int i = 1; i <= k; ++i) r_nonroot.push_back(i);
            QVec bot_img = con_0.apply(del_0.apply(Pr_0.gen_vector({}, r_nonroot)));
            std::vector<int> oneton;
            for (int s = 1; s <= n; ++s) oneton.push_back(s);
            QVec f_all = P_0.gen_vector({}, oneton, Rational(sgn_shuffle(scp, comp)));
            if (P_0.coords(bot_img) != P_0.coords(f_all))
                throw std::logic_error("motivic: φ(r_C) face image mismatch");
        }

        out.add({q.monomial(), Monomial::single(r.r.diagram)}, Rational(sign));
    }
    return out;
}

bool r3_class_vanishes(int nonroot_vertices,
                       const std::vector<std::tuple<int, int, Scalar>>& chords,
                       const std::vector<Scalar>& sides, int side_i, int side_j) {
    BiArrangement A = from_edges(nonroot_vertices, chords, sides);
    int nch = static_cast<int>(chords.size());
    PresentationK P(A, nch);
    std::vector<int> full;
    for (int i = 0; i < nch; ++i) full.push_back(i);
    QVec v = P.gen_vector(full, {side_i});
    QVec w = P.gen_vector(full, {side_j});
    for (size_t i = 0; i < v.size(); ++i) v[i] += w[i];
    return P.in_relation_span(v);
}

} // namespace dissect
