#include "dissect/hopf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dissect {

namespace {

std::vector<int> normalize_chord_subset(const DecoratedDiagram& d, std::vector<int> C) {
    std::sort(C.begin(), C.end());
    C.erase(std::unique(C.begin(), C.end()), C.end());
    for (int c : C)
        if (c < 1 || c > d.degree())
            throw std::invalid_argument("invalid chord index " + std::to_string(c));
    return C;
}

std::vector<int> complement_in(int n, const std::vector<int>& C, int from = 1) {
    std::vector<int> out;
    for (int i = from; i <= n; ++i)
        if (!std::binary_search(C.begin(), C.end(), i)) out.push_back(i);
    return out;
}

Rational rat_pow(const Rational& x, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= x;
    return r; // 0^0 = 1 by the empty product
}

} // namespace

// Monomial ----------------------------------------------------------------

Monomial::Monomial(std::vector<DecoratedDiagram> factors) : f_(std::move(factors)) {
    f_.erase(std::remove_if(f_.begin(), f_.end(),
                            [](const DecoratedDiagram& d) { return d.degree() == 0; }),
             f_.end());
    std::sort(f_.begin(), f_.end());
}

Monomial Monomial::single(DecoratedDiagram d) {
    std::vector<DecoratedDiagram> v;
    if (d.degree() > 0) v.push_back(std::move(d));
    return Monomial(std::move(v));
}

int Monomial::degree() const {
    int s = 0;
    for (const auto& d : f_) s += d.degree();
    return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<DecoratedDiagram> v = f_;
    v.insert(v.end(), o.f_.begin(), o.f_.end());
    return Monomial(std::move(v));
}

bool Monomial::operator<(const Monomial& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    if (f_.size() != o.f_.size()) return f_.size() < o.f_.size();
    for (size_t i = 0; i < f_.size(); ++i) {
        if (f_[i] != o.f_[i]) return f_[i] < o.f_[i];
    }
    return false;
}

// Constructions -----------------------------------------------------------

DecoratedDiagram corolla(int n) {
    std::vector<int> p(n, 0);
    return DecoratedDiagram(DissectionDiagram(std::move(p)));
}

DecoratedDiagram corolla(int n, std::vector<Scalar> a, std::vector<Scalar> b) {
    std::vector<int> p(n, 0);
    return DecoratedDiagram(DissectionDiagram(std::move(p)), std::move(a), std::move(b));
}

DecoratedDiagram path_tree(int n) {
    std::vector<int> p(n);
    for (int i = 1; i < n; ++i) p[i - 1] = i + 1;
    if (n >= 1) p[n - 1] = 0;
    return DecoratedDiagram(DissectionDiagram(std::move(p)));
}

DecoratedDiagram path_tree(int n, std::vector<Scalar> a, std::vector<Scalar> b) {
    std::vector<int> p(n);
    for (int i = 1; i < n; ++i) p[i - 1] = i + 1;
    if (n >= 1) p[n - 1] = 0;
    return DecoratedDiagram(DissectionDiagram(std::move(p)), std::move(a), std::move(b));
}

// q_C ----------------------------------------------------------------------

Monomial QResult::monomial() const {
    std::vector<DecoratedDiagram> v;
    for (const auto& f : factors)
        if (f.diagram.degree() > 0) v.push_back(f.diagram);
    return Monomial(std::move(v));
}

std::vector<std::pair<int, int>> QResult::nu() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& f : factors)
        for (size_t i = 0; i < f.chord_orig.size(); ++i)
            out.emplace_back(f.chord_orig[i], f.side_orig[i + 1]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> FlipReport::eta() const {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < r.chord_orig.size(); ++i)
        out.emplace_back(r.chord_orig[i], r.side_orig[i + 1]);
    std::sort(out.begin(), out.end());
    return out;
}

// The chords of C bounding each face: a chord borders the face it owns in
// the nesting forest and the face of the innermost C-chord strictly
// containing it (the outer face when there is none).
static std::vector<std::vector<int>> face_boundary_chords(const DissectionDiagram& d,
                                                          const std::vector<int>& C,
                                                          const FacePartition& fp) {
    int n = d.degree();
    auto interval = [&](int c) {
        int u = c, v = d.parent(c);
        if (u > v) std::swap(u, v);
        return std::pair<int, int>{u, v - 1};
    };
    auto cover = [&](int s) {
        int best = 0, len = n + 2;
        for (int c : C) {
            auto [lo, hi] = interval(c);
            if (lo <= s && s <= hi && hi - lo + 1 < len) {
                best = c;
                len = hi - lo + 1;
            }
        }
        return best; // 0 = outer face
    };
    std::map<int, int> owner_to_face;
    for (size_t f = 0; f < fp.blocks.size(); ++f)
        owner_to_face[cover(fp.blocks[f].sides[0])] = static_cast<int>(f);

    auto outer_of = [&](int c) {
        auto [lo, hi] = interval(c);
        int best = 0, len = n + 2;
        for (int c2 : C) {
            if (c2 == c) continue;
            auto [lo2, hi2] = interval(c2);
            if (lo2 <= lo && hi <= hi2 && hi2 - lo2 + 1 < len) {
                best = c2;
                len = hi2 - lo2 + 1;
            }
        }
        return best;
    };

    std::vector<std::vector<int>> out(fp.blocks.size());
    for (int c : C) {
        out[owner_to_face.at(c)].push_back(c);
        out[owner_to_face.at(outer_of(c))].push_back(c);
    }
    for (auto& v : out) std::sort(v.begin(), v.end());
    return out;
}

QResult q_c(const DecoratedDiagram& d, const std::vector<int>& C_in) {
    auto C = normalize_chord_subset(d, C_in);
    int n = d.degree();
    FacePartition fp = faces(d.base(), C);
    auto boundary = face_boundary_chords(d.base(), C, fp);

    QResult out;
    for (size_t fi = 0; fi < fp.blocks.size(); ++fi) {
        const auto& blk = fp.blocks[fi];
        int m = static_cast<int>(blk.sides.size());
        int degf = m - 1;

        // The face's own picture: its polygon sides, its boundary chords from
        // C, and the chords of the diagram inside it. Contractions stay
        // inside this picture; other faces only share glue corners.
        DecoratedGraph g;
        g.num_vertices = n + 1;
        std::vector<int> contract_idx;
        for (int c : boundary[fi]) {
            contract_idx.push_back(static_cast<int>(g.edges.size()));
            g.edges.push_back({c, d.parent(c), d.chord_dec(c), true, c});
        }
        for (int c : blk.chords) g.edges.push_back({c, d.parent(c), d.chord_dec(c), true, c});
        for (int s : blk.sides)
            g.edges.push_back({s, (s + 1) % (n + 1), d.side_dec(s), false, s});
        ContractedGraph cg = contract_edges(g, contract_idx);

        auto find_edge = [&](bool is_chord, int label) -> const DecoratedGraph::Edge& {
            for (const auto& e : cg.graph.edges)
                if (e.is_chord == is_chord && e.label == label) return e;
            throw std::logic_error("q_c: missing edge after contraction");
        };

        std::map<int, int> vid; // contracted class -> intrinsic vertex
        for (int j = 0; j < m; ++j) {
            int cls = cg.vertex_class[blk.sides[j]]; // side s has tail vertex s
            if (!vid.emplace(cls, j).second)
                throw std::logic_error("q_c: face corners not distinct");
        }
        std::vector<int> parent(degf, -1);
        std::vector<Scalar> a(degf), b(m);
        std::vector<int> chord_orig(degf, 0), side_orig(m, 0);
        for (int t = 0; t < m; ++t) {
            const auto& e = find_edge(false, blk.sides[t]);
            if (vid.at(e.tail) != t || vid.at(e.head) != (t + 1) % m)
                throw std::logic_error("q_c: face boundary mismatch");
            b[t] = e.dec;
            side_orig[t] = blk.sides[t];
        }
        for (int c : blk.chords) {
            const auto& e = find_edge(true, c);
            int tl = vid.at(e.tail), hd = vid.at(e.head);
            if (tl == 0 || parent[tl - 1] != -1)
                throw std::logic_error("q_c: factor chord not oriented toward the face root");
            parent[tl - 1] = hd;
            a[tl - 1] = e.dec;
            chord_orig[tl - 1] = c;
        }

        // Re-anchor glue corners. The contraction above pins every merged
        // corner at its sink (the member without an outgoing contracted
        // chord); the petal reads its corner at the tail vertex of the
        // polygon side leaving it. The two differ by the decoration sum
        // along the contracted chord path between them, and only the
        // tail-vertex convention composes: q_{C'} = prod q_{C'_a} ∘ q_C
        // holds on the nose, which is what coassociativity needs.
        if (m > 1 && d.mode() != ScalarMode::None) {
            auto in_boundary = [&](int v) {
                return std::binary_search(boundary[fi].begin(), boundary[fi].end(), v);
            };
            for (int t = 0; t < m; ++t) {
                Scalar delta = Scalar::zero(d.mode());
                int v = blk.sides[t];
                int guard = 0;
                while (v != 0 && in_boundary(v)) {
                    delta += d.chord_dec(v);
                    v = d.parent(v);
                    if (++guard > n + 1) throw std::logic_error("q_c: anchor walk diverged");
                }
                if (delta.is_zero()) continue;
                b[(t - 1 + m) % m] -= delta; // side entering the corner
                b[t] += delta;               // side leaving the corner
                for (int j = 1; j <= degf; ++j)
                    if (parent[j - 1] == t) a[j - 1] -= delta;
                if (t >= 1) a[t - 1] += delta;
            }
        }
        DissectionDiagram base(parent);
        auto rep = validate(base);
        if (!rep.ok) throw std::logic_error("q_c: invalid factor (" + rep.reason + ")");
        out.factors.push_back({DecoratedDiagram(base, std::move(a), std::move(b)),
                               std::move(chord_orig), std::move(side_orig)});
    }
    return out;
}

// r_C ----------------------------------------------------------------------

FlipReport r_c(const DecoratedDiagram& d, const std::vector<int>& C_in) {
    auto C = normalize_chord_subset(d, C_in);
    int n = d.degree();
    int k = static_cast<int>(C.size());
    std::vector<int> scp = s_c_plus(d.base(), C);

    // Keep only the chords of C, then contract the sides of S_C^+.
    DecoratedGraph g0;
    g0.num_vertices = n + 1;
    for (int c : C) g0.edges.push_back({c, d.parent(c), d.chord_dec(c), true, c});
    for (int j = 0; j <= n; ++j)
        g0.edges.push_back({j, (j + 1) % (n + 1), d.side_dec(j), false, j});
    std::vector<int> idx;
    for (size_t e = 0; e < g0.edges.size(); ++e)
        if (!g0.edges[e].is_chord &&
            std::binary_search(scp.begin(), scp.end(), g0.edges[e].label))
            idx.push_back(static_cast<int>(e));
    ContractedGraph cg = contract_edges(g0, idx);

    std::vector<int> rs{0};
    for (int s : complement_in(n, scp)) rs.push_back(s);
    if (static_cast<int>(rs.size()) != k + 1)
        throw std::logic_error("r_c: side count mismatch");

    std::map<int, int> vid;
    for (int j = 0; j <= k; ++j) {
        int cls = cg.vertex_class[rs[j]];
        if (!vid.emplace(cls, j).second) throw std::logic_error("r_c: corners not distinct");
    }

    std::vector<Scalar> b(k + 1);
    std::vector<int> side_orig(k + 1, 0);
    for (int t = 0; t <= k; ++t) {
        bool found = false;
        for (const auto& e : cg.graph.edges)
            if (!e.is_chord && e.label == rs[t]) {
                if (vid.at(e.tail) != t || vid.at(e.head) != (t + 1) % (k + 1))
                    throw std::logic_error("r_c: side boundary mismatch");
                b[t] = e.dec;
                side_orig[t] = rs[t];
                found = true;
            }
        if (!found) throw std::logic_error("r_c: missing side after contraction");
    }

    // Re-orient the chords toward the new root; flipped chords are K_C(D).
    std::vector<std::vector<std::pair<int, int>>> adj(k + 1); // (neighbor, edge pos in cg)
    std::vector<const DecoratedGraph::Edge*> chord_edges;
    for (const auto& e : cg.graph.edges)
        if (e.is_chord) {
            int u = vid.at(e.tail), v = vid.at(e.head);
            int pos = static_cast<int>(chord_edges.size());
            chord_edges.push_back(&e);
            adj[u].push_back({v, pos});
            adj[v].push_back({u, pos});
        }
    if (static_cast<int>(chord_edges.size()) != k)
        throw std::logic_error("r_c: chord count mismatch");

    std::vector<int> bfs_parent(k + 1, -2);
    std::vector<int> order{0};
    bfs_parent[0] = -1;
    for (size_t h = 0; h < order.size(); ++h) {
        int v = order[h];
        for (auto [w, pos] : adj[v])
            if (bfs_parent[w] == -2) {
                bfs_parent[w] = v;
                order.push_back(w);
            }
    }
    if (static_cast<int>(order.size()) != k + 1)
        throw std::logic_error("r_c: contracted chords do not span (Lemma lemSTacyclic violated)");

    std::vector<int> parent(k, 0);
    std::vector<Scalar> a(k);
    std::vector<int> chord_orig(k, 0);
    std::vector<int> flipped;
    for (const auto* e : chord_edges) {
        int u = vid.at(e->tail), v = vid.at(e->head);
        int child, par;
        if (bfs_parent[u] == v) { child = u; par = v; }
        else if (bfs_parent[v] == u) { child = v; par = u; }
        else throw std::logic_error("r_c: chord endpoints not tree-adjacent");
        bool flip = (child != u); // the edge must leave the child
        if (child == 0) throw std::logic_error("r_c: chord leaving the root");
        parent[child - 1] = par;
        a[child - 1] = flip ? -e->dec : e->dec;
        chord_orig[child - 1] = e->label;
        if (flip) flipped.push_back(e->label);
    }
    std::sort(flipped.begin(), flipped.end());

    DissectionDiagram base(parent);
    auto rep = validate(base);
    if (!rep.ok) throw std::logic_error("r_c: invalid result (" + rep.reason + ")");

    FlipReport out;
    out.r = {DecoratedDiagram(base, std::move(a), std::move(b)), std::move(chord_orig),
             std::move(side_orig)};
    out.flipped = std::move(flipped);
    return out;
}

// K_C(D) three ways --------------------------------------------------------

std::vector<int> k_c_direct(const DissectionDiagram& d, const std::vector<int>& C_in) {
    std::vector<int> C(C_in);
    std::sort(C.begin(), C.end());
    int n = d.degree();
    std::vector<int> scp = s_c_plus(d, C);
    std::sort(scp.rbegin(), scp.rend()); // contract in decreasing order

    std::vector<int> uf(n + 1);
    for (int i = 0; i <= n; ++i) uf[i] = i;
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    std::map<int, int> flips; // chord -> flip count
    auto cur_tail = [&](int c) { return (flips[c] % 2 == 0) ? c : d.parent(c); };
    auto cur_head = [&](int c) { return (flips[c] % 2 == 0) ? d.parent(c) : c; };

    for (int e : scp) {
        int u = find(e), v = find((e + 1) % (n + 1));
        // Walk the directed chord path starting at the contracted side's tail.
        std::vector<int> path;
        int X = u;
        for (;;) {
            int next = 0;
            bool found = false;
            for (int c : C)
                if (find(cur_tail(c)) == X) {
                    if (found) throw std::logic_error("k_c_direct: out-degree > 1");
                    next = c;
                    found = true;
                }
            if (!found) break;
            path.push_back(next);
            X = find(cur_head(next));
        }
        for (int c : path) flips[c]++;
        uf[u] = v;
    }
    std::vector<int> out;
    for (auto [c, f] : flips)
        if (f % 2 == 1) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> k_c_k123(const DissectionDiagram& d, const std::vector<int>& C_in) {
    std::vector<int> C(C_in);
    std::sort(C.begin(), C.end());
    auto in_C = [&](int c) { return std::binary_search(C.begin(), C.end(), c); };
    std::vector<int> out;
    for (int c : C) {
        // The chord path in C starting at c.
        std::vector<int> verts{c};
        int cur = c;
        while (cur != 0 && in_C(cur)) {
            cur = d.parent(cur);
            verts.push_back(cur);
        }
        bool k1 = (verts.back() != 0);
        bool k2 = true;
        for (size_t i = 1; i < verts.size(); ++i)
            if (!(verts[i - 1] > verts[i])) { k2 = false; break; }
        bool k3 = true;
        for (size_t i = 1; i < verts.size() && k3; ++i)
            for (int j : C)
                if (d.parent(j) == verts[i] && j > c) { k3 = false; break; }
        if (k1 && k2 && k3) out.push_back(c);
    }
    return out;
}

std::vector<int> k_c_path(const DissectionDiagram& d, const std::vector<int>& C_in) {
    std::vector<int> C(C_in);
    std::sort(C.begin(), C.end());
    std::vector<int> scp = s_c_plus(d, C);
    std::vector<int> out;
    for (int c : C) {
        // Vertices with a C-chord path into c's start vertex (c itself allowed).
        std::set<int> anc{c};
        std::vector<int> stack{c};
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            for (int j : C)
                if (d.parent(j) == w && !anc.count(j)) {
                    anc.insert(j);
                    stack.push_back(j);
                }
        }
        bool hit = false;
        for (int v : anc)
            if (std::binary_search(scp.begin(), scp.end(), v)) { hit = true; break; }
        if (hit) out.push_back(c);
    }
    return out;
}

// σ_C -----------------------------------------------------------------------

std::vector<int> sigma_c(const DecoratedDiagram& d, const std::vector<int>& C_in) {
    auto C = normalize_chord_subset(d, C_in);
    int n = d.degree();
    std::vector<int> perm(n, 0);
    for (auto [c, s] : q_c(d, C).nu()) perm[c - 1] = s;
    for (auto [c, s] : r_c(d, C).eta()) perm[c - 1] = s;
    std::vector<int> seen(n + 1, 0);
    for (int v : perm) {
        if (v < 1 || v > n || seen[v])
            throw std::logic_error("sigma_c: not a permutation");
        seen[v] = 1;
    }
    return perm;
}

int sgn_permutation(const std::vector<int>& perm) {
    long inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

// Coproduct ------------------------------------------------------------------

std::vector<CoproductTerm> coproduct_terms(const DecoratedDiagram& d) {
    int n = d.degree();
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    std::vector<CoproductTerm> out;
    for (const auto& C : subsets_of(all)) {
        QResult q = q_c(d, C);
        FlipReport r = r_c(d, C);
        out.push_back({C, r.k(), q.monomial(), Monomial::single(r.r.diagram)});
    }
    return out;
}

namespace {

template <class C, class XPow>
LinearCombination<MonomialPair, C> coproduct_impl(const LinearCombination<Monomial, C>& e,
                                                  XPow xpow) {
    LinearCombination<MonomialPair, C> out;
    for (const auto& [mono, coeff] : e.terms()) {
        // Δ is an algebra morphism: expand factorwise.
        std::vector<std::pair<MonomialPair, C>> acc{{{Monomial::unit(), Monomial::unit()}, coeff}};
        for (const auto& fac : mono.factors()) {
            auto terms = coproduct_terms(fac);
            std::vector<std::pair<MonomialPair, C>> next;
            for (const auto& [pr, c] : acc)
                for (const auto& t : terms)
                    next.push_back({{pr.first * t.left, pr.second * t.right}, c * xpow(t.k)});
            acc = std::move(next);
        }
        for (auto& [pr, c] : acc) out.add(pr, c);
    }
    return out;
}

} // namespace

TensorElement coproduct(const Rational& x, const AlgebraElement& e) {
    return coproduct_impl<Rational>(e, [&](int k) { return rat_pow(x, k); });
}

TensorElementX coproduct_formal(const AlgebraElementX& e) {
    return coproduct_impl<XPoly>(e, [](int k) { return XPoly::x_pow(k); });
}

TensorElement coproduct_component(const Rational& x, const DecoratedDiagram& d, int k) {
    TensorElement out;
    for (const auto& t : coproduct_terms(d))
        if (t.right.degree() == k)
            out.add({t.left, t.right}, rat_pow(x, t.k));
    return out;
}

namespace {

template <class C, class XPow>
Tensor3<C> coassoc_side(const LinearCombination<MonomialPair, C>& two, XPow xpow, bool left) {
    Tensor3<C> out;
    for (const auto& [pr, c] : two.terms()) {
        LinearCombination<Monomial, C> part;
        part.add(left ? pr.first : pr.second, c);
        auto exp = coproduct_impl<C>(part, xpow);
        for (const auto& [qq, cc] : exp.terms()) {
            if (left)
                out.add({qq.first, qq.second, pr.second}, cc);
            else
                out.add({pr.first, qq.first, qq.second}, cc);
        }
    }
    return out;
}

} // namespace

Tensor3<Rational> coassoc_left(const Rational& x, const AlgebraElement& e) {
    auto xpow = [&](int k) { return rat_pow(x, k); };
    return coassoc_side<Rational>(coproduct_impl<Rational>(e, xpow), xpow, true);
}

Tensor3<Rational> coassoc_right(const Rational& x, const AlgebraElement& e) {
    auto xpow = [&](int k) { return rat_pow(x, k); };
    return coassoc_side<Rational>(coproduct_impl<Rational>(e, xpow), xpow, false);
}

Tensor3<XPoly> coassoc_left_formal(const AlgebraElementX& e) {
    auto xpow = [](int k) { return XPoly::x_pow(k); };
    return coassoc_side<XPoly>(coproduct_impl<XPoly>(e, xpow), xpow, true);
}

Tensor3<XPoly> coassoc_right_formal(const AlgebraElementX& e) {
    auto xpow = [](int k) { return XPoly::x_pow(k); };
    return coassoc_side<XPoly>(coproduct_impl<XPoly>(e, xpow), xpow, false);
}

// Antipode --------------------------------------------------------------------

namespace {

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add(ma * mb, ca * cb);
    return out;
}

AlgebraElement antipode_diagram(const DecoratedDiagram& d, const Rational& x,
                                std::map<DecoratedDiagram, AlgebraElement>& memo);

AlgebraElement antipode_monomial(const Monomial& m, const Rational& x,
                                 std::map<DecoratedDiagram, AlgebraElement>& memo) {
    AlgebraElement out;
    out.add(Monomial::unit(), Rational(1));
    for (const auto& f : m.factors()) out = mul(out, antipode_diagram(f, x, memo));
    return out;
}

AlgebraElement antipode_diagram(const DecoratedDiagram& d, const Rational& x,
                                std::map<DecoratedDiagram, AlgebraElement>& memo) {
    if (d.degree() == 0) {
        AlgebraElement u;
        u.add(Monomial::unit(), Rational(1));
        return u;
    }
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    // Graded-connected recursion: S(D) = -D - sum over the reduced coproduct.
    AlgebraElement res;
    res.add(Monomial::single(d), Rational(-1));
    int n = d.degree();
    for (const auto& t : coproduct_terms(d)) {
        int csz = static_cast<int>(t.C.size());
        if (csz == 0 || csz == n) continue;
        AlgebraElement sq = antipode_monomial(t.left, x, memo);
        AlgebraElement rr;
        rr.add(t.right, rat_pow(x, t.k));
        AlgebraElement prod = mul(sq, rr);
        res = res - prod;
    }
    memo.emplace(d, res);
    return res;
}

} // namespace

AlgebraElement antipode(const AlgebraElement& e, const Rational& x) {
    std::map<DecoratedDiagram, AlgebraElement> memo;
    AlgebraElement out;
    for (const auto& [m, c] : e.terms()) {
        AlgebraElement s = antipode_monomial(m, x, memo);
        out = out + s.scaled(c);
    }
    return out;
}

AlgebraElement convolution_s_id(const DecoratedDiagram& d, const Rational& x) {
    std::map<DecoratedDiagram, AlgebraElement> memo;
    AlgebraElement out;
    for (const auto& t : coproduct_terms(d)) {
        AlgebraElement sq = antipode_monomial(t.left, x, memo);
        AlgebraElement rr;
        rr.add(t.right, rat_pow(x, t.k));
        out = out + mul(sq, rr);
    }
    return out;
}

// Closed-formula coproducts ------------------------------------------------

namespace {

SymMonomial sym_monomial(std::vector<ItIntSymbol> v) {
    v.erase(std::remove_if(v.begin(), v.end(),
                           [](const ItIntSymbol& s) { return s.word.empty(); }),
            v.end());
    std::sort(v.begin(), v.end());
    return v;
}

JMonomial j_monomial(std::vector<JSymbol> v) {
    v.erase(std::remove_if(v.begin(), v.end(), [](const JSymbol& s) { return s.word.empty(); }),
            v.end());
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

SymTensor goncharov_coproduct(const ItIntSymbol& s) {
    if (!s.is_generic())
        throw std::invalid_argument("goncharov_coproduct: non-generic symbol");
    int n = s.weight();
    auto e = s.entries(); // e[0..n+1]
    std::vector<int> inner;
    for (int i = 1; i <= n; ++i) inner.push_back(i);
    SymTensor out;
    for (const auto& I : subsets_of(inner)) {
        std::vector<int> cut{0};
        cut.insert(cut.end(), I.begin(), I.end());
        cut.push_back(n + 1);
        std::vector<ItIntSymbol> fac;
        for (size_t t = 0; t + 1 < cut.size(); ++t) {
            ItIntSymbol f;
            f.a0 = e[cut[t]];
            for (int j = cut[t] + 1; j < cut[t + 1]; ++j) f.word.push_back(e[j]);
            f.a_end = e[cut[t + 1]];
            fac.push_back(std::move(f));
        }
        ItIntSymbol right;
        right.a0 = e[0];
        for (int i : I) right.word.push_back(e[i]);
        right.a_end = e[n + 1];
        out.add({sym_monomial(std::move(fac)), sym_monomial({right})}, Rational(1));
    }
    return out;
}

JTensor j_coproduct(const Scalar& b, const std::vector<Scalar>& a) {
    int n = static_cast<int>(a.size());
    // Genericity: a_i != 0 for all i, and a_I != b for every subset I.
    for (const auto& ai : a)
        if (ai.is_zero()) throw std::invalid_argument("j_coproduct: a_i = 0");
    std::vector<int> inner;
    for (int i = 1; i <= n; ++i) inner.push_back(i);
    auto all_subsets = subsets_of(inner);
    for (const auto& I : all_subsets) {
        Scalar aI = Scalar::zero(b.mode());
        for (int i : I) aI += a[i - 1];
        if ((aI - b).is_zero()) throw std::invalid_argument("j_coproduct: a_I = b");
    }
    JTensor out;
    for (const auto& I : all_subsets) {
        Scalar aI = Scalar::zero(b.mode());
        for (int i : I) aI += a[i - 1];
        JSymbol left, right;
        for (int i = 1; i <= n; ++i) {
            if (std::binary_search(I.begin(), I.end(), i))
                right.word.push_back(a[i - 1]);
            else
                left.word.push_back(a[i - 1]);
        }
        left.b = b - aI;
        right.b = b;
        out.add({j_monomial({left}), j_monomial({right})}, Rational(1));
    }
    return out;
}

// R1 normalizations ----------------------------------------------------------

ItIntSymbol corolla_to_symbol(const DecoratedDiagram& d) {
    if (!d.base().is_corolla())
        throw std::invalid_argument("corolla_to_symbol: not a corolla");
    int n = d.degree();
    ItIntSymbol s;
    s.a0 = -d.side_dec(0);
    Scalar acc = Scalar::zero(d.mode());
    for (int i = 1; i <= n; ++i) {
        s.word.push_back(d.chord_dec(i) + acc);
        acc += d.side_dec(i);
    }
    s.a_end = acc; // b_1 + ... + b_n
    return s;
}

ItIntSymbol translate_symbol_to_zero(const ItIntSymbol& s) {
    ItIntSymbol t;
    t.a0 = s.a0 - s.a0;
    for (const auto& w : s.word) t.word.push_back(w - s.a0);
    t.a_end = s.a_end - s.a0;
    return t;
}

JSymbol path_tree_to_jsymbol(const DecoratedDiagram& d) {
    if (!d.base().is_path_tree())
        throw std::invalid_argument("path_tree_to_jsymbol: not a path tree");
    int n = d.degree();
    JSymbol s;
    Scalar total = Scalar::zero(d.mode());
    for (int j = 0; j <= n; ++j) total += d.side_dec(j);
    s.b = -total;
    for (int i = 1; i <= n; ++i) s.word.push_back(d.chord_dec(i) - d.side_dec(i));
    return s;
}

// Pretty printing --------------------------------------------------------------

std::string pretty(const DecoratedDiagram& d) {
    std::ostringstream os;
    int n = d.degree();
    if (n == 0) { return "1"; }
    if (d.base().is_corolla()) os << "X_" << n;
    else if (d.base().is_path_tree()) os << "Y_" << n;
    else {
        os << "D(";
        for (int i = 1; i <= n; ++i) os << (i > 1 ? "," : "") << d.parent(i);
        os << ")";
    }
    if (d.mode() != ScalarMode::None) {
        os << "{a:";
        for (int i = 1; i <= n; ++i) os << (i > 1 ? "," : "") << d.chord_dec(i).str();
        os << "; b:";
        for (int j = 0; j <= n; ++j) os << (j > 0 ? "," : "") << d.side_dec(j).str();
        os << "}";
    }
    return os.str();
}

std::string pretty(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string s;
    for (const auto& f : m.factors()) {
        if (!s.empty()) s += "·";
        s += pretty(f);
    }
    return s;
}

std::string pretty(const AlgebraElement& e) {
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : e.terms()) {
        if (!s.empty()) s += " + ";
        if (c != 1) s += to_string(c) + "·";
        s += pretty(m);
    }
    return s;
}

namespace {

template <class C>
std::string pretty_tensor(const LinearCombination<MonomialPair, C>& e,
                          std::string (*cstr)(const C&)) {
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto& [pr, c] : e.terms()) {
        if (!s.empty()) s += " + ";
        std::string cs = cstr(c);
        if (cs != "1") s += "(" + cs + ")·";
        s += pretty(pr.first) + "⊗" + pretty(pr.second);
    }
    return s;
}

} // namespace

std::string pretty(const TensorElement& e) {
    return pretty_tensor<Rational>(e, [](const Rational& c) { return to_string(c); });
}

std::string pretty(const TensorElementX& e) {
    return pretty_tensor<XPoly>(e, [](const XPoly& c) { return c.str(); });
}

} // namespace dissect
