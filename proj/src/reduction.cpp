#include "dissect/reduction.hpp"

#include "dissect/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace dissect {

PolygonGraph to_polygon(const DecoratedDiagram& d) {
    PolygonGraph g;
    g.vertices = d.degree() + 1;
    for (int i = 1; i <= d.degree(); ++i) g.chords.push_back({i, d.parent(i), d.chord_dec(i)});
    g.sides = d.side_decs();
    return g;
}

Canonicalized canonicalize(const PolygonGraph& g) {
    int V = g.vertices;
    int n = V - 1;
    if (static_cast<int>(g.chords.size()) != n)
        throw std::invalid_argument("canonicalize: not a spanning chord set");

    std::vector<std::vector<std::pair<int, int>>> adj(V);
    for (int p = 0; p < n; ++p) {
        adj[g.chords[p].tail].push_back({g.chords[p].head, p});
        adj[g.chords[p].head].push_back({g.chords[p].tail, p});
    }
    std::vector<int> par(V, -2);
    par[0] = -1;
    std::vector<int> order{0};
    for (size_t h = 0; h < order.size(); ++h)
        for (auto [w, p] : adj[order[h]])
            if (par[w] == -2) {
                par[w] = order[h];
                order.push_back(w);
            }
    if (static_cast<int>(order.size()) != V)
        throw std::invalid_argument("canonicalize: chords do not span");

    std::vector<int> parent(n, 0), labels;
    std::vector<Scalar> a(n);
    for (int p = 0; p < n; ++p) {
        const auto& c = g.chords[p];
        int child, parv;
        if (par[c.tail] == c.head) { child = c.tail; parv = c.head; }
        else if (par[c.head] == c.tail) { child = c.head; parv = c.tail; }
        else throw std::invalid_argument("canonicalize: chord set has a cycle");
        parent[child - 1] = parv;
        a[child - 1] = (child == c.tail) ? c.dec : -c.dec;
        labels.push_back(child);
    }
    DissectionDiagram base(parent);
    auto rep = validate(base);
    if (!rep.ok) throw std::invalid_argument("canonicalize: invalid diagram (" + rep.reason + ")");

    std::vector<int> positions;
    for (int p = 1; p <= n; ++p) positions.push_back(p);
    Canonicalized out;
    out.diagram = DecoratedDiagram(base, std::move(a), g.sides);
    out.sign = sgn_bijection(positions, labels);
    return out;
}

PolygonGraph contract_side(const PolygonGraph& g, int s) {
    int V = g.vertices;
    if (s < 0 || s >= V) throw std::invalid_argument("contract_side: bad side");
    int u = s, w = (s + 1) % V;
    Scalar beta = g.sides[s];

    PolygonGraph out;
    out.vertices = V - 1;
    auto relabel = [&](int v) {
        if (v == u) v = w;
        return (v < u) ? v : v - 1; // u removed; when u==0 the merged class is the root
    };
    // u==0 merges the root into vertex 1: relabel(0)=relabel(1)=0.
    for (const auto& c : g.chords) {
        Scalar dec = c.dec;
        if (c.head == u) dec = dec + beta;
        if (c.tail == u) dec = dec - beta;
        out.chords.push_back({relabel(c.tail), relabel(c.head), dec});
    }
    for (int j = 0; j < V; ++j) {
        if (j == s) continue;
        Scalar dec = g.sides[j];
        if ((j + 1) % V == u) dec = dec + beta;
        if (j == u) dec = dec - beta;
        out.sides.push_back(dec);
    }
    return out;
}

DecoratedDiagram translate(const DecoratedDiagram& d, int i, const Scalar& lambda) {
    int n = d.degree();
    if (i < 1 || i > n) throw std::invalid_argument("translate: bad vertex");
    if (lambda.mode() != d.mode())
        throw std::invalid_argument("translate: decoration mode mismatch");
    std::vector<Scalar> a(d.chord_decs()), b(d.side_decs());
    a[i - 1] = a[i - 1] - lambda; // the chord leaving i
    for (int j = 1; j <= n; ++j)
        if (d.parent(j) == i) a[j - 1] = a[j - 1] + lambda;
    b[i - 1] = b[i - 1] + lambda; // side into i
    b[i] = b[i] - lambda;         // side leaving i
    return DecoratedDiagram(d.base(), std::move(a), std::move(b));
}

std::pair<DecoratedDiagram, int> rotate(const DecoratedDiagram& d) {
    int n = d.degree();
    if (n == 0) return {d, 1};
    auto relabel = [&](int v) { return v == 0 ? n : v - 1; };
    PolygonGraph g;
    g.vertices = n + 1;
    for (int i = 1; i <= n; ++i)
        g.chords.push_back({relabel(i), relabel(d.parent(i)), d.chord_dec(i)});
    g.sides.resize(n + 1);
    for (int j = 0; j <= n; ++j) g.sides[j == 0 ? n : j - 1] = d.side_dec(j);
    Canonicalized c = canonicalize(g);
    int sign = ((n % 2 == 0) ? 1 : -1) * c.sign;
    return {c.diagram, sign};
}

std::pair<StokesBoundary, StokesBoundary> stokes_boundaries(const PolygonGraph& w) {
    int V = w.vertices;
    if (static_cast<int>(w.chords.size()) != V - 2)
        throw std::invalid_argument("stokes_boundaries: need V-2 chords");
    std::vector<int> uf(V);
    for (int i = 0; i < V; ++i) uf[i] = i;
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (const auto& c : w.chords) {
        int a = find(c.tail), b = find(c.head);
        if (a == b) throw std::invalid_argument("stokes_boundaries: chord cycle");
        uf[a] = b;
    }
    std::vector<int> transitions;
    for (int s = 0; s < V; ++s)
        if (find(s) != find((s + 1) % V)) transitions.push_back(s);
    if (transitions.size() != 2)
        throw std::logic_error("stokes_boundaries: expected exactly two boundary sides");

    auto make = [&](int s) {
        Canonicalized c = canonicalize(contract_side(w, s));
        return StokesBoundary{s, c.sign, c.diagram};
    };
    return {make(transitions[0]), make(transitions[1])};
}

namespace {

// The unique cycle of the chord multigraph, as chord positions with
// traversal directions (+1 along the chord).
struct ChordCycle {
    std::vector<int> pos;
    std::vector<int> dir;
};

ChordCycle find_chord_cycle(const PolygonGraph& w) {
    int V = w.vertices;
    std::vector<std::vector<std::pair<int, int>>> adj(V);
    for (size_t p = 0; p < w.chords.size(); ++p) {
        adj[w.chords[p].tail].push_back({w.chords[p].head, static_cast<int>(p)});
        adj[w.chords[p].head].push_back({w.chords[p].tail, static_cast<int>(p)});
    }
    // DFS for a single cycle.
    std::vector<int> par_edge(V, -1), par(V, -2), stack;
    for (int root = 0; root < V; ++root) {
        if (par[root] != -2) continue;
        par[root] = -1;
        stack.push_back(root);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [u, p] : adj[v]) {
                if (p == par_edge[v]) continue;
                if (par[u] != -2) {
                    // Found the cycle: walk both endpoints up to their lca.
                    std::vector<int> pv, pu;
                    std::map<int, int> depth;
                    // Build ancestor chains.
                    std::vector<int> chain_v, chain_u;
                    for (int x = v; x != -1; x = par[x] >= 0 ? par[x] : -1) {
                        chain_v.push_back(x);
                        if (par[x] < 0) break;
                    }
                    for (int x = u; x != -1; x = par[x] >= 0 ? par[x] : -1) {
                        chain_u.push_back(x);
                        if (par[x] < 0) break;
                    }
                    std::set<int> inv(chain_v.begin(), chain_v.end());
                    int lca = -1;
                    for (int x : chain_u)
                        if (inv.count(x)) { lca = x; break; }
                    ChordCycle cyc;
                    // v -> lca; traversal x -> par[x] agrees with a chord
                    // pointing x -> par[x].
                    for (int x = v; x != lca; x = par[x]) {
                        int e = par_edge[x];
                        cyc.pos.push_back(e);
                        cyc.dir.push_back((w.chords[e].tail == x) ? 1 : -1);
                    }
                    // lca -> u (reverse of u -> lca)
                    std::vector<int> up_pos, up_dir;
                    for (int x = u; x != lca; x = par[x]) {
                        int e = par_edge[x];
                        up_pos.push_back(e);
                        up_dir.push_back((w.chords[e].tail == par[x]) ? 1 : -1);
                    }
                    for (size_t i = up_pos.size(); i-- > 0;) {
                        cyc.pos.push_back(up_pos[i]);
                        cyc.dir.push_back(up_dir[i]);
                    }
                    // close u -> v
                    cyc.pos.push_back(p);
                    cyc.dir.push_back((w.chords[p].tail == u) ? 1 : -1);
                    return cyc;
                }
                par[u] = v;
                par_edge[u] = p;
                stack.push_back(u);
            }
        }
    }
    throw std::invalid_argument("orlik_solomon: no chord cycle");
}

DecoratedGraph total_graph(const PolygonGraph& w) {
    DecoratedGraph g;
    g.num_vertices = w.vertices;
    for (size_t p = 0; p < w.chords.size(); ++p)
        g.edges.push_back({w.chords[p].tail, w.chords[p].head, w.chords[p].dec, true,
                           static_cast<int>(p)});
    for (int j = 0; j < w.vertices; ++j)
        g.edges.push_back({j, (j + 1) % w.vertices, w.sides[j], false, j});
    return g;
}

} // namespace

std::vector<OSTerm> orlik_solomon_family(const PolygonGraph& w) {
    int V = w.vertices;
    if (static_cast<int>(w.chords.size()) != V)
        throw std::invalid_argument("orlik_solomon: need Betti number 1 (V chords)");
    ChordCycle cyc = find_chord_cycle(w);

    // Precondition: the chord cycle is the only zero-total simple cycle.
    DecoratedGraph tg = total_graph(w);
    std::set<int> cyc_edges(cyc.pos.begin(), cyc.pos.end());
    bool saw_chord_cycle = false;
    for (const auto& sc : simple_cycles(tg)) {
        Scalar t = total_decoration(tg, sc);
        std::set<int> edges;
        bool all_chords = true;
        for (int e : sc.edges) {
            if (!tg.edges[e].is_chord) all_chords = false;
            if (tg.edges[e].is_chord) edges.insert(tg.edges[e].label);
        }
        bool is_the_cycle = all_chords && edges == cyc_edges;
        if (is_the_cycle) {
            saw_chord_cycle = true;
            if (!t.is_zero())
                throw std::invalid_argument("orlik_solomon: chord cycle total is nonzero");
        } else if (t.is_zero()) {
            throw std::invalid_argument(
                "orlik_solomon: another simple cycle has zero total decoration");
        }
    }
    if (!saw_chord_cycle) throw std::logic_error("orlik_solomon: cycle not found in total graph");

    std::vector<int> cyc_sorted(cyc.pos.begin(), cyc.pos.end());
    std::sort(cyc_sorted.begin(), cyc_sorted.end());
    std::vector<int> cpos1, rest1; // 1-based positions for the sign conventions
    for (int p : cyc_sorted) cpos1.push_back(p + 1);
    for (int p = 0; p < V; ++p)
        if (!cyc_edges.count(p)) rest1.push_back(p + 1);

    std::vector<OSTerm> out;
    for (int p : cyc_sorted) {
        PolygonGraph sub;
        sub.vertices = V;
        sub.sides = w.sides;
        for (int q = 0; q < V; ++q)
            if (q != p) sub.chords.push_back(w.chords[q]);
        Canonicalized c = canonicalize(sub);
        std::vector<int> cminus;
        for (int q : cpos1)
            if (q != p + 1) cminus.push_back(q);
        int eps = sgn_shuffle({p + 1}, cminus) * sgn_shuffle(cminus, rest1) * c.sign;
        out.push_back({p, eps, c.diagram});
    }
    return out;
}

bool orlik_solomon_relation_check(const PolygonGraph& w) {
    int V = w.vertices;
    int nvars = V - 1;
    ChordCycle cyc = find_chord_cycle(w);

    auto phi = [&](int p) {
        // t_tail - t_head - dec as (coeff vector over t_1..t_{nvars}, const)
        std::vector<Rational> co(nvars, Rational(0));
        const auto& c = w.chords[p];
        if (c.tail != 0) co[c.tail - 1] += 1;
        if (c.head != 0) co[c.head - 1] -= 1;
        return std::make_pair(co, -c.dec);
    };

    // (a) the signed sum of the affine forms around the cycle vanishes.
    {
        std::vector<Rational> co(nvars, Rational(0));
        Scalar cst = Scalar::zero(w.chords[0].dec.mode());
        for (size_t i = 0; i < cyc.pos.size(); ++i) {
            auto [c, k] = phi(cyc.pos[i]);
            for (int v = 0; v < nvars; ++v) co[v] += Rational(cyc.dir[i]) * c[v];
            cst += (cyc.dir[i] > 0) ? k : -k;
        }
        for (const auto& x : co)
            if (x != 0) return false;
        if (!cst.is_zero()) return false;
    }

    // (b) Σ_c sgn({c},C\{c}) φ_c Λ_{c'≠c} dφ_{c'} = 0, expanded over dt_S.
    std::vector<int> cyc_sorted(cyc.pos.begin(), cyc.pos.end());
    std::sort(cyc_sorted.begin(), cyc_sorted.end());
    int r = static_cast<int>(cyc_sorted.size()) - 1; // wedge degree

    // (|C|-1)-subsets of variables.
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    std::function<void(int)> go = [&](int from) {
        if (static_cast<int>(cur.size()) == r) {
            subsets.push_back(cur);
            return;
        }
        for (int v = from; v <= nvars - (r - static_cast<int>(cur.size())); ++v) {
            cur.push_back(v);
            go(v + 1);
            cur.pop_back();
        }
    };
    go(0);

    auto det = [&](QMat m) {
        int sz = static_cast<int>(m.size());
        Rational d(1);
        for (int c = 0; c < sz; ++c) {
            int piv = -1;
            for (int rr = c; rr < sz; ++rr)
                if (m[rr][c] != 0) { piv = rr; break; }
            if (piv < 0) return Rational(0);
            if (piv != c) { std::swap(m[piv], m[c]); d = -d; }
            d *= m[c][c];
            for (int rr = c + 1; rr < sz; ++rr) {
                Rational f = m[rr][c] / m[c][c];
                for (int cc = c; cc < sz; ++cc) m[rr][cc] -= f * m[c][cc];
            }
        }
        return d;
    };

    for (const auto& S : subsets) {
        std::vector<Rational> co(nvars, Rational(0));
        Scalar cst = Scalar::zero(w.chords[0].dec.mode());
        bool touched = false;
        for (int p : cyc_sorted) {
            std::vector<int> rest;
            for (int q : cyc_sorted)
                if (q != p) rest.push_back(q + 1);
            int sg = sgn_shuffle({p + 1}, rest);
            // det of d(φ_{c'}) rows at columns S, c' in increasing order
            QMat m;
            for (int q : cyc_sorted) {
                if (q == p) continue;
                auto [c, k] = phi(q);
                (void)k;
                QVec row;
                for (int v : S) row.push_back(c[v]);
                m.push_back(std::move(row));
            }
            Rational dt = det(std::move(m));
            if (dt == 0) continue;
            auto [c, k] = phi(p);
            for (int v = 0; v < nvars; ++v) co[v] += Rational(sg) * dt * c[v];
            cst += k.scaled(Rational(sg) * dt);
            touched = true;
        }
        if (!touched) continue;
        for (const auto& x : co)
            if (x != 0) return false;
        if (!cst.is_zero()) return false;
    }
    return true;
}

// Reduction ------------------------------------------------------------------

namespace {

bool has_chord_into(const DecoratedDiagram& d, int v) {
    for (int j = 1; j <= d.degree(); ++j)
        if (d.parent(j) == v) return true;
    return false;
}

// Case 2: split vertex k between its root chord and its chord-children.
PolygonGraph open_angle(const DecoratedDiagram& d, int k) {
    int n = d.degree();
    PolygonGraph w;
    w.vertices = n + 2;
    auto relabel = [&](int v) { return (v <= k) ? v : v + 1; };
    for (int i = 1; i <= n; ++i) {
        int tail = relabel(i);
        int head = d.parent(i) == k && i != k ? k + 1 : relabel(d.parent(i));
        // chords into k move to the split vertex k+1; k keeps its root chord
        w.chords.push_back({tail, head, d.chord_dec(i)});
    }
    w.sides.resize(n + 2);
    for (int j = 0; j <= n; ++j) w.sides[(j < k) ? j : j + 1] = d.side_dec(j);
    w.sides[k] = Scalar::zero(d.mode());
    return w;
}

struct WorkItem {
    long long coeff;
    DecoratedDiagram d;
    int k;
};

FormalSum reduce_formal(const DecoratedDiagram& d0, const ReduceOptions& opts,
                        std::vector<DecoratedDiagram>* trace) {
    FormalSum sum;
    int n = d0.degree();
    if (n == 0) {
        sum.add(corolla_to_symbol(d0), 1);
        return sum;
    }

    // (R2): rotate until a chord joins vertex 1 to the root.
    DecoratedDiagram d = d0;
    long long coeff = 1;
    {
        int r = -1;
        for (int v = 0; v <= n && r < 0; ++v) {
            for (int i = 1; i <= n; ++i) {
                int a = i, b = d.parent(i);
                if ((a == v && b == (v + 1) % (n + 1)) || (b == v && a == (v + 1) % (n + 1))) {
                    r = v;
                    break;
                }
            }
        }
        if (r < 0) throw std::logic_error("reduce: no short chord"); // cannot happen
        for (int step = 0; step < r; ++step) {
            auto [dn, sg] = rotate(d);
            d = dn;
            coeff *= sg;
        }
    }

    std::vector<WorkItem> stack{{coeff, d, 1}};
    long long guard = 0;
    while (!stack.empty()) {
        if (++guard > 2000000) throw std::logic_error("reduce: step guard exceeded");
        WorkItem it = stack.back();
        stack.pop_back();
        if (opts.collect_trace && trace) trace->push_back(it.d);

        if (it.k >= n) {
            sum.add(corolla_to_symbol(it.d), it.coeff);
            continue;
        }
        int k = it.k;
        if (it.d.parent(k) != 0) throw std::logic_error("reduce: invariant broken");

        if (has_chord_into(it.d, k)) {
            // (R3).
            PolygonGraph w = open_angle(it.d, k);
            auto [b1, b2] = stokes_boundaries(w);
            const StokesBoundary& self = (b1.side == k) ? b1 : b2;
            const StokesBoundary& other = (b1.side == k) ? b2 : b1;
            if (self.side != k || !(self.diagram == it.d))
                throw std::logic_error("reduce: angle opening did not contract back");
            int sg = -self.eps * other.eps * (((self.side + other.side) % 2 == 0) ? 1 : -1);
            stack.push_back({it.coeff * sg, other.diagram, k});
            continue;
        }

        if (it.d.parent(k + 1) == 0) {
            stack.push_back({it.coeff, it.d, k + 1});
            continue;
        }

        // (R4): add a chord from k+1 to the root decorated by the total
        // decoration of the path from k+1.
        PolygonGraph w = to_polygon(it.d);
        Scalar total = Scalar::zero(it.d.mode());
        for (int v = k + 1; v != 0; v = it.d.parent(v)) total += it.d.chord_dec(v);
        w.chords.push_back({k + 1, 0, total});
        auto fam = orlik_solomon_family(w);
        const OSTerm* self = nullptr;
        for (const auto& t : fam)
            if (t.chord_index == n) self = &t;
        if (!self || !(self->diagram == it.d))
            throw std::logic_error("reduce: added chord does not recover the diagram");
        for (const auto& t : fam) {
            if (t.chord_index == n) continue;
            stack.push_back({-it.coeff * self->eps * t.eps, t.diagram, k + 1});
        }
    }
    return sum;
}

} // namespace

FormalSum substitute_sum(const FormalSum& s,
                         const std::vector<std::pair<std::string, Scalar>>& values) {
    FormalSum out;
    for (const auto& [sym, c] : s.terms()) {
        ItIntSymbol t;
        t.a0 = sym.a0.substitute(values);
        for (const auto& wrd : sym.word) t.word.push_back(wrd.substitute(values));
        t.a_end = sym.a_end.substitute(values);
        if (!t.is_generic())
            throw std::domain_error(
                "reduce: an output symbol is non-generic after substitution; reduce "
                "symbolically and substitute externally");
        out.add(t, c);
    }
    return out;
}

FormalSum reduce(const DecoratedDiagram& d, const ReduceOptions& opts,
                 std::vector<DecoratedDiagram>* trace) {
    switch (d.mode()) {
        case ScalarMode::None:
            throw std::invalid_argument("reduce: undecorated diagram");
        case ScalarMode::Formal: {
            if (!is_generic(d)) throw std::invalid_argument("reduce: non-generic diagram");
            return reduce_formal(d, opts, trace);
        }
        case ScalarMode::Rational:
        case ScalarMode::Gaussian:
            if (!is_generic(d)) throw std::invalid_argument("reduce: non-generic diagram");
            break;
        case ScalarMode::Float:
            break; // genericity is an exact predicate; output symbols are checked
    }
    int n = d.degree();
    std::vector<Scalar> a, b;
    std::vector<std::pair<std::string, Scalar>> values;
    for (int i = 1; i <= n; ++i) {
        std::string name = "@a" + std::to_string(i);
        a.push_back(Scalar::symbol(name));
        values.push_back({name, d.chord_dec(i)});
    }
    for (int j = 0; j <= n; ++j) {
        std::string name = "@b" + std::to_string(j);
        b.push_back(Scalar::symbol(name));
        values.push_back({name, d.side_dec(j)});
    }
    DecoratedDiagram twin(d.base(), std::move(a), std::move(b));
    FormalSum sym = reduce_formal(twin, opts, trace);
    return substitute_sum(sym, values);
}

FormalSum reduce(const DecoratedDiagram& d) {
    return reduce(d, ReduceOptions{}, nullptr);
}

} // namespace dissect
