#include "dissect/decorated.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace dissect {

DecoratedDiagram::DecoratedDiagram(DissectionDiagram base)
    : base_(std::move(base)),
      a_(base_.degree(), Scalar::none()),
      b_(base_.degree() + 1, Scalar::none()) {}

DecoratedDiagram::DecoratedDiagram(DissectionDiagram base, std::vector<Scalar> chord_dec,
                                   std::vector<Scalar> side_dec)
    : base_(std::move(base)), a_(std::move(chord_dec)), b_(std::move(side_dec)) {
    int n = base_.degree();
    if (static_cast<int>(a_.size()) != n || static_cast<int>(b_.size()) != n + 1)
        throw std::invalid_argument("DecoratedDiagram: decoration count mismatch");
    ScalarMode m = mode();
    for (const auto& s : a_)
        if (s.mode() != m) throw std::invalid_argument("DecoratedDiagram: mixed modes");
    for (const auto& s : b_)
        if (s.mode() != m) throw std::invalid_argument("DecoratedDiagram: mixed modes");
}

ScalarMode DecoratedDiagram::mode() const {
    if (!b_.empty()) return b_.front().mode();
    return ScalarMode::None;
}

bool DecoratedDiagram::operator==(const DecoratedDiagram& o) const {
    return base_ == o.base_ && a_ == o.a_ && b_ == o.b_;
}

bool DecoratedDiagram::operator<(const DecoratedDiagram& o) const {
    if (base_ != o.base_) return base_ < o.base_;
    if (a_ != o.a_)
        return std::lexicographical_compare(a_.begin(), a_.end(), o.a_.begin(), o.a_.end());
    return std::lexicographical_compare(b_.begin(), b_.end(), o.b_.begin(), o.b_.end());
}

DecoratedGraph gamma(const DecoratedDiagram& d) {
    int n = d.degree();
    DecoratedGraph g;
    g.num_vertices = n + 1;
    for (int i = 1; i <= n; ++i)
        g.edges.push_back({i, d.parent(i), d.chord_dec(i), true, i});
    for (int j = 0; j <= n; ++j)
        g.edges.push_back({j, (j + 1) % (n + 1), d.side_dec(j), false, j});
    return g;
}

DecoratedGraph flip_edge(const DecoratedGraph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= static_cast<int>(g.edges.size()))
        throw std::invalid_argument("flip_edge: no such edge");
    DecoratedGraph out = g;
    auto& e = out.edges[edge_index];
    std::swap(e.tail, e.head);
    e.dec = -e.dec;
    return out;
}

ContractedGraph contract_edges(const DecoratedGraph& g, const std::vector<int>& edge_indices) {
    // Acyclicity of the contracted set (no loops may appear).
    {
        std::vector<int> uf(g.num_vertices);
        for (int i = 0; i < g.num_vertices; ++i) uf[i] = i;
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (int idx : edge_indices) {
            const auto& e = g.edges.at(idx);
            int a = find(e.tail), b = find(e.head);
            if (a == b)
                throw std::invalid_argument("contract_edges: contracted set contains a cycle");
            uf[a] = b;
        }
    }

    DecoratedGraph cur = g;
    std::vector<int> cls(g.num_vertices);
    for (int i = 0; i < g.num_vertices; ++i) cls[i] = i;
    std::set<int> pending(edge_indices.begin(), edge_indices.end());

    for (int idx : edge_indices) {
        const auto e = cur.edges[idx];
        int vm = e.tail, vp = e.head; // merge vm into vp
        if (vm == vp) throw std::logic_error("contract_edges: loop at contraction time");
        for (size_t j = 0; j < cur.edges.size(); ++j) {
            if (static_cast<int>(j) == idx) continue;
            auto& f = cur.edges[j];
            if (f.head == vm) f.dec = f.dec + e.dec;
            if (f.tail == vm) f.dec = f.dec - e.dec;
        }
        for (auto& f : cur.edges) {
            if (f.head == vm) f.head = vp;
            if (f.tail == vm) f.tail = vp;
        }
        for (auto& c : cls)
            if (c == vm) c = vp;
        pending.erase(idx);
    }

    // Compact vertex ids, keeping ascending order of representatives.
    std::vector<int> reps;
    for (int i = 0; i < g.num_vertices; ++i)
        if (std::find(reps.begin(), reps.end(), cls[i]) == reps.end()) reps.push_back(cls[i]);
    std::sort(reps.begin(), reps.end());
    auto newid = [&](int r) {
        return static_cast<int>(std::lower_bound(reps.begin(), reps.end(), r) - reps.begin());
    };

    ContractedGraph out;
    out.graph.num_vertices = static_cast<int>(reps.size());
    std::set<int> contracted(edge_indices.begin(), edge_indices.end());
    for (size_t j = 0; j < cur.edges.size(); ++j) {
        if (contracted.count(static_cast<int>(j))) continue;
        auto f = cur.edges[j];
        f.tail = newid(f.tail);
        f.head = newid(f.head);
        out.graph.edges.push_back(f);
    }
    out.vertex_class.resize(g.num_vertices);
    for (int i = 0; i < g.num_vertices; ++i) out.vertex_class[i] = newid(cls[i]);
    return out;
}

std::vector<SimpleCycle> simple_cycles(const DecoratedGraph& g) {
    std::vector<SimpleCycle> out;
    std::set<std::vector<int>> seen; // sorted edge index sets

    int m = static_cast<int>(g.edges.size());
    // Loops are cycles of length one.
    for (int i = 0; i < m; ++i)
        if (g.edges[i].tail == g.edges[i].head) {
            out.push_back({{i}, {1}});
            seen.insert({i});
        }

    // DFS over undirected edges; canonical start = minimal vertex of the cycle.
    std::vector<std::vector<int>> inc(g.num_vertices);
    for (int i = 0; i < m; ++i) {
        if (g.edges[i].tail == g.edges[i].head) continue;
        inc[g.edges[i].tail].push_back(i);
        inc[g.edges[i].head].push_back(i);
    }

    std::vector<int> path_edges, path_dirs;
    std::vector<char> on_path(g.num_vertices, 0);
    std::vector<char> edge_used(m, 0);

    std::function<void(int, int, int)> dfs = [&](int start, int v, int depth) {
        for (int ei : inc[v]) {
            if (edge_used[ei]) continue;
            const auto& e = g.edges[ei];
            int w = (e.tail == v) ? e.head : e.tail;
            int dir = (e.tail == v) ? 1 : -1;
            if (w == start && depth >= 1) {
                std::vector<int> key = path_edges;
                key.push_back(ei);
                std::sort(key.begin(), key.end());
                if (!seen.count(key)) {
                    seen.insert(key);
                    SimpleCycle c;
                    c.edges = path_edges;
                    c.edges.push_back(ei);
                    c.dirs = path_dirs;
                    c.dirs.push_back(dir);
                    out.push_back(std::move(c));
                }
                continue;
            }
            if (w < start || on_path[w]) continue;
            on_path[w] = 1;
            edge_used[ei] = 1;
            path_edges.push_back(ei);
            path_dirs.push_back(dir);
            dfs(start, w, depth + 1);
            path_edges.pop_back();
            path_dirs.pop_back();
            edge_used[ei] = 0;
            on_path[w] = 0;
        }
    };

    for (int s = 0; s < g.num_vertices; ++s) {
        on_path[s] = 1;
        dfs(s, s, 0);
        on_path[s] = 0;
    }
    return out;
}

Scalar total_decoration(const DecoratedGraph& g, const SimpleCycle& c) {
    Scalar t = Scalar::zero(g.mode());
    for (size_t i = 0; i < c.edges.size(); ++i) {
        const Scalar& d = g.edges[c.edges[i]].dec;
        t += (c.dirs[i] > 0) ? d : -d;
    }
    return t;
}

bool is_generic_graph(const DecoratedGraph& g) {
    if (g.mode() == ScalarMode::Float)
        throw std::invalid_argument("is_generic: float decorations (genericity is exact)");
    for (const auto& c : simple_cycles(g))
        if (total_decoration(g, c).is_zero()) return false;
    return true;
}

bool is_generic(const DecoratedDiagram& d) {
    return is_generic_graph(gamma(d));
}

} // namespace dissect
