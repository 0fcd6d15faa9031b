#include "dissect/diagram.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dissect {

bool DissectionDiagram::is_corolla() const {
    for (int i = 1; i <= degree(); ++i)
        if (parent(i) != 0) return false;
    return true;
}

bool DissectionDiagram::is_path_tree() const {
    int n = degree();
    for (int i = 1; i < n; ++i)
        if (parent(i) != i + 1) return false;
    return n == 0 || parent(n) == 0;
}

bool chords_cross(int a, int b, int c, int d) {
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    if (a == c || a == d || b == c || b == d) return false;
    bool c_in = (a < c && c < b);
    bool d_in = (a < d && d < b);
    return c_in != d_in;
}

ValidationReport validate(const DissectionDiagram& d) {
    int n = d.degree();
    for (int i = 1; i <= n; ++i) {
        int p = d.parent(i);
        if (p < 0 || p > n || p == i) return {false, "target-range"};
    }
    // Orientation toward the root <=> every parent chain reaches 0.
    for (int i = 1; i <= n; ++i) {
        int v = i, steps = 0;
        while (v != 0) {
            v = d.parent(v);
            if (++steps > n) return {false, "cycle"};
        }
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (chords_cross(i, d.parent(i), j, d.parent(j)))
                return {false, "crossing"};
    return {true, ""};
}

Integer count_closed(int n) {
    if (n == 0) return 1;
    Integer b = binomial(3ul * n, n);
    Integer d = b / (2 * n + 1);
    return d;
}

Integer count_recurrence(int n) {
    static std::vector<Integer> memo{Integer(1)};
    while (static_cast<int>(memo.size()) <= n) {
        int m = static_cast<int>(memo.size());
        Integer s = 0;
        for (int i1 = 0; i1 <= m - 1; ++i1)
            for (int i2 = 0; i2 + i1 <= m - 1; ++i2)
                s += memo[i1] * memo[i2] * memo[m - 1 - i1 - i2];
        memo.push_back(s);
    }
    return memo[n];
}

Integer count(int n) {
    Integer a = count_closed(n), b = count_recurrence(n);
    if (a != b)
        throw std::logic_error("count: closed formula and recurrence disagree at n=" +
                               std::to_string(n));
    return a;
}

DissectionDiagram compose_triple(const DissectionDiagram& d1,
                                 const DissectionDiagram& d2,
                                 const DissectionDiagram& d3) {
    int i1 = d1.degree(), i2 = d2.degree(), i3 = d3.degree();
    int n = i1 + i2 + i3 + 1;
    int rho = i1 + 1;
    std::vector<int> parent(n, 0);
    parent[rho - 1] = 0;
    for (int k = 1; k <= i1; ++k) {
        int p = d1.parent(k);
        parent[k - 1] = (p == 0) ? rho : p;
    }
    for (int k = 1; k <= i2; ++k) {
        int p = d2.parent(k);
        parent[rho + k - 1] = (p == 0) ? rho : rho + p;
    }
    for (int k = 1; k <= i3; ++k) {
        int p = d3.parent(k);
        parent[rho + i2 + k - 1] = (p == 0) ? 0 : rho + i2 + p;
    }
    return DissectionDiagram(std::move(parent));
}

DiagramTriple decompose_triple(const DissectionDiagram& d) {
    int n = d.degree();
    if (n == 0) throw std::invalid_argument("decompose_triple: degree 0");
    int rho = 0;
    for (int i = 1; i <= n; ++i)
        if (d.parent(i) == 0) { rho = i; break; }
    // Vertices right of the chord rho->root split into the component of rho
    // (a contiguous run rho+1..m) and the component of the root (m+1..n).
    int m = rho;
    for (int v = rho + 1; v <= n; ++v) {
        int w = v;
        while (w != 0 && w != rho) w = d.parent(w);
        if (w == rho) m = v; else break;
    }
    std::vector<int> p1(rho - 1), p2(m - rho), p3(n - m);
    for (int k = 1; k < rho; ++k) {
        int p = d.parent(k);
        p1[k - 1] = (p == rho) ? 0 : p;
    }
    for (int v = rho + 1; v <= m; ++v) {
        int p = d.parent(v);
        p2[v - rho - 1] = (p == rho) ? 0 : p - rho;
    }
    for (int v = m + 1; v <= n; ++v) {
        int p = d.parent(v);
        p3[v - m - 1] = (p == 0) ? 0 : p - m;
    }
    DiagramTriple t{DissectionDiagram(p1), DissectionDiagram(p2), DissectionDiagram(p3)};
    if (compose_triple(t.d1, t.d2, t.d3) != d)
        throw std::logic_error("decompose_triple: round-trip failed");
    return t;
}

std::vector<DissectionDiagram> enumerate_diagrams(int n, int bound) {
    if (n > bound)
        throw std::out_of_range("enumerate: degree " + std::to_string(n) +
                                " exceeds bound " + std::to_string(bound));
    static std::map<int, std::vector<DissectionDiagram>> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<DissectionDiagram> out;
    if (n == 0) {
        out.push_back(DissectionDiagram());
    } else {
        for (int i1 = 0; i1 <= n - 1; ++i1)
            for (int i2 = 0; i1 + i2 <= n - 1; ++i2) {
                int i3 = n - 1 - i1 - i2;
                for (const auto& a : enumerate_diagrams(i1, bound))
                    for (const auto& b : enumerate_diagrams(i2, bound))
                        for (const auto& c : enumerate_diagrams(i3, bound))
                            out.push_back(compose_triple(a, b, c));
            }
    }
    memo[n] = out;
    return out;
}

namespace {

// Sides covered by the chord {u,v}, u<v, are u..v-1.
std::pair<int, int> chord_interval(const DissectionDiagram& d, int i) {
    int u = i, v = d.parent(i);
    if (u > v) std::swap(u, v);
    return {u, v - 1};
}

} // namespace

FacePartition faces(const DissectionDiagram& d, const std::vector<int>& C) {
    int n = d.degree();
    for (int c : C)
        if (c < 1 || c > n) throw std::invalid_argument("faces: invalid chord index");

    // Noncrossing chords nest: the innermost C-chord covering a side (or
    // containing another chord's interval) identifies its face.
    auto inner_cover = [&](int lo, int hi) -> int {
        int best = 0, best_len = n + 2;
        for (int c : C) {
            auto [a, b] = chord_interval(d, c);
            int len = b - a + 1;
            if (a <= lo && hi <= b && len < best_len) { best = c; best_len = len; }
        }
        return best; // 0 = outer face
    };

    std::map<int, FaceBlock> by_owner; // owner chord (0 = outer face)
    for (int s = 0; s <= n; ++s)
        by_owner[inner_cover(s, s)].sides.push_back(s);
    std::vector<int> cbar;
    for (int i = 1; i <= n; ++i)
        if (std::find(C.begin(), C.end(), i) == C.end()) cbar.push_back(i);
    for (int ch : cbar) {
        auto [a, b] = chord_interval(d, ch);
        by_owner[inner_cover(a, b)].chords.push_back(ch);
    }

    FacePartition fp;
    for (auto& [owner, blk] : by_owner) {
        if (blk.sides.empty())
            throw std::logic_error("faces: face with no polygon side");
        fp.blocks.push_back(blk);
    }
    std::sort(fp.blocks.begin(), fp.blocks.end(),
              [](const FaceBlock& a, const FaceBlock& b) { return a.sides[0] < b.sides[0]; });
    if (static_cast<int>(fp.blocks.size()) != static_cast<int>(C.size()) + 1)
        throw std::logic_error("faces: wrong face count");
    return fp;
}

std::vector<int> s_c_plus(const DissectionDiagram& d, const std::vector<int>& C) {
    std::vector<int> out;
    for (const auto& blk : faces(d, C).blocks)
        out.insert(out.end(), blk.sides.begin() + 1, blk.sides.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool forest_with_sides(const DissectionDiagram& d, const std::vector<int>& C,
                       const std::vector<int>& J) {
    int n = d.degree();
    if (static_cast<int>(C.size() + J.size()) != n)
        throw std::invalid_argument("forest_with_sides: |C|+|J| != degree");
    std::vector<int> uf(n + 1);
    for (int i = 0; i <= n; ++i) uf[i] = i;
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    auto join = [&](int a, int b) {
        a = find(a); b = find(b);
        if (a == b) return false;
        uf[a] = b;
        return true;
    };
    for (int c : C)
        if (!join(c, d.parent(c))) return false;
    for (int s : J)
        if (!join(s, (s + 1) % (n + 1))) return false;
    return true;
}

int sgn_shuffle(const std::vector<int>& I, const std::vector<int>& J) {
    for (int i : I)
        for (int j : J)
            if (i == j) throw std::invalid_argument("sgn: index sets overlap");
    long inv = 0;
    for (int i : I)
        for (int j : J)
            if (i > j) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

int sgn_bijection(const std::vector<int>& dom, const std::vector<int>& img) {
    if (dom.size() != img.size())
        throw std::invalid_argument("sgn_bijection: size mismatch");
    // Permutation sending rank-in-dom to rank-in-img.
    size_t m = dom.size();
    std::vector<int> sd(dom), si(img);
    std::sort(sd.begin(), sd.end());
    std::sort(si.begin(), si.end());
    std::vector<int> perm(m);
    for (size_t i = 0; i < m; ++i) {
        size_t rd = std::lower_bound(sd.begin(), sd.end(), dom[i]) - sd.begin();
        size_t ri = std::lower_bound(si.begin(), si.end(), img[i]) - si.begin();
        perm[rd] = static_cast<int>(ri);
    }
    long inv = 0;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (perm[i] > perm[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

std::vector<std::vector<int>> subsets_of(const std::vector<int>& universe) {
    size_t n = universe.size();
    std::vector<std::vector<int>> out;
    out.reserve(1u << n);
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<int> s;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1ul << i)) s.push_back(universe[i]);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace dissect
