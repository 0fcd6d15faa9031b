#include "dissect/numeric.hpp"

#include "dissect/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dissect {

namespace {

constexpr double kPi = 3.14159265358979323846;

double seg_point_dist(Cx a, Cx b, Cx p) {
    Cx d = b - a;
    double l2 = std::norm(d);
    if (l2 == 0.0) return std::abs(p - a);
    double t = ((p.real() - a.real()) * d.real() + (p.imag() - a.imag()) * d.imag()) / l2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

// Gauss-Legendre nodes and weights on [-1,1] by Newton iteration.
struct GaussLegendre {
    std::vector<double> x, w;
    explicit GaussLegendre(int p) : x(p), w(p) {
        for (int i = 0; i < (p + 1) / 2; ++i) {
            double z = std::cos(kPi * (i + 0.75) / (p + 0.5));
            double pp = 0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < p; ++j) {
                    double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1);
                }
                pp = p * (z * p0 - p1) / (z * z - 1.0);
                double z1 = z;
                z = z1 - p0 / pp;
                if (std::abs(z - z1) < 1e-15) break;
            }
            x[i] = -z;
            x[p - 1 - i] = z;
            w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
            w[p - 1 - i] = w[i];
        }
    }
};

// Q[i][j] = ∫_{-1}^{x_i} ℓ_j(u) du, computed exactly with the same rule.
struct PartialIntegrals {
    std::vector<std::vector<double>> Q;
    explicit PartialIntegrals(const GaussLegendre& gl) {
        int p = static_cast<int>(gl.x.size());
        auto lagrange = [&](int j, double u) {
            double v = 1.0;
            for (int m = 0; m < p; ++m)
                if (m != j) v *= (u - gl.x[m]) / (gl.x[j] - gl.x[m]);
            return v;
        };
        Q.assign(p, std::vector<double>(p, 0.0));
        for (int i = 0; i < p; ++i) {
            double a = -1.0, b = gl.x[i];
            double mid = 0.5 * (a + b), half = 0.5 * (b - a);
            for (int j = 0; j < p; ++j) {
                double s = 0.0;
                for (int q = 0; q < p; ++q) s += gl.w[q] * lagrange(j, mid + half * gl.x[q]);
                Q[i][j] = half * s;
            }
        }
    }
};

struct Grid {
    // Global nodes along the path parameter, with γ and γ' values and
    // per-subinterval half-widths.
    std::vector<double> halfw;     // per subinterval
    std::vector<Cx> gamma, dgamma; // per node (subinterval-major)
    int p = 0;
    int subs = 0;
};

Grid make_grid(const CPath& path, int subdiv_per_segment, const GaussLegendre& gl) {
    Grid g;
    g.p = static_cast<int>(gl.x.size());
    int S = static_cast<int>(path.points.size()) - 1;
    std::vector<double> len(S);
    double total = 0;
    for (int s = 0; s < S; ++s) {
        len[s] = std::abs(path.points[s + 1] - path.points[s]);
        total += len[s];
    }
    if (total == 0.0) total = 1.0;
    double u0 = 0.0;
    for (int s = 0; s < S; ++s) {
        double du = len[s] / total;
        if (du == 0.0) continue;
        Cx der = (path.points[s + 1] - path.points[s]) / du;
        for (int t = 0; t < subdiv_per_segment; ++t) {
            double a = u0 + du * t / subdiv_per_segment;
            double b = u0 + du * (t + 1) / subdiv_per_segment;
            double mid = 0.5 * (a + b), half = 0.5 * (b - a);
            g.halfw.push_back(half);
            for (int i = 0; i < g.p; ++i) {
                double u = mid + half * gl.x[i];
                double local = (u - u0) / du;
                g.gamma.push_back(path.points[s] + local * (path.points[s + 1] - path.points[s]));
                g.dgamma.push_back(der);
            }
        }
        u0 += du;
    }
    g.subs = static_cast<int>(g.halfw.size());
    return g;
}

Cx eval_word_on_grid(const std::vector<Cx>& poles, const Grid& g, const GaussLegendre& gl,
                     const PartialIntegrals& pi) {
    int p = g.p;
    std::vector<Cx> F(g.gamma.size(), Cx{1.0, 0.0});
    Cx last{1.0, 0.0};
    for (const Cx& a : poles) {
        std::vector<Cx> integ(g.gamma.size());
        for (size_t i = 0; i < g.gamma.size(); ++i) {
            Cx den = g.gamma[i] - a;
            if (std::abs(den) < 1e-14)
                throw std::domain_error("eval: quadrature node hits a singularity");
            integ[i] = F[i] * g.dgamma[i] / den;
        }
        std::vector<Cx> next(g.gamma.size());
        Cx acc{0.0, 0.0};
        for (int t = 0; t < g.subs; ++t) {
            for (int i = 0; i < p; ++i) {
                Cx part{0.0, 0.0};
                for (int j = 0; j < p; ++j) part += pi.Q[i][j] * integ[t * p + j];
                next[t * p + i] = acc + g.halfw[t] * part;
            }
            Cx full{0.0, 0.0};
            for (int j = 0; j < p; ++j) full += gl.w[j] * integ[t * p + j];
            acc += g.halfw[t] * full;
        }
        F = std::move(next);
        last = acc;
    }
    if (poles.empty()) return {1.0, 0.0};
    return last;
}

} // namespace

double path_distance(const CPath& p, const std::vector<Cx>& sing) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t s = 0; s + 1 < p.points.size(); ++s)
        for (const Cx& z : sing)
            best = std::min(best, seg_point_dist(p.points[s], p.points[s + 1], z));
    return best;
}

double default_clearance(Cx z0, Cx z1, const std::vector<Cx>& sing) {
    double best = std::numeric_limits<double>::infinity();
    for (const Cx& z : sing) best = std::min(best, seg_point_dist(z0, z1, z));
    if (!std::isfinite(best)) return 1.0;
    return std::max(best / 2.0, 1e-3);
}

CPath build_path(Cx z0, Cx z1, const std::vector<Cx>& sing, double delta) {
    if (delta <= 0) throw std::invalid_argument("build_path: clearance must be positive");
    for (const Cx& z : sing) {
        if (std::abs(z0 - z) < delta || std::abs(z1 - z) < delta)
            throw std::invalid_argument("build_path: endpoint within clearance of a singularity");
    }

    struct Disk {
        Cx c;
        double r;
    };

    for (int attempt = 0; attempt < 6; ++attempt) {
        double radius = 2.0 * delta * std::pow(1.3, attempt);

        std::vector<Disk> disks;
        for (const Cx& z : sing)
            if (seg_point_dist(z0, z1, z) < delta) disks.push_back({z, radius});
        // Merge overlapping detour disks into enclosing ones.
        bool merged = true;
        while (merged) {
            merged = false;
            for (size_t i = 0; i < disks.size() && !merged; ++i)
                for (size_t j = i + 1; j < disks.size() && !merged; ++j) {
                    double d = std::abs(disks[i].c - disks[j].c);
                    if (d < disks[i].r + disks[j].r + 0.5 * delta) {
                        double R = 0.5 * (d + disks[i].r + disks[j].r);
                        Cx dir = (d > 0) ? (disks[j].c - disks[i].c) / d : Cx{1.0, 0.0};
                        Cx c = disks[i].c + dir * (R - disks[i].r);
                        disks.erase(disks.begin() + j);
                        disks[i] = {c, R};
                        merged = true;
                    }
                }
        }

        Cx dir = z1 - z0;
        double len = std::abs(dir);
        if (len == 0) return {{z0, z1}, delta};
        Cx u = dir / len;
        auto along = [&](Cx p) { return ((p - z0) * std::conj(u)).real(); };
        std::sort(disks.begin(), disks.end(),
                  [&](const Disk& a, const Disk& b) { return along(a.c) < along(b.c); });

        CPath path;
        path.clearance = delta;
        path.points.push_back(z0);
        bool feasible = true;
        for (const auto& dk : disks) {
            double t = std::clamp(along(dk.c), 0.0, len);
            Cx foot = z0 + t * u;
            double dist = std::abs(dk.c - foot);
            if (dist >= dk.r) continue; // merged disk no longer meets the line
            double h = std::sqrt(std::max(dk.r * dk.r - dist * dist, 0.0));
            double t_in = t - h, t_out = t + h;
            Cx pin = (t_in <= 0) ? z0 : z0 + t_in * u;
            Cx pout = (t_out >= len) ? z1 : z0 + t_out * u;
            double side = ((dk.c - z0) * std::conj(u)).imag() > 0 ? 1.0 : -1.0;
            // Detour on the opposite side; ties go left.
            double arc_side = -side;
            double th_in = std::arg(pin - dk.c), th_out = std::arg(pout - dk.c);
            double r_in = std::abs(pin - dk.c), r_out = std::abs(pout - dk.c);
            // Sweep from th_in to th_out passing the arc_side of the line.
            double sweep = th_out - th_in;
            while (sweep <= -kPi) sweep += 2 * kPi;
            while (sweep > kPi) sweep -= 2 * kPi;
            // Choose direction: midpoint of the candidate arc must lie on arc_side.
            auto mid_ok = [&](double sw) {
                Cx mid = dk.c + std::polar(dk.r, th_in + 0.5 * sw);
                return (((mid - z0) * std::conj(u)).imag() > 0 ? 1.0 : -1.0) == arc_side;
            };
            double sw = sweep;
            if (!mid_ok(sw)) sw = (sweep > 0) ? sweep - 2 * kPi : sweep + 2 * kPi;
            int steps = std::max(4, static_cast<int>(std::ceil(std::abs(sw) / (kPi / 8))));
            if (!(pin == path.points.back())) path.points.push_back(pin);
            for (int s = 1; s < steps; ++s) {
                double th = th_in + sw * s / steps;
                double rr = r_in + (r_out - r_in) * s / steps;
                rr = std::max(rr, dk.r * (1.0 - 1e-12));
                if (t_in > 0 && t_out < len) rr = dk.r;
                path.points.push_back(dk.c + std::polar(rr, th));
            }
            path.points.push_back(pout);
            if (pout == z1) break;
        }
        if (!(path.points.back() == z1)) path.points.push_back(z1);

        if (feasible && path_distance(path, sing) >= delta * 0.999) return path;
    }

    // Fallback: a two-segment bounce through a perpendicular waypoint.
    {
        Cx dir = z1 - z0;
        double len = std::abs(dir);
        Cx u = (len > 0) ? dir / len : Cx{1.0, 0.0};
        Cx perp{-u.imag(), u.real()};
        Cx mid = 0.5 * (z0 + z1);
        double base = std::max(len, 4.0 * delta);
        for (int s = 0; s < 2; ++s)
            for (int m = 1; m <= 24; ++m) {
                Cx w = mid + (s == 0 ? 1.0 : -1.0) * perp * (base * 0.25 * m);
                CPath cand{{z0, w, z1}, delta};
                if (path_distance(cand, sing) >= delta * 0.999) return cand;
            }
    }
    throw std::runtime_error("build_path: could not find an admissible path");
}

Cx eval_word(const std::vector<Cx>& poles, const CPath& path, const QuadratureConfig& cfg) {
    if (path.points.size() < 2) throw std::invalid_argument("eval_word: degenerate path");
    GaussLegendre gl(cfg.nodes);
    PartialIntegrals pi(gl);
    Cx prev{0.0, 0.0};
    bool have_prev = false;
    int subdiv = cfg.base_subdiv;
    for (int depth = 0; depth <= cfg.max_depth; ++depth, subdiv *= 2) {
        Grid g = make_grid(path, subdiv, gl);
        Cx val = eval_word_on_grid(poles, g, gl, pi);
        if (have_prev) {
            double scale = std::max(1.0, std::abs(val));
            if (std::abs(val - prev) <= 0.25 * cfg.rel_tol * scale) {
                Cx norm = std::pow(Cx{0.0, 2.0 * kPi}, static_cast<double>(poles.size()));
                return val / norm;
            }
        }
        prev = val;
        have_prev = true;
    }
    throw std::runtime_error("eval_word: no convergence at max depth");
}

Cx eval_iterint(const ItIntSymbol& s, const CPath& path, const QuadratureConfig& cfg) {
    Cx z0 = s.a0.to_complex(), z1 = s.a_end.to_complex();
    if (std::abs(path.points.front() - z0) > 1e-12 || std::abs(path.points.back() - z1) > 1e-12)
        throw std::invalid_argument("eval_iterint: path endpoints do not match the symbol");
    std::vector<Cx> poles;
    for (const auto& a : s.word) poles.push_back(a.to_complex());
    if (path_distance(path, poles) <= 0)
        throw std::invalid_argument("eval_iterint: path touches a singularity");
    return eval_word(poles, path, cfg);
}

Cx eval_degree1_closed(Cx a1, Cx b0, Cx b1, int winding) {
    Cx num = a1 - b1, den = a1 + b0;
    if (num == Cx{0.0, 0.0} || den == Cx{0.0, 0.0})
        throw std::domain_error("eval_degree1_closed: degenerate arguments");
    Cx val = std::log(num / den) / Cx{0.0, 2.0 * kPi};
    return val + static_cast<double>(winding);
}

Cx eval_degree1_closed(const Scalar& a1, const Scalar& b0, const Scalar& b1, int winding) {
    return eval_degree1_closed(a1.to_complex(), b0.to_complex(), b1.to_complex(), winding);
}

EvalRecord eval_dissection(const DecoratedDiagram& d, const QuadratureConfig& cfg,
                           std::optional<double> clearance) {
    FormalSum fs = reduce(d);
    EvalRecord rec;
    double delta = clearance.value_or(std::numeric_limits<double>::infinity());
    if (!clearance) {
        for (const auto& [sym, c] : fs.terms()) {
            std::vector<Cx> poles;
            for (const auto& a : sym.word) poles.push_back(a.to_complex());
            delta = std::min(delta,
                             default_clearance(sym.a0.to_complex(), sym.a_end.to_complex(), poles));
        }
        if (!std::isfinite(delta)) delta = 1.0;
    }
    rec.clearance = delta;
    for (const auto& [sym, c] : fs.terms()) {
        std::vector<Cx> poles;
        for (const auto& a : sym.word) poles.push_back(a.to_complex());
        CPath p = build_path(sym.a0.to_complex(), sym.a_end.to_complex(), poles, delta);
        rec.value += static_cast<double>(c) * eval_iterint(sym, p, cfg);
        rec.terms.push_back({sym, c});
        rec.paths.push_back(std::move(p));
    }
    return rec;
}

} // namespace dissect
