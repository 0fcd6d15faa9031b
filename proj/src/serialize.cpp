#include "dissect/serialize.hpp"

#include <cmath>
#include <sstream>

namespace dissect {

Json to_json(const Scalar& s) {
    Json j;
    j["mode"] = mode_name(s.mode());
    switch (s.mode()) {
        case ScalarMode::None: break;
        case ScalarMode::Rational: j["value"] = to_string(s.rat()); break;
        case ScalarMode::Gaussian: {
            auto [re, im] = s.gauss();
            j["value"] = Json::array({to_string(re), to_string(im)});
            break;
        }
        case ScalarMode::Float: {
            auto z = s.to_complex();
            j["value"] = Json::array({z.real(), z.imag()});
            break;
        }
        case ScalarMode::Formal: {
            Json v = Json::object();
            for (const auto& [name, c] : s.formal_terms()) v[name] = to_string(c);
            j["value"] = v;
            break;
        }
    }
    return j;
}

Scalar scalar_from_json(const Json& j) {
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "none") return Scalar::none();
    if (mode == "rational")
        return Scalar::rational(rational_from_string(j.at("value").get<std::string>()));
    if (mode == "gaussian") {
        const auto& v = j.at("value");
        return Scalar::gaussian(rational_from_string(v.at(0).get<std::string>()),
                                rational_from_string(v.at(1).get<std::string>()));
    }
    if (mode == "float") {
        const auto& v = j.at("value");
        return Scalar::complex_float({v.at(0).get<double>(), v.at(1).get<double>()});
    }
    if (mode == "formal") {
        std::vector<std::pair<std::string, Rational>> terms;
        for (const auto& [name, c] : j.at("value").items())
            terms.push_back({name, rational_from_string(c.get<std::string>())});
        return Scalar::formal(std::move(terms));
    }
    throw std::invalid_argument("scalar_from_json: unknown mode " + mode);
}

Json to_json(const DissectionDiagram& d) {
    Json parent = Json::object();
    for (int i = 1; i <= d.degree(); ++i) parent[std::to_string(i)] = d.parent(i);
    return Json{{"degree", d.degree()}, {"parent", parent}};
}

DissectionDiagram diagram_from_json(const Json& j) {
    int n = j.at("degree").get<int>();
    std::vector<int> parent(n, 0);
    for (const auto& [key, val] : j.at("parent").items()) {
        int i = std::stoi(key);
        if (i < 1 || i > n) throw std::invalid_argument("diagram_from_json: bad chord " + key);
        parent[i - 1] = val.get<int>();
    }
    DissectionDiagram d(parent);
    auto rep = validate(d);
    if (!rep.ok) throw std::invalid_argument("diagram_from_json: invalid diagram (" + rep.reason + ")");
    return d;
}

Json to_json(const DecoratedDiagram& d) {
    Json j = to_json(d.base());
    if (d.mode() != ScalarMode::None) {
        Json a = Json::array(), b = Json::array();
        for (int i = 1; i <= d.degree(); ++i) a.push_back(to_json(d.chord_dec(i)));
        for (int s = 0; s <= d.degree(); ++s) b.push_back(to_json(d.side_dec(s)));
        j["decorations"] = Json{{"a", a}, {"b", b}};
    }
    return j;
}

DecoratedDiagram decorated_from_json(const Json& j) {
    DissectionDiagram base = diagram_from_json(j);
    if (!j.contains("decorations")) return DecoratedDiagram(base);
    const auto& dec = j.at("decorations");
    std::vector<Scalar> a, b;
    for (const auto& s : dec.at("a")) a.push_back(scalar_from_json(s));
    for (const auto& s : dec.at("b")) b.push_back(scalar_from_json(s));
    return DecoratedDiagram(base, std::move(a), std::move(b));
}

Json to_json(const Monomial& m) {
    Json j = Json::array();
    for (const auto& f : m.factors()) j.push_back(to_json(f));
    return j;
}

Monomial monomial_from_json(const Json& j) {
    std::vector<DecoratedDiagram> fs;
    for (const auto& f : j) fs.push_back(decorated_from_json(f));
    return Monomial(std::move(fs));
}

Json to_json(const AlgebraElement& e) {
    Json j = Json::array();
    for (const auto& [m, c] : e.terms())
        j.push_back(Json{{"coefficient", to_string(c)}, {"monomial", to_json(m)}});
    return j;
}

AlgebraElement algebra_from_json(const Json& j) {
    AlgebraElement e;
    for (const auto& t : j)
        e.add(monomial_from_json(t.at("monomial")),
              rational_from_string(t.at("coefficient").get<std::string>()));
    return e;
}

Json to_json(const TensorElement& e) {
    Json j = Json::array();
    for (const auto& [pr, c] : e.terms())
        j.push_back(Json{{"coefficient", to_string(c)},
                         {"left", to_json(pr.first)},
                         {"right", to_json(pr.second)}});
    return j;
}

TensorElement tensor_from_json(const Json& j) {
    TensorElement e;
    for (const auto& t : j)
        e.add({monomial_from_json(t.at("left")), monomial_from_json(t.at("right"))},
              rational_from_string(t.at("coefficient").get<std::string>()));
    return e;
}

Json to_json(const BiArrangement& a) {
    auto forms = [&](const std::vector<AffineForm>& fs) {
        Json arr = Json::array();
        for (const auto& f : fs) {
            Json row = Json::array();
            for (const auto& c : f.coeff) row.push_back(to_json(c));
            row.push_back(to_json(f.c0));
            arr.push_back(row);
        }
        return arr;
    };
    return Json{{"n", a.n}, {"L", forms(a.L)}, {"M", forms(a.M)}};
}

BiArrangement arrangement_from_json(const Json& j) {
    BiArrangement a;
    a.n = j.at("n").get<int>();
    auto forms = [&](const Json& arr) {
        std::vector<AffineForm> out;
        for (const auto& row : arr) {
            if (static_cast<int>(row.size()) != a.n + 1)
                throw std::invalid_argument("arrangement_from_json: form length mismatch");
            AffineForm f;
            for (int i = 0; i < a.n; ++i) f.coeff.push_back(scalar_from_json(row.at(i)));
            f.c0 = scalar_from_json(row.at(a.n));
            out.push_back(std::move(f));
        }
        return out;
    };
    a.L = forms(j.at("L"));
    a.M = forms(j.at("M"));
    return a;
}

Json to_json(const ItIntSymbol& s) {
    Json w = Json::array();
    for (const auto& a : s.word) w.push_back(to_json(a));
    return Json{{"a0", to_json(s.a0)}, {"word", w}, {"a_end", to_json(s.a_end)}};
}

ItIntSymbol symbol_from_json(const Json& j) {
    ItIntSymbol s;
    s.a0 = scalar_from_json(j.at("a0"));
    for (const auto& a : j.at("word")) s.word.push_back(scalar_from_json(a));
    s.a_end = scalar_from_json(j.at("a_end"));
    return s;
}

Json to_json(const FormalSum& s) {
    Json j = Json::array();
    for (const auto& [sym, c] : s.terms())
        j.push_back(Json{{"coeff", c}, {"symbol", to_json(sym)}});
    return j;
}

FormalSum formal_sum_from_json(const Json& j) {
    FormalSum s;
    for (const auto& t : j)
        s.add(symbol_from_json(t.at("symbol")), t.at("coeff").get<long long>());
    return s;
}

Json to_json(const PresentationK& p) {
    Json gens = Json::array();
    for (const auto& g : p.gens()) gens.push_back(Json{{"I", g.I}, {"J", g.J}});
    Json rel = Json::array();
    for (const auto& row : p.relation_rows()) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(to_string(c));
        rel.push_back(r);
    }
    return Json{{"k", p.k()},
                {"ambient", p.ambient()},
                {"generators", gens},
                {"relations", rel},
                {"basis", p.basis()},
                {"dim", p.dim()}};
}

Json to_json(const EvalRecord& r) {
    Json terms = Json::array();
    for (const auto& [sym, c] : r.terms)
        terms.push_back(Json{{"coeff", c}, {"symbol", to_json(sym)}});
    Json paths = Json::array();
    for (const auto& p : r.paths) {
        Json pts = Json::array();
        for (const auto& z : p.points) pts.push_back(Json::array({z.real(), z.imag()}));
        paths.push_back(pts);
    }
    return Json{{"value", Json::array({r.value.real(), r.value.imag()})},
                {"clearance", r.clearance},
                {"terms", terms},
                {"paths", paths}};
}

std::string to_dot(const DecoratedDiagram& d) {
    std::ostringstream os;
    int n = d.degree();
    os << "digraph gamma {\n";
    os << "  rankdir=LR;\n";
    os << "  0 [label=\"root\", shape=circle, style=bold];\n";
    for (int v = 1; v <= n; ++v) os << "  " << v << " [shape=circle];\n";
    for (int i = 1; i <= n; ++i) {
        os << "  " << i << " -> " << d.parent(i) << " [kind=chord, label=\"chord " << i;
        if (d.mode() != ScalarMode::None) os << ": " << d.chord_dec(i).str();
        os << "\"];\n";
    }
    for (int j = 0; j <= n; ++j) {
        os << "  " << j << " -> " << (j + 1) % (n + 1) << " [kind=side, style=dashed, label=\"side "
           << j;
        if (d.mode() != ScalarMode::None) os << ": " << d.side_dec(j).str();
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_tikz(const DecoratedDiagram& d) {
    std::ostringstream os;
    int n = d.degree();
    const double pi = 3.14159265358979323846;
    auto angle = [&](int v) { return -90.0 - 360.0 * v / (n + 1); };
    os << "\\begin{tikzpicture}[scale=1.5]\n";
    os << "  \\draw (0,0) circle (1);\n";
    for (int v = 0; v <= n; ++v) {
        double t = angle(v) * pi / 180.0;
        double x = std::cos(t), y = std::sin(t);
        if (v == 0)
            os << "  \\draw[fill=white] (" << x << "," << y << ") circle (0.05);\n";
        else
            os << "  \\filldraw (" << x << "," << y << ") circle (0.045) node[anchor="
               << (y > 0 ? "south" : "north") << "] {$" << v << "$};\n";
    }
    for (int i = 1; i <= n; ++i) {
        double t1 = angle(i) * pi / 180.0, t2 = angle(d.parent(i)) * pi / 180.0;
        os << "  \\draw[->] (" << std::cos(t1) << "," << std::sin(t1) << ") -- (" << std::cos(t2)
           << "," << std::sin(t2) << ")";
        if (d.mode() != ScalarMode::None)
            os << " node[midway, fill=white, inner sep=1pt] {$" << d.chord_dec(i).str() << "$}";
        os << ";\n";
    }
    if (d.mode() != ScalarMode::None) {
        for (int j = 0; j <= n; ++j) {
            double mid = (angle(j) + angle(j + 1)) / 2.0 * pi / 180.0;
            os << "  \\node at (" << 1.18 * std::cos(mid) << "," << 1.18 * std::sin(mid) << ") {$"
               << d.side_dec(j).str() << "$};\n";
        }
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

} // namespace dissect
