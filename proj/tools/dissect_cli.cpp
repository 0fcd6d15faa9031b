// Batch front end: enumerate | coproduct | reduce | eval | verify | export.
// Exit codes: 0 ok, 1 verification failure, 2 parse/usage error, 3 internal.

#include "dissect/serialize.hpp"
#include "dissect/verify.hpp"
#include "dissect/reduction.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace dissect;

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out);
    if (!os) throw std::invalid_argument("cannot write " + out);
    os << text;
}

int cmd_enumerate(int n, bool list, bool as_json, const std::string& out) {
    std::ostringstream os;
    auto diagrams = enumerate_diagrams(n);
    if (as_json) {
        Json j;
        j["degree"] = n;
        j["count"] = count(n).get_str();
        if (list) {
            Json arr = Json::array();
            for (const auto& d : diagrams) arr.push_back(to_json(d));
            j["diagrams"] = arr;
        }
        os << j.dump(2) << "\n";
    } else {
        os << count(n).get_str() << "\n";
        if (list)
            for (const auto& d : diagrams) os << pretty(DecoratedDiagram(d)) << "\n";
    }
    write_output(out, os.str());
    return 0;
}

int cmd_coproduct(const std::string& input, const std::string& xval, bool as_json,
                  const std::string& out) {
    DecoratedDiagram d = decorated_from_json(read_json_file(input));
    AlgebraElement e;
    e.add(Monomial::single(d), Rational(1));
    std::ostringstream os;
    if (xval == "formal") {
        AlgebraElementX ex;
        ex.add(Monomial::single(d), XPoly::constant(Rational(1)));
        TensorElementX t = coproduct_formal(ex);
        if (as_json) {
            Json arr = Json::array();
            for (const auto& [pr, c] : t.terms())
                arr.push_back(Json{{"coefficient", c.str()},
                                   {"left", to_json(pr.first)},
                                   {"right", to_json(pr.second)}});
            os << arr.dump(2) << "\n";
        } else {
            os << pretty(t) << "\n";
        }
    } else {
        TensorElement t = coproduct(rational_from_string(xval), e);
        os << (as_json ? to_json(t).dump(2) + "\n" : pretty(t) + "\n");
    }
    write_output(out, os.str());
    return 0;
}

int cmd_reduce(const std::string& input, bool as_json, const std::string& out) {
    DecoratedDiagram d = decorated_from_json(read_json_file(input));
    FormalSum s = reduce(d);
    write_output(out, as_json ? to_json(s).dump(2) + "\n" : s.str() + "\n");
    return 0;
}

int cmd_eval(const std::string& input, double tol, double clearance, int max_depth,
             bool as_json, const std::string& out) {
    DecoratedDiagram d = decorated_from_json(read_json_file(input));
    QuadratureConfig cfg;
    cfg.rel_tol = tol;
    cfg.max_depth = max_depth;
    std::optional<double> cl;
    if (clearance > 0) cl = clearance;
    EvalRecord r = eval_dissection(d, cfg, cl);
    std::ostringstream os;
    if (as_json) {
        os << to_json(r).dump(2) << "\n";
    } else {
        os << r.value.real() << (r.value.imag() < 0 ? " - " : " + ")
           << std::abs(r.value.imag()) << "i\n";
        os << "clearance " << r.clearance << ", " << r.terms.size() << " term(s)\n";
    }
    write_output(out, os.str());
    return 0;
}

int cmd_verify(const std::string& suite, int max_degree, std::uint64_t seed) {
    VerifyOptions opts;
    opts.max_degree = max_degree;
    opts.seed = seed;
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names.push_back(suite);
    int pass = 0, fail = 0;
    for (const auto& name : names) {
        SuiteResult res = run_suite(name, opts);
        for (const auto& c : res.checks) {
            std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << res.suite << ": " << c.name;
            if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
            std::cout << "\n";
            (c.passed ? pass : fail)++;
        }
    }
    std::cout << pass << " passed, " << fail << " failed\n";
    return fail == 0 ? 0 : 1;
}

int cmd_export(const std::string& input, const std::string& format, const std::string& out) {
    DecoratedDiagram d = decorated_from_json(read_json_file(input));
    if (format == "dot") {
        write_output(out, to_dot(d));
    } else if (format == "tikz") {
        write_output(out, to_tikz(d));
    } else if (format == "json") {
        write_output(out, to_json(d).dump(2) + "\n");
    } else {
        throw std::invalid_argument("unknown export format: " + format);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dissection diagrams: Hopf algebra, bi-arrangements, reduction, evaluation"};
    app.require_subcommand(1);

    int n = 0;
    bool list = false, as_json = false;
    std::string input, outfile, xval = "-1", format = "json", suite = "all";
    double tol = 1e-10, clearance = 0;
    int max_depth = 10, max_degree = -1;
    std::uint64_t seed = 20240801ull;

    auto* enumerate = app.add_subcommand("enumerate", "count (and list) dissection diagrams");
    enumerate->add_option("n", n, "degree")->required();
    enumerate->add_flag("--list", list, "print every diagram");
    enumerate->add_flag("--json", as_json);
    enumerate->add_option("--out", outfile);

    auto* coproduct = app.add_subcommand("coproduct", "coproduct of a diagram JSON");
    coproduct->add_option("--input", input, "diagram JSON file")->required();
    coproduct->add_option("--x", xval, "-1 (default), any rational, or 'formal'");
    coproduct->add_flag("--json", as_json);
    coproduct->add_option("--out", outfile);

    auto* reduce = app.add_subcommand("reduce", "write I(D) as iterated integrals");
    reduce->add_option("--input", input)->required();
    reduce->add_flag("--json", as_json);
    reduce->add_option("--out", outfile);

    auto* eval = app.add_subcommand("eval", "numerically evaluate I(D)");
    eval->add_option("--input", input)->required();
    eval->add_option("--tol", tol, "relative tolerance");
    eval->add_option("--clearance", clearance, "path clearance (0 = automatic)");
    eval->add_option("--max-depth", max_depth, "maximum grid refinements");
    eval->add_flag("--json", as_json);
    eval->add_option("--out", outfile);

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite, "suite name or 'all'");
    verify->add_option("--max-degree", max_degree, "override the suite's degree bound");
    verify->add_option("--seed", seed, "seed for randomized draws");

    auto* exp = app.add_subcommand("export", "export a diagram as dot/tikz/json");
    exp->add_option("--input", input)->required();
    exp->add_option("--format", format, "dot | tikz | json");
    exp->add_option("--out", outfile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(n, list, as_json, outfile);
        if (coproduct->parsed()) return cmd_coproduct(input, xval, as_json, outfile);
        if (reduce->parsed()) return cmd_reduce(input, as_json, outfile);
        if (eval->parsed()) return cmd_eval(input, tol, clearance, max_depth, as_json, outfile);
        if (verify->parsed()) return cmd_verify(suite, max_degree, seed);
        if (exp->parsed()) return cmd_export(input, format, outfile);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
