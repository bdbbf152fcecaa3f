#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <iterator>
#include <sstream>

#include "qlie/cli.hpp"
#include "qlie/duality.hpp"
#include "qlie/errors.hpp"
#include "qlie/golden.hpp"
#include "qlie/hopf.hpp"
#include "qlie/specfile.hpp"

namespace py = pybind11;
using namespace qlie;

namespace {

SpecFile golden_spec(const std::string &name)
{
    if (name == "J_r")
        return {golden::jordanian(), golden::jordanian_r()};
    for (auto &[n, s] : golden::library())
        if (n == name)
            return {s, std::nullopt};
    throw py::value_error("no golden spec named '" + name + "'");
}

const ClassicalRMatrix &require_r(const SpecFile &f)
{
    if (!f.r)
        throw py::value_error("spec has no [r] section");
    return *f.r;
}

std::vector<Generator> parse_word(const std::string &text, char x_letter, char h_letter, const PBWAlgebra &alg)
{
    std::vector<Generator> word;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        bool digits = tok.size() >= 2 && tok.size() < 10 &&
                      std::all_of(tok.begin() + 1, tok.end(), [](char c) { return c >= '0' && c <= '9'; });
        if (!digits || (tok[0] != x_letter && tok[0] != h_letter))
            throw py::value_error("unknown generator symbol '" + tok + "'");
        bool x = tok[0] == x_letter;
        std::size_t idx = std::stoul(tok.substr(1));
        if (idx >= (x ? alg.dim_v() : alg.dim_h()))
            throw py::value_error("unknown generator symbol '" + tok + "'");
        word.push_back({x ? Generator::Kind::X : Generator::Kind::H, idx});
    }
    return word;
}

} // namespace

PYBIND11_MODULE(_qlie, m)
{
    m.doc() = "Exact quantization of Lie bialgebras with abelian X-sector";

    py::register_exception<SpecParseError>(m, "SpecParseError", PyExc_ValueError);
    py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<InternalFault>(m, "InternalFault", PyExc_RuntimeError);

    py::class_<ValidationReport>(m, "Report")
        .def_property_readonly("passed", &ValidationReport::pass)
        .def_readonly("checks", &ValidationReport::checks)
        .def_property_readonly("violations",
                               [](const ValidationReport &r) {
                                   py::list out;
                                   for (auto &v : r.violations)
                                       out.append(py::make_tuple(v.axiom, v.index, v.residual));
                                   return out;
                               })
        .def("failed", &ValidationReport::failed, py::arg("axiom"))
        .def("__bool__", &ValidationReport::pass)
        .def("__repr__", [](const ValidationReport &r) {
            return "<Report " + std::string(r.pass() ? "pass" : "fail") + ", " + std::to_string(r.checks.size()) +
                   " checks, " + std::to_string(r.violations.size()) + " violations>";
        });

    py::class_<SpecFile>(m, "Spec")
        .def_static("from_text", &parse_spec_text, py::arg("text"))
        .def_static("load", &parse_spec_file, py::arg("path"))
        .def_static("golden", &golden_spec, py::arg("name"),
                    "all-zero, ISO, J, dual(J), K, double(J), or J_r (J with its r-matrix)")
        .def("to_text", &print_spec)
        .def("save", [](const SpecFile &f, const std::string &path) { write_spec_file(path, f); })
        .def_property_readonly("dim_h", [](const SpecFile &f) { return f.spec.dim_h; })
        .def_property_readonly("dim_v", [](const SpecFile &f) { return f.spec.dim_v; })
        .def_property_readonly("has_r", [](const SpecFile &f) { return f.r.has_value(); })
        .def(py::self == py::self)
        .def("__repr__", [](const SpecFile &f) {
            return "<Spec dim_h=" + std::to_string(f.spec.dim_h) + " dim_v=" + std::to_string(f.spec.dim_v) +
                   (f.r ? " with r>" : ">");
        });

    m.def("validate", [](const SpecFile &f) { return validate_bialgebra(f.spec); });
    m.def("dualize", [](const SpecFile &f) { return SpecFile{dualize(f.spec), std::nullopt}; });
    m.def("classical_double", [](const SpecFile &f) { return SpecFile{classical_double(f.spec), std::nullopt}; });
    m.def("check_cybe", [](const SpecFile &f) { return check_cybe(f.spec, require_r(f)); });

    m.def(
        "bch",
        [](const SpecFile &f, int order) {
            const std::size_t d = f.spec.dim_v;
            auto name = [d](std::size_t k) { return (k < d ? "x" : "y") + std::to_string(k % d); };
            std::vector<std::string> out;
            for (auto &p : bch(f.spec.gamma, d, order))
                out.push_back(p.to_string(name));
            return out;
        },
        py::arg("spec"), py::arg("order") = 4, "D(X, Y) per X-coordinate, over variables x0.. then y0..");

    m.def(
        "relations", [](const SpecFile &f, int order) { return build_algebra(f.spec, order)->relation_lines(); },
        py::arg("spec"), py::arg("order") = 4);

    m.def(
        "check_hopf",
        [](const SpecFile &f, int order, int hcap) {
            return check_hopf_suite(HopfContext(build_algebra(f.spec, order)), hcap);
        },
        py::arg("spec"), py::arg("order") = 3, py::arg("hcap") = 3);

    m.def(
        "verify_canonical",
        [](const SpecFile &f, int order) {
            PairingContext pc(f.spec, order);
            auto rep = verify_canonical(pc, order);
            rep.merge(check_pairing_factorization(pc, order));
            return rep;
        },
        py::arg("spec"), py::arg("order") = 3);

    m.def(
        "verify_double",
        [](const SpecFile &f, int order) {
            auto D = quantum_double(f.spec, order);
            auto rep = check_hopf_suite(D, std::min(order, 3));
            rep.merge(verify_double_cross_relations(f.spec, order));
            auto R = build_r_matrix(D, double_canonical_r(f.spec));
            rep.merge(check_qybe(D, R));
            rep.merge(check_quasitriangular(D, R));
            return rep;
        },
        py::arg("spec"), py::arg("order") = 3);

    m.def(
        "check_rmatrix",
        [](const SpecFile &f, int order) {
            HopfContext ctx(build_algebra(f.spec, order));
            auto R = build_r_matrix(ctx, require_r(f));
            auto rep = check_qybe(ctx, R);
            rep.merge(check_quasitriangular(ctx, R));
            return rep;
        },
        py::arg("spec"), py::arg("order") = 3);

    m.def(
        "pair",
        [](const SpecFile &f, const std::string &left, const std::string &right, int order) {
            auto n = [](const std::string &s) {
                std::istringstream in(s);
                return static_cast<int>(std::distance(std::istream_iterator<std::string>(in),
                                                      std::istream_iterator<std::string>()));
            };
            order = std::max({order, n(left), n(right), 1});
            PairingContext pc(f.spec, order);
            auto l = parse_word(left, 'e', 'z', *pc.dual.alg);
            auto r = parse_word(right, 'X', 'H', *pc.primal.alg);
            return to_string(pair(pc, normal_order(pc.dual.alg, l), normal_order(pc.primal.alg, r)));
        },
        py::arg("spec"), py::arg("left"), py::arg("right"), py::arg("order") = 0);

    m.def(
        "run",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            int code = run_command(args, out, err).exit_code;
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "CLI entry point without the program name; returns (exit_code, stdout, stderr)");
}
