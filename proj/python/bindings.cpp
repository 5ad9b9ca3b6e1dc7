#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pfgame/decide.hpp"
#include "pfgame/games.hpp"
#include "pfgame/hypergraph.hpp"
#include "pfgame/numerics.hpp"
#include "pfgame/parse.hpp"
#include "pfgame/report.hpp"
#include "pfgame/tensor.hpp"

namespace py = pybind11;
using namespace pfgame;

namespace {

// 1-based label lists on the Python side
NodeSet to_set(const std::vector<std::size_t>& labels, std::size_t n) {
    NodeSet s;
    for (auto l : labels) {
        if (l == 0 || l > n) throw std::invalid_argument("label " + std::to_string(l) + " outside 1.." + std::to_string(n));
        s.insert(l - 1);
    }
    return s;
}

DecideOptions::Path to_path(const std::string& p) {
    if (p == "auto") return DecideOptions::Path::Auto;
    if (p == "general") return DecideOptions::Path::General;
    if (p == "convex") return DecideOptions::Path::ConvexFast;
    throw std::invalid_argument("path must be auto, general or convex");
}

DecideOptions options(const std::string& path, std::size_t threads) {
    DecideOptions o;
    o.path = to_path(path);
    o.threads = threads;
    return o;
}

SolveConfig config(double tol, std::size_t max_iters, double damping) {
    SolveConfig c;
    c.tolerance = tol;
    c.max_iters = max_iters;
    c.damping = damping;
    return c;
}

GameKind game_for(const Operator& op, const std::optional<std::vector<double>>& at) {
    if (!at) return GameKind::at_infinity();
    if (at->size() != op.dim()) throw std::invalid_argument("point has wrong dimension");
    return uniqueness_game(op, *at);
}

Sign to_sign(const std::string& s) {
    if (s == "+" || s == "plus") return Sign::Plus;
    if (s == "-" || s == "minus") return Sign::Minus;
    throw std::invalid_argument("sign must be 'plus' or 'minus'");
}

}  // namespace

PYBIND11_MODULE(_pfgame, m) {
    m.doc() = "Dominion tests for nonlinear Perron-Frobenius eigenproblems";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Operator>(m, "Operator")
        .def_property_readonly("dim", &Operator::dim)
        .def_property_readonly("is_convex", &Operator::is_convex)
        .def("__call__", [](const Operator& op, const std::vector<double>& x) {
            if (x.size() != op.dim()) throw std::invalid_argument("point has wrong dimension");
            return eval(op, x);
        })
        .def("to_dsl", [](const Operator& op) { return to_dsl(op); })
        .def("__repr__", [](const Operator& op) { return "<Operator n=" + std::to_string(op.dim()) + ">"; });

    py::class_<Tensor>(m, "Tensor")
        .def_readonly("order", &Tensor::order)
        .def_readonly("dim", &Tensor::dim)
        .def("__call__", [](const Tensor& t, const std::vector<double>& x) { return apply_tensor(t, x); })
        .def("to_operator", [](const Tensor& t) { return tensor_to_operator(t); });

    m.def("parse_operator", [](const std::string& text) { return parse_operator(text); }, py::arg("text"));
    m.def("parse_tensor", [](const std::string& text) { return parse_tensor(text); }, py::arg("text"));

    m.def(
        "_decide_existence",
        [](const Operator& op, const std::string& path, std::size_t threads) {
            return to_json(decide_existence(op, options(path, threads))).dump();
        },
        py::arg("op"), py::arg("path") = "auto", py::arg("threads") = 1);
    m.def(
        "_decide_uniqueness",
        [](const Operator& op, const std::vector<double>& u, const std::string& path, std::size_t threads) {
            return to_json(decide_uniqueness(op, u, options(path, threads))).dump();
        },
        py::arg("op"), py::arg("u"), py::arg("path") = "auto", py::arg("threads") = 1);
    m.def(
        "_certify",
        [](const Operator& op, const std::vector<std::size_t>& I, const std::vector<std::size_t>& J, std::size_t steps) {
            DecisionReport r;
            r.verdict = Verdict::DisjointDominions;
            r.min_dominion = to_set(I, op.dim());
            r.max_dominion = to_set(J, op.dim());
            r.dim = op.dim();
            return to_json(certify_disjoint_dominions(op, r, steps)).dump();
        },
        py::arg("op"), py::arg("I"), py::arg("J"), py::arg("steps") = 50);
    m.def(
        "_second_eigenvector",
        [](const Operator& op, const std::vector<double>& u, const std::vector<std::size_t>& I,
           const std::vector<std::size_t>& J) {
            return to_json(second_eigenvector(op, u, to_set(I, op.dim()), to_set(J, op.dim()))).dump();
        },
        py::arg("op"), py::arg("u"), py::arg("I"), py::arg("J"));
    m.def(
        "_solve",
        [](const Operator& op, const std::vector<double>& x0, double tol, std::size_t max_iters, double damping) {
            return to_json(solve_ergodic(op, x0, config(tol, max_iters, damping))).dump();
        },
        py::arg("op"), py::arg("x0"), py::arg("tol") = 1e-10, py::arg("max_iters") = 100000, py::arg("damping") = 0.5);
    m.def(
        "_tensor_solve",
        [](const Tensor& t, double tol, std::size_t max_iters, double damping) {
            return to_json(tensor_eigenpair(t, config(tol, max_iters, damping))).dump();
        },
        py::arg("t"), py::arg("tol") = 1e-10, py::arg("max_iters") = 100000, py::arg("damping") = 0.5);

    m.def("mean_payoff", [](const Operator& op, std::size_t k) { return mean_payoff(op, k); }, py::arg("op"),
          py::arg("k"));
    m.def(
        "hyperarcs",
        [](const Operator& op, const std::string& sign, std::optional<std::vector<double>> at, bool minimal) {
            auto h = build_hypergraph(op, game_for(op, at), to_sign(sign));
            h = minimal ? h.minimal().sorted() : h.sorted();
            std::vector<std::pair<std::vector<std::size_t>, std::size_t>> out;
            for (const auto& a : h.arcs()) out.emplace_back(a.tail.labels(), a.head + 1);
            return out;
        },
        py::arg("op"), py::arg("sign"), py::arg("at") = py::none(), py::arg("minimal") = true);
    m.def(
        "to_dot",
        [](const Operator& op, const std::string& sign, std::optional<std::vector<double>> at, bool minimal) {
            DotOptions o;
            o.minimal = minimal;
            const Sign s = to_sign(sign);
            o.name = s == Sign::Plus ? "Hplus" : "Hminus";
            return to_dot(build_hypergraph(op, game_for(op, at), s), o);
        },
        py::arg("op"), py::arg("sign"), py::arg("at") = py::none(), py::arg("minimal") = true);
    m.def(
        "tensor_decide",
        [](const Tensor& t) {
            const auto p = TensorPattern::of(t);
            const auto finals = final_classes(tensor_digraph(p));
            py::dict d;
            py::list classes;
            for (auto c : finals) classes.append(c.labels());
            d["final_classes"] = classes;
            bool yes = false;
            if (finals.size() == 1) {
                const auto r = reach(tensor_hypergraph(p), finals.front());
                d["reach"] = r.labels();
                yes = r == NodeSet::full(t.dim);
            }
            d["positive_eigenvector"] = yes;
            return d;
        },
        py::arg("t"));
}
