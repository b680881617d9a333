#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pebblelab/characterization.hpp"
#include "pebblelab/harness.hpp"
#include "pebblelab/invariants.hpp"

namespace py = pybind11;
using namespace pebblelab;

namespace {

std::vector<int> set_to_list(VertexSet s) {
    std::vector<int> out;
    for (int v = 0; v < kMaxOrder; ++v)
        if (contains(s, v))
            out.push_back(v);
    return out;
}

Configuration config_from_list(const Graph& g, const std::vector<int>& counts) {
    if (static_cast<int>(counts.size()) != g.order())
        throw InvalidParameters("configuration length does not match graph order");
    std::vector<std::uint8_t> c;
    for (int x : counts) {
        if (x < 0 || x > 255)
            throw InvalidParameters("pebble count out of range");
        c.push_back(static_cast<std::uint8_t>(x));
    }
    return Configuration(std::move(c));
}

} // namespace

PYBIND11_MODULE(pebblelab, m) {
    m.doc() = "exact graph pebbling and domination laboratory";

    py::register_exception<InvalidParameters>(m, "InvalidParameters", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<DisconnectedGraph>(m, "DisconnectedGraph", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Graph(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def_property_readonly("label", &Graph::label)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, int v) { return set_to_list(g.neighbors(v)); })
        .def_property_readonly("edges", &Graph::edges)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) +
                   (g.label().empty() ? "" : " " + g.label()) + ">";
        });

    m.def("build", [](const std::string& spec) { return build(spec); }, py::arg("spec"),
          "build a family graph from its spec string, e.g. 'petersen' or 'grid:4x5'");
    m.def("cartesian_product", &cartesian_product);
    m.def("diameter", &diameter);
    m.def("girth", [](const Graph& g) -> std::optional<int> { return girth(g); });
    m.def("is_connected", &is_connected);
    m.def("connected_corpus", &connected_corpus, py::arg("n"), py::arg("dedup") = true);
    m.def("isomorphic", &isomorphic);

    m.def(
        "reachable",
        [](const Graph& g, const std::vector<int>& counts, int target, int budget)
            -> std::optional<std::vector<std::pair<int, int>>> {
            auto seq = reachable(g, config_from_list(g, counts), target, budget);
            if (!seq)
                return std::nullopt;
            std::vector<std::pair<int, int>> moves;
            for (const Move& mv : seq->steps)
                moves.emplace_back(mv.from, mv.to);
            return moves;
        },
        py::arg("graph"), py::arg("counts"), py::arg("target"),
        py::arg("budget") = kDefaultWeightBudget,
        "move list placing a pebble on target, or None");
    m.def(
        "coverage",
        [](const Graph& g, const std::vector<int>& counts, int budget) {
            return set_to_list(coverage(g, config_from_list(g, counts), false, budget).covered);
        },
        py::arg("graph"), py::arg("counts"), py::arg("budget") = kDefaultWeightBudget);
    m.def(
        "is_solvable",
        [](const Graph& g, const std::vector<int>& counts, int budget) {
            return is_solvable(g, config_from_list(g, counts), budget);
        },
        py::arg("graph"), py::arg("counts"), py::arg("budget") = kDefaultWeightBudget);

    m.def(
        "pi_star_t",
        [](const Graph& g, int t, int budget) {
            auto r = pi_star_t(g, t, {budget, -1});
            return py::make_tuple(r.value,
                                  std::vector<int>(r.witness.counts.begin(),
                                                   r.witness.counts.end()));
        },
        py::arg("graph"), py::arg("t"), py::arg("budget") = kDefaultWeightBudget,
        "(value, witness configuration)");
    m.def(
        "pi_star",
        [](const Graph& g, int budget) {
            auto r = pi_star(g, {budget, -1});
            return py::make_tuple(r.value,
                                  std::vector<int>(r.witness.counts.begin(),
                                                   r.witness.counts.end()));
        },
        py::arg("graph"), py::arg("budget") = kDefaultWeightBudget);
    m.def(
        "pebbling_number",
        [](const Graph& g) { return pebbling_number(g).value; }, py::arg("graph"));
    m.def("is_class0", [](const Graph& g) { return is_class0(g); });

    m.def("gamma", [](const Graph& g) {
        auto r = gamma(g);
        return py::make_tuple(r.value, set_to_list(r.witness));
    });
    m.def("gamma_t", [](const Graph& g) {
        auto r = gamma_t(g);
        return py::make_tuple(r.value, set_to_list(r.witness));
    });
    m.def("gamma_r", [](const Graph& g) {
        auto r = gamma_r(g);
        return py::make_tuple(r.value, set_to_list(r.witness.v1), set_to_list(r.witness.v2));
    });

    m.def(
        "classify",
        [](const Graph& g, bool relax_distinct) {
            auto r = classify_small_pi2(g, !relax_distinct);
            py::dict d;
            d["predicted"] = to_string(r.predicted);
            d["gamma"] = r.gamma_value;
            d["gamma_t"] = r.gamma_t_value;
            if (r.pair)
                d["pair"] = py::make_tuple(r.pair->u, r.pair->v);
            if (r.triple)
                d["triple"] = py::make_tuple(r.triple->u, r.triple->v, r.triple->w,
                                             r.triple->condition);
            return d;
        },
        py::arg("graph"), py::arg("relax_distinct") = false);

    m.def(
        "closed_form",
        [](const std::string& spec, const std::string& kind) -> std::optional<int> {
            ClosedFormKind k = kind == "pi_star"     ? ClosedFormKind::pi_star
                               : kind == "pi_star_2" ? ClosedFormKind::pi_star_2
                               : kind == "gamma_r"
                                   ? ClosedFormKind::gamma_r
                                   : throw InvalidParameters("unknown closed-form kind");
            return closed_form(spec, k);
        },
        py::arg("spec"), py::arg("kind"));
}
