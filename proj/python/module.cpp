#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "irrsub/cubic_solver.hpp"
#include "irrsub/general_solver.hpp"
#include "irrsub/generators.hpp"
#include "irrsub/io.hpp"
#include "irrsub/oracle.hpp"
#include "irrsub/strength.hpp"

namespace py = pybind11;
using namespace irrsub;

namespace {

spanning_subgraph from_members(const multigraph& g, const std::vector<int>& members) {
    spanning_subgraph h(g);
    h.set_members(members);
    return h;
}

py::dict subgraph_summary(const spanning_subgraph& h) {
    py::dict out;
    out["members"] = h.member_edges();
    out["profile"] = h.profile();
    auto a = a_scaled(h);
    out["a_scaled"] = a.entries;
    out["b_scaled"] = b_scaled(h).entries;
    out["a_inf_norm"] = inf_norm(a);
    out["scale"] = h.degree_cap() + 1;
    if (h.degree_cap() == 3) out["state"] = cubic_state_name(classify(a));
    return out;
}

} // namespace

PYBIND11_MODULE(irrsub, m) {
    m.doc() = "Irregular spanning subgraphs of regular multigraphs: the general "
              "local-adjustment solver, the linear-time cubic solver, an exhaustive "
              "oracle, generators, and the irregularity-strength weighting bridge.";

    py::register_exception<error>(m, "Error");

    py::class_<multigraph>(m, "Multigraph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return multigraph::build(n, edges);
             }),
             py::arg("num_vertices"), py::arg("edges"))
        .def_property_readonly("vertex_count", &multigraph::vertex_count)
        .def_property_readonly("edge_count", &multigraph::edge_count)
        .def("regularity",
             [](const multigraph& g) -> py::object {
                 auto d = g.regularity();
                 if (!d) return py::none();
                 return py::int_(*d);
             })
        .def("edges",
             [](const multigraph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (int e = 0; e < g.edge_count(); ++e)
                     if (g.edge_alive(e)) out.push_back({g.edge(e).u, g.edge(e).v});
                 return out;
             })
        .def("serialize", &serialize_graph)
        .def("__repr__", [](const multigraph& g) {
            return "<Multigraph n=" + std::to_string(g.vertex_count()) + " m=" +
                   std::to_string(g.edge_count()) + ">";
        });

    m.def("parse_graph", &parse_graph, py::arg("text"));
    m.def("k2k", &make_k2k, py::arg("k"));
    m.def("complete_bipartite", &make_complete_bipartite, py::arg("d"));
    m.def("cycle", &make_cycle, py::arg("n"));
    m.def("petersen", &make_petersen);
    m.def("k4", &make_k4);
    m.def("doubled", &make_doubled, py::arg("base"), py::arg("s"));
    m.def("disjoint_union", &make_disjoint_union, py::arg("graph"), py::arg("copies"));
    m.def("random_regular", &random_regular, py::arg("n"), py::arg("d"), py::arg("seed") = 0);

    m.def(
        "solve_general",
        [](const multigraph& g, const std::string& init, uint64_t seed) {
            init_subgraph kind = init_subgraph::empty;
            if (init == "full")
                kind = init_subgraph::full;
            else if (init == "random")
                kind = init_subgraph::random;
            else
                require(init == "empty", errc::invalid_params, "init must be empty|full|random");
            auto [h, rep] = solve_general(g, kind, seed);
            auto out = subgraph_summary(h);
            out["improvements"] = rep.improvement_count;
            out["type_a"] = rep.type_a_count;
            out["type_b"] = rep.type_b_count;
            out["final_b_inf"] = rep.final_b_inf;
            return out;
        },
        py::arg("graph"), py::arg("init") = "empty", py::arg("seed") = 0,
        "General solver: returns a subgraph with max_k |a~_k| <= 2 d^2 (d+1).");

    m.def(
        "solve_cubic",
        [](multigraph& g) {
            auto [h, st] = solve_cubic(g);
            auto out = subgraph_summary(h);
            out["toggles"] = st.toggles;
            out["index_updates"] = st.index_updates;
            out["ops_replayed"] = st.ops_replayed;
            out["base_components"] = st.base_components;
            return out;
        },
        py::arg("graph"),
        "Cubic solver: returns a state-0 subgraph (|m(H,k) - n/4| <= 2) in linear time.");

    m.def(
        "oracle_best",
        [](const multigraph& g) {
            auto r = oracle_best(g);
            py::dict out;
            out["best_scaled_inf_norm"] = r.best_scaled_inf_norm;
            out["witness"] = r.witness;
            out["subgraph_count"] = r.subgraph_count;
            return out;
        },
        py::arg("graph"));

    m.def(
        "oracle_state0_witness",
        [](const multigraph& g) -> py::object {
            auto w = oracle_state_exists(
                g, [](const scaled_a& a) { return classify(a) == cubic_state::state0; });
            if (!w) return py::none();
            return py::cast(*w);
        },
        py::arg("graph"));

    m.def(
        "summarize",
        [](const multigraph& g, const std::vector<int>& members) {
            return subgraph_summary(from_members(g, members));
        },
        py::arg("graph"), py::arg("members"),
        "Degree profile and scaled irregularity vectors of a member-id set.");

    m.def(
        "weighting",
        [](const multigraph& base, int s, const std::vector<int>& members) {
            auto blow = make_doubled(base, s);
            auto h = from_members(blow, members);
            auto w = weighting_from_subgraph(base, s, h);
            auto rep = verify_distinct(w);
            py::dict out;
            out["weights"] = w.weights;
            out["weighted_degrees"] = w.weighted_degrees;
            out["distinct"] = rep.distinct;
            out["collisions"] = rep.duplicates;
            return out;
        },
        py::arg("base"), py::arg("s"), py::arg("members"),
        "Edge weighting f(e) = |E_e cap H| + 1 from a blow-up subgraph.");
}
