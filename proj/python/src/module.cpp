#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nac/fixtures.hpp"
#include "nac/graph.hpp"
#include "nac/mono_classes.hpp"
#include "nac/nac_check.hpp"
#include "nac/sat_reduction.hpp"
#include "nac/search.hpp"

namespace py = pybind11;
using namespace nac;

namespace {

std::vector<int> to_list(const EdgeSet& s) { return s.indices(); }

EdgeSet from_list(const Graph& g, const std::vector<int>& edges) {
    EdgeSet s = g.empty_edge_set();
    for (int e : edges) {
        if (e < 0 || e >= g.edge_count())
            throw py::index_error("edge index " + std::to_string(e) + " out of range");
        s.set(static_cast<std::size_t>(e));
    }
    return s;
}

SearchConfig make_config(const std::string& strategy, const std::string& merge, int bag_size, int cycles_depth,
                         int cycles_per_class, bool use_cycles, bool use_blocks, std::uint64_t seed,
                         std::optional<double> timeout) {
    SearchConfig c;
    c.strategy = parse_strategy(strategy);
    c.merge = parse_merge_strategy(merge);
    c.bag_size = bag_size;
    c.cycles_depth = cycles_depth;
    c.cycles_per_class = cycles_per_class;
    c.use_cycles = use_cycles;
    c.use_blocks = use_blocks;
    c.seed = seed;
    if (timeout)
        c.timeout = std::chrono::milliseconds(static_cast<long long>(*timeout * 1000));
    c.validate();
    return c;
}

// Keeps the graph alive alongside the stream that refers to it.
struct PyStream {
    std::shared_ptr<Graph> graph;
    std::unique_ptr<ColoringStream> stream;
};

#define SEARCH_ARGS                                                                                           \
    py::arg("strategy") = "neighbors-degree", py::arg("merge") = "linear", py::arg("bag_size") = 4,              \
    py::arg("cycles_depth") = 4, py::arg("cycles_per_class") = 2, py::arg("use_cycles") = true,                \
    py::arg("use_blocks") = true, py::arg("seed") = 0, py::arg("timeout") = py::none()

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "NAC-coloring search, monochromatic classes and the 3-SAT reduction";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
    py::register_exception<SearchTimeout>(m, "SearchTimeout", PyExc_TimeoutError);
    py::register_exception<OracleLimitError>(m, "OracleLimitError", PyExc_RuntimeError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    py::class_<Graph, std::shared_ptr<Graph>>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const auto& e : g.edges())
                                       out.emplace_back(e.u, e.v);
                                   return out;
                               })
        .def("max_degree", &Graph::max_degree)
        .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("from_graph6", [](const std::string& s) { return parse_graph6(s).graph; }, py::arg("text"));
    m.def("parse_edge_list", [](const std::string& s) {
        auto lg = parse_edge_list(s);
        return py::make_tuple(lg.graph, lg.original_ids);
    }, py::arg("text"), "returns (graph, original vertex ids)");

    m.def("triangle_components", [](const Graph& g) { return triangle_components(g).classes; }, py::arg("graph"));
    m.def("monochromatic_classes", [](const Graph& g) { return monochromatic_classes(g).classes; }, py::arg("graph"));
    m.def("is_nac_coloring", [](const Graph& g, const std::vector<int>& red) {
        EdgeSet r = from_list(g, red);
        EdgeSet b = g.all_edges();
        b ^= r;
        return is_nac_coloring(g, r, b);
    }, py::arg("graph"), py::arg("red"));

    py::class_<CheckStats>(m, "CheckStats")
        .def_readonly("mask_candidates", &CheckStats::mask_candidates)
        .def_readonly("cycle_rejections", &CheckStats::cycle_rejections)
        .def_readonly("full_checks", &CheckStats::full_checks)
        .def_readonly("found", &CheckStats::found)
        .def("as_dict", [](const CheckStats& s) {
            py::dict d;
            d["mask_candidates"] = s.mask_candidates;
            d["cycle_rejections"] = s.cycle_rejections;
            d["full_checks"] = s.full_checks;
            d["found"] = s.found;
            return d;
        });

    py::class_<PyStream>(m, "ColoringStream")
        .def("__iter__", [](PyStream& s) -> PyStream& { return s; })
        .def("__next__", [](PyStream& s) {
            auto c = s.stream->next();
            if (!c)
                throw py::stop_iteration();
            return py::make_tuple(to_list(c->red), to_list(c->blue));
        })
        .def_property_readonly("stats", [](const PyStream& s) { return s.stream->stats(); });

    m.def("iter_colorings",
          [](const Graph& graph, const std::string& strategy, const std::string& merge, int bag_size, int depth,
             int per_class, bool use_cycles, bool use_blocks, std::uint64_t seed, std::optional<double> timeout) {
              auto cfg = make_config(strategy, merge, bag_size, depth, per_class, use_cycles, use_blocks, seed, timeout);
              auto g = std::make_shared<Graph>(graph);
              PyStream s{g, std::make_unique<ColoringStream>(enumerate(*g, cfg))};
              return s;
          },
          py::arg("graph"), SEARCH_ARGS, "lazy stream of canonical colorings as (red, blue) edge-index lists");

    m.def("enumerate",
          [](const Graph& g, const std::string& strategy, const std::string& merge, int bag_size, int depth,
             int per_class, bool use_cycles, bool use_blocks, std::uint64_t seed, std::optional<double> timeout,
             std::optional<std::size_t> limit) {
              auto cfg = make_config(strategy, merge, bag_size, depth, per_class, use_cycles, use_blocks, seed, timeout);
              std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
              py::gil_scoped_release nogil;
              for (const auto& c : enumerate(g, cfg).collect(limit))
                  out.emplace_back(to_list(c.red), to_list(c.blue));
              return out;
          },
          py::arg("graph"), SEARCH_ARGS, py::arg("limit") = py::none());

    m.def("exists",
          [](const Graph& g, const std::string& strategy, const std::string& merge, int bag_size, int depth,
             int per_class, bool use_cycles, bool use_blocks, std::uint64_t seed, std::optional<double> timeout) {
              auto cfg = make_config(strategy, merge, bag_size, depth, per_class, use_cycles, use_blocks, seed, timeout);
              py::gil_scoped_release nogil;
              return exists(g, cfg);
          },
          py::arg("graph"), SEARCH_ARGS);

    m.def("count",
          [](const Graph& g, const std::string& strategy, const std::string& merge, int bag_size, int depth,
             int per_class, bool use_cycles, bool use_blocks, std::uint64_t seed, std::optional<double> timeout) {
              auto cfg = make_config(strategy, merge, bag_size, depth, per_class, use_cycles, use_blocks, seed, timeout);
              py::gil_scoped_release nogil;
              auto s = enumerate(g, cfg);
              std::uint64_t n = 0;
              while (s.next())
                  ++n;
              return n;
          },
          py::arg("graph"), SEARCH_ARGS);

    m.def("enumerate_brute_force", [](const Graph& g, int edge_limit) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
        for (const auto& c : enumerate_brute_force(g, edge_limit))
            out.emplace_back(to_list(c.red), to_list(c.blue));
        return out;
    }, py::arg("graph"), py::arg("edge_limit") = 22);

    auto fx = m.def_submodule("fixtures", "seeded graph families");
    fx.def("cycle", &fixtures::cycle, py::arg("n"));
    fx.def("complete", &fixtures::complete, py::arg("n"));
    fx.def("path", &fixtures::path, py::arg("n"));
    fx.def("prism", &fixtures::prism);
    fx.def("prism_chain", &fixtures::prism_chain, py::arg("t"), py::arg("seed") = 0);
    fx.def("random_gnp", &fixtures::random_gnp, py::arg("n"), py::arg("p"), py::arg("seed") = 0);
    fx.def("grid_ladder", &fixtures::grid_ladder, py::arg("rows"), py::arg("cols"), py::arg("braced") = false);

    py::class_<CnfFormula>(m, "CnfFormula")
        .def(py::init([](int n, const std::vector<std::vector<int>>& clauses) {
                 CnfFormula f;
                 f.variable_count = n;
                 for (const auto& c : clauses) {
                     if (c.size() != 3)
                         throw ContractError("clauses must have exactly 3 literals");
                     Clause cl;
                     for (std::size_t i = 0; i < 3; ++i)
                         cl[i] = {std::abs(c[i]), c[i] < 0};
                     f.clauses.push_back(cl);
                 }
                 f.validate();
                 return f;
             }),
             py::arg("n"), py::arg("clauses"))
        .def_readonly("n", &CnfFormula::variable_count)
        .def_property_readonly("clauses",
                               [](const CnfFormula& f) {
                                   std::vector<std::vector<int>> out;
                                   for (const auto& c : f.clauses) {
                                       std::vector<int> lits;
                                       for (const auto& l : c)
                                           lits.push_back(l.negated ? -l.var : l.var);
                                       out.push_back(lits);
                                   }
                                   return out;
                               })
        .def("satisfied_by", &CnfFormula::satisfied_by, py::arg("assignment"))
        .def("to_dimacs", [](const CnfFormula& f) { return to_dimacs(f); });

    m.def("parse_dimacs", [](const std::string& text, bool pad) { return parse_dimacs(text, pad); }, py::arg("text"),
          py::arg("pad_clauses") = false);
    m.def("sat_brute_force", &solve_brute_force, py::arg("formula"), "a satisfying assignment or None");

    py::class_<ReductionArtifact>(m, "Reduction")
        .def_readonly("graph", &ReductionArtifact::graph)
        .def_readonly("formula", &ReductionArtifact::formula)
        .def_readonly("density_units", &ReductionArtifact::density_units)
        .def_property_readonly("edge_labels",
                               [](const ReductionArtifact& r) {
                                   std::vector<std::string> out;
                                   for (int l : r.edge_label)
                                       out.push_back(r.labels[static_cast<std::size_t>(l)].name());
                                   return out;
                               })
        .def_property_readonly("train_anchor",
                               [](const ReductionArtifact& r) {
                                   py::dict d;
                                   for (std::size_t l = 0; l < r.labels.size(); ++l)
                                       d[py::str(r.labels[l].name())] = r.train_anchor[l];
                                   return d;
                               })
        .def_property_readonly("gadgets",
                               [](const ReductionArtifact& r) {
                                   py::dict d;
                                   for (const auto& gr : r.gadgets)
                                       d[py::str(gr.name)] = to_list(gr.cycle);
                                   return d;
                               })
        .def("extend_for_density", [](const ReductionArtifact& r, std::int64_t num,
                                      std::int64_t den) { return extend_for_density(r, num, den); },
             py::arg("num"), py::arg("den"))
        .def("decode", [](const ReductionArtifact& r, const std::vector<int>& red) {
            NacColoring c{from_list(r.graph, red), r.graph.all_edges()};
            c.blue ^= c.red;
            return decode_assignment(r, c);
        }, py::arg("red"));

    m.def("build_reduction", &build_reduction, py::arg("formula"));
}
