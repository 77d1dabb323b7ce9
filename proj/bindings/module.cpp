#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "speccol/bounds.hpp"
#include "speccol/colouring.hpp"
#include "speccol/corpus.hpp"
#include "speccol/errors.hpp"
#include "speccol/expansion.hpp"
#include "speccol/hypergraph.hpp"
#include "speccol/io.hpp"
#include "speccol/laplacian.hpp"

namespace py = pybind11;
using namespace speccol;

namespace {

std::vector<std::vector<double>> matrix_to_rows(const Matrix& m) {
    std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

Matrix rows_to_matrix(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    const int c = n > 0 ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(n, c);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Graph graph_from_tuples(int n, const std::vector<std::tuple<int, int, double>>& edges) {
    std::vector<WeightedEdge> es;
    es.reserve(edges.size());
    for (const auto& [u, v, w] : edges) es.push_back({u, v, w});
    return Graph(n, es);
}

} // namespace

PYBIND11_MODULE(_speccol, m) {
    m.doc() = "normalized-Laplacian spectra, chromatic bounds, expansion parameters and linear hypergraphs";

    py::register_exception<Error>(m, "SpecError");

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_tuples), py::arg("n"), py::arg("edges"))
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 std::vector<WeightedEdge> es;
                 es.reserve(edges.size());
                 for (const auto& [u, v] : edges) es.push_back({u, v, 1.0});
                 return Graph(n, es);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def("degree", &Graph::degree)
        .def("weight", &Graph::weight)
        .def_property_readonly("degrees", &Graph::degrees)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("total_volume", &Graph::volume)
        .def("adjacency", [](const Graph& g) { return matrix_to_rows(g.adjacency()); })
        .def("component_count", &Graph::component_count)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<Partition>(m, "Partition")
        .def(py::init<std::vector<int>, int>(), py::arg("assignment"), py::arg("k"))
        .def(py::init(&Partition::from_assignment), py::arg("assignment"))
        .def_property_readonly("k", &Partition::class_count)
        .def_property_readonly("assignment", &Partition::assignment)
        .def("classes", &Partition::classes)
        .def("__len__", &Partition::size)
        .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
        .def("__repr__", [](const Partition& p) {
            return "<Partition n=" + std::to_string(p.size()) + " k=" + std::to_string(p.class_count()) + ">";
        });

    py::class_<SymmetricMatrix>(m, "SymmetricMatrix")
        .def(py::init([](const std::vector<std::vector<double>>& rows) { return SymmetricMatrix(rows_to_matrix(rows)); }),
             py::arg("entries"))
        .def_property_readonly("order", &SymmetricMatrix::order)
        .def("entries", [](const SymmetricMatrix& s) { return matrix_to_rows(s.entries()); });

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("eigenvalues", &Spectrum::eigenvalues)
        .def_property_readonly("has_eigenvectors", &Spectrum::has_eigenvectors)
        .def("eigenvectors", [](const Spectrum& s) { return matrix_to_rows(s.eigenvectors); });

    py::class_<InterlacingViolation>(m, "InterlacingViolation")
        .def_readonly("index", &InterlacingViolation::index)
        .def_readonly("lower", &InterlacingViolation::lower)
        .def_readonly("value", &InterlacingViolation::value)
        .def_readonly("upper", &InterlacingViolation::upper);

    py::class_<InterlacingReport>(m, "InterlacingReport")
        .def_readonly("holds", &InterlacingReport::holds)
        .def_readonly("tight", &InterlacingReport::tight)
        .def_readonly("tight_split_k", &InterlacingReport::tight_split_k)
        .def_readonly("violations", &InterlacingReport::violations);

    py::class_<QuotientGraph>(m, "QuotientGraph")
        .def_readonly("k", &QuotientGraph::k)
        .def_readonly("class_volumes", &QuotientGraph::class_volumes)
        .def("weights", [](const QuotientGraph& q) { return matrix_to_rows(q.weights); });

    py::class_<PerKEntry>(m, "PerKEntry")
        .def_readonly("k", &PerKEntry::k)
        .def_readonly("sigma_k_minus_1", &PerKEntry::sigma_k_minus_1)
        .def_readonly("qualifies", &PerKEntry::qualifies)
        .def_readonly("near_tie", &PerKEntry::near_tie);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("sigma_bound", &BoundReport::sigma_bound)
        .def_readonly("lambda_bound", &BoundReport::lambda_bound)
        .def_readonly("hoffman_bound", &BoundReport::hoffman_bound)
        .def_readonly("haemers_bound", &BoundReport::haemers_bound)
        .def_readonly("chi_exact", &BoundReport::chi_exact)
        .def_readonly("per_k_table", &BoundReport::per_k_table);

    py::class_<EquitabilityResult>(m, "EquitabilityResult")
        .def_readonly("equitable", &EquitabilityResult::equitable)
        .def_readonly("witness", &EquitabilityResult::witness);

    py::class_<DivisibilityResult>(m, "DivisibilityResult")
        .def_readonly("ok", &DivisibilityResult::ok)
        .def_readonly("witness", &DivisibilityResult::witness);

    py::class_<ColouringCertificate>(m, "ColouringCertificate")
        .def_readonly("partition", &ColouringCertificate::partition)
        .def_readonly("proper", &ColouringCertificate::proper)
        .def_readonly("equitable", &ColouringCertificate::equitable)
        .def_readonly("regular", &ColouringCertificate::regular)
        .def_readonly("divisibility_ok", &ColouringCertificate::divisibility_ok)
        .def_readonly("witness_kind", &ColouringCertificate::witness_kind)
        .def_readonly("witness", &ColouringCertificate::witness);

    py::class_<ColouringEnumeration>(m, "ColouringEnumeration")
        .def_readonly("colourings", &ColouringEnumeration::colourings)
        .def_readonly("truncated", &ColouringEnumeration::truncated);

    py::class_<ExpansionResult>(m, "ExpansionResult")
        .def_readonly("value", &ExpansionResult::value)
        .def_readonly("argpartition", &ExpansionResult::argpartition)
        .def_readonly("exact", &ExpansionResult::exact)
        .def_readonly("k", &ExpansionResult::k);

    py::class_<Corollary11Result>(m, "Corollary11Result")
        .def_readonly("hypothesis_met", &Corollary11Result::hypothesis_met)
        .def_readonly("passed", &Corollary11Result::passed)
        .def_readonly("has_regular_colouring", &Corollary11Result::has_regular_colouring)
        .def_readonly("sigma_k_minus_1", &Corollary11Result::sigma_k_minus_1)
        .def_readonly("lambda_max", &Corollary11Result::lambda_max);

    py::class_<LinearHypergraph>(m, "LinearHypergraph")
        .def(py::init<int, int, std::vector<std::vector<int>>>(), py::arg("n"), py::arg("m"), py::arg("hyperedges"))
        .def_property_readonly("vertex_count", &LinearHypergraph::vertex_count)
        .def_property_readonly("uniformity", &LinearHypergraph::uniformity)
        .def_property_readonly("edge_count", &LinearHypergraph::edge_count)
        .def_property_readonly("hyperedges", &LinearHypergraph::hyperedges)
        .def("__repr__", [](const LinearHypergraph& h) {
            return "<LinearHypergraph n=" + std::to_string(h.vertex_count()) + " m=" +
                   std::to_string(h.uniformity()) + " e=" + std::to_string(h.edge_count()) + ">";
        });

    py::class_<Theorem15Result>(m, "Theorem15Result")
        .def_readonly("hypothesis_met", &Theorem15Result::hypothesis_met)
        .def_readonly("passed", &Theorem15Result::passed)
        .def_readonly("lambda_max", &Theorem15Result::lambda_max)
        .def_readonly("target", &Theorem15Result::target);

    // graph_core
    m.def("volume", &volume, py::arg("g"), py::arg("s"));
    m.def("cut_weight", &cut_weight, py::arg("g"), py::arg("s"), py::arg("t"));
    m.def("is_proper_colouring", &is_proper_colouring, py::arg("g"), py::arg("p"));

    // eigensolve
    m.def("eigendecompose", &eigendecompose, py::arg("m"), py::arg("tol") = 1e-10,
          py::arg("with_eigenvectors") = true);
    m.def("verify_interlacing", &verify_interlacing, py::arg("big"), py::arg("small"), py::arg("tol") = 1e-9);

    // laplacian
    m.def("normalized_laplacian", &normalized_laplacian, py::arg("g"));
    m.def("adjacency_matrix", &adjacency_matrix, py::arg("g"));
    m.def("sigma", &sigma, py::arg("spectrum"), py::arg("k"));
    m.def("quotient_graph", &quotient_graph, py::arg("g"), py::arg("p"));
    m.def("quotient_laplacian", &quotient_laplacian, py::arg("q"));
    m.def("lift_matrix", [](const Graph& g, const Partition& p) { return matrix_to_rows(lift_matrix(g, p)); },
          py::arg("g"), py::arg("p"));
    m.def("commutation_residual", &commutation_residual, py::arg("g"), py::arg("p"));

    // bounds
    m.def("sigma_chromatic_bound", &sigma_chromatic_bound, py::arg("spectrum"));
    m.def("lambda_chromatic_bound", &lambda_chromatic_bound, py::arg("spectrum"));
    m.def("corollary1_residual", &corollary1_residual, py::arg("g"), py::arg("p"), py::arg("spectrum"));
    m.def("hoffman_bound", &hoffman_bound, py::arg("g"));
    m.def("haemers_bound", &haemers_bound, py::arg("g"));
    m.def("compare_bounds", &compare_bounds, py::arg("g"), py::arg("with_exact") = false,
          py::arg("exact_limit") = 24);

    // colouring
    m.def("exact_chromatic_number", &exact_chromatic_number, py::arg("g"), py::arg("vertex_limit") = 24);
    m.def("enumerate_proper_colourings", &enumerate_proper_colourings, py::arg("g"), py::arg("k"),
          py::arg("cap") = 1000000);
    m.def("is_equitable", &is_equitable, py::arg("g"), py::arg("p"), py::arg("tol") = 1e-9);
    m.def("is_regular_colouring", &is_regular_colouring, py::arg("g"), py::arg("p"));
    m.def("check_divisibility", &check_divisibility, py::arg("g"), py::arg("p"));
    m.def("greedy_colouring", &greedy_colouring, py::arg("g"), py::arg("order_seed") = 0);
    m.def("certify", &certify, py::arg("g"), py::arg("p"));

    // expansion
    m.def("gamma", static_cast<double (*)(const Graph&, const Partition&)>(&speccol::gamma), py::arg("g"),
          py::arg("p"));
    m.def("gamma_star", &gamma_star, py::arg("g"), py::arg("p"));
    m.def("psi_exact", &psi_exact, py::arg("g"), py::arg("k"), py::arg("vertex_limit") = 12);
    m.def("phi_exact", &phi_exact, py::arg("g"), py::arg("k"), py::arg("vertex_limit") = 12);
    m.def("phi_heuristic", &phi_heuristic, py::arg("g"), py::arg("k"), py::arg("seed") = 0);
    m.def("psi_heuristic", &psi_heuristic, py::arg("g"), py::arg("k"), py::arg("seed") = 0);
    m.def("check_lemma9", &check_lemma9, py::arg("g"), py::arg("p"), py::arg("tol") = 1e-9);
    m.def("check_theorem10", &check_theorem10, py::arg("g"), py::arg("k"), py::arg("vertex_limit") = 12,
          py::arg("tol") = 1e-9);
    m.def("check_corollary11", &check_corollary11, py::arg("g"), py::arg("k"), py::arg("tol") = 1e-9,
          py::arg("enum_cap") = 200000);

    // hypergraph
    m.def("underlying_graph", &underlying_graph, py::arg("h"));
    m.def("is_strong_colouring", &is_strong_colouring, py::arg("h"), py::arg("p"));
    m.def("check_lemma14", &check_lemma14, py::arg("h"), py::arg("tol") = 1e-9);
    m.def("check_theorem15", &check_theorem15, py::arg("h"), py::arg("tol") = 1e-9);
    m.def("generate_windmill", &generate_windmill, py::arg("m"), py::arg("e"));
    m.def("generate_random_linear", &generate_random_linear, py::arg("m"), py::arg("e"), py::arg("n"),
          py::arg("seed") = 0);

    // io
    m.def("parse_graph_file", [](const std::string& path) {
        auto pg = parse_graph_file(path);
        return py::make_tuple(std::move(pg.graph), pg.labels);
    });
    m.def("parse_hypergraph_file", [](const std::string& path) {
        auto ph = parse_hypergraph_file(path);
        return py::make_tuple(std::move(ph.hypergraph), ph.labels);
    });

    // ready-made graphs
    m.def("make_complete", &make_complete, py::arg("n"));
    m.def("make_cycle", &make_cycle, py::arg("n"));
    m.def("make_path", &make_path, py::arg("n"));
    m.def("make_star", &make_star, py::arg("leaves"));
    m.def("make_complete_bipartite", &make_complete_bipartite, py::arg("p"), py::arg("q"));
    m.def("make_petersen", &make_petersen);
}
