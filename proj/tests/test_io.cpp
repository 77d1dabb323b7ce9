#include "doctest.h"

#include <fstream>
#include <functional>
#include <sstream>

#include "speccol/errors.hpp"
#include "speccol/io.hpp"

using namespace speccol;

namespace {

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return errc::parse_error;
}

ParsedGraph graph_of(const std::string& text) {
    std::istringstream in(text);
    return parse_graph_stream(in, "<test>");
}

ParsedHypergraph hypergraph_of(const std::string& text) {
    std::istringstream in(text);
    return parse_hypergraph_stream(in, "<test>");
}

} // namespace

TEST_SUITE("io") {

    TEST_CASE("triangle") {
        const auto pg = graph_of("0 1\n1 2\n2 0\n");
        CHECK(pg.graph.order() == 3);
        CHECK(pg.graph.edge_count() == 3);
        CHECK(pg.labels == std::vector<long long>{0, 1, 2});
    }

    TEST_CASE("comments, blank lines and weights") {
        const auto pg = graph_of("# a comment\n\n0 1 2.5   # trailing comment\n1 2\n");
        CHECK(pg.graph.weight(0, 1) == 2.5);
        CHECK(pg.graph.weight(1, 2) == 1.0);
    }

    TEST_CASE("labels map densely in first-appearance order") {
        const auto pg = graph_of("5 9\n9 7\n");
        CHECK(pg.graph.order() == 3);
        CHECK(pg.labels == std::vector<long long>{5, 9, 7});
        CHECK(pg.graph.weight(0, 1) == 1.0); // 5-9
        CHECK(pg.graph.weight(1, 2) == 1.0); // 9-7
        CHECK(pg.graph.weight(0, 2) == 0.0);
    }

    TEST_CASE("parse errors") {
        CHECK(code_of([] { graph_of("a b 2.5\n"); }) == errc::parse_error);
        CHECK(code_of([] { graph_of("0\n"); }) == errc::parse_error);
        CHECK(code_of([] { graph_of("0 1 2 3\n"); }) == errc::parse_error);
        CHECK(code_of([] { graph_of("-1 2\n"); }) == errc::parse_error);
        CHECK(code_of([] { graph_of("0 1 x\n"); }) == errc::parse_error);
        CHECK(code_of([] { graph_of(""); }) == errc::parse_error);
        CHECK(code_of([] { graph_of("0 0\n"); }) == errc::loop_edge);
        CHECK(code_of([] { graph_of("0 1 0\n"); }) == errc::nonpositive_weight);
        CHECK(code_of([] { graph_of("0 1 -2\n"); }) == errc::nonpositive_weight);
        CHECK(code_of([] { graph_of("0 1 inf\n"); }) == errc::parse_error);
        CHECK(code_of([] { graph_of("0 1 nan\n"); }) == errc::parse_error);
    }

    TEST_CASE("duplicate edges carry the line number") {
        try {
            graph_of("0 1\n1 2\n0 1\n");
            FAIL("expected DuplicateEdge");
        } catch (const Error& e) {
            CHECK(e.code() == errc::duplicate_edge);
            CHECK(std::string(e.what()).find(":3") != std::string::npos);
        }
        // the reversed orientation is the same unordered pair
        CHECK(code_of([] { graph_of("0 1\n1 0\n"); }) == errc::duplicate_edge);
    }

    TEST_CASE("hypergraph parsing") {
        const auto ph = hypergraph_of("0 1 2\n0 3 4\n");
        CHECK(ph.hypergraph.uniformity() == 3);
        CHECK(ph.hypergraph.edge_count() == 2);
        CHECK(ph.hypergraph.vertex_count() == 5);
        CHECK(code_of([] { hypergraph_of("0 1 2\n0 1 3\n"); }) == errc::not_linear);
        CHECK(code_of([] { hypergraph_of("0 1 2\n3 4\n"); }) == errc::not_uniform);
        CHECK(code_of([] { hypergraph_of("x y z\n"); }) == errc::parse_error);
        CHECK(code_of([] { hypergraph_of("# nothing\n"); }) == errc::parse_error);
    }

    TEST_CASE("file round trip and digest") {
        const std::string path = "io_test_tmp_graph.txt";
        {
            std::ofstream out(path);
            out << "0 1\n1 2\n2 0\n";
        }
        const auto pg = parse_graph_file(path);
        CHECK(pg.graph.order() == 3);
        const std::string d1 = file_digest(path);
        CHECK(d1 == file_digest(path));
        CHECK(d1.size() == 16);
        CHECK(fnv1a_hex("") == "cbf29ce484222325");
        std::remove(path.c_str());
        CHECK(code_of([&] { parse_graph_file(path); }) == errc::parse_error);
    }
}
