#include "doctest.h"

#include <random>

#include "speccol/corpus.hpp"
#include "speccol/errors.hpp"

using namespace speccol;

TEST_SUITE("corpus") {

    TEST_CASE("known counts up to isomorphism") {
        CHECK(nonisomorphic_graph_count(1) == 1);
        CHECK(nonisomorphic_graph_count(2) == 2);
        CHECK(nonisomorphic_graph_count(3) == 4);
        CHECK(nonisomorphic_graph_count(4) == 11);
        CHECK(nonisomorphic_graph_count(5) == 34);
        CHECK(nonisomorphic_graph_count(6) == 156);
        CHECK(nonisomorphic_graph_count(7) == 1044);
    }

    TEST_CASE("connected counts") {
        CHECK(connected_graphs(2).size() == 1);
        CHECK(connected_graphs(3).size() == 2);
        CHECK(connected_graphs(4).size() == 6);
        CHECK(connected_graphs(5).size() == 21);
        CHECK(connected_graphs(6).size() == 112);
        CHECK(connected_graphs(7).size() == 853);
        for (const Graph& g : connected_graphs(5)) {
            CHECK(g.order() == 5);
            CHECK(g.component_count() == 1);
        }
    }

    TEST_CASE("min-degree-one corpus includes disconnected graphs") {
        const auto graphs = min_degree_one_graphs(4);
        // on four vertices: 2K_2, P_4, K_{1,3}, paw, C_4, diamond, K_4
        CHECK(graphs.size() == 7);
        bool found_disconnected = false;
        for (const Graph& g : graphs) {
            for (int v = 0; v < g.order(); ++v) CHECK(g.degree(v) >= 1.0);
            if (g.component_count() > 1) found_disconnected = true;
        }
        CHECK(found_disconnected);
    }

    TEST_CASE("petersen shape") {
        const Graph p = make_petersen();
        CHECK(p.order() == 10);
        CHECK(p.edge_count() == 15);
        for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3.0);
        CHECK(p.component_count() == 1);
    }

    TEST_CASE("random graphs never leave isolated vertices and are seed-stable") {
        std::mt19937_64 a(3), b(3);
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 3 + trial;
            const Graph ga = random_graph(n, 0.2, a);
            const Graph gb = random_graph(n, 0.2, b);
            for (int v = 0; v < n; ++v) {
                CHECK(ga.degree(v) > 0.0);
                CHECK(ga.degree(v) == gb.degree(v));
            }
        }
    }

    TEST_CASE("random partitions cover every class") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 4 + trial % 10;
            const int k = 2 + trial % 4;
            if (k > n) continue;
            const Partition p = random_partition(n, k, rng);
            CHECK(p.class_count() == k);
        }
    }

    TEST_CASE("corpus bounds") {
        CHECK_THROWS_AS(connected_graphs(8), Error);
        CHECK_THROWS_AS(connected_graphs(1), Error);
        CHECK_THROWS_AS(nonisomorphic_graph_count(8), Error);
    }
}
