#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "speccol/colouring.hpp"
#include "speccol/corpus.hpp"
#include "speccol/errors.hpp"
#include "speccol/expansion.hpp"
#include "speccol/laplacian.hpp"
#include "speccol/partitions.hpp"

using namespace speccol;

TEST_SUITE("expansion") {

    TEST_CASE("gamma and gamma_star on fixed partitions") {
        CHECK(gamma(Graph(2, {{0, 1, 1.0}}), Partition({0, 1}, 2)) == 1.0);
        CHECK(gamma(make_complete(3), Partition({0, 1, 2}, 3)) == 0.5);
        CHECK(gamma(make_cycle(4), Partition({0, 1, 0, 1}, 2)) == 1.0);
        CHECK(gamma_star(Graph(2, {{0, 1, 1.0}}), Partition({0, 1}, 2)) == 1.0);
        CHECK(gamma_star(make_cycle(4), Partition({0, 1, 1, 1}, 2)) == 1.0);
        CHECK(gamma_star(make_cycle(4), Partition({0, 1, 0, 1}, 2)) == 1.0);
        // a pair of classes with no edges between them gives gamma zero
        CHECK(gamma(make_path(3), Partition({0, 1, 2}, 3)) == 0.0);
        CHECK_THROWS_AS(gamma(make_cycle(4), Partition({0, 0, 0, 0}, 1)), Error);
    }

    TEST_CASE("psi_exact") {
        CHECK(psi_exact(Graph(2, {{0, 1, 1.0}}), 2).value == 1.0);
        CHECK(psi_exact(make_complete(3), 3).value == 0.5);
        const auto pet = psi_exact(make_petersen(), 2);
        CHECK(pet.exact);
        CHECK(pet.value == doctest::Approx(oracles::psi2_subset_oracle(make_petersen())).epsilon(1e-12));
        CHECK_THROWS_AS(psi_exact(make_petersen(), 2, 9), Error);
    }

    TEST_CASE("phi_exact") {
        CHECK(phi_exact(Graph(2, {{0, 1, 1.0}}), 2).value == 1.0);
        const auto c4 = phi_exact(make_cycle(4), 2);
        CHECK(c4.value == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(gamma_star(make_cycle(4), c4.argpartition) == doctest::Approx(0.5).epsilon(1e-12));
        // direct enumeration of the 7 bipartitions of K_4: singleton splits
        // give 3/3 = 1, balanced splits 4/6 = 2/3
        CHECK(phi_exact(make_complete(4), 2).value == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    }

    TEST_CASE("phi_exact at k=2 equals the subset-loop Cheeger oracle") {
        std::mt19937_64 rng(59);
        for (int n = 2; n <= 6; ++n)
            for (const Graph& g : connected_graphs(n))
                CHECK(phi_exact(g, 2).value ==
                      doctest::Approx(oracles::cheeger_subset_oracle(g)).epsilon(1e-12));
        for (int trial = 0; trial < 10; ++trial) {
            const Graph g = random_graph(8 + trial % 3, 0.4, rng);
            CHECK(phi_exact(g, 2).value ==
                  doctest::Approx(oracles::cheeger_subset_oracle(g)).epsilon(1e-12));
        }
    }

    TEST_CASE("heuristics bound the exact values from the right side") {
        const Graph c4 = make_cycle(4);
        double best = 2.0;
        for (unsigned long long seed = 0; seed < 10; ++seed) {
            const auto h = phi_heuristic(c4, 2, seed);
            CHECK(h.value <= 1.0 + 1e-9);
            CHECK_FALSE(h.exact);
            best = std::min(best, h.value);
        }
        CHECK(best == doctest::Approx(0.5).epsilon(1e-12));

        std::mt19937_64 rng(61);
        std::vector<Graph> graphs{make_cycle(6), make_petersen(), make_complete(5), random_graph(8, 0.5, rng)};
        for (const Graph& g : graphs)
            for (int k = 2; k <= 3; ++k)
                for (unsigned long long seed = 0; seed < 4; ++seed) {
                    const double phi = phi_exact(g, k).value;
                    const double psi = psi_exact(g, k).value;
                    const auto hp = phi_heuristic(g, k, seed);
                    const auto hs = psi_heuristic(g, k, seed);
                    CHECK(hp.value >= phi - 1e-9);
                    CHECK(hs.value <= psi + 1e-9);
                    CHECK(hp.argpartition.class_count() == k);
                    CHECK(hs.argpartition.class_count() == k);
                    CHECK(hp.value == doctest::Approx(gamma_star(g, hp.argpartition)).epsilon(1e-12));
                    CHECK(hs.value == doctest::Approx(gamma(g, hs.argpartition)).epsilon(1e-12));
                }

        // K_3 with k=3 has a single partition, both heuristics must hit it
        CHECK(psi_heuristic(make_complete(3), 3, 0).value == doctest::Approx(0.5).epsilon(1e-12));

        // k = n leaves only the singleton partition
        const Graph c5 = make_cycle(5);
        CHECK(phi_heuristic(c5, 5, 2).value == doctest::Approx(phi_exact(c5, 5).value).epsilon(1e-12));
        CHECK(psi_heuristic(c5, 5, 2).value == doctest::Approx(psi_exact(c5, 5).value).epsilon(1e-12));
    }

    TEST_CASE("lemma 9 sandwich") {
        CHECK(check_lemma9(make_cycle(4), Partition({0, 1, 0, 1}, 2)));
        CHECK(check_lemma9(make_complete(3), Partition({0, 1, 2}, 3)));
        std::mt19937_64 rng(67);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 4 + trial % 9;
            const Graph g = random_graph(n, 0.3 + 0.2 * (trial % 3), rng, trial % 5 == 4);
            const int k = 2 + static_cast<int>(rng() % std::min(5, n - 1));
            CHECK(check_lemma9(g, random_partition(n, k, rng)));
        }
    }

    TEST_CASE("theorem 10 inequalities") {
        // C_4 spectrum is {0, 1, 1, 2}: psi_2 * 2 = 2 = lambda_3 and
        // phi_2 * 2 = 1 = lambda_1
        CHECK(check_theorem10(make_cycle(4), 2));
        for (int n = 3; n <= 6; ++n) CHECK(check_theorem10(make_complete(n), n));
        std::mt19937_64 rng(71);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 4 + trial % 7;
            const Graph g = random_graph(n, 0.4 + 0.2 * (trial % 2), rng);
            CHECK(check_theorem10(g, 2 + trial % 2));
        }
    }

    TEST_CASE("corollary 11") {
        const auto k5 = check_corollary11(make_complete(5), 5);
        CHECK(k5.hypothesis_met);
        CHECK(k5.passed);

        const auto c6 = check_corollary11(make_cycle(6), 2);
        CHECK(c6.hypothesis_met);
        CHECK(c6.passed);
        CHECK(c6.lambda_max == doctest::Approx(2.0).epsilon(1e-9));

        // Petersen: sigma_2 = 10/3 != 3, so the hypothesis fails and the
        // check reports rather than fails
        const auto pet = check_corollary11(make_petersen(), 3);
        CHECK_FALSE(pet.hypothesis_met);
        CHECK(pet.passed);
    }

    TEST_CASE("lemma 7 bound and its equality characterisation") {
        std::vector<Graph> corpus;
        for (int n = 2; n <= 6; ++n)
            for (const Graph& g : connected_graphs(n)) corpus.push_back(g);
        corpus.push_back(make_complete(8));
        corpus.push_back(make_cycle(8));
        for (const Graph& g : corpus) {
            const int n = g.order();
            for_each_partition(n, [&](const std::vector<int>& assign, int k) {
                if (k < 2) return;
                const Partition p(assign, k);
                const QuotientGraph q = quotient_graph(g, p);
                const double value = gamma(g, p);
                const double bound = 1.0 / (k - 1);
                CHECK(value <= bound + 1e-12);

                // equality iff both proof inequalities are tight: the
                // smallest cut equals Vol(G)/(k(k-1)) (forcing equal cuts
                // and no internal edges) and the largest volume equals
                // Vol(G)/k; integer weights keep this exact
                double min_cut = q.weights(0, 1), max_vol = 0.0;
                for (int i = 0; i < k; ++i) {
                    for (int j = i + 1; j < k; ++j) min_cut = std::min(min_cut, q.weights(i, j));
                    max_vol = std::max(max_vol, q.class_volumes[i]);
                }
                const bool tight = min_cut * k * (k - 1) == g.volume() && max_vol * k == g.volume();
                const bool equality = std::abs(value - bound) <= 1e-12;
                CHECK(equality == tight);
            });
        }
    }

    TEST_CASE("lemma 8 bound on proper colourings") {
        for (int n = 2; n <= 6; ++n)
            for (const Graph& g : connected_graphs(n))
                for_each_partition(g.order(), [&](const std::vector<int>& assign, int k) {
                    if (k < 2) return;
                    const Partition p(assign, k);
                    if (!is_proper_colouring(g, p)) return;
                    const double value = gamma_star(g, p);
                    const double bound = 1.0 / (k - 1);
                    CHECK(value >= bound - 1e-12);

                    // mirrored equality case: largest cut hits the average
                    // and the smallest volume hits Vol(G)/k
                    const QuotientGraph q = quotient_graph(g, p);
                    double max_cut = q.weights(0, 1), min_vol = q.class_volumes[0];
                    for (int i = 0; i < k; ++i) {
                        for (int j = i + 1; j < k; ++j) max_cut = std::max(max_cut, q.weights(i, j));
                        min_vol = std::min(min_vol, q.class_volumes[i]);
                    }
                    const bool tight = max_cut * k * (k - 1) == g.volume() && min_vol * k == g.volume();
                    CHECK((std::abs(value - bound) <= 1e-12) == tight);
                });
    }

    TEST_CASE("psi_k never exceeds 1/(k-1)") {
        for (int n = 2; n <= 6; ++n)
            for (const Graph& g : connected_graphs(n))
                for (int k = 2; k <= g.order(); ++k)
                    CHECK(psi_exact(g, k).value <= 1.0 / (k - 1) + 1e-12);
    }
}
