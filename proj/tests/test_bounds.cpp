#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "speccol/bounds.hpp"
#include "speccol/colouring.hpp"
#include "speccol/corpus.hpp"
#include "speccol/errors.hpp"
#include "speccol/hypergraph.hpp"

using namespace speccol;

namespace {

Spectrum laplacian_spectrum(const Graph& g) { return eigendecompose(normalized_laplacian(g), 1e-10, false); }

} // namespace

TEST_SUITE("bounds") {

    TEST_CASE("sigma bound closed forms") {
        for (int n = 2; n <= 8; ++n) CHECK(sigma_chromatic_bound(laplacian_spectrum(make_complete(n))) == n);
        CHECK(sigma_chromatic_bound(laplacian_spectrum(Graph(2, {{0, 1, 1.0}}))) == 2);
        CHECK(sigma_chromatic_bound(laplacian_spectrum(make_petersen())) == 3);
        CHECK(sigma_chromatic_bound(laplacian_spectrum(make_cycle(5))) == 3);
    }

    TEST_CASE("spectra that are not laplacian spectra are rejected") {
        Spectrum bad;
        bad.eigenvalues = {0.5, 1.0};
        CHECK_THROWS_AS(sigma_chromatic_bound(bad), Error);
        bad.eigenvalues = {0.0, 2.5};
        CHECK_THROWS_AS(sigma_chromatic_bound(bad), Error);
        bad.eigenvalues = {-0.1, 1.0};
        CHECK_THROWS_AS(sigma_chromatic_bound(bad), Error);
    }

    TEST_CASE("lambda bound") {
        CHECK(lambda_chromatic_bound(laplacian_spectrum(make_cycle(6))) == 2);
        CHECK(lambda_chromatic_bound(laplacian_spectrum(make_complete_bipartite(3, 4))) == 2);
        for (int n = 3; n <= 8; ++n) CHECK(lambda_chromatic_bound(laplacian_spectrum(make_complete(n))) == n);
        CHECK(lambda_chromatic_bound(laplacian_spectrum(make_petersen())) == 3);
        Spectrum degenerate;
        degenerate.eigenvalues = {0.0, 0.5};
        CHECK_THROWS_AS(lambda_chromatic_bound(degenerate), Error);
    }

    TEST_CASE("corollary 1 residual vanishes on the tight cases") {
        const Graph c4 = make_cycle(4);
        CHECK(std::abs(corollary1_residual(c4, Partition({0, 1, 0, 1}, 2), laplacian_spectrum(c4))) <= 1e-9);
        const Graph k3 = make_complete(3);
        CHECK(std::abs(corollary1_residual(k3, Partition({0, 1, 1}, 2), laplacian_spectrum(k3))) <= 1e-9);
    }

    TEST_CASE("corollary 1 residual is nonnegative on random partitions") {
        std::mt19937_64 rng(37);
        for (int gi = 0; gi < 30; ++gi) {
            const int n = 4 + gi % 7;
            const Graph g = random_graph(n, 0.3 + 0.2 * (gi % 3), rng, gi % 5 == 4);
            const Spectrum s = laplacian_spectrum(g);
            for (int t = 0; t < 7; ++t) {
                const int k = 2 + static_cast<int>(rng() % (n - 1));
                CHECK(corollary1_residual(g, random_partition(n, k, rng), s) >= -1e-9);
            }
        }
    }

    TEST_CASE("hoffman comparator") {
        for (int n = 2; n <= 8; ++n) CHECK(hoffman_bound(make_complete(n)) == n);
        CHECK(hoffman_bound(make_petersen()) == 3);
        // C_5 adjacency eigenvalues are 2 and 2cos(2 pi k/5)
        const double golden = (std::sqrt(5.0) + 1.0) / 2.0;
        const int expected = static_cast<int>(std::ceil(1.0 + 2.0 / golden - 1e-9));
        CHECK(expected == 3);
        CHECK(hoffman_bound(make_cycle(5)) == 3);
    }

    TEST_CASE("haemers comparator") {
        for (int n = 2; n <= 8; ++n) CHECK(haemers_bound(make_complete(n)) == n);
        CHECK(haemers_bound(make_complete_bipartite(3, 4)) == 2);
        CHECK(haemers_bound(make_cycle(4)) == 2);
        CHECK(haemers_bound(make_petersen()) == 3);
    }

    TEST_CASE("compare_bounds on the named graphs") {
        const BoundReport pet = compare_bounds(make_petersen(), true);
        CHECK(pet.sigma_bound == 3);
        CHECK(pet.lambda_bound == 3);
        CHECK(pet.hoffman_bound == 3);
        CHECK(pet.haemers_bound == 3);
        CHECK(pet.chi_exact == 3);

        const BoundReport k7 = compare_bounds(make_complete(7), true);
        CHECK(k7.sigma_bound == 7);
        CHECK(k7.lambda_bound == 7);
        CHECK(k7.hoffman_bound == 7);
        CHECK(k7.haemers_bound == 7);
        CHECK(k7.chi_exact == 7);

        const Graph windmill = underlying_graph(generate_windmill(3, 3));
        const BoundReport w = compare_bounds(windmill, true);
        CHECK(w.chi_exact == 3);
        CHECK(w.sigma_bound == 3);
    }

    TEST_CASE("per-k table is consistent with a direct rescan") {
        const Spectrum s = laplacian_spectrum(make_petersen());
        const auto table = sigma_per_k_table(s);
        REQUIRE(table.size() == 9);
        for (const auto& row : table) {
            CHECK(row.sigma_k_minus_1 == doctest::Approx(sigma(s, row.k - 1)).epsilon(1e-12));
            CHECK(row.qualifies == (row.sigma_k_minus_1 < row.k - 1e-9));
        }
        CHECK(table[1].qualifies); // sigma_1 = 5/3 < 2
        CHECK_FALSE(table[2].qualifies); // sigma_2 = 10/3 >= 3
    }

    TEST_CASE("all four bounds are sound on small random graphs") {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 4 + trial % 6;
            const Graph g = random_graph(n, 0.3 + 0.2 * (trial % 3), rng);
            const int chi = oracles::brute_chromatic(g);
            const Spectrum s = laplacian_spectrum(g);
            CHECK(sigma_chromatic_bound(s) <= chi);
            CHECK(lambda_chromatic_bound(s) <= chi);
            CHECK(hoffman_bound(g) <= chi);
            CHECK(haemers_bound(g) <= chi);
        }
    }
}
