#include "speccol/corpus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "speccol/bounds.hpp"
#include "speccol/colouring.hpp"
#include "speccol/errors.hpp"
#include "speccol/expansion.hpp"
#include "speccol/hypergraph.hpp"
#include "speccol/laplacian.hpp"
#include "speccol/partitions.hpp"

namespace speccol {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

// ---- graphs on <= 7 vertices up to isomorphism -------------------------
//
// Level n is built from level n-1 by attaching one vertex with every
// possible neighbourhood and reducing to the minimum adjacency code over
// all vertex permutations.

using Code = std::uint32_t;
using Rows = std::array<std::uint8_t, 8>; // neighbour bitmask per vertex

std::vector<std::array<int, 8>> permutations_of(int n) {
    std::vector<std::array<int, 8>> out;
    std::array<int, 8> p{};
    std::iota(p.begin(), p.begin() + n, 0);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + n));
    return out;
}

Rows decode_rows(Code code, int n) {
    Rows rows{};
    int bit = n * (n - 1) / 2 - 1;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, --bit)
            if ((code >> bit) & 1u) {
                rows[i] |= static_cast<std::uint8_t>(1u << j);
                rows[j] |= static_cast<std::uint8_t>(1u << i);
            }
    return rows;
}

Code canonical_code(const Rows& rows, int n, const std::vector<std::array<int, 8>>& perms) {
    const int bits = n * (n - 1) / 2;
    Code best = std::numeric_limits<Code>::max();
    for (const auto& p : perms) {
        Code v = 0;
        bool worse = false;
        int bit = bits - 1;
        for (int j = 1; j < n && !worse; ++j)
            for (int i = 0; i < j; ++i, --bit) {
                const Code b = (rows[p[i]] >> p[j]) & 1u;
                v |= b << bit;
                if ((v >> bit) > (best >> bit)) {
                    worse = true;
                    break;
                }
            }
        if (!worse && v < best) best = v;
    }
    return best;
}

const std::vector<std::vector<Code>>& all_graph_codes() {
    static const std::vector<std::vector<Code>> levels = [] {
        std::vector<std::vector<Code>> lv(8);
        lv[1] = {0};
        for (int n = 2; n <= 7; ++n) {
            const auto perms = permutations_of(n);
            std::unordered_set<Code> seen;
            for (Code base : lv[n - 1]) {
                const Rows rows = decode_rows(base, n - 1);
                for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                    Rows grown = rows;
                    grown[n - 1] = static_cast<std::uint8_t>(mask);
                    for (int i = 0; i < n - 1; ++i)
                        if ((mask >> i) & 1u) grown[i] |= static_cast<std::uint8_t>(1u << (n - 1));
                    seen.insert(canonical_code(grown, n, perms));
                }
            }
            lv[n].assign(seen.begin(), seen.end());
            std::sort(lv[n].begin(), lv[n].end());
        }
        return lv;
    }();
    return levels;
}

bool rows_connected(const Rows& rows, int n) {
    std::uint8_t visited = 1, frontier = 1;
    while (frontier) {
        std::uint8_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1u) next |= rows[v];
        next &= static_cast<std::uint8_t>(~visited);
        visited |= next;
        frontier = next;
    }
    return visited == static_cast<std::uint8_t>((1u << n) - 1);
}

bool rows_min_degree_one(const Rows& rows, int n) {
    for (int v = 0; v < n; ++v)
        if (rows[v] == 0) return false;
    return true;
}

Graph graph_from_rows(const Rows& rows, int n) {
    std::vector<WeightedEdge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((rows[i] >> j) & 1u) edges.push_back({i, j, 1.0});
    return Graph(n, edges);
}

double gamma_of(const QuotientGraph& q, bool star) {
    double min_cut = kInf, max_cut = -kInf;
    for (int i = 0; i < q.k; ++i)
        for (int j = i + 1; j < q.k; ++j) {
            min_cut = std::min(min_cut, q.weights(i, j));
            max_cut = std::max(max_cut, q.weights(i, j));
        }
    double min_vol = kInf, max_vol = 0.0;
    for (double v : q.class_volumes) {
        min_vol = std::min(min_vol, v);
        max_vol = std::max(max_vol, v);
    }
    return star ? max_cut / min_vol : min_cut / max_vol;
}

Spectrum laplacian_spectrum(const Graph& g) { return eigendecompose(normalized_laplacian(g), 1e-10, false); }

} // namespace

Graph make_complete(int n) {
    std::vector<WeightedEdge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
    return Graph(n, edges);
}

Graph make_cycle(int n) {
    std::vector<WeightedEdge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
    return Graph(n, edges);
}

Graph make_path(int n) {
    std::vector<WeightedEdge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    return Graph(n, edges);
}

Graph make_star(int leaves) {
    std::vector<WeightedEdge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
    return Graph(leaves + 1, edges);
}

Graph make_complete_bipartite(int p, int q) {
    std::vector<WeightedEdge> edges;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) edges.push_back({i, p + j, 1.0});
    return Graph(p + q, edges);
}

Graph make_petersen() {
    std::vector<WeightedEdge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5, 1.0});         // outer cycle
        edges.push_back({5 + i, 5 + (i + 2) % 5, 1.0}); // inner pentagram
        edges.push_back({i, 5 + i, 1.0});               // spokes
    }
    return Graph(10, edges);
}

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng, bool random_weights) {
    static constexpr double kWeights[4] = {0.5, 1.0, 2.0, 3.5};
    std::vector<WeightedEdge> edges;
    std::vector<char> touched(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit_uniform(rng) < edge_probability) {
                const double w = random_weights ? kWeights[rng() % 4] : 1.0;
                edges.push_back({i, j, w});
                touched[i] = touched[j] = 1;
            }
    for (int v = 0; v < n; ++v)
        if (!touched[v]) {
            const int u = (v + 1 + uniform_int(rng, 0, n - 2)) % n;
            const double w = random_weights ? kWeights[rng() % 4] : 1.0;
            edges.push_back({v, u, w});
            touched[v] = touched[u] = 1;
        }
    return Graph(n, edges);
}

Partition random_partition(int n, int k, std::mt19937_64& rng) {
    std::vector<int> assign(n);
    for (int v = 0; v < n; ++v) assign[v] = uniform_int(rng, 0, k - 1);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng() % static_cast<unsigned long long>(i + 1)]);
    for (int c = 0; c < k; ++c) assign[order[c]] = c; // every class nonempty
    return Partition(std::move(assign), k);
}

const std::vector<Graph>& connected_graphs(int n) {
    if (n < 2 || n > 7) fail(errc::too_large, "connected corpus covers 2..7 vertices");
    static const std::array<std::vector<Graph>, 8> cache = [] {
        std::array<std::vector<Graph>, 8> out;
        for (int m = 2; m <= 7; ++m)
            for (Code code : all_graph_codes()[m]) {
                const Rows rows = decode_rows(code, m);
                if (rows_connected(rows, m)) out[m].push_back(graph_from_rows(rows, m));
            }
        return out;
    }();
    return cache[n];
}

std::vector<Graph> min_degree_one_graphs(int n) {
    if (n < 2 || n > 7) fail(errc::too_large, "corpus covers 2..7 vertices");
    std::vector<Graph> out;
    for (Code code : all_graph_codes()[n]) {
        const Rows rows = decode_rows(code, n);
        if (rows_min_degree_one(rows, n)) out.push_back(graph_from_rows(rows, n));
    }
    return out;
}

long long nonisomorphic_graph_count(int n) {
    if (n < 1 || n > 7) fail(errc::too_large, "enumeration covers 1..7 vertices");
    return static_cast<long long>(all_graph_codes()[n].size());
}

namespace suite {

SuiteCheck spectral_correctness(double tol) {
    SuiteCheck c;
    c.name = "spectral-correctness";
    for (int n = 2; n <= 10; ++n) {
        const Spectrum s = laplacian_spectrum(make_complete(n));
        ++c.instances;
        bool ok = std::abs(s.eigenvalues[0]) <= tol;
        const double target = static_cast<double>(n) / (n - 1);
        for (int i = 1; i < n; ++i) ok = ok && std::abs(s.eigenvalues[i] - target) <= tol;
        if (!ok) ++c.violations;
    }
    for (int p = 1; p <= 5; ++p)
        for (int q = p; q <= 5; ++q) {
            ++c.instances;
            const Spectrum s = laplacian_spectrum(make_complete_bipartite(p, q));
            if (std::abs(s.eigenvalues.back() - 2.0) > tol) ++c.violations;
        }
    for (int n = 4; n <= 12; n += 2) {
        ++c.instances;
        const Spectrum s = laplacian_spectrum(make_cycle(n));
        if (std::abs(s.eigenvalues.back() - 2.0) > tol) ++c.violations;
    }
    c.pass = c.violations == 0;
    c.detail = std::to_string(c.instances) + " closed-form spectra";
    return c;
}

SuiteCheck bound_soundness(int random_count, unsigned long long seed) {
    SuiteCheck c;
    c.name = "theorem2-soundness";
    auto check = [&](const Graph& g) {
        ++c.instances;
        const int chi = exact_chromatic_number(g, 24);
        const Spectrum s = laplacian_spectrum(g);
        if (sigma_chromatic_bound(s) > chi) ++c.violations;
        if (lambda_chromatic_bound(s) > chi) ++c.violations;
        if (hoffman_bound(g) > chi) ++c.violations;
        if (haemers_bound(g) > chi) ++c.violations;
    };
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : connected_graphs(n)) check(g);
    for (int n = 8; n <= 10; ++n) check(make_complete(n));
    for (int n = 8; n <= 12; ++n) check(make_cycle(n));
    check(make_petersen());
    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_count; ++i) {
        const int n = uniform_int(rng, 4, 12);
        const double p = 0.25 + 0.25 * (i % 3);
        check(random_graph(n, p, rng));
    }
    c.pass = c.violations == 0;
    c.detail = std::to_string(c.instances) + " graphs, four bounds each";
    return c;
}

SuiteCheck bound_tightness() {
    SuiteCheck c;
    c.name = "sigma-bound-tightness";
    auto expect = [&](const Graph& g, int chi) {
        ++c.instances;
        if (sigma_chromatic_bound(laplacian_spectrum(g)) != chi) ++c.violations;
    };
    for (int n = 2; n <= 10; ++n) expect(make_complete(n), n);
    expect(make_petersen(), 3);
    expect(make_cycle(5), 3);
    c.pass = c.violations == 0;
    c.detail = "K_2..K_10, Petersen, C_5";
    return c;
}

SuiteCheck corollary1_residual_nonnegative(int max_n, double tol) {
    SuiteCheck c;
    c.name = "corollary1-residual";
    for (int n = 2; n <= max_n; ++n)
        for (const Graph& g : connected_graphs(n)) {
            const Spectrum s = laplacian_spectrum(g);
            for_each_partition(n, [&](const std::vector<int>& assign, int k) {
                ++c.instances;
                if (corollary1_residual(g, Partition(assign, k), s) < -tol) ++c.violations;
            });
        }
    c.pass = c.violations == 0;
    c.detail = std::to_string(c.instances) + " (graph, partition) pairs";
    return c;
}

SuiteCheck equitable_commutation_equivalence(int max_n, int random_count, unsigned long long seed, double tol) {
    SuiteCheck c;
    c.name = "lemma4-equivalence";
    auto agree = [&](const Graph& g, const Partition& p) {
        ++c.instances;
        const bool eq = is_equitable(g, p, tol).equitable;
        const bool res = commutation_residual(g, p) <= tol;
        if (eq != res) ++c.violations;
    };
    for (int n = 2; n <= max_n; ++n)
        for (const Graph& g : min_degree_one_graphs(n))
            for_each_partition(n, [&](const std::vector<int>& assign, int k) { agree(g, Partition(assign, k)); });
    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_count; ++i) {
        const int n = uniform_int(rng, 5, 15);
        const Graph g = random_graph(n, 0.3 + 0.2 * (i % 3), rng, i % 3 == 2);
        const int k = uniform_int(rng, 2, std::min(6, n));
        agree(g, random_partition(n, k, rng));
    }
    c.pass = c.violations == 0;
    c.detail = std::to_string(c.instances) + " (graph, partition) pairs";
    return c;
}

SuiteCheck interlacing_and_trace(int random_count, unsigned long long seed, double tol) {
    SuiteCheck c;
    c.name = "interlacing-and-quotient-trace";
    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_count; ++i) {
        const int n = uniform_int(rng, 4, 15);
        const Graph g = random_graph(n, 0.3 + 0.2 * (i % 3), rng, i % 4 == 3);
        const int k = uniform_int(rng, 2, std::min(7, n));
        const Partition p = random_partition(n, k, rng);
        ++c.instances;
        const Spectrum big = laplacian_spectrum(g);
        const Spectrum small = eigendecompose(quotient_laplacian(quotient_graph(g, p)), 1e-10, false);
        if (!verify_interlacing(big, small, tol).holds) ++c.violations;
        if (i % 2 == 0) {
            ++c.instances;
            const Partition col = greedy_colouring(g, seed + i);
            const SymmetricMatrix ql = quotient_laplacian(quotient_graph(g, col));
            if (std::abs(ql.entries().trace() - col.class_count()) > tol) ++c.violations;
        }
    }
    c.pass = c.violations == 0;
    c.detail = std::to_string(c.instances) + " random quotient checks";
    return c;
}

SuiteCheck partition_functional_bounds(double tol) {
    SuiteCheck c;
    c.name = "section4-functionals";
    std::vector<Graph> corpus;
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : connected_graphs(n)) corpus.push_back(g);
    corpus.push_back(make_complete(8));
    corpus.push_back(make_cycle(8));
    corpus.push_back(make_complete_bipartite(4, 4));
    corpus.push_back(make_star(7));
    std::mt19937_64 rng(99);
    for (int i = 0; i < 4; ++i) corpus.push_back(random_graph(8, 0.5, rng));

    for (const Graph& g : corpus) {
        const int n = g.order();
        const Spectrum full = laplacian_spectrum(g);
        std::vector<double> best_psi(n + 1, -kInf), best_phi(n + 1, kInf);
        for_each_partition(n, [&](const std::vector<int>& assign, int k) {
            if (k < 2) return;
            const Partition p(assign, k);
            const QuotientGraph q = quotient_graph(g, p);
            const double gv = gamma_of(q, false);
            const double gs = gamma_of(q, true);
            const double bound = 1.0 / (k - 1);
            ++c.instances;
            if (gv > bound + 1e-12) ++c.violations;                                  // Lemma 7
            if (is_proper_colouring(g, p) && gs < bound - 1e-12) ++c.violations;     // Lemma 8
            const Spectrum th = eigendecompose(quotient_laplacian(q), 1e-10, false); // Lemma 9
            if (!(k * gv <= th.eigenvalues[1] + tol && th.eigenvalues[k - 1] <= k * gs + tol)) ++c.violations;
            best_psi[k] = std::max(best_psi[k], gv);
            best_phi[k] = std::min(best_phi[k], gs);
        });
        for (int k = 2; k <= n; ++k) { // Theorem 10 per k
            if (best_psi[k] == -kInf) continue;
            ++c.instances;
            if (!(best_psi[k] * k <= full.eigenvalues[n - k + 1] + tol)) ++c.violations;
            if (!(best_phi[k] * k >= full.eigenvalues[k - 1] - tol)) ++c.violations;
        }
    }
    c.pass = c.violations == 0;
    c.detail = std::to_string(c.instances) + " partitions and (graph, k) pairs";
    return c;
}

SuiteCheck equality_case_consequences(double tol) {
    SuiteCheck c;
    c.name = "equality-case-colourings";
    struct Inst {
        Graph g;
        int k;
    };
    std::vector<Inst> corpus;
    for (int n = 2; n <= 10; ++n) corpus.push_back({make_complete(n), n});
    corpus.push_back({make_cycle(6), 2});
    corpus.push_back({make_cycle(6), 3});  // hypothesis fails, exercised vacuously
    corpus.push_back({make_cycle(4), 2});
    corpus.push_back({make_cycle(8), 2});
    corpus.push_back({make_complete_bipartite(3, 3), 2});
    corpus.push_back({make_petersen(), 3}); // hypothesis fails (lambda_max = 5/3)
    for (auto [m, e] : {std::pair{3, 2}, {3, 3}, {3, 5}, {4, 2}, {4, 4}, {5, 3}})
        corpus.push_back({underlying_graph(generate_windmill(m, e)), m});

    long long exercised = 0;
    for (const auto& [g, k] : corpus) {
        const Spectrum s = laplacian_spectrum(g);
        const double target = static_cast<double>(k) / (k - 1);
        const bool lambda_hyp = std::abs(s.eigenvalues.back() - target) <= tol;
        const ColouringEnumeration en = enumerate_proper_colourings(g, k, 200000);
        if (lambda_hyp && !en.colourings.empty()) {
            ++exercised;
            for (const Partition& p : en.colourings) {
                ++c.instances;
                if (!is_equitable(g, p, tol).equitable) ++c.violations;   // Theorem 6
                if (!is_regular_colouring(g, p)) ++c.violations;          // Theorem 12
                if (!check_divisibility(g, p).ok) ++c.violations;         // Corollary 13
            }
        }
        ++c.instances;
        if (!check_corollary11(g, k, tol).passed) ++c.violations;
    }
    c.pass = c.violations == 0;
    c.detail = std::to_string(exercised) + " instances met the hypothesis, " + std::to_string(c.instances) +
               " checks";
    return c;
}

SuiteCheck hypergraph_spectra(int random_count, unsigned long long seed, double tol) {
    SuiteCheck c;
    c.name = "hypergraph-spectra";
    auto check = [&](const LinearHypergraph& h) {
        ++c.instances;
        if (!check_lemma14(h, tol)) ++c.violations;
        if (!check_theorem15(h, tol).passed) ++c.violations;
    };
    for (int m = 3; m <= 5; ++m)
        for (int e = 1; e <= 5; ++e) check(generate_windmill(m, e));
    // non-windmill instances with e = m hyperedges and n > e
    check(LinearHypergraph(6, 3, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}}));
    check(LinearHypergraph(10, 4, {{0, 1, 2, 3}, {0, 4, 5, 6}, {1, 4, 7, 8}, {2, 5, 7, 9}}));
    check(LinearHypergraph(11, 4, {{0, 1, 2, 3}, {0, 4, 5, 6}, {0, 7, 8, 9}, {1, 4, 7, 10}}));
    for (int i = 0; i < random_count; ++i) {
        const int m = 3 + i % 3;
        const int e = 2 + i % 4;
        check(generate_random_linear(m, e, m * e, seed + i));
    }
    c.pass = c.violations == 0;
    c.detail = std::to_string(c.instances) + " linear hypergraphs";
    return c;
}

SuiteCheck heuristic_sidedness(int runs, unsigned long long seed) {
    SuiteCheck c;
    c.name = "heuristic-sidedness";
    std::vector<Graph> graphs;
    graphs.push_back(make_cycle(4));
    graphs.push_back(make_cycle(6));
    graphs.push_back(make_petersen());
    graphs.push_back(make_complete(5));
    graphs.push_back(underlying_graph(generate_windmill(3, 2)));
    std::mt19937_64 rng(seed);
    graphs.push_back(random_graph(8, 0.4, rng));
    graphs.push_back(random_graph(8, 0.6, rng));
    for (int run = 0; run < runs; ++run) {
        const Graph& g = graphs[run % graphs.size()];
        const int k = 2 + (run / static_cast<int>(graphs.size())) % 2;
        if (k > g.order()) continue;
        ++c.instances;
        const double phi = phi_exact(g, k, 12).value;
        const double psi = psi_exact(g, k, 12).value;
        const ExpansionResult hp = phi_heuristic(g, k, seed + run);
        const ExpansionResult hs = psi_heuristic(g, k, seed + run);
        bool ok = hp.value >= phi - 1e-9 && hs.value <= psi + 1e-9;
        ok = ok && hp.argpartition.class_count() == k && hs.argpartition.class_count() == k;
        ok = ok && std::abs(hp.value - gamma_star(g, hp.argpartition)) <= 1e-12;
        ok = ok && std::abs(hs.value - gamma(g, hs.argpartition)) <= 1e-12;
        if (!ok) ++c.violations;
    }
    c.pass = c.violations == 0;
    c.detail = std::to_string(c.instances) + " seeded heuristic runs";
    return c;
}

} // namespace suite

std::vector<SuiteCheck> run_property_suite() {
    std::vector<SuiteCheck> checks;
    checks.push_back(suite::spectral_correctness());
    checks.push_back(suite::bound_soundness());
    checks.push_back(suite::bound_tightness());
    checks.push_back(suite::corollary1_residual_nonnegative());
    checks.push_back(suite::equitable_commutation_equivalence());
    checks.push_back(suite::interlacing_and_trace());
    checks.push_back(suite::partition_functional_bounds());
    checks.push_back(suite::equality_case_consequences());
    checks.push_back(suite::hypergraph_spectra());
    checks.push_back(suite::heuristic_sidedness());
    return checks;
}

} // namespace speccol
