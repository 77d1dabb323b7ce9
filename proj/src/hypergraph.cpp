#include "speccol/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "speccol/eigensolve.hpp"
#include "speccol/errors.hpp"
#include "speccol/laplacian.hpp"

namespace speccol {

void validate_hypergraph(int n, int m, const std::vector<std::vector<int>>& hyperedges) {
    if (n < 1) fail(errc::vertex_out_of_range, "hypergraph needs at least one vertex");
    if (m < 1) fail(errc::not_uniform, "uniformity must be at least 1");
    std::vector<char> covered(n, 0);
    for (std::size_t idx = 0; idx < hyperedges.size(); ++idx) {
        const auto& e = hyperedges[idx];
        if (static_cast<int>(e.size()) != m)
            fail(errc::not_uniform, "hyperedge " + std::to_string(idx) + " has " + std::to_string(e.size()) +
                                        " vertices, expected " + std::to_string(m));
        for (int v : e) {
            if (v < 0 || v >= n)
                fail(errc::vertex_out_of_range,
                     "vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
            covered[v] = 1;
        }
        for (std::size_t i = 1; i < e.size(); ++i)
            if (e[i] == e[i - 1])
                fail(errc::not_uniform,
                     "hyperedge " + std::to_string(idx) + " repeats vertex " + std::to_string(e[i]));
    }
    for (std::size_t i = 0; i < hyperedges.size(); ++i)
        for (std::size_t j = i + 1; j < hyperedges.size(); ++j) {
            // sorted lists; count the intersection with two pointers
            int common = 0;
            std::size_t a = 0, b = 0;
            const auto& ei = hyperedges[i];
            const auto& ej = hyperedges[j];
            while (a < ei.size() && b < ej.size()) {
                if (ei[a] == ej[b]) {
                    ++common;
                    ++a;
                    ++b;
                } else if (ei[a] < ej[b]) {
                    ++a;
                } else {
                    ++b;
                }
            }
            if (common > 1)
                fail(errc::not_linear, "hyperedges " + std::to_string(i) + " and " + std::to_string(j) +
                                           " share " + std::to_string(common) + " vertices");
        }
    for (int v = 0; v < n; ++v)
        if (!covered[v]) fail(errc::uncovered_vertex, "vertex " + std::to_string(v) + " lies in no hyperedge");
}

LinearHypergraph::LinearHypergraph(int n, int m, std::vector<std::vector<int>> hyperedges)
    : n_(n), m_(m), hyperedges_(std::move(hyperedges)) {
    for (auto& e : hyperedges_) std::sort(e.begin(), e.end());
    validate_hypergraph(n_, m_, hyperedges_);
}

Graph underlying_graph(const LinearHypergraph& h) {
    std::vector<WeightedEdge> edges;
    for (const auto& e : h.hyperedges())
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) edges.push_back({e[a], e[b], 1.0});
    // linearity means no clique pair repeats an edge, so this cannot throw
    // DuplicateEdge on a validated instance
    return Graph(h.vertex_count(), edges);
}

bool is_strong_colouring(const LinearHypergraph& h, const Partition& p) {
    if (p.size() != h.vertex_count())
        fail(errc::partition_size_mismatch, "partition covers " + std::to_string(p.size()) +
                                                " vertices, hypergraph has " + std::to_string(h.vertex_count()));
    for (const auto& e : h.hyperedges())
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                if (p.class_of(e[a]) == p.class_of(e[b])) return false;
    return true;
}

bool check_lemma14(const LinearHypergraph& h, double tol) {
    const Spectrum s = eigendecompose(normalized_laplacian(underlying_graph(h)), 1e-10, false);
    const double m = h.uniformity();
    return s.eigenvalues.back() <= m / (m - 1.0) + tol;
}

Theorem15Result check_theorem15(const LinearHypergraph& h, double tol) {
    Theorem15Result r;
    const double m = h.uniformity();
    r.target = m / (m - 1.0);
    r.hypothesis_met = h.vertex_count() > h.edge_count();
    const Spectrum s = eigendecompose(normalized_laplacian(underlying_graph(h)), 1e-10, false);
    r.lambda_max = s.eigenvalues.back();
    r.passed = !r.hypothesis_met || std::abs(r.lambda_max - r.target) <= tol;
    return r;
}

LinearHypergraph generate_windmill(int m, int e) {
    if (m < 2) throw std::invalid_argument("windmill needs uniformity at least 2");
    if (e < 1) throw std::invalid_argument("windmill needs at least one hyperedge");
    std::vector<std::vector<int>> edges(e);
    for (int i = 0; i < e; ++i) {
        edges[i].push_back(0);
        for (int j = 0; j < m - 1; ++j) edges[i].push_back(1 + i * (m - 1) + j);
    }
    return LinearHypergraph(e * (m - 1) + 1, m, std::move(edges));
}

LinearHypergraph generate_random_linear(int m, int e, int n, unsigned long long seed) {
    if (m < 2) throw std::invalid_argument("uniformity must be at least 2");
    if (n < m) throw std::invalid_argument("need at least m vertices");
    if (e < 1) throw std::invalid_argument("need at least one hyperedge");
    std::mt19937_64 rng(seed + 0xD1B54A32D192ED03ULL);
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::vector<int>> accepted;
    long long budget = 1000LL * e;
    while (static_cast<int>(accepted.size()) < e && budget > 0) {
        --budget;
        for (int i = 0; i < m; ++i) {
            const int j = i + static_cast<int>(rng() % static_cast<unsigned long long>(n - i));
            std::swap(pool[i], pool[j]);
        }
        std::vector<int> cand(pool.begin(), pool.begin() + m);
        std::sort(cand.begin(), cand.end());
        bool ok = true;
        for (const auto& prev : accepted) {
            int common = 0;
            std::size_t a = 0, b = 0;
            while (a < prev.size() && b < cand.size()) {
                if (prev[a] == cand[b]) {
                    ++common;
                    ++a;
                    ++b;
                } else if (prev[a] < cand[b]) {
                    ++a;
                } else {
                    ++b;
                }
            }
            if (common > 1) {
                ok = false;
                break;
            }
        }
        if (ok) accepted.push_back(std::move(cand));
    }
    if (static_cast<int>(accepted.size()) < e)
        fail(errc::generation_failed, "placed " + std::to_string(accepted.size()) + " of " + std::to_string(e) +
                                          " hyperedges before the retry budget ran out");

    // trim vertices no hyperedge touched and relabel densely
    std::vector<int> relabel(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        bool used = false;
        for (const auto& edge : accepted) {
            if (std::binary_search(edge.begin(), edge.end(), v)) {
                used = true;
                break;
            }
        }
        if (used) relabel[v] = next++;
    }
    for (auto& edge : accepted)
        for (int& v : edge) v = relabel[v];
    return LinearHypergraph(next, m, std::move(accepted));
}

} // namespace speccol
