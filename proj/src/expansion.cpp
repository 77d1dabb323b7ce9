#include "speccol/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "speccol/colouring.hpp"
#include "speccol/errors.hpp"
#include "speccol/laplacian.hpp"
#include "speccol/partitions.hpp"

namespace speccol {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_multi_class(const Graph& g, const Partition& p) {
    if (p.size() != g.order())
        fail(errc::partition_size_mismatch, "partition covers " + std::to_string(p.size()) +
                                                " vertices, graph has " + std::to_string(g.order()));
    if (p.class_count() < 2) fail(errc::single_class, "at least two classes required");
}

double gamma_from(const Matrix& w, const std::vector<double>& vol, bool star) {
    const int k = static_cast<int>(vol.size());
    double min_cut = kInf, max_cut = -kInf;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            min_cut = std::min(min_cut, w(i, j));
            max_cut = std::max(max_cut, w(i, j));
        }
    double min_vol = kInf, max_vol = 0.0;
    for (double v : vol) {
        min_vol = std::min(min_vol, v);
        max_vol = std::max(max_vol, v);
    }
    return star ? max_cut / min_vol : min_cut / max_vol;
}

// Quotient cut weights and volumes kept incrementally under single-vertex
// moves, so the local search evaluates a move in O(n + k^2).
struct PartitionState {
    const Graph* g = nullptr;
    int k = 0;
    std::vector<int> assign;
    std::vector<int> sizes;
    Matrix w;
    std::vector<double> vol;

    void init(const Graph& graph, const Partition& p) {
        g = &graph;
        k = p.class_count();
        assign = p.assignment();
        sizes = p.class_sizes();
        const QuotientGraph q = quotient_graph(graph, p);
        w = q.weights;
        vol = q.class_volumes;
    }

    std::vector<double> links(int v) const {
        std::vector<double> t(k, 0.0);
        for (int b = 0; b < g->order(); ++b) t[assign[b]] += g->weight(v, b);
        return t;
    }

    static void shift(Matrix& m, std::vector<double>& volumes, const std::vector<double>& t, int from, int to,
                      double deg) {
        const int k = static_cast<int>(volumes.size());
        for (int j = 0; j < k; ++j) {
            if (j == from || j == to) continue;
            m(from, j) -= t[j];
            m(j, from) = m(from, j);
            m(to, j) += t[j];
            m(j, to) = m(to, j);
        }
        m(from, from) -= 2.0 * t[from];
        m(to, to) += 2.0 * t[to];
        const double cross = m(from, to) - t[to] + t[from];
        m(from, to) = cross;
        m(to, from) = cross;
        volumes[from] -= deg;
        volumes[to] += deg;
    }

    double eval_move(int v, int to, bool star) const {
        Matrix m = w;
        std::vector<double> volumes = vol;
        shift(m, volumes, links(v), assign[v], to, g->degree(v));
        return gamma_from(m, volumes, star);
    }

    void apply_move(int v, int to) {
        shift(w, vol, links(v), assign[v], to, g->degree(v));
        --sizes[assign[v]];
        ++sizes[to];
        assign[v] = to;
    }

    double objective(bool star) const { return gamma_from(w, vol, star); }
};

Partition local_search(const Graph& g, const Partition& start, bool star, long long max_moves) {
    PartitionState st;
    st.init(g, start);
    double current = st.objective(star);
    long long moves = 0;
    bool improved = true;
    while (improved && moves < max_moves) {
        improved = false;
        for (int v = 0; v < g.order() && !improved; ++v) {
            const int from = st.assign[v];
            if (st.sizes[from] <= 1) continue; // classes must stay nonempty
            for (int c = 0; c < st.k && !improved; ++c) {
                if (c == from) continue;
                const double cand = st.eval_move(v, c, star);
                const bool better = star ? cand < current - 1e-15 : cand > current + 1e-15;
                if (better) {
                    st.apply_move(v, c);
                    current = cand;
                    improved = true;
                    ++moves;
                }
            }
        }
    }
    return Partition(st.assign, st.k);
}

std::vector<int> cluster_points(const Matrix& pts, int k, std::mt19937_64& rng) {
    const int n = pts.rows();
    const int dim = pts.cols();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng() % static_cast<unsigned long long>(i + 1)]);

    std::vector<std::vector<double>> centers(k, std::vector<double>(dim, 0.0));
    for (int c = 0; c < k; ++c)
        for (int d = 0; d < dim; ++d) centers[c][d] = pts(perm[c], d);

    std::vector<int> assign(n, 0);
    auto sq_dist = [&](int v, int c) {
        double s = 0.0;
        for (int d = 0; d < dim; ++d) {
            const double diff = pts(v, d) - centers[c][d];
            s += diff * diff;
        }
        return s;
    };
    for (int iter = 0; iter < 25; ++iter) {
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            int best = 0;
            double best_d = sq_dist(v, 0);
            for (int c = 1; c < k; ++c) {
                const double d = sq_dist(v, c);
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            if (assign[v] != best) {
                assign[v] = best;
                changed = true;
            }
        }
        std::vector<int> count(k, 0);
        std::vector<std::vector<double>> sums(k, std::vector<double>(dim, 0.0));
        for (int v = 0; v < n; ++v) {
            ++count[assign[v]];
            for (int d = 0; d < dim; ++d) sums[assign[v]][d] += pts(v, d);
        }
        for (int c = 0; c < k; ++c)
            if (count[c] > 0)
                for (int d = 0; d < dim; ++d) centers[c][d] = sums[c][d] / count[c];
        if (!changed && iter > 0) break;
    }

    // repair empty clusters: pull the point farthest from its own center
    // out of the largest cluster
    for (;;) {
        std::vector<int> count(k, 0);
        for (int v = 0; v < n; ++v) ++count[assign[v]];
        int empty = -1;
        for (int c = 0; c < k; ++c)
            if (count[c] == 0) {
                empty = c;
                break;
            }
        if (empty < 0) break;
        int pick = -1;
        double far = -1.0;
        for (int v = 0; v < n; ++v) {
            if (count[assign[v]] < 2) continue;
            const double d = sq_dist(v, assign[v]);
            if (d > far) {
                far = d;
                pick = v;
            }
        }
        assign[pick] = empty;
    }
    return assign;
}

ExpansionResult spectral_heuristic(const Graph& g, int k, unsigned long long seed, bool star) {
    const int n = g.order();
    if (k < 2) fail(errc::single_class, "k must be at least 2");
    if (k > n) fail(errc::index_out_of_range, "k exceeds the vertex count");
    const Spectrum s = eigendecompose(normalized_laplacian(g), 1e-10, true);
    Matrix pts(n, k);
    for (int a = 0; a < n; ++a) {
        const double scale = 1.0 / std::sqrt(g.degree(a));
        for (int j = 0; j < k; ++j) {
            const int col = star ? j : n - k + j; // low eigenvectors cluster, high ones anticluster
            pts(a, j) = s.eigenvectors(a, col) * scale;
        }
    }
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL);
    Partition start(cluster_points(pts, k, rng), k);
    const Partition result = local_search(g, start, star, 100LL * n);
    const double value = star ? gamma_star(g, result) : gamma(g, result);
    return {value, result, false, k};
}

} // namespace

double gamma(const Graph& g, const Partition& p) {
    require_multi_class(g, p);
    const QuotientGraph q = quotient_graph(g, p);
    return gamma_from(q.weights, q.class_volumes, false);
}

double gamma_star(const Graph& g, const Partition& p) {
    require_multi_class(g, p);
    const QuotientGraph q = quotient_graph(g, p);
    return gamma_from(q.weights, q.class_volumes, true);
}

ExpansionResult psi_exact(const Graph& g, int k, int vertex_limit) {
    const int n = g.order();
    if (n > vertex_limit)
        fail(errc::too_large, "graph has " + std::to_string(n) + " vertices, limit is " +
                                  std::to_string(vertex_limit));
    if (k < 2) fail(errc::single_class, "k must be at least 2");
    if (k > n) fail(errc::index_out_of_range, "k exceeds the vertex count");
    double best = -kInf;
    std::vector<int> best_assign;
    for_each_k_partition(n, k, [&](const std::vector<int>& assign) {
        const double val = gamma(g, Partition(assign, k));
        if (val > best) {
            best = val;
            best_assign = assign;
        }
    });
    return {best, Partition(best_assign, k), true, k};
}

ExpansionResult phi_exact(const Graph& g, int k, int vertex_limit) {
    const int n = g.order();
    if (n > vertex_limit)
        fail(errc::too_large, "graph has " + std::to_string(n) + " vertices, limit is " +
                                  std::to_string(vertex_limit));
    if (k < 2) fail(errc::single_class, "k must be at least 2");
    if (k > n) fail(errc::index_out_of_range, "k exceeds the vertex count");
    double best = kInf;
    std::vector<int> best_assign;
    for_each_k_partition(n, k, [&](const std::vector<int>& assign) {
        const double val = gamma_star(g, Partition(assign, k));
        if (val < best) {
            best = val;
            best_assign = assign;
        }
    });
    return {best, Partition(best_assign, k), true, k};
}

ExpansionResult phi_heuristic(const Graph& g, int k, unsigned long long seed) {
    return spectral_heuristic(g, k, seed, true);
}

ExpansionResult psi_heuristic(const Graph& g, int k, unsigned long long seed) {
    return spectral_heuristic(g, k, seed, false);
}

bool check_lemma9(const Graph& g, const Partition& p, double tol) {
    const double gv = gamma(g, p);
    const double gs = gamma_star(g, p);
    const int k = p.class_count();
    const Spectrum th = eigendecompose(quotient_laplacian(quotient_graph(g, p)), 1e-10, false);
    return k * gv <= th.eigenvalues[1] + tol && th.eigenvalues[k - 1] <= k * gs + tol;
}

bool check_theorem10(const Graph& g, int k, int vertex_limit, double tol) {
    const ExpansionResult psi = psi_exact(g, k, vertex_limit);
    const ExpansionResult phi = phi_exact(g, k, vertex_limit);
    const Spectrum s = eigendecompose(normalized_laplacian(g), 1e-10, false);
    const int n = g.order();
    return psi.value * k <= s.eigenvalues[n - k + 1] + tol && phi.value * k >= s.eigenvalues[k - 1] - tol;
}

Corollary11Result check_corollary11(const Graph& g, int k, double tol, long long enum_cap) {
    Corollary11Result r;
    const Spectrum s = eigendecompose(normalized_laplacian(g), 1e-10, false);
    r.sigma_k_minus_1 = sigma(s, k - 1);
    r.lambda_max = s.eigenvalues.back();
    const ColouringEnumeration en = enumerate_proper_colourings(g, k, enum_cap);
    for (const Partition& p : en.colourings)
        if (is_regular_colouring(g, p)) {
            r.has_regular_colouring = true;
            break;
        }
    r.hypothesis_met = r.has_regular_colouring && std::abs(r.sigma_k_minus_1 - k) <= tol;
    r.passed = !r.hypothesis_met || std::abs(r.lambda_max - static_cast<double>(k) / (k - 1)) <= tol;
    return r;
}

} // namespace speccol
