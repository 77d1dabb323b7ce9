#include "speccol/laplacian.hpp"

#include <cmath>
#include <string>

#include "speccol/errors.hpp"

namespace speccol {

SymmetricMatrix normalized_laplacian(const Graph& g) {
    const int n = g.order();
    Matrix l(n, n);
    for (int i = 0; i < n; ++i) {
        l(i, i) = 1.0;
        for (int j = i + 1; j < n; ++j) {
            const double w = g.weight(i, j);
            if (w != 0.0) {
                const double x = -w / std::sqrt(g.degree(i) * g.degree(j));
                l(i, j) = x;
                l(j, i) = x;
            }
        }
    }
    return SymmetricMatrix(std::move(l));
}

SymmetricMatrix adjacency_matrix(const Graph& g) { return SymmetricMatrix(g.adjacency()); }

double sigma(const Spectrum& s, int k) {
    const int n = s.order();
    if (k < 0 || k > n)
        fail(errc::index_out_of_range, "sigma index " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
    double total = 0.0;
    for (int j = 1; j <= k; ++j) total += s.eigenvalues[n - j];
    return total;
}

QuotientGraph quotient_graph(const Graph& g, const Partition& p) {
    if (p.size() != g.order())
        fail(errc::partition_size_mismatch, "partition covers " + std::to_string(p.size()) +
                                                " vertices, graph has " + std::to_string(g.order()));
    const int n = g.order();
    const int k = p.class_count();
    QuotientGraph q;
    q.k = k;
    q.weights = Matrix(k, k);
    q.class_volumes.assign(k, 0.0);
    for (int a = 0; a < n; ++a) {
        q.class_volumes[p.class_of(a)] += g.degree(a);
        for (int b = 0; b < n; ++b) q.weights(p.class_of(a), p.class_of(b)) += g.weight(a, b);
    }
    // the two accumulation orders can differ in the last ulp; force symmetry
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) q.weights(j, i) = q.weights(i, j);
    return q;
}

SymmetricMatrix quotient_laplacian(const QuotientGraph& q) {
    const int k = q.k;
    for (int j = 0; j < k; ++j)
        if (!(q.class_volumes[j] > 0.0))
            fail(errc::empty_class, "class " + std::to_string(j) + " has volume " +
                                        std::to_string(q.class_volumes[j]));
    Matrix l(k, k);
    for (int i = 0; i < k; ++i) {
        l(i, i) = 1.0 - q.weights(i, i) / q.class_volumes[i];
        for (int j = i + 1; j < k; ++j) {
            const double x = -q.weights(i, j) / std::sqrt(q.class_volumes[i] * q.class_volumes[j]);
            l(i, j) = x;
            l(j, i) = x;
        }
    }
    return SymmetricMatrix(std::move(l));
}

Matrix lift_matrix(const Graph& g, const Partition& p) {
    if (p.size() != g.order())
        fail(errc::partition_size_mismatch, "partition covers " + std::to_string(p.size()) +
                                                " vertices, graph has " + std::to_string(g.order()));
    const int n = g.order();
    const int k = p.class_count();
    std::vector<double> vol(k, 0.0);
    for (int a = 0; a < n; ++a) vol[p.class_of(a)] += g.degree(a);
    Matrix pm(n, k);
    for (int a = 0; a < n; ++a) {
        const int j = p.class_of(a);
        pm(a, j) = std::sqrt(g.degree(a) / vol[j]);
    }
    return pm;
}

double commutation_residual(const Graph& g, const Partition& p) {
    const Matrix lift = lift_matrix(g, p);
    const Matrix lhs = normalized_laplacian(g).entries() * lift;
    const Matrix rhs = lift * quotient_laplacian(quotient_graph(g, p)).entries();
    return (lhs - rhs).max_abs();
}

} // namespace speccol
