#ifndef SPECCOL_LAPLACIAN_HPP
#define SPECCOL_LAPLACIAN_HPP

#include <vector>

#include "speccol/eigensolve.hpp"
#include "speccol/graph.hpp"

namespace speccol {

// Weighted multigraph on the classes of a partition. Off-diagonal entry
// (i, j) is the cut weight e(S_i, S_j); the diagonal entry (j, j) is the
// ordered internal pair count, i.e. twice the internal edge weight. Under
// that convention the row sums of `weights` equal `class_volumes`.
struct QuotientGraph {
    int k = 0;
    Matrix weights;
    std::vector<double> class_volumes;
};

// I - D^{-1/2} A D^{-1/2}; unit diagonal by construction.
SymmetricMatrix normalized_laplacian(const Graph& g);

// The adjacency matrix wrapped for the eigensolver.
SymmetricMatrix adjacency_matrix(const Graph& g);

// Sum of the k largest eigenvalues; sigma(s, 0) = 0.
double sigma(const Spectrum& s, int k);

QuotientGraph quotient_graph(const Graph& g, const Partition& p);

// I - N^{-1/2} A(G/pi) N^{-1/2} with N = diag(class volumes).
SymmetricMatrix quotient_laplacian(const QuotientGraph& q);

// P = D^{1/2} S N^{-1/2}, an n x k matrix with orthonormal columns.
Matrix lift_matrix(const Graph& g, const Partition& p);

// max|L(G) P - P L(G/pi)|; vanishes exactly when the partition is
// equitable with respect to D^{-1} A.
double commutation_residual(const Graph& g, const Partition& p);

} // namespace speccol

#endif // SPECCOL_LAPLACIAN_HPP
