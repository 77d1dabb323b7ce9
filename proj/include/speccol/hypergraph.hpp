#ifndef SPECCOL_HYPERGRAPH_HPP
#define SPECCOL_HYPERGRAPH_HPP

#include <vector>

#include "speccol/graph.hpp"

namespace speccol {

// m-uniform linear hypergraph: every hyperedge has m distinct vertices,
// any two hyperedges share at most one vertex, and every vertex is
// covered. Validated at construction.
class LinearHypergraph {
public:
    LinearHypergraph(int n, int m, std::vector<std::vector<int>> hyperedges);

    int vertex_count() const noexcept { return n_; }
    int uniformity() const noexcept { return m_; }
    int edge_count() const noexcept { return static_cast<int>(hyperedges_.size()); }
    const std::vector<std::vector<int>>& hyperedges() const noexcept { return hyperedges_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> hyperedges_;
};

// Throws the specific invariant violation, if any.
void validate_hypergraph(int n, int m, const std::vector<std::vector<int>>& hyperedges);

// Clique expansion; linearity keeps all edge weights at exactly 1.
Graph underlying_graph(const LinearHypergraph& h);

// True iff every hyperedge is rainbow; identical to properly colouring
// the underlying graph.
bool is_strong_colouring(const LinearHypergraph& h, const Partition& p);

// lambda_max of the underlying graph's normalized Laplacian is at most
// m/(m-1).
bool check_lemma14(const LinearHypergraph& h, double tol = 1e-9);

struct Theorem15Result {
    bool hypothesis_met = false; // n - e > 0
    bool passed = true;          // |lambda_max - m/(m-1)| <= tol, vacuous otherwise
    double lambda_max = 0.0;
    double target = 0.0; // m/(m-1)
};

// Equality lambda_max = m/(m-1) whenever there are more vertices than
// hyperedges.
Theorem15Result check_theorem15(const LinearHypergraph& h, double tol = 1e-9);

// e hyperedges through one common vertex, otherwise disjoint;
// n = e(m-1) + 1.
LinearHypergraph generate_windmill(int m, int e);

// Seeded rejection sampling of m-sets; vertices never covered are trimmed
// and the rest relabelled densely. Fails once the retry budget (1000 * e)
// is exhausted.
LinearHypergraph generate_random_linear(int m, int e, int n, unsigned long long seed);

} // namespace speccol

#endif // SPECCOL_HYPERGRAPH_HPP
