#ifndef SPECCOL_CORPUS_HPP
#define SPECCOL_CORPUS_HPP

#include <random>
#include <string>
#include <vector>

#include "speccol/graph.hpp"

namespace speccol {

Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_star(int leaves); // K_{1,leaves}
Graph make_complete_bipartite(int p, int q);
Graph make_petersen();

// Erdos-Renyi style; vertices left isolated get stitched to a random
// neighbour so the no-isolated-vertex invariant always holds.
Graph random_graph(int n, double edge_probability, std::mt19937_64& rng, bool random_weights = false);

// Uniform assignment patched so all k classes are nonempty.
Partition random_partition(int n, int k, std::mt19937_64& rng);

// All connected graphs on n vertices up to isomorphism, 2 <= n <= 7,
// generated once by vertex extension with canonical-form deduplication.
const std::vector<Graph>& connected_graphs(int n);

// All graphs with minimum degree >= 1 up to isomorphism (disconnected
// ones included), 2 <= n <= 7.
std::vector<Graph> min_degree_one_graphs(int n);

// Number of graphs on n vertices up to isomorphism, 1 <= n <= 7.
long long nonisomorphic_graph_count(int n);

// One named property check over a corpus: how many instances ran, how
// many violated the property.
struct SuiteCheck {
    std::string name;
    long long instances = 0;
    long long violations = 0;
    bool pass = true;
    std::string detail;
};

namespace suite {

// Complete-graph and bipartite spectra hit their closed forms.
SuiteCheck spectral_correctness(double tol = 1e-9);
// sigma/lambda/Hoffman/adjacency-interlacing bounds never exceed the
// exact chromatic number.
SuiteCheck bound_soundness(int random_count = 200, unsigned long long seed = 1);
// The sigma bound is exactly chi on K_n, Petersen and C_5.
SuiteCheck bound_tightness();
// Internal-edge residual of every partition of every connected graph
// with at most max_n vertices is nonnegative.
SuiteCheck corollary1_residual_nonnegative(int max_n = 7, double tol = 1e-9);
// Degree-fraction equitability agrees with a vanishing commutation
// residual, exhaustively and on random instances.
SuiteCheck equitable_commutation_equivalence(int max_n = 6, int random_count = 500,
                                             unsigned long long seed = 2, double tol = 1e-9);
// Quotient spectra interlace and proper-colouring quotients have trace k.
SuiteCheck interlacing_and_trace(int random_count = 500, unsigned long long seed = 3, double tol = 1e-9);
// gamma <= 1/(k-1), gamma* >= 1/(k-1) on proper colourings, the quotient
// eigenvalue sandwich, and the psi/phi comparisons against the full
// spectrum, over full partition enumeration.
SuiteCheck partition_functional_bounds(double tol = 1e-9);
// Colourings meeting lambda_max = k/(k-1) are equitable, regular and
// divisibility-clean; the regular-colouring eigenvalue consequence holds.
SuiteCheck equality_case_consequences(double tol = 1e-9);
// Underlying-graph eigenvalue bound and equality on linear hypergraphs.
SuiteCheck hypergraph_spectra(int random_count = 100, unsigned long long seed = 4, double tol = 1e-9);
// Heuristics return feasible partitions bounding the exact values from
// the correct side.
SuiteCheck heuristic_sidedness(int runs = 50, unsigned long long seed = 5);

} // namespace suite

// The full battery, in a fixed order, as run by the `corpus` subcommand.
std::vector<SuiteCheck> run_property_suite();

} // namespace speccol

#endif // SPECCOL_CORPUS_HPP
