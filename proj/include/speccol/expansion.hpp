#ifndef SPECCOL_EXPANSION_HPP
#define SPECCOL_EXPANSION_HPP

#include "speccol/graph.hpp"

namespace speccol {

struct ExpansionResult {
    double value = 0.0;
    Partition argpartition;
    bool exact = false;
    int k = 0;
};

// min_{i != j} e(S_i, S_j) / max_i Vol(S_i); zero when some class pair has
// no edges between it.
double gamma(const Graph& g, const Partition& p);

// max_{i != j} e(S_i, S_j) / min_i Vol(S_i).
double gamma_star(const Graph& g, const Partition& p);

// Exhaustive maximum of gamma over all partitions into exactly k nonempty
// classes; ties resolved towards the first partition in restricted-growth
// order.
ExpansionResult psi_exact(const Graph& g, int k, int vertex_limit = 12);

// Exhaustive minimum of gamma_star; phi at k = 2 is the Cheeger constant.
ExpansionResult phi_exact(const Graph& g, int k, int vertex_limit = 12);

// Spectral embedding on the k lowest Laplacian eigenvectors, seeded
// clustering, then first-improvement vertex moves minimising gamma_star.
// Returns a feasible partition, hence an upper bound on phi_k.
ExpansionResult phi_heuristic(const Graph& g, int k, unsigned long long seed);

// Mirror image on the k highest eigenvectors, maximising gamma; the result
// is a lower bound on psi_k.
ExpansionResult psi_heuristic(const Graph& g, int k, unsigned long long seed);

// k*gamma(p) <= theta_1 and theta_{k-1} <= k*gamma_star(p) against the
// quotient Laplacian spectrum.
bool check_lemma9(const Graph& g, const Partition& p, double tol = 1e-9);

// psi_k * k <= lambda_{n-k+1} and phi_k * k >= lambda_{k-1} against the
// full graph spectrum, using exact psi/phi.
bool check_theorem10(const Graph& g, int k, int vertex_limit = 12, double tol = 1e-9);

struct Corollary11Result {
    bool hypothesis_met = false; // a regular k-colouring exists and sigma_{k-1} = k
    bool passed = true;          // lambda_max = k/(k-1), vacuous when hypothesis fails
    bool has_regular_colouring = false;
    double sigma_k_minus_1 = 0.0;
    double lambda_max = 0.0;
};

Corollary11Result check_corollary11(const Graph& g, int k, double tol = 1e-9, long long enum_cap = 200000);

} // namespace speccol

#endif // SPECCOL_EXPANSION_HPP
