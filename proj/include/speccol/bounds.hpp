#ifndef SPECCOL_BOUNDS_HPP
#define SPECCOL_BOUNDS_HPP

#include <optional>
#include <vector>

#include "speccol/graph.hpp"
#include "speccol/laplacian.hpp"

namespace speccol {

struct PerKEntry {
    int k = 0;
    double sigma_k_minus_1 = 0.0;
    bool qualifies = false; // sigma_{k-1} < k - 1e-9
    bool near_tie = false;  // |sigma_{k-1} - k| <= 1e-9
};

struct BoundReport {
    int sigma_bound = 0;
    int lambda_bound = 0;
    int hoffman_bound = 0;
    int haemers_bound = 0;
    std::optional<int> chi_exact;
    std::vector<PerKEntry> per_k_table;
};

// 1 + max{k in [1, n-1] : sigma_{k-1} < k - 1e-9}, a lower bound on the
// chromatic number. The spectrum must look like a normalized Laplacian's:
// smallest eigenvalue 0 and everything inside [0, 2], within 1e-9.
int sigma_chromatic_bound(const Spectrum& s);

// ceil(1 + 1/(lambda_max - 1)) with a 1e-9 rounding guard.
int lambda_chromatic_bound(const Spectrum& s);

// sum_j e(S_j, S_j)/Vol(S_j) - (k - sigma_{k-1}) under the ordered
// diagonal convention; nonnegative up to numerical noise for every
// partition of every graph.
double corollary1_residual(const Graph& g, const Partition& p, const Spectrum& s);

// 1 + mu_max / |mu_min| on the adjacency spectrum, ceiling-guarded.
int hoffman_bound(const Graph& g);

// Adjacency-interlacing comparator: 1 + max{k : mu_max plus the sum of
// the (k-1) smallest adjacency eigenvalues is positive}. Coincides with
// the sigma bound on regular graphs.
int haemers_bound(const Graph& g);

std::vector<PerKEntry> sigma_per_k_table(const Spectrum& s);

BoundReport compare_bounds(const Graph& g, bool with_exact, int exact_limit = 24);

} // namespace speccol

#endif // SPECCOL_BOUNDS_HPP
