#include "speccol/bounds.hpp"

#include <cmath>
#include <string>

#include "speccol/colouring.hpp"
#include "speccol/errors.hpp"

namespace speccol {

namespace {

constexpr double kMargin = 1e-9;

void require_laplacian_spectrum(const Spectrum& s) {
    if (s.order() < 1) fail(errc::not_a_laplacian_spectrum, "empty spectrum");
    if (std::abs(s.eigenvalues.front()) > kMargin)
        fail(errc::not_a_laplacian_spectrum,
             "smallest eigenvalue " + std::to_string(s.eigenvalues.front()) + " is not 0");
    if (s.eigenvalues.front() < -kMargin || s.eigenvalues.back() > 2.0 + kMargin)
        fail(errc::not_a_laplacian_spectrum, "eigenvalues leave [0, 2]");
}

} // namespace

int sigma_chromatic_bound(const Spectrum& s) {
    require_laplacian_spectrum(s);
    const int n = s.order();
    int best = 1; // k = 1 always qualifies: sigma_0 = 0 < 1
    double tail = 0.0;
    for (int k = 1; k <= n - 1; ++k) {
        // tail holds sigma_{k-1}; no monotonicity assumed, scan every k
        if (tail < k - kMargin) best = k > best ? k : best;
        tail += s.eigenvalues[n - k];
    }
    return best + 1;
}

int lambda_chromatic_bound(const Spectrum& s) {
    require_laplacian_spectrum(s);
    const double lam = s.eigenvalues.back();
    if (lam <= 1.0 + kMargin)
        fail(errc::degenerate_lambda, "largest eigenvalue " + std::to_string(lam) + " is not above 1");
    return static_cast<int>(std::ceil(1.0 + 1.0 / (lam - 1.0) - kMargin));
}

double corollary1_residual(const Graph& g, const Partition& p, const Spectrum& s) {
    const QuotientGraph q = quotient_graph(g, p);
    double internal = 0.0;
    for (int j = 0; j < q.k; ++j) internal += q.weights(j, j) / q.class_volumes[j];
    return internal - (q.k - sigma(s, q.k - 1));
}

int hoffman_bound(const Graph& g) {
    const Spectrum adj = eigendecompose(adjacency_matrix(g), 1e-10, false);
    const double mu_max = adj.eigenvalues.back();
    const double mu_min = adj.eigenvalues.front();
    return static_cast<int>(std::ceil(1.0 + mu_max / std::abs(mu_min) - kMargin));
}

int haemers_bound(const Graph& g) {
    const Spectrum adj = eigendecompose(adjacency_matrix(g), 1e-10, false);
    const int n = adj.order();
    const double mu_max = adj.eigenvalues.back();
    int best = 1;
    double smallest_sum = 0.0; // sum of the (k-1) smallest adjacency eigenvalues
    for (int k = 1; k <= n - 1; ++k) {
        if (mu_max + smallest_sum > kMargin) best = k > best ? k : best;
        smallest_sum += adj.eigenvalues[k - 1];
    }
    return best + 1;
}

std::vector<PerKEntry> sigma_per_k_table(const Spectrum& s) {
    require_laplacian_spectrum(s);
    const int n = s.order();
    std::vector<PerKEntry> table;
    table.reserve(n > 1 ? n - 1 : 0);
    double tail = 0.0;
    for (int k = 1; k <= n - 1; ++k) {
        table.push_back({k, tail, tail < k - kMargin, std::abs(tail - k) <= kMargin});
        tail += s.eigenvalues[n - k];
    }
    return table;
}

BoundReport compare_bounds(const Graph& g, bool with_exact, int exact_limit) {
    const Spectrum s = eigendecompose(normalized_laplacian(g), 1e-10, false);
    BoundReport r;
    r.sigma_bound = sigma_chromatic_bound(s);
    r.lambda_bound = lambda_chromatic_bound(s);
    r.hoffman_bound = hoffman_bound(g);
    r.haemers_bound = haemers_bound(g);
    r.per_k_table = sigma_per_k_table(s);
    if (with_exact && g.order() <= exact_limit) r.chi_exact = exact_chromatic_number(g, exact_limit);
    return r;
}

} // namespace speccol
