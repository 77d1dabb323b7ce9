#ifndef SPECCOL_EIGENSOLVE_HPP
#define SPECCOL_EIGENSOLVE_HPP

#include <optional>
#include <vector>

#include "speccol/matrix.hpp"

namespace speccol {

// Square matrix validated to be symmetric to within 1e-12 entrywise at
// construction.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(Matrix entries, double symmetry_tol = 1e-12);

    int order() const noexcept { return entries_.rows(); }
    const Matrix& entries() const noexcept { return entries_; }
    double operator()(int i, int j) const { return entries_(i, j); }

private:
    Matrix entries_;
};

// Eigenvalues sorted ascending, with an optional orthonormal eigenvector
// basis; column i of eigenvectors belongs to eigenvalues[i].
struct Spectrum {
    std::vector<double> eigenvalues;
    Matrix eigenvectors; // empty when not requested

    int order() const noexcept { return static_cast<int>(eigenvalues.size()); }
    bool has_eigenvectors() const noexcept { return !eigenvectors.empty(); }
};

struct InterlacingViolation {
    int index;    // 1-based, in the descending indexing theta_1 >= ... >= theta_n
    double lower; // theta_{n-m+i}
    double value; // mu_i
    double upper; // theta_i
};

struct InterlacingReport {
    bool holds = false;
    bool tight = false;
    std::optional<int> tight_split_k; // the split index of a tight interlacing
    std::vector<InterlacingViolation> violations;
};

// Cyclic Jacobi. Deterministic for a fixed input; converges when the
// off-diagonal Frobenius norm drops below tol * max(1, max|m_ij|).
// Sweep limit 100, NoConvergence past that.
Spectrum eigendecompose(const SymmetricMatrix& m, double tol = 1e-10, bool with_eigenvectors = true);

// Checks theta_{n-m+i} <= mu_i <= theta_i for i = 1..m (descending
// indexing) within tol, and whether the equality pattern is tight: some k
// with mu_i = theta_i for i <= k and mu_i = theta_{n-m+i} for i > k.
InterlacingReport verify_interlacing(const Spectrum& big, const Spectrum& small, double tol = 1e-9);

} // namespace speccol

#endif // SPECCOL_EIGENSOLVE_HPP
