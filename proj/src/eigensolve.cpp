#include "speccol/eigensolve.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "speccol/errors.hpp"

namespace speccol {

namespace {

double off_diagonal_frobenius(const Matrix& a) {
    const int n = a.rows();
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) sum += a(i, j) * a(i, j);
    return std::sqrt(sum);
}

} // namespace

SymmetricMatrix::SymmetricMatrix(Matrix entries, double symmetry_tol) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols())
        fail(errc::not_symmetric, "matrix is " + std::to_string(entries_.rows()) + "x" +
                                      std::to_string(entries_.cols()));
    const int n = entries_.rows();
    if (n < 1) fail(errc::not_symmetric, "matrix is empty");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(entries_(i, j) - entries_(j, i)) > symmetry_tol)
                fail(errc::not_symmetric, "entries (" + std::to_string(i) + ", " + std::to_string(j) +
                                              ") differ by " +
                                              std::to_string(std::abs(entries_(i, j) - entries_(j, i))));
}

Spectrum eigendecompose(const SymmetricMatrix& m, double tol, bool with_eigenvectors) {
    if (!(tol > 0.0)) throw std::invalid_argument("eigendecompose: tol must be positive");
    const int n = m.order();
    Matrix a = m.entries();
    // exact symmetrisation; a no-op for exactly symmetric input
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double x = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = x;
            a(j, i) = x;
        }

    Matrix v = with_eigenvectors ? Matrix::identity(n) : Matrix();
    const double scale = std::max(1.0, a.max_abs());
    const double thresh = tol * scale;
    const int max_sweeps = 100;

    bool converged = false;
    double off = 0.0;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        off = off_diagonal_frobenius(a);
        if (off <= thresh) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                if (std::abs(apq) < 1e-300) { // denormal guard
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                const double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double h = t * apq;
                a(p, p) -= h;
                a(q, q) += h;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a(i, p);
                    const double aiq = a(i, q);
                    const double nip = aip - s * (aiq + tau * aip);
                    const double niq = aiq + s * (aip - tau * aiq);
                    a(i, p) = nip;
                    a(p, i) = nip;
                    a(i, q) = niq;
                    a(q, i) = niq;
                }
                if (with_eigenvectors) {
                    for (int i = 0; i < n; ++i) {
                        const double vip = v(i, p);
                        const double viq = v(i, q);
                        v(i, p) = vip - s * (viq + tau * vip);
                        v(i, q) = viq + s * (vip - tau * viq);
                    }
                }
            }
        }
    }
    if (!converged)
        fail(errc::no_convergence,
             "Jacobi sweep limit (100) reached, off-diagonal residual " + std::to_string(off));

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return a(x, x) < a(y, y); });

    Spectrum s;
    s.eigenvalues.resize(n);
    for (int r = 0; r < n; ++r) s.eigenvalues[r] = a(idx[r], idx[r]);
    if (with_eigenvectors) {
        s.eigenvectors = Matrix(n, n);
        for (int r = 0; r < n; ++r)
            for (int i = 0; i < n; ++i) s.eigenvectors(i, r) = v(i, idx[r]);
    }
    return s;
}

InterlacingReport verify_interlacing(const Spectrum& big, const Spectrum& small, double tol) {
    const int n = big.order();
    const int m = small.order();
    if (m > n)
        fail(errc::size_mismatch, "small spectrum has " + std::to_string(m) + " eigenvalues, big has " +
                                      std::to_string(n));

    // descending indexing as in the interlacing statement
    auto theta = [&](int i) { return big.eigenvalues[n - i]; };   // i in [1, n]
    auto mu = [&](int i) { return small.eigenvalues[m - i]; };    // i in [1, m]

    InterlacingReport rep;
    for (int i = 1; i <= m; ++i) {
        const double lower = theta(n - m + i);
        const double upper = theta(i);
        const double x = mu(i);
        if (x < lower - tol || x > upper + tol) rep.violations.push_back({i, lower, x, upper});
    }
    rep.holds = rep.violations.empty();
    if (rep.holds) {
        for (int k = 0; k <= m && !rep.tight; ++k) {
            bool ok = true;
            for (int i = 1; i <= k && ok; ++i) ok = std::abs(mu(i) - theta(i)) <= tol;
            for (int i = k + 1; i <= m && ok; ++i) ok = std::abs(mu(i) - theta(n - m + i)) <= tol;
            if (ok) {
                rep.tight = true;
                rep.tight_split_k = k;
            }
        }
    }
    return rep;
}

} // namespace speccol
