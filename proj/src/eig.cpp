#include "qpa/eig.hpp"

#include <algorithm>
#include <cmath>

#include "qpa/errors.hpp"

namespace qpa {

RealMatrix real_embedding(const ComplexMatrix& a) {
    const std::size_t n = a.rows(), m = a.cols();
    RealMatrix r(2 * n, 2 * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const double re = a(i, j).real(), im = a(i, j).imag();
            r(i, j) = re;
            r(i, j + m) = -im;
            r(i + n, j) = im;
            r(i + n, j + m) = re;
        }
    return r;
}

std::vector<double> eigvals_hermitian(const HermitianMatrix& a) {
    const std::size_t n = a.dim();
    bool real_only = true;
    for (std::size_t i = 0; i < n && real_only; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, j).imag() != 0.0) {
                real_only = false;
                break;
            }
    if (real_only) {
        RealMatrix r(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r(i, j) = a(i, j).real();
        return eigvals_symmetric(r);
    }
    // The embedding doubles every eigenvalue's multiplicity; keep one copy.
    const std::vector<double> w = eigvals_symmetric(real_embedding(a.mat()));
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < w.size(); i += 2) out.push_back(0.5 * (w[i] + w[i + 1]));
    return out;
}

HermitianEig eig_hermitian(const HermitianMatrix& a) {
    const std::size_t n = a.dim();
    HermitianEig out;
    if (n == 0) return out;

    SymmetricEig emb = eig_symmetric(real_embedding(a.mat()));
    const double scale = std::max({1.0, std::abs(emb.values.front()), std::abs(emb.values.back())});
    const double cluster_tol = 1e-10 * scale;

    out.values.reserve(n);
    out.vectors = ComplexMatrix(n, n);
    std::vector<ComplexMatrix> accepted; // unit eigenvectors as n x 1 columns
    accepted.reserve(n);

    std::size_t lo = 0;
    while (lo < 2 * n) {
        std::size_t hi = lo + 1;
        while (hi < 2 * n && emb.values[hi] - emb.values[hi - 1] <= cluster_tol) ++hi;
        const std::size_t count = hi - lo;
        if (count % 2 != 0)
            throw NumericalError("eig_hermitian: embedded eigenvalue pairing failed");
        const std::size_t want = count / 2;

        // Candidate complex vectors u + iv from embedded eigenvectors (u; v).
        std::vector<ComplexMatrix> cand;
        std::vector<double> cand_val;
        for (std::size_t k = lo; k < hi; ++k) {
            ComplexMatrix z(n, 1);
            for (std::size_t i = 0; i < n; ++i)
                z(i, 0) = cplx{emb.vectors(i, k), emb.vectors(i + n, k)};
            cand.push_back(std::move(z));
            cand_val.push_back(emb.values[k]);
        }
        // Pivoted Gram-Schmidt: the candidates form a tight frame of the
        // cluster eigenspace, so the largest residual stays bounded away
        // from zero until `want` vectors are taken.
        std::vector<bool> used(cand.size(), false);
        for (std::size_t taken = 0; taken < want; ++taken) {
            double best = -1.0;
            std::size_t best_k = 0;
            ComplexMatrix best_r;
            for (std::size_t k = 0; k < cand.size(); ++k) {
                if (used[k]) continue;
                ComplexMatrix r = cand[k];
                for (std::size_t rep = 0; rep < 2; ++rep)
                    for (std::size_t j = accepted.size() - taken; j < accepted.size(); ++j)
                        r -= accepted[j] * hs_inner(r, accepted[j]);
                const double nr = r.frobenius_norm();
                if (nr > best) {
                    best = nr;
                    best_k = k;
                    best_r = std::move(r);
                }
            }
            if (best < 1e-6)
                throw NumericalError("eig_hermitian: eigenvector extraction degenerated");
            used[best_k] = true;
            accepted.push_back(best_r * cplx{1.0 / best, 0.0});
            out.values.push_back(cand_val[best_k]);
        }
        lo = hi;
    }

    // Ascending by eigenvalue (pivoting may reorder inside a cluster).
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t x, std::size_t y) { return out.values[x] < out.values[y]; });
    std::vector<double> vals(n);
    for (std::size_t c = 0; c < n; ++c) {
        vals[c] = out.values[idx[c]];
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, c) = accepted[idx[c]](i, 0);
    }
    out.values = std::move(vals);
    return out;
}

bool is_psd(const HermitianMatrix& a, double tol) {
    if (tol < 0.0) throw DimensionError("is_psd: tolerance must be nonnegative");
    if (a.dim() == 0) return true;
    return eigvals_hermitian(a).front() >= -tol;
}

double min_eigenvalue(const HermitianMatrix& a) { return eigvals_hermitian(a).front(); }
double max_eigenvalue(const HermitianMatrix& a) { return eigvals_hermitian(a).back(); }

} // namespace qpa
