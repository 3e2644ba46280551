#include "qpa/system.hpp"

#include <cmath>
#include <string>

#include "qpa/errors.hpp"

namespace qpa {

namespace {

constexpr double kDropTol = 1e-10;

// Modified Gram-Schmidt with one re-orthogonalization pass; vectors whose
// residual falls under the drop tolerance (relative to their own norm) are
// discarded as dependent.
std::vector<ComplexMatrix> orthonormalize(const std::vector<ComplexMatrix>& mats) {
    std::vector<ComplexMatrix> onb;
    for (const auto& m : mats) {
        const double orig = std::max(1.0, m.frobenius_norm());
        ComplexMatrix v = m;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : onb) v -= q * hs_inner(v, q);
        const double nv = v.frobenius_norm();
        if (nv > kDropTol * orig) onb.push_back(v * cplx{1.0 / nv, 0.0});
    }
    return onb;
}

ComplexMatrix project_onto(const std::vector<ComplexMatrix>& onb, const ComplexMatrix& x) {
    ComplexMatrix p(x.rows(), x.cols());
    for (const auto& q : onb) p += q * hs_inner(x, q);
    return p;
}

} // namespace

MatricialSystem MatricialSystem::from_basis(std::size_t n, const std::vector<ComplexMatrix>& mats) {
    if (n < 1) throw InvalidSystemError("ambient dimension must be >= 1");
    MatricialSystem s;
    s.n_ = n;
    for (const auto& m : mats) {
        if (m.rows() != n || m.cols() != n)
            throw InvalidSystemError("basis matrix is not n x n");
        m.require_finite("MatricialSystem basis");
        s.basis_.push_back(m);
    }
    s.finalize();
    return s;
}

void MatricialSystem::finalize() {
    onb_ = orthonormalize(basis_);

    const auto id = ComplexMatrix::identity(n_);
    if ((project_onto(onb_, id) - id).frobenius_norm() > 1e-10)
        throw InvalidSystemError("unit is not in the span");
    for (const auto& b : basis_) {
        const auto adj = b.adjoint();
        if ((project_onto(onb_, adj) - adj).frobenius_norm() >
            1e-10 * std::max(1.0, adj.frobenius_norm()))
            throw InvalidSystemError("basis is not adjoint-closed");
    }

    // Complete to a full HS-orthonormal basis of M_n; the tail spans S^perp.
    std::vector<ComplexMatrix> complete = onb_;
    std::vector<ComplexMatrix> tail;
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) {
            ComplexMatrix v = ComplexMatrix::unit(n_, a, b);
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& q : complete) v -= q * hs_inner(v, q);
            const double nv = v.frobenius_norm();
            if (nv > kDropTol) {
                v *= cplx{1.0 / nv, 0.0};
                complete.push_back(v);
                tail.push_back(v);
            }
        }

    // S^perp is adjoint-closed, so it is spanned real-linearly by the
    // Hermitian parts of the tail. Keep a real-independent subset.
    std::vector<HermitianMatrix> herm;
    std::vector<ComplexMatrix> kept;
    auto try_add = [&](const ComplexMatrix& cand) {
        ComplexMatrix v = cand;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : kept) v -= q * cplx{hs_inner(v, q).real(), 0.0};
        const double nv = v.frobenius_norm();
        if (nv > kDropTol) {
            v *= cplx{1.0 / nv, 0.0};
            kept.push_back(v);
            herm.emplace_back(v);
        }
    };
    for (const auto& t : tail) {
        try_add((t + t.adjoint()) * cplx{0.5, 0.0});
        try_add((t - t.adjoint()) * cplx{0.0, -0.5});
    }
    if (herm.size() != n_ * n_ - onb_.size())
        throw NumericalError("orthocomplement Hermitian basis has unexpected size");
    perp_herm_ = std::move(herm);
}

MatricialSystem MatricialSystem::graph_system(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<ComplexMatrix> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(ComplexMatrix::unit(n, i, i));
    for (auto [i, j] : g.edges()) {
        basis.push_back(ComplexMatrix::unit(n, i, j));
        basis.push_back(ComplexMatrix::unit(n, j, i));
    }
    auto s = from_basis(n, basis);
    s.desc_ = "S(" + g.description() + ")";
    return s;
}

MatricialSystem MatricialSystem::constant_diagonal_system(std::size_t n) {
    std::vector<ComplexMatrix> basis{ComplexMatrix::identity(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) basis.push_back(ComplexMatrix::unit(n, i, j));
    auto s = from_basis(n, basis);
    s.desc_ = "constdiag:" + std::to_string(n);
    return s;
}

MatricialSystem MatricialSystem::full(std::size_t n) {
    std::vector<ComplexMatrix> basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) basis.push_back(ComplexMatrix::unit(n, i, j));
    auto s = from_basis(n, basis);
    s.desc_ = "M_" + std::to_string(n);
    return s;
}

ComplexMatrix MatricialSystem::project(const ComplexMatrix& x) const {
    if (x.rows() != n_ || x.cols() != n_) throw DimensionError("project: x is not n x n");
    return project_onto(onb_, x);
}

bool MatricialSystem::contains(const ComplexMatrix& x) const {
    return (project(x) - x).frobenius_norm() <= 1e-9 * std::max(1e-300, x.frobenius_norm());
}

ChannelMap MatricialSystem::projection_channel() const {
    ComplexMatrix c(n_ * n_, n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const auto img = project(ComplexMatrix::unit(n_, i, j));
            for (std::size_t a = 0; a < n_; ++a)
                for (std::size_t b = 0; b < n_; ++b) c(i * n_ + a, j * n_ + b) = img(a, b);
        }
    return ChannelMap(HermitianMatrix(c));
}

MatricialSystem tensor(const MatricialSystem& s, const MatricialSystem& t) {
    std::vector<ComplexMatrix> basis;
    for (const auto& b : s.orthonormal_basis())
        for (const auto& c : t.orthonormal_basis()) basis.push_back(kron(b, c));
    return MatricialSystem::from_basis(s.ambient_dim() * t.ambient_dim(), basis);
}

ChannelMap optimal_diag_channel(std::size_t n) {
    if (n < 1) throw PreconditionError("optimal_diag_channel: n must be >= 1");
    ComplexMatrix c(n * n, n * n);
    const double inv = 1.0 / double(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                for (std::size_t a = 0; a < n; ++a) c(i * n + a, i * n + a) = inv;
            else
                c(i * n + i, j * n + j) = inv;
        }
    return ChannelMap(HermitianMatrix(c));
}

} // namespace qpa
