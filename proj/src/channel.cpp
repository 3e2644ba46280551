#include "qpa/channel.hpp"

#include <cmath>
#include <string>

#include "qpa/errors.hpp"

namespace qpa {

namespace {

std::size_t isqrt_exact(std::size_t m, const char* context) {
    std::size_t r = static_cast<std::size_t>(std::lround(std::sqrt(double(m))));
    while (r * r > m) --r;
    while ((r + 1) * (r + 1) <= m) ++r;
    if (r * r != m || r == 0)
        throw DimensionError(std::string(context) + ": Choi dimension " + std::to_string(m) +
                             " is not a positive perfect square");
    return r;
}

} // namespace

ChannelMap::ChannelMap(HermitianMatrix choi) : choi_(std::move(choi)) {
    n_ = isqrt_exact(choi_.dim(), "ChannelMap");
}

ChannelMap ChannelMap::identity(std::size_t n) {
    ComplexMatrix c(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i * n + i, j * n + j) = 1.0;
    return ChannelMap(HermitianMatrix(c));
}

ChannelMap ChannelMap::zero(std::size_t n) { return ChannelMap(HermitianMatrix::zero(n * n)); }

ChannelMap ChannelMap::from_kraus(std::size_t n, const std::vector<ComplexMatrix>& kraus) {
    ComplexMatrix c(n * n, n * n);
    for (const auto& k : kraus) {
        if (k.rows() != n || k.cols() != n) throw DimensionError("from_kraus: operator not n x n");
        // vec(K) vec(K)* in the E_ij (x) K E_ij K* expansion: block (i,j) of
        // the Choi matrix gains (K e_i)(K e_j)*.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        c(i * n + a, j * n + b) += k(a, i) * std::conj(k(b, j));
    }
    return ChannelMap(HermitianMatrix(c));
}

ComplexMatrix ChannelMap::block(std::size_t i, std::size_t j) const {
    ComplexMatrix b(n_, n_);
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t c = 0; c < n_; ++c) b(a, c) = choi_(i * n_ + a, j * n_ + c);
    return b;
}

ComplexMatrix ChannelMap::apply(const ComplexMatrix& x) const {
    if (x.rows() != n_ || x.cols() != n_) throw DimensionError("ChannelMap::apply: x is not n x n");
    ComplexMatrix out(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const cplx xij = x(i, j);
            if (xij == cplx{0.0, 0.0}) continue;
            for (std::size_t a = 0; a < n_; ++a)
                for (std::size_t b = 0; b < n_; ++b) out(a, b) += xij * choi_(i * n_ + a, j * n_ + b);
        }
    return out;
}

HermitianMatrix ChannelMap::apply_identity() const { return partial_trace_left(choi_, n_, n_); }

bool ChannelMap::is_completely_positive(double tol) const { return is_psd(choi_, tol); }

bool ChannelMap::is_unital(double tol) const {
    const auto pt = partial_trace_left(choi_, n_, n_);
    return (pt.mat() - ComplexMatrix::identity(n_)).max_abs() <= tol;
}

bool ChannelMap::is_trace_preserving(double tol) const {
    const auto pt = partial_trace_right(choi_, n_, n_);
    return (pt.mat() - ComplexMatrix::identity(n_)).max_abs() <= tol;
}

ChannelMap ChannelMap::operator+(const ChannelMap& o) const { return ChannelMap(choi_ + o.choi_); }
ChannelMap ChannelMap::operator-(const ChannelMap& o) const { return ChannelMap(choi_ - o.choi_); }
ChannelMap ChannelMap::scaled(double s) const { return ChannelMap(choi_.scaled(s)); }

cplx k_inner(const ChannelMap& p, const ChannelMap& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw DimensionError("k_inner: ambient dimensions differ");
    const std::size_t n = p.ambient_dim();
    cplx v = hs_inner(p.apply_identity(), q.apply_identity());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            v += hs_inner(p.block(i, j), q.block(i, j));
        }
    return v;
}

double k_norm(const ChannelMap& p) {
    const double v = k_inner(p, p).real();
    return std::sqrt(std::max(0.0, v));
}

double k_distance(const ChannelMap& p, const ChannelMap& q) { return k_norm(p - q); }

ChannelMap phi_prime(const ChannelMap& p) {
    const std::size_t n = p.ambient_dim();
    ComplexMatrix c(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                for (std::size_t a = 0; a < n; ++a)
                    c(i * n + a, i * n + a) = p.choi()(i * n + a, i * n + a);
            } else {
                c(i * n + i, j * n + j) = p.choi()(i * n + i, j * n + j);
            }
        }
    return ChannelMap(HermitianMatrix(c));
}

static void require_cp(const ChannelMap& p, double tol, const char* op) {
    if (!p.is_completely_positive(tol))
        throw PreconditionError(std::string(op) + ": map is not completely positive");
}

HermitianMatrix a_phi(const ChannelMap& p, double tol) {
    require_cp(p, tol, "a_phi");
    const std::size_t n = p.ambient_dim();
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = p.choi()(i * n + i, j * n + j);
    return HermitianMatrix(a);
}

HermitianMatrix b_phi(const ChannelMap& p, double tol) {
    HermitianMatrix a = a_phi(p, tol);
    const double opnorm = max_eigenvalue(p.apply_identity());
    for (std::size_t i = 0; i < a.dim(); ++i) a.set(i, i, opnorm);
    return a;
}

ChannelMap schur_channel(const HermitianMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix c(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i * n + i, j * n + j) = a(i, j);
    return ChannelMap(HermitianMatrix(c));
}

ChannelMap conjugate_channel(const ChannelMap& p, const ComplexMatrix& q) {
    const std::size_t n = p.ambient_dim();
    if (q.rows() != n || q.cols() != n)
        throw DimensionError("conjugate_channel: unitary has wrong shape");
    if ((q.adjoint() * q - ComplexMatrix::identity(n)).max_abs() > 1e-10)
        throw PreconditionError("conjugate_channel: q is not unitary");
    const ComplexMatrix qa = q.adjoint();
    ComplexMatrix c(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // Phi^Q(E_ij) = Q* Phi((Q e_i)(Q e_j)*) Q
            ComplexMatrix x(n, n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) x(a, b) = q(a, i) * std::conj(q(b, j));
            const ComplexMatrix img = qa * p.apply(x) * q;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) c(i * n + a, j * n + b) = img(a, b);
        }
    return ChannelMap(HermitianMatrix(c));
}

} // namespace qpa
