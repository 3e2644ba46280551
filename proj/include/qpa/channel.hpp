#pragma once

#include <vector>

#include "qpa/complex_matrix.hpp"
#include "qpa/eig.hpp"

namespace qpa {

/// A linear map on M_n stored through its Choi matrix
///
///     Ch(Phi) = sum_ij E_ij (x) Phi(E_ij),
///
/// an n^2 x n^2 Hermitian matrix whose (i,j) block of size n holds Phi(E_ij).
/// The row-block index is the first tensor factor; every partial-trace
/// convention in this library follows that ordering. Hermitian storage means
/// the represented maps satisfy Phi(X*) = Phi(X)*.
class ChannelMap {
public:
    ChannelMap() = default;
    /// choi must have dimension n^2 for some n >= 1.
    explicit ChannelMap(HermitianMatrix choi);

    static ChannelMap identity(std::size_t n);
    /// The map X -> sum_m K_m X K_m*.
    static ChannelMap from_kraus(std::size_t n, const std::vector<ComplexMatrix>& kraus);
    /// Zero map on M_n.
    static ChannelMap zero(std::size_t n);

    std::size_t ambient_dim() const { return n_; }
    const HermitianMatrix& choi() const { return choi_; }
    /// Block (i,j) of the Choi matrix, i.e. Phi(E_ij).
    ComplexMatrix block(std::size_t i, std::size_t j) const;

    /// Phi(x) = sum_ij x_ij Phi(E_ij).
    ComplexMatrix apply(const ComplexMatrix& x) const;
    /// Phi(I), read off as the left partial trace of the Choi matrix.
    HermitianMatrix apply_identity() const;

    bool is_completely_positive(double tol = kPsdTol) const;
    bool is_unital(double tol = kPsdTol) const;
    bool is_trace_preserving(double tol = kPsdTol) const;

    ChannelMap operator+(const ChannelMap& o) const;
    ChannelMap operator-(const ChannelMap& o) const;
    ChannelMap scaled(double s) const;

private:
    std::size_t n_ = 0;
    HermitianMatrix choi_;
};

/// <Phi,Psi>_K = tr(Phi(I)Psi(I)*) + sum_{i != j} tr(Phi(E_ij)Psi(E_ij)*).
/// Conjugate symmetric; real-valued for Hermitian-Choi maps.
cplx k_inner(const ChannelMap& p, const ChannelMap& q);

double k_norm(const ChannelMap& p);
double k_distance(const ChannelMap& p, const ChannelMap& q);

/// The diagonal-unitary average of Phi: diagonal Choi blocks are pinched to
/// their diagonals and the off-diagonal block (i,j) keeps only its (i,j)
/// entry. Contracts the K-norm and preserves CP, unital and trace-preserving.
ChannelMap phi_prime(const ChannelMap& p);

/// [A_Phi]_ij = Phi(E_ij)_ij. Requires Phi completely positive; the result is
/// then positive semidefinite with max_i [A_Phi]_ii <= ||Phi(I)||.
HermitianMatrix a_phi(const ChannelMap& p, double tol = kPsdTol);

/// A_Phi with the diagonal overwritten by the operator norm ||Phi(I)||.
/// Requires Phi completely positive; positive semidefinite.
HermitianMatrix b_phi(const ChannelMap& p, double tol = kPsdTol);

/// Schur multiplier channel X -> a o X. CP iff a is PSD; unital and
/// trace-preserving iff diag(a) is all ones.
ChannelMap schur_channel(const HermitianMatrix& a);

/// Phi^Q(x) = Q* Phi(Q x Q*) Q for unitary Q. For diagonal-unitary or
/// permutation Q the K-norm is invariant.
ChannelMap conjugate_channel(const ChannelMap& p, const ComplexMatrix& q);

} // namespace qpa
