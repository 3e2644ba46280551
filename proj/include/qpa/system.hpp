#pragma once

#include <string>
#include <vector>

#include "qpa/channel.hpp"
#include "qpa/complex_matrix.hpp"
#include "qpa/graph.hpp"

namespace qpa {

/// An adjoint-closed unital subspace S of M_n, stored by a spanning basis.
/// The Hilbert-Schmidt orthonormal basis is computed eagerly at construction
/// (modified Gram-Schmidt with one re-orthogonalization pass, drop tolerance
/// 1e-10), so all reads are pure.
class MatricialSystem {
public:
    /// Validates that the identity lies in the span and that the span is
    /// closed under adjoints; throws InvalidSystemError otherwise.
    static MatricialSystem from_basis(std::size_t n, const std::vector<ComplexMatrix>& mats);

    /// Matrices supported on the diagonal and the edges of g; dim n + 2|E|.
    static MatricialSystem graph_system(const Graph& g);

    /// Matrices with constant diagonal: span of I_n and the off-diagonal
    /// units; dim n^2 - n + 1.
    static MatricialSystem constant_diagonal_system(std::size_t n);

    /// All of M_n.
    static MatricialSystem full(std::size_t n);

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return onb_.size(); }
    const std::vector<ComplexMatrix>& basis() const { return basis_; }
    const std::vector<ComplexMatrix>& orthonormal_basis() const { return onb_; }

    /// Orthogonal projection of x onto S.
    ComplexMatrix project(const ComplexMatrix& x) const;

    /// ||P(x) - x||_2 <= 1e-9 ||x||_2.
    bool contains(const ComplexMatrix& x) const;

    /// Hermitian basis of the orthocomplement S^perp, obtained by completing
    /// the orthonormal basis to a full basis of M_n and splitting the tail
    /// into Hermitian parts. Size n^2 - dim(S); real-linearly independent.
    const std::vector<HermitianMatrix>& orthocomplement_hermitian_basis() const {
        return perp_herm_;
    }

    /// The projection P_S as a map, via its Choi matrix sum E_ij (x) P(E_ij).
    ChannelMap projection_channel() const;

    std::string description() const { return desc_; }

private:
    MatricialSystem() = default;
    void finalize(); // builds onb_ and perp_herm_, validates

    std::size_t n_ = 0;
    std::vector<ComplexMatrix> basis_;
    std::vector<ComplexMatrix> onb_;
    std::vector<HermitianMatrix> perp_herm_;
    std::string desc_ = "system";
};

/// Tensor product system: span of all kron(b, c); ambient n_s * n_t.
MatricialSystem tensor(const MatricialSystem& s, const MatricialSystem& t);

/// The closed-form nearest quantum operation to the constant-diagonal
/// projection: A -> tr(A)/n I + sum_{i != j} A_ij/n E_ij.
ChannelMap optimal_diag_channel(std::size_t n);

} // namespace qpa
