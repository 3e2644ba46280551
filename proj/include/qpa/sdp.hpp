#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qpa/complex_matrix.hpp"

namespace qpa {

enum class SdpSense { Maximize, Minimize };
enum class SdpStatus { Optimal, MaxIterations, InfeasibleSuspected };

/// One upper-triangle entry (row <= col) of a Hermitian data matrix, indexed
/// over the direct-sum variable; the mirror entry is implied.
struct SparseEntry {
    std::size_t row;
    std::size_t col;
    cplx value;
};

/// Complex-Hermitian semidefinite program over a block-diagonal variable:
///
///     max/min  C . X   s.t.  A_i . X = b_i,  X psd,
///
/// where "." is the Hilbert-Schmidt pairing (real on Hermitian pairs). Data
/// matrices are stored sparsely by upper-triangle entries; every entry must
/// fall inside one of the declared diagonal blocks.
class SdpProblem {
public:
    explicit SdpProblem(SdpSense sense, std::vector<std::size_t> block_dims);
    /// Single-block problem from dense data.
    static SdpProblem from_dense(SdpSense sense, const HermitianMatrix& objective,
                                 const std::vector<std::pair<HermitianMatrix, double>>& constraints);

    SdpSense sense() const { return sense_; }
    const std::vector<std::size_t>& block_dims() const { return dims_; }
    std::size_t total_dim() const { return total_; }
    std::size_t constraint_count() const { return rows_.size(); }

    void add_objective_entry(std::size_t row, std::size_t col, cplx v);
    /// Returns the new constraint's index.
    std::size_t add_constraint(std::vector<SparseEntry> entries, double rhs);

    const std::vector<SparseEntry>& objective() const { return obj_; }
    const std::vector<SparseEntry>& constraint(std::size_t i) const { return rows_[i].entries; }
    double rhs(std::size_t i) const { return rows_[i].rhs; }

    /// True when every stored entry has zero imaginary part.
    bool is_real() const;

    HermitianMatrix objective_dense() const;
    HermitianMatrix constraint_dense(std::size_t i) const;

    /// Index of the block containing global index r, and its offset.
    std::size_t block_of(std::size_t r, std::size_t* offset = nullptr) const;

private:
    struct Row {
        std::vector<SparseEntry> entries;
        double rhs;
    };
    void validate_entries(const std::vector<SparseEntry>& entries) const;

    SdpSense sense_;
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> starts_;
    std::size_t total_ = 0;
    std::vector<SparseEntry> obj_;
    std::vector<Row> rows_;
};

struct SdpOptions {
    double tol_gap = 1e-9;
    double tol_feas = 1e-9;
    std::size_t max_iter = 200;
    bool verbose = false;
};

/// Certified primal-dual solution. X and S are dense block-diagonal matrices
/// of the problem's total dimension; y holds one multiplier per constraint
/// (zero for rows dropped as linearly dependent).
struct SdpSolution {
    HermitianMatrix X;
    HermitianMatrix S;
    std::vector<double> y;
    double primal_obj = 0.0;
    double dual_obj = 0.0;
    double gap = 0.0; // |primal_obj - dual_obj|
    double feas_primal = 0.0;
    double feas_dual = 0.0;
    SdpStatus status = SdpStatus::MaxIterations;
    std::size_t iterations = 0;
    /// Weak duality (dual >= primal for a max problem) monitored once both
    /// residuals are inside tolerance.
    bool weak_duality_ok = true;
};

/// Primal-dual interior-point solve (Mehrotra predictor-corrector, HKM
/// scaling, dense per-block kernels). Complex problems are reduced to real
/// symmetric form first; the reduction's doubled objective is mapped back.
/// Deterministic: fixed scaled-identity initialization, no randomized
/// pivoting.
SdpSolution solve(const SdpProblem& p, const SdpOptions& opts = {});

/// The Goemans-Williamson style real form of a complex program: every block
/// dimension doubles, data maps to [[re A, -im A], [im A, re A]], right-hand
/// sides double, and per-block consistency rows (F/G) pin the embedded
/// structure. The optimum is exactly twice the complex optimum.
SdpProblem complex_to_real(const SdpProblem& p);

/// Symbolic dual: minimize b^T y subject to sum_i y_i A_i - C psd (for a
/// maximization primal; senses swap otherwise). Matrices are shared with the
/// primal by index.
struct DualDescription {
    SdpSense sense;
    std::vector<double> b;
    std::size_t matrix_count = 0;
    std::string text;
};
DualDescription dual_of(const SdpProblem& p);

/// SDPA sparse export: "m, nblocks, blockdims, b vector, then entries
/// 'k blk i j val'" with 1-based indices, upper triangle only; k = 0 is the
/// objective matrix. Complex problems are exported in realified form. The
/// orientation matches SDPA's: min b^T y s.t. sum y_i F_i - F_0 psd with
/// F_0 = C and F_i = A_i.
void write_sdpa_sparse(const SdpProblem& p, std::ostream& out);

} // namespace qpa
