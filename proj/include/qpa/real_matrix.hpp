#pragma once

#include <cstddef>
#include <vector>

namespace qpa {

/// Dense real matrix, row-major.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RealMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }
    double* row_ptr(std::size_t i) { return &data_[i * cols_]; }
    const double* row_ptr(std::size_t i) const { return &data_[i * cols_]; }

    RealMatrix transpose() const;
    double trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    void add_scaled(const RealMatrix& o, double s); // this += s*o
    void scale(double s);

    /// this <- (this + this^T)/2
    void symmetrize();

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// C = A * B (dense, cache-friendly ikj order).
RealMatrix matmul(const RealMatrix& a, const RealMatrix& b);

/// tr(A^T B) over all entries.
double dot(const RealMatrix& a, const RealMatrix& b);

/// Eigen-decomposition of a real symmetric matrix: a = V diag(w) V^T with
/// eigenvalues ascending. Householder tridiagonalization followed by
/// implicit-shift QL. Throws NumericalError when QL fails to converge.
struct SymmetricEig {
    std::vector<double> values;  // ascending
    RealMatrix vectors;          // columns are eigenvectors
};
SymmetricEig eig_symmetric(const RealMatrix& a);

/// Eigenvalues only (ascending), same reduction without accumulating vectors.
std::vector<double> eigvals_symmetric(const RealMatrix& a);

/// Eigenvalues (ascending) of a symmetric tridiagonal matrix given by its
/// diagonal and subdiagonal. Used by the Lanczos step-length estimator.
std::vector<double> eigvals_tridiagonal(std::vector<double> diag, std::vector<double> sub);

/// Cholesky factorization a = L L^T (lower). Returns false when a pivot is
/// not strictly positive, leaving l unspecified.
bool cholesky(const RealMatrix& a, RealMatrix& l);

/// Solve L x = b in place (lower triangular).
void solve_lower(const RealMatrix& l, std::vector<double>& b);
/// Solve L^T x = b in place.
void solve_lower_transposed(const RealMatrix& l, std::vector<double>& b);

/// inv(a) for symmetric positive definite a, via Cholesky.
RealMatrix spd_inverse(const RealMatrix& l_factor);

} // namespace qpa
