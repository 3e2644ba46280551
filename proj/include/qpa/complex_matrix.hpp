#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qpa/errors.hpp"

namespace qpa {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
    /// Build from nested initializer lists; throws on ragged rows.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);
    static ComplexMatrix ones(std::size_t rows, std::size_t cols);
    /// Matrix unit E_{ij} (0-based indices).
    static ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<cplx>& data() const { return data_; }
    std::vector<cplx>& data() { return data_; }

    ComplexMatrix operator+(const ComplexMatrix& o) const;
    ComplexMatrix operator-(const ComplexMatrix& o) const;
    ComplexMatrix operator*(const ComplexMatrix& o) const; // matrix product
    ComplexMatrix operator*(cplx s) const;
    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    /// True when every entry is finite.
    bool all_finite() const;
    /// Throws NumericalError when a non-finite entry is present.
    void require_finite(const char* context) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

inline ComplexMatrix operator*(cplx s, const ComplexMatrix& m) { return m * s; }

/// Square matrix equal to its conjugate transpose exactly. Construction
/// symmetrizes via (A + A*)/2 and zeroes the imaginary part of the diagonal,
/// so downstream spectral code may assume bit-exact Hermitian symmetry.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(std::size_t dim) : mat_(dim, dim) {}
    explicit HermitianMatrix(const ComplexMatrix& a);

    static HermitianMatrix identity(std::size_t n);
    static HermitianMatrix zero(std::size_t n);
    static HermitianMatrix all_ones(std::size_t n);

    std::size_t dim() const { return mat_.rows(); }
    const cplx& operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }
    const ComplexMatrix& mat() const { return mat_; }
    operator const ComplexMatrix&() const { return mat_; }

    /// Set the symmetric pair (i,j) and (j,i); v is conjugated for the mirror
    /// entry, and the imaginary part is discarded when i == j.
    void set(std::size_t i, std::size_t j, cplx v);

    HermitianMatrix operator+(const HermitianMatrix& o) const;
    HermitianMatrix operator-(const HermitianMatrix& o) const;
    HermitianMatrix scaled(double s) const;
    double frobenius_norm() const { return mat_.frobenius_norm(); }
    double trace_real() const { return mat_.trace().real(); }

private:
    ComplexMatrix mat_;
};

/// Hilbert-Schmidt inner product <a,b> = tr(b* a) = sum_ij a_ij conj(b_ij).
cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Entrywise (Schur) product.
ComplexMatrix schur_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; (kron(a,b))[(i1*rb+i2),(j1*cb+j2)] = a(i1,j1) b(i2,j2).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b);

/// For m of dim n*k viewed as blocks B_ij (each k x k, i,j in [n]),
/// returns sum_i B_ii. Realizes the trace over the first tensor factor.
HermitianMatrix partial_trace_left(const HermitianMatrix& m, std::size_t n, std::size_t k);

/// Returns the n x n matrix with entries tr(B_ij): trace over the second factor.
HermitianMatrix partial_trace_right(const HermitianMatrix& m, std::size_t n, std::size_t k);

} // namespace qpa
