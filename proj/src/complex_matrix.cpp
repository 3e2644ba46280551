#include "qpa/complex_matrix.hpp"

#include <cmath>
#include <string>

namespace qpa {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw DimensionError("entry count does not match rows*cols");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged initializer rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

ComplexMatrix ComplexMatrix::ones(std::size_t rows, std::size_t cols) {
    ComplexMatrix m(rows, cols);
    for (auto& v : m.data_) v = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    ComplexMatrix m(n, n);
    m(i, j) = 1.0;
    return m;
}

static void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(std::string(op) + ": shape mismatch (" + std::to_string(a.rows()) +
                             "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                             "x" + std::to_string(b.cols()) + ")");
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
    require_same_shape(*this, o, "add");
    ComplexMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
    require_same_shape(*this, o, "sub");
    ComplexMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    require_same_shape(*this, o, "add");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    require_same_shape(*this, o, "sub");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& v : data_) v *= s;
    return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matmul: inner dimensions differ");
    ComplexMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const cplx* arow = &data_[i * cols_];
        cplx* rrow = &r.data_[i * o.cols_];
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx aik = arow[k];
            if (aik == cplx{0.0, 0.0}) continue;
            const cplx* brow = &o.data_[k * o.cols_];
            for (std::size_t j = 0; j < o.cols_; ++j) rrow[j] += aik * brow[j];
        }
    }
    return r;
}

ComplexMatrix ComplexMatrix::operator*(cplx s) const {
    ComplexMatrix r = *this;
    r *= s;
    return r;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix r = *this;
    for (auto& v : r.data_) v = std::conj(v);
    return r;
}

cplx ComplexMatrix::trace() const {
    if (rows_ != cols_) throw DimensionError("trace: matrix not square");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const auto& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

void ComplexMatrix::require_finite(const char* context) const {
    if (!all_finite()) throw NumericalError(std::string(context) + ": non-finite entry");
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("HermitianMatrix: matrix not square");
    a.require_finite("HermitianMatrix");
    const std::size_t n = a.rows();
    mat_ = ComplexMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        mat_(i, i) = cplx{a(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx h = 0.5 * (a(i, j) + std::conj(a(j, i)));
            mat_(i, j) = h;
            mat_(j, i) = std::conj(h);
        }
    }
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
    HermitianMatrix h(n);
    h.mat_ = ComplexMatrix::identity(n);
    return h;
}

HermitianMatrix HermitianMatrix::zero(std::size_t n) { return HermitianMatrix(n); }

HermitianMatrix HermitianMatrix::all_ones(std::size_t n) {
    HermitianMatrix h(n);
    h.mat_ = ComplexMatrix::ones(n, n);
    return h;
}

void HermitianMatrix::set(std::size_t i, std::size_t j, cplx v) {
    if (i == j) {
        mat_(i, i) = cplx{v.real(), 0.0};
    } else {
        mat_(i, j) = v;
        mat_(j, i) = std::conj(v);
    }
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
    HermitianMatrix r;
    r.mat_ = mat_ + o.mat_;
    return r;
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
    HermitianMatrix r;
    r.mat_ = mat_ - o.mat_;
    return r;
}

HermitianMatrix HermitianMatrix::scaled(double s) const {
    HermitianMatrix r;
    r.mat_ = mat_ * cplx{s, 0.0};
    return r;
}

cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "hs_inner");
    cplx s = 0.0;
    const auto& ad = a.data();
    const auto& bd = b.data();
    for (std::size_t i = 0; i < ad.size(); ++i) s += ad[i] * std::conj(bd[i]);
    return s;
}

ComplexMatrix schur_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "schur_product");
    ComplexMatrix r = a;
    for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] *= b.data()[i];
    return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const cplx av = a(i1, j1);
            if (av == cplx{0.0, 0.0}) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    r(i1 * b.rows() + i2, j1 * b.cols() + j2) = av * b(i2, j2);
        }
    return r;
}

HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(kron(a.mat(), b.mat()));
}

static void require_factoring(const HermitianMatrix& m, std::size_t n, std::size_t k,
                              const char* op) {
    if (n == 0 || k == 0 || m.dim() != n * k)
        throw DimensionError(std::string(op) + ": dimension " + std::to_string(m.dim()) +
                             " does not factor as " + std::to_string(n) + "*" + std::to_string(k));
}

HermitianMatrix partial_trace_left(const HermitianMatrix& m, std::size_t n, std::size_t k) {
    require_factoring(m, n, k, "partial_trace_left");
    ComplexMatrix out(k, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) out(a, b) += m(i * k + a, i * k + b);
    return HermitianMatrix(out);
}

HermitianMatrix partial_trace_right(const HermitianMatrix& m, std::size_t n, std::size_t k) {
    require_factoring(m, n, k, "partial_trace_right");
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx t = 0.0;
            for (std::size_t a = 0; a < k; ++a) t += m(i * k + a, j * k + a);
            out(i, j) = t;
        }
    return HermitianMatrix(out);
}

} // namespace qpa
