#include "qpa/real_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qpa/errors.hpp"

namespace qpa {

RealMatrix RealMatrix::identity(std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

RealMatrix RealMatrix::transpose() const {
    RealMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

double RealMatrix::trace() const {
    double t = 0.0;
    const std::size_t n = std::min(rows_, cols_);
    for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
}

double RealMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

double RealMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

void RealMatrix::add_scaled(const RealMatrix& o, double s) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += s * o.data_[i];
}

void RealMatrix::scale(double s) {
    for (double& v : data_) v *= s;
}

void RealMatrix::symmetrize() {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j) {
            const double h = 0.5 * ((*this)(i, j) + (*this)(j, i));
            (*this)(i, j) = h;
            (*this)(j, i) = h;
        }
}

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matmul: inner dimensions differ");
    const std::size_t n = a.rows(), m = a.cols(), p = b.cols();
    RealMatrix c(n, p);
    for (std::size_t i = 0; i < n; ++i) {
        const double* arow = a.row_ptr(i);
        double* crow = c.row_ptr(i);
        for (std::size_t k = 0; k < m; ++k) {
            const double aik = arow[k];
            if (aik == 0.0) continue;
            const double* brow = b.row_ptr(k);
            for (std::size_t j = 0; j < p; ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

double dot(const RealMatrix& a, const RealMatrix& b) {
    double s = 0.0;
    const auto& ad = a.data();
    const auto& bd = b.data();
    for (std::size_t i = 0; i < ad.size(); ++i) s += ad[i] * bd[i];
    return s;
}

// Householder reduction of a symmetric matrix to tridiagonal form, with
// optional accumulation of the orthogonal transform in z.
static void householder_tridiag(RealMatrix& z, std::vector<double>& d, std::vector<double>& e,
                                bool want_vectors) {
    const std::size_t n = z.rows();
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    if (n == 0) return;
    for (std::size_t i = n - 1; i >= 1; --i) {
        const std::size_t l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (std::size_t k = 0; k <= l; ++k) scale += std::abs(z(i, k));
            if (scale == 0.0) {
                e[i] = z(i, l);
            } else {
                for (std::size_t k = 0; k <= l; ++k) {
                    z(i, k) /= scale;
                    h += z(i, k) * z(i, k);
                }
                double f = z(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                z(i, l) = f - g;
                f = 0.0;
                for (std::size_t j = 0; j <= l; ++j) {
                    if (want_vectors) z(j, i) = z(i, j) / h;
                    g = 0.0;
                    for (std::size_t k = 0; k <= j; ++k) g += z(j, k) * z(i, k);
                    for (std::size_t k = j + 1; k <= l; ++k) g += z(k, j) * z(i, k);
                    e[j] = g / h;
                    f += e[j] * z(i, j);
                }
                const double hh = f / (h + h);
                for (std::size_t j = 0; j <= l; ++j) {
                    f = z(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (std::size_t k = 0; k <= j; ++k) z(j, k) -= f * e[k] + g * z(i, k);
                }
            }
        } else {
            e[i] = z(i, l);
        }
        d[i] = h;
    }
    if (want_vectors) d[0] = 0.0;
    e[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (want_vectors) {
            if (d[i] != 0.0) {
                for (std::size_t j = 0; j < i; ++j) {
                    double g = 0.0;
                    for (std::size_t k = 0; k < i; ++k) g += z(i, k) * z(k, j);
                    for (std::size_t k = 0; k < i; ++k) z(k, j) -= g * z(k, i);
                }
            }
            d[i] = z(i, i);
            z(i, i) = 1.0;
            for (std::size_t j = 0; j < i; ++j) z(j, i) = z(i, j) = 0.0;
        } else {
            d[i] = z(i, i);
        }
    }
}

// Implicit-shift QL on a symmetric tridiagonal matrix; z accumulates the
// rotations when non-null. d holds the diagonal, e the subdiagonal in
// positions 1..n-1 (e[0] unused on input).
static void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, RealMatrix* z) {
    const std::size_t n = d.size();
    if (n == 0) return;
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw NumericalError("QL iteration cap exceeded");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z) {
                        for (std::size_t k = 0; k < z->rows(); ++k) {
                            f = (*z)(k, i + 1);
                            (*z)(k, i + 1) = s * (*z)(k, i) + c * f;
                            (*z)(k, i) = c * (*z)(k, i) - s * f;
                        }
                    }
                }
                if (r == 0.0 && m > l + 1) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

static void sort_eig(std::vector<double>& d, RealMatrix* z) {
    const std::size_t n = d.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    std::vector<double> ds(n);
    for (std::size_t i = 0; i < n; ++i) ds[i] = d[idx[i]];
    if (z) {
        RealMatrix zs(z->rows(), z->cols());
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < z->rows(); ++i) zs(i, j) = (*z)(i, idx[j]);
        *z = std::move(zs);
    }
    d = std::move(ds);
}

SymmetricEig eig_symmetric(const RealMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("eig_symmetric: matrix not square");
    SymmetricEig out;
    out.vectors = a;
    out.vectors.symmetrize();
    std::vector<double> e;
    householder_tridiag(out.vectors, out.values, e, true);
    ql_implicit_shift(out.values, e, &out.vectors);
    sort_eig(out.values, &out.vectors);
    return out;
}

std::vector<double> eigvals_symmetric(const RealMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("eigvals_symmetric: matrix not square");
    RealMatrix work = a;
    work.symmetrize();
    std::vector<double> d, e;
    householder_tridiag(work, d, e, false);
    ql_implicit_shift(d, e, nullptr);
    sort_eig(d, nullptr);
    return d;
}

std::vector<double> eigvals_tridiagonal(std::vector<double> diag, std::vector<double> sub) {
    std::vector<double> e(diag.size(), 0.0);
    for (std::size_t i = 0; i + 1 < diag.size() && i < sub.size(); ++i) e[i + 1] = sub[i];
    ql_implicit_shift(diag, e, nullptr);
    sort_eig(diag, nullptr);
    return diag;
}

bool cholesky(const RealMatrix& a, RealMatrix& l) {
    const std::size_t n = a.rows();
    l = RealMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double diag = a(j, j);
        for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
        if (!(diag > 0.0) || !std::isfinite(diag)) return false;
        const double ljj = std::sqrt(diag);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            const double* li = l.row_ptr(i);
            const double* lj = l.row_ptr(j);
            for (std::size_t k = 0; k < j; ++k) s -= li[k] * lj[k];
            l(i, j) = s / ljj;
        }
    }
    return true;
}

void solve_lower(const RealMatrix& l, std::vector<double>& b) {
    const std::size_t n = l.rows();
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        const double* li = l.row_ptr(i);
        for (std::size_t k = 0; k < i; ++k) s -= li[k] * b[k];
        b[i] = s / li[i];
    }
}

void solve_lower_transposed(const RealMatrix& l, std::vector<double>& b) {
    const std::size_t n = l.rows();
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= l(k, i) * b[k];
        b[i] = s / l(i, i);
    }
}

RealMatrix spd_inverse(const RealMatrix& l) {
    const std::size_t n = l.rows();
    // Columns of the inverse via two triangular solves against unit vectors.
    RealMatrix inv(n, n);
    std::vector<double> col(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(col.begin(), col.end(), 0.0);
        col[j] = 1.0;
        solve_lower(l, col);
        solve_lower_transposed(l, col);
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    inv.symmetrize();
    return inv;
}

} // namespace qpa
