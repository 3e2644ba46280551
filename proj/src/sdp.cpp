#include "qpa/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "qpa/errors.hpp"
#include "qpa/real_matrix.hpp"

namespace qpa {

// ---------------------------------------------------------------------------
// SdpProblem
// ---------------------------------------------------------------------------

SdpProblem::SdpProblem(SdpSense sense, std::vector<std::size_t> block_dims)
    : sense_(sense), dims_(std::move(block_dims)) {
    if (dims_.empty()) throw DimensionError("SdpProblem: needs at least one block");
    for (std::size_t d : dims_) {
        if (d < 1) throw DimensionError("SdpProblem: block dimension must be >= 1");
        starts_.push_back(total_);
        total_ += d;
    }
}

SdpProblem SdpProblem::from_dense(
    SdpSense sense, const HermitianMatrix& objective,
    const std::vector<std::pair<HermitianMatrix, double>>& constraints) {
    SdpProblem p(sense, {objective.dim()});
    for (std::size_t i = 0; i < objective.dim(); ++i)
        for (std::size_t j = i; j < objective.dim(); ++j)
            if (objective(i, j) != cplx{0.0, 0.0}) p.add_objective_entry(i, j, objective(i, j));
    for (const auto& [a, b] : constraints) {
        if (a.dim() != objective.dim())
            throw DimensionError("from_dense: constraint dimension mismatch");
        std::vector<SparseEntry> es;
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = i; j < a.dim(); ++j)
                if (a(i, j) != cplx{0.0, 0.0}) es.push_back({i, j, a(i, j)});
        p.add_constraint(std::move(es), b);
    }
    return p;
}

std::size_t SdpProblem::block_of(std::size_t r, std::size_t* offset) const {
    for (std::size_t b = dims_.size(); b-- > 0;) {
        if (r >= starts_[b]) {
            if (offset) *offset = starts_[b];
            return b;
        }
    }
    throw DimensionError("index outside variable");
}

void SdpProblem::validate_entries(const std::vector<SparseEntry>& entries) const {
    for (const auto& e : entries) {
        if (e.row > e.col) throw DimensionError("sparse entry must have row <= col");
        if (e.col >= total_) throw DimensionError("sparse entry outside variable dimension");
        std::size_t off = 0;
        const std::size_t b = block_of(e.row, &off);
        if (e.col >= off + dims_[b])
            throw DimensionError("sparse entry crosses block boundary");
        if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag()))
            throw NumericalError("sparse entry is not finite");
        if (e.row == e.col && e.value.imag() != 0.0)
            throw DimensionError("diagonal entry of a Hermitian datum must be real");
    }
}

void SdpProblem::add_objective_entry(std::size_t row, std::size_t col, cplx v) {
    validate_entries({{row, col, v}});
    obj_.push_back({row, col, v});
}

std::size_t SdpProblem::add_constraint(std::vector<SparseEntry> entries, double rhs) {
    if (!std::isfinite(rhs)) throw NumericalError("constraint rhs is not finite");
    validate_entries(entries);
    rows_.push_back({std::move(entries), rhs});
    return rows_.size() - 1;
}

bool SdpProblem::is_real() const {
    for (const auto& e : obj_)
        if (e.value.imag() != 0.0) return false;
    for (const auto& r : rows_)
        for (const auto& e : r.entries)
            if (e.value.imag() != 0.0) return false;
    return true;
}

static HermitianMatrix densify(std::size_t total, const std::vector<SparseEntry>& entries) {
    ComplexMatrix m(total, total);
    for (const auto& e : entries) {
        m(e.row, e.col) += e.value;
        if (e.row != e.col) m(e.col, e.row) += std::conj(e.value);
    }
    return HermitianMatrix(m);
}

HermitianMatrix SdpProblem::objective_dense() const { return densify(total_, obj_); }
HermitianMatrix SdpProblem::constraint_dense(std::size_t i) const {
    return densify(total_, rows_[i].entries);
}

// ---------------------------------------------------------------------------
// complex -> real reduction
// ---------------------------------------------------------------------------

SdpProblem complex_to_real(const SdpProblem& p) {
    std::vector<std::size_t> dims;
    std::vector<std::size_t> starts_old, starts_new;
    std::size_t told = 0, tnew = 0;
    for (std::size_t d : p.block_dims()) {
        starts_old.push_back(told);
        starts_new.push_back(tnew);
        dims.push_back(2 * d);
        told += d;
        tnew += 2 * d;
    }
    SdpProblem q(p.sense(), dims);

    auto map_entries = [&](const std::vector<SparseEntry>& src) {
        std::vector<SparseEntry> out;
        for (const auto& e : src) {
            std::size_t off = 0;
            const std::size_t b = p.block_of(e.row, &off);
            const std::size_t d = p.block_dims()[b];
            const std::size_t i = e.row - off, j = e.col - off;
            const std::size_t base = starts_new[b];
            const double re = e.value.real(), im = e.value.imag();
            if (re != 0.0) {
                out.push_back({base + i, base + j, re});
                out.push_back({base + d + i, base + d + j, re});
            }
            if (i != j && im != 0.0) {
                out.push_back({base + i, base + d + j, -im});
                out.push_back({base + j, base + d + i, im});
            }
        }
        return out;
    };

    for (const auto& e : map_entries(p.objective())) q.add_objective_entry(e.row, e.col, e.value);
    for (std::size_t i = 0; i < p.constraint_count(); ++i)
        q.add_constraint(map_entries(p.constraint(i)), 2.0 * p.rhs(i));

    // Consistency rows pinning the embedded structure: equal diagonal blocks
    // (F) and a skew off-diagonal block (G), spanned over symmetric units.
    for (std::size_t b = 0; b < p.block_dims().size(); ++b) {
        const std::size_t d = p.block_dims()[b];
        const std::size_t base = starts_new[b];
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j) {
                q.add_constraint({{base + i, base + j, 1.0}, {base + d + i, base + d + j, -1.0}},
                                 0.0);
                if (i == j) {
                    q.add_constraint({{base + i, base + d + i, 1.0}}, 0.0);
                } else {
                    q.add_constraint({{base + i, base + d + j, 1.0}, {base + j, base + d + i, 1.0}},
                                     0.0);
                }
            }
    }
    return q;
}

// ---------------------------------------------------------------------------
// Symbolic dual and SDPA export
// ---------------------------------------------------------------------------

DualDescription dual_of(const SdpProblem& p) {
    DualDescription d;
    d.sense = p.sense() == SdpSense::Maximize ? SdpSense::Minimize : SdpSense::Maximize;
    d.matrix_count = p.constraint_count();
    d.b.reserve(p.constraint_count());
    for (std::size_t i = 0; i < p.constraint_count(); ++i) d.b.push_back(p.rhs(i));
    std::ostringstream os;
    os << (d.sense == SdpSense::Minimize ? "minimize" : "maximize") << " b^T y  s.t.  "
       << (p.sense() == SdpSense::Maximize ? "sum_i y_i A_i - C" : "C - sum_i y_i A_i")
       << " psd,  m = " << p.constraint_count();
    d.text = os.str();
    return d;
}

void write_sdpa_sparse(const SdpProblem& p, std::ostream& out) {
    const SdpProblem* q = &p;
    SdpProblem realified = p; // copy only used when complex
    if (!p.is_real()) {
        realified = complex_to_real(p);
        q = &realified;
    }
    out << q->constraint_count() << "\n";
    out << q->block_dims().size() << "\n";
    for (std::size_t b = 0; b < q->block_dims().size(); ++b)
        out << q->block_dims()[b] << (b + 1 < q->block_dims().size() ? " " : "\n");
    if (q->block_dims().size() == 1 && q->block_dims().empty()) out << "\n";
    for (std::size_t i = 0; i < q->constraint_count(); ++i)
        out << q->rhs(i) << (i + 1 < q->constraint_count() ? " " : "");
    out << "\n";
    auto emit = [&](std::size_t k, const std::vector<SparseEntry>& entries) {
        for (const auto& e : entries) {
            std::size_t off = 0;
            const std::size_t b = q->block_of(e.row, &off);
            out << k << " " << (b + 1) << " " << (e.row - off + 1) << " " << (e.col - off + 1)
                << " " << e.value.real() << "\n";
        }
    };
    emit(0, q->objective());
    for (std::size_t i = 0; i < q->constraint_count(); ++i) emit(i + 1, q->constraint(i));
}

// ---------------------------------------------------------------------------
// Interior-point solver (real symmetric path)
// ---------------------------------------------------------------------------

namespace {

struct LocalEntry {
    std::size_t blk, i, j; // i <= j, block-local
    double v;
};

struct BlockMats {
    std::vector<RealMatrix> b;

    static BlockMats zeros(const std::vector<std::size_t>& dims) {
        BlockMats m;
        for (std::size_t d : dims) m.b.emplace_back(d, d);
        return m;
    }
    static BlockMats scaled_identity(const std::vector<std::size_t>& dims, double s) {
        BlockMats m = zeros(dims);
        for (auto& x : m.b)
            for (std::size_t i = 0; i < x.rows(); ++i) x(i, i) = s;
        return m;
    }
    void add_scaled(const BlockMats& o, double s) {
        for (std::size_t k = 0; k < b.size(); ++k) b[k].add_scaled(o.b[k], s);
    }
    double inner(const BlockMats& o) const {
        double s = 0.0;
        for (std::size_t k = 0; k < b.size(); ++k) s += dot(b[k], o.b[k]);
        return s;
    }
    double max_abs() const {
        double s = 0.0;
        for (const auto& x : b) s = std::max(s, x.max_abs());
        return s;
    }
    void symmetrize() {
        for (auto& x : b) x.symmetrize();
    }
};

// tr(A row . M) for symmetric M given upper-triangle row entries.
double row_dot(const std::vector<LocalEntry>& row, const BlockMats& m) {
    double s = 0.0;
    for (const auto& e : row) {
        if (e.i == e.j)
            s += e.v * m.b[e.blk](e.i, e.i);
        else
            s += e.v * (m.b[e.blk](e.i, e.j) + m.b[e.blk](e.j, e.i));
    }
    return s;
}

void row_add_into(const std::vector<LocalEntry>& row, double coef, BlockMats& m) {
    for (const auto& e : row) {
        m.b[e.blk](e.i, e.j) += coef * e.v;
        if (e.i != e.j) m.b[e.blk](e.j, e.i) += coef * e.v;
    }
}

struct RealForm {
    std::vector<std::size_t> dims;
    std::vector<std::vector<LocalEntry>> rows; // kept constraints
    std::vector<double> b;
    std::vector<std::size_t> origin; // kept row -> original index
    std::vector<LocalEntry> cobj;    // internal maximize objective
    std::size_t total = 0;
    std::size_t n_orig_rows = 0;
};

std::vector<LocalEntry> localize(const SdpProblem& p, const std::vector<SparseEntry>& es) {
    std::vector<LocalEntry> out;
    out.reserve(es.size());
    for (const auto& e : es) {
        std::size_t off = 0;
        const std::size_t b = p.block_of(e.row, &off);
        out.push_back({b, e.row - off, e.col - off, e.value.real()});
    }
    return out;
}

// Linearly dependent rows are dropped by modified Gram-Schmidt over the
// upper-triangle coordinates (off-diagonal weighted by sqrt(2) so Euclidean
// dot equals the HS pairing). A dependent row whose right-hand side is not
// reproduced by the kept rows makes the system contradictory.
void dedup_rows(RealForm& f) {
    std::vector<std::size_t> tri_start(f.dims.size());
    std::size_t coords = 0;
    for (std::size_t k = 0; k < f.dims.size(); ++k) {
        tri_start[k] = coords;
        coords += f.dims[k] * (f.dims[k] + 1) / 2;
    }
    auto coord_of = [&](const LocalEntry& e) {
        // index of (i,j), i <= j, inside block triangle
        const std::size_t d = f.dims[e.blk];
        return tri_start[e.blk] + e.i * d - e.i * (e.i + 1) / 2 + e.j;
    };
    const double sq2 = std::sqrt(2.0);

    std::vector<std::vector<double>> q_vecs;
    std::vector<double> q_rhs;
    std::vector<std::vector<LocalEntry>> kept;
    std::vector<double> kept_b;
    std::vector<std::size_t> origin;

    for (std::size_t r = 0; r < f.rows.size(); ++r) {
        std::vector<double> v(coords, 0.0);
        for (const auto& e : f.rows[r]) v[coord_of(e)] += (e.i == e.j) ? e.v : sq2 * e.v;
        double beta = f.b[r];
        double orig = 0.0;
        for (double x : v) orig += x * x;
        orig = std::sqrt(orig);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < q_vecs.size(); ++k) {
                double c = 0.0;
                for (std::size_t t = 0; t < coords; ++t) c += v[t] * q_vecs[k][t];
                if (c == 0.0) continue;
                for (std::size_t t = 0; t < coords; ++t) v[t] -= c * q_vecs[k][t];
                beta -= c * q_rhs[k];
            }
        }
        double nv = 0.0;
        for (double x : v) nv += x * x;
        nv = std::sqrt(nv);
        if (nv <= 1e-10 * std::max(1.0, orig)) {
            if (std::abs(beta) > 1e-8 * (1.0 + std::abs(f.b[r])))
                throw InputError("constraints are contradictory (dependent row with new rhs)");
            continue; // dependent, consistent: drop
        }
        for (double& x : v) x /= nv;
        q_vecs.push_back(std::move(v));
        q_rhs.push_back(beta / nv);
        kept.push_back(f.rows[r]);
        kept_b.push_back(f.b[r]);
        origin.push_back(r);
    }
    f.rows = std::move(kept);
    f.b = std::move(kept_b);
    f.origin = std::move(origin);
}

// Largest eigenvalue of -L^{-1} dV L^{-T} by Lanczos with full
// reorthogonalization and a fixed start vector; used for the step to the
// cone boundary. A Cholesky safeguard downstream absorbs any slack.
double lanczos_neg_curvature(const RealMatrix& lfac, const RealMatrix& dv) {
    const std::size_t n = dv.rows();
    if (n == 0) return 0.0;
    auto apply = [&](const std::vector<double>& x) {
        std::vector<double> w = x;
        solve_lower_transposed(lfac, w);
        std::vector<double> t(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double* row = dv.row_ptr(i);
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += row[j] * w[j];
            t[i] = -s;
        }
        solve_lower(lfac, t);
        return t;
    };
    std::vector<std::vector<double>> basis;
    std::vector<double> alpha, beta;
    std::vector<double> v(n, 1.0 / std::sqrt(double(n)));
    const std::size_t kmax = std::min<std::size_t>(n, 48);
    double prev = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < kmax; ++k) {
        basis.push_back(v);
        std::vector<double> w = apply(v);
        double a = 0.0;
        for (std::size_t i = 0; i < n; ++i) a += v[i] * w[i];
        alpha.push_back(a);
        for (const auto& q : basis) {
            double c = 0.0;
            for (std::size_t i = 0; i < n; ++i) c += w[i] * q[i];
            for (std::size_t i = 0; i < n; ++i) w[i] -= c * q[i];
        }
        double nb = 0.0;
        for (double x : w) nb += x * x;
        nb = std::sqrt(nb);
        const auto ev = eigvals_tridiagonal(alpha, beta);
        const double lam = ev.back();
        if (nb < 1e-13 || (k > 2 && std::abs(lam - prev) < 1e-9 * std::max(1.0, std::abs(lam))))
            return lam;
        prev = lam;
        beta.push_back(nb);
        for (double& x : w) x /= nb;
        v = std::move(w);
    }
    return prev;
}

// Fraction-to-boundary step with Cholesky safeguard; throws when the search
// floor is reached without restoring positive definiteness.
double step_length(const BlockMats& v, const BlockMats& dv, double ftb) {
    double alpha = 1.0;
    for (std::size_t k = 0; k < v.b.size(); ++k) {
        RealMatrix l;
        if (!cholesky(v.b[k], l)) throw NumericalError("iterate left the cone");
        const double lam = lanczos_neg_curvature(l, dv.b[k]);
        if (lam > 1e-14) alpha = std::min(alpha, ftb / (1.005 * lam));
    }
    for (;;) {
        bool ok = true;
        for (std::size_t k = 0; k < v.b.size() && ok; ++k) {
            RealMatrix trial = v.b[k];
            trial.add_scaled(dv.b[k], alpha);
            RealMatrix l;
            ok = cholesky(trial, l);
        }
        if (ok) return alpha;
        alpha *= 0.9;
        if (alpha < 1e-14)
            throw NumericalError("non-PSD iterate after line-search floor");
    }
}

struct InternalSolution {
    BlockMats X, S;
    std::vector<double> y; // over kept rows
    double pobj = 0.0, dobj = 0.0;
    double feasP = 0.0, feasD = 0.0, relgap = 0.0;
    std::size_t iterations = 0;
    SdpStatus status = SdpStatus::MaxIterations;
    bool weak_ok = true;
};

InternalSolution ipm_solve(const RealForm& f, const SdpOptions& opts) {
    const std::size_t m = f.rows.size();
    const double N = double(f.total);

    double max_b = 0.0, max_anorm = 0.0, ratio = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        max_b = std::max(max_b, std::abs(f.b[i]));
        double an = 0.0;
        for (const auto& e : f.rows[i]) an += (e.i == e.j ? 1.0 : 2.0) * e.v * e.v;
        an = std::sqrt(an);
        max_anorm = std::max(max_anorm, an);
        ratio = std::max(ratio, std::abs(f.b[i]) / (1.0 + an));
    }
    double cnorm = 0.0;
    for (const auto& e : f.cobj) cnorm += (e.i == e.j ? 1.0 : 2.0) * e.v * e.v;
    cnorm = std::sqrt(cnorm);

    const double xi_p = std::max({10.0, std::sqrt(N), N * ratio});
    const double xi_d = std::max({10.0, std::sqrt(N), cnorm, max_anorm});

    InternalSolution s;
    s.X = BlockMats::scaled_identity(f.dims, xi_p);
    s.S = BlockMats::scaled_identity(f.dims, xi_d);
    s.y.assign(m, 0.0);

    BlockMats C = BlockMats::zeros(f.dims);
    row_add_into(f.cobj, 1.0, C);
    const double cmax = std::max(1.0, C.max_abs());

    InternalSolution best = s;
    double best_score = std::numeric_limits<double>::infinity();
    std::size_t stall = 0;

    for (std::size_t iter = 0; iter < opts.max_iter; ++iter) {
        s.iterations = iter;
        // Residuals and objectives.
        std::vector<double> rp(m);
        double feasP = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            rp[i] = f.b[i] - row_dot(f.rows[i], s.X);
            feasP = std::max(feasP, std::abs(rp[i]));
        }
        feasP /= (1.0 + max_b);
        BlockMats D = BlockMats::zeros(f.dims); // sum y A - C - S
        for (std::size_t i = 0; i < m; ++i) row_add_into(f.rows[i], s.y[i], D);
        D.add_scaled(C, -1.0);
        D.add_scaled(s.S, -1.0);
        const double feasD = D.max_abs() / (1.0 + cmax);

        double pobj = 0.0;
        for (const auto& e : f.cobj)
            pobj += (e.i == e.j ? e.v * s.X.b[e.blk](e.i, e.i)
                                : e.v * (s.X.b[e.blk](e.i, e.j) + s.X.b[e.blk](e.j, e.i)));
        double dobj = 0.0;
        for (std::size_t i = 0; i < m; ++i) dobj += f.b[i] * s.y[i];
        const double relgap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj));

        s.pobj = pobj;
        s.dobj = dobj;
        s.feasP = feasP;
        s.feasD = feasD;
        s.relgap = relgap;

        if (feasP <= 10.0 * opts.tol_feas && feasD <= 10.0 * opts.tol_feas) {
            if (dobj - pobj < -1e-7 * (1.0 + std::abs(pobj))) s.weak_ok = false;
        }

        const double score = std::max({relgap, feasP, feasD});
        if (score < best_score) {
            best_score = score;
            best = s;
            stall = 0;
        } else if (++stall > 40) {
            break;
        }

        if (relgap <= opts.tol_gap && feasP <= opts.tol_feas && feasD <= opts.tol_feas) {
            s.status = SdpStatus::Optimal;
            return s;
        }
        // Divergence heuristic: iterates exploding while feasibility stalls.
        if (s.X.max_abs() > 1e12 * (1.0 + xi_p) ||
            std::abs(dobj) > 1e14 * (1.0 + std::abs(pobj)) + 1e14) {
            s.status = SdpStatus::InfeasibleSuspected;
            return s;
        }

        // Factorizations.
        std::vector<RealMatrix> ls(f.dims.size()), sinv(f.dims.size());
        for (std::size_t k = 0; k < f.dims.size(); ++k) {
            if (!cholesky(s.S.b[k], ls[k])) throw NumericalError("dual iterate left the cone");
            sinv[k] = spd_inverse(ls[k]);
        }

        double mu = s.X.inner(s.S) / N;

        // Schur complement M_pq = tr(A_p X A_q S^{-1}), assembled per block
        // through the sparse structure of each row.
        RealMatrix M(m, m);
        std::vector<std::vector<std::size_t>> rows_in_block(f.dims.size());
        for (std::size_t r = 0; r < m; ++r) {
            std::vector<bool> seen(f.dims.size(), false);
            for (const auto& e : f.rows[r])
                if (!seen[e.blk]) {
                    seen[e.blk] = true;
                    rows_in_block[e.blk].push_back(r);
                }
        }
        for (std::size_t k = 0; k < f.dims.size(); ++k) {
            const std::size_t d = f.dims[k];
            const auto& members = rows_in_block[k];
            RealMatrix w(d, d);
            for (std::size_t q : members) {
                // w = X A_q S^{-1} restricted to this block
                std::vector<std::size_t> cols;
                RealMatrix y(d, d); // X A_q, nonzero only on touched columns
                for (const auto& e : f.rows[q]) {
                    if (e.blk != k) continue;
                    for (std::size_t rI = 0; rI < d; ++rI) {
                        y(rI, e.j) += e.v * s.X.b[k](rI, e.i);
                        if (e.i != e.j) y(rI, e.i) += e.v * s.X.b[k](rI, e.j);
                    }
                    cols.push_back(e.j);
                    if (e.i != e.j) cols.push_back(e.i);
                }
                std::sort(cols.begin(), cols.end());
                cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
                for (auto& row : w.data()) row = 0.0;
                for (std::size_t rI = 0; rI < d; ++rI) {
                    double* wrow = w.row_ptr(rI);
                    for (std::size_t c : cols) {
                        const double yv = y(rI, c);
                        if (yv == 0.0) continue;
                        const double* srow = sinv[k].row_ptr(c);
                        for (std::size_t t = 0; t < d; ++t) wrow[t] += yv * srow[t];
                    }
                }
                for (std::size_t pr : members) {
                    double acc = 0.0;
                    for (const auto& e : f.rows[pr]) {
                        if (e.blk != k) continue;
                        acc += (e.i == e.j) ? e.v * w(e.i, e.i) : e.v * (w(e.i, e.j) + w(e.j, e.i));
                    }
                    M(pr, q) += acc;
                }
            }
        }
        M.symmetrize();

        RealMatrix lm;
        {
            double jitter = 0.0;
            const double base = std::max(1e-300, M.trace() / std::max<std::size_t>(m, 1));
            bool ok = m == 0 ? true : cholesky(M, lm);
            while (!ok) {
                jitter = (jitter == 0.0) ? 1e-14 * base : jitter * 100.0;
                if (jitter > 1e-4 * base) throw NumericalError("Schur complement lost rank");
                RealMatrix mj = M;
                for (std::size_t i = 0; i < m; ++i) mj(i, i) += jitter;
                ok = cholesky(mj, lm);
            }
        }

        auto solve_directions = [&](double nu, const BlockMats* corr,
                                    std::vector<double>& dy, BlockMats& dS, BlockMats& dX) {
            // M dy = nu A(S^{-1}) - b - A(X D S^{-1}) - A(corr S^{-1})
            std::vector<double> rhs(m, 0.0);
            BlockMats t1 = BlockMats::zeros(f.dims);
            for (std::size_t k = 0; k < f.dims.size(); ++k)
                t1.b[k] = matmul(matmul(s.X.b[k], D.b[k]), sinv[k]);
            BlockMats t2 = BlockMats::zeros(f.dims);
            if (corr)
                for (std::size_t k = 0; k < f.dims.size(); ++k)
                    t2.b[k] = matmul(corr->b[k], sinv[k]);
            for (std::size_t i = 0; i < m; ++i) {
                double v = -f.b[i] - row_dot(f.rows[i], t1);
                if (nu != 0.0) {
                    double asinv = 0.0;
                    for (const auto& e : f.rows[i])
                        asinv += (e.i == e.j)
                                     ? e.v * sinv[e.blk](e.i, e.i)
                                     : e.v * (sinv[e.blk](e.i, e.j) + sinv[e.blk](e.j, e.i));
                    v += nu * asinv;
                }
                if (corr) v -= row_dot(f.rows[i], t2);
                rhs[i] = v;
            }
            dy = rhs;
            if (m > 0) {
                solve_lower(lm, dy);
                solve_lower_transposed(lm, dy);
            }
            dS = BlockMats::zeros(f.dims);
            for (std::size_t i = 0; i < m; ++i) row_add_into(f.rows[i], dy[i], dS);
            dS.add_scaled(D, 1.0);
            dX = BlockMats::zeros(f.dims);
            for (std::size_t k = 0; k < f.dims.size(); ++k) {
                RealMatrix xds = matmul(matmul(s.X.b[k], dS.b[k]), sinv[k]);
                dX.b[k] = sinv[k];
                dX.b[k].scale(nu);
                dX.b[k].add_scaled(s.X.b[k], -1.0);
                dX.b[k].add_scaled(xds, -1.0);
                if (corr) dX.b[k].add_scaled(t2.b[k], -1.0);
            }
            dX.symmetrize();
        };

        // Predictor (affine scaling direction).
        std::vector<double> dy_a;
        BlockMats dS_a, dX_a;
        solve_directions(0.0, nullptr, dy_a, dS_a, dX_a);
        const double ap_a = step_length(s.X, dX_a, 0.98);
        const double ad_a = step_length(s.S, dS_a, 0.98);

        BlockMats xa = s.X, sa = s.S;
        xa.add_scaled(dX_a, ap_a);
        sa.add_scaled(dS_a, ad_a);
        const double mu_aff = xa.inner(sa) / N;
        double sigma = std::pow(mu_aff / std::max(mu, 1e-300), 3.0);
        sigma = std::min(1.0, std::max(1e-8, sigma));

        // Corrector with the Mehrotra cross term dX_a dS_a.
        BlockMats cross = BlockMats::zeros(f.dims);
        for (std::size_t k = 0; k < f.dims.size(); ++k)
            cross.b[k] = matmul(dX_a.b[k], dS_a.b[k]);

        std::vector<double> dy;
        BlockMats dS, dX;
        solve_directions(sigma * mu, &cross, dy, dS, dX);
        const double ap = step_length(s.X, dX, 0.98);
        const double ad = step_length(s.S, dS, 0.98);

        s.X.add_scaled(dX, ap);
        s.S.add_scaled(dS, ad);
        for (std::size_t i = 0; i < m; ++i) s.y[i] += ad * dy[i];
    }

    best.status =
        best.status == SdpStatus::Optimal ? SdpStatus::Optimal : SdpStatus::MaxIterations;
    return best;
}

RealForm build_real_form(const SdpProblem& p) {
    RealForm f;
    f.dims = p.block_dims();
    f.total = p.total_dim();
    f.n_orig_rows = p.constraint_count();
    const double csign = p.sense() == SdpSense::Maximize ? 1.0 : -1.0;
    f.cobj = localize(p, p.objective());
    for (auto& e : f.cobj) e.v *= csign;
    for (std::size_t i = 0; i < p.constraint_count(); ++i) {
        f.rows.push_back(localize(p, p.constraint(i)));
        f.b.push_back(p.rhs(i));
    }
    dedup_rows(f);
    return f;
}

SdpSolution package_real(const SdpProblem& p, const RealForm& f, const InternalSolution& in) {
    SdpSolution out;
    const double csign = p.sense() == SdpSense::Maximize ? 1.0 : -1.0;
    out.primal_obj = csign * in.pobj;
    out.dual_obj = csign * in.dobj;
    out.gap = std::abs(out.primal_obj - out.dual_obj);
    out.feas_primal = in.feasP;
    out.feas_dual = in.feasD;
    out.status = in.status;
    out.iterations = in.iterations;
    out.weak_duality_ok = in.weak_ok;

    out.y.assign(p.constraint_count(), 0.0);
    for (std::size_t k = 0; k < f.origin.size(); ++k) out.y[f.origin[k]] = csign * in.y[k];

    ComplexMatrix x(p.total_dim(), p.total_dim()), sm(p.total_dim(), p.total_dim());
    std::size_t off = 0;
    for (std::size_t k = 0; k < f.dims.size(); ++k) {
        for (std::size_t i = 0; i < f.dims[k]; ++i)
            for (std::size_t j = 0; j < f.dims[k]; ++j) {
                x(off + i, off + j) = in.X.b[k](i, j);
                sm(off + i, off + j) = in.S.b[k](i, j);
            }
        off += f.dims[k];
    }
    out.X = HermitianMatrix(x);
    out.S = HermitianMatrix(sm);
    return out;
}

} // namespace

SdpSolution solve(const SdpProblem& p, const SdpOptions& opts) {
    if (p.is_real()) {
        RealForm f = build_real_form(p);
        return package_real(p, f, ipm_solve(f, opts));
    }

    // Complex data: solve the doubled real program, then fold the embedding
    // back (values halve; multipliers on the original rows carry over).
    const SdpProblem q = complex_to_real(p);
    RealForm f = build_real_form(q);
    SdpOptions ropts = opts;
    InternalSolution in = ipm_solve(f, ropts);
    SdpSolution real_sol = package_real(q, f, in);

    SdpSolution out;
    out.status = real_sol.status;
    out.iterations = real_sol.iterations;
    out.weak_duality_ok = real_sol.weak_duality_ok;
    out.primal_obj = real_sol.primal_obj / 2.0;
    out.dual_obj = real_sol.dual_obj / 2.0;
    out.gap = std::abs(out.primal_obj - out.dual_obj);

    out.y.assign(p.constraint_count(), 0.0);
    for (std::size_t i = 0; i < p.constraint_count(); ++i) out.y[i] = real_sol.y[i];

    // X = (Y11 + Y22)/2 + i (Y21 - Y12)/2 per block.
    ComplexMatrix x(p.total_dim(), p.total_dim());
    std::size_t off_c = 0, off_r = 0;
    for (std::size_t k = 0; k < p.block_dims().size(); ++k) {
        const std::size_t d = p.block_dims()[k];
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const double re =
                    0.5 * (real_sol.X(off_r + i, off_r + j).real() +
                           real_sol.X(off_r + d + i, off_r + d + j).real());
                const double im =
                    0.5 * (real_sol.X(off_r + d + i, off_r + j).real() -
                           real_sol.X(off_r + i, off_r + d + j).real());
                x(off_c + i, off_c + j) = cplx{re, im};
            }
        off_c += d;
        off_r += 2 * d;
    }
    out.X = HermitianMatrix(x);

    // Dual slack reconstructed from the complex data and multipliers.
    ComplexMatrix s(p.total_dim(), p.total_dim());
    const double csign = p.sense() == SdpSense::Maximize ? 1.0 : -1.0;
    auto accum = [&](const std::vector<SparseEntry>& es, double coef) {
        for (const auto& e : es) {
            s(e.row, e.col) += coef * e.value;
            if (e.row != e.col) s(e.col, e.row) += coef * std::conj(e.value);
        }
    };
    for (std::size_t i = 0; i < p.constraint_count(); ++i) accum(p.constraint(i), csign * out.y[i]);
    accum(p.objective(), -1.0);
    if (csign < 0.0) {
        for (auto& v : s.data()) v = -v;
    }
    out.S = HermitianMatrix(s);

    // Feasibility against the complex data.
    double feasP = 0.0, max_b = 0.0;
    for (std::size_t i = 0; i < p.constraint_count(); ++i) {
        const auto a = p.constraint_dense(i);
        feasP = std::max(feasP, std::abs(hs_inner(out.X.mat(), a.mat()).real() - p.rhs(i)));
        max_b = std::max(max_b, std::abs(p.rhs(i)));
    }
    out.feas_primal = feasP / (1.0 + max_b);
    out.feas_dual = real_sol.feas_dual;
    return out;
}

} // namespace qpa
