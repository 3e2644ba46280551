#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <sstream>

#include "qpa/eig.hpp"
#include "qpa/errors.hpp"
#include "qpa/graph.hpp"
#include "qpa/sdp.hpp"

using namespace qpa;

namespace {

// max J.Y s.t. Y_ij = 0 on edges, tr(Y) = 1, Y psd
SdpProblem theta_problem(const Graph& g) {
    const std::size_t n = g.vertex_count();
    SdpProblem p(SdpSense::Maximize, {n});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) p.add_objective_entry(i, j, 1.0);
    std::vector<SparseEntry> tr;
    for (std::size_t i = 0; i < n; ++i) tr.push_back({i, i, 1.0});
    p.add_constraint(tr, 1.0);
    for (auto [i, j] : g.edges()) p.add_constraint({{i, j, 1.0}}, 0.0);
    return p;
}

} // namespace

TEST_CASE("scalar problems") {
    // max tr(X) s.t. X_11 = 1 over M_1^+ -> 1
    SdpProblem p(SdpSense::Maximize, {1});
    p.add_objective_entry(0, 0, 1.0);
    p.add_constraint({{0, 0, 1.0}}, 1.0);
    const auto sol = solve(p);
    CHECK(sol.status == SdpStatus::Optimal);
    CHECK(sol.primal_obj == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(sol.gap < 1e-8);

    // Minimize sense round trip.
    SdpProblem q(SdpSense::Minimize, {1});
    q.add_objective_entry(0, 0, 3.0);
    q.add_constraint({{0, 0, 1.0}}, 2.0);
    const auto sq = solve(q);
    CHECK(sq.primal_obj == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(sq.dual_obj == doctest::Approx(6.0).epsilon(1e-8));
}

TEST_CASE("theta of complete and empty graphs") {
    for (std::size_t n : {2, 3, 5, 8}) {
        const auto sk = solve(theta_problem(family("complete", n)));
        CHECK(sk.status == SdpStatus::Optimal);
        CHECK(sk.primal_obj == doctest::Approx(1.0).epsilon(1e-8));
        const auto se = solve(theta_problem(family("empty", n)));
        CHECK(se.status == SdpStatus::Optimal);
        CHECK(se.primal_obj == doctest::Approx(double(n)).epsilon(1e-8));
    }
}

TEST_CASE("theta of C5 hits sqrt(5) to tight accuracy") {
    SdpOptions o;
    o.tol_gap = 1e-11;
    const auto sol = solve(theta_problem(family("cycle", 5)), o);
    CHECK(sol.status == SdpStatus::Optimal);
    CHECK(sol.primal_obj == doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));
    CHECK(sol.dual_obj == doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));
    CHECK(sol.gap < 2e-10);
    // Certificates are PSD and feasible.
    CHECK(is_psd(sol.X, 1e-8));
    CHECK(is_psd(sol.S, 1e-8));
    CHECK(sol.feas_primal < 1e-8);
    CHECK(sol.feas_dual < 1e-8);
    CHECK(sol.weak_duality_ok);
}

TEST_CASE("KKT residuals at optimal status") {
    const auto p = theta_problem(family("wheel", 6));
    const auto sol = solve(p);
    REQUIRE(sol.status == SdpStatus::Optimal);
    double maxb = 0.0;
    for (std::size_t i = 0; i < p.constraint_count(); ++i) maxb = std::max(maxb, std::abs(p.rhs(i)));
    for (std::size_t i = 0; i < p.constraint_count(); ++i) {
        const double ax = hs_inner(sol.X.mat(), p.constraint_dense(i).mat()).real();
        CHECK(std::abs(ax - p.rhs(i)) <= 1e-8 * (1.0 + maxb));
    }
    // Complementarity tr(XS) tracks the gap.
    const double comp = hs_inner(sol.X.mat(), sol.S.mat()).real();
    CHECK(std::abs(comp) <= 1e-6 * (1.0 + std::abs(sol.primal_obj)));
}

TEST_CASE("deterministic solves") {
    const auto p = theta_problem(family("cycle", 7));
    const auto a = solve(p);
    const auto b = solve(p);
    CHECK(a.primal_obj == b.primal_obj);
    CHECK(a.dual_obj == b.dual_obj);
    CHECK(a.iterations == b.iterations);
    CHECK(std::memcmp(a.y.data(), b.y.data(), a.y.size() * sizeof(double)) == 0);
}

TEST_CASE("complex 1x1 and the doubling identity") {
    SdpProblem p(SdpSense::Maximize, {1});
    p.add_objective_entry(0, 0, 1.0);
    p.add_constraint({{0, 0, 1.0}}, 0.7);
    const auto q = complex_to_real(p);
    CHECK(q.total_dim() == 2);
    const auto sq = solve(q);
    CHECK(sq.primal_obj == doctest::Approx(1.4).epsilon(1e-9));

    // Genuinely complex data: max Re pairing with a Hermitian C having
    // imaginary off-diagonal parts, under trace normalization.
    SdpProblem c(SdpSense::Maximize, {2});
    c.add_objective_entry(0, 1, cplx{0.0, 1.0});
    c.add_constraint({{0, 0, 1.0}, {1, 1, 1.0}}, 1.0);
    CHECK_FALSE(c.is_real());
    const auto sc = solve(c);
    CHECK(sc.status == SdpStatus::Optimal);
    // C has eigenvalues +-1, so max C.X over density matrices is 1.
    CHECK(sc.primal_obj == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(is_psd(sc.X, 1e-8));
    CHECK(is_psd(sc.S, 1e-7));
    // The doubled real route reports exactly twice the value.
    const auto s2 = solve(complex_to_real(c));
    CHECK(s2.primal_obj == doctest::Approx(2.0 * sc.primal_obj).epsilon(1e-8));
}

TEST_CASE("theta C5 via explicit complex_to_real equals 2 sqrt 5") {
    const auto doubled = complex_to_real(theta_problem(family("cycle", 5)));
    const auto sol = solve(doubled);
    CHECK(sol.status == SdpStatus::Optimal);
    CHECK(sol.primal_obj == doctest::Approx(2.0 * std::sqrt(5.0)).epsilon(1e-9));
}

TEST_CASE("dependent rows are dropped, contradictions rejected") {
    SdpProblem p(SdpSense::Maximize, {2});
    p.add_objective_entry(0, 0, 1.0);
    p.add_objective_entry(1, 1, 1.0);
    p.add_constraint({{0, 0, 1.0}}, 1.0);
    p.add_constraint({{1, 1, 1.0}}, 2.0);
    p.add_constraint({{0, 0, 1.0}, {1, 1, 1.0}}, 3.0); // dependent, consistent
    const auto sol = solve(p);
    CHECK(sol.status == SdpStatus::Optimal);
    CHECK(sol.primal_obj == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(sol.y.size() == 3);

    SdpProblem bad(SdpSense::Maximize, {2});
    bad.add_objective_entry(0, 0, 1.0);
    bad.add_constraint({{0, 0, 1.0}}, 1.0);
    bad.add_constraint({{0, 0, 2.0}}, 3.0); // contradicts the first row
    CHECK_THROWS_AS(solve(bad), InputError);
}

TEST_CASE("m = 0 and unconstrained minimization") {
    // min tr(Z), Z psd -> 0 at Z = 0.
    SdpProblem p(SdpSense::Minimize, {3});
    for (std::size_t i = 0; i < 3; ++i) p.add_objective_entry(i, i, 1.0);
    const auto sol = solve(p);
    CHECK(sol.status == SdpStatus::Optimal);
    CHECK(sol.primal_obj == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("block-diagonal variables") {
    // Two blocks with linked constraints: max tr(X1) + tr(X2)
    // s.t. tr(X1) + 2 tr(X2) = 4, tr(X1) = 2 -> value 3.
    SdpProblem p(SdpSense::Maximize, {2, 3});
    for (std::size_t i = 0; i < 5; ++i) p.add_objective_entry(i, i, 1.0);
    std::vector<SparseEntry> r1, r2;
    for (std::size_t i = 0; i < 2; ++i) r1.push_back({i, i, 1.0});
    for (std::size_t i = 2; i < 5; ++i) r1.push_back({i, i, 2.0});
    p.add_constraint(r1, 4.0);
    for (std::size_t i = 0; i < 2; ++i) r2.push_back({i, i, 1.0});
    p.add_constraint(r2, 2.0);
    const auto sol = solve(p);
    CHECK(sol.status == SdpStatus::Optimal);
    CHECK(sol.primal_obj == doctest::Approx(3.0).epsilon(1e-8));

    // Entries crossing a block boundary are rejected.
    CHECK_THROWS_AS(p.add_constraint({{1, 2, 1.0}}, 0.0), DimensionError);
}

TEST_CASE("weak duality monitor and infeasibility heuristics") {
    // Primal infeasible: X_11 = -1 with X psd.
    SdpProblem p(SdpSense::Maximize, {1});
    p.add_objective_entry(0, 0, 1.0);
    p.add_constraint({{0, 0, 1.0}}, -1.0);
    SdpOptions o;
    o.max_iter = 120;
    bool flagged = false;
    try {
        const auto sol = solve(p, o);
        flagged = sol.status != SdpStatus::Optimal;
    } catch (const NumericalError&) {
        flagged = true; // breakdown is an acceptable report for an infeasible cone problem
    }
    CHECK(flagged);
}

TEST_CASE("max_iter status returns best iterate") {
    SdpOptions o;
    o.max_iter = 2;
    const auto sol = solve(theta_problem(family("cycle", 5)), o);
    CHECK(sol.status == SdpStatus::MaxIterations);
}

TEST_CASE("dual_of describes the Lagrangian dual") {
    const auto p = theta_problem(family("path", 3));
    const auto d = dual_of(p);
    CHECK(d.sense == SdpSense::Minimize);
    REQUIRE(d.b.size() == p.constraint_count());
    CHECK(d.b[0] == 1.0); // trace row
    for (std::size_t i = 1; i < d.b.size(); ++i) CHECK(d.b[i] == 0.0);

    // Diagonal LP-as-SDP: max c^T x s.t. a^T x = b, x >= 0 (diag X). Its dual
    // data is the LP dual: min b y s.t. y a - c >= 0 entrywise.
    SdpProblem lp(SdpSense::Maximize, {3});
    const double c[3] = {1.0, 2.0, 0.5}, a[3] = {1.0, 3.0, 1.0};
    for (std::size_t i = 0; i < 3; ++i) lp.add_objective_entry(i, i, c[i]);
    std::vector<SparseEntry> row;
    for (std::size_t i = 0; i < 3; ++i) row.push_back({i, i, a[i]});
    lp.add_constraint(row, 6.0);
    const auto dlp = dual_of(lp);
    CHECK(dlp.b == std::vector<double>{6.0});
    const auto sol = solve(lp);
    // LP optimum: put everything on the best ratio c_i/a_i (index 0, ratio 1).
    CHECK(sol.primal_obj == doctest::Approx(6.0).epsilon(1e-8));
    // Dual multiplier equals the LP dual optimum max_i c_i/a_i = 1.
    CHECK(sol.y[0] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("sdpa sparse export") {
    SdpProblem p(SdpSense::Maximize, {2, 1});
    p.add_objective_entry(0, 1, 0.5);
    p.add_objective_entry(2, 2, 1.0);
    p.add_constraint({{0, 0, 1.0}, {1, 1, 1.0}}, 1.0);
    p.add_constraint({{2, 2, 1.0}}, 2.0);
    std::stringstream ss;
    write_sdpa_sparse(p, ss);
    std::string line;
    std::getline(ss, line);
    CHECK(line == "2"); // m
    std::getline(ss, line);
    CHECK(line == "2"); // nblocks
    std::getline(ss, line);
    CHECK(line == "2 1"); // dims
    std::getline(ss, line);
    CHECK(line == "1 2"); // b
    // Objective entries carry matrix index 0 and 1-based positions.
    std::getline(ss, line);
    CHECK(line == "0 1 1 2 0.5");
    std::getline(ss, line);
    CHECK(line == "0 2 1 1 1");
    std::getline(ss, line);
    CHECK(line == "1 1 1 1 1");
}

TEST_CASE("complex export goes through the realification") {
    SdpProblem c(SdpSense::Maximize, {2});
    c.add_objective_entry(0, 1, cplx{0.0, 1.0});
    c.add_constraint({{0, 0, 1.0}, {1, 1, 1.0}}, 1.0);
    std::stringstream ss;
    write_sdpa_sparse(c, ss);
    std::string line;
    std::getline(ss, line);
    // 1 original constraint + n(n+1) = 6 consistency rows
    CHECK(line == "7");
    std::getline(ss, line);
    CHECK(line == "1");
    std::getline(ss, line);
    CHECK(line == "4");
}
