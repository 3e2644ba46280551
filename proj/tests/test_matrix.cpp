#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qpa/complex_matrix.hpp"
#include "qpa/eig.hpp"
#include "qpa/errors.hpp"

using namespace qpa;

namespace {

const cplx I{0.0, 1.0};

ComplexMatrix random_gram(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g;
    ComplexMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = cplx{g(rng), g(rng)};
    return b.adjoint() * b;
}

HermitianMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g;
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = cplx{g(rng), g(rng)};
    return HermitianMatrix(a);
}

} // namespace

TEST_CASE("hs_inner basics") {
    CHECK(hs_inner(ComplexMatrix::identity(3), ComplexMatrix::identity(3)) == cplx{3.0, 0.0});
    const auto e12 = ComplexMatrix::unit(2, 0, 1);
    CHECK(hs_inner(e12, e12) == cplx{1.0, 0.0});

    const ComplexMatrix a{{1.0, I}, {-I, 2.0}};
    const ComplexMatrix b{{0.0, 1.0}, {1.0, 0.0}};
    CHECK(std::abs(hs_inner(a, b)) == doctest::Approx(0.0).epsilon(1e-15));

    CHECK_THROWS_AS(hs_inner(ComplexMatrix::identity(2), ComplexMatrix::identity(3)),
                    DimensionError);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        const auto x = random_hermitian(rng, 4).mat();
        const auto y = random_hermitian(rng, 4).mat();
        CHECK(std::abs(hs_inner(x, y) - std::conj(hs_inner(y, x))) < 1e-13);
        double fro2 = 0.0;
        for (const auto& v : x.data()) fro2 += std::norm(v);
        CHECK(hs_inner(x, x).real() == doctest::Approx(fro2).epsilon(1e-12));
        CHECK(std::abs(hs_inner(x, x).imag()) < 1e-12);
    }
}

TEST_CASE("schur product") {
    const ComplexMatrix a{{1.0, 2.0 + I}, {3.0, 4.0}};
    const auto j2 = ComplexMatrix::ones(2, 2);
    auto r = schur_product(j2, a);
    CHECK(r(0, 1) == a(0, 1));
    auto d = schur_product(ComplexMatrix::identity(2), a);
    CHECK(d(0, 0) == a(0, 0));
    CHECK(d(0, 1) == cplx{0.0, 0.0});
    auto z = schur_product(ComplexMatrix::unit(2, 0, 1), ComplexMatrix::unit(2, 1, 0));
    CHECK(z.max_abs() == 0.0);
    CHECK_THROWS_AS(schur_product(a, ComplexMatrix::identity(3)), DimensionError);
}

TEST_CASE("kron") {
    auto i6 = kron(ComplexMatrix::identity(2), ComplexMatrix::identity(3));
    CHECK((i6 - ComplexMatrix::identity(6)).max_abs() == 0.0);

    const ComplexMatrix b{{1.0, 2.0}, {3.0, 4.0}};
    auto k = kron(ComplexMatrix::unit(2, 0, 0), b);
    CHECK(k(0, 0) == cplx{1.0, 0.0});
    CHECK(k(1, 1) == cplx{4.0, 0.0});
    CHECK(k(2, 2) == cplx{0.0, 0.0});

    auto j6 = kron(ComplexMatrix::ones(2, 2), ComplexMatrix::ones(3, 3));
    CHECK((j6 - ComplexMatrix::ones(6, 6)).max_abs() == 0.0);
}

TEST_CASE("kron of PSD factors is PSD") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 25; ++t) {
        const auto a = HermitianMatrix(random_gram(rng, 3));
        const auto b = HermitianMatrix(random_gram(rng, 2));
        CHECK(is_psd(kron(a, b), 1e-8));
    }
}

TEST_CASE("eig_hermitian examples") {
    auto id = eig_hermitian(HermitianMatrix::identity(4));
    for (double v : id.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

    ComplexMatrix d(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    auto de = eig_hermitian(HermitianMatrix(d));
    CHECK(de.values[0] == doctest::Approx(1.0));
    CHECK(de.values[1] == doctest::Approx(2.0));
    CHECK(de.values[2] == doctest::Approx(3.0));

    const ComplexMatrix x{{0.0, 1.0}, {1.0, 0.0}};
    auto xe = eig_hermitian(HermitianMatrix(x));
    CHECK(xe.values[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(xe.values[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eig_hermitian reconstruction and unitarity on random input") {
    std::mt19937_64 rng(23);
    for (std::size_t n : {1, 2, 3, 5, 8, 13, 21}) {
        for (int t = 0; t < 6; ++t) {
            const auto a = random_hermitian(rng, n);
            const auto e = eig_hermitian(a);
            REQUIRE(e.values.size() == n);
            for (std::size_t i = 0; i + 1 < n; ++i) CHECK(e.values[i] <= e.values[i + 1]);

            const auto vhv = e.vectors.adjoint() * e.vectors;
            CHECK((vhv - ComplexMatrix::identity(n)).max_abs() < 1e-10);

            ComplexMatrix lam(n, n);
            for (std::size_t i = 0; i < n; ++i) lam(i, i) = e.values[i];
            const auto recon = e.vectors * lam * e.vectors.adjoint();
            const double scale = std::max(std::abs(e.values.front()), std::abs(e.values.back()));
            CHECK((recon - a.mat()).max_abs() <= 1e-10 * double(n) * std::max(1.0, scale));
        }
    }
}

TEST_CASE("eig_hermitian with degenerate spectrum") {
    // I_2 (x) B has every eigenvalue twice.
    std::mt19937_64 rng(5);
    const auto b = random_hermitian(rng, 4);
    const auto a = kron(HermitianMatrix::identity(2), b);
    const auto e = eig_hermitian(a);
    const auto vhv = e.vectors.adjoint() * e.vectors;
    CHECK((vhv - ComplexMatrix::identity(8)).max_abs() < 1e-10);
    ComplexMatrix lam(8, 8);
    for (std::size_t i = 0; i < 8; ++i) lam(i, i) = e.values[i];
    CHECK(((e.vectors * lam * e.vectors.adjoint()) - a.mat()).max_abs() < 1e-9);
}

TEST_CASE("is_psd") {
    CHECK(is_psd(HermitianMatrix::all_ones(3), 1e-9));
    const ComplexMatrix m{{1.0, 2.0}, {2.0, 1.0}};
    CHECK_FALSE(is_psd(HermitianMatrix(m), 1e-9));
    CHECK(is_psd(HermitianMatrix::zero(4), 0.0));
    CHECK_THROWS(is_psd(HermitianMatrix::identity(2), -1.0));
}

TEST_CASE("hermitian symmetrization is exact") {
    ComplexMatrix a(2, 2);
    a(0, 0) = cplx{1.0, 0.5}; // imaginary part must be dropped
    a(0, 1) = cplx{2.0, 3.0};
    a(1, 0) = cplx{7.0, 1.0};
    const HermitianMatrix h(a);
    CHECK(h(0, 0).imag() == 0.0);
    CHECK(h(0, 1) == std::conj(h(1, 0)));
}

TEST_CASE("partial traces") {
    std::mt19937_64 rng(31);
    const auto a = random_hermitian(rng, 3);
    const auto b = random_hermitian(rng, 4);

    // partial_trace_left(kron(a,b)) = tr(a) b; right = tr(b) a.
    const auto k = kron(a, b);
    const auto left = partial_trace_left(k, 3, 4);
    const auto right = partial_trace_right(k, 3, 4);
    CHECK((left.mat() - b.mat() * a.mat().trace()).max_abs() < 1e-12 * (1 + b.mat().max_abs()));
    CHECK((right.mat() - a.mat() * b.mat().trace()).max_abs() < 1e-12 * (1 + a.mat().max_abs()));

    // I_2 (x) A -> 2A ; E_12 (x) A -> 0.
    const auto ia = kron(HermitianMatrix::identity(2), a);
    CHECK((partial_trace_left(ia, 2, 3).mat() - a.mat() * cplx{2.0, 0.0}).max_abs() < 1e-13);
    const auto e12a = HermitianMatrix(kron(ComplexMatrix::unit(2, 0, 1), a.mat()));
    CHECK(partial_trace_left(e12a, 2, 3).mat().max_abs() < 1e-13);

    // A (x) I_k -> k A under the right trace; traceless block -> 0.
    const auto ak = kron(a, HermitianMatrix::identity(4));
    CHECK((partial_trace_right(ak, 3, 4).mat() - a.mat() * cplx{4.0, 0.0}).max_abs() < 1e-13);
    const auto e11e12 =
        HermitianMatrix(kron(ComplexMatrix::unit(2, 0, 0), ComplexMatrix::unit(2, 0, 1)));
    CHECK(partial_trace_right(e11e12, 2, 2).mat().max_abs() < 1e-13);

    CHECK_THROWS_AS(partial_trace_left(a, 2, 2), DimensionError);
}
