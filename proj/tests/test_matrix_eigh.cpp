#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "spinmap/eigh.hpp"

using namespace spinmap;

namespace {

Matrix random_hermitian(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = u(rng);
        for (int j = i + 1; j < n; ++j) {
            const cplx v{u(rng), u(rng)};
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return m;
}

Matrix reconstruct(const EigenDecomposition& d) {
    const int n = d.vectors.dim();
    Matrix lambda(n);
    for (int i = 0; i < n; ++i) lambda(i, i) = d.values[static_cast<std::size_t>(i)];
    return matmul(matmul(d.vectors, lambda), d.vectors.adjoint());
}

Matrix heisenberg4(double j, double b) {
    Matrix h(4);
    h(0, 0) = 2 * j + 2 * b;
    h(1, 1) = h(2, 2) = -2 * j;
    h(1, 2) = h(2, 1) = 4 * j;
    h(3, 3) = 2 * j - 2 * b;
    return h;
}

} // namespace

TEST_CASE("eigh handles trivial spectra") {
    const auto id = eigh(Matrix::identity(4));
    for (double v : id.values) CHECK(v == Catch::Approx(1.0).margin(1e-12));

    const auto d = eigh(Matrix::diagonal({3.0, 1.0, 2.0, 0.0}));
    CHECK(d.values == std::vector<double>{3.0, 2.0, 1.0, 0.0});
}

TEST_CASE("eigh diagonalizes the two-spin Hamiltonian") {
    const auto d = eigh(heisenberg4(1.0, 1.0));
    REQUIRE(d.values.size() == 4);
    CHECK(d.values[0] == Catch::Approx(4.0).margin(1e-12));
    CHECK(d.values[1] == Catch::Approx(2.0).margin(1e-12));
    CHECK(d.values[2] == Catch::Approx(0.0).margin(1e-12));
    CHECK(d.values[3] == Catch::Approx(-6.0).margin(1e-12));
}

TEST_CASE("eigh reconstruction and orthonormality on random Hermitian matrices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 7;
        const Matrix m = random_hermitian(n, rng);
        const auto d = eigh(m);

        CHECK(frobenius_dist(reconstruct(d), m) < 1e-10);
        CHECK(frobenius_dist(matmul(d.vectors.adjoint(), d.vectors), Matrix::identity(n)) < 1e-10);

        double sum = 0.0;
        for (double v : d.values) sum += v;
        CHECK(sum == Catch::Approx(trace(m).real()).margin(1e-10));
        for (std::size_t k = 1; k < d.values.size(); ++k)
            CHECK(d.values[k - 1] >= d.values[k]);
    }
}

TEST_CASE("eigh is deterministic") {
    std::mt19937 rng(7);
    const Matrix m = random_hermitian(5, rng);
    const auto d1 = eigh(m);
    const auto d2 = eigh(m);
    CHECK(d1.values == d2.values);
    CHECK(frobenius_dist(d1.vectors, d2.vectors) == 0.0);
}

TEST_CASE("eigh rejects non-Hermitian input") {
    Matrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 2.0;
    CHECK_THROWS_AS(eigh(m), validation_error);
}

TEST_CASE("mat_fn on diagonal and identity cases") {
    const Matrix s = mat_fn(Matrix::diagonal({0.0, 1.0, 4.0, 9.0}),
                            [](double x) { return std::sqrt(x); });
    CHECK(frobenius_dist(s, Matrix::diagonal({0.0, 1.0, 2.0, 3.0})) < 1e-12);

    std::mt19937 rng(99);
    const Matrix m = random_hermitian(4, rng);
    CHECK(frobenius_dist(mat_fn(m, [](double x) { return x; }), m) < 1e-12);
}

TEST_CASE("mat_fn exponential matches the spectrum") {
    const Matrix h = heisenberg4(1.0, 0.0);
    const Matrix e = mat_fn(h, [](double x) { return std::exp(-x); });
    const auto d = eigh(e);
    // H(1,0) spectrum is {2,2,2,-6}; exp(-H) has {e^6, e^-2 x3}
    CHECK(d.values[0] == Catch::Approx(std::exp(6.0)).epsilon(1e-12));
    for (int k = 1; k < 4; ++k)
        CHECK(d.values[static_cast<std::size_t>(k)] == Catch::Approx(std::exp(-2.0)).epsilon(1e-12));
    CHECK(trace(e).real() ==
          Catch::Approx(std::exp(6.0) + 3.0 * std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("mat_fn clamps tiny negatives and rejects out-of-domain spectra") {
    CHECK_NOTHROW(mat_sqrt(Matrix::diagonal({1.0, 0.5, 0.0, -5e-11})));
    CHECK_THROWS_AS(mat_sqrt(Matrix::diagonal({1.0, 0.5, 0.0, -1.0})), domain_error);
}

TEST_CASE("matmul, trace and frobenius_dist basics") {
    CHECK(trace(Matrix::identity(4)).real() == 4.0);

    std::mt19937 rng(3);
    const Matrix m = random_hermitian(4, rng);
    CHECK(frobenius_dist(matmul(m, Matrix::identity(4)), m) == 0.0);
    CHECK(frobenius_dist(m, m) == 0.0);
    CHECK(std::abs(trace(m).imag()) < 1e-12);

    CHECK_THROWS_AS(matmul(Matrix::identity(3), Matrix::identity(4)), validation_error);
    CHECK_THROWS_AS(frobenius_dist(Matrix::identity(3), Matrix::identity(4)), validation_error);
}
