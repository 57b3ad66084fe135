#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <complex>
#include <vector>

#include "ringdet/eigen.hpp"
#include "ringdet/kernels.hpp"
#include "ringdet/qr.hpp"
#include "ringdet/random.hpp"
#include "ringdet/sampling.hpp"

using namespace ringdet;

namespace {

double recon_error(const ComplexMatrix& q, const ComplexMatrix& r, const ComplexMatrix& m) {
    ComplexMatrix qr = kernels::multiply(q, r);
    return (qr - m).frobenius_norm();
}

double orthonormality_error(const ComplexMatrix& q) {
    ComplexMatrix qhq = kernels::multiply(q.conjugate_transpose(), q);
    ComplexMatrix eye = ComplexMatrix::identity(q.cols());
    return (qhq - eye).frobenius_norm();
}

// max_i ||A v_i - lambda_i v_i||_2
double eigen_residual(const ComplexMatrix& a, const EigenResult& e) {
    const ComplexMatrix& v = *e.vectors;
    ComplexMatrix av = kernels::multiply(a, v);
    double worst = 0.0;
    for (std::size_t j = 0; j < a.rows(); ++j) {
        double r = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i)
            r += std::norm(av(i, j) - e.values[j] * v(i, j));
        worst = std::max(worst, std::sqrt(r));
    }
    return worst;
}

ComplexMatrix diag(std::vector<cplx> d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

bool contains_close(const std::vector<cplx>& vals, cplx target, double tol) {
    return std::any_of(vals.begin(), vals.end(),
                       [&](cplx v) { return std::abs(v - target) <= tol; });
}

} // namespace

TEST_CASE("qr of the identity is trivial") {
    auto [q, r] = qr_decompose(ComplexMatrix::identity(3));
    CHECK((q - ComplexMatrix::identity(3)).frobenius_norm() < 1e-14);
    CHECK((r - ComplexMatrix::identity(3)).frobenius_norm() < 1e-14);
}

TEST_CASE("qr of a permutation matrix") {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    auto [q, r] = qr_decompose(m);
    CHECK(orthonormality_error(q) < 1e-12);
    CHECK(recon_error(q, r, m) < 1e-12);
}

TEST_CASE("qr reconstructs a random complex matrix") {
    RandomSource rng(101);
    ComplexMatrix m = sample_ginibre(50, 50, rng, GinibreField::Complex);
    auto [q, r] = qr_decompose(m);
    CHECK(orthonormality_error(q) < 1e-10);
    CHECK(recon_error(q, r, m) < 1e-10 * m.frobenius_norm());
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j) CHECK(r(i, j) == cplx(0.0, 0.0));
}

TEST_CASE("qr of a tall matrix and the wide-matrix error") {
    RandomSource rng(102);
    ComplexMatrix tall = sample_ginibre(40, 12, rng, GinibreField::Complex);
    auto [q, r] = qr_decompose(tall);
    CHECK(q.rows() == 40);
    CHECK(q.cols() == 12);
    CHECK(recon_error(q, r, tall) < 1e-10 * tall.frobenius_norm());
    CHECK_THROWS_AS(qr_decompose(sample_ginibre(5, 9, rng)), DimensionError);
}

TEST_CASE("hermitian eigenvalues of a diagonal matrix come back sorted") {
    EigenResult e = eigen_hermitian(diag({3.0, 1.0, 2.0}));
    REQUIRE(e.values.size() == 3);
    CHECK(e.values[0].real() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(e.values[1].real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(e.values[2].real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian 2x2 closed form") {
    ComplexMatrix m(2, 2);
    m(0, 0) = 2.0;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    m(1, 1) = 2.0;
    EigenResult e = eigen_hermitian(m);
    CHECK(e.values[0].real() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(e.values[1].real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eigen_residual(m, e) < 1e-8 * m.frobenius_norm());
}

TEST_CASE("hermitian eigenvalues of a Wishart matrix stay in the MP support") {
    RandomSource rng(103);
    ComplexMatrix g = sample_ginibre(100, 200, rng);
    ComplexMatrix w = kernels::gram(g, 1.0 / 200.0);
    EigenResult e = eigen_hermitian(w);
    const double c = 0.5;
    const double lo = (1.0 - std::sqrt(c)) * (1.0 - std::sqrt(c)) - 0.15;
    const double hi = (1.0 + std::sqrt(c)) * (1.0 + std::sqrt(c)) + 0.15;
    for (const cplx& v : e.values) {
        CHECK(std::abs(v.imag()) < 1e-12);
        CHECK(v.real() >= lo);
        CHECK(v.real() <= hi);
    }
    // trace and Frobenius identities
    double sum = 0.0, sum2 = 0.0;
    for (const cplx& v : e.values) {
        sum += v.real();
        sum2 += v.real() * v.real();
    }
    const double tr = trace(w).real();
    CHECK(std::abs(sum - tr) <= 1e-8 * std::abs(tr) + 1e-10);
    const double f2 = w.frobenius_norm() * w.frobenius_norm();
    CHECK(std::abs(sum2 - f2) <= 1e-8 * f2 + 1e-10);
    CHECK(eigen_residual(w, e) < 1e-8 * w.frobenius_norm());
    CHECK(orthonormality_error(*e.vectors) < 1e-10);
}

TEST_CASE("hermitian solver rejects a non-Hermitian input") {
    ComplexMatrix m(2, 2);
    m(0, 1) = cplx(1.0, 1.0);
    m(1, 0) = cplx(1.0, 1.0); // conj would be (1, -1)
    CHECK_THROWS_AS(eigen_hermitian(m), NotHermitianError);
}

TEST_CASE("general eigenvalues of a triangular matrix are its diagonal") {
    EigenResult e = eigen_general(diag({{2, -1}, {-1, 1}, {2, 1}}), {.compute_vectors = false});
    REQUIRE(e.values.size() == 3);
    CHECK(contains_close(e.values, {2, -1}, 1e-12));
    CHECK(contains_close(e.values, {-1, 1}, 1e-12));
    CHECK(contains_close(e.values, {2, 1}, 1e-12));
}

TEST_CASE("general eigenvalues of the rotation generator are +/- i") {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = -1.0;
    EigenResult e = eigen_general(m);
    CHECK(contains_close(e.values, {0, 1}, 1e-12));
    CHECK(contains_close(e.values, {0, -1}, 1e-12));
    CHECK(eigen_residual(m, e) < 1e-8 * m.frobenius_norm());
}

TEST_CASE("general eigenvalues of a Haar unitary have unit modulus") {
    RandomSource rng(104);
    ComplexMatrix u = sample_haar_unitary(200, rng);
    EigenResult e = eigen_general(u, {.compute_vectors = false});
    for (const cplx& v : e.values) CHECK(std::abs(v) == doctest::Approx(1.0).epsilon(1e-8));
    cplx sum = 0.0;
    for (const cplx& v : e.values) sum += v;
    CHECK(std::abs(sum - trace(u)) <= 1e-6 * u.frobenius_norm());
}

TEST_CASE("general eigen residuals on a random dense matrix") {
    RandomSource rng(105);
    ComplexMatrix m = sample_ginibre(60, 60, rng, GinibreField::Complex);
    EigenResult e = eigen_general(m);
    CHECK(eigen_residual(m, e) < 1e-8 * m.frobenius_norm());
    cplx sum = 0.0;
    for (const cplx& v : e.values) sum += v;
    CHECK(std::abs(sum - trace(m)) <= 1e-6 * m.frobenius_norm());
}

TEST_CASE("general solver reports non-convergence with order and norm") {
    RandomSource rng(106);
    ComplexMatrix m = sample_ginibre(30, 30, rng, GinibreField::Complex);
    try {
        eigen_general(m, {.compute_vectors = false, .max_sweeps = 1});
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& err) {
        const std::string what = err.what();
        CHECK(what.find("30") != std::string::npos);
        CHECK(what.find("off-diagonal") != std::string::npos);
    }
}

TEST_CASE("sqrt_psd of small diagonal cases") {
    ComplexMatrix s = sqrt_psd(diag({4.0, 9.0}));
    CHECK(std::abs(s(0, 0) - 2.0) < 1e-12);
    CHECK(std::abs(s(1, 1) - 3.0) < 1e-12);
    CHECK(std::abs(s(0, 1)) < 1e-12);

    ComplexMatrix id = sqrt_psd(ComplexMatrix::identity(5));
    CHECK((id - ComplexMatrix::identity(5)).frobenius_norm() < 1e-12);
}

TEST_CASE("sqrt_psd squares back to a Wishart matrix") {
    RandomSource rng(107);
    ComplexMatrix g = sample_ginibre(80, 120, rng);
    ComplexMatrix w = kernels::gram(g, 1.0 / 120.0);
    ComplexMatrix s = sqrt_psd(w);
    ComplexMatrix s2 = kernels::multiply(s, s);
    CHECK((s2 - w).frobenius_norm() < 1e-8 * w.frobenius_norm());
}

TEST_CASE("sqrt_psd of a 0/1 projection is itself") {
    ComplexMatrix p = diag({1.0, 0.0, 1.0, 0.0});
    ComplexMatrix s = sqrt_psd(p);
    CHECK((s - p).frobenius_norm() < 1e-12);
}

TEST_CASE("sqrt_psd rejects an indefinite matrix") {
    CHECK_THROWS_AS(sqrt_psd(diag({1.0, -1.0})), NotPsdError);
}

TEST_CASE("haar unitary basics") {
    RandomSource rng(108);
    ComplexMatrix u1 = sample_haar_unitary(1, rng);
    CHECK(std::abs(u1(0, 0)) == doctest::Approx(1.0).epsilon(1e-14));

    ComplexMatrix u = sample_haar_unitary(64, rng);
    CHECK(orthonormality_error(u) < 1e-10);
}

TEST_CASE("haar trace moment E|tr U|^2 is near one") {
    double acc = 0.0;
    for (std::uint64_t s = 0; s < 10; ++s) {
        RandomSource rng(200 + s);
        ComplexMatrix u = sample_haar_unitary(400, rng);
        acc += std::norm(trace(u));
    }
    CHECK(std::abs(acc / 10.0 - 1.0) < 0.6);
}

TEST_CASE("haar statistics unchanged by a fixed unitary factor") {
    // spot-check of left invariance: V U has unit-modulus spectrum and the
    // same trace moment, V a fixed permutation-with-phases unitary
    const std::size_t n = 100;
    ComplexMatrix v(n, n);
    for (std::size_t i = 0; i < n; ++i) v(i, (i + 3) % n) = std::polar(1.0, 0.1 * i);

    double acc = 0.0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        RandomSource rng(300 + s);
        ComplexMatrix vu = kernels::multiply(v, sample_haar_unitary(n, rng));
        CHECK(orthonormality_error(vu) < 1e-10);
        acc += std::norm(trace(vu));
    }
    CHECK(acc / 20.0 < 4.0); // E = 1, loose Monte-Carlo band
}

TEST_CASE("ginibre moments and determinism") {
    RandomSource rng(109);
    double sum = 0.0, sum2 = 0.0;
    const int n = 100000;
    for (int k = 0; k < n; ++k) {
        const double x = rng.normal();
        sum += x;
        sum2 += x * x;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    CHECK(std::abs(mean) < 0.02);
    CHECK(std::abs(var - 1.0) < 0.03);

    RandomSource a(7), b(7);
    ComplexMatrix ma = sample_ginibre(20, 30, a, GinibreField::Complex);
    ComplexMatrix mb = sample_ginibre(20, 30, b, GinibreField::Complex);
    for (std::size_t i = 0; i < ma.rows(); ++i)
        for (std::size_t j = 0; j < ma.cols(); ++j) CHECK(ma(i, j) == mb(i, j));
}

TEST_CASE("ginibre row variances concentrate") {
    RandomSource rng(112);
    ComplexMatrix g = sample_ginibre(800, 1000, rng);
    for (std::size_t i = 0; i < g.rows(); ++i) {
        double s = 0.0, s2 = 0.0;
        for (std::size_t j = 0; j < g.cols(); ++j) {
            s += g(i, j).real();
            s2 += g(i, j).real() * g(i, j).real();
        }
        const double mean = s / g.cols();
        const double var = s2 / g.cols() - mean * mean;
        CHECK(std::abs(var - 1.0) < 0.15);
    }
}
