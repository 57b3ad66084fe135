#include "ringdet/kernels.hpp"

#include <cstdint>

#include "ringdet/parallel.hpp"

namespace ringdet::kernels {

namespace {

void check_inner(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw DimensionError(std::string("inner dimension mismatch in ") + what);
}

} // namespace

// Row-row dot with two accumulators; the even/odd split shortens the
// dependency chain while keeping a fixed summation order.
inline cplx dot_rows(const cplx* x, const cplx* y, std::size_t n) {
    cplx a0 = 0.0, a1 = 0.0;
    std::size_t k = 0;
    for (; k + 1 < n; k += 2) {
        a0 += x[k] * y[k];
        a1 += x[k + 1] * y[k + 1];
    }
    if (k < n) a0 += x[k] * y[k];
    return a0 + a1;
}

inline cplx dot_rows_conj(const cplx* x, const cplx* y, std::size_t n) {
    cplx a0 = 0.0, a1 = 0.0;
    std::size_t k = 0;
    for (; k + 1 < n; k += 2) {
        a0 += x[k] * std::conj(y[k]);
        a1 += x[k + 1] * std::conj(y[k + 1]);
    }
    if (k < n) a0 += x[k] * std::conj(y[k]);
    return a0 + a1;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_inner(a.cols(), b.rows(), "multiply");
    const std::int64_t m = static_cast<std::int64_t>(a.rows());
    const std::size_t kk = a.cols(), n = b.cols();
    // transpose B once so every dot product streams both operands
    ComplexMatrix bt(n, kk);
    for (std::size_t k = 0; k < kk; ++k) {
        const cplx* bk = b.row(k);
        for (std::size_t j = 0; j < n; ++j) bt(j, k) = bk[j];
    }
    ComplexMatrix c(a.rows(), n);
#pragma omp parallel for schedule(static) num_threads(parallel::max_threads()) if (m > 8)
    for (std::int64_t i = 0; i < m; ++i) {
        cplx* ci = c.row(static_cast<std::size_t>(i));
        const cplx* ai = a.row(static_cast<std::size_t>(i));
        for (std::size_t j = 0; j < n; ++j) ci[j] = dot_rows(ai, bt.row(j), kk);
    }
    return c;
}

ComplexMatrix multiply_abh(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_inner(a.cols(), b.cols(), "multiply_abh");
    const std::int64_t m = static_cast<std::int64_t>(a.rows());
    const std::size_t kk = a.cols(), n = b.rows();
    ComplexMatrix c(a.rows(), n);
#pragma omp parallel for schedule(static) num_threads(parallel::max_threads()) if (m > 8)
    for (std::int64_t i = 0; i < m; ++i) {
        cplx* ci = c.row(static_cast<std::size_t>(i));
        const cplx* ai = a.row(static_cast<std::size_t>(i));
        for (std::size_t j = 0; j < n; ++j) ci[j] = dot_rows_conj(ai, b.row(j), kk);
    }
    return c;
}

ComplexMatrix gram(const ComplexMatrix& a, double scale) {
    const std::int64_t m = static_cast<std::int64_t>(a.rows());
    const std::size_t kk = a.cols();
    ComplexMatrix c(a.rows(), a.rows());
#pragma omp parallel for schedule(static) num_threads(parallel::max_threads()) if (m > 8)
    for (std::int64_t i = 0; i < m; ++i) {
        const cplx* ai = a.row(static_cast<std::size_t>(i));
        for (std::size_t j = static_cast<std::size_t>(i); j < static_cast<std::size_t>(m); ++j)
            c(static_cast<std::size_t>(i), j) = dot_rows_conj(ai, a.row(j), kk) * scale;
    }
    for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
        c(i, i) = c(i, i).real();
        for (std::size_t j = i + 1; j < static_cast<std::size_t>(m); ++j)
            c(j, i) = std::conj(c(i, j));
    }
    return c;
}

namespace reference {

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_inner(a.cols(), b.rows(), "multiply");
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            c(i, j) = acc;
        }
    return c;
}

ComplexMatrix multiply_abh(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_inner(a.cols(), b.cols(), "multiply_abh");
    ComplexMatrix c(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * std::conj(b(j, k));
            c(i, j) = acc;
        }
    return c;
}

ComplexMatrix gram(const ComplexMatrix& a, double scale) {
    ComplexMatrix c = multiply_abh(a, a);
    for (std::size_t i = 0; i < c.rows(); ++i) {
        for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) *= scale;
        c(i, i) = c(i, i).real();
    }
    return c;
}

} // namespace reference

} // namespace ringdet::kernels
