#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "ringdet/complex_matrix.hpp"
#include "ringdet/parallel.hpp"

namespace ringdet::detail {

// Elementary reflector H = I - tau * v * v^H with v[0] = 1, chosen so that
// H * (alpha, tail) = (beta, 0, ..., 0) with beta real (LAPACK zlarfg
// convention). On return `tail` holds v[1..], and alpha is overwritten
// with beta.
inline cplx make_reflector(cplx& alpha, cplx* tail, std::size_t n_tail) {
    double xnorm = 0.0;
    for (std::size_t i = 0; i < n_tail; ++i) xnorm += std::norm(tail[i]);
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0 && alpha.imag() == 0.0) return cplx(0.0, 0.0);

    const double ar = alpha.real(), ai = alpha.imag();
    double beta = std::sqrt(ar * ar + ai * ai + xnorm * xnorm);
    if (ar > 0.0) beta = -beta;
    // tau = (beta - conj(alpha)) / beta makes H itself (not H^H) map x to
    // beta * e1.
    const cplx tau((beta - ar) / beta, ai / beta);
    const cplx inv = 1.0 / (alpha - beta);
    for (std::size_t i = 0; i < n_tail; ++i) tail[i] *= inv;
    alpha = beta;
    return tau;
}

// A[row0.., col0..] <- H * A[row0.., col0..], H = I - tau v v^H.
// v spans the rows row0..rows-1 of the block (v.size() == rows - row0).
inline void reflect_left(ComplexMatrix& a, const std::vector<cplx>& v, cplx tau,
                         std::size_t row0, std::size_t col0) {
    if (tau == cplx(0.0, 0.0)) return;
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t m = rows - row0, n = cols - col0;
    if (m == 0 || n == 0) return;
    std::vector<cplx> w(n, cplx(0.0, 0.0));
    const std::int64_t nn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) num_threads(parallel::max_threads()) if (nn * static_cast<std::int64_t>(m) > 65536)
    for (std::int64_t j = 0; j < nn; ++j) {
        cplx acc = 0.0;
        for (std::size_t i = 0; i < m; ++i) acc += std::conj(v[i]) * a(row0 + i, col0 + static_cast<std::size_t>(j));
        w[static_cast<std::size_t>(j)] = acc;
    }
    const std::int64_t mm = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static) num_threads(parallel::max_threads()) if (nn * mm > 65536)
    for (std::int64_t i = 0; i < mm; ++i) {
        const cplx f = tau * v[static_cast<std::size_t>(i)];
        cplx* ra = a.row(row0 + static_cast<std::size_t>(i)) + col0;
        for (std::size_t j = 0; j < n; ++j) ra[j] -= f * w[j];
    }
}

// A[row0.., col0..] <- A[row0.., col0..] * H, H = I - tau v v^H.
// v spans the columns col0..cols-1 of the block.
inline void reflect_right(ComplexMatrix& a, const std::vector<cplx>& v, cplx tau,
                          std::size_t row0, std::size_t col0) {
    if (tau == cplx(0.0, 0.0)) return;
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t m = rows - row0, n = cols - col0;
    if (m == 0 || n == 0) return;
    const std::int64_t mm = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static) num_threads(parallel::max_threads()) if (mm * static_cast<std::int64_t>(n) > 65536)
    for (std::int64_t i = 0; i < mm; ++i) {
        cplx* ra = a.row(row0 + static_cast<std::size_t>(i)) + col0;
        cplx acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += ra[j] * v[j];
        const cplx f = acc * tau;
        for (std::size_t j = 0; j < n; ++j) ra[j] -= f * std::conj(v[j]);
    }
}

} // namespace ringdet::detail
