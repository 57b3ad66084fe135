#include "ringdet/sampling.hpp"

#include <cmath>

#include "ringdet/qr.hpp"

namespace ringdet {

ComplexMatrix sample_ginibre(std::size_t rows, std::size_t cols, RandomSource& rng,
                             GinibreField field) {
    if (rows < 1 || cols < 1) throw DimensionError("sample_ginibre requires rows, cols >= 1");
    ComplexMatrix g(rows, cols);
    cplx* p = g.data();
    const std::size_t total = rows * cols;
    if (field == GinibreField::Real) {
        for (std::size_t k = 0; k < total; ++k) p[k] = rng.normal();
    } else {
        for (std::size_t k = 0; k < total; ++k) p[k] = rng.complex_normal();
    }
    return g;
}

ComplexMatrix sample_haar_unitary(std::size_t order, RandomSource& rng) {
    if (order < 1) throw DimensionError("sample_haar_unitary requires order >= 1");
    ComplexMatrix g = sample_ginibre(order, order, rng, GinibreField::Complex);
    auto [q, r] = qr_decompose(g);
    for (std::size_t j = 0; j < order; ++j) {
        const cplx d = r(j, j);
        const cplx phase = std::conj(d) / std::abs(d);
        for (std::size_t i = 0; i < order; ++i) q(i, j) *= phase;
    }
    return q;
}

} // namespace ringdet
