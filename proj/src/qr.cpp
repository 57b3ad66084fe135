#include "ringdet/qr.hpp"

#include <vector>

#include "ringdet/detail/householder.hpp"

namespace ringdet {

std::pair<ComplexMatrix, ComplexMatrix> qr_decompose(const ComplexMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows < cols)
        throw DimensionError("qr_decompose requires rows >= cols, got " +
                             std::to_string(rows) + "x" + std::to_string(cols));

    ComplexMatrix a = m;
    std::vector<cplx> taus(cols);
    std::vector<std::vector<cplx>> vs(cols);

    std::vector<cplx> v;
    for (std::size_t k = 0; k < cols; ++k) {
        v.assign(rows - k, cplx(0.0, 0.0));
        for (std::size_t i = k; i < rows; ++i) v[i - k] = a(i, k);
        cplx alpha = v[0];
        const cplx tau = detail::make_reflector(alpha, v.data() + 1, rows - k - 1);
        v[0] = 1.0;
        a(k, k) = alpha;
        for (std::size_t i = k + 1; i < rows; ++i) a(i, k) = 0.0;
        if (k + 1 < cols) detail::reflect_left(a, v, tau, k, k + 1);
        taus[k] = tau;
        vs[k] = v;
    }

    ComplexMatrix r(cols, cols);
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = i; j < cols; ++j) r(i, j) = a(i, j);

    // Q = H_0^H H_1^H ... H_{n-1}^H restricted to the leading n columns.
    // Applying in reverse order leaves columns < k untouched at step k.
    ComplexMatrix q(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) q(j, j) = 1.0;
    for (std::size_t k = cols; k-- > 0;)
        detail::reflect_left(q, vs[k], std::conj(taus[k]), k, k);

    return {std::move(q), std::move(r)};
}

} // namespace ringdet
