#pragma once

#include "ringdet/complex_matrix.hpp"

namespace ringdet::kernels {

// Hot dense kernels. The OpenMP variants parallelize across output rows
// only; every output element is accumulated in a fixed serial order, so
// results are bit-identical for any thread count.

// C = A * B
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

// C = A * B^H
ComplexMatrix multiply_abh(const ComplexMatrix& a, const ComplexMatrix& b);

// scale * A * A^H, exactly Hermitian by construction (upper triangle
// computed, mirrored, diagonal forced real).
ComplexMatrix gram(const ComplexMatrix& a, double scale);

// Plain serial implementations kept as the reference for testing and for
// the kernel benchmark.
namespace reference {
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix multiply_abh(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix gram(const ComplexMatrix& a, double scale);
} // namespace reference

} // namespace ringdet::kernels
