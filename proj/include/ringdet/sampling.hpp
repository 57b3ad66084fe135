#pragma once

#include "ringdet/complex_matrix.hpp"
#include "ringdet/random.hpp"

namespace ringdet {

enum class GinibreField { Real, Complex };

// i.i.d. standard Gaussian entries. Real field: N(0,1). Complex field:
// independent N(0,1/2) real and imaginary parts (unit total variance).
ComplexMatrix sample_ginibre(std::size_t rows, std::size_t cols, RandomSource& rng,
                             GinibreField field = GinibreField::Real);

// Haar-distributed unitary matrix: QR of a complex Ginibre draw, then each
// column of Q is rescaled by conj(R_jj)/|R_jj| (plain QR alone is not
// Haar; the phase fix removes the factorization's sign convention).
ComplexMatrix sample_haar_unitary(std::size_t order, RandomSource& rng);

} // namespace ringdet
