#pragma once

#include <utility>

#include "ringdet/complex_matrix.hpp"

namespace ringdet {

// Householder QR of an m x n matrix with m >= n. Q is m x n with
// orthonormal columns, R is n x n upper triangular, Q * R = m.
std::pair<ComplexMatrix, ComplexMatrix> qr_decompose(const ComplexMatrix& m);

} // namespace ringdet
