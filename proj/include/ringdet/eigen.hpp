#pragma once

#include <optional>
#include <vector>

#include "ringdet/complex_matrix.hpp"

namespace ringdet {

struct EigenResult {
    std::vector<cplx> values;
    std::optional<ComplexMatrix> vectors; // columns are right eigenvectors
};

struct EigenOptions {
    bool compute_vectors = true;
    // QR sweep budget for the general solver; 0 means the default 30 * p.
    std::size_t max_sweeps = 0;
    double hermitian_tol = 1e-10; // relative Hermiticity check
};

// Hermitian eigendecomposition via unitary tridiagonalization followed by
// implicit-shift QL on the real tridiagonal form. Values are real, sorted
// descending; vectors form a unitary matrix.
EigenResult eigen_hermitian(const ComplexMatrix& m, const EigenOptions& opts = {});

// General complex eigenvalues via Hessenberg reduction and implicitly
// shifted QR iteration with Wilkinson shifts. Eigenvalue order is
// unspecified. Vectors, when requested, come from back-substitution on the
// final triangular form.
EigenResult eigen_general(const ComplexMatrix& m, const EigenOptions& opts = {});

// Principal square root of a Hermitian PSD matrix. Eigenvalues in
// [-clamp_tol, 0) are treated as roundoff and clamped to zero; anything
// below -error_tol is rejected.
ComplexMatrix sqrt_psd(const ComplexMatrix& m, double clamp_tol = 1e-10,
                       double error_tol = 1e-6);

} // namespace ringdet
