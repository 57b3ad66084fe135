#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "ringdet/detail/householder.hpp"
#include "ringdet/eigen.hpp"
#include "ringdet/kernels.hpp"
#include "ringdet/parallel.hpp"

namespace ringdet {

namespace {

struct Rotation {
    std::size_t i;
    double c, s;
};

void require_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) throw DimensionError("eigen_hermitian requires a square matrix");
    double diff = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j) diff += std::norm(m(i, j) - std::conj(m(j, i)));
    const double ref = m.frobenius_norm();
    if (std::sqrt(diff) > tol * (ref > 0.0 ? ref : 1.0))
        throw NotHermitianError("matrix is not Hermitian within tolerance");
}

// Unitary reduction A = Q T Q^H with T real symmetric tridiagonal.
// Returns reflector data for forming Q.
void tridiagonalize(ComplexMatrix& a, std::vector<double>& d, std::vector<double>& e,
                    std::vector<std::vector<cplx>>& vs, std::vector<cplx>& taus) {
    const std::size_t n = a.rows();
    d.resize(n);
    e.assign(n, 0.0); // slot n-1 is workspace for the QL chase
    vs.assign(n > 1 ? n - 1 : 0, {});
    taus.assign(n > 1 ? n - 1 : 0, cplx(0.0, 0.0));

    std::vector<cplx> v, p, w;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const std::size_t m = n - k - 1;
        v.assign(m, cplx(0.0, 0.0));
        for (std::size_t i = 0; i < m; ++i) v[i] = a(k + 1 + i, k);
        cplx alpha = v[0];
        const cplx tau = detail::make_reflector(alpha, v.data() + 1, m - 1);
        v[0] = 1.0;
        e[k] = alpha.real();

        if (tau != cplx(0.0, 0.0)) {
            // Rank-2 update of the trailing block B = A[k+1.., k+1..]:
            // B <- B - v w^H - w v^H with p = B v, w = conj(tau) p - |tau|^2 (v^H p)/2 v.
            p.assign(m, cplx(0.0, 0.0));
            const std::int64_t mm = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static) num_threads(parallel::max_threads()) if (mm > 64)
            for (std::int64_t i = 0; i < mm; ++i) {
                const cplx* ra = a.row(k + 1 + static_cast<std::size_t>(i)) + (k + 1);
                cplx acc = 0.0;
                for (std::size_t j = 0; j < m; ++j) acc += ra[j] * v[j];
                p[static_cast<std::size_t>(i)] = acc;
            }
            cplx vhp = 0.0;
            for (std::size_t i = 0; i < m; ++i) vhp += std::conj(v[i]) * p[i];
            w.assign(m, cplx(0.0, 0.0));
            const cplx tconj = std::conj(tau);
            const double t2 = std::norm(tau);
            for (std::size_t i = 0; i < m; ++i) w[i] = tconj * p[i] - 0.5 * t2 * vhp.real() * v[i];
#pragma omp parallel for schedule(static) num_threads(parallel::max_threads()) if (mm > 64)
            for (std::int64_t i = 0; i < mm; ++i) {
                cplx* ra = a.row(k + 1 + static_cast<std::size_t>(i)) + (k + 1);
                const cplx vi = v[static_cast<std::size_t>(i)];
                const cplx wi = w[static_cast<std::size_t>(i)];
                for (std::size_t j = 0; j < m; ++j)
                    ra[j] -= vi * std::conj(w[j]) + wi * std::conj(v[j]);
            }
        }

        d[k] = a(k, k).real();
        vs[k] = v;
        taus[k] = tau;
    }
    if (n > 0) d[n - 1] = a(n - 1, n - 1).real();
}

// Implicit-shift QL sweeps on the tridiagonal (d, e). Rotations of each
// chase are buffered and applied to Q in one row-parallel pass.
void ql_iterate(std::vector<double>& d, std::vector<double>& e, ComplexMatrix* q) {
    const std::size_t n = d.size();
    if (n < 2) return;
    const double eps = std::numeric_limits<double>::epsilon();
    std::vector<Rotation> rots;

    for (std::size_t l = 0; l < n; ++l) {
        std::size_t iter = 0;
        while (true) {
            std::size_t m = l;
            while (m + 1 < n) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
                ++m;
            }
            if (m == l) break;
            if (iter++ == 50)
                throw ConvergenceError("tridiagonal QL failed to converge at order " +
                                       std::to_string(n));

            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            rots.clear();
            bool underflow = false;
            for (std::size_t i1 = m; i1-- > l;) {
                double f = s * e[i1];
                const double b = c * e[i1];
                r = std::hypot(f, g);
                e[i1 + 1] = r;
                if (r == 0.0) {
                    d[i1 + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i1 + 1] - p;
                r = (d[i1] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i1 + 1] = g + p;
                g = c * r - b;
                rots.push_back({i1, c, s});
            }
            if (q && !rots.empty()) {
                const std::int64_t nn = static_cast<std::int64_t>(q->rows());
#pragma omp parallel for schedule(static) num_threads(parallel::max_threads()) if (nn > 64)
                for (std::int64_t rr = 0; rr < nn; ++rr) {
                    cplx* row = q->row(static_cast<std::size_t>(rr));
                    for (const Rotation& rot : rots) {
                        const cplx f = row[rot.i + 1];
                        row[rot.i + 1] = rot.s * row[rot.i] + rot.c * f;
                        row[rot.i] = rot.c * row[rot.i] - rot.s * f;
                    }
                }
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

} // namespace

EigenResult eigen_hermitian(const ComplexMatrix& m, const EigenOptions& opts) {
    require_hermitian(m, opts.hermitian_tol);
    const std::size_t n = m.rows();
    EigenResult res;
    if (n == 0) return res;

    ComplexMatrix a = m;
    std::vector<double> d, e;
    std::vector<std::vector<cplx>> vs;
    std::vector<cplx> taus;
    tridiagonalize(a, d, e, vs, taus);

    ComplexMatrix q;
    if (opts.compute_vectors) {
        q = ComplexMatrix::identity(n);
        for (std::size_t k = n > 1 ? n - 1 : 0; k-- > 0;)
            detail::reflect_left(q, vs[k], std::conj(taus[k]), k + 1, k + 1);
    }

    ql_iterate(d, e, opts.compute_vectors ? &q : nullptr);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return d[x] > d[y]; });

    res.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) res.values[j] = cplx(d[order[j]], 0.0);
    if (opts.compute_vectors) {
        ComplexMatrix sorted(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) sorted(i, j) = q(i, order[j]);
        res.vectors = std::move(sorted);
    }
    return res;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m, double clamp_tol, double error_tol) {
    EigenResult eig = eigen_hermitian(m);
    const std::size_t n = m.rows();
    std::vector<double> lam(n);
    for (std::size_t j = 0; j < n; ++j) {
        double v = eig.values[j].real();
        if (v < -error_tol)
            throw NotPsdError("matrix is not PSD: eigenvalue " + std::to_string(v));
        if (v < 0.0) v = 0.0;
        lam[j] = std::sqrt(v);
    }
    (void)clamp_tol; // values in (-error_tol, 0) are all clamped above

    const ComplexMatrix& v = *eig.vectors;
    ComplexMatrix w = v;
    for (std::size_t i = 0; i < n; ++i) {
        cplx* rw = w.row(i);
        for (std::size_t j = 0; j < n; ++j) rw[j] *= lam[j];
    }
    ComplexMatrix s = kernels::multiply_abh(w, v);
    // roundoff symmetrization
    for (std::size_t i = 0; i < n; ++i) {
        s(i, i) = s(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (s(i, j) + std::conj(s(j, i)));
            s(i, j) = avg;
            s(j, i) = std::conj(avg);
        }
    }
    return s;
}

} // namespace ringdet
