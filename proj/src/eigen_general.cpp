#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "ringdet/detail/householder.hpp"
#include "ringdet/eigen.hpp"
#include "ringdet/kernels.hpp"

namespace ringdet {

namespace {

// Left plane rotation [c, s; -conj(s), c] with c real >= 0 mapping (a, b)
// to (r, 0).
struct Givens {
    double c;
    cplx s;
    cplx r;
};

Givens make_givens(cplx a, cplx b) {
    if (b == cplx(0.0, 0.0)) return {1.0, cplx(0.0, 0.0), a};
    if (a == cplx(0.0, 0.0)) return {0.0, std::conj(b) / std::abs(b), cplx(std::abs(b), 0.0)};
    const double aa = std::abs(a), ab = std::abs(b);
    const double d = std::hypot(aa, ab);
    const double c = aa / d;
    const cplx s = a * std::conj(b) / (aa * d);
    const cplx r = a * (d / aa);
    return {c, s, r};
}

cplx wilkinson_shift(const ComplexMatrix& h, std::size_t hi) {
    const cplx a = h(hi - 1, hi - 1), b = h(hi - 1, hi);
    const cplx cc = h(hi, hi - 1), dd = h(hi, hi);
    const cplx t = 0.5 * (a - dd);
    const cplx disc = std::sqrt(t * t + b * cc);
    const cplx den = std::abs(t + disc) >= std::abs(t - disc) ? t + disc : t - disc;
    if (den == cplx(0.0, 0.0)) return dd;
    return dd - b * cc / den;
}

void hessenberg_reduce(ComplexMatrix& h, std::vector<std::vector<cplx>>& vs,
                       std::vector<cplx>& taus) {
    const std::size_t n = h.rows();
    vs.assign(n > 2 ? n - 2 : 0, {});
    taus.assign(n > 2 ? n - 2 : 0, cplx(0.0, 0.0));
    std::vector<cplx> v;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t m = n - k - 1;
        v.assign(m, cplx(0.0, 0.0));
        for (std::size_t i = 0; i < m; ++i) v[i] = h(k + 1 + i, k);
        cplx alpha = v[0];
        const cplx tau = detail::make_reflector(alpha, v.data() + 1, m - 1);
        v[0] = 1.0;
        h(k + 1, k) = alpha;
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
        detail::reflect_left(h, v, tau, k + 1, k + 1);
        detail::reflect_right(h, v, std::conj(tau), 0, k + 1);
        vs[k] = v;
        taus[k] = tau;
    }
}

double subdiag_abs_sum(const ComplexMatrix& h, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 <= hi; ++i) s += std::abs(h(i + 1, i));
    return s;
}

} // namespace

EigenResult eigen_general(const ComplexMatrix& m, const EigenOptions& opts) {
    if (m.rows() != m.cols()) throw DimensionError("eigen_general requires a square matrix");
    const std::size_t n = m.rows();
    EigenResult res;
    if (n == 0) return res;
    if (n == 1) {
        res.values = {m(0, 0)};
        if (opts.compute_vectors) {
            ComplexMatrix v(1, 1);
            v(0, 0) = 1.0;
            res.vectors = v;
        }
        return res;
    }

    const bool wantv = opts.compute_vectors;
    const std::size_t budget = opts.max_sweeps ? opts.max_sweeps : 30 * n;
    const double eps = std::numeric_limits<double>::epsilon();

    ComplexMatrix h = m;
    std::vector<std::vector<cplx>> vs;
    std::vector<cplx> taus;
    hessenberg_reduce(h, vs, taus);

    ComplexMatrix z;
    if (wantv) {
        z = ComplexMatrix::identity(n);
        for (std::size_t k = n > 2 ? n - 2 : 0; k-- > 0;)
            detail::reflect_left(z, vs[k], std::conj(taus[k]), k + 1, k + 1);
    }

    double hnorm = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = (i > 0 ? i - 1 : 0); j < n; ++j) hnorm += std::abs(h(i, j));
    if (hnorm == 0.0) hnorm = 1.0;

    res.values.assign(n, cplx(0.0, 0.0));
    std::size_t hi = n - 1;
    std::size_t sweeps = 0;
    std::size_t stalled = 0;

    while (true) {
        // deflate converged trailing 1x1 blocks and locate the active block
        std::size_t l = hi;
        while (l > 0) {
            double tst = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
            if (tst == 0.0) tst = hnorm;
            if (std::abs(h(l, l - 1)) <= eps * tst) {
                h(l, l - 1) = 0.0;
                break;
            }
            --l;
        }
        if (l == hi) {
            res.values[hi] = h(hi, hi);
            stalled = 0;
            if (hi == 0) break;
            --hi;
            continue;
        }

        if (sweeps++ >= budget)
            throw ConvergenceError("QR iteration did not converge: order " + std::to_string(n) +
                                   ", remaining off-diagonal norm " +
                                   std::to_string(subdiag_abs_sum(h, hi)));

        cplx sigma;
        if (++stalled % 10 == 0)
            sigma = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1)); // exceptional shift
        else
            sigma = wilkinson_shift(h, hi);

        // implicit single-shift bulge chase over [l, hi]
        for (std::size_t k = l; k < hi; ++k) {
            Givens g;
            if (k == l) {
                g = make_givens(h(l, l) - sigma, h(l + 1, l));
            } else {
                g = make_givens(h(k, k - 1), h(k + 1, k - 1));
                h(k, k - 1) = g.r;
                h(k + 1, k - 1) = 0.0;
            }
            // rows k, k+1 from the left
            {
                const std::size_t jr = wantv ? n - 1 : hi;
                cplx* r0 = h.row(k);
                cplx* r1 = h.row(k + 1);
                for (std::size_t j = k; j <= jr; ++j) {
                    const cplx x = r0[j], y = r1[j];
                    r0[j] = g.c * x + g.s * y;
                    r1[j] = -std::conj(g.s) * x + g.c * y;
                }
            }
            // columns k, k+1 from the right (inverse rotation)
            {
                const std::size_t i0 = wantv ? 0 : l;
                const std::size_t i1 = std::min(k + 2, hi);
                for (std::size_t i = i0; i <= i1; ++i) {
                    const cplx x = h(i, k), y = h(i, k + 1);
                    h(i, k) = g.c * x + std::conj(g.s) * y;
                    h(i, k + 1) = -g.s * x + g.c * y;
                }
                if (wantv) {
                    for (std::size_t i = 0; i < n; ++i) {
                        const cplx x = z(i, k), y = z(i, k + 1);
                        z(i, k) = g.c * x + std::conj(g.s) * y;
                        z(i, k + 1) = -g.s * x + g.c * y;
                    }
                }
            }
        }
    }

    if (wantv) {
        for (std::size_t j = 0; j < n; ++j) res.values[j] = h(j, j);
        // right eigenvectors of the triangular form by back-substitution
        ComplexMatrix y(n, n);
        const double tnorm = h.frobenius_norm();
        const double smin = std::max(eps * tnorm, std::numeric_limits<double>::min() * n);
        for (std::size_t j = 0; j < n; ++j) {
            const cplx lam = h(j, j);
            y(j, j) = 1.0;
            for (std::size_t i1 = j; i1-- > 0;) {
                cplx acc = 0.0;
                for (std::size_t k = i1 + 1; k <= j; ++k) acc += h(i1, k) * y(k, j);
                cplx den = h(i1, i1) - lam;
                if (std::abs(den) < smin) den = smin;
                y(i1, j) = -acc / den;
            }
        }
        ComplexMatrix x = kernels::multiply(z, y);
        for (std::size_t j = 0; j < n; ++j) {
            double nrm = 0.0;
            for (std::size_t i = 0; i < n; ++i) nrm += std::norm(x(i, j));
            nrm = std::sqrt(nrm);
            if (nrm > 0.0)
                for (std::size_t i = 0; i < n; ++i) x(i, j) /= nrm;
        }
        res.vectors = std::move(x);
    }

    return res;
}

} // namespace ringdet
