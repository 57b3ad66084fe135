#pragma once

#include <span>
#include <string>
#include <vector>

#include "ringdet/complex_matrix.hpp"
#include "ringdet/random.hpp"

namespace ringdet {

// Limiting spectral law of a depth-L product of singular-value-equivalent
// windows with aspect ratio c = p/n: an annulus with inner radius
// (1-c)^(L/2), outer radius 1, and radial density (2/(cL)) r^(2/L-1).
struct RingLawModel {
    double c;
    std::size_t depth;

    RingLawModel(double c_, std::size_t depth_);

    double inner_radius() const;
    double outer_radius() const { return 1.0; }
    double radial_pdf(double r) const;
    double radial_cdf(double r) const;
};

// Closed-form mean of |lambda| under the ring law:
// 2 (1 - (1-c)^((L+2)/2)) / (c (L+2)).
double ring_mean_radius(const RingLawModel& model);

struct SpectralSample {
    std::vector<cplx> eigenvalues;
    double msr = 0.0; // (1/p) sum |lambda_i|
    double c = 0.0;
    std::size_t depth = 1;
};

struct ConformanceReport {
    double margin = 0.0;
    double in_annulus_fraction = 0.0; // |lambda| in [inner-margin, outer+margin]
    std::vector<cplx> outliers;       // |lambda| > outer + margin
    double ks_distance = 0.0;         // empirical |lambda| CDF vs model radial CDF
};

struct StandardizeOptions {
    double sigma_min = 1e-12;
    bool jitter = false;
};

// Row-wise standardization: each output row has sample mean 0 and
// population standard deviation 1. Rows with sigma <= sigma_min raise
// DeadChannelError listing every such row; in jitter mode they instead
// receive Gaussian noise at amplitude 1e-8 * max(1, max_j |x_ij|) first.
ComplexMatrix standardize_rows(const ComplexMatrix& x, const StandardizeOptions& opts = {},
                               RandomSource* rng = nullptr);

// sqrt(x x^H / n) * U with U freshly Haar-sampled; shares the singular
// values of x / sqrt(n). Requires p <= n.
ComplexMatrix singular_value_equivalent(const ComplexMatrix& x_std, RandomSource& rng);

// Product of the singular-value equivalents of already-standardized
// windows. Window k draws its Haar factor from base.derive(k), so windows
// may be evaluated in parallel with a serial-identical result.
ComplexMatrix window_product(std::span<const ComplexMatrix> windows, const RandomSource& base);

// Row rescaling z_i / (sqrt(p) sigma(z_i)); the mean is not removed, so
// each output row ends up with sample variance exactly 1/p.
ComplexMatrix standardize_product(const ComplexMatrix& z, double sigma_min = 1e-12);

SpectralSample spectral_sample(const ComplexMatrix& z_std, double c, std::size_t depth);

ConformanceReport ring_conformance(const SpectralSample& sample, const RingLawModel& model,
                                   double margin = 0.05);

// Spectrum dump consumed by plotting tools: a re,im CSV plus a JSON
// side-car with {c, L, inner_radius, outer_radius, msr}.
void write_spectrum_csv(const std::string& path, std::span<const cplx> eigenvalues);
void write_spectrum_meta(const std::string& path, const RingLawModel& model, double msr);

} // namespace ringdet
