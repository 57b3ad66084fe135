#include "ringdet/rmt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "ringdet/eigen.hpp"
#include "ringdet/kernels.hpp"
#include "ringdet/sampling.hpp"

namespace ringdet {

RingLawModel::RingLawModel(double c_, std::size_t depth_) : c(c_), depth(depth_) {
    if (!(c > 0.0) || c > 1.0)
        throw ConfigError("ring law requires c = p/n in (0, 1], got " + std::to_string(c));
    if (depth < 1) throw ConfigError("ring law requires depth L >= 1");
}

double RingLawModel::inner_radius() const {
    return std::pow(1.0 - c, static_cast<double>(depth) / 2.0);
}

double RingLawModel::radial_pdf(double r) const {
    if (r < inner_radius() || r > 1.0) return 0.0;
    const double L = static_cast<double>(depth);
    return 2.0 / (c * L) * std::pow(r, 2.0 / L - 1.0);
}

double RingLawModel::radial_cdf(double r) const {
    if (r <= inner_radius()) return 0.0;
    if (r >= 1.0) return 1.0;
    const double L = static_cast<double>(depth);
    return (std::pow(r, 2.0 / L) - (1.0 - c)) / c;
}

double ring_mean_radius(const RingLawModel& model) {
    const double L = static_cast<double>(model.depth);
    return 2.0 * (1.0 - std::pow(1.0 - model.c, (L + 2.0) / 2.0)) / (model.c * (L + 2.0));
}

namespace {

struct RowStats {
    cplx mean;
    double sigma; // population convention: divide by the row length
};

RowStats row_stats(const cplx* row, std::size_t n) {
    cplx mu = 0.0;
    for (std::size_t j = 0; j < n; ++j) mu += row[j];
    mu /= static_cast<double>(n);
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += std::norm(row[j] - mu);
    return {mu, std::sqrt(s / static_cast<double>(n))};
}

} // namespace

ComplexMatrix standardize_rows(const ComplexMatrix& x, const StandardizeOptions& opts,
                               RandomSource* rng) {
    const std::size_t p = x.rows(), n = x.cols();
    if (n == 0 || p == 0) throw DimensionError("standardize_rows on an empty matrix");
    ComplexMatrix out = x;

    std::vector<std::size_t> dead;
    std::vector<RowStats> stats(p);
    for (std::size_t i = 0; i < p; ++i) {
        stats[i] = row_stats(out.row(i), n);
        if (stats[i].sigma <= opts.sigma_min) dead.push_back(i);
    }

    if (!dead.empty()) {
        if (!opts.jitter) throw DeadChannelError(dead);
        if (!rng) throw ConfigError("jitter mode needs a RandomSource");
        for (std::size_t i : dead) {
            cplx* row = out.row(i);
            double scale = 0.0;
            for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(row[j]));
            const double amp = 1e-8 * std::max(1.0, scale);
            for (std::size_t j = 0; j < n; ++j) row[j] += amp * rng->complex_normal();
            stats[i] = row_stats(row, n);
        }
    }

    for (std::size_t i = 0; i < p; ++i) {
        cplx* row = out.row(i);
        const cplx mu = stats[i].mean;
        const double inv = 1.0 / stats[i].sigma;
        for (std::size_t j = 0; j < n; ++j) row[j] = (row[j] - mu) * inv;
    }
    return out;
}

ComplexMatrix singular_value_equivalent(const ComplexMatrix& x_std, RandomSource& rng) {
    const std::size_t p = x_std.rows(), n = x_std.cols();
    if (p > n)
        throw DimensionError("singular_value_equivalent requires p <= n (c = p/n <= 1), got p=" +
                             std::to_string(p) + " n=" + std::to_string(n));
    ComplexMatrix w = kernels::gram(x_std, 1.0 / static_cast<double>(n));
    ComplexMatrix s = sqrt_psd(w);
    ComplexMatrix u = sample_haar_unitary(p, rng);
    return kernels::multiply(s, u);
}

ComplexMatrix window_product(std::span<const ComplexMatrix> windows, const RandomSource& base) {
    if (windows.empty()) throw DimensionError("window_product needs at least one window");
    const std::size_t p = windows[0].rows(), n = windows[0].cols();
    for (const ComplexMatrix& w : windows)
        if (w.rows() != p || w.cols() != n)
            throw DimensionError("window_product requires identically sized windows");

    ComplexMatrix z;
    for (std::size_t k = 0; k < windows.size(); ++k) {
        RandomSource rk = base.derive(k);
        ComplexMatrix zk = singular_value_equivalent(windows[k], rk);
        z = (k == 0) ? std::move(zk) : kernels::multiply(z, zk);
    }
    return z;
}

ComplexMatrix standardize_product(const ComplexMatrix& z, double sigma_min) {
    if (z.rows() != z.cols()) throw DimensionError("standardize_product requires a square matrix");
    const std::size_t p = z.rows();
    ComplexMatrix out = z;
    std::vector<std::size_t> dead;
    std::vector<double> scale(p);
    const double sqrt_p = std::sqrt(static_cast<double>(p));
    for (std::size_t i = 0; i < p; ++i) {
        const RowStats st = row_stats(out.row(i), p);
        if (st.sigma <= sigma_min) {
            dead.push_back(i);
            continue;
        }
        scale[i] = 1.0 / (sqrt_p * st.sigma);
    }
    if (!dead.empty()) throw DeadChannelError(dead);
    for (std::size_t i = 0; i < p; ++i) {
        cplx* row = out.row(i);
        for (std::size_t j = 0; j < p; ++j) row[j] *= scale[i];
    }
    return out;
}

SpectralSample spectral_sample(const ComplexMatrix& z_std, double c, std::size_t depth) {
    if (z_std.rows() != z_std.cols())
        throw DimensionError("spectral_sample requires a square matrix");
    EigenResult e = eigen_general(z_std, {.compute_vectors = false});
    SpectralSample s;
    s.eigenvalues = std::move(e.values);
    s.c = c;
    s.depth = depth;
    double acc = 0.0;
    for (const cplx& v : s.eigenvalues) acc += std::abs(v);
    s.msr = s.eigenvalues.empty() ? 0.0 : acc / static_cast<double>(s.eigenvalues.size());
    return s;
}

ConformanceReport ring_conformance(const SpectralSample& sample, const RingLawModel& model,
                                   double margin) {
    ConformanceReport rep;
    rep.margin = margin;
    const double lo = model.inner_radius() - margin;
    const double hi = model.outer_radius() + margin;

    std::vector<double> radii;
    radii.reserve(sample.eigenvalues.size());
    std::size_t inside = 0;
    for (const cplx& v : sample.eigenvalues) {
        const double r = std::abs(v);
        radii.push_back(r);
        if (r >= lo && r <= hi) ++inside;
        if (r > hi) rep.outliers.push_back(v);
    }
    rep.in_annulus_fraction =
        radii.empty() ? 0.0 : static_cast<double>(inside) / static_cast<double>(radii.size());

    std::sort(radii.begin(), radii.end());
    double ks = 0.0;
    const double nn = static_cast<double>(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double f = model.radial_cdf(radii[i]);
        ks = std::max(ks, std::abs(f - static_cast<double>(i + 1) / nn));
        ks = std::max(ks, std::abs(f - static_cast<double>(i) / nn));
    }
    rep.ks_distance = ks;
    return rep;
}

void write_spectrum_csv(const std::string& path, std::span<const cplx> eigenvalues) {
    std::ofstream f(path);
    if (!f) throw Error("cannot write " + path);
    f << "re,im\n";
    char buf[64];
    for (const cplx& v : eigenvalues) {
        std::snprintf(buf, sizeof buf, "%.9g,%.9g\n", v.real(), v.imag());
        f << buf;
    }
}

void write_spectrum_meta(const std::string& path, const RingLawModel& model, double msr) {
    nlohmann::json j;
    j["c"] = model.c;
    j["L"] = model.depth;
    j["inner_radius"] = model.inner_radius();
    j["outer_radius"] = model.outer_radius();
    j["msr"] = msr;
    std::ofstream f(path);
    if (!f) throw Error("cannot write " + path);
    f << j.dump(2) << "\n";
}

} // namespace ringdet
