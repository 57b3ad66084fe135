#include "ringdet/stats.hpp"

#include <cmath>
#include <limits>

#include "ringdet/errors.hpp"

namespace ringdet {

namespace {

// Lentz's continued fraction for the incomplete beta (Numerical Recipes
// betacf form).
double beta_cf(double a, double b, double x) {
    constexpr int max_iter = 500;
    constexpr double eps = 1e-16;
    constexpr double fpmin = 1e-300;

    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) return h;
    }
    throw ConvergenceError("incomplete beta continued fraction did not converge");
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double lbt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                       a * std::log(x) + b * std::log(1.0 - x);
    const double bt = std::exp(lbt);
    if (x < (a + 1.0) / (a + b + 2.0)) return bt * beta_cf(a, b, x) / a;
    return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

double t_cdf(double x, std::size_t dof) {
    if (dof < 1) throw ConfigError("t_cdf requires dof >= 1");
    if (x == 0.0) return 0.5;
    const double v = static_cast<double>(dof);
    const double ib = regularized_incomplete_beta(v / 2.0, 0.5, v / (v + x * x));
    return x > 0.0 ? 1.0 - 0.5 * ib : 0.5 * ib;
}

EtaStat eta_stat(std::span<const double> etas) {
    if (etas.size() < 2) throw ConfigError("eta_stat needs at least two values");
    const std::size_t t = etas.size();
    double mu = 0.0;
    for (double e : etas) mu += e;
    mu /= static_cast<double>(t);
    double var = 0.0;
    for (double e : etas) var += (e - mu) * (e - mu);
    const double sigma = std::sqrt(var / static_cast<double>(t));

    const double dev = std::abs(etas.back() - mu);
    if (sigma < 1e-15) {
        if (dev < 1e-15) return {0.0, 0.0};
        return {std::numeric_limits<double>::infinity(), 1.0};
    }
    const double eta_hat = dev / sigma;
    const double f = t_cdf(eta_hat, t - 1);
    return {eta_hat, 2.0 * f - 1.0};
}

} // namespace ringdet
