#pragma once

#include <cstddef>
#include <span>

namespace ringdet {

// Student-t CDF with `dof` degrees of freedom, evaluated through the
// regularized incomplete beta function.
double t_cdf(double x, std::size_t dof);

double regularized_incomplete_beta(double a, double b, double x);

struct EtaStat {
    double eta_hat;    // |eta_j - mean| / sigma over the history
    double confidence; // two-sided t coverage with T-1 dof
};

// Standardized anomaly indicator for the newest value etas.back() against
// the T-step history it closes (population sigma). Degenerate histories
// (sigma < 1e-15) map to confidence 0 when the deviation is also below
// 1e-15 and to confidence 1 otherwise.
EtaStat eta_stat(std::span<const double> etas);

} // namespace ringdet
