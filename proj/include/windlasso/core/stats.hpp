#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace windlasso {

/// Sample autocorrelations rho_1..rho_nlags (biased 1/n normalization).
std::vector<double> acf(std::span<const double> x, int nlags);

struct LjungBoxResult {
    double statistic;
    double p_value;
    int lags;
};

/// Portmanteau whiteness test; Q ~ chi-square(lags) under independence.
LjungBoxResult ljung_box(std::span<const double> x, int lags);

/// Fraction of the first `nlags` autocorrelations outside +-1.96/sqrt(n).
double acf_spike_fraction(std::span<const double> x, int nlags);

// --- distribution helpers --------------------------------------------------

double normal_cdf(double z);

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// Upper tail of the chi-square distribution with k degrees of freedom.
double chi_square_sf(double x, double k);

struct ChiSquareTest {
    double statistic;
    double p_value;
    int dof;
};

/// Pearson goodness-of-fit of observed counts against equal expected shares.
ChiSquareTest chi_square_uniformity(std::span<const long> counts);

double mean(std::span<const double> x);
double sample_sd(std::span<const double> x);

/// Pearson correlation; 0 when either side is constant.
double correlation(std::span<const double> x, std::span<const double> y);

}  // namespace windlasso
