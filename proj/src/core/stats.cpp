#include "windlasso/core/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "windlasso/core/errors.hpp"

namespace windlasso {

std::vector<double> acf(std::span<const double> x, int nlags) {
    const auto n = static_cast<std::ptrdiff_t>(x.size());
    if (n < 2) throw InvalidValueError("acf needs at least two observations");
    nlags = std::min<int>(nlags, static_cast<int>(n - 1));

    double m = 0.0;
    for (double v : x) m += v;
    m /= static_cast<double>(n);

    double c0 = 0.0;
    for (double v : x) c0 += (v - m) * (v - m);
    c0 /= static_cast<double>(n);

    std::vector<double> rho(static_cast<std::size_t>(nlags), 0.0);
    if (c0 <= 0.0) return rho;  // constant series: all correlations zero
    for (int k = 1; k <= nlags; ++k) {
        double ck = 0.0;
        for (std::ptrdiff_t t = 0; t + k < n; ++t) {
            ck += (x[static_cast<std::size_t>(t)] - m) * (x[static_cast<std::size_t>(t + k)] - m);
        }
        rho[static_cast<std::size_t>(k - 1)] = ck / static_cast<double>(n) / c0;
    }
    return rho;
}

LjungBoxResult ljung_box(std::span<const double> x, int lags) {
    const auto n = static_cast<double>(x.size());
    if (lags < 1) throw InvalidValueError("ljung_box needs lags >= 1");
    if (x.size() <= static_cast<std::size_t>(lags)) {
        throw InvalidValueError("ljung_box: series shorter than lag count");
    }
    const auto rho = acf(x, lags);
    double q = 0.0;
    for (int k = 1; k <= lags; ++k) {
        const double r = rho[static_cast<std::size_t>(k - 1)];
        q += r * r / (n - k);
    }
    q *= n * (n + 2.0);
    return {q, chi_square_sf(q, static_cast<double>(lags)), lags};
}

double acf_spike_fraction(std::span<const double> x, int nlags) {
    const auto rho = acf(x, nlags);
    const double band = 1.96 / std::sqrt(static_cast<double>(x.size()));
    std::size_t outside = 0;
    for (double r : rho) {
        if (std::abs(r) > band) ++outside;
    }
    return static_cast<double>(outside) / static_cast<double>(rho.size());
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

namespace {

// Series expansion of P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x) (modified Lentz), valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw InvalidValueError("gamma_p domain: a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double chi_square_sf(double x, double k) {
    if (x <= 0.0) return 1.0;
    return std::clamp(1.0 - gamma_p(k / 2.0, x / 2.0), 0.0, 1.0);
}

ChiSquareTest chi_square_uniformity(std::span<const long> counts) {
    if (counts.size() < 2) throw InvalidValueError("uniformity test needs >= 2 bins");
    long total = 0;
    for (long c : counts) total += c;
    if (total <= 0) throw InvalidValueError("uniformity test needs observations");
    const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
    double stat = 0.0;
    for (long c : counts) {
        const double diff = static_cast<double>(c) - expected;
        stat += diff * diff / expected;
    }
    const int dof = static_cast<int>(counts.size()) - 1;
    return {stat, chi_square_sf(stat, static_cast<double>(dof)), dof};
}

double mean(std::span<const double> x) {
    if (x.empty()) throw InvalidValueError("mean of empty range");
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

double sample_sd(std::span<const double> x) {
    if (x.size() < 2) return 0.0;
    const double m = mean(x);
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return std::sqrt(s / static_cast<double>(x.size() - 1));
}

double correlation(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw InvalidValueError("correlation needs two equal-length series");
    }
    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace windlasso
