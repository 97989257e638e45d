#include "windlasso/data/simulate.hpp"

#include <cmath>
#include <string>

#include "windlasso/core/errors.hpp"
#include "windlasso/core/rng.hpp"
#include "windlasso/core/text.hpp"
#include "windlasso/design/design_matrix.hpp"
#include "windlasso/model/compiled.hpp"

namespace windlasso {

namespace {

struct CompiledTruth {
    std::vector<CompiledEquation> mean;
    std::vector<CompiledEquation> variance;
};

CompiledTruth compile_truth(const FittedModel& truth) {
    CompiledTruth out;
    for (const auto& eq : truth.equations) {
        out.mean.push_back(compile_equation(eq, truth.station_count));
        out.variance.push_back(compile_variance_equation(eq, truth.station_count));
    }
    return out;
}

double wrap_degrees(double deg) {
    deg = std::fmod(deg, 360.0);
    return deg < 0.0 ? deg + 360.0 : deg;
}

}  // namespace

double estimate_spectral_radius(const FittedModel& truth) {
    const int n_vars = truth.equation_count();
    if (n_vars == 0) throw InvalidValueError("truth model has no equations");
    const CompiledTruth compiled = compile_truth(truth);
    const SplinePair splines = make_spline_pair(truth.spec);
    const int max_lag = truth.spec.min_history();

    // Lyapunov-style growth rate of the homogeneous recursion, probing three
    // annual phases so slowly varying coefficients are sampled too.
    const int warmup = 100;
    const int measure = 400;
    double worst = 0.0;
    for (int probe = 0; probe < 3; ++probe) {
        const std::int64_t t0 = probe * truth.spec.annual_period / 3;
        Rng rng(0x5eed0000u + static_cast<unsigned>(probe));
        Eigen::MatrixXd history(max_lag + 1, n_vars);
        for (Eigen::Index r = 0; r < history.rows(); ++r) {
            for (int c = 0; c < n_vars; ++c) history(r, c) = rng.normal();
        }
        int head = max_lag;  // row of the newest state in the ring buffer
        double log_growth = 0.0;
        int counted = 0;
        bool vanished = false;
        for (int step = 0; step < warmup + measure; ++step) {
            const std::int64_t t = t0 + step;
            const double* d = splines.diurnal.row(t);
            const double* a = splines.annual.row(t);
            Eigen::VectorXd next(n_vars);
            for (int e = 0; e < n_vars; ++e) {
                double acc = 0.0;
                for (const auto& group : compiled.mean[static_cast<std::size_t>(e)].lag_groups) {
                    const int row = (head - group.lag + (max_lag + 1) * 64) % (max_lag + 1);
                    acc += seasonal_sum(group.terms, d, a) * history(row, group.column);
                }
                next(e) = acc;
            }
            const double norm = next.norm();
            if (norm == 0.0) {
                vanished = true;
                break;
            }
            if (step >= warmup) {
                const double prev_norm = history.row(head).norm();
                if (prev_norm > 0.0) {
                    log_growth += std::log(norm / prev_norm);
                    ++counted;
                }
            }
            head = (head + 1) % (max_lag + 1);
            history.row(head) = next.transpose();
            // Rescale the whole ring buffer when magnitudes drift; ratios
            // between rows are preserved, so the growth estimate is unaffected.
            const double scale = norm;
            if (scale > 1e100 || scale < 1e-100) {
                history /= scale;
            }
        }
        if (vanished) continue;
        if (counted > 0) worst = std::max(worst, std::exp(log_growth / counted));
    }
    return worst;
}

Panel simulate_panel(const FittedModel& truth, std::uint64_t seed,
                     const SimulationOptions& options) {
    truth.spec.validate();
    const int M = truth.station_count;
    const int n_vars = M * kVarKinds;
    if (truth.equation_count() != n_vars) {
        throw InvalidValueError("truth model must hold one equation per panel column");
    }
    if (options.length < 1) throw InvalidValueError("simulation length must be >= 1");
    if (options.burn_in < 0) throw InvalidValueError("burn-in must be >= 0");

    const double radius = estimate_spectral_radius(truth);
    if (radius >= 1.0) {
        throw StabilityError("mean recursion is unstable (estimated spectral radius " +
                                 format_double(radius) + ")",
                             radius);
    }

    const CompiledTruth compiled = compile_truth(truth);
    const SplinePair splines = make_spline_pair(truth.spec);
    const std::int64_t total = options.burn_in + options.length;
    const std::int64_t offset = options.burn_in;  // panel row r sits at recursion step r + offset

    Eigen::MatrixXd values(total, n_vars);
    Eigen::MatrixXd residuals = Eigen::MatrixXd::Zero(total, n_vars);
    Eigen::MatrixXd azimuth(total, M);
    std::vector<double> angle(static_cast<std::size_t>(M), 0.0);

    Rng rng(seed);
    for (int m = 0; m < M; ++m) angle[static_cast<std::size_t>(m)] = 360.0 * rng.uniform01();

    for (std::int64_t t = 0; t < total; ++t) {
        // Basis phase is aligned with the kept panel rows, not the burn-in.
        const std::int64_t phase = t - offset;
        const double* d = splines.diurnal.row(phase);
        const double* a = splines.annual.row(phase);
        for (int e = 0; e < n_vars; ++e) {
            const auto& var_eq = compiled.variance[static_cast<std::size_t>(e)];
            double sigma = var_eq.intercept + seasonal_sum(var_eq.seasonal_level, d, a);
            for (const auto& group : var_eq.pos_shock_groups) {
                if (t - group.lag < 0) continue;
                const double eps = residuals(t - group.lag, group.column);
                if (eps > 0.0) sigma += seasonal_sum(group.terms, d, a) * eps;
            }
            for (const auto& group : var_eq.neg_shock_groups) {
                if (t - group.lag < 0) continue;
                const double eps = residuals(t - group.lag, group.column);
                if (eps <= 0.0) sigma += seasonal_sum(group.terms, d, a) * eps;
            }
            const double floor = var_eq.sigma_floor > 0.0 ? var_eq.sigma_floor : 1e-8;
            sigma = std::max(sigma, floor);

            const auto& mean_eq = compiled.mean[static_cast<std::size_t>(e)];
            double mean = mean_eq.intercept + seasonal_sum(mean_eq.seasonal_level, d, a);
            for (const auto& group : mean_eq.lag_groups) {
                if (t - group.lag < 0) continue;
                mean += seasonal_sum(group.terms, d, a) * values(t - group.lag, group.column);
            }

            const double eps = sigma * rng.normal();
            residuals(t, e) = eps;
            values(t, e) = mean + eps;
        }
        for (int m = 0; m < M; ++m) {
            angle[static_cast<std::size_t>(m)] = wrap_degrees(
                angle[static_cast<std::size_t>(m)] + options.angle_step_sd_deg * rng.normal());
            azimuth(t, m) = angle[static_cast<std::size_t>(m)];
            if (options.azimuth_angle_walk) {
                const auto [east_west, north_south] = decompose_azimuth(azimuth(t, m));
                values(t, column_of({VarKind::SinAz, m}, M)) = east_west;
                values(t, column_of({VarKind::CosAz, m}, M)) = north_south;
            }
        }
    }

    Panel panel;
    panel.stations = options.stations;
    if (panel.stations.empty()) {
        for (int m = 1; m <= M; ++m) panel.stations.push_back("station_" + std::to_string(m));
    }
    if (static_cast<int>(panel.stations.size()) != M) {
        throw InvalidValueError("station name list does not match the truth model");
    }
    panel.start_epoch = options.start_epoch;
    panel.step_seconds = options.step_seconds;
    panel.values = values.bottomRows(options.length);
    if (options.azimuth_angle_walk) {
        panel.azimuth_deg = azimuth.bottomRows(options.length);
    }
    return panel;
}

}  // namespace windlasso
